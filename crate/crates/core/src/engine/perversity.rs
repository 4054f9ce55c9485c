use std::fmt;

use crate::error::{Error, Result};

/// Values `p̄(2), …, p̄(D)` with `p̄(2) ∈ {0, 1}` and
/// `p̄(m) ≤ p̄(m+1) ≤ p̄(m) + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perversity {
    values: Vec<usize>,
}

impl Perversity {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let Some(&first) = values.first() else {
            return Err(Error::InvalidPerversity("no values given".into()));
        };
        if first > 1 {
            return Err(Error::InvalidPerversity(format!("p(2) = {first}, must be 0 or 1")));
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] || w[1] > w[0] + 1 {
                return Err(Error::InvalidPerversity(format!(
                    "p({}) = {} and p({}) = {} break the growth condition",
                    i + 2,
                    w[0],
                    i + 3,
                    w[1]
                )));
            }
        }
        Ok(Perversity { values })
    }

    /// Builds the table on codimensions `2..=max_codim` from a formula.
    pub fn from_fn(max_codim: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        if max_codim < 2 {
            return Err(Error::InvalidPerversity("maximum codimension below 2".into()));
        }
        Self::new((2..=max_codim).map(f).collect())
    }

    pub fn zero(max_codim: usize) -> Self {
        Self::from_fn(max_codim, |_| 0).expect("zero perversity is valid")
    }

    /// `t̄(k) = k - 2`.
    pub fn top(max_codim: usize) -> Self {
        Self::from_fn(max_codim, |k| k - 2).expect("top perversity is valid")
    }

    /// `m̄(k) = ⌊(k - 2)/2⌋`.
    pub fn lower_middle(max_codim: usize) -> Self {
        Self::from_fn(max_codim, |k| (k - 2) / 2).expect("lower middle perversity is valid")
    }

    /// `n̄(k) = ⌈(k - 2)/2⌉`.
    pub fn upper_middle(max_codim: usize) -> Self {
        Self::from_fn(max_codim, |k| (k - 1) / 2).expect("upper middle perversity is valid")
    }

    pub fn max_codim(&self) -> usize {
        self.values.len() + 1
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, codim: usize) -> Result<usize> {
        if codim < 2 || codim > self.max_codim() {
            return Err(Error::PerversityOutOfRange { codim, max: self.max_codim() });
        }
        Ok(self.values[codim - 2])
    }

    pub fn is_traditional(&self) -> bool {
        self.values[0] == 0
    }

    pub fn is_super(&self) -> bool {
        self.values[0] == 1
    }

    /// `q̄(k) = k - 1 - p̄(k)`.
    pub fn superdual(&self) -> Perversity {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &p)| i + 1 - p)
            .collect();
        Perversity::new(values).expect("dual of a valid perversity is valid")
    }
}

pub fn superdual(p: &Perversity) -> Perversity {
    p.superdual()
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
