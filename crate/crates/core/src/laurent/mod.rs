//! The Laurent ring Q[t, t^-1]: exact arithmetic, canonical primitive
//! representatives, factorization and similarity-class predicates.

mod factor;
mod modp;
mod parse;
mod poly;
mod zpoly;

pub use factor::{
    factor, factor_primitive, factor_with_cap, is_irreducible, multiplicity, Factor,
    DEFAULT_DEGREE_CAP,
};
pub use parse::parse_laurent;
pub use poly::{LaurentPoly, PrimitiveRep};

use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Primitive representative of the similarity class of a nonzero element.
pub fn normalize(p: &LaurentPoly) -> Result<PrimitiveRep> {
    p.normalize()
}

/// `p = u q` for a unit `u`. Zero is similar only to itself.
pub fn similar(p: &LaurentPoly, q: &LaurentPoly) -> bool {
    match (p.normalize(), q.normalize()) {
        (Ok(a), Ok(b)) => a == b,
        (Err(_), Err(_)) => true,
        _ => false,
    }
}

pub fn involute(p: &LaurentPoly) -> LaurentPoly {
    p.involute()
}

/// Canonical gcd; `gcd(p, 0)` is the class of `p`.
pub fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<PrimitiveRep> {
    match (p.normalize(), q.normalize()) {
        (Err(_), Err(_)) => Err(Error::BothZero),
        (Ok(a), Err(_)) => Ok(a),
        (Err(_), Ok(b)) => Ok(b),
        (Ok(a), Ok(b)) => Ok(a.gcd(&b)),
    }
}

/// The primitive representative evaluates to ±1 at `t = 1`.
pub fn is_alexander_type(p: &LaurentPoly) -> Result<bool> {
    Ok(p.normalize()?.is_alexander_type())
}

impl PrimitiveRep {
    pub fn is_alexander_type(&self) -> bool {
        self.eval_at_one().abs().is_one()
    }

    /// Canonical representative of `p(t^-1)`.
    pub fn conjugate(&self) -> PrimitiveRep {
        self.involute()
    }

    /// Distinct irreducible factors.
    pub fn prime_support(&self) -> Result<Vec<PrimitiveRep>> {
        Ok(factor_primitive(self, usize::MAX)?
            .into_iter()
            .map(|f| f.prime)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn similarity_examples() {
        assert!(similar(&lp("t - 1"), &lp("1 - t^-1")));
        assert!(!similar(&lp("t - 1"), &lp("t + 1")));
        assert!(similar(&lp("t^2 - t + 1"), &lp("t^-2 - t^-1 + 1")));
        assert!(similar(&lp("0"), &lp("0")));
        assert!(!similar(&lp("0"), &lp("1")));
    }

    #[test]
    fn involution_examples() {
        let a = involute(&lp("t - 1"));
        assert_eq!(a, lp("t^-1 - 1"));
        assert!(similar(&a, &lp("t - 1")));
        let b = involute(&lp("2t - 1"));
        assert_eq!(b, lp("2t^-1 - 1"));
        assert_eq!(b.normalize().unwrap().to_string(), "t - 2");
        assert!(involute(&lp("0")).is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert!(gcd(&lp("t - 1"), &lp("t + 1")).unwrap().is_one());
        let a = lp("t - 1").normalize().unwrap();
        let x = a.mul(&lp("t^2 - t + 1").normalize().unwrap()).to_laurent();
        let y = a.mul(&lp("t + 1").normalize().unwrap()).to_laurent();
        assert_eq!(gcd(&x, &y).unwrap(), a);
        assert_eq!(gcd(&lp("2t^2 - 2"), &lp("0")).unwrap().to_string(), "t^2 - 1");
        assert_eq!(gcd(&lp("0"), &lp("0")), Err(Error::BothZero));
    }

    #[test]
    fn alexander_type_examples() {
        assert!(!is_alexander_type(&lp("t - 1")).unwrap());
        assert!(is_alexander_type(&lp("t^2 - t + 1")).unwrap());
        assert!(!is_alexander_type(&lp("3t - 1")).unwrap());
        assert_eq!(is_alexander_type(&lp("0")), Err(Error::ZeroPolynomial));
    }
}
