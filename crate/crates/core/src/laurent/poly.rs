use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly;
use crate::error::{Error, Result};

/// An element of Q[t, t^-1].
///
/// Stored densely as `t^shift * (c_0 + c_1 t + ... + c_d t^d)` with
/// `c_0 != 0` and `c_d != 0`; the zero polynomial has no coefficients and
/// shift 0. The representation is therefore unique.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    shift: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { shift: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        Self::from_dense(exp, vec![c])
    }

    /// Builds `t^shift * sum coeffs[i] t^i`, trimming zeros at both ends.
    pub fn from_dense(shift: i64, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { shift: shift + lead as i64, coeffs }
    }

    /// Integer coefficients, lowest exponent first.
    pub fn from_ints(shift: i64, coeffs: &[i64]) -> Self {
        Self::from_dense(
            shift,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub(crate) fn from_zpoly(shift: i64, p: &[BigInt]) -> Self {
        Self::from_dense(shift, p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of the ring are the nonzero monomials `q t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.shift + self.coeffs.len() as i64 - 1)
    }

    /// Euclidean norm: distance between the extreme exponents.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.shift + i as i64, c))
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let idx = exp - self.shift;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// `p(t) -> p(t^-1)`.
    pub fn involute(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { shift: -self.max_exp().unwrap(), coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { shift: self.shift, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn shift_by(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { shift: self.shift + k, coeffs: self.coeffs.clone() }
    }

    /// Multiplicative inverse, defined only for units.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.is_unit()
            .then(|| Self::monomial(self.coeffs[0].recip(), -self.shift))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a nonzero rational (or at zero when no negative powers).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        let s = self.shift;
        if s >= 0 {
            inner * num_traits::pow(x.clone(), s as usize)
        } else {
            inner / num_traits::pow(x.clone(), (-s) as usize)
        }
    }

    /// Euclidean division: `self = q * d + r` with `span(r) < span(d)` or `r = 0`.
    pub fn div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!d.is_zero(), "division by zero in Laurent ring");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let dl = d.coeffs.len();
        if self.coeffs.len() < dl {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let lead_inv = d.coeffs.last().unwrap().recip();
        let mut quot = vec![BigRational::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        (
            Self::from_dense(self.shift - d.shift, quot),
            Self::from_dense(self.shift, rem),
        )
    }

    /// `Some(q)` with `self = q * d` when `d` divides `self` in the ring.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Canonical primitive representative of the similarity class.
    pub fn normalize(&self) -> Result<PrimitiveRep> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        Ok(PrimitiveRep { coeffs: zpoly::primitive_part(&ints) })
    }

    /// Product with a unit chosen so the result is the primitive representative.
    pub fn associate_unit(&self) -> Option<LaurentPoly> {
        let rep = self.normalize().ok()?;
        let lead = self.leading_coeff()?;
        let rep_lead = BigRational::from_integer(rep.coeffs.last().unwrap().clone());
        Some(LaurentPoly::monomial(rep_lead / lead, -self.shift))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<&PrimitiveRep> for LaurentPoly {
    fn from(p: &PrimitiveRep) -> Self {
        LaurentPoly::from_zpoly(0, &p.coeffs)
    }
}

impl From<PrimitiveRep> for LaurentPoly {
    fn from(p: PrimitiveRep) -> Self {
        LaurentPoly::from(&p)
    }
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.shift.min(b.shift);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.shift - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.shift - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(lo, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        combine(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        combine(self, rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        LaurentPoly::from_dense(self.shift + rhs.shift, coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

/// Primitive integer representative of a similarity class of nonzero
/// elements: lowest exponent 0, content 1, positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimitiveRep {
    coeffs: Vec<BigInt>,
}

impl PrimitiveRep {
    pub fn one() -> Self {
        PrimitiveRep { coeffs: vec![BigInt::one()] }
    }

    /// `t - 1`, the class of the trivial knot module.
    pub fn t_minus_one() -> Self {
        PrimitiveRep { coeffs: vec![BigInt::from(-1), BigInt::one()] }
    }

    /// Normalizes an arbitrary nonzero integer coefficient vector (lowest exponent first).
    pub fn from_coeffs<I, C>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let v: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        LaurentPoly::from_zpoly(0, &v).normalize()
    }

    pub(crate) fn from_zpoly_unchecked(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(!coeffs.is_empty());
        PrimitiveRep { coeffs }
    }

    pub(crate) fn from_zpoly(p: &[BigInt]) -> Self {
        LaurentPoly::from_zpoly(0, p)
            .normalize()
            .expect("nonzero integer polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        zpoly::is_one(&self.coeffs)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from(self)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &PrimitiveRep) -> PrimitiveRep {
        // Gauss: products of primitives are primitive.
        PrimitiveRep { coeffs: zpoly::mul(&self.coeffs, &other.coeffs) }
    }

    pub fn pow(&self, e: u32) -> PrimitiveRep {
        PrimitiveRep { coeffs: zpoly::pow(&self.coeffs, e) }
    }

    /// Quotient when `other` divides `self` up to units.
    pub fn div_exact(&self, other: &PrimitiveRep) -> Option<PrimitiveRep> {
        zpoly::div_exact(&self.coeffs, &other.coeffs).map(|q| PrimitiveRep { coeffs: q })
    }

    pub fn divides(&self, other: &PrimitiveRep) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn gcd(&self, other: &PrimitiveRep) -> PrimitiveRep {
        PrimitiveRep { coeffs: zpoly::gcd(&self.coeffs, &other.coeffs) }
    }

    pub fn lcm(&self, other: &PrimitiveRep) -> PrimitiveRep {
        self.mul(other)
            .div_exact(&self.gcd(other))
            .expect("gcd divides the product")
    }

    pub fn involute(&self) -> PrimitiveRep {
        let mut c = self.coeffs.clone();
        c.reverse();
        PrimitiveRep::from_zpoly(&c)
    }

    /// Largest `m` with `self^m | other`; `self` must be a nonunit.
    pub fn multiplicity_in(&self, other: &PrimitiveRep) -> u32 {
        assert!(!self.is_one(), "multiplicity of a unit is unbounded");
        let mut m = 0;
        let mut rest = other.clone();
        while let Some(q) = rest.div_exact(self) {
            rest = q;
            m += 1;
        }
        m
    }

    pub fn product<'a, I>(items: I) -> PrimitiveRep
    where
        I: IntoIterator<Item = &'a PrimitiveRep>,
    {
        items
            .into_iter()
            .fold(PrimitiveRep::one(), |acc, p| acc.mul(p))
    }
}

impl Ord for PrimitiveRep {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for PrimitiveRep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimitiveRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, BigRational::from_integer(c.clone()))),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i64, BigRational)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        write_terms(f, terms.into_iter().rev())
    }
}

fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (i64, BigRational)>,
{
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let var = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        if var.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&var)?;
        } else {
            write!(f, "{mag}*{var}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
