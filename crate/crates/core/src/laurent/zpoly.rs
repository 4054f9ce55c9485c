//! Dense univariate polynomials over the integers, lowest degree first.
//!
//! These are the work-horse for primitive representatives: every helper
//! keeps vectors trimmed so that the last entry is nonzero and the zero
//! polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x + y
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Content 1 and positive leading coefficient.
pub(crate) fn primitive_part(a: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

pub(crate) fn derivative(a: &[BigInt]) -> ZPoly {
    let mut out: ZPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Exact division over Z; `None` when `b` does not divide `a` in Z[t].
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let lb = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Pseudo-remainder of `a` by `b`: lc(b)^(deg a - deg b + 1) * a mod b.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while rem.len() > db {
        let lr = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        rem = rem.iter().map(|c| c * &lb).collect();
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &lr * c;
        }
        trim(&mut rem);
    }
    rem
}

/// Primitive gcd over Z[t] (primitive remainder sequence).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    primitive_part(&x)
}

pub(crate) fn is_one(a: &[BigInt]) -> bool {
    a.len() == 1 && a[0].is_one()
}

pub(crate) fn pow(a: &[BigInt], e: u32) -> ZPoly {
    let mut out = vec![BigInt::one()];
    for _ in 0..e {
        out = mul(&out, a);
    }
    out
}

/// Sum of squares of the coefficients.
pub(crate) fn norm_sq(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c * c).sum()
}
