//! Polynomials over a small prime field F_p, lowest degree first.

use num_bigint::BigUint;
use num_traits::One;

pub(crate) type PPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31));
        Field { p }
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mulc(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.powu(a, self.p - 2)
    }

    fn powu(self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulc(r, b);
            }
            b = self.mulc(b, b);
            e >>= 1;
        }
        r
    }

    pub fn trim(self, a: &mut PPoly) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn sub_poly(self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        let mut out: PPoly = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn mul_poly(self, a: &[u64], b: &[u64]) -> PPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(&mut out);
        out
    }

    pub fn scale(self, a: &[u64], c: u64) -> PPoly {
        let mut out: PPoly = a.iter().map(|&x| self.mulc(x, c)).collect();
        self.trim(&mut out);
        out
    }

    pub fn monic(self, a: &[u64]) -> PPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn div_rem(self, a: &[u64], b: &[u64]) -> (PPoly, PPoly) {
        assert!(!b.is_empty(), "division by zero mod p");
        let mut rem = a.to_vec();
        self.trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let inv = self.inv(*b.last().unwrap());
        let mut quot = vec![0u64; rem.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + b.len() - 1];
            if top == 0 {
                continue;
            }
            let q = self.mulc(top, inv);
            for (j, &c) in b.iter().enumerate() {
                rem[k + j] = self.sub(rem[k + j], self.mulc(q, c));
            }
            quot[k] = q;
        }
        self.trim(&mut rem);
        self.trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(self, a: &[u64], b: &[u64]) -> PPoly {
        self.div_rem(a, b).1
    }

    pub fn gcd(self, a: &[u64], b: &[u64]) -> PPoly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        self.trim(&mut x);
        self.trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(self, a: &[u64], b: &[u64]) -> (PPoly, PPoly, PPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        self.trim(&mut r0);
        self.trim(&mut r1);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = self.inv(*r0.last().expect("gcd of zeros"));
        (self.scale(&r0, l), self.scale(&s0, l), self.scale(&t0, l))
    }

    pub fn derivative(self, a: &[u64]) -> PPoly {
        let mut out: PPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulc(c, i as u64 % self.p))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn pow_mod(self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> PPoly {
        let mut result = vec![1u64];
        let mut b = self.rem(base, modulus);
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.rem(&self.mul_poly(&result, &b), modulus);
            }
            if i + 1 < bits {
                b = self.rem(&self.mul_poly(&b, &b), modulus);
            }
        }
        result
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(self, f: &[u64]) -> Vec<(PPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                return out;
            }
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&rest, &self.sub_poly(&h, &x));
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor-Zassenhaus split of a product of distinct degree-`d` irreducibles.
    fn equal_degree(self, f: &[u64], d: usize, rng: &mut XorShift) -> Vec<PPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let mut a: PPoly = (0..n).map(|_| rng.next() % self.p).collect();
            self.trim(&mut a);
            if a.len() < 2 {
                continue;
            }
            let mut g = self.gcd(f, &a);
            if g.len() == 1 {
                let b = self.pow_mod(&a, &e, f);
                g = self.gcd(f, &self.sub_poly(&b, &[1]));
            }
            if g.len() > 1 && g.len() < f.len() {
                let other = self.div_rem(f, &g).0;
                let mut parts = self.equal_degree(&g, d, rng);
                parts.extend(self.equal_degree(&self.monic(&other), d, rng));
                return parts;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree(self, f: &[u64]) -> Vec<PPoly> {
        let mut rng = XorShift::new(0x9E37_79B9_7F4A_7C15 ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, &mut rng));
        }
        out.sort();
        out
    }

    pub fn is_squarefree(self, f: &[u64]) -> bool {
        let df = self.derivative(f);
        !df.is_empty() && self.gcd(f, &df).len() == 1
    }
}

/// Fixed-seed generator so factorizations are reproducible run to run.
pub(crate) struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

pub(crate) fn reduce(f: &[num_bigint::BigInt], p: u64) -> PPoly {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let pb = num_bigint::BigInt::from(p);
    let mut out: PPoly = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}
