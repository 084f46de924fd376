//! Factorization of univariate polynomials over F_p.
//!
//! Squarefree decomposition (char-p aware), distinct-degree splitting by
//! Frobenius powers, and Cantor-Zassenhaus equal-degree splitting (the trace
//! map for p = 2). Sized for the desk scale this crate needs: degrees <= 8
//! and p below a million or so. Random splitting polynomials come from a
//! fixed-seed generator so factorizations are reproducible.

use super::{IntPoly, PolyError};
use crate::arith::is_prime;
use num_bigint::BigInt;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Dense polynomial over F_p, coefficients in [0, p), ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl ModPoly {
    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ModPoly { p, coeffs: vec![0, 1] }
    }

    pub fn from_coeffs(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = ModPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.normalize();
        out
    }

    /// Reduce an integer polynomial mod p.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                r.to_u64().unwrap()
            })
            .collect();
        ModPoly::from_coeffs(p, coeffs)
    }

    /// Lift back to Z[x] with coefficients in [0, p).
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn add(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::from_coeffs(
            self.p,
            (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect(),
        )
    }

    fn sub(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::from_coeffs(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
                .collect(),
        )
    }

    fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::from_coeffs(self.p, out)
    }

    fn scale(&self, c: u64) -> ModPoly {
        ModPoly::from_coeffs(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn make_monic(&self) -> ModPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(inv_mod(lc, self.p)),
        }
    }

    fn div_rem(&self, divisor: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!divisor.is_zero());
        let d = divisor.coeffs.len() - 1;
        let lc_inv = inv_mod(*divisor.coeffs.last().unwrap(), self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let q = mul_mod(*rem.last().unwrap(), lc_inv, self.p);
            let shift = rem.len() - 1 - d;
            if q != 0 {
                quot[shift] = q;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(c, q, self.p);
                    rem[shift + i] = (rem[shift + i] + self.p - sub) % self.p;
                }
            }
            rem.pop();
        }
        (
            ModPoly::from_coeffs(self.p, quot),
            ModPoly::from_coeffs(self.p, rem),
        )
    }

    fn div_exact(&self, divisor: &ModPoly) -> ModPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::from_coeffs(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    fn pow_mod(&self, e: u64, modulus: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let mut base = self.div_rem(modulus).1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            e >>= 1;
        }
        acc
    }

    fn pow_big_mod(&self, e: &BigUint, modulus: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let mut base = self.div_rem(modulus).1;
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            if i + 1 < bits {
                base = base.mul(&base).div_rem(modulus).1;
            }
        }
        acc
    }

    /// p-th root of a polynomial with zero derivative: coefficients sit at
    /// indices divisible by p, and Frobenius is the identity on F_p.
    fn pth_root(&self) -> ModPoly {
        let p = self.p as usize;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| i % p == 0)
            .map(|(_, &c)| c)
            .collect();
        ModPoly::from_coeffs(self.p, coeffs)
    }
}

/// Deterministic splitting-polynomial source (splitmix-style).
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn poly(&mut self, p: u64, deg_below: usize) -> ModPoly {
        let coeffs = (0..deg_below).map(|_| self.next() % p).collect();
        ModPoly::from_coeffs(p, coeffs)
    }
}

fn squarefree_decomposition(u: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = u.modulus();
    let mut out = Vec::new();
    if u.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let du = u.derivative();
    if du.is_zero() {
        for (g, m) in squarefree_decomposition(&u.pth_root()) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = u.gcd(&du);
    let mut w = u.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree().map_or(false, |d| d > 0) {
            out.push((z, i));
        }
        c = c.div_exact(&y);
        w = y;
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// (product of all irreducible factors of degree d, d) for squarefree monic g.
fn distinct_degree(g: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = g.modulus();
    let mut out = Vec::new();
    let mut rem = g.clone();
    let mut w = ModPoly::x(p).div_rem(&rem).1;
    let mut d = 0usize;
    while rem.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if 2 * d > rem.degree().unwrap() {
            let deg = rem.degree().unwrap();
            out.push((rem, deg));
            break;
        }
        w = w.pow_mod(p, &rem);
        let h = w.sub(&ModPoly::x(p)).gcd(&rem);
        if h.degree().map_or(false, |deg| deg > 0) {
            rem = rem.div_exact(&h);
            w = w.div_rem(&rem).1;
            out.push((h, d));
        }
    }
    out
}

/// Cantor-Zassenhaus split of a monic squarefree product of degree-d
/// irreducibles into the irreducibles themselves.
fn equal_degree(h: &ModPoly, d: usize, rng: &mut SplitMix) -> Vec<ModPoly> {
    let p = h.modulus();
    let deg = h.degree().unwrap();
    if deg == d {
        return vec![h.clone()];
    }
    loop {
        let a = rng.poly(p, deg.max(2));
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        let b = if p == 2 {
            // Trace map over F_2: a + a^2 + a^4 + ... + a^(2^(d-1)).
            let mut acc = a.div_rem(h).1;
            let mut t = acc.clone();
            for _ in 1..d {
                t = t.pow_mod(2, h);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let r = a.pow_big_mod(&e, h);
            r.sub(&ModPoly::one(p))
        };
        let g = b.gcd(h);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < deg {
                let mut left = equal_degree(&g, d, rng);
                let rest = h.div_exact(&g);
                left.extend(equal_degree(&rest, d, rng));
                return left;
            }
        }
    }
}

/// Factor f mod p into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients). The unit lc(f) mod p is dropped, so the factors
/// multiply back to the monic normalization of f.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(IntPoly, u32)>, PolyError> {
    if !is_prime(p) {
        return Err(PolyError::NotPrime(p));
    }
    let reduced = ModPoly::from_int_poly(f, p);
    match (f.degree(), reduced.degree()) {
        (None, _) => return Err(PolyError::ConstantPolynomial),
        (Some(df), Some(dr)) if df == dr => {}
        _ => return Err(PolyError::LeadingCoeffVanishes(p)),
    }
    let monic = reduced.make_monic();
    let mut rng = SplitMix(0x5a1e_3f00 ^ p);
    let mut out: Vec<(IntPoly, u32)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&monic) {
        for (h, d) in distinct_degree(&g) {
            for irred in equal_degree(&h, d, &mut rng) {
                out.push((irred.to_int_poly(), mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(out)
}
