//! Exact univariate polynomial arithmetic over Z and Q.
//!
//! [`IntPoly`] stores integer coefficients in ascending degree order; the
//! vector is empty for the zero polynomial and its last entry is nonzero
//! otherwise. [`RatPoly`] is the same over Q and carries the Euclidean
//! machinery (division, gcd) that Z lacks. Resultants and determinants are
//! fraction-free (Bareiss), so every value produced here is exact.

mod modp;
mod sturm;

pub use modp::{factor_mod_p, ModPoly};
pub use sturm::{default_width, SturmChain};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation requires degree >= 1, got a constant polynomial")]
    ConstantPolynomial,
    #[error("operation requires a monic polynomial")]
    NonMonic,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} divides the leading coefficient")]
    LeadingCoeffVanishes(u64),
    #[error("polynomial is not palindromic of even degree")]
    NotPalindromic,
    #[error("invalid polynomial string at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Dense integer polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    /// From ascending i64 coefficients.
    pub fn from_ascending(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// From descending i64 coefficients (the CLI text order).
    pub fn from_descending(coeffs: &[i64]) -> Self {
        let mut v: Vec<i64> = coeffs.to_vec();
        v.reverse();
        IntPoly::from_ascending(&v)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// True for p(x) = x^deg p(1/x), the reciprocal-invariant polynomials.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a monic divisor, staying over Z.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        if !divisor.is_monic() {
            return Err(PolyError::NonMonic);
        }
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - d;
            if !lead.is_zero() {
                quot[shift] = lead.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[shift + i] - c * &lead;
                    rem[shift + i] = v;
                }
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Exact quotient by a monic divisor; None if the division leaves a remainder.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_monic(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Human-readable form in descending degree order.
    fn fmt_human(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let deg = self.coeffs.len() - 1;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            let _ = deg;
        }
        Ok(())
    }

    /// The CLI text format: comma-separated integers in descending degree.
    pub fn to_descending_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse the CLI text format, reporting the byte position of any bad token.
    pub fn parse_descending(s: &str) -> Result<IntPoly, PolyError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0usize;
        for token in s.split(',') {
            let trimmed = token.trim();
            let at = pos + token.len() - token.trim_start().len();
            if trimmed.is_empty() {
                return Err(PolyError::Parse {
                    position: at,
                    message: "empty coefficient".to_string(),
                });
            }
            let c: BigInt = trimmed.parse().map_err(|_| PolyError::Parse {
                position: at,
                message: format!("expected an integer, found {trimmed:?}"),
            })?;
            coeffs.push(c);
            pos += token.len() + 1;
        }
        coeffs.reverse();
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_human(f)
    }
}

/// Dense rational polynomial, ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::from_coeffs(vec![BigRational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn make_monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division; panics only if divisor is zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.coeffs.len() - 1;
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let q = rem.last().unwrap() * &lead_inv;
            let shift = rem.len() - 1 - d;
            if !q.is_zero() {
                quot[shift] = q.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[shift + i] - c * &q;
                    rem[shift + i] = v;
                }
            }
            rem.pop();
        }
        (RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().map_or(true, |d| d == 0) {
            return self.make_monic();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.make_monic()
    }

    /// Back to Z[x] if every coefficient is integral.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPoly::from_coeffs(out))
    }
}

/// Fraction-free determinant of a square integer matrix (Bareiss).
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Resultant Res(f, g) over Z via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (n, m) = match (f.degree(), g.degree()) {
        (Some(n), Some(m)) => (n, m),
        // Res with a zero polynomial is zero unless both sides are constants.
        _ => return BigInt::zero(),
    };
    if n == 0 && m == 0 {
        return BigInt::one();
    }
    if n == 0 {
        return f.coeff(0).pow(m as u32);
    }
    if m == 0 {
        return g.coeff(0).pow(n as u32);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (i, c) in f.coeffs.iter().enumerate() {
            mat[row][row + n - i] = c.clone();
        }
    }
    for row in 0..n {
        for (i, c) in g.coeffs.iter().enumerate() {
            mat[m + row][row + m - i] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Polynomial discriminant: (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant(f: &IntPoly) -> Result<BigInt, PolyError> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PolyError::ConstantPolynomial),
    };
    let res = resultant(f, &f.derivative());
    let lc = f.leading().unwrap();
    let (q, r) = num_integer::Integer::div_rem(&res, lc);
    debug_assert!(r.is_zero(), "Res(f, f') is always divisible by lc(f)");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Power sums p_0..p_k of the roots of a monic polynomial, by Newton's
/// identities. p_0 is the degree.
pub fn newton_power_sums(f: &IntPoly, k: usize) -> Result<Vec<BigInt>, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NonMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    // e_i = (-1)^i * coeff of x^(n-i)
    let e = |i: usize| -> BigInt {
        if i > n {
            return BigInt::zero();
        }
        let c = f.coeff(n - i);
        if i % 2 == 1 {
            -c
        } else {
            c
        }
    };
    let mut p: Vec<BigInt> = vec![BigInt::from(n as i64)];
    for m in 1..=k {
        // p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^m m e_m (last term if m <= n)
        let mut acc = BigInt::zero();
        for i in 1..m.min(n + 1) {
            let term = e(i) * &p[m - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if m <= n {
            let term = e(m) * BigInt::from(m as i64);
            if m % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    Ok(p)
}

/// The monic polynomial whose roots are the squares of the roots of f
/// (f of even degree): writing f(y) = A(y^2) + y B(y^2), this is
/// A(x)^2 - x B(x)^2, which equals Res_y(f(y), x - y^2).
pub fn composed_square(f: &IntPoly) -> Result<IntPoly, PolyError> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PolyError::ConstantPolynomial),
    };
    if n % 2 != 0 {
        return Err(PolyError::NotPalindromic);
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in f.coeffs.iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    let a = IntPoly::from_coeffs(even);
    let b = IntPoly::from_coeffs(odd);
    Ok(a.mul(&a).sub(&IntPoly::x().mul(&b.mul(&b))))
}

/// For palindromic f of even degree 2d, the degree-d trace polynomial g with
/// f(y) = y^d g(y + 1/y). Uses the recursion P_{k+1} = z P_k - P_{k-1} for
/// y^k + y^(-k).
pub fn trace_poly(f: &IntPoly) -> Result<IntPoly, PolyError> {
    let n = match f.degree() {
        Some(n) if n >= 2 && n % 2 == 0 => n,
        _ => return Err(PolyError::NotPalindromic),
    };
    if !f.is_palindromic() {
        return Err(PolyError::NotPalindromic);
    }
    let d = n / 2;
    let z = IntPoly::x();
    let mut p_prev = IntPoly::constant(BigInt::from(2)); // y^0 + y^0
    let mut p_cur = z.clone(); // y + 1/y
    let mut g = IntPoly::constant(f.coeff(d));
    for k in 1..=d {
        g = g.add(&p_cur.scale(&f.coeff(d + k)));
        if k < d {
            let next = z.mul(&p_cur).sub(&p_prev);
            p_prev = p_cur;
            p_cur = next;
        }
    }
    Ok(g)
}
