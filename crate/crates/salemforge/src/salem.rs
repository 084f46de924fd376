//! Salem numbers of degree 2 and 4 as exact objects.
//!
//! A degree-4 Salem number is encoded by the integer pair (a, b) of its
//! minimal polynomial F = x^4 + a x^3 + b x^2 + a x + 1. The Salem property
//! for palindromic quartics is equivalent to F(1) < 0 < F(-1) together with
//! irreducibility, which is decided by the y = x + 1/x reduction (a rational
//! root of y^2 + a y + (b-2) gives a reciprocal-quadratic factorization, and
//! a = 0 with -(b+2) a square gives the x^2 + cx - 1 one). F(1) and F(-1)
//! are cached because every downstream identity consumes them.
//!
//! Square-rootability over Q is witnessed by k^2 = b + 2 - 2a; the exact
//! certificate identity F(x^2) = (x^4 + l x^2 + 1)^2 - rho^2 x^2 (x^2+1)^2
//! with l = 2 + k and rho^2 = 2l - a encodes the factorization g(x)g(-x)
//! without irrational arithmetic.

use crate::arith::{is_square, squarefree_part_int, ArithError};
use crate::polynomials::{
    bareiss_det, composed_square, discriminant, newton_power_sums, IntPoly, PolyError,
};
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SalemError {
    #[error("x^2 - {0}x + 1 needs N >= 3 to have a real root off the unit circle")]
    QuadraticTraceTooSmall(i64),
    #[error("Salem quartic is not square-rootable over Q")]
    NotSquareRootable,
    #[error("{0} is not a positive squarefree integer")]
    NotSquarefree(i64),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Why a pair (a, b) fails to be a Salem quartic. A value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SalemRejection {
    /// F(1) = 2 + 2a + b must be negative.
    FAtOneNonNegative(i64),
    /// F(-1) = 2 - 2a + b must be positive.
    FAtMinusOneNonPositive(i64),
    /// y^2 + a y + (b-2) has a rational root: F splits into reciprocal quadratics.
    ReciprocalQuadraticFactor,
    /// a = 0 and -(b+2) is a perfect square: F = (x^2+cx-1)(x^2-cx-1).
    AntipalindromicFactor,
}

impl fmt::Display for SalemRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SalemRejection::FAtOneNonNegative(v) => {
                write!(f, "not Salem: F(1) = {v} >= 0")
            }
            SalemRejection::FAtMinusOneNonPositive(v) => {
                write!(f, "not Salem: F(-1) = {v} <= 0")
            }
            SalemRejection::ReciprocalQuadraticFactor => {
                write!(f, "not Salem: reducible (rational root of y^2 + ay + b - 2)")
            }
            SalemRejection::AntipalindromicFactor => {
                write!(f, "not Salem: reducible ((x^2 + cx - 1) factorization)")
            }
        }
    }
}

/// Salem number of degree 2: the larger root of x^2 - Nx + 1, N >= 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SalemQuadratic {
    n: i64,
}

impl SalemQuadratic {
    pub fn new(n: i64) -> Result<SalemQuadratic, SalemError> {
        if n < 3 {
            return Err(SalemError::QuadraticTraceTooSmall(n));
        }
        Ok(SalemQuadratic { n })
    }

    pub fn trace(&self) -> i64 {
        self.n
    }

    pub fn minimal_polynomial(&self) -> IntPoly {
        IntPoly::from_descending(&[1, -self.n, 1])
    }

    pub fn f_at_one(&self) -> i64 {
        2 - self.n
    }

    pub fn f_at_minus_one(&self) -> i64 {
        2 + self.n
    }
}

/// Salem number of degree 4 via F = x^4 + a x^3 + b x^2 + a x + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SalemQuartic {
    a: i64,
    b: i64,
    f_at_one: i64,
    f_at_minus_one: i64,
}

fn is_square_i64(n: i64) -> bool {
    n >= 0 && is_square(n as u64)
}

/// Accept (a, b) iff F(1) < 0 < F(-1) and F is irreducible over Q.
pub fn salem_check_deg4(a: i64, b: i64) -> Result<SalemQuartic, SalemRejection> {
    let f1 = 2 + 2 * a + b;
    let fm1 = 2 - 2 * a + b;
    if f1 >= 0 {
        return Err(SalemRejection::FAtOneNonNegative(f1));
    }
    if fm1 <= 0 {
        return Err(SalemRejection::FAtMinusOneNonPositive(fm1));
    }
    // Rational y-root <=> two reciprocal quadratic factors.
    if is_square_i64(a * a - 4 * (b - 2)) {
        return Err(SalemRejection::ReciprocalQuadraticFactor);
    }
    // The only factorization not seen by the y-reduction requires a = 0
    // (unreachable once the sign tests pass, but the contract names it).
    if a == 0 && is_square_i64(-(b + 2)) {
        return Err(SalemRejection::AntipalindromicFactor);
    }
    Ok(SalemQuartic {
        a,
        b,
        f_at_one: f1,
        f_at_minus_one: fm1,
    })
}

/// An imaginary quadratic integer given by trace, norm and discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticInteger {
    pub trace: i64,
    pub norm: i64,
    pub disc: i64,
}

/// Witness that a Salem quartic is square-rootable over Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtWitness {
    /// k >= 0 with k^2 = b + 2 - 2a.
    pub k: i64,
    /// l = 2 + k (canonical sign: both 2 +- k work, differing by x -> -x).
    pub l: i64,
    /// rho^2 = 2l - a, the square of the odd-coefficient scale of g.
    pub rho_sq: i64,
    /// Delta = (l-2)^2 + 4a = F(1) < 0.
    pub delta: i64,
}

impl SalemQuartic {
    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn f_at_one(&self) -> i64 {
        self.f_at_one
    }

    pub fn f_at_minus_one(&self) -> i64 {
        self.f_at_minus_one
    }

    pub fn minimal_polynomial(&self) -> IntPoly {
        IntPoly::from_descending(&[1, self.a, self.b, self.a, 1])
    }

    /// tau = lambda e^{i theta} + lambda^{-1} e^{-i theta}: trace b - 2,
    /// norm a^2 - 2b, discriminant (b+2)^2 - 4a^2 = F(1) F(-1) < 0.
    pub fn tau(&self) -> QuadraticInteger {
        let disc = (self.b + 2) * (self.b + 2) - 4 * self.a * self.a;
        debug_assert_eq!(disc, self.f_at_one * self.f_at_minus_one);
        debug_assert!(disc < 0);
        QuadraticInteger {
            trace: self.b - 2,
            norm: self.a * self.a - 2 * self.b,
            disc,
        }
    }

    /// Square-rootability witness, or None when b + 2 - 2a is not a square.
    pub fn sqrt_witness(&self) -> Option<SqrtWitness> {
        let ksq = self.b + 2 - 2 * self.a;
        if !is_square_i64(ksq) {
            return None;
        }
        let k = (ksq as u64).sqrt() as i64;
        let l = 2 + k;
        let w = SqrtWitness {
            k,
            l,
            rho_sq: 2 * l - self.a,
            delta: self.f_at_one,
        };
        debug_assert!(self.sqrt_certificate_holds(&w));
        Some(w)
    }

    /// The exact identity F(x^2) = (x^4 + l x^2 + 1)^2 - rho^2 x^2 (x^2+1)^2.
    pub fn sqrt_certificate_holds(&self, w: &SqrtWitness) -> bool {
        let f = self.minimal_polynomial();
        // f(x^2): interleave zero coefficients.
        let mut fx2_coeffs = Vec::with_capacity(2 * f.coeffs().len());
        for c in f.coeffs() {
            fx2_coeffs.push(c.clone());
            fx2_coeffs.push(BigInt::zero());
        }
        fx2_coeffs.pop();
        let fx2 = IntPoly::from_coeffs(fx2_coeffs);
        let g0 = IntPoly::from_descending(&[1, 0, w.l, 0, 1]);
        let xx = IntPoly::from_descending(&[1, 0]);
        let x2p1 = IntPoly::from_descending(&[1, 0, 1]);
        let rhs = g0.mul(&g0).sub(
            &xx.mul(&xx)
                .mul(&x2p1.mul(&x2p1))
                .scale(&BigInt::from(w.rho_sq)),
        );
        fx2 == rhs
    }

    /// sigma = sqrt(lambda) e^{i theta/2} + 1/(sqrt(lambda) e^{i theta/2}):
    /// trace l - 2, norm -a, discriminant F(1).
    pub fn sigma(&self, w: &SqrtWitness) -> QuadraticInteger {
        let s = QuadraticInteger {
            trace: w.l - 2,
            norm: -self.a,
            disc: self.f_at_one,
        };
        debug_assert_eq!(s.trace * s.trace - 4 * s.norm, s.disc);
        s
    }

    /// Minimal polynomial of e^{(l + i theta)/2}:
    /// X^4 - (l-2)X^3 + (2-a)X^2 - (l-2)X + 1; totally imaginary.
    pub fn holonomy_quartic(&self, w: &SqrtWitness) -> IntPoly {
        IntPoly::from_descending(&[1, -(w.l - 2), 2 - self.a, -(w.l - 2), 1])
    }

    /// The Salem quartic of lambda^2, via the exact resultant route
    /// (A(x)^2 - x B(x)^2, no coefficient formulas to drift).
    pub fn square(&self) -> Result<SalemQuartic, SalemError> {
        let sq = composed_square(&self.minimal_polynomial())?;
        let coeffs = sq.coeffs();
        if sq.degree() != Some(4) || !sq.is_palindromic() {
            return Err(SalemError::Internal(format!(
                "square of a Salem quartic must be a palindromic quartic, got {sq}"
            )));
        }
        let a2: i64 = coeffs[3].to_string().parse().map_err(|_| {
            SalemError::Internal("square coefficients exceed i64".to_string())
        })?;
        let b2: i64 = coeffs[2].to_string().parse().map_err(|_| {
            SalemError::Internal("square coefficients exceed i64".to_string())
        })?;
        salem_check_deg4(a2, b2)
            .map_err(|r| SalemError::Internal(format!("lambda^2 must stay Salem: {r}")))
    }
}

/// Squarefree class of (-1)^m F(1) F(-1), cross-checked against the
/// discriminant of F (Q^x/Q^x2 equality enforced exactly).
pub fn disc_class_deg4(s: &SalemQuartic) -> Result<BigInt, SalemError> {
    let product = BigInt::from(s.f_at_one()) * BigInt::from(s.f_at_minus_one());
    let class = squarefree_part_int(&product)?;
    let disc = discriminant(&s.minimal_polynomial())?;
    let disc_class = squarefree_part_int(&disc)?;
    if class != disc_class {
        return Err(SalemError::Internal(format!(
            "disc class mismatch for (a,b)=({},{}): F(1)F(-1) ~ {class}, disc ~ {disc_class}",
            s.a(),
            s.b()
        )));
    }
    Ok(class)
}

/// Squarefree class of (-1)^1 F(1) F(-1) = N^2 - 4 for degree 2.
pub fn disc_class_deg2(s: &SalemQuadratic) -> Result<BigInt, SalemError> {
    let product = -BigInt::from(s.f_at_one()) * BigInt::from(s.f_at_minus_one());
    let class = squarefree_part_int(&product)?;
    let disc = discriminant(&s.minimal_polynomial())?;
    let disc_class = squarefree_part_int(&disc)?;
    if class != disc_class {
        return Err(SalemError::Internal(format!(
            "disc class mismatch for N={}: -F(1)F(-1) ~ {class}, disc ~ {disc_class}",
            s.trace()
        )));
    }
    Ok(class)
}

/// All Salem quartics with |a|, |b| <= bound, ordered by (|a|, |b|, a, b) so
/// small coefficients come first. Deterministic and restartable.
pub fn enumerate_salem(bound: i64) -> Vec<SalemQuartic> {
    let mut out = Vec::new();
    for aa in 0..=bound {
        for bb in 0..=bound {
            let a_values: &[i64] = if aa == 0 { &[0] } else { &[-aa, aa] };
            for &a in a_values {
                let b_values: &[i64] = if bb == 0 { &[0] } else { &[-bb, bb] };
                for &b in b_values {
                    if let Ok(s) = salem_check_deg4(a, b) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// First square-rootable Salem quartic with disc class -d, searching the
/// two-parameter family b + 2 = (k^2 - d j^2)/2, a = -(k^2 + d j^2)/4 and
/// falling back to plain enumeration. None = bounded search exhausted (not a
/// non-existence claim).
pub fn salem_with_disc(d: i64, bound: i64) -> Result<Option<SalemQuartic>, SalemError> {
    if d <= 0 || squarefree_part_int(&BigInt::from(d))? != BigInt::from(d) {
        return Err(SalemError::NotSquarefree(d));
    }
    let target = BigInt::from(-d);
    let matches = |s: &SalemQuartic| -> Result<bool, SalemError> {
        if s.sqrt_witness().is_none() {
            return Ok(false);
        }
        Ok(disc_class_deg4(s)? == target)
    };
    for k in 0..=bound {
        for j in 1..=bound {
            let ksq = k * k;
            let djj = d * j * j;
            if (ksq - djj) % 2 != 0 || (ksq + djj) % 4 != 0 {
                continue;
            }
            let b = (ksq - djj) / 2 - 2;
            let a = -(ksq + djj) / 4;
            if let Ok(s) = salem_check_deg4(a, b) {
                if matches(&s)? {
                    return Ok(Some(s));
                }
            }
        }
    }
    for s in enumerate_salem(bound) {
        if matches(&s)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Gram determinants of the plain and twisted trace forms over the power
/// basis of Q[x]/(F), F palindromic monic of even degree 2m:
/// plain G[i][j] = p_{i+j}, twisted G[i][j] = p_{|i-j|}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFormDets {
    pub det_twisted: BigInt,
    pub det_plain: BigInt,
    pub class_twisted: BigInt,
    pub class_plain: BigInt,
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Compute both Gram determinants and enforce the three class identities:
/// class(det_plain) = class(disc F), class(det_twisted) = class(F(1)F(-1)),
/// and det_plain = (-1)^m det_twisted in Q^x/Q^x2. The checks multiply the
/// quantities pairwise and test for perfect squares, so no factorization of
/// the (large) determinants is ever needed.
pub fn trace_form_dets(f: &IntPoly) -> Result<TraceFormDets, SalemError> {
    let n = match f.degree() {
        Some(n) if n >= 2 && n % 2 == 0 => n,
        _ => return Err(SalemError::Poly(PolyError::NotPalindromic)),
    };
    if !f.is_palindromic() || !f.is_monic() {
        return Err(SalemError::Poly(PolyError::NotPalindromic));
    }
    let m = n / 2;
    let p = newton_power_sums(f, 2 * n - 2)?;
    let twisted: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| p[i.abs_diff(j)].clone()).collect())
        .collect();
    let plain: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| p[i + j].clone()).collect())
        .collect();
    let det_twisted = bareiss_det(twisted);
    let det_plain = bareiss_det(plain);

    let one = f.eval(&BigInt::from(1));
    let minus_one = f.eval(&BigInt::from(-1));
    let f1fm1 = &one * &minus_one;
    let disc = discriminant(f)?;
    let sign = if m % 2 == 1 { -1 } else { 1 };

    if !is_square_int(&(&det_twisted * &f1fm1)) {
        return Err(SalemError::Internal(format!(
            "det(q^lambda) = {det_twisted} is not F(1)F(-1) = {f1fm1} mod squares"
        )));
    }
    if !is_square_int(&(&det_plain * &disc)) {
        return Err(SalemError::Internal(format!(
            "det(q) = {det_plain} is not disc F = {disc} mod squares"
        )));
    }
    if !is_square_int(&(&det_plain * &det_twisted * BigInt::from(sign))) {
        return Err(SalemError::Internal(
            "det(q) != (-1)^m det(q^lambda) mod squares".to_string(),
        ));
    }

    let class_twisted = squarefree_part_int(&f1fm1)?;
    let class_plain = squarefree_part_int(&(BigInt::from(sign) * &f1fm1))?;
    Ok(TraceFormDets {
        det_twisted,
        det_plain,
        class_twisted,
        class_plain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic(a: i64, b: i64) -> SalemQuartic {
        salem_check_deg4(a, b).unwrap()
    }

    #[test]
    fn check_examples() {
        let s = quartic(-1, -1);
        assert_eq!((s.f_at_one(), s.f_at_minus_one()), (-1, 3));
        assert_eq!(
            salem_check_deg4(0, -1),
            Err(SalemRejection::FAtOneNonNegative(1))
        );
        assert!(salem_check_deg4(-1, -3).is_ok());
        // (x^2-3x+1)(x^2+x+1): y-reduction sees the rational root.
        assert_eq!(
            salem_check_deg4(-2, -1),
            Err(SalemRejection::ReciprocalQuadraticFactor)
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(
            quartic(-1, -3).tau(),
            QuadraticInteger { trace: -5, norm: 7, disc: -3 }
        );
        assert_eq!(
            quartic(-1, -1).tau(),
            QuadraticInteger { trace: -3, norm: 3, disc: -3 }
        );
        assert_eq!(
            quartic(-3, 1).tau(),
            QuadraticInteger { trace: -1, norm: 7, disc: -27 }
        );
    }

    #[test]
    fn sqrt_witness_examples() {
        let w = quartic(-1, -3).sqrt_witness().unwrap();
        assert_eq!((w.k, w.l, w.rho_sq, w.delta), (1, 3, 7, -3));
        assert!(quartic(-1, -1).sqrt_witness().is_none());
        let w = quartic(-3, 1).sqrt_witness().unwrap();
        assert_eq!((w.k, w.l, w.rho_sq), (3, 5, 13));
        let w = quartic(-2, -5).sqrt_witness().unwrap();
        assert_eq!((w.k, w.l, w.rho_sq, w.delta), (1, 3, 8, -7));
    }

    #[test]
    fn sqrt_certificate_is_exact() {
        for (a, b) in [(-1, -3), (-3, 1), (-2, -5), (-2, -2)] {
            let s = quartic(a, b);
            let w = s.sqrt_witness().unwrap();
            assert!(s.sqrt_certificate_holds(&w), "({a},{b})");
        }
    }

    #[test]
    fn sigma_examples() {
        let s = quartic(-1, -3);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(s.sigma(&w), QuadraticInteger { trace: 1, norm: 1, disc: -3 });
        let s = quartic(-3, 1);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(s.sigma(&w), QuadraticInteger { trace: 3, norm: 3, disc: -3 });
        let s = quartic(-2, -5);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(s.sigma(&w), QuadraticInteger { trace: 1, norm: 2, disc: -7 });
    }

    #[test]
    fn holonomy_examples() {
        let s = quartic(-1, -3);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(
            s.holonomy_quartic(&w),
            IntPoly::from_descending(&[1, -1, 3, -1, 1])
        );
        let s = quartic(-3, 1);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(
            s.holonomy_quartic(&w),
            IntPoly::from_descending(&[1, -3, 5, -3, 1])
        );
        let s = quartic(-2, -5);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(
            s.holonomy_quartic(&w),
            IntPoly::from_descending(&[1, -1, 4, -1, 1])
        );
    }

    #[test]
    fn square_examples() {
        assert_eq!(quartic(-1, -1).square().unwrap(), quartic(-3, 1));
        // Resultant route agrees with the closed forms a' = 2b - a^2,
        // b' = b^2 + 2 - 2a^2 on a swath of inputs.
        for s in enumerate_salem(6) {
            let sq = s.square().unwrap();
            assert_eq!(sq.a(), 2 * s.b() - s.a() * s.a());
            assert_eq!(sq.b(), s.b() * s.b() + 2 - 2 * s.a() * s.a());
            // Squares are always square-rootable with k = |b - 2|.
            let w = sq.sqrt_witness().expect("lambda^2 is square-rootable");
            assert_eq!(w.k, (s.b() - 2).abs());
        }
    }

    #[test]
    fn disc_class_examples() {
        assert_eq!(disc_class_deg4(&quartic(-1, -3)).unwrap(), BigInt::from(-3));
        assert_eq!(
            disc_class_deg2(&SalemQuadratic::new(3).unwrap()).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(disc_class_deg4(&quartic(-2, -2)).unwrap(), BigInt::from(-1));
        assert!(SalemQuadratic::new(2).is_err());
    }

    #[test]
    fn enumeration_contents_and_order() {
        let tiny = enumerate_salem(1);
        assert_eq!(tiny, vec![quartic(-1, -1)]);
        assert!(enumerate_salem(0).is_empty());
        let some = enumerate_salem(3);
        assert!(some.contains(&quartic(-1, -3)));
        // (-1,-3) is the first square-rootable entry in enumeration order.
        let first_sr = some.iter().find(|s| s.sqrt_witness().is_some()).unwrap();
        assert_eq!(**&first_sr, quartic(-1, -3));
    }

    #[test]
    fn salem_with_disc_fixtures() {
        assert_eq!(salem_with_disc(1, 200).unwrap().unwrap(), quartic(-2, -2));
        assert_eq!(salem_with_disc(3, 200).unwrap().unwrap(), quartic(-1, -3));
        assert_eq!(salem_with_disc(7, 200).unwrap().unwrap(), quartic(-2, -5));
        assert_eq!(salem_with_disc(4, 10), Err(SalemError::NotSquarefree(4)));
    }

    #[test]
    fn trace_form_examples() {
        let t = trace_form_dets(&IntPoly::from_descending(&[1, -1, -3, -1, 1])).unwrap();
        assert_eq!(t.class_twisted, BigInt::from(-3));
        assert_eq!(t.class_plain, BigInt::from(-3));
        let t = trace_form_dets(&IntPoly::from_descending(&[1, -3, 1])).unwrap();
        assert_eq!(t.class_twisted, BigInt::from(-5));
        assert_eq!(t.class_plain, BigInt::from(5));
        assert_eq!(t.det_twisted, BigInt::from(-5));
        assert_eq!(t.det_plain, BigInt::from(5));
        let t = trace_form_dets(&IntPoly::from_descending(&[1, -3, 1, -3, 1])).unwrap();
        assert_eq!(t.class_twisted, BigInt::from(-3));
        assert_eq!(t.class_plain, BigInt::from(-3));
    }

    #[test]
    fn appendix_class_identity_on_enumeration() {
        // class(disc F) = class(F(1)F(-1)) for every Salem quartic (m = 2),
        // enforced inside disc_class_deg4.
        for s in enumerate_salem(8) {
            disc_class_deg4(&s).unwrap();
        }
        for n in 3..=20 {
            disc_class_deg2(&SalemQuadratic::new(n).unwrap()).unwrap();
        }
    }

    #[test]
    fn sigma_tau_field_agreement() {
        // Q(sigma) = Q(sqrt(d_lambda)): squarefree parts of the two
        // discriminants agree for every square-rootable quartic.
        for s in enumerate_salem(10) {
            if let Some(w) = s.sqrt_witness() {
                let st = squarefree_part_int(&BigInt::from(s.sigma(&w).disc)).unwrap();
                let tt = squarefree_part_int(&BigInt::from(s.tau().disc)).unwrap();
                assert_eq!(st, tt, "({}, {})", s.a(), s.b());
            }
        }
    }

    #[test]
    fn square_of_square_and_sigma_tau_chain() {
        // sigma disc of lambda^2 equals tau disc of lambda (both -3 here).
        let s = quartic(-1, -1);
        let sq = s.square().unwrap();
        let w = sq.sqrt_witness().unwrap();
        assert_eq!(sq.sigma(&w).disc, s.tau().disc);
        // square twice = coefficients of lambda^4.
        let s4 = sq.square().unwrap();
        let direct = composed_square(&composed_square(&s.minimal_polynomial()).unwrap()).unwrap();
        assert_eq!(s4.minimal_polynomial(), direct);
    }
}
