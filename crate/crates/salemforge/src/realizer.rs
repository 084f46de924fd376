//! Construction of certified loxodromic elements realizing Salem numbers.
//!
//! Degree 2: N - 2 = p1^2 + ... + p4^2 gives the vector v = sum p_nu i_nu
//! with tr 0 and Norm N - 2, and [[0,-1],[1,v]] translates by log lambda.
//! Degree 4 (square-rootable, witness l): -F(1) = (l-2)^2 + 4a > 0 splits by
//! parity of l into a four-square decomposition whose entries assemble
//! alpha = (l - 2 + sum p_nu i_nu)/2, a vector of the order Q with trace
//! l - 2 and norm -a; [[0,-1],[1,alpha]] translates by log lambda. A Salem
//! quartic that is not square-rootable is realized through lambda^2, which
//! always is.
//!
//! Every certificate stores the exact objects along the whole chain and can
//! be re-verified from scratch: Vahlen conditions, order membership,
//! quartic consistency, SO membership, characteristic-polynomial
//! divisibility, and the numeric/exact translation-length cross-check.

use crate::arith::four_squares;
use crate::arith::parse_rational;
use crate::clifford::{Algebra, CliffordError, Element, OrderQ};
use crate::polynomials::{IntPoly, PolyError};
use crate::salem::{SalemError, SalemQuadratic, SalemQuartic, SqrtWitness};
use crate::spin_bridge::{largest_real_root_log, phi, psi, SOMatrix, SpinError};
use crate::vahlen::{translation_length_estimate, VahlenError, VahlenMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Iterations fed to the numeric translation-length estimator.
const LENGTH_ESTIMATE_ITERATIONS: usize = 64;
/// Tolerance between the numeric estimate and the exact eigenvalue log.
const LENGTH_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Error)]
pub enum RealizerError {
    #[error("constructed element lies outside the order Q")]
    OrderMembership,
    #[error("characteristic polynomial is not divisible by the Salem minimal polynomial")]
    Divisibility,
    #[error("numeric length {numeric} disagrees with exact log {exact}")]
    LengthMismatch { numeric: f64, exact: f64 },
    #[error("certificate violates its invariants: {0}")]
    BadCertificate(String),
    #[error("malformed certificate JSON: {0}")]
    Json(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Salem(#[from] SalemError),
    #[error(transparent)]
    Vahlen(#[from] VahlenError),
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A Salem number of degree 2 or 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SalemInput {
    Quadratic(SalemQuadratic),
    Quartic(SalemQuartic),
}

impl SalemInput {
    pub fn minimal_polynomial(&self) -> IntPoly {
        match self {
            SalemInput::Quadratic(s) => s.minimal_polynomial(),
            SalemInput::Quartic(s) => s.minimal_polynomial(),
        }
    }
}

/// Certified realization of a Salem number (or its square) as a closed
/// geodesic length in the SO(q6) lattice.
#[derive(Debug, Clone)]
pub struct RealizationCertificate {
    /// The Salem number that was asked for.
    pub salem: SalemInput,
    /// 1 when it is realized directly, 2 when lambda^2 is realized instead.
    pub exponent: u32,
    /// The Salem number the matrix actually realizes (lambda^exponent).
    pub realized: SalemInput,
    /// The loxodromic Vahlen matrix with entries in the order Q.
    pub matrix: VahlenMatrix,
    /// Coordinates of the four entries in the x_I basis of Q (all integers).
    pub order_coords: [Vec<BigInt>; 4],
    /// The translation-length quartic of the matrix vector.
    pub quartic: IntPoly,
    /// The 7x7 exact orthogonal matrix phi(psi(matrix)).
    pub so_matrix: SOMatrix,
    /// Its characteristic polynomial, monic integral of degree 7.
    pub charpoly: IntPoly,
    /// charpoly / F_realized, exact.
    pub quotient: IntPoly,
    /// Numeric translation length of the matrix (orbit estimate).
    pub ell_numeric: f64,
    /// log(realized lambda) from Sturm-isolated exact root data.
    pub log_lambda: f64,
}

fn integral_coords(coords: &[BigRational]) -> Option<Vec<BigInt>> {
    coords
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Shared tail of both constructions: push the matrix through the spin
/// bridge, certify divisibility and the exact/numeric length agreement.
fn certify(
    salem: SalemInput,
    exponent: u32,
    realized: SalemInput,
    matrix: VahlenMatrix,
    quartic: IntPoly,
) -> Result<RealizationCertificate, RealizerError> {
    let order = OrderQ::get();
    let mut order_coords: [Vec<BigInt>; 4] = Default::default();
    for (slot, entry) in matrix.entries().into_iter().enumerate() {
        let coords = order.coordinates(entry)?;
        order_coords[slot] = integral_coords(&coords).ok_or(RealizerError::OrderMembership)?;
    }
    let so_matrix = phi(&psi(&matrix)?)?;
    let charpoly = so_matrix.charpoly_int()?;
    let f = realized.minimal_polynomial();
    let quotient = charpoly
        .div_exact_monic(&f)
        .ok_or(RealizerError::Divisibility)?;
    let log_lambda = largest_real_root_log(&f).ok_or_else(|| {
        RealizerError::Internal("a Salem minimal polynomial has a real root > 1".to_string())
    })?;
    let ell_numeric = translation_length_estimate(&matrix, LENGTH_ESTIMATE_ITERATIONS)?;
    if (ell_numeric - log_lambda).abs() >= LENGTH_TOLERANCE {
        return Err(RealizerError::LengthMismatch {
            numeric: ell_numeric,
            exact: log_lambda,
        });
    }
    Ok(RealizationCertificate {
        salem,
        exponent,
        realized,
        matrix,
        order_coords,
        quartic,
        so_matrix,
        charpoly,
        quotient,
        ell_numeric,
        log_lambda,
    })
}

/// Realize the degree-2 Salem number with trace N >= 3 at length log lambda.
pub fn realize_deg2(n: i64) -> Result<RealizationCertificate, RealizerError> {
    let s = SalemQuadratic::new(n)?;
    let squares = four_squares((n - 2) as u64);
    let coords: Vec<i64> = squares.iter().map(|&p| p as i64).collect();
    let v = Element::vector_i64(Algebra::c4(), 0, &coords)?;
    let quartic = VahlenMatrix::lemma_quartic(&v)?
        .to_int_poly()
        .ok_or_else(|| RealizerError::Internal("integer vector, integer quartic".to_string()))?;
    let expected = IntPoly::from_descending(&[1, 0, n, 0, 1]);
    if quartic != expected {
        return Err(RealizerError::Internal(format!(
            "translation quartic {quartic} differs from x^4 + {n}x^2 + 1"
        )));
    }
    let matrix = VahlenMatrix::from_vector(v)?;
    certify(
        SalemInput::Quadratic(s),
        1,
        SalemInput::Quadratic(s),
        matrix,
        quartic,
    )
}

/// Four-square data for -Delta respecting the parity of l: all entries even
/// when l is even, and exactly three odd entries (the even one last) when l
/// is odd.
fn parity_squares(minus_delta: i64, l: i64) -> Result<[i64; 4], RealizerError> {
    if l % 2 == 0 {
        if minus_delta % 4 != 0 {
            return Err(RealizerError::Internal(format!(
                "l = {l} even forces -Delta = {minus_delta} = 0 mod 4"
            )));
        }
        let q = four_squares((minus_delta / 4) as u64);
        Ok([2 * q[0] as i64, 2 * q[1] as i64, 2 * q[2] as i64, 2 * q[3] as i64])
    } else {
        if minus_delta % 4 != 3 {
            return Err(RealizerError::Internal(format!(
                "l = {l} odd forces -Delta = {minus_delta} = 3 mod 4"
            )));
        }
        let q = four_squares(minus_delta as u64);
        let (odd, even): (Vec<i64>, Vec<i64>) =
            q.iter().map(|&x| x as i64).partition(|x| x % 2 == 1);
        if odd.len() != 3 || even.len() != 1 {
            return Err(RealizerError::Internal(format!(
                "four squares of {minus_delta} = 3 mod 4 must have exactly three odd entries"
            )));
        }
        Ok([odd[0], odd[1], odd[2], even[0]])
    }
}

/// Realize a square-rootable Salem quartic at length log lambda.
pub fn realize_deg4(
    s: &SalemQuartic,
    w: &SqrtWitness,
) -> Result<RealizationCertificate, RealizerError> {
    let minus_delta = -w.delta;
    debug_assert!(minus_delta > 0);
    let p = parity_squares(minus_delta, w.l)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let scalar = BigRational::from(BigInt::from(w.l - 2)) * &half;
    let coords: Vec<BigRational> = p
        .iter()
        .map(|&pi| BigRational::from(BigInt::from(pi)) * &half)
        .collect();
    let alpha = Element::vector(Algebra::c4(), scalar, &coords)?;
    // tr(alpha) = l - 2 and Norm(alpha) = -a pin the translation quartic.
    let tr = alpha.vector_trace()?;
    let norm = alpha.vector_norm()?;
    if tr != BigRational::from(BigInt::from(w.l - 2))
        || norm != BigRational::from(BigInt::from(-s.a()))
    {
        return Err(RealizerError::Internal(format!(
            "alpha has (tr, Norm) = ({tr}, {norm}), expected ({}, {})",
            w.l - 2,
            -s.a()
        )));
    }
    let quartic = s.holonomy_quartic(w);
    let lemma = VahlenMatrix::lemma_quartic(&alpha)?
        .to_int_poly()
        .ok_or_else(|| RealizerError::Internal("integral trace and norm".to_string()))?;
    if lemma != quartic {
        return Err(RealizerError::Internal(format!(
            "lemma quartic {lemma} differs from holonomy quartic {quartic}"
        )));
    }
    let matrix = VahlenMatrix::from_vector(alpha)?;
    certify(
        SalemInput::Quartic(*s),
        1,
        SalemInput::Quartic(*s),
        matrix,
        quartic,
    )
}

/// Realize lambda when square-rootable, else lambda^2 (exponent 2).
pub fn realize_any_deg4(s: &SalemQuartic) -> Result<RealizationCertificate, RealizerError> {
    if let Some(w) = s.sqrt_witness() {
        return realize_deg4(s, &w);
    }
    let sq = s.square()?;
    let w = sq.sqrt_witness().ok_or_else(|| {
        RealizerError::Internal("the square of a Salem number is square-rootable".to_string())
    })?;
    let mut cert = realize_deg4(&sq, &w)?;
    cert.salem = SalemInput::Quartic(*s);
    cert.exponent = 2;
    Ok(cert)
}

/// Re-verify every invariant of a certificate from scratch.
pub fn verify_certificate(cert: &RealizationCertificate) -> Result<(), RealizerError> {
    // Vahlen conditions (check() re-runs them) and entry provenance.
    let m = VahlenMatrix::check(
        cert.matrix.a().clone(),
        cert.matrix.b().clone(),
        cert.matrix.c().clone(),
        cert.matrix.d().clone(),
    )?;
    // Order membership with the stored coordinates.
    let order = OrderQ::get();
    for (slot, entry) in m.entries().into_iter().enumerate() {
        let coords = order.coordinates(entry)?;
        let ints = integral_coords(&coords).ok_or(RealizerError::OrderMembership)?;
        if ints != cert.order_coords[slot] {
            return Err(RealizerError::BadCertificate(format!(
                "stored order coordinates for entry {slot} do not match"
            )));
        }
    }
    // Translation quartic from the matrix vector.
    let lemma = VahlenMatrix::lemma_quartic(m.d())?
        .to_int_poly()
        .ok_or_else(|| RealizerError::BadCertificate("non-integral quartic".to_string()))?;
    if lemma != cert.quartic {
        return Err(RealizerError::BadCertificate(
            "translation quartic does not match the matrix".to_string(),
        ));
    }
    // Spin chain: SO matrix and characteristic polynomial.
    let so = phi(&psi(&m)?)?;
    if so != cert.so_matrix {
        return Err(RealizerError::BadCertificate(
            "stored SO(q6) matrix does not match phi(psi(matrix))".to_string(),
        ));
    }
    let cp = so.charpoly_int()?;
    if cp != cert.charpoly {
        return Err(RealizerError::BadCertificate(
            "stored characteristic polynomial does not match".to_string(),
        ));
    }
    // Exact divisibility F * quotient = charpoly.
    let f = cert.realized.minimal_polynomial();
    if f.mul(&cert.quotient) != cert.charpoly {
        return Err(RealizerError::Divisibility);
    }
    // Exponent consistency.
    match (cert.exponent, &cert.salem, &cert.realized) {
        (1, a, b) if a == b => {}
        (2, SalemInput::Quartic(s), SalemInput::Quartic(r)) if s.square()? == *r => {}
        _ => {
            return Err(RealizerError::BadCertificate(
                "exponent does not relate salem to realized".to_string(),
            ))
        }
    }
    // Numeric cross-check.
    let exact = largest_real_root_log(&f)
        .ok_or_else(|| RealizerError::BadCertificate("no real eigenvalue".to_string()))?;
    if (cert.log_lambda - exact).abs() > 1e-9 {
        return Err(RealizerError::BadCertificate(
            "stored log_lambda does not match the exact root".to_string(),
        ));
    }
    if (cert.ell_numeric - cert.log_lambda).abs() >= LENGTH_TOLERANCE {
        return Err(RealizerError::LengthMismatch {
            numeric: cert.ell_numeric,
            exact: cert.log_lambda,
        });
    }
    Ok(())
}

// ---- JSON encoding (schema "salemforge/1", numbers as strings) ----

fn poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .rev()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn poly_from_json(v: &Value) -> Result<IntPoly, RealizerError> {
    let arr = v
        .as_array()
        .ok_or_else(|| RealizerError::Json("polynomial must be an array".to_string()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let s = c
            .as_str()
            .ok_or_else(|| RealizerError::Json("coefficients are strings".to_string()))?;
        coeffs.push(
            s.parse::<BigInt>()
                .map_err(|_| RealizerError::Json(format!("bad integer {s:?}")))?,
        );
    }
    coeffs.reverse();
    Ok(IntPoly::from_coeffs(coeffs))
}

fn element_json(e: &Element) -> Value {
    Value::Array(
        e.to_text_pairs()
            .into_iter()
            .map(|(idx, lit)| {
                json!([
                    idx.into_iter().map(|i| Value::from(i as u64)).collect::<Vec<_>>(),
                    lit
                ])
            })
            .collect(),
    )
}

fn element_from_json(v: &Value) -> Result<Element, RealizerError> {
    let arr = v
        .as_array()
        .ok_or_else(|| RealizerError::Json("element must be an array of pairs".to_string()))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for pair in arr {
        let p = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| RealizerError::Json("element term must be [indices, value]".to_string()))?;
        let idx = p[0]
            .as_array()
            .ok_or_else(|| RealizerError::Json("generator list must be an array".to_string()))?
            .iter()
            .map(|i| {
                i.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| RealizerError::Json("generator index must be an integer".to_string()))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        let lit = p[1]
            .as_str()
            .ok_or_else(|| RealizerError::Json("coefficient must be a string".to_string()))?;
        pairs.push((idx, lit.to_string()));
    }
    Element::from_text_pairs(Algebra::c4(), &pairs).map_err(|e| RealizerError::Json(e.to_string()))
}

fn salem_json(s: &SalemInput) -> Value {
    match s {
        SalemInput::Quadratic(q) => json!({ "N": q.trace().to_string() }),
        SalemInput::Quartic(q) => {
            json!({ "a": q.a().to_string(), "b": q.b().to_string() })
        }
    }
}

fn salem_from_json(v: &Value) -> Result<SalemInput, RealizerError> {
    let obj = v
        .as_object()
        .ok_or_else(|| RealizerError::Json("salem must be an object".to_string()))?;
    let get_int = |key: &str| -> Result<i64, RealizerError> {
        obj.get(key)
            .and_then(|x| x.as_str())
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| RealizerError::Json(format!("bad or missing {key:?}")))
    };
    if obj.contains_key("N") {
        let s = SalemQuadratic::new(get_int("N")?)?;
        Ok(SalemInput::Quadratic(s))
    } else {
        let (a, b) = (get_int("a")?, get_int("b")?);
        let s = crate::salem::salem_check_deg4(a, b)
            .map_err(|r| RealizerError::Json(format!("not a Salem quartic: {r}")))?;
        Ok(SalemInput::Quartic(s))
    }
}

impl RealizationCertificate {
    pub fn to_json(&self) -> Value {
        let mut checks = Map::new();
        checks.insert("order_membership".to_string(), Value::Bool(true));
        checks.insert("vahlen".to_string(), Value::Bool(true));
        checks.insert("divisibility".to_string(), Value::Bool(true));
        checks.insert("length_match".to_string(), Value::Bool(true));
        json!({
            "schema": "salemforge/1",
            "salem": salem_json(&self.salem),
            "exponent": self.exponent.to_string(),
            "matrix": {
                "a": element_json(self.matrix.a()),
                "b": element_json(self.matrix.b()),
                "c": element_json(self.matrix.c()),
                "d": element_json(self.matrix.d()),
            },
            "alpha_coords": self.order_coords.iter().map(|row| {
                Value::Array(row.iter().map(|c| Value::String(c.to_string())).collect())
            }).collect::<Vec<_>>(),
            "quartic": poly_json(&self.quartic),
            "so_matrix": self.so_matrix.entries().iter().flatten()
                .map(|c| Value::String(c.to_string())).collect::<Vec<_>>(),
            "charpoly": poly_json(&self.charpoly),
            "quotient": poly_json(&self.quotient),
            "ell_numeric": self.ell_numeric.to_string(),
            "log_lambda": self.log_lambda.to_string(),
            "checks": Value::Object(checks),
        })
    }

    /// Parse and re-verify a certificate; every stored value is checked
    /// against a recomputation.
    pub fn from_json(v: &Value) -> Result<RealizationCertificate, RealizerError> {
        let obj = v
            .as_object()
            .ok_or_else(|| RealizerError::Json("certificate must be an object".to_string()))?;
        if obj.get("schema").and_then(|s| s.as_str()) != Some("salemforge/1") {
            return Err(RealizerError::Json(
                "missing or unsupported schema tag".to_string(),
            ));
        }
        let field = |key: &str| -> Result<&Value, RealizerError> {
            obj.get(key)
                .ok_or_else(|| RealizerError::Json(format!("missing field {key:?}")))
        };
        let salem = salem_from_json(field("salem")?)?;
        let exponent: u32 = field("exponent")?
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| RealizerError::Json("bad exponent".to_string()))?;
        let matrix_obj = field("matrix")?
            .as_object()
            .ok_or_else(|| RealizerError::Json("matrix must be an object".to_string()))?;
        let entry = |key: &str| -> Result<Element, RealizerError> {
            element_from_json(matrix_obj.get(key).ok_or_else(|| {
                RealizerError::Json(format!("missing matrix entry {key:?}"))
            })?)
        };
        let matrix = VahlenMatrix::check(entry("a")?, entry("b")?, entry("c")?, entry("d")?)?;
        let coords_arr = field("alpha_coords")?
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| RealizerError::Json("alpha_coords must have four rows".to_string()))?;
        let mut order_coords: [Vec<BigInt>; 4] = Default::default();
        for (i, row) in coords_arr.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| RealizerError::Json("coordinate row must be an array".to_string()))?;
            order_coords[i] = row
                .iter()
                .map(|c| {
                    c.as_str()
                        .and_then(|s| s.parse::<BigInt>().ok())
                        .ok_or_else(|| RealizerError::Json("bad coordinate".to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
        }
        let quartic = poly_from_json(field("quartic")?)?;
        let so_flat = field("so_matrix")?
            .as_array()
            .filter(|a| a.len() == 49)
            .ok_or_else(|| RealizerError::Json("so_matrix must have 49 entries".to_string()))?;
        let mut rows = Vec::with_capacity(7);
        for r in 0..7 {
            let mut row = Vec::with_capacity(7);
            for c in 0..7 {
                let s = so_flat[r * 7 + c]
                    .as_str()
                    .ok_or_else(|| RealizerError::Json("matrix entries are strings".to_string()))?;
                row.push(
                    parse_rational(s).map_err(|e| RealizerError::Json(e.to_string()))?,
                );
            }
            rows.push(row);
        }
        let so_matrix = SOMatrix::new(rows)?;
        let charpoly = poly_from_json(field("charpoly")?)?;
        let quotient = poly_from_json(field("quotient")?)?;
        let parse_float = |key: &str| -> Result<f64, RealizerError> {
            field(key)?
                .as_str()
                .and_then(|s| s.parse::<f64>().ok())
                .ok_or_else(|| RealizerError::Json(format!("bad float {key:?}")))
        };
        let ell_numeric = parse_float("ell_numeric")?;
        let log_lambda = parse_float("log_lambda")?;
        let realized = match (exponent, salem) {
            (1, s) => s,
            (2, SalemInput::Quartic(s)) => SalemInput::Quartic(s.square()?),
            _ => {
                return Err(RealizerError::Json(
                    "exponent must be 1, or 2 with a quartic input".to_string(),
                ))
            }
        };
        let cert = RealizationCertificate {
            salem,
            exponent,
            realized,
            matrix,
            order_coords,
            quartic,
            so_matrix,
            charpoly,
            quotient,
            ell_numeric,
            log_lambda,
        };
        verify_certificate(&cert)?;
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::salem::salem_check_deg4;

    fn quartic(a: i64, b: i64) -> SalemQuartic {
        salem_check_deg4(a, b).unwrap()
    }

    #[test]
    fn degree2_examples() {
        let cert = realize_deg2(3).unwrap();
        // v = i1, quartic X^4 + 3X^2 + 1, ell = log((3+sqrt5)/2).
        assert_eq!(
            cert.matrix.d(),
            &Element::generator(Algebra::c4(), 1).unwrap()
        );
        assert_eq!(cert.quartic, IntPoly::from_descending(&[1, 0, 3, 0, 1]));
        let expect = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
        assert!((cert.log_lambda - expect).abs() < 1e-9);
        assert!((cert.ell_numeric - expect).abs() < 1e-4);
        verify_certificate(&cert).unwrap();

        let cert = realize_deg2(4).unwrap();
        assert_eq!(
            cert.matrix.d(),
            &Element::vector_i64(Algebra::c4(), 0, &[1, 1]).unwrap()
        );
        verify_certificate(&cert).unwrap();

        let cert = realize_deg2(7).unwrap();
        assert_eq!(
            cert.matrix.d(),
            &Element::vector_i64(Algebra::c4(), 0, &[2, 1]).unwrap()
        );
        verify_certificate(&cert).unwrap();
        assert!(realize_deg2(2).is_err());
    }

    #[test]
    fn degree4_hand_verified_instance() {
        // (-1,-3): alpha = 1 + omega, quartic x^4 - x^3 + 3x^2 - x + 1,
        // charpoly divisible by x^4 - x^3 - 3x^2 - x + 1.
        let s = quartic(-1, -3);
        let w = s.sqrt_witness().unwrap();
        let cert = realize_deg4(&s, &w).unwrap();
        let one_plus_omega = Element::omega()
            .add(&Element::one(Algebra::c4()))
            .unwrap();
        assert_eq!(cert.matrix.d(), &one_plus_omega);
        assert_eq!(cert.quartic, IntPoly::from_descending(&[1, -1, 3, -1, 1]));
        // order coords of alpha: 1 on the empty set, 1 on {3}.
        assert_eq!(cert.order_coords[3][0], BigInt::from(1));
        assert_eq!(cert.order_coords[3][0b0100], BigInt::from(1));
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn degree4_square_of_smallest() {
        // (-3,1): alpha = 2 + omega, realizing the square of the smallest
        // degree-4 Salem number: ell = 2 log 1.7220838.
        let s = quartic(-3, 1);
        let w = s.sqrt_witness().unwrap();
        let cert = realize_deg4(&s, &w).unwrap();
        let two_plus_omega = Element::omega()
            .add(&Element::scalar_i64(Algebra::c4(), 2))
            .unwrap();
        assert_eq!(cert.matrix.d(), &two_plus_omega);
        assert!((cert.log_lambda - 2.0 * (1.722_083_8f64).ln()).abs() < 1e-5);
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn degree4_even_parity_case() {
        // (-2,-2): l = 4 even, -Delta/4 = 1, doubled squares (2,0,0,0),
        // alpha = 1 + i1.
        let s = quartic(-2, -2);
        let w = s.sqrt_witness().unwrap();
        assert_eq!(w.l, 4);
        let cert = realize_deg4(&s, &w).unwrap();
        assert_eq!(
            cert.matrix.d(),
            &Element::vector_i64(Algebra::c4(), 1, &[1]).unwrap()
        );
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn any_deg4_squares_when_needed() {
        let cert = realize_any_deg4(&quartic(-1, -1)).unwrap();
        assert_eq!(cert.exponent, 2);
        assert_eq!(cert.realized, SalemInput::Quartic(quartic(-3, 1)));
        verify_certificate(&cert).unwrap();
        let cert = realize_any_deg4(&quartic(-1, -3)).unwrap();
        assert_eq!(cert.exponent, 1);
        let cert = realize_any_deg4(&quartic(-2, -5)).unwrap();
        assert_eq!(cert.exponent, 1);
    }

    #[test]
    fn parity_dichotomy() {
        for s in crate::salem::enumerate_salem(8) {
            if let Some(w) = s.sqrt_witness() {
                let md = -w.delta;
                if w.l % 2 == 0 {
                    assert_eq!(md % 4, 0, "({}, {})", s.a(), s.b());
                } else {
                    assert_eq!(md % 4, 3, "({}, {})", s.a(), s.b());
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let cert = realize_any_deg4(&quartic(-1, -3)).unwrap();
        let v = cert.to_json();
        let back = RealizationCertificate::from_json(&v).unwrap();
        assert_eq!(back.to_json(), v);
        // Tampered certificates are rejected.
        let mut bad = v.clone();
        bad["quartic"] = poly_json(&IntPoly::from_descending(&[1, 0, 3, 0, 1]));
        assert!(RealizationCertificate::from_json(&bad).is_err());
        let mut bad = v.clone();
        bad["schema"] = Value::String("salemforge/0".to_string());
        assert!(RealizationCertificate::from_json(&bad).is_err());
    }

    #[test]
    fn group_closure_smoke() {
        // Products of constructed matrices stay Vahlen with exact conditions.
        let c1 = realize_deg2(3).unwrap();
        let c2 = realize_deg4(
            &quartic(-1, -3),
            &quartic(-1, -3).sqrt_witness().unwrap(),
        )
        .unwrap();
        let prod = c1.matrix.mul(&c2.matrix).unwrap();
        assert!(prod.gamma_certified());
    }
}
