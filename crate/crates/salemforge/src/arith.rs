//! Exact integer and rational primitives: factorization at desk scale,
//! squarefree parts, Lagrange four-square decompositions and local Hilbert
//! symbols over the places of Q.
//!
//! Everything here is deterministic. Factorization is trial division with a
//! Pollard-rho (Brent) backstop for cofactors above 10^12; inputs are bounded
//! by [`FACTOR_INPUT_BOUND`] (10^15 by default) since squarefree parts need a
//! full factorization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest absolute value accepted by [`squarefree_part`] and friends.
pub const FACTOR_INPUT_BOUND: u64 = 1_000_000_000_000_000;

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero is not a unit of Q^x")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("|{0}| exceeds the factorization bound {1}")]
    BeyondFactorBound(BigInt, u64),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::BadRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from(n))
        }
    }
}

/// A place of Q: a finite prime or the archimedean place.
///
/// Finite primes are certified by trial division on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    Infinity,
}

impl Place {
    /// A finite place, rejecting composites.
    pub fn finite(p: u64) -> Result<Place, ArithError> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Finite(_))
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "oo"),
        }
    }
}

/// Primality by trial division (desk scale: fine up to ~10^12).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Pollard rho (Brent variant) for odd composite n with no factor below the
/// trial division limit. Deterministic: cycles through fixed parameters.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 && n > 1);
    for c in 1..64u64 {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted parameter schedule for {n}")
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Full factorization of n >= 1, prime factors ascending.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    for p in std::iter::once(2).chain((3..TRIAL_DIVISION_LIMIT).step_by(2)) {
        if p * p > m {
            break;
        }
        while m % p == 0 {
            push(p, &mut out);
            m /= p;
        }
    }
    // Cofactor has no prime below the trial limit: it is 1, prime, or a
    // product of two primes (inputs are bounded by 10^15 < (10^6)^3).
    let mut stack = vec![];
    if m > 1 {
        stack.push(m);
    }
    while let Some(c) = stack.pop() {
        if is_prime(c) {
            push(c, &mut out);
        } else {
            let d = pollard_rho(c);
            stack.push(d);
            stack.push(c / d);
        }
    }
    out.sort_unstable();
    out
}

fn to_bounded_u64(n: &BigInt) -> Result<u64, ArithError> {
    let abs = n.abs();
    match abs.to_u64() {
        Some(v) if v <= FACTOR_INPUT_BOUND => Ok(v),
        _ => Err(ArithError::BeyondFactorBound(n.clone(), FACTOR_INPUT_BOUND)),
    }
}

/// Signed squarefree part of a nonzero integer: d with n/d a rational square.
pub fn squarefree_part_int(n: &BigInt) -> Result<BigInt, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let m = to_bounded_u64(n)?;
    let mut d = 1u64;
    for (p, e) in factor(m) {
        if e % 2 == 1 {
            d *= p;
        }
    }
    let d = BigInt::from(d);
    Ok(if n.is_negative() { -d } else { d })
}

/// Signed squarefree part of a nonzero rational, via numerator x denominator
/// (equal in Q^x / Q^x2).
pub fn squarefree_part(r: &BigRational) -> Result<BigInt, ArithError> {
    if r.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    squarefree_part_int(&(r.numer() * r.denom()))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |rr| rr > n) {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// True if n is a perfect square.
pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

fn descending_squares(n: u64, k: u32, max: u64, out: &mut Vec<u64>) -> bool {
    if k == 1 {
        let r = isqrt(n);
        if r * r == n && r <= max {
            out.push(r);
            return true;
        }
        return false;
    }
    // The largest entry is at least the average, which prunes dead branches
    // without changing which solution is found first.
    let mut first = max.min(isqrt(n));
    loop {
        if (first as u128 * first as u128) * k as u128 >= n as u128 {
            out.push(first);
            if descending_squares(n - first * first, k - 1, first, out) {
                return true;
            }
            out.pop();
        } else {
            return false;
        }
        if first == 0 {
            return false;
        }
        first -= 1;
    }
}

/// Four-square decomposition of n >= 0 with entries in descending order.
///
/// Deterministic: the lexicographically first tuple under the descending
/// greedy search (p1 from floor(sqrt n) downward, then p2 <= p1, ...).
pub fn four_squares(n: u64) -> [u64; 4] {
    let mut out = Vec::with_capacity(4);
    let found = descending_squares(n, 4, n, &mut out);
    debug_assert!(found, "Lagrange: every n >= 0 is a sum of four squares");
    [out[0], out[1], out[2], out[3]]
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Legendre symbol (a/p) for odd prime p: +1, -1, or 0 when p | a.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    let r = ((a % p).to_i64().unwrap() + p as i64) as u64 % p;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut e = 0u32;
    let mut m = n.clone();
    while (&m % &p).is_zero() {
        m /= &p;
        e += 1;
    }
    (e, m)
}

/// epsilon(u) = (u-1)/2 mod 2 for odd u.
fn eps2(u: &BigInt) -> u32 {
    let r = ((u % 4i32 + 4i32) % 4i32).to_u32().unwrap();
    debug_assert!(r % 2 == 1);
    if r == 3 {
        1
    } else {
        0
    }
}

/// omega(u) = (u^2-1)/8 mod 2 for odd u.
fn omega2(u: &BigInt) -> u32 {
    let r = ((u % 8i32 + 8i32) % 8i32).to_u32().unwrap();
    debug_assert!(r % 2 == 1);
    if r == 1 || r == 7 {
        0
    } else {
        1
    }
}

fn hilbert_symbol_int(a: &BigInt, b: &BigInt, v: &Place) -> i32 {
    match *v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = valuation(a, 2);
            let (beta, w) = valuation(b, 2);
            let e = eps2(&u) * eps2(&w) + alpha * omega2(&w) + beta * omega2(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = valuation(a, p);
            let (beta, w) = valuation(b, p);
            let mut s = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    }
}

/// Local Hilbert symbol (a,b)_v over the completion of Q at v.
///
/// Rational arguments reduce to numerator x denominator, which is valid
/// modulo squares.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: &Place) -> Result<i32, ArithError> {
    if a.is_zero() || b.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let ia = a.numer() * a.denom();
    let ib = b.numer() * b.denom();
    Ok(hilbert_symbol_int(&ia, &ib, v))
}

/// The finite places where the symbol could be nontrivial: 2 and the odd
/// primes dividing numerator or denominator of either argument.
pub fn symbol_support(a: &BigRational, b: &BigRational) -> Result<Vec<Place>, ArithError> {
    if a.is_zero() || b.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let mut primes = vec![2u64];
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        let m = to_bounded_u64(n)?;
        for (p, _) in factor(m) {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    primes.sort_unstable();
    let mut places: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    Ok(places)
}
