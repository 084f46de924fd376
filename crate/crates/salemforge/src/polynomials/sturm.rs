//! Sturm chains: exact real-root counting and isolation with rational
//! interval endpoints.
//!
//! The chain is built on the squarefree part of the input, so counts are of
//! distinct real roots. Intervals are half-open (lo, hi]; isolation splits at
//! exact rational midpoints and refinement bisects down to any requested
//! width (default 2^-40 in the callers).

use super::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sturm chain of the squarefree part of an integer polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> SturmChain {
        let f = f.to_rat().squarefree_part();
        let mut chain = vec![f.clone()];
        if f.degree().map_or(false, |d| d >= 1) {
            chain.push(f.derivative());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        SturmChain { chain }
    }

    /// The squarefree polynomial the chain was built from.
    pub fn polynomial(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn sign_changes_at(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| {
                let v = p.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// A bound B with all real roots in (-B, B): Cauchy's 1 + max |c_i| / |lc|.
    pub fn root_bound(&self) -> BigRational {
        let f = &self.chain[0];
        match f.degree() {
            None | Some(0) => BigRational::one(),
            Some(d) => {
                let lc = f.coeff(d).abs();
                let mx = (0..d)
                    .map(|i| f.coeff(i).abs())
                    .max()
                    .unwrap_or_else(BigRational::zero);
                BigRational::one() + mx / lc
            }
        }
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.sign_changes_at(lo) - self.sign_changes_at(hi)
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        if self.chain[0].degree().map_or(true, |d| d == 0) {
            return 0;
        }
        let b = self.root_bound();
        self.count_in(&-b.clone(), &b)
    }

    /// Number of distinct real roots strictly above the given point.
    pub fn count_above(&self, lo: &BigRational) -> usize {
        let b = self.root_bound();
        if *lo >= b {
            return 0;
        }
        self.count_in(lo, &b)
    }

    /// Disjoint half-open isolating intervals, ascending, one real root each.
    /// A rational root can sit exactly at its interval's right endpoint.
    pub fn isolate_all(&self) -> Vec<(BigRational, BigRational)> {
        let mut out = Vec::new();
        if self.chain[0].degree().map_or(true, |d| d == 0) {
            return out;
        }
        let b = self.root_bound();
        self.isolate_rec(&-b.clone(), &b, &mut out);
        out
    }

    fn isolate_rec(
        &self,
        lo: &BigRational,
        hi: &BigRational,
        out: &mut Vec<(BigRational, BigRational)>,
    ) {
        let n = self.count_in(lo, hi);
        if n == 0 {
            return;
        }
        if n == 1 {
            out.push((lo.clone(), hi.clone()));
            return;
        }
        let mid = self.split_point(lo, hi);
        self.isolate_rec(lo, &mid, out);
        self.isolate_rec(&mid, hi, out);
    }

    fn split_point(&self, lo: &BigRational, hi: &BigRational) -> BigRational {
        (lo + hi) / BigRational::from(BigInt::from(2))
    }

    /// Shrink an isolating interval below the given width by bisection.
    pub fn refine(
        &self,
        interval: (BigRational, BigRational),
        width: &BigRational,
    ) -> (BigRational, BigRational) {
        let (mut lo, mut hi) = interval;
        if lo == hi {
            return (lo, hi);
        }
        debug_assert_eq!(self.count_in(&lo, &hi), 1);
        while &hi - &lo > *width {
            let mid = self.split_point(&lo, &hi);
            if self.count_in(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo, hi)
    }

    /// Isolate and refine the largest real root, if any.
    pub fn largest_root(&self, width: &BigRational) -> Option<(BigRational, BigRational)> {
        let intervals = self.isolate_all();
        let last = intervals.into_iter().next_back()?;
        Some(self.refine(last, width))
    }
}

/// Width 2^-40, the default refinement target.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1u64 << 40))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending(desc)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_match_examples() {
        assert_eq!(SturmChain::new(&poly(&[1, -3, 1])).count_all(), 2);
        assert_eq!(SturmChain::new(&poly(&[1, -1, 3, -1, 1])).count_all(), 0);
        let chain = SturmChain::new(&poly(&[1, -1, -3, -1, 1]));
        assert_eq!(chain.count_all(), 2);
        assert_eq!(chain.count_above(&BigRational::one()), 1);
    }

    #[test]
    fn isolates_salem_root() {
        // Largest root of x^4 - x^3 - 3x^2 - x + 1 is about 2.3692.
        let chain = SturmChain::new(&poly(&[1, -1, -3, -1, 1]));
        let (lo, hi) = chain.largest_root(&rat(1, 1 << 20)).unwrap();
        assert!(lo <= hi);
        assert!(lo > rat(23, 10) && hi < rat(24, 10));
        let approx = 2.369205407;
        let lo_f = lo.numer().to_string().parse::<f64>().unwrap()
            / lo.denom().to_string().parse::<f64>().unwrap();
        assert!((lo_f - approx).abs() < 1e-4);
    }

    #[test]
    fn repeated_and_rational_roots() {
        // (x-1)^2 (x+2): squarefree part has roots 1 and -2.
        let f = poly(&[1, -1]).mul(&poly(&[1, -1])).mul(&poly(&[1, 2]));
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_all(), 2);
        let iso = chain.isolate_all();
        assert_eq!(iso.len(), 2);
    }

    #[test]
    fn exact_root_at_split_point() {
        // Roots -1, 0, 1: the midpoint of the initial interval is 0 exactly,
        // so one isolating interval ends at its root.
        let f = poly(&[1, 0, -1, 0]);
        let chain = SturmChain::new(&f);
        let iso = chain.isolate_all();
        assert_eq!(iso.len(), 3);
        assert!(iso.iter().any(|(_, b)| b.is_zero()));
        // Refinement keeps the root inside the shrinking interval.
        let z = iso.iter().find(|(_, b)| b.is_zero()).unwrap().clone();
        let (lo, hi) = chain.refine(z, &rat(1, 1024));
        assert!(&hi - &lo <= rat(1, 1024));
        assert!(hi.is_zero());
    }

    #[test]
    fn interval_counts_are_half_open() {
        let chain = SturmChain::new(&poly(&[1, -1])); // root at 1
        assert_eq!(chain.count_in(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(chain.count_in(&rat(1, 1), &rat(2, 1)), 0);
    }
}
