//! Exact Clifford algebras C(q) for diagonal rational quadratic forms.
//!
//! Elements are sparse maps from blade bitmasks to nonzero rationals: bit
//! nu-1 of a mask means generator nu is present, and the blade is the product
//! of its generators in ascending order. The two algebras this crate uses are
//! `C4` (four generators squaring to -1, the home of the Vahlen matrices) and
//! `Q6` (signature +1,-1,...,-1 on seven generators f0,f1,f2,i1..i4, the home
//! of the spin group).
//!
//! The order `Q` of C4(Q) is spanned over Z by the products of
//! x1 = i1, x2 = i2, x3 = omega = (-1+i1+i2+i3)/2, x4 = i4; membership
//! testing goes through the cached 16x16 change of basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, LazyLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not a vector (support outside scalar + generators)")]
    NotAVector,
    #[error("vector has norm zero and no inverse")]
    ZeroNorm,
    #[error("generator index {0} out of range for this algebra")]
    BadGenerator(usize),
    #[error("element does not lie in C4(Q)")]
    NotC4,
    #[error(transparent)]
    Arith(#[from] crate::arith::ArithError),
}

/// A diagonal quadratic form: the value of q on each generator.
#[derive(Debug, PartialEq, Eq)]
pub struct Algebra {
    squares: Vec<BigRational>,
    labels: Vec<&'static str>,
}

fn minus_one() -> BigRational {
    -BigRational::one()
}

static C4: LazyLock<Arc<Algebra>> = LazyLock::new(|| {
    Arc::new(Algebra {
        squares: vec![minus_one(), minus_one(), minus_one(), minus_one()],
        labels: vec!["i1", "i2", "i3", "i4"],
    })
});

static Q6: LazyLock<Arc<Algebra>> = LazyLock::new(|| {
    Arc::new(Algebra {
        squares: vec![
            BigRational::one(),
            minus_one(),
            minus_one(),
            minus_one(),
            minus_one(),
            minus_one(),
            minus_one(),
        ],
        labels: vec!["f0", "f1", "f2", "i1", "i2", "i3", "i4"],
    })
});

impl Algebra {
    /// C4(Q): generators i1..i4 with i_nu^2 = -1.
    pub fn c4() -> Arc<Algebra> {
        C4.clone()
    }

    /// C(q6): generators f0,f1,f2,i1..i4 with f0^2 = 1, the rest -1.
    pub fn q6() -> Arc<Algebra> {
        Q6.clone()
    }

    pub fn generator_count(&self) -> usize {
        self.squares.len()
    }

    pub fn generator_square(&self, idx: usize) -> &BigRational {
        &self.squares[idx]
    }

    fn dim(&self) -> u32 {
        1 << self.squares.len()
    }
}

/// Number of transpositions (mod 2 matters) needed to merge the generator
/// lists of two blades: pairs (alpha in a, beta in b) with alpha > beta.
pub(crate) fn reorder_swaps(a: u32, b: u32) -> u32 {
    let mut shifted = a >> 1;
    let mut count = 0;
    while shifted != 0 {
        count += (shifted & b).count_ones();
        shifted >>= 1;
    }
    count
}

/// Sparse element of a Clifford algebra.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coeffs: BTreeMap<u32, BigRational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(algebra: Arc<Algebra>) -> Element {
        Element {
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(algebra: Arc<Algebra>, c: BigRational) -> Element {
        let mut e = Element::zero(algebra);
        e.set(0, c);
        e
    }

    pub fn scalar_i64(algebra: Arc<Algebra>, c: i64) -> Element {
        Element::scalar(algebra, BigRational::from(BigInt::from(c)))
    }

    pub fn one(algebra: Arc<Algebra>) -> Element {
        Element::scalar_i64(algebra, 1)
    }

    /// The generator with 1-based index nu.
    pub fn generator(algebra: Arc<Algebra>, nu: usize) -> Result<Element, CliffordError> {
        if nu == 0 || nu > algebra.generator_count() {
            return Err(CliffordError::BadGenerator(nu));
        }
        let mut e = Element::zero(algebra);
        e.set(1 << (nu - 1), BigRational::one());
        Ok(e)
    }

    /// Blade for an explicit bitmask with coefficient one.
    pub fn blade(algebra: Arc<Algebra>, mask: u32) -> Result<Element, CliffordError> {
        if mask >= algebra.dim() {
            return Err(CliffordError::BadGenerator(mask as usize));
        }
        let mut e = Element::zero(algebra);
        e.set(mask, BigRational::one());
        Ok(e)
    }

    /// a0 + a1 i1 + ... in the given algebra.
    pub fn vector(
        algebra: Arc<Algebra>,
        scalar: BigRational,
        coords: &[BigRational],
    ) -> Result<Element, CliffordError> {
        if coords.len() > algebra.generator_count() {
            return Err(CliffordError::BadGenerator(coords.len()));
        }
        let mut e = Element::zero(algebra);
        e.set(0, scalar);
        for (i, c) in coords.iter().enumerate() {
            e.set(1 << i, c.clone());
        }
        Ok(e)
    }

    pub fn vector_i64(
        algebra: Arc<Algebra>,
        scalar: i64,
        coords: &[i64],
    ) -> Result<Element, CliffordError> {
        let s = BigRational::from(BigInt::from(scalar));
        let v: Vec<BigRational> = coords
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect();
        Element::vector(algebra, s, &v)
    }

    /// omega = (-1 + i1 + i2 + i3) / 2 in C4(Q).
    pub fn omega() -> Element {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut e = Element::zero(Algebra::c4());
        e.set(0, -half.clone());
        e.set(0b0001, half.clone());
        e.set(0b0010, half.clone());
        e.set(0b0100, half);
        e
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    fn set(&mut self, mask: u32, c: BigRational) {
        if c.is_zero() {
            self.coeffs.remove(&mask);
        } else {
            self.coeffs.insert(mask, c);
        }
    }

    fn add_to(&mut self, mask: u32, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(mask) + c;
        self.set(mask, v);
    }

    pub fn coeff(&self, mask: u32) -> BigRational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scalar_part(&self) -> BigRational {
        self.coeff(0)
    }

    /// The nonzero (mask, coefficient) pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs.keys().all(|&m| m == 0)
    }

    /// Support contained in scalar + single generators.
    pub fn is_vector(&self) -> bool {
        self.coeffs.keys().all(|&m| m.count_ones() <= 1)
    }

    /// Support contained in single generators (no scalar part).
    pub fn is_pure_vector(&self) -> bool {
        !self.coeffs.contains_key(&0) && self.is_vector()
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|&m| m.count_ones() % 2 == 0)
    }

    fn check_same(&self, other: &Element) -> Result<(), CliffordError> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(CliffordError::AlgebraMismatch)
        }
    }

    pub fn neg(&self) -> Element {
        let mut out = Element::zero(self.algebra.clone());
        for (m, c) in &self.coeffs {
            out.set(*m, -c.clone());
        }
        out
    }

    pub fn add(&self, other: &Element) -> Result<Element, CliffordError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_to(*m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, CliffordError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Element {
        let mut out = Element::zero(self.algebra.clone());
        for (m, v) in &self.coeffs {
            out.set(*m, v * c);
        }
        out
    }

    /// The Clifford product. Blade times blade picks up (-1)^swaps and the
    /// generator squares over the common generators.
    pub fn mul(&self, other: &Element) -> Result<Element, CliffordError> {
        self.check_same(other)?;
        let mut out = Element::zero(self.algebra.clone());
        for (&ma, ca) in &self.coeffs {
            for (&mb, cb) in &other.coeffs {
                let mut c = ca * cb;
                if reorder_swaps(ma, mb) % 2 == 1 {
                    c = -c;
                }
                let mut common = ma & mb;
                while common != 0 {
                    let bit = common.trailing_zeros();
                    c *= &self.algebra.squares[bit as usize];
                    common &= common - 1;
                }
                out.add_to(ma ^ mb, &c);
            }
        }
        Ok(out)
    }

    /// Reversion: blades pick up (-1)^(k(k-1)/2), k the grade.
    pub fn reversion(&self) -> Element {
        let mut out = Element::zero(self.algebra.clone());
        for (&m, c) in &self.coeffs {
            let k = m.count_ones();
            let sign = (k * (k.saturating_sub(1)) / 2) % 2;
            out.set(m, if sign == 1 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Grade involution: odd-grade blades are negated.
    pub fn grade_involution(&self) -> Element {
        let mut out = Element::zero(self.algebra.clone());
        for (&m, c) in &self.coeffs {
            let sign = m.count_ones() % 2;
            out.set(m, if sign == 1 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Clifford conjugation: grade involution followed by reversion.
    pub fn conjugation(&self) -> Element {
        self.grade_involution().reversion()
    }

    /// Trace of a vector: v + conj(v) = 2 a0.
    pub fn vector_trace(&self) -> Result<BigRational, CliffordError> {
        if !self.is_vector() {
            return Err(CliffordError::NotAVector);
        }
        Ok(self.scalar_part() * BigRational::from(BigInt::from(2)))
    }

    /// Norm of a vector: v * conj(v), always a scalar.
    pub fn vector_norm(&self) -> Result<BigRational, CliffordError> {
        if !self.is_vector() {
            return Err(CliffordError::NotAVector);
        }
        let prod = self.mul(&self.conjugation()).expect("same algebra");
        debug_assert!(prod.is_scalar(), "v * conj(v) must be scalar");
        Ok(prod.scalar_part())
    }

    /// Inverse of a vector with nonzero norm: conj(v) / Norm(v).
    pub fn vector_inverse(&self) -> Result<Element, CliffordError> {
        let n = self.vector_norm()?;
        if n.is_zero() {
            return Err(CliffordError::ZeroNorm);
        }
        Ok(self.conjugation().scale(&n.recip()))
    }

    /// Every vector satisfies v^2 - tr(v) v + Norm(v) = 0.
    pub fn vector_quadratic_holds(&self) -> Result<bool, CliffordError> {
        let t = self.vector_trace()?;
        let n = self.vector_norm()?;
        let sq = self.mul(self).expect("same algebra");
        let lin = self.scale(&t);
        let cst = Element::scalar(self.algebra.clone(), n);
        let lhs = sq.sub(&lin)?.add(&cst)?;
        Ok(lhs.is_zero())
    }

    /// Serialization form: 1-based generator index lists with rational strings.
    pub fn to_text_pairs(&self) -> Vec<(Vec<usize>, String)> {
        self.coeffs
            .iter()
            .map(|(&m, c)| {
                let idx = (0..32).filter(|b| m & (1 << b) != 0).map(|b| b + 1).collect();
                (idx, c.to_string())
            })
            .collect()
    }

    pub fn from_text_pairs(
        algebra: Arc<Algebra>,
        pairs: &[(Vec<usize>, String)],
    ) -> Result<Element, CliffordError> {
        let mut e = Element::zero(algebra.clone());
        for (idx, lit) in pairs {
            let mut mask = 0u32;
            for &nu in idx {
                if nu == 0 || nu > algebra.generator_count() {
                    return Err(CliffordError::BadGenerator(nu));
                }
                mask |= 1 << (nu - 1);
            }
            let c = crate::arith::parse_rational(lit)?;
            e.add_to(mask, &c);
        }
        Ok(e)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let blade: String = (0..32)
                .filter(|b| m & (1 << b) != 0)
                .map(|b| self.algebra.labels[b as usize])
                .collect::<Vec<_>>()
                .join("*");
            if blade.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "({mag})*{blade}")?;
            }
        }
        Ok(())
    }
}

/// The order Q in C4(Q): Z-span of the products x_I of x1 = i1, x2 = i2,
/// x3 = omega, x4 = i4, I running over subsets of {1,2,3,4} in binary order.
pub struct OrderQ {
    basis: Vec<Element>,
    // Rows map blade coordinates to x_I coordinates.
    inverse: Vec<Vec<BigRational>>,
}

static ORDER_Q: LazyLock<OrderQ> = LazyLock::new(OrderQ::build);

impl OrderQ {
    pub fn get() -> &'static OrderQ {
        &ORDER_Q
    }

    fn build() -> OrderQ {
        let alg = Algebra::c4();
        let gens: Vec<Element> = vec![
            Element::generator(alg.clone(), 1).unwrap(),
            Element::generator(alg.clone(), 2).unwrap(),
            Element::omega(),
            Element::generator(alg.clone(), 4).unwrap(),
        ];
        let mut basis = Vec::with_capacity(16);
        for mask in 0u32..16 {
            let mut prod = Element::one(alg.clone());
            for bit in 0..4 {
                if mask & (1 << bit) != 0 {
                    prod = prod.mul(&gens[bit]).unwrap();
                }
            }
            basis.push(prod);
        }
        // Column J of the change-of-basis matrix is x_J in blade coordinates.
        let mut m = vec![vec![BigRational::zero(); 16]; 16];
        for (j, b) in basis.iter().enumerate() {
            for (mask, c) in b.terms() {
                m[mask as usize][j] = c.clone();
            }
        }
        let inverse = invert_matrix(m).expect("the x_I form a basis of C4(Q)");
        OrderQ { basis, inverse }
    }

    /// The basis element x_I for a subset mask (bit k-1 means x_k occurs).
    pub fn basis_element(&self, mask: u32) -> &Element {
        &self.basis[mask as usize]
    }

    /// Coordinates of a C4(Q) element in the x_I basis.
    pub fn coordinates(&self, e: &Element) -> Result<Vec<BigRational>, CliffordError> {
        if *e.algebra() != Algebra::c4() {
            return Err(CliffordError::NotC4);
        }
        let mut v = vec![BigRational::zero(); 16];
        for (mask, c) in e.terms() {
            v[mask as usize] = c.clone();
        }
        Ok((0..16)
            .map(|i| {
                (0..16)
                    .map(|j| &self.inverse[i][j] * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect())
    }

    /// Membership in the order: integral coordinates.
    pub fn is_member(&self, e: &Element) -> Result<bool, CliffordError> {
        Ok(self.coordinates(e)?.iter().all(|c| c.is_integer()))
    }
}

/// Gauss-Jordan inverse over Q; None for singular input.
fn invert_matrix(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = m[col][col].recip();
        for j in 0..n {
            m[col][j] *= &scale;
            inv[col][j] *= &scale;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in 0..n {
                    let mv = &m[col][j] * &factor;
                    m[r][j] -= mv;
                    let iv = &inv[col][j] * &factor;
                    inv[r][j] -= iv;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn gen4(nu: usize) -> Element {
        Element::generator(Algebra::c4(), nu).unwrap()
    }

    #[test]
    fn generator_squares() {
        let i1 = gen4(1);
        assert_eq!(i1.mul(&i1).unwrap(), Element::scalar_i64(Algebra::c4(), -1));
        let f0 = Element::generator(Algebra::q6(), 1).unwrap();
        assert_eq!(f0.mul(&f0).unwrap(), Element::scalar_i64(Algebra::q6(), 1));
    }

    #[test]
    fn omega_satisfies_its_quadratic() {
        // omega = (-1 + i1 + i2 + i3)/2 is a primitive cube root of unity:
        // omega^2 + omega + 1 = 0, hence Z[omega] is a ring.
        let w = Element::omega();
        let sq = w.mul(&w).unwrap();
        let expect = w.neg().sub(&Element::one(Algebra::c4())).unwrap();
        assert_eq!(sq, expect);
        let cube = sq.mul(&w).unwrap();
        assert_eq!(cube, Element::one(Algebra::c4()));
    }

    #[test]
    fn anticommutation() {
        let i1 = gen4(1);
        let i2 = gen4(2);
        let a = i1.mul(&i2).unwrap();
        let b = i2.mul(&i1).unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn involution_signs() {
        let i1i2 = gen4(1).mul(&gen4(2)).unwrap();
        assert_eq!(i1i2.reversion(), i1i2.neg());
        let c = Element::scalar_i64(Algebra::c4(), 7);
        assert_eq!(c.reversion(), c);
        assert_eq!(c.grade_involution(), c);
        assert_eq!(c.conjugation(), c);
        // bar on a vector flips the generator part only.
        let v = Element::vector_i64(Algebra::c4(), 3, &[2, 0, 1, 0]).unwrap();
        let bar = v.conjugation();
        assert_eq!(bar.scalar_part(), rat(3, 1));
        assert_eq!(bar.coeff(0b0001), rat(-2, 1));
        assert_eq!(bar.coeff(0b0100), rat(-1, 1));
    }

    #[test]
    fn reversion_is_anti_automorphism() {
        let x = gen4(1)
            .mul(&gen4(2))
            .unwrap()
            .add(&Element::scalar_i64(Algebra::c4(), 3))
            .unwrap();
        let y = gen4(3).add(&gen4(1)).unwrap();
        let lhs = x.mul(&y).unwrap().reversion();
        let rhs = y.reversion().mul(&x.reversion()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_data_examples() {
        let v = Element::vector_i64(Algebra::c4(), 0, &[2, 1]).unwrap();
        assert_eq!(v.vector_trace().unwrap(), rat(0, 1));
        assert_eq!(v.vector_norm().unwrap(), rat(5, 1));
        let one = Element::one(Algebra::c4());
        assert_eq!(one.vector_trace().unwrap(), rat(2, 1));
        assert_eq!(one.vector_norm().unwrap(), rat(1, 1));
        assert_eq!(one.vector_inverse().unwrap(), one);
        let w = Element::omega();
        assert!(w.is_vector());
        assert_eq!(w.vector_trace().unwrap(), rat(-1, 1));
        assert_eq!(w.vector_norm().unwrap(), rat(1, 1));
        assert!(w.vector_quadratic_holds().unwrap());
        let z = Element::zero(Algebra::c4());
        assert_eq!(z.vector_inverse(), Err(CliffordError::ZeroNorm));
        let not_vec = gen4(1).mul(&gen4(2)).unwrap();
        assert_eq!(not_vec.vector_trace(), Err(CliffordError::NotAVector));
    }

    #[test]
    fn order_coordinates_examples() {
        let q = OrderQ::get();
        let w = Element::omega();
        let coords = q.coordinates(&w).unwrap();
        assert_eq!(coords[0b0100], BigRational::one());
        assert!(coords.iter().enumerate().all(|(i, c)| i == 0b0100 || c.is_zero()));
        assert!(q.is_member(&w).unwrap());

        // (l - 2 + i1 + i2 + i3)/2 with l = 3 is 1 + omega.
        let alpha = Element::vector(
            Algebra::c4(),
            rat(1, 2),
            &[rat(1, 2), rat(1, 2), rat(1, 2)],
        )
        .unwrap();
        let coords = q.coordinates(&alpha).unwrap();
        assert_eq!(coords[0], BigRational::one());
        assert_eq!(coords[0b0100], BigRational::one());
        assert!(q.is_member(&alpha).unwrap());

        let half_i1 = Element::vector(Algebra::c4(), rat(0, 1), &[rat(1, 2)]).unwrap();
        assert!(!q.is_member(&half_i1).unwrap());
    }

    #[test]
    fn order_is_a_star_closed_ring() {
        let q = OrderQ::get();
        for i in 0u32..16 {
            let xi = q.basis_element(i).clone();
            assert!(q.is_member(&xi.reversion()).unwrap(), "x_{i}* outside Q");
            for j in 0u32..16 {
                let prod = xi.mul(q.basis_element(j)).unwrap();
                assert!(q.is_member(&prod).unwrap(), "x_{i} * x_{j} outside Q");
            }
        }
    }

    #[test]
    fn i3_lies_in_the_order() {
        // i3 = 1 - i1 - i2 + 2 omega
        let q = OrderQ::get();
        let coords = q.coordinates(&gen4(3)).unwrap();
        assert_eq!(coords[0], rat(1, 1));
        assert_eq!(coords[0b0001], rat(-1, 1));
        assert_eq!(coords[0b0010], rat(-1, 1));
        assert_eq!(coords[0b0100], rat(2, 1));
        assert!(q.is_member(&gen4(3)).unwrap());
    }

    #[test]
    fn text_pairs_round_trip() {
        let w = Element::omega();
        let pairs = w.to_text_pairs();
        let back = Element::from_text_pairs(Algebra::c4(), &pairs).unwrap();
        assert_eq!(w, back);
        assert!(pairs.contains(&(vec![], "-1/2".to_string())));
        assert!(pairs.contains(&(vec![1], "1/2".to_string())));
    }

    #[test]
    fn algebra_mismatch_is_rejected() {
        let a = Element::one(Algebra::c4());
        let b = Element::one(Algebra::q6());
        assert_eq!(a.mul(&b), Err(CliffordError::AlgebraMismatch));
    }

    #[test]
    fn associativity_on_random_sparse_triples() {
        // Deterministic pseudo-random sparse elements.
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for algebra in [Algebra::c4(), Algebra::q6()] {
            for _ in 0..40 {
                let mut make = |alg: &Arc<Algebra>| {
                    let mut e = Element::zero(alg.clone());
                    for _ in 0..4 {
                        let mask = (next() % alg.dim() as u64) as u32;
                        let num = (next() % 11) as i64 - 5;
                        let den = (next() % 4) as i64 + 1;
                        e.add_to(mask, &rat(num, den));
                    }
                    e
                };
                let (x, y, z) = (make(&algebra), make(&algebra), make(&algebra));
                let left = x.mul(&y).unwrap().mul(&z).unwrap();
                let right = x.mul(&y.mul(&z).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn vectors_satisfy_their_quadratic() {
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for _ in 0..25 {
            let v = Element::vector_i64(
                Algebra::c4(),
                next() % 7 - 3,
                &[next() % 7 - 3, next() % 7 - 3, next() % 7 - 3, next() % 7 - 3],
            )
            .unwrap();
            assert!(v.vector_quadratic_holds().unwrap());
        }
    }
}
