//! Representations of a Hopf algebra and the word calculus.
//!
//! A [`Representation`] stores the images of the basis elements as matrices.
//! Words over the alphabet `a_0, a_1, ...` (letter `a_k` = the k-fold dual)
//! act by [`Representation::word_rep`]: the empty word is the trivial module,
//! a single letter `a_k` is the k-fold dual, and concatenation is the tensor
//! product through the comultiplication.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{HopfAlgebraData, HopfError};
use crate::linalg::{self, LinalgError, Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    /// Number of matrices differs from the algebra dimension.
    BadMatrixCount {
        expected: usize,
        got: usize,
    },
    /// A matrix is not n x n.
    BadMatrixShape {
        index: usize,
        rows: usize,
        cols: usize,
    },
    /// Module dimension must be at least 1.
    ZeroDimension,
    /// Combinator operands represent different algebras.
    AlgebraMismatch,
    Hopf(HopfError),
    Linalg(LinalgError),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::BadMatrixCount { expected, got } => {
                write!(f, "expected {expected} matrices, got {got}")
            }
            RepError::BadMatrixShape { index, rows, cols } => {
                write!(
                    f,
                    "matrix {index} is {rows}x{cols}, expected square of the module dimension"
                )
            }
            RepError::ZeroDimension => write!(f, "module dimension must be at least 1"),
            RepError::AlgebraMismatch => write!(f, "representations belong to different algebras"),
            RepError::Hopf(e) => write!(f, "{e}"),
            RepError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RepError {}

impl From<HopfError> for RepError {
    fn from(e: HopfError) -> Self {
        RepError::Hopf(e)
    }
}

impl From<LinalgError> for RepError {
    fn from(e: LinalgError) -> Self {
        RepError::Linalg(e)
    }
}

/// Verdicts of the representation axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepReport {
    pub multiplicative: bool,
    /// First basis pair (i, j) with pi(e_i e_j) != pi(e_i) pi(e_j).
    pub first_mult_failure: Option<[usize; 2]>,
    pub unital: bool,
}

impl RepReport {
    pub fn passes(&self) -> bool {
        self.multiplicative && self.unital
    }
}

/// A word in the free monoid on letters `a_0, a_1, ...`; the letter value k
/// means the k-fold dual. Letters are stored reduced modulo the antipode
/// order, under which the dual actions repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: vec![] }
    }

    /// Build a word, reducing each letter modulo the antipode order t.
    pub fn new(letters: impl IntoIterator<Item = usize>, antipode_order: usize) -> Word {
        debug_assert!(antipode_order >= 1);
        Word {
            letters: letters.into_iter().map(|k| k % antipode_order).collect(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "a{k}")?;
        }
        Ok(())
    }
}

/// A representation of H: matrices `mats[i]` = image of basis element e_i.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<HopfAlgebraData>,
    dim: usize,
    mats: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(module dim {}, algebra dim {})",
            self.dim,
            self.algebra.dim()
        )
    }
}

impl Representation {
    pub fn new(algebra: Arc<HopfAlgebraData>, mats: Vec<Matrix>) -> Result<Self, RepError> {
        let d = algebra.dim();
        if mats.len() != d {
            return Err(RepError::BadMatrixCount {
                expected: d,
                got: mats.len(),
            });
        }
        let n = mats[0].rows();
        if n == 0 {
            return Err(RepError::ZeroDimension);
        }
        for (index, m) in mats.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(RepError::BadMatrixShape {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        Ok(Representation {
            algebra,
            dim: n,
            mats,
        })
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebraData> {
        &self.algebra
    }

    /// Module dimension n.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// Image of an element given by coordinates: sum_i x_i pi(e_i).
    pub fn apply(&self, x: &[Scalar]) -> Matrix {
        let k = self.algebra.field();
        debug_assert_eq!(x.len(), self.algebra.dim());
        let mut out = Matrix::zero(k, self.dim, self.dim);
        for (xi, m) in x.iter().zip(&self.mats) {
            if xi.is_zero() {
                continue;
            }
            out = out.add(k, &m.scale(k, xi)).expect("uniform shapes");
        }
        out
    }

    /// Check multiplicativity on all basis pairs and the unit law.
    pub fn verify(&self) -> RepReport {
        let h = &self.algebra;
        let k = h.field();
        let d = h.dim();
        let mut multiplicative = true;
        let mut first = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let lhs = self.mats[i].mul(k, &self.mats[j]).expect("square matrices");
                let mut rhs = Matrix::zero(k, self.dim, self.dim);
                for l in 0..d {
                    let c = h.mult_coeff(i, j, l);
                    if !c.is_zero() {
                        rhs = rhs
                            .add(k, &self.mats[l].scale(k, c))
                            .expect("uniform shapes");
                    }
                }
                if lhs != rhs {
                    multiplicative = false;
                    first = Some([i, j]);
                    break 'outer;
                }
            }
        }
        let unital = self.apply(h.unit_vec()).is_identity();
        RepReport {
            multiplicative,
            first_mult_failure: first,
            unital,
        }
    }

    /// Kernel of the linear extension: {x : sum_i x_i pi(e_i) = 0}, as a
    /// subspace of H. Flattened entry (p, q) is row p*n + q of the rank
    /// computation.
    pub fn kernel(&self) -> Subspace {
        let k = self.algebra.field();
        let d = self.algebra.dim();
        let n = self.dim;
        let m = Matrix::from_fn(n * n, d, |row, i| self.mats[i].at(row / n, row % n).clone());
        linalg::kernel(k, &m)
    }

    /// The 1-dimensional module through the counit.
    pub fn trivial(algebra: Arc<HopfAlgebraData>) -> Representation {
        let mats = algebra
            .counit_vec()
            .iter()
            .map(|c| Matrix::from_rows(vec![vec![c.clone()]]).expect("1x1"))
            .collect();
        Representation {
            algebra,
            dim: 1,
            mats,
        }
    }

    /// Left multiplication on H itself; faithful.
    pub fn regular(algebra: Arc<HopfAlgebraData>) -> Representation {
        let k = algebra.field();
        let d = algebra.dim();
        let mats = (0..d)
            .map(|i| {
                let mut e = vec![k.zero(); d];
                e[i] = k.one();
                algebra.left_mult_matrix(&e)
            })
            .collect();
        Representation {
            algebra,
            dim: d,
            mats,
        }
    }

    /// Dual module: pi*(e_i) = transpose of pi(S(e_i)).
    pub fn dual(&self) -> Representation {
        let h = &self.algebra;
        let k = h.field();
        let d = h.dim();
        let s = h.antipode_matrix();
        let mats = (0..d)
            .map(|i| {
                let mut m = Matrix::zero(k, self.dim, self.dim);
                for j in 0..d {
                    let c = s.at(j, i);
                    if !c.is_zero() {
                        m = m.add(k, &self.mats[j].scale(k, c)).expect("uniform shapes");
                    }
                }
                m.transpose()
            })
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            dim: self.dim,
            mats,
        }
    }

    /// Tensor product through the comultiplication, index (a, b) -> a n' + b.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        self.check_same_algebra(other)?;
        let h = &self.algebra;
        let k = h.field();
        let d = h.dim();
        let n = self.dim * other.dim;
        let mats = (0..d)
            .map(|i| {
                let mut m = Matrix::zero(k, n, n);
                for j in 0..d {
                    for l in 0..d {
                        let c = h.comult_coeff(i, j, l);
                        if c.is_zero() {
                            continue;
                        }
                        let block = self.mats[j].kronecker(k, &other.mats[l]);
                        m = m.add(k, &block.scale(k, c)).expect("uniform shapes");
                    }
                }
                m
            })
            .collect();
        Ok(Representation {
            algebra: self.algebra.clone(),
            dim: n,
            mats,
        })
    }

    /// Direct product (block diagonal); kernel = intersection of kernels.
    pub fn product(&self, other: &Representation) -> Result<Representation, RepError> {
        self.check_same_algebra(other)?;
        let k = self.algebra.field();
        let d = self.algebra.dim();
        let n = self.dim + other.dim;
        let mats = (0..d)
            .map(|i| {
                Matrix::from_fn(n, n, |p, q| {
                    if p < self.dim && q < self.dim {
                        self.mats[i].at(p, q).clone()
                    } else if p >= self.dim && q >= self.dim {
                        other.mats[i].at(p - self.dim, q - self.dim).clone()
                    } else {
                        k.zero()
                    }
                })
            })
            .collect();
        Ok(Representation {
            algebra: self.algebra.clone(),
            dim: n,
            mats,
        })
    }

    /// The module V^w: empty word = trivial, letter a_k = k-fold dual,
    /// concatenation = tensor product.
    pub fn word_rep(&self, word: &Word) -> Representation {
        let mut duals: Vec<Representation> = vec![self.clone()];
        let mut acc: Option<Representation> = None;
        for &letter in word.letters() {
            while duals.len() <= letter {
                let next = duals.last().expect("nonempty").dual();
                duals.push(next);
            }
            let factor = &duals[letter];
            acc = Some(match acc {
                None => factor.clone(),
                Some(prev) => prev.tensor(factor).expect("same algebra"),
            });
        }
        acc.unwrap_or_else(|| Representation::trivial(self.algebra.clone()))
    }

    /// True iff the linear extension is injective on every skew-primitive
    /// space P_{g,1} for the listed group-likes. The caller asserts the list
    /// is all of Gr(H).
    pub fn pointed_criterion(&self, grouplikes: &[Vec<Scalar>]) -> Result<bool, RepError> {
        let h = &self.algebra;
        let k = h.field();
        let n = self.dim;
        for g in grouplikes {
            let p = h.skew_primitives(g)?;
            if p.dim() == 0 {
                continue;
            }
            let m = Matrix::from_fn(n * n, p.dim(), |row, col| {
                self.apply(&p.basis()[col]).at(row / n, row % n).clone()
            });
            if m.rank(k) != p.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_same_algebra(&self, other: &Representation) -> Result<(), RepError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(RepError::AlgebraMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builders::{group_algebra, sweedler};
    use crate::hopf::GroupTable;
    use crate::linalg;
    use crate::scalar::FieldSpec;

    fn sweedler_rep2() -> Representation {
        // g -> diag(1, -1), x -> E_12, gx -> g x image
        let h = Arc::new(sweedler());
        let k = h.field().clone();
        let id = Matrix::identity(&k, 2);
        let g = Matrix::from_rows(vec![
            vec![k.one(), k.zero()],
            vec![k.zero(), k.from_int(-1)],
        ])
        .unwrap();
        let x = Matrix::from_rows(vec![vec![k.zero(), k.one()], vec![k.zero(), k.zero()]]).unwrap();
        let gx = g.mul(&k, &x).unwrap();
        Representation::new(h, vec![id, g, x, gx]).unwrap()
    }

    fn omega_character() -> Representation {
        // faithful character of Z3 over Q(omega): g -> omega
        let k = FieldSpec::cyclotomic3();
        let h = Arc::new(group_algebra(k.clone(), &GroupTable::cyclic(3)));
        let omega = k.gen();
        let omega2 = k.mul(&omega, &omega);
        let mats = vec![
            Matrix::from_rows(vec![vec![k.one()]]).unwrap(),
            Matrix::from_rows(vec![vec![omega]]).unwrap(),
            Matrix::from_rows(vec![vec![omega2]]).unwrap(),
        ];
        Representation::new(h, mats).unwrap()
    }

    #[test]
    fn regular_rep_is_faithful_and_valid() {
        for h in [
            Arc::new(group_algebra(
                FieldSpec::rationals(),
                &GroupTable::symmetric3(),
            )),
            Arc::new(sweedler()),
        ] {
            let reg = Representation::regular(h.clone());
            assert_eq!(reg.dim(), h.dim());
            assert!(reg.verify().passes());
            assert_eq!(reg.kernel().dim(), 0);
        }
    }

    #[test]
    fn sweedler_two_dim_rep_checks() {
        let rep = sweedler_rep2();
        assert!(rep.verify().passes());
        // kernel = span{x - gx}
        let ker = rep.kernel();
        assert_eq!(ker.dim(), 1);
        let k = rep.algebra().field();
        let mut v = vec![k.zero(); 4];
        v[2] = k.one();
        v[3] = k.from_int(-1);
        assert!(ker.contains(k, &v));
    }

    #[test]
    fn inconsistent_matrix_fails_verify() {
        // swap x to E_21 but keep the gx slot from the E_12 assignment
        let rep = sweedler_rep2();
        let k = rep.algebra().field().clone();
        let mut mats = rep.matrices().to_vec();
        mats[2] =
            Matrix::from_rows(vec![vec![k.zero(), k.zero()], vec![k.one(), k.zero()]]).unwrap();
        let bad = Representation::new(rep.algebra().clone(), mats).unwrap();
        let report = bad.verify();
        assert!(!report.multiplicative);
        assert!(report.first_mult_failure.is_some());
    }

    #[test]
    fn trivial_rep_kernel_is_augmentation_ideal() {
        let h = Arc::new(group_algebra(
            FieldSpec::rationals(),
            &GroupTable::cyclic(4),
        ));
        let triv = Representation::trivial(h.clone());
        assert!(triv.verify().passes());
        let ker = triv.kernel();
        assert_eq!(ker.dim(), 3);
        let ker_eps = linalg::kernel(
            h.field(),
            &Matrix::from_rows(vec![h.counit_vec().to_vec()]).unwrap(),
        );
        assert_eq!(ker, ker_eps);
    }

    #[test]
    fn dual_of_group_character_inverts() {
        let rep = omega_character();
        let k = rep.algebra().field();
        let dual = rep.dual();
        assert!(dual.verify().passes());
        // S(g) = g^{-1} = g^2, so dual sends g -> omega^2
        let omega2 = k.mul(&k.gen(), &k.gen());
        assert_eq!(dual.matrices()[1].at(0, 0), &omega2);
        // dual of trivial is trivial
        let h = rep.algebra().clone();
        let triv = Representation::trivial(h);
        assert_eq!(triv.dual(), triv);
    }

    #[test]
    fn dual_kernel_law() {
        let rep = sweedler_rep2();
        let h = rep.algebra();
        let k = h.field();
        let lhs = rep.dual().kernel();
        let rhs = linalg::preimage(k, h.antipode_matrix(), &rep.kernel()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let rep = sweedler_rep2();
        let triv = Representation::trivial(rep.algebra().clone());
        let t = rep.tensor(&triv).unwrap();
        assert_eq!(t.matrices(), rep.matrices());
        let t = triv.tensor(&rep).unwrap();
        assert_eq!(t.matrices(), rep.matrices());
    }

    #[test]
    fn tensor_of_characters_multiplies_values() {
        let rep = omega_character();
        let k = rep.algebra().field();
        let sq = rep.tensor(&rep).unwrap();
        assert!(sq.verify().passes());
        let omega = k.gen();
        assert_eq!(sq.matrices()[1].at(0, 0), &k.mul(&omega, &omega));
    }

    #[test]
    fn tensor_square_of_sweedler_rep_is_valid() {
        let rep = sweedler_rep2();
        let sq = rep.tensor(&rep).unwrap();
        assert_eq!(sq.dim(), 4);
        assert!(sq.verify().passes());
    }

    #[test]
    fn product_kernel_is_intersection() {
        let rep = sweedler_rep2();
        let triv = Representation::trivial(rep.algebra().clone());
        let prod = rep.product(&triv).unwrap();
        assert!(prod.verify().passes());
        assert_eq!(prod.dim(), 3);
        let k = rep.algebra().field();
        let expected = rep.kernel().intersect(k, &triv.kernel()).unwrap();
        assert_eq!(prod.kernel(), expected);
        // product with itself leaves the kernel unchanged
        let square = rep.product(&rep).unwrap();
        assert_eq!(square.kernel(), rep.kernel());
    }

    #[test]
    fn word_rep_base_cases() {
        let rep = sweedler_rep2();
        let t = rep.algebra().antipode_order().unwrap();
        assert_eq!(t, 4);
        // empty word = trivial
        let empty = rep.word_rep(&Word::empty());
        assert_eq!(
            empty.matrices(),
            Representation::trivial(rep.algebra().clone()).matrices()
        );
        // single letter a_0 = the representation itself
        let w0 = rep.word_rep(&Word::new([0], t));
        assert_eq!(w0.matrices(), rep.matrices());
        // a_k = k-fold dual, exact matrices
        let w2 = rep.word_rep(&Word::new([2], t));
        assert_eq!(w2.matrices(), rep.dual().dual().matrices());
        // letters reduce modulo the antipode order
        assert_eq!(Word::new([5], 4), Word::new([1], 4));
    }

    #[test]
    fn word_rep_concatenation_is_tensor() {
        let rep = sweedler_rep2();
        let t = rep.algebra().antipode_order().unwrap();
        let w = rep.word_rep(&Word::new([0, 1], t));
        assert_eq!(w.dim(), 4);
        assert!(w.verify().passes());
        let manual = rep.tensor(&rep.dual()).unwrap();
        assert_eq!(w.matrices(), manual.matrices());
    }

    #[test]
    fn algebra_mismatch_rejected() {
        let rep = sweedler_rep2();
        let other = omega_character();
        assert_eq!(rep.tensor(&other).unwrap_err(), RepError::AlgebraMismatch);
        assert_eq!(rep.product(&other).unwrap_err(), RepError::AlgebraMismatch);
    }

    #[test]
    fn pointed_criterion_on_group_algebras() {
        let rep = omega_character();
        let h = rep.algebra();
        let k = h.field();
        let basis: Vec<Vec<Scalar>> = (0..3)
            .map(|i| {
                let mut v = vec![k.zero(); 3];
                v[i] = k.one();
                v
            })
            .collect();
        assert!(rep.pointed_criterion(&basis).unwrap());
        let triv = Representation::trivial(h.clone());
        assert!(!triv.pointed_criterion(&basis).unwrap());
    }

    #[test]
    fn pointed_criterion_on_sweedler() {
        let rep = sweedler_rep2();
        let k = rep.algebra().field();
        let unit = rep.algebra().unit_vec().to_vec();
        let mut g = vec![k.zero(); 4];
        g[1] = k.one();
        assert!(rep.pointed_criterion(&[unit, g]).unwrap());
    }
}
