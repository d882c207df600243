//! The largest Hopf ideal inside a representation kernel, by two
//! independent algorithms.
//!
//! `hopf_image_fixpoint` refines a decreasing chain of ideals with the
//! coideal and antipode constraints until it stabilizes. `hopf_image_words`
//! intersects kernels of the word modules V^w literally, stopping once the
//! running intersection certifies itself as a Hopf ideal inside Ker pi.
//! The two never share intermediate results; their agreement on the corpus
//! is the correctness argument, enforced in the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{HopfAlgebraData, HopfError, HopfQuotient};
use crate::linalg::{self, LinalgError, Matrix, Subspace};
use crate::rep::{RepError, Representation, Word};
use alloc::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageError {
    /// max_len for the words oracle must be at least 1.
    MaxLenZero,
    Rep(RepError),
    Hopf(HopfError),
    Linalg(LinalgError),
}

impl fmt::Display for ImageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageError::MaxLenZero => write!(f, "max_len must be at least 1"),
            ImageError::Rep(e) => write!(f, "{e}"),
            ImageError::Hopf(e) => write!(f, "{e}"),
            ImageError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ImageError {}

impl From<RepError> for ImageError {
    fn from(e: RepError) -> Self {
        ImageError::Rep(e)
    }
}

impl From<HopfError> for ImageError {
    fn from(e: HopfError) -> Self {
        ImageError::Hopf(e)
    }
}

impl From<LinalgError> for ImageError {
    fn from(e: LinalgError) -> Self {
        ImageError::Linalg(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Fixpoint,
    Words,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Fixpoint => write!(f, "fixpoint"),
            Algorithm::Words => write!(f, "words"),
        }
    }
}

/// Outcome of a Hopf image computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfImageResult {
    /// The ideal I_pi (exact when `stabilized`).
    pub ideal: Subspace,
    /// ideal = 0.
    pub inner_faithful: bool,
    pub algorithm: Algorithm,
    /// Fixpoint: refinement passes. Words: deepest word length processed.
    pub iterations: usize,
    /// Words algorithm only.
    pub words_processed: Option<usize>,
    /// Fixpoint always stabilizes; the words oracle sets this once the
    /// running intersection certifies itself, and leaves it false when
    /// max_len was exhausted first (the ideal is then only an upper bound).
    pub stabilized: bool,
}

/// Quotient by I_pi together with the factored representation.
#[derive(Debug, Clone)]
pub struct HopfImage {
    pub result: HopfImageResult,
    pub quotient: HopfQuotient,
    /// pi factored through the projection; inner faithful on the quotient.
    pub factored: Representation,
}

/// Default word length bound: the algebra dimension, matching the fixpoint
/// iteration bound.
pub fn default_max_len(h: &HopfAlgebraData) -> usize {
    h.dim()
}

pub(crate) fn mixed_tensor_target(
    h: &HopfAlgebraData,
    j: &Subspace,
) -> Result<Subspace, LinalgError> {
    let k = h.field();
    linalg::tensor_right(k, j, h.dim()).sum(k, &linalg::tensor_left(k, h.dim(), j))
}

/// Seed W = base-cap intersected with every S^k preimage of `target`,
/// k = 0..t-1. Any S-stable subspace of `target` lies inside.
pub(crate) fn antipode_saturated_seed(
    h: &HopfAlgebraData,
    target: &Subspace,
    ker_eps: &Subspace,
) -> Result<Subspace, ImageError> {
    let k = h.field();
    let t = h.antipode_order()?;
    let mut w = ker_eps.intersect(k, target)?;
    let mut s_power = h.antipode_matrix().clone();
    for _ in 1..t {
        w = w.intersect(k, &linalg::preimage(k, &s_power, target)?)?;
        s_power = s_power.mul(k, h.antipode_matrix())?;
    }
    Ok(w)
}

pub(crate) fn kernel_of_counit(h: &HopfAlgebraData) -> Subspace {
    let row = Matrix::from_fn(1, h.dim(), |_, i| h.counit_vec()[i].clone());
    linalg::kernel(h.field(), &row)
}

/// Largest Hopf ideal contained in Ker pi, as a decreasing fixpoint:
/// seed with Ker eps and all S^k preimages of Ker pi, then refine by the
/// coideal and antipode constraints until stable. Every iterate is a
/// two-sided ideal (preimages of ideals under Delta and S are ideals), so
/// the fixpoint is a Hopf ideal; it contains every Hopf ideal inside
/// Ker pi because each constraint is monotone and holds for such an ideal.
pub fn hopf_image_fixpoint(rep: &Representation) -> Result<HopfImageResult, ImageError> {
    let h = rep.algebra();
    let k = h.field();
    let ker_pi = rep.kernel();
    let ker_eps = kernel_of_counit(h);
    let mut j = antipode_saturated_seed(h, &ker_pi, &ker_eps)?;
    let comult = h.comult_matrix();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let coideal = linalg::preimage(k, &comult, &mixed_tensor_target(h, &j)?)?;
        let s_stable = linalg::preimage(k, h.antipode_matrix(), &j)?;
        let next = j.intersect(k, &coideal)?.intersect(k, &s_stable)?;
        if next == j {
            break;
        }
        debug_assert!(next.dim() < j.dim());
        j = next;
    }
    let inner_faithful = j.dim() == 0;
    Ok(HopfImageResult {
        ideal: j,
        inner_faithful,
        algorithm: Algorithm::Fixpoint,
        iterations,
        words_processed: None,
        stabilized: true,
    })
}

/// Largest Hopf ideal contained in a given subspace (which need not be a
/// representation kernel). Same refinement loop as the fixpoint algorithm
/// plus explicit left/right multiplication constraints, which arbitrary
/// seeds require.
pub fn largest_hopf_ideal_within(
    h: &HopfAlgebraData,
    target: &Subspace,
) -> Result<Subspace, ImageError> {
    let k = h.field();
    if target.ambient() != h.dim() {
        return Err(ImageError::Hopf(HopfError::AmbientMismatch {
            expected: h.dim(),
            got: target.ambient(),
        }));
    }
    let ker_eps = kernel_of_counit(h);
    let mut j = antipode_saturated_seed(h, target, &ker_eps)?;
    let comult = h.comult_matrix();
    let d = h.dim();
    loop {
        let mut next = j.intersect(
            k,
            &linalg::preimage(k, &comult, &mixed_tensor_target(h, &j)?)?,
        )?;
        next = next.intersect(k, &linalg::preimage(k, h.antipode_matrix(), &j)?)?;
        for i in 0..d {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            next = next.intersect(k, &linalg::preimage(k, &h.left_mult_matrix(&e), &j)?)?;
            next = next.intersect(k, &linalg::preimage(k, &h.right_mult_matrix(&e), &j)?)?;
        }
        if next == j {
            return Ok(j);
        }
        j = next;
    }
}

/// The paper-verbatim oracle: breadth-first over words in the letters
/// a_0..a_{t-1} in length-lexicographic order, intersecting the literal
/// kernels of the word modules. Stops early once the running intersection
/// J passes is_hopf_ideal AND J is inside Ker pi: J then contains I_pi by
/// construction and is contained in it by maximality, so J = I_pi.
pub fn hopf_image_words(
    rep: &Representation,
    max_len: usize,
) -> Result<HopfImageResult, ImageError> {
    if max_len == 0 {
        return Err(ImageError::MaxLenZero);
    }
    let h = rep.algebra();
    let k = h.field();
    let t = h.antipode_order()?;
    let ker_pi = rep.kernel();

    let mut running = Representation::trivial(h.clone()).kernel();
    let mut words_processed = 1usize;
    let mut deepest = 0usize;
    let mut stabilized = h.is_hopf_ideal(&running)?.passes() && running.is_subspace_of(k, &ker_pi);

    // frontier of (word, its module) pairs, dropped level by level
    let mut frontier: Vec<(Word, Representation)> =
        vec![(Word::empty(), rep.word_rep(&Word::empty()))];
    'outer: for len in 1..=max_len {
        let mut next_frontier = Vec::new();
        for (word, module) in &frontier {
            for letter in 0..t {
                let letters: Vec<usize> = word.letters().iter().copied().chain([letter]).collect();
                let extended = Word::new(letters, t);
                let ext_module = if word.is_empty() {
                    rep.word_rep(&extended)
                } else {
                    module.tensor(&rep.word_rep(&Word::new([letter], t)))?
                };
                running = running.intersect(k, &ext_module.kernel())?;
                words_processed += 1;
                deepest = len;
                if h.is_hopf_ideal(&running)?.passes() && running.is_subspace_of(k, &ker_pi) {
                    stabilized = true;
                    break 'outer;
                }
                next_frontier.push((extended, ext_module));
            }
        }
        frontier = next_frontier;
    }
    let inner_faithful = running.dim() == 0;
    Ok(HopfImageResult {
        ideal: running,
        inner_faithful,
        algorithm: Algorithm::Words,
        iterations: deepest,
        words_processed: Some(words_processed),
        stabilized,
    })
}

/// Ker pi contains no nonzero Hopf ideal.
pub fn inner_faithful(rep: &Representation) -> Result<bool, ImageError> {
    Ok(hopf_image_fixpoint(rep)?.inner_faithful)
}

/// Quotient by I_pi and the factored representation. The factored
/// representation sends each quotient basis class to the image of its
/// complement-coordinate representative, which is well defined because
/// I_pi is inside Ker pi.
pub fn hopf_image_quotient(rep: &Representation) -> Result<HopfImage, ImageError> {
    let result = hopf_image_fixpoint(rep)?;
    let h = rep.algebra();
    let quotient = h.quotient(&result.ideal)?;
    let q = quotient.algebra.dim();
    let mats = (0..q)
        .map(|a| {
            let col: Vec<_> = (0..h.dim())
                .map(|i| quotient.section.at(i, a).clone())
                .collect();
            rep.apply(&col)
        })
        .collect();
    let factored = Representation::new(Arc::new(quotient.algebra.clone()), mats)?;
    debug_assert!(factored.verify().passes());
    Ok(HopfImage {
        result,
        quotient,
        factored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builders::{group_algebra, sweedler};
    use crate::hopf::GroupTable;
    use crate::scalar::{FieldSpec, Scalar};

    fn sweedler_rep2() -> Representation {
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

    fn character(h: Arc<HopfAlgebraData>, values: Vec<Scalar>) -> Representation {
        let mats = values
            .into_iter()
            .map(|v| Matrix::from_rows(vec![vec![v]]).unwrap())
            .collect();
        Representation::new(h, mats).unwrap()
    }

    fn group_ideal(h: &HopfAlgebraData, table: &GroupTable, subgroup: &[usize]) -> Subspace {
        // span{g - gn : n in subgroup}
        let k = h.field();
        let d = h.dim();
        let mut vecs = Vec::new();
        for g in 0..d {
            for &n in subgroup {
                let mut v = vec![k.zero(); d];
                v[g] = k.add(&v[g], &k.one());
                let gn = table.mul(g, n);
                v[gn] = k.sub(&v[gn], &k.one());
                vecs.push(v);
            }
        }
        Subspace::from_spanning(k, d, vecs).unwrap()
    }

    #[test]
    fn trivial_rep_image_is_augmentation_ideal() {
        let h = Arc::new(sweedler());
        let triv = Representation::trivial(h.clone());
        let fix = hopf_image_fixpoint(&triv).unwrap();
        assert_eq!(fix.ideal.dim(), 3);
        assert!(!fix.inner_faithful);
        let words = hopf_image_words(&triv, 4).unwrap();
        assert!(words.stabilized);
        assert_eq!(words.ideal, fix.ideal);
    }

    #[test]
    fn regular_rep_is_inner_faithful() {
        let h = Arc::new(group_algebra(
            FieldSpec::rationals(),
            &GroupTable::symmetric3(),
        ));
        let reg = Representation::regular(h);
        let fix = hopf_image_fixpoint(&reg).unwrap();
        assert!(fix.inner_faithful);
        assert_eq!(fix.ideal.dim(), 0);
        let words = hopf_image_words(&reg, 6).unwrap();
        assert!(words.stabilized && words.inner_faithful);
        // kernel is already zero: certificate fires at the a_0 word
        assert_eq!(words.words_processed, Some(2));
    }

    #[test]
    fn sweedler_rep_inner_faithful_despite_nonzero_kernel() {
        let rep = sweedler_rep2();
        assert_eq!(rep.kernel().dim(), 1);
        let fix = hopf_image_fixpoint(&rep).unwrap();
        assert!(fix.inner_faithful);
        let words = hopf_image_words(&rep, 4).unwrap();
        assert!(words.stabilized);
        assert_eq!(words.ideal, fix.ideal);
    }

    #[test]
    fn sign_character_of_s3() {
        let table = GroupTable::symmetric3();
        let h = Arc::new(group_algebra(FieldSpec::rationals(), &table));
        let k = h.field().clone();
        let values = vec![
            k.one(),
            k.one(),
            k.one(),
            k.from_int(-1),
            k.from_int(-1),
            k.from_int(-1),
        ];
        let sign = character(h.clone(), values);
        assert!(sign.verify().passes());

        let fix = hopf_image_fixpoint(&sign).unwrap();
        assert_eq!(fix.ideal.dim(), 4);
        assert!(!fix.inner_faithful);
        // group oracle: I = span{g - gn : n in A3}
        assert_eq!(fix.ideal, group_ideal(&h, &table, &[0, 1, 2]));

        let words = hopf_image_words(&sign, 6).unwrap();
        assert!(words.stabilized);
        assert_eq!(words.ideal, fix.ideal);

        // quotient is 2-dimensional and the factored rep is inner faithful
        let image = hopf_image_quotient(&sign).unwrap();
        assert_eq!(image.quotient.algebra.dim(), 2);
        assert!(image.factored.verify().passes());
        assert!(inner_faithful(&image.factored).unwrap());
    }

    #[test]
    fn z4_order_two_character_image() {
        let table = GroupTable::cyclic(4);
        let h = Arc::new(group_algebra(FieldSpec::rationals(), &table));
        let k = h.field().clone();
        // 2-dim rep g -> diag(1, -1): group kernel {0, 2}
        let g = Matrix::from_rows(vec![
            vec![k.one(), k.zero()],
            vec![k.zero(), k.from_int(-1)],
        ])
        .unwrap();
        let mats = vec![
            Matrix::identity(&k, 2),
            g.clone(),
            g.mul(&k, &g).unwrap(),
            g.mul(&k, &g).unwrap().mul(&k, &g).unwrap(),
        ];
        let rep = Representation::new(h.clone(), mats).unwrap();
        assert!(rep.verify().passes());
        assert!(!inner_faithful(&rep).unwrap());
        let fix = hopf_image_fixpoint(&rep).unwrap();
        assert_eq!(fix.ideal, group_ideal(&h, &table, &[0, 2]));
        assert_eq!(fix.ideal.dim(), 2);
        let image = hopf_image_quotient(&rep).unwrap();
        assert_eq!(image.quotient.algebra.dim(), 2);
        assert!(inner_faithful(&image.factored).unwrap());
    }

    #[test]
    fn fixpoint_iteration_bound() {
        for rep in [
            sweedler_rep2(),
            Representation::trivial(Arc::new(sweedler())),
            Representation::regular(Arc::new(group_algebra(
                FieldSpec::rationals(),
                &GroupTable::cyclic(6),
            ))),
        ] {
            let fix = hopf_image_fixpoint(&rep).unwrap();
            assert!(fix.iterations <= rep.algebra().dim());
            assert!(fix.stabilized);
        }
    }

    #[test]
    fn general_seed_fixpoint() {
        let rep = sweedler_rep2();
        let h = rep.algebra();
        // Ker pi = span{x - gx} is not a Hopf ideal; nothing inside it is.
        let ideal = largest_hopf_ideal_within(h, &rep.kernel()).unwrap();
        assert_eq!(ideal.dim(), 0);
        // Ker eps is itself a Hopf ideal.
        let ker_eps = Representation::trivial(h.clone()).kernel();
        let ideal = largest_hopf_ideal_within(h, &ker_eps).unwrap();
        assert_eq!(ideal, ker_eps);
        // agreement with the rep-kernel fixpoint on a representation kernel
        let table = GroupTable::symmetric3();
        let hs3 = Arc::new(group_algebra(FieldSpec::rationals(), &table));
        let k = hs3.field().clone();
        let sign = character(
            hs3.clone(),
            vec![
                k.one(),
                k.one(),
                k.one(),
                k.from_int(-1),
                k.from_int(-1),
                k.from_int(-1),
            ],
        );
        assert_eq!(
            largest_hopf_ideal_within(&hs3, &sign.kernel()).unwrap(),
            hopf_image_fixpoint(&sign).unwrap().ideal
        );
    }

    #[test]
    fn words_rejects_zero_max_len() {
        let rep = sweedler_rep2();
        assert_eq!(
            hopf_image_words(&rep, 0).unwrap_err(),
            ImageError::MaxLenZero
        );
    }

    #[test]
    fn certificates_hold_on_results() {
        for rep in [
            sweedler_rep2(),
            Representation::trivial(Arc::new(sweedler())),
        ] {
            let h = rep.algebra().clone();
            let k = h.field();
            for result in [
                hopf_image_fixpoint(&rep).unwrap(),
                hopf_image_words(&rep, 4).unwrap(),
            ] {
                assert!(h.is_hopf_ideal(&result.ideal).unwrap().passes());
                assert!(result.ideal.is_subspace_of(k, &rep.kernel()));
                assert_eq!(result.inner_faithful, result.ideal.dim() == 0);
            }
        }
    }
}
