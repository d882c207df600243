//! Hopf *-structures, Hopf *-ideals and inner unitarity; regular-antipode
//! witnesses and the two-block augmentation; the Haar-based conditional
//! expectation onto a normal Hopf subalgebra; and unitary induction of
//! *-representations, with exact positivity checks where the field allows
//! them.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ext::{self, ExtError, SubalgebraEmbedding};
use crate::hopf::{Functional, HopfAlgebraData, HopfError, HopfQuotient};
use crate::image::{self, ImageError};
use crate::linalg::{self, LinalgError, Matrix, Subspace};
use crate::rep::{RepError, Representation};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarError {
    /// The star matrix is not square of the algebra dimension.
    BadStarShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    /// A precondition required a valid *-structure and verify_star failed.
    StarInvalid(StarReport),
    /// pi(x*) differs from the adjoint of pi(x) for some basis x.
    NotStarRep,
    /// phi is not an algebra character.
    PhiNotCharacter,
    /// phi composed with S failed the convolution-inverse identity.
    PhiInverseNotConvolution,
    /// The witness vector is not group-like.
    NotGrouplike,
    /// m = 0, or the regular-antipode identity does not hold.
    WitnessInvalid,
    /// gram is not sigma-Hermitian.
    NotHermitian,
    /// The subalgebra image is not stable under the ambient star.
    SubalgebraNotStarStable,
    /// The embedding and projection do not form an exact sequence.
    ExactSequenceFails,
    /// Positivity is decidable and the given form is not positive definite.
    FormNotPositive,
    /// Positivity is decidable and the induced Gram matrix is not positive
    /// semidefinite.
    GramNotPositive,
    /// v -> 1 (x) v failed the isometry identity.
    IsometryFailed,
    /// The Gram null space is not stable under the induced action.
    RadicalNotStable,
    /// A guaranteed property of the conditional expectation failed; the
    /// name records which one.
    ConditionalExpectationBroken {
        law: &'static str,
    },
    Ext(ExtError),
    Hopf(HopfError),
    Rep(RepError),
    Image(ImageError),
    Linalg(LinalgError),
}

impl fmt::Display for StarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarError::BadStarShape {
                rows,
                cols,
                expected,
            } => {
                write!(
                    f,
                    "star matrix is {rows}x{cols}, expected {expected}x{expected}"
                )
            }
            StarError::StarInvalid(report) => {
                write!(f, "star structure fails: {:?}", report.failing())
            }
            StarError::NotStarRep => write!(f, "representation is not a *-representation"),
            StarError::PhiNotCharacter => write!(f, "phi is not an algebra character"),
            StarError::PhiInverseNotConvolution => {
                write!(f, "phi o S is not the convolution inverse of phi")
            }
            StarError::NotGrouplike => write!(f, "witness element is not group-like"),
            StarError::WitnessInvalid => write!(f, "regular-antipode witness identity fails"),
            StarError::NotHermitian => write!(f, "form matrix is not Hermitian"),
            StarError::SubalgebraNotStarStable => {
                write!(f, "subalgebra is not stable under the star")
            }
            StarError::ExactSequenceFails => {
                write!(f, "embedding and projection do not form an exact sequence")
            }
            StarError::FormNotPositive => write!(f, "form is not positive definite"),
            StarError::GramNotPositive => {
                write!(f, "induced Gram matrix is not positive semidefinite")
            }
            StarError::IsometryFailed => write!(f, "unit embedding is not isometric"),
            StarError::RadicalNotStable => write!(f, "Gram null space is not action-stable"),
            StarError::ConditionalExpectationBroken { law } => {
                write!(f, "conditional expectation violates {law}")
            }
            StarError::Ext(e) => write!(f, "{e}"),
            StarError::Hopf(e) => write!(f, "{e}"),
            StarError::Rep(e) => write!(f, "{e}"),
            StarError::Image(e) => write!(f, "{e}"),
            StarError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for StarError {}

impl From<ExtError> for StarError {
    fn from(e: ExtError) -> Self {
        StarError::Ext(e)
    }
}

impl From<HopfError> for StarError {
    fn from(e: HopfError) -> Self {
        StarError::Hopf(e)
    }
}

impl From<RepError> for StarError {
    fn from(e: RepError) -> Self {
        StarError::Rep(e)
    }
}

impl From<ImageError> for StarError {
    fn from(e: ImageError) -> Self {
        StarError::Image(e)
    }
}

impl From<LinalgError> for StarError {
    fn from(e: LinalgError) -> Self {
        StarError::Linalg(e)
    }
}

/// x* = star_matrix . sigma(x), with sigma the field conjugation applied
/// coefficientwise; antilinear by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarStructure {
    matrix: Matrix,
}

impl StarStructure {
    pub fn new(matrix: Matrix) -> Self {
        StarStructure { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, k: &FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        let conj: Vec<Scalar> = v.iter().map(|c| k.conj(c)).collect();
        self.matrix.apply(k, &conj).expect("star matrix shape")
    }

    /// The image subspace {v* : v in U}; a subspace again since sigma is a
    /// field automorphism.
    pub fn subspace_image(&self, k: &FieldSpec, u: &Subspace) -> Subspace {
        let vecs = u.basis().iter().map(|v| self.apply(k, v)).collect();
        Subspace::from_spanning(k, u.ambient(), vecs).expect("star preserves ambient")
    }
}

/// The four *-structure identity families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    /// ** = id.
    pub involutive: bool,
    /// (ab)* = b* a*.
    pub antimultiplicative: bool,
    /// Delta(x*) = (Delta x)^{* (x) *} and eps(x*) = sigma(eps(x)).
    pub coalgebra_compatible: bool,
    /// S o * o S o * = id.
    pub antipode_compatible: bool,
}

impl StarReport {
    pub fn passes(&self) -> bool {
        self.involutive
            && self.antimultiplicative
            && self.coalgebra_compatible
            && self.antipode_compatible
    }

    pub fn failing(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.involutive {
            out.push("involutive");
        }
        if !self.antimultiplicative {
            out.push("antimultiplicative");
        }
        if !self.coalgebra_compatible {
            out.push("coalgebra_compatible");
        }
        if !self.antipode_compatible {
            out.push("antipode_compatible");
        }
        out
    }
}

/// Witness for S^{2m}(x) = a (phi * id * phi^{-1})(x) a^{-1}.
#[derive(Debug, Clone)]
pub struct RegularAntipodeWitness {
    pub a: Vec<Scalar>,
    pub phi: Functional,
    pub m: usize,
}

/// Check all four *-structure identity families by contraction.
pub fn verify_star(h: &HopfAlgebraData, star: &StarStructure) -> Result<StarReport, StarError> {
    let k = h.field();
    let d = h.dim();
    let m = star.matrix();
    if m.rows() != d || m.cols() != d {
        return Err(StarError::BadStarShape {
            rows: m.rows(),
            cols: m.cols(),
            expected: d,
        });
    }
    let basis = |i: usize| -> Vec<Scalar> {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        e
    };
    // ** = id as the matrix identity M sigma(M) = I
    let involutive = m.mul(k, &m.conj_entries(k))?.is_identity();
    let mut antimultiplicative = true;
    'mult: for i in 0..d {
        for j in 0..d {
            let lhs = star.apply(k, &h.mult_vec(&basis(i), &basis(j)));
            let rhs = h.mult_vec(&star.apply(k, &basis(j)), &star.apply(k, &basis(i)));
            if lhs != rhs {
                antimultiplicative = false;
                break 'mult;
            }
        }
    }
    let mut coalgebra_compatible = true;
    let mm = m.kronecker(k, m);
    for i in 0..d {
        let lhs = h.comult_vec(&star.apply(k, &basis(i)));
        let conj_delta: Vec<Scalar> = h.comult_vec(&basis(i)).iter().map(|c| k.conj(c)).collect();
        let rhs = mm.apply(k, &conj_delta)?;
        if lhs != rhs {
            coalgebra_compatible = false;
            break;
        }
        if h.counit_apply(&star.apply(k, &basis(i))) != k.conj(&h.counit_apply(&basis(i))) {
            coalgebra_compatible = false;
            break;
        }
    }
    // S o * o S o * sends e_i to S M sigma(S M) e_i
    let sm = h.antipode_matrix().mul(k, m)?;
    let antipode_compatible = sm.mul(k, &sm.conj_entries(k))?.is_identity();
    Ok(StarReport {
        involutive,
        antimultiplicative,
        coalgebra_compatible,
        antipode_compatible,
    })
}

/// J + J*.
pub fn star_ideal_closure(
    h: &HopfAlgebraData,
    star: &StarStructure,
    j: &Subspace,
) -> Result<Subspace, StarError> {
    let k = h.field();
    Ok(j.sum(k, &star.subspace_image(k, j))?)
}

/// Hopf ideal and *-stable.
pub fn is_hopf_star_ideal(
    h: &HopfAlgebraData,
    star: &StarStructure,
    j: &Subspace,
) -> Result<bool, StarError> {
    let k = h.field();
    Ok(h.is_hopf_ideal(j)?.passes() && star.subspace_image(k, j) == *j)
}

/// pi(x*) = F^{-1} sigma(pi(x))^T F for all basis x; F defaults to the
/// identity (plain conjugate transpose).
pub fn is_star_rep(
    rep: &Representation,
    star: &StarStructure,
    form: Option<&SesquilinearForm>,
) -> Result<bool, StarError> {
    let h = rep.algebra();
    let k = h.field();
    let d = h.dim();
    let m = star.matrix();
    if m.rows() != d || m.cols() != d {
        return Err(StarError::BadStarShape {
            rows: m.rows(),
            cols: m.cols(),
            expected: d,
        });
    }
    let (f, f_inv) = match form {
        Some(form) => {
            let f = form.gram().clone();
            let inv = f.inverse(k)?;
            (Some(f), inv)
        }
        None => (None, Matrix::identity(k, rep.dim())),
    };
    for i in 0..d {
        let col: Vec<Scalar> = (0..d).map(|r| m.at(r, i).clone()).collect();
        let lhs = rep.apply(&col);
        let conj_t = rep.matrices()[i].conj_entries(k).transpose();
        let rhs = match &f {
            Some(f) => f_inv.mul(k, &conj_t)?.mul(k, f)?,
            None => conj_t,
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest Hopf *-ideal inside Ker pi: the Hopf-ideal fixpoint with the
/// extra monotone constraint J := J intersect J*. Every iterate stays a
/// two-sided ideal (J* is an ideal when J is, by antimultiplicativity),
/// and at the fixpoint J = J* by dimension count.
pub fn largest_hopf_star_ideal(
    rep: &Representation,
    star: &StarStructure,
) -> Result<Subspace, StarError> {
    let h = rep.algebra();
    let k = h.field();
    let ker_pi = rep.kernel();
    let ker_eps = image::kernel_of_counit(h);
    let mut j = image::antipode_saturated_seed(h, &ker_pi, &ker_eps)?;
    let comult = h.comult_matrix();
    loop {
        let coideal = linalg::preimage(k, &comult, &image::mixed_tensor_target(h, &j)?)?;
        let s_stable = linalg::preimage(k, h.antipode_matrix(), &j)?;
        let star_image = star.subspace_image(k, &j);
        let next = j
            .intersect(k, &coideal)?
            .intersect(k, &s_stable)?
            .intersect(k, &star_image)?;
        if next == j {
            return Ok(j);
        }
        j = next;
    }
}

/// Ker pi contains no nonzero Hopf *-ideal. Preconditions: the star
/// verifies and pi is a *-representation (with respect to `form`, identity
/// when absent).
pub fn inner_unitary(
    rep: &Representation,
    star: &StarStructure,
    form: Option<&SesquilinearForm>,
) -> Result<bool, StarError> {
    let h = rep.algebra();
    let report = verify_star(h, star)?;
    if !report.passes() {
        return Err(StarError::StarInvalid(report));
    }
    if !is_star_rep(rep, star, form)? {
        return Err(StarError::NotStarRep);
    }
    Ok(largest_hopf_star_ideal(rep, star)?.dim() == 0)
}

fn character_values(h: &HopfAlgebraData, phi: &Functional) -> Result<Vec<Scalar>, StarError> {
    let k = h.field();
    let d = h.dim();
    if phi.coeffs().len() != d {
        return Err(StarError::PhiNotCharacter);
    }
    let values = phi.coeffs().to_vec();
    // phi(1) = 1 and phi(e_i e_j) = phi(e_i) phi(e_j)
    let mut on_unit = k.zero();
    for (l, u) in h.unit_vec().iter().enumerate() {
        on_unit = k.add(&on_unit, &k.mul(u, &values[l]));
    }
    if on_unit != k.one() {
        return Err(StarError::PhiNotCharacter);
    }
    for i in 0..d {
        for j in 0..d {
            let mut lhs = k.zero();
            for l in 0..d {
                let c = h.mult_coeff(i, j, l);
                if !c.is_zero() {
                    lhs = k.add(&lhs, &k.mul(c, &values[l]));
                }
            }
            if lhs != k.mul(&values[i], &values[j]) {
                return Err(StarError::PhiNotCharacter);
            }
        }
    }
    Ok(values)
}

/// phi o S, verified to be the two-sided convolution inverse of phi.
fn convolution_inverse(h: &HopfAlgebraData, phi: &[Scalar]) -> Result<Vec<Scalar>, StarError> {
    let k = h.field();
    let d = h.dim();
    let s = h.antipode_matrix();
    let inv: Vec<Scalar> = (0..d)
        .map(|l| {
            let mut acc = k.zero();
            for p in 0..d {
                let c = s.at(p, l);
                if !c.is_zero() {
                    acc = k.add(&acc, &k.mul(c, &phi[p]));
                }
            }
            acc
        })
        .collect();
    for i in 0..d {
        let mut left = k.zero();
        let mut right = k.zero();
        for a in 0..d {
            for b in 0..d {
                let c = h.comult_coeff(i, a, b);
                if c.is_zero() {
                    continue;
                }
                left = k.add(&left, &k.mul(c, &k.mul(&phi[a], &inv[b])));
                right = k.add(&right, &k.mul(c, &k.mul(&inv[a], &phi[b])));
            }
        }
        if left != h.counit_vec()[i] || right != h.counit_vec()[i] {
            return Err(StarError::PhiInverseNotConvolution);
        }
    }
    Ok(inv)
}

fn witness_parts(
    h: &HopfAlgebraData,
    w: &RegularAntipodeWitness,
) -> Result<(Vec<Scalar>, Vec<Scalar>), StarError> {
    if w.m == 0 {
        return Err(StarError::WitnessInvalid);
    }
    if !h.grouplike_check(&w.a) {
        return Err(StarError::NotGrouplike);
    }
    let phi = character_values(h, &w.phi)?;
    let phi_inv = convolution_inverse(h, &phi)?;
    Ok((phi, phi_inv))
}

/// S^{2m}(x) = a (phi * id * phi^{-1})(x) a^{-1} on every basis element.
pub fn check_regular_antipode(
    h: &HopfAlgebraData,
    w: &RegularAntipodeWitness,
) -> Result<bool, StarError> {
    let (phi, phi_inv) = witness_parts(h, w)?;
    let k = h.field();
    let d = h.dim();
    let a_inv = h.antipode_matrix().apply(k, &w.a).expect("square");
    let lhs = h.antipode_power(2 * w.m);
    for i in 0..d {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        // (id * phi^{-1})(e_i), then (phi * id) of that
        let delta = h.comult_vec(&e);
        let mut mid = vec![k.zero(); d];
        for p in 0..d {
            for q in 0..d {
                let c = &delta[p * d + q];
                if !c.is_zero() {
                    mid[p] = k.add(&mid[p], &k.mul(c, &phi_inv[q]));
                }
            }
        }
        let mid_delta = h.comult_vec(&mid);
        let mut conv = vec![k.zero(); d];
        for p in 0..d {
            for q in 0..d {
                let c = &mid_delta[p * d + q];
                if !c.is_zero() {
                    conv[q] = k.add(&conv[q], &k.mul(c, &phi[p]));
                }
            }
        }
        let rhs = h.mult_vec(&h.mult_vec(&w.a, &conv), &a_inv);
        let expected: Vec<Scalar> = (0..d).map(|r| lhs.at(r, i).clone()).collect();
        if rhs != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// pi'(x) = (pi(x), phi(x), phi^{-1}(x)) as an (n+2)-block representation.
/// If Ker pi contains no nonzero S-stable Hopf ideal, pi' is inner
/// faithful; callers verify per instance with the image module.
pub fn augment_regular(
    rep: &Representation,
    w: &RegularAntipodeWitness,
) -> Result<Representation, StarError> {
    let h = rep.algebra();
    if !check_regular_antipode(h, w)? {
        return Err(StarError::WitnessInvalid);
    }
    let (phi, phi_inv) = witness_parts(h, w)?;
    let k = h.field();
    let n = rep.dim();
    let mats = (0..h.dim())
        .map(|i| {
            let block = &rep.matrices()[i];
            Matrix::from_fn(n + 2, n + 2, |p, q| {
                if p < n && q < n {
                    block.at(p, q).clone()
                } else if p == n && q == n {
                    phi[i].clone()
                } else if p == n + 1 && q == n + 1 {
                    phi_inv[i].clone()
                } else {
                    k.zero()
                }
            })
        })
        .collect();
    Ok(Representation::new(h.clone(), mats)?)
}

/// E = (id (x) phi) o (id (x) p) o Delta : H -> A, with phi the Haar
/// functional of H//A. Verified idempotent onto the subalgebra.
pub fn conditional_expectation(
    emb: &SubalgebraEmbedding,
    quotient: &HopfQuotient,
) -> Result<Matrix, StarError> {
    if !ext::check_exact_sequence(emb, &quotient.algebra, &quotient.projection)?.passes() {
        return Err(StarError::ExactSequenceFails);
    }
    let phi = quotient.algebra.haar_functional()?;
    let h = emb.big();
    let k = h.field();
    let d = h.dim();
    // psi = phi o p on H
    let psi: Vec<Scalar> = (0..d)
        .map(|b| {
            let mut acc = k.zero();
            for m in 0..quotient.algebra.dim() {
                let c = quotient.projection.at(m, b);
                if !c.is_zero() {
                    acc = k.add(&acc, &k.mul(c, &phi.coeffs()[m]));
                }
            }
            acc
        })
        .collect();
    let e = Matrix::from_fn(d, d, |r, i| {
        let mut acc = k.zero();
        for b in 0..d {
            let c = h.comult_coeff(i, r, b);
            if !c.is_zero() {
                acc = k.add(&acc, &k.mul(c, &psi[b]));
            }
        }
        acc
    });
    if e.mul(k, &e)? != e {
        return Err(StarError::ConditionalExpectationBroken { law: "idempotence" });
    }
    if e.mul(k, emb.inclusion())? != *emb.inclusion() {
        return Err(StarError::ConditionalExpectationBroken {
            law: "restriction to A",
        });
    }
    let image = Subspace::from_spanning(
        k,
        d,
        (0..d)
            .map(|j| (0..d).map(|r| e.at(r, j).clone()).collect())
            .collect(),
    )?;
    if image != *emb.basis() {
        return Err(StarError::ConditionalExpectationBroken { law: "image = A" });
    }
    Ok(e)
}

/// sigma-Hermitian form given by its Gram matrix; <u, w> = sigma(w)^T F u,
/// linear in the first argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesquilinearForm {
    gram: Matrix,
}

impl SesquilinearForm {
    pub fn new(k: &FieldSpec, gram: Matrix) -> Result<Self, StarError> {
        if gram.rows() != gram.cols() || gram.conj_entries(k).transpose() != gram {
            return Err(StarError::NotHermitian);
        }
        Ok(SesquilinearForm { gram })
    }

    pub fn identity(k: &FieldSpec, n: usize) -> Self {
        SesquilinearForm {
            gram: Matrix::identity(k, n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn evaluate(&self, k: &FieldSpec, u: &[Scalar], w: &[Scalar]) -> Scalar {
        let fu = self.gram.apply(k, u).expect("form shape");
        let mut acc = k.zero();
        for (wp, fup) in w.iter().zip(fu.iter()) {
            acc = k.add(&acc, &k.mul(&k.conj(wp), fup));
        }
        acc
    }

    /// Char-poly sign test: eigenvalues are real for Hermitian matrices and
    /// the coefficients are sigma-fixed, hence rational over the decidable
    /// fields. None when the field's positivity gate is closed or a
    /// coefficient fails to be rational.
    fn eigen_signs(&self, k: &FieldSpec, strict: bool) -> Option<bool> {
        if !k.positivity_decidable() {
            return None;
        }
        let n = self.gram.rows();
        let coeffs = linalg::char_poly(k, &self.gram).ok()?;
        for (i, c) in coeffs.iter().enumerate().take(n) {
            let r = c.as_rational()?;
            // char poly = prod (t - lambda_j): coefficient of t^i is
            // (-1)^{n-i} e_{n-i}(lambda), so lambda >= 0 forces the sign.
            let signed_nonneg = if (n - i) % 2 == 0 {
                !num_traits::Signed::is_negative(r)
            } else {
                !num_traits::Signed::is_positive(r)
            };
            if !signed_nonneg {
                return Some(false);
            }
            if strict && num_traits::Zero::is_zero(r) {
                return Some(false);
            }
        }
        Some(true)
    }

    pub fn is_positive_definite(&self, k: &FieldSpec) -> Option<bool> {
        self.eigen_signs(k, true)
    }

    pub fn is_positive_semidefinite(&self, k: &FieldSpec) -> Option<bool> {
        self.eigen_signs(k, false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityStatus {
    /// The field's positivity gate is open and all sign checks passed.
    Verified,
    /// Undecidable field: forms are verified Hermitian only.
    HermitianOnly,
}

/// Result of unitary induction along a normal Hopf *-subalgebra.
#[derive(Debug, Clone)]
pub struct UnitaryInduction {
    /// The induced *-representation on H (x)_A V modulo the Gram radical.
    pub induced: Representation,
    /// The induced form on that quotient.
    pub form: SesquilinearForm,
    /// theta = (regular rep of H//A) o p block-sum induced.
    pub combined: Representation,
    /// GNS form of the Haar functional on the H//A block, block-sum the
    /// induced form.
    pub combined_form: SesquilinearForm,
    pub positivity: PositivityStatus,
}

/// Induce a *-representation of A up to H: Gram matrix from
/// <x (x) v, y (x) w> = <rho(E(y* x)) v, w>, quotient by its null space,
/// induced action x . [y (x) v] = [xy (x) v], and the combined
/// *-representation theta with the H//A regular block.
pub fn unitary_induction(
    emb: &SubalgebraEmbedding,
    rho: &Representation,
    star: &StarStructure,
    v_form: &SesquilinearForm,
) -> Result<UnitaryInduction, StarError> {
    let h = emb.big();
    let k = h.field().clone();
    let d = h.dim();
    let report = verify_star(h, star)?;
    if !report.passes() {
        return Err(StarError::StarInvalid(report));
    }
    if rho.algebra().as_ref() != emb.small().as_ref() {
        return Err(StarError::Ext(ExtError::AlgebraMismatch));
    }
    let n = rho.dim();
    if v_form.dim() != n {
        return Err(StarError::Linalg(LinalgError::ShapeMismatch {
            left: (v_form.dim(), v_form.dim()),
            right: (n, n),
        }));
    }
    // restrict the star to A through the inclusion
    let da = emb.small().dim();
    let mut star_a_cols = Vec::with_capacity(da);
    for a in 0..da {
        let col: Vec<Scalar> = (0..d).map(|r| emb.inclusion().at(r, a).clone()).collect();
        let starred = star.apply(&k, &col);
        match linalg::solve(&k, emb.inclusion(), &starred)? {
            Some(coords) => star_a_cols.push(coords),
            None => return Err(StarError::SubalgebraNotStarStable),
        }
    }
    let star_a = StarStructure::new(Matrix::from_fn(da, da, |r, c| star_a_cols[c][r].clone()));
    if !is_star_rep(rho, &star_a, Some(v_form))? {
        return Err(StarError::NotStarRep);
    }
    let decidable = k.positivity_decidable();
    if decidable && v_form.is_positive_definite(&k) != Some(true) {
        return Err(StarError::FormNotPositive);
    }

    let quotient = ext::quotient_by_subalgebra(emb)?;
    let e = conditional_expectation(emb, &quotient)?;

    // Gram on H (x) V, coordinates (i, v) -> i n + v
    let big_dim = d * n;
    let star_cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut ei = vec![k.zero(); d];
            ei[i] = k.one();
            star.apply(&k, &ei)
        })
        .collect();
    let mut gram = Matrix::zero(&k, big_dim, big_dim);
    for i in 0..d {
        let mut ej = vec![k.zero(); d];
        for j in 0..d {
            ej.iter_mut().for_each(|c| *c = k.zero());
            ej[j] = k.one();
            let prod = h.mult_vec(&star_cols[i], &ej);
            let ea = e.apply(&k, &prod)?;
            let coords = linalg::solve(&k, emb.inclusion(), &ea)?
                .ok_or(StarError::ConditionalExpectationBroken { law: "image = A" })?;
            let block = v_form.gram().mul(&k, &rho.apply(&coords))?;
            for v in 0..n {
                for w in 0..n {
                    gram.set(i * n + v, j * n + w, block.at(v, w).clone());
                }
            }
        }
    }
    let gram = SesquilinearForm::new(&k, gram)?;
    if decidable && gram.is_positive_semidefinite(&k) != Some(true) {
        return Err(StarError::GramNotPositive);
    }

    // isometry of v -> 1 (x) v, checked before quotienting
    let unit_embed = |v: usize| -> Vec<Scalar> {
        let mut out = vec![k.zero(); big_dim];
        for (p, up) in h.unit_vec().iter().enumerate() {
            out[p * n + v] = up.clone();
        }
        out
    };
    for a in 0..n {
        for b in 0..n {
            let mut fa = vec![k.zero(); n];
            fa[a] = k.one();
            let mut fb = vec![k.zero(); n];
            fb[b] = k.one();
            if gram.evaluate(&k, &unit_embed(a), &unit_embed(b)) != v_form.evaluate(&k, &fa, &fb) {
                return Err(StarError::IsometryFailed);
            }
        }
    }

    // quotient by the radical; classes of the free coordinates form a basis
    let radical = linalg::kernel(&k, gram.gram());
    let mut is_pivot = vec![false; big_dim];
    for &p in radical.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..big_dim).filter(|&i| !is_pivot[i]).collect();
    let q = free.len();
    let mut proj_cols: Vec<Vec<Scalar>> = Vec::with_capacity(big_dim);
    for i in 0..big_dim {
        let mut e_i = vec![k.zero(); big_dim];
        e_i[i] = k.one();
        let r = radical.reduce(&k, &e_i);
        proj_cols.push(free.iter().map(|&f| r[f].clone()).collect());
    }
    // radical stability under the action (L_i (x) id on coordinates)
    for i in 0..d {
        let mut ei = vec![k.zero(); d];
        ei[i] = k.one();
        let li = h.left_mult_matrix(&ei);
        for r in radical.basis() {
            let mut moved = vec![k.zero(); big_dim];
            for jv in 0..big_dim {
                let (j, v) = (jv / n, jv % n);
                if r[jv].is_zero() {
                    continue;
                }
                for l in 0..d {
                    let c = li.at(l, j);
                    if !c.is_zero() {
                        moved[l * n + v] = k.add(&moved[l * n + v], &k.mul(c, &r[jv]));
                    }
                }
            }
            if !radical.contains(&k, &moved) {
                return Err(StarError::RadicalNotStable);
            }
        }
    }
    let mats: Vec<Matrix> = (0..d)
        .map(|i| {
            Matrix::from_fn(q, q, |row, col| {
                let (j, v) = (free[col] / n, free[col] % n);
                let mut acc = k.zero();
                for l in 0..d {
                    let c = h.mult_coeff(i, j, l);
                    if !c.is_zero() {
                        acc = k.add(&acc, &k.mul(c, &proj_cols[l * n + v][row]));
                    }
                }
                acc
            })
        })
        .collect();
    let induced = Representation::new(h.clone(), mats)?;
    let form = SesquilinearForm::new(
        &k,
        Matrix::from_fn(q, q, |p, r| gram.gram().at(free[p], free[r]).clone()),
    )?;
    if decidable && form.is_positive_definite(&k) != Some(true) {
        return Err(StarError::GramNotPositive);
    }

    // combined theta with the regular block of H//A and its GNS form
    let star_q = StarStructure::new(
        quotient
            .projection
            .mul(&k, star.matrix())?
            .mul(&k, &quotient.section.conj_entries(&k))?,
    );
    let q_report = verify_star(&quotient.algebra, &star_q)?;
    if !q_report.passes() {
        return Err(StarError::StarInvalid(q_report));
    }
    let haar = quotient.algebra.haar_functional()?;
    let qd = quotient.algebra.dim();
    let gns = Matrix::from_fn(qd, qd, |p, r| {
        let mut ep = vec![k.zero(); qd];
        ep[p] = k.one();
        let mut er = vec![k.zero(); qd];
        er[r] = k.one();
        let starred = star_q.apply(&k, &ep);
        haar.apply(&k, &quotient.algebra.mult_vec(&starred, &er))
    });
    let gns = SesquilinearForm::new(&k, gns)?;
    if decidable && gns.is_positive_definite(&k) != Some(true) {
        return Err(StarError::GramNotPositive);
    }
    let reg = Representation::regular(Arc::new(quotient.algebra.clone()));
    let total = qd + q;
    let combined_mats: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut ei = vec![k.zero(); d];
            ei[i] = k.one();
            let block1 = reg.apply(&quotient.projection.apply(&k, &ei).expect("shape"));
            let block2 = &induced.matrices()[i];
            Matrix::from_fn(total, total, |p, r| {
                if p < qd && r < qd {
                    block1.at(p, r).clone()
                } else if p >= qd && r >= qd {
                    block2.at(p - qd, r - qd).clone()
                } else {
                    k.zero()
                }
            })
        })
        .collect();
    let combined = Representation::new(h.clone(), combined_mats)?;
    let combined_form = SesquilinearForm::new(
        &k,
        Matrix::from_fn(total, total, |p, r| {
            if p < qd && r < qd {
                gns.gram().at(p, r).clone()
            } else if p >= qd && r >= qd {
                form.gram().at(p - qd, r - qd).clone()
            } else {
                k.zero()
            }
        }),
    )?;
    if !is_star_rep(&combined, star, Some(&combined_form))? {
        return Err(StarError::NotStarRep);
    }
    let positivity = if decidable {
        PositivityStatus::Verified
    } else {
        PositivityStatus::HermitianOnly
    };
    Ok(UnitaryInduction {
        induced,
        form,
        combined,
        combined_form,
        positivity,
    })
}
