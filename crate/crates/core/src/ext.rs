//! Normal Hopf subalgebras, exact sequences, induced modules, and the
//! representation combinators built from them: the extension representation
//! theta, glueing along two Hopf ideals, and the cotensor injectivity test.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{HopfAlgebraData, HopfError, HopfQuotient};
use crate::image::ImageError;
use crate::linalg::{self, LinalgError, Matrix, Subspace};
use crate::rep::{RepError, Representation};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtError {
    /// The inclusion matrix has the wrong shape.
    BadInclusionShape {
        rows: usize,
        cols: usize,
    },
    /// The inclusion is not injective.
    NotInjective,
    /// The inclusion fails a structure-map compatibility; the name records
    /// which one (mult, unit, comult, counit, antipode).
    NotEmbedding {
        law: &'static str,
    },
    /// A+H and HA+ differ, or their common value is not a Hopf ideal;
    /// happens when the subalgebra is not normal.
    PlusIdealNotHopf,
    /// The given projection is not a Hopf algebra map; the name records the
    /// first failing law.
    NotHopfMap {
        law: &'static str,
    },
    /// The subalgebra is not stable under both adjoint actions.
    NotNormal,
    /// A representation belongs to the wrong algebra.
    AlgebraMismatch,
    Hopf(HopfError),
    Rep(RepError),
    Image(ImageError),
    Linalg(LinalgError),
}

impl fmt::Display for ExtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtError::BadInclusionShape { rows, cols } => {
                write!(
                    f,
                    "inclusion matrix is {rows}x{cols}, expected (dim H) x (dim A)"
                )
            }
            ExtError::NotInjective => write!(f, "inclusion is not injective"),
            ExtError::NotEmbedding { law } => {
                write!(f, "inclusion does not respect the {law} structure")
            }
            ExtError::PlusIdealNotHopf => {
                write!(
                    f,
                    "A+H and HA+ differ or are not a Hopf ideal (subalgebra not normal)"
                )
            }
            ExtError::NotHopfMap { law } => {
                write!(f, "projection is not a Hopf algebra map: {law} fails")
            }
            ExtError::NotNormal => write!(f, "subalgebra is not adjoint-stable"),
            ExtError::AlgebraMismatch => write!(f, "representation belongs to a different algebra"),
            ExtError::Hopf(e) => write!(f, "{e}"),
            ExtError::Rep(e) => write!(f, "{e}"),
            ExtError::Image(e) => write!(f, "{e}"),
            ExtError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ExtError {}

impl From<HopfError> for ExtError {
    fn from(e: HopfError) -> Self {
        ExtError::Hopf(e)
    }
}

impl From<RepError> for ExtError {
    fn from(e: RepError) -> Self {
        ExtError::Rep(e)
    }
}

impl From<ImageError> for ExtError {
    fn from(e: ImageError) -> Self {
        ExtError::Image(e)
    }
}

impl From<LinalgError> for ExtError {
    fn from(e: LinalgError) -> Self {
        ExtError::Linalg(e)
    }
}

/// A Hopf subalgebra A of H presented by an inclusion matrix, validated to
/// respect multiplication, unit, comultiplication, counit and antipode.
#[derive(Debug, Clone)]
pub struct SubalgebraEmbedding {
    big: Arc<HopfAlgebraData>,
    small: Arc<HopfAlgebraData>,
    inclusion: Matrix,
    basis: Subspace,
}

impl SubalgebraEmbedding {
    pub fn new(
        big: Arc<HopfAlgebraData>,
        small: Arc<HopfAlgebraData>,
        inclusion: Matrix,
    ) -> Result<Self, ExtError> {
        let k = big.field();
        let (dh, da) = (big.dim(), small.dim());
        if inclusion.rows() != dh || inclusion.cols() != da {
            return Err(ExtError::BadInclusionShape {
                rows: inclusion.rows(),
                cols: inclusion.cols(),
            });
        }
        if inclusion.rank(k) != da {
            return Err(ExtError::NotInjective);
        }
        let include = |v: &[Scalar]| inclusion.apply(k, v).expect("shape checked");
        let small_basis = |a: usize| -> Vec<Scalar> {
            let mut e = vec![k.zero(); da];
            e[a] = k.one();
            e
        };
        // unit
        if include(small.unit_vec()) != big.unit_vec() {
            return Err(ExtError::NotEmbedding { law: "unit" });
        }
        for a in 0..da {
            let ia = include(&small_basis(a));
            // counit
            if big.counit_apply(&ia) != small.counit_apply(&small_basis(a)) {
                return Err(ExtError::NotEmbedding { law: "counit" });
            }
            // antipode
            let lhs = big.antipode_matrix().apply(k, &ia).expect("square");
            let rhs = include(
                &small
                    .antipode_matrix()
                    .apply(k, &small_basis(a))
                    .expect("square"),
            );
            if lhs != rhs {
                return Err(ExtError::NotEmbedding { law: "antipode" });
            }
            // comult: Delta_H(i(a)) = (i (x) i) Delta_A(a)
            let lhs = big.comult_vec(&ia);
            let small_comult = small.comult_vec(&small_basis(a));
            let mut rhs = vec![k.zero(); dh * dh];
            for p in 0..da {
                for q in 0..da {
                    let c = &small_comult[p * da + q];
                    if c.is_zero() {
                        continue;
                    }
                    let ip = include(&small_basis(p));
                    let iq = include(&small_basis(q));
                    for (x, ipx) in ip.iter().enumerate() {
                        if ipx.is_zero() {
                            continue;
                        }
                        for (y, iqy) in iq.iter().enumerate() {
                            if iqy.is_zero() {
                                continue;
                            }
                            let t = k.mul(c, &k.mul(ipx, iqy));
                            rhs[x * dh + y] = k.add(&rhs[x * dh + y], &t);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(ExtError::NotEmbedding { law: "comult" });
            }
            // mult against every other basis element
            for b in 0..da {
                let ib = include(&small_basis(b));
                let lhs = big.mult_vec(&ia, &ib);
                let rhs = include(&small.mult_vec(&small_basis(a), &small_basis(b)));
                if lhs != rhs {
                    return Err(ExtError::NotEmbedding { law: "mult" });
                }
            }
        }
        let basis =
            Subspace::from_spanning(k, dh, (0..da).map(|a| include(&small_basis(a))).collect())?;
        Ok(SubalgebraEmbedding {
            big,
            small,
            inclusion,
            basis,
        })
    }

    pub fn big(&self) -> &Arc<HopfAlgebraData> {
        &self.big
    }

    pub fn small(&self) -> &Arc<HopfAlgebraData> {
        &self.small
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    /// The image of A inside H.
    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    fn include(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.inclusion
            .apply(self.big.field(), v)
            .expect("shape checked")
    }
}

/// Conditions (1)-(4) of an exact sequence of Hopf algebra maps
/// k -> A -> H -> Q -> k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceReport {
    /// (1) i injective and p surjective.
    pub injective_and_surjective: bool,
    /// (2) p o i = unit o counit.
    pub counit_composite: bool,
    /// (3) Ker p = HA+.
    pub kernel_is_plus_ideal: bool,
    /// (4) A = coinvariants of p.
    pub coinvariants_match: bool,
}

impl ExactSequenceReport {
    pub fn passes(&self) -> bool {
        self.injective_and_surjective
            && self.counit_composite
            && self.kernel_is_plus_ideal
            && self.coinvariants_match
    }
}

/// H (x)_A V presented as a quotient of H (x) V, with the induced action.
#[derive(Debug, Clone)]
pub struct InducedModule {
    /// Dimension of H (x)_A V.
    pub dim: usize,
    /// Projection from H (x) V (coordinates (i, v) -> i n + v).
    pub projection: Matrix,
    /// The induced representation of H.
    pub rep: Representation,
}

/// The extension representation theta with its ingredients.
#[derive(Debug, Clone)]
pub struct ExtensionRep {
    /// Block sum of the regular representation of H//A pulled back along
    /// the projection, and the induced representation.
    pub rep: Representation,
    /// The inner-faithfulness contract is only guaranteed for commutative A.
    pub base_commutative: bool,
    pub quotient: HopfQuotient,
    pub induced: InducedModule,
}

/// True iff ad_l(x)(a) = x_(1) a S(x_(2)) and ad_r(x)(a) = S(x_(1)) a x_(2)
/// stay inside A for all basis x of H and a of A.
pub fn adjoint_stability(emb: &SubalgebraEmbedding) -> bool {
    let h = &emb.big;
    let k = h.field();
    let d = h.dim();
    let s = h.antipode_matrix();
    for i in 0..d {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        let delta = h.comult_vec(&e);
        for col in 0..emb.small.dim() {
            let a: Vec<Scalar> = (0..d).map(|r| emb.inclusion.at(r, col).clone()).collect();
            let mut ad_l = vec![k.zero(); d];
            let mut ad_r = vec![k.zero(); d];
            for p in 0..d {
                for q in 0..d {
                    let c = &delta[p * d + q];
                    if c.is_zero() {
                        continue;
                    }
                    let mut ep = vec![k.zero(); d];
                    ep[p] = k.one();
                    let mut eq = vec![k.zero(); d];
                    eq[q] = k.one();
                    let sq = s.apply(k, &eq).expect("square");
                    let sp = s.apply(k, &ep).expect("square");
                    let left = h.mult_vec(&h.mult_vec(&ep, &a), &sq);
                    let right = h.mult_vec(&h.mult_vec(&sp, &a), &eq);
                    for r in 0..d {
                        ad_l[r] = k.add(&ad_l[r], &k.mul(c, &left[r]));
                        ad_r[r] = k.add(&ad_r[r], &k.mul(c, &right[r]));
                    }
                }
            }
            if !emb.basis.contains(k, &ad_l) || !emb.basis.contains(k, &ad_r) {
                return false;
            }
        }
    }
    true
}

/// The ideal HA+ (= A+H for normal A), A+ = A intersect Ker eps. Errors
/// unless the two sides agree and form a Hopf ideal.
pub fn plus_ideal(emb: &SubalgebraEmbedding) -> Result<Subspace, ExtError> {
    let h = &emb.big;
    let k = h.field();
    let d = h.dim();
    let counit_row = Matrix::from_fn(1, d, |_, i| h.counit_vec()[i].clone());
    let a_plus = emb.basis.intersect(k, &linalg::kernel(k, &counit_row))?;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..d {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        for v in a_plus.basis() {
            left.push(h.mult_vec(&e, v));
            right.push(h.mult_vec(v, &e));
        }
    }
    let ha_plus = Subspace::from_spanning(k, d, left)?;
    let a_plus_h = Subspace::from_spanning(k, d, right)?;
    if ha_plus != a_plus_h || !h.is_hopf_ideal(&ha_plus)?.passes() {
        return Err(ExtError::PlusIdealNotHopf);
    }
    Ok(ha_plus)
}

/// H//A = H / HA+ with its projection.
pub fn quotient_by_subalgebra(emb: &SubalgebraEmbedding) -> Result<HopfQuotient, ExtError> {
    let ideal = plus_ideal(emb)?;
    Ok(emb.big.quotient(&ideal)?)
}

/// Verify that p: H -> Q is a Hopf algebra map (multiplicative, unital,
/// comultiplicative, counit- and antipode-compatible).
pub fn verify_hopf_map(
    h: &HopfAlgebraData,
    q: &HopfAlgebraData,
    p: &Matrix,
) -> Result<(), ExtError> {
    let k = h.field();
    let (d, dq) = (h.dim(), q.dim());
    if p.rows() != dq || p.cols() != d {
        return Err(ExtError::NotHopfMap { law: "shape" });
    }
    let apply = |v: &[Scalar]| p.apply(k, v).expect("shape checked");
    if apply(h.unit_vec()) != q.unit_vec() {
        return Err(ExtError::NotHopfMap { law: "unit" });
    }
    let basis = |i: usize| -> Vec<Scalar> {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        e
    };
    for i in 0..d {
        let pi = apply(&basis(i));
        if h.counit_apply(&basis(i)) != q.counit_apply(&pi) {
            return Err(ExtError::NotHopfMap { law: "counit" });
        }
        let lhs = apply(&h.antipode_matrix().apply(k, &basis(i)).expect("square"));
        let rhs = q.antipode_matrix().apply(k, &pi).expect("square");
        if lhs != rhs {
            return Err(ExtError::NotHopfMap { law: "antipode" });
        }
        // (p (x) p) Delta_H = Delta_Q p
        let big = h.comult_vec(&basis(i));
        let mut lhs = vec![k.zero(); dq * dq];
        for a in 0..d {
            for b in 0..d {
                let c = &big[a * d + b];
                if c.is_zero() {
                    continue;
                }
                for ma in 0..dq {
                    let pa = p.at(ma, a);
                    if pa.is_zero() {
                        continue;
                    }
                    for mb in 0..dq {
                        let pb = p.at(mb, b);
                        if pb.is_zero() {
                            continue;
                        }
                        let t = k.mul(c, &k.mul(pa, pb));
                        lhs[ma * dq + mb] = k.add(&lhs[ma * dq + mb], &t);
                    }
                }
            }
        }
        if lhs != q.comult_vec(&pi) {
            return Err(ExtError::NotHopfMap { law: "comult" });
        }
        for j in 0..d {
            let lhs = apply(&h.mult_vec(&basis(i), &basis(j)));
            let rhs = q.mult_vec(&apply(&basis(i)), &apply(&basis(j)));
            if lhs != rhs {
                return Err(ExtError::NotHopfMap { law: "mult" });
            }
        }
    }
    Ok(())
}

/// The coinvariants {h : (id (x) p) Delta(h) = h (x) 1}.
pub fn coinvariants(
    h: &HopfAlgebraData,
    q: &HopfAlgebraData,
    p: &Matrix,
) -> Result<Subspace, ExtError> {
    verify_hopf_map(h, q, p)?;
    let k = h.field();
    let (d, dq) = (h.dim(), q.dim());
    // rows (a, m): sum_{i,b} x_i c[i][a][b] p[m][b] - x_a unit_q[m] = 0
    let m = Matrix::from_fn(d * dq, d, |row, i| {
        let (a, mcol) = (row / dq, row % dq);
        let mut entry = k.zero();
        for b in 0..d {
            let c = h.comult_coeff(i, a, b);
            if !c.is_zero() {
                entry = k.add(&entry, &k.mul(c, p.at(mcol, b)));
            }
        }
        if a == i {
            entry = k.sub(&entry, &q.unit_vec()[mcol]);
        }
        entry
    });
    Ok(linalg::kernel(k, &m))
}

/// Conditions (1)-(4) for k -> A -> H -> Q -> k, each by exact linear
/// algebra. `p` must already be a Hopf map; that is re-verified.
pub fn check_exact_sequence(
    emb: &SubalgebraEmbedding,
    q: &HopfAlgebraData,
    p: &Matrix,
) -> Result<ExactSequenceReport, ExtError> {
    verify_hopf_map(&emb.big, q, p)?;
    let k = emb.big.field();
    let da = emb.small.dim();
    let injective_and_surjective = emb.inclusion.rank(k) == da && p.rank(k) == q.dim();
    // (2) p(i(a)) = eps_A(a) 1_Q
    let composite = p.mul(k, &emb.inclusion)?;
    let expected = Matrix::from_fn(q.dim(), da, |m, a| {
        k.mul(&q.unit_vec()[m], &emb.small.counit_vec()[a])
    });
    let counit_composite = composite == expected;
    // (3) Ker p = HA+
    let kernel_is_plus_ideal = match plus_ideal(emb) {
        Ok(ideal) => linalg::kernel(k, p) == ideal,
        Err(ExtError::PlusIdealNotHopf) => false,
        Err(e) => return Err(e),
    };
    // (4) A = H^co p
    let coinvariants_match = coinvariants(&emb.big, q, p)? == emb.basis;
    Ok(ExactSequenceReport {
        injective_and_surjective,
        counit_composite,
        kernel_is_plus_ideal,
        coinvariants_match,
    })
}

/// H (x)_A V: quotient of H (x) V by span{x i(a) (x) v - x (x) rho(a) v},
/// with the action x [y (x) v] = [xy (x) v].
pub fn induced_module(
    emb: &SubalgebraEmbedding,
    rho: &Representation,
) -> Result<InducedModule, ExtError> {
    if rho.algebra().as_ref() != emb.small.as_ref() {
        return Err(ExtError::AlgebraMismatch);
    }
    let h = &emb.big;
    let k = h.field();
    let d = h.dim();
    let da = emb.small.dim();
    let n = rho.dim();
    let big_dim = d * n;
    // relations over all basis triples (x, a, v)
    let mut relations = Vec::with_capacity(d * da * n);
    for i in 0..d {
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        for a in 0..da {
            let mut ea = vec![k.zero(); da];
            ea[a] = k.one();
            let xa = h.mult_vec(&e, &emb.include(&ea));
            let rho_a = &rho.matrices()[a];
            for v in 0..n {
                let mut rel = vec![k.zero(); big_dim];
                for (l, c) in xa.iter().enumerate() {
                    if !c.is_zero() {
                        rel[l * n + v] = k.add(&rel[l * n + v], c);
                    }
                }
                for w in 0..n {
                    let c = rho_a.at(w, v);
                    if !c.is_zero() {
                        rel[i * n + w] = k.sub(&rel[i * n + w], c);
                    }
                }
                relations.push(rel);
            }
        }
    }
    let rel_space = Subspace::from_spanning(k, big_dim, relations)?;
    let mut is_pivot = vec![false; big_dim];
    for &p in rel_space.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..big_dim).filter(|&i| !is_pivot[i]).collect();
    let q = free.len();
    let mut proj_cols: Vec<Vec<Scalar>> = Vec::with_capacity(big_dim);
    for i in 0..big_dim {
        let mut e = vec![k.zero(); big_dim];
        e[i] = k.one();
        let r = rel_space.reduce(k, &e);
        proj_cols.push(free.iter().map(|&f| r[f].clone()).collect());
    }
    let projection = Matrix::from_fn(q, big_dim, |m, i| proj_cols[i][m].clone());

    // action of e_i on class of coordinate (j, v): project (e_i e_j) (x) v
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
    let rep = Representation::new(h.clone(), mats)?;
    debug_assert!(rep.verify().passes());
    Ok(InducedModule {
        dim: q,
        projection,
        rep,
    })
}

/// theta: x -> (regular rep of H//A applied to p(x)) block-sum (induced
/// action of x). Inner faithful whenever rho is inner faithful on a
/// commutative normal A; `base_commutative` records whether the hypothesis
/// held.
pub fn extension_rep(
    emb: &SubalgebraEmbedding,
    rho: &Representation,
) -> Result<ExtensionRep, ExtError> {
    if !adjoint_stability(emb) {
        return Err(ExtError::NotNormal);
    }
    if !rho.verify().passes() {
        return Err(ExtError::Rep(RepError::AlgebraMismatch));
    }
    let small = &emb.small;
    let da = small.dim();
    let base_commutative = (0..da).all(|i| {
        (0..da).all(|j| (0..da).all(|l| small.mult_coeff(i, j, l) == small.mult_coeff(j, i, l)))
    });
    let quotient = quotient_by_subalgebra(emb)?;
    let induced = induced_module(emb, rho)?;
    let h = &emb.big;
    let k = h.field();
    let reg = Representation::regular(Arc::new(quotient.algebra.clone()));
    let d = h.dim();
    let qd = quotient.algebra.dim();
    let total = qd + induced.dim;
    let mats: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            let block1 = reg.apply(&quotient.projection.apply(k, &e).expect("shape"));
            let block2 = &induced.rep.matrices()[i];
            Matrix::from_fn(total, total, |p, q| {
                if p < qd && q < qd {
                    block1.at(p, q).clone()
                } else if p >= qd && q >= qd {
                    block2.at(p - qd, q - qd).clone()
                } else {
                    k.zero()
                }
            })
        })
        .collect();
    let rep = Representation::new(h.clone(), mats)?;
    debug_assert!(rep.verify().passes());
    Ok(ExtensionRep {
        rep,
        base_commutative,
        quotient,
        induced,
    })
}

fn pullback(
    h: &Arc<HopfAlgebraData>,
    quotient: &HopfQuotient,
    rho: &Representation,
) -> Result<Representation, ExtError> {
    if rho.algebra().as_ref() != &quotient.algebra {
        return Err(ExtError::AlgebraMismatch);
    }
    let k = h.field();
    let d = h.dim();
    let mats = (0..d)
        .map(|i| {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            rho.apply(&quotient.projection.apply(k, &e).expect("shape"))
        })
        .collect();
    Ok(Representation::new(h.clone(), mats)?)
}

/// x -> (rho_1(pi_1(x)), rho_2(pi_2(x))): the product of the pullbacks of
/// rho_k along the quotients by two Hopf ideals. The rho_k must be
/// representations of the canonical quotients H/I_k. Inner faithful when
/// both rho_k are inner faithful and the largest Hopf ideal inside
/// I_1 intersect I_2 is zero; callers check that with the image module.
pub fn glueing_rep(
    h: &Arc<HopfAlgebraData>,
    i1: &Subspace,
    i2: &Subspace,
    rho1: &Representation,
    rho2: &Representation,
) -> Result<Representation, ExtError> {
    let q1 = h.quotient(i1)?;
    let q2 = h.quotient(i2)?;
    let p1 = pullback(h, &q1, rho1)?;
    let p2 = pullback(h, &q2, rho2)?;
    Ok(p1.product(&p2)?)
}

/// Injectivity of theta: x -> pi_1(x_(1)) (x) pi_2(x_(2)) into
/// H/I_1 (x) H/I_2, by exact rank.
pub fn cotensor_injectivity(
    h: &HopfAlgebraData,
    i1: &Subspace,
    i2: &Subspace,
) -> Result<bool, ExtError> {
    let report = h.is_hopf_ideal(i1)?;
    if !report.passes() {
        return Err(ExtError::Hopf(HopfError::NotHopfIdeal(report)));
    }
    let report = h.is_hopf_ideal(i2)?;
    if !report.passes() {
        return Err(ExtError::Hopf(HopfError::NotHopfIdeal(report)));
    }
    let q1 = h.quotient(i1)?;
    let q2 = h.quotient(i2)?;
    let k = h.field();
    let d = h.dim();
    let (n1, n2) = (q1.algebra.dim(), q2.algebra.dim());
    let theta = Matrix::from_fn(n1 * n2, d, |row, i| {
        let (m1, m2) = (row / n2, row % n2);
        let mut e = vec![k.zero(); d];
        e[i] = k.one();
        let delta = h.comult_vec(&e);
        let mut acc = k.zero();
        for a in 0..d {
            for b in 0..d {
                let c = &delta[a * d + b];
                if c.is_zero() {
                    continue;
                }
                let t = k.mul(c, &k.mul(q1.projection.at(m1, a), q2.projection.at(m2, b)));
                acc = k.add(&acc, &t);
            }
        }
        acc
    });
    Ok(theta.rank(k) == d)
}
