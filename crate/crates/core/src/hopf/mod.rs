//! Finite-dimensional Hopf algebras as structure constants.
//!
//! A [`HopfAlgebraData`] holds the multiplication and comultiplication
//! tensors, unit, counit and antipode of a Hopf algebra on basis
//! `e_0, ..., e_{d-1}`. Every axiom is a finite contraction identity;
//! [`HopfAlgebraData::verify`] checks them all and reports per family.
//!
//! Tensor coordinates use the crate convention `e_i (x) e_j <-> i*d + j`.
//!
//! Layout of the rank-3 tables, flat with index `(i*d + j)*d + k`:
//! `mult`: e_i e_j = sum_k mult[i][j][k] e_k;
//! `comult`: Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k.

pub mod builders;
pub mod groups;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{self, LinalgError, Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};

pub use groups::{GroupTable, GroupTableError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    /// A structure table has the wrong number of entries.
    BadTableSize {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    /// A vector or subspace has the wrong ambient dimension.
    AmbientMismatch {
        expected: usize,
        got: usize,
    },
    /// The subspace fails the Hopf ideal conditions.
    NotHopfIdeal(HopfIdealReport),
    /// The vector is not group-like.
    NotGrouplike,
    /// No normalized left-invariant functional exists.
    NoHaarFunctional,
    /// No power of the antipode reached the identity within the cap.
    AntipodeOrderCapExceeded {
        cap: usize,
    },
    /// The antipode matrix is singular.
    AntipodeSingular,
    Group(GroupTableError),
    Linalg(LinalgError),
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::BadTableSize {
                table,
                expected,
                got,
            } => {
                write!(f, "table `{table}` has {got} entries, expected {expected}")
            }
            HopfError::AmbientMismatch { expected, got } => {
                write!(
                    f,
                    "ambient dimension mismatch: expected {expected}, got {got}"
                )
            }
            HopfError::NotHopfIdeal(report) => {
                write!(f, "subspace is not a Hopf ideal: {report}")
            }
            HopfError::NotGrouplike => write!(f, "vector is not group-like"),
            HopfError::NoHaarFunctional => {
                write!(f, "no normalized left-invariant functional exists")
            }
            HopfError::AntipodeOrderCapExceeded { cap } => {
                write!(f, "antipode order exceeds cap {cap}")
            }
            HopfError::AntipodeSingular => write!(f, "antipode matrix is singular"),
            HopfError::Group(e) => write!(f, "{e}"),
            HopfError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HopfError {}

impl From<LinalgError> for HopfError {
    fn from(e: LinalgError) -> Self {
        HopfError::Linalg(e)
    }
}

impl From<GroupTableError> for HopfError {
    fn from(e: GroupTableError) -> Self {
        HopfError::Group(e)
    }
}

/// Result of one axiom family: pass, or the first failing index triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub passed: bool,
    /// Indices identifying the first failing instance (meaning varies per
    /// family; basis indices of the contraction that failed).
    pub first_failure: Option<[usize; 3]>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            passed: true,
            first_failure: None,
        }
    }

    fn fail(at: [usize; 3]) -> Self {
        AxiomCheck {
            passed: false,
            first_failure: Some(at),
        }
    }
}

/// Per-family axiom verdicts. All families are always evaluated, so a
/// mutation that breaks several axioms reports all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub associativity: AxiomCheck,
    pub unit_law: AxiomCheck,
    pub coassociativity: AxiomCheck,
    pub counit_law: AxiomCheck,
    pub comult_algebra_map: AxiomCheck,
    pub counit_algebra_map: AxiomCheck,
    pub antipode_law: AxiomCheck,
    pub antipode_invertible: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.passed)
    }

    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 8] {
        [
            ("associativity", &self.associativity),
            ("unit_law", &self.unit_law),
            ("coassociativity", &self.coassociativity),
            ("counit_law", &self.counit_law),
            ("comult_algebra_map", &self.comult_algebra_map),
            ("counit_algebra_map", &self.counit_algebra_map),
            ("antipode_law", &self.antipode_law),
            ("antipode_invertible", &self.antipode_invertible),
        ]
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks()
            .iter()
            .filter(|(_, c)| !c.passed)
            .map(|(n, _)| *n)
            .collect()
    }
}

/// A linear form on H, coefficients against the dual basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    coeffs: Vec<Scalar>,
}

impl Functional {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Functional { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn apply(&self, k: &FieldSpec, v: &[Scalar]) -> Scalar {
        debug_assert_eq!(v.len(), self.coeffs.len());
        let mut acc = k.zero();
        for (c, x) in self.coeffs.iter().zip(v) {
            acc = k.add(&acc, &k.mul(c, x));
        }
        acc
    }
}

/// Hopf ideal conditions, reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfIdealReport {
    pub two_sided_ideal: bool,
    pub counit_vanishes: bool,
    pub antipode_stable: bool,
    pub coideal: bool,
}

impl HopfIdealReport {
    pub fn passes(&self) -> bool {
        self.two_sided_ideal && self.counit_vanishes && self.antipode_stable && self.coideal
    }
}

impl fmt::Display for HopfIdealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ideal={} counit={} antipode={} coideal={}",
            self.two_sided_ideal, self.counit_vanishes, self.antipode_stable, self.coideal
        )
    }
}

/// Quotient Hopf algebra H/J with the projection and a linear section.
#[derive(Debug, Clone)]
pub struct HopfQuotient {
    pub algebra: HopfAlgebraData,
    /// q x d matrix of the canonical projection H -> H/J.
    pub projection: Matrix,
    /// d x q matrix picking the complement-coordinate representatives;
    /// projection * section = identity on the quotient.
    pub section: Matrix,
}

/// A finite-dimensional Hopf algebra by structure constants. Immutable
/// after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfAlgebraData {
    field: FieldSpec,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Matrix,
}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebraData(dim {}, field degree {})",
            self.dim,
            self.field.degree()
        )
    }
}

impl HopfAlgebraData {
    /// Wrap structure tables, checking shapes only. Axioms are checked by
    /// [`verify`](Self::verify); downstream operations assume they hold.
    pub fn new(
        field: FieldSpec,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let d = unit.len();
        let cube = d * d * d;
        if mult.len() != cube {
            return Err(HopfError::BadTableSize {
                table: "mult",
                expected: cube,
                got: mult.len(),
            });
        }
        if comult.len() != cube {
            return Err(HopfError::BadTableSize {
                table: "comult",
                expected: cube,
                got: comult.len(),
            });
        }
        if counit.len() != d {
            return Err(HopfError::BadTableSize {
                table: "counit",
                expected: d,
                got: counit.len(),
            });
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(HopfError::BadTableSize {
                table: "antipode",
                expected: d * d,
                got: antipode.rows() * antipode.cols(),
            });
        }
        Ok(HopfAlgebraData {
            field,
            dim: d,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn mult_table(&self) -> &[Scalar] {
        &self.mult
    }

    pub fn comult_table(&self) -> &[Scalar] {
        &self.comult
    }

    pub fn unit_vec(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    // ---- evaluation on coordinate vectors ----

    /// Product of two elements given by coordinates.
    pub fn mult_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let d = self.dim;
        let mut out = vec![k.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = k.mul(xi, yj);
                for l in 0..d {
                    let c = self.mult_coeff(i, j, l);
                    if !c.is_zero() {
                        out[l] = k.add(&out[l], &k.mul(&xy, c));
                    }
                }
            }
        }
        out
    }

    /// Coproduct of an element, as a d^2 coordinate vector.
    pub fn comult_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let d = self.dim;
        let mut out = vec![k.zero(); d * d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for l in 0..d {
                    let c = self.comult_coeff(i, j, l);
                    if !c.is_zero() {
                        out[j * d + l] = k.add(&out[j * d + l], &k.mul(xi, c));
                    }
                }
            }
        }
        out
    }

    pub fn counit_apply(&self, x: &[Scalar]) -> Scalar {
        let k = &self.field;
        let mut acc = k.zero();
        for (xi, ci) in x.iter().zip(&self.counit) {
            acc = k.add(&acc, &k.mul(xi, ci));
        }
        acc
    }

    /// Left multiplication by x as a d x d matrix.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
        for j in 0..d {
            let mut e = vec![self.field.zero(); d];
            e[j] = self.field.one();
            cols.push(self.mult_vec(x, &e));
        }
        Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
    }

    /// Right multiplication by x as a d x d matrix.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
        for j in 0..d {
            let mut e = vec![self.field.zero(); d];
            e[j] = self.field.one();
            cols.push(self.mult_vec(&e, x));
        }
        Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
    }

    /// The comultiplication as a d^2 x d matrix.
    pub fn comult_matrix(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d * d, d, |row, i| {
            self.comult_coeff(i, row / d, row % d).clone()
        })
    }

    /// The multiplication as a d x d^2 matrix (columns indexed i*d+j).
    pub fn mult_matrix(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d, d * d, |k, col| {
            self.mult_coeff(col / d, col % d, k).clone()
        })
    }

    // ---- axioms ----

    /// Check every Hopf algebra axiom family. All families are evaluated
    /// even after a failure, for mutation diagnostics.
    pub fn verify(&self) -> AxiomReport {
        AxiomReport {
            associativity: self.check_associativity(),
            unit_law: self.check_unit_law(),
            coassociativity: self.check_coassociativity(),
            counit_law: self.check_counit_law(),
            comult_algebra_map: self.check_comult_algebra_map(),
            counit_algebra_map: self.check_counit_algebra_map(),
            antipode_law: self.check_antipode_law(),
            antipode_invertible: if self.antipode.inverse(&self.field).is_ok() {
                AxiomCheck::pass()
            } else {
                AxiomCheck::fail([0, 0, 0])
            },
        }
    }

    fn check_associativity(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    for out in 0..d {
                        // sum_m mult[i][j][m] mult[m][l][out] = sum_m mult[j][l][m] mult[i][m][out]
                        let mut lhs = k.zero();
                        let mut rhs = k.zero();
                        for m in 0..d {
                            lhs = k.add(
                                &lhs,
                                &k.mul(self.mult_coeff(i, j, m), self.mult_coeff(m, l, out)),
                            );
                            rhs = k.add(
                                &rhs,
                                &k.mul(self.mult_coeff(j, l, m), self.mult_coeff(i, m, out)),
                            );
                        }
                        if lhs != rhs {
                            return AxiomCheck::fail([i, j, l]);
                        }
                    }
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_unit_law(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        for i in 0..d {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            let left = self.mult_vec(&self.unit, &e);
            let right = self.mult_vec(&e, &self.unit);
            for l in 0..d {
                let expected = if l == i { k.one() } else { k.zero() };
                if left[l] != expected {
                    return AxiomCheck::fail([i, l, 0]);
                }
                if right[l] != expected {
                    return AxiomCheck::fail([i, l, 1]);
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_coassociativity(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        for i in 0..d {
            for p in 0..d {
                for q in 0..d {
                    for r in 0..d {
                        // (Delta (x) id) Delta: sum_a c[i][a][r] c[a][p][q]
                        // (id (x) Delta) Delta: sum_b c[i][p][b] c[b][q][r]
                        let mut lhs = k.zero();
                        let mut rhs = k.zero();
                        for m in 0..d {
                            lhs = k.add(
                                &lhs,
                                &k.mul(self.comult_coeff(i, m, r), self.comult_coeff(m, p, q)),
                            );
                            rhs = k.add(
                                &rhs,
                                &k.mul(self.comult_coeff(i, p, m), self.comult_coeff(m, q, r)),
                            );
                        }
                        if lhs != rhs {
                            return AxiomCheck::fail([i, p, q]);
                        }
                    }
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_counit_law(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        for i in 0..d {
            for b in 0..d {
                // (eps (x) id): sum_a c[i][a][b] eps(e_a) = delta_ib
                let mut left = k.zero();
                let mut right = k.zero();
                for a in 0..d {
                    left = k.add(&left, &k.mul(self.comult_coeff(i, a, b), &self.counit[a]));
                    right = k.add(&right, &k.mul(self.comult_coeff(i, b, a), &self.counit[a]));
                }
                let expected = if b == i { k.one() } else { k.zero() };
                if left != expected {
                    return AxiomCheck::fail([i, b, 0]);
                }
                if right != expected {
                    return AxiomCheck::fail([i, b, 1]);
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_comult_algebra_map(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        // Delta(1) = 1 (x) 1
        let delta_unit = self.comult_vec(&self.unit);
        for p in 0..d {
            for q in 0..d {
                if delta_unit[p * d + q] != k.mul(&self.unit[p], &self.unit[q]) {
                    return AxiomCheck::fail([p, q, 0]);
                }
            }
        }
        // Delta(e_i e_j) = Delta(e_i) Delta(e_j), multiplied in H (x) H
        for i in 0..d {
            for j in 0..d {
                let mut lhs = vec![k.zero(); d * d];
                for m in 0..d {
                    let c = self.mult_coeff(i, j, m);
                    if c.is_zero() {
                        continue;
                    }
                    for p in 0..d {
                        for q in 0..d {
                            let t = self.comult_coeff(m, p, q);
                            if !t.is_zero() {
                                lhs[p * d + q] = k.add(&lhs[p * d + q], &k.mul(c, t));
                            }
                        }
                    }
                }
                let mut rhs = vec![k.zero(); d * d];
                for a in 0..d {
                    for b in 0..d {
                        let cab = self.comult_coeff(i, a, b);
                        if cab.is_zero() {
                            continue;
                        }
                        for c in 0..d {
                            for e in 0..d {
                                let cce = self.comult_coeff(j, c, e);
                                if cce.is_zero() {
                                    continue;
                                }
                                let coeff = k.mul(cab, cce);
                                for p in 0..d {
                                    let m1 = self.mult_coeff(a, c, p);
                                    if m1.is_zero() {
                                        continue;
                                    }
                                    for q in 0..d {
                                        let m2 = self.mult_coeff(b, e, q);
                                        if m2.is_zero() {
                                            continue;
                                        }
                                        let t = k.mul(&coeff, &k.mul(m1, m2));
                                        rhs[p * d + q] = k.add(&rhs[p * d + q], &t);
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return AxiomCheck::fail([i, j, 0]);
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_counit_algebra_map(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        if self.counit_apply(&self.unit) != k.one() {
            return AxiomCheck::fail([0, 0, 1]);
        }
        for i in 0..d {
            for j in 0..d {
                let mut lhs = k.zero();
                for m in 0..d {
                    lhs = k.add(&lhs, &k.mul(self.mult_coeff(i, j, m), &self.counit[m]));
                }
                if lhs != k.mul(&self.counit[i], &self.counit[j]) {
                    return AxiomCheck::fail([i, j, 0]);
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_antipode_law(&self) -> AxiomCheck {
        let k = &self.field;
        let d = self.dim;
        for i in 0..d {
            // m(S (x) id)Delta(e_i) and m(id (x) S)Delta(e_i), both must be eps(e_i) 1
            let mut left = vec![k.zero(); d];
            let mut right = vec![k.zero(); d];
            for a in 0..d {
                for b in 0..d {
                    let c = self.comult_coeff(i, a, b);
                    if c.is_zero() {
                        continue;
                    }
                    let mut ea = vec![k.zero(); d];
                    ea[a] = k.one();
                    let mut eb = vec![k.zero(); d];
                    eb[b] = k.one();
                    let sa = self.antipode.apply(k, &ea).expect("square matrix");
                    let sb = self.antipode.apply(k, &eb).expect("square matrix");
                    let l = self.mult_vec(&sa, &eb);
                    let r = self.mult_vec(&ea, &sb);
                    for t in 0..d {
                        left[t] = k.add(&left[t], &k.mul(c, &l[t]));
                        right[t] = k.add(&right[t], &k.mul(c, &r[t]));
                    }
                }
            }
            for t in 0..d {
                let expected = k.mul(&self.counit[i], &self.unit[t]);
                if left[t] != expected {
                    return AxiomCheck::fail([i, t, 0]);
                }
                if right[t] != expected {
                    return AxiomCheck::fail([i, t, 1]);
                }
            }
        }
        AxiomCheck::pass()
    }

    // ---- antipode order ----

    /// Default cap for the antipode order search.
    pub fn antipode_order_cap(&self) -> usize {
        4 * self.dim * self.dim
    }

    /// Smallest t >= 1 with S^t = id, searched up to the default cap 4 d^2.
    pub fn antipode_order(&self) -> Result<usize, HopfError> {
        self.antipode_order_capped(self.antipode_order_cap())
    }

    pub fn antipode_order_capped(&self, cap: usize) -> Result<usize, HopfError> {
        let k = &self.field;
        let mut power = self.antipode.clone();
        for t in 1..=cap {
            if power.is_identity() {
                return Ok(t);
            }
            power = power
                .mul(k, &self.antipode)
                .expect("square matrices compose");
        }
        Err(HopfError::AntipodeOrderCapExceeded { cap })
    }

    /// S^t as a matrix (t = 0 gives the identity).
    pub fn antipode_power(&self, t: usize) -> Matrix {
        let k = &self.field;
        let mut m = Matrix::identity(k, self.dim);
        for _ in 0..t {
            m = m.mul(k, &self.antipode).expect("square matrices compose");
        }
        m
    }

    // ---- ideals and quotients ----

    /// Check the four Hopf ideal conditions for a subspace J:
    /// two-sided ideal, eps(J) = 0, S(J) in J, Delta(J) in J(x)H + H(x)J.
    pub fn is_hopf_ideal(&self, j: &Subspace) -> Result<HopfIdealReport, HopfError> {
        let k = &self.field;
        let d = self.dim;
        if j.ambient() != d {
            return Err(HopfError::AmbientMismatch {
                expected: d,
                got: j.ambient(),
            });
        }
        let mut two_sided = true;
        'ideal: for i in 0..d {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            for v in j.basis() {
                if !j.contains(k, &self.mult_vec(&e, v)) || !j.contains(k, &self.mult_vec(v, &e)) {
                    two_sided = false;
                    break 'ideal;
                }
            }
        }
        let counit_vanishes = j.basis().iter().all(|v| self.counit_apply(v).is_zero());
        let antipode_stable = j
            .basis()
            .iter()
            .all(|v| j.contains(k, &self.antipode.apply(k, v).expect("ambient checked")));
        let mixed = linalg::tensor_right(k, j, d).sum(k, &linalg::tensor_left(k, d, j))?;
        let coideal = j
            .basis()
            .iter()
            .all(|v| mixed.contains(k, &self.comult_vec(v)));
        Ok(HopfIdealReport {
            two_sided_ideal: two_sided,
            counit_vanishes,
            antipode_stable,
            coideal,
        })
    }

    /// Quotient by a Hopf ideal. The quotient basis is the complement of J
    /// chosen greedily by pivot positions, so structure constants are
    /// deterministic.
    pub fn quotient(&self, j: &Subspace) -> Result<HopfQuotient, HopfError> {
        let report = self.is_hopf_ideal(j)?;
        if !report.passes() {
            return Err(HopfError::NotHopfIdeal(report));
        }
        let k = &self.field;
        let d = self.dim;
        let mut is_pivot = vec![false; d];
        for &p in j.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..d).filter(|&i| !is_pivot[i]).collect();
        let q = free.len();
        debug_assert_eq!(q, d - j.dim());

        // projection: class of e_i = residue of e_i, read off at free coords
        let mut proj_cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut e = vec![k.zero(); d];
            e[i] = k.one();
            let r = j.reduce(k, &e);
            proj_cols.push(free.iter().map(|&n| r[n].clone()).collect());
        }
        let projection = Matrix::from_fn(q, d, |m, i| proj_cols[i][m].clone());
        let section = Matrix::from_fn(d, q, |i, m| if free[m] == i { k.one() } else { k.zero() });

        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = j.reduce(k, v);
            free.iter().map(|&n| r[n].clone()).collect()
        };

        let mut mult = Vec::with_capacity(q * q * q);
        for &a in &free {
            for &b in &free {
                let mut ea = vec![k.zero(); d];
                ea[a] = k.one();
                let mut eb = vec![k.zero(); d];
                eb[b] = k.one();
                mult.extend(project(&self.mult_vec(&ea, &eb)));
            }
        }
        let mut comult = Vec::with_capacity(q * q * q);
        for &a in &free {
            let mut ea = vec![k.zero(); d];
            ea[a] = k.one();
            let big = self.comult_vec(&ea);
            // apply projection (x) projection
            let mut small = vec![k.zero(); q * q];
            for p in 0..d {
                for r in 0..d {
                    let c = &big[p * d + r];
                    if c.is_zero() {
                        continue;
                    }
                    for (mp, pcp) in proj_cols[p].iter().enumerate() {
                        if pcp.is_zero() {
                            continue;
                        }
                        for (mr, pcr) in proj_cols[r].iter().enumerate() {
                            if pcr.is_zero() {
                                continue;
                            }
                            let t = k.mul(c, &k.mul(pcp, pcr));
                            small[mp * q + mr] = k.add(&small[mp * q + mr], &t);
                        }
                    }
                }
            }
            comult.extend(small);
        }
        let unit = project(&self.unit);
        let counit: Vec<Scalar> = free.iter().map(|&n| self.counit[n].clone()).collect();
        let antipode = projection.mul(k, &self.antipode)?.mul(k, &section)?;
        let algebra =
            HopfAlgebraData::new(self.field.clone(), mult, unit, comult, counit, antipode)?;
        Ok(HopfQuotient {
            algebra,
            projection,
            section,
        })
    }

    // ---- invariant functional ----

    /// The normalized left-invariant functional: the unique phi with
    /// (id (x) phi) Delta(x) = phi(x) 1 and phi(1) = 1, when it exists.
    pub fn haar_functional(&self) -> Result<Functional, HopfError> {
        let k = &self.field;
        let d = self.dim;
        // Rows (i, j): sum_l c[i][j][l] phi_l - unit[j] phi_i = 0.
        let mut a = Matrix::zero(k, d * d + 1, d);
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let mut entry = self.comult_coeff(i, j, l).clone();
                    if l == i {
                        entry = k.sub(&entry, &self.unit[j]);
                    }
                    a.set(i * d + j, l, entry);
                }
            }
        }
        for l in 0..d {
            a.set(d * d, l, self.unit[l].clone());
        }
        let mut b = vec![k.zero(); d * d + 1];
        b[d * d] = k.one();
        match linalg::solve(k, &a, &b)? {
            Some(x) => Ok(Functional::new(x)),
            None => Err(HopfError::NoHaarFunctional),
        }
    }

    // ---- group-likes and skew-primitives ----

    /// True iff Delta(v) = v (x) v and eps(v) = 1.
    pub fn grouplike_check(&self, v: &[Scalar]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let k = &self.field;
        if self.counit_apply(v) != k.one() {
            return false;
        }
        let d = self.dim;
        let dv = self.comult_vec(v);
        for p in 0..d {
            for q in 0..d {
                if dv[p * d + q] != k.mul(&v[p], &v[q]) {
                    return false;
                }
            }
        }
        true
    }

    /// The space P_{g,1} = {x : Delta(x) = x (x) 1 + g (x) x} for a
    /// group-like g.
    pub fn skew_primitives(&self, g: &[Scalar]) -> Result<Subspace, HopfError> {
        if !self.grouplike_check(g) {
            return Err(HopfError::NotGrouplike);
        }
        let k = &self.field;
        let d = self.dim;
        // Column i: Delta(e_i) - e_i (x) 1 - g (x) e_i as a d^2 vector.
        let m = Matrix::from_fn(d * d, d, |row, i| {
            let (p, q) = (row / d, row % d);
            let mut entry = self.comult_coeff(i, p, q).clone();
            if p == i {
                entry = k.sub(&entry, &self.unit[q]);
            }
            if q == i {
                entry = k.sub(&entry, &g[p]);
            }
            entry
        });
        Ok(linalg::kernel(k, &m))
    }
}

#[cfg(test)]
mod tests {
    use super::builders::{dual_group_algebra, group_algebra, sweedler};
    use super::*;
    use crate::scalar::Rational;
    use num_bigint::BigInt;

    fn basis_vec(h: &HopfAlgebraData, i: usize) -> Vec<Scalar> {
        let mut v = vec![h.field().zero(); h.dim()];
        v[i] = h.field().one();
        v
    }

    #[test]
    fn sweedler_passes_all_axioms() {
        let h = sweedler();
        let report = h.verify();
        assert!(report.all_pass(), "failing: {:?}", report.failing());
    }

    #[test]
    fn perturbed_sweedler_fails() {
        let h = sweedler();
        let k = h.field().clone();
        let mut mult = h.mult_table().to_vec();
        // perturb the coefficient of e_0 in e_1 e_1 (g*g) by +1
        let d = h.dim();
        mult[(1 * d + 1) * d] = k.add(&mult[(1 * d + 1) * d], &k.one());
        let bad = HopfAlgebraData::new(
            k,
            mult,
            h.unit_vec().to_vec(),
            h.comult_table().to_vec(),
            h.counit_vec().to_vec(),
            h.antipode_matrix().clone(),
        )
        .unwrap();
        assert!(!bad.verify().all_pass());
    }

    #[test]
    fn antipode_orders() {
        assert_eq!(
            group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(2))
                .antipode_order()
                .unwrap(),
            1
        );
        assert_eq!(
            group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(3))
                .antipode_order()
                .unwrap(),
            2
        );
        assert_eq!(sweedler().antipode_order().unwrap(), 4);
    }

    #[test]
    fn hopf_ideal_conditions() {
        let h = sweedler();
        let k = h.field();
        // J = 0 passes
        let zero = Subspace::zero(4);
        assert!(h.is_hopf_ideal(&zero).unwrap().passes());
        // J = Ker eps passes (augmentation ideal): span{g-1, x, gx}
        let ker_eps = linalg::kernel(
            k,
            &Matrix::from_rows(vec![h.counit_vec().to_vec()]).unwrap(),
        );
        assert_eq!(ker_eps.dim(), 3);
        assert!(h.is_hopf_ideal(&ker_eps).unwrap().passes());
        // J = span{x}: a coideal (Delta x = x(x)1 + g(x)x lands in the mixed
        // sum) but neither an ideal (gx = g x is outside) nor S-stable.
        let x_span = Subspace::from_spanning(k, 4, vec![basis_vec(&h, 2)]).unwrap();
        let report = h.is_hopf_ideal(&x_span).unwrap();
        assert!(report.coideal && report.counit_vanishes);
        assert!(!report.two_sided_ideal && !report.antipode_stable);
        assert!(!report.passes());
        // J = span{x - gx}: a two-sided ideal killed by eps, but the coideal
        // condition fails (the (gx)(x)1 coordinate of Delta cannot cancel).
        let mut x_minus_gx = basis_vec(&h, 2);
        x_minus_gx[3] = k.from_int(-1);
        let j = Subspace::from_spanning(k, 4, vec![x_minus_gx]).unwrap();
        let report = h.is_hopf_ideal(&j).unwrap();
        assert!(report.two_sided_ideal && report.counit_vanishes);
        assert!(!report.coideal && !report.antipode_stable);
        assert!(!report.passes());
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let h = group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(3));
        let quo = h.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(quo.algebra.dim(), 3);
        assert!(quo.projection.is_identity());
        assert_eq!(quo.algebra.mult_table(), h.mult_table());
        assert!(quo.algebra.verify().all_pass());
    }

    #[test]
    fn quotient_by_augmentation_ideal_is_trivial() {
        let h = sweedler();
        let k = h.field();
        let ker_eps = linalg::kernel(
            k,
            &Matrix::from_rows(vec![h.counit_vec().to_vec()]).unwrap(),
        );
        let quo = h.quotient(&ker_eps).unwrap();
        assert_eq!(quo.algebra.dim(), 1);
        assert!(quo.algebra.verify().all_pass());
    }

    #[test]
    fn s3_quotient_by_alternating_ideal() {
        // span{g - h : g^{-1} h in A3} for the S3 table; A3 = {0,1,2}.
        let table = GroupTable::symmetric3();
        let h = group_algebra(FieldSpec::rationals(), &table);
        let k = h.field();
        let mut vecs = Vec::new();
        for g in 0..6 {
            for n in 0..3 {
                let gn = table.mul(g, n);
                let mut v = vec![k.zero(); 6];
                v[g] = k.add(&v[g], &k.one());
                v[gn] = k.sub(&v[gn], &k.one());
                vecs.push(v);
            }
        }
        let j = Subspace::from_spanning(k, 6, vecs).unwrap();
        assert_eq!(j.dim(), 4);
        assert!(h.is_hopf_ideal(&j).unwrap().passes());
        let quo = h.quotient(&j).unwrap();
        assert_eq!(quo.algebra.dim(), 2);
        assert!(quo.algebra.verify().all_pass());
        // The quotient is the group algebra of Z2.
        let z2 = group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(2));
        assert_eq!(quo.algebra.mult_table(), z2.mult_table());
        assert_eq!(quo.algebra.comult_table(), z2.comult_table());
    }

    #[test]
    fn projection_is_bialgebra_map() {
        let table = GroupTable::symmetric3();
        let h = group_algebra(FieldSpec::rationals(), &table);
        let k = h.field();
        let mut vecs = Vec::new();
        for g in 0..6 {
            for n in 0..3 {
                let mut v = vec![k.zero(); 6];
                v[g] = k.add(&v[g], &k.one());
                let gn = table.mul(g, n);
                v[gn] = k.sub(&v[gn], &k.one());
                vecs.push(v);
            }
        }
        let j = Subspace::from_spanning(k, 6, vecs).unwrap();
        let quo = h.quotient(&j).unwrap();
        let p = &quo.projection;
        // multiplicative: p(xy) = p(x)p(y) on basis pairs
        for i in 0..6 {
            for l in 0..6 {
                let prod = h.mult_vec(&basis_vec(&h, i), &basis_vec(&h, l));
                let lhs = p.apply(k, &prod).unwrap();
                let rhs = quo.algebra.mult_vec(
                    &p.apply(k, &basis_vec(&h, i)).unwrap(),
                    &p.apply(k, &basis_vec(&h, l)).unwrap(),
                );
                assert_eq!(lhs, rhs);
            }
        }
        // comultiplicative: (p (x) p) Delta_H = Delta_quo p on basis
        let q = quo.algebra.dim();
        for i in 0..6 {
            let big = h.comult_vec(&basis_vec(&h, i));
            let mut lhs = vec![k.zero(); q * q];
            for a in 0..6 {
                for b in 0..6 {
                    let c = &big[a * 6 + b];
                    if c.is_zero() {
                        continue;
                    }
                    for ma in 0..q {
                        for mb in 0..q {
                            let t = k.mul(c, &k.mul(p.at(ma, a), p.at(mb, b)));
                            lhs[ma * q + mb] = k.add(&lhs[ma * q + mb], &t);
                        }
                    }
                }
            }
            let rhs = quo
                .algebra
                .comult_vec(&p.apply(k, &basis_vec(&h, i)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn haar_on_group_algebra_is_delta_at_identity() {
        let h = group_algebra(FieldSpec::rationals(), &GroupTable::symmetric3());
        let phi = h.haar_functional().unwrap();
        let k = h.field();
        for (i, c) in phi.coeffs().iter().enumerate() {
            let expected = if i == 0 { k.one() } else { k.zero() };
            assert_eq!(c, &expected);
        }
    }

    #[test]
    fn haar_on_dual_group_algebra_is_uniform() {
        let h = dual_group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(4));
        let phi = h.haar_functional().unwrap();
        let k = h.field();
        let quarter = k.from_rational(Rational::new(BigInt::from(1), BigInt::from(4)));
        for c in phi.coeffs() {
            assert_eq!(c, &quarter);
        }
    }

    #[test]
    fn sweedler_has_no_haar() {
        assert_eq!(
            sweedler().haar_functional().unwrap_err(),
            HopfError::NoHaarFunctional
        );
    }

    #[test]
    fn grouplikes_and_skew_primitives() {
        let h = sweedler();
        let k = h.field();
        assert!(h.grouplike_check(h.unit_vec()));
        assert!(h.grouplike_check(&basis_vec(&h, 1)));
        assert!(!h.grouplike_check(&basis_vec(&h, 2)));

        // P_{g,1}(sweedler) = span{g-1, x}
        let p = h.skew_primitives(&basis_vec(&h, 1)).unwrap();
        assert_eq!(p.dim(), 2);
        let mut g_minus_1 = vec![k.zero(); 4];
        g_minus_1[1] = k.one();
        g_minus_1[0] = k.neg(&k.one());
        assert!(p.contains(k, &g_minus_1));
        assert!(p.contains(k, &basis_vec(&h, 2)));

        // P_{1,1}(k[Z3]) = 0; P_{g,1}(k[Z3]) = span{g-1}
        let z3 = group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(3));
        let p11 = z3.skew_primitives(z3.unit_vec()).unwrap();
        assert_eq!(p11.dim(), 0);
        let pg1 = z3.skew_primitives(&basis_vec(&z3, 1)).unwrap();
        assert_eq!(pg1.dim(), 1);
        // non-group-like input rejected
        let x = basis_vec(&h, 2);
        assert_eq!(h.skew_primitives(&x).unwrap_err(), HopfError::NotGrouplike);
    }
}
