//! JSON file formats and loading. Every number is a rational string "a/b"
//! or "a"; a scalar is an array of such strings, one per field coefficient.
//! Errors name the first offending field so the CLI can exit 2 with a
//! usable diagnostic.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use hopfi_core::ext::SubalgebraEmbedding;
use hopfi_core::hopf::{Functional, GroupTable, HopfAlgebraData, HopfQuotient};
use hopfi_core::linalg::{Matrix, Subspace};
use hopfi_core::scalar::{parse_rational, rational_string, FieldSpec, Rational, Scalar};
use hopfi_core::star::StarStructure;
use hopfi_core::Representation;
use serde::Deserialize;
use serde_json::{json, Value};

type RawScalar = Vec<String>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    min_poly: Vec<String>,
    #[serde(default)]
    conj_image: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    field: RawField,
    dim: usize,
    mult: Vec<Vec<Vec<RawScalar>>>,
    unit: Vec<RawScalar>,
    comult: Vec<Vec<Vec<RawScalar>>>,
    counit: Vec<RawScalar>,
    antipode: Vec<Vec<RawScalar>>,
    #[serde(default)]
    star: Option<Vec<Vec<RawScalar>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    algebra: String,
    dim: usize,
    matrices: Vec<Vec<Vec<RawScalar>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    ambient: usize,
    vectors: Vec<Vec<RawScalar>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEmbedding {
    big: String,
    small: String,
    inclusion: Vec<Vec<RawScalar>>,
}

/// An algebra file together with its optional star matrix.
pub struct LoadedAlgebra {
    pub algebra: Arc<HopfAlgebraData>,
    pub star: Option<StarStructure>,
}

fn rationals(field: &str, raw: &[String]) -> Result<Vec<Rational>> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| anyhow!("{field}[{i}]: {e}")))
        .collect()
}

fn scalar(k: &FieldSpec, field: &str, raw: &RawScalar) -> Result<Scalar> {
    let coeffs = rationals(field, raw)?;
    k.scalar_from_coeffs(coeffs)
        .map_err(|e| anyhow!("{field}: {e}"))
}

fn matrix(k: &FieldSpec, field: &str, raw: &[Vec<RawScalar>]) -> Result<Matrix> {
    let mut rows = Vec::with_capacity(raw.len());
    for (i, row) in raw.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, s) in row.iter().enumerate() {
            out.push(scalar(k, &format!("{field}[{i}][{j}]"), s)?);
        }
        rows.push(out);
    }
    Matrix::from_rows(rows).map_err(|e| anyhow!("{field}: {e}"))
}

fn flat_cube(
    k: &FieldSpec,
    field: &str,
    d: usize,
    raw: &[Vec<Vec<RawScalar>>],
) -> Result<Vec<Scalar>> {
    if raw.len() != d
        || raw
            .iter()
            .any(|p| p.len() != d || p.iter().any(|r| r.len() != d))
    {
        bail!("{field}: expected {d}x{d}x{d} scalars");
    }
    let mut out = Vec::with_capacity(d * d * d);
    for (i, plane) in raw.iter().enumerate() {
        for (j, row) in plane.iter().enumerate() {
            for (l, s) in row.iter().enumerate() {
                out.push(scalar(k, &format!("{field}[{i}][{j}][{l}]"), s)?);
            }
        }
    }
    Ok(out)
}

fn scalar_vec(k: &FieldSpec, field: &str, raw: &[RawScalar]) -> Result<Vec<Scalar>> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| scalar(k, &format!("{field}[{i}]"), s))
        .collect()
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Resolve `reference` relative to the file that contains it.
fn sibling(of: &Path, reference: &str) -> PathBuf {
    let p = Path::new(reference);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        of.parent().unwrap_or_else(|| Path::new(".")).join(p)
    }
}

fn load_field(raw: &RawField) -> Result<FieldSpec> {
    let min_poly = rationals("field.min_poly", &raw.min_poly)?;
    let conj = match &raw.conj_image {
        Some(c) => Some(rationals("field.conj_image", c)?),
        None => None,
    };
    FieldSpec::new(min_poly, conj).map_err(|e| anyhow!("field: {e}"))
}

pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra> {
    let raw: RawAlgebra = read_json(path)?;
    let k = load_field(&raw.field)?;
    let d = raw.dim;
    let mult = flat_cube(&k, "mult", d, &raw.mult)?;
    let unit = scalar_vec(&k, "unit", &raw.unit)?;
    let comult = flat_cube(&k, "comult", d, &raw.comult)?;
    let counit = scalar_vec(&k, "counit", &raw.counit)?;
    let antipode = matrix(&k, "antipode", &raw.antipode)?;
    if unit.len() != d {
        bail!("unit: expected {d} scalars, got {}", unit.len());
    }
    let star = match &raw.star {
        Some(m) => {
            let m = matrix(&k, "star", m)?;
            if m.rows() != d || m.cols() != d {
                bail!("star: expected a {d}x{d} matrix");
            }
            Some(StarStructure::new(m))
        }
        None => None,
    };
    let algebra = HopfAlgebraData::new(k, mult, unit, comult, counit, antipode)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(LoadedAlgebra {
        algebra: Arc::new(algebra),
        star,
    })
}

/// Load an algebra and require that it passes the Hopf axioms; commands that
/// consume an algebra as a precondition (everything except `check`) use this.
pub fn load_valid_algebra(path: &Path) -> Result<LoadedAlgebra> {
    let loaded = load_algebra(path)?;
    let report = loaded.algebra.verify();
    if !report.all_pass() {
        bail!(
            "{}: algebra fails axiom {}",
            path.display(),
            report.failing().join(", ")
        );
    }
    Ok(loaded)
}

/// Load a representation file; the algebra reference resolves relative to
/// the representation file itself.
pub fn load_rep(path: &Path) -> Result<(Representation, LoadedAlgebra, PathBuf)> {
    let raw: RawRep = read_json(path)?;
    let algebra_path = sibling(path, &raw.algebra);
    let loaded = load_valid_algebra(&algebra_path)?;
    let k = loaded.algebra.field();
    if raw.matrices.len() != loaded.algebra.dim() {
        bail!(
            "matrices: expected {} matrices, got {}",
            loaded.algebra.dim(),
            raw.matrices.len()
        );
    }
    let mut mats = Vec::with_capacity(raw.matrices.len());
    for (i, m) in raw.matrices.iter().enumerate() {
        let m = matrix(k, &format!("matrices[{i}]"), m)?;
        if m.rows() != raw.dim || m.cols() != raw.dim {
            bail!("matrices[{i}]: expected {0}x{0}", raw.dim);
        }
        mats.push(m);
    }
    let rep = Representation::new(loaded.algebra.clone(), mats)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((rep, loaded, algebra_path))
}

/// A representation file whose algebra reference must match an already
/// loaded algebra (e.g. a computed quotient) structurally.
pub fn load_rep_over(path: &Path, algebra: &Arc<HopfAlgebraData>) -> Result<Representation> {
    let (rep, _, algebra_path) = load_rep(path)?;
    if rep.algebra().as_ref() != algebra.as_ref() {
        bail!(
            "{}: algebra {} does not match the expected algebra",
            path.display(),
            algebra_path.display()
        );
    }
    Ok(rep)
}

pub fn load_table(path: &Path) -> Result<GroupTable> {
    let raw: RawTable = read_json(path)?;
    if raw.table.len() != raw.order || raw.table.iter().any(|r| r.len() != raw.order) {
        bail!("table: expected {0}x{0} entries", raw.order);
    }
    let flat: Vec<usize> = raw.table.into_iter().flatten().collect();
    GroupTable::new(raw.order, flat).map_err(|e| anyhow!("table: {e}"))
}

pub fn load_subspace(path: &Path, k: &FieldSpec, ambient: usize) -> Result<Subspace> {
    let raw: RawSubspace = read_json(path)?;
    if raw.ambient != ambient {
        bail!("ambient: expected {ambient}, got {}", raw.ambient);
    }
    let mut vecs = Vec::with_capacity(raw.vectors.len());
    for (i, v) in raw.vectors.iter().enumerate() {
        let v = scalar_vec(k, &format!("vectors[{i}]"), v)?;
        if v.len() != ambient {
            bail!("vectors[{i}]: expected {ambient} scalars");
        }
        vecs.push(v);
    }
    Subspace::from_spanning(k, ambient, vecs).map_err(|e| anyhow!("vectors: {e}"))
}

pub fn load_embedding(path: &Path) -> Result<SubalgebraEmbedding> {
    let raw: RawEmbedding = read_json(path)?;
    let big = load_valid_algebra(&sibling(path, &raw.big))?;
    let small = load_valid_algebra(&sibling(path, &raw.small))?;
    let inclusion = matrix(big.algebra.field(), "inclusion", &raw.inclusion)?;
    SubalgebraEmbedding::new(big.algebra, small.algebra, inclusion)
        .map_err(|e| anyhow!("{}: {e}", path.display()))
}

/// A bare JSON array of scalars: a vector in H.
pub fn load_vector(path: &Path, k: &FieldSpec, dim: usize) -> Result<Vec<Scalar>> {
    let raw: Vec<RawScalar> = read_json(path)?;
    let v = scalar_vec(k, "vector", &raw)?;
    if v.len() != dim {
        bail!("vector: expected {dim} scalars, got {}", v.len());
    }
    Ok(v)
}

pub fn load_functional(path: &Path, k: &FieldSpec, dim: usize) -> Result<Functional> {
    Ok(Functional::new(load_vector(path, k, dim)?))
}

/// A bare square array of scalars: a Hermitian form's Gram matrix.
pub fn load_form(path: &Path, k: &FieldSpec, dim: usize) -> Result<Matrix> {
    let raw: Vec<Vec<RawScalar>> = read_json(path)?;
    let m = matrix(k, "gram", &raw)?;
    if m.rows() != dim || m.cols() != dim {
        bail!("gram: expected a {dim}x{dim} matrix");
    }
    Ok(m)
}

// ---- serialization back to the same formats ----

pub fn scalar_json(s: &Scalar) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|q| Value::String(rational_string(q)))
            .collect(),
    )
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_json(m.at(i, j))).collect()))
            .collect(),
    )
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({
        "ambient": s.ambient(),
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
    })
}

fn cube_json(d: usize, flat: &[Scalar]) -> Value {
    Value::Array(
        (0..d)
            .map(|i| {
                Value::Array(
                    (0..d)
                        .map(|j| {
                            Value::Array(
                                (0..d)
                                    .map(|l| scalar_json(&flat[(i * d + j) * d + l]))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn field_json(k: &FieldSpec) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "min_poly".into(),
        Value::Array(
            k.min_poly()
                .iter()
                .map(|q| Value::String(rational_string(q)))
                .collect(),
        ),
    );
    if let Some(c) = k.conj_image() {
        obj.insert(
            "conj_image".into(),
            Value::Array(
                c.iter()
                    .map(|q| Value::String(rational_string(q)))
                    .collect(),
            ),
        );
    }
    Value::Object(obj)
}

/// The algebra document, reusable as CLI input.
pub fn algebra_json(h: &HopfAlgebraData, star: Option<&StarStructure>) -> Value {
    let d = h.dim();
    let mut obj = serde_json::Map::new();
    obj.insert("field".into(), field_json(h.field()));
    obj.insert("dim".into(), json!(d));
    obj.insert("mult".into(), cube_json(d, h.mult_table()));
    obj.insert("unit".into(), vector_json(h.unit_vec()));
    obj.insert("comult".into(), cube_json(d, h.comult_table()));
    obj.insert("counit".into(), vector_json(h.counit_vec()));
    obj.insert("antipode".into(), matrix_json(h.antipode_matrix()));
    if let Some(s) = star {
        obj.insert("star".into(), matrix_json(s.matrix()));
    }
    Value::Object(obj)
}

pub fn quotient_json(q: &HopfQuotient, star: Option<&StarStructure>) -> Value {
    json!({
        "algebra": algebra_json(&q.algebra, star),
        "projection": matrix_json(&q.projection),
        "section": matrix_json(&q.section),
    })
}
