//! Command-line front end: JSON files in, one JSON report out.
//! Exit codes: 0 = success/true, 1 = computed false or failed check,
//! 2 = input error (diagnostic on stderr names the offending field/axiom).

mod report;
mod schema;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hopfi_core::ext::{self, SubalgebraEmbedding};
use hopfi_core::hopf::builders::{dual_group_algebra, group_algebra, sweedler};
use hopfi_core::hopf::HopfAlgebraData;
use hopfi_core::image;
use hopfi_core::linalg::Matrix;
use hopfi_core::scalar::FieldSpec;
use hopfi_core::star::{
    self, PositivityStatus, RegularAntipodeWitness, SesquilinearForm, StarStructure,
};
use hopfi_core::Representation;
use schema::LoadedAlgebra;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hopfi", version, about = "Exact Hopf algebra computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgChoice {
    Fixpoint,
    Words,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldChoice {
    Rationals,
    Cyclotomic3,
    Gaussian,
    Cyclotomic5,
}

impl FieldChoice {
    fn spec(self) -> FieldSpec {
        match self {
            FieldChoice::Rationals => FieldSpec::rationals(),
            FieldChoice::Cyclotomic3 => FieldSpec::cyclotomic3(),
            FieldChoice::Gaussian => FieldSpec::gaussian(),
            FieldChoice::Cyclotomic5 => FieldSpec::cyclotomic5(),
        }
    }
}

#[derive(Subcommand)]
enum GenCmd {
    /// Group algebra k[G] from a multiplication table, with the inversion star.
    GroupAlgebra {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum, default_value = "rationals")]
        field: FieldChoice,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Function algebra k^G, with the pointwise-conjugation star.
    DualGroupAlgebra {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum, default_value = "rationals")]
        field: FieldChoice,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 4-dimensional algebra generated by a group-like g and a skew-primitive x.
    Sweedler {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the Hopf axioms of an algebra file.
    Check { algebra: PathBuf },
    /// Emit built-in algebras as JSON documents.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Verify that a representation file is multiplicative and unital.
    RepCheck { algebra: PathBuf, rep: PathBuf },
    /// Largest Hopf ideal inside the representation kernel.
    Image {
        algebra: PathBuf,
        rep: PathBuf,
        #[arg(long, value_enum, default_value = "fixpoint")]
        alg: AlgChoice,
        /// Word-length bound for --alg words; defaults to dim H.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Decide inner faithfulness (exit 0 = yes, 1 = no).
    InnerFaithful { algebra: PathBuf, rep: PathBuf },
    /// Quotient Hopf algebra by a Hopf ideal.
    Quotient {
        algebra: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        /// Also write the quotient algebra document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extension representation along a normal commutative Hopf subalgebra.
    Extend {
        algebra: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Product of the pullbacks of two quotient representations.
    Glue {
        algebra: PathBuf,
        #[arg(long)]
        ideal1: PathBuf,
        #[arg(long)]
        ideal2: PathBuf,
        #[arg(long)]
        rep1: PathBuf,
        #[arg(long)]
        rep2: PathBuf,
    },
    /// Injectivity of x -> p1(x_(1)) (x) p2(x_(2)) (exit 0 = injective).
    Cotensor {
        algebra: PathBuf,
        #[arg(long)]
        ideal1: PathBuf,
        #[arg(long)]
        ideal2: PathBuf,
    },
    /// The four exact-sequence conditions for k -> A -> H -> H//A -> k.
    ExactCheck {
        algebra: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
    },
    /// Verify the star-structure identities of an algebra file.
    StarCheck { algebra: PathBuf },
    /// Decide inner unitarity of a *-representation (exit 0 = yes, 1 = no).
    InnerUnitary {
        algebra: PathBuf,
        rep: PathBuf,
        /// Hermitian form on the module; identity when omitted.
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// The normalized two-sided invariant functional, when it exists.
    Haar { algebra: PathBuf },
    /// Conditional expectation E: H -> A along the Haar functional of H//A.
    CondExp {
        algebra: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
    },
    /// Induce a *-representation of A up to H with the Gram-quotient form.
    UnitaryInduce {
        algebra: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Hermitian form on the module of --rep; identity when omitted.
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// Augment a representation by the witness character blocks of a regular antipode.
    Augment {
        algebra: PathBuf,
        rep: PathBuf,
        /// Group-like element a (vector file).
        #[arg(long)]
        grouplike: PathBuf,
        /// Character phi (functional file).
        #[arg(long)]
        character: PathBuf,
        /// Exponent: S^(2m) is checked against the witness.
        #[arg(long)]
        m: usize,
    },
}

/// A finished command: the payload plus the truth value for the exit code.
enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Outcome::Pass(_)) => ExitCode::SUCCESS,
        Ok(Outcome::Fail(_)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Load a representation and require its algebra reference to match the
/// positional algebra argument.
fn rep_for(algebra: &Path, rep: &Path) -> Result<(LoadedAlgebra, Representation)> {
    let loaded = schema::load_valid_algebra(algebra)?;
    let r = schema::load_rep_over(rep, &loaded.algebra)?;
    Ok((loaded, r))
}

fn require_star(loaded: &LoadedAlgebra, path: &Path) -> Result<StarStructure> {
    loaded.star.clone().ok_or_else(|| {
        anyhow!(
            "{}: star: missing (required by this command)",
            path.display()
        )
    })
}

/// Verified star structure or input error naming the failing family.
fn verified_star(loaded: &LoadedAlgebra, path: &Path) -> Result<StarStructure> {
    let s = require_star(loaded, path)?;
    let r = star::verify_star(&loaded.algebra, &s)?;
    if !r.passes() {
        bail!("{}: star fails {}", path.display(), r.failing().join(", "));
    }
    Ok(s)
}

fn big_matches(
    emb: &SubalgebraEmbedding,
    loaded: &Arc<HopfAlgebraData>,
    path: &Path,
) -> Result<()> {
    if emb.big().as_ref() != loaded.as_ref() {
        bail!(
            "{}: embedding's big algebra differs from the algebra argument",
            path.display()
        );
    }
    Ok(())
}

fn emit(command: &str, paths: &[&Path], outcome: Outcome) -> Result<Outcome> {
    let inputs = report::inputs_json(paths)?;
    let payload = match &outcome {
        Outcome::Pass(v) | Outcome::Fail(v) => v.clone(),
    };
    report::emit(command, inputs, payload)?;
    Ok(outcome)
}

fn image_payload(res: &image::HopfImageResult) -> Value {
    json!({
        "algorithm": res.algorithm.to_string(),
        "ideal_dim": res.ideal.dim(),
        "ideal": schema::subspace_json(&res.ideal),
        "inner_faithful": res.inner_faithful,
        "iterations": res.iterations,
        "words_processed": res.words_processed,
        "stabilized": res.stabilized,
    })
}

// Documents are data interchange: compact, one line, trailing newline.
fn write_doc(path: &Path, doc: &Value) -> Result<String> {
    let text = format!("{}\n", serde_json::to_string(doc)?);
    fs::write(path, &text)?;
    Ok(report::sha256_hex(text.as_bytes()))
}

fn gen_outcome(doc: Value, dim: usize, out: Option<&Path>) -> Result<Outcome> {
    match out {
        Some(path) => {
            let sha = write_doc(path, &doc)?;
            let payload = json!({
                "written": path.display().to_string(),
                "sha256": sha,
                "dim": dim,
            });
            emit("gen", &[], Outcome::Pass(payload))
        }
        None => {
            report::print_line(&serde_json::to_string(&doc)?);
            Ok(Outcome::Pass(Value::Null))
        }
    }
}

fn run(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Check { algebra } => {
            let loaded = schema::load_algebra(&algebra)?;
            let r = loaded.algebra.verify();
            let axioms: Value = r
                .checks()
                .iter()
                .map(|(name, c)| ((*name).to_string(), json!(c.passed)))
                .collect::<serde_json::Map<_, _>>()
                .into();
            let payload = json!({
                "all_pass": r.all_pass(),
                "axioms": axioms,
                "failing": r.failing(),
            });
            let outcome = if r.all_pass() {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("check", &[&algebra], outcome)
        }
        Cmd::Gen { what } => match what {
            GenCmd::GroupAlgebra { table, field, out } => {
                let t = schema::load_table(&table)?;
                let h = group_algebra(field.spec(), &t);
                let star = StarStructure::new(h.antipode_matrix().clone());
                let doc = schema::algebra_json(&h, Some(&star));
                gen_outcome(doc, h.dim(), out.as_deref())
            }
            GenCmd::DualGroupAlgebra { table, field, out } => {
                let t = schema::load_table(&table)?;
                let h = dual_group_algebra(field.spec(), &t);
                let star = StarStructure::new(Matrix::identity(h.field(), h.dim()));
                let doc = schema::algebra_json(&h, Some(&star));
                gen_outcome(doc, h.dim(), out.as_deref())
            }
            GenCmd::Sweedler { out } => {
                let h = sweedler();
                let doc = schema::algebra_json(&h, None);
                gen_outcome(doc, h.dim(), out.as_deref())
            }
        },
        Cmd::RepCheck { algebra, rep } => {
            let (_, r) = rep_for(&algebra, &rep)?;
            let report = r.verify();
            let payload = json!({
                "passes": report.passes(),
                "multiplicative": report.multiplicative,
                "unital": report.unital,
                "first_mult_failure": report.first_mult_failure,
                "dim": r.dim(),
            });
            let outcome = if report.passes() {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("rep-check", &[&algebra, &rep], outcome)
        }
        Cmd::Image {
            algebra,
            rep,
            alg,
            max_len,
        } => {
            let (_, r) = rep_for(&algebra, &rep)?;
            let res = match alg {
                AlgChoice::Fixpoint => image::hopf_image_fixpoint(&r)?,
                AlgChoice::Words => {
                    let len = max_len.unwrap_or_else(|| image::default_max_len(r.algebra()));
                    image::hopf_image_words(&r, len)?
                }
            };
            let payload = image_payload(&res);
            let outcome = if res.stabilized {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("image", &[&algebra, &rep], outcome)
        }
        Cmd::InnerFaithful { algebra, rep } => {
            let (_, r) = rep_for(&algebra, &rep)?;
            let res = image::hopf_image_fixpoint(&r)?;
            let payload = json!({
                "inner_faithful": res.inner_faithful,
                "ideal_dim": res.ideal.dim(),
            });
            let outcome = if res.inner_faithful {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("inner-faithful", &[&algebra, &rep], outcome)
        }
        Cmd::Quotient {
            algebra,
            ideal,
            out,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let h = &loaded.algebra;
            let j = schema::load_subspace(&ideal, h.field(), h.dim())?;
            let ideal_report = h.is_hopf_ideal(&j)?;
            if !ideal_report.passes() {
                let payload = json!({
                    "is_hopf_ideal": false,
                    "two_sided_ideal": ideal_report.two_sided_ideal,
                    "counit_vanishes": ideal_report.counit_vanishes,
                    "antipode_stable": ideal_report.antipode_stable,
                    "coideal": ideal_report.coideal,
                });
                return emit("quotient", &[&algebra, &ideal], Outcome::Fail(payload));
            }
            let q = h.quotient(&j)?;
            let mut payload = json!({
                "is_hopf_ideal": true,
                "quotient_dim": q.algebra.dim(),
                "quotient": schema::quotient_json(&q, None),
            });
            if let Some(path) = &out {
                let sha = write_doc(path, &schema::algebra_json(&q.algebra, None))?;
                payload["written"] = json!(path.display().to_string());
                payload["written_sha256"] = json!(sha);
            }
            emit("quotient", &[&algebra, &ideal], Outcome::Pass(payload))
        }
        Cmd::Extend {
            algebra,
            subalgebra,
            rep,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let emb = schema::load_embedding(&subalgebra)?;
            big_matches(&emb, &loaded.algebra, &subalgebra)?;
            let rho = schema::load_rep_over(&rep, emb.small())?;
            let theta = ext::extension_rep(&emb, &rho)?;
            let res = image::hopf_image_fixpoint(&theta.rep)?;
            let payload = json!({
                "dim": theta.rep.dim(),
                "base_commutative": theta.base_commutative,
                "quotient_dim": theta.quotient.algebra.dim(),
                "induced_dim": theta.induced.dim,
                "inner_faithful": res.inner_faithful,
                "matrices": theta.rep.matrices().iter().map(schema::matrix_json).collect::<Vec<_>>(),
            });
            emit(
                "extend",
                &[&algebra, &subalgebra, &rep],
                Outcome::Pass(payload),
            )
        }
        Cmd::Glue {
            algebra,
            ideal1,
            ideal2,
            rep1,
            rep2,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let h = &loaded.algebra;
            let k = h.field();
            let i1 = schema::load_subspace(&ideal1, k, h.dim())?;
            let i2 = schema::load_subspace(&ideal2, k, h.dim())?;
            for (path, j) in [(&ideal1, &i1), (&ideal2, &i2)] {
                if !h.is_hopf_ideal(j)?.passes() {
                    bail!("{}: not a Hopf ideal", path.display());
                }
            }
            let q1 = h.quotient(&i1)?;
            let q2 = h.quotient(&i2)?;
            let r1 = schema::load_rep_over(&rep1, &Arc::new(q1.algebra.clone()))?;
            let r2 = schema::load_rep_over(&rep2, &Arc::new(q2.algebra.clone()))?;
            let glued = ext::glueing_rep(h, &i1, &i2, &r1, &r2)?;
            let meet = i1.intersect(k, &i2)?;
            let hypothesis = image::largest_hopf_ideal_within(h, &meet)?.dim() == 0;
            let res = image::hopf_image_fixpoint(&glued)?;
            let payload = json!({
                "dim": glued.dim(),
                "hypothesis_holds": hypothesis,
                "inner_faithful": res.inner_faithful,
                "matrices": glued.matrices().iter().map(schema::matrix_json).collect::<Vec<_>>(),
            });
            emit(
                "glue",
                &[&algebra, &ideal1, &ideal2, &rep1, &rep2],
                Outcome::Pass(payload),
            )
        }
        Cmd::Cotensor {
            algebra,
            ideal1,
            ideal2,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let h = &loaded.algebra;
            let i1 = schema::load_subspace(&ideal1, h.field(), h.dim())?;
            let i2 = schema::load_subspace(&ideal2, h.field(), h.dim())?;
            let injective = ext::cotensor_injectivity(h, &i1, &i2)?;
            let payload = json!({ "injective": injective });
            let outcome = if injective {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("cotensor", &[&algebra, &ideal1, &ideal2], outcome)
        }
        Cmd::ExactCheck {
            algebra,
            subalgebra,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let emb = schema::load_embedding(&subalgebra)?;
            big_matches(&emb, &loaded.algebra, &subalgebra)?;
            let (payload, passes) = match ext::quotient_by_subalgebra(&emb) {
                Ok(q) => {
                    let r = ext::check_exact_sequence(&emb, &q.algebra, &q.projection)?;
                    (
                        json!({
                            "passes": r.passes(),
                            "injective_and_surjective": r.injective_and_surjective,
                            "counit_composite": r.counit_composite,
                            "kernel_is_plus_ideal": r.kernel_is_plus_ideal,
                            "coinvariants_match": r.coinvariants_match,
                            "quotient_dim": q.algebra.dim(),
                        }),
                        r.passes(),
                    )
                }
                Err(ext::ExtError::PlusIdealNotHopf) => (
                    json!({ "passes": false, "plus_ideal_is_hopf_ideal": false }),
                    false,
                ),
                Err(e) => return Err(e.into()),
            };
            let outcome = if passes {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("exact-check", &[&algebra, &subalgebra], outcome)
        }
        Cmd::StarCheck { algebra } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let s = require_star(&loaded, &algebra)?;
            let r = star::verify_star(&loaded.algebra, &s)?;
            let payload = json!({
                "passes": r.passes(),
                "involutive": r.involutive,
                "antimultiplicative": r.antimultiplicative,
                "coalgebra_compatible": r.coalgebra_compatible,
                "antipode_compatible": r.antipode_compatible,
            });
            let outcome = if r.passes() {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("star-check", &[&algebra], outcome)
        }
        Cmd::InnerUnitary { algebra, rep, form } => {
            let (loaded, r) = rep_for(&algebra, &rep)?;
            let s = verified_star(&loaded, &algebra)?;
            let k = loaded.algebra.field();
            let f = match &form {
                Some(p) => Some(SesquilinearForm::new(k, schema::load_form(p, k, r.dim())?)?),
                None => None,
            };
            if !star::is_star_rep(&r, &s, f.as_ref())? {
                bail!(
                    "{}: not a *-representation for the given star and form",
                    rep.display()
                );
            }
            let unitary = star::inner_unitary(&r, &s, f.as_ref())?;
            let ideal = star::largest_hopf_star_ideal(&r, &s)?;
            let payload = json!({
                "inner_unitary": unitary,
                "star_ideal_dim": ideal.dim(),
            });
            let mut inputs: Vec<&Path> = vec![&algebra, &rep];
            if let Some(p) = &form {
                inputs.push(p);
            }
            let outcome = if unitary {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            };
            emit("inner-unitary", &inputs, outcome)
        }
        Cmd::Haar { algebra } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            match loaded.algebra.haar_functional() {
                Ok(phi) => {
                    let payload = json!({
                        "exists": true,
                        "haar": schema::vector_json(phi.coeffs()),
                    });
                    emit("haar", &[&algebra], Outcome::Pass(payload))
                }
                Err(e) => {
                    let payload = json!({ "exists": false, "reason": e.to_string() });
                    emit("haar", &[&algebra], Outcome::Fail(payload))
                }
            }
        }
        Cmd::CondExp {
            algebra,
            subalgebra,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let emb = schema::load_embedding(&subalgebra)?;
            big_matches(&emb, &loaded.algebra, &subalgebra)?;
            let q = ext::quotient_by_subalgebra(&emb)?;
            match star::conditional_expectation(&emb, &q) {
                Ok(e) => {
                    let payload = json!({
                        "expectation": schema::matrix_json(&e),
                        "quotient_dim": q.algebra.dim(),
                    });
                    emit("cond-exp", &[&algebra, &subalgebra], Outcome::Pass(payload))
                }
                Err(e) => {
                    let payload = json!({ "error": e.to_string() });
                    emit("cond-exp", &[&algebra, &subalgebra], Outcome::Fail(payload))
                }
            }
        }
        Cmd::UnitaryInduce {
            algebra,
            subalgebra,
            rep,
            form,
        } => {
            let loaded = schema::load_valid_algebra(&algebra)?;
            let emb = schema::load_embedding(&subalgebra)?;
            big_matches(&emb, &loaded.algebra, &subalgebra)?;
            let s = verified_star(&loaded, &algebra)?;
            let rho = schema::load_rep_over(&rep, emb.small())?;
            let k = loaded.algebra.field();
            let v_form = match &form {
                Some(p) => SesquilinearForm::new(k, schema::load_form(p, k, rho.dim())?)?,
                None => SesquilinearForm::identity(k, rho.dim()),
            };
            let mut inputs: Vec<&Path> = vec![&algebra, &subalgebra, &rep];
            if let Some(p) = &form {
                inputs.push(p);
            }
            match star::unitary_induction(&emb, &rho, &s, &v_form) {
                Ok(ind) => {
                    let payload = json!({
                        "induced_dim": ind.induced.dim(),
                        "combined_dim": ind.combined.dim(),
                        "positivity": match ind.positivity {
                            PositivityStatus::Verified => "verified",
                            PositivityStatus::HermitianOnly => "hermitian_only",
                        },
                        "induced_gram": schema::matrix_json(ind.form.gram()),
                        "induced_matrices": ind.induced.matrices().iter().map(schema::matrix_json).collect::<Vec<_>>(),
                    });
                    emit("unitary-induce", &inputs, Outcome::Pass(payload))
                }
                Err(e) => {
                    let payload = json!({ "error": e.to_string() });
                    emit("unitary-induce", &inputs, Outcome::Fail(payload))
                }
            }
        }
        Cmd::Augment {
            algebra,
            rep,
            grouplike,
            character,
            m,
        } => {
            let (loaded, r) = rep_for(&algebra, &rep)?;
            let k = loaded.algebra.field();
            let d = loaded.algebra.dim();
            let a = schema::load_vector(&grouplike, k, d)?;
            let phi = schema::load_functional(&character, k, d)?;
            let witness = RegularAntipodeWitness { a, phi, m };
            let inputs: Vec<&Path> = vec![&algebra, &rep, &grouplike, &character];
            match star::augment_regular(&r, &witness) {
                Ok(augmented) => {
                    let payload = json!({
                        "witness_valid": true,
                        "dim": augmented.dim(),
                        "matrices": augmented.matrices().iter().map(schema::matrix_json).collect::<Vec<_>>(),
                    });
                    emit("augment", &inputs, Outcome::Pass(payload))
                }
                Err(e) => {
                    let payload = json!({ "witness_valid": false, "reason": e.to_string() });
                    emit("augment", &inputs, Outcome::Fail(payload))
                }
            }
        }
    }
}
