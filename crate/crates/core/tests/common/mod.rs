// Not every integration target uses the whole corpus.
#![allow(dead_code)]

//! Shared corpus for the integration suites: every builder algebra, all
//! one-dimensional representations of the corpus group algebras, their
//! irreducible two-dimensional representations, regular and trivial
//! representations, and the Sweedler two-dimensional representation.

use std::sync::Arc;

use hopfi_core::hopf::builders::{dual_group_algebra, group_algebra, sweedler};
use hopfi_core::hopf::{GroupTable, HopfAlgebraData};
use hopfi_core::scalar::{FieldSpec, Scalar};
use hopfi_core::{Matrix, Representation};

pub struct CorpusRep {
    pub name: String,
    pub rep: Representation,
    /// Present when the algebra is a group algebra over this table.
    pub group: Option<GroupTable>,
}

pub fn corpus_fields_and_tables() -> Vec<(&'static str, FieldSpec, GroupTable)> {
    vec![
        ("z2", FieldSpec::rationals(), GroupTable::cyclic(2)),
        ("z3", FieldSpec::cyclotomic3(), GroupTable::cyclic(3)),
        ("z4", FieldSpec::gaussian(), GroupTable::cyclic(4)),
        ("z5", FieldSpec::cyclotomic5(), GroupTable::cyclic(5)),
        ("z6", FieldSpec::cyclotomic3(), GroupTable::cyclic(6)),
        ("s3", FieldSpec::cyclotomic3(), GroupTable::symmetric3()),
        ("d4", FieldSpec::rationals(), GroupTable::dihedral(4)),
        ("q8", FieldSpec::gaussian(), GroupTable::quaternion()),
    ]
}

/// Every builder algebra (group algebras, their duals, Sweedler).
pub fn corpus_algebras() -> Vec<(String, HopfAlgebraData)> {
    let mut out = Vec::new();
    for (name, field, table) in corpus_fields_and_tables() {
        out.push((format!("k[{name}]"), group_algebra(field.clone(), &table)));
        out.push((format!("k[{name}]*"), dual_group_algebra(field, &table)));
    }
    out.push(("sweedler".to_string(), sweedler()));
    out
}

fn character(h: &Arc<HopfAlgebraData>, values: Vec<Scalar>) -> Representation {
    let mats = values
        .into_iter()
        .map(|v| Matrix::from_rows(vec![vec![v]]).unwrap())
        .collect();
    Representation::new(h.clone(), mats).unwrap()
}

/// All characters of the group, as representations of its group algebra.
fn group_characters(name: &str, h: &Arc<HopfAlgebraData>) -> Vec<(String, Representation)> {
    let k = h.field().clone();
    let mut out = Vec::new();
    let mut push = |label: String, values: Vec<Scalar>| {
        out.push((label, character(h, values)));
    };
    match name {
        "z2" => {
            for j in 0..2u32 {
                let values = (0..2)
                    .map(|a| k.from_int(if (j * a) % 2 == 0 { 1 } else { -1 }))
                    .collect();
                push(format!("z2 chi{j}"), values);
            }
        }
        "z3" | "z5" => {
            let n = if name == "z3" { 3u32 } else { 5 };
            let zeta = k.gen();
            for j in 0..n {
                let values = (0..n)
                    .map(|a| {
                        let mut v = k.one();
                        for _ in 0..((j * a) % n) {
                            v = k.mul(&v, &zeta);
                        }
                        v
                    })
                    .collect();
                push(format!("{name} chi{j}"), values);
            }
        }
        "z4" => {
            let i = k.gen();
            for j in 0..4u32 {
                let values = (0..4)
                    .map(|a| {
                        let mut v = k.one();
                        for _ in 0..((j * a) % 4) {
                            v = k.mul(&v, &i);
                        }
                        v
                    })
                    .collect();
                push(format!("z4 chi{j}"), values);
            }
        }
        "z6" => {
            // zeta_6 = -omega^2 in Q(omega)
            let w = k.gen();
            let zeta = k.neg(&k.mul(&w, &w));
            for j in 0..6u32 {
                let values = (0..6)
                    .map(|a| {
                        let mut v = k.one();
                        for _ in 0..((j * a) % 6) {
                            v = k.mul(&v, &zeta);
                        }
                        v
                    })
                    .collect();
                push(format!("z6 chi{j}"), values);
            }
        }
        "s3" => {
            push("s3 trivial".to_string(), vec![k.one(); 6]);
            let sign = [1i64, 1, 1, -1, -1, -1]
                .iter()
                .map(|&v| k.from_int(v))
                .collect();
            push("s3 sign".to_string(), sign);
        }
        "d4" => {
            // chi(r) = a, chi(s) = b; order: r^0..r^3, s r^0..s r^3
            for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let values = (0..8)
                    .map(|idx| {
                        let (s_part, r_pow) = if idx < 4 { (1, idx) } else { (b, idx - 4) };
                        let mut v = s_part;
                        for _ in 0..r_pow {
                            v *= a;
                        }
                        k.from_int(v)
                    })
                    .collect();
                push(format!("d4 chi({a},{b})"), values);
            }
        }
        "q8" => {
            // through Q8/{+-1}: order 1,-1,i,-i,j,-j,k,-k
            for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let values = [1, 1, a, a, b, b, a * b, a * b]
                    .iter()
                    .map(|&v| k.from_int(v))
                    .collect();
                push(format!("q8 chi({a},{b})"), values);
            }
        }
        _ => unreachable!("unknown corpus group {name}"),
    }
    out
}

/// The irreducible two-dimensional representations of the corpus groups
/// that have one (S3, D4, Q8), over their corpus fields.
fn two_dimensional_irreps(name: &str, h: &Arc<HopfAlgebraData>) -> Vec<(String, Representation)> {
    let k = h.field().clone();
    match name {
        "s3" => {
            let w = k.gen();
            let w2 = k.mul(&w, &w);
            let r = Matrix::from_rows(vec![vec![w.clone(), k.zero()], vec![k.zero(), w2.clone()]])
                .unwrap();
            let s =
                Matrix::from_rows(vec![vec![k.zero(), k.one()], vec![k.one(), k.zero()]]).unwrap();
            let r2 = r.mul(&k, &r).unwrap();
            let mats = vec![
                Matrix::identity(&k, 2),
                r.clone(),
                r2.clone(),
                s.clone(),
                s.mul(&k, &r).unwrap(),
                s.mul(&k, &r2).unwrap(),
            ];
            vec![(
                "s3 standard".to_string(),
                Representation::new(h.clone(), mats).unwrap(),
            )]
        }
        "d4" => {
            let r = Matrix::from_rows(vec![
                vec![k.zero(), k.from_int(-1)],
                vec![k.one(), k.zero()],
            ])
            .unwrap();
            let s = Matrix::from_rows(vec![
                vec![k.one(), k.zero()],
                vec![k.zero(), k.from_int(-1)],
            ])
            .unwrap();
            let mut mats = Vec::with_capacity(8);
            let mut rp = Matrix::identity(&k, 2);
            for _ in 0..4 {
                mats.push(rp.clone());
                rp = r.mul(&k, &rp).unwrap();
            }
            let mut rp = Matrix::identity(&k, 2);
            for _ in 0..4 {
                mats.push(s.mul(&k, &rp).unwrap());
                rp = r.mul(&k, &rp).unwrap();
            }
            vec![(
                "d4 standard".to_string(),
                Representation::new(h.clone(), mats).unwrap(),
            )]
        }
        "q8" => {
            let i = k.gen();
            let x = Matrix::from_rows(vec![vec![i.clone(), k.zero()], vec![k.zero(), k.neg(&i)]])
                .unwrap();
            let y = Matrix::from_rows(vec![
                vec![k.zero(), k.from_int(-1)],
                vec![k.one(), k.zero()],
            ])
            .unwrap();
            let xy = x.mul(&k, &y).unwrap();
            let id = Matrix::identity(&k, 2);
            let neg = |m: &Matrix| m.scale(&k, &k.from_int(-1));
            let mats = vec![
                id.clone(),
                neg(&id),
                x.clone(),
                neg(&x),
                y.clone(),
                neg(&y),
                xy.clone(),
                neg(&xy),
            ];
            vec![(
                "q8 standard".to_string(),
                Representation::new(h.clone(), mats).unwrap(),
            )]
        }
        _ => Vec::new(),
    }
}

/// Sweedler 2-dim representation: g -> diag(1,-1), x -> E12.
pub fn sweedler_rep2() -> Representation {
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

/// The full representation corpus: every character and 2-dim irrep of every
/// corpus group algebra, each regular and trivial representation, and the
/// Sweedler 2-dim representation.
pub fn corpus_reps() -> Vec<CorpusRep> {
    let mut out = Vec::new();
    for (name, field, table) in corpus_fields_and_tables() {
        let h = Arc::new(group_algebra(field, &table));
        for (label, rep) in group_characters(name, &h) {
            out.push(CorpusRep {
                name: label,
                rep,
                group: Some(table.clone()),
            });
        }
        for (label, rep) in two_dimensional_irreps(name, &h) {
            out.push(CorpusRep {
                name: label,
                rep,
                group: Some(table.clone()),
            });
        }
        out.push(CorpusRep {
            name: format!("{name} regular"),
            rep: Representation::regular(h.clone()),
            group: Some(table.clone()),
        });
        out.push(CorpusRep {
            name: format!("{name} trivial"),
            rep: Representation::trivial(h.clone()),
            group: Some(table.clone()),
        });
    }
    let h = Arc::new(sweedler());
    out.push(CorpusRep {
        name: "sweedler trivial".to_string(),
        rep: Representation::trivial(h.clone()),
        group: None,
    });
    out.push(CorpusRep {
        name: "sweedler regular".to_string(),
        rep: Representation::regular(h),
        group: None,
    });
    out.push(CorpusRep {
        name: "sweedler rep2".to_string(),
        rep: sweedler_rep2(),
        group: None,
    });
    out
}
