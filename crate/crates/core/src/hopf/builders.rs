//! Corpus builders: group algebras, their duals, and the 4-dimensional
//! Sweedler algebra.

use alloc::vec;

use crate::linalg::Matrix;
use crate::scalar::FieldSpec;

use super::groups::GroupTable;
use super::HopfAlgebraData;

/// The group algebra k[G]: basis = group elements, Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}.
pub fn group_algebra(field: FieldSpec, table: &GroupTable) -> HopfAlgebraData {
    let n = table.order();
    let mut mult = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            mult[(i * n + j) * n + table.mul(i, j)] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let mut comult = vec![field.zero(); n * n * n];
    for i in 0..n {
        comult[(i * n + i) * n + i] = field.one();
    }
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zero(&field, n, n);
    for j in 0..n {
        antipode.set(table.inverse(j), j, field.one());
    }
    HopfAlgebraData::new(field, mult, unit, comult, counit, antipode)
        .expect("group algebra tables have consistent shape")
}

/// Functions on G: basis of delta functions, pointwise product,
/// Delta(delta_g) = sum over ab = g of delta_a (x) delta_b. Structure
/// tensors are those of the group algebra with mult and comult swapped
/// (transposed pairing).
pub fn dual_group_algebra(field: FieldSpec, table: &GroupTable) -> HopfAlgebraData {
    let n = table.order();
    let mut mult = vec![field.zero(); n * n * n];
    for i in 0..n {
        mult[(i * n + i) * n + i] = field.one();
    }
    let unit = vec![field.one(); n];
    let mut comult = vec![field.zero(); n * n * n];
    for j in 0..n {
        for k in 0..n {
            comult[(table.mul(j, k) * n + j) * n + k] = field.one();
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[0] = field.one();
    let mut antipode = Matrix::zero(&field, n, n);
    for j in 0..n {
        antipode.set(table.inverse(j), j, field.one());
    }
    HopfAlgebraData::new(field, mult, unit, comult, counit, antipode)
        .expect("dual group algebra tables have consistent shape")
}

/// The Sweedler algebra H4 over the rationals: basis (1, g, x, gx) with
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g,
/// Delta(x) = x (x) 1 + g (x) x. The smallest non-commutative
/// non-cocommutative Hopf algebra; antipode order 4.
pub fn sweedler() -> HopfAlgebraData {
    let field = FieldSpec::rationals();
    let one = || field.one();
    let neg = || field.from_int(-1);
    let d = 4;
    let mut mult = vec![field.zero(); d * d * d];
    // (row, col, result basis index, sign)
    let products: [(usize, usize, usize, i64); 16] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1), // g g = 1
        (1, 2, 3, 1), // g x = gx
        (1, 3, 2, 1), // g gx = x
        (2, 0, 2, 1),
        (2, 1, 3, -1), // x g = -gx
        // x x = 0, x gx = 0
        (3, 0, 3, 1),
        (3, 1, 2, -1), // gx g = -x
        // gx x = 0, gx gx = 0
        (2, 2, 0, 0),
        (2, 3, 0, 0),
        (3, 2, 0, 0),
        (3, 3, 0, 0),
    ];
    for &(i, j, k, s) in &products {
        if s != 0 {
            mult[(i * d + j) * d + k] = field.from_int(s);
        }
    }
    let mut unit = vec![field.zero(); d];
    unit[0] = one();
    let mut comult = vec![field.zero(); d * d * d];
    comult[(0 * d + 0) * d + 0] = one(); // Delta(1) = 1 (x) 1
    comult[(1 * d + 1) * d + 1] = one(); // Delta(g) = g (x) g
    comult[(2 * d + 2) * d + 0] = one(); // Delta(x) = x (x) 1 + g (x) x
    comult[(2 * d + 1) * d + 2] = one();
    comult[(3 * d + 3) * d + 1] = one(); // Delta(gx) = gx (x) g + 1 (x) gx
    comult[(3 * d + 0) * d + 3] = one();
    let counit = vec![one(), one(), field.zero(), field.zero()];
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    let mut antipode = Matrix::zero(&field, d, d);
    antipode.set(0, 0, one());
    antipode.set(1, 1, one());
    antipode.set(3, 2, neg());
    antipode.set(2, 3, one());
    HopfAlgebraData::new(field, mult, unit, comult, counit, antipode)
        .expect("sweedler tables have consistent shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::groups::GroupTable;
    use alloc::vec::Vec;

    fn corpus_tables() -> Vec<(&'static str, GroupTable)> {
        vec![
            ("Z2", GroupTable::cyclic(2)),
            ("Z3", GroupTable::cyclic(3)),
            ("Z4", GroupTable::cyclic(4)),
            ("Z5", GroupTable::cyclic(5)),
            ("Z6", GroupTable::cyclic(6)),
            ("S3", GroupTable::symmetric3()),
            ("D4", GroupTable::dihedral(4)),
            ("Q8", GroupTable::quaternion()),
        ]
    }

    #[test]
    fn group_algebras_pass_axioms() {
        for (name, table) in corpus_tables() {
            let h = group_algebra(FieldSpec::rationals(), &table);
            let report = h.verify();
            assert!(report.all_pass(), "{name}: {:?}", report.failing());
        }
    }

    #[test]
    fn dual_group_algebras_pass_axioms() {
        for (name, table) in corpus_tables() {
            let h = dual_group_algebra(FieldSpec::rationals(), &table);
            let report = h.verify();
            assert!(report.all_pass(), "dual {name}: {:?}", report.failing());
        }
    }

    #[test]
    fn z2_antipode_is_identity() {
        let h = group_algebra(FieldSpec::rationals(), &GroupTable::cyclic(2));
        assert_eq!(h.dim(), 2);
        assert!(h.antipode_matrix().is_identity());
    }

    #[test]
    fn s3_antipode_is_inversion_permutation() {
        let table = GroupTable::symmetric3();
        let h = group_algebra(FieldSpec::rationals(), &table);
        let k = h.field();
        for j in 0..6 {
            for i in 0..6 {
                let expected = if i == table.inverse(j) {
                    k.one()
                } else {
                    k.zero()
                };
                assert_eq!(h.antipode_matrix().at(i, j), &expected);
            }
        }
    }

    #[test]
    fn dual_s3_commutative_not_cocommutative() {
        let table = GroupTable::symmetric3();
        let h = dual_group_algebra(FieldSpec::rationals(), &table);
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    assert_eq!(h.mult_coeff(i, j, k), h.mult_coeff(j, i, k));
                }
            }
        }
        let cocommutative = (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| h.comult_coeff(i, j, k) == h.comult_coeff(i, k, j)))
        });
        assert!(!cocommutative);
    }

    #[test]
    fn group_and_dual_are_a_bialgebra_pairing() {
        // Pairing <e_g, delta_h> = delta_{g,h}: multiplication on one side
        // is comultiplication on the other, with indices transposed.
        let table = GroupTable::symmetric3();
        let h = group_algebra(FieldSpec::rationals(), &table);
        let hd = dual_group_algebra(FieldSpec::rationals(), &table);
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    assert_eq!(h.mult_coeff(i, j, k), hd.comult_coeff(k, i, j));
                    assert_eq!(hd.mult_coeff(i, j, k), h.comult_coeff(k, i, j));
                }
            }
        }
        // <S(x), f> = <x, S(f)>
        assert_eq!(h.antipode_matrix(), &hd.antipode_matrix().transpose());
    }

    #[test]
    fn sweedler_antipode_action() {
        let h = sweedler();
        let k = h.field();
        let s = h.antipode_matrix();
        // S(x) = -gx
        let mut x = vec![k.zero(); 4];
        x[2] = k.one();
        let sx = s.apply(k, &x).unwrap();
        assert_eq!(sx, vec![k.zero(), k.zero(), k.zero(), k.from_int(-1)]);
        // S^2(x) = -x
        let s2x = s.apply(k, &sx).unwrap();
        assert_eq!(s2x, vec![k.zero(), k.zero(), k.from_int(-1), k.zero()]);
        // counit vector (1,1,0,0)
        assert_eq!(h.counit_vec(), &[k.one(), k.one(), k.zero(), k.zero()]);
    }

    #[test]
    fn builders_work_over_extension_fields() {
        let h = group_algebra(FieldSpec::cyclotomic3(), &GroupTable::cyclic(6));
        assert!(h.verify().all_pass());
        let hd = dual_group_algebra(FieldSpec::gaussian(), &GroupTable::cyclic(4));
        assert!(hd.verify().all_pass());
    }
}
