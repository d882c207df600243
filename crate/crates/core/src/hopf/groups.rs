//! Finite group multiplication tables for the builder corpus.
//!
//! Tables are 0-indexed with element 0 the identity. Validation is O(n^3)
//! brute force; corpus groups are tiny.

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupTableError {
    /// Table is not n x n.
    BadShape { order: usize, rows: usize },
    /// An entry is outside 0..n.
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
    },
    /// Row or column 0 is not the identity.
    BadIdentity { index: usize },
    /// (i j) k != i (j k) at the recorded triple.
    NotAssociative { triple: [usize; 3] },
    /// Some element has no two-sided inverse.
    NoInverse { element: usize },
}

impl fmt::Display for GroupTableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTableError::BadShape { order, rows } => {
                write!(
                    f,
                    "table for order {order} has {rows} entries, expected {order}x{order}"
                )
            }
            GroupTableError::EntryOutOfRange { row, col, entry } => {
                write!(f, "entry {entry} at ({row},{col}) is out of range")
            }
            GroupTableError::BadIdentity { index } => {
                write!(f, "element 0 is not a two-sided identity at index {index}")
            }
            GroupTableError::NotAssociative { triple } => {
                write!(
                    f,
                    "not associative at ({}, {}, {})",
                    triple[0], triple[1], triple[2]
                )
            }
            GroupTableError::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
        }
    }
}

impl core::error::Error for GroupTableError {}

/// Validated multiplication table of a finite group, element 0 = identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
}

impl GroupTable {
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self, GroupTableError> {
        if table.len() != order * order || order == 0 {
            return Err(GroupTableError::BadShape {
                order,
                rows: table.len(),
            });
        }
        let at = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            for j in 0..order {
                if at(i, j) >= order {
                    return Err(GroupTableError::EntryOutOfRange {
                        row: i,
                        col: j,
                        entry: at(i, j),
                    });
                }
            }
        }
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupTableError::BadIdentity { index: i });
            }
        }
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if at(at(i, j), k) != at(i, at(j, k)) {
                        return Err(GroupTableError::NotAssociative { triple: [i, j, k] });
                    }
                }
            }
        }
        for i in 0..order {
            let has_inverse = (0..order).any(|j| at(i, j) == 0 && at(j, i) == 0);
            if !has_inverse {
                return Err(GroupTableError::NoInverse { element: i });
            }
        }
        Ok(GroupTable { order, table })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order)
            .find(|&j| self.mul(i, j) == 0)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Entries of the raw table, row-major.
    pub fn entries(&self) -> &[usize] {
        &self.table
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        GroupTable::new(n, table).expect("cyclic table is a group")
    }

    /// Symmetric group on 3 letters, ordered e, r, r2, s, sr, sr2 where
    /// r = (0 1 2) and s swaps 0,1. A3 = elements 0,1,2.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2], // e
            [1, 2, 0], // r
            [2, 0, 1], // r^2
            [1, 0, 2], // s
            [0, 2, 1], // s r  (apply r first, then s)
            [2, 1, 0], // s r^2
        ];
        let compose = |f: &[usize; 3], g: &[usize; 3]| [f[g[0]], f[g[1]], f[g[2]]];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .flat_map(|f| perms.iter().map(move |g| index(&compose(f, g))))
            .collect();
        GroupTable::new(6, table).expect("S3 table is a group")
    }

    /// Dihedral group of order 2n: indices 0..n are r^i, n..2n are s r^{i-n}.
    pub fn dihedral(n: usize) -> GroupTable {
        let order = 2 * n;
        let mul = |i: usize, j: usize| -> usize {
            match (i < n, j < n) {
                (true, true) => (i + j) % n,
                // r^a (s r^b) = s r^{b-a}
                (true, false) => n + ((j - n) + n - i) % n,
                // (s r^a) r^b = s r^{a+b}
                (false, true) => n + ((i - n) + j) % n,
                // (s r^a)(s r^b) = r^{b-a}
                (false, false) => ((j - n) + n - (i - n)) % n,
            }
        };
        let table = (0..order)
            .flat_map(|i| (0..order).map(move |j| mul(i, j)))
            .collect();
        GroupTable::new(order, table).expect("dihedral table is a group")
    }

    /// Quaternion group, ordered 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> GroupTable {
        // element = (unit, sign) with unit in {1, i, j, k} as 0..4
        let split = |e: usize| (e / 2, e % 2);
        let join = |unit: usize, sign: usize| 2 * unit + sign;
        // unit products: (result unit, sign flip)
        let unit_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, b) => (b, 0),
                (a, 0) => (a, 0),
                (1, 1) => (0, 1), // i i = -1
                (2, 2) => (0, 1),
                (3, 3) => (0, 1),
                (1, 2) => (3, 0), // i j = k
                (2, 1) => (3, 1), // j i = -k
                (2, 3) => (1, 0), // j k = i
                (3, 2) => (1, 1), // k j = -i
                (3, 1) => (2, 0), // k i = j
                (1, 3) => (2, 1), // i k = -j
                _ => unreachable!(),
            }
        };
        let mul = |x: usize, y: usize| -> usize {
            let (ua, sa) = split(x);
            let (ub, sb) = split(y);
            let (u, flip) = unit_mul(ua, ub);
            join(u, (sa + sb + flip) % 2)
        };
        let table = (0..8)
            .flat_map(|i| (0..8).map(move |j| mul(i, j)))
            .collect();
        GroupTable::new(8, table).expect("quaternion table is a group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_validate() {
        for n in 1..=6 {
            let g = GroupTable::cyclic(n);
            assert_eq!(g.order(), n);
            assert!(g.is_abelian());
            assert_eq!(g.inverse(1 % n), (n - 1) % n);
        }
    }

    #[test]
    fn symmetric3_structure() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // r has order 3, s has order 2
        assert_eq!(g.mul(1, g.mul(1, 1)), 0);
        assert_eq!(g.mul(3, 3), 0);
        // A3 = {0,1,2} is closed
        for i in 0..3 {
            for j in 0..3 {
                assert!(g.mul(i, j) < 3);
            }
        }
    }

    #[test]
    fn dihedral_and_quaternion_validate() {
        let d4 = GroupTable::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let q8 = GroupTable::quaternion();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        // i * i = -1, i * j = k, j * i = -k
        assert_eq!(q8.mul(2, 2), 1);
        assert_eq!(q8.mul(2, 4), 6);
        assert_eq!(q8.mul(4, 2), 7);
        // every element squared is 1 or -1
        for e in 0..8 {
            assert!(q8.mul(e, e) <= 1);
        }
    }

    #[test]
    fn invalid_tables_rejected() {
        // Non-associative 3-element magma with identity.
        let bad = GroupTable::new(3, alloc::vec![0, 1, 2, 1, 2, 0, 2, 1, 0]);
        assert!(matches!(
            bad.unwrap_err(),
            GroupTableError::NotAssociative { .. }
        ));
        // Identity broken.
        let bad = GroupTable::new(2, alloc::vec![1, 0, 0, 1]);
        assert!(matches!(
            bad.unwrap_err(),
            GroupTableError::BadIdentity { .. }
        ));
        // Identity fine, associative, but 1 has no inverse.
        let bad = GroupTable::new(2, alloc::vec![0, 1, 1, 1]);
        assert!(matches!(
            bad.unwrap_err(),
            GroupTableError::NoInverse { element: 1 }
        ));
        // Out of range.
        let bad = GroupTable::new(2, alloc::vec![0, 1, 1, 5]);
        assert!(matches!(
            bad.unwrap_err(),
            GroupTableError::EntryOutOfRange { .. }
        ));
    }
}
