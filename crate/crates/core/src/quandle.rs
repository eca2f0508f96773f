//! Finite quandles as validated operation tables.
//!
//! A quandle is a set with two binary operations `◁` and `◁⁻¹` satisfying
//! idempotency, right invertibility and self-distributivity. Only the table
//! for `◁` is stored; right invertibility makes the inverse table the
//! columnwise inverse, so it is derived and cached at construction. Carriers
//! are always `{0, …, n−1}`.

use crate::error::{Axiom, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    order: usize,
    table: Vec<Vec<usize>>,
    inv_table: Vec<Vec<usize>>,
}

impl Quandle {
    /// Validates an operation table (`table[i][j] = i ◁ j`) against the three
    /// axiom families and derives the inverse table. Validation is the plain
    /// triple loop; intended orders are small.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape("table must be non-empty"));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::Shape("table must be square"));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(Error::Shape("entry out of range"));
            }
        }

        // (A1) idempotency
        for i in 0..n {
            if table[i][i] != i {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Idempotency,
                    witness: (i, i, i),
                });
            }
        }

        // (A2) each column is a bijection; record its inverse.
        let mut inv_table = vec![vec![0usize; n]; n];
        for j in 0..n {
            let mut seen = vec![usize::MAX; n];
            for i in 0..n {
                let v = table[i][j];
                if seen[v] != usize::MAX {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::RightInvertibility,
                        witness: (seen[v], i, j),
                    });
                }
                seen[v] = i;
                inv_table[v][j] = i;
            }
        }

        // (A3) self-distributivity for ◁ and the mirror identity for ◁⁻¹.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[table[i][k]][table[j][k]] {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: (i, j, k),
                        });
                    }
                    if inv_table[inv_table[i][j]][k] != inv_table[inv_table[i][k]][inv_table[j][k]]
                    {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: (i, j, k),
                        });
                    }
                }
            }
        }

        Ok(Quandle {
            order: n,
            table,
            inv_table,
        })
    }

    /// The trivial quandle `T_n`: `i ◁ j = i`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "trivial quandle needs at least one element");
        let table: Vec<Vec<usize>> = (0..n).map(|i| vec![i; n]).collect();
        Quandle {
            order: n,
            inv_table: table.clone(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a ◁ b`
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// `a ◁⁻¹ b`
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inv_table(&self) -> &[Vec<usize>] {
        &self.inv_table
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|i| self.table[i].iter().all(|&v| v == i))
    }

    /// `◁ = ◁⁻¹`, i.e. every right translation is an involution.
    pub fn is_involutive(&self) -> bool {
        self.table == self.inv_table
    }

    /// Product quandle with componentwise operations. The pair `(i, j)` is
    /// indexed as `i * |b| + j`.
    pub fn product(a: &Quandle, b: &Quandle) -> Quandle {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = vec![vec![0usize; n]; n];
        for i1 in 0..na {
            for i2 in 0..nb {
                for j1 in 0..na {
                    for j2 in 0..nb {
                        table[i1 * nb + i2][j1 * nb + j2] =
                            a.table[i1][j1] * nb + b.table[i2][j2];
                    }
                }
            }
        }
        Quandle::from_table(table).expect("product of quandles is a quandle")
    }

    /// True when `subset` is closed under `◁` and `◁⁻¹`.
    pub fn is_subquandle(&self, subset: &[usize]) -> bool {
        assert!(subset.iter().all(|&i| i < self.order));
        let mut member = vec![false; self.order];
        for &i in subset {
            member[i] = true;
        }
        subset.iter().all(|&i| {
            subset
                .iter()
                .all(|&j| member[self.table[i][j]] && member[self.inv_table[i][j]])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_quandle_is_self_inverse() {
        let t3 = Quandle::from_table(vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        assert_eq!(t3, Quandle::trivial(3));
        assert_eq!(t3.table(), t3.inv_table());
        assert!(t3.is_trivial());
        assert!(t3.is_involutive());
    }

    #[test]
    fn four_element_involutive_fixture_validates() {
        let a4 = fixtures::a4();
        assert_eq!(a4.op(0, 3), 1); // a ◁ d = b
        assert_eq!(a4.op(1, 3), 0); // b ◁ d = a
        assert!(a4.is_involutive());
        assert!(!a4.is_trivial());
    }

    #[test]
    fn dihedral_quandle_is_involutive() {
        // each right translation of the three-element dihedral quandle is a
        // transposition
        assert!(fixtures::r3().is_involutive());
        assert!(fixtures::a5().is_involutive());
        assert!(fixtures::x4().is_involutive());
    }

    #[test]
    fn non_injective_column_is_rejected() {
        // row a = (a, a, c, a); column c repeats the value c.
        let t = vec![
            vec![0, 0, 2, 0],
            vec![1, 1, 1, 1],
            vec![2, 2, 2, 2],
            vec![3, 3, 3, 3],
        ];
        match Quandle::from_table(t) {
            Err(Error::AxiomViolation { axiom, witness }) => {
                assert_eq!(axiom, Axiom::RightInvertibility);
                assert_eq!(witness.2, 2);
            }
            other => panic!("expected right-invertibility failure, got {other:?}"),
        }
    }

    #[test]
    fn broken_diagonal_is_rejected() {
        let t = vec![vec![1, 0], vec![0, 1]];
        match Quandle::from_table(t) {
            Err(Error::AxiomViolation { axiom, .. }) => assert_eq!(axiom, Axiom::Idempotency),
            other => panic!("expected idempotency failure, got {other:?}"),
        }
    }

    #[test]
    fn self_distributivity_is_rejected() {
        // columns are valid permutations fixing the diagonal, but the two
        // non-identity columns are transpositions that fail (A3).
        let t = vec![
            vec![0, 2, 1],
            vec![1, 1, 0],
            vec![2, 0, 2],
        ];
        match Quandle::from_table(t) {
            Err(Error::AxiomViolation { axiom, .. }) => {
                assert_eq!(axiom, Axiom::SelfDistributivity)
            }
            other => panic!("expected self-distributivity failure, got {other:?}"),
        }
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(matches!(
            Quandle::from_table(vec![vec![0, 0], vec![1]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            Quandle::from_table(vec![]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn product_of_trivials_is_trivial() {
        let p = Quandle::product(&Quandle::trivial(2), &Quandle::trivial(2));
        assert_eq!(p, Quandle::trivial(4));
    }

    #[test]
    fn product_with_point_is_identity() {
        let r3 = fixtures::r3();
        let p = Quandle::product(&r3, &Quandle::trivial(1));
        assert_eq!(p, r3);
    }

    #[test]
    fn product_restricted_to_kernel_pairs_is_a_subquandle() {
        // pairs with equal image under the fixture map A4 → B2 form a
        // 10-element subquandle of A4 × A4
        let a4 = fixtures::a4();
        let f4 = fixtures::f4();
        let p = Quandle::product(&a4, &a4);
        let subset: Vec<usize> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| f4.apply(i) == f4.apply(j))
            .map(|(i, j)| i * 4 + j)
            .collect();
        assert_eq!(subset.len(), 10);
        assert!(p.is_subquandle(&subset));
    }

    #[test]
    fn subquandle_check() {
        let a4 = fixtures::a4();
        assert!(a4.is_subquandle(&[2, 3]));
        assert!(!a4.is_subquandle(&[0, 3])); // a ◁ d = b escapes
        assert!(a4.is_subquandle(&[0, 1, 2, 3]));
        assert!(a4.is_subquandle(&[]));
    }

    #[test]
    fn involutivity_fails_on_a_three_cycle_column() {
        // column 3 acts as the cycle 0 → 1 → 2 → 0
        let t = vec![
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 2],
            vec![2, 2, 2, 0],
            vec![3, 3, 3, 3],
        ];
        let q = Quandle::from_table(t).unwrap();
        assert!(!q.is_involutive());
        assert_eq!(q.inv_op(1, 3), 0);
        assert_eq!(q.op(0, 3), 1);
    }

    #[test]
    fn inverse_table_round_trips() {
        for q in [fixtures::a4(), fixtures::a5(), fixtures::x4(), fixtures::r3()] {
            let n = q.order();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(q.inv_op(q.op(i, j), j), i);
                    assert_eq!(q.op(q.inv_op(i, j), j), i);
                }
            }
        }
    }
}
