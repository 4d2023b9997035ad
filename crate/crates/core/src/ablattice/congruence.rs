//! Linear congruence systems over products of cyclic groups, and quotients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{FinAbGroup, GroupElement};
use super::matrix::IntMatrix;
use super::morphism::Morphism;
use super::snf::{integer_kernel, smith_normal_form, solve_integer_system};
use super::subgroup::Subgroup;
use super::big_to_mod;
use crate::error::{Error, Result};

fn check_system(m: &IntMatrix, row_moduli: &[u64], col_moduli: &[u64]) -> Result<FinAbGroup> {
    if m.rows() != row_moduli.len() || m.cols() != col_moduli.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, row moduli {}, column moduli {}",
            m.rows(),
            m.cols(),
            row_moduli.len(),
            col_moduli.len()
        )));
    }
    if let Some(&r) = row_moduli.iter().find(|&&r| r == 0) {
        return Err(Error::InvalidOrder(r));
    }
    let group = FinAbGroup::new(col_moduli.to_vec())?;
    for (j, &rm) in row_moduli.iter().enumerate() {
        let rm = BigInt::from(rm);
        for (i, &cm) in col_moduli.iter().enumerate() {
            if !(&m[(j, i)] * BigInt::from(cm) % &rm).is_zero() {
                return Err(Error::IllDefinedSystem { row: j, col: i });
            }
        }
    }
    Ok(group)
}

/// `[m | -diag(row_moduli)]`.
fn stacked(m: &IntMatrix, row_moduli: &[u64]) -> IntMatrix {
    let neg: Vec<BigInt> = row_moduli.iter().map(|&r| -BigInt::from(r)).collect();
    m.hstack(&IntMatrix::diagonal(&neg))
}

/// All `x` in `prod Z/col_moduli` with `sum_i m[j][i] x_i = 0 mod row_moduli[j]`.
///
/// The solution lattice is the projection of the integer kernel of
/// `[m | -R]` onto the `x` coordinates; no element is enumerated.
pub fn solve_congruence_kernel(
    m: &IntMatrix,
    row_moduli: &[u64],
    col_moduli: &[u64],
) -> Result<Subgroup> {
    let group = check_system(m, row_moduli, col_moduli)?;
    let c = m.cols();
    let kernel = integer_kernel(&stacked(m, row_moduli));
    let rows: Vec<Vec<BigInt>> = (0..kernel.rows())
        .map(|k| kernel.row(k)[..c].to_vec())
        .collect();
    Ok(Subgroup::from_lattice(&group, &IntMatrix::from_rows(&rows, c)))
}

/// One `x` with `m x = rhs (mod row_moduli)`, or `None` if the system is
/// inconsistent.
pub fn solve_congruence(
    m: &IntMatrix,
    rhs: &[BigInt],
    row_moduli: &[u64],
    col_moduli: &[u64],
) -> Result<Option<GroupElement>> {
    let group = check_system(m, row_moduli, col_moduli)?;
    if rhs.len() != row_moduli.len() {
        return Err(Error::DimensionMismatch("right-hand side length".into()));
    }
    Ok(solve_integer_system(&stacked(m, row_moduli), rhs).map(|z| {
        GroupElement(
            z[..m.cols()]
                .iter()
                .zip(group.orders())
                .map(|(x, &d)| big_to_mod(x, d))
                .collect(),
        )
    }))
}

/// The quotient `G/S` in invariant-factor form.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub group: FinAbGroup,
    pub projection: Morphism,
    /// `lifts[j]` is an element of `G` projecting onto generator `j` of the quotient.
    pub lifts: Vec<GroupElement>,
}

/// Computes `G/S` by Smith form of the Hermite basis of `S`'s lattice.
pub fn quotient(s: &Subgroup) -> QuotientMap {
    let ambient = s.ambient();
    let snf = smith_normal_form(s.lattice_basis());
    let r = ambient.rank();
    let mut orders = Vec::new();
    let mut kept = Vec::new();
    for j in 0..r {
        let t = &snf.d[(j, j)];
        if !t.is_one() {
            orders.push(u64::try_from(t).expect("quotient factor fits in u64"));
            kept.push(j);
        }
    }
    let group = FinAbGroup::new(orders).expect("factors >= 2");
    let images: Vec<GroupElement> = (0..r)
        .map(|i| {
            GroupElement(
                kept.iter()
                    .zip(group.orders())
                    .map(|(&j, &t)| big_to_mod(&snf.v[(i, j)], t))
                    .collect(),
            )
        })
        .collect();
    let lifts = kept
        .iter()
        .map(|&j| {
            GroupElement(
                snf.v_inv
                    .row(j)
                    .iter()
                    .zip(ambient.orders())
                    .map(|(x, &d)| big_to_mod(x, d))
                    .collect(),
            )
        })
        .collect();
    let projection =
        Morphism::new(ambient.clone(), group.clone(), images).expect("projection is well defined");
    QuotientMap {
        group,
        projection,
        lifts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn mat(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
        IntMatrix::from_rows(rows, cols)
    }

    /// Enumeration oracle for the kernel.
    fn brute(m: &[Vec<i64>], row_moduli: &[u64], col_moduli: &[u64]) -> Vec<GroupElement> {
        let g = FinAbGroup::new(col_moduli.to_vec()).unwrap();
        g.elements()
            .filter(|x| {
                m.iter().zip(row_moduli).all(|(row, &rm)| {
                    let s: i128 = row.iter().zip(&x.0).map(|(&a, &b)| a as i128 * b as i128).sum();
                    s.rem_euclid(rm as i128) == 0
                })
            })
            .collect()
    }

    #[test]
    fn cyclic_example() {
        let s = solve_congruence_kernel(&mat(&[vec![1]], 1), &[2], &[4]).unwrap();
        assert_eq!(s.invariant_factors(), vec![2]);
        assert_eq!(s.elements().len(), 2);
        assert!(s.contains(&GroupElement(vec![2])).unwrap());
    }

    #[test]
    fn unconstrained_and_identity() {
        let s = solve_congruence_kernel(&IntMatrix::zeros(0, 2), &[], &[2, 4]).unwrap();
        assert!(s.is_whole());
        let s = solve_congruence_kernel(&mat(&[vec![0, 0]], 2), &[3], &[2, 4]).unwrap();
        assert!(s.is_whole());
        let s = solve_congruence_kernel(&mat(&[vec![1, 0], vec![0, 1]], 2), &[2, 4], &[2, 4]).unwrap();
        assert!(s.is_trivial());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            solve_congruence_kernel(&mat(&[vec![1, 0]], 2), &[2, 2], &[2, 4]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            solve_congruence_kernel(&mat(&[vec![1]], 1), &[4], &[2]),
            Err(Error::IllDefinedSystem { .. })
        ));
    }

    #[test]
    fn matches_enumeration() {
        let cases: Vec<(Vec<Vec<i64>>, Vec<u64>, Vec<u64>)> = vec![
            (vec![vec![2, 1, 3]], vec![4], vec![4, 4, 4]),
            (vec![vec![1, 2], vec![3, 3]], vec![2, 6], vec![6, 6]),
            (vec![vec![4, 2, 1], vec![0, 4, 2]], vec![8, 8], vec![2, 4, 8]),
            (vec![vec![3, 6]], vec![9], vec![3, 9]),
        ];
        for (m, rm, cm) in cases {
            let s = solve_congruence_kernel(&mat(&m, cm.len()), &rm, &cm).unwrap();
            let b = brute(&m, &rm, &cm);
            assert_eq!(s.cardinality(), BigUint::from(b.len()));
            for x in &b {
                assert!(s.contains(x).unwrap());
            }
        }
    }

    #[test]
    fn particular_solution() {
        let m = mat(&[vec![2, 1]], 2);
        let x = solve_congruence(&m, &[BigInt::from(3)], &[4], &[4, 4]).unwrap().unwrap();
        assert_eq!((2 * x.0[0] + x.0[1]) % 4, 3);
        let m = mat(&[vec![2]], 1);
        assert!(solve_congruence(&m, &[BigInt::from(1)], &[4], &[2]).unwrap().is_none());
    }

    #[test]
    fn quotient_by_cyclic() {
        let a = FinAbGroup::new(vec![2, 4, 8]).unwrap();
        let k = Subgroup::generated(&a, &[GroupElement(vec![1, 2, 2])]).unwrap();
        let q = quotient(&k);
        assert_eq!(q.group.cardinality(), BigUint::from(16u32));
        for (j, l) in q.lifts.iter().enumerate() {
            assert_eq!(q.projection.apply(l).unwrap(), q.group.generator(j));
        }
        assert!(q.projection.apply(&GroupElement(vec![1, 2, 2])).unwrap().is_zero());
        let t = quotient(&Subgroup::trivial(&a));
        assert_eq!(t.group.orders(), &[2, 4, 8]);
    }
}
