//! Subgroups of a finite abelian group in canonical form.
//!
//! A subgroup `S` of `G = Z^r / diag(d) Z^r` is stored as the lattice
//! `L = pi^{-1}(S)`, which always contains `diag(d) Z^r`. The lattice is kept
//! as its Hermite basis `H` (rows), so two subgroups are equal exactly when
//! their bases are. The canonical generators come from the Smith form of
//! `Y = diag(d) H^{-1}`, which presents `S` as `Z^r / Y Z^r`.

use std::hash::{Hash, Hasher};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::group::{FinAbGroup, GroupElement};
use super::matrix::IntMatrix;
use super::snf::{hermite_rows, smith_normal_form, solve_upper_left};
use super::{big_to_mod, elem_to_big};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: FinAbGroup,
    hnf: IntMatrix,
    gens: Vec<GroupElement>,
    canonical_orders: Vec<u64>,
    // Columns of the Smith right transform for the kept generators; maps
    // lattice coordinates to generator coordinates.
    coord_map: IntMatrix,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.hnf == other.hnf
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.hnf.hash(state);
    }
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(ambient: &FinAbGroup, gens: &[GroupElement]) -> Result<Subgroup> {
        for g in gens {
            ambient.check(g)?;
        }
        let r = ambient.rank();
        let mut rows: Vec<Vec<BigInt>> = gens.iter().map(elem_to_big).collect();
        for (i, &d) in ambient.orders().iter().enumerate() {
            let mut row = vec![BigInt::zero(); r];
            row[i] = BigInt::from(d);
            rows.push(row);
        }
        Ok(Self::from_lattice(ambient, &IntMatrix::from_rows(&rows, r)))
    }

    /// Image in `ambient` of the lattice spanned by `rows` together with the
    /// relations of the ambient group. Entries need not be reduced.
    pub(crate) fn from_lattice(ambient: &FinAbGroup, rows: &IntMatrix) -> Subgroup {
        let r = ambient.rank();
        let mut full = rows.clone();
        full = full.vstack(&IntMatrix::diagonal(ambient.orders()));
        let hnf = hermite_rows(&full);
        debug_assert_eq!(hnf.rows(), r);

        // Y: row i solves y H = d_i e_i.
        let mut y_rows = Vec::with_capacity(r);
        for (i, &d) in ambient.orders().iter().enumerate() {
            let mut target = vec![BigInt::zero(); r];
            target[i] = BigInt::from(d);
            y_rows.push(solve_upper_left(&hnf, &target).expect("relations lie in the lattice"));
        }
        let y = IntMatrix::from_rows(&y_rows, r);
        let snf = smith_normal_form(&y);

        let mut gens = Vec::new();
        let mut canonical_orders = Vec::new();
        let mut kept_cols = Vec::new();
        for j in 0..r {
            let s = &snf.d[(j, j)];
            if s.is_one() {
                continue;
            }
            let s = u64::try_from(s).expect("invariant factor fits in u64");
            let lattice_vec = hnf.left_apply(snf.v_inv.row(j));
            gens.push(GroupElement(
                lattice_vec
                    .iter()
                    .zip(ambient.orders())
                    .map(|(x, &d)| big_to_mod(x, d))
                    .collect(),
            ));
            canonical_orders.push(s);
            kept_cols.push(snf.v.col(j));
        }
        let coord_map = IntMatrix::from_rows(&kept_cols, r).transpose();
        Subgroup {
            ambient: ambient.clone(),
            hnf,
            gens,
            canonical_orders,
            coord_map,
        }
    }

    pub fn trivial(ambient: &FinAbGroup) -> Subgroup {
        Self::generated(ambient, &[]).expect("empty generating set")
    }

    pub fn whole(ambient: &FinAbGroup) -> Subgroup {
        Self::generated(ambient, &ambient.generators()).expect("standard generators")
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    /// Canonical generators; generator `j` has order `canonical_orders()[j]`
    /// and the subgroup is their internal direct sum.
    pub fn gens(&self) -> &[GroupElement] {
        &self.gens
    }

    /// Invariant factors in divisibility order, all at least 2.
    pub fn canonical_orders(&self) -> &[u64] {
        &self.canonical_orders
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        self.canonical_orders.clone()
    }

    /// The canonical group `Z/s_1 x ... x Z/s_k` this subgroup is isomorphic to.
    pub fn canonical_group(&self) -> FinAbGroup {
        FinAbGroup::new(self.canonical_orders.clone()).expect("invariant factors >= 2")
    }

    /// Hermite basis of the preimage lattice.
    pub fn lattice_basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn cardinality(&self) -> BigUint {
        self.canonical_orders.iter().map(|&s| BigUint::from(s)).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.hnf == IntMatrix::identity(self.ambient.rank())
    }

    fn lattice_coords(&self, x: &GroupElement) -> Option<Vec<BigInt>> {
        solve_upper_left(&self.hnf, &elem_to_big(x))
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        self.ambient.check(x)?;
        Ok(self.lattice_coords(x).is_some())
    }

    /// Coordinates of `x` on the canonical generators.
    pub fn coordinates(&self, x: &GroupElement) -> Result<Vec<u64>> {
        self.ambient.check(x)?;
        let c = self.lattice_coords(x).ok_or(Error::NotInSubgroup)?;
        let w = self.coord_map.left_apply(&c);
        Ok(w
            .iter()
            .zip(&self.canonical_orders)
            .map(|(x, &s)| big_to_mod(x, s))
            .collect())
    }

    /// Ambient element with the given canonical coordinates.
    pub fn element(&self, coords: &[u64]) -> GroupElement {
        self.ambient.combine(coords, &self.gens)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient
            && self.gens.iter().all(|g| other.lattice_coords(g).is_some())
    }

    /// `self + other`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.ambient, other.ambient);
        Self::from_lattice(&self.ambient, &self.hnf.vstack(&other.hnf))
    }

    /// `self + <x>`.
    pub fn adjoin(&self, x: &GroupElement) -> Result<Subgroup> {
        self.ambient.check(x)?;
        let row = IntMatrix::from_rows(&[elem_to_big(x)], self.ambient.rank());
        Ok(Self::from_lattice(&self.ambient, &self.hnf.vstack(&row)))
    }

    /// Materializes all elements. Intended for small groups only.
    pub fn elements(&self) -> Vec<GroupElement> {
        let cg = self.canonical_group();
        cg.elements().map(|c| self.element(&c.0)).collect()
    }
}
