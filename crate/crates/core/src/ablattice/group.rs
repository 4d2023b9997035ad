//! Finite abelian groups given as products of cyclic factors, and their elements.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// `Z/d_1 x ... x Z/d_r`. The trivial group is the empty product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

/// Coordinate vector of an element relative to a [`FinAbGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<u64>> for GroupElement {
    fn from(v: Vec<u64>) -> Self {
        GroupElement(v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&d) = orders.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidOrder(d));
        }
        Ok(FinAbGroup { orders })
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn cardinality(&self) -> BigUint {
        self.orders.iter().map(|&d| BigUint::from(d)).product()
    }

    /// Cardinality if it fits in a `u64`.
    pub fn small_cardinality(&self) -> Option<u64> {
        self.orders.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &d| acc.lcm(&d))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.orders[i];
        GroupElement(v)
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Checks length and coordinate ranges.
    pub fn check(&self, x: &GroupElement) -> Result<()> {
        if x.0.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, group has rank {}",
                x.0.len(),
                self.rank()
            )));
        }
        for (index, (&value, &order)) in x.0.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(Error::CoordinateOutOfRange { index, value, order });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.check(x).is_ok()
    }

    /// Reduces arbitrary signed coordinates into the group.
    pub fn element_from_ints(&self, xs: &[i128]) -> GroupElement {
        GroupElement(
            xs.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
                .collect(),
        )
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| ((x as u128 + y as u128) % d as u128) as u64)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| (d - x % d) % d)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupElement, k: u64) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| ((x as u128 * (k % d) as u128) % d as u128) as u64)
                .collect(),
        )
    }

    /// `sum_i coeffs[i] * elems[i]`.
    pub fn combine(&self, coeffs: &[u64], elems: &[GroupElement]) -> GroupElement {
        coeffs
            .iter()
            .zip(elems)
            .fold(self.zero(), |acc, (&c, e)| self.add(&acc, &self.scale(e, c)))
    }

    /// `lcm_i d_i / gcd(x_i, d_i)`.
    pub fn order_of(&self, x: &GroupElement) -> u64 {
        x.0.iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&xi, &d)| acc.lcm(&(d / xi.gcd(&d))))
    }

    /// Row-major enumeration of all elements (last coordinate fastest).
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            group: self,
            next: Some(self.zero()),
        }
    }

    /// Mixed-radix index of an element, consistent with [`FinAbGroup::elements`].
    pub fn index_of(&self, x: &GroupElement) -> usize {
        x.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&xi, &d)| acc * d as usize + xi as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut v = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let d = self.orders[i] as usize;
            v[i] = (index % d) as u64;
            index /= d;
        }
        GroupElement(v)
    }

    /// Direct product `self x other`.
    pub fn product(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        FinAbGroup { orders }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

pub struct ElementIter<'a> {
    group: &'a FinAbGroup,
    next: Option<GroupElement>,
}

impl Iterator for ElementIter<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.0.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            succ.0[i] += 1;
            if succ.0[i] < self.group.orders[i] {
                self.next = Some(succ);
                break;
            }
            succ.0[i] = 0;
        }
        Some(cur)
    }
}
