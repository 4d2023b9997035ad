//! Homomorphisms between finite abelian groups given by generator images.

use num_bigint::BigUint;

use super::congruence::{solve_congruence, solve_congruence_kernel};
use super::group::{FinAbGroup, GroupElement};
use super::matrix::IntMatrix;
use super::subgroup::Subgroup;
use super::elem_to_big;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<GroupElement>,
}

impl Morphism {
    /// Checks coordinate ranges and well-definedness (`d_i * f(e_i) = 0`).
    pub fn new(source: FinAbGroup, target: FinAbGroup, images: Vec<GroupElement>) -> Result<Self> {
        let f = Self::new_unchecked(source, target, images)?;
        if let Some(index) = f.ill_defined_generators().first() {
            return Err(Error::NotWellDefined {
                index: *index,
                order: f.source.orders()[*index],
            });
        }
        Ok(f)
    }

    /// Checks only shapes and coordinate ranges. Used for untrusted data that
    /// is audited afterwards (certificates).
    pub fn new_unchecked(
        source: FinAbGroup,
        target: FinAbGroup,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a source of rank {}",
                images.len(),
                source.rank()
            )));
        }
        for x in &images {
            target.check(x)?;
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(g: &FinAbGroup) -> Morphism {
        Morphism {
            source: g.clone(),
            target: g.clone(),
            images: g.generators(),
        }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// Column `i` is the image of source generator `i`.
    pub fn matrix(&self) -> Vec<Vec<u64>> {
        (0..self.target.rank())
            .map(|row| self.images.iter().map(|x| x.0[row]).collect())
            .collect()
    }

    /// Indices `i` with `d_i * f(e_i) != 0`.
    pub fn ill_defined_generators(&self) -> Vec<usize> {
        self.images
            .iter()
            .zip(self.source.orders())
            .enumerate()
            .filter(|(_, (x, &d))| !self.target.scale(x, d).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_well_defined(&self) -> bool {
        self.ill_defined_generators().is_empty()
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        self.source.check(x)?;
        Ok(self.target.combine(&x.0, &self.images))
    }

    /// `g ∘ f`.
    pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::CompositionMismatch);
        }
        let images = f
            .images
            .iter()
            .map(|x| g.apply(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism {
            source: f.source.clone(),
            target: g.target.clone(),
            images,
        })
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Result<Morphism> {
        Self::compose(self, f)
    }

    /// Pointwise sum of two maps with the same source and target.
    pub fn sum(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::CompositionMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| self.target.add(a, b))
            .collect();
        Ok(Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// `f ⊕ g : A1 x A2 -> B1 x B2`.
    pub fn direct_sum(&self, other: &Morphism) -> Morphism {
        let images = self
            .images
            .iter()
            .map(|x| {
                let mut v = x.0.clone();
                v.extend(std::iter::repeat_n(0, other.target.rank()));
                GroupElement(v)
            })
            .chain(other.images.iter().map(|y| {
                let mut v = vec![0; self.target.rank()];
                v.extend_from_slice(&y.0);
                GroupElement(v)
            }))
            .collect();
        Morphism {
            source: self.source.product(&other.source),
            target: self.target.product(&other.target),
            images,
        }
    }

    fn image_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<u64>> = self.matrix();
        IntMatrix::from_rows(&rows, self.source.rank())
    }

    /// Kernel via the congruence system `M x = 0 (mod target orders)`.
    pub fn kernel(&self) -> Result<Subgroup> {
        solve_congruence_kernel(&self.image_matrix(), self.target.orders(), self.source.orders())
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::generated(&self.target, &self.images).expect("images are in range")
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.is_trivial())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_bijective(&self) -> Result<bool> {
        Ok(self.is_surjective() && self.is_injective()?)
    }

    /// Some `x` with `f(x) = y`, if any.
    pub fn preimage(&self, y: &GroupElement) -> Result<Option<GroupElement>> {
        self.target.check(y)?;
        solve_congruence(
            &self.image_matrix(),
            &elem_to_big(y),
            self.target.orders(),
            self.source.orders(),
        )
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<Morphism> {
        if !self.is_bijective()? {
            return Err(Error::Internal("inverse of a non-bijective morphism".into()));
        }
        let images = self
            .target
            .generators()
            .iter()
            .map(|y| {
                self.preimage(y)?
                    .ok_or_else(|| Error::Internal("surjective map without preimage".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(self.target.clone(), self.source.clone(), images)
    }

    /// `|f(A)|`, computed from the canonical form of the image.
    pub fn image_cardinality(&self) -> BigUint {
        self.image().cardinality()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    fn e(v: &[u64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn stretched_embedding_is_injective() {
        let f = Morphism::new(g(&[2, 4]), g(&[8, 8]), vec![e(&[4, 0]), e(&[0, 2])]).unwrap();
        assert!(f.is_injective().unwrap());
        assert!(!f.is_surjective());
    }

    #[test]
    fn identity_kernel_trivial() {
        let id = Morphism::identity(&g(&[2, 4]));
        assert!(id.kernel().unwrap().is_trivial());
        assert!(id.is_bijective().unwrap());
    }

    #[test]
    fn reduction_mod_two() {
        let f = Morphism::new(g(&[4]), g(&[2]), vec![e(&[1])]).unwrap();
        let k = f.kernel().unwrap();
        assert_eq!(k.invariant_factors(), vec![2]);
        assert!(k.contains(&e(&[2])).unwrap());
        assert!(!f.is_injective().unwrap());
    }

    #[test]
    fn ill_defined_is_rejected() {
        let err = Morphism::new(g(&[2, 4]), g(&[8, 8]), vec![e(&[2, 0]), e(&[0, 2])]);
        assert_eq!(err, Err(Error::NotWellDefined { index: 0, order: 2 }));
        let raw = Morphism::new_unchecked(g(&[2, 4]), g(&[8, 8]), vec![e(&[2, 0]), e(&[0, 2])]).unwrap();
        assert_eq!(raw.ill_defined_generators(), vec![0]);
    }

    #[test]
    fn composition_and_inverse() {
        let a = g(&[6]);
        let b = g(&[2, 3]);
        let f = Morphism::new(a.clone(), b.clone(), vec![e(&[1, 1])]).unwrap();
        assert!(f.is_bijective().unwrap());
        let inv = f.inverse().unwrap();
        let round = Morphism::compose(&inv, &f).unwrap();
        assert_eq!(round, Morphism::identity(&a));
        assert_eq!(Morphism::compose(&f, &f), Err(Error::CompositionMismatch));
        let sum = f.direct_sum(&inv);
        assert_eq!(sum.apply(&e(&[1, 1, 2])).unwrap(), e(&[1, 1, 5]));
    }
}
