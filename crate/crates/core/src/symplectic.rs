//! Symplectic modules: hyperbolic splitting and the normal form `B x B*`.

use num_bigint::BigInt;

use crate::ablattice::{
    mod_inverse, solve_congruence, FinAbGroup, GroupElement, IntMatrix, Morphism, Subgroup,
};
use crate::altmodule::AlternateModule;
use crate::error::{Error, Result};

/// `isometry: A -> StandardSymplectic(b_orders)`, bijective and form-preserving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub b_orders: Vec<u64>,
    pub isometry: Morphism,
}

impl Classification {
    pub fn standard(&self) -> AlternateModule {
        AlternateModule::standard_symplectic(&self.b_orders).expect("valid invariant factors")
    }
}

/// The decomposition `A ≅ B ⊥⊕ B^perp`.
#[derive(Clone, Debug)]
pub struct SymplecticSplit {
    pub inner: AlternateModule,
    pub outer: AlternateModule,
    /// `A -> inner ⊕ outer`
    pub isometry: Morphism,
}

/// First generator pair `(e_i, e_j)`, `i < j`, whose pairing has order
/// equal to the exponent of `A`. Requires a nontrivial symplectic `p`-group.
pub fn max_pairing_pair(m: &AlternateModule) -> Result<(GroupElement, GroupElement)> {
    let (i, j) = max_pairing_indices(m)?;
    Ok((m.group().generator(i), m.group().generator(j)))
}

fn max_pairing_indices(m: &AlternateModule) -> Result<(usize, usize)> {
    if m.group().is_trivial() {
        return Err(Error::TrivialModule);
    }
    if m.primary_prime().is_none() {
        return Err(Error::NotPrimary(m.group().exponent()));
    }
    if !m.is_symplectic() {
        return Err(Error::KernelNontrivial);
    }
    let d = m.group().exponent();
    let r = m.rank();
    (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .find(|&(i, j)| m.pairing(i, j).order() == d)
        .ok_or_else(|| Error::Internal("symplectic p-group without a maximal pair".into()))
}

/// Splits `A` along a subgroup `B` on which the form is nondegenerate.
///
/// Each generator `g` is written `g = b + c` with `b` in `B` solving
/// `phi(b, s) = phi(g, s)` for the generators `s` of `B`, so `c` lies in `B^perp`.
pub fn split_symplectic_submodule(m: &AlternateModule, b: &Subgroup) -> Result<SymplecticSplit> {
    let (inner, _) = m.induced_submodule(b)?;
    if !inner.is_symplectic() {
        return Err(Error::DegenerateSubmodule);
    }
    let perp = m.orthogonal(b)?;
    let (outer, _) = m.induced_submodule(&perp)?;
    let target = AlternateModule::ortho_sum(&inner, &outer);

    let sg = b.gens();
    let e = m.group().exponent();
    let rows: Vec<Vec<u64>> = sg
        .iter()
        .map(|sl| sg.iter().map(|sk| m.eval(sk, sl).numerator_over(e)).collect())
        .collect();
    let system = IntMatrix::from_rows(&rows, sg.len());
    let moduli = vec![e; sg.len()];

    let images = m
        .group()
        .generators()
        .iter()
        .map(|g| {
            let rhs: Vec<BigInt> = sg
                .iter()
                .map(|s| BigInt::from(m.eval(g, s).numerator_over(e)))
                .collect();
            let c = solve_congruence(&system, &rhs, &moduli, inner.orders())?
                .ok_or_else(|| Error::Internal("no projection onto a symplectic block".into()))?;
            let bpart = m.group().combine(&c.0, sg);
            let rest = perp.coordinates(&m.group().sub(g, &bpart))?;
            let mut v = c.0;
            v.extend(rest);
            Ok(GroupElement(v))
        })
        .collect::<Result<Vec<_>>>()?;
    let isometry = Morphism::new(m.group().clone(), target.group().clone(), images)?;
    Ok(SymplecticSplit {
        inner,
        outer,
        isometry,
    })
}

/// Classifies a symplectic module as `B x B*` with `B` in invariant-factor form.
pub fn classify(m: &AlternateModule) -> Result<Classification> {
    if !m.is_symplectic() {
        return Err(Error::KernelNontrivial);
    }
    let parts = m.sylow_decompose();
    let mut pieces = Vec::with_capacity(parts.len());
    for part in &parts {
        let c = classify_primary(&part.module)?;
        pieces.push((c.b_orders, c.isometry.after(&part.projection)?));
    }
    merge_standard(m.group(), pieces)
}

/// Recursive hyperbolic splitting of a symplectic `p`-group module.
fn classify_primary(m: &AlternateModule) -> Result<Classification> {
    if m.group().is_trivial() {
        return Ok(Classification {
            b_orders: Vec::new(),
            isometry: zero_map(m.group(), &FinAbGroup::trivial()),
        });
    }
    let g = m.group();
    let d = g.exponent();
    let (i, j) = max_pairing_indices(m)?;
    let x = g.generator(i);
    let a = m.pairing(i, j).numerator_over(d);
    let y = g.scale(&g.generator(j), mod_inverse(a, d).expect("unit pairing"));

    let perp = m.orthogonal_of_elements(&[x.clone(), y.clone()])?;
    let (outer, _) = m.induced_submodule(&perp)?;
    let sub = classify_primary(&outer)?;
    let s = sub.b_orders.len();

    let images = g
        .generators()
        .iter()
        .map(|e| {
            let ty = m.eval(e, &y).numerator_over(d);
            let tx = m.eval(e, &x).numerator_over(d);
            let bpart = g.sub(&g.scale(&x, ty), &g.scale(&y, tx));
            let w = perp.coordinates(&g.sub(e, &bpart))?;
            let uv = sub.isometry.apply(&GroupElement(w))?;
            let mut v = uv.0[..s].to_vec();
            v.push(ty);
            v.extend_from_slice(&uv.0[s..]);
            v.push((d - tx) % d);
            Ok(GroupElement(v))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut b_orders = sub.b_orders;
    b_orders.push(d);
    let target = AlternateModule::standard_symplectic(&b_orders)?;
    let isometry = Morphism::new(g.clone(), target.group().clone(), images)?;
    Ok(Classification { b_orders, isometry })
}

fn zero_map(source: &FinAbGroup, target: &FinAbGroup) -> Morphism {
    Morphism::new(
        source.clone(),
        target.clone(),
        vec![target.zero(); source.rank()],
    )
    .expect("zero map")
}

/// Merges per-prime maps `A -> StandardSymplectic(b_p)` into one map
/// `A -> StandardSymplectic(b)` with `b_k = prod_p b_{p,k}` after
/// left-padding each list with ones.
///
/// The `p` factor of position `k` sits inside `Z/b_k` as its `m`-multiples,
/// `m = b_k / b_{p,k}`; the dual generator is scaled by `m * (m^-1 mod b_{p,k})`
/// so the pairing stays `1/b_{p,k}`.
pub fn merge_standard(
    source: &FinAbGroup,
    pieces: Vec<(Vec<u64>, Morphism)>,
) -> Result<Classification> {
    let s = pieces.iter().map(|(b, _)| b.len()).max().unwrap_or(0);
    let mut b_orders = vec![1u64; s];
    for (b, _) in &pieces {
        for (k, &bk) in b.iter().enumerate() {
            b_orders[s - b.len() + k] *= bk;
        }
    }
    let target = AlternateModule::standard_symplectic(&b_orders)?;
    let tg = target.group();
    let mut total = zero_map(source, tg);
    for (b, f) in &pieces {
        let sp = b.len();
        let mut images = vec![tg.zero(); 2 * sp];
        for (k, &bk) in b.iter().enumerate() {
            let pos = s - sp + k;
            let m = b_orders[pos] / bk;
            let c = m * mod_inverse(m % bk, bk).expect("coprime cofactor") % b_orders[pos];
            images[k].0[pos] = m;
            images[sp + k].0[s + pos] = c;
        }
        let std_p = AlternateModule::standard_symplectic(b)?;
        let embed_p = Morphism::new(std_p.group().clone(), tg.clone(), images)?;
        total = total.sum(&embed_p.after(f)?)?;
    }
    Ok(Classification {
        b_orders,
        isometry: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ablattice::QZScalar;

    fn q(n: i128, d: u64) -> QZScalar {
        QZScalar::new(n, d)
    }

    fn check(m: &AlternateModule) -> Classification {
        let c = classify(m).unwrap();
        let std = c.standard();
        assert!(m.preserves_form(&c.isometry, &std));
        assert!(c.isometry.is_bijective().unwrap());
        let prod: u64 = c.b_orders.iter().product();
        assert_eq!(num_bigint::BigUint::from(prod * prod), m.cardinality());
        c
    }

    #[test]
    fn max_pair_examples() {
        let s = AlternateModule::standard_symplectic(&[4]).unwrap();
        let (x, y) = max_pairing_pair(&s).unwrap();
        assert_eq!(s.evaluate(&x, &y).unwrap(), q(1, 4));
        let s = AlternateModule::standard_symplectic(&[2, 4]).unwrap();
        let (x, y) = max_pairing_pair(&s).unwrap();
        assert_eq!((x.0, y.0), (vec![0, 1, 0, 0], vec![0, 0, 0, 1]));
        assert_eq!(max_pairing_pair(&AlternateModule::trivial()), Err(Error::TrivialModule));
        let t = AlternateModule::trivial_form(vec![2]).unwrap();
        assert_eq!(max_pairing_pair(&t), Err(Error::KernelNontrivial));
    }

    #[test]
    fn classify_examples() {
        let c = check(&AlternateModule::trivial());
        assert!(c.b_orders.is_empty());
        let m = AlternateModule::new(vec![2, 2], vec![vec![q(0, 1), q(1, 2)], vec![q(1, 2), q(0, 1)]])
            .unwrap();
        assert_eq!(check(&m).b_orders, vec![2]);
        for b in [vec![2], vec![2, 4], vec![6], vec![2, 6], vec![3, 9, 9]] {
            let s = AlternateModule::standard_symplectic(&b).unwrap();
            assert_eq!(check(&s).b_orders, b);
        }
        let s = AlternateModule::standard_symplectic(&[2, 3]).unwrap();
        assert_eq!(check(&s).b_orders, vec![6]);
        assert_eq!(
            classify(&AlternateModule::trivial_form(vec![2]).unwrap()),
            Err(Error::KernelNontrivial)
        );
    }

    #[test]
    fn non_normalized_pairing() {
        let m = AlternateModule::new(
            vec![9, 9],
            vec![vec![q(0, 1), q(4, 9)], vec![q(-4, 9), q(0, 1)]],
        )
        .unwrap();
        assert_eq!(check(&m).b_orders, vec![9]);
    }

    #[test]
    fn split_standard_block() {
        let m = AlternateModule::standard_symplectic(&[2, 4]).unwrap();
        let g = m.group();
        let b = Subgroup::generated(g, &[g.generator(1), g.generator(3)]).unwrap();
        let sp = split_symplectic_submodule(&m, &b).unwrap();
        assert_eq!(classify(&sp.outer).unwrap().b_orders, vec![2]);
        let target = AlternateModule::ortho_sum(&sp.inner, &sp.outer);
        assert!(m.preserves_form(&sp.isometry, &target));
        assert!(sp.isometry.is_bijective().unwrap());

        let triv = split_symplectic_submodule(&m, &Subgroup::trivial(g)).unwrap();
        assert!(triv.inner.group().is_trivial());
        assert_eq!(triv.outer.cardinality(), m.cardinality());

        let iso = Subgroup::generated(g, &[g.generator(0)]).unwrap();
        assert!(matches!(
            split_symplectic_submodule(&m, &iso),
            Err(Error::DegenerateSubmodule)
        ));
    }

    #[test]
    fn split_preserves_kernel() {
        // orders [4,4,8]: e0,e1 hyperbolic of order 4, e2 pairs with nothing.
        let m = AlternateModule::new(
            vec![4, 4, 8],
            vec![
                vec![q(0, 1), q(1, 4), q(0, 1)],
                vec![q(-1, 4), q(0, 1), q(0, 1)],
                vec![q(0, 1); 3],
            ],
        )
        .unwrap();
        let g = m.group();
        let b = Subgroup::generated(g, &[g.generator(0), g.generator(1)]).unwrap();
        let sp = split_symplectic_submodule(&m, &b).unwrap();
        assert_eq!(sp.outer.kernel().cardinality(), m.kernel().cardinality());
    }

    #[test]
    fn quotient_of_degenerate_module() {
        let m = AlternateModule::new(
            vec![2, 4, 8],
            vec![
                vec![q(0, 1), q(1, 2), q(1, 2)],
                vec![q(1, 2), q(0, 1), q(-1, 4)],
                vec![q(1, 2), q(1, 4), q(0, 1)],
            ],
        )
        .unwrap();
        let qm = m.quotient_by_kernel().quotient;
        let c = check(&qm);
        assert_eq!(c.b_orders.iter().product::<u64>(), 4);
        let (x, y) = max_pairing_pair(&qm).unwrap();
        assert_eq!(qm.evaluate(&x, &y).unwrap().order(), qm.group().exponent());
    }
}
