//! Embedding an alternate module into a standard symplectic module `B x B*`
//! with `|B| = n = sqrt(|A| |K|)`.
//!
//! For a `p`-group the module is grown one extension step at a time. Each
//! step strictly enlarges the group at constant `n`, so the kernel strictly
//! shrinks and the loop ends at a symplectic module, which is then classified.
//! Primary parts are embedded separately and merged.

use std::fmt;

use num_bigint::BigUint;

use crate::ablattice::{FinAbGroup, GroupElement, Morphism, QZScalar, Subgroup};
use crate::altmodule::AlternateModule;
use crate::error::{Error, Result};
use crate::symplectic::{classify, merge_standard, split_symplectic_submodule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Case1AdjoinZp,
    Case2SplitSymplectic,
    Case2StretchGenerator,
}

impl StepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StepKind::Case1AdjoinZp => "case1_adjoin_zp",
            StepKind::Case2SplitSymplectic => "case2_split_symplectic",
            StepKind::Case2StretchGenerator => "case2_stretch_generator",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Step-specific data. Elements named `k0`, `e`, `ei`, `a0` and
/// `kernel_witness` are in the step's input coordinates; `gamma` and `e_hat`
/// in its output coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepWitness {
    /// `k0 ∈ K \ pA` with `p ∤ k0[i0]`; `phi(gamma, e_i0) = 1/p`.
    AdjoinZp {
        k0: GroupElement,
        i0: usize,
        gamma: GroupElement,
    },
    /// The hyperbolic pair split off, and the step applied to its complement.
    SplitSymplectic {
        e: GroupElement,
        ei: GroupElement,
        inner: Box<ExtensionStep>,
    },
    /// `p * e_hat = e` and `roots[i] = phi(e_hat, g_i)` over the output
    /// generators `g_i`, so `p * roots[i]` is the old pairing with `e`.
    Stretch {
        e: GroupElement,
        e_hat: GroupElement,
        roots: Vec<QZScalar>,
        constant: Option<KernelWitness>,
    },
}

/// `element = p^k a0` lies in `K` but its image is outside `K_hat`, which
/// forces `[K : K_hat] = p` and so a constant Lagrangian cardinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    pub a0: GroupElement,
    pub element: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionStep {
    pub prime: u64,
    pub input: AlternateModule,
    pub output: AlternateModule,
    pub inclusion: Morphism,
    pub witness: StepWitness,
}

impl ExtensionStep {
    pub fn kind(&self) -> StepKind {
        match self.witness {
            StepWitness::AdjoinZp { .. } => StepKind::Case1AdjoinZp,
            StepWitness::SplitSymplectic { .. } => StepKind::Case2SplitSymplectic,
            StepWitness::Stretch { .. } => StepKind::Case2StretchGenerator,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub source: AlternateModule,
    pub b_orders: Vec<u64>,
    /// `source -> StandardSymplectic(b_orders)`
    pub embedding: Morphism,
    pub trace: Vec<ExtensionStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InvalidBOrder { index: usize, value: u64 },
    Shape(String),
    NotWellDefined { generator: usize },
    NotInjective { kernel_order: BigUint },
    FormNotPreserved { i: usize, j: usize, expected: QZScalar, found: QZScalar },
    WrongCardinal { product: BigUint, expected: BigUint },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidBOrder { index, value } => {
                write!(f, "b_orders[{index}] = {value} is not a valid cyclic order")
            }
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::NotWellDefined { generator } => {
                write!(f, "well-definedness: image of generator {generator} has too large an order")
            }
            Violation::NotInjective { kernel_order } => {
                write!(f, "injectivity: kernel has order {kernel_order}")
            }
            Violation::FormNotPreserved { i, j, expected, found } => write!(
                f,
                "form preservation: phi(e{i}, e{j}) = {expected} but the images pair to {found}"
            ),
            Violation::WrongCardinal { product, expected } => {
                write!(f, "cardinality: prod b_orders = {product}, expected n = {expected}")
            }
        }
    }
}

/// Outcome of certificate verification; empty means accepted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn in_p_multiples(x: &GroupElement, p: u64) -> bool {
    x.0.iter().all(|c| c % p == 0)
}

fn require_p_group(m: &AlternateModule, p: u64) -> Result<()> {
    if m.is_p_group(p) {
        Ok(())
    } else {
        Err(Error::NotPrimary(p))
    }
}

fn lagrangian_cardinal(m: &AlternateModule) -> BigUint {
    m.lagrangian_cardinal().expect("|A||K| is a square")
}

/// Case 1: `K ⊄ pA`. Adjoins `Z/p = <gamma>` in front of `A`, with
/// `phi(gamma, e_i0) = 1/p` and `gamma` orthogonal to the other generators.
pub fn extend_case1(m: &AlternateModule, p: u64) -> Result<ExtensionStep> {
    require_p_group(m, p)?;
    let k0 = m
        .kernel()
        .gens()
        .iter()
        .find(|k| !in_p_multiples(k, p))
        .ok_or(Error::KernelInPA)?
        .clone();
    let i0 = k0.0.iter().position(|c| c % p != 0).expect("k0 is not in pA");

    let r = m.rank();
    let mut orders = vec![p];
    orders.extend_from_slice(m.orders());
    let mut gram = vec![vec![QZScalar::ZERO; r + 1]; r + 1];
    for i in 0..r {
        for j in 0..r {
            gram[i + 1][j + 1] = m.pairing(i, j);
        }
    }
    gram[0][i0 + 1] = QZScalar::unit(p);
    gram[i0 + 1][0] = -QZScalar::unit(p);
    let output = AlternateModule::new(orders, gram)?;
    let images = (1..=r).map(|i| output.group().generator(i)).collect();
    let inclusion = Morphism::new(m.group().clone(), output.group().clone(), images)?;
    let gamma = output.group().generator(0);
    Ok(ExtensionStep {
        prime: p,
        input: m.clone(),
        output,
        inclusion,
        witness: StepWitness::AdjoinZp { k0, i0, gamma },
    })
}

/// Replaces generator `e = e_index` by `e_hat` of `p` times its order, with
/// `phi(e_hat, e_i) = a/(p m)` for `phi(e, e_i) = a/m`. Requires every other
/// pairing `phi(e, e_i)` to have order strictly below `order(e_i)`.
///
/// The step carries no constant-Lagrangian witness; `fundamental_step`
/// attaches one when it applies.
pub fn extend_stretch(m: &AlternateModule, p: u64, e_index: usize) -> Result<ExtensionStep> {
    require_p_group(m, p)?;
    let r = m.rank();
    if e_index >= r {
        return Err(Error::DimensionMismatch(format!(
            "generator {e_index} of a rank {r} module"
        )));
    }
    let orders = m.orders();
    for i in (0..r).filter(|&i| i != e_index) {
        if m.pairing(e_index, i).order() >= orders[i] {
            return Err(Error::StretchPrecondition {
                index: i,
                order: orders[i],
            });
        }
    }
    let roots: Vec<QZScalar> = (0..r)
        .map(|i| m.pairing(e_index, i).canonical_root(p))
        .collect();
    let mut new_orders = orders.to_vec();
    new_orders[e_index] *= p;
    let mut gram = m.gram().to_vec();
    for i in 0..r {
        gram[e_index][i] = roots[i];
        gram[i][e_index] = -roots[i];
    }
    let output = AlternateModule::new(new_orders, gram)?;
    let og = output.group();
    let images = (0..r)
        .map(|i| {
            if i == e_index {
                og.scale(&og.generator(i), p)
            } else {
                og.generator(i)
            }
        })
        .collect();
    let inclusion = Morphism::new(m.group().clone(), og.clone(), images)?;
    let e_hat = og.generator(e_index);
    Ok(ExtensionStep {
        prime: p,
        input: m.clone(),
        output,
        inclusion,
        witness: StepWitness::Stretch {
            e: m.group().generator(e_index),
            e_hat,
            roots,
            constant: None,
        },
    })
}

/// Finds `a0` with `p^k a0 ∈ K` pairing nontrivially with `e_hat`, for a
/// module in divisibility order with `K ⊆ pA`, from the classification of
/// `A/K` and the coordinates of the image of `e_0` there.
fn case2_kernel_witness(m: &AlternateModule, p: u64) -> Result<KernelWitness> {
    let qr = m.quotient_by_kernel();
    let cls = classify(&qr.quotient)?;
    let s = cls.b_orders.len();
    let v = cls.isometry.apply(&qr.projection.apply(&m.group().generator(0))?)?;
    let t = v
        .0
        .iter()
        .position(|c| c % p != 0)
        .ok_or_else(|| Error::StepAudit("image of e lies in p(A/K)".into()))?;
    // A nonzero f*-coordinate pairs against f and vice versa.
    let (i0, partner) = if t >= s { (t - s, t - s) } else { (t, s + t) };
    let std = cls.standard();
    let g = std.group().generator(partner);
    let gq = cls.isometry.inverse()?.apply(&g)?;
    let a0 = m.group().combine(&gq.0, &qr.lifts);
    let element = m.group().scale(&a0, cls.b_orders[i0]);
    Ok(KernelWitness { a0, element })
}

/// One extension with constant Lagrangians for a non-symplectic `p`-group
/// module: case 1 when `K ⊄ pA`; otherwise, in divisibility order with
/// `e = e_0`, split off `<e, e_i>` when some `phi(e, e_i)` has order `d_i`,
/// else stretch `e`.
pub fn fundamental_step(m: &AlternateModule, p: u64) -> Result<ExtensionStep> {
    require_p_group(m, p)?;
    let kernel = m.kernel();
    if kernel.is_trivial() {
        return Err(Error::AlreadySymplectic);
    }
    let step = if kernel.gens().iter().any(|k| !in_p_multiples(k, p)) {
        extend_case1(m, p)?
    } else {
        let (based, to_based) = m.rebase();
        let from_based = to_based.inverse()?;
        let inner = case2_step(&based, p)?;
        pull_back(inner, m, &to_based, &from_based)?
    };
    audit_step(&step)?;
    Ok(step)
}

fn case2_step(m: &AlternateModule, p: u64) -> Result<ExtensionStep> {
    let g = m.group();
    let orders = m.orders();
    let hyperbolic = (1..m.rank()).find(|&i| m.pairing(0, i).order() == orders[i]);
    if let Some(i) = hyperbolic {
        let (e, ei) = (g.generator(0), g.generator(i));
        let b = Subgroup::generated(g, &[e.clone(), ei.clone()])?;
        let split = split_symplectic_submodule(m, &b)?;
        let sub = fundamental_step(&split.outer, p)?;
        let output = AlternateModule::ortho_sum(&split.inner, &sub.output);
        let grow = Morphism::identity(split.inner.group()).direct_sum(&sub.inclusion);
        let inclusion = grow.after(&split.isometry)?;
        return Ok(ExtensionStep {
            prime: p,
            input: m.clone(),
            output,
            inclusion,
            witness: StepWitness::SplitSymplectic {
                e,
                ei,
                inner: Box::new(sub),
            },
        });
    }
    let witness = case2_kernel_witness(m, p)?;
    let mut step = extend_stretch(m, p, 0)?;
    if let StepWitness::Stretch { constant, .. } = &mut step.witness {
        *constant = Some(witness);
    }
    Ok(step)
}

/// Re-expresses a step built on a rebased copy of `m` as a step on `m`.
fn pull_back(
    step: ExtensionStep,
    m: &AlternateModule,
    to_based: &Morphism,
    from_based: &Morphism,
) -> Result<ExtensionStep> {
    let back = |x: &GroupElement| from_based.apply(x);
    let witness = match step.witness {
        StepWitness::AdjoinZp { k0, i0, gamma } => StepWitness::AdjoinZp {
            k0: back(&k0)?,
            i0,
            gamma,
        },
        StepWitness::SplitSymplectic { e, ei, inner } => StepWitness::SplitSymplectic {
            e: back(&e)?,
            ei: back(&ei)?,
            inner,
        },
        StepWitness::Stretch {
            e,
            e_hat,
            roots,
            constant,
        } => StepWitness::Stretch {
            e: back(&e)?,
            e_hat,
            roots,
            constant: constant
                .map(|w| {
                    Ok::<_, Error>(KernelWitness {
                        a0: back(&w.a0)?,
                        element: back(&w.element)?,
                    })
                })
                .transpose()?,
        },
    };
    Ok(ExtensionStep {
        prime: step.prime,
        input: m.clone(),
        output: step.output,
        inclusion: step.inclusion.after(to_based)?,
        witness,
    })
}

fn audit(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::StepAudit(what.to_string()))
    }
}

/// Recomputes a step's invariants from scratch: an injective form-preserving
/// inclusion into a strictly larger module, and, where the step claims it,
/// equal Lagrangian cardinals backed by an element of `K \ K_hat` with
/// `[K : K_hat] = p`.
pub fn audit_step(step: &ExtensionStep) -> Result<()> {
    let (a, ahat, iota, p) = (&step.input, &step.output, &step.inclusion, step.prime);
    audit(
        iota.source() == a.group() && iota.target() == ahat.group(),
        "inclusion has the wrong domain",
    )?;
    audit(iota.is_injective()?, "inclusion is not injective")?;
    audit(a.preserves_form(iota, ahat), "inclusion does not preserve the form")?;
    audit(ahat.cardinality() > a.cardinality(), "output is not larger than input")?;

    let kernel_element = match &step.witness {
        StepWitness::AdjoinZp { k0, i0, gamma } => {
            audit(k0.0[*i0] % p != 0, "k0[i0] is divisible by p")?;
            audit(
                !ahat.evaluate(gamma, &iota.apply(k0)?)?.is_zero(),
                "gamma is orthogonal to k0",
            )?;
            Some(k0.clone())
        }
        StepWitness::Stretch {
            e,
            e_hat,
            roots,
            constant,
        } => {
            audit(
                ahat.group().scale(e_hat, p) == iota.apply(e)?,
                "p * e_hat differs from the image of e",
            )?;
            let image_e = iota.apply(e)?;
            let pairs_ok = roots.len() == ahat.rank()
                && ahat.group().generators().iter().zip(roots).all(|(g, l)| {
                    ahat.eval(e_hat, g) == *l && l.scale(p) == ahat.eval(&image_e, g)
                });
            audit(pairs_ok, "roots do not match the stretched pairings")?;
            constant.as_ref().map(|w| w.element.clone())
        }
        StepWitness::SplitSymplectic { inner, .. } => {
            audit_step(inner)?;
            None
        }
    };

    let constant = !matches!(
        step.witness,
        StepWitness::Stretch { constant: None, .. }
    );
    if constant {
        audit(
            lagrangian_cardinal(a) == lagrangian_cardinal(ahat),
            "Lagrangian cardinal changed",
        )?;
    }
    if let Some(k) = kernel_element {
        audit(
            ahat.cardinality() == a.cardinality() * BigUint::from(p),
            "output is not p times larger",
        )?;
        let k_in = a.kernel();
        let k_out = ahat.kernel();
        audit(k_in.contains(&k)?, "witness is not in K")?;
        audit(!k_out.contains(&iota.apply(&k)?)?, "witness survives in K_hat")?;
        let imgs: Vec<GroupElement> = k_in
            .gens()
            .iter()
            .map(|x| iota.apply(x))
            .collect::<Result<_>>()?;
        let image = Subgroup::generated(ahat.group(), &imgs)?;
        audit(k_out.is_subgroup_of(&image), "K_hat is not inside K")?;
        audit(
            k_in.cardinality() == k_out.cardinality() * BigUint::from(p),
            "[K : K_hat] differs from p",
        )?;
    }
    Ok(())
}

/// Embeds a `p`-group module by iterating `fundamental_step` until the
/// kernel vanishes, then classifying.
pub fn embed_p(m: &AlternateModule, p: u64) -> Result<EmbeddingCertificate> {
    require_p_group(m, p)?;
    let mut current = m.clone();
    let mut inclusion = Morphism::identity(m.group());
    let mut trace = Vec::new();
    let mut kernel_order = current.kernel().cardinality();
    while kernel_order > BigUint::from(1u32) {
        let step = fundamental_step(&current, p)?;
        inclusion = step.inclusion.after(&inclusion)?;
        current = step.output.clone();
        trace.push(step);
        let next = current.kernel().cardinality();
        if next >= kernel_order {
            return Err(Error::Internal("kernel did not shrink".into()));
        }
        kernel_order = next;
    }
    let cls = classify(&current)?;
    Ok(EmbeddingCertificate {
        source: m.clone(),
        b_orders: cls.b_orders,
        embedding: cls.isometry.after(&inclusion)?,
        trace,
    })
}

/// Embeds any module into `B x B*` with `|B| = n`, one primary part at a
/// time. The certificate is verified before it is returned.
pub fn embed(m: &AlternateModule) -> Result<EmbeddingCertificate> {
    let mut pieces = Vec::new();
    let mut trace = Vec::new();
    for part in m.sylow_decompose() {
        let cert = embed_p(&part.module, part.prime)?;
        pieces.push((cert.b_orders, cert.embedding.after(&part.projection)?));
        trace.extend(cert.trace);
    }
    let merged = merge_standard(m.group(), pieces)?;
    let cert = EmbeddingCertificate {
        source: m.clone(),
        b_orders: merged.b_orders,
        embedding: merged.isometry,
        trace,
    };
    let verdict = verify_certificate(&cert);
    if !verdict.is_ok() {
        let msgs: Vec<String> = verdict.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Internal(format!(
            "constructed certificate fails verification: {}",
            msgs.join("; ")
        )));
    }
    Ok(cert)
}

/// Checks a certificate without consulting its trace.
pub fn verify_certificate(c: &EmbeddingCertificate) -> Verdict {
    verify_map(&c.source, &c.b_orders, c.embedding.images())
}

/// Checks that `images` (one per source generator, in the `2s` coordinates
/// of `B x B*`) define an injective form-preserving homomorphism with
/// `prod b_orders = n`.
pub fn verify_map(source: &AlternateModule, b_orders: &[u64], images: &[GroupElement]) -> Verdict {
    let mut violations = Vec::new();
    for (index, &value) in b_orders.iter().enumerate() {
        if value < 2 {
            violations.push(Violation::InvalidBOrder { index, value });
        }
    }
    if !violations.is_empty() {
        return Verdict { violations };
    }
    let target = AlternateModule::standard_symplectic(b_orders).expect("orders checked");
    let f = match Morphism::new_unchecked(source.group().clone(), target.group().clone(), images.to_vec()) {
        Ok(f) => f,
        Err(e) => {
            violations.push(Violation::Shape(e.to_string()));
            return Verdict { violations };
        }
    };
    let ill = f.ill_defined_generators();
    for &generator in &ill {
        violations.push(Violation::NotWellDefined { generator });
    }
    if ill.is_empty() {
        let kernel = f.kernel().expect("well-defined map has a kernel");
        if !kernel.is_trivial() {
            violations.push(Violation::NotInjective {
                kernel_order: kernel.cardinality(),
            });
        }
    }
    for (i, j) in source.form_violations(&f, &target) {
        violations.push(Violation::FormNotPreserved {
            i,
            j,
            expected: source.pairing(i, j),
            found: target.eval(&images[i], &images[j]),
        });
    }
    let product: BigUint = b_orders.iter().map(|&b| BigUint::from(b)).product();
    let expected = lagrangian_cardinal(source);
    if product != expected {
        violations.push(Violation::WrongCardinal { product, expected });
    }
    Verdict { violations }
}

/// `StandardSymplectic(b_orders)`'s group, for building certificates by hand.
pub fn standard_group(b_orders: &[u64]) -> Result<FinAbGroup> {
    Ok(AlternateModule::standard_symplectic(b_orders)?.group().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: u64) -> QZScalar {
        QZScalar::new(n, d)
    }

    fn e(v: &[u64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    fn degenerate_module() -> AlternateModule {
        AlternateModule::new(
            vec![2, 4, 8],
            vec![
                vec![q(0, 1), q(1, 2), q(1, 2)],
                vec![q(1, 2), q(0, 1), q(-1, 4)],
                vec![q(1, 2), q(1, 4), q(0, 1)],
            ],
        )
        .unwrap()
    }

    fn pair(orders: Vec<u64>, pairs: &[(usize, usize, QZScalar)]) -> AlternateModule {
        let r = orders.len();
        let mut gram = vec![vec![QZScalar::ZERO; r]; r];
        for &(i, j, v) in pairs {
            gram[i][j] = v;
            gram[j][i] = -v;
        }
        AlternateModule::new(orders, gram).unwrap()
    }

    #[test]
    fn case1_examples() {
        let step = extend_case1(&degenerate_module(), 2).unwrap();
        audit_step(&step).unwrap();
        assert!(matches!(step.witness, StepWitness::AdjoinZp { i0: 0, .. }));
        assert_eq!(step.output.cardinality(), BigUint::from(128u32));
        assert_eq!(step.output.kernel().cardinality(), BigUint::from(2u32));

        let z3 = AlternateModule::trivial_form(vec![3]).unwrap();
        let step = extend_case1(&z3, 3).unwrap();
        assert!(step.output.is_symplectic());

        let t = AlternateModule::trivial_form(vec![2, 4]).unwrap();
        let step = extend_case1(&t, 2).unwrap();
        audit_step(&step).unwrap();
        assert!(matches!(step.witness, StepWitness::AdjoinZp { i0: 0, .. }));
        assert_eq!(step.output.kernel().cardinality(), BigUint::from(4u32));
        assert_eq!(step.output.cardinality(), BigUint::from(16u32));

        let s = pair(vec![2, 4], &[(0, 1, q(1, 2))]);
        assert_eq!(extend_case1(&s, 2).unwrap_err(), Error::KernelInPA);
    }

    #[test]
    fn stretch_examples() {
        let m = pair(vec![2, 4], &[(0, 1, q(1, 2))]);
        let step = extend_stretch(&m, 2, 0).unwrap();
        assert_eq!(step.output.orders(), &[4, 4]);
        assert_eq!(step.output.pairing(0, 1), q(1, 4));
        assert!(m.preserves_form(&step.inclusion, &step.output));

        let z = AlternateModule::trivial_form(vec![3]).unwrap();
        let step = extend_stretch(&z, 3, 0).unwrap();
        assert_eq!(step.output.orders(), &[9]);
        assert!(z.preserves_form(&step.inclusion, &step.output));

        let m = pair(vec![4, 8], &[(0, 1, q(1, 4))]);
        let step = extend_stretch(&m, 2, 0).unwrap();
        assert_eq!(step.output.pairing(0, 1), q(1, 8));
        audit_step(&step).unwrap();

        let full = pair(vec![2, 2], &[(0, 1, q(1, 2))]);
        assert!(matches!(
            extend_stretch(&full, 2, 0),
            Err(Error::StretchPrecondition { index: 1, .. })
        ));
    }

    #[test]
    fn dispatch() {
        let step = fundamental_step(&degenerate_module(), 2).unwrap();
        assert_eq!(step.kind(), StepKind::Case1AdjoinZp);
        assert_eq!(step.output.cardinality(), BigUint::from(128u32));

        let mixed = AlternateModule::ortho_sum(
            &AlternateModule::standard_symplectic(&[2]).unwrap(),
            &AlternateModule::trivial_form(vec![4]).unwrap(),
        );
        assert_eq!(fundamental_step(&mixed, 2).unwrap().kind(), StepKind::Case1AdjoinZp);

        // K = <2 e1> ⊆ 2A and phi(e0, e1) has order 2 < 4: stretch e0.
        let m = pair(vec![2, 4], &[(0, 1, q(1, 2))]);
        let step = fundamental_step(&m, 2).unwrap();
        assert_eq!(step.kind(), StepKind::Case2StretchGenerator);
        assert!(step.output.is_symplectic());
        match &step.witness {
            StepWitness::Stretch { constant: Some(w), .. } => {
                assert!(m.kernel().contains(&w.element).unwrap());
            }
            other => panic!("unexpected witness {other:?}"),
        }

        // Hyperbolic <e0, e1> of order 2 next to a degenerate Z/4 x Z/4.
        let m = pair(vec![2, 2, 4, 4], &[(0, 1, q(1, 2)), (2, 3, q(1, 2))]);
        let step = fundamental_step(&m, 2).unwrap();
        assert_eq!(step.kind(), StepKind::Case2SplitSymplectic);
        match &step.witness {
            StepWitness::SplitSymplectic { inner, .. } => {
                assert_eq!(inner.kind(), StepKind::Case2StretchGenerator)
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let s = AlternateModule::standard_symplectic(&[2]).unwrap();
        assert_eq!(fundamental_step(&s, 2).unwrap_err(), Error::AlreadySymplectic);
    }

    #[test]
    fn unsorted_orders_are_rebased() {
        let m = pair(vec![4, 2], &[(0, 1, q(1, 2))]);
        let step = fundamental_step(&m, 2).unwrap();
        assert_eq!(step.kind(), StepKind::Case2StretchGenerator);
        assert_eq!(step.input, m);
    }

    #[test]
    fn embed_examples() {
        let c = embed(&AlternateModule::trivial()).unwrap();
        assert!(c.b_orders.is_empty());
        assert!(c.trace.is_empty());

        let c = embed(&AlternateModule::trivial_form(vec![6]).unwrap()).unwrap();
        assert_eq!(c.b_orders, vec![6]);

        let c = embed(&degenerate_module()).unwrap();
        assert_eq!(c.b_orders.iter().product::<u64>(), 16);
        assert!(verify_certificate(&c).is_ok());

        let c = embed_p(&AlternateModule::trivial_form(vec![2, 4]).unwrap(), 2).unwrap();
        assert_eq!(c.b_orders.iter().product::<u64>(), 8);

        let s = AlternateModule::standard_symplectic(&[3, 9]).unwrap();
        let c = embed_p(&s, 3).unwrap();
        assert!(c.trace.is_empty());
        assert_eq!(c.b_orders, vec![3, 9]);

        assert_eq!(embed_p(&s, 2).unwrap_err(), Error::NotPrimary(2));
    }

    #[test]
    fn hand_certificates() {
        let t = AlternateModule::trivial_form(vec![2, 4]).unwrap();
        let stretched = verify_map(&t, &[8], &[e(&[4, 0]), e(&[0, 2])]);
        assert!(stretched.is_ok(), "{stretched:?}");
        let ident = verify_map(&t, &[2, 4], &[e(&[1, 0, 0, 0]), e(&[0, 1, 0, 0])]);
        assert!(ident.is_ok(), "{ident:?}");

        let bad = verify_map(&t, &[8], &[e(&[2, 0]), e(&[0, 2])]);
        assert!(bad.violations.contains(&Violation::NotWellDefined { generator: 0 }));

        let small = verify_map(&t, &[4], &[e(&[2, 0]), e(&[0, 1])]);
        assert!(small
            .violations
            .iter()
            .any(|v| matches!(v, Violation::WrongCardinal { .. })));
        let shape = verify_map(&t, &[8], &[e(&[4, 0])]);
        assert!(matches!(shape.violations[0], Violation::Shape(_)));
        let b1 = verify_map(&t, &[1, 8], &[e(&[0, 4, 0, 0]), e(&[0, 0, 0, 2])]);
        assert!(matches!(b1.violations[0], Violation::InvalidBOrder { index: 0, value: 1 }));
    }

    #[test]
    fn form_violation_is_reported() {
        let s = AlternateModule::standard_symplectic(&[2]).unwrap();
        let swapped = verify_map(&s, &[2], &[e(&[0, 1]), e(&[0, 1])]);
        assert!(swapped
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FormNotPreserved { .. })));
        assert!(swapped
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NotInjective { .. })));
    }
}
