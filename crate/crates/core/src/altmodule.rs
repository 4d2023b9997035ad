//! Finite alternate modules `(A, phi)`: a group given by cyclic factors and a
//! Gram matrix with values in Q/Z.
//!
//! Elements are coordinate vectors on the chosen generators, so an isometry
//! is just a base change that carries one Gram matrix to the other. Every
//! subgroup computed here (kernel, orthogonal, Lagrangian) goes through a
//! congruence system solved by Smith normal form; nothing is enumerated.

use std::fmt;

use num_bigint::BigUint;

use crate::ablattice::{
    mod_inverse, p_part, prime_factors, quotient, solve_congruence_kernel, FinAbGroup,
    GroupElement, IntMatrix, Morphism, QZScalar, Subgroup,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternateModule {
    group: FinAbGroup,
    gram: Vec<Vec<QZScalar>>,
    exponent: u64,
    // gram scaled by the exponent, entries in [0, exponent)
    scaled: Vec<Vec<u64>>,
}

/// `A/K` with its projection and a section of generator lifts.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: AlternateModule,
    pub projection: Morphism,
    pub lifts: Vec<GroupElement>,
}

/// The `p`-primary part of a module.
#[derive(Clone, Debug)]
pub struct SylowPart {
    pub prime: u64,
    pub module: AlternateModule,
    /// `S_p -> A`
    pub inclusion: Morphism,
    /// `A -> S_p`, the CRT projection; `sum_p inclusion_p ∘ projection_p = id`.
    pub projection: Morphism,
}

impl AlternateModule {
    /// Validates the alternate, antisymmetry and order-compatibility invariants.
    pub fn new(orders: Vec<u64>, gram: Vec<Vec<QZScalar>>) -> Result<Self> {
        Self::from_group(FinAbGroup::new(orders)?, gram)
    }

    pub fn from_group(group: FinAbGroup, gram: Vec<Vec<QZScalar>>) -> Result<Self> {
        let r = group.rank();
        if gram.len() != r || gram.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch(format!(
                "gram must be {r}x{r} for {r} cyclic factors"
            )));
        }
        for (i, row) in gram.iter().enumerate() {
            if !row[i].is_zero() {
                return Err(Error::NotAlternate {
                    index: i,
                    value: row[i].to_string(),
                });
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                if gram[i][j] != -gram[j][i] {
                    return Err(Error::NotAntisymmetric {
                        i,
                        j,
                        a: gram[i][j].to_string(),
                        b: gram[j][i].to_string(),
                    });
                }
            }
        }
        let orders = group.orders();
        for i in 0..r {
            for j in 0..r {
                let v = gram[i][j];
                if !v.scale(orders[i]).is_zero() || !v.scale(orders[j]).is_zero() {
                    return Err(Error::IncompatibleOrder {
                        i,
                        j,
                        value: v.to_string(),
                        di: orders[i],
                        dj: orders[j],
                    });
                }
            }
        }
        let exponent = group.exponent();
        let scaled = gram
            .iter()
            .map(|row| row.iter().map(|q| q.numerator_over(exponent)).collect())
            .collect();
        Ok(AlternateModule {
            group,
            gram,
            exponent,
            scaled,
        })
    }

    /// The zero form on `Z/d_1 x ... x Z/d_r`.
    pub fn trivial_form(orders: Vec<u64>) -> Result<Self> {
        let r = orders.len();
        Self::new(orders, vec![vec![QZScalar::ZERO; r]; r])
    }

    /// The module on the trivial group.
    pub fn trivial() -> Self {
        Self::trivial_form(Vec::new()).expect("empty module")
    }

    /// `B x B*` for `B = Z/b_1 x ... x Z/b_s`, generators ordered
    /// `f_1..f_s, f_1*..f_s*` with `phi(f_i, f_i*) = 1/b_i`.
    pub fn standard_symplectic(b_orders: &[u64]) -> Result<Self> {
        let s = b_orders.len();
        let mut orders = b_orders.to_vec();
        orders.extend_from_slice(b_orders);
        let mut gram = vec![vec![QZScalar::ZERO; 2 * s]; 2 * s];
        for (i, &b) in b_orders.iter().enumerate() {
            if b < 2 {
                return Err(Error::InvalidOrder(b));
            }
            gram[i][s + i] = QZScalar::unit(b);
            gram[s + i][i] = -QZScalar::unit(b);
        }
        Self::new(orders, gram)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn orders(&self) -> &[u64] {
        self.group.orders()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn gram(&self) -> &[Vec<QZScalar>] {
        &self.gram
    }

    pub fn cardinality(&self) -> BigUint {
        self.group.cardinality()
    }

    /// `phi(e_i, e_j)`.
    pub fn pairing(&self, i: usize, j: usize) -> QZScalar {
        self.gram[i][j]
    }

    /// `phi(a, b) = sum_{i,j} a_i b_j gram[i][j]`.
    pub fn evaluate(&self, a: &GroupElement, b: &GroupElement) -> Result<QZScalar> {
        self.group.check(a)?;
        self.group.check(b)?;
        Ok(self.eval(a, b))
    }

    pub(crate) fn eval(&self, a: &GroupElement, b: &GroupElement) -> QZScalar {
        let e = self.exponent as u128;
        let mut acc: u128 = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let mut inner: u128 = 0;
            for (j, &bj) in b.0.iter().enumerate() {
                inner = (inner + bj as u128 * self.scaled[i][j] as u128) % e;
            }
            acc = (acc + ai as u128 % e * inner) % e;
        }
        QZScalar::new(acc as i128, self.exponent)
    }

    /// `{a : phi(a, s) = 0 for all s in elems}`.
    pub fn orthogonal_of_elements(&self, elems: &[GroupElement]) -> Result<Subgroup> {
        for s in elems {
            self.group.check(s)?;
        }
        let r = self.rank();
        let e = self.exponent;
        // Row k: coefficient on a_i is E * phi(e_i, s_k).
        let rows: Vec<Vec<u64>> = elems
            .iter()
            .map(|s| {
                (0..r)
                    .map(|i| {
                        let mut acc: u128 = 0;
                        for (j, &sj) in s.0.iter().enumerate() {
                            acc = (acc + sj as u128 * self.scaled[i][j] as u128) % e as u128;
                        }
                        acc as u64
                    })
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(&rows, r);
        solve_congruence_kernel(&m, &vec![e; elems.len()], self.orders())
    }

    /// `K_phi = A^perp`.
    pub fn kernel(&self) -> Subgroup {
        self.orthogonal_of_elements(&self.group.generators())
            .expect("generators are in range")
    }

    pub fn is_symplectic(&self) -> bool {
        self.kernel().is_trivial()
    }

    fn check_ambient(&self, s: &Subgroup) -> Result<()> {
        if s.ambient() != &self.group {
            return Err(Error::DimensionMismatch(
                "subgroup lives in a different ambient group".into(),
            ));
        }
        Ok(())
    }

    /// `S^perp`, from the canonical generators of `S`.
    pub fn orthogonal(&self, s: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(s)?;
        self.orthogonal_of_elements(s.gens())
    }

    /// `S ⊆ S^perp`, checked on generator pairs.
    pub fn is_isotropic(&self, s: &Subgroup) -> Result<bool> {
        self.check_ambient(s)?;
        let g = s.gens();
        Ok((0..g.len()).all(|i| (i + 1..g.len()).all(|j| self.eval(&g[i], &g[j]).is_zero())))
    }

    /// `S = S^perp`.
    pub fn is_lagrangian(&self, s: &Subgroup) -> Result<bool> {
        Ok(&self.orthogonal(s)? == s)
    }

    /// `n = sqrt(|A| |K|)`, the common order of all Lagrangians.
    pub fn lagrangian_cardinal(&self) -> Result<BigUint> {
        let sq = self.cardinality() * self.kernel().cardinality();
        let n = sq.sqrt();
        if &n * &n != sq {
            return Err(Error::Internal(format!("|A||K| = {sq} is not a perfect square")));
        }
        Ok(n)
    }

    /// A Lagrangian by greedy saturation from the kernel: adjoin the first
    /// canonical generator of `current^perp` outside `current` until
    /// `current = current^perp`.
    pub fn find_lagrangian(&self) -> Subgroup {
        let mut current = self.kernel();
        loop {
            let perp = self.orthogonal(&current).expect("same ambient");
            if perp == current {
                return current;
            }
            let g = perp
                .gens()
                .iter()
                .find(|g| !current.contains(g).expect("in range"))
                .expect("perp strictly contains current")
                .clone();
            current = current.adjoin(&g).expect("in range");
        }
    }

    /// `(A1 ⊕ A2, phi1 ⊕ phi2)`.
    pub fn ortho_sum(m1: &AlternateModule, m2: &AlternateModule) -> AlternateModule {
        let (r1, r2) = (m1.rank(), m2.rank());
        let mut gram = vec![vec![QZScalar::ZERO; r1 + r2]; r1 + r2];
        for i in 0..r1 {
            for j in 0..r1 {
                gram[i][j] = m1.gram[i][j];
            }
        }
        for i in 0..r2 {
            for j in 0..r2 {
                gram[r1 + i][r1 + j] = m2.gram[i][j];
            }
        }
        AlternateModule::from_group(m1.group.product(&m2.group), gram)
            .expect("orthogonal sum of valid modules is valid")
    }

    /// The form restricted to `S`, on its canonical generators, with the inclusion.
    pub fn induced_submodule(&self, s: &Subgroup) -> Result<(AlternateModule, Morphism)> {
        self.check_ambient(s)?;
        self.induced_on(s.gens())
    }

    /// Restriction to the subgroup generated by independent elements
    /// `gens`, whose orders become the cyclic factors.
    pub(crate) fn induced_on(&self, gens: &[GroupElement]) -> Result<(AlternateModule, Morphism)> {
        let orders: Vec<u64> = gens.iter().map(|g| self.group.order_of(g)).collect();
        let gram = gens
            .iter()
            .map(|a| gens.iter().map(|b| self.eval(a, b)).collect())
            .collect();
        let sub = AlternateModule::new(orders, gram)?;
        let inclusion = Morphism::new(sub.group.clone(), self.group.clone(), gens.to_vec())?;
        Ok((sub, inclusion))
    }

    /// `A/K_phi` in invariant-factor form; the induced form is symplectic.
    pub fn quotient_by_kernel(&self) -> QuotientResult {
        let q = quotient(&self.kernel());
        let gram = q
            .lifts
            .iter()
            .map(|a| q.lifts.iter().map(|b| self.eval(a, b)).collect())
            .collect();
        let module = AlternateModule::from_group(q.group, gram).expect("form descends to A/K");
        QuotientResult {
            quotient: module,
            projection: q.projection,
            lifts: q.lifts,
        }
    }

    /// Splits into mutually orthogonal primary components, one per prime
    /// dividing `|A|`, in increasing prime order.
    pub fn sylow_decompose(&self) -> Vec<SylowPart> {
        let primes = prime_factors(self.group.exponent());
        let orders = self.orders();
        primes
            .into_iter()
            .map(|p| {
                let mut gens = Vec::new();
                let mut proj_coord = Vec::new();
                for (i, &d) in orders.iter().enumerate() {
                    let k = p_part(d, p);
                    if k > 1 {
                        let m = d / k;
                        gens.push(self.group.scale(&self.group.generator(i), m));
                        proj_coord.push(Some((gens.len() - 1, mod_inverse(m % k, k).unwrap())));
                    } else {
                        proj_coord.push(None);
                    }
                }
                let (module, inclusion) = self.induced_on(&gens).expect("valid Sylow part");
                let images = proj_coord
                    .iter()
                    .map(|pc| {
                        let mut v = vec![0; gens.len()];
                        if let Some((pos, c)) = *pc {
                            v[pos] = c;
                        }
                        GroupElement(v)
                    })
                    .collect();
                let projection = Morphism::new(self.group.clone(), module.group.clone(), images)
                    .expect("CRT projection is well defined");
                SylowPart {
                    prime: p,
                    module,
                    inclusion,
                    projection,
                }
            })
            .collect()
    }

    /// Whether the underlying group is a `p`-group (the trivial group is one).
    pub fn is_p_group(&self, p: u64) -> bool {
        self.orders().iter().all(|&d| p_part(d, p) == d)
    }

    /// The prime `p` if `A` is a nontrivial `p`-group.
    pub fn primary_prime(&self) -> Option<u64> {
        match prime_factors(self.group.exponent()).as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// Generator pairs `(i, j)` with `phi'(f e_i, f e_j) != phi(e_i, e_j)`
    /// for `f: A -> A'`.
    pub fn form_violations(&self, f: &Morphism, target: &AlternateModule) -> Vec<(usize, usize)> {
        let imgs = f.images();
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if target.eval(&imgs[i], &imgs[j]) != self.gram[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `f` pulls `target`'s form back to this one.
    pub fn preserves_form(&self, f: &Morphism, target: &AlternateModule) -> bool {
        f.source() == &self.group
            && f.target() == &target.group
            && self.form_violations(f, target).is_empty()
    }

    /// The module carried by a group isomorphism `f: A -> G`: the form
    /// `phi(f^-1 x, f^-1 y)` on `G`'s generators.
    pub fn transport(&self, f: &Morphism) -> Result<AlternateModule> {
        let inv = f.inverse()?;
        let imgs = inv.images();
        let gram = imgs
            .iter()
            .map(|a| imgs.iter().map(|b| self.eval(a, b)).collect())
            .collect();
        AlternateModule::from_group(f.target().clone(), gram)
    }

    /// Same module with generators in invariant-factor order, plus the
    /// isometry onto it.
    pub fn rebase(&self) -> (AlternateModule, Morphism) {
        if self.orders().windows(2).all(|w| w[1] % w[0] == 0) {
            return (self.clone(), Morphism::identity(&self.group));
        }
        let q = quotient(&Subgroup::trivial(&self.group));
        let gram = q
            .lifts
            .iter()
            .map(|a| q.lifts.iter().map(|b| self.eval(a, b)).collect())
            .collect();
        let m = AlternateModule::from_group(q.group, gram).expect("base change of a valid module");
        (m, q.projection)
    }
}

impl fmt::Display for AlternateModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.group)?;
        for row in &self.gram {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
