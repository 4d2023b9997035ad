//! Brute-force ground truth for small modules.
//!
//! Everything here works on explicit element tables: elements are indexed in
//! mixed radix, subgroups are bitsets grown by closure, and the form is
//! summed entry by entry from the Gram matrix. None of it goes through the
//! lattice code, so agreement with `altmodule` is evidence rather than
//! tautology.

use std::collections::{HashSet, VecDeque};

use crate::ablattice::{FinAbGroup, GroupElement, QZScalar, Subgroup};
use crate::altmodule::AlternateModule;
use crate::error::{Error, Result};

/// No oracle routine runs above this many elements, whatever the bound.
pub const HARD_LIMIT: u64 = 4096;
pub const DEFAULT_CENSUS_BOUND: u64 = 512;
pub const DEFAULT_ISOMETRY_BOUND: u64 = 256;

fn check_size(g: &FinAbGroup, bound: u64) -> Result<usize> {
    let size = g.cardinality();
    let limit = bound.min(HARD_LIMIT);
    match g.small_cardinality() {
        Some(n) if n <= limit => Ok(n as usize),
        _ => Err(Error::BoundExceeded {
            size: size.to_string(),
            bound: limit,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Members(Vec<u64>);

impl Members {
    fn empty(n: usize) -> Self {
        Members(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..n).filter(move |&i| self.has(i))
    }
}

/// Element table of a module: coordinates, index arithmetic and pairing.
struct Table<'a> {
    module: &'a AlternateModule,
    elems: Vec<GroupElement>,
    strides: Vec<usize>,
}

impl<'a> Table<'a> {
    fn new(module: &'a AlternateModule, n: usize) -> Self {
        let orders = module.orders();
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        let elems = (0..n)
            .map(|mut idx| {
                GroupElement(
                    strides
                        .iter()
                        .map(|&s| {
                            let c = idx / s;
                            idx %= s;
                            c as u64
                        })
                        .collect(),
                )
            })
            .collect();
        Table {
            module,
            elems,
            strides,
        }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (&self.elems[a].0, &self.elems[b].0);
        let orders = self.module.orders();
        (0..orders.len())
            .map(|i| ((x[i] + y[i]) % orders[i]) as usize * self.strides[i])
            .sum()
    }

    fn pair(&self, a: usize, b: usize) -> QZScalar {
        let (x, y) = (&self.elems[a].0, &self.elems[b].0);
        let gram = self.module.gram();
        let mut acc = QZScalar::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = acc + gram[i][j].scale(xi * yj);
                }
            }
        }
        acc
    }

    fn index(&self, x: &GroupElement) -> usize {
        x.0.iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    /// `<S, g>` as the union of cosets `S + k g`.
    fn extend(&self, s: &Members, g: usize) -> Members {
        let mut out = s.clone();
        let base: Vec<usize> = s.iter(self.len()).collect();
        let mut shift = g;
        while !s.has(shift) {
            for &x in &base {
                out.insert(self.add(x, shift));
            }
            shift = self.add(shift, g);
        }
        out
    }

    fn trivial(&self) -> Members {
        let mut m = Members::empty(self.len());
        m.insert(0);
        m
    }

    fn order(&self, g: usize) -> u64 {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.add(x, g);
            k += 1;
        }
        k
    }
}

/// One subgroup found by the census, as an element set plus the generators
/// it was reached with.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    members: Members,
    pub generators: Vec<GroupElement>,
    pub isotropic: bool,
    pub maximal_isotropic: bool,
    ambient: FinAbGroup,
}

impl CensusEntry {
    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let n = self.members.0.len() * 64;
        self.members
            .iter(n)
            .map(|i| self.ambient.element_at(i))
            .collect()
    }

    /// The same subgroup in canonical form.
    pub fn subgroup(&self) -> Subgroup {
        Subgroup::generated(&self.ambient, &self.generators).expect("generators in range")
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupCensus {
    pub ambient: AlternateModule,
    /// Every subgroup exactly once, sorted by order then membership.
    pub subgroups: Vec<CensusEntry>,
}

impl SubgroupCensus {
    pub fn maximal_isotropic(&self) -> impl Iterator<Item = &CensusEntry> {
        self.subgroups.iter().filter(|e| e.maximal_isotropic)
    }

    /// Finds the census entry with exactly the elements of `s`.
    pub fn find(&self, s: &Subgroup) -> Option<&CensusEntry> {
        let n = self.ambient.group().small_cardinality()? as usize;
        let mut members = Members::empty(n);
        for x in s.elements() {
            members.insert(self.ambient.group().index_of(&x));
        }
        self.subgroups.iter().find(|e| e.members == members)
    }
}

/// All subgroups of `A` by closure from the trivial group, one coset
/// representative at a time. Marks isotropic and maximal isotropic members.
pub fn enumerate_subgroups(m: &AlternateModule, bound: u64) -> Result<SubgroupCensus> {
    let n = check_size(m.group(), bound)?;
    let table = Table::new(m, n);
    let start = table.trivial();
    let mut seen: HashSet<Members> = HashSet::from([start.clone()]);
    let mut found: Vec<(Members, Vec<usize>)> = vec![(start.clone(), Vec::new())];
    let mut queue = VecDeque::from([(start, Vec::<usize>::new())]);
    while let Some((s, gens)) = queue.pop_front() {
        let mut covered = s.clone();
        for g in 0..n {
            if covered.has(g) {
                continue;
            }
            for x in s.iter(n) {
                covered.insert(table.add(x, g));
            }
            let t = table.extend(&s, g);
            if seen.insert(t.clone()) {
                let mut tg = gens.clone();
                tg.push(g);
                found.push((t.clone(), tg.clone()));
                queue.push_back((t, tg));
            }
        }
    }
    found.sort_by(|a, b| a.0.count().cmp(&b.0.count()).then_with(|| a.0.cmp(&b.0)));

    let subgroups = found
        .into_iter()
        .map(|(members, gens)| {
            let isotropic = gens
                .iter()
                .enumerate()
                .all(|(i, &a)| gens[i + 1..].iter().all(|&b| table.pair(a, b).is_zero()));
            let maximal_isotropic = isotropic
                && (0..n).all(|g| members.has(g) || gens.iter().any(|&s| !table.pair(g, s).is_zero()));
            CensusEntry {
                members,
                generators: gens.iter().map(|&g| table.elems[g].clone()).collect(),
                isotropic,
                maximal_isotropic,
                ambient: m.group().clone(),
            }
        })
        .collect();
    Ok(SubgroupCensus {
        ambient: m.clone(),
        subgroups,
    })
}

/// `K` by the double loop over all element pairs.
pub fn brute_kernel(m: &AlternateModule, bound: u64) -> Result<Subgroup> {
    let n = check_size(m.group(), bound)?;
    let table = Table::new(m, n);
    let mut span = table.trivial();
    let mut gens = Vec::new();
    for a in 0..n {
        if (0..n).all(|b| table.pair(a, b).is_zero()) && !span.has(a) {
            span = table.extend(&span, a);
            gens.push(table.elems[a].clone());
        }
    }
    Subgroup::generated(m.group(), &gens)
}

/// Counts elements by order, an isomorphism invariant of the group.
fn order_profile(table: &Table) -> Vec<u64> {
    let mut v: Vec<u64> = (0..table.len()).map(|g| table.order(g)).collect();
    v.sort_unstable();
    v
}

/// Whether some group isomorphism `g: A1 -> A2` satisfies `phi1 = g* phi2`,
/// by backtracking over images of the generators of `A1`.
pub fn brute_isometric(m1: &AlternateModule, m2: &AlternateModule, bound: u64) -> Result<bool> {
    let n1 = check_size(m1.group(), bound)?;
    let n2 = check_size(m2.group(), bound)?;
    if n1 != n2 {
        return Ok(false);
    }
    let t1 = Table::new(m1, n1);
    let t2 = Table::new(m2, n2);
    if order_profile(&t1) != order_profile(&t2) {
        return Ok(false);
    }
    let gens1: Vec<usize> = m1.group().generators().iter().map(|g| t1.index(g)).collect();
    let candidates: Vec<Vec<usize>> = m1
        .orders()
        .iter()
        .map(|&d| (0..n2).filter(|&x| t2.order(x) == d).collect())
        .collect();

    struct Search<'s, 'a> {
        t1: &'s Table<'a>,
        t2: &'s Table<'a>,
        gens1: &'s [usize],
        candidates: &'s [Vec<usize>],
        orders: &'s [u64],
    }

    impl Search<'_, '_> {
        fn go(&self, chosen: &mut Vec<usize>, span: &Members) -> bool {
            let k = chosen.len();
            if k == self.gens1.len() {
                return span.count() == self.t2.len();
            }
            for &x in &self.candidates[k] {
                if span.has(x) && self.orders[k] > 1 {
                    continue;
                }
                let form_ok = (0..k).all(|j| {
                    self.t2.pair(chosen[j], x) == self.t1.pair(self.gens1[j], self.gens1[k])
                });
                if !form_ok {
                    continue;
                }
                let next = self.t2.extend(span, x);
                // images of independent generators stay independent
                if next.count() != span.count() * self.orders[k] as usize {
                    continue;
                }
                chosen.push(x);
                if self.go(chosen, &next) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
    }

    let search = Search {
        t1: &t1,
        t2: &t2,
        gens1: &gens1,
        candidates: &candidates,
        orders: m1.orders(),
    };
    Ok(search.go(&mut Vec::new(), &t2.trivial()))
}
