//! Seeded random modules for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ablattice::QZScalar;
use crate::altmodule::AlternateModule;
use num_integer::Integer;

/// Random Gram matrix for the given orders: `phi(e_i, e_j) = t / gcd(d_i, d_j)`
/// with `t` uniform, which is exactly the set of valid values.
pub fn random_gram<R: Rng + ?Sized>(rng: &mut R, orders: &[u64]) -> Vec<Vec<QZScalar>> {
    let r = orders.len();
    let mut gram = vec![vec![QZScalar::ZERO; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let g = orders[i].gcd(&orders[j]);
            let v = QZScalar::new(rng.gen_range(0..g) as i128, g);
            gram[i][j] = v;
            gram[j][i] = -v;
        }
    }
    gram
}

/// Orders `p^k`, at most `max_rank` of them, with product at most `max_order`.
pub fn random_p_orders<R: Rng + ?Sized>(rng: &mut R, p: u64, max_order: u64, max_rank: usize) -> Vec<u64> {
    let rank = rng.gen_range(1..=max_rank);
    let mut orders = Vec::new();
    let mut total = 1u64;
    for _ in 0..rank {
        let mut room = Vec::new();
        let mut q = p;
        while total * q <= max_order {
            room.push(q);
            q *= p;
        }
        match room.choose(rng) {
            Some(&d) => {
                orders.push(d);
                total *= d;
            }
            None => break,
        }
    }
    if orders.is_empty() && p <= max_order {
        orders.push(p);
    }
    orders
}

/// A random alternate module on a `p`-group of order at most `max_order`.
pub fn random_p_module<R: Rng + ?Sized>(
    rng: &mut R,
    p: u64,
    max_order: u64,
    max_rank: usize,
) -> AlternateModule {
    let orders = random_p_orders(rng, p, max_order, max_rank);
    let gram = random_gram(rng, &orders);
    AlternateModule::new(orders, gram).expect("random gram is valid")
}

/// A random module whose cyclic factors have orders built from `primes`,
/// possibly mixing them, with `|A| <= max_order`.
pub fn random_module<R: Rng + ?Sized>(
    rng: &mut R,
    primes: &[u64],
    max_order: u64,
    max_rank: usize,
) -> AlternateModule {
    let rank = rng.gen_range(1..=max_rank);
    let mut orders = Vec::new();
    let mut total = 1u64;
    for _ in 0..rank {
        let mut d = 1u64;
        for &p in primes {
            if rng.gen_bool(0.5) {
                let k = rng.gen_range(1..=2);
                d *= p.pow(k);
            }
        }
        if d == 1 {
            d = *primes.choose(rng).expect("at least one prime");
        }
        if total * d <= max_order {
            orders.push(d);
            total *= d;
        }
    }
    if orders.is_empty() {
        orders.push(primes[0]);
    }
    let gram = random_gram(rng, &orders);
    AlternateModule::new(orders, gram).expect("random gram is valid")
}

/// A random symplectic `p`-group module of order at most `max_order`: a
/// random module divided by its kernel, retried until nontrivial.
pub fn random_symplectic<R: Rng + ?Sized>(
    rng: &mut R,
    p: u64,
    max_order: u64,
    max_rank: usize,
) -> AlternateModule {
    loop {
        let m = random_p_module(rng, p, max_order, max_rank).quotient_by_kernel().quotient;
        if !m.group().is_trivial() {
            return m;
        }
    }
}
