#![allow(dead_code)]

use altmod::ablattice::{FinAbGroup, GroupElement, QZScalar};
use altmod::altmodule::AlternateModule;
use num_integer::Integer;
use proptest::prelude::*;

/// Cyclic orders `p^k` with product at most `max_order`.
pub fn p_orders(max_order: u64, max_rank: usize) -> impl Strategy<Value = (u64, Vec<u64>)> {
    (prop::sample::select(vec![2u64, 3, 5]), prop::collection::vec(1u32..=4, 1..=max_rank)).prop_map(
        move |(p, exps)| {
            let mut orders = Vec::new();
            let mut total = 1;
            for k in exps {
                let d = p.pow(k);
                if total * d <= max_order {
                    orders.push(d);
                    total *= d;
                }
            }
            if orders.is_empty() {
                orders.push(p);
            }
            (p, orders)
        },
    )
}

/// Cyclic orders mixing the primes 2, 3 and 5.
pub fn mixed_orders(max_order: u64, max_rank: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9, 10, 12]), 1..=max_rank).prop_map(
        move |ds| {
            let mut orders = Vec::new();
            let mut total = 1;
            for d in ds {
                if total * d <= max_order {
                    orders.push(d);
                    total *= d;
                }
            }
            orders
        },
    )
}

pub fn with_gram(orders: Vec<u64>) -> impl Strategy<Value = AlternateModule> {
    let r = orders.len();
    prop::collection::vec(any::<u64>(), r * r).prop_map(move |raw| {
        let mut gram = vec![vec![QZScalar::ZERO; r]; r];
        for i in 0..r {
            for j in i + 1..r {
                let g = orders[i].gcd(&orders[j]);
                let v = QZScalar::new((raw[i * r + j] % g) as i128, g);
                gram[i][j] = v;
                gram[j][i] = -v;
            }
        }
        AlternateModule::new(orders.clone(), gram).unwrap()
    })
}

/// Modules on `p`-groups, with the prime.
pub fn p_module(max_order: u64, max_rank: usize) -> impl Strategy<Value = (u64, AlternateModule)> {
    p_orders(max_order, max_rank).prop_flat_map(|(p, orders)| (Just(p), with_gram(orders)))
}

/// Modules on arbitrary groups of order at most `max_order`.
pub fn module(max_order: u64, max_rank: usize) -> impl Strategy<Value = AlternateModule> {
    prop_oneof![
        p_module(max_order, max_rank).prop_map(|(_, m)| m),
        mixed_orders(max_order, max_rank).prop_flat_map(with_gram),
    ]
}

pub fn symplectic(max_order: u64, max_rank: usize) -> impl Strategy<Value = AlternateModule> {
    module(max_order, max_rank)
        .prop_map(|m| m.quotient_by_kernel().quotient)
        .prop_filter("nontrivial", |m| !m.group().is_trivial())
}

pub fn element(g: &FinAbGroup) -> impl Strategy<Value = GroupElement> {
    let orders = g.orders().to_vec();
    prop::collection::vec(any::<u64>(), orders.len())
        .prop_map(move |raw| GroupElement(raw.iter().zip(&orders).map(|(x, d)| x % d).collect()))
}

pub fn elements(g: &FinAbGroup, max: usize) -> impl Strategy<Value = Vec<GroupElement>> {
    prop::collection::vec(element(g), 0..=max)
}

pub fn degenerate_module() -> AlternateModule {
    let q = QZScalar::new;
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
