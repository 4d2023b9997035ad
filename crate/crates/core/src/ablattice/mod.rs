//! Exact arithmetic over Q/Z and integer-matrix normal forms.
//!
//! Everything above this layer (kernels, orthogonals, quotients, morphism
//! kernels) reduces to Smith normal form computations on small integer
//! matrices with arbitrary-precision entries.

mod congruence;
mod group;
mod matrix;
mod morphism;
mod qz;
mod snf;
mod subgroup;

pub use congruence::{quotient, solve_congruence, solve_congruence_kernel, QuotientMap};
pub use group::{ElementIter, FinAbGroup, GroupElement};
pub use matrix::IntMatrix;
pub use morphism::Morphism;
pub use qz::QZScalar;
pub use snf::{
    hermite_rows, integer_kernel, smith_normal_form, solve_integer_system, solve_upper_left,
    SNFResult,
};
pub use subgroup::Subgroup;

use num_bigint::BigInt;
use num_integer::Integer;

pub(crate) fn big_to_mod(x: &BigInt, d: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(d));
    u64::try_from(&r).expect("residue fits in u64")
}

pub(crate) fn elem_to_big(x: &GroupElement) -> Vec<BigInt> {
    x.0.iter().map(|&v| BigInt::from(v)).collect()
}

/// Prime factors of `n` in increasing order, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}
