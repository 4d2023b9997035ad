//! Kernel and Lagrangians of a degenerate module on Z/2 x Z/4 x Z/8.
//!
//! The kernel is cyclic of order 4 and is not a direct factor of A. Two
//! Lagrangians of the same order 16 have different isomorphism types.

use altmod::ablattice::{GroupElement, QZScalar, Subgroup};
use altmod::altmodule::AlternateModule;

fn main() -> altmod::Result<()> {
    let q = QZScalar::new;
    let m = AlternateModule::new(
        vec![2, 4, 8],
        vec![
            vec![q(0, 1), q(1, 2), q(1, 2)],
            vec![q(1, 2), q(0, 1), q(-1, 4)],
            vec![q(1, 2), q(1, 4), q(0, 1)],
        ],
    )?;
    println!("{m}");

    let k = m.kernel();
    println!("kernel: order {}, factors {:?}, generators {:?}", k.cardinality(), k.invariant_factors(), k.gens());
    println!("Lagrangian order n = {}", m.lagrangian_cardinal()?);

    let e = |v: [u64; 3]| GroupElement(v.to_vec());
    let l1 = Subgroup::generated(m.group(), &[e([0, 0, 1]), e([1, 2, 0])])?;
    let l2 = Subgroup::generated(m.group(), &[e([1, 0, 0]), e([0, 2, 0]), e([0, 0, 2])])?;
    for (name, l) in [("L1", &l1), ("L2", &l2)] {
        println!(
            "{name}: Lagrangian {}, factors {:?}",
            m.is_lagrangian(l)?,
            l.invariant_factors()
        );
    }

    let found = m.find_lagrangian();
    println!("greedy Lagrangian: factors {:?}", found.invariant_factors());
    Ok(())
}
