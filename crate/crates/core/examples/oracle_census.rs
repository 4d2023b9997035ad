//! Brute-force subgroup census: every maximal isotropic subgroup of a
//! module has the same order.

use altmod::ablattice::QZScalar;
use altmod::altmodule::AlternateModule;
use altmod::oracle::{brute_kernel, enumerate_subgroups, DEFAULT_CENSUS_BOUND};
use std::collections::BTreeMap;

fn main() -> altmod::Result<()> {
    let q = QZScalar::new;
    let m = AlternateModule::new(
        vec![2, 4, 8],
        vec![
            vec![q(0, 1), q(1, 2), q(1, 2)],
            vec![q(1, 2), q(0, 1), q(3, 4)],
            vec![q(1, 2), q(1, 4), q(0, 1)],
        ],
    )?;
    let census = enumerate_subgroups(&m, DEFAULT_CENSUS_BOUND)?;
    println!("{} subgroups", census.subgroups.len());

    let mut by_type: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for entry in census.maximal_isotropic() {
        *by_type.entry(entry.subgroup().invariant_factors()).or_default() += 1;
    }
    for (factors, count) in &by_type {
        println!("maximal isotropic of type {factors:?}: {count}");
    }
    println!("n = {}", m.lagrangian_cardinal()?);
    println!("kernel agrees with brute force: {}", brute_kernel(&m, DEFAULT_CENSUS_BOUND)? == m.kernel());
    Ok(())
}
