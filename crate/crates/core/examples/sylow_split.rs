//! Primary decomposition of a module on Z/6 x Z/12.

use altmod::ablattice::QZScalar;
use altmod::altmodule::AlternateModule;

fn main() -> altmod::Result<()> {
    let m = AlternateModule::new(
        vec![6, 12],
        vec![vec![QZScalar::ZERO, QZScalar::new(1, 6)], vec![QZScalar::new(5, 6), QZScalar::ZERO]],
    )?;
    let mut product = 1u64;
    for part in m.sylow_decompose() {
        let n = part.module.lagrangian_cardinal()?;
        println!("p = {}: orders {:?}, n = {n}", part.prime, part.module.orders());
        product *= u64::try_from(&n).expect("small");
    }
    println!("n(A) = {}, product over primes = {product}", m.lagrangian_cardinal()?);
    Ok(())
}
