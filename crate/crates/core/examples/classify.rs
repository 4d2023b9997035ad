//! Normal form of a symplectic module: an isometry onto B x B*.

use altmod::ablattice::QZScalar;
use altmod::altmodule::AlternateModule;
use altmod::symplectic::classify;

fn main() -> altmod::Result<()> {
    let q = QZScalar::new;
    // A symplectic form on Z/4 x Z/4 x Z/2 x Z/2 that is not in normal form.
    let m = AlternateModule::new(
        vec![4, 4, 2, 2],
        vec![
            vec![q(0, 1), q(1, 4), q(1, 2), q(0, 1)],
            vec![q(3, 4), q(0, 1), q(0, 1), q(1, 2)],
            vec![q(1, 2), q(0, 1), q(0, 1), q(1, 2)],
            vec![q(0, 1), q(1, 2), q(1, 2), q(0, 1)],
        ],
    )?;
    println!("symplectic: {}", m.is_symplectic());
    let c = classify(&m)?;
    println!("B = {:?}", c.b_orders);
    println!("isometry columns (images of generators):");
    for img in c.isometry.images() {
        println!("  {:?}", img.0);
    }
    println!("form preserved: {}", m.preserves_form(&c.isometry, &c.standard()));
    Ok(())
}
