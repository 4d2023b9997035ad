//! Embedding a degenerate module into a symplectic B x B* with |B| = n,
//! printed as a certificate document with its construction trace.

use altmod::ablattice::QZScalar;
use altmod::altmodule::AlternateModule;
use altmod::document::{to_canonical_json, CertificateDocument};
use altmod::embed::embed;

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
    let cert = embed(&m)?;
    for step in &cert.trace {
        println!(
            "{:<24} {:?} -> {:?}",
            step.kind().as_str(),
            step.input.orders(),
            step.output.orders()
        );
    }
    println!("B = {:?}, n = {}", cert.b_orders, m.lagrangian_cardinal()?);
    print!("{}", to_canonical_json(&CertificateDocument::from_certificate(&cert)));
    Ok(())
}
