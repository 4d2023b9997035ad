//! Embeddings are not unique: the zero form on Z/2 x Z/4 sits inside both
//! Std(Z/2 x Z/4) and Std(Z/8), and both certificates verify.

use altmod::ablattice::GroupElement;
use altmod::altmodule::AlternateModule;
use altmod::embed::{embed, verify_map};

fn main() -> altmod::Result<()> {
    let m = AlternateModule::trivial_form(vec![2, 4])?;
    let e = |v: &[u64]| GroupElement(v.to_vec());

    let candidates = [
        ("B = Z/2 x Z/4, (u, v) -> ((u, v), 0)", vec![2, 4], vec![e(&[1, 0, 0, 0]), e(&[0, 1, 0, 0])]),
        ("B = Z/8, (u, v) -> (4u, 2v)", vec![8], vec![e(&[4, 0]), e(&[0, 2])]),
        ("B = Z/8, (u, v) -> (2u, 2v)", vec![8], vec![e(&[2, 0]), e(&[0, 2])]),
    ];
    for (label, b, images) in &candidates {
        let verdict = verify_map(&m, b, images);
        if verdict.is_ok() {
            println!("{label}: accepted");
        } else {
            for v in &verdict.violations {
                println!("{label}: {v}");
            }
        }
    }
    println!("constructed: B = {:?}", embed(&m)?.b_orders);
    Ok(())
}
