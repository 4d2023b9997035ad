//! Subgroups, Smith normal form and quotients.

use altmod::ablattice::{quotient, smith_normal_form, FinAbGroup, GroupElement, IntMatrix, Subgroup};

fn main() -> altmod::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    let s = smith_normal_form(&m);
    println!("diagonal of the Smith form: {:?}", s.diagonal());

    let g = FinAbGroup::new(vec![4, 6])?;
    let h = Subgroup::generated(&g, &[GroupElement(vec![2, 3]), GroupElement(vec![0, 2])])?;
    println!("H in {g}: order {}, factors {:?}", h.cardinality(), h.invariant_factors());
    println!("canonical generators: {:?}", h.gens());

    let q = quotient(&h);
    println!("G/H = {}", q.group);
    for x in [GroupElement(vec![1, 0]), GroupElement(vec![1, 1])] {
        println!("  {:?} -> {:?}", x.0, q.projection.apply(&x)?.0);
    }
    Ok(())
}
