mod common;

use std::collections::HashSet;

use altmod::ablattice::GroupElement;
use altmod::altmodule::AlternateModule;
use altmod::embed::{audit_step, embed, embed_p, fundamental_step, standard_group, verify_map};
use altmod::Error;
use common::{module, p_module};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Independent check of a candidate map into `B x B*` by enumerating `A`.
fn brute_accepts(m: &AlternateModule, b_orders: &[u64], images: &[GroupElement]) -> bool {
    let target = AlternateModule::standard_symplectic(b_orders).unwrap();
    let t = target.group();
    let image_of = |x: &GroupElement| {
        let mut y = t.zero();
        for (c, img) in x.0.iter().zip(images) {
            y = t.add(&y, &t.scale(img, *c));
        }
        y
    };
    for (img, &d) in images.iter().zip(m.orders()) {
        if !t.scale(img, d).is_zero() {
            return false;
        }
    }
    let seen: HashSet<GroupElement> = m.group().elements().map(|x| image_of(&x)).collect();
    if BigUint::from(seen.len()) != m.cardinality() {
        return false;
    }
    for i in 0..m.rank() {
        for j in 0..m.rank() {
            if target.evaluate(&images[i], &images[j]).unwrap() != m.pairing(i, j) {
                return false;
            }
        }
    }
    let b: BigUint = b_orders.iter().map(|&b| BigUint::from(b)).product();
    b == m.lagrangian_cardinal().unwrap()
}

fn log_p(mut n: BigUint, p: u64) -> usize {
    let mut k = 0;
    while n > BigUint::from(1u32) {
        n /= p;
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn steps_are_sound_and_shrink_the_kernel((p, m) in p_module(1024, 5)) {
        let mut current = m.clone();
        let mut steps = 0;
        let bound = log_p(m.kernel().cardinality(), p);
        while !current.is_symplectic() {
            let step = fundamental_step(&current, p).unwrap();
            audit_step(&step).unwrap();
            prop_assert_eq!(step.output.lagrangian_cardinal().unwrap(), current.lagrangian_cardinal().unwrap());
            let before = current.kernel().cardinality();
            current = step.output;
            let after = current.kernel().cardinality();
            prop_assert!(after < before);
            steps += 1;
            prop_assert!(steps <= bound);
        }
        if m.is_symplectic() {
            prop_assert!(matches!(fundamental_step(&m, p), Err(Error::AlreadySymplectic)));
        }
        let cert = embed_p(&m, p).unwrap();
        prop_assert_eq!(cert.trace.len(), steps);
    }

    #[test]
    fn certificates_verify_independently(m in module(256, 4)) {
        let cert = embed(&m).unwrap();
        prop_assert!(verify_map(&m, &cert.b_orders, cert.embedding.images()).is_ok());
        prop_assert!(brute_accepts(&m, &cert.b_orders, cert.embedding.images()));
        let b: BigUint = cert.b_orders.iter().map(|&b| BigUint::from(b)).product();
        prop_assert_eq!(&b * &b, m.cardinality() * m.kernel().cardinality());
        prop_assert_eq!(embed(&m).unwrap(), cert);
    }

    #[test]
    fn corrupted_maps_are_judged_like_brute_force(
        m in module(256, 4),
        gen in any::<usize>(),
        coord in any::<usize>(),
        delta in 1u64..8,
    ) {
        let cert = embed(&m).unwrap();
        let t = standard_group(&cert.b_orders).unwrap();
        let mut images = cert.embedding.images().to_vec();
        let g = gen % images.len();
        let c = coord % t.rank();
        images[g].0[c] = (images[g].0[c] + delta) % t.orders()[c];
        let verdict = verify_map(&m, &cert.b_orders, &images);
        prop_assert_eq!(verdict.is_ok(), brute_accepts(&m, &cert.b_orders, &images));
    }

    #[test]
    fn wrong_b_orders_are_rejected(m in module(256, 4)) {
        let cert = embed(&m).unwrap();
        let mut b = cert.b_orders.clone();
        let last = b.len() - 1;
        b[last] *= 2;
        let extra: Vec<GroupElement> = cert.embedding.images().to_vec();
        prop_assert!(!verify_map(&m, &b, &extra).is_ok());
    }
}
