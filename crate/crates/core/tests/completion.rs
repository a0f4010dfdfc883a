use cylindric::catalog;
use cylindric::completion::{canonical_completion, phi};
use cylindric::{Limits, Subset};

#[test]
fn every_catalog_algebra_completes() {
    let limits = Limits::default();
    for a in catalog::algebras() {
        let c = canonical_completion(&a, &limits).unwrap();
        assert!(c.passed(), "{}", c.report);
        let ext = c.embedding.canonical_extension_ops();
        assert!(ext.report.passed(), "{}", ext.report);
    }
}

#[test]
fn finite_completions_are_isomorphic_to_the_source() {
    let limits = Limits::default();
    for a in catalog::algebras() {
        let e = phi(&a, &limits).unwrap();
        assert_eq!(e.target.algebra.len(), a.len(), "{}", a.title());
        let mut image = e.map.clone();
        image.sort();
        assert_eq!(image, (0..a.len()).collect::<Vec<_>>());
    }
}

#[test]
fn closed_elements_are_the_image() {
    // finite case: K is φ[A] itself
    let e = phi(&catalog::mo2(), &Limits::default()).unwrap();
    let mut image = e.map.clone();
    image.sort();
    assert_eq!(e.closed, image);
}

#[test]
fn trivial_quantifier_extends_to_identity() {
    let e = phi(&catalog::mo2_trivial(), &Limits::default()).unwrap();
    let ext = e.canonical_extension_ops();
    for table in &ext.exists {
        assert_eq!(table, &(0..e.target.algebra.len()).collect::<Vec<_>>());
    }
}

#[test]
fn singleton_pairs_reflect_order() {
    let a = catalog::mo2();
    let e = phi(&a, &Limits::default()).unwrap();
    let t = &e.target;
    for x in a.elements() {
        for y in a.elements() {
            let lhs = t.member(e.apply(x));
            let rhs = t.member(e.apply(y));
            assert_eq!(lhs.is_subset(rhs), a.leq(x, y));
        }
    }
    assert_eq!(t.member(e.apply(a.bottom())), &Subset::empty());
}
