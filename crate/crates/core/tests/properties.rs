//! Property tests over randomly generated small structures.

use proptest::prelude::*;

use cylindric::algebra::closed_elements;
use cylindric::cli::{parse_document, render_document, WorkbenchDocument};
use cylindric::completion::canonical_completion;
use cylindric::duality::{check_coincidence, verify_representation, Track};
use cylindric::frames::CylindricOrthoFrame;
use cylindric::topology::{FiniteSpace, UpsetOperators};
use cylindric::{CylindricOrtholattice, FiniteBoundedLattice, Limits, Ortholattice, Relation, Subset};

fn mask_set(mask: u64) -> Subset {
    Subset::from_mask(mask)
}

/// Powerset of `n` atoms with the quantifier "union of the blocks met",
/// blocks given by `block[i]` for atom `i`. Elements are masks in
/// increasing order.
fn partition_algebra(n: usize, block: &[usize]) -> CylindricOrtholattice {
    let size = 1usize << n;
    let names: Vec<String> = (0..size).map(|m| format!("m{m}")).collect();
    let leq = Relation::from_fn(size, |a, b| a & !b == 0);
    let l = FiniteBoundedLattice::from_order(names, leq).unwrap();
    let ocomp = (0..size).map(|a| !a & (size - 1)).collect();
    let ol = Ortholattice::new(l, ocomp).unwrap();
    let exists = (0..size)
        .map(|a| {
            (0..n)
                .filter(|&i| (0..n).any(|j| a >> j & 1 == 1 && block[j] == block[i]))
                .fold(0, |acc, i| acc | 1 << i)
        })
        .collect();
    CylindricOrtholattice::new("P", ol, vec![exists], vec![vec![size - 1]]).unwrap()
}

fn partition() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, n)))
}

/// Symmetric irreflexive relation on `n` points from a mask over pairs.
fn orthogonality(n: usize, mask: u64) -> Relation {
    let mut r = Relation::empty(n);
    let mut bit = 0;
    for x in 0..n {
        for y in x + 1..n {
            if mask >> bit & 1 == 1 {
                r.insert(x, y);
                r.insert(y, x);
            }
            bit += 1;
        }
    }
    r
}

fn frame(n: usize, mask: u64) -> CylindricOrthoFrame {
    let points = (0..n).map(|i| format!("p{i}")).collect();
    CylindricOrthoFrame::plain(points, orthogonality(n, mask)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_ops_match_masks(a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (a as u64, b as u64);
        let (sa, sb) = (mask_set(a), mask_set(b));
        prop_assert_eq!(sa.union(&sb), mask_set(a | b));
        prop_assert_eq!(sa.intersection(&sb), mask_set(a & b));
        prop_assert_eq!(sa.difference(&sb), mask_set(a & !b));
        prop_assert_eq!(sa.complement(32), mask_set(!a & 0xffff_ffff));
        prop_assert_eq!(sa.is_subset(&sb), a & !b == 0);
        prop_assert_eq!(sa.len(), a.count_ones() as usize);
        let (va, vb): (Vec<usize>, Vec<usize>) = (sa.iter().collect(), sb.iter().collect());
        prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
    }

    #[test]
    fn biclosure_is_a_closure_operator(n in 1usize..=7, rel in any::<u64>(), u in any::<u8>(), v in any::<u8>()) {
        let f = frame(n, rel);
        let full = (1u64 << n) - 1;
        let (u, v) = (mask_set(u as u64 & full), mask_set(v as u64 & full));
        let cu = f.biclosure(&u);
        prop_assert!(u.is_subset(&cu));
        prop_assert_eq!(f.biclosure(&cu), cu.clone());
        prop_assert!(f.is_bclosed(&f.perp_set(&u)));
        let uv = u.union(&v);
        prop_assert!(f.perp_set(&uv).is_subset(&f.perp_set(&u)));
        prop_assert!(cu.is_subset(&f.biclosure(&uv)));
        prop_assert!(f.validate().passed());
    }

    #[test]
    fn bclosed_enumeration_is_the_fixpoint_set(n in 1usize..=7, rel in any::<u64>()) {
        let f = frame(n, rel);
        let fam = f.enumerate_bclosed(&Limits::default()).unwrap();
        let brute: Vec<Subset> = (0..1u64 << n).map(mask_set).filter(|u| f.is_bclosed(u)).collect();
        prop_assert_eq!(fam.len(), brute.len());
        prop_assert!(brute.iter().all(|u| fam.contains(u)));
        // the fixpoints form an ortholattice under the frame operations
        let alg = f.bclosed_algebra("B", &Limits::default()).unwrap();
        prop_assert!(alg.algebra.validate(false).passed());
    }

    #[test]
    fn upset_operator_identities(n in 1usize..=6, rel in any::<u64>(), u in any::<u8>()) {
        let pairs = (0..n * n).filter(|b| rel >> b & 1 == 1).map(|b| (b / n, b % n));
        let le = Relation::from_pairs(n, pairs).reflexive_transitive_closure();
        let ops = UpsetOperators::new(&le);
        let all: Vec<Subset> = (0..1u64 << n).map(mask_set).collect();
        let r = ops.check_identities(&all);
        prop_assert!(r.passed(), "{}", r);
        let u = mask_set(u as u64 & ((1 << n) - 1));
        let s = ops.star(&u);
        let w = ops.interior(&u);
        // pseudocomplement laws hold on upsets
        prop_assert_eq!(ops.star(&ops.star(&ops.star(&w))), ops.star(&w));
        prop_assert!(w.is_subset(&ops.star(&ops.star(&w))));
        prop_assert!(ops.is_upset(&s));
        prop_assert!(!s.intersects(&u));
        prop_assert!(ops.interior(&u).is_subset(&u));
        prop_assert!(u.is_subset(&ops.closure(&u)));
    }

    #[test]
    fn spaces_from_basis_have_exactly_the_unions(n in 1usize..=5, raw in proptest::collection::vec(any::<u8>(), 0..6)) {
        let full = (1u64 << n) - 1;
        // close the proposed basis under intersection so it generates a topology
        let mut basis: Vec<u64> = raw.iter().map(|&b| b as u64 & full).collect();
        basis.push(full);
        loop {
            let extra: Vec<u64> = basis
                .iter()
                .flat_map(|a| basis.iter().map(move |b| a & b))
                .filter(|m| !basis.contains(m))
                .collect();
            if extra.is_empty() {
                break;
            }
            basis.extend(extra);
            basis.sort();
            basis.dedup();
        }
        let points = (0..n).map(|i| format!("p{i}")).collect();
        let x = FiniteSpace::from_basis("X", points, basis.iter().map(|&m| mask_set(m)).collect(), &Limits::default()).unwrap();
        for m in 0..=full {
            let inside = basis.iter().filter(|&&b| b & !m == 0).fold(0, |acc, b| acc | b);
            prop_assert_eq!(x.is_open(&mask_set(m)), inside == m);
        }
        let le = x.specialization_order();
        for p in 0..n {
            prop_assert!(le.contains(p, p));
            for q in 0..n {
                let expected = x.opens().iter().all(|u| !u.contains(p) || u.contains(q));
                prop_assert_eq!(le.contains(p, q), expected);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn partition_algebras_are_monadic_boolean((n, block) in partition()) {
        let a = partition_algebra(n, &block);
        let r = a.validate(true);
        prop_assert!(r.passed(), "{}", r);
        let blocks = { let mut b = block.clone(); b.sort(); b.dedup(); b.len() };
        prop_assert_eq!(closed_elements(&a, a.exists_table(0)).unwrap().len(), 1 << blocks);
        for x in a.elements() {
            for y in a.elements() {
                prop_assert_eq!(a.ocomp(a.meet(x, y)), a.join(a.ocomp(x), a.ocomp(y)));
                prop_assert_eq!(a.ocomp(a.join(x, y)), a.meet(a.ocomp(x), a.ocomp(y)));
            }
        }
    }

    #[test]
    fn partition_algebras_complete_and_dualize((n, block) in partition()) {
        let a = partition_algebra(n, &block);
        let limits = Limits::default();
        let c = canonical_completion(&a, &limits).unwrap();
        prop_assert!(c.passed(), "{}", c.report);
        let ext = c.embedding.canonical_extension_ops();
        prop_assert!(ext.report.passed(), "{}", ext.report);
        for track in [Track::Ortho, Track::Boolean] {
            let cert = verify_representation(&a, track, &limits).unwrap();
            prop_assert!(cert.passed(), "{}", cert);
        }
        prop_assert!(check_coincidence(&a, &limits).unwrap().equal());
    }

    #[test]
    fn documents_round_trip((n, block) in partition()) {
        let doc = WorkbenchDocument::Algebra(partition_algebra(n, &block));
        let text = render_document(&doc);
        prop_assert_eq!(parse_document(&text).unwrap(), doc);
    }
}
