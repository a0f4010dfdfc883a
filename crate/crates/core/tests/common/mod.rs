#![allow(dead_code)]

use cylindric::catalog;
use cylindric::{CylindricOrtholattice, FiniteBoundedLattice, Ortholattice};

/// A deliberately broken structure with the axiom it must fail and the
/// least witness, worked out by hand.
pub struct Mutilation {
    pub name: &'static str,
    pub algebra: CylindricOrtholattice,
    pub boolean: bool,
    pub axiom: &'static str,
    pub witness: &'static [&'static str],
}

fn table(l: &FiniteBoundedLattice, op: fn(&FiniteBoundedLattice, usize, usize) -> usize) -> Vec<Vec<usize>> {
    l.elements().map(|a| l.elements().map(|b| op(l, a, b)).collect()).collect()
}

/// B4 rebuilt from raw tables after `edit` has had its way with them.
fn b4_raw(edit: impl FnOnce(&mut cylindric::Relation, &mut Vec<Vec<usize>>, &mut Vec<Vec<usize>>)) -> CylindricOrtholattice {
    let ol = catalog::b4_ol();
    let l = ol.lattice();
    let mut leq = l.order().clone();
    let mut meet = table(l, FiniteBoundedLattice::meet);
    let mut join = table(l, FiniteBoundedLattice::join);
    edit(&mut leq, &mut meet, &mut join);
    let l = FiniteBoundedLattice::from_tables(l.names().to_vec(), leq, meet, join, 0, 3).unwrap();
    CylindricOrtholattice::plain("B4-raw", Ortholattice::new(l, ol.ocomp_table().to_vec()).unwrap())
}

fn with_ocomp(ol: Ortholattice, ocomp: &[usize], name: &str) -> CylindricOrtholattice {
    CylindricOrtholattice::plain(name, Ortholattice::new(ol.lattice().clone(), ocomp.to_vec()).unwrap())
}

fn cyl(name: &str, ol: Ortholattice, exists: Vec<Vec<usize>>, delta: Vec<Vec<usize>>) -> CylindricOrtholattice {
    CylindricOrtholattice::new(name, ol, exists, delta).unwrap()
}

fn ps4_with(exists: Option<Vec<Vec<usize>>>, delta: Vec<Vec<usize>>) -> CylindricOrtholattice {
    let a = catalog::ps4();
    let exists = exists.unwrap_or_else(|| vec![a.exists_table(0).to_vec(), a.exists_table(1).to_vec()]);
    cyl("PS4-mutilated", a.ortholattice().clone(), exists, delta)
}

/// PS4 element indices: `∅ = 0`, `{00} = 1`, `{00,11} = 7`, top `= 15`.
const PS4_D: usize = 7;
const PS4_TOP: usize = 15;

pub fn mutilations() -> Vec<Mutilation> {
    let id16: Vec<usize> = (0..16).collect();
    vec![
        Mutilation {
            name: "B4 with a⊥ = a",
            algebra: with_ocomp(catalog::b4_ol(), &[3, 1, 1, 0], "B4-a"),
            boolean: false,
            axiom: "ortho.meet-zero",
            witness: &["a"],
        },
        Mutilation {
            name: "B4 with bounds fixed by ⊥",
            algebra: with_ocomp(catalog::b4_ol(), &[0, 2, 1, 3], "B4-fixed"),
            boolean: false,
            axiom: "ortho.join-one",
            witness: &["0"],
        },
        Mutilation {
            name: "O6 with the chains crossed",
            algebra: with_ocomp(catalog::o6_ol(), &[5, 3, 4, 1, 2, 0], "O6-crossed"),
            boolean: false,
            axiom: "ortho.antitone",
            witness: &["a", "b"],
        },
        Mutilation {
            name: "MO2 with ⊥ a 4-cycle",
            algebra: with_ocomp(catalog::mo2_ol(), &[5, 2, 3, 4, 1, 0], "MO2-rotated"),
            boolean: false,
            axiom: "ortho.involution",
            witness: &["a"],
        },
        Mutilation {
            name: "B4 with a ∧ b = a",
            algebra: b4_raw(|_, meet, _| meet[1][2] = 1),
            boolean: false,
            axiom: "meet.glb",
            witness: &["a", "b"],
        },
        Mutilation {
            name: "B4 with a ∨ b = a",
            algebra: b4_raw(|_, _, join| join[1][2] = 1),
            boolean: false,
            axiom: "join.lub",
            witness: &["a", "b"],
        },
        Mutilation {
            name: "B4 without 0 ≤ 1",
            algebra: b4_raw(|leq, _, _| leq.remove(0, 3)),
            boolean: false,
            axiom: "leq.transitive",
            witness: &["0", "a", "1"],
        },
        Mutilation {
            name: "B4 with a non-extensive quantifier",
            algebra: cyl("B4-E", catalog::b4_ol(), vec![vec![0, 0, 2, 3]], vec![vec![3]]),
            boolean: false,
            axiom: "E0.extensive",
            witness: &["a"],
        },
        Mutilation {
            name: "B8 with a non-idempotent quantifier",
            algebra: cyl("B8-E", catalog::b8_ol(), vec![vec![0, 4, 2, 3, 7, 7, 6, 7]], vec![vec![7]]),
            boolean: false,
            axiom: "E0.idempotent",
            witness: &["x"],
        },
        Mutilation {
            name: "B8 with non-commuting partition quantifiers",
            algebra: cyl(
                "B8-partitions",
                catalog::b8_ol(),
                vec![vec![0, 4, 4, 3, 4, 7, 7, 7], vec![0, 1, 6, 6, 7, 7, 6, 7]],
                vec![vec![7, 7], vec![7, 7]],
            ),
            boolean: false,
            axiom: "cyl.commute",
            witness: &["#0", "#1", "x"],
        },
        Mutilation {
            name: "PS4 with an asymmetric diagonal",
            algebra: ps4_with(None, vec![vec![PS4_TOP, 1], vec![PS4_D, PS4_TOP]]),
            boolean: false,
            axiom: "cyl.delta-symmetric",
            witness: &["#0", "#1"],
        },
        Mutilation {
            name: "PS4 with δ00 below the top",
            algebra: ps4_with(None, vec![vec![PS4_D, PS4_D], vec![PS4_D, PS4_TOP]]),
            boolean: false,
            axiom: "cyl.delta-unit",
            witness: &["#0"],
        },
        Mutilation {
            name: "PS4 lattice with identity quantifiers and the true diagonal",
            algebra: ps4_with(Some(vec![id16.clone(), id16]), vec![vec![PS4_TOP, PS4_D], vec![PS4_D, PS4_TOP]]),
            boolean: false,
            axiom: "cyl.delta-composition",
            witness: &["#0", "#1", "#0"],
        },
        Mutilation {
            name: "PS4 with a full off-diagonal",
            algebra: ps4_with(None, vec![vec![PS4_TOP, PS4_TOP], vec![PS4_TOP, PS4_TOP]]),
            boolean: true,
            axiom: "bool.axiom5",
            witness: &["#0", "#1", "{00}"],
        },
        Mutilation {
            name: "MO2 on the Boolean track",
            algebra: catalog::mo2(),
            boolean: true,
            axiom: "bool.distributive",
            witness: &["a", "a⊥", "b"],
        },
    ]
}

/// Checks one mutilation: the named axiom fails with exactly the frozen
/// witness. Returns a description of the mismatch otherwise.
pub fn check_mutilation(m: &Mutilation) -> Result<(), String> {
    let r = m.algebra.validate(m.boolean);
    let expected: Vec<String> = m.witness.iter().map(|s| s.to_string()).collect();
    match r.witness(m.axiom) {
        Some(w) if w == expected.as_slice() => Ok(()),
        Some(w) => Err(format!("{}: {} failed with {:?}, expected {:?}", m.name, m.axiom, w, expected)),
        None => Err(format!("{}: {} did not fail", m.name, m.axiom)),
    }
}

/// The unmutilated structures criterion 1 names, with the Boolean flag
/// they are validated under.
pub fn intact() -> Vec<(CylindricOrtholattice, bool)> {
    vec![
        (catalog::b2(), true),
        (catalog::b4(), true),
        (catalog::b8(), true),
        (catalog::mo2(), false),
        (catalog::o6(), false),
        (catalog::ps4(), true),
    ]
}
