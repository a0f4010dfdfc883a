//! Built-in algebras and morphisms used as fixed inputs by the tests and
//! the `--seed-catalog` flag.

use crate::algebra::{
    build_set_algebra, AlgebraHom, CylindricOrtholattice, FamilyOps, FiniteBoundedLattice, Ortholattice, SetAlgebra,
};
use crate::error::Result;
use crate::subset::Subset;

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn ortholattice(elems: &[&str], covers: &[(usize, usize)], ocomp: &[usize]) -> Ortholattice {
    let l = FiniteBoundedLattice::from_covers(names(elems), covers).expect("catalog lattice");
    Ortholattice::new(l, ocomp.to_vec()).expect("catalog ortholattice")
}

pub fn b2_ol() -> Ortholattice {
    ortholattice(&["0", "1"], &[(0, 1)], &[1, 0])
}

pub fn b4_ol() -> Ortholattice {
    ortholattice(&["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)], &[3, 2, 1, 0])
}

/// Powerset of `{x, y, z}`.
pub fn b8_ol() -> Ortholattice {
    ortholattice(
        &["0", "x", "y", "z", "xy", "xz", "yz", "1"],
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 7),
            (5, 7),
            (6, 7),
        ],
        &[7, 6, 5, 4, 3, 2, 1, 0],
    )
}

/// Two orthogonal blocks `{a, a⊥}` and `{b, b⊥}` between 0 and 1.
pub fn mo2_ol() -> Ortholattice {
    ortholattice(
        &["0", "a", "a⊥", "b", "b⊥", "1"],
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
        &[5, 2, 1, 4, 3, 0],
    )
}

/// The hexagon: `0 < a < b < 1` and `0 < b⊥ < a⊥ < 1`.
pub fn o6_ol() -> Ortholattice {
    ortholattice(
        &["0", "a", "b", "b⊥", "a⊥", "1"],
        &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
        &[5, 4, 3, 2, 1, 0],
    )
}

pub fn b2() -> CylindricOrtholattice {
    CylindricOrtholattice::trivial("B2", b2_ol(), 2)
}

pub fn b4() -> CylindricOrtholattice {
    CylindricOrtholattice::trivial("B4", b4_ol(), 2)
}

pub fn b8() -> CylindricOrtholattice {
    CylindricOrtholattice::trivial("B8", b8_ol(), 2)
}

pub fn o6() -> CylindricOrtholattice {
    CylindricOrtholattice::trivial("O6", o6_ol(), 2)
}

/// `∃0 = 0` and `∃a = 1` otherwise.
pub fn simple_quantifier(ol: &Ortholattice) -> Vec<usize> {
    ol.elements()
        .map(|a| if a == ol.bottom() { a } else { ol.top() })
        .collect()
}

/// MO2 with the simple quantifier in both dimensions and unit diagonals.
pub fn mo2() -> CylindricOrtholattice {
    let ol = mo2_ol();
    let e = simple_quantifier(&ol);
    let top = ol.top();
    CylindricOrtholattice::new("MO2", ol, vec![e.clone(), e], vec![vec![top; 2]; 2]).expect("MO2")
}

pub fn mo2_trivial() -> CylindricOrtholattice {
    CylindricOrtholattice::trivial("MO2-trivial", mo2_ol(), 2)
}

/// Point names of the function space `base^dims`, e.g. `01` for the
/// function sending 0 to 0 and 1 to 1.
pub fn function_points(base: usize, dims: usize) -> Vec<String> {
    (0..base.pow(dims as u32))
        .map(|p| coordinates(p, base, dims).iter().map(|c| c.to_string()).collect())
        .collect()
}

fn coordinates(mut p: usize, base: usize, dims: usize) -> Vec<usize> {
    let mut cs = vec![0; dims];
    for c in cs.iter_mut().rev() {
        *c = p % base;
        p /= base;
    }
    cs
}

/// Full cylindric set algebra on the functions `dims → base`: all subsets,
/// `Cᵢ` varies coordinate `i`, `Dᵢₖ` is where coordinates `i` and `k` agree.
pub fn function_space_algebra(name: &str, base: usize, dims: usize) -> Result<SetAlgebra> {
    let points = function_points(base, dims);
    let n = points.len();
    let coords: Vec<Vec<usize>> = (0..n).map(|p| coordinates(p, base, dims)).collect();
    let family: Vec<Subset> = (0..1u64 << n).map(Subset::from_mask).collect();
    let agree_off = |p: usize, q: usize, i: usize| (0..dims).all(|j| j == i || coords[p][j] == coords[q][j]);
    let deltas: Vec<Vec<Subset>> = (0..dims)
        .map(|i| (0..dims).map(|k| (0..n).filter(|&p| coords[p][i] == coords[p][k]).collect()).collect())
        .collect();
    let join = |u: &Subset, v: &Subset| u.union(v);
    let ocomp = |u: &Subset| u.complement(n);
    let exists = |i: usize, u: &Subset| (0..n).filter(|&p| u.iter().any(|q| agree_off(p, q, i))).collect();
    build_set_algebra(
        name,
        &points,
        family,
        FamilyOps {
            join: &join,
            ocomp: &ocomp,
            exists: &exists,
            deltas: &deltas,
        },
    )
}

/// All 16 subsets of `{00, 01, 10, 11}` with both cylindrifications and
/// `D01 = {00, 11}`.
pub fn ps4_set() -> SetAlgebra {
    function_space_algebra("PS4", 2, 2).expect("PS4")
}

pub fn ps4() -> CylindricOrtholattice {
    ps4_set().algebra
}

/// PS4 with its two dimensions listed in the opposite order.
pub fn ps4_transposed() -> CylindricOrtholattice {
    let a = ps4();
    let ol = a.ortholattice().clone();
    let exists = vec![a.exists_table(1).to_vec(), a.exists_table(0).to_vec()];
    let delta = vec![
        vec![a.delta(1, 1), a.delta(1, 0)],
        vec![a.delta(0, 1), a.delta(0, 0)],
    ];
    CylindricOrtholattice::new("PS4ᵀ", ol, exists, delta).expect("PS4ᵀ")
}

/// The element map induced by exchanging the two coordinates of every
/// point of PS4.
pub fn ps4_swap_map() -> Vec<usize> {
    let s = ps4_set();
    let swap = |p: usize| ((p & 1) << 1) | (p >> 1);
    s.members
        .iter()
        .map(|u| s.index_of(&u.map(swap)).expect("swap permutes PS4"))
        .collect()
}

/// Coordinate swap as a homomorphism PS4 → PS4ᵀ. It sends `C0` to `C1`, so
/// it is not an endomorphism of PS4 itself.
pub fn ps4_coordinate_swap() -> AlgebraHom {
    AlgebraHom::new(ps4(), ps4_transposed(), ps4_swap_map()).expect("swap")
}

/// `mOL12`: atoms e, g, j, l, n; coatoms f, h, i, k, m. The quantifier
/// sends every element to the least element of
/// `{0, 1, e, f, k, l, m, n}` above it.
pub fn mol12() -> CylindricOrtholattice {
    let elems = ["0", "e", "g", "j", "l", "n", "f", "h", "i", "k", "m", "1"];
    let ix = |s: &str| elems.iter().position(|e| *e == s).unwrap();
    let mut covers = Vec::new();
    for a in ["e", "g", "j", "l", "n"] {
        covers.push((0, ix(a)));
    }
    for c in ["f", "h", "i", "k", "m"] {
        covers.push((ix(c), 11));
    }
    for (a, c) in [
        ("e", "m"),
        ("e", "k"),
        ("g", "m"),
        ("g", "i"),
        ("j", "h"),
        ("j", "m"),
        ("l", "f"),
        ("l", "m"),
        ("n", "h"),
        ("n", "f"),
        ("n", "k"),
        ("n", "i"),
    ] {
        covers.push((ix(a), ix(c)));
    }
    let mut ocomp = vec![0; 12];
    for (a, b) in [("0", "1"), ("e", "f"), ("l", "k"), ("n", "m"), ("g", "h"), ("j", "i")] {
        ocomp[ix(a)] = ix(b);
        ocomp[ix(b)] = ix(a);
    }
    let ol = ortholattice(&elems, &covers, &ocomp);
    let closed: Vec<usize> = ["0", "1", "e", "f", "k", "l", "m", "n"].iter().map(|s| ix(s)).collect();
    let e: Vec<usize> = ol
        .elements()
        .map(|a| {
            let above: Vec<usize> = closed.iter().copied().filter(|&c| ol.leq(a, c)).collect();
            *above
                .iter()
                .find(|&&c| above.iter().all(|&d| ol.leq(c, d)))
                .expect("least closed element above")
        })
        .collect();
    let top = ol.top();
    CylindricOrtholattice::new("mOL12", ol, vec![e], vec![vec![top]]).expect("mOL12")
}

/// Every catalog algebra, in a fixed order. mOL12 is listed only when it
/// validates.
pub fn algebras() -> Vec<CylindricOrtholattice> {
    let mut all = vec![b2(), b4(), b8(), mo2(), mo2_trivial(), o6(), ps4()];
    let m = mol12();
    if m.validate(false).passed() {
        all.push(m);
    }
    all
}

/// The distributive members of [`algebras`].
pub fn boolean_algebras() -> Vec<CylindricOrtholattice> {
    algebras().into_iter().filter(|a| a.is_distributive()).collect()
}

/// `0 ↦ 0, 1 ↦ 1`, trivial cylindric structure on both sides.
pub fn b2_into_b4() -> AlgebraHom {
    AlgebraHom::new(b2(), b4(), vec![0, 3]).expect("inclusion")
}

/// Identity on B4, the B2 → B4 inclusion, and the PS4 coordinate swap.
pub fn morphisms() -> Vec<(String, AlgebraHom)> {
    vec![
        ("id-B4".to_string(), AlgebraHom::identity(b4())),
        ("id-PS4".to_string(), AlgebraHom::identity(ps4())),
        ("B2-into-B4".to_string(), b2_into_b4()),
        ("PS4-swap".to_string(), ps4_coordinate_swap()),
    ]
}

pub fn by_name(name: &str) -> Option<CylindricOrtholattice> {
    algebras().into_iter().find(|a| a.title() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_validates() {
        for a in algebras() {
            let r = a.validate(false);
            assert!(r.passed(), "{r}");
        }
        for a in boolean_algebras() {
            let r = a.validate(true);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn mol12_is_included() {
        let m = mol12();
        let r = m.validate(false);
        assert!(r.passed(), "{r}");
        assert!(algebras().iter().any(|a| a.title() == "mOL12"));
    }

    #[test]
    fn ps4_layout() {
        let s = ps4_set();
        assert_eq!(s.points, ["00", "01", "10", "11"]);
        assert_eq!(s.members.len(), 16);
        let d = s.algebra.delta(0, 1);
        assert_eq!(s.algebra.name(d), "{00,11}");
    }

    #[test]
    fn swap_is_a_hom_into_the_transpose_only() {
        assert!(ps4_coordinate_swap().validate().unwrap().passed());
        let raw = AlgebraHom::new(ps4(), ps4(), ps4_swap_map()).unwrap();
        let r = raw.validate().unwrap();
        assert!(r.witness("hom.exists").is_some(), "{r}");
    }
}
