//! Graphviz output. Node ids are carrier indices, so the text depends only
//! on the structure.

use std::fmt::Write;

use crate::algebra::CylindricOrtholattice;
use crate::frames::CylindricOrthoFrame;
use crate::subset::Relation;

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn nodes(out: &mut String, names: &[String]) {
    for (i, n) in names.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(n));
    }
}

/// Hasse diagram, bottom to top.
pub fn algebra_dot(a: &CylindricOrtholattice) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=ellipse];\n  edge [arrowhead=none];\n", quote(a.title()));
    nodes(&mut out, a.names());
    for (x, y) in a.covers() {
        let _ = writeln!(out, "  n{x} -> n{y};");
    }
    out.push_str("}\n");
    out
}

/// Points, dashed undirected `⊥` edges, `Rᵢ` edges labelled by dimension
/// (loops omitted) and one cluster per off-diagonal `Δᵢₖ` with `i < k`.
pub fn frame_dot(name: &str, f: &CylindricOrthoFrame) -> String {
    let mut out = format!("digraph {} {{\n  node [shape=circle];\n", quote(name));
    nodes(&mut out, &f.points);
    for (x, y) in f.perp.pairs().filter(|&(x, y)| x < y) {
        let _ = writeln!(out, "  n{x} -> n{y} [style=dashed, dir=none, label=\"⊥\"];");
    }
    for (i, r) in f.rels.iter().enumerate() {
        for (x, y) in r.pairs().filter(|&(x, y)| x != y) {
            let _ = writeln!(out, "  n{x} -> n{y} [label={}];", quote(&format!("R{i}")));
        }
    }
    let m = f.dims();
    for i in 0..m {
        for k in i + 1..m {
            let _ = writeln!(out, "  subgraph cluster_delta_{i}_{k} {{");
            let _ = writeln!(out, "    label={};", quote(&format!("Δ{i}{k}")));
            out.push_str("    style=dotted;\n");
            for x in f.deltas[i][k].iter() {
                let _ = writeln!(out, "    n{x};");
            }
            out.push_str("  }\n");
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a preorder given as a relation on named points, with
/// equivalent points left unmerged.
pub fn order_dot(name: &str, points: &[String], le: &Relation) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  edge [arrowhead=none];\n", quote(name));
    nodes(&mut out, points);
    let n = points.len();
    let lt = |x: usize, y: usize| x != y && le.contains(x, y) && !le.contains(y, x);
    for x in 0..n {
        for y in 0..n {
            if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                let _ = writeln!(out, "  n{x} -> n{y};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::frames::goldblatt_frame;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    fn node_count(s: &str) -> usize {
        s.lines().filter(|l| l.contains("[label=") && !l.contains(" -> ")).count()
    }

    #[test]
    fn b4_is_a_diamond() {
        let d = algebra_dot(&catalog::b4());
        assert_eq!(node_count(&d), 4);
        assert_eq!(count(&d, " -> "), 4);
        assert!(d.contains("rankdir=BT"));
    }

    #[test]
    fn goldblatt_frame_of_b4_has_one_perp_edge() {
        let g = goldblatt_frame(&catalog::b4());
        let d = frame_dot("X_B4", &g.frame);
        assert_eq!(node_count(&d), 3);
        assert_eq!(count(&d, "style=dashed"), 1);
    }
}
