use std::collections::BTreeSet;

use crate::algebra::dim_label;
use crate::filters::enumerate_proper_filters;
use crate::report::{first_failure, ValidationReport};
use crate::subset::{Relation, Subset};

use super::space::{family_lattice, FiniteSpace};
use super::uvo::delta_co_into;

fn equivalence_witness(rel: &Relation) -> Option<Vec<usize>> {
    let n = rel.size();
    if let Some(x) = (0..n).find(|&x| !rel.contains(x, x)) {
        return Some(vec![x]);
    }
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    if let Some((x, y)) = pairs().find(|&(x, y)| rel.contains(x, y) && !rel.contains(y, x)) {
        return Some(vec![x, y]);
    }
    pairs()
        .filter(|&(x, y)| rel.contains(x, y))
        .find_map(|(x, y)| rel.row(y).difference(rel.row(x)).first().map(|z| vec![x, y, z]))
}

/// Conditions of a cylindric UV-space: T0, `COREG` closed under `∩` and
/// `*` and a basis, every proper filter of `COREG` realized by a point,
/// then the relational conditions on `Sᵢ` and `Δᵢₖ`.
pub fn validate_uv(x: &FiniteSpace) -> ValidationReport {
    let mut r = ValidationReport::new(format!("{} UV", x.name));
    let n = x.len();
    let m = x.dims();
    let pt = |p: usize| x.points[p].clone();
    let pts = |ps: &[usize]| ps.iter().map(|&p| pt(p)).collect::<Vec<_>>();
    let ops = x.upset_operators();
    let fam = x.families();
    let coreg = &fam.coreg;
    let in_coreg = |u: &Subset| coreg.contains(u);

    r.record("T0", x.t0_witness().map(|(p, q)| vec![pt(p), pt(q)]));
    let w = coreg
        .iter()
        .flat_map(|u| coreg.iter().map(move |v| (u, v)))
        .find(|(u, v)| !in_coreg(&u.intersection(v)));
    r.record("COREG.meet-closed", w.map(|(u, v)| vec![x.label(u), x.label(v)]));
    let w = coreg.iter().find(|u| !in_coreg(&ops.star(u)));
    r.record("COREG.star-closed", w.map(|u| vec![x.label(u)]));
    x.basis_into(&mut r, "COREG.basis", coreg);
    match family_lattice(&x.points, coreg) {
        Ok(l) => {
            let nbhd: Vec<Subset> = (0..n).map(|p| x.neighbourhoods(coreg, p)).collect();
            let spectrum = enumerate_proper_filters(&l);
            let w = spectrum.filters.iter().find(|f| !nbhd.contains(&f.members));
            r.record("COREG.filters-realized", w.map(|f| vec![format!("↑{}", l.name(f.generator))]));
        }
        Err(e) => r.record("COREG.filters-realized", Some(vec![e.to_string()])),
    }

    for (i, s) in x.rels.iter().enumerate() {
        r.record(format!("S{i}.equivalence"), equivalence_witness(s).map(|w| pts(&w)));
    }
    let dim_pairs = || (0..m).flat_map(move |i| (0..m).map(move |k| (i, k)));
    let w = dim_pairs().filter(|&(i, k)| i < k).find_map(|(i, k)| {
        let ik = x.rels[i].then(&x.rels[k]);
        let ki = x.rels[k].then(&x.rels[i]);
        (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .find(|&(p, q)| ik.contains(p, q) != ki.contains(p, q))
            .map(|(p, q)| vec![dim_label(i), dim_label(k), pt(p), pt(q)])
    });
    r.record("S.commute", w);

    let dl = |i: usize, k: usize| vec![dim_label(i), dim_label(k)];
    let d = &x.deltas;
    let w = first_failure(dim_pairs(), |&(i, k)| ops.star(&ops.star(&d[i][k])) != d[i][k]);
    r.record("delta.regular", w.map(|(i, k)| dl(i, k)));
    let w = first_failure(dim_pairs(), |&(i, k)| d[i][k] != d[k][i]);
    r.record("delta.symmetric", w.map(|(i, k)| dl(i, k)));
    let w = first_failure(0..m, |&i| d[i][i] != x.full());
    r.record("delta.unit", w.map(|i| vec![dim_label(i)]));
    let triples = (0..m).flat_map(|i| (0..m).flat_map(move |k| (0..m).map(move |l| (i, k, l))));
    let w = first_failure(triples, |&(i, k, l)| {
        i != k && l != k && x.rels[k].image(&d[i][k].intersection(&d[k][l])) != d[i][l]
    });
    r.record(
        "delta.composition",
        w.map(|(i, k, l)| vec![dim_label(i), dim_label(k), dim_label(l)]),
    );
    let w = dim_pairs().filter(|&(i, k)| i != k).find_map(|(i, k)| {
        let s = &x.rels[i];
        coreg
            .iter()
            .find(|u| {
                s.image(&d[i][k].intersection(u))
                    .intersects(&s.image(&d[i][k].intersection(&ops.star(u))))
            })
            .map(|u| vec![dim_label(i), dim_label(k), x.label(u)])
    });
    r.record("delta.disjoint", w);

    for (i, s) in x.rels.iter().enumerate() {
        let w = coreg.iter().find(|u| !in_coreg(&s.image(u)));
        r.record(format!("S{i}.image-in-COREG"), w.map(|u| vec![x.label(u)]));
        let images: Vec<BTreeSet<Subset>> = (0..n)
            .map(|p| coreg.iter().filter(|u| u.contains(p)).map(|u| s.image(u)).collect())
            .collect();
        let w = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .find(|&(p, q)| !s.contains(p, q) && images[p] == images[q]);
        r.record(format!("S{i}.separation"), w.map(|(p, q)| vec![pt(p), pt(q)]));
    }
    delta_co_into(x, &mut r, &fam.co);
    r
}
