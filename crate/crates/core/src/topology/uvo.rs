use crate::algebra::dim_label;
use crate::filters::enumerate_proper_filters;
use crate::report::{first_failure, ValidationReport};
use crate::subset::Subset;

use super::space::{family_lattice, FiniteSpace};

/// Conditions of a cylindric UVO-space: the frame axioms, T0, `COB` a basis
/// closed under `∩` and `^⊥`, every proper filter of `COB` realized by a
/// point, separation of orthogonal points, `Rᵢ[U] ∈ COB`, the `x R̄ᵢ y`
/// witness condition, and `Δᵢₖ ∈ CO`.
pub fn validate_uvo(x: &FiniteSpace) -> ValidationReport {
    let mut r = ValidationReport::new(format!("{} UVO", x.name));
    let Some(frame) = x.frame() else {
        r.record("perp.present", Some(vec!["no orthogonality relation".into()]));
        return r;
    };
    let pt = |p: usize| x.points[p].clone();
    let n = x.len();
    let pairs = || (0..n).flat_map(move |p| (0..n).map(move |q| (p, q)));

    r.absorb("frame", frame.validate());
    r.record("T0", x.t0_witness().map(|(p, q)| vec![pt(p), pt(q)]));
    let fam = x.families();
    let cob = fam.cob.unwrap_or_default();
    let in_cob = |u: &Subset| cob.contains(u);

    x.basis_into(&mut r, "COB.basis", &cob);
    let w = cob
        .iter()
        .flat_map(|u| cob.iter().map(move |v| (u, v)))
        .find(|(u, v)| !in_cob(&u.intersection(v)));
    r.record("COB.meet-closed", w.map(|(u, v)| vec![x.label(u), x.label(v)]));
    let w = cob.iter().find(|u| !in_cob(&frame.perp_set(u)));
    r.record("COB.perp-closed", w.map(|u| vec![x.label(u)]));

    match family_lattice(&x.points, &cob) {
        Ok(l) => {
            let nbhd: Vec<Subset> = (0..n).map(|p| x.neighbourhoods(&cob, p)).collect();
            let spectrum = enumerate_proper_filters(&l);
            let w = spectrum.filters.iter().find(|f| !nbhd.contains(&f.members));
            r.record("COB.filters-realized", w.map(|f| vec![format!("↑{}", l.name(f.generator))]));
        }
        Err(e) => r.record("COB.filters-realized", Some(vec![e.to_string()])),
    }

    let w = first_failure(pairs(), |&(p, q)| {
        frame.perp.contains(p, q) && !cob.iter().any(|u| u.contains(p) && frame.perp_set(u).contains(q))
    });
    r.record("separation", w.map(|(p, q)| vec![pt(p), pt(q)]));

    for (i, rel) in x.rels.iter().enumerate() {
        let w = cob.iter().find(|u| !in_cob(&rel.image(u)));
        r.record(format!("R{i}.image-in-COB"), w.map(|u| vec![x.label(u)]));
        let w = first_failure(pairs(), |&(p, q)| {
            !rel.contains(p, q)
                && !cob.iter().filter(|v| v.contains(p)).any(|v| {
                    let u = frame.exists(i, v);
                    in_cob(&u) && !u.contains(q)
                })
        });
        r.record(format!("R{i}.witness"), w.map(|(p, q)| vec![pt(p), pt(q)]));
    }
    delta_co_into(x, &mut r, &fam.co);
    r
}

pub(crate) fn delta_co_into(x: &FiniteSpace, r: &mut ValidationReport, co: &[Subset]) {
    let m = x.dims();
    let w = (0..m)
        .flat_map(|i| (0..m).map(move |k| (i, k)))
        .find(|&(i, k)| !co.contains(&x.deltas[i][k]));
    r.record("delta.CO", w.map(|(i, k)| vec![dim_label(i), dim_label(k)]));
}
