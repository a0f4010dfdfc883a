use crate::algebra::{build_set_algebra, dim_label, CylindricOrtholattice, FamilyOps, SetAlgebra};
use crate::completion::Embedding;
use crate::error::{Error, Limits, Result};
use crate::filters::enumerate_proper_filters;
use crate::frames::goldblatt_frame;
use crate::report::{first_failure, Certificate, ValidationReport};
use crate::subset::{Relation, Subset};
use crate::topology::{validate_uv, validate_uvo, FiniteSpace};

/// Which duality: ortholattices with UVO-spaces (`S₀`/`A₀`), or Boolean
/// algebras with UV-spaces (`F₀`/`G₀`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Track {
    Ortho,
    Boolean,
}

/// A space whose points are the proper filters of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSpace {
    pub space: FiniteSpace,
    /// Members of the filter each point stands for, sorted.
    pub filters: Vec<Subset>,
}

impl DualSpace {
    pub fn point_of(&self, filter: &Subset) -> Option<usize> {
        self.filters.binary_search(filter).ok()
    }

    /// `φ(a) = {x : a ∈ x}`.
    pub fn phi(&self, a: usize) -> Subset {
        (0..self.filters.len()).filter(|&x| self.filters[x].contains(a)).collect()
    }
}

/// The spectrum of proper filters with the Goldblatt frame structure and
/// the topology generated by `{φ(a)}`.
pub fn s0(a: &CylindricOrtholattice, limits: &Limits) -> Result<DualSpace> {
    let g = goldblatt_frame(a);
    let filters = g.spectrum.members();
    let basis = a.elements().map(|b| g.phi(b)).collect();
    let space = FiniteSpace::from_basis(format!("S0({})", a.title()), g.frame.points, basis, limits)?
        .with_perp(g.frame.perp)?
        .with_relations(g.frame.rels, g.frame.deltas)?;
    Ok(DualSpace { space, filters })
}

/// The algebra of compact open biorthogonally closed sets.
pub fn a0(x: &FiniteSpace) -> Result<SetAlgebra> {
    let frame = x
        .frame()
        .ok_or_else(|| Error::Contract(format!("{} has no orthogonality relation", x.name)))?;
    let cob = x.families().cob.unwrap_or_default();
    let join = |u: &Subset, v: &Subset| frame.biclosure(&u.union(v));
    let ocomp = |u: &Subset| frame.perp_set(u);
    let exists = |i: usize, u: &Subset| frame.exists(i, u);
    build_set_algebra(
        &format!("A0({})", x.name),
        &x.points,
        cob,
        FamilyOps {
            join: &join,
            ocomp: &ocomp,
            exists: &exists,
            deltas: &x.deltas,
        },
    )
}

/// The spectrum of a cylindric Boolean algebra with `x Sᵢ y` iff
/// `∃ᵢ[x] = ∃ᵢ[y]`. Refuses algebras that fail the Boolean axioms.
pub fn f0(a: &CylindricOrtholattice, limits: &Limits) -> Result<DualSpace> {
    let report = a.validate(true);
    if let Some(v) = report.failures().next() {
        return Err(Error::Contract(format!(
            "{} is not a cylindric Boolean algebra: {} fails",
            a.title(),
            v.axiom
        )));
    }
    let spectrum = enumerate_proper_filters(a);
    let filters = spectrum.members();
    let n = filters.len();
    let rels = (0..a.dims())
        .map(|i| {
            let images: Vec<Subset> = filters.iter().map(|x| x.map(|b| a.exists(i, b))).collect();
            Relation::from_fn(n, |x, y| images[x] == images[y])
        })
        .collect();
    let deltas = (0..a.dims())
        .map(|i| (0..a.dims()).map(|k| spectrum.containing(a.delta(i, k))).collect())
        .collect();
    let basis = a.elements().map(|b| spectrum.containing(b)).collect();
    let space = FiniteSpace::from_basis(format!("F0({})", a.title()), spectrum.names(a), basis, limits)?
        .with_relations(rels, deltas)?;
    Ok(DualSpace { space, filters })
}

fn regular_algebra(x: &FiniteSpace, name: String, family: Vec<Subset>) -> Result<SetAlgebra> {
    let ops = x.upset_operators();
    let join = |u: &Subset, v: &Subset| ops.interior(&ops.closure(&u.union(v)));
    let ocomp = |u: &Subset| ops.star(u);
    let exists = |i: usize, u: &Subset| x.rels[i].image(u);
    build_set_algebra(
        &name,
        &x.points,
        family,
        FamilyOps {
            join: &join,
            ocomp: &ocomp,
            exists: &exists,
            deltas: &x.deltas,
        },
    )
}

/// The algebra of compact open regular open sets, with join
/// `Int(Cl(U ∪ V))`, complement `U*` and `∃ᵢU = Sᵢ[U]`.
pub fn g0(x: &FiniteSpace) -> Result<SetAlgebra> {
    regular_algebra(x, format!("G0({})", x.name), x.families().coreg)
}

/// All regular opens of a space, with the `G₀` operations.
pub fn reg_algebra(x: &FiniteSpace) -> Result<SetAlgebra> {
    regular_algebra(x, format!("REG({})", x.name), x.regular_opens())
}

pub fn dual_space(a: &CylindricOrtholattice, track: Track, limits: &Limits) -> Result<DualSpace> {
    match track {
        Track::Ortho => s0(a, limits),
        Track::Boolean => f0(a, limits),
    }
}

pub fn dual_algebra(x: &FiniteSpace, track: Track) -> Result<SetAlgebra> {
    match track {
        Track::Ortho => a0(x),
        Track::Boolean => g0(x),
    }
}

pub fn validate_space(x: &FiniteSpace, track: Track) -> ValidationReport {
    match track {
        Track::Ortho => validate_uvo(x),
        Track::Boolean => validate_uv(x),
    }
}

/// `φ: A → A₀(S₀(A))` (or `G₀(F₀(A))`) as an embedding, together with the
/// dual space it was built on.
pub fn representation(a: &CylindricOrtholattice, track: Track, limits: &Limits) -> Result<(DualSpace, Embedding)> {
    let x = dual_space(a, track, limits)?;
    let alg = dual_algebra(&x.space, track)?;
    let e = Embedding::new(a.clone(), alg, x.filters.clone(), limits)?;
    Ok((x, e))
}

/// Certifies that `φ` is a bijective homomorphism onto the dual algebra.
pub fn verify_representation(a: &CylindricOrtholattice, track: Track, limits: &Limits) -> Result<Certificate> {
    let (_, e) = representation(a, track, limits)?;
    let mut report = ValidationReport::new(format!("representation of {}", a.title()));
    report.absorb("", e.verify_embedding()?);
    let mut image = e.map.clone();
    image.sort();
    image.dedup();
    let missing = e.target.algebra.elements().find(|u| image.binary_search(u).is_err());
    report.record("phi.surjective", missing.map(|u| vec![e.target.algebra.name(u).to_string()]));
    if track == Track::Boolean {
        let t = &e.target;
        let x_rels = dual_space(a, track, limits)?.space.rels;
        let w = (0..a.dims())
            .flat_map(|i| a.elements().map(move |b| (i, b)))
            .find(|&(i, b)| t.member(e.map[a.exists(i, b)]) != &x_rels[i].image(t.member(e.map[b])));
        report.record("phi.S-image", w.map(|(i, b)| vec![dim_label(i), a.name(b).to_string()]));
    }
    let table = a
        .elements()
        .map(|b| (a.name(b).to_string(), e.target.algebra.name(e.map[b]).to_string()))
        .collect();
    Ok(Certificate {
        name: "φ".into(),
        table,
        report,
    })
}

pub fn verify_representation_ol(a: &CylindricOrtholattice, limits: &Limits) -> Result<Certificate> {
    verify_representation(a, Track::Ortho, limits)
}

pub fn verify_representation_ba(a: &CylindricOrtholattice, limits: &Limits) -> Result<Certificate> {
    verify_representation(a, Track::Boolean, limits)
}

/// `ψ(x)`: the indices of the dual-algebra members containing `x`.
pub(crate) fn psi_filter(alg: &SetAlgebra, x: usize) -> Subset {
    (0..alg.members.len()).filter(|&u| alg.members[u].contains(x)).collect()
}

/// Certifies `ψ: X → S₀(A₀(X))` (or `F₀(G₀(X))`) as a relational
/// homeomorphism.
pub fn verify_realization(x: &FiniteSpace, track: Track, limits: &Limits) -> Result<Certificate> {
    let alg = dual_algebra(x, track)?;
    let y = dual_space(&alg.algebra, track, limits)?;
    let n = x.len();
    let pt = |p: usize| x.points[p].clone();
    let mut report = ValidationReport::new(format!("realization of {}", x.name));
    let psi: Vec<Option<usize>> = (0..n).map(|p| y.point_of(&psi_filter(&alg, p))).collect();
    let w = first_failure(0..n, |&p| psi[p].is_none());
    report.record("psi.total", w.map(|p| vec![pt(p)]));
    if w.is_some() {
        return Ok(Certificate {
            name: "ψ".into(),
            table: Vec::new(),
            report,
        });
    }
    let psi: Vec<usize> = psi.into_iter().map(Option::unwrap).collect();
    let pairs = || (0..n).flat_map(move |p| (0..n).map(move |q| (p, q)));
    let w = first_failure(pairs(), |&(p, q)| p < q && psi[p] == psi[q]);
    report.record("psi.injective", w.map(|(p, q)| vec![pt(p), pt(q)]));
    let image: Subset = psi.iter().copied().collect();
    let w = (0..y.space.len()).find(|&q| !image.contains(q));
    report.record("psi.surjective", w.map(|q| vec![y.space.points[q].clone()]));
    let w = x.opens().iter().find(|u| !y.space.is_open(&u.map(|p| psi[p])));
    report.record("psi.open", w.map(|u| vec![x.label(u)]));
    let w = y.space.opens().iter().find(|v| !x.is_open(&v.preimage(&psi)));
    report.record("psi.continuous", w.map(|v| vec![y.space.label(v)]));
    if let (Some(p1), Some(p2)) = (&x.perp, &y.space.perp) {
        let w = first_failure(pairs(), |&(p, q)| p1.contains(p, q) != p2.contains(psi[p], psi[q]));
        report.record("psi.perp", w.map(|(p, q)| vec![pt(p), pt(q)]));
    }
    for i in 0..x.dims() {
        let (r1, r2) = (&x.rels[i], &y.space.rels[i]);
        let w = first_failure(pairs(), |&(p, q)| r1.contains(p, q) != r2.contains(psi[p], psi[q]));
        report.record(format!("psi.rel{i}"), w.map(|(p, q)| vec![pt(p), pt(q)]));
    }
    let m = x.dims();
    let w = (0..m)
        .flat_map(|i| (0..m).map(move |k| (i, k)))
        .find(|&(i, k)| y.space.deltas[i][k].preimage(&psi) != x.deltas[i][k]);
    report.record("psi.delta", w.map(|(i, k)| vec![dim_label(i), dim_label(k)]));
    let table = (0..n).map(|p| (pt(p), y.space.points[psi[p]].clone())).collect();
    Ok(Certificate {
        name: "ψ".into(),
        table,
        report,
    })
}

pub fn verify_realization_ol(x: &FiniteSpace, limits: &Limits) -> Result<Certificate> {
    verify_realization(x, Track::Ortho, limits)
}

pub fn verify_realization_ba(x: &FiniteSpace, limits: &Limits) -> Result<Certificate> {
    verify_realization(x, Track::Boolean, limits)
}
