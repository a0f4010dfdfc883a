use crate::algebra::{dim_label, set_label, AlgebraHom, SetAlgebra};
use crate::error::{Error, Limits, Result};
use crate::report::{first_failure, Certificate, ValidationReport};
use crate::subset::Subset;
use crate::topology::FiniteSpace;

use super::objects::{dual_algebra, dual_space, psi_filter, representation, DualSpace, Track};

/// A total map between the points of two spaces. Whether it is a UVO- or
/// UV-map is decided by the validators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub map: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::Structure("point map is not a total map into the target".into()));
        }
        Ok(SpaceMap { source, target, map })
    }

    pub fn identity(x: FiniteSpace) -> Self {
        let map = (0..x.len()).collect();
        SpaceMap {
            target: x.clone(),
            source: x,
            map,
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `f⁻¹[U]` for `U` a set of target points.
    pub fn preimage(&self, u: &Subset) -> Subset {
        u.preimage(&self.map)
    }

    fn table(&self) -> Vec<(String, String)> {
        (0..self.source.len())
            .map(|x| (self.source.points[x].clone(), self.target.points[self.map[x]].clone()))
            .collect()
    }

    fn common_into(&self, r: &mut ValidationReport) -> bool {
        let (x, y) = (&self.source, &self.target);
        if x.dims() != y.dims() {
            r.record("dims", Some(vec![x.dims().to_string(), y.dims().to_string()]));
            return false;
        }
        let co = x.compact_opens();
        let w = y.compact_opens().into_iter().find(|u| !co.contains(&self.preimage(u)));
        r.record("spectral", w.map(|u| vec![y.label(&u)]));
        true
    }

    fn relations_into(&self, r: &mut ValidationReport, family: &[Subset], letter: &str) {
        let (x, y) = (&self.source, &self.target);
        for i in 0..x.dims() {
            let w = family
                .iter()
                .find(|u| x.rels[i].image(&self.preimage(u)) != self.preimage(&y.rels[i].image(u)));
            r.record(format!("{letter}{i}.commute"), w.map(|u| vec![y.label(u)]));
        }
        let m = x.dims();
        let w = (0..m)
            .flat_map(|i| (0..m).map(move |k| (i, k)))
            .find(|&(i, k)| self.preimage(&y.deltas[i][k]) != x.deltas[i][k]);
        r.record("delta", w.map(|(i, k)| vec![dim_label(i), dim_label(k)]));
    }
}

/// Spectral, preserves non-orthogonality, the back condition
/// `z ⊥̸ f(y) ⇒ ∃x. x ⊥̸ y ∧ z ⩽ f(x)`, commutes with each `Rᵢ` on
/// `COB(X′)`, and pulls the diagonals back. Also checks that preimages of
/// `COB(X′)` lie in `COB(X)`.
pub fn validate_uvo_map(f: &SpaceMap) -> ValidationReport {
    let (x, y) = (&f.source, &f.target);
    let mut r = ValidationReport::new(format!("{} -> {} UVO-map", x.name, y.name));
    let (Some(px), Some(py)) = (&x.perp, &y.perp) else {
        r.record("perp.present", Some(vec!["both spaces need an orthogonality relation".into()]));
        return r;
    };
    if !f.common_into(&mut r) {
        return r;
    }
    let (n, n2) = (x.len(), y.len());
    let w = first_failure((0..n).flat_map(|a| (0..n).map(move |b| (a, b))), |&(a, b)| {
        !px.contains(a, b) && py.contains(f.map[a], f.map[b])
    });
    r.record("perp.preserved", w.map(|(a, b)| vec![x.points[a].clone(), x.points[b].clone()]));
    let le = y.specialization_order();
    let w = first_failure((0..n2).flat_map(|z| (0..n).map(move |b| (z, b))), |&(z, b)| {
        !py.contains(z, f.map[b]) && !(0..n).any(|a| !px.contains(a, b) && le.contains(z, f.map[a]))
    });
    r.record("perp.back", w.map(|(z, b)| vec![y.points[z].clone(), x.points[b].clone()]));
    let cob_y = y.families().cob.unwrap_or_default();
    f.relations_into(&mut r, &cob_y, "R");
    let cob_x = x.families().cob.unwrap_or_default();
    let w = cob_y.iter().find(|u| !cob_x.contains(&f.preimage(u)));
    r.record("COB.preimage", w.map(|u| vec![y.label(u)]));
    r
}

/// Spectral, lifts `f(x) ⩽′ y′` to some `y ⩾ x` with `f(y) = y′`,
/// commutes with each `Sᵢ` on `COREG(X′)`, and pulls the diagonals back.
/// Also checks that preimages of `COREG(X′)` lie in `COREG(X)`.
pub fn validate_uv_map(f: &SpaceMap) -> ValidationReport {
    let (x, y) = (&f.source, &f.target);
    let mut r = ValidationReport::new(format!("{} -> {} UV-map", x.name, y.name));
    if !f.common_into(&mut r) {
        return r;
    }
    let (le_x, le_y) = (x.specialization_order(), y.specialization_order());
    let w = first_failure((0..x.len()).flat_map(|a| (0..y.len()).map(move |q| (a, q))), |&(a, q)| {
        le_y.contains(f.map[a], q) && !le_x.row(a).iter().any(|b| f.map[b] == q)
    });
    r.record("lift", w.map(|(a, q)| vec![x.points[a].clone(), y.points[q].clone()]));
    let coreg_y = y.families().coreg;
    f.relations_into(&mut r, &coreg_y, "S");
    let coreg_x = x.families().coreg;
    let w = coreg_y.iter().find(|u| !coreg_x.contains(&f.preimage(u)));
    r.record("COREG.preimage", w.map(|u| vec![y.label(u)]));
    r
}

pub fn validate_space_map(f: &SpaceMap, track: Track) -> ValidationReport {
    match track {
        Track::Ortho => validate_uvo_map(f),
        Track::Boolean => validate_uv_map(f),
    }
}

/// `x ↦ h⁻¹[x]` between given dual spaces of the target and source of `h`.
pub fn preimage_map(h: &AlgebraHom, of_target: &DualSpace, of_source: &DualSpace) -> Result<SpaceMap> {
    let map = of_target
        .filters
        .iter()
        .map(|x| {
            let pre = x.preimage(&h.map);
            of_source.point_of(&pre).ok_or_else(|| {
                Error::Contract(format!(
                    "the preimage {} of a filter is not a proper filter, so the map is not a homomorphism",
                    set_label(h.source.names(), &pre)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::new(of_target.space.clone(), of_source.space.clone(), map)
}

/// `S₁(h) = h⁻¹` (or `F₁(h)`), from the dual of the target to the dual of
/// the source.
pub fn dual_of_hom(h: &AlgebraHom, track: Track, limits: &Limits) -> Result<SpaceMap> {
    let xt = dual_space(&h.target, track, limits)?;
    let xs = dual_space(&h.source, track, limits)?;
    preimage_map(h, &xt, &xs)
}

/// `U ↦ f⁻¹[U]` between given dual algebras of the target and source of `f`.
pub fn preimage_hom(f: &SpaceMap, of_target: &SetAlgebra, of_source: &SetAlgebra) -> Result<AlgebraHom> {
    let map = of_target
        .members
        .iter()
        .map(|u| {
            let pre = f.preimage(u);
            of_source.index_of(&pre).ok_or_else(|| {
                Error::Contract(format!(
                    "the preimage {} is not in {}",
                    f.source.label(&pre),
                    of_source.algebra.title()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraHom::new(of_target.algebra.clone(), of_source.algebra.clone(), map)
}

/// `A₁(f) = f⁻¹` (or `G₁(f)`).
pub fn dual_of_map(f: &SpaceMap, track: Track) -> Result<AlgebraHom> {
    let at = dual_algebra(&f.target, track)?;
    let as_ = dual_algebra(&f.source, track)?;
    preimage_hom(f, &at, &as_)
}

fn dual_hom_report(h: &AlgebraHom) -> ValidationReport {
    h.validate().unwrap_or_else(|e| {
        let mut r = ValidationReport::new("homomorphism");
        r.record("dims", Some(vec![e.to_string()]));
        r
    })
}

/// For a homomorphism `h: A → A′`: validates `h`, `S₁(h)` and
/// `A₁(S₁(h))`, and checks `φ′ ∘ h = A₁(S₁(h)) ∘ φ` pointwise.
pub fn verify_hom_square(h: &AlgebraHom, track: Track, limits: &Limits) -> Result<Certificate> {
    let (a, b) = (&h.source, &h.target);
    let (xa, ea) = representation(a, track, limits)?;
    let (xb, eb) = representation(b, track, limits)?;
    let s1 = preimage_map(h, &xb, &xa)?;
    let a1 = preimage_hom(&s1, &ea.target, &eb.target)?;
    let mut report = ValidationReport::new(format!("{} -> {} square", a.title(), b.title()));
    report.absorb("h", dual_hom_report(h));
    report.absorb("S1", validate_space_map(&s1, track));
    report.absorb("A1S1", dual_hom_report(&a1));
    let w = first_failure(a.elements(), |&c| eb.map[h.map[c]] != a1.map[ea.map[c]]);
    report.record("square.phi", w.map(|c| vec![a.name(c).to_string()]));
    let table = a
        .elements()
        .map(|c| (a.name(c).to_string(), eb.target.algebra.name(eb.map[h.map[c]]).to_string()))
        .collect();
    Ok(Certificate {
        name: "φ′∘h".into(),
        table,
        report,
    })
}

/// For a space map `f: X → X′`: validates `f`, `A₁(f)` and `S₁(A₁(f))`,
/// and checks `ψ′ ∘ f = S₁(A₁(f)) ∘ ψ` pointwise.
pub fn verify_map_square(f: &SpaceMap, track: Track, limits: &Limits) -> Result<Certificate> {
    let (x, y) = (&f.source, &f.target);
    let ax = dual_algebra(x, track)?;
    let ay = dual_algebra(y, track)?;
    let a1 = preimage_hom(f, &ay, &ax)?;
    let sx = dual_space(&ax.algebra, track, limits)?;
    let sy = dual_space(&ay.algebra, track, limits)?;
    let s1 = preimage_map(&a1, &sx, &sy)?;
    let psi = |alg: &SetAlgebra, s: &DualSpace, p: usize| s.point_of(&psi_filter(alg, p));
    let mut report = ValidationReport::new(format!("{} -> {} square", x.name, y.name));
    report.absorb("f", validate_space_map(f, track));
    report.absorb("A1", dual_hom_report(&a1));
    report.absorb("S1A1", validate_space_map(&s1, track));
    let w = first_failure(0..x.len(), |&p| {
        let lhs = psi(&ay, &sy, f.map[p]);
        let rhs = psi(&ax, &sx, p).map(|q| s1.map[q]);
        lhs.is_none() || lhs != rhs
    });
    report.record("square.psi", w.map(|p| vec![x.points[p].clone()]));
    Ok(Certificate {
        name: "f".into(),
        table: f.table(),
        report,
    })
}

/// Both squares for `h`: the algebra square, and the space square for
/// `f = S₁(h)`.
pub fn verify_commuting_squares(h: &AlgebraHom, track: Track, limits: &Limits) -> Result<Certificate> {
    let mut c = verify_hom_square(h, track, limits)?;
    let f = dual_of_hom(h, track, limits)?;
    let d = verify_map_square(&f, track, limits)?;
    c.report.absorb("dual", d.report);
    Ok(c)
}

/// Transports a homomorphism `h` along the representations: the map
/// `φ(a) ↦ φ′(h(a))` between the dual algebras.
pub fn transported(h: &AlgebraHom, track: Track, limits: &Limits) -> Result<AlgebraHom> {
    let (_, ea) = representation(&h.source, track, limits)?;
    let (_, eb) = representation(&h.target, track, limits)?;
    let mut map = vec![0; ea.target.algebra.len()];
    for c in h.source.elements() {
        map[ea.map[c]] = eb.map[h.map[c]];
    }
    AlgebraHom::new(ea.target.algebra.clone(), eb.target.algebra.clone(), map)
}

