use std::collections::BTreeSet;

use crate::algebra::CylindricOrtholattice;
use crate::completion::{certify, CanonicalCompletion, Embedding};
use crate::error::{Error, Limits, Result};
use crate::frames::goldblatt_frame;
use crate::report::ValidationReport;
use crate::subset::{family_order, Relation, Subset};
use crate::topology::UpsetOperators;

use super::objects::{f0, reg_algebra};

/// `⟨φ, REG(F₀(A))⟩` with the embedding, density and compactness
/// certificates, and the Boolean axioms on the target.
pub fn reg_completion_ba(a: &CylindricOrtholattice, limits: &Limits) -> Result<CanonicalCompletion> {
    let x = f0(a, limits)?;
    let alg = reg_algebra(&x.space)?;
    let e = Embedding::new(a.clone(), alg, x.filters, limits)?;
    certify(e, true, limits)
}

/// The biorthogonally closed sets of the Goldblatt frame next to the
/// regular opens of the upset topology of filter inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyComparison {
    pub points: Vec<String>,
    pub bclosed: Vec<Subset>,
    pub regular: Vec<Subset>,
    pub report: ValidationReport,
}

impl FamilyComparison {
    pub fn equal(&self) -> bool {
        self.bclosed == self.regular
    }
}

/// Computes both families on the proper filters of `a`, without any
/// hypothesis on `a`.
pub fn compare_families(a: &CylindricOrtholattice, limits: &Limits) -> Result<FamilyComparison> {
    let g = goldblatt_frame(a);
    let bclosed = g.frame.enumerate_bclosed(limits)?;
    let xs = g.spectrum.members();
    let le = Relation::from_fn(xs.len(), |x, y| xs[x].is_subset(&xs[y]));
    let ops = UpsetOperators::new(&le);
    let mut upsets: BTreeSet<Subset> = BTreeSet::new();
    upsets.insert(Subset::empty());
    let mut frontier = vec![Subset::empty()];
    while let Some(u) = frontier.pop() {
        for x in 0..xs.len() {
            let v = u.union(le.row(x));
            if upsets.insert(v.clone()) {
                limits.guard(upsets.len(), "enumerating upsets")?;
                frontier.push(v);
            }
        }
    }
    let mut regular: Vec<Subset> = upsets.into_iter().filter(|u| &ops.star(&ops.star(u)) == u).collect();
    regular.sort_by(family_order);
    let points = g.frame.points.clone();
    let label = |u: &Subset| g.frame.label(u);
    let mut report = ValidationReport::new(format!("B(F({0})) = REG(F({0}))", a.title()));
    let w = bclosed.iter().find(|u| !regular.contains(u));
    report.record("bclosed-in-reg", w.map(|u| vec![label(u)]));
    let w = regular.iter().find(|u| !bclosed.contains(u));
    report.record("reg-in-bclosed", w.map(|u| vec![label(u)]));
    Ok(FamilyComparison {
        points,
        bclosed,
        regular,
        report,
    })
}

/// The coincidence check for distributive algebras. Non-distributive
/// inputs are refused.
pub fn check_coincidence(a: &CylindricOrtholattice, limits: &Limits) -> Result<FamilyComparison> {
    if let Some(t) = a.distributivity_witness() {
        return Err(Error::Contract(format!(
            "{} is not distributive: ({})",
            a.title(),
            a.label(&t).join(", ")
        )));
    }
    compare_families(a, limits)
}
