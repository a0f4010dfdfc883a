use std::ops::Deref;

use super::lattice::FiniteBoundedLattice;
use crate::error::{Error, Result};
use crate::report::{first_failure, ValidationReport};
use crate::subset::Subset;

/// A bounded lattice with an orthocomplement table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ortholattice {
    lattice: FiniteBoundedLattice,
    ocomp: Vec<usize>,
}

impl Deref for Ortholattice {
    type Target = FiniteBoundedLattice;

    fn deref(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }
}

impl Ortholattice {
    pub fn new(lattice: FiniteBoundedLattice, ocomp: Vec<usize>) -> Result<Self> {
        let n = lattice.len();
        if ocomp.len() != n || ocomp.iter().any(|&x| x >= n) {
            return Err(Error::Structure("orthocomplement is not a total map on the carrier".into()));
        }
        Ok(Ortholattice { lattice, ocomp })
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub(crate) fn lattice_mut(&mut self) -> &mut FiniteBoundedLattice {
        &mut self.lattice
    }

    #[inline]
    pub fn ocomp(&self, a: usize) -> usize {
        self.ocomp[a]
    }

    pub fn ocomp_table(&self) -> &[usize] {
        &self.ocomp
    }

    /// Lattice axioms plus the four orthocomplement conditions.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new("ortholattice");
        self.validate_into(&mut r);
        r
    }

    pub(crate) fn validate_into(&self, r: &mut ValidationReport) {
        self.lattice.validate_into(r);
        let n = self.len();
        let (zero, one) = (self.bottom(), self.top());
        let w = first_failure(0..n, |&a| self.meet(a, self.ocomp(a)) != zero);
        r.record("ortho.meet-zero", w.map(|a| self.label(&[a])));
        let w = first_failure(0..n, |&a| self.join(a, self.ocomp(a)) != one);
        r.record("ortho.join-one", w.map(|a| self.label(&[a])));
        let pairs = (0..n).flat_map(|a| (0..n).map(move |b| [a, b]));
        let w = first_failure(pairs, |&[a, b]| self.leq(a, b) && !self.leq(self.ocomp(b), self.ocomp(a)));
        r.record("ortho.antitone", w.map(|t| self.label(&t)));
        let w = first_failure(0..n, |&a| self.ocomp(self.ocomp(a)) != a);
        r.record("ortho.involution", w.map(|a| self.label(&[a])));
    }

    /// First triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<[usize; 3]> {
        let n = self.len();
        let triples = (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])));
        first_failure(triples, |&[a, b, c]| {
            self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c))
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }
}

/// Checks the five quantifier axioms for `e` on `ol`; axiom ids are
/// prefixed with `label`.
pub fn validate_quantifier(ol: &Ortholattice, e: &[usize], label: &str) -> ValidationReport {
    let mut r = ValidationReport::new(format!("quantifier {label}"));
    quantifier_into(ol, e, label, &mut r);
    r
}

pub(crate) fn quantifier_into(ol: &Ortholattice, e: &[usize], label: &str, r: &mut ValidationReport) {
    let n = ol.len();
    if e.len() != n || e.iter().any(|&x| x >= n) {
        r.record(format!("{label}.total"), Some(vec![format!("map of length {}", e.len())]));
        return;
    }
    let pairs = (0..n).flat_map(|a| (0..n).map(move |b| [a, b]));
    let w = first_failure(pairs, |&[a, b]| e[ol.join(a, b)] != ol.join(e[a], e[b]));
    r.record(format!("{label}.additive"), w.map(|t| ol.label(&t)));
    let zero = ol.bottom();
    r.record(
        format!("{label}.zero"),
        (e[zero] != zero).then(|| ol.label(&[zero])),
    );
    let w = first_failure(0..n, |&a| e[e[a]] != e[a]);
    r.record(format!("{label}.idempotent"), w.map(|a| ol.label(&[a])));
    let w = first_failure(0..n, |&a| !ol.leq(a, e[a]));
    r.record(format!("{label}.extensive"), w.map(|a| ol.label(&[a])));
    let w = first_failure(0..n, |&a| {
        let c = ol.ocomp(e[a]);
        e[c] != c
    });
    r.record(format!("{label}.closed-complement"), w.map(|a| ol.label(&[a])));
}

/// Fixed points of a quantifier. They must form a sub-ortholattice; if they
/// do not, `e` was not a quantifier and a contract error names the failure.
pub fn closed_elements(ol: &Ortholattice, e: &[usize]) -> Result<Subset> {
    let closed: Subset = ol.elements().filter(|&a| e.get(a) == Some(&a)).collect();
    let bad = |what: &str, xs: &[usize]| {
        Err(Error::Contract(format!(
            "closed elements are not a sub-ortholattice: {what} ({})",
            ol.label(xs).join(", ")
        )))
    };
    for c in [ol.bottom(), ol.top()] {
        if !closed.contains(c) {
            return bad("missing bound", &[c]);
        }
    }
    for a in closed.iter() {
        if !closed.contains(ol.ocomp(a)) {
            return bad("not closed under orthocomplement", &[a]);
        }
        for b in closed.iter() {
            if !closed.contains(ol.meet(a, b)) {
                return bad("not closed under meet", &[a, b]);
            }
            if !closed.contains(ol.join(a, b)) {
                return bad("not closed under join", &[a, b]);
            }
        }
    }
    Ok(closed)
}
