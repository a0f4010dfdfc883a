use std::ops::Deref;

use super::ortho::{quantifier_into, Ortholattice};
use crate::error::{Error, Result};
use crate::report::{first_failure, ValidationReport};

/// An ortholattice with quantifiers `∃ᵢ` and diagonal constants `δᵢₖ` for
/// each dimension `i` in `0..dims`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricOrtholattice {
    name: String,
    ol: Ortholattice,
    exists: Vec<Vec<usize>>,
    delta: Vec<Vec<usize>>,
}

impl Deref for CylindricOrtholattice {
    type Target = Ortholattice;

    fn deref(&self) -> &Ortholattice {
        &self.ol
    }
}

pub(crate) fn dim_label(i: usize) -> String {
    format!("#{i}")
}

impl CylindricOrtholattice {
    /// `exists[i]` is the table of `∃ᵢ`; `delta[i][k]` the element `δᵢₖ`.
    pub fn new(
        name: impl Into<String>,
        ol: Ortholattice,
        exists: Vec<Vec<usize>>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = ol.len();
        let m = exists.len();
        if exists.iter().any(|e| e.len() != n || e.iter().any(|&x| x >= n)) {
            return Err(Error::Structure("a quantifier is not a total map on the carrier".into()));
        }
        if delta.len() != m || delta.iter().any(|row| row.len() != m || row.iter().any(|&x| x >= n)) {
            return Err(Error::Structure(format!("diagonal table must be {m}x{m} over the carrier")));
        }
        Ok(CylindricOrtholattice {
            name: name.into(),
            ol,
            exists,
            delta,
        })
    }

    /// No dimensions: a plain ortholattice.
    pub fn plain(name: impl Into<String>, ol: Ortholattice) -> Self {
        CylindricOrtholattice {
            name: name.into(),
            ol,
            exists: Vec::new(),
            delta: Vec::new(),
        }
    }

    /// Every `∃ᵢ` the identity and every `δᵢₖ` the top.
    pub fn trivial(name: impl Into<String>, ol: Ortholattice, dims: usize) -> Self {
        let id: Vec<usize> = ol.elements().collect();
        let top = ol.top();
        CylindricOrtholattice {
            name: name.into(),
            exists: vec![id; dims],
            delta: vec![vec![top; dims]; dims],
            ol,
        }
    }

    pub fn title(&self) -> &str {
        &self.name
    }

    pub fn with_title(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn ortholattice(&self) -> &Ortholattice {
        &self.ol
    }

    pub fn dims(&self) -> usize {
        self.exists.len()
    }

    #[inline]
    pub fn exists(&self, i: usize, a: usize) -> usize {
        self.exists[i][a]
    }

    pub fn exists_table(&self, i: usize) -> &[usize] {
        &self.exists[i]
    }

    pub fn delta(&self, i: usize, k: usize) -> usize {
        self.delta[i][k]
    }

    pub fn delta_table(&self) -> &[Vec<usize>] {
        &self.delta
    }

    /// Replaces the element names, keeping every table.
    pub fn renamed(mut self, names: Vec<String>) -> Result<Self> {
        let lattice = self.ol.lattice().clone().with_names(names)?;
        *self.ol.lattice_mut() = lattice;
        Ok(self)
    }

    /// Ortholattice axioms, the quantifier axioms for each dimension,
    /// distributivity and `∃ᵢ(δᵢₖ ∧ a) ∧ ∃ᵢ(δᵢₖ ∧ a^⊥) = 0` for `i ≠ k`.
    pub fn validate(&self, boolean: bool) -> ValidationReport {
        let mut r = ValidationReport::new(self.name.clone());
        self.ol.validate_into(&mut r);
        let n = self.len();
        let m = self.dims();
        for i in 0..m {
            quantifier_into(&self.ol, &self.exists[i], &format!("E{i}"), &mut r);
        }
        let dl = |xs: &[usize]| xs.iter().map(|&i| dim_label(i)).collect::<Vec<_>>();

        let w = first_failure(
            (0..m).flat_map(|i| (0..m).flat_map(move |k| (0..n).map(move |a| (i, k, a)))),
            |&(i, k, a)| self.exists(i, self.exists(k, a)) != self.exists(k, self.exists(i, a)),
        );
        r.record(
            "cyl.commute",
            w.map(|(i, k, a)| {
                let mut v = dl(&[i, k]);
                v.push(self.name(a).to_string());
                v
            }),
        );
        let w = first_failure((0..m).flat_map(|i| (0..m).map(move |k| [i, k])), |&[i, k]| {
            self.delta(i, k) != self.delta(k, i)
        });
        r.record("cyl.delta-symmetric", w.map(|t| dl(&t)));
        let w = first_failure(0..m, |&i| self.delta(i, i) != self.top());
        r.record("cyl.delta-unit", w.map(|i| dl(&[i])));
        let w = first_failure(
            (0..m).flat_map(|i| (0..m).flat_map(move |k| (0..m).map(move |l| [i, k, l]))),
            |&[i, k, l]| {
                i != k
                    && l != k
                    && self.exists(k, self.meet(self.delta(i, k), self.delta(k, l))) != self.delta(i, l)
            },
        );
        r.record("cyl.delta-composition", w.map(|t| dl(&t)));

        if boolean {
            let w = self.distributivity_witness();
            r.record("bool.distributive", w.map(|t| self.label(&t)));
            let w = first_failure(
                (0..m).flat_map(|i| (0..m).flat_map(move |k| (0..n).map(move |a| (i, k, a)))),
                |&(i, k, a)| {
                    let d = self.delta(i, k);
                    i != k
                        && self.meet(
                            self.exists(i, self.meet(d, a)),
                            self.exists(i, self.meet(d, self.ocomp(a))),
                        ) != self.bottom()
                },
            );
            r.record(
                "bool.axiom5",
                w.map(|(i, k, a)| {
                    let mut v = dl(&[i, k]);
                    v.push(self.name(a).to_string());
                    v
                }),
            );
        }
        r
    }
}
