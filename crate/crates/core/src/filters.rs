//! Proper filters of finite lattices.
//!
//! Every filter of a finite lattice is principal, so the spectrum is
//! enumerated as `{↑a : a ≠ 0}`. [`enumerate_filters_by_scan`] computes the
//! same family without that shortcut and [`cross_check_spectrum`] compares
//! the two.

use std::collections::BTreeSet;

use crate::algebra::{set_label, FiniteBoundedLattice};
use crate::error::{Error, Limits, Result};
use crate::report::ValidationReport;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperFilter {
    pub members: Subset,
    /// The least member; the filter is `↑generator`.
    pub generator: usize,
}

/// All proper filters of a lattice, sorted by member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterSpectrum {
    pub filters: Vec<ProperFilter>,
}

impl FilterSpectrum {
    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    /// Point names `↑a`, in spectrum order.
    pub fn names(&self, l: &FiniteBoundedLattice) -> Vec<String> {
        self.filters.iter().map(|f| format!("↑{}", l.name(f.generator))).collect()
    }

    pub fn members(&self) -> Vec<Subset> {
        self.filters.iter().map(|f| f.members.clone()).collect()
    }

    pub fn position(&self, members: &Subset) -> Option<usize> {
        self.filters.binary_search_by(|f| f.members.cmp(members)).ok()
    }

    /// `φ(a)`: the points whose filter contains `a`.
    pub fn containing(&self, a: usize) -> Subset {
        (0..self.len()).filter(|&x| self.filters[x].members.contains(a)).collect()
    }
}

/// `↑a = {b : a ≤ b}`; a proper filter iff `a ≠ 0`.
pub fn upset(l: &FiniteBoundedLattice, a: usize) -> Subset {
    l.upset(a)
}

/// Nonempty, upward closed and closed under binary meets.
pub fn is_filter(l: &FiniteBoundedLattice, x: &Subset) -> bool {
    !x.is_empty()
        && l.is_upset(x)
        && x.iter().all(|a| x.iter().all(|b| x.contains(l.meet(a, b))))
}

pub fn is_proper_filter(l: &FiniteBoundedLattice, x: &Subset) -> bool {
    is_filter(l, x) && !x.contains(l.bottom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Proper(ProperFilter),
    /// The generated filter is the whole carrier.
    Improper,
}

/// Smallest filter containing `s`: the upset of `⋀s`.
pub fn filter_generated(l: &FiniteBoundedLattice, s: &Subset) -> Result<Generated> {
    if s.is_empty() {
        return Err(Error::Argument("cannot generate a filter from the empty set".into()));
    }
    if let Some(a) = s.iter().find(|&a| a >= l.len()) {
        return Err(Error::Argument(format!("element index {a} is out of range")));
    }
    let g = l.meet_all(s.iter());
    Ok(if g == l.bottom() {
        Generated::Improper
    } else {
        Generated::Proper(ProperFilter {
            members: l.upset(g),
            generator: g,
        })
    })
}

/// The principal proper filters `↑a`, `a ≠ 0`.
pub fn enumerate_proper_filters(l: &FiniteBoundedLattice) -> FilterSpectrum {
    let mut filters: Vec<ProperFilter> = l
        .elements()
        .filter(|&a| a != l.bottom())
        .map(|a| ProperFilter {
            members: l.upset(a),
            generator: a,
        })
        .collect();
    filters.sort_by(|x, y| x.members.cmp(&y.members));
    FilterSpectrum { filters }
}

/// Every upset of `l` (unions of principal upsets, plus the empty set),
/// sorted.
pub fn enumerate_upsets(l: &FiniteBoundedLattice, limits: &Limits) -> Result<Vec<Subset>> {
    let principal: Vec<Subset> = l.elements().map(|a| l.upset(a)).collect();
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    seen.insert(Subset::empty());
    let mut frontier = vec![Subset::empty()];
    while let Some(u) = frontier.pop() {
        for p in &principal {
            let v = u.union(p);
            if !seen.contains(&v) {
                seen.insert(v.clone());
                limits.guard(seen.len(), "enumerating upsets")?;
                frontier.push(v);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Proper filters found by scanning all upsets for meet-closure, without
/// assuming they are principal.
pub fn enumerate_filters_by_scan(l: &FiniteBoundedLattice, limits: &Limits) -> Result<Vec<Subset>> {
    Ok(enumerate_upsets(l, limits)?
        .into_iter()
        .filter(|u| is_proper_filter(l, u))
        .collect())
}

/// Compares the principal enumeration with the upset scan, and checks
/// `|𝔉(A)| = |A| − 1`.
pub fn cross_check_spectrum(l: &FiniteBoundedLattice, limits: &Limits) -> Result<ValidationReport> {
    let fast = enumerate_proper_filters(l);
    let scanned = enumerate_filters_by_scan(l, limits)?;
    let fast_sets = fast.members();
    let mut r = ValidationReport::new("filter spectrum");
    let w = fast.filters.iter().find(|f| !is_proper_filter(l, &f.members));
    r.record(
        "filters.proper",
        w.map(|f| vec![set_label(l.names(), &f.members)]),
    );
    let missing = scanned.iter().find(|s| !fast_sets.contains(s));
    r.record(
        "filters.scan-in-principal",
        missing.map(|s| vec![set_label(l.names(), s)]),
    );
    let extra = fast_sets.iter().find(|s| !scanned.contains(s));
    r.record(
        "filters.principal-in-scan",
        extra.map(|s| vec![set_label(l.names(), s)]),
    );
    r.record(
        "filters.count",
        (fast.len() != l.len() - 1).then(|| vec![fast.len().to_string()]),
    );
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterClass {
    pub proper: bool,
    pub prime: bool,
    pub completely_prime: bool,
}

/// Primality flags of a filter. Complete primality uses the fact that some
/// family of non-members joins into `x` iff the join of all non-members does.
pub fn classify_filter(l: &FiniteBoundedLattice, x: &Subset) -> Result<FilterClass> {
    if !is_filter(l, x) {
        return Err(Error::Argument(format!(
            "{} is not a filter",
            set_label(l.names(), x)
        )));
    }
    let proper = !x.contains(l.bottom());
    let prime = proper
        && l.elements().all(|a| {
            l.elements()
                .all(|b| !x.contains(l.join(a, b)) || x.contains(a) || x.contains(b))
        });
    let outside = x.complement(l.len());
    let completely_prime = proper && !x.contains(l.join_all(outside.iter()));
    Ok(FilterClass {
        proper,
        prime,
        completely_prime,
    })
}
