//! Orthoframes, biorthogonal closure and the Goldblatt frame of an algebra.

use std::collections::BTreeSet;

use crate::algebra::{build_set_algebra, dim_label, set_label, CylindricOrtholattice, FamilyOps, SetAlgebra};
use crate::error::{Error, Limits, Result};
use crate::filters::{enumerate_proper_filters, FilterSpectrum};
use crate::report::{first_failure, ValidationReport};
use crate::subset::{family_order, Relation, Subset};

/// Points with an orthogonality relation, relations `Rᵢ` and subsets `Δᵢₖ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricOrthoFrame {
    pub points: Vec<String>,
    pub perp: Relation,
    pub rels: Vec<Relation>,
    pub deltas: Vec<Vec<Subset>>,
}

impl CylindricOrthoFrame {
    pub fn new(points: Vec<String>, perp: Relation, rels: Vec<Relation>, deltas: Vec<Vec<Subset>>) -> Result<Self> {
        let n = points.len();
        let m = rels.len();
        if n == 0 {
            return Err(Error::Structure("a frame needs at least one point".into()));
        }
        if perp.size() != n || rels.iter().any(|r| r.size() != n) {
            return Err(Error::Structure("relation matrices must match the number of points".into()));
        }
        let full = Subset::full(n);
        if deltas.len() != m || deltas.iter().any(|row| row.len() != m || row.iter().any(|d| !d.is_subset(&full))) {
            return Err(Error::Structure(format!("diagonal table must be {m}x{m} subsets of the points")));
        }
        Ok(CylindricOrthoFrame {
            points,
            perp,
            rels,
            deltas,
        })
    }

    /// A frame with no dimensions.
    pub fn plain(points: Vec<String>, perp: Relation) -> Result<Self> {
        Self::new(points, perp, Vec::new(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.rels.len()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn label(&self, u: &Subset) -> String {
        set_label(&self.points, u)
    }

    /// `{x}^⊥`.
    pub fn point_perp(&self, x: usize) -> Subset {
        self.perp.row(x).clone()
    }

    /// `U^⊥ = {x : x ⊥ y for all y ∈ U}`.
    pub fn perp_set(&self, u: &Subset) -> Subset {
        (0..self.len()).filter(|&x| u.is_subset(self.perp.row(x))).collect()
    }

    pub fn biclosure(&self, u: &Subset) -> Subset {
        self.perp_set(&self.perp_set(u))
    }

    pub fn is_bclosed(&self, u: &Subset) -> bool {
        &self.biclosure(u) == u
    }

    /// `∃_{Rᵢ}U = Rᵢ[U]^⊥⊥`.
    pub fn exists(&self, i: usize, u: &Subset) -> Subset {
        self.biclosure(&self.rels[i].image(u))
    }

    /// `B(X)`: the intersection-closure of the sets `{x}^⊥` together with
    /// `X`, sorted by size and then lexicographically.
    pub fn enumerate_bclosed(&self, limits: &Limits) -> Result<Vec<Subset>> {
        let subbasic: Vec<Subset> = {
            let mut s: Vec<Subset> = (0..self.len()).map(|x| self.perp_set(&Subset::singleton(x))).collect();
            s.sort();
            s.dedup();
            s
        };
        let mut seen: BTreeSet<Subset> = BTreeSet::new();
        seen.insert(self.full());
        let mut frontier = vec![self.full()];
        while let Some(u) = frontier.pop() {
            for s in &subbasic {
                let v = u.intersection(s);
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    limits.guard(seen.len(), "enumerating biorthogonally closed sets")?;
                    frontier.push(v);
                }
            }
        }
        let mut family: Vec<Subset> = seen.into_iter().collect();
        family.sort_by(family_order);
        Ok(family)
    }

    /// Orthoframe, monadic and cylindric frame conditions.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new("frame");
        let n = self.len();
        let m = self.dims();
        let pt = |x: usize| self.points[x].clone();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));

        let w = first_failure(0..n, |&x| self.perp.contains(x, x));
        r.record("perp.irreflexive", w.map(|x| vec![pt(x)]));
        let w = first_failure(pairs(), |&(x, y)| self.perp.contains(x, y) && !self.perp.contains(y, x));
        r.record("perp.symmetric", w.map(|(x, y)| vec![pt(x), pt(y)]));

        for (i, rel) in self.rels.iter().enumerate() {
            let w = first_failure(0..n, |&x| !rel.contains(x, x));
            r.record(format!("R{i}.reflexive"), w.map(|x| vec![pt(x)]));
            let w = pairs()
                .filter(|&(x, y)| rel.contains(x, y))
                .find_map(|(x, y)| rel.row(y).difference(rel.row(x)).first().map(|z| (x, y, z)));
            r.record(format!("R{i}.transitive"), w.map(|(x, y, z)| vec![pt(x), pt(y), pt(z)]));
            let w = first_failure(0..n, |&x| {
                let p = self.perp_set(rel.row(x));
                !rel.image(&p).is_subset(&p)
            });
            r.record(format!("R{i}.perp-stable"), w.map(|x| vec![pt(x)]));
        }

        let dim_pairs = || (0..m).flat_map(move |i| (0..m).map(move |k| (i, k)));
        let w = dim_pairs().filter(|&(i, k)| i < k).find_map(|(i, k)| {
            let ik = self.rels[i].then(&self.rels[k]);
            let ki = self.rels[k].then(&self.rels[i]);
            pairs()
                .find(|&(x, z)| ik.contains(x, z) != ki.contains(x, z))
                .map(|(x, z)| (i, k, x, z))
        });
        r.record(
            "R.commute",
            w.map(|(i, k, x, z)| vec![dim_label(i), dim_label(k), pt(x), pt(z)]),
        );

        let dl = |i: usize, k: usize| vec![dim_label(i), dim_label(k)];
        let w = first_failure(dim_pairs(), |&(i, k)| self.deltas[i][k] != self.deltas[k][i]);
        r.record("delta.symmetric", w.map(|(i, k)| dl(i, k)));
        let w = first_failure(dim_pairs(), |&(i, k)| !self.is_bclosed(&self.deltas[i][k]));
        r.record("delta.bclosed", w.map(|(i, k)| dl(i, k)));
        let w = first_failure(0..m, |&i| self.deltas[i][i] != self.full());
        r.record("delta.unit", w.map(|i| vec![dim_label(i)]));
        let triples = (0..m).flat_map(|i| (0..m).flat_map(move |k| (0..m).map(move |l| (i, k, l))));
        let w = first_failure(triples, |&(i, k, l)| {
            i != k && l != k && self.rels[k].image(&self.deltas[i][k].intersection(&self.deltas[k][l])) != self.deltas[i][l]
        });
        r.record(
            "delta.composition",
            w.map(|(i, k, l)| vec![dim_label(i), dim_label(k), dim_label(l)]),
        );
        r
    }

    /// The complete cylindric ortholattice on `B(X)`.
    pub fn bclosed_algebra(&self, name: &str, limits: &Limits) -> Result<SetAlgebra> {
        let family = self.enumerate_bclosed(limits)?;
        let join = |u: &Subset, v: &Subset| self.biclosure(&u.union(v));
        let ocomp = |u: &Subset| self.perp_set(u);
        let exists = |i: usize, u: &Subset| self.exists(i, u);
        build_set_algebra(
            name,
            &self.points,
            family,
            FamilyOps {
                join: &join,
                ocomp: &ocomp,
                exists: &exists,
                deltas: &self.deltas,
            },
        )
    }
}

/// The frame on the proper filters of an algebra, kept together with the
/// filters its points stand for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldblattFrame {
    pub frame: CylindricOrthoFrame,
    pub spectrum: FilterSpectrum,
}

impl GoldblattFrame {
    /// `φ(a) = {x : a ∈ x}`.
    pub fn phi(&self, a: usize) -> Subset {
        self.spectrum.containing(a)
    }
}

/// `x ⊥ y` iff some `a ∈ x` has `a^⊥ ∈ y`; `x Rᵢ y` iff `∃ᵢ[x] ⊆ y`;
/// `Δᵢₖ = φ(δᵢₖ)`.
pub fn goldblatt_frame(a: &CylindricOrtholattice) -> GoldblattFrame {
    let spectrum = enumerate_proper_filters(a);
    let xs = spectrum.members();
    let n = xs.len();
    let perp = Relation::from_fn(n, |x, y| xs[x].iter().any(|b| xs[y].contains(a.ocomp(b))));
    let rels = (0..a.dims())
        .map(|i| Relation::from_fn(n, |x, y| xs[x].iter().all(|b| xs[y].contains(a.exists(i, b)))))
        .collect();
    let deltas = (0..a.dims())
        .map(|i| (0..a.dims()).map(|k| spectrum.containing(a.delta(i, k))).collect())
        .collect();
    let frame = CylindricOrthoFrame {
        points: spectrum.names(a),
        perp,
        rels,
        deltas,
    };
    GoldblattFrame { frame, spectrum }
}
