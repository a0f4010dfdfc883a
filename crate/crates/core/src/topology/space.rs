use std::collections::{BTreeSet, HashSet};

use crate::algebra::{set_label, FiniteBoundedLattice};
use crate::error::{Error, Limits, Result};
use crate::filters::{classify_filter, enumerate_proper_filters};
use crate::frames::CylindricOrthoFrame;
use crate::report::{first_failure, ValidationReport};
use crate::subset::{family_order, Relation, Subset};

use super::upset::UpsetOperators;

/// A finite topological space, optionally decorated with an orthogonality
/// relation, relations indexed by dimension, and diagonal subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    pub name: String,
    pub points: Vec<String>,
    basis: Vec<Subset>,
    opens: Vec<Subset>,
    pub perp: Option<Relation>,
    pub rels: Vec<Relation>,
    pub deltas: Vec<Vec<Subset>>,
}

/// The lattice of a set family ordered by inclusion, elements named by
/// their point sets. `family` must be sorted by [`family_order`].
pub fn family_lattice(points: &[String], family: &[Subset]) -> Result<FiniteBoundedLattice> {
    let names = family.iter().map(|s| set_label(points, s)).collect();
    let leq = Relation::from_fn(family.len(), |a, b| family[a].is_subset(&family[b]));
    FiniteBoundedLattice::from_order(names, leq)
}

/// Indices of a finite subfamily of `cover` whose union contains `target`,
/// picked greedily, or `None` when the whole cover misses a point.
pub fn finite_subcover(target: &Subset, cover: &[Subset]) -> Option<Vec<usize>> {
    let mut left = target.clone();
    let mut chosen = Vec::new();
    while !left.is_empty() {
        let (best, gain) = cover
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.intersection(&left).len()))
            .max_by_key(|&(i, g)| (g, std::cmp::Reverse(i)))?;
        if gain == 0 {
            return None;
        }
        left = left.difference(&cover[best]);
        chosen.push(best);
    }
    Some(chosen)
}

fn sorted(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort_by(family_order);
    family.dedup();
    family
}

impl FiniteSpace {
    /// Opens are all unions of basis members, plus `∅`. The result must be
    /// a topology: `X` open and opens closed under intersection.
    pub fn from_basis(name: impl Into<String>, points: Vec<String>, basis: Vec<Subset>, limits: &Limits) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::Structure("a space needs at least one point".into()));
        }
        let full = Subset::full(n);
        if let Some(b) = basis.iter().find(|b| !b.is_subset(&full)) {
            return Err(Error::Structure(format!("basis member {b:?} is not a set of points")));
        }
        let basis = sorted(basis);
        let mut seen: BTreeSet<Subset> = BTreeSet::new();
        seen.insert(Subset::empty());
        let mut frontier = vec![Subset::empty()];
        while let Some(u) = frontier.pop() {
            for b in &basis {
                let v = u.union(b);
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    limits.guard(seen.len(), "generating open sets")?;
                    frontier.push(v);
                }
            }
        }
        let opens = sorted(seen.into_iter().collect());
        let space = FiniteSpace {
            name: name.into(),
            points,
            basis,
            opens,
            perp: None,
            rels: Vec::new(),
            deltas: Vec::new(),
        };
        space.check_topology()?;
        Ok(space)
    }

    /// Takes the open sets as given and checks the topology axioms.
    pub fn from_opens(name: impl Into<String>, points: Vec<String>, opens: Vec<Subset>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Structure("a space needs at least one point".into()));
        }
        let opens = sorted(opens);
        let space = FiniteSpace {
            name: name.into(),
            points,
            basis: opens.clone(),
            opens,
            perp: None,
            rels: Vec::new(),
            deltas: Vec::new(),
        };
        space.check_topology()?;
        Ok(space)
    }

    fn check_topology(&self) -> Result<()> {
        let full = self.full();
        if !self.is_open(&Subset::empty()) || !self.is_open(&full) {
            return Err(Error::Structure("the empty set and the whole space must be open".into()));
        }
        if let Some(u) = self.opens.iter().find(|u| !u.is_subset(&full)) {
            return Err(Error::Structure(format!("open set {u:?} is not a set of points")));
        }
        let index: HashSet<&Subset> = self.opens.iter().collect();
        for (i, u) in self.opens.iter().enumerate() {
            for v in &self.opens[i + 1..] {
                for (w, what) in [(u.intersection(v), "intersection"), (u.union(v), "union")] {
                    if !index.contains(&w) {
                        return Err(Error::Structure(format!(
                            "open sets are not closed under {what}: {} is missing",
                            self.label(&w)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_perp(mut self, perp: Relation) -> Result<Self> {
        if perp.size() != self.len() {
            return Err(Error::Structure("orthogonality matrix has the wrong size".into()));
        }
        self.perp = Some(perp);
        Ok(self)
    }

    pub fn with_relations(mut self, rels: Vec<Relation>, deltas: Vec<Vec<Subset>>) -> Result<Self> {
        let (n, m) = (self.len(), rels.len());
        if rels.iter().any(|r| r.size() != n) {
            return Err(Error::Structure("relation matrix has the wrong size".into()));
        }
        let full = self.full();
        if deltas.len() != m || deltas.iter().any(|row| row.len() != m || row.iter().any(|d| !d.is_subset(&full))) {
            return Err(Error::Structure(format!("diagonal table must be {m}x{m} subsets of the points")));
        }
        self.rels = rels;
        self.deltas = deltas;
        Ok(self)
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

    pub fn basis(&self) -> &[Subset] {
        &self.basis
    }

    /// Every open set, sorted by size and then lexicographically.
    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, u: &Subset) -> bool {
        self.opens.binary_search_by(|o| family_order(o, u)).is_ok()
    }

    pub fn label(&self, u: &Subset) -> String {
        set_label(&self.points, u)
    }

    /// The orthoframe reduct, when an orthogonality relation is present.
    pub fn frame(&self) -> Option<CylindricOrthoFrame> {
        self.perp.as_ref().map(|p| CylindricOrthoFrame {
            points: self.points.clone(),
            perp: p.clone(),
            rels: self.rels.clone(),
            deltas: self.deltas.clone(),
        })
    }

    /// `x ⩽ y` iff every open set containing `x` contains `y`.
    pub fn specialization_order(&self) -> Relation {
        let full = self.full();
        Relation::from_rows(
            (0..self.len())
                .map(|x| {
                    self.opens
                        .iter()
                        .filter(|u| u.contains(x))
                        .fold(full.clone(), |acc, u| acc.intersection(u))
                })
                .collect(),
        )
    }

    pub fn upset_operators(&self) -> UpsetOperators {
        UpsetOperators::new(&self.specialization_order())
    }

    /// First pair of distinct points with the same neighbourhoods.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        let le = self.specialization_order();
        let n = self.len();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| le.contains(x, y) && le.contains(y, x))
    }

    /// Compact opens, found by extracting a finite subcover from the cover
    /// of each open set by the basic opens inside it.
    pub fn compact_opens(&self) -> Vec<Subset> {
        self.opens
            .iter()
            .filter(|u| {
                let cover: Vec<Subset> = self.basis.iter().filter(|b| b.is_subset(u)).cloned().collect();
                finite_subcover(u, &cover).is_some()
            })
            .cloned()
            .collect()
    }

    /// `U^*`-regular opens: `U** = U`.
    pub fn regular_opens(&self) -> Vec<Subset> {
        let ops = self.upset_operators();
        self.opens
            .iter()
            .filter(|u| &ops.star(&ops.star(u)) == *u)
            .cloned()
            .collect()
    }

    pub fn families(&self) -> OpenFamilies {
        let co = self.compact_opens();
        let cob = self.frame().map(|f| co.iter().filter(|u| f.is_bclosed(u)).cloned().collect());
        let reg = self.regular_opens();
        let coreg = co.iter().filter(|u| reg.contains(u)).cloned().collect();
        OpenFamilies { co, cob, reg, coreg }
    }

    /// T0, compact, coherent and sober.
    pub fn is_spectral(&self) -> ValidationReport {
        let mut r = ValidationReport::new(format!("{} spectral", self.name));
        let pt = |x: usize| self.points[x].clone();
        r.record("T0", self.t0_witness().map(|(x, y)| vec![pt(x), pt(y)]));
        let full = self.full();
        r.record(
            "compact",
            finite_subcover(&full, &self.basis).is_none().then(|| vec![self.label(&full)]),
        );
        let co = self.compact_opens();
        let w = self.opens.iter().find(|u| !co.contains(u));
        r.record("compact.all-opens", w.map(|u| vec![self.label(u)]));
        self.basis_into(&mut r, "coherent.basis", &co);
        let w = co
            .iter()
            .flat_map(|u| co.iter().map(move |v| (u, v)))
            .find(|(u, v)| !co.contains(&u.intersection(v)));
        r.record("coherent.meet-closed", w.map(|(u, v)| vec![self.label(u), self.label(v)]));
        match family_lattice(&self.points, &co) {
            Ok(l) => self.sober_into(&mut r, &l, &co),
            Err(e) => r.record("sober", Some(vec![e.to_string()])),
        }
        r
    }

    /// Every open set is the union of the members of `family` inside it.
    pub(crate) fn basis_into(&self, r: &mut ValidationReport, axiom: &str, family: &[Subset]) {
        let w = self.opens.iter().find(|u| {
            let inside = family.iter().filter(|b| b.is_subset(u)).fold(Subset::empty(), |acc, b| acc.union(b));
            &inside != *u
        });
        r.record(axiom, w.map(|u| vec![self.label(u)]));
    }

    /// `{U ∈ family : x ∈ U}` as a set of indices into `family`.
    pub(crate) fn neighbourhoods(&self, family: &[Subset], x: usize) -> Subset {
        (0..family.len()).filter(|&u| family[u].contains(x)).collect()
    }

    fn sober_into(&self, r: &mut ValidationReport, l: &FiniteBoundedLattice, co: &[Subset]) {
        let spectrum = enumerate_proper_filters(l);
        let nbhd: Vec<Subset> = (0..self.len()).map(|x| self.neighbourhoods(co, x)).collect();
        let w = spectrum.filters.iter().find(|f| {
            let cp = classify_filter(l, &f.members).map(|c| c.completely_prime).unwrap_or(false);
            cp && nbhd.iter().filter(|n| **n == f.members).count() != 1
        });
        r.record("sober.realized", w.map(|f| vec![format!("↑{}", l.name(f.generator))]));
        let w = first_failure(0..self.len(), |&x| {
            !classify_filter(l, &nbhd[x]).map(|c| c.completely_prime).unwrap_or(false)
        });
        r.record("sober.neighbourhoods-prime", w.map(|x| vec![self.points[x].clone()]));
    }
}

/// Derived families of open sets. `cob` is present when the space has an
/// orthogonality relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenFamilies {
    pub co: Vec<Subset>,
    pub cob: Option<Vec<Subset>>,
    pub reg: Vec<Subset>,
    pub coreg: Vec<Subset>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn points(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("p{i}")).collect()
    }

    #[test]
    fn sierpinski_space() {
        let opens = vec![Subset::empty(), Subset::from_mask(0b10), Subset::from_mask(0b11)];
        let x = FiniteSpace::from_opens("S", points(2), opens).unwrap();
        let le = x.specialization_order();
        assert!(le.contains(0, 1) && !le.contains(1, 0));
        assert_eq!(x.t0_witness(), None);
        assert!(x.is_spectral().passed());
    }

    #[test]
    fn opens_must_be_closed_under_unions() {
        let opens = vec![
            Subset::empty(),
            Subset::from_mask(0b001),
            Subset::from_mask(0b010),
            Subset::from_mask(0b111),
        ];
        assert!(FiniteSpace::from_opens("X", points(3), opens).is_err());
    }

    #[test]
    fn indiscrete_space_is_not_t0() {
        let opens = vec![Subset::empty(), Subset::from_mask(0b11)];
        let x = FiniteSpace::from_opens("I", points(2), opens).unwrap();
        assert_eq!(x.t0_witness(), Some((0, 1)));
        assert!(!x.is_spectral().passed());
    }

    #[test]
    fn greedy_subcover() {
        let cover = [Subset::from_mask(0b011), Subset::from_mask(0b110), Subset::from_mask(0b100)];
        assert_eq!(finite_subcover(&Subset::from_mask(0b111), &cover), Some(vec![0, 1]));
        assert_eq!(finite_subcover(&Subset::from_mask(0b1000), &cover), None);
    }
}
