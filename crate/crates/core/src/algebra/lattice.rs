use crate::error::{Error, Result};
use crate::report::{first_failure, ValidationReport};
use crate::subset::{Relation, Subset};

/// A finite bounded lattice with explicit order and operation tables.
///
/// Built either from an order (meets and joins are derived) or from raw
/// tables, in which case nothing beyond totality is assumed and
/// [`FiniteBoundedLattice::validate`] reports what holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBoundedLattice {
    names: Vec<String>,
    leq: Relation,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() < 2 {
        return Err(Error::Structure(format!(
            "a lattice needs at least two elements, got {}",
            names.len()
        )));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::Structure(format!("duplicate element name `{a}`")));
        }
    }
    Ok(())
}

impl FiniteBoundedLattice {
    /// Derives meet and join tables from a partial order, rejecting orders
    /// that are not lattices.
    pub fn from_order(names: Vec<String>, leq: Relation) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        if leq.size() != n {
            return Err(Error::Structure("order matrix has the wrong size".into()));
        }
        if let Some(a) = (0..n).find(|&a| !leq.contains(a, a)) {
            return Err(Error::Structure(format!("order is not reflexive at `{}`", names[a])));
        }
        for (a, b) in leq.pairs() {
            if a != b && leq.contains(b, a) {
                return Err(Error::Structure(format!(
                    "order is not antisymmetric: `{}` and `{}`",
                    names[a], names[b]
                )));
            }
        }
        if leq.then(&leq) != leq {
            return Err(Error::Structure("order is not transitive".into()));
        }
        let down: Vec<Subset> = (0..n)
            .map(|a| (0..n).filter(|&c| leq.contains(c, a)).collect())
            .collect();
        let bound = |common: &Subset, greatest: bool| -> Option<usize> {
            common.iter().find(|&g| {
                if greatest {
                    common.is_subset(&down[g])
                } else {
                    common.is_subset(leq.row(g))
                }
            })
        };
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower = down[a].intersection(&down[b]);
                meet[a * n + b] = bound(&lower, true).ok_or_else(|| {
                    Error::Structure(format!(
                        "`{}` and `{}` have no greatest lower bound",
                        names[a], names[b]
                    ))
                })?;
                let upper = leq.row(a).intersection(leq.row(b));
                join[a * n + b] = bound(&upper, false).ok_or_else(|| {
                    Error::Structure(format!(
                        "`{}` and `{}` have no least upper bound",
                        names[a], names[b]
                    ))
                })?;
            }
        }
        let all = Subset::full(n);
        let bottom = bound(&all, false).ok_or_else(|| Error::Structure("no least element".into()))?;
        let top = bound(&all, true).ok_or_else(|| Error::Structure("no greatest element".into()))?;
        Ok(FiniteBoundedLattice {
            names,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Builds from a Hasse covering relation; the order is its
    /// reflexive-transitive closure.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::Structure(format!("cover ({a}, {b}) out of range")));
        }
        let leq = Relation::from_pairs(n, covers.iter().copied()).reflexive_transitive_closure();
        Self::from_order(names, leq)
    }

    /// Accepts tables as given. Only shapes and index ranges are checked.
    pub fn from_tables(
        names: Vec<String>,
        leq: Relation,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        let total = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if leq.size() != n || !total(&meet) || !total(&join) || bottom >= n || top >= n {
            return Err(Error::Structure("tables are not total over the carrier".into()));
        }
        Ok(FiniteBoundedLattice {
            names,
            leq,
            meet: meet.concat(),
            join: join.concat(),
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renames every element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        check_names(&names)?;
        if names.len() != self.len() {
            return Err(Error::Structure("rename has the wrong length".into()));
        }
        self.names = names;
        Ok(self)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.contains(a, b)
    }

    pub fn order(&self) -> &Relation {
        &self.leq
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet of a finite family; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a finite family; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `↑a = {b : a ≤ b}`.
    pub fn upset(&self, a: usize) -> Subset {
        self.leq.row(a).clone()
    }

    pub fn is_upset(&self, s: &Subset) -> bool {
        s.iter().all(|a| self.leq.row(a).is_subset(s))
    }

    /// Hasse covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq(a, b)
                    && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub(crate) fn label(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.names[x].clone()).collect()
    }

    /// Lattice axioms: partial order, bounds, and that the tables compute
    /// greatest lower and least upper bounds.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new("lattice");
        self.validate_into(&mut r);
        r
    }

    pub(crate) fn validate_into(&self, r: &mut ValidationReport) {
        let n = self.len();
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| [a, b]));
        let down = self.leq.converse();

        let w = first_failure(0..n, |&a| !self.leq(a, a));
        r.record("leq.reflexive", w.map(|a| self.label(&[a])));
        let w = first_failure(pairs(), |&[a, b]| a != b && self.leq(a, b) && self.leq(b, a));
        r.record("leq.antisymmetric", w.map(|t| self.label(&t)));
        // (a, b) fails when ↑b ⊄ ↑a; the least missing c completes the witness
        let w = pairs()
            .filter(|&[a, b]| self.leq(a, b))
            .find_map(|[a, b]| self.leq.row(b).difference(self.leq.row(a)).first().map(|c| [a, b, c]));
        r.record("leq.transitive", w.map(|t| self.label(&t)));
        let w = first_failure(0..n, |&a| !self.leq(self.bottom, a) || !self.leq(a, self.top));
        r.record("bounds", w.map(|a| self.label(&[a])));
        let w = first_failure(pairs(), |&[a, b]| {
            let m = self.meet(a, b);
            !self.leq(m, a)
                || !self.leq(m, b)
                || !down.row(a).intersection(down.row(b)).is_subset(down.row(m))
        });
        r.record("meet.glb", w.map(|t| self.label(&t)));
        let w = first_failure(pairs(), |&[a, b]| {
            let j = self.join(a, b);
            !self.leq(a, j)
                || !self.leq(b, j)
                || !self.leq.row(a).intersection(self.leq.row(b)).is_subset(self.leq.row(j))
        });
        r.record("join.lub", w.map(|t| self.label(&t)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn diamond_from_covers() {
        let l = FiniteBoundedLattice::from_covers(names(&["0", "a", "b", "1"]), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!((l.bottom(), l.top()), (0, 3));
        assert_eq!(l.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(l.validate().passed());
        assert_eq!(l.upset(1), [1, 3].into_iter().collect());
    }

    #[test]
    fn rejects_non_lattice_order() {
        // two incomparable maximal elements
        let err = FiniteBoundedLattice::from_covers(names(&["0", "a", "b"]), &[(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        // bowtie: a, b both below c and d
        let err = FiniteBoundedLattice::from_covers(
            names(&["0", "a", "b", "c", "d", "1"]),
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap_err();
        assert!(err.to_string().contains("least upper bound"), "{err}");
    }

    #[test]
    fn rejects_single_element_and_cycles() {
        assert!(FiniteBoundedLattice::from_covers(names(&["0"]), &[]).is_err());
        assert!(FiniteBoundedLattice::from_covers(names(&["0", "1"]), &[(0, 1), (1, 0)]).is_err());
        assert!(FiniteBoundedLattice::from_covers(names(&["0", "0"]), &[(0, 1)]).is_err());
    }

    #[test]
    fn raw_tables_must_be_total() {
        let leq = Relation::identity(2);
        let err = FiniteBoundedLattice::from_tables(names(&["0", "1"]), leq, vec![vec![0, 0]], vec![vec![0, 1], vec![1, 1]], 0, 1);
        assert!(err.is_err());
    }
}
