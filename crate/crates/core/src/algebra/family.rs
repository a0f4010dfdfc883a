use super::cylindric::CylindricOrtholattice;
use super::lattice::FiniteBoundedLattice;
use super::ortho::Ortholattice;
use crate::error::{Error, Result};
use crate::subset::{family_order, Relation, Subset};

/// Renders a point set as `{p,q}` (or `∅`) using point names.
pub fn set_label(points: &[String], s: &Subset) -> String {
    if s.is_empty() {
        return "∅".to_string();
    }
    let inner: Vec<&str> = s.iter().map(|i| points[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A cylindric ortholattice whose elements are sets of points, ordered by
/// inclusion. Element `i` of `algebra` is the set `members[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAlgebra {
    pub algebra: CylindricOrtholattice,
    pub members: Vec<Subset>,
    pub points: Vec<String>,
}

impl SetAlgebra {
    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.members.binary_search_by(|m| family_order(m, s)).ok()
    }

    pub fn member(&self, i: usize) -> &Subset {
        &self.members[i]
    }

    pub fn label(&self, s: &Subset) -> String {
        set_label(&self.points, s)
    }
}

/// Operations that turn a family of point sets into an algebra. Meets are
/// always intersections; the rest is supplied by the caller.
pub(crate) struct FamilyOps<'a> {
    pub join: &'a dyn Fn(&Subset, &Subset) -> Subset,
    pub ocomp: &'a dyn Fn(&Subset) -> Subset,
    pub exists: &'a dyn Fn(usize, &Subset) -> Subset,
    pub deltas: &'a [Vec<Subset>],
}

pub(crate) fn build_set_algebra(
    name: &str,
    points: &[String],
    mut family: Vec<Subset>,
    ops: FamilyOps<'_>,
) -> Result<SetAlgebra> {
    family.sort_by(family_order);
    family.dedup();
    let full = Subset::full(points.len());
    let n = family.len();
    let find = |s: &Subset| family.binary_search_by(|m| family_order(m, s)).ok();
    let need = |s: Subset, what: &str| {
        find(&s).ok_or_else(|| {
            Error::Structure(format!(
                "family is not closed under {what}: {} is missing",
                set_label(points, &s)
            ))
        })
    };
    let bottom = need(Subset::empty(), "the empty meet")?;
    let top = need(full, "the empty meet")?;
    let leq = Relation::from_fn(n, |a, b| family[a].is_subset(&family[b]));
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] = need(family[a].intersection(&family[b]), "intersection")?;
            join[a][b] = need((ops.join)(&family[a], &family[b]), "join")?;
        }
    }
    let ocomp = family
        .iter()
        .map(|u| need((ops.ocomp)(u), "orthocomplement"))
        .collect::<Result<Vec<_>>>()?;
    let dims = ops.deltas.len();
    let exists = (0..dims)
        .map(|i| {
            family
                .iter()
                .map(|u| need((ops.exists)(i, u), &format!("quantifier {i}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = ops
        .deltas
        .iter()
        .map(|row| row.iter().map(|d| need(d.clone(), "diagonals")).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let names = family.iter().map(|s| set_label(points, s)).collect();
    let lattice = FiniteBoundedLattice::from_tables(names, leq, meet, join, bottom, top)?;
    let ol = Ortholattice::new(lattice, ocomp)?;
    Ok(SetAlgebra {
        algebra: CylindricOrtholattice::new(name, ol, exists, delta)?,
        members: family,
        points: points.to_vec(),
    })
}
