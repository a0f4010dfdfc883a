use super::cylindric::{dim_label, CylindricOrtholattice};
use crate::error::{Error, Result};
use crate::report::{first_failure, ValidationReport};

/// A total map between the carriers of two cylindric ortholattices. Whether
/// it is a homomorphism is decided by [`AlgebraHom::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: CylindricOrtholattice,
    pub target: CylindricOrtholattice,
    pub map: Vec<usize>,
}

impl AlgebraHom {
    pub fn new(source: CylindricOrtholattice, target: CylindricOrtholattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
            return Err(Error::Structure("homomorphism table is not a total map into the target".into()));
        }
        Ok(AlgebraHom { source, target, map })
    }

    pub fn identity(a: CylindricOrtholattice) -> Self {
        let map = a.elements().collect();
        AlgebraHom {
            target: a.clone(),
            source: a,
            map,
        }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Bounded-lattice preservation, orthocomplement, quantifiers and
    /// diagonals. Mismatched dimensions are a structural error.
    pub fn validate(&self) -> Result<ValidationReport> {
        let (s, t, h) = (&self.source, &self.target, &self.map);
        if s.dims() != t.dims() {
            return Err(Error::Structure(format!(
                "dimension mismatch: source has {}, target has {}",
                s.dims(),
                t.dims()
            )));
        }
        if h.len() != s.len() || h.iter().any(|&x| x >= t.len()) {
            return Err(Error::Structure("homomorphism table is not total".into()));
        }
        let mut r = ValidationReport::new(format!("{} -> {}", s.title(), t.title()));
        let n = s.len();
        let m = s.dims();
        r.record("hom.bottom", (h[s.bottom()] != t.bottom()).then(|| s.label(&[s.bottom()])));
        r.record("hom.top", (h[s.top()] != t.top()).then(|| s.label(&[s.top()])));
        let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| [a, b]));
        let w = first_failure(pairs(), |&[a, b]| h[s.meet(a, b)] != t.meet(h[a], h[b]));
        r.record("hom.meet", w.map(|p| s.label(&p)));
        let w = first_failure(pairs(), |&[a, b]| h[s.join(a, b)] != t.join(h[a], h[b]));
        r.record("hom.join", w.map(|p| s.label(&p)));
        let w = first_failure(0..n, |&a| h[s.ocomp(a)] != t.ocomp(h[a]));
        r.record("hom.ocomp", w.map(|a| s.label(&[a])));
        let w = first_failure((0..m).flat_map(|i| (0..n).map(move |a| (i, a))), |&(i, a)| {
            h[s.exists(i, a)] != t.exists(i, h[a])
        });
        r.record("hom.exists", w.map(|(i, a)| vec![dim_label(i), s.name(a).to_string()]));
        let w = first_failure((0..m).flat_map(|i| (0..m).map(move |k| (i, k))), |&(i, k)| {
            h[s.delta(i, k)] != t.delta(i, k)
        });
        r.record("hom.delta", w.map(|(i, k)| vec![dim_label(i), dim_label(k)]));
        Ok(r)
    }
}
