use crate::report::ValidationReport;
use crate::subset::{Relation, Subset};

/// Interior, closure and pseudocomplement of the upset topology of a
/// preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsetOperators {
    up: Vec<Subset>,
}

impl UpsetOperators {
    pub fn new(le: &Relation) -> Self {
        UpsetOperators {
            up: (0..le.size()).map(|x| le.row(x).clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// `Int(U) = {x : y ∈ U for all y ≥ x}`.
    pub fn interior(&self, u: &Subset) -> Subset {
        (0..self.len()).filter(|&x| self.up[x].is_subset(u)).collect()
    }

    /// `Cl(U) = {x : y ∈ U for some y ≥ x}`.
    pub fn closure(&self, u: &Subset) -> Subset {
        (0..self.len()).filter(|&x| self.up[x].intersects(u)).collect()
    }

    /// `U* = Int(X ∖ U)`.
    pub fn star(&self, u: &Subset) -> Subset {
        self.interior(&u.complement(self.len()))
    }

    pub fn is_upset(&self, u: &Subset) -> bool {
        &self.interior(u) == u
    }

    /// `Int(U) = X ∖ Cl(X ∖ U)`, `U ⊆ Cl(U)`, `Int` idempotent and
    /// `U** = Int(Cl(U))` for upsets, over the given sets.
    pub fn check_identities<'a>(&self, sets: impl IntoIterator<Item = &'a Subset>) -> ValidationReport {
        let n = self.len();
        let mut r = ValidationReport::new("upset operators");
        let mut fails: [Option<Subset>; 4] = Default::default();
        for u in sets {
            let checks = [
                self.interior(u) != self.closure(&u.complement(n)).complement(n),
                !u.is_subset(&self.closure(u)),
                self.interior(&self.interior(u)) != self.interior(u),
                self.is_upset(u) && self.star(&self.star(u)) != self.interior(&self.closure(u)),
            ];
            for (slot, bad) in fails.iter_mut().zip(checks) {
                if bad && slot.is_none() {
                    *slot = Some(u.clone());
                }
            }
        }
        for (axiom, w) in ["int.dual-of-closure", "closure.extensive", "int.idempotent", "star.regular"]
            .into_iter()
            .zip(fails)
        {
            r.record(axiom, w.map(|u| vec![format!("{u:?}")]));
        }
        r
    }
}
