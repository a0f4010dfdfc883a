//! The canonical completion `⟨φ, B(X_A)⟩` and its certificates.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{set_label, AlgebraHom, CylindricOrtholattice, SetAlgebra};
use crate::error::{Error, Limits, Result};
use crate::frames::goldblatt_frame;
use crate::report::{first_failure, ValidationReport};
use crate::subset::Subset;

const COMPACT_SEED: u64 = 0x5eed_c0de;
const COMPACT_RANDOM_PAIRS: usize = 4096;

/// An embedding of an algebra into a set algebra whose points are proper
/// filters of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub source: CylindricOrtholattice,
    pub target: SetAlgebra,
    /// The source filter each target point stands for.
    pub point_filters: Vec<Subset>,
    /// `map[a]` is the target index of `φ(a)`.
    pub map: Vec<usize>,
    /// Target indices of the closed elements `K`, ascending.
    pub closed: Vec<usize>,
}

impl Embedding {
    /// Computes `φ(a) = {x : a ∈ x}` and the meet-closure `K` of its image.
    pub fn new(
        source: CylindricOrtholattice,
        target: SetAlgebra,
        point_filters: Vec<Subset>,
        limits: &Limits,
    ) -> Result<Self> {
        if point_filters.len() != target.points.len() {
            return Err(Error::Structure("one filter per target point is required".into()));
        }
        let map = source
            .elements()
            .map(|a| {
                let s: Subset = (0..point_filters.len()).filter(|&x| point_filters[x].contains(a)).collect();
                target.index_of(&s).ok_or_else(|| {
                    Error::Structure(format!(
                        "φ({}) = {} is not an element of the target",
                        source.name(a),
                        target.label(&s)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let t = &target.algebra;
        let mut closed: BTreeSet<usize> = map.iter().copied().collect();
        closed.insert(t.top());
        let mut frontier: Vec<usize> = closed.iter().copied().collect();
        while let Some(c) = frontier.pop() {
            for &b in &map {
                let m = t.meet(c, b);
                if closed.insert(m) {
                    limits.guard(closed.len(), "enumerating closed elements")?;
                    frontier.push(m);
                }
            }
        }
        Ok(Embedding {
            source,
            target,
            point_filters,
            map,
            closed: closed.into_iter().collect(),
        })
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn as_hom(&self) -> AlgebraHom {
        AlgebraHom {
            source: self.source.clone(),
            target: self.target.algebra.clone(),
            map: self.map.clone(),
        }
    }

    fn target_label(&self, u: usize) -> String {
        self.target.algebra.name(u).to_string()
    }

    fn source_set_label(&self, s: &Subset) -> String {
        set_label(self.source.names(), s)
    }

    /// `φ(0) = ∅`, `φ(1)` is every point, injectivity, and the homomorphism
    /// conditions.
    pub fn verify_embedding(&self) -> Result<ValidationReport> {
        let (a, t) = (&self.source, &self.target);
        let mut r = ValidationReport::new(format!("φ: {} -> {}", a.title(), t.algebra.title()));
        let zero = t.member(self.map[a.bottom()]);
        r.record("phi.bottom", (!zero.is_empty()).then(|| vec![t.label(zero)]));
        let one = t.member(self.map[a.top()]);
        r.record(
            "phi.top",
            (one != &Subset::full(t.points.len())).then(|| vec![t.label(one)]),
        );
        let pairs = a.elements().flat_map(|x| a.elements().map(move |y| (x, y)));
        let w = first_failure(pairs, |&(x, y)| x < y && self.map[x] == self.map[y]);
        r.record("phi.injective", w.map(|(x, y)| a.label(&[x, y])));
        r.absorb("", self.as_hom().validate()?);
        Ok(r)
    }

    /// Each `U` is the join of the closed elements `k_x = ⋂{φ(a) : a ∈ x}`
    /// for `x ∈ U`, and the meet of the `φ(a)` containing it.
    pub fn verify_dense(&self) -> ValidationReport {
        let t = &self.target.algebra;
        let mut r = ValidationReport::new(format!("density of {}", t.title()));
        let k: Vec<usize> = self
            .point_filters
            .iter()
            .map(|x| t.meet_all(x.iter().map(|a| self.map[a])))
            .collect();
        let w = first_failure(0..k.len(), |&x| self.closed.binary_search(&k[x]).is_err());
        r.record("dense.witness-closed", w.map(|x| vec![self.target.points[x].clone()]));
        let w = first_failure(t.elements(), |&u| {
            t.join_all(self.target.member(u).iter().map(|x| k[x])) != u
        });
        r.record("dense.join-of-closed", w.map(|u| vec![self.target_label(u)]));
        let w = first_failure(t.elements(), |&u| {
            let above = self.map.iter().copied().filter(|&b| t.leq(u, b));
            t.meet_all(above) != u
        });
        r.record("dense.meet-of-open", w.map(|u| vec![self.target_label(u)]));
        r
    }

    /// For pairs `(S, T)` of source subsets: `⋀φ[S] ≤ ⋁φ[T]` holds in the
    /// target iff `⋀S ≤ ⋁T` holds in the source. Every pair is scanned when
    /// the source is small enough; otherwise small subsets plus a seeded
    /// random sample, and the report is flagged as sampled.
    pub fn verify_compact(&self, limits: &Limits) -> ValidationReport {
        let (a, t) = (&self.source, &self.target.algebra);
        let n = a.len();
        let mut r = ValidationReport::new(format!("compactness of {}", t.title()));
        let agrees = |s: &Subset, u: &Subset| {
            let lhs = t.meet_all(s.iter().map(|x| self.map[x]));
            let rhs = t.join_all(u.iter().map(|x| self.map[x]));
            t.leq(lhs, rhs) == a.leq(a.meet_all(s.iter()), a.join_all(u.iter()))
        };
        let witness = if n <= limits.compact_exhaustive_max && n < 64 {
            let masks = 1usize << n;
            let table = |f: &dyn Fn(&Subset) -> (usize, usize)| -> Vec<(usize, usize)> {
                (0..masks).map(|m| f(&Subset::from_mask(m as u64))).collect()
            };
            let meets = table(&|s| (a.meet_all(s.iter()), t.meet_all(s.iter().map(|x| self.map[x]))));
            let joins = table(&|s| (a.join_all(s.iter()), t.join_all(s.iter().map(|x| self.map[x]))));
            (0..masks)
                .flat_map(|s| (0..masks).map(move |u| (s, u)))
                .find(|&(s, u)| t.leq(meets[s].1, joins[u].1) != a.leq(meets[s].0, joins[u].0))
                .map(|(s, u)| (Subset::from_mask(s as u64), Subset::from_mask(u as u64)))
        } else {
            r.sampled = true;
            let small: Vec<Subset> = std::iter::once(Subset::empty())
                .chain((0..n).map(Subset::singleton))
                .chain((0..n).flat_map(|x| (x + 1..n).map(move |y| [x, y].into_iter().collect())))
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(COMPACT_SEED);
            let mut random = || -> Subset { (0..n).filter(|_| rng.gen_bool(0.5)).collect() };
            let sample: Vec<(Subset, Subset)> = (0..COMPACT_RANDOM_PAIRS).map(|_| (random(), random())).collect();
            small
                .iter()
                .flat_map(|s| small.iter().map(move |u| (s.clone(), u.clone())))
                .chain(sample)
                .find(|(s, u)| !agrees(s, u))
        };
        r.record(
            "compact.reflects-order",
            witness.map(|(s, u)| vec![self.source_set_label(&s), self.source_set_label(&u)]),
        );
        r.pass("compact.finite-subfamilies");
        r.note("the source is finite, so S and T are their own finite subfamilies");
        if r.sampled {
            r.note(format!(
                "sampled: all pairs with |S|, |T| <= 2 and {COMPACT_RANDOM_PAIRS} seeded random pairs"
            ));
        }
        r
    }

    /// Evaluates the extension formulas
    /// `a^⊥σ = ⋀{⋁{e(b^⊥) : c ≤ e(b)} : c ≤ a, c ∈ K}` and
    /// `∃^σa = ⋁{⋀{e(∃b) : c ≤ e(b)} : c ≤ a, c ∈ K}` on every target
    /// element and compares them with the target operations.
    pub fn canonical_extension_ops(&self) -> ExtensionOps {
        let (a, t) = (&self.source, &self.target.algebra);
        let below = |c: usize| a.elements().filter(move |&b| t.leq(c, self.map[b]));
        let ocomp: Vec<usize> = t
            .elements()
            .map(|u| {
                t.meet_all(
                    self.closed
                        .iter()
                        .filter(|&&c| t.leq(c, u))
                        .map(|&c| t.join_all(below(c).map(|b| self.map[a.ocomp(b)]))),
                )
            })
            .collect();
        let exists: Vec<Vec<usize>> = (0..a.dims())
            .map(|i| {
                t.elements()
                    .map(|u| {
                        t.join_all(
                            self.closed
                                .iter()
                                .filter(|&&c| t.leq(c, u))
                                .map(|&c| t.meet_all(below(c).map(|b| self.map[a.exists(i, b)]))),
                        )
                    })
                    .collect()
            })
            .collect();

        let mut r = ValidationReport::new(format!("extension formulas on {}", t.title()));
        let lbl = |u: usize| self.target_label(u);
        let w = first_failure(t.elements(), |&u| ocomp[u] != t.ocomp(u));
        r.record("sigma.ocomp", w.map(|u| vec![lbl(u), lbl(ocomp[u]), lbl(t.ocomp(u))]));
        for (i, e) in exists.iter().enumerate() {
            let w = first_failure(t.elements(), |&u| e[u] != t.exists(i, u));
            r.record(format!("sigma.E{i}"), w.map(|u| vec![lbl(u), lbl(e[u]), lbl(t.exists(i, u))]));
            let w = first_failure(a.elements(), |&b| e[self.map[b]] != self.map[a.exists(i, b)]);
            r.record(format!("sigma.E{i}.on-image"), w.map(|b| a.label(&[b])));
        }
        ExtensionOps { ocomp, exists, report: r }
    }
}

/// Result of evaluating the extension formulas: tables over the target's
/// elements, and the comparison report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOps {
    pub ocomp: Vec<usize>,
    pub exists: Vec<Vec<usize>>,
    pub report: ValidationReport,
}

/// `φ: A → B(X_A)` on the Goldblatt frame of `a`.
pub fn phi(a: &CylindricOrtholattice, limits: &Limits) -> Result<Embedding> {
    let g = goldblatt_frame(a);
    let target = g.frame.bclosed_algebra(&format!("B(X_{})", a.title()), limits)?;
    Embedding::new(a.clone(), target, g.spectrum.members(), limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCompletion {
    pub embedding: Embedding,
    /// Embedding, density and compactness certificates plus the
    /// target's own axiom check.
    pub report: ValidationReport,
}

impl CanonicalCompletion {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Assembles the embedding, density, compactness and target-validity
/// reports for `⟨φ, target⟩`.
pub fn certify(e: Embedding, boolean: bool, limits: &Limits) -> Result<CanonicalCompletion> {
    let mut report = ValidationReport::new(format!("completion {} -> {}", e.source.title(), e.target.algebra.title()));
    report.absorb("embedding", e.verify_embedding()?);
    report.absorb("", e.verify_dense());
    report.absorb("", e.verify_compact(limits));
    report.absorb("target", e.target.algebra.validate(boolean));
    Ok(CanonicalCompletion { embedding: e, report })
}

pub fn canonical_completion(a: &CylindricOrtholattice, limits: &Limits) -> Result<CanonicalCompletion> {
    certify(phi(a, limits)?, false, limits)
}
