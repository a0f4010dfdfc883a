//! Dense bitsets over a finite index range, and square relations stored as
//! bitset rows.
//!
//! Every carrier in the workbench (algebra elements, frame points, members of
//! set families) is indexed `0..n`, so subsets and relations are bit matrices.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A finite set of indices. Trailing zero words are trimmed so that equality
/// and hashing do not depend on the universe size the set was built with.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Subset {
    words: Vec<u64>,
}

impl Subset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        let mut s = Subset { words };
        s.trim();
        s
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::empty();
        s.insert(i);
        s
    }

    /// Builds a set from a bitmask over the first 64 indices.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Subset { words: vec![mask] };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, i: usize) {
        let (w, b) = (i / WORD, i % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, i: usize) {
        let (w, b) = (i / WORD, i % WORD);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        let (w, b) = (i / WORD, i % WORD);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Subset { words }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = Subset {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        let mut s = Subset {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    /// Complement relative to the universe `0..n`.
    pub fn complement(&self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Image of the set under an index map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Subset {
        self.iter().map(f).collect()
    }

    /// Preimage of the set under a total map on `0..map.len()`.
    pub fn preimage(&self, map: &[usize]) -> Subset {
        (0..map.len()).filter(|&i| self.contains(map[i])).collect()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Subset::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Lexicographic order on the increasing member sequences, so `{0,3} < {1} < {1,2}`
/// and the empty set is least.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Order used for set families rendered as algebras: by cardinality, then
/// lexicographically. The empty set comes first and the full set last.
pub fn family_order(a: &Subset, b: &Subset) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A binary relation on `0..n`, stored as one bitset row per source index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<Subset>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![Subset::empty(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Relation {
            rows: (0..n).map(Subset::singleton).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Relation {
            rows: vec![Subset::full(n); n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Relation {
            rows: (0..n)
                .map(|x| (0..n).filter(|&y| f(x, y)).collect())
                .collect(),
        }
    }

    /// Row `x` is the image of `x`; members must be below `rows.len()`.
    pub fn from_rows(rows: Vec<Subset>) -> Self {
        Relation { rows }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x].remove(y);
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : x R y}`.
    pub fn row(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    /// Relational image `R[U] = {y : x R y for some x in U}`.
    pub fn image(&self, u: &Subset) -> Subset {
        u.iter()
            .fold(Subset::empty(), |acc, x| acc.union(&self.rows[x]))
    }

    /// `self ∘ other` read left to right: `x (R∘S) z` iff `x R y` and `y S z`
    /// for some `y`.
    pub fn then(&self, other: &Relation) -> Relation {
        Relation {
            rows: self.rows.iter().map(|r| other.image(r)).collect(),
        }
    }

    pub fn converse(&self) -> Relation {
        Relation::from_fn(self.size(), |x, y| self.contains(y, x))
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn reflexive_transitive_closure(&self) -> Relation {
        let n = self.size();
        let mut r = self.clone();
        for x in 0..n {
            r.insert(x, x);
        }
        for k in 0..n {
            for x in 0..n {
                if r.contains(x, k) {
                    let row = r.rows[k].clone();
                    r.rows[x] = r.rows[x].union(&row);
                }
            }
        }
        r
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pairs()).finish()
    }
}
