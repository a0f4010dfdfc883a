//! The JSON-shaped document format shared by every subcommand.
//!
//! One schema covers algebras, frames, spaces, homomorphisms and point maps.
//! Elements and points are referenced by name; tables that are indexed by
//! the carrier (`ocomp`, each row of `exists`, `map`) list one entry per
//! element in declaration order.

use std::io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CylindricOrtholattice, FiniteBoundedLattice, Ortholattice};
use crate::duality::SpaceMap;
use crate::error::{Error, Limits};
use crate::frames::CylindricOrthoFrame;
use crate::subset::{Relation, Subset};
use crate::topology::FiniteSpace;
use crate::AlgebraHom;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WorkbenchDocument {
    Algebra(CylindricOrtholattice),
    Frame { name: String, frame: CylindricOrthoFrame },
    Space(FiniteSpace),
    Hom(AlgebraHom),
    Map(SpaceMap),
}

impl WorkbenchDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            WorkbenchDocument::Algebra(_) => "algebra",
            WorkbenchDocument::Frame { .. } => "frame",
            WorkbenchDocument::Space(_) => "space",
            WorkbenchDocument::Hom(_) => "hom",
            WorkbenchDocument::Map(_) => "map",
        }
    }

    pub fn name(&self) -> String {
        match self {
            WorkbenchDocument::Algebra(a) => a.title().to_string(),
            WorkbenchDocument::Frame { name, .. } => name.clone(),
            WorkbenchDocument::Space(x) => x.name.clone(),
            WorkbenchDocument::Hom(h) => format!("{} -> {}", h.source.title(), h.target.title()),
            WorkbenchDocument::Map(f) => format!("{} -> {}", f.source.name, f.target.name),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    /// A size guard tripped while building the structure.
    #[error(transparent)]
    Resource(Error),
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leq: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meet: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ocomp: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perp: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dims: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exists: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relations: Option<Vec<Vec<(String, String)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    deltas: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<Box<Raw>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<Box<Raw>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    map: Option<Vec<String>>,
}

impl Raw {
    fn present(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut add = |on: bool, f: &'static str| {
            if on {
                out.push(f)
            }
        };
        add(self.elements.is_some(), "elements");
        add(self.covers.is_some(), "covers");
        add(self.leq.is_some(), "leq");
        add(self.meet.is_some(), "meet");
        add(self.join.is_some(), "join");
        add(self.ocomp.is_some(), "ocomp");
        add(self.points.is_some(), "points");
        add(self.basis.is_some(), "basis");
        add(self.perp.is_some(), "perp");
        add(self.dims.is_some(), "dims");
        add(self.exists.is_some(), "exists");
        add(self.delta.is_some(), "delta");
        add(self.relations.is_some(), "relations");
        add(self.deltas.is_some(), "deltas");
        add(self.source.is_some(), "source");
        add(self.target.is_some(), "target");
        add(self.map.is_some(), "map");
        out
    }
}

const ALGEBRA_FIELDS: &[&str] = &["elements", "covers", "leq", "meet", "join", "ocomp", "dims", "exists", "delta"];
const FRAME_FIELDS: &[&str] = &["points", "perp", "dims", "relations", "deltas"];
const SPACE_FIELDS: &[&str] = &["points", "basis", "perp", "dims", "relations", "deltas"];
const ARROW_FIELDS: &[&str] = &["source", "target", "map"];

/// A semantic error before it is given a position: the field it concerns,
/// the nested payload it sits in, and optionally the offending name.
struct Semantic {
    scope: Option<&'static str>,
    field: &'static str,
    culprit: Option<String>,
    message: String,
}

type Sem<T> = std::result::Result<T, Semantic>;

fn sem(scope: Option<&'static str>, field: &'static str, message: impl Into<String>) -> Semantic {
    Semantic {
        scope,
        field,
        culprit: None,
        message: message.into(),
    }
}

fn missing(scope: Option<&'static str>, field: &'static str) -> Semantic {
    sem(scope, field, format!("missing field `{field}`"))
}

fn find_key(text: &str, from: usize, key: &str) -> Option<usize> {
    let quoted = format!("\"{key}\"");
    let mut at = from;
    while let Some(p) = text[at..].find(&quoted) {
        let start = at + p;
        let rest = text[start + quoted.len()..].trim_start();
        if rest.starts_with(':') {
            return Some(start);
        }
        at = start + quoted.len();
    }
    None
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn locate(text: &str, s: Semantic) -> DocumentError {
    let mut at = s.scope.and_then(|k| find_key(text, 0, k)).unwrap_or(0);
    match find_key(text, at, s.field) {
        Some(p) => {
            at = p;
            if let Some(c) = &s.culprit {
                let quoted = serde_json::to_string(c).unwrap_or_default();
                if let Some(q) = text[at..].find(&quoted) {
                    at += q;
                }
            }
        }
        None => at = find_key(text, at, "kind").unwrap_or(at),
    }
    let (line, column) = line_col(text, at);
    DocumentError::Parse {
        line,
        column,
        message: s.message,
    }
}

/// Resolves names against a carrier for one field.
struct Names<'a> {
    names: &'a [String],
    scope: Option<&'static str>,
    what: &'static str,
}

impl Names<'_> {
    fn index(&self, field: &'static str, name: &str) -> Sem<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Semantic {
            scope: self.scope,
            field,
            culprit: Some(name.to_string()),
            message: format!("`{field}` references unknown {} `{name}`", self.what),
        })
    }

    fn pairs(&self, field: &'static str, pairs: &[(String, String)]) -> Sem<Vec<(usize, usize)>> {
        pairs
            .iter()
            .map(|(a, b)| Ok((self.index(field, a)?, self.index(field, b)?)))
            .collect()
    }

    fn list(&self, field: &'static str, xs: &[String]) -> Sem<Vec<usize>> {
        xs.iter().map(|x| self.index(field, x)).collect()
    }

    fn set(&self, field: &'static str, xs: &[String]) -> Sem<Subset> {
        Ok(self.list(field, xs)?.into_iter().collect())
    }

    /// A table with one entry per carrier element.
    fn table(&self, field: &'static str, xs: &[String]) -> Sem<Vec<usize>> {
        if xs.len() != self.names.len() {
            return Err(sem(
                self.scope,
                field,
                format!("`{field}` needs {} entries, got {}", self.names.len(), xs.len()),
            ));
        }
        self.list(field, xs)
    }
}

fn check_carrier(scope: Option<&'static str>, field: &'static str, names: &[String]) -> Sem<()> {
    if names.is_empty() {
        return Err(sem(scope, field, format!("`{field}` is empty")));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Semantic {
                scope,
                field,
                culprit: Some(a.clone()),
                message: format!("`{field}` lists `{a}` twice"),
            });
        }
    }
    Ok(())
}

fn check_fields(raw: &Raw, scope: Option<&'static str>, kind: &str, allowed: &[&str]) -> Sem<()> {
    match raw.present().into_iter().find(|f| !allowed.contains(f)) {
        Some(f) => Err(sem(scope, f, format!("field `{f}` does not belong in a {kind} document"))),
        None => Ok(()),
    }
}

/// Dimension count from `dims` or the length of the per-dimension list.
fn dims_of(scope: Option<&'static str>, dims: Option<usize>, field: &'static str, len: Option<usize>) -> Sem<usize> {
    match (dims, len) {
        (Some(m), Some(l)) if m != l => Err(sem(scope, field, format!("`dims` is {m} but `{field}` has {l} entries"))),
        (Some(m), _) => Ok(m),
        (None, l) => Ok(l.unwrap_or(0)),
    }
}

fn structure(scope: Option<&'static str>, field: &'static str, e: Error) -> Semantic {
    let message = match e {
        Error::Structure(m) | Error::Argument(m) | Error::Contract(m) => m,
        other => other.to_string(),
    };
    sem(scope, field, message)
}

fn algebra_from(raw: &Raw, scope: Option<&'static str>) -> Sem<CylindricOrtholattice> {
    check_fields(raw, scope, "algebra", ALGEBRA_FIELDS)?;
    let names = raw.elements.clone().ok_or_else(|| missing(scope, "elements"))?;
    check_carrier(scope, "elements", &names)?;
    if names.len() < 2 {
        return Err(sem(scope, "elements", "an algebra needs at least two elements"));
    }
    let n = names.len();
    let el = Names {
        names: &names,
        scope,
        what: "element",
    };
    let (field, leq) = match (&raw.covers, &raw.leq) {
        (Some(c), None) => (
            "covers",
            Relation::from_pairs(n, el.pairs("covers", c)?).reflexive_transitive_closure(),
        ),
        (None, Some(l)) => ("leq", Relation::from_pairs(n, el.pairs("leq", l)?.into_iter().chain((0..n).map(|a| (a, a))))),
        (Some(_), Some(_)) => return Err(sem(scope, "leq", "give either `covers` or `leq`, not both")),
        (None, None) => return Err(missing(scope, "covers")),
    };
    let lattice = FiniteBoundedLattice::from_order(names.clone(), leq).map_err(|e| structure(scope, field, e))?;
    for (field, given, op) in [
        ("meet", &raw.meet, FiniteBoundedLattice::meet as fn(&FiniteBoundedLattice, usize, usize) -> usize),
        ("join", &raw.join, FiniteBoundedLattice::join),
    ] {
        let Some(rows) = given else { continue };
        if rows.len() != n {
            return Err(sem(scope, field, format!("`{field}` needs {n} rows, got {}", rows.len())));
        }
        for (a, row) in rows.iter().enumerate() {
            let row = el.table(field, row)?;
            if let Some(b) = (0..n).find(|&b| row[b] != op(&lattice, a, b)) {
                return Err(Semantic {
                    scope,
                    field,
                    culprit: Some(names[row[b]].clone()),
                    message: format!(
                        "`{field}` table gives `{}` for ({}, {}) but the order gives `{}`",
                        names[row[b]],
                        names[a],
                        names[b],
                        names[op(&lattice, a, b)]
                    ),
                });
            }
        }
    }
    let ocomp = raw.ocomp.as_ref().ok_or_else(|| missing(scope, "ocomp"))?;
    let ol = Ortholattice::new(lattice, el.table("ocomp", ocomp)?).map_err(|e| structure(scope, "ocomp", e))?;
    let m = dims_of(scope, raw.dims, "exists", raw.exists.as_ref().map(Vec::len))?;
    let exists = match &raw.exists {
        Some(rows) => rows.iter().map(|r| el.table("exists", r)).collect::<Sem<Vec<_>>>()?,
        None if m == 0 => Vec::new(),
        None => return Err(missing(scope, "exists")),
    };
    let delta = match &raw.delta {
        Some(rows) => {
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(sem(scope, "delta", format!("`delta` must be a {m}x{m} matrix")));
            }
            rows.iter().map(|r| el.list("delta", r)).collect::<Sem<Vec<_>>>()?
        }
        None if m == 0 => Vec::new(),
        None => return Err(missing(scope, "delta")),
    };
    let name = raw.name.clone().unwrap_or_else(|| "A".to_string());
    CylindricOrtholattice::new(name, ol, exists, delta).map_err(|e| structure(scope, "exists", e))
}

/// Points, the orthogonality relation and the dimension-indexed decorations
/// shared by frames and spaces.
struct Decorations {
    points: Vec<String>,
    perp: Option<Relation>,
    rels: Vec<Relation>,
    deltas: Vec<Vec<Subset>>,
}

fn decorations_from(raw: &Raw, scope: Option<&'static str>) -> Sem<Decorations> {
    let points = raw.points.clone().ok_or_else(|| missing(scope, "points"))?;
    check_carrier(scope, "points", &points)?;
    let n = points.len();
    let pt = Names {
        names: &points,
        scope,
        what: "point",
    };
    let perp = match &raw.perp {
        Some(p) => Some(Relation::from_pairs(n, pt.pairs("perp", p)?)),
        None => None,
    };
    let m = dims_of(scope, raw.dims, "relations", raw.relations.as_ref().map(Vec::len))?;
    let rels = match &raw.relations {
        Some(rs) => rs
            .iter()
            .map(|r| Ok(Relation::from_pairs(n, pt.pairs("relations", r)?)))
            .collect::<Sem<Vec<_>>>()?,
        None if m == 0 => Vec::new(),
        None => return Err(missing(scope, "relations")),
    };
    let deltas = match &raw.deltas {
        Some(rows) => {
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(sem(scope, "deltas", format!("`deltas` must be a {m}x{m} matrix of point sets")));
            }
            rows.iter()
                .map(|r| r.iter().map(|d| pt.set("deltas", d)).collect::<Sem<Vec<_>>>())
                .collect::<Sem<Vec<_>>>()?
        }
        None if m == 0 => Vec::new(),
        None => return Err(missing(scope, "deltas")),
    };
    Ok(Decorations {
        points,
        perp,
        rels,
        deltas,
    })
}

fn frame_from(raw: &Raw, scope: Option<&'static str>) -> Sem<(String, CylindricOrthoFrame)> {
    check_fields(raw, scope, "frame", FRAME_FIELDS)?;
    let d = decorations_from(raw, scope)?;
    let perp = d.perp.ok_or_else(|| missing(scope, "perp"))?;
    let frame = CylindricOrthoFrame::new(d.points, perp, d.rels, d.deltas).map_err(|e| structure(scope, "points", e))?;
    Ok((raw.name.clone().unwrap_or_else(|| "X".to_string()), frame))
}

fn space_from(raw: &Raw, scope: Option<&'static str>, limits: &Limits) -> Result<FiniteSpace, Result<Semantic, Error>> {
    check_fields(raw, scope, "space", SPACE_FIELDS).map_err(Ok)?;
    let d = decorations_from(raw, scope).map_err(Ok)?;
    let pt = Names {
        names: &d.points,
        scope,
        what: "point",
    };
    let basis = raw.basis.as_ref().ok_or_else(|| Ok(missing(scope, "basis")))?;
    let basis = basis.iter().map(|b| pt.set("basis", b)).collect::<Sem<Vec<_>>>().map_err(Ok)?;
    let name = raw.name.clone().unwrap_or_else(|| "X".to_string());
    let mut space = FiniteSpace::from_basis(name, d.points.clone(), basis, limits).map_err(|e| match e {
        Error::Resource { .. } => Err(e),
        e => Ok(structure(scope, "basis", e)),
    })?;
    if let Some(p) = d.perp {
        space = space.with_perp(p).map_err(|e| Ok(structure(scope, "perp", e)))?;
    }
    if !d.rels.is_empty() {
        space = space
            .with_relations(d.rels, d.deltas)
            .map_err(|e| Ok(structure(scope, "relations", e)))?;
    }
    Ok(space)
}

fn nested<'a>(raw: &'a Raw, field: &'static str, kind: &str) -> Sem<&'a Raw> {
    let inner = raw.source.as_deref().filter(|_| field == "source");
    let inner = inner.or(raw.target.as_deref().filter(|_| field == "target"));
    let inner = inner.ok_or_else(|| missing(None, field))?;
    if inner.version.is_some() {
        return Err(sem(Some(field), "version", "nested payloads carry no `version`"));
    }
    match inner.kind.as_deref() {
        Some(k) if k != kind => Err(sem(Some(field), "kind", format!("`{field}` must be a {kind}, not a {k}"))),
        _ => Ok(inner),
    }
}

/// Parses a document with the default size guard.
pub fn parse_document(text: &str) -> Result<WorkbenchDocument, DocumentError> {
    parse_document_with(text, &Limits::default())
}

/// Parses and validates a document. Syntax, shape and name errors carry the
/// line and column they were found at.
pub fn parse_document_with(text: &str, limits: &Limits) -> Result<WorkbenchDocument, DocumentError> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    })?;
    let fail = |s: Semantic| locate(text, s);
    match raw.version {
        None => return Err(fail(missing(None, "version"))),
        Some(FORMAT_VERSION) => {}
        Some(v) => return Err(fail(sem(None, "version", format!("unsupported format version {v}")))),
    }
    let kind = raw.kind.clone().ok_or_else(|| fail(missing(None, "kind")))?;
    let space = |r: &Raw, scope| {
        space_from(r, scope, limits).map_err(|e| match e {
            Ok(s) => fail(s),
            Err(e) => DocumentError::Resource(e),
        })
    };
    match kind.as_str() {
        "algebra" => Ok(WorkbenchDocument::Algebra(algebra_from(&raw, None).map_err(fail)?)),
        "frame" => {
            let (name, frame) = frame_from(&raw, None).map_err(fail)?;
            Ok(WorkbenchDocument::Frame { name, frame })
        }
        "space" => Ok(WorkbenchDocument::Space(space(&raw, None)?)),
        "hom" => {
            check_fields(&raw, None, "hom", ARROW_FIELDS).map_err(fail)?;
            let s = algebra_from(nested(&raw, "source", "algebra").map_err(fail)?, Some("source")).map_err(fail)?;
            let t = algebra_from(nested(&raw, "target", "algebra").map_err(fail)?, Some("target")).map_err(fail)?;
            let map = raw.map.as_ref().ok_or_else(|| fail(missing(None, "map")))?;
            if map.len() != s.len() {
                return Err(fail(sem(None, "map", format!("`map` needs {} entries, got {}", s.len(), map.len()))));
            }
            let tn = Names {
                names: t.names(),
                scope: None,
                what: "target element",
            };
            let map = tn.list("map", map).map_err(fail)?;
            AlgebraHom::new(s, t, map)
                .map(WorkbenchDocument::Hom)
                .map_err(|e| fail(structure(None, "map", e)))
        }
        "map" => {
            check_fields(&raw, None, "map", ARROW_FIELDS).map_err(fail)?;
            let s = space(nested(&raw, "source", "space").map_err(fail)?, Some("source"))?;
            let t = space(nested(&raw, "target", "space").map_err(fail)?, Some("target"))?;
            let map = raw.map.as_ref().ok_or_else(|| fail(missing(None, "map")))?;
            if map.len() != s.len() {
                return Err(fail(sem(None, "map", format!("`map` needs {} entries, got {}", s.len(), map.len()))));
            }
            let tn = Names {
                names: &t.points,
                scope: None,
                what: "target point",
            };
            let map = tn.list("map", map).map_err(fail)?;
            SpaceMap::new(s, t, map)
                .map(WorkbenchDocument::Map)
                .map_err(|e| fail(structure(None, "map", e)))
        }
        other => Err(fail(sem(None, "kind", format!("unknown document kind `{other}`")))),
    }
}

fn names_of(names: &[String], xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| names[x].clone()).collect()
}

fn pairs_of(names: &[String], r: &Relation) -> Vec<(String, String)> {
    r.pairs().map(|(x, y)| (names[x].clone(), names[y].clone())).collect()
}

fn raw_algebra(a: &CylindricOrtholattice) -> Raw {
    let names = a.names();
    Raw {
        name: Some(a.title().to_string()),
        elements: Some(names.to_vec()),
        covers: Some(a.covers().into_iter().map(|(x, y)| (names[x].clone(), names[y].clone())).collect()),
        ocomp: Some(names_of(names, a.ocomp_table().iter().copied())),
        dims: Some(a.dims()),
        exists: (a.dims() > 0).then(|| (0..a.dims()).map(|i| names_of(names, a.exists_table(i).iter().copied())).collect()),
        delta: (a.dims() > 0).then(|| a.delta_table().iter().map(|row| names_of(names, row.iter().copied())).collect()),
        ..Raw::default()
    }
}

fn raw_decorations(raw: &mut Raw, points: &[String], perp: Option<&Relation>, rels: &[Relation], deltas: &[Vec<Subset>]) {
    raw.points = Some(points.to_vec());
    raw.perp = perp.map(|p| pairs_of(points, p));
    raw.dims = Some(rels.len());
    if !rels.is_empty() {
        raw.relations = Some(rels.iter().map(|r| pairs_of(points, r)).collect());
        raw.deltas = Some(
            deltas
                .iter()
                .map(|row| row.iter().map(|d| names_of(points, d.iter())).collect())
                .collect(),
        );
    }
}

fn raw_space(x: &FiniteSpace) -> Raw {
    let mut raw = Raw {
        name: Some(x.name.clone()),
        ..Raw::default()
    };
    raw_decorations(&mut raw, &x.points, x.perp.as_ref(), &x.rels, &x.deltas);
    raw.basis = Some(x.basis().iter().map(|b| names_of(&x.points, b.iter())).collect());
    raw
}

fn raw_document(doc: &WorkbenchDocument) -> Raw {
    let mut raw = match doc {
        WorkbenchDocument::Algebra(a) => raw_algebra(a),
        WorkbenchDocument::Frame { name, frame } => {
            let mut raw = Raw {
                name: Some(name.clone()),
                ..Raw::default()
            };
            raw_decorations(&mut raw, &frame.points, Some(&frame.perp), &frame.rels, &frame.deltas);
            raw
        }
        WorkbenchDocument::Space(x) => raw_space(x),
        WorkbenchDocument::Hom(h) => Raw {
            source: Some(Box::new(raw_algebra(&h.source))),
            target: Some(Box::new(raw_algebra(&h.target))),
            map: Some(names_of(h.target.names(), h.map.iter().copied())),
            ..Raw::default()
        },
        WorkbenchDocument::Map(f) => Raw {
            source: Some(Box::new(raw_space(&f.source))),
            target: Some(Box::new(raw_space(&f.target))),
            map: Some(names_of(&f.target.points, f.map.iter().copied())),
            ..Raw::default()
        },
    };
    raw.version = Some(FORMAT_VERSION);
    raw.kind = Some(doc.kind().to_string());
    raw
}

/// Objects one key per line, arrays on a single line.
#[derive(Default)]
struct DocFormatter {
    indent: usize,
    in_array: usize,
}

impl DocFormatter {
    fn newline<W: ?Sized + io::Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..self.indent {
            w.write_all(b"  ")?;
        }
        Ok(())
    }
}

impl serde_json::ser::Formatter for DocFormatter {
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.in_array += 1;
        w.write_all(b"[")
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.in_array -= 1;
        w.write_all(b"]")
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.in_array == 0 {
            self.indent += 1;
        }
        w.write_all(b"{")
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.in_array == 0 {
            self.indent -= 1;
            self.newline(w)?;
        }
        w.write_all(b"}")
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        if self.in_array == 0 {
            self.newline(w)
        } else if first {
            Ok(())
        } else {
            w.write_all(b" ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

/// Canonical text of a document. Orders are written as covering pairs,
/// relations as all their pairs.
pub fn render_document(doc: &WorkbenchDocument) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, DocFormatter::default());
    raw_document(doc).serialize(&mut ser).expect("documents serialize");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const B4: &str = r#"{
  "version": 1,
  "kind": "algebra",
  "name": "B4",
  "elements": ["0", "a", "b", "1"],
  "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
  "ocomp": ["1", "b", "a", "0"]
}"#;

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_document(text).unwrap_err() {
            DocumentError::Parse { line, column, message } => (line, column, message),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn b4_parses_with_four_elements() {
        let WorkbenchDocument::Algebra(a) = parse_document(B4).unwrap() else {
            panic!("not an algebra")
        };
        assert_eq!(a.len(), 4);
        assert_eq!(a.dims(), 0);
        assert_eq!(a.ocomp(1), 2);
    }

    #[test]
    fn unknown_ocomp_element_is_named_with_position() {
        let text = B4.replace(r#""ocomp": ["1", "b", "a", "0"]"#, r#""ocomp": ["1", "b", "z", "0"]"#);
        let (line, column, message) = parse_err(&text);
        assert!(message.contains("`z`"), "{message}");
        assert_eq!((line, column), (7, 23));
    }

    #[test]
    fn syntax_errors_carry_serde_positions() {
        let (line, _, _) = parse_err("{\n  \"version\": 1,\n  \"kind\": \"algebra\",,\n}");
        assert_eq!(line, 3);
    }

    #[test]
    fn rejects_unknown_kind_and_fields() {
        assert!(parse_err(&B4.replace("\"algebra\"", "\"monoid\"")).2.contains("unknown document kind"));
        let text = B4.replace("\"name\"", "\"basis\": [],\n  \"name\"");
        assert!(parse_err(&text).2.contains("does not belong"));
        let text = B4.replace("\"name\"", "\"colour\": 1,\n  \"name\"");
        assert!(parse_err(&text).2.contains("colour"));
    }

    #[test]
    fn rejects_non_lattice_order_and_conflicting_tables() {
        let text = B4.replace(r#", ["a", "1"], ["b", "1"]"#, "");
        let m = parse_err(&text).2;
        assert!(m.contains("no greatest lower bound"), "{m}");
        let text = B4.replace(
            "\"ocomp\"",
            "\"meet\": [[\"0\",\"0\",\"0\",\"0\"],[\"0\",\"a\",\"a\",\"a\"],[\"0\",\"0\",\"b\",\"b\"],[\"0\",\"a\",\"b\",\"1\"]],\n  \"ocomp\"",
        );
        assert!(parse_err(&text).2.contains("`meet` table"));
    }

    #[test]
    fn catalog_round_trips() {
        for a in catalog::algebras() {
            let doc = WorkbenchDocument::Algebra(a);
            let text = render_document(&doc);
            assert_eq!(parse_document(&text).unwrap(), doc, "{text}");
        }
        for (_, h) in catalog::morphisms() {
            let doc = WorkbenchDocument::Hom(h);
            assert_eq!(parse_document(&render_document(&doc)).unwrap(), doc);
        }
    }
}
