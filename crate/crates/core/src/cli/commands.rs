use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use super::document::{parse_document_with, render_document, DocumentError, WorkbenchDocument};
use super::dot::{algebra_dot, frame_dot, order_dot};
use crate::algebra::CylindricOrtholattice;
use crate::catalog;
use crate::completion::canonical_completion;
use crate::duality::{
    check_coincidence, compare_families, dual_algebra, dual_space, reg_completion_ba, validate_space,
    validate_space_map, verify_commuting_squares, verify_map_square, verify_realization, verify_representation, Track,
};
use crate::error::{Error, Limits, DEFAULT_MAX_FAMILY};
use crate::filters::{classify_filter, cross_check_spectrum, enumerate_proper_filters};
use crate::frames::goldblatt_frame;
use crate::report::{Certificate, ValidationReport};

/// Finite-model workbench for cylindric ortholattices and their dual spaces.
#[derive(Debug, Parser)]
#[command(name = "cylwb", version)]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the size of any enumerated set family.
    #[arg(long, global = true, value_name = "N", env = "CYLWB_MAX_SIZE")]
    max_size: Option<usize>,
    /// Use the Boolean track (F0/G0, UV-spaces) instead of S0/A0.
    #[arg(long, global = true)]
    boolean: bool,
    /// Give plain ortholattices this many trivial dimensions.
    #[arg(long, global = true, value_name = "N")]
    dims: Option<usize>,
    /// Read inputs from the built-in catalog by name; with no names, run
    /// over the whole catalog.
    #[arg(long, global = true)]
    seed_catalog: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Inputs {
    /// Document files (`-` for stdin), or catalog names with --seed-catalog.
    inputs: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the axiom batteries.
    Validate(Inputs),
    /// List proper filters and cross-check them against the upset scan.
    Filters(Inputs),
    /// Print the dual space of an algebra as a space document.
    Spectrum(Inputs),
    /// Certify the canonical completion and the extension formulas.
    Complete(Inputs),
    /// Print the dual algebra of a space, or B(X) of a frame.
    Dualize(Inputs),
    /// Certify the representation or realization isomorphism.
    Roundtrip(Inputs),
    /// Dualize a morphism and check both commuting squares.
    HomDual(Inputs),
    /// Compare B(F(A)) with the regular opens of filter inclusion.
    Coincide(Inputs),
    /// Emit Graphviz text.
    Dot {
        #[command(flatten)]
        inputs: Inputs,
        /// Draw the Goldblatt frame of an algebra instead of its Hasse diagram.
        #[arg(long)]
        frame: bool,
    },
    /// List the built-in catalog, or write it out as documents.
    Catalog {
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
}

/// Exit statuses.
pub const PASS: i32 = 0;
pub const FAIL: i32 = 1;
pub const USAGE: i32 = 2;
pub const RESOURCE: i32 = 3;

enum Stop {
    Usage(String),
    Resource(String),
    Failed(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Stop::Resource(e.to_string()),
            Error::Contract(_) => Stop::Failed(e.to_string()),
            Error::Structure(_) | Error::Argument(_) => Stop::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Stop {
    fn from(e: io::Error) -> Self {
        Stop::Usage(e.to_string())
    }
}

/// One unit of output: its JSON form, its text form and whether it passed.
struct Item {
    value: Value,
    text: String,
    pass: bool,
}

impl Item {
    fn report(r: &ValidationReport) -> Self {
        Item {
            value: serde_json::to_value(r).expect("reports serialize"),
            text: r.to_string(),
            pass: r.passed(),
        }
    }

    fn certificate(c: &Certificate) -> Self {
        Item {
            value: serde_json::to_value(c).expect("certificates serialize"),
            text: c.to_string(),
            pass: c.passed(),
        }
    }

    /// Printed but never counted as a failure.
    fn informational(r: &ValidationReport) -> Self {
        Item {
            value: json!({ "informational": true, "report": r }),
            text: r.to_string(),
            pass: true,
        }
    }

    fn raw(text: String) -> Self {
        Item {
            value: Value::String(text.clone()),
            text,
            pass: true,
        }
    }
}

struct Session<'a> {
    cli: &'a Cli,
    limits: Limits,
    track: Track,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn read(&self, input: &str) -> Result<WorkbenchDocument, Stop> {
        let text = if input == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(input).map_err(|e| Stop::Usage(format!("{input}: {e}")))?
        };
        parse_document_with(&text, &self.limits).map_err(|e| match e {
            DocumentError::Parse { .. } => Stop::Usage(format!("{input}: {e}")),
            DocumentError::Resource(e) => Stop::Resource(format!("{input}: {e}")),
        })
    }

    fn catalog_entry(&self, name: &str) -> Result<WorkbenchDocument, Stop> {
        if let Some(a) = catalog::by_name(name) {
            return Ok(WorkbenchDocument::Algebra(a));
        }
        catalog::morphisms()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, h)| WorkbenchDocument::Hom(h))
            .ok_or_else(|| Stop::Usage(format!("no catalog entry named `{name}`")))
    }

    fn documents(&self, inputs: &[String], morphisms: bool) -> Result<Vec<WorkbenchDocument>, Stop> {
        let docs: Vec<WorkbenchDocument> = if self.cli.seed_catalog && inputs.is_empty() {
            if morphisms {
                catalog::morphisms().into_iter().map(|(_, h)| WorkbenchDocument::Hom(h)).collect()
            } else if self.cli.boolean {
                catalog::boolean_algebras().into_iter().map(WorkbenchDocument::Algebra).collect()
            } else {
                catalog::algebras().into_iter().map(WorkbenchDocument::Algebra).collect()
            }
        } else if inputs.is_empty() {
            return Err(Stop::Usage("no input given (pass a document path or --seed-catalog)".into()));
        } else if self.cli.seed_catalog {
            inputs.iter().map(|n| self.catalog_entry(n)).collect::<Result<_, _>>()?
        } else {
            inputs.iter().map(|p| self.read(p)).collect::<Result<_, _>>()?
        };
        docs.into_iter().map(|d| self.with_dims(d)).collect()
    }

    fn decorate(&self, a: CylindricOrtholattice) -> Result<CylindricOrtholattice, Stop> {
        match self.cli.dims {
            Some(m) if a.dims() == 0 && m > 0 => Ok(CylindricOrtholattice::trivial(
                a.title().to_string(),
                a.ortholattice().clone(),
                m,
            )),
            Some(m) if a.dims() != m && a.dims() != 0 => Err(Stop::Usage(format!(
                "{} has {} dimensions but --dims asks for {m}",
                a.title(),
                a.dims()
            ))),
            _ => Ok(a),
        }
    }

    fn with_dims(&self, doc: WorkbenchDocument) -> Result<WorkbenchDocument, Stop> {
        Ok(match doc {
            WorkbenchDocument::Algebra(a) => WorkbenchDocument::Algebra(self.decorate(a)?),
            WorkbenchDocument::Hom(mut h) => {
                h.source = self.decorate(h.source)?;
                h.target = self.decorate(h.target)?;
                WorkbenchDocument::Hom(h)
            }
            other => other,
        })
    }

    fn emit(&mut self, items: &mut Vec<Item>, item: Item) -> Result<(), Stop> {
        if !self.cli.json {
            write!(self.out, "{}", item.text)?;
        }
        items.push(item);
        Ok(())
    }

    fn run(&mut self) -> Result<bool, Stop> {
        let (name, inputs, morphisms) = match &self.cli.command {
            Command::Validate(i) => ("validate", &i.inputs, false),
            Command::Filters(i) => ("filters", &i.inputs, false),
            Command::Spectrum(i) => ("spectrum", &i.inputs, false),
            Command::Complete(i) => ("complete", &i.inputs, false),
            Command::Dualize(i) => ("dualize", &i.inputs, false),
            Command::Roundtrip(i) => ("roundtrip", &i.inputs, false),
            Command::HomDual(i) => ("hom-dual", &i.inputs, true),
            Command::Coincide(i) => ("coincide", &i.inputs, false),
            Command::Dot { inputs, .. } => ("dot", &inputs.inputs, false),
            Command::Catalog { export } => return self.catalog(export.clone()),
        };
        let docs = self.documents(inputs, morphisms)?;
        let mut items = Vec::new();
        for doc in &docs {
            let item = self.one(doc)?;
            self.emit(&mut items, item)?;
        }
        let passed = items.iter().all(|i| i.pass);
        if self.cli.json && !matches!(self.cli.command, Command::Spectrum(_) | Command::Dualize(_) | Command::Dot { .. }) {
            let v = json!({
                "command": name,
                "passed": passed,
                "results": items.into_iter().map(|i| i.value).collect::<Vec<_>>(),
            });
            writeln!(self.out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        } else if self.cli.json {
            for i in items {
                write!(self.out, "{}", i.text)?;
            }
        }
        Ok(passed)
    }

    fn one(&self, doc: &WorkbenchDocument) -> Result<Item, Stop> {
        use WorkbenchDocument as D;
        let wrong = |what: &str| Stop::Usage(format!("{what} does not accept a {} document", doc.kind()));
        let boolean = self.cli.boolean;
        let (track, limits) = (self.track, &self.limits);
        Ok(match (&self.cli.command, doc) {
            (Command::Validate(_), D::Algebra(a)) => Item::report(&a.validate(boolean)),
            (Command::Validate(_), D::Frame { name, frame }) => {
                let mut r = frame.validate();
                r.subject = name.clone();
                Item::report(&r)
            }
            (Command::Validate(_), D::Space(x)) => {
                let mut r = x.is_spectral();
                r.absorb("", validate_space(x, track));
                Item::report(&r)
            }
            (Command::Validate(_), D::Hom(h)) => Item::report(&h.validate()?),
            (Command::Validate(_), D::Map(f)) => Item::report(&validate_space_map(f, track)),

            (Command::Filters(_), D::Algebra(a)) => {
                let mut r = cross_check_spectrum(a, limits)?;
                r.subject = format!("{} filters", a.title());
                for f in enumerate_proper_filters(a).filters {
                    let c = classify_filter(a, &f.members)?;
                    let kind = match (c.prime, c.completely_prime) {
                        (_, true) => "completely prime",
                        (true, false) => "prime",
                        _ => "not prime",
                    };
                    r.note(format!("↑{} = {}: {kind}", a.name(f.generator), a.label(&f.members.iter().collect::<Vec<_>>()).join(",")));
                }
                Item::report(&r)
            }
            (Command::Filters(_), _) => return Err(wrong("filters")),

            (Command::Spectrum(_), D::Algebra(a)) => {
                Item::raw(render_document(&D::Space(dual_space(a, track, limits)?.space)))
            }
            (Command::Spectrum(_), _) => return Err(wrong("spectrum")),

            (Command::Dualize(_), D::Space(x)) => Item::raw(render_document(&D::Algebra(dual_algebra(x, track)?.algebra))),
            (Command::Dualize(_), D::Frame { name, frame }) => {
                let b = frame.bclosed_algebra(&format!("B({name})"), limits)?;
                Item::raw(render_document(&D::Algebra(b.algebra)))
            }
            (Command::Dualize(_), _) => return Err(wrong("dualize")),

            (Command::Complete(_), D::Algebra(a)) => {
                let c = if boolean { reg_completion_ba(a, limits)? } else { canonical_completion(a, limits)? };
                let mut r = c.report.clone();
                r.absorb("", c.embedding.canonical_extension_ops().report);
                Item::report(&r)
            }
            (Command::Complete(_), _) => return Err(wrong("complete")),

            (Command::Roundtrip(_), D::Algebra(a)) => Item::certificate(&verify_representation(a, track, limits)?),
            (Command::Roundtrip(_), D::Space(x)) => Item::certificate(&verify_realization(x, track, limits)?),
            (Command::Roundtrip(_), _) => return Err(wrong("roundtrip")),

            (Command::HomDual(_), D::Hom(h)) => Item::certificate(&verify_commuting_squares(h, track, limits)?),
            (Command::HomDual(_), D::Map(f)) => Item::certificate(&verify_map_square(f, track, limits)?),
            (Command::HomDual(_), _) => return Err(wrong("hom-dual")),

            (Command::Coincide(_), D::Algebra(a)) => {
                if a.is_distributive() {
                    Item::report(&check_coincidence(a, limits)?.report)
                } else {
                    let mut c = compare_families(a, limits)?;
                    let verdict = if c.equal() { "agree" } else { "differ" };
                    c.report.note(format!("{} is not distributive: the families {verdict}; reported only", a.title()));
                    Item::informational(&c.report)
                }
            }
            (Command::Coincide(_), _) => return Err(wrong("coincide")),

            (Command::Dot { frame, .. }, D::Algebra(a)) => Item::raw(if *frame {
                frame_dot(&format!("X_{}", a.title()), &goldblatt_frame(a).frame)
            } else {
                algebra_dot(a)
            }),
            (Command::Dot { .. }, D::Frame { name, frame }) => Item::raw(frame_dot(name, frame)),
            (Command::Dot { .. }, D::Space(x)) => Item::raw(match x.frame() {
                Some(f) => frame_dot(&x.name, &f),
                None => order_dot(&x.name, &x.points, &x.specialization_order()),
            }),
            (Command::Dot { .. }, _) => return Err(wrong("dot")),
            (Command::Catalog { .. }, _) => unreachable!("handled before documents are read"),
        })
    }

    fn catalog(&mut self, export: Option<PathBuf>) -> Result<bool, Stop> {
        let mut docs: Vec<(String, WorkbenchDocument)> = catalog::algebras()
            .into_iter()
            .map(|a| (a.title().to_string(), WorkbenchDocument::Algebra(a)))
            .collect();
        docs.extend(catalog::morphisms().into_iter().map(|(n, h)| (n, WorkbenchDocument::Hom(h))));
        let mut rows = Vec::new();
        for (name, doc) in &docs {
            let size = match doc {
                WorkbenchDocument::Algebra(a) => format!("{} elements, {} dims", a.len(), a.dims()),
                WorkbenchDocument::Hom(h) => format!("{} -> {}", h.source.title(), h.target.title()),
                _ => String::new(),
            };
            let path = match &export {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    let p = dir.join(format!("{name}.json"));
                    fs::write(&p, render_document(doc))?;
                    Some(p.display().to_string())
                }
                None => None,
            };
            rows.push(json!({ "name": name, "kind": doc.kind(), "size": size, "path": path }));
            if !self.cli.json {
                match &path {
                    Some(p) => writeln!(self.out, "{name:<12} {:<8} {size}  -> {p}", doc.kind())?,
                    None => writeln!(self.out, "{name:<12} {:<8} {size}", doc.kind())?,
                }
            }
        }
        if self.cli.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(&rows).expect("json"))?;
        }
        Ok(true)
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut session = Session {
        limits: Limits::with_max_family(cli.max_size.unwrap_or(DEFAULT_MAX_FAMILY)),
        track: if cli.boolean { Track::Boolean } else { Track::Ortho },
        cli: &cli,
        out,
    };
    match session.run() {
        Ok(true) => PASS,
        Ok(false) => FAIL,
        Err(Stop::Failed(m)) => {
            let _ = writeln!(err, "cylwb: {m}");
            FAIL
        }
        Err(Stop::Usage(m)) => {
            let _ = writeln!(err, "cylwb: {m}");
            USAGE
        }
        Err(Stop::Resource(m)) => {
            let _ = writeln!(err, "cylwb: {m}");
            RESOURCE
        }
    }
}
