//! Acceptance run: every criterion at its time limit, one line each.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cylindric::catalog;
use cylindric::cli;
use cylindric::completion::canonical_completion;
use cylindric::duality::{
    check_coincidence, compare_families, dual_of_hom, f0, reg_completion_ba, s0, validate_uvo_map,
    verify_commuting_squares, verify_realization, verify_representation, Track,
};
use cylindric::filters::{cross_check_spectrum, enumerate_proper_filters};
use cylindric::topology::{validate_uv, validate_uvo};
use cylindric::{CylindricOrtholattice, Limits};

type Outcome = Result<Vec<String>, String>;
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn boolean_four() -> Vec<CylindricOrtholattice> {
    vec![catalog::b2(), catalog::b4(), catalog::b8(), catalog::ps4()]
}

fn axiom_batteries() -> Outcome {
    for (a, boolean) in common::intact() {
        let r = a.validate(boolean);
        ensure(r.passed(), || format!("{} should pass:\n{r}", a.title()))?;
    }
    let ms = common::mutilations();
    ensure(ms.len() >= 10, || "fewer than 10 mutilations".into())?;
    for m in &ms {
        common::check_mutilation(m)?;
    }
    Ok(vec![format!("{} mutilations caught", ms.len())])
}

fn filter_oracle() -> Outcome {
    let limits = Limits::default();
    for a in catalog::algebras() {
        let r = cross_check_spectrum(&a, &limits).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r}"))?;
        let n = enumerate_proper_filters(&a).len();
        ensure(n == a.len() - 1, || format!("{}: {n} filters", a.title()))?;
    }
    Ok(vec![])
}

fn canonical_completions() -> Outcome {
    let limits = Limits::default();
    let mut sampled = Vec::new();
    for a in catalog::algebras() {
        let c = canonical_completion(&a, &limits).map_err(|e| e.to_string())?;
        ensure(c.passed(), || format!("{}", c.report))?;
        if c.report.sampled {
            sampled.push(a.title().to_string());
        }
    }
    Ok(if sampled.is_empty() {
        vec![]
    } else {
        vec![format!("compactness sampled on {}", sampled.join(", "))]
    })
}

fn extension_formulas() -> Outcome {
    let limits = Limits::default();
    for a in catalog::algebras() {
        let c = canonical_completion(&a, &limits).map_err(|e| e.to_string())?;
        let ext = c.embedding.canonical_extension_ops();
        ensure(ext.report.passed(), || format!("{}", ext.report))?;
        let t = &c.embedding.target.algebra;
        ensure(ext.ocomp == t.ocomp_table(), || format!("{}: ocomp tables differ", a.title()))?;
        for i in 0..t.dims() {
            ensure(ext.exists[i] == t.exists_table(i), || format!("{}: E{i} tables differ", a.title()))?;
        }
    }
    Ok(vec![])
}

fn spectral_uvo() -> Outcome {
    let limits = Limits::default();
    let err = |e: cylindric::Error| e.to_string();
    for a in catalog::algebras() {
        let x = s0(&a, &limits).map_err(err)?;
        let r = x.space.is_spectral();
        ensure(r.passed(), || format!("{r}"))?;
        let r = validate_uvo(&x.space);
        ensure(r.passed(), || format!("{r}"))?;
        let c = verify_representation(&a, Track::Ortho, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{c}"))?;
    }
    for a in [catalog::b4(), catalog::mo2(), catalog::ps4()] {
        let x = s0(&a, &limits).map_err(err)?;
        let c = verify_realization(&x.space, Track::Ortho, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{c}"))?;
    }
    Ok(vec![])
}

fn morphism_duality() -> Outcome {
    let limits = Limits::default();
    let err = |e: cylindric::Error| e.to_string();
    let names: Vec<String> = catalog::morphisms().into_iter().map(|(n, _)| n).collect();
    for (name, h) in catalog::morphisms() {
        let f = dual_of_hom(&h, Track::Ortho, &limits).map_err(err)?;
        let r = validate_uvo_map(&f);
        ensure(r.passed(), || format!("{name}: {r}"))?;
        let c = verify_commuting_squares(&h, Track::Ortho, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{name}: {c}"))?;
    }
    Ok(vec![names.join(", ")])
}

fn boolean_track() -> Outcome {
    let limits = Limits::default();
    let err = |e: cylindric::Error| e.to_string();
    for a in boolean_four() {
        let c = verify_representation(&a, Track::Boolean, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{c}"))?;
        let x = f0(&a, &limits).map_err(err)?;
        let c = verify_realization(&x.space, Track::Boolean, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{c}"))?;
        let c = reg_completion_ba(&a, &limits).map_err(err)?;
        ensure(c.passed(), || format!("{}", c.report))?;
    }
    let x = f0(&catalog::ps4(), &limits).map_err(err)?;
    let r = validate_uv(&x.space);
    ensure(r.passed(), || format!("{r}"))?;
    Ok(vec![format!("{} UV conditions on F0(PS4)", r.verdicts.len())])
}

fn coincidence() -> Outcome {
    let limits = Limits::default();
    for a in boolean_four() {
        let c = check_coincidence(&a, &limits).map_err(|e| e.to_string())?;
        ensure(c.equal(), || format!("{}", c.report))?;
    }
    let c = compare_families(&catalog::mo2(), &limits).map_err(|e| e.to_string())?;
    let detail = match c.report.failures().next() {
        None => "MO2: families agree".to_string(),
        Some(v) => format!(
            "MO2: families differ ({} vs {} sets; {} witness {})",
            c.bclosed.len(),
            c.regular.len(),
            v.axiom,
            v.witness.as_deref().unwrap_or_default().join(", ")
        ),
    };
    Ok(vec![detail])
}

fn catalog_run() -> Vec<u8> {
    let runs: &[&[&str]] = &[
        &["--json", "--seed-catalog", "validate"],
        &["--json", "--seed-catalog", "filters"],
        &["--json", "--seed-catalog", "complete"],
        &["--json", "--seed-catalog", "roundtrip"],
        &["--json", "--seed-catalog", "hom-dual"],
        &["--json", "--seed-catalog", "coincide"],
        &["--json", "--boolean", "--seed-catalog", "roundtrip"],
        &["--json", "--boolean", "--seed-catalog", "coincide"],
        &["--seed-catalog", "spectrum"],
        &["--seed-catalog", "dot"],
        &["--seed-catalog", "dot", "--frame"],
    ];
    let mut all = Vec::new();
    for args in runs {
        let mut err = Vec::new();
        let code = cli::run(std::iter::once("cylwb").chain(args.iter().copied()), &mut all, &mut err);
        all.extend(format!("-- exit {code}\n").bytes());
        all.extend(err);
    }
    all
}

fn determinism() -> Outcome {
    let first = catalog_run();
    let second = catalog_run();
    ensure(first == second, || "catalog runs differ".into())?;
    ensure(!first.windows(8).any(|w| w == b"-- exit 2" || w == b"-- exit 3"), || {
        "a catalog run hit a usage or resource error".into()
    })?;
    Ok(vec![format!("{} bytes identical", first.len())])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "axiom batteries", Some(Duration::from_secs(1)), axiom_batteries),
        (2, "filter oracle", Some(Duration::from_secs(1)), filter_oracle),
        (3, "canonical completion", Some(Duration::from_secs(5)), canonical_completions),
        (4, "extension formulas", Some(Duration::from_secs(5)), extension_formulas),
        (5, "spectrality and UVO", Some(Duration::from_secs(10)), spectral_uvo),
        (6, "morphism duality", Some(Duration::from_secs(2)), morphism_duality),
        (7, "Boolean track", Some(Duration::from_secs(10)), boolean_track),
        (8, "coincidence", Some(Duration::from_secs(2)), coincidence),
        (9, "determinism", None, determinism),
    ];
    let mut failed = 0;
    for (n, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, limit) {
            (Err(e), _) => Err(e.clone()),
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:.0?}")),
            (Ok(_), _) => Ok(()),
        };
        let limit = limit.map_or(String::new(), |l| format!(" < {l:.0?}"));
        match verdict {
            Ok(()) => {
                println!("criterion {n}: PASS  {title} ({elapsed:.2?}{limit})");
                for d in outcome.unwrap_or_default() {
                    if !d.is_empty() {
                        println!("    {d}");
                    }
                }
            }
            Err(e) => {
                failed += 1;
                println!("criterion {n}: FAIL  {title} ({elapsed:.2?}{limit})");
                for line in e.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
