//! Command-line surface: batch verification, classification, enumeration
//! reproduction, and catalog export.
//!
//! Exit codes are a stable contract: `0` success (or expected outcome),
//! `1` verification failure (a check that ran and did not hold), `2`
//! usage or parse error. `check` exits `0` whenever the input parses; its
//! verdicts are report lines, not exit codes.
//!
//! File arguments accept either a path to a polytope document or a catalog
//! id (`M8`, `R2`, `Fig-quad1-3`, …), which resolves to the built-in
//! representative.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog::{self, CatalogEntry};
use crate::enumeration::{run as run_enumeration, EnumerationTask, TaskKind};
use crate::equivalence::{equivalent, invariant_signature, Signature};
use crate::exact_arith::{AffineUnimodularMap, Int, IntMatrix};
use crate::io::{
    parse_polytope_file, serialize_manifest, serialize_polytope_file, serialize_survivors,
    PolytopeFile, RunManifest,
};
use crate::lattice::{
    analyze, interior_lattice_point, is_maximal_latticefree_convex, LatticeSpec,
};
use crate::polyhedron::VPolytope;
use crate::verify::{growth_checks, q2_checks, run_criterion, Q2_RADIUS};
use crate::{Error, Result};

/// Success, or the expected outcome of a reproduction run.
pub const EXIT_OK: i32 = 0;
/// A verification-style check ran and did not hold.
pub const EXIT_VERIFICATION: i32 = 1;
/// Usage or parse error.
pub const EXIT_USAGE: i32 = 2;
/// Environment variable naming the default directory for catalog exports.
pub const DATA_DIR_ENV: &str = "LATFREE_DATA_DIR";

/// Exact lattice-freeness toolkit: decision procedures, classification,
/// catalogs, and reproduction searches, all in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "latfree", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a polytope document and report its exact lattice diagnostics.
    Check {
        /// Polytope document path or catalog id.
        file: String,
        /// Lattice scale s (Λ = sZ^d); overrides the document's scale.
        #[arg(long)]
        scale: Option<i64>,
    },
    /// Classify an integral polytope against the built-in catalogs.
    Classify {
        /// Polytope document path or catalog id.
        file: String,
    },
    /// Decide lattice-preserving affine equivalence of two polytopes.
    Equiv {
        /// First polytope document path or catalog id.
        file_a: String,
        /// Second polytope document path or catalog id.
        file_b: String,
        /// Lattice scale s; overrides the documents' scales.
        #[arg(long)]
        scale: Option<i64>,
    },
    /// Run a reproduction search and write its manifest and survivors.
    Enumerate {
        /// One of: pyramids, simplices, polygons-i1, quads-i2,
        /// triangles-i2, r2-sets, maximal-polygons.
        task: String,
        /// Minimum apex height (pyramid and simplex sweeps).
        #[arg(long)]
        height_min: Option<i64>,
        /// Maximum apex height (pyramid and simplex sweeps).
        #[arg(long)]
        height_max: Option<i64>,
        /// Search box: `x0,y0,x1,y1` for the polygon searches, or
        /// `x0,x1` (abscissa range) for the two-interior-point searches.
        #[arg(long, value_name = "BOX")]
        r#box: Option<String>,
        /// Anchor point `x,y` for the minimal-set search.
        #[arg(long)]
        anchor: Option<String>,
        /// Box radius around the anchor for the minimal-set search.
        #[arg(long)]
        radius: Option<i64>,
        /// Worker threads; survivors and their order never depend on this.
        #[arg(long)]
        jobs: Option<usize>,
        /// Expected number of surviving classes (overrides the built-in
        /// expectation for exploratory runs).
        #[arg(long)]
        expect: Option<usize>,
        /// Directory for the manifest and survivor files (default `.`).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run the acceptance checks: all criteria, one criterion, or the
    /// scale-parameterized growth and quadrilateral checks.
    VerifyCatalog {
        /// Run a single criterion (1–8) instead of all.
        #[arg(long)]
        criterion: Option<usize>,
        /// Run the scale-parameterized checks for Λ = sZ^d instead of the
        /// criteria: growth-sequence and growth-simplex checks for any
        /// s ≥ 1 (geometric freeness for s ≤ 2), quadrilateral
        /// separation for s ≥ 3.
        #[arg(long)]
        scale: Option<i64>,
    },
    /// Write every catalog entry as a polytope document.
    ExportCatalog {
        /// Output directory (default: $LATFREE_DATA_DIR, else `data`).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

/// Parse the process arguments and run; returns the exit code.
pub fn run() -> i32 {
    execute(Cli::parse())
}

/// Run an already-parsed invocation; returns the exit code.
pub fn execute(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { file, scale } => cmd_check(&file, scale),
        Command::Classify { file } => cmd_classify(&file),
        Command::Equiv { file_a, file_b, scale } => cmd_equiv(&file_a, &file_b, scale),
        Command::Enumerate {
            task,
            height_min,
            height_max,
            r#box,
            anchor,
            radius,
            jobs,
            expect,
            out_dir,
        } => cmd_enumerate(EnumerateArgs {
            task,
            height_min,
            height_max,
            box_spec: r#box,
            anchor,
            radius,
            jobs,
            expect,
            out_dir,
        }),
        Command::VerifyCatalog { criterion, scale } => cmd_verify_catalog(criterion, scale),
        Command::ExportCatalog { out_dir } => cmd_export_catalog(out_dir),
    }
}

/// Resolve a file argument: an existing path wins, otherwise a catalog id.
fn load_document(arg: &str) -> Result<PolytopeFile> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?;
        return parse_polytope_file(&text);
    }
    if let Ok(entry) = catalog::get(arg) {
        return Ok(PolytopeFile::from_vpolytope(&entry.polytope, Int::from(1)));
    }
    Err(Error::InvalidInput(format!("no such file or catalog id: {arg}")))
}

fn usage_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn fmt_points(points: &[Vec<Int>]) -> String {
    let rows: Vec<String> = points.iter().map(|p| format!("{p:?}")).collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.nrows()).map(|i| format!("{:?}", m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

fn print_witness(map: &AffineUnimodularMap) {
    println!("witness linear: {}", fmt_matrix(map.linear()));
    println!("witness translation: {:?}", map.translation());
}

fn cmd_check(file: &str, scale_flag: Option<i64>) -> i32 {
    let document = match load_document(file) {
        Ok(d) => d,
        Err(e) => return usage_error(&e),
    };
    let p = match document.to_vpolytope() {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let scale = scale_flag.map_or_else(|| document.scale.clone(), Int::from);

    println!("source: {file}");
    println!(
        "dimension: {}; vertices: {}; intrinsic dimension: {}",
        p.dim(),
        p.n_vertices(),
        p.intrinsic_dim()
    );
    println!("integral: {}", if p.is_integral() { "yes" } else { "no" });
    println!("precision: {}", p.precision());
    println!("lattice scale: {scale}");

    let spec = match LatticeSpec::new(p.dim(), scale) {
        Ok(spec) => spec,
        Err(e) => {
            println!("analysis skipped: {e}");
            return EXIT_OK;
        }
    };
    if !p.is_full_dimensional() {
        println!("analysis skipped: width and freeness require a full-dimensional polytope");
        return EXIT_OK;
    }
    let report = match analyze(&p, &spec) {
        Ok(r) => r,
        Err(e) => {
            println!("analysis skipped: {e}");
            return EXIT_OK;
        }
    };
    println!("width: {}; witness: {:?}", report.width, report.width_witness);
    println!(
        "interior lattice points: {}; boundary lattice points: {}",
        report.interior_points.len(),
        report.boundary_points.len()
    );
    if !report.is_latticefree {
        let witness = interior_lattice_point(&p, &spec)
            .ok()
            .flatten()
            .map_or_else(String::new, |w| format!("; interior lattice point: {w:?}"));
        println!("lattice-free: no{witness}");
        return EXIT_OK;
    }
    let maximality = match is_maximal_latticefree_convex(&p, &spec) {
        Ok(m) => m,
        Err(e) => {
            println!("lattice-free: yes");
            println!("maximality analysis skipped: {e}");
            return EXIT_OK;
        }
    };
    if maximality.is_maximal {
        println!("lattice-free: yes");
        println!(
            "maximal lattice-free: yes; facet witnesses: {}",
            maximality.facet_witnesses.len()
        );
        for (i, witness) in maximality.facet_witnesses.iter().enumerate() {
            if let Some(w) = witness {
                println!("facet {i} witness: {w:?}");
            }
        }
    } else {
        let missing: Vec<usize> = maximality
            .facet_witnesses
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.is_none().then_some(i))
            .collect();
        println!("lattice-free: yes; maximal: no");
        println!(
            "lattice-free: yes; maximal (convex): no; facets without relative-interior lattice point: {missing:?}"
        );
    }
    EXIT_OK
}

fn cmd_classify(file: &str) -> i32 {
    let p = match load_document(file).and_then(|d| d.to_vpolytope()) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    if !p.is_integral() {
        return usage_error(&Error::InvalidInput(
            "classification requires an integral polytope".into(),
        ));
    }
    let candidates: Vec<CatalogEntry> = catalog::all_entries()
        .into_iter()
        .filter(|e| e.polytope.dim() == p.dim())
        .collect();
    // A few classes carry two catalog names (the minimal-set ids R2–R4
    // coincide with figure classes); report the first as the
    // classification and the rest as aliases.
    let mut matched: Option<(&CatalogEntry, AffineUnimodularMap)> = None;
    let mut aliases: Vec<&str> = Vec::new();
    for entry in &candidates {
        match equivalent(&p, &entry.polytope, &Int::from(1)) {
            Ok(Some(witness)) => {
                if matched.is_none() {
                    matched = Some((entry, witness.map));
                } else {
                    aliases.push(entry.id);
                }
            }
            Ok(None) => {}
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFICATION;
            }
        }
    }
    let Some((entry, map)) = matched else {
        println!("not in catalog");
        return EXIT_VERIFICATION;
    };
    println!("classification: {}", entry.id);
    if entry.label != entry.id {
        println!("label: {}", entry.label);
    }
    if !aliases.is_empty() {
        println!("also equivalent to: {}", aliases.join(", "));
    }
    print_witness(&map);
    EXIT_OK
}

/// The first signature component that separates two inequivalent
/// polytopes, for the inequivalence explanation.
fn signature_difference(a: &Signature, b: &Signature) -> Option<String> {
    if a.vertex_count != b.vertex_count {
        return Some(format!("vertex counts differ ({} vs {})", a.vertex_count, b.vertex_count));
    }
    if a.facet_count != b.facet_count {
        return Some(format!("facet counts differ ({} vs {})", a.facet_count, b.facet_count));
    }
    if a.volume != b.volume {
        return Some(format!("volumes differ ({} vs {})", a.volume, b.volume));
    }
    if a.interior_count != b.interior_count {
        return Some(format!(
            "interior lattice point counts differ ({} vs {})",
            a.interior_count, b.interior_count
        ));
    }
    if a.boundary_count != b.boundary_count {
        return Some(format!(
            "boundary lattice point counts differ ({} vs {})",
            a.boundary_count, b.boundary_count
        ));
    }
    if a.facet_relint_counts != b.facet_relint_counts {
        return Some(format!(
            "facet point counts differ ({:?} vs {:?})",
            a.facet_relint_counts, b.facet_relint_counts
        ));
    }
    if a.width != b.width {
        return Some(format!("widths differ ({} vs {})", a.width, b.width));
    }
    None
}

fn cmd_equiv(file_a: &str, file_b: &str, scale_flag: Option<i64>) -> i32 {
    let (doc_a, doc_b) = match (load_document(file_a), load_document(file_b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    let (pa, pb) = match (doc_a.to_vpolytope(), doc_b.to_vpolytope()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    let scale = match scale_flag {
        Some(s) => Int::from(s),
        None if doc_a.scale == doc_b.scale => doc_a.scale.clone(),
        None => {
            return usage_error(&Error::InvalidInput(format!(
                "the documents declare different scales ({} vs {}); pass --scale",
                doc_a.scale, doc_b.scale
            )))
        }
    };
    match equivalent(&pa, &pb, &scale) {
        Ok(Some(witness)) => {
            println!("equivalent: yes");
            print_witness(&witness.map);
            EXIT_OK
        }
        Ok(None) => {
            let reason = match (
                invariant_signature(&pa, &scale),
                invariant_signature(&pb, &scale),
            ) {
                (Ok(sa), Ok(sb)) => signature_difference(&sa, &sb)
                    .map_or_else(
                        || "signatures agree; canonical forms differ".to_string(),
                        |d| format!("signature: {d}"),
                    ),
                _ => "signatures unavailable".to_string(),
            };
            println!("inequivalent ({reason})");
            EXIT_VERIFICATION
        }
        Err(e) => usage_error(&e),
    }
}

struct EnumerateArgs {
    task: String,
    height_min: Option<i64>,
    height_max: Option<i64>,
    box_spec: Option<String>,
    anchor: Option<String>,
    radius: Option<i64>,
    jobs: Option<usize>,
    expect: Option<usize>,
    out_dir: Option<PathBuf>,
}

fn parse_ints(spec: &str) -> Result<Vec<i64>> {
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidParameter(format!("not an integer: {part:?}")))
        })
        .collect()
}

fn build_task(args: &EnumerateArgs) -> Result<EnumerationTask> {
    let kind = TaskKind::parse(&args.task)?;
    let mut task = EnumerationTask::defaults(kind);
    if let Some(h) = args.height_min {
        task.heights.0 = h;
    }
    if let Some(h) = args.height_max {
        task.heights.1 = h;
    }
    if let Some(spec) = &args.box_spec {
        let values = parse_ints(spec)?;
        match values[..] {
            [lo, hi] => task.abscissas = (lo, hi),
            [x0, y0, x1, y1] => task.box_bounds = ([x0, y0], [x1, y1]),
            _ => {
                return Err(Error::InvalidParameter(
                    "--box takes x0,y0,x1,y1 (polygon searches) or x0,x1 (abscissa range)".into(),
                ))
            }
        }
    }
    if let Some(spec) = &args.anchor {
        let values = parse_ints(spec)?;
        match values[..] {
            [x, y] => task.anchor = [x, y],
            _ => return Err(Error::InvalidParameter("--anchor takes x,y".into())),
        }
    }
    if let Some(r) = args.radius {
        task.radius = r;
    }
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
        }
        task.jobs = jobs;
    }
    Ok(task)
}

fn cmd_enumerate(args: EnumerateArgs) -> i32 {
    let task = match build_task(&args) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let result = match run_enumeration(&task) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFICATION;
        }
    };
    let expected = args.expect.unwrap_or_else(|| task.kind.expected_survivors());
    let matched = result.survivors.len() == expected;

    println!(
        "task: {}; candidates examined: {}; surviving classes: {} (expected {})",
        task.kind.name(),
        result.candidates_examined,
        result.survivors.len(),
        expected
    );
    let ids: Vec<String> = result
        .survivors
        .iter()
        .enumerate()
        .map(|(i, s)| s.classification.clone().unwrap_or_else(|| format!("unclassified-{i}")))
        .collect();
    for (i, survivor) in result.survivors.iter().enumerate() {
        println!(
            "class {}: {} ({} vertices, representative {})",
            ids[i],
            survivor.classification.as_deref().unwrap_or("not in catalog"),
            survivor.representative.n_vertices(),
            fmt_points(&survivor.representative.integer_vertices().unwrap_or_default()),
        );
    }

    let dir = args.out_dir.unwrap_or_else(|| PathBuf::from("."));
    let manifest = RunManifest {
        command: format!("enumerate {}", task.kind.name()),
        parameters: result.parameters.clone(),
        counts: vec![
            ("candidates-examined".to_string(), result.candidates_examined),
            ("surviving-classes".to_string(), result.survivors.len() as u64),
            ("expected-classes".to_string(), expected as u64),
        ],
        survivors: ids,
        exit_status: i32::from(!matched),
    };
    let manifest_path = dir.join(format!("manifest-{}.json", task.kind.name()));
    let survivors_path = dir.join(format!("survivors-{}.json", task.kind.name()));
    let write = fs::create_dir_all(&dir)
        .and_then(|()| fs::write(&manifest_path, serialize_manifest(&manifest)))
        .and_then(|()| fs::write(&survivors_path, serialize_survivors(&result)));
    if let Err(e) = write {
        eprintln!("error: cannot write results under {}: {e}", dir.display());
        return EXIT_VERIFICATION;
    }
    println!("manifest: {}", manifest_path.display());
    println!("survivors: {}", survivors_path.display());
    if matched {
        EXIT_OK
    } else {
        println!("count mismatch: expected {expected} surviving classes");
        EXIT_VERIFICATION
    }
}

fn cmd_verify_catalog(criterion: Option<usize>, scale: Option<i64>) -> i32 {
    if let Some(s) = scale {
        return scaled_checks(s);
    }
    let numbers: Vec<usize> = criterion.map_or_else(|| (1..=8).collect(), |n| vec![n]);
    let mut all_passed = true;
    for number in numbers {
        match run_criterion(number) {
            Ok(report) => {
                println!("{report}");
                all_passed &= report.passed;
            }
            Err(e) => {
                eprintln!("error: criterion {number}: {e}");
                return if matches!(e, Error::InvalidParameter(_)) {
                    EXIT_USAGE
                } else {
                    EXIT_VERIFICATION
                };
            }
        }
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

/// The scale-parameterized subset: growth checks at any scale (geometric
/// freeness for s ≤ 2, where the spatial scan stays small), quadrilateral
/// separation for s ≥ 3.
fn scaled_checks(s: i64) -> i32 {
    if s < 1 {
        return usage_error(&Error::InvalidScale(s.to_string()));
    }
    let scale = Int::from(s);
    let mut ok = true;
    match growth_checks(&scale, s <= 2, s == 1) {
        Ok((passed, lines)) => {
            for line in lines {
                println!("growth: {line}");
            }
            ok &= passed;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFICATION;
        }
    }
    if s >= 3 {
        match q2_checks(&scale, Q2_RADIUS) {
            Ok((passed, lines)) => {
                for line in lines {
                    println!("quadrilateral: {line}");
                }
                ok &= passed;
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFICATION;
            }
        }
    } else {
        println!("quadrilateral: requires scale >= 3; skipped");
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn cmd_export_catalog(out_dir: Option<PathBuf>) -> i32 {
    let dir = out_dir
        .or_else(|| std::env::var_os(DATA_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"));
    if let Err(e) = fs::create_dir_all(&dir) {
        eprintln!("error: cannot create {}: {e}", dir.display());
        return EXIT_USAGE;
    }
    let entries = catalog::all_entries();
    for entry in &entries {
        let document = PolytopeFile::from_vpolytope(&entry.polytope, Int::from(1));
        let path = dir.join(format!("{}.json", entry.id));
        if let Err(e) = fs::write(&path, serialize_polytope_file(&document)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    println!("wrote {} catalog documents to {}", entries.len(), dir.display());
    EXIT_OK
}

/// Expose the check report for one polytope as a string, for tests that
/// assert on report lines without spawning the binary.
#[doc(hidden)]
pub fn check_report_for_tests(p: &VPolytope, scale: &Int) -> Result<Vec<String>> {
    let spec = LatticeSpec::new(p.dim(), scale.clone())?;
    let mut lines = Vec::new();
    let report = analyze(p, &spec)?;
    if report.is_latticefree {
        let maximality = is_maximal_latticefree_convex(p, &spec)?;
        if maximality.is_maximal {
            lines.push("lattice-free: yes".to_string());
            lines.push(format!(
                "maximal lattice-free: yes; facet witnesses: {}",
                maximality.facet_witnesses.len()
            ));
        } else {
            lines.push("lattice-free: yes; maximal: no".to_string());
            lines.push("lattice-free: yes; maximal (convex): no".to_string());
        }
    } else {
        lines.push("lattice-free: no".to_string());
    }
    Ok(lines)
}
