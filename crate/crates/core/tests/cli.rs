//! End-to-end tests of the `latfree` binary: output contracts, exit
//! codes, artifact files, and the document round-trip invariant.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use latfree::catalog;
use latfree::exact_arith::{AffineUnimodularMap, Int, IntMatrix};
use latfree::io::parse_polytope_file;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn latfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("terminated normally")
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn data_path(name: &str) -> String {
    data_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn check_m8_reports_maximality_with_five_witnesses() {
    let out = latfree(&["check", "M8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("maximal lattice-free: yes; facet witnesses: 5"), "{text}");
    assert!(text.contains("integral: yes"), "{text}");
}

#[test]
fn check_unit_cube_is_free_but_not_maximal() {
    let out = latfree(&["check", &data_path("examples/unit-cube.json")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lattice-free: yes; maximal: no"));
}

#[test]
fn check_scaled_quadrilateral_reports_convex_non_maximality() {
    let out = latfree(&["check", &data_path("examples/q2-scale3.json"), "--scale", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("lattice-free: yes; maximal (convex): no"), "{text}");
}

#[test]
fn check_half_integer_triangle_reports_its_precision() {
    let out = latfree(&["check", &data_path("examples/half-integer-triangle.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("integral: no"), "{text}");
    assert!(text.contains("precision: 2"), "{text}");
}

#[test]
fn check_accepts_inequality_documents() {
    let out = latfree(&["check", &data_path("examples/unit-square-inequalities.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dimension: 2; vertices: 4"), "{text}");
    assert!(text.contains("lattice-free: yes; maximal: no"), "{text}");
}

#[test]
fn check_rejects_floats_and_malformed_documents() {
    let dir = tempfile::tempdir().expect("tempdir");
    let float_path = dir.path().join("float.json");
    fs::write(&float_path, r#"{"dim": 2, "vertices": [[0.5, 0], [1, 0], [0, 1]]}"#).unwrap();
    let out = latfree(&["check", float_path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("floating-point"));

    let bad_path = dir.path().join("bad.json");
    fs::write(&bad_path, "{ not json").unwrap();
    let out = latfree(&["check", bad_path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_diagnoses_unbounded_inequality_systems() {
    let out = latfree(&["check", &data_path("examples/unbounded-slab.json")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unbounded-polyhedron"));
}

#[test]
fn classify_inverts_a_lattice_preserving_shear() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("m7-image.json");
    fs::write(&path, r#"{"dim": 3, "vertices": [[1,2,3],[5,2,3],[4,4,3],[3,2,7]]}"#).unwrap();
    let out = latfree(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("classification: M7"), "{text}");
    assert!(text.contains("witness linear:"), "{text}");
}

#[test]
fn classify_doubled_triangle_names_the_planar_representative() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("doubled.json");
    fs::write(&path, r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,2]]}"#).unwrap();
    let out = latfree(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("classification: M2D"), "{text}");
    assert!(text.contains("M²-representative"), "{text}");
}

#[test]
fn classify_unit_cube_is_not_in_catalog() {
    let out = latfree(&["classify", &data_path("examples/unit-cube.json")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not in catalog"));
}

/// A random lattice-preserving affine map from elementary row operations.
fn random_map(rng: &mut ChaCha8Rng, d: usize) -> AffineUnimodularMap {
    let mut rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..10 {
        let i = rng.gen_range(0..d);
        if d == 1 {
            if rng.gen_range(0..2) == 0 {
                rows[0][0] = -rows[0][0];
            }
            continue;
        }
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                let coeff = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
                let source = rows[j].clone();
                for (x, s) in rows[i].iter_mut().zip(&source) {
                    *x += coeff * s;
                }
            }
            1 => rows.swap(i, j),
            _ => rows[i].iter_mut().for_each(|x| *x = -*x),
        }
    }
    let linear = IntMatrix::from_rows(
        rows.into_iter().map(|r| r.into_iter().map(Int::from).collect()).collect(),
    );
    let translation: Vec<Int> = (0..d).map(|_| Int::from(rng.gen_range(-9i64..=9))).collect();
    AffineUnimodularMap::new(linear, translation, Int::from(1)).expect("unimodular")
}

#[test]
fn classify_returns_the_entry_id_for_100_random_map_images() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pool: Vec<_> = catalog::all_entries()
        .into_iter()
        .filter(|e| e.polytope.is_full_dimensional())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c1a_55ef);
    for trial in 0..100 {
        let entry = &pool[trial % pool.len()];
        let map = random_map(&mut rng, entry.dimension);
        let verts: Vec<String> = entry
            .polytope
            .integer_vertices()
            .expect("catalog entries are integral")
            .iter()
            .map(|v| {
                let image = map.apply_lattice(v).expect("dimensions match");
                format!("{image:?}")
            })
            .collect();
        let path = dir.path().join(format!("image-{trial}.json"));
        fs::write(
            &path,
            format!(
                r#"{{"dim": {}, "vertices": [{}]}}"#,
                entry.dimension,
                verts.join(", ")
            ),
        )
        .unwrap();
        let out = latfree(&["classify", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "trial {trial} on {}", entry.id);
        let text = stdout(&out);
        // The entry's id must be reported, either as the classification or
        // as an alias of it (R2–R4 name the same classes as three figure
        // entries).
        let named = text.lines().any(|l| {
            l == format!("classification: {}", entry.id)
                || (l.starts_with("also equivalent to:")
                    && l.split([' ', ',']).any(|tok| tok == entry.id))
        });
        assert!(named, "trial {trial}: expected {}, got:\n{text}", entry.id);
    }
}

#[test]
fn equiv_of_a_class_with_itself_holds_with_a_verified_witness() {
    let out = latfree(&["equiv", "M1", "M1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("equivalent: yes"), "{text}");
    assert!(text.contains("witness linear:"), "{text}");
}

#[test]
fn equiv_m10_m11_explains_the_failing_invariant() {
    let out = latfree(&["equiv", "M10", "M11"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("inequivalent"), "{text}");
    assert!(text.contains("signature"), "{text}");
}

#[test]
fn equiv_square_and_sheared_square_finds_a_unimodular_witness() {
    let out = latfree(&[
        "equiv",
        &data_path("examples/unit-square-inequalities.json"),
        &data_path("examples/sheared-square.json"),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("equivalent: yes"), "{text}");
    assert!(text.contains("witness linear: [["), "{text}");
}

#[test]
fn equiv_dimension_mismatch_is_a_usage_error() {
    let out = latfree(&["equiv", "M1", "M2D"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_unknown_task_is_a_usage_error() {
    let out = latfree(&["enumerate", "heptagons"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown enumeration task"));
}

#[test]
fn enumerate_artifacts_are_independent_of_job_count() {
    let dir_a = tempfile::tempdir().expect("tempdir");
    let dir_b = tempfile::tempdir().expect("tempdir");
    let out_a = latfree(&[
        "enumerate", "pyramids", "--height-max", "5", "--jobs", "1",
        "--out-dir", dir_a.path().to_str().unwrap(),
    ]);
    let out_b = latfree(&[
        "enumerate", "pyramids", "--height-max", "5", "--jobs", "3",
        "--out-dir", dir_b.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out_a), 0);
    assert_eq!(code(&out_b), 0);
    let survivors_a = fs::read_to_string(dir_a.path().join("survivors-pyramids.json")).unwrap();
    let survivors_b = fs::read_to_string(dir_b.path().join("survivors-pyramids.json")).unwrap();
    assert_eq!(survivors_a, survivors_b, "survivor artifacts differ between job counts");

    // Manifests agree except for the faithfully recorded jobs parameter.
    let normalize = |dir: &Path| -> serde_json::Value {
        let text = fs::read_to_string(dir.join("manifest-pyramids.json")).unwrap();
        let mut value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        value["parameters"].as_object_mut().unwrap().remove("jobs");
        value
    };
    let manifest_a = normalize(dir_a.path());
    assert_eq!(manifest_a, normalize(dir_b.path()));
    assert_eq!(manifest_a["counts"]["surviving-classes"], 0);
    assert_eq!(manifest_a["exit_status"], 0);
}

#[test]
fn enumerate_expectation_override_controls_the_exit_code() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = latfree(&[
        "enumerate", "triangles-i2", "--expect", "3",
        "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let out = latfree(&[
        "enumerate", "triangles-i2", "--expect", "2",
        "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("count mismatch"));
    let manifest = fs::read_to_string(dir.path().join("manifest-triangles-i2.json")).unwrap();
    let value: serde_json::Value = serde_json::from_str(&manifest).expect("valid JSON");
    assert_eq!(value["exit_status"], 1);
}

#[test]
fn verify_catalog_single_criterion_passes() {
    let out = latfree(&["verify-catalog", "--criterion", "8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("q2-separation"), "{text}");
}

#[test]
fn verify_catalog_rejects_out_of_range_criteria() {
    let out = latfree(&["verify-catalog", "--criterion", "9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_catalog_scaled_checks_cover_growth_and_quadrilateral() {
    let out = latfree(&["verify-catalog", "--scale", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("growth: s = 3"), "{text}");
    assert!(text.contains("quadrilateral:"), "{text}");

    let out = latfree(&["verify-catalog", "--scale", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("lattice-free"), "{text}");
    assert!(text.contains("skipped"), "{text}");
}

#[test]
fn export_catalog_writes_one_parseable_document_per_entry() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = latfree(&["export-catalog", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), catalog::all_entries().len());
    let text = fs::read_to_string(dir.path().join("M1.json")).unwrap();
    let document = parse_polytope_file(&text).expect("parses");
    assert_eq!(document.dim, 3);
}

#[test]
fn every_repository_document_round_trips() {
    let mut stack = vec![data_dir()];
    let mut seen = 0usize;
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).expect("data directory exists") {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "json") {
                let text = fs::read_to_string(&path).unwrap();
                let parsed = parse_polytope_file(&text)
                    .unwrap_or_else(|e| panic!("{} fails to parse: {e}", path.display()));
                let serialized = latfree::io::serialize_polytope_file(&parsed);
                let reparsed = parse_polytope_file(&serialized).expect("round-trip parses");
                assert_eq!(parsed, reparsed, "{} round-trip drifts", path.display());
                seen += 1;
            }
        }
    }
    assert!(seen >= 53, "expected the full document corpus, saw {seen}");
}
