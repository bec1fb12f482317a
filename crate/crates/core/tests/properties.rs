//! Cross-cutting property suites: catalog separation, survivor soundness,
//! an independent recheck of the screened simplex sweep, search-box
//! monotonicity, representation round-trips, and mutation detection.

use std::collections::{BTreeMap, BTreeSet};

use latfree::catalog::{self, CatalogEntry};
use latfree::enumeration::{
    enumerate_polygons_i1, enumerate_quads_i2, enumerate_r2, enumerate_simplices,
    simplex_base_ids,
};
use latfree::equivalence::{canonical_form, CanonicalForm};
use latfree::exact_arith::{dot, Int, Rat};
use latfree::lattice::{is_latticefree, is_maximal_latticefree_convex, LatticeSpec};
use latfree::polyhedron::{facets, h_to_v, hull_int, v_to_h, VPolytope};

fn entry(id: &str) -> CatalogEntry {
    catalog::get(id).expect("known id")
}

#[test]
fn catalog_classes_are_pairwise_inequivalent_up_to_the_known_aliases() {
    let mut groups: BTreeMap<(usize, CanonicalForm), Vec<&'static str>> = BTreeMap::new();
    for entry in catalog::all_entries() {
        let form = canonical_form(&entry.polytope, &Int::from(1)).expect("canonicalizes");
        groups.entry((entry.dimension, form)).or_default().push(entry.id);
    }
    let mut duplicate_groups: Vec<Vec<&str>> =
        groups.into_values().filter(|ids| ids.len() > 1).collect();
    for group in &mut duplicate_groups {
        group.sort_unstable();
    }
    duplicate_groups.sort();
    // The minimal-set ids R2–R4 intentionally name the same classes as
    // three of the one-interior-point figure triangles; nothing else may
    // coincide.
    assert_eq!(
        duplicate_groups,
        vec![
            vec!["Fig-tria1-1", "R2"],
            vec!["Fig-tria1-3", "R3"],
            vec!["Fig-tria1-5", "R4"],
        ]
    );
}

#[test]
fn survivors_carry_the_canonical_form_of_their_representative_and_class() {
    let runs = [
        enumerate_polygons_i1([0, 0], [4, 4]).expect("runs"),
        enumerate_quads_i2(-1, 7).expect("runs"),
        enumerate_r2([0, 0], 4).expect("runs"),
    ];
    for result in &runs {
        for survivor in &result.survivors {
            let recomputed =
                canonical_form(&survivor.representative, &Int::from(1)).expect("canonicalizes");
            assert_eq!(recomputed, survivor.canonical, "representative drifted from its class");
            let id = survivor.classification.as_deref().expect("all these searches classify");
            let class_form =
                canonical_form(&entry(id).polytope, &Int::from(1)).expect("canonicalizes");
            assert_eq!(class_form, survivor.canonical, "classification {id} does not match");
        }
    }
}

/// Every vertex sits at lattice height ≥ `bound` over every non-incident
/// facet (an independent reimplementation of the sweep's residual-case
/// screen).
fn heights_at_least(p: &VPolytope, bound: i64) -> bool {
    let bound = Rat::from_integer(Int::from(bound));
    let facets = facets(p).expect("full-dimensional");
    let verts = p.integer_vertices().expect("integral");
    for f in &facets {
        for v in &verts {
            let height = &f.rhs - Rat::from_integer(dot(&f.normal, v));
            if !height.is_integer() || height < Rat::from_integer(Int::from(0)) {
                // Facet data is exact; heights of integral points under
                // primitive normals are non-negative integers.
                return false;
            }
            if height != Rat::from_integer(Int::from(0)) && height < bound {
                return false;
            }
        }
    }
    true
}

#[test]
fn screened_simplex_sweep_agrees_with_an_independent_recheck() {
    let spec = LatticeSpec::unit(3);
    let survivors = enumerate_simplices(4, 5, 1).expect("runs");
    let survivor_forms: BTreeSet<CanonicalForm> =
        survivors.survivors.iter().map(|s| s.canonical.clone()).collect();

    // Every survivor representative must satisfy the independent
    // predicate: maximal lattice-free and all facet heights ≥ 4.
    for survivor in &survivors.survivors {
        let p = &survivor.representative;
        assert!(
            is_maximal_latticefree_convex(p, &spec).expect("runs").is_maximal,
            "survivor is not maximal"
        );
        assert!(heights_at_least(p, 4), "survivor fails the height screen");
    }

    // A sample of raw candidates, rebuilt from the base catalog without
    // the enumeration module's internals: whenever the independent
    // predicate accepts one, its class must be among the survivors.
    let mut index = 0usize;
    let mut sampled = 0usize;
    for base_id in simplex_base_ids() {
        let base = entry(base_id).polytope;
        let base_verts = base.integer_vertices().expect("integral base");
        for a3 in 4i64..=5 {
            for a1 in 0..a3 {
                for a2 in 0..a3 {
                    index += 1;
                    if !index.is_multiple_of(7) {
                        continue;
                    }
                    sampled += 1;
                    let mut pts: Vec<Vec<Int>> = base_verts
                        .iter()
                        .map(|v| vec![v[0].clone(), v[1].clone(), Int::from(0)])
                        .collect();
                    pts.push(vec![Int::from(a1), Int::from(a2), Int::from(a3)]);
                    let candidate = hull_int(&pts).expect("full-dimensional simplex");
                    let accepted = is_maximal_latticefree_convex(&candidate, &spec)
                        .expect("runs")
                        .is_maximal
                        && heights_at_least(&candidate, 4);
                    if accepted {
                        let form =
                            canonical_form(&candidate, &Int::from(1)).expect("canonicalizes");
                        assert!(
                            survivor_forms.contains(&form),
                            "accepted candidate (base {base_id}, apex ({a1},{a2},{a3})) missing"
                        );
                    }
                }
            }
        }
    }
    assert!(sampled >= 40, "sample unexpectedly small: {sampled}");
}

#[test]
fn polygon_search_results_grow_with_the_box() {
    let small = enumerate_polygons_i1([0, 0], [3, 3]).expect("runs");
    let full = enumerate_polygons_i1([0, 0], [4, 4]).expect("runs");
    let small_forms: BTreeSet<CanonicalForm> =
        small.survivors.iter().map(|s| s.canonical.clone()).collect();
    let full_forms: BTreeSet<CanonicalForm> =
        full.survivors.iter().map(|s| s.canonical.clone()).collect();
    assert!(small_forms.is_subset(&full_forms));
    assert_eq!(full_forms.len(), 16);
}

#[test]
fn representation_roundtrip_preserves_every_catalog_entry() {
    for entry in catalog::all_entries() {
        if !entry.polytope.is_full_dimensional() {
            continue;
        }
        let h = v_to_h(&entry.polytope).expect("converts");
        let back = h_to_v(&h).expect("bounded");
        let mut original = entry.polytope.vertices().to_vec();
        let mut recovered = back.vertices().to_vec();
        original.sort();
        recovered.sort();
        assert_eq!(original, recovered, "{} drifts through V→H→V", entry.id);
    }
}

#[test]
fn corrupting_a_catalog_entry_is_detected() {
    let m5 = entry("M5");
    let mut verts = m5.polytope.integer_vertices().expect("integral");
    verts[3][1] += Int::from(1);
    let doctored = hull_int(&verts).expect("still a simplex");
    let spec = LatticeSpec::unit(3);
    let still_free = is_latticefree(&doctored, &spec).expect("runs");
    let still_maximal =
        still_free && is_maximal_latticefree_convex(&doctored, &spec).expect("runs").is_maximal;
    let doctored_entry = CatalogEntry { polytope: doctored, ..m5 };
    let stats_ok = catalog::stats_match(&doctored_entry).expect("runs");
    assert!(
        !(still_maximal && stats_ok),
        "a corrupted M5 slipped through every check"
    );
}
