//! The named polytopes: the twelve maximal lattice-free classes `M1`–`M12`
//! in dimension 3 (with the one-dimensional and two-dimensional
//! representatives `M1D`, `M2D`), the minimal sets `R1`–`R4`, the planar
//! figure classes with one or two interior points, the quadrilateral family
//! `Q²_s`, the growth sequence `y` with its simplices `S_d`, and the
//! three-way typing of maximal lattice-free triangles.
//!
//! Every entry is constructed from explicit vertex data and carries frozen
//! expected statistics (interior count, boundary count, facet count, width)
//! that the test suite recomputes from scratch through the lattice module.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{int, rat, Int, LatticePoint, Rat};
use crate::lattice::{
    is_latticefree, is_maximal_latticefree_convex, lattice_points, relint_lattice_points,
    LatticeSpec, Region,
};
use crate::polyhedron::{facets, hull, hull_int, VPolytope, MAX_DIM};

/// Structural family of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// One-dimensional polytope.
    Segment,
    /// Simplex: `k`-dimensional with `k + 1` vertices.
    Simplex,
    /// 3-dimensional pyramid: one facet (the base) contains all vertices
    /// but the apex.
    Pyramid,
    /// 3-dimensional prism: two parallel triangle facets that are
    /// translates of each other.
    Prism,
    /// Parallelepiped spanned by three edge vectors.
    Parallelepiped,
    /// Two-dimensional polytope that is not a triangle.
    Polygon,
}

impl Family {
    /// Lower-case display name.
    pub fn name(self) -> &'static str {
        match self {
            Family::Segment => "segment",
            Family::Simplex => "simplex",
            Family::Pyramid => "pyramid",
            Family::Prism => "prism",
            Family::Parallelepiped => "parallelepiped",
            Family::Polygon => "polygon",
        }
    }
}

/// Frozen per-entry statistics, reproduced from scratch by the test suite.
/// For lower-dimensional entries the counts are taken within the affine
/// hull (relative interior / relative boundary) and the width is intrinsic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedStats {
    /// Interior lattice-point count.
    pub interior: usize,
    /// Boundary lattice-point count.
    pub boundary: usize,
    /// Facet count.
    pub facets: usize,
    /// Lattice width.
    pub width: Rat,
}

/// One named catalog polytope.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Stable identifier (`M7`, `R2`, `Fig-quad2-3`, …).
    pub id: &'static str,
    /// Display label; differs from the id only for the dimension
    /// representatives (`M1D` → `M¹-representative`).
    pub label: &'static str,
    /// Ambient dimension.
    pub dimension: usize,
    /// Structural family.
    pub family: Family,
    /// The polytope itself.
    pub polytope: VPolytope,
    /// Frozen statistics.
    pub expected: ExpectedStats,
}

struct Row {
    id: &'static str,
    label: &'static str,
    family: Family,
    verts: &'static [&'static [i64]],
    /// (interior, boundary, facets, width) — frozen; verified by tests.
    stats: (usize, usize, usize, i64),
}

const fn row(
    id: &'static str,
    family: Family,
    verts: &'static [&'static [i64]],
    stats: (usize, usize, usize, i64),
) -> Row {
    Row { id, label: id, family, verts, stats }
}

/// The twelve three-dimensional maximal classes, exact vertex data.
const MAIN_ROWS: &[Row] = &[
    row("M1", Family::Simplex, &[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 6]], (0, 23, 4, 2)),
    row("M2", Family::Simplex, &[&[0, 0, 0], &[2, 0, 0], &[0, 4, 0], &[0, 0, 4]], (0, 22, 4, 2)),
    row("M3", Family::Simplex, &[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[0, 0, 3]], (0, 20, 4, 3)),
    row("M4", Family::Simplex, &[&[0, 0, 0], &[1, 0, 0], &[2, 4, 0], &[3, 0, 4]], (0, 10, 4, 2)),
    row("M5", Family::Simplex, &[&[0, 0, 0], &[1, 0, 0], &[2, 5, 0], &[3, 0, 5]], (0, 12, 4, 3)),
    row("M6", Family::Simplex, &[&[0, 0, 0], &[3, 0, 0], &[1, 3, 0], &[2, 0, 3]], (0, 14, 4, 3)),
    row("M7", Family::Simplex, &[&[0, 0, 0], &[4, 0, 0], &[1, 2, 0], &[2, 0, 4]], (0, 18, 4, 2)),
    row(
        "M8",
        Family::Pyramid,
        &[&[2, 0, 0], &[-2, 0, 0], &[0, 2, 0], &[0, -2, 0], &[1, 1, 2]],
        (0, 18, 5, 2),
    ),
    row(
        "M9",
        Family::Pyramid,
        &[&[-1, 0, 0], &[0, -1, 0], &[2, 0, 0], &[0, 2, 0], &[1, 1, 3]],
        (0, 14, 5, 3),
    ),
    row(
        "M10",
        Family::Prism,
        &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[2, 2, 3], &[1, 3, 3], &[0, 1, 3]],
        (0, 14, 5, 3),
    ),
    row(
        "M11",
        Family::Prism,
        &[&[1, 0, 0], &[-1, 0, 0], &[0, 2, 0], &[2, 0, 2], &[0, 0, 2], &[1, 2, 2]],
        (0, 14, 5, 2),
    ),
    row(
        "M12",
        Family::Parallelepiped,
        &[
            &[0, 0, 0],
            &[-1, 1, 0],
            &[1, 1, 0],
            &[1, 1, 2],
            &[0, 2, 0],
            &[0, 2, 2],
            &[2, 2, 2],
            &[1, 3, 2],
        ],
        (0, 14, 6, 2),
    ),
];

/// The lower-dimensional maximal representatives (artifact additions used
/// by classification in dimensions 1 and 2).
const REPRESENTATIVE_ROWS: &[Row] = &[
    Row {
        id: "M1D",
        label: "M¹-representative",
        family: Family::Segment,
        verts: &[&[0], &[1]],
        stats: (0, 2, 2, 1),
    },
    Row {
        id: "M2D",
        label: "M²-representative",
        family: Family::Simplex,
        verts: &[&[0, 0], &[2, 0], &[0, 2]],
        stats: (0, 6, 3, 2),
    },
];

/// The minimal sets `R1`–`R4` of `X²(o)`, exact vertex data.
const R_ROWS: &[Row] = &[
    row("R1", Family::Segment, &[&[0, 0], &[2, 0]], (1, 2, 2, 2)),
    row("R2", Family::Simplex, &[&[0, 0], &[3, 0], &[0, 2]], (1, 6, 3, 2)),
    row("R3", Family::Simplex, &[&[0, 0], &[2, 0], &[1, 2]], (1, 4, 3, 2)),
    row("R4", Family::Simplex, &[&[0, 0], &[2, 1], &[1, 2]], (1, 3, 3, 2)),
];

/// The sixteen integral polygons with exactly one interior lattice point.
///
/// Index assignment: `tria1-3` (sail), `tria1-5` (kite), `quad1-1`
/// (diamond), and `quad1-2` (arrow) are pinned by prose references; the
/// remaining indices within each shape are assigned in order of sorted
/// (boundary count, canonical form), which is deterministic. The vertex
/// data is the frozen canonical-form output of `enumerate_polygons_i1`.
const FIG_I1_ROWS: &[Row] = &[
    row("Fig-tria1-1", Family::Simplex, &[&[0, 0], &[0, 2], &[3, 0]], (1, 6, 3, 2)),
    row("Fig-tria1-2", Family::Simplex, &[&[0, 0], &[0, 2], &[4, 0]], (1, 8, 3, 2)),
    row("Fig-tria1-3", Family::Simplex, &[&[-1, 0], &[1, 0], &[0, 2]], (1, 4, 3, 2)),
    row("Fig-tria1-4", Family::Simplex, &[&[0, 0], &[0, 3], &[3, 0]], (1, 9, 3, 3)),
    row("Fig-tria1-5", Family::Simplex, &[&[1, 0], &[0, 1], &[-1, -1]], (1, 3, 3, 2)),
    row("Fig-quad1-1", Family::Polygon, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], (1, 4, 4, 2)),
    row("Fig-quad1-2", Family::Polygon, &[&[-1, -1], &[1, 0], &[0, 1], &[1, 1]], (1, 4, 4, 2)),
    row("Fig-quad1-3", Family::Polygon, &[&[-4, 2], &[0, 0], &[0, 1], &[1, 0]], (1, 5, 4, 2)),
    row("Fig-quad1-4", Family::Polygon, &[&[-4, 2], &[0, 0], &[0, 1], &[2, 0]], (1, 6, 4, 2)),
    row("Fig-quad1-5", Family::Polygon, &[&[-6, 3], &[0, 0], &[0, 1], &[1, 0]], (1, 7, 4, 2)),
    row("Fig-quad1-6", Family::Polygon, &[&[-6, 3], &[0, 0], &[0, 1], &[2, 0]], (1, 8, 4, 2)),
    row("Fig-quad1-7", Family::Polygon, &[&[-2, 2], &[0, 0], &[0, 2], &[2, 0]], (1, 8, 4, 2)),
    row(
        "Fig-pent1-1",
        Family::Polygon,
        &[&[-3, 2], &[-2, 1], &[0, 0], &[0, 1], &[1, 0]],
        (1, 5, 5, 2),
    ),
    row(
        "Fig-pent1-2",
        Family::Polygon,
        &[&[-4, 2], &[-3, 2], &[0, 0], &[0, 1], &[1, 0]],
        (1, 6, 5, 2),
    ),
    row(
        "Fig-pent1-3",
        Family::Polygon,
        &[&[-4, 2], &[-3, 2], &[0, 0], &[0, 1], &[2, 0]],
        (1, 7, 5, 2),
    ),
    row(
        "Fig-hex1-1",
        Family::Polygon,
        &[&[-3, 2], &[-2, 1], &[-2, 2], &[0, 0], &[0, 1], &[1, 0]],
        (1, 6, 6, 2),
    ),
];

/// The ten integral quadrilaterals with `w = 2`, `i = 2`, `b ∈ {4,5,6}`,
/// normalized so the interior points are `(1,0)` and `(2,0)`.
const QUAD2_ROWS: &[Row] = &[
    row("Fig-quad2-1", Family::Polygon, &[&[0, 0], &[1, -1], &[3, 0], &[0, 1]], (2, 4, 4, 2)),
    row("Fig-quad2-2", Family::Polygon, &[&[0, 0], &[2, -1], &[3, 0], &[0, 1]], (2, 4, 4, 2)),
    row("Fig-quad2-3", Family::Polygon, &[&[0, 0], &[3, -1], &[3, 0], &[0, 1]], (2, 4, 4, 2)),
    row("Fig-quad2-4", Family::Polygon, &[&[0, 0], &[4, -1], &[5, -1], &[0, 1]], (2, 4, 4, 2)),
    row("Fig-quad2-5", Family::Polygon, &[&[0, 0], &[3, -1], &[5, -1], &[0, 1]], (2, 5, 4, 2)),
    row("Fig-quad2-6", Family::Polygon, &[&[0, 0], &[5, -1], &[6, -1], &[0, 1]], (2, 5, 4, 2)),
    row("Fig-quad2-7", Family::Polygon, &[&[0, 1], &[1, 1], &[4, -1], &[1, -1]], (2, 6, 4, 2)),
    row("Fig-quad2-8", Family::Polygon, &[&[0, 0], &[0, 1], &[5, -1], &[2, -1]], (2, 6, 4, 2)),
    row("Fig-quad2-9", Family::Polygon, &[&[0, 0], &[0, 1], &[6, -1], &[4, -1]], (2, 6, 4, 2)),
    row("Fig-quad2-10", Family::Polygon, &[&[0, 1], &[2, 1], &[3, -1], &[1, -1]], (2, 6, 4, 2)),
];

/// The three integral triangles with `w = 2`, `i = 2`, `b ∈ {3,4,5,6}`,
/// normalized so the interior points are `(1,0)` and `(2,0)`.
const TRIA2_ROWS: &[Row] = &[
    row("Fig-tria2-1", Family::Simplex, &[&[0, 0], &[0, 1], &[5, -1]], (2, 3, 3, 2)),
    row("Fig-tria2-2", Family::Simplex, &[&[0, 0], &[0, 1], &[6, -1]], (2, 4, 3, 2)),
    row("Fig-tria2-3", Family::Simplex, &[&[0, 1], &[4, 1], &[1, -1]], (2, 6, 3, 2)),
];

fn build(rowdef: &Row) -> CatalogEntry {
    let verts: Vec<LatticePoint> =
        rowdef.verts.iter().map(|v| crate::exact_arith::int_vec(v)).collect();
    let polytope = hull_int(&verts).expect("catalog vertex data is valid");
    let (interior, boundary, facets, width) = rowdef.stats;
    CatalogEntry {
        id: rowdef.id,
        label: rowdef.label,
        dimension: polytope.dim(),
        family: rowdef.family,
        polytope,
        expected: ExpectedStats { interior, boundary, facets, width: rat(width) },
    }
}

fn all_rows() -> impl Iterator<Item = &'static Row> {
    MAIN_ROWS
        .iter()
        .chain(REPRESENTATIVE_ROWS)
        .chain(R_ROWS)
        .chain(FIG_I1_ROWS)
        .chain(QUAD2_ROWS)
        .chain(TRIA2_ROWS)
}

/// Every catalog entry, in stable order: `M1`–`M12`, the dimension
/// representatives, `R1`–`R4`, the one-interior-point figures, the
/// two-interior-point quadrilaterals, the two-interior-point triangles.
pub fn all_entries() -> Vec<CatalogEntry> {
    all_rows().map(build).collect()
}

/// Look up one entry by id.
///
/// # Errors
/// [`Error::UnknownCatalogId`] if the id is not in the catalog.
pub fn get(id: &str) -> Result<CatalogEntry> {
    all_rows()
        .find(|r| r.id == id)
        .map(build)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

/// The twelve three-dimensional maximal classes `M1`–`M12`.
pub fn main_classes() -> Vec<CatalogEntry> {
    MAIN_ROWS.iter().map(build).collect()
}

/// The minimal sets `R1`–`R4`.
pub fn r2_sets() -> Vec<CatalogEntry> {
    R_ROWS.iter().map(build).collect()
}

/// The sixteen integral polygons with exactly one interior point.
pub fn figure_polygons_i1() -> Vec<CatalogEntry> {
    FIG_I1_ROWS.iter().map(build).collect()
}

/// The ten width-2 quadrilaterals with exactly two interior points.
pub fn figure_quads_i2() -> Vec<CatalogEntry> {
    QUAD2_ROWS.iter().map(build).collect()
}

/// The three width-2 triangles with exactly two interior points.
pub fn figure_triangles_i2() -> Vec<CatalogEntry> {
    TRIA2_ROWS.iter().map(build).collect()
}

/// Entries whose ambient dimension is `d`, in catalog order (used to
/// classify an input polytope against its dimension's catalog).
pub fn entries_for_dimension(d: usize) -> Vec<CatalogEntry> {
    all_rows().filter(|r| r.verts[0].len() == d).map(build).collect()
}

/// The doubly-exponential growth sequence: `y_1 = s + 1` and
/// `y_j = 1 + s·∏_{i<j} y_i`, equivalently `y_j = y_{j−1}² − y_{j−1} + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSequence {
    /// The lattice scale `s`.
    pub scale: Int,
    /// Terms `y_1, …, y_d`.
    pub terms: Vec<Int>,
}

impl YSequence {
    /// Whether the alternative recurrence `y_j = y_{j−1}² − y_{j−1} + 1`
    /// reproduces every computed term (it must; exposed so the acceptance
    /// suite can assert the two recurrences agree).
    pub fn square_recurrence_holds(&self) -> bool {
        self.terms.windows(2).all(|w| {
            let (prev, next) = (&w[0], &w[1]);
            *next == prev * prev - prev + Int::one()
        })
    }
}

/// Compute `y_1, …, y_d` for lattice scale `s` via the product recurrence.
///
/// # Errors
/// [`Error::InvalidScale`] for `s < 1`; [`Error::InvalidParameter`] for
/// `d < 1`.
pub fn y_sequence(s: &Int, d: usize) -> Result<YSequence> {
    if *s < Int::one() {
        return Err(Error::InvalidScale(format!("scale must be >= 1, got {s}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("y-sequence needs d >= 1".into()));
    }
    let mut terms: Vec<Int> = Vec::with_capacity(d);
    let mut product = Int::one();
    for _ in 0..d {
        let next = Int::one() + s * &product;
        product *= &next;
        terms.push(next);
    }
    Ok(YSequence { scale: s.clone(), terms })
}

/// The simplex `S_d = conv{o, y_1 e_1, …, y_{d−1} e_{d−1}, (y_d − 1) e_d}`,
/// whose volume is exactly `(1/d!)(1/s)(y_d − 1)²`.
///
/// # Errors
/// [`Error::InvalidScale`]; [`Error::InvalidParameter`] for `d < 2`;
/// [`Error::DimensionTooLarge`] beyond the ambient cap.
pub fn growth_simplex(s: &Int, d: usize) -> Result<VPolytope> {
    if d < 2 {
        return Err(Error::InvalidParameter("growth simplex needs d >= 2".into()));
    }
    if d > MAX_DIM {
        return Err(Error::DimensionTooLarge(d));
    }
    let y = y_sequence(s, d)?;
    let mut verts: Vec<LatticePoint> = vec![vec![Int::zero(); d]];
    for (j, yj) in y.terms.iter().enumerate() {
        let mut v = vec![Int::zero(); d];
        v[j] = if j + 1 == d { yj - Int::one() } else { yj.clone() };
        verts.push(v);
    }
    hull_int(&verts)
}

/// The planar quadrilateral
/// `Q²_s = conv{o, (2s+1)e₁, (2s+1)e₁ + e₂, (2s−1)e₁ + (2s−1)e₂}`:
/// integral, lattice-free w.r.t. `sZ²`, but not maximal among convex sets.
///
/// # Errors
/// [`Error::InvalidParameter`] for `s < 3` (the separation property starts
/// at `s = 3`).
pub fn q2(s: &Int) -> Result<VPolytope> {
    if *s < int(3) {
        return Err(Error::InvalidParameter(format!(
            "the quadrilateral family needs s >= 3, got {s}"
        )));
    }
    let two_s = int(2) * s;
    let verts: Vec<LatticePoint> = vec![
        vec![Int::zero(), Int::zero()],
        vec![&two_s + 1, Int::zero()],
        vec![&two_s + 1, Int::one()],
        vec![&two_s - 1, &two_s - 1],
    ];
    hull_int(&verts)
}

/// The three-way typing of maximal lattice-free triangles in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleType {
    /// Integer vertices, exactly one integer point in the relative
    /// interior of each edge.
    Type1,
    /// At least one fractional vertex `v`, exactly one integer point in
    /// the relative interior of each edge incident to `v`, and at least
    /// two integer points on the opposite edge.
    Type2,
    /// Exactly three boundary integer points, one in the relative interior
    /// of each edge.
    Type3,
}

impl TriangleType {
    /// Display name (`type 1`, …).
    pub fn name(self) -> &'static str {
        match self {
            TriangleType::Type1 => "type 1",
            TriangleType::Type2 => "type 2",
            TriangleType::Type3 => "type 3",
        }
    }
}

/// Classify a maximal lattice-free triangle (w.r.t. `Z²`) into the
/// three-way typing. The precondition is checked.
///
/// # Errors
/// [`Error::InvalidInput`] if the input is not a maximal lattice-free
/// planar triangle.
pub fn classify_triangle_type(t: &VPolytope) -> Result<TriangleType> {
    if t.dim() != 2 || !t.is_full_dimensional() || t.n_vertices() != 3 {
        return Err(Error::InvalidInput("expected a full-dimensional planar triangle".into()));
    }
    let spec = LatticeSpec::unit(2);
    if !is_latticefree(t, &spec)? || !is_maximal_latticefree_convex(t, &spec)?.is_maximal {
        return Err(Error::InvalidInput("triangle is not maximal lattice-free".into()));
    }
    let edge_list = facets(t)?;
    let mut edge_polys: Vec<VPolytope> = Vec::with_capacity(3);
    for e in &edge_list {
        let pts: Vec<_> = e.vertex_indices.iter().map(|&i| t.vertices()[i].clone()).collect();
        edge_polys.push(hull(&pts)?);
    }
    let relint_counts: Vec<usize> = edge_polys
        .iter()
        .map(|e| relint_lattice_points(e, &spec).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let vertex_integral: Vec<bool> = t
        .vertices()
        .iter()
        .map(|v| v.iter().all(|c| c.denom().is_one()))
        .collect();
    if vertex_integral.iter().all(|&b| b) && relint_counts.iter().all(|&c| c == 1) {
        return Ok(TriangleType::Type1);
    }
    let boundary_total = lattice_points(t, &spec, Region::Boundary)?.len();
    if boundary_total == 3 && relint_counts.iter().all(|&c| c == 1) {
        return Ok(TriangleType::Type3);
    }
    for (vi, integral) in vertex_integral.iter().enumerate() {
        if *integral {
            continue;
        }
        let incident: Vec<usize> = (0..3)
            .filter(|&e| edge_list[e].vertex_indices.contains(&vi))
            .collect();
        let opposite = (0..3)
            .find(|&e| !edge_list[e].vertex_indices.contains(&vi))
            .expect("triangle has an opposite edge");
        if incident.iter().all(|&e| relint_counts[e] == 1) {
            let opp_endpoints = edge_list[opposite]
                .vertex_indices
                .iter()
                .filter(|&&i| vertex_integral[i])
                .count();
            if relint_counts[opposite] + opp_endpoints >= 2 {
                return Ok(TriangleType::Type2);
            }
        }
    }
    Err(Error::InvalidInput(
        "triangle does not match any maximal lattice-free triangle type".into(),
    ))
}

/// Structural verification of an entry's family tag: simplices have
/// `k + 1` vertices, pyramids a base facet holding all vertices but the
/// apex, prisms two parallel translate triangle facets, parallelepipeds
/// three edge generators spanning all eight vertices.
///
/// # Errors
/// Propagates facet-computation errors only; a failed structural check
/// returns `Ok(false)`.
pub fn family_structure_holds(entry: &CatalogEntry) -> Result<bool> {
    let p = &entry.polytope;
    let ok = match entry.family {
        Family::Segment => p.intrinsic_dim() == 1,
        Family::Polygon => p.intrinsic_dim() == 2,
        Family::Simplex => p.n_vertices() == p.intrinsic_dim() + 1,
        Family::Pyramid => {
            p.is_full_dimensional()
                && p.dim() == 3
                && facets(p)?
                    .iter()
                    .any(|f| f.vertex_indices.len() == p.n_vertices() - 1)
        }
        Family::Prism => p.is_full_dimensional() && p.dim() == 3 && has_translate_bases(p)?,
        Family::Parallelepiped => {
            p.is_full_dimensional() && p.n_vertices() == 8 && is_parallelepiped(p)
        }
    };
    Ok(ok)
}

fn has_translate_bases(p: &VPolytope) -> Result<bool> {
    let fs = facets(p)?;
    for (i, fi) in fs.iter().enumerate() {
        if fi.vertex_indices.len() != 3 {
            continue;
        }
        for fj in fs.iter().skip(i + 1) {
            if fj.vertex_indices.len() != 3 {
                continue;
            }
            let mut a: Vec<_> =
                fi.vertex_indices.iter().map(|&k| p.vertices()[k].clone()).collect();
            let mut b: Vec<_> =
                fj.vertex_indices.iter().map(|&k| p.vertices()[k].clone()).collect();
            a.sort();
            b.sort();
            // Translation preserves the lexicographic order of a point
            // set, so matching sorted lists entrywise detects translates.
            let shift: Vec<Rat> =
                b[0].iter().zip(&a[0]).map(|(x, y)| x - y).collect();
            let translated = a.iter().all(|v| {
                let moved: Vec<Rat> = v.iter().zip(&shift).map(|(x, s)| x + s).collect();
                b.contains(&moved)
            });
            if translated {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn is_parallelepiped(p: &VPolytope) -> bool {
    let verts = p.vertices();
    let v0 = &verts[0]; // hull output is sorted, so this is the lex-min vertex
    let others: Vec<usize> = (1..verts.len()).collect();
    let mut found = false;
    crate::polyhedron::for_each_combination(others.len(), 3, |combo| {
        if found {
            return;
        }
        let gens: Vec<Vec<Rat>> = combo
            .iter()
            .map(|&c| {
                verts[others[c]]
                    .iter()
                    .zip(v0)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let mut generated: Vec<Vec<Rat>> = Vec::with_capacity(8);
        for mask in 0..8u8 {
            let mut pt: Vec<Rat> = v0.clone();
            for (bit, g) in gens.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    for (pc, gc) in pt.iter_mut().zip(g) {
                        *pc += gc;
                    }
                }
            }
            generated.push(pt);
        }
        generated.sort();
        generated.dedup();
        if generated.len() == 8 && generated == verts {
            found = true;
        }
    });
    found
}

/// Recompute an entry's statistics through the lattice module and compare
/// them with the frozen values.
///
/// # Errors
/// Propagates computation errors.
pub fn stats_match(entry: &CatalogEntry) -> Result<bool> {
    let sig = crate::equivalence::invariant_signature(&entry.polytope, &Int::one())?;
    Ok(sig.interior_count == entry.expected.interior
        && sig.boundary_count == entry.expected.boundary
        && sig.facet_count == entry.expected.facets
        && sig.width == entry.expected.width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int_vec;

    #[test]
    fn get_returns_exact_coordinates() {
        let m6 = get("M6").unwrap();
        let want: Vec<LatticePoint> =
            [[0, 0, 0], [3, 0, 0], [1, 3, 0], [2, 0, 3]].iter().map(|v| int_vec(v)).collect();
        let got = m6.polytope.integer_vertices().unwrap();
        let mut want_sorted = want;
        want_sorted.sort();
        assert_eq!(got, want_sorted);
        assert_eq!(m6.family, Family::Simplex);

        let r4 = get("R4").unwrap();
        assert_eq!(r4.polytope.n_vertices(), 3);
        assert!(get("M13").is_err());
    }

    #[test]
    fn m9_is_a_pyramid_with_the_stated_apex() {
        let m9 = get("M9").unwrap();
        assert!(family_structure_holds(&m9).unwrap());
        let apex = int_vec(&[1, 1, 3]);
        assert!(m9.polytope.integer_vertices().unwrap().contains(&apex));
    }

    #[test]
    fn family_structure_of_prisms_and_parallelepiped() {
        for id in ["M10", "M11", "M12"] {
            let e = get(id).unwrap();
            assert!(family_structure_holds(&e).unwrap(), "{id}");
        }
        // A simplex is not detected as a prism or parallelepiped.
        let m3 = get("M3").unwrap();
        let as_prism = CatalogEntry { family: Family::Prism, ..m3.clone() };
        assert!(!family_structure_holds(&as_prism).unwrap());
        let as_ppd = CatalogEntry { family: Family::Parallelepiped, ..m3 };
        assert!(!family_structure_holds(&as_ppd).unwrap());
    }

    #[test]
    fn y_sequence_values_and_recurrences() {
        let y = y_sequence(&int(1), 4).unwrap();
        assert_eq!(y.terms, vec![int(2), int(3), int(7), int(43)]);
        assert!(y.square_recurrence_holds());
        let y3 = y_sequence(&int(3), 3).unwrap();
        assert_eq!(y3.terms, vec![int(4), int(13), int(157)]);
        assert!(y3.square_recurrence_holds());
        assert!(y_sequence(&int(0), 2).is_err());
    }

    #[test]
    fn growth_simplex_matches_the_m2_representative_and_m1() {
        let s2 = growth_simplex(&int(1), 2).unwrap();
        let expect2 = hull_int(&[int_vec(&[0, 0]), int_vec(&[2, 0]), int_vec(&[0, 2])]).unwrap();
        assert_eq!(s2, expect2);
        // S_3 with s = 1 is exactly M1.
        let s3 = growth_simplex(&int(1), 3).unwrap();
        assert_eq!(s3, get("M1").unwrap().polytope);
        assert!(growth_simplex(&int(1), 1).is_err());
        assert!(growth_simplex(&int(1), 9).is_err());
    }

    #[test]
    fn q2_instance_and_bounds() {
        let q = q2(&int(3)).unwrap();
        let want = hull_int(&[
            int_vec(&[0, 0]),
            int_vec(&[7, 0]),
            int_vec(&[7, 1]),
            int_vec(&[5, 5]),
        ])
        .unwrap();
        assert_eq!(q, want);
        assert!(q2(&int(2)).is_err());
    }

    #[test]
    fn triangle_type_classification() {
        let t1 = hull_int(&[int_vec(&[0, 0]), int_vec(&[2, 0]), int_vec(&[0, 2])]).unwrap();
        assert_eq!(classify_triangle_type(&t1).unwrap(), TriangleType::Type1);

        let t2 = hull(&[
            vec![rat(0), crate::exact_arith::ratio(-1, 2)],
            vec![rat(0), crate::exact_arith::ratio(3, 2)],
            vec![rat(2), crate::exact_arith::ratio(1, 2)],
        ])
        .unwrap();
        assert_eq!(classify_triangle_type(&t2).unwrap(), TriangleType::Type2);

        // Not lattice-free: rejected.
        let bad = hull_int(&[int_vec(&[0, 0]), int_vec(&[3, 0]), int_vec(&[0, 3])]).unwrap();
        assert!(classify_triangle_type(&bad).is_err());
    }

    #[test]
    fn entry_sets_have_the_expected_sizes() {
        assert_eq!(main_classes().len(), 12);
        assert_eq!(r2_sets().len(), 4);
        assert_eq!(figure_polygons_i1().len(), 16);
        assert_eq!(figure_quads_i2().len(), 10);
        assert_eq!(figure_triangles_i2().len(), 3);
        assert_eq!(entries_for_dimension(3).len(), 12);
        assert_eq!(entries_for_dimension(1).len(), 1);
    }

    #[test]
    fn frozen_statistics_match_fresh_computation_for_every_entry() {
        for e in all_entries() {
            assert!(stats_match(&e).unwrap(), "stale frozen statistics for {}", e.id);
        }
    }
}
