//! Exact V- and H-representations of rational polytopes in dimension ≤ 4,
//! with conversion, facet structure, volume, and projection.
//!
//! The working dimension of the classification is 3 (ambient cap 4, needed
//! only for the doubly-exponential simplices `S_4`), and vertex counts stay
//! at or below 12, so every conversion here is honest brute force over
//! vertex subsets and inequality subsets: at these sizes subset enumeration
//! is faster to trust, and fast enough, compared with incremental double
//! description. All computation is exact rational arithmetic.
//!
//! Volume is always taken relative to the affine hull: full-dimensional
//! bodies get the ordinary Euclidean volume, lower-dimensional ones are
//! measured in coordinates of a saturated basis of their direction lattice
//! (so an integral segment of lattice length 2 has volume 2).

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{
    denominator_lcm, dot, dot_rat, primitive_directed, rat_det, rat_inverse, rat_rank,
    rat_kernel_vector, row_hermite, solve_rat, sub_rat, AffineUnimodularMap, Int, IntMatrix,
    LatticePoint, Rat, RationalPoint,
};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 4;

/// A polytope given by its irredundant, lexicographically sorted vertex
/// list. Construct through [`hull`] (or deserialization, which validates);
/// the invariants are maintained by every operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VPolytope {
    dim: usize,
    intrinsic: usize,
    vertices: Vec<RationalPoint>,
}

/// One inequality `normal · x ≤ rhs` with primitive integer normal.
///
/// The right-hand side is rational: polytopes with fractional vertices can
/// have facet hyperplanes that meet no integer point (for example the edge
/// `x = 1/2` of a square), and a primitive normal then forces a fractional
/// right-hand side. For integral polytopes the right-hand side is always an
/// integer value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HRow {
    /// Primitive integer outer normal.
    pub normal: LatticePoint,
    /// Right-hand side of `normal · x ≤ rhs`.
    pub rhs: Rat,
}

/// An inequality system `Ax ≤ b` over primitive integer normals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    rows: Vec<HRow>,
}

/// A facet of a full-dimensional polytope: its inequality together with the
/// indices of the incident vertices (into the polytope's vertex list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer outer normal.
    pub normal: LatticePoint,
    /// Right-hand side of `normal · x ≤ rhs`.
    pub rhs: Rat,
    /// Sorted indices of the vertices lying on the facet.
    pub vertex_indices: Vec<usize>,
}

impl HPolyhedron {
    /// Build from rows, normalizing each normal to a primitive vector (the
    /// right-hand side is rescaled accordingly) and deduplicating.
    ///
    /// # Errors
    /// [`Error::ZeroVector`] for a row with zero normal,
    /// [`Error::DimensionTooLarge`], or [`Error::DimensionMismatch`] for
    /// ragged rows.
    pub fn new(dim: usize, rows: Vec<(LatticePoint, Rat)>) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (normal, rhs) in rows {
            if normal.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: normal.len() });
            }
            let g = crate::exact_arith::gcd_all(&normal);
            if g.is_zero() {
                return Err(Error::ZeroVector);
            }
            let normal = primitive_directed(&normal)?;
            let rhs = rhs / Rat::from_integer(g);
            if seen.insert((normal.clone(), rhs.clone())) {
                out.push(HRow { normal, rhs });
            }
        }
        out.sort();
        Ok(HPolyhedron { dim, rows: out })
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The inequality rows, sorted canonically.
    pub fn rows(&self) -> &[HRow] {
        &self.rows
    }

    /// The rows with cleared denominators: `(q·normal, p)` encodes the same
    /// halfspace as `normal · x ≤ p/q`. Useful for pure-integer scanning.
    pub fn integer_rows(&self) -> Vec<(LatticePoint, Int)> {
        self.rows
            .iter()
            .map(|r| {
                let q = r.rhs.denom();
                (r.normal.iter().map(|c| c * q).collect(), r.rhs.numer().clone())
            })
            .collect()
    }

    /// Whether `x` satisfies every row (weakly).
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|r| dot_rat(&r.normal, x) <= r.rhs)
    }

    /// Whether `x` satisfies every row strictly.
    pub fn contains_strictly(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|r| dot_rat(&r.normal, x) < r.rhs)
    }
}

impl VPolytope {
    fn from_sorted(dim: usize, intrinsic: usize, vertices: Vec<RationalPoint>) -> Self {
        VPolytope { dim, intrinsic, vertices }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull.
    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic
    }

    /// Whether the affine hull is all of the ambient space.
    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic == self.dim
    }

    /// The vertices, lexicographically sorted.
    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Whether all vertices are integer points.
    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|c| c.denom().is_one()))
    }

    /// The precision: the smallest positive integer `s` such that `sP` is
    /// integral, i.e. the lcm of all vertex-coordinate denominators.
    pub fn precision(&self) -> Int {
        let mut l = Int::one();
        for v in &self.vertices {
            l = num_integer::lcm(l, denominator_lcm(v));
        }
        l
    }

    /// The vertices as integer points, or `None` if not integral.
    pub fn integer_vertices(&self) -> Option<Vec<LatticePoint>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.vertices.iter().map(|v| v.iter().map(|c| c.numer().clone()).collect()).collect())
    }

    /// Whether `x` lies in the polytope (affine-hull membership plus the
    /// reduced inequality system; works in any intrinsic dimension).
    pub fn contains(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        if self.intrinsic == self.dim {
            return Ok(v_to_h(self)?.contains(x));
        }
        let frame = AffineFrame::from_points(&self.vertices);
        let Some(y) = frame.coords(x) else {
            return Ok(false);
        };
        if self.intrinsic == 0 {
            return Ok(true);
        }
        let reduced = self.reduced_by(&frame);
        Ok(v_to_h(&reduced)?.contains(&y))
    }

    /// Image under an affine unimodular map. Affine bijections map vertex
    /// sets to vertex sets, so this re-sorts without re-running the hull.
    ///
    /// # Errors
    /// [`Error::DimensionMismatch`].
    pub fn apply_unimodular(&self, t: &AffineUnimodularMap) -> Result<VPolytope> {
        let mut vertices = self
            .vertices
            .iter()
            .map(|v| t.apply(v))
            .collect::<Result<Vec<_>>>()?;
        vertices.sort();
        Ok(VPolytope::from_sorted(self.dim, self.intrinsic, vertices))
    }

    /// Translate by a rational vector (an affine bijection as well).
    pub fn translate(&self, v: &[Rat]) -> Result<VPolytope> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let mut vertices: Vec<RationalPoint> =
            self.vertices.iter().map(|w| crate::exact_arith::add_rat(w, v)).collect();
        vertices.sort();
        Ok(VPolytope::from_sorted(self.dim, self.intrinsic, vertices))
    }

    fn reduced_by(&self, frame: &AffineFrame) -> VPolytope {
        let mut verts: Vec<RationalPoint> = self
            .vertices
            .iter()
            .map(|v| frame.coords(v).expect("vertex lies in its own affine hull"))
            .collect();
        verts.sort();
        VPolytope::from_sorted(frame.rank(), frame.rank(), verts)
    }
}

/// Convex hull: the irredundant vertex set of `conv(points)`, in canonical
/// lexicographic order. Works for any intrinsic dimension up to the ambient
/// dimension.
///
/// # Errors
/// [`Error::EmptyInput`], [`Error::DimensionTooLarge`], or
/// [`Error::DimensionMismatch`] for ragged input.
pub fn hull(points: &[RationalPoint]) -> Result<VPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let dim = first.len();
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    if dim == 0 {
        return Err(Error::InvalidInput("zero-dimensional ambient space".into()));
    }
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
        }
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let frame = AffineFrame::from_points(&pts);
    let k = frame.rank();
    if k == 0 {
        return Ok(VPolytope::from_sorted(dim, 0, pts));
    }
    let work: Vec<RationalPoint> = if k == dim {
        pts.clone()
    } else {
        pts.iter().map(|p| frame.coords(p).expect("input point lies in affine hull")).collect()
    };
    let rows = facet_rows(&work, k);
    let vertices: Vec<RationalPoint> = pts
        .iter()
        .zip(&work)
        .filter(|(_, w)| is_vertex(w, &rows, k))
        .map(|(p, _)| p.clone())
        .collect();
    Ok(VPolytope::from_sorted(dim, k, vertices))
}

/// Hull of integer points.
///
/// # Errors
/// As [`hull`].
pub fn hull_int(points: &[LatticePoint]) -> Result<VPolytope> {
    let rational: Vec<RationalPoint> =
        points.iter().map(|p| crate::exact_arith::to_rational(p)).collect();
    hull(&rational)
}

/// Convert to the facet inequality system.
///
/// # Errors
/// [`Error::NotFullDimensional`] for lower-dimensional input (project to
/// the affine hull first).
pub fn v_to_h(p: &VPolytope) -> Result<HPolyhedron> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { intrinsic: p.intrinsic, ambient: p.dim });
    }
    let mut rows = facet_rows(&p.vertices, p.dim);
    rows.sort();
    Ok(HPolyhedron { dim: p.dim, rows })
}

/// Vertex enumeration of a bounded inequality system: solve every
/// `d`-subset of rows with independent normals and keep the solutions that
/// satisfy all rows. Every vertex is tight on `d` independent rows, so this
/// is complete; every kept point is a vertex because it is such a basic
/// feasible solution.
///
/// # Errors
/// [`Error::UnboundedPolyhedron`] if the feasible set is unbounded (rank
/// deficiency or a recession ray), [`Error::EmptyPolyhedron`] if it is
/// empty.
pub fn h_to_v(h: &HPolyhedron) -> Result<VPolytope> {
    let d = h.dim;
    let n = h.rows.len();
    let normals: Vec<RationalPoint> =
        h.rows.iter().map(|r| crate::exact_arith::to_rational(&r.normal)).collect();
    if rat_rank(&normals) < d {
        return Err(Error::UnboundedPolyhedron);
    }
    // A nonempty pointed recession cone has an extreme ray tight on d-1
    // independent rows; test the kernel direction of every such subset.
    let mut unbounded = false;
    if d >= 1 {
        for_each_combination(n, d - 1, |idx| {
            if unbounded {
                return;
            }
            let subset: Vec<RationalPoint> = idx.iter().map(|&i| normals[i].clone()).collect();
            if rat_rank(&subset) + 1 != d {
                return;
            }
            let Some(ray) = rat_kernel_vector(&subset) else {
                return;
            };
            let neg: RationalPoint = ray.iter().map(|x| -x.clone()).collect();
            for cand in [&ray, &neg] {
                if normals.iter().all(|nrm| {
                    !dot_products_positive(nrm, cand)
                }) {
                    unbounded = true;
                    return;
                }
            }
        });
    }
    if unbounded {
        return Err(Error::UnboundedPolyhedron);
    }
    let mut vertices: Vec<RationalPoint> = Vec::new();
    for_each_combination(n, d, |idx| {
        let a: Vec<Vec<Rat>> = idx.iter().map(|&i| normals[i].clone()).collect();
        let b: Vec<Rat> = idx.iter().map(|&i| h.rows[i].rhs.clone()).collect();
        let Some(x) = solve_rat(&a, &b) else {
            return;
        };
        if h.contains(&x) {
            vertices.push(x);
        }
    });
    vertices.sort();
    vertices.dedup();
    if vertices.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let frame = AffineFrame::from_points(&vertices);
    Ok(VPolytope::from_sorted(d, frame.rank(), vertices))
}

fn dot_products_positive(normal: &[Rat], x: &[Rat]) -> bool {
    let mut acc = Rat::zero();
    for (a, b) in normal.iter().zip(x) {
        acc += a * b;
    }
    acc.is_positive()
}

/// The facets of a full-dimensional polytope, with incident vertex indices.
///
/// # Errors
/// As [`v_to_h`].
pub fn facets(p: &VPolytope) -> Result<Vec<Facet>> {
    let h = v_to_h(p)?;
    Ok(h.rows
        .iter()
        .map(|row| {
            let vertex_indices: Vec<usize> = p
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| dot_rat(&row.normal, v) == row.rhs)
                .map(|(i, _)| i)
                .collect();
            Facet { normal: row.normal.clone(), rhs: row.rhs.clone(), vertex_indices }
        })
        .collect())
}

/// Exact volume relative to the affine hull. Full-dimensional bodies get
/// Euclidean volume (fan triangulation from the first vertex, simplices by
/// `|det|/d!`); lower-dimensional bodies are measured in a saturated basis
/// of their direction lattice; a point has volume 1 by convention.
///
/// # Errors
/// Propagates frame construction failures (none for valid polytopes).
pub fn volume(p: &VPolytope) -> Result<Rat> {
    let k = p.intrinsic;
    if k == 0 {
        return Ok(Rat::one());
    }
    let work: Vec<RationalPoint> = if k == p.dim {
        p.vertices.clone()
    } else {
        let frame = LatticeFrame::from_points(&p.vertices)?;
        p.vertices.iter().map(|v| frame.coords(v).expect("vertex in affine hull")).collect()
    };
    Ok(euclidean_volume(&work, k))
}

/// Projection dropping the last coordinate, as a polytope.
///
/// # Errors
/// [`Error::InvalidParameter`] for ambient dimension < 2.
pub fn project_drop_last(p: &VPolytope) -> Result<VPolytope> {
    if p.dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "projection needs ambient dimension >= 2, got {}",
            p.dim
        )));
    }
    let projected: Vec<RationalPoint> =
        p.vertices.iter().map(|v| v[..p.dim - 1].to_vec()).collect();
    hull(&projected)
}

fn is_vertex(x: &[Rat], rows: &[HRow], k: usize) -> bool {
    let tight: Vec<RationalPoint> = rows
        .iter()
        .filter(|r| dot_rat(&r.normal, x) == r.rhs)
        .map(|r| crate::exact_arith::to_rational(&r.normal))
        .collect();
    tight.len() >= k && rat_rank(&tight) == k
}

/// Facet inequalities of the hull of a full-dimensional point set in `R^k`,
/// by brute force over `k`-subsets: a subset spanning a hyperplane with all
/// points on one side yields a valid row, and every facet contains `k`
/// affinely independent input points, so the enumeration is complete. The
/// returned rows are irredundant because a supporting hyperplane meeting
/// the hull in a face of dimension < k-1 cannot be spanned by input points.
fn facet_rows(points: &[RationalPoint], k: usize) -> Vec<HRow> {
    let lambda = points.iter().fold(Int::one(), |l, p| num_integer::lcm(l, denominator_lcm(p)));
    let scaled: Vec<LatticePoint> = points
        .iter()
        .map(|p| p.iter().map(|c| (c * Rat::from_integer(lambda.clone())).to_integer()).collect())
        .collect();
    let int_rows = facet_rows_int(&scaled, k);
    let lam = Rat::from_integer(lambda);
    int_rows
        .into_iter()
        .map(|(normal, rhs)| HRow { normal, rhs: Rat::from_integer(rhs) / &lam })
        .collect()
}

fn facet_rows_int(points: &[LatticePoint], k: usize) -> Vec<(LatticePoint, Int)> {
    let n = points.len();
    let mut seen: BTreeSet<(LatticePoint, Int)> = BTreeSet::new();
    if k == 1 {
        let min = points.iter().map(|p| p[0].clone()).min().expect("nonempty");
        let max = points.iter().map(|p| p[0].clone()).max().expect("nonempty");
        seen.insert((vec![Int::one()], max));
        seen.insert((vec![-Int::one()], -min));
        return seen.into_iter().collect();
    }
    for_each_combination(n, k, |idx| {
        let base = &points[idx[0]];
        let edges: Vec<LatticePoint> =
            idx[1..].iter().map(|&i| crate::exact_arith::sub(&points[i], base)).collect();
        let Some(normal) = cross_normal(&edges, k) else {
            return;
        };
        let Ok(normal) = primitive_directed(&normal) else {
            return;
        };
        let b0 = dot(&normal, base);
        let mut above = false;
        let mut below = false;
        for p in points {
            let v = dot(&normal, p);
            if v > b0 {
                above = true;
            } else if v < b0 {
                below = true;
            }
            if above && below {
                return;
            }
        }
        if !above {
            seen.insert((normal, b0));
        } else {
            seen.insert((normal.into_iter().map(|c| -c).collect(), -b0));
        }
    });
    seen.into_iter().collect()
}

/// Generalized cross product: the vector orthogonal to the k-1 given edge
/// vectors in `R^k` (cofactor expansion), or `None` if they are dependent.
fn cross_normal(edges: &[LatticePoint], k: usize) -> Option<LatticePoint> {
    debug_assert_eq!(edges.len(), k - 1);
    let mut normal = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<Int>> = edges
            .iter()
            .map(|e| e.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let det = IntMatrix::from_rows(minor).det().expect("square minor");
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    if normal.iter().all(Zero::is_zero) {
        None
    } else {
        Some(normal)
    }
}

fn euclidean_volume(points: &[RationalPoint], k: usize) -> Rat {
    let simplices = triangulate(points, k);
    let mut total = Rat::zero();
    let factorial: Int = (1..=k as u64).map(Int::from).product();
    for simplex in simplices {
        let base = &points[simplex[0]];
        let edges: Vec<Vec<Rat>> =
            simplex[1..].iter().map(|&i| sub_rat(&points[i], base)).collect();
        let det = rat_det(&edges);
        total += det.abs();
    }
    total / Rat::from_integer(factorial)
}

/// Combinatorial fan triangulation of a full-dimensional convex point
/// configuration in `R^k`: cones from point 0 over triangulations of the
/// facets not containing it. Returns index lists of size k+1.
fn triangulate(points: &[RationalPoint], k: usize) -> Vec<Vec<usize>> {
    debug_assert!(k >= 1);
    if k == 1 {
        let imin = (0..points.len()).min_by_key(|&i| points[i][0].clone()).expect("nonempty");
        let imax = (0..points.len()).max_by_key(|&i| points[i][0].clone()).expect("nonempty");
        return vec![vec![imin, imax]];
    }
    if points.len() == k + 1 {
        return vec![(0..=k).collect()];
    }
    let rows = facet_rows(points, k);
    let mut out = Vec::new();
    for row in &rows {
        let incident: Vec<usize> = (0..points.len())
            .filter(|&i| dot_rat(&row.normal, &points[i]) == row.rhs)
            .collect();
        if incident.contains(&0) {
            continue;
        }
        let facet_points: Vec<RationalPoint> =
            incident.iter().map(|&i| points[i].clone()).collect();
        let frame = AffineFrame::from_points(&facet_points);
        debug_assert_eq!(frame.rank(), k - 1);
        let reduced: Vec<RationalPoint> = facet_points
            .iter()
            .map(|p| frame.coords(p).expect("facet point in facet hull"))
            .collect();
        for sub in triangulate(&reduced, k - 1) {
            let mut simplex = vec![0usize];
            simplex.extend(sub.into_iter().map(|j| incident[j]));
            out.push(simplex);
        }
    }
    out
}

/// Visit all `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        if k == 0 {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A rational affine frame of a point set: an origin (the first point) plus
/// a maximal independent set of direction vectors, with an exact coordinate
/// solver. Used for reduction to the affine hull.
pub(crate) struct AffineFrame {
    origin: RationalPoint,
    basis: Vec<RationalPoint>,
    coord_rows: Vec<usize>,
    inv: Vec<Vec<Rat>>,
}

impl AffineFrame {
    /// Deterministic frame: origin is the first point; basis vectors are
    /// the successive differences that increase the rank.
    pub(crate) fn from_points(points: &[RationalPoint]) -> Self {
        let origin = points[0].clone();
        let mut basis: Vec<RationalPoint> = Vec::new();
        for p in &points[1..] {
            let cand = sub_rat(p, &origin);
            let mut trial = basis.clone();
            trial.push(cand.clone());
            if rat_rank(&trial) == trial.len() {
                basis.push(cand);
            }
        }
        Self::with_basis(origin, basis)
    }

    /// Frame with an explicitly chosen independent basis.
    pub(crate) fn with_basis(origin: RationalPoint, basis: Vec<RationalPoint>) -> Self {
        let k = basis.len();
        let d = origin.len();
        // Pick k coordinate positions where the basis matrix is invertible.
        let mut coord_rows: Vec<usize> = Vec::new();
        let mut chosen: Vec<Vec<Rat>> = Vec::new();
        for c in 0..d {
            if coord_rows.len() == k {
                break;
            }
            let row: Vec<Rat> = basis.iter().map(|b| b[c].clone()).collect();
            let mut trial = chosen.clone();
            trial.push(row.clone());
            if rat_rank(&trial) == trial.len() {
                chosen.push(row);
                coord_rows.push(c);
            }
        }
        debug_assert_eq!(coord_rows.len(), k);
        let inv = if k == 0 { Vec::new() } else { rat_inverse(&chosen).expect("invertible") };
        AffineFrame { origin, basis, coord_rows, inv }
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn basis(&self) -> &[RationalPoint] {
        &self.basis
    }

    pub(crate) fn origin(&self) -> &RationalPoint {
        &self.origin
    }

    /// Coordinates of `x` in the frame, or `None` if `x` is outside the
    /// affine span.
    pub(crate) fn coords(&self, x: &[Rat]) -> Option<RationalPoint> {
        let k = self.rank();
        let diff = sub_rat(x, &self.origin);
        let rhs: Vec<Rat> = self.coord_rows.iter().map(|&c| diff[c].clone()).collect();
        let y: Vec<Rat> = self
            .inv
            .iter()
            .take(k)
            .map(|inv_row| inv_row.iter().zip(&rhs).map(|(a, b)| a * b).sum())
            .collect();
        // Verify the remaining coordinates: x must actually lie in the span.
        for c in 0..self.origin.len() {
            let mut acc = Rat::zero();
            for (j, b) in self.basis.iter().enumerate() {
                acc += &b[c] * &y[j];
            }
            if acc != diff[c] {
                return None;
            }
        }
        Some(y)
    }
}

/// A lattice-adapted frame: like [`AffineFrame`] but the basis is a
/// saturated (primitive) basis of `span ∩ Z^d` for the direction span of
/// the points, together with a completion to a basis of `Z^d`. Coordinates
/// in this frame identify `aff ∩ (origin + Z^d)` with `Z^k`, which makes
/// lower-dimensional volume, lattice counts, and equivalence exact.
pub(crate) struct LatticeFrame {
    frame: AffineFrame,
    completion: Vec<LatticePoint>,
}

impl LatticeFrame {
    pub(crate) fn from_points(points: &[RationalPoint]) -> Result<Self> {
        let raw = AffineFrame::from_points(points);
        let k = raw.rank();
        let d = points[0].len();
        if k == 0 {
            return Ok(LatticeFrame {
                frame: AffineFrame::with_basis(raw.origin.clone(), Vec::new()),
                completion: Vec::new(),
            });
        }
        // Clear denominators: the saturation only depends on the span.
        let cleared: Vec<LatticePoint> = raw
            .basis
            .iter()
            .map(|b| {
                let l = denominator_lcm(b);
                b.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let dmat = IntMatrix::from_rows(cleared);
        let (h1, _) = row_hermite(&dmat);
        let hk = IntMatrix::from_rows(
            (0..k).map(|i| h1.row(i).to_vec()).collect::<Vec<_>>(),
        );
        debug_assert!(hk.row(k - 1).iter().any(|x| !x.is_zero()));
        let (_, u2) = row_hermite(&hk.transpose());
        let v = u2.transpose();
        let v_inv = v.inverse_unimodular()?;
        let sat_basis: Vec<RationalPoint> = (0..k)
            .map(|i| crate::exact_arith::to_rational(v_inv.row(i)))
            .collect();
        let completion: Vec<LatticePoint> = (k..d).map(|i| v_inv.row(i).to_vec()).collect();
        Ok(LatticeFrame {
            frame: AffineFrame::with_basis(raw.origin.clone(), sat_basis),
            completion,
        })
    }

    pub(crate) fn rank(&self) -> usize {
        self.frame.rank()
    }

    pub(crate) fn origin(&self) -> &RationalPoint {
        self.frame.origin()
    }

    /// The saturated basis vectors (integer, primitive sublattice).
    pub(crate) fn basis_int(&self) -> Vec<LatticePoint> {
        self.frame
            .basis()
            .iter()
            .map(|b| b.iter().map(|c| c.to_integer()).collect())
            .collect()
    }

    /// Completion of the basis to a basis of `Z^d`.
    pub(crate) fn completion(&self) -> &[LatticePoint] {
        &self.completion
    }

    pub(crate) fn coords(&self, x: &[Rat]) -> Option<RationalPoint> {
        self.frame.coords(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int_vec, rat, rat_vec, ratio};

    fn rp(coords: &[&[i64]]) -> Vec<RationalPoint> {
        coords.iter().map(|c| rat_vec(c)).collect()
    }

    #[test]
    fn hull_removes_collinear_midpoint() {
        let p = hull(&rp(&[&[0, 0], &[1, 0], &[0, 0]])).unwrap();
        assert_eq!(p.n_vertices(), 2);
        let q = hull(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), vec![ratio(1, 2), rat(0)]]).unwrap();
        assert_eq!(q.vertices(), &[rat_vec(&[0, 0]), rat_vec(&[1, 0])]);
        assert_eq!(q.intrinsic_dim(), 1);
    }

    #[test]
    fn hull_keeps_simplex_vertices() {
        let p = hull(&rp(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 6]])).unwrap();
        assert_eq!(p.n_vertices(), 4);
        assert!(p.is_full_dimensional());
    }

    #[test]
    fn hull_drops_square_center() {
        let p = hull(&rp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        let with_center =
            hull(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1]), vec![
                ratio(1, 2),
                ratio(1, 2),
            ]]);
        assert_eq!(p.unwrap(), with_center.unwrap());
    }

    #[test]
    fn hull_rejects_empty_and_oversized() {
        assert!(matches!(hull(&[]), Err(Error::EmptyInput)));
        let p5 = vec![rat_vec(&[0, 0, 0, 0, 0])];
        assert!(matches!(hull(&p5), Err(Error::DimensionTooLarge(5))));
    }

    #[test]
    fn v_to_h_unit_triangle() {
        let p = hull(&rp(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let h = v_to_h(&p).unwrap();
        let rows: Vec<(Vec<i64>, i64)> = vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 1)];
        let expect: Vec<HRow> = rows
            .into_iter()
            .map(|(n, b)| HRow { normal: int_vec(&n), rhs: rat(b) })
            .collect();
        assert_eq!(h.rows(), &expect[..]);
    }

    #[test]
    fn v_to_h_rejects_lower_dimensional() {
        let seg = hull(&rp(&[&[0, 0], &[2, 0]])).unwrap();
        assert!(matches!(v_to_h(&seg), Err(Error::NotFullDimensional { .. })));
    }

    #[test]
    fn cube_has_six_facets_and_roundtrips() {
        let corners: Vec<RationalPoint> = (0..8)
            .map(|m| rat_vec(&[(m & 1) as i64, ((m >> 1) & 1) as i64, ((m >> 2) & 1) as i64]))
            .collect();
        let cube = hull(&corners).unwrap();
        let h = v_to_h(&cube).unwrap();
        assert_eq!(h.rows().len(), 6);
        let back = h_to_v(&h).unwrap();
        assert_eq!(back, cube);
    }

    #[test]
    fn h_to_v_unit_triangle() {
        let h = HPolyhedron::new(
            2,
            vec![
                (int_vec(&[-1, 0]), rat(0)),
                (int_vec(&[0, -1]), rat(0)),
                (int_vec(&[1, 1]), rat(1)),
            ],
        )
        .unwrap();
        let p = h_to_v(&h).unwrap();
        assert_eq!(p.vertices(), &rp(&[&[0, 0], &[0, 1], &[1, 0]])[..]);
    }

    #[test]
    fn h_to_v_detects_unbounded_slab() {
        let h = HPolyhedron::new(
            3,
            vec![(int_vec(&[0, 0, 1]), rat(1)), (int_vec(&[0, 0, -1]), rat(0))],
        )
        .unwrap();
        assert!(matches!(h_to_v(&h), Err(Error::UnboundedPolyhedron)));
    }

    #[test]
    fn h_to_v_detects_unbounded_orthant_with_full_rank() {
        let h = HPolyhedron::new(
            2,
            vec![(int_vec(&[-1, 0]), rat(0)), (int_vec(&[0, -1]), rat(0))],
        )
        .unwrap();
        assert!(matches!(h_to_v(&h), Err(Error::UnboundedPolyhedron)));
    }

    #[test]
    fn h_to_v_detects_empty_system() {
        let h = HPolyhedron::new(
            1,
            vec![(int_vec(&[1]), rat(0)), (int_vec(&[-1]), rat(-1))],
        )
        .unwrap();
        assert!(matches!(h_to_v(&h), Err(Error::EmptyPolyhedron)));
    }

    #[test]
    fn volume_of_right_triangle() {
        let p = hull(&rp(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert_eq!(volume(&p).unwrap(), rat(2));
    }

    #[test]
    fn volume_of_unit_square_and_cube() {
        let sq = hull(&rp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(volume(&sq).unwrap(), rat(1));
        let corners: Vec<RationalPoint> = (0..8)
            .map(|m| rat_vec(&[(m & 1) as i64, ((m >> 1) & 1) as i64, ((m >> 2) & 1) as i64]))
            .collect();
        let cube = hull(&corners).unwrap();
        assert_eq!(volume(&cube).unwrap(), rat(1));
    }

    #[test]
    fn volume_of_lower_dimensional_segment_is_lattice_length() {
        let seg = hull(&rp(&[&[0, 0], &[2, 4]])).unwrap();
        assert_eq!(volume(&seg).unwrap(), rat(2));
        let pt = hull(&rp(&[&[3, 5]])).unwrap();
        assert_eq!(volume(&pt).unwrap(), rat(1));
    }

    #[test]
    fn projection_of_cube_and_segment() {
        let corners: Vec<RationalPoint> = (0..8)
            .map(|m| rat_vec(&[(m & 1) as i64, ((m >> 1) & 1) as i64, ((m >> 2) & 1) as i64]))
            .collect();
        let cube = hull(&corners).unwrap();
        let sq = project_drop_last(&cube).unwrap();
        assert_eq!(sq, hull(&rp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap());
        let seg = hull(&rp(&[&[0, 0], &[0, 1]])).unwrap();
        let pt = project_drop_last(&seg).unwrap();
        assert_eq!(pt.vertices(), &[rat_vec(&[0])]);
    }

    #[test]
    fn integrality_and_precision() {
        let p = hull(&[vec![ratio(1, 2), rat(0)], vec![rat(0), ratio(1, 3)], rat_vec(&[0, 0])])
            .unwrap();
        assert!(!p.is_integral());
        assert_eq!(p.precision(), crate::exact_arith::int(6));
        let q = hull(&rp(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert!(q.is_integral());
        assert_eq!(q.precision(), crate::exact_arith::int(1));
    }

    #[test]
    fn contains_handles_all_dimensions() {
        let tri = hull(&rp(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert!(tri.contains(&rat_vec(&[1, 0])).unwrap());
        assert!(tri.contains(&[ratio(1, 2), ratio(1, 2)]).unwrap());
        assert!(!tri.contains(&rat_vec(&[2, 2])).unwrap());
        let seg = hull(&rp(&[&[0, 0], &[2, 2]])).unwrap();
        assert!(seg.contains(&rat_vec(&[1, 1])).unwrap());
        assert!(!seg.contains(&rat_vec(&[1, 0])).unwrap());
        assert!(!seg.contains(&rat_vec(&[3, 3])).unwrap());
    }

    #[test]
    fn lattice_frame_saturates_directions() {
        let pts = rp(&[&[0, 0], &[2, 4]]);
        let f = LatticeFrame::from_points(&pts).unwrap();
        assert_eq!(f.basis_int(), vec![int_vec(&[1, 2])]);
        let y = f.coords(&rat_vec(&[2, 4])).unwrap();
        assert_eq!(y, vec![rat(2)]);
        assert_eq!(f.completion().len(), 1);
    }

    #[test]
    fn combination_visitor_counts() {
        let mut count = 0;
        for_each_combination(5, 3, |_| count += 1);
        assert_eq!(count, 10);
        let mut singles = Vec::new();
        for_each_combination(3, 1, |c| singles.push(c[0]));
        assert_eq!(singles, vec![0, 1, 2]);
    }
}
