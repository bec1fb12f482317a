//! Lattice-theoretic predicates and statistics for rational polytopes with
//! respect to the scaled lattice Λ = sZ^d.
//!
//! The module provides point enumeration (interior / boundary / facet
//! relative interiors), lattice-freeness, the two distinct maximality
//! notions, lattice width with a certified finite search, Pick quantities,
//! parity classes, and the closed-form interior-point systems for the six
//! pyramid/prism families over fixed base polygons.
//!
//! Everything enumerates lattice points by scanning the integer bounding
//! box against the facet inequality system — the bodies this library
//! handles have at most a few hundred box points, so exactness and
//! simplicity win over clever counting.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{
    dot, int, rat_ceil, rat_floor, rat_inverse, rat_rank, to_rational, Int, LatticePoint, Rat,
    RationalPoint,
};
use crate::polyhedron::{hull, v_to_h, HPolyhedron, VPolytope, MAX_DIM};

/// The lattice Λ = sZ^d: ambient dimension plus the scaling parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    dim: usize,
    scale: Int,
}

impl LatticeSpec {
    /// Λ = sZ^d.
    ///
    /// # Errors
    /// [`Error::InvalidScale`] for s < 1, [`Error::DimensionTooLarge`].
    pub fn new(dim: usize, scale: Int) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        if scale < Int::one() {
            return Err(Error::InvalidScale(format!("scale must be >= 1, got {scale}")));
        }
        Ok(LatticeSpec { dim, scale })
    }

    /// The unscaled lattice Z^d.
    pub fn unit(dim: usize) -> Self {
        LatticeSpec { dim, scale: Int::one() }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The scaling parameter s.
    pub fn scale(&self) -> &Int {
        &self.scale
    }

    /// Whether Λ = Z^d.
    pub fn is_unit(&self) -> bool {
        self.scale.is_one()
    }

    /// Whether `x` is a lattice point (all coordinates divisible by s).
    pub fn contains(&self, x: &[Int]) -> bool {
        x.iter().all(|c| c.is_multiple_of(&self.scale))
    }
}

/// Which part of the polytope to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Topological interior (empty for lower-dimensional polytopes).
    Interior,
    /// Topological boundary (the whole polytope when lower-dimensional).
    Boundary,
    /// The polytope itself.
    All,
}

/// Result of the width computation: the exact minimum and a dual vector
/// achieving it. The witness is the cleared integer form `z = s·u` of the
/// optimal dual-lattice vector `u ∈ (1/s)Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthResult {
    /// The lattice width, an exact rational.
    pub width: Rat,
    /// Integer form of the optimal dual vector.
    pub witness: LatticePoint,
}

/// Verdict of the maximality test among lattice-free convex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexMaximality {
    /// Whether the polytope is lattice-free to begin with.
    pub is_latticefree: bool,
    /// One lattice point in the relative interior of each facet, if any;
    /// aligned with [`facets`](crate::polyhedron::facets) order.
    pub facet_witnesses: Vec<Option<LatticePoint>>,
    /// Lattice-free and every facet carries a witness.
    pub is_maximal: bool,
}

/// Verdict of the radius-bounded maximality test among lattice-free
/// *integral* polytopes. A positive verdict is explicitly a bounded
/// certificate — it names the search radius it is valid for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralMaximality {
    /// No integral enlargement within the stated radius stays lattice-free.
    MaximalWithinRadius {
        /// The inflation radius that was searched.
        radius: Int,
    },
    /// `conv(P ∪ {witness})` is a strictly larger lattice-free integral
    /// polytope.
    NotMaximal {
        /// The enlargement point.
        witness: LatticePoint,
    },
}

/// Exact Pick-formula data of an integral polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PickCheck {
    /// Euclidean area.
    pub area: Rat,
    /// Number of interior integer points.
    pub interior: usize,
    /// Number of boundary integer points.
    pub boundary: usize,
    /// Whether `area = i + b/2 − 1` (always true; cross-checks the volume
    /// and enumeration code paths against each other).
    pub holds: bool,
}

/// The full lattice-analysis record of a full-dimensional polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    /// Lattice points in the interior, lexicographically sorted.
    pub interior_points: Vec<LatticePoint>,
    /// Lattice points on the boundary, lexicographically sorted.
    pub boundary_points: Vec<LatticePoint>,
    /// Lattice points in the relative interior of each facet, aligned with
    /// [`facets`](crate::polyhedron::facets) order. Disjoint subsets of `boundary_points`.
    pub facet_relint_points: Vec<Vec<LatticePoint>>,
    /// The lattice width.
    pub width: Rat,
    /// Integer form of the width-minimizing dual vector.
    pub width_witness: LatticePoint,
    /// Number of distinct mod-2 residue classes among all lattice points of
    /// the polytope; only defined for s = 1.
    pub parity_class_count: Option<usize>,
    /// Whether the interior misses Λ.
    pub is_latticefree: bool,
    /// Whether additionally every facet's relative interior meets Λ.
    pub is_maximal_convex: bool,
}

fn check_dims(p: &VPolytope, spec: &LatticeSpec) -> Result<()> {
    if p.dim() != spec.dim() {
        return Err(Error::DimensionMismatch { expected: spec.dim(), got: p.dim() });
    }
    Ok(())
}

fn require_full_dim(p: &VPolytope) -> Result<()> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            intrinsic: p.intrinsic_dim(),
            ambient: p.dim(),
        });
    }
    Ok(())
}

/// Per-coordinate lattice ranges covering the polytope: the i-th lattice
/// coordinate k (the point being s·k) runs over `lo[i]..=hi[i]`.
fn lattice_box(p: &VPolytope, spec: &LatticeSpec) -> (Vec<Int>, Vec<Int>) {
    let s = Rat::from_integer(spec.scale.clone());
    let mut lo = Vec::with_capacity(p.dim());
    let mut hi = Vec::with_capacity(p.dim());
    for i in 0..p.dim() {
        let min = p.vertices().iter().map(|v| v[i].clone()).min().expect("nonempty");
        let max = p.vertices().iter().map(|v| v[i].clone()).max().expect("nonempty");
        lo.push(rat_ceil(&(min / &s)));
        hi.push(rat_floor(&(max / &s)));
    }
    (lo, hi)
}

/// Visit the integer tuples of `Π [lo_i, hi_i]` in lexicographic order;
/// stop early when the callback returns `false`. Returns `false` iff
/// stopped early.
fn for_each_in_box(lo: &[Int], hi: &[Int], mut f: impl FnMut(&[Int]) -> bool) -> bool {
    let d = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return true;
    }
    let mut cur: Vec<Int> = lo.to_vec();
    loop {
        if !f(&cur) {
            return false;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1u32;
                cur[i + 1..].clone_from_slice(&lo[i + 1..]);
                break;
            }
        }
    }
}

/// Visit the Λ-points of the polytope's bounding box in lexicographic
/// order, stopping early when `f` returns `false`.
fn scan_lattice_points(
    p: &VPolytope,
    spec: &LatticeSpec,
    mut f: impl FnMut(&LatticePoint) -> bool,
) -> bool {
    let (lo, hi) = lattice_box(p, spec);
    for_each_in_box(&lo, &hi, |k| {
        let x: LatticePoint = k.iter().map(|c| c * &spec.scale).collect();
        f(&x)
    })
}

#[derive(PartialEq, Eq)]
enum Position {
    Outside,
    OnBoundary,
    InInterior,
}

fn classify_against(rows: &HPolyhedron, x: &LatticePoint) -> Position {
    let mut interior = true;
    for row in rows.rows() {
        let lhs = Rat::from_integer(dot(&row.normal, x));
        if lhs > row.rhs {
            return Position::Outside;
        }
        if lhs == row.rhs {
            interior = false;
        }
    }
    if interior {
        Position::InInterior
    } else {
        Position::OnBoundary
    }
}

/// Enumerate the Λ-points of the chosen region, sorted lexicographically.
///
/// For a lower-dimensional polytope the topological interior is empty and
/// the boundary is the polytope itself.
///
/// # Errors
/// [`Error::DimensionMismatch`] between polytope and lattice.
pub fn lattice_points(
    p: &VPolytope,
    spec: &LatticeSpec,
    region: Region,
) -> Result<Vec<LatticePoint>> {
    check_dims(p, spec)?;
    let mut out = Vec::new();
    if p.is_full_dimensional() {
        let h = v_to_h(p)?;
        scan_lattice_points(p, spec, |x| {
            let keep = match classify_against(&h, x) {
                Position::Outside => false,
                Position::OnBoundary => region != Region::Interior,
                Position::InInterior => region != Region::Boundary,
            };
            if keep {
                out.push(x.clone());
            }
            true
        });
    } else {
        if region == Region::Interior {
            return Ok(out);
        }
        scan_lattice_points(p, spec, |x| {
            if p.contains(&to_rational(x)).expect("dimensions checked") {
                out.push(x.clone());
            }
            true
        });
    }
    Ok(out)
}

/// The first interior Λ-point in lexicographic scan order, if any.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn interior_lattice_point(
    p: &VPolytope,
    spec: &LatticeSpec,
) -> Result<Option<LatticePoint>> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    let h = v_to_h(p)?;
    let mut found = None;
    scan_lattice_points(p, spec, |x| {
        if classify_against(&h, x) == Position::InInterior {
            found = Some(x.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Whether the interior of the polytope misses Λ.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn is_latticefree(p: &VPolytope, spec: &LatticeSpec) -> Result<bool> {
    Ok(interior_lattice_point(p, spec)?.is_none())
}

/// The Λ-points in the relative interior, for any intrinsic dimension:
/// equal to the interior for full-dimensional polytopes, the single point
/// itself for points, and computed in affine-hull coordinates otherwise.
///
/// # Errors
/// [`Error::DimensionMismatch`].
pub fn relint_lattice_points(p: &VPolytope, spec: &LatticeSpec) -> Result<Vec<LatticePoint>> {
    check_dims(p, spec)?;
    if p.is_full_dimensional() {
        return lattice_points(p, spec, Region::Interior);
    }
    if p.intrinsic_dim() == 0 {
        let v = &p.vertices()[0];
        if v.iter().all(|c| c.denom().is_one()) {
            let x: LatticePoint = v.iter().map(|c| c.numer().clone()).collect();
            if spec.contains(&x) {
                return Ok(vec![x]);
            }
        }
        return Ok(Vec::new());
    }
    let reduced = reduce_to_affine_hull(p);
    let h = v_to_h(&reduced.polytope)?;
    let mut out = Vec::new();
    scan_lattice_points(p, spec, |x| {
        if let Some(y) = reduced.frame.coords(&to_rational(x)) {
            if h.contains_strictly(&y) {
                out.push(x.clone());
            }
        }
        true
    });
    Ok(out)
}

struct ReducedPolytope {
    frame: crate::polyhedron::AffineFrame,
    polytope: VPolytope,
}

fn reduce_to_affine_hull(p: &VPolytope) -> ReducedPolytope {
    let frame = crate::polyhedron::AffineFrame::from_points(p.vertices());
    let verts: Vec<RationalPoint> = p
        .vertices()
        .iter()
        .map(|v| frame.coords(v).expect("vertex lies in its own affine hull"))
        .collect();
    let polytope = hull(&verts).expect("reduced vertex set is nonempty");
    ReducedPolytope { frame, polytope }
}

/// The Λ-points in the relative interior of each facet, aligned with
/// [`facets`](crate::polyhedron::facets) order. A boundary point belongs to a facet's relative
/// interior iff it is tight on exactly that facet's inequality — rows are
/// irredundant, so this matches the geometric relative interior.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn facet_relint_points(p: &VPolytope, spec: &LatticeSpec) -> Result<Vec<Vec<LatticePoint>>> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    let h = v_to_h(p)?;
    let mut out = vec![Vec::new(); h.rows().len()];
    scan_lattice_points(p, spec, |x| {
        let mut tight = None;
        for (i, row) in h.rows().iter().enumerate() {
            let lhs = Rat::from_integer(dot(&row.normal, x));
            if lhs > row.rhs {
                return true;
            }
            if lhs == row.rhs {
                match tight {
                    None => tight = Some(i),
                    // Tight on two facets: on a lower-dimensional face.
                    Some(_) => return true,
                }
            }
        }
        if let Some(i) = tight {
            out[i].push(x.clone());
        }
        true
    });
    Ok(out)
}

/// Maximality among lattice-free convex sets: lattice-free and every facet
/// has a Λ-point in its relative interior. The criterion is exact for
/// polytopes — necessity because a maximal body admits no slab of slack
/// around any facet, sufficiency because any convex proper enlargement
/// extends past some facet and then swallows that facet's witness into its
/// interior.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn is_maximal_latticefree_convex(
    p: &VPolytope,
    spec: &LatticeSpec,
) -> Result<ConvexMaximality> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    let free = is_latticefree(p, spec)?;
    let per_facet = facet_relint_points(p, spec)?;
    let facet_witnesses: Vec<Option<LatticePoint>> =
        per_facet.into_iter().map(|pts| pts.into_iter().next()).collect();
    let is_maximal = free && facet_witnesses.iter().all(Option::is_some);
    Ok(ConvexMaximality { is_latticefree: free, facet_witnesses, is_maximal })
}

/// Radius-bounded maximality among lattice-free integral polytopes: try
/// every integer point z in the bounding box inflated by `radius`; if some
/// `conv(P ∪ {z})` with `z ∉ P` is still lattice-free, P is not maximal.
/// Otherwise it is maximal within the radius — a bounded certificate, not
/// a proof, since no effective global bound is available.
///
/// The default radius is `⌈2·width(P)⌉ + s`.
///
/// This test is deliberately independent of the facet-witness criterion:
/// it builds each enlargement and re-checks lattice-freeness from scratch,
/// so the two maximality notions can be compared against each other.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`];
/// [`Error::InvalidInput`] when the polytope is not integral, not
/// lattice-free, or the radius is not positive.
pub fn is_maximal_integral_latticefree(
    p: &VPolytope,
    spec: &LatticeSpec,
    search_radius: Option<Int>,
) -> Result<IntegralMaximality> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    if !p.is_integral() {
        return Err(Error::InvalidInput("integral polytope required".into()));
    }
    if !is_latticefree(p, spec)? {
        return Err(Error::InvalidInput("lattice-free polytope required".into()));
    }
    let radius = match search_radius {
        Some(r) => r,
        None => {
            let w = lattice_width(p, spec)?.width;
            rat_ceil(&(w * Rat::from_integer(int(2)))) + &spec.scale
        }
    };
    if radius < Int::one() {
        return Err(Error::InvalidInput(format!("radius must be >= 1, got {radius}")));
    }
    let h = v_to_h(p)?;
    let mut lo = Vec::with_capacity(p.dim());
    let mut hi = Vec::with_capacity(p.dim());
    for i in 0..p.dim() {
        let min = p.vertices().iter().map(|v| v[i].clone()).min().expect("nonempty");
        let max = p.vertices().iter().map(|v| v[i].clone()).max().expect("nonempty");
        lo.push(rat_floor(&min) - &radius);
        hi.push(rat_ceil(&max) + &radius);
    }
    let mut verdict = IntegralMaximality::MaximalWithinRadius { radius };
    for_each_in_box(&lo, &hi, |z| {
        if h.contains(&to_rational(z)) {
            return true;
        }
        let mut points: Vec<RationalPoint> = p.vertices().to_vec();
        points.push(to_rational(z));
        let enlarged = hull(&points).expect("nonempty enlargement");
        if interior_lattice_point(&enlarged, spec).expect("full-dimensional enlargement").is_none()
        {
            verdict = IntegralMaximality::NotMaximal { witness: z.to_vec() };
            false
        } else {
            true
        }
    });
    Ok(verdict)
}

/// The lattice width `min over u ∈ Λ* \ {o} of (max u·x − min u·x over P)`
/// with an optimal dual vector.
///
/// The search is certified finite: the coordinate directions give a warm
/// start W0, and any candidate beating it must have bounded pairing with d
/// independent vertex-difference vectors, which confines it to an explicit
/// integer box (solved through the inverse edge matrix). Ties prefer the
/// coordinate directions in index order, then lexicographic box order.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn lattice_width(p: &VPolytope, spec: &LatticeSpec) -> Result<WidthResult> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    let d = p.dim();
    let lambda = p.precision();
    // Integer vertex matrix of λP; all spreads below are spreads over λP,
    // so the reported width divides by λ·s at the end.
    let verts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| v.iter().map(|c| (c * Rat::from_integer(lambda.clone())).to_integer()).collect())
        .collect();
    let spread_of = |z: &[Int]| -> Int {
        let mut min: Option<Int> = None;
        let mut max: Option<Int> = None;
        for v in &verts {
            let val = dot(z, v);
            if min.as_ref().is_none_or(|m| val < *m) {
                min = Some(val.clone());
            }
            if max.as_ref().is_none_or(|m| val > *m) {
                max = Some(val);
            }
        }
        max.expect("nonempty") - min.expect("nonempty")
    };
    let mut best_spread: Option<Int> = None;
    let mut best_witness: LatticePoint = Vec::new();
    for i in 0..d {
        let e: LatticePoint = (0..d).map(|j| if j == i { Int::one() } else { Int::zero() }).collect();
        let s = spread_of(&e);
        if best_spread.as_ref().is_none_or(|b| s < *b) {
            best_spread = Some(s);
            best_witness = e;
        }
    }
    let w0 = best_spread.clone().expect("at least one coordinate direction");
    // d independent edge vectors from the first vertex.
    let v0 = &verts[0];
    let mut edges: Vec<RationalPoint> = Vec::new();
    for v in &verts[1..] {
        let cand = to_rational(&crate::exact_arith::sub(v, v0));
        let mut trial = edges.clone();
        trial.push(cand.clone());
        if rat_rank(&trial) == trial.len() {
            edges.push(cand);
        }
        if edges.len() == d {
            break;
        }
    }
    debug_assert_eq!(edges.len(), d);
    let inv = rat_inverse(&edges).expect("independent edges");
    // z·edge_j is a vertex-pair difference of z over λP, hence bounded by
    // w0 in absolute value for any candidate that could match the warm
    // start; inverting pins each coordinate of z.
    let w0r = Rat::from_integer(w0.clone());
    let bounds: Vec<Int> = (0..d)
        .map(|i| {
            // z_i = Σ_j (edge-matrix⁻¹)_{ij} (z·edge_j), so row i of the
            // inverse bounds |z_i|.
            let sum: Rat = (0..d).map(|j| inv[i][j].abs()).sum();
            rat_floor(&(&w0r * sum))
        })
        .collect();
    let lo: Vec<Int> = bounds.iter().map(|b| -b.clone()).collect();
    let mut best = (w0, best_witness);
    if !width_scan_small(&verts, &lo, &bounds, &mut best) {
        for_each_in_box(&lo, &bounds, |z| {
            if z.iter().all(Zero::is_zero) {
                return true;
            }
            // z and −z have equal spread; keep the sign-normalized half.
            if z.iter().find(|c| !c.is_zero()).expect("nonzero").is_negative() {
                return true;
            }
            let s = spread_of(z);
            if s < best.0 {
                best = (s, z.to_vec());
            }
            true
        });
    }
    let denom = Rat::from_integer(&lambda * &spec.scale);
    Ok(WidthResult { width: Rat::from_integer(best.0) / denom, witness: best.1 })
}

/// Machine-integer mirror of the width box scan, used when every quantity
/// fits comfortably in i64 (spreads accumulate in i128, which cannot
/// overflow under the size guard). Returns false when the inputs are too
/// large, in which case the caller falls back to big integers. Both paths
/// compute the same exact result; this one keeps large scans (skewed
/// images under random unimodular maps) fast.
fn width_scan_small(
    verts: &[LatticePoint],
    lo: &[Int],
    hi: &[Int],
    best: &mut (Int, LatticePoint),
) -> bool {
    const LIMIT: i64 = 1 << 40;
    let small = |v: &Int| -> Option<i64> {
        v.to_i64().filter(|x| x.abs() < LIMIT)
    };
    let Some(verts64) = verts
        .iter()
        .map(|v| v.iter().map(&small).collect::<Option<Vec<i64>>>())
        .collect::<Option<Vec<Vec<i64>>>>()
    else {
        return false;
    };
    let (Some(lo64), Some(hi64)) = (
        lo.iter().map(&small).collect::<Option<Vec<i64>>>(),
        hi.iter().map(&small).collect::<Option<Vec<i64>>>(),
    ) else {
        return false;
    };
    let Some(mut best_spread) = best.0.to_i64() else {
        return false;
    };
    let d = lo.len();
    if lo64.iter().zip(&hi64).any(|(l, h)| l > h) {
        return true;
    }
    let mut z = lo64.clone();
    loop {
        if z.iter().any(|&c| c != 0)
            && z.iter().find(|&&c| c != 0).copied().unwrap_or(0) > 0
        {
            let mut min = i128::MAX;
            let mut max = i128::MIN;
            for v in &verts64 {
                let mut acc: i128 = 0;
                for i in 0..d {
                    acc += z[i] as i128 * v[i] as i128;
                }
                min = min.min(acc);
                max = max.max(acc);
            }
            let spread = max - min;
            if spread < best_spread as i128 {
                best_spread = spread as i64;
                *best = (Int::from(best_spread), z.iter().map(|&c| Int::from(c)).collect());
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if z[i] < hi64[i] {
                z[i] += 1;
                z[i + 1..].copy_from_slice(&lo64[i + 1..]);
                break;
            }
        }
    }
}

/// Exact Pick data of an integral polygon: area, interior and boundary
/// counts, and the identity `A = i + b/2 − 1`.
///
/// # Errors
/// [`Error::InvalidInput`] unless the input is an integral full-dimensional
/// polygon in the plane.
pub fn pick_check(p: &VPolytope) -> Result<PickCheck> {
    if p.dim() != 2 || !p.is_full_dimensional() {
        return Err(Error::InvalidInput("full-dimensional polygon required".into()));
    }
    if !p.is_integral() {
        return Err(Error::InvalidInput("integral polygon required".into()));
    }
    let spec = LatticeSpec::unit(2);
    let area = crate::polyhedron::volume(p)?;
    let interior = lattice_points(p, &spec, Region::Interior)?.len();
    let boundary = lattice_points(p, &spec, Region::Boundary)?.len();
    let rhs = Rat::from_integer(int(interior as i64)) + Rat::new(int(boundary as i64), int(2))
        - Rat::one();
    Ok(PickCheck { area: area.clone(), interior, boundary, holds: area == rhs })
}

/// Number of distinct residue classes mod 2 among the given integer
/// points. At most 2^d classes exist, which powers the facet-count bound
/// in dimension 3. Defined only for the unit lattice.
///
/// # Errors
/// [`Error::InvalidScale`] for s > 1; [`Error::DimensionMismatch`] for
/// ragged points.
pub fn parity_classes(points: &[LatticePoint], spec: &LatticeSpec) -> Result<usize> {
    if !spec.is_unit() {
        return Err(Error::InvalidScale(
            "parity classes are defined only for the unit lattice".into(),
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    for p in points {
        if p.len() != spec.dim() {
            return Err(Error::DimensionMismatch { expected: spec.dim(), got: p.len() });
        }
        let residue: Vec<u8> = p.iter().map(|c| (c.mod_floor(&int(2))).to_u8().unwrap()).collect();
        seen.insert(residue);
    }
    Ok(seen.len())
}

/// The full analysis record of a full-dimensional polytope: point lists,
/// per-facet relative-interior points, width, parity count (s = 1), and
/// both freeness flags.
///
/// # Errors
/// [`Error::DimensionMismatch`]; [`Error::NotFullDimensional`].
pub fn analyze(p: &VPolytope, spec: &LatticeSpec) -> Result<LatticeReport> {
    check_dims(p, spec)?;
    require_full_dim(p)?;
    let interior_points = lattice_points(p, spec, Region::Interior)?;
    let boundary_points = lattice_points(p, spec, Region::Boundary)?;
    let facet_relint = facet_relint_points(p, spec)?;
    let width = lattice_width(p, spec)?;
    let parity_class_count = if spec.is_unit() {
        let mut all = interior_points.clone();
        all.extend(boundary_points.iter().cloned());
        Some(parity_classes(&all, spec)?)
    } else {
        None
    };
    let is_latticefree = interior_points.is_empty();
    let is_maximal_convex = is_latticefree && facet_relint.iter().all(|pts| !pts.is_empty());
    Ok(LatticeReport {
        interior_points,
        boundary_points,
        facet_relint_points: facet_relint,
        width: width.width,
        width_witness: width.witness,
        parity_class_count,
        is_latticefree,
        is_maximal_convex,
    })
}

/// The number of facets whose relative interior meets Λ (convenience for
/// reporting).
pub fn facet_witness_count(report: &LatticeReport) -> usize {
    report.facet_relint_points.iter().filter(|pts| !pts.is_empty()).count()
}

// ---------------------------------------------------------------------------
// Closed-form interior-point systems for the six base families.
// ---------------------------------------------------------------------------

/// The six pyramid/prism families over fixed base polygons for which the
/// set `Z³ ∩ int(P)` has a closed-form inequality description in the apex
/// parameters. The pyramid families take `conv(base×{0} ∪ {a})`; the prism
/// families translate the base by `u = a − r`, where `r` is the base's
/// relative-interior integer point, so that `a` is the integer point in
/// the relative interior of the top facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PyramidFamily {
    /// Pyramid over the diamond `conv{±e1, ±e2}`.
    Diamond,
    /// Pyramid over the arrow quadrilateral `conv{(−1,−1),(1,0),(0,1),(1,1)}`.
    Arrow,
    /// Prism over the kite triangle `conv{(1,0),(0,1),(−1,−1)}`.
    KitePrism,
    /// Prism over the sail triangle `conv{(−1,0),(1,0),(0,2)}`.
    SailPrism,
    /// Pyramid (simplex) over the kite triangle.
    KiteSimplex,
    /// Pyramid (simplex) over the sail triangle.
    SailSimplex,
}

impl PyramidFamily {
    /// All six families, in a fixed order.
    pub fn all() -> [PyramidFamily; 6] {
        [
            PyramidFamily::Diamond,
            PyramidFamily::Arrow,
            PyramidFamily::KitePrism,
            PyramidFamily::SailPrism,
            PyramidFamily::KiteSimplex,
            PyramidFamily::SailSimplex,
        ]
    }

    /// Lowercase name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            PyramidFamily::Diamond => "diamond",
            PyramidFamily::Arrow => "arrow",
            PyramidFamily::KitePrism => "kite-prism",
            PyramidFamily::SailPrism => "sail-prism",
            PyramidFamily::KiteSimplex => "kite-simplex",
            PyramidFamily::SailSimplex => "sail-simplex",
        }
    }

    /// Whether the family builds a prism rather than a pyramid.
    pub fn is_prism(self) -> bool {
        matches!(self, PyramidFamily::KitePrism | PyramidFamily::SailPrism)
    }

    /// The fixed base polygon in the plane.
    pub fn standard_base(self) -> VPolytope {
        let verts: &[[i64; 2]] = match self {
            PyramidFamily::Diamond => &[[1, 0], [-1, 0], [0, 1], [0, -1]],
            PyramidFamily::Arrow => &[[-1, -1], [1, 0], [0, 1], [1, 1]],
            PyramidFamily::KitePrism | PyramidFamily::KiteSimplex => {
                &[[1, 0], [0, 1], [-1, -1]]
            }
            PyramidFamily::SailPrism | PyramidFamily::SailSimplex => &[[-1, 0], [1, 0], [0, 2]],
        };
        let pts: Vec<LatticePoint> =
            verts.iter().map(|v| vec![Int::from(v[0]), Int::from(v[1])]).collect();
        crate::polyhedron::hull_int(&pts).expect("valid base polygon")
    }

    /// The unique integer point in the relative interior of the base.
    pub fn base_relint_point(self) -> LatticePoint {
        match self {
            PyramidFamily::SailPrism | PyramidFamily::SailSimplex => vec![Int::zero(), Int::one()],
            _ => vec![Int::zero(), Int::zero()],
        }
    }
}

/// A pyramid or prism candidate: a family (fixing the base polygon) plus
/// an apex `a = (a1, a2, a3)` in the normalized range `0 ≤ a1, a2 < a3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidSpec {
    family: PyramidFamily,
    apex: LatticePoint,
}

impl PyramidSpec {
    /// Validate the apex and fix the base.
    ///
    /// # Errors
    /// [`Error::InvalidParameter`] when the apex is not a normalized
    /// integer 3-vector with `0 ≤ a1, a2 < a3` and `a3 ≥ 1`.
    pub fn new(family: PyramidFamily, apex: LatticePoint) -> Result<Self> {
        if apex.len() != 3 {
            return Err(Error::InvalidParameter(format!(
                "apex must have 3 coordinates, got {}",
                apex.len()
            )));
        }
        if apex[2] < Int::one() {
            return Err(Error::InvalidParameter(format!("apex height must be >= 1, got {}", apex[2])));
        }
        for i in 0..2 {
            if apex[i].is_negative() || apex[i] >= apex[2] {
                return Err(Error::InvalidParameter(format!(
                    "apex must satisfy 0 <= a{} < a3, got a{} = {}, a3 = {}",
                    i + 1,
                    i + 1,
                    apex[i],
                    apex[2]
                )));
            }
        }
        Ok(PyramidSpec { family, apex })
    }

    /// The family.
    pub fn family(&self) -> PyramidFamily {
        self.family
    }

    /// The apex.
    pub fn apex(&self) -> &LatticePoint {
        &self.apex
    }

    /// Build the 3-dimensional polytope: `conv(base×{0} ∪ {a})` for the
    /// pyramid families, `conv(base×{0} ∪ (base×{0} + u))` with
    /// `u = a − r` for the prism families.
    pub fn polytope(&self) -> VPolytope {
        let base = self.family.standard_base();
        let mut pts: Vec<LatticePoint> = base
            .vertices()
            .iter()
            .map(|v| vec![v[0].numer().clone(), v[1].numer().clone(), Int::zero()])
            .collect();
        if self.family.is_prism() {
            let r = self.family.base_relint_point();
            let u = [&self.apex[0] - &r[0], &self.apex[1] - &r[1], self.apex[2].clone()];
            let top: Vec<LatticePoint> = pts
                .iter()
                .map(|v| vec![&v[0] + &u[0], &v[1] + &u[1], &v[2] + &u[2]])
                .collect();
            pts.extend(top);
        } else {
            pts.push(self.apex.clone());
        }
        crate::polyhedron::hull_int(&pts).expect("valid family polytope")
    }

    /// Evaluate the family's closed-form characterization of
    /// `x ∈ Z³ ∩ int(P)` directly in the apex parameters — no polytope is
    /// built. The test surface compares this pointwise with interior
    /// enumeration.
    ///
    /// # Errors
    /// [`Error::DimensionMismatch`] for a candidate of wrong length.
    pub fn closed_form_interior(&self, x: &LatticePoint) -> Result<bool> {
        if x.len() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: x.len() });
        }
        let (a1, a2, a3) = (&self.apex[0], &self.apex[1], &self.apex[2]);
        let (x1, x2, x3) = (&x[0], &x[1], &x[2]);
        if *x3 < Int::one() || *x3 > a3 - Int::one() {
            return Ok(false);
        }
        let one = Int::one();
        let two = int(2);
        // Products of the apex height with the candidate coordinates, the
        // common building blocks of all six systems.
        let p1 = a3 * x1;
        let p2 = a3 * x2;
        let ok = match self.family {
            PyramidFamily::Diamond => {
                (&p1 - a1 * x3).abs() + (&p2 - a2 * x3).abs() < a3 - x3
            }
            PyramidFamily::Arrow => {
                &p1 + (&one - a1) * x3 < *a3
                    && &p2 + (&one - a2) * x3 < *a3
                    && &p1 - &two * &p2 + (&one - a1 + &two * a2) * x3 < *a3
                    && &p2 - &two * &p1 + (&one - a2 + &two * a1) * x3 < *a3
            }
            PyramidFamily::KitePrism => {
                &p1 - &two * &p2 + (&two * a2 - a1) * x3 < *a3
                    && &p2 - &two * &p1 + (&two * a1 - a2) * x3 < *a3
                    && &p1 + &p2 - (a1 + a2) * x3 < *a3
            }
            PyramidFamily::SailPrism => {
                &two * &p1 + &p2 - (&two * a1 + a2 - &one) * x3 < &two * a3
                    && &p2 - &two * &p1 + (&two * a1 - a2 + &one) * x3 < &two * a3
                    && (a2 - &one) * x3 < p2
            }
            PyramidFamily::KiteSimplex => {
                &p1 - &two * &p2 + (&one + &two * a2 - a1) * x3 < *a3
                    && &p2 - &two * &p1 + (&one + &two * a1 - a2) * x3 < *a3
                    && &p1 + &p2 + (&one - a1 - a2) * x3 < *a3
            }
            PyramidFamily::SailSimplex => {
                &two * &p1 + &p2 + (&two - &two * a1 - a2) * x3 < &two * a3
                    && &p2 - &two * &p1 + (&two + &two * a1 - a2) * x3 < &two * a3
                    && a2 * x3 < p2
            }
        };
        Ok(ok)
    }
}
