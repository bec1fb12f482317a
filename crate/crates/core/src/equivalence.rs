//! Equivalence of integral polytopes modulo lattice-preserving affine maps
//! `x ↦ Ux + v` (integer `U`, `|det U| = 1`, `v ∈ sZ^d`), with explicit
//! witnesses and a canonical form for deduplication.
//!
//! # Witness search
//!
//! An affine bijection between polytopes maps vertex sets onto vertex
//! sets, so equivalence can be decided over vertex tuples: fix one
//! affinely independent `(d+1)`-tuple of the source, try every ordered
//! tuple of the target, solve for the unique affine map between them, and
//! accept when it is integer, unimodular, Λ-translating, and maps the
//! vertex set exactly onto the target's. With at most a dozen vertices in
//! dimension ≤ 4 this is a few thousand small solves.
//!
//! # Canonical form
//!
//! For each ordered affinely independent `(d+1)`-tuple `(w_0, …, w_d)` of
//! vertices, let `E` be the matrix with columns `w_i − w_0` and let
//! `U` be the unimodular matrix carrying `E` to its row-style Hermite
//! normal form `H = U·E`. Because `H` is the unique canonical
//! representative of the left-unimodular orbit of `E`, and `U = H·E⁻¹` is
//! determined by it, the normalized image `U·P − s·⌊U·w_0/s⌋` runs over
//! the *same set of polytopes* when `P` is replaced by any equivalent
//! copy (tuples correspond under the equivalence, `E` transforms by the
//! left factor, and the floor shift absorbs the Λ-translation). The
//! lexicographically least sorted vertex list over all tuples is therefore
//! equal for two polytopes **iff** they are equivalent.
//!
//! # Lower-dimensional polytopes
//!
//! A lower-dimensional integral polytope is reduced to full dimension in
//! the coordinates of a saturated basis of its direction lattice; the
//! reduction identifies `aff(P) ∩ Z^d` with `Z^k`, so two such polytopes
//! are ambiently equivalent iff their reductions are. Witnesses lift back
//! through the basis completion. This route exists for the unit lattice
//! only, which is all the catalogs need.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{
    int, rat_inverse, to_rational, AffineUnimodularMap, Int, IntMatrix, LatticePoint, Rat,
    RationalPoint,
};
use crate::lattice::{
    facet_relint_points, lattice_points, lattice_width, LatticeSpec, Region,
};
use crate::polyhedron::{hull, LatticeFrame, VPolytope};

/// Unimodular-invariant statistics used to reject inequivalent pairs
/// before any witness search. Equality is necessary for equivalence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Signature {
    /// Number of vertices.
    pub vertex_count: usize,
    /// Number of facets.
    pub facet_count: usize,
    /// Volume relative to the affine hull.
    pub volume: Rat,
    /// Number of interior Λ-points.
    pub interior_count: usize,
    /// Number of boundary Λ-points.
    pub boundary_count: usize,
    /// Per-facet relative-interior Λ-point counts, sorted ascending.
    pub facet_relint_counts: Vec<usize>,
    /// Lattice width.
    pub width: Rat,
}

/// A verified equivalence witness: applying `map` to the source vertex set
/// yields exactly the target vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    /// The lattice-preserving affine map, directed source → target.
    pub map: AffineUnimodularMap,
}

/// The canonical form of an integral polytope: a canonical vertex list
/// (equal iff equivalent) plus the invariant signature. Lower-dimensional
/// polytopes are canonicalized in reduced coordinates, so their canonical
/// vertices have `intrinsic_dim` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Ambient dimension of the input.
    pub dim: usize,
    /// Dimension of the affine hull.
    pub intrinsic_dim: usize,
    /// The canonical vertex list (reduced coordinates when lower-dimensional).
    pub canonical_vertices: Vec<LatticePoint>,
    /// The invariant signature (computed on the reduced form when
    /// lower-dimensional).
    pub invariant_signature: Signature,
}

fn require_integral(p: &VPolytope) -> Result<Vec<LatticePoint>> {
    p.integer_vertices()
        .ok_or_else(|| Error::InvalidInput("integral polytope required".into()))
}

fn check_scale(scale: &Int) -> Result<()> {
    if *scale < Int::one() {
        return Err(Error::InvalidScale(format!("scale must be >= 1, got {scale}")));
    }
    Ok(())
}

/// The unimodular-invariant signature of an integral polytope with respect
/// to `Λ = sZ^d`. Lower-dimensional polytopes are measured on their
/// reduction to the affine hull (unit lattice only).
///
/// # Errors
/// [`Error::InvalidInput`] for non-integral input; [`Error::Unsupported`]
/// for lower-dimensional input with `s > 1`.
pub fn invariant_signature(p: &VPolytope, scale: &Int) -> Result<Signature> {
    check_scale(scale)?;
    require_integral(p)?;
    let (work, spec);
    if p.is_full_dimensional() {
        work = p.clone();
        spec = LatticeSpec::new(p.dim(), scale.clone())?;
    } else {
        if !scale.is_one() {
            return Err(Error::Unsupported(
                "lower-dimensional polytopes are only handled for the unit lattice".into(),
            ));
        }
        match reduce(p)?.polytope {
            Some(r) => {
                spec = LatticeSpec::unit(r.dim());
                work = r;
            }
            None => {
                // A single point: one relative-interior Λ-point, no facets.
                return Ok(Signature {
                    vertex_count: 1,
                    facet_count: 0,
                    volume: Rat::one(),
                    interior_count: 1,
                    boundary_count: 0,
                    facet_relint_counts: Vec::new(),
                    width: Rat::zero(),
                });
            }
        }
    }
    let facet_points = facet_relint_points(&work, &spec)?;
    let mut facet_relint_counts: Vec<usize> = facet_points.iter().map(Vec::len).collect();
    facet_relint_counts.sort_unstable();
    Ok(Signature {
        vertex_count: work.n_vertices(),
        facet_count: facet_relint_counts.len(),
        volume: crate::polyhedron::volume(&work)?,
        interior_count: lattice_points(&work, &spec, Region::Interior)?.len(),
        boundary_count: lattice_points(&work, &spec, Region::Boundary)?.len(),
        facet_relint_counts,
        width: lattice_width(&work, &spec)?.width,
    })
}

/// Decide equivalence of two integral polytopes modulo Λ-preserving
/// affine maps, returning a verified witness directed `p → q`.
///
/// # Errors
/// [`Error::DimensionMismatch`] for different ambient dimensions;
/// [`Error::InvalidInput`] for non-integral input; [`Error::Unsupported`]
/// for lower-dimensional input with `s > 1`.
pub fn equivalent(
    p: &VPolytope,
    q: &VPolytope,
    scale: &Int,
) -> Result<Option<EquivalenceWitness>> {
    check_scale(scale)?;
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    let pv = require_integral(p)?;
    let qv = require_integral(q)?;
    if p.intrinsic_dim() != q.intrinsic_dim() {
        return Ok(None);
    }
    if p.is_full_dimensional() {
        return equivalent_full(p, q, &pv, &qv, scale);
    }
    if !scale.is_one() {
        return Err(Error::Unsupported(
            "lower-dimensional polytopes are only handled for the unit lattice".into(),
        ));
    }
    equivalent_lower(p, q)
}

fn verify_witness(map: &AffineUnimodularMap, pv: &[LatticePoint], qv: &[LatticePoint]) -> bool {
    let mut image: Vec<LatticePoint> = pv
        .iter()
        .map(|v| map.apply_lattice(v).expect("dimensions match"))
        .collect();
    image.sort();
    image == qv
}

fn equivalent_full(
    p: &VPolytope,
    q: &VPolytope,
    pv: &[LatticePoint],
    qv: &[LatticePoint],
    scale: &Int,
) -> Result<Option<EquivalenceWitness>> {
    let d = p.dim();
    // Identical vertex sets: the identity is a witness, and the preferred
    // one for reporting.
    if pv == qv {
        let map = AffineUnimodularMap::identity(d, scale.clone());
        return Ok(Some(EquivalenceWitness { map }));
    }
    if invariant_signature(p, scale)? != invariant_signature(q, scale)? {
        return Ok(None);
    }
    let base = affine_independent_tuple(pv, d).expect("full-dimensional");
    let w0 = &pv[base[0]];
    let ep: Vec<Vec<Rat>> = (0..d)
        .map(|r| (1..=d).map(|c| Rat::from_integer(&pv[base[c]][r] - &pv[base[0]][r])).collect())
        .collect();
    let ep_inv = rat_inverse(&ep).expect("affinely independent tuple");
    let mut witness = None;
    for_each_ordered_tuple(qv.len(), d + 1, |tuple| {
        if witness.is_some() {
            return;
        }
        let u0 = &qv[tuple[0]];
        // Candidate linear part M = E_q · E_p⁻¹, which is the unique
        // affine solution sending the fixed p-tuple to this q-tuple.
        let mut m_rows: Vec<Vec<Int>> = Vec::with_capacity(d);
        for r in 0..d {
            // Row r of E_q · E_p⁻¹, accumulated as Σ_k (E_q)_{rk} · row_k(E_p⁻¹).
            let mut acc_row = vec![Rat::zero(); d];
            for (k, inv_row) in ep_inv.iter().enumerate() {
                let eq_rk = Rat::from_integer(&qv[tuple[k + 1]][r] - &u0[r]);
                for (cell, x) in acc_row.iter_mut().zip(inv_row) {
                    *cell += &eq_rk * x;
                }
            }
            let mut row = Vec::with_capacity(d);
            for acc in acc_row {
                if !acc.denom().is_one() {
                    return;
                }
                row.push(acc.numer().clone());
            }
            m_rows.push(row);
        }
        let m = IntMatrix::from_rows(m_rows);
        if !m.is_unimodular() {
            return;
        }
        let mw0 = m.mul_vec(w0);
        let t: LatticePoint = u0.iter().zip(&mw0).map(|(a, b)| a - b).collect();
        if !t.iter().all(|c| num_integer::Integer::is_multiple_of(c, scale)) {
            return;
        }
        let map = AffineUnimodularMap::new(m, t, scale.clone()).expect("unimodular by check");
        if verify_witness(&map, pv, qv) {
            witness = Some(EquivalenceWitness { map });
        }
    });
    Ok(witness)
}

fn equivalent_lower(p: &VPolytope, q: &VPolytope) -> Result<Option<EquivalenceWitness>> {
    let d = p.dim();
    let one = int(1);
    let rp = reduce(p)?;
    let rq = reduce(q)?;
    let (Some(rp_poly), Some(rq_poly)) = (&rp.polytope, &rq.polytope) else {
        // Single points on both sides: any integer translation works.
        let m = IntMatrix::identity(d);
        let t: LatticePoint =
            (0..d).map(|i| rq.origin[i].clone() - &rp.origin[i]).collect();
        let map = AffineUnimodularMap::new(m, t, one)?;
        return Ok(Some(EquivalenceWitness { map }));
    };
    let Some(reduced_witness) = equivalent(rp_poly, rq_poly, &one)? else {
        return Ok(None);
    };
    let k = rp_poly.dim();
    // Lift: M = Rqᵀ · diag(W, I) · (Rpᵀ)⁻¹ acts as W on the saturated
    // basis directions and as the identity on the completions, hence is
    // integer and unimodular; the translation matches the reduced one on
    // the affine hull.
    let w = reduced_witness.map.linear();
    let mut d_rows: Vec<Vec<Int>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    for (i, row) in d_rows.iter_mut().enumerate().take(k) {
        row[..k].clone_from_slice(w.row(i));
    }
    let diag = IntMatrix::from_rows(d_rows);
    let rp_t = rp.full_basis.transpose();
    let rq_t = rq.full_basis.transpose();
    let m = rq_t.mul(&diag).mul(&rp_t.inverse_unimodular()?);
    let mut t_pad = vec![Int::zero(); d];
    t_pad[..k].clone_from_slice(reduced_witness.map.translation());
    let bq_t = rq_t.mul_vec(&t_pad);
    let mw0 = m.mul_vec(&rp.origin);
    let t: LatticePoint = (0..d).map(|i| &rq.origin[i] + &bq_t[i] - &mw0[i]).collect();
    let map = AffineUnimodularMap::new(m, t, one)?;
    let pv = p.integer_vertices().expect("checked integral");
    let qv = q.integer_vertices().expect("checked integral");
    if verify_witness(&map, &pv, &qv) {
        Ok(Some(EquivalenceWitness { map }))
    } else {
        Err(Error::InvalidInput(
            "internal witness lift failed verification; please report this input".into(),
        ))
    }
}

struct Reduction {
    /// The reduced full-dimensional polytope, or `None` for a point.
    polytope: Option<VPolytope>,
    origin: LatticePoint,
    /// Unimodular d×d matrix whose first k rows are the saturated basis of
    /// the direction lattice and whose remaining rows complete it to a
    /// basis of Z^d.
    full_basis: IntMatrix,
}

fn reduce(p: &VPolytope) -> Result<Reduction> {
    let frame = LatticeFrame::from_points(p.vertices())?;
    let k = frame.rank();
    let origin: LatticePoint = frame
        .origin()
        .iter()
        .map(|c| {
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect();
    let mut rows = frame.basis_int();
    rows.extend(frame.completion().iter().cloned());
    let full_basis = IntMatrix::from_rows(rows);
    let verts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| {
            let y = frame.coords(v).expect("vertex in affine hull");
            y.iter()
                .map(|c| {
                    debug_assert!(c.denom().is_one(), "saturated coordinates are integers");
                    c.numer().clone()
                })
                .collect()
        })
        .collect();
    let polytope =
        if k == 0 { None } else { Some(crate::polyhedron::hull_int(&verts)?) };
    Ok(Reduction { polytope, origin, full_basis })
}

/// The canonical vertex list alone — the cheap deduplication key used in
/// enumeration hot loops. Equal iff the polytopes are equivalent (for
/// lower-dimensional input the list is in reduced coordinates, and the
/// intrinsic dimension must be compared alongside).
///
/// # Errors
/// As [`canonical_form`].
pub fn canonical_vertices(p: &VPolytope, scale: &Int) -> Result<Vec<LatticePoint>> {
    check_scale(scale)?;
    let pv = require_integral(p)?;
    if p.is_full_dimensional() {
        return Ok(canonical_vertices_full(&pv, p.dim(), scale));
    }
    if !scale.is_one() {
        return Err(Error::Unsupported(
            "lower-dimensional polytopes are only handled for the unit lattice".into(),
        ));
    }
    let reduction = reduce(p)?;
    let Some(reduced) = reduction.polytope else {
        // Points all reduce to the empty coordinate list.
        return Ok(vec![Vec::new()]);
    };
    let rv = reduced.integer_vertices().expect("reduced form is integral");
    Ok(canonical_vertices_full(&rv, reduced.dim(), scale))
}

fn canonical_vertices_full(pv: &[LatticePoint], d: usize, scale: &Int) -> Vec<LatticePoint> {
    let n = pv.len();
    let mut best: Option<Vec<LatticePoint>> = None;
    for_each_ordered_tuple(n, d + 1, |tuple| {
        let w0 = &pv[tuple[0]];
        let e_rows: Vec<Vec<Int>> = (0..d)
            .map(|r| (1..=d).map(|c| &pv[tuple[c]][r] - &w0[r]).collect())
            .collect();
        let e = IntMatrix::from_rows(e_rows);
        let (h, u) = crate::exact_arith::row_hermite(&e);
        // Full-rank square Hermite forms are upper triangular with
        // positive diagonal; anything else means a degenerate tuple.
        if (0..d).any(|i| !h.get(i, i).is_positive()) {
            return;
        }
        let uw0 = u.mul_vec(w0);
        let t: LatticePoint =
            uw0.iter().map(|c| -(num_integer::Integer::div_floor(c, scale) * scale)).collect();
        let mut image: Vec<LatticePoint> = pv
            .iter()
            .map(|v| {
                let mut y = u.mul_vec(v);
                for (yi, ti) in y.iter_mut().zip(&t) {
                    *yi += ti;
                }
                y
            })
            .collect();
        image.sort();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    });
    best.expect("full-dimensional polytope has an affinely independent tuple")
}

/// The canonical form: canonical vertex list plus invariant signature.
/// Two integral polytopes have equal canonical forms iff they are
/// equivalent under Λ-preserving affine maps.
///
/// # Errors
/// [`Error::InvalidInput`] for non-integral input; [`Error::Unsupported`]
/// for lower-dimensional input with `s > 1`; [`Error::InvalidScale`].
pub fn canonical_form(p: &VPolytope, scale: &Int) -> Result<CanonicalForm> {
    let canonical_vertices = canonical_vertices(p, scale)?;
    Ok(CanonicalForm {
        dim: p.dim(),
        intrinsic_dim: p.intrinsic_dim(),
        canonical_vertices,
        invariant_signature: invariant_signature(p, scale)?,
    })
}

/// The polytope whose vertex list is the canonical one (for reporting a
/// canonical representative of a class).
///
/// # Errors
/// As [`canonical_form`].
pub fn canonical_representative(p: &VPolytope, scale: &Int) -> Result<VPolytope> {
    let verts = canonical_vertices(p, scale)?;
    if verts.len() == 1 && verts[0].is_empty() {
        // A point class; represent it by the origin of the ambient space.
        return hull(&[vec![Rat::zero(); p.dim()]]);
    }
    let rational: Vec<RationalPoint> = verts.iter().map(|v| to_rational(v)).collect();
    hull(&rational)
}

/// Visit all ordered `k`-tuples of distinct indices from `0..n` in
/// lexicographic order.
fn for_each_ordered_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut tuple: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn go(
        n: usize,
        k: usize,
        tuple: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if tuple.len() == k {
            f(tuple);
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                tuple.push(i);
                go(n, k, tuple, used, f);
                tuple.pop();
                used[i] = false;
            }
        }
    }
    go(n, k, &mut tuple, &mut used, &mut f);
}

/// A deterministic affinely independent `(k+1)`-tuple of indices: the
/// first vertex plus the greedily chosen rank-increasing successors.
fn affine_independent_tuple(pv: &[LatticePoint], k: usize) -> Option<Vec<usize>> {
    let mut tuple = vec![0usize];
    let mut edges: Vec<Vec<Rat>> = Vec::new();
    for (i, v) in pv.iter().enumerate().skip(1) {
        if edges.len() == k {
            break;
        }
        let cand: Vec<Rat> =
            v.iter().zip(&pv[0]).map(|(a, b)| Rat::from_integer(a - b)).collect();
        let mut trial = edges.clone();
        trial.push(cand.clone());
        if crate::exact_arith::rat_rank(&trial) == trial.len() {
            edges.push(cand);
            tuple.push(i);
        }
    }
    (edges.len() == k).then_some(tuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int_vec;
    use crate::polyhedron::hull_int;

    fn poly(coords: &[&[i64]]) -> VPolytope {
        let pts: Vec<LatticePoint> = coords.iter().map(|c| int_vec(c)).collect();
        hull_int(&pts).unwrap()
    }

    fn m3() -> VPolytope {
        poly(&[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])
    }

    #[test]
    fn translated_copy_yields_translation_witness() {
        let shifted = poly(&[&[1, 1, 1], &[4, 1, 1], &[1, 4, 1], &[1, 1, 4]]);
        let w = equivalent(&m3(), &shifted, &int(1)).unwrap().unwrap();
        assert_eq!(w.map.linear(), &IntMatrix::identity(3));
        assert_eq!(w.map.translation(), &int_vec(&[1, 1, 1])[..]);
    }

    #[test]
    fn different_volumes_are_inequivalent() {
        let m1 = poly(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 6]]);
        let m2 = poly(&[&[0, 0, 0], &[2, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        assert!(equivalent(&m1, &m2, &int(1)).unwrap().is_none());
    }

    #[test]
    fn shear_witness_is_found_and_verified() {
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        let sheared = poly(&[&[0, 0], &[2, 0], &[2, 2]]);
        let w = equivalent(&tri, &sheared, &int(1)).unwrap().unwrap();
        let image = tri.apply_unimodular(&w.map).unwrap();
        assert_eq!(image, sheared);
    }

    #[test]
    fn identity_witness_for_identical_polytopes() {
        let w = equivalent(&m3(), &m3(), &int(1)).unwrap().unwrap();
        assert_eq!(w.map.linear(), &IntMatrix::identity(3));
        assert!(w.map.translation().iter().all(Zero::is_zero));
    }

    #[test]
    fn scaled_lattice_restricts_translations() {
        // Asymmetric triangle: no automorphism can absorb a unit shift, so
        // over 3Z^2 only translations by multiples of 3 remain.
        let tri = poly(&[&[0, 0], &[3, 0], &[0, 1]]);
        let by_one = poly(&[&[1, 0], &[4, 0], &[1, 1]]);
        let by_three = poly(&[&[3, 0], &[6, 0], &[3, 1]]);
        let s = int(3);
        assert!(equivalent(&tri, &by_one, &s).unwrap().is_none());
        assert!(equivalent(&tri, &by_three, &s).unwrap().is_some());
        // The same shift is irrelevant over the unit lattice.
        assert!(equivalent(&tri, &by_one, &int(1)).unwrap().is_some());
    }

    #[test]
    fn symmetric_triangle_absorbs_a_shift_over_the_scaled_lattice() {
        // conv{o, 2e1, 2e2} + e1 maps back onto the original by the flip
        // (x, y) ↦ (-x - y + 3, y), whose translation part lies in 3Z^2.
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        let by_one = poly(&[&[1, 0], &[3, 0], &[1, 2]]);
        let w = equivalent(&tri, &by_one, &int(3)).unwrap().unwrap();
        assert_eq!(tri.apply_unimodular(&w.map).unwrap(), by_one);
    }

    #[test]
    fn square_symmetries_share_a_canonical_form() {
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let reference = canonical_vertices(&square, &int(1)).unwrap();
        let symmetries: [[[i64; 2]; 2]; 8] = [
            [[1, 0], [0, 1]],
            [[0, -1], [1, 0]],
            [[-1, 0], [0, -1]],
            [[0, 1], [-1, 0]],
            [[-1, 0], [0, 1]],
            [[1, 0], [0, -1]],
            [[0, 1], [1, 0]],
            [[0, -1], [-1, 0]],
        ];
        for sym in symmetries {
            let u = IntMatrix::from_i64(&[&sym[0], &sym[1]]);
            let map = AffineUnimodularMap::new(u, int_vec(&[5, -2]), int(1)).unwrap();
            let image = square.apply_unimodular(&map).unwrap();
            assert_eq!(canonical_vertices(&image, &int(1)).unwrap(), reference);
        }
    }

    #[test]
    fn point_reflection_preserves_canonical_form() {
        let m10 = poly(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[-1, -1, 0],
            &[2, 2, 3],
            &[1, 3, 3],
            &[0, 1, 3],
        ]);
        let neg = IntMatrix::from_i64(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        let map = AffineUnimodularMap::new(neg, int_vec(&[0, 0, 0]), int(1)).unwrap();
        let reflected = m10.apply_unimodular(&map).unwrap();
        assert_eq!(
            canonical_vertices(&m10, &int(1)).unwrap(),
            canonical_vertices(&reflected, &int(1)).unwrap()
        );
    }

    #[test]
    fn distinct_pyramids_have_distinct_canonical_forms() {
        let m8 = poly(&[&[2, 0, 0], &[-2, 0, 0], &[0, 2, 0], &[0, -2, 0], &[1, 1, 2]]);
        let m9 = poly(&[&[-1, 0, 0], &[0, -1, 0], &[2, 0, 0], &[0, 2, 0], &[1, 1, 3]]);
        assert_ne!(
            canonical_vertices(&m8, &int(1)).unwrap(),
            canonical_vertices(&m9, &int(1)).unwrap()
        );
        assert!(equivalent(&m8, &m9, &int(1)).unwrap().is_none());
    }

    #[test]
    fn canonical_form_matches_equivalence_on_a_scaled_lattice() {
        let tri = poly(&[&[0, 0], &[3, 0], &[0, 1]]);
        let by_one = poly(&[&[1, 0], &[4, 0], &[1, 1]]);
        let s = int(3);
        assert_ne!(
            canonical_vertices(&tri, &s).unwrap(),
            canonical_vertices(&by_one, &s).unwrap()
        );
        let by_three = poly(&[&[3, 0], &[6, 0], &[3, 1]]);
        assert_eq!(
            canonical_vertices(&tri, &s).unwrap(),
            canonical_vertices(&by_three, &s).unwrap()
        );
    }

    #[test]
    fn lower_dimensional_segments_are_compared_via_reduction() {
        let horizontal = poly(&[&[0, 0], &[2, 0]]);
        let diagonal = poly(&[&[1, 1], &[3, 5]]);
        let w = equivalent(&horizontal, &diagonal, &int(1)).unwrap().unwrap();
        let image = horizontal.apply_unimodular(&w.map).unwrap();
        assert_eq!(image, diagonal);
        assert_eq!(
            canonical_vertices(&horizontal, &int(1)).unwrap(),
            canonical_vertices(&diagonal, &int(1)).unwrap()
        );
        let long = poly(&[&[0, 0], &[3, 0]]);
        assert!(equivalent(&horizontal, &long, &int(1)).unwrap().is_none());
    }

    #[test]
    fn segment_and_triangle_are_inequivalent() {
        let seg = poly(&[&[0, 0], &[2, 0]]);
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(equivalent(&seg, &tri, &int(1)).unwrap().is_none());
    }

    #[test]
    fn signature_separates_by_boundary_count() {
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        let sig = invariant_signature(&tri, &int(1)).unwrap();
        assert_eq!(sig.vertex_count, 3);
        assert_eq!(sig.facet_count, 3);
        assert_eq!(sig.boundary_count, 6);
        assert_eq!(sig.interior_count, 0);
        assert_eq!(sig.facet_relint_counts, vec![1, 1, 1]);
    }
}
