//! Arbitrary-precision integer and rational arithmetic: vectors, matrices,
//! Hermite normal form, and affine unimodular maps.
//!
//! Everything downstream of this module is exact. Integers are
//! arbitrary-precision ([`Int`]), rationals are always stored in lowest
//! terms with positive denominator ([`Rat`]), and equality is structural.
//! The constructions this crate verifies grow doubly exponentially (the
//! `y`-sequence satisfies `y_d ≥ (s+1)^(2^(d-2))`), so fixed-width integers
//! would overflow already at moderate `d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always in lowest terms, denominator > 0.
pub type Rat = BigRational;

/// Integer coordinate vector (a point of `Z^d` or a dual vector).
pub type LatticePoint = Vec<Int>;

/// Rational coordinate vector (a point of `Q^d`).
pub type RationalPoint = Vec<Rat>;

/// Shorthand for `Int::from(n)`.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for the rational `n/1`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// The rational `n/d` in lowest terms.
///
/// # Panics
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Integer vector from machine integers.
pub fn int_vec(v: &[i64]) -> LatticePoint {
    v.iter().map(|&x| int(x)).collect()
}

/// Rational vector from machine integers.
pub fn rat_vec(v: &[i64]) -> RationalPoint {
    v.iter().map(|&x| rat(x)).collect()
}

/// Integer vector promoted to a rational vector.
pub fn to_rational(v: &[Int]) -> RationalPoint {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Exact integer dot product.
pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Dot product of an integer (dual) vector with a rational point.
pub fn dot_rat(a: &[Int], x: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), x.len());
    let mut acc = Rat::zero();
    for (c, v) in a.iter().zip(x) {
        acc += Rat::from_integer(c.clone()) * v;
    }
    acc
}

/// Componentwise difference `a - b` of integer vectors.
pub fn sub(a: &[Int], b: &[Int]) -> LatticePoint {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Componentwise difference `a - b` of rational vectors.
pub fn sub_rat(a: &[Rat], b: &[Rat]) -> RationalPoint {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Componentwise sum `a + b` of rational vectors.
pub fn add_rat(a: &[Rat], b: &[Rat]) -> RationalPoint {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Non-negative gcd of all entries (0 for the zero vector).
pub fn gcd_all(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// The primitive vector parallel to `v`, divided by the gcd of the entries
/// and sign-normalized so that the first nonzero entry is positive. The sign
/// rule makes primitive vectors a canonical key for deduplication.
///
/// # Errors
/// Returns [`Error::ZeroVector`] if `v` is the zero vector.
pub fn primitive(v: &[Int]) -> Result<LatticePoint> {
    let mut w = primitive_directed(v)?;
    if let Some(first) = w.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut w {
                *x = -std::mem::take(x);
            }
        }
    }
    Ok(w)
}

/// `v` divided by the gcd of its entries, keeping the original direction.
/// Used for facet normals, whose sign carries the outward orientation.
///
/// # Errors
/// Returns [`Error::ZeroVector`] if `v` is the zero vector.
pub fn primitive_directed(v: &[Int]) -> Result<LatticePoint> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Least common multiple of the denominators of a rational vector.
pub fn denominator_lcm(v: &[Rat]) -> Int {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    l
}

/// Floor of a rational number as an integer.
pub fn rat_floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

/// Ceiling of a rational number as an integer.
pub fn rat_ceil(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Dense integer matrix (row-major).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Int>>,
}

impl IntMatrix {
    /// Matrix from explicit rows.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(data: Vec<Vec<Int>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    /// Matrix from machine-integer rows.
    pub fn from_i64(data: &[&[i64]]) -> Self {
        Self::from_rows(data.iter().map(|r| int_vec(r)).collect())
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
        IntMatrix { rows: n, cols: n, data }
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Row access.
    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i]
    }

    /// Entry access.
    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i][j]
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect();
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix product `self * other`.
    ///
    /// # Panics
    /// Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let data = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        let mut acc = Int::zero();
                        for k in 0..self.cols {
                            acc += &self.data[i][k] * &other.data[k][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        IntMatrix { rows: self.rows, cols: other.cols, data }
    }

    /// Matrix-vector product on an integer column vector.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[Int]) -> LatticePoint {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data.iter().map(|row| dot(row, v)).collect()
    }

    /// Matrix-vector product on a rational column vector.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul_vec_rat(&self, v: &[Rat]) -> RationalPoint {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data.iter().map(|row| dot_rat(row, v)).collect()
    }

    /// Exact determinant by the fraction-free Bareiss algorithm.
    ///
    /// # Errors
    /// Returns [`Error::NotSquare`] for non-square input.
    pub fn det(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m = self.data.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(Int::zero());
                };
                m.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(sign * std::mem::take(&mut m[n - 1][n - 1]))
    }

    /// Whether the matrix is square with determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if d.abs().is_one())
    }

    /// Inverse of a unimodular matrix, computed as `det * adjugate`
    /// (exact and integer because `det = ±1`).
    ///
    /// # Errors
    /// [`Error::NotSquare`] or [`Error::NotUnimodular`].
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let d = self.det()?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        let n = self.rows;
        let mut inv = vec![vec![Int::zero(); n]; n];
        // Adjugate transposes the cofactor matrix: inv[j][i] = cof(i, j) * d.
        for (j, inv_row) in inv.iter_mut().enumerate() {
            for (i, cell) in inv_row.iter_mut().enumerate() {
                let minor = self.minor(i, j).det()?;
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                *cell = &cof * &d;
            }
        }
        Ok(IntMatrix::from_rows(inv))
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let data = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_col)
                    .map(|j| self.data[i][j].clone())
                    .collect()
            })
            .collect();
        IntMatrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }
}

/// In-place row operation `rows[target][from..] -= f * rows[source][from..]`
/// for two distinct rows of the same matrix.
fn sub_scaled_row<T>(rows: &mut [Vec<T>], target: usize, source: usize, f: &T, from: usize)
where
    T: std::ops::SubAssign<T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    debug_assert_ne!(target, source);
    let (t_row, s_row) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (t, s) in t_row[from..].iter_mut().zip(&s_row[from..]) {
        *t -= f * s;
    }
}

/// Row-style Hermite normal form with transform.
///
/// Returns `(h, u)` with `u` unimodular and `u * a = h`, where `h` is the
/// canonical row echelon form: pivots positive, entries above each pivot
/// reduced into `[0, pivot)`, zero rows last. Two matrices have equal `h`
/// iff they differ by left multiplication with a unimodular matrix, so `h`
/// is a canonical representative of the left-unimodular orbit.
pub fn row_hermite(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.data.clone();
    let mut u = IntMatrix::identity(m).data;
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == m {
            break;
        }
        // Euclidean elimination below the pivot position.
        loop {
            let mut best: Option<usize> = None;
            for (i, row) in h.iter().enumerate().skip(pivot_row) {
                if !row[col].is_zero()
                    && best.is_none_or(|b| row[col].abs() < h[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(r) = best else { break };
            h.swap(pivot_row, r);
            u.swap(pivot_row, r);
            let mut done = true;
            for i in pivot_row + 1..m {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = h[i][col].div_floor(&h[pivot_row][col]);
                sub_scaled_row(&mut h, i, pivot_row, &q, 0);
                sub_scaled_row(&mut u, i, pivot_row, &q, 0);
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for x in &mut h[pivot_row] {
                *x = -std::mem::take(x);
            }
            for x in &mut u[pivot_row] {
                *x = -std::mem::take(x);
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = h[i][col].div_floor(&h[pivot_row][col]);
            if q.is_zero() {
                continue;
            }
            sub_scaled_row(&mut h, i, pivot_row, &q, 0);
            sub_scaled_row(&mut u, i, pivot_row, &q, 0);
        }
        pivot_row += 1;
    }
    (IntMatrix::from_rows(h), IntMatrix::from_rows(u))
}

/// Solve the square rational system `a * x = b` for a single right-hand
/// side by Gaussian elimination. Returns `None` if `a` is singular.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot);
        let p = m[k][k].clone();
        for x in &mut m[k][k..] {
            *x /= &p;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            sub_scaled_row(&mut m, i, k, &f, k);
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of a rational matrix (list of rows) by Gaussian elimination.
pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &p;
            sub_scaled_row(&mut m, i, rank, &f, col);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// One nonzero rational kernel vector of the row system, or `None` if the
/// kernel is trivial. Deterministic: the first free column (in order) is
/// set to 1.
pub fn rat_kernel_vector(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for x in &mut m[rank][col..] {
            *x /= &p;
        }
        for i in 0..m.len() {
            if i == rank || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            sub_scaled_row(&mut m, i, rank, &f, col);
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let free = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rat::zero(); ncols];
    v[free] = Rat::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    Some(v)
}

/// Exact determinant of a square rational matrix by Gaussian elimination.
///
/// # Panics
/// Panics if the matrix is ragged or non-square.
pub fn rat_det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "non-square matrix");
    let mut m = a.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rat::zero();
        };
        if pivot != k {
            m.swap(k, pivot);
            det = -det;
        }
        det *= &m[k][k];
        let p = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &p;
            sub_scaled_row(&mut m, i, k, &f, k);
        }
    }
    det
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination, or
/// `None` if singular.
pub fn rat_inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot);
        let p = m[k][k].clone();
        for x in &mut m[k][k..] {
            *x /= &p;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            sub_scaled_row(&mut m, i, k, &f, k);
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// An affine map `x ↦ Ux + v` with integer unimodular linear part, tracked
/// relative to the lattice `Λ = sZ^d`.
///
/// Unimodularity (`|det U| = 1`) is enforced at construction; whether the
/// translation lies in `Λ` is queried separately, because a map may be a
/// perfectly good affine unimodular map of `R^d` without preserving a
/// scaled lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineUnimodularMap {
    linear: IntMatrix,
    translation: LatticePoint,
    lattice_scale: Int,
}

impl AffineUnimodularMap {
    /// Build a map, validating unimodularity and the scale.
    ///
    /// # Errors
    /// [`Error::NotSquare`], [`Error::NotUnimodular`],
    /// [`Error::DimensionMismatch`] (translation length), or
    /// [`Error::InvalidScale`] for `s < 1`.
    pub fn new(linear: IntMatrix, translation: LatticePoint, lattice_scale: Int) -> Result<Self> {
        if linear.nrows() != linear.ncols() {
            return Err(Error::NotSquare { rows: linear.nrows(), cols: linear.ncols() });
        }
        if translation.len() != linear.nrows() {
            return Err(Error::DimensionMismatch {
                expected: linear.nrows(),
                got: translation.len(),
            });
        }
        let d = linear.det()?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        if lattice_scale < Int::one() {
            return Err(Error::InvalidScale(lattice_scale.to_string()));
        }
        Ok(AffineUnimodularMap { linear, translation, lattice_scale })
    }

    /// The identity map of `R^d` relative to `sZ^d`.
    pub fn identity(d: usize, lattice_scale: Int) -> Self {
        AffineUnimodularMap {
            linear: IntMatrix::identity(d),
            translation: vec![Int::zero(); d],
            lattice_scale,
        }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.linear.nrows()
    }

    /// The linear part `U`.
    pub fn linear(&self) -> &IntMatrix {
        &self.linear
    }

    /// The translation `v`.
    pub fn translation(&self) -> &[Int] {
        &self.translation
    }

    /// The lattice scale `s`.
    pub fn lattice_scale(&self) -> &Int {
        &self.lattice_scale
    }

    /// Apply to a rational point: `Ux + v`.
    ///
    /// # Errors
    /// [`Error::DimensionMismatch`].
    pub fn apply(&self, x: &[Rat]) -> Result<RationalPoint> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let mut y = self.linear.mul_vec_rat(x);
        for (yi, vi) in y.iter_mut().zip(&self.translation) {
            *yi += Rat::from_integer(vi.clone());
        }
        Ok(y)
    }

    /// Apply to an integer point.
    ///
    /// # Errors
    /// [`Error::DimensionMismatch`].
    pub fn apply_lattice(&self, x: &[Int]) -> Result<LatticePoint> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let mut y = self.linear.mul_vec(x);
        for (yi, vi) in y.iter_mut().zip(&self.translation) {
            *yi += vi;
        }
        Ok(y)
    }

    /// Whether the map preserves `Λ = sZ^d` for its stored scale: the
    /// linear part is unimodular by construction, so this is exactly the
    /// condition `translation ∈ sZ^d`.
    pub fn is_lattice_preserving(&self) -> bool {
        self.translation.iter().all(|t| t.is_multiple_of(&self.lattice_scale))
    }

    /// Composition `self ∘ inner` (apply `inner` first).
    ///
    /// # Errors
    /// [`Error::DimensionMismatch`] if dimensions or scales differ.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.dim() != inner.dim() || self.lattice_scale != inner.lattice_scale {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: inner.dim() });
        }
        let linear = self.linear.mul(&inner.linear);
        let mut translation = self.linear.mul_vec(&inner.translation);
        for (t, v) in translation.iter_mut().zip(&self.translation) {
            *t += v;
        }
        Ok(AffineUnimodularMap { linear, translation, lattice_scale: self.lattice_scale.clone() })
    }

    /// The inverse map `x ↦ U⁻¹x − U⁻¹v`.
    pub fn inverse(&self) -> Self {
        let inv = self.linear.inverse_unimodular().expect("constructed unimodular");
        let translation = inv.mul_vec(&self.translation).into_iter().map(|t| -t).collect();
        AffineUnimodularMap { linear: inv, translation, lattice_scale: self.lattice_scale.clone() }
    }
}

/// Whether `t` preserves `Λ = sZ^d`: `|det| = 1` (guaranteed by the type)
/// and every translation coordinate divisible by `s`.
pub fn is_lattice_preserving(t: &AffineUnimodularMap, s: &Int) -> bool {
    t.translation().iter().all(|c| c.is_multiple_of(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn det_identity_is_one() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), int(1));
    }

    #[test]
    fn det_hand_checked_3x3() {
        let m = IntMatrix::from_i64(&[&[-1, 1, 0], &[1, 1, 0], &[1, 1, 2]]);
        assert_eq!(m.det().unwrap(), int(-4));
    }

    #[test]
    fn det_diagonal() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(m.det().unwrap(), int(6));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn apply_identity_fixes_points() {
        let t = AffineUnimodularMap::identity(3, int(1));
        assert_eq!(t.apply(&rat_vec(&[1, 2, 3])).unwrap(), rat_vec(&[1, 2, 3]));
    }

    #[test]
    fn apply_shear_fixes_e1() {
        let u = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let t = AffineUnimodularMap::new(u, int_vec(&[0, 0]), int(1)).unwrap();
        assert_eq!(t.apply(&rat_vec(&[1, 0])).unwrap(), rat_vec(&[1, 0]));
    }

    #[test]
    fn apply_shear_with_translation() {
        let u = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let t = AffineUnimodularMap::new(u, int_vec(&[2, 0]), int(1)).unwrap();
        assert_eq!(t.apply(&rat_vec(&[0, 1])).unwrap(), rat_vec(&[3, 1]));
    }

    #[test]
    fn lattice_preservation_checks_translation_divisibility() {
        let id = AffineUnimodularMap::identity(2, int(2));
        assert!(is_lattice_preserving(&id, &int(2)));
        let t = AffineUnimodularMap::new(IntMatrix::identity(2), int_vec(&[1, 0]), int(2)).unwrap();
        assert!(!is_lattice_preserving(&t, &int(2)));
        assert!(!t.is_lattice_preserving());
        let t2 = AffineUnimodularMap::new(IntMatrix::identity(2), int_vec(&[2, 4]), int(2)).unwrap();
        assert!(t2.is_lattice_preserving());
    }

    #[test]
    fn non_unimodular_matrices_are_rejected() {
        let u = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        let err = AffineUnimodularMap::new(u, int_vec(&[0, 0]), int(1)).unwrap_err();
        assert!(matches!(err, Error::NotUnimodular(_)));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&int_vec(&[2, 4, 6])).unwrap(), int_vec(&[1, 2, 3]));
        assert_eq!(primitive(&int_vec(&[0, -3])).unwrap(), int_vec(&[0, 1]));
        assert_eq!(primitive(&int_vec(&[5, 7])).unwrap(), int_vec(&[5, 7]));
        assert_eq!(primitive(&int_vec(&[-2, 4])).unwrap(), int_vec(&[1, -2]));
        assert!(matches!(primitive(&int_vec(&[0, 0])), Err(Error::ZeroVector)));
    }

    #[test]
    fn unimodular_inverse_roundtrips() {
        let u = IntMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 3], &[0, 0, -1]]);
        let inv = u.inverse_unimodular().unwrap();
        assert_eq!(u.mul(&inv), IntMatrix::identity(3));
        assert_eq!(inv.mul(&u), IntMatrix::identity(3));
    }

    fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(d);
        for _ in 0..8 {
            let mut e = IntMatrix::identity(d);
            let i = rng.gen_range(0..d);
            let mut j = rng.gen_range(0..d);
            while j == i {
                j = rng.gen_range(0..d);
            }
            match rng.gen_range(0..3) {
                0 => {
                    let k: i64 = rng.gen_range(-3..=3);
                    e.data[i][j] = int(k);
                }
                1 => {
                    e.data.swap(i, j);
                }
                _ => {
                    e.data[i][i] = int(-1);
                }
            }
            m = m.mul(&e);
        }
        m
    }

    #[test]
    fn composition_agrees_with_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let d = rng.gen_range(2..=3);
            let t1 = AffineUnimodularMap::new(
                random_unimodular(&mut rng, d),
                (0..d).map(|_| int(rng.gen_range(-4..=4))).collect(),
                int(1),
            )
            .unwrap();
            let t2 = AffineUnimodularMap::new(
                random_unimodular(&mut rng, d),
                (0..d).map(|_| int(rng.gen_range(-4..=4))).collect(),
                int(1),
            )
            .unwrap();
            let p: RationalPoint = (0..d).map(|_| ratio(rng.gen_range(-9..=9), 2)).collect();
            let composed = t1.compose(&t2).unwrap().apply(&p).unwrap();
            let sequential = t1.apply(&t2.apply(&p).unwrap()).unwrap();
            assert_eq!(composed, sequential);
            let inv = t1.inverse();
            assert_eq!(inv.apply(&t1.apply(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let d = rng.gen_range(2..=3);
            let a = IntMatrix::from_rows(
                (0..d).map(|_| (0..d).map(|_| int(rng.gen_range(-4..=4))).collect()).collect(),
            );
            let b = IntMatrix::from_rows(
                (0..d).map(|_| (0..d).map(|_| int(rng.gen_range(-4..=4))).collect()).collect(),
            );
            assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }
    }

    #[test]
    fn rational_ring_laws_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let mut r = || ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
            let (a, b, c) = (r(), r(), r());
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!((&a + &b) + &c, &a + (&b + &c));
            assert_eq!((&a * &b) * &c, &a * (&b * &c));
            assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }
    }

    #[test]
    fn hermite_form_is_invariant_under_left_unimodular_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let d = rng.gen_range(2..=3);
            let a = loop {
                let cand = IntMatrix::from_rows(
                    (0..d).map(|_| (0..d).map(|_| int(rng.gen_range(-5..=5))).collect()).collect(),
                );
                if !cand.det().unwrap().is_zero() {
                    break cand;
                }
            };
            let v = random_unimodular(&mut rng, d);
            let (h1, u1) = row_hermite(&a);
            let (h2, u2) = row_hermite(&v.mul(&a));
            assert_eq!(h1, h2);
            assert_eq!(u1.mul(&a), h1);
            assert_eq!(u2.mul(&v).mul(&a), h2);
            assert!(u1.is_unimodular());
        }
    }

    #[test]
    fn hermite_form_of_rectangular_matrix_has_echelon_shape() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[-4, 10, 16]]);
        let (h, u) = row_hermite(&a);
        assert_eq!(u.mul(&a), h);
        assert!(u.is_unimodular());
        // Row 2 is the sum of rows 0 and 1, so the rank-2 row lattice
        // forces the last Hermite row to vanish.
        assert!(h.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_vector_is_in_the_kernel() {
        let rows = vec![rat_vec(&[1, 2, 3]), rat_vec(&[0, 1, 1])];
        let v = rat_kernel_vector(&rows).unwrap();
        for row in &rows {
            let acc: Rat = row.iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(acc.is_zero());
        }
        assert!(v.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn solve_rat_solves_square_systems() {
        let a = vec![rat_vec(&[2, 1]), rat_vec(&[1, -1])];
        let b = rat_vec(&[5, 1]);
        let x = solve_rat(&a, &b).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let singular = vec![rat_vec(&[1, 1]), rat_vec(&[2, 2])];
        assert!(solve_rat(&singular, &rat_vec(&[1, 2])).is_none());
    }
}
