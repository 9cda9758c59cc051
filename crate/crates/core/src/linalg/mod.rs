//! Exact dense linear algebra over [`Scalar`]: reduced echelon forms, canonical
//! subspaces, linear solving and the Wedderburn splitting of semisimple algebras.

mod wedderburn;

pub(crate) use wedderburn::sparse_mul;
pub use wedderburn::{center, primitive_idempotent_in_block, wedderburn, Algebra, AlgebraPresentation, WedderburnData};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense coordinate vector.
pub type Vector = Vec<Scalar>;

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_vector(dim: usize) -> Vector {
    vec![Scalar::zero(); dim]
}

pub fn unit_vector(dim: usize, i: usize) -> Vector {
    let mut v = zero_vector(dim);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    if c.is_zero() {
        return zero_vector(v.len());
    }
    v.iter().map(|x| c * x).collect()
}

/// y += c·x
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Σ coeffs[i]·vectors[i]
pub fn combine(dim: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zero_vector(cols);
            for (k, x) in row.iter().enumerate() {
                axpy(&mut out, x, &b[k]);
            }
            out
        })
        .collect()
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    // sorted by pivot; each row has a 1 at its pivot and zeros at every other pivot
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// v minus its projection onto the row space along the pivot coordinates.
    /// Zero exactly when v lies in the row space.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (p, row) in &self.rows {
            let c = r[*p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    /// Adds v; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                axpy(row, &-c, &r);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let (pivots, basis) = self.rows.into_iter().unzip();
        Subspace { ambient_dim: self.dim, basis, pivots }
    }
}

/// A subspace of k^n stored by its reduced row echelon basis; two subspaces are
/// equal iff their echelon matrices are identical.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: vec![], pivots: vec![] }
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<'a>(ambient_dim: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Subspace {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            if e.rank() == ambient_dim {
                break;
            }
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        Echelon { dim: self.ambient_dim, rows: self.pivots.iter().cloned().zip(self.basis.iter().cloned()).collect() }
    }

    /// Residue of v along the pivot coordinates; linear in v with kernel = self.
    pub fn residue(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (p, row) in self.pivots.iter().zip(&self.basis) {
            let c = r[*p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.residue(v))
    }

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = combine(self.ambient_dim, &coords, &self.basis);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn from_coordinates(&self, coords: &[Scalar]) -> Vector {
        combine(self.ambient_dim, coords, &self.basis)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    /// Intersection, as the kernel of the residue map of `other` restricted to `self`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let images: Vec<Vector> = self.basis.iter().map(|b| other.residue(b)).collect();
        let ker = kernel_of_columns(self.dim(), self.ambient_dim, &images);
        Ok(Subspace::span(
            self.ambient_dim,
            ker.basis().iter().map(|c| self.from_coordinates(c)).collect::<Vec<_>>().iter(),
        ))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    /// Image of the subspace under a linear map given on vectors.
    pub fn map(&self, target_dim: usize, f: impl Fn(&[Scalar]) -> Vector) -> Subspace {
        let images: Vec<Vector> = self.basis.iter().map(|b| f(b)).collect();
        Subspace::span(target_dim, images.iter())
    }
}

/// Canonical echelon basis of the span of `vectors`.
pub fn echelonize(ambient_dim: usize, vectors: &[Vector]) -> Subspace {
    Subspace::span(ambient_dim, vectors.iter())
}

/// Kernel of the map k^n → k^m whose j-th column (image of e_j) is `columns[j]`.
pub fn kernel_of_columns(n: usize, m: usize, columns: &[Vector]) -> Subspace {
    kernel_of_rows(n, (0..m).map(|r| columns.iter().map(|c| c[r].clone()).collect::<Vector>()))
}

/// Kernel of the linear system whose equations are the given rows over n unknowns.
pub fn kernel_of_rows(n: usize, rows: impl IntoIterator<Item = Vector>) -> Subspace {
    let mut e = Echelon::new(n);
    for row in rows {
        if e.rank() == n {
            break;
        }
        if !is_zero_vector(&row) {
            e.insert(&row);
        }
    }
    kernel_from_echelon(n, &e)
}

fn kernel_from_echelon(n: usize, e: &Echelon) -> Subspace {
    let pivots: Vec<usize> = e.rows.iter().map(|(p, _)| *p).collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(n);
        v[free] = Scalar::one();
        for (p, row) in &e.rows {
            if !row[free].is_zero() {
                v[*p] = -&row[free];
            }
        }
        basis.push(v);
    }
    Subspace::span(n, basis.iter())
}

/// A particular solution of `a·x = b` together with the kernel of `a`.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<(Vector, Subspace)> {
    let n = a.first().map_or(0, Vec::len);
    if a.len() != b.len() {
        return Err(Error::Inconsistent);
    }
    let mut e = Echelon::new(n + 1);
    for (row, rhs) in a.iter().zip(b) {
        let mut aug = row.clone();
        aug.push(rhs.clone());
        e.insert(&aug);
    }
    if e.rows.iter().any(|(p, _)| *p == n) {
        return Err(Error::Inconsistent);
    }
    let mut x = zero_vector(n);
    for (p, row) in &e.rows {
        x[*p] = row[n].clone();
    }
    let kernel = kernel_of_rows(n, a.iter().cloned());
    Ok((x, kernel))
}

/// Tracks linearly independent vectors and expresses new ones in terms of them.
pub struct DependencyTracker {
    dim: usize,
    count: usize,
    // (pivot, reduced row, combination of inserted vectors giving that row)
    rows: Vec<(usize, Vector, Vector)>,
}

impl DependencyTracker {
    pub fn new(dim: usize) -> DependencyTracker {
        DependencyTracker { dim, count: 0, rows: Vec::new() }
    }

    fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut r = v.to_vec();
        let mut combo = zero_vector(self.count);
        for (p, row, c) in &self.rows {
            let k = r[*p].clone();
            if !k.is_zero() {
                axpy(&mut r, &-&k, row);
                axpy(&mut combo, &k, c);
            }
        }
        (r, combo)
    }

    /// Coefficients c with v = Σ c_i v_i over the inserted vectors, if any.
    pub fn express(&self, v: &[Scalar]) -> Option<Vector> {
        let (r, combo) = self.reduce(v);
        is_zero_vector(&r).then_some(combo)
    }

    /// Inserts v; it must be independent of the vectors inserted so far.
    pub fn insert(&mut self, v: &[Scalar]) {
        assert_eq!(v.len(), self.dim);
        let (mut r, combo) = self.reduce(v);
        self.count += 1;
        for (_, _, c) in self.rows.iter_mut() {
            c.push(Scalar::zero());
        }
        // r = v - combo·previous, i.e. the combination (-combo, 1)
        let mut c: Vector = combo.iter().map(|x| -x).collect();
        c.push(Scalar::one());
        let p = r.iter().position(|x| !x.is_zero()).expect("inserted vector must be independent");
        let inv = r[p].inv().expect("nonzero pivot");
        r = scale(&inv, &r);
        c = scale(&inv, &c);
        for (_, row, rc) in self.rows.iter_mut() {
            let k = row[p].clone();
            if !k.is_zero() {
                axpy(row, &-&k, &r);
                axpy(rc, &-&k, &c);
            }
        }
        self.rows.push((p, r, c));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_integer(x)).collect()
    }

    #[test]
    fn echelonize_examples() {
        let s = echelonize(2, &[v(&[2, 0]), v(&[0, 3])]);
        assert_eq!(s.basis(), &[v(&[1, 0]), v(&[0, 1])]);
        let s = echelonize(2, &[v(&[1, 1]), v(&[2, 2])]);
        assert_eq!(s.basis(), &[v(&[1, 1])]);
        let s = echelonize(3, &[]);
        assert_eq!(s, Subspace::zero(3));
    }

    #[test]
    fn solve_examples() {
        let (x, k) = solve_linear(&identity_matrix(3), &v(&[4, 5, 6])).unwrap();
        assert_eq!(x, v(&[4, 5, 6]));
        assert_eq!(k.dim(), 0);

        let zero = vec![v(&[0, 0]), v(&[0, 0])];
        let (x, k) = solve_linear(&zero, &v(&[0, 0])).unwrap();
        assert_eq!(x, v(&[0, 0]));
        assert_eq!(k, Subspace::full(2));

        let (x, k) = solve_linear(&vec![v(&[1, 1])], &v(&[1])).unwrap();
        assert_eq!(x, v(&[1, 0]));
        assert_eq!(k, echelonize(2, &[v(&[1, -1])]));

        assert!(matches!(solve_linear(&zero, &v(&[1, 0])), Err(Error::Inconsistent)));
    }

    #[test]
    fn subspace_lattice_ops() {
        let u = echelonize(2, &[v(&[1, 0])]);
        let w = echelonize(2, &[v(&[0, 1])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.sum(&w).unwrap(), Subspace::full(2));
        assert_eq!(u.intersect(&w).unwrap().dim(), 0);
        assert!(Subspace::full(2).contains_subspace(&u).unwrap());
        assert!(matches!(u.sum(&Subspace::zero(3)), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn s3_subgroup_spans_intersect_in_identity() {
        // basis order e,(12),(13),(23),(123),(132)
        let a = echelonize(6, &[v(&[1, 0, 0, 0, 0, 0]), v(&[0, 1, 0, 0, 0, 0])]);
        let b = echelonize(6, &[v(&[1, 0, 0, 0, 0, 0]), v(&[0, 0, 1, 0, 0, 0])]);
        assert_eq!(a.intersect(&b).unwrap(), echelonize(6, &[v(&[1, 0, 0, 0, 0, 0])]));
    }

    #[test]
    fn coordinates_round_trip() {
        let s = echelonize(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = add(&scale(&Scalar::from_integer(2), &v(&[1, 2, 3])), &v(&[0, 1, 1]));
        let c = s.coordinates(&x).unwrap();
        assert_eq!(s.from_coordinates(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn dependency_tracker_finds_relation() {
        let mut t = DependencyTracker::new(2);
        t.insert(&v(&[1, 1]));
        t.insert(&v(&[1, -1]));
        let c = t.express(&v(&[3, 1])).unwrap();
        assert_eq!(c, v(&[2, 1]));
    }
}
