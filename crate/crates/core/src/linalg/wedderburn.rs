//! Wedderburn splitting of a semisimple algebra given by structure constants.

use super::{is_zero_vector, kernel_of_columns, scale, sub, unit_vector, zero_vector, Subspace, Vector};
use crate::error::{Error, Result};
use crate::scalar::{factor_into_linears, minimal_polynomial_by_powers, CyclotomicOrder, Polynomial, Root, Scalar};

/// A finite-dimensional unital associative algebra with a fixed basis.
pub trait Algebra {
    fn dim(&self) -> usize;
    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector;
    fn one(&self) -> Vector;
    /// Field over which eigenvalues are sought.
    fn order(&self) -> CyclotomicOrder;

    fn basis_element(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }
}

/// Structure constants e_i·e_j = Σ_k m[i][j][k] e_k, stored sparsely at i·dim + j.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub dim: usize,
    pub order: CyclotomicOrder,
    pub mult: Vec<Vec<(usize, Scalar)>>,
    pub unit: Vector,
}

impl AlgebraPresentation {
    /// Presentation of a subalgebra spanned by `sub` inside `a`, in the
    /// coordinates of the echelon basis of `sub`.
    pub fn of_subalgebra(a: &impl Algebra, sub: &Subspace) -> Result<AlgebraPresentation> {
        let basis = sub.basis();
        let n = basis.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in basis {
            for y in basis {
                let c = sub
                    .coordinates(&a.mul(x, y))
                    .ok_or_else(|| Error::NotAnAlgebra("not closed under multiplication".into()))?;
                mult.push(c.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect());
            }
        }
        let unit = sub.coordinates(&a.one()).ok_or_else(|| Error::NotAnAlgebra("does not contain the unit".into()))?;
        Ok(AlgebraPresentation { dim: n, order: a.order(), mult, unit })
    }

    /// Exact check of associativity and the two unit laws.
    pub fn check_axioms(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            let ei = unit_vector(n, i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return false;
            }
            for j in 0..n {
                let ej = unit_vector(n, j);
                let eij = self.mul(&ei, &ej);
                for k in 0..n {
                    let ek = unit_vector(n, k);
                    if self.mul(&eij, &ek) != self.mul(&ei, &self.mul(&ej, &ek)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn sparse_mul(dim: usize, mult: &[Vec<(usize, Scalar)>], a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = zero_vector(dim);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            for (k, c) in &mult[i * dim + j] {
                out[*k] += &(&xy * c);
            }
        }
    }
    out
}

impl Algebra for AlgebraPresentation {
    fn dim(&self) -> usize {
        self.dim
    }
    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        sparse_mul(self.dim, &self.mult, a, b)
    }
    fn one(&self) -> Vector {
        self.unit.clone()
    }
    fn order(&self) -> CyclotomicOrder {
        self.order
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnData {
    pub central_idempotents: Vec<Vector>,
    pub degrees: Vec<usize>,
    pub block_primitive_idempotents: Vec<Vector>,
}

impl WedderburnData {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Moves block `i` to the front, keeping the order of the others.
    pub fn move_to_front(&mut self, i: usize) {
        let e = self.central_idempotents.remove(i);
        self.central_idempotents.insert(0, e);
        let d = self.degrees.remove(i);
        self.degrees.insert(0, d);
        let t = self.block_primitive_idempotents.remove(i);
        self.block_primitive_idempotents.insert(0, t);
    }
}

/// Center of the algebra, by the linear conditions z·e_j = e_j·z.
pub fn center(a: &impl Algebra) -> Subspace {
    let n = a.dim();
    let basis: Vec<Vector> = (0..n).map(|i| a.basis_element(i)).collect();
    let columns: Vec<Vector> =
        basis.iter().map(|ei| basis.iter().flat_map(|ej| sub(&a.mul(ei, ej), &a.mul(ej, ei))).collect()).collect();
    kernel_of_columns(n, n * n, &columns)
}

fn left_ideal(a: &impl Algebra, e: &[Scalar]) -> Subspace {
    let n = a.dim();
    let products: Vec<Vector> = (0..n).map(|i| a.mul(&a.basis_element(i), e)).collect();
    Subspace::span(n, products.iter())
}

/// Minimal polynomial of `x` inside the corner algebra with unit `e`.
fn corner_minimal_polynomial(a: &impl Algebra, e: &[Scalar], x: &[Scalar]) -> Polynomial {
    minimal_polynomial_by_powers(e.to_vec(), |v| a.mul(v, x), a.dim())
}

/// Idempotents f_r = e·Π_{r'≠r}(x − r'e)/(r − r'), one per root.
fn spectral_idempotents(a: &impl Algebra, e: &[Scalar], x: &[Scalar], roots: &[Root]) -> Vec<Vector> {
    roots
        .iter()
        .map(|r| {
            let mut f = e.to_vec();
            for other in roots.iter().filter(|o| o.value != r.value) {
                let shifted = sub(x, &scale(&other.value, e));
                let denom = (&r.value - &other.value).inv().expect("distinct roots");
                f = scale(&denom, &a.mul(&f, &shifted));
            }
            f
        })
        .collect()
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Central primitive idempotents, block degrees and one primitive idempotent per block.
pub fn wedderburn(a: &impl Algebra) -> Result<WedderburnData> {
    let z = center(a);
    let mut blocks: Vec<(Vector, Subspace)> = vec![(a.one(), z.clone())];
    for zb in z.basis() {
        let mut next = Vec::with_capacity(blocks.len());
        for (e, ze) in blocks {
            if ze.dim() == 1 {
                next.push((e, ze));
                continue;
            }
            let x = a.mul(zb, &e);
            let p = corner_minimal_polynomial(a, &e, &x);
            let roots = factor_into_linears(&p, a.order())?;
            if roots.iter().any(|r| r.multiplicity > 1) {
                return Err(Error::NotSemisimple("central element is not diagonalizable".into()));
            }
            if roots.len() == 1 {
                next.push((e, ze));
                continue;
            }
            for f in spectral_idempotents(a, &e, &x, &roots) {
                let zf = ze.map(a.dim(), |v| a.mul(v, &f));
                next.push((f, zf));
            }
        }
        blocks = next;
    }
    if blocks.iter().any(|(_, ze)| ze.dim() != 1) {
        return Err(Error::NotSemisimple("center does not split into one-dimensional blocks".into()));
    }
    let mut data = WedderburnData { central_idempotents: vec![], degrees: vec![], block_primitive_idempotents: vec![] };
    for (e, _) in blocks {
        let block_dim = left_ideal(a, &e).dim();
        let d = isqrt(block_dim)
            .ok_or_else(|| Error::NotSemisimple(format!("block dimension {block_dim} is not a square")))?;
        let t = primitive_idempotent_with_degree(a, &e, d)?;
        data.central_idempotents.push(e);
        data.degrees.push(d);
        data.block_primitive_idempotents.push(t);
    }
    Ok(data)
}

/// A primitive idempotent t with t·T = t inside the block of the central primitive idempotent T.
pub fn primitive_idempotent_in_block(a: &impl Algebra, central: &[Scalar]) -> Result<Vector> {
    let block_dim = left_ideal(a, central).dim();
    let d =
        isqrt(block_dim).ok_or_else(|| Error::NotSemisimple(format!("block dimension {block_dim} is not a square")))?;
    primitive_idempotent_with_degree(a, central, d)
}

/// Deterministic probe sequence: e_i, then e_i + c·e_j for c = 1, 2, …
fn probe(n: usize, index: usize) -> Option<Vector> {
    if index < n {
        return Some(unit_vector(n, index));
    }
    let pairs = n * (n - 1) / 2;
    if pairs == 0 {
        return None;
    }
    let k = index - n;
    let c = (k / pairs + 1) as i64;
    if c > 4 {
        return None;
    }
    let mut r = k % pairs;
    for i in 0..n {
        let row = n - 1 - i;
        if r < row {
            let j = i + 1 + r;
            let mut v = unit_vector(n, i);
            v[j] = Scalar::from_integer(c);
            return Some(v);
        }
        r -= row;
    }
    None
}

fn primitive_idempotent_with_degree(a: &impl Algebra, central: &[Scalar], d: usize) -> Result<Vector> {
    let mut f = central.to_vec();
    if d == 1 {
        return Ok(f);
    }
    let mut current = left_ideal(a, &f).dim();
    let mut last_err = None;
    let mut index = 0;
    while current > d {
        let Some(y) = probe(a.dim(), index) else {
            return Err(last_err.unwrap_or_else(|| Error::NotSemisimple("no splitting element found in block".into())));
        };
        index += 1;
        let x = a.mul(&a.mul(&f, &y), &f);
        if is_zero_vector(&x) {
            continue;
        }
        let p = corner_minimal_polynomial(a, &f, &x);
        if p.degree() <= 1 {
            continue;
        }
        let roots = match factor_into_linears(&p, a.order()) {
            Ok(r) => r,
            Err(e @ Error::NotSplit { .. }) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        if roots.iter().any(|r| r.multiplicity > 1) {
            continue;
        }
        let mut best: Option<(usize, Vector)> = None;
        for g in spectral_idempotents(a, &f, &x, &roots) {
            let dim = left_ideal(a, &g).dim();
            if dim > 0 && best.as_ref().is_none_or(|(b, _)| dim < *b) {
                best = Some((dim, g));
            }
        }
        let (dim, g) = best.expect("at least two roots");
        f = g;
        current = dim;
        index = 0;
    }
    if current != d {
        return Err(Error::NotSemisimple("block idempotent has wrong rank".into()));
    }
    debug_assert_eq!(a.mul(&f, central), f);
    Ok(f)
}
