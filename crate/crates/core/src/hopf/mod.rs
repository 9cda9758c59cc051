//! Finite-dimensional Hopf algebras given by structure constants, together
//! with duality, hit and adjoint actions, integrals, characters, grouplikes
//! and the standard builders.

mod actions;
mod builders;
mod characters;
mod double;

pub use actions::{adjoint, adjoint_matrix, coadjoint, left_hit, right_hit};
pub use builders::{
    cyclic_group_table, dihedral4_table, direct_product_table, group_algebra, quaternion_table, symmetric3_table,
    CompositionConvention, GroupTable,
};
pub(crate) use characters::trace_character;
pub use characters::{bilinear_form_h, character_table, grouplikes, integrals, CharacterTable, IntegralPair};
pub use double::{drinfeld_double, f_r, QuasitriangularReport, QuasitriangularStructure};

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dot, unit_vector, zero_vector, Algebra, Subspace, Vector};
use crate::scalar::{CyclotomicOrder, Scalar};

/// Sparse list of (index, coefficient) pairs.
pub type Sparse = Vec<(usize, Scalar)>;
/// Sparse list of (left index, right index, coefficient) triples.
pub type Sparse2 = Vec<(usize, usize, Scalar)>;

pub(crate) type Tensor2 = BTreeMap<(usize, usize), Scalar>;
pub(crate) type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Scalar::zero);
    *entry += &value;
}

pub(crate) fn prune<K: Ord>(mut map: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    map.retain(|_, v| !v.is_zero());
    map
}

fn normalize1(mut entries: Sparse) -> Sparse {
    let mut map = BTreeMap::new();
    for (k, s) in entries.drain(..) {
        accumulate(&mut map, k, s);
    }
    prune(map).into_iter().collect()
}

fn normalize2(entries: Sparse2) -> Sparse2 {
    let mut map = BTreeMap::new();
    for (j, k, s) in entries {
        accumulate(&mut map, (j, k), s);
    }
    prune(map).into_iter().map(|((j, k), s)| (j, k, s)).collect()
}

#[derive(Clone, Default)]
struct Cache {
    dual: OnceLock<Arc<HopfData>>,
    integrals: OnceLock<Result<IntegralPair>>,
    characters: OnceLock<Result<CharacterTable>>,
    center: OnceLock<Subspace>,
}

/// A Hopf algebra on the basis e_0, …, e_{d−1}.
///
/// Multiplication is stored sparsely at index i·d + j, comultiplication and
/// antipode per basis element. Derived data (dual, integrals, character
/// table, center) is computed lazily and cached.
#[derive(Clone)]
pub struct HopfData {
    dim: usize,
    order: CyclotomicOrder,
    mult: Vec<Sparse>,
    comult: Vec<Sparse2>,
    unit: Vector,
    counit: Vector,
    antipode: Vec<Sparse>,
    labels: Option<Vec<String>>,
    r_matrix: Option<Vector>,
    cache: Cache,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.order == other.order
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.labels == other.labels
            && self.r_matrix == other.r_matrix
    }
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfData").field("dim", &self.dim).field("order", &self.order).finish_non_exhaustive()
    }
}

impl HopfData {
    /// Assembles structure constants; sparse entries are merged and sorted.
    pub fn new(
        order: CyclotomicOrder,
        mult: Vec<Sparse>,
        comult: Vec<Sparse2>,
        unit: Vector,
        counit: Vector,
        antipode: Vec<Sparse>,
    ) -> Result<HopfData> {
        let dim = unit.len();
        let shape_err = |what: &str| Error::Parse(format!("{what} has the wrong shape for dimension {dim}"));
        if dim == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        if mult.len() != dim * dim {
            return Err(shape_err("multiplication"));
        }
        if comult.len() != dim || antipode.len() != dim || counit.len() != dim {
            return Err(shape_err("coalgebra data"));
        }
        let in_range1 = |s: &Sparse| s.iter().all(|(k, _)| *k < dim);
        let in_range2 = |s: &Sparse2| s.iter().all(|(j, k, _)| *j < dim && *k < dim);
        if !mult.iter().all(in_range1) || !antipode.iter().all(in_range1) || !comult.iter().all(in_range2) {
            return Err(Error::Parse("basis index out of range".into()));
        }
        Ok(HopfData {
            dim,
            order,
            mult: mult.into_iter().map(normalize1).collect(),
            comult: comult.into_iter().map(normalize2).collect(),
            unit,
            counit,
            antipode: antipode.into_iter().map(normalize1).collect(),
            labels: None,
            r_matrix: None,
            cache: Cache::default(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<HopfData> {
        if labels.len() != self.dim {
            return Err(Error::Parse("label count differs from dimension".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Attaches an element of H⊗H (index j·d + k) as the R-matrix; not verified here.
    pub fn with_r_matrix(mut self, r: Vector) -> Result<HopfData> {
        if r.len() != self.dim * self.dim {
            return Err(Error::Parse("R-matrix has the wrong length".into()));
        }
        self.r_matrix = Some(r);
        Ok(self)
    }

    /// Same structure over the larger field Q(ζ_m); m must be a multiple of the current order.
    pub fn with_order(mut self, order: CyclotomicOrder) -> Result<HopfData> {
        if !self.order.divides(order) {
            return Err(Error::Parse(format!("cyclotomic order {order} is not a multiple of {}", self.order)));
        }
        self.order = order;
        self.cache = Cache::default();
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn mult_entries(&self) -> &[Sparse] {
        &self.mult
    }

    pub fn comult_entries(&self) -> &[Sparse2] {
        &self.comult
    }

    pub fn antipode_entries(&self) -> &[Sparse] {
        &self.antipode
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    /// Index of the basis element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn r_matrix(&self) -> Option<&[Scalar]> {
        self.r_matrix.as_deref()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        crate::linalg::sparse_mul(self.dim, &self.mult, a, b)
    }

    /// Δ(a) as a dense element of H⊗H with index j·d + k.
    pub fn comul(&self, a: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d * d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, s) in &self.comult[i] {
                out[j * d + k] += &(x * s);
            }
        }
        out
    }

    pub fn eps(&self, a: &[Scalar]) -> Scalar {
        dot(&self.counit, a)
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, s) in &self.antipode[i] {
                out[*k] += &(x * s);
            }
        }
        out
    }

    /// Product in H⊗H of dense tensors (index j·d + k).
    pub fn tensor_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d * d);
        let nz = |v: &[Scalar]| -> Vec<(usize, usize, Scalar)> {
            v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i / d, i % d, s.clone())).collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for (a, b, s) in &xs {
            for (c, e, t) in &ys {
                let st = s * t;
                for (p, u) in &self.mult[a * d + c] {
                    let stu = &st * u;
                    for (q, v) in &self.mult[b * d + e] {
                        out[p * d + q] += &(&stu * v);
                    }
                }
            }
        }
        out
    }

    /// x ⊗ y as a dense element of H⊗H.
    pub fn tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d * d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[i * d + j] = a * b;
                }
            }
        }
        out
    }

    /// Flip τ(x⊗y) = y⊗x on a dense tensor.
    pub fn flip(&self, t: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d * d);
        for j in 0..d {
            for k in 0..d {
                out[k * d + j] = t[j * d + k].clone();
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| self.mult[i * d + j] == self.mult[j * d + i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let mut flipped: Sparse2 = self.comult[i].iter().map(|(j, k, s)| (*k, *j, s.clone())).collect();
            flipped.sort_by_key(|(j, k, _)| (*j, *k));
            flipped == self.comult[i]
        })
    }

    /// The dual Hopf algebra on the dual basis e^0, …, e^{d−1}.
    pub fn dual(&self) -> HopfData {
        let d = self.dim;
        let mut mult = vec![Vec::new(); d * d];
        for (c, terms) in self.comult.iter().enumerate() {
            for (a, b, s) in terms {
                mult[a * d + b].push((c, s.clone()));
            }
        }
        let mut comult = vec![Vec::new(); d];
        for (ab, terms) in self.mult.iter().enumerate() {
            for (c, s) in terms {
                comult[*c].push((ab / d, ab % d, s.clone()));
            }
        }
        let mut antipode = vec![Vec::new(); d];
        for (i, terms) in self.antipode.iter().enumerate() {
            for (j, s) in terms {
                antipode[*j].push((i, s.clone()));
            }
        }
        let mut out = HopfData::new(self.order, mult, comult, self.counit.clone(), self.unit.clone(), antipode)
            .expect("dual of well-formed data is well formed");
        out.labels = self.labels.as_ref().map(|ls| ls.iter().map(|l| dual_label(l)).collect());
        out
    }

    /// Cached dual.
    pub fn dual_ref(&self) -> &HopfData {
        self.cache.dual.get_or_init(|| Arc::new(self.dual()))
    }

    pub fn integrals(&self) -> Result<&IntegralPair> {
        self.cache.integrals.get_or_init(|| characters::compute_integrals(self)).as_ref().map_err(Clone::clone)
    }

    pub fn characters(&self) -> Result<&CharacterTable> {
        self.cache.characters.get_or_init(|| characters::compute_character_table(self)).as_ref().map_err(Clone::clone)
    }

    pub fn center(&self) -> &Subspace {
        self.cache.center.get_or_init(|| crate::linalg::center(self))
    }

    /// ⟨p, a⟩ for p ∈ H* in the dual basis.
    pub fn pair(&self, p: &[Scalar], a: &[Scalar]) -> Scalar {
        dot(p, a)
    }

    /// Exact check of every Hopf algebra axiom, plus S² = id.
    pub fn verify(&self) -> HopfReport {
        verify_hopf(self)
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_prefix("p[").and_then(|r| r.strip_suffix(']')) {
        Some(inner) => inner.to_string(),
        None => format!("p[{l}]"),
    }
}

impl Algebra for HopfData {
    fn dim(&self) -> usize {
        self.dim
    }
    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        HopfData::mul(self, a, b)
    }
    fn one(&self) -> Vector {
        self.unit.clone()
    }
    fn order(&self) -> CyclotomicOrder {
        self.order
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Basis indices witnessing the first failure.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl std::fmt::Display for HopfReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "{:<34} {}", c.axiom, if c.passed { "pass" } else { "FAIL" })?,
                Some(idx) => writeln!(f, "{:<34} FAIL at {:?}", c.axiom, idx)?,
            }
        }
        Ok(())
    }
}

fn first_failure(indices: impl Iterator<Item = Vec<usize>>, mut ok: impl FnMut(&[usize]) -> bool) -> AxiomCheckResult {
    indices.into_iter().find(|idx| !ok(idx))
}

type AxiomCheckResult = Option<Vec<usize>>;

fn singles(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).map(|i| vec![i])
}

fn pairs(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).map(move |j| vec![i, j]))
}

fn triples(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| vec![i, j, k])))
}

fn comult_map(h: &HopfData, v: &Sparse) -> Tensor2 {
    let mut out = Tensor2::new();
    for (i, x) in v {
        for (j, k, s) in &h.comult[*i] {
            accumulate(&mut out, (*j, *k), x * s);
        }
    }
    prune(out)
}

fn verify_hopf(h: &HopfData) -> HopfReport {
    let d = h.dim;
    let mut checks = Vec::new();
    let mut push = |axiom: &'static str, failure: AxiomCheckResult| {
        checks.push(AxiomCheck { axiom, passed: failure.is_none(), counterexample: failure });
    };
    let sparse_of = |v: &[Scalar]| -> Sparse {
        v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect()
    };
    let basis_products: Vec<Vector> = (0..d * d).map(|ij| h.mul(&h.basis(ij / d), &h.basis(ij % d))).collect();

    push(
        "associativity",
        first_failure(triples(d), |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let left = h.mul(&basis_products[i * d + j], &h.basis(k));
            let right = h.mul(&h.basis(i), &basis_products[j * d + k]);
            left == right
        }),
    );
    push(
        "unit",
        first_failure(singles(d), |t| {
            let e = h.basis(t[0]);
            h.mul(&h.unit, &e) == e && h.mul(&e, &h.unit) == e
        }),
    );
    push(
        "coassociativity",
        first_failure(singles(d), |t| {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for (j, k, s) in &h.comult[t[0]] {
                for (a, b, u) in &h.comult[*j] {
                    accumulate(&mut left, (*a, *b, *k), s * u);
                }
                for (a, b, u) in &h.comult[*k] {
                    accumulate(&mut right, (*j, *a, *b), s * u);
                }
            }
            prune(left) == prune(right)
        }),
    );
    push(
        "counit",
        first_failure(singles(d), |t| {
            let mut left = zero_vector(d);
            let mut right = zero_vector(d);
            for (j, k, s) in &h.comult[t[0]] {
                left[*k] += &(s * &h.counit[*j]);
                right[*j] += &(s * &h.counit[*k]);
            }
            let e = h.basis(t[0]);
            left == e && right == e
        }),
    );
    push(
        "comultiplication_multiplicative",
        first_failure(pairs(d), |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = comult_map(h, &h.mult[i * d + j]);
            let mut rhs = Tensor2::new();
            for (a, b, s) in &h.comult[i] {
                for (c, e, u) in &h.comult[j] {
                    let su = s * u;
                    for (p, v) in &h.mult[a * d + c] {
                        let suv = &su * v;
                        for (q, w) in &h.mult[b * d + e] {
                            accumulate(&mut rhs, (*p, *q), &suv * w);
                        }
                    }
                }
            }
            lhs == prune(rhs)
        }),
    );
    push("comultiplication_unital", {
        let lhs = comult_map(h, &sparse_of(&h.unit));
        let mut rhs = Tensor2::new();
        for (i, a) in h.unit.iter().enumerate() {
            for (j, b) in h.unit.iter().enumerate() {
                accumulate(&mut rhs, (i, j), a * b);
            }
        }
        (lhs != prune(rhs)).then(Vec::new)
    });
    push(
        "counit_multiplicative",
        first_failure(pairs(d), |t| h.eps(&basis_products[t[0] * d + t[1]]) == &h.counit[t[0]] * &h.counit[t[1]]),
    );
    push("counit_unital", (!h.eps(&h.unit).is_one()).then(Vec::new));
    push(
        "antipode",
        first_failure(singles(d), |t| {
            let expected: Vector = h.unit.iter().map(|u| u * &h.counit[t[0]]).collect();
            let mut left = zero_vector(d);
            let mut right = zero_vector(d);
            for (j, k, s) in &h.comult[t[0]] {
                let sj = h.antipode(&h.basis(*j));
                let sk = h.antipode(&h.basis(*k));
                crate::linalg::axpy(&mut left, s, &h.mul(&sj, &h.basis(*k)));
                crate::linalg::axpy(&mut right, s, &h.mul(&h.basis(*j), &sk));
            }
            left == expected && right == expected
        }),
    );
    push(
        "antipode_involutive",
        first_failure(singles(d), |t| {
            let e = h.basis(t[0]);
            h.antipode(&h.antipode(&e)) == e
        }),
    );
    HopfReport { checks }
}

/// Elements of H⊗H whose tensor legs all lie in given subspaces can be
/// recognised by residues; this helper applies a linear map to each leg.
pub(crate) fn map_tensor_legs(
    d: usize,
    t: &[Scalar],
    left: impl Fn(&[Scalar]) -> Vector,
    right: impl Fn(&[Scalar]) -> Vector,
) -> Vector {
    let mut out = zero_vector(d * d);
    for j in 0..d {
        for k in 0..d {
            let c = &t[j * d + k];
            if c.is_zero() {
                continue;
            }
            let l = left(&unit_vector(d, j));
            let r = right(&unit_vector(d, k));
            for (a, x) in l.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let cx = c * x;
                for (b, y) in r.iter().enumerate() {
                    if !y.is_zero() {
                        out[a * d + b] += &(&cx * y);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
