//! The Drinfeld double D(H) with its canonical R-matrix, and the maps f_R, f_{R^t}.
//!
//! D(H) has basis e^a ⋈ e_i at index a·d + i and structure
//!
//! * (p⋈a)(q⋈b) = Σ p·(a_1 ⇀ q ↼ S⁻¹(a_3)) ⋈ a_2 b, where (a ⇀ q ↼ c)(x) = q(c x a),
//! * Δ(p⋈a) = Σ (p_2⋈a_1) ⊗ (p_1⋈a_2),
//! * ε(p⋈a) = p(1)ε(a),
//! * S(p⋈a) = (ε⋈S(a))(s(p)⋈1),
//!
//! with R = Σ_i (ε⋈e_i) ⊗ (e^i⋈1). Since H is semisimple, S⁻¹ = S.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{accumulate, prune, HopfData, Sparse, Sparse2, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::Scalar;

/// An R-matrix as a dense element of H⊗H (index j·d + k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasitriangularStructure {
    pub r: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasitriangularReport {
    pub invertible: bool,
    pub coproduct_first_leg: bool,
    pub coproduct_second_leg: bool,
    pub quasi_cocommutative: bool,
}

impl QuasitriangularReport {
    pub fn all_passed(&self) -> bool {
        self.invertible && self.coproduct_first_leg && self.coproduct_second_leg && self.quasi_cocommutative
    }
}

fn sparse_tensor(v: &[Scalar], d: usize) -> Tensor2 {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| ((i / d, i % d), s.clone())).collect()
}

fn leg_product(h: &HopfData, a: usize, b: usize) -> &Sparse {
    &h.mult_entries()[a * h.dim() + b]
}

fn triple_mul(h: &HopfData, x: &Tensor3, y: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a1, a2, a3), s) in x {
        for ((b1, b2, b3), t) in y {
            let st = s * t;
            for (p, u) in leg_product(h, *a1, *b1) {
                let stu = &st * u;
                for (q, v) in leg_product(h, *a2, *b2) {
                    let stuv = &stu * v;
                    for (r, w) in leg_product(h, *a3, *b3) {
                        accumulate(&mut out, (*p, *q, *r), &stuv * w);
                    }
                }
            }
        }
    }
    prune(out)
}

impl QuasitriangularStructure {
    /// Checks invertibility (with inverse (S⊗id)R), the two coproduct
    /// identities and Δ^cop(h)R = RΔ(h) on a basis.
    pub fn verify(&self, h: &HopfData) -> QuasitriangularReport {
        let d = h.dim();
        let r = &self.r;
        let r_inv = super::map_tensor_legs(d, r, |x| h.antipode(x), |x| x.to_vec());
        let one = h.tensor(h.unit(), h.unit());
        let invertible = h.tensor_mul(r, &r_inv) == one && h.tensor_mul(&r_inv, r) == one;

        let rt = sparse_tensor(r, d);
        let unit: Vec<(usize, Scalar)> =
            h.unit().iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect();
        let embed = |slots: [usize; 2]| -> Tensor3 {
            let mut out = Tensor3::new();
            for ((j, k), s) in &rt {
                for (u, c) in &unit {
                    let mut key = [*u; 3];
                    key[slots[0]] = *j;
                    key[slots[1]] = *k;
                    accumulate(&mut out, (key[0], key[1], key[2]), s * c);
                }
            }
            prune(out)
        };
        let (r12, r13, r23) = (embed([0, 1]), embed([0, 2]), embed([1, 2]));

        let mut delta_left = Tensor3::new();
        let mut delta_right = Tensor3::new();
        for ((j, k), s) in &rt {
            for (a, b, t) in &h.comult_entries()[*j] {
                accumulate(&mut delta_left, (*a, *b, *k), s * t);
            }
            for (a, b, t) in &h.comult_entries()[*k] {
                accumulate(&mut delta_right, (*j, *a, *b), s * t);
            }
        }
        let coproduct_first_leg = prune(delta_left) == triple_mul(h, &r13, &r23);
        let coproduct_second_leg = prune(delta_right) == triple_mul(h, &r13, &r12);

        let quasi_cocommutative = (0..d).all(|i| {
            let delta = h.comul(&h.basis(i));
            h.tensor_mul(&h.flip(&delta), r) == h.tensor_mul(r, &delta)
        });
        QuasitriangularReport { invertible, coproduct_first_leg, coproduct_second_leg, quasi_cocommutative }
    }
}

/// f_R(p) = Σ⟨p, R¹⟩R², or f_{R^t}(p) = Σ⟨p, R²⟩R¹ when `transposed`.
pub fn f_r(h: &HopfData, p: &[Scalar], transposed: bool) -> Result<Vector> {
    let r = h.r_matrix().ok_or(Error::NoRMatrix)?;
    let d = h.dim();
    let mut out = zero_vector(d);
    for j in 0..d {
        for k in 0..d {
            let c = &r[j * d + k];
            if c.is_zero() {
                continue;
            }
            let (read, write) = if transposed { (k, j) } else { (j, k) };
            if !p[read].is_zero() {
                out[write] += &(c * &p[read]);
            }
        }
    }
    Ok(out)
}

/// D(H) with its canonical R-matrix attached.
pub fn drinfeld_double(h: &HopfData) -> Result<(HopfData, QuasitriangularStructure)> {
    let d = h.dim();
    for i in 0..d {
        let e = h.basis(i);
        if h.antipode(&h.antipode(&e)) != e {
            return Err(Error::AxiomFailure("the double needs S² = id".into()));
        }
    }
    let dual = h.dual_ref();
    let n = d * d;

    // Δ²(e_i) as (x, y, z) triples
    let delta2: Vec<Tensor3> = (0..d)
        .map(|i| {
            let mut t = Tensor3::new();
            for (j, k, s) in &h.comult_entries()[i] {
                for (a, b, u) in &h.comult_entries()[*j] {
                    accumulate(&mut t, (*a, *b, *k), s * u);
                }
            }
            prune(t)
        })
        .collect();
    let antipode: Vec<Vector> = (0..d).map(|z| h.antipode(&h.basis(z))).collect();

    // (e_x ⇀ e^b ↼ S(e_z))(e_w) = e^b(S(e_z) e_w e_x), for every b at once
    let sandwich = |x: usize, z: usize| -> Vec<Vector> {
        let rows: Vec<Vector> = (0..d).map(|w| h.mul(&h.mul(&antipode[z], &h.basis(w)), &h.basis(x))).collect();
        (0..d).map(|b| (0..d).map(|w| rows[w][b].clone()).collect()).collect()
    };
    let mut sandwiches: BTreeMap<(usize, usize), Vec<Vector>> = BTreeMap::new();

    let mut mult: Vec<Sparse> = vec![Vec::new(); n * n];
    for a in 0..d {
        for i in 0..d {
            for b in 0..d {
                for j in 0..d {
                    let mut acc = Tensor2::new();
                    for ((x, y, z), s) in &delta2[i] {
                        let q = &sandwiches.entry((*x, *z)).or_insert_with(|| sandwich(*x, *z))[b];
                        let pq = dual.mul(&dual.basis(a), q);
                        let yj = leg_product(h, *y, j);
                        for (c, u) in pq.iter().enumerate() {
                            if u.is_zero() {
                                continue;
                            }
                            let su = s * u;
                            for (k, v) in yj {
                                accumulate(&mut acc, (c, *k), &su * v);
                            }
                        }
                    }
                    mult[(a * d + i) * n + b * d + j] =
                        prune(acc).into_iter().map(|((c, k), s)| (c * d + k, s)).collect();
                }
            }
        }
    }

    let mut comult: Vec<Sparse2> = vec![Vec::new(); n];
    for (uv, terms) in h.mult_entries().iter().enumerate() {
        let (u, v) = (uv / d, uv % d);
        for (a, m) in terms {
            for i in 0..d {
                for (j, k, s) in &h.comult_entries()[i] {
                    comult[a * d + i].push((v * d + j, u * d + k, m * s));
                }
            }
        }
    }

    let eps_tensor = |x: &[Scalar]| -> Vector {
        let mut out = zero_vector(n);
        for (u, c) in h.counit().iter().enumerate() {
            for (k, y) in x.iter().enumerate() {
                if !c.is_zero() && !y.is_zero() {
                    out[u * d + k] = c * y;
                }
            }
        }
        out
    };
    let unit = eps_tensor(h.unit());
    let counit: Vector = (0..n).map(|ai| &h.unit()[ai / d] * &h.counit()[ai % d]).collect();

    let provisional =
        HopfData::new(h.order(), mult.clone(), comult.clone(), unit.clone(), counit.clone(), vec![Vec::new(); n])?;
    let mut double_antipode: Vec<Sparse> = Vec::with_capacity(n);
    for a in 0..d {
        let sp = dual.antipode(&dual.basis(a));
        let mut right = zero_vector(n);
        for (c, x) in sp.iter().enumerate() {
            for (k, y) in h.unit().iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    right[c * d + k] = x * y;
                }
            }
        }
        for a in antipode.iter().take(d) {
            let left = eps_tensor(a);
            let s = provisional.mul(&left, &right);
            double_antipode.push(s.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        }
    }

    let mut r = zero_vector(n * n);
    for i in 0..d {
        let left = eps_tensor(&h.basis(i));
        for (p, x) in left.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in h.unit().iter().enumerate() {
                if !y.is_zero() {
                    r[p * n + i * d + k] += &(x * y);
                }
            }
        }
    }

    let labels = (0..n).map(|ai| format!("p[{}]#{}", h.label(ai / d), h.label(ai % d))).collect();
    let double = HopfData::new(h.order(), mult, comult, unit, counit, double_antipode)?
        .with_labels(labels)?
        .with_r_matrix(r.clone())?;
    Ok((double, QuasitriangularStructure { r }))
}
