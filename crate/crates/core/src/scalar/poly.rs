//! Univariate polynomials over [`Scalar`], minimal polynomials of matrices and
//! extraction of linear factors over a fixed cyclotomic field.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CyclotomicOrder, Rational, Scalar};
use crate::error::{Error, Result};
use crate::linalg::DependencyTracker;

/// Polynomial with coefficients listed from the constant term upward.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

/// A root together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: Scalar,
    pub multiplicity: usize,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// x - r
    pub fn linear(r: &Scalar) -> Polynomial {
        Polynomial::new(vec![-r, Scalar::one()])
    }

    /// Product of (x - r) over the roots, with multiplicity.
    pub fn from_roots(roots: &[Root]) -> Polynomial {
        let mut p = Polynomial::constant(Scalar::one());
        for r in roots {
            for _ in 0..r.multiplicity {
                p = p.mul(&Polynomial::linear(&r.value));
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        Polynomial::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_integer(k as i64)).collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else if c.coeffs().len() > 1 {
                write!(f, "({c})*{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Minimal polynomial of the sequence `first, next(first), next(next(first)), …`
/// taken as vectors: the least-degree monic relation among the powers.
pub(crate) fn minimal_polynomial_by_powers(
    first: Vec<Scalar>,
    mut next: impl FnMut(&[Scalar]) -> Vec<Scalar>,
    max_degree: usize,
) -> Polynomial {
    let mut tracker = DependencyTracker::new(first.len());
    let mut cur = first;
    for degree in 0..=max_degree {
        if let Some(combo) = tracker.express(&cur) {
            // cur = Σ combo_k · power_k
            let mut coeffs: Vec<Scalar> = combo.iter().map(|c| -c).collect();
            coeffs.push(Scalar::one());
            debug_assert_eq!(coeffs.len(), degree + 1);
            return Polynomial::new(coeffs);
        }
        tracker.insert(&cur);
        cur = next(&cur);
    }
    unreachable!("powers must become dependent within the dimension bound")
}

/// Least-degree monic p with p(m) = 0, by exact linear dependence of powers of m.
pub fn minimal_polynomial(m: &[Vec<Scalar>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let flatten = |a: &[Vec<Scalar>]| -> Vec<Scalar> { a.iter().flatten().cloned().collect() };
    let identity: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    minimal_polynomial_by_powers(
        flatten(&identity),
        |flat| {
            let mut out = vec![Scalar::zero(); n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = &flat[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if !m[k][j].is_zero() {
                            out[i * n + j] += &(a * &m[k][j]);
                        }
                    }
                }
            }
            out
        },
        n,
    )
}

/// All roots of `p` in Q(ζ_n) with multiplicities, or [`Error::NotSplit`] naming
/// the part of `p` that has no linear factors over the field.
///
/// Candidates are tried in order: zero, rational roots from the rational root
/// theorem, the values ±ζ^k, and finally lattice points recovered from the
/// complex roots of every Galois conjugate of `p`. Each candidate is checked by
/// exact evaluation before it is deflated.
pub fn factor_into_linears(p: &Polynomial, order: CyclotomicOrder) -> Result<Vec<Root>> {
    if p.is_zero() {
        return Err(Error::NotSplit { factor: "0".into() });
    }
    let p = p.monic();
    if p.degree() == 0 {
        return Ok(vec![]);
    }
    let sqfree = {
        let g = p.gcd(&p.derivative());
        p.divrem(&g).0.monic()
    };

    let mut remaining = sqfree;
    let mut roots: Vec<Scalar> = Vec::new();
    let try_root = |cand: Scalar, remaining: &mut Polynomial, roots: &mut Vec<Scalar>| {
        if remaining.degree() > 0 && !roots.contains(&cand) && remaining.eval(&cand).is_zero() {
            *remaining = remaining.divrem(&Polynomial::linear(&cand)).0;
            roots.push(cand);
        }
    };

    try_root(Scalar::zero(), &mut remaining, &mut roots);
    for cand in rational_root_candidates(&remaining) {
        try_root(cand, &mut remaining, &mut roots);
    }
    let n = order.get() as i64;
    for k in 0..n {
        let z = Scalar::zeta(order, k);
        try_root(z.clone(), &mut remaining, &mut roots);
        try_root(-z, &mut remaining, &mut roots);
    }
    if remaining.degree() > 0 {
        for cand in embedding_candidates(&remaining, order) {
            try_root(cand, &mut remaining, &mut roots);
        }
    }
    if remaining.degree() > 0 {
        return Err(Error::NotSplit { factor: remaining.to_string() });
    }

    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let lin = Polynomial::linear(&r);
        let mut q = p.clone();
        let mut mult = 0;
        loop {
            let (quot, rem) = q.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            q = quot;
        }
        out.push(Root { value: r, multiplicity: mult });
    }
    Ok(out)
}

const DIVISOR_LIMIT: u64 = 1_000_000;

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

fn rational_root_candidates(p: &Polynomial) -> Vec<Scalar> {
    let coeffs: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.as_rational()).collect();
    let Some(coeffs) = coeffs else { return vec![] };
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &den).to_integer()).collect();
    let Some(low) = ints.iter().find(|c| !c.is_zero()) else { return vec![] };
    let (Some(num_divs), Some(den_divs)) = (small_divisors(low), small_divisors(&ints[ints.len() - 1])) else {
        return vec![];
    };
    let mut out = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let r = Scalar::ratio(*a as i64, *b as i64);
            if !out.contains(&r) {
                out.push(-&r);
                out.push(r);
            }
        }
    }
    out
}

const MAX_COMBINATIONS: usize = 200_000;

/// Candidate roots from numerical roots of the Galois conjugates.
///
/// After scaling x ↦ D·x the roots are algebraic integers, so their power-basis
/// coordinates are integers; these are recovered by solving the real linear
/// system given by one complex embedding per conjugate pair and rounding.
fn embedding_candidates(p: &Polynomial, order: CyclotomicOrder) -> Vec<Scalar> {
    let n = order.get();
    let field = order.field();
    let phi = field.degree();
    let reps: Vec<u32> = if n <= 2 { vec![1] } else { (1..=n / 2).filter(|j| j.gcd(&n) == 1).collect() };
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scale = super::rational_to_f64(&Rational::from_integer(den.clone()));

    let mut root_sets = Vec::with_capacity(reps.len());
    for &j in &reps {
        let cs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_complex(j)).collect();
        match aberth_roots(&cs) {
            Some(r) => root_sets.push(r),
            None => return vec![],
        }
    }
    let total: usize = root_sets.iter().map(|r| r.len()).product();
    if total > MAX_COMBINATIONS {
        return vec![];
    }

    // rows: for each embedding j, Re and Im of Σ_k c_k ω^{jk}
    let mut system: Vec<Vec<f64>> = Vec::new();
    for &j in &reps {
        let row: Vec<Complex64> = (0..phi)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / n as f64))
            .collect();
        system.push(row.iter().map(|z| z.re).collect());
        if n > 2 {
            system.push(row.iter().map(|z| z.im).collect());
        }
    }

    let mut out: Vec<Scalar> = Vec::new();
    let mut idx = vec![0usize; reps.len()];
    'combos: for _ in 0..total {
        let mut rhs = Vec::with_capacity(phi);
        for (s, &i) in idx.iter().enumerate() {
            let v = root_sets[s][i] * scale;
            rhs.push(v.re);
            if n > 2 {
                rhs.push(v.im);
            }
        }
        // advance odometer
        for s in 0..idx.len() {
            idx[s] += 1;
            if idx[s] < root_sets[s].len() {
                break;
            }
            idx[s] = 0;
        }
        let Some(sol) = solve_real(&system, &rhs) else { continue };
        let mut coords = Vec::with_capacity(phi);
        for v in sol {
            let r = v.round();
            if !r.is_finite() || (v - r).abs() > 1e-3 * (1.0 + v.abs()) {
                continue 'combos;
            }
            let Some(int) = <BigInt as num_traits::FromPrimitive>::from_f64(r) else { continue 'combos };
            coords.push(Rational::new(int, den.clone()));
        }
        let cand = Scalar::from_power_coeffs(order, &coords);
        if !out.contains(&cand) && p.eval(&cand).is_zero() {
            out.push(cand);
            if out.len() == p.degree() {
                break;
            }
        }
    }
    out
}

fn solve_real(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(r, &v)| {
            let mut row = r.clone();
            row.push(v);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        let pivot = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col {
                let f = row[col] / pivot[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= f * p;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n] / m[i][i]).collect())
}

/// All complex roots of a monic polynomial (coefficients constant term first)
/// by Aberth–Ehrlich iteration.
fn aberth_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Some(vec![]);
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let bound = 1.0 + coeffs[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut zs: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(bound * 0.9, 2.0 * std::f64::consts::PI * (k as f64) / deg as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (p, dp) = eval(zs[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for l in 0..deg {
                if l != k {
                    sum += Complex64::new(1.0, 0.0) / (zs[k] - zs[l]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            zs[k] -= w;
            max_step = max_step.max(w.norm() / (1.0 + zs[k].norm()));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    if zs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return None;
    }
    Some(zs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| Scalar::from_integer(c)).collect())
    }

    fn diag(ds: &[i64]) -> Vec<Vec<Scalar>> {
        (0..ds.len())
            .map(|i| (0..ds.len()).map(|j| Scalar::from_integer(if i == j { ds[i] } else { 0 })).collect())
            .collect()
    }

    fn root_values(roots: &[Root]) -> Vec<Scalar> {
        roots.iter().map(|r| r.value.clone()).collect()
    }

    #[test]
    fn minimal_polynomial_of_identity() {
        assert_eq!(minimal_polynomial(&diag(&[1, 1, 1])), int_poly(&[-1, 1]));
    }

    #[test]
    fn minimal_polynomial_of_reflection() {
        assert_eq!(minimal_polynomial(&diag(&[1, -1])), int_poly(&[-1, 0, 1]));
    }

    #[test]
    fn minimal_polynomial_of_three_cycle() {
        // permutation matrix of a 3-cycle; dependence search must find x^3 - 1
        let z = Scalar::zero;
        let o = Scalar::one;
        let m = vec![vec![z(), z(), o()], vec![o(), z(), z()], vec![z(), o(), z()]];
        let p = minimal_polynomial(&m);
        assert_eq!(p, int_poly(&[-1, 0, 0, 1]));
        // annihilates exactly
        let order = CyclotomicOrder::new(3).unwrap();
        let roots = factor_into_linears(&p, order).unwrap();
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn split_x_squared_minus_one() {
        let roots = factor_into_linears(&int_poly(&[-1, 0, 1]), CyclotomicOrder::RATIONALS).unwrap();
        let vals = root_values(&roots);
        assert_eq!(vals.len(), 2);
        assert!(vals.contains(&Scalar::one()) && vals.contains(&Scalar::from_integer(-1)));
    }

    #[test]
    fn cube_roots_of_unity_over_q_zeta3() {
        let order = CyclotomicOrder::new(3).unwrap();
        let roots = factor_into_linears(&int_poly(&[-1, 0, 0, 1]), order).unwrap();
        let vals = root_values(&roots);
        for k in 0..3 {
            assert!(vals.contains(&Scalar::zeta(order, k)));
        }
    }

    #[test]
    fn irreducible_quadratic_over_q_is_not_split() {
        match factor_into_linears(&int_poly(&[1, 1, 1]), CyclotomicOrder::RATIONALS) {
            Err(Error::NotSplit { factor }) => assert_eq!(factor, "x^2 + x + 1"),
            other => panic!("expected NotSplit, got {other:?}"),
        }
    }

    #[test]
    fn multiplicities_are_recovered() {
        // (x - 2)^3 (x + 1/2)
        let p = Polynomial::from_roots(&[
            Root { value: Scalar::from_integer(2), multiplicity: 3 },
            Root { value: Scalar::ratio(-1, 2), multiplicity: 1 },
        ]);
        let roots = factor_into_linears(&p, CyclotomicOrder::RATIONALS).unwrap();
        assert_eq!(Polynomial::from_roots(&roots), p);
    }

    #[test]
    fn non_unit_cyclotomic_roots_need_embeddings() {
        // roots 2ζ_3, 1 - ζ_3, 3/2: neither rational nor roots of unity
        let order = CyclotomicOrder::new(3).unwrap();
        let z = Scalar::zeta(order, 1);
        let wanted = vec![&Scalar::from_integer(2) * &z, &Scalar::one() - &z, Scalar::ratio(3, 2)];
        let p = Polynomial::from_roots(
            &wanted.iter().map(|v| Root { value: v.clone(), multiplicity: 1 }).collect::<Vec<_>>(),
        );
        let roots = factor_into_linears(&p, order).unwrap();
        assert_eq!(Polynomial::from_roots(&roots), p);
        for w in &wanted {
            assert!(root_values(&roots).contains(w));
        }
    }

    #[test]
    fn gaussian_roots_over_q_i() {
        let order = CyclotomicOrder::new(4).unwrap();
        let i = Scalar::zeta(order, 1);
        let r1 = &Scalar::from_integer(1) + &(&Scalar::from_integer(2) * &i);
        let r2 = Scalar::ratio(-1, 3);
        let p = Polynomial::from_roots(&[
            Root { value: r1.clone(), multiplicity: 2 },
            Root { value: r2.clone(), multiplicity: 1 },
        ]);
        let roots = factor_into_linears(&p, order).unwrap();
        assert_eq!(Polynomial::from_roots(&roots), p);
    }
}
