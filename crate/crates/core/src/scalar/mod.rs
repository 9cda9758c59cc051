//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A [`Scalar`] is a polynomial in ζ_n of degree below φ(n), reduced modulo the
//! n-th cyclotomic polynomial, with arbitrary precision rational coefficients.
//! Trailing zero coefficients are trimmed, so zero is the empty vector and a
//! rational number has at most one coefficient. Rational scalars are
//! compatible with every field; combining two irrational scalars from
//! different fields is a programming error and panics.

mod poly;

pub(crate) use poly::minimal_polynomial_by_powers;
pub use poly::{factor_into_linears, minimal_polynomial, Polynomial, Root};

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Conductor `n` of the cyclotomic field Q(ζ_n). `n = 1` is the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclotomicOrder(u32);

impl CyclotomicOrder {
    pub const RATIONALS: CyclotomicOrder = CyclotomicOrder(1);

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        Ok(CyclotomicOrder(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn field(self) -> &'static CyclotomicField {
        CyclotomicField::get(self.0)
    }

    /// Whether Q(ζ_self) is a subfield of Q(ζ_other) via ζ_self = ζ_other^(other/self).
    pub fn divides(self, other: CyclotomicOrder) -> bool {
        other.0.is_multiple_of(self.0)
    }
}

impl fmt::Display for CyclotomicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Precomputed data for Q(ζ_n): the cyclotomic polynomial and the power-basis
/// expansion of ζ^k for every exponent needed by multiplication.
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    cyclotomic_poly: Vec<BigInt>,
    powers: Vec<Vec<Rational>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.n)
    }
}

fn registry() -> &'static Mutex<HashMap<u32, &'static CyclotomicField>> {
    static REG: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial division, exact (divisor monic).
fn int_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = int_poly_div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CyclotomicField {
    /// The interned field Q(ζ_n).
    pub fn get(n: u32) -> &'static CyclotomicField {
        assert!(n >= 1, "cyclotomic order must be positive");
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(f) = reg.get(&n) {
            return f;
        }
        let field: &'static CyclotomicField = Box::leak(Box::new(CyclotomicField::build(n)));
        reg.insert(n, field);
        field
    }

    fn build(n: u32) -> CyclotomicField {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let count = (n as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur: Vec<BigInt> = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..count {
            powers.push(cur.iter().map(|c| Rational::from_integer(c.clone())).collect());
            // multiply by ζ and reduce with Φ_n monic
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..phi {
                    next[i] -= &top * &poly[i];
                }
            }
            cur = next;
        }
        CyclotomicField { n, phi, cyclotomic_poly: poly, powers }
    }

    pub fn order(&self) -> CyclotomicOrder {
        CyclotomicOrder(self.n)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// φ(n), the degree of the field over Q.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.cyclotomic_poly
    }

    /// ζ_n^k.
    pub fn zeta_pow(&'static self, k: i64) -> Scalar {
        let k = k.rem_euclid(self.n as i64) as usize;
        Scalar::from_coeffs(self, self.powers[k].clone())
    }

    fn is_rationals(&self) -> bool {
        self.phi == 1
    }
}

/// An element of a cyclotomic field.
#[derive(Clone)]
pub struct Scalar {
    field: &'static CyclotomicField,
    coeffs: Vec<Rational>,
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Scalar {
    fn rationals() -> &'static CyclotomicField {
        static Q: OnceLock<&'static CyclotomicField> = OnceLock::new();
        Q.get_or_init(|| CyclotomicField::get(1))
    }

    fn from_coeffs(field: &'static CyclotomicField, mut coeffs: Vec<Rational>) -> Scalar {
        trim(&mut coeffs);
        debug_assert!(coeffs.len() <= field.phi);
        Scalar { field, coeffs }
    }

    pub fn zero() -> Scalar {
        Scalar { field: Self::rationals(), coeffs: Vec::new() }
    }

    pub fn one() -> Scalar {
        Scalar::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::from_coeffs(Self::rationals(), vec![r])
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        Scalar::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_n^k in Q(ζ_n).
    pub fn zeta(order: CyclotomicOrder, k: i64) -> Scalar {
        order.field().zeta_pow(k)
    }

    /// Builds an element from power-basis coefficients; higher powers are reduced.
    pub fn from_power_coeffs(order: CyclotomicOrder, coeffs: &[Rational]) -> Scalar {
        let field = order.field();
        let mut acc = Scalar::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&field.zeta_pow(k as i64) * &Scalar::from_rational(c.clone()));
            }
        }
        acc
    }

    pub fn field(&self) -> &'static CyclotomicField {
        if self.coeffs.len() <= 1 {
            Self::rationals()
        } else {
            self.field
        }
    }

    /// Power-basis coefficients (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// The value as a machine integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.as_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    fn join(&self, other: &Scalar) -> &'static CyclotomicField {
        if std::ptr::eq(self.field, other.field) || other.coeffs.len() <= 1 {
            self.field
        } else if self.coeffs.len() <= 1 || self.field.is_rationals() {
            other.field
        } else if other.field.is_rationals() {
            self.field
        } else {
            panic!("cannot combine scalars of Q(zeta_{}) and Q(zeta_{})", self.field.n, other.field.n)
        }
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        let field = self.join(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => {
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    if negate {
                        -b
                    } else {
                        b.clone()
                    }
                }
                (None, None) => unreachable!(),
            });
        }
        Scalar::from_coeffs(field, out)
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let field = self.join(other);
        if self.coeffs.len() == 1 {
            let c = &self.coeffs[0];
            return Scalar::from_coeffs(field, other.coeffs.iter().map(|x| c * x).collect());
        }
        if other.coeffs.len() == 1 {
            let c = &other.coeffs[0];
            return Scalar::from_coeffs(field, self.coeffs.iter().map(|x| x * c).collect());
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let phi = field.phi;
        if prod.len() > phi {
            let high: Vec<Rational> = prod.drain(phi..).collect();
            for (off, c) in high.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, z) in field.powers[phi + off].iter().enumerate() {
                    if !z.is_zero() {
                        prod[i] += &c * z;
                    }
                }
            }
        }
        Scalar::from_coeffs(field, prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_n.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Scalar::from_coeffs(self.field, vec![self.coeffs[0].recip()]));
        }
        let field = self.field;
        let modulus: Vec<Rational> = field.cyclotomic_poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
        // invariant: r_i ≡ s_i * a (mod Φ_n)
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = rat_poly_divrem(&r0, &r1);
            let s2 = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_n is irreducible
        let c = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Scalar::from_power_coeffs(field.order(), &inv).with_field(field))
    }

    fn with_field(mut self, field: &'static CyclotomicField) -> Scalar {
        if self.coeffs.len() <= 1 {
            self.field = field;
        }
        self
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image in Q(ζ_m) for `n | m`, sending ζ_n to ζ_m^(m/n).
    pub fn embed(&self, target: CyclotomicOrder) -> Result<Scalar> {
        let n = self.field().n;
        if !target.0.is_multiple_of(n) {
            return Err(Error::Parse(format!("Q(zeta_{n}) does not embed in Q(zeta_{})", target.0)));
        }
        let tf = target.field();
        let step = (target.0 / n) as i64;
        let mut acc = Scalar::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&tf.zeta_pow(step * k as i64) * &Scalar::from_rational(c.clone()));
            }
        }
        Ok(acc.with_field(tf))
    }

    /// Value under the complex embedding ζ_n ↦ exp(2πi·j/n).
    pub fn to_complex(&self, j: u32) -> Complex64 {
        let n = self.field().n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / n;
            acc += Complex64::from_polar(rational_to_f64(c), angle);
        }
        acc
    }

    /// Least common denominator of the power-basis coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Parses a scalar string in the given field: `"p/q"` or a polynomial in `z`
    /// such as `"1/2 + 1/2*z^2"`.
    pub fn parse(s: &str, order: CyclotomicOrder) -> Result<Scalar> {
        parse_scalar(s, order)
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rat_poly_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    trim(&mut v);
    v
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_poly_trim(out)
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    rat_poly_trim(out)
}

fn rat_poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], rat_poly_trim(rem));
    }
    let lead = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (rat_poly_trim(quot), rat_poly_trim(rem))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.coeffs != other.coeffs {
            return false;
        }
        self.coeffs.len() <= 1 || self.field.n == other.field.n
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.try_div(b).expect("division by zero scalar"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = self.add_impl(rhs, true);
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", fmt_rational(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as its display string; the conductor is carried by the enclosing file.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s.trim()).map_err(|_| bad())?)),
    }
}

fn parse_scalar(s: &str, order: CyclotomicOrder) -> Result<Scalar> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in text.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in '{s}'")));
    }
    terms.push((neg, cur));

    let mut acc = Scalar::zero();
    for (neg, term) in terms {
        let (coef, power) = match term.find('z') {
            None => (parse_rational(&term)?, 0i64),
            Some(pos) => {
                let coef = match &term[..pos] {
                    "" => Rational::one(),
                    c => parse_rational(c.strip_suffix('*').unwrap_or(c))?,
                };
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<i64>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad power in '{s}'")))?
                };
                if order.get() == 1 {
                    return Err(Error::Parse(format!("'{s}' uses z in the rational field")));
                }
                (coef, power)
            }
        };
        let coef = if neg { -coef } else { coef };
        let term = &Scalar::from_rational(coef) * &order.field().zeta_pow(power);
        acc += &term;
    }
    Ok(acc.with_field(order.field()))
}
