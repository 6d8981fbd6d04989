//! Truncated formal series in `x = q^(1/D)` over [`FieldElement`].
//!
//! A series stores the coefficients of `x^v, x^(v+1), ..., x^(v+N-1)`.
//! Everything below `x^v` is exactly zero and everything from `x^(v+N)` on
//! is unknown. Operations propagate that bound conservatively, so comparing
//! two series to some order never reads an unknown coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exactfield::{nth_root_in_field, FieldElement, Rational};
use crate::{Error, Result};

/// Exponent of `q`, a rational number.
pub type Exponent = Rational64;

pub fn exp(p: i64, q: i64) -> Exponent {
    Rational64::new(p, q)
}

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    grid: i64,
    val: i64,
    coeffs: Vec<FieldElement>,
}

/// Outcome of comparing two series up to an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Differ { exponent: Exponent },
    Insufficient { known: Exponent },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// One serialized term.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesTerm {
    pub exponent: String,
    pub coeff: String,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

/// Number of grid steps below `order` on grid `d` (rational order).
fn grid_bound(order: Exponent, d: i64) -> i64 {
    ceil_div(*order.numer() * d, *order.denom())
}

impl QSeries {
    pub fn new(grid: i64, val: i64, coeffs: Vec<FieldElement>) -> Self {
        assert!(grid >= 1, "grid must be positive");
        QSeries { grid, val, coeffs }
    }

    pub fn from_ints(grid: i64, val: i64, c: &[i64]) -> Self {
        Self::new(grid, val, c.iter().map(|&x| FieldElement::from_int(x)).collect())
    }

    /// Zero, known for exponents below `order`.
    pub fn zero(order: i64) -> Self {
        Self::new(1, 0, vec![FieldElement::zero(); order.max(0) as usize])
    }

    pub fn one(order: i64) -> Self {
        Self::constant(FieldElement::one(), order)
    }

    pub fn constant(c: FieldElement, order: i64) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `c q^e`, known for exponents below `order`.
    pub fn monomial(c: FieldElement, e: Exponent, order: Exponent) -> Self {
        let grid = e.denom().lcm(order.denom());
        let n = *e.numer() * (grid / e.denom());
        let b = grid_bound(order, grid);
        let len = (b - n).max(0) as usize;
        let mut coeffs = vec![FieldElement::zero(); len];
        if len > 0 {
            coeffs[0] = c;
        }
        Self::new(grid, n.min(b), coeffs)
    }

    /// Build from a closure over grid indices `val..bound`.
    pub fn from_fn(grid: i64, val: i64, bound: i64, f: impl Fn(i64) -> FieldElement) -> Self {
        let coeffs = (val..bound.max(val)).map(f).collect();
        Self::new(grid, val, coeffs)
    }

    pub fn grid(&self) -> i64 {
        self.grid
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn known_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Exclusive upper bound of the known exponent range.
    pub fn bound(&self) -> Exponent {
        exp(self.val + self.coeffs.len() as i64, self.grid)
    }

    fn bound_idx(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    fn lead_idx(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exponent and coefficient of the first nonzero known term.
    pub fn leading(&self) -> Option<(Exponent, &FieldElement)> {
        self.lead_idx()
            .map(|i| (exp(self.val + i as i64, self.grid), &self.coeffs[i]))
    }

    /// Coefficient of `q^e`; `None` when it lies in the unknown tail.
    pub fn coeff(&self, e: Exponent) -> Option<FieldElement> {
        let t = e * Rational64::from_integer(self.grid);
        if e >= self.bound() {
            return None;
        }
        if !t.is_integer() {
            return Some(FieldElement::zero());
        }
        let n = t.to_integer();
        if n < self.val {
            return Some(FieldElement::zero());
        }
        Some(self.coeffs[(n - self.val) as usize].clone())
    }

    /// Coefficient of `q^n` for integer `n`, panicking on unknown.
    pub fn coeff_int(&self, n: i64) -> FieldElement {
        self.coeff(Rational64::from_integer(n))
            .unwrap_or_else(|| panic!("coefficient of q^{n} is unknown"))
    }

    /// Rational coefficient of `q^n`, panicking if unknown or irrational.
    pub fn rational_coeff(&self, n: i64) -> Rational {
        self.coeff_int(n).as_rational().expect("coefficient is not rational")
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &FieldElement)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (exp(self.val + j as i64, self.grid), c))
    }

    pub fn serialize_terms(&self) -> Vec<SeriesTerm> {
        self.terms()
            .map(|(e, c)| SeriesTerm { exponent: e.to_string(), coeff: c.to_string() })
            .collect()
    }

    pub fn is_zero_to_bound(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// All coefficients lie in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    /// Forget everything at or beyond `order`.
    pub fn truncate(&self, order: Exponent) -> Self {
        let g = self.grid.lcm(order.denom());
        let s = if g == self.grid { self.clone() } else { self.regrid(g) };
        let b = grid_bound(order, g);
        if b >= s.bound_idx() {
            return s;
        }
        let keep = (b - s.val).max(0) as usize;
        let mut c = s.coeffs;
        c.truncate(keep);
        QSeries { grid: g, val: s.val.min(b), coeffs: c }
    }

    pub fn truncate_int(&self, order: i64) -> Self {
        self.truncate(Rational64::from_integer(order))
    }

    /// Re-express on a grid that is a multiple of the current one.
    pub fn regrid(&self, grid: i64) -> Self {
        assert!(grid % self.grid == 0, "target grid {grid} is not a multiple of {}", self.grid);
        let s = grid / self.grid;
        if s == 1 {
            return self.clone();
        }
        let mut c = vec![FieldElement::zero(); self.coeffs.len() * s as usize];
        for (j, x) in self.coeffs.iter().enumerate() {
            if !x.is_zero() {
                c[j * s as usize] = x.clone();
            }
        }
        QSeries { grid, val: self.val * s, coeffs: c }
    }

    /// The coarsest grid carrying every nonzero term; the known bound is
    /// rounded down onto it.
    pub fn reduce_grid(&self) -> Self {
        let mut g = self.grid;
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&(self.val + j as i64));
                if g == 1 {
                    return self.clone();
                }
            }
        }
        if g == 1 {
            return self.clone();
        }
        let val = ceil_div(self.val, g);
        let bound = floor_div(self.bound_idx(), g);
        let coeffs = (val..bound.max(val))
            .map(|n| self.coeffs[(n * g - self.val) as usize].clone())
            .collect();
        QSeries { grid: self.grid / g, val, coeffs }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let g = self.grid.lcm(&other.grid);
        (self.regrid(g), other.regrid(g))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            let mut z = self.clone();
            z.coeffs.iter_mut().for_each(|x| *x = FieldElement::zero());
            return z;
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| if x.is_zero() { FieldElement::zero() } else { x * c })
            .collect();
        QSeries { coeffs, ..*self }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&FieldElement::from_int(c))
    }

    pub fn scale_ratio(&self, p: i64, q: i64) -> Self {
        self.scale(&FieldElement::from_ratio(p, q))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        let g = self.grid.lcm(e.denom());
        let mut s = self.regrid(g);
        s.val += *e.numer() * (g / e.denom());
        s
    }

    pub fn shift_int(&self, e: i64) -> Self {
        self.shift(Rational64::from_integer(e))
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = self.unify(other);
        let val = a.val.min(b.val);
        let bound = a.bound_idx().min(b.bound_idx());
        let mut coeffs = Vec::with_capacity((bound - val).max(0) as usize);
        for n in val..bound {
            let x = a.idx(n);
            let y = b.idx(n);
            coeffs.push(match (x.is_zero(), y.is_zero()) {
                (true, true) => FieldElement::zero(),
                (false, true) => x.clone(),
                (true, false) => {
                    if sign {
                        y.clone()
                    } else {
                        -y
                    }
                }
                (false, false) => {
                    if sign {
                        x + y
                    } else {
                        x - y
                    }
                }
            });
        }
        QSeries { grid: a.grid, val, coeffs }
    }

    /// Coefficient at grid index `n` within the known range or below it.
    fn idx(&self, n: i64) -> &FieldElement {
        static ZERO: once_cell::sync::Lazy<FieldElement> = once_cell::sync::Lazy::new(FieldElement::zero);
        if n < self.val {
            return &ZERO;
        }
        &self.coeffs[(n - self.val) as usize]
    }

    /// Cauchy product. The known length is the smaller of the two lengths
    /// counted from each factor's first nonzero term.
    pub fn mul_series(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let la = a.lead_idx().unwrap_or(a.coeffs.len());
        let lb = b.lead_idx().unwrap_or(b.coeffs.len());
        let len = (a.coeffs.len() - la).min(b.coeffs.len() - lb);
        let val = a.val + la as i64 + b.val + lb as i64;
        let nz = |s: &QSeries, l: usize| -> Vec<(usize, FieldElement)> {
            s.coeffs[l..]
                .iter()
                .enumerate()
                .take(len)
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect()
        };
        let na = nz(&a, la);
        let nb = nz(&b, lb);
        let mut acc = vec![FieldElement::zero(); len];
        for (i, x) in &na {
            for (j, y) in &nb {
                let k = i + j;
                if k >= len {
                    break;
                }
                acc[k].add_raw(&x.mul_raw(y));
            }
        }
        acc.iter_mut().for_each(|c| c.finish());
        QSeries { grid: a.grid, val, coeffs: acc }
    }

    /// Split into leading coefficient, leading grid index and the unit
    /// part `u` with `u_0 = 1`.
    fn unit_part(&self) -> Result<(FieldElement, i64, Vec<FieldElement>)> {
        let l = self.lead_idx().ok_or(Error::ZeroLeading)?;
        let c = self.coeffs[l].clone();
        let ci = c.inv()?;
        let u = self.coeffs[l..]
            .iter()
            .map(|x| if x.is_zero() { FieldElement::zero() } else { x * &ci })
            .collect();
        Ok((c, self.val + l as i64, u))
    }

    pub fn inverse(&self) -> Result<Self> {
        let (c, v, u) = self.unit_part()?;
        let n = u.len();
        let nzu: Vec<(usize, &FieldElement)> =
            u.iter().enumerate().skip(1).filter(|(_, x)| !x.is_zero()).collect();
        let mut h: Vec<FieldElement> = Vec::with_capacity(n);
        if n > 0 {
            h.push(FieldElement::one());
        }
        for k in 1..n {
            let mut s = FieldElement::zero();
            for &(j, uj) in &nzu {
                if j > k {
                    break;
                }
                let hk = &h[k - j];
                if !hk.is_zero() {
                    s.add_raw(&uj.mul_raw(hk));
                }
            }
            s.finish();
            h.push(-s);
        }
        let ci = c.inv()?;
        let coeffs = h.iter().map(|x| if x.is_zero() { x.clone() } else { x * &ci }).collect();
        Ok(QSeries { grid: self.grid, val: -v, coeffs })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc: Option<QSeries> = None;
        let mut base = self.clone();
        let mut e = e as u64;
        if e == 0 {
            let l = self.lead_idx().ok_or(Error::ZeroLeading)?;
            let mut c = vec![FieldElement::zero(); self.coeffs.len() - l];
            c[0] = FieldElement::one();
            return Ok(QSeries { grid: self.grid, val: 0, coeffs: c });
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc.unwrap())
    }

    /// `f^(p/n)` with the principal root of the leading coefficient.
    pub fn pow_ratio(&self, p: i64, n: u32) -> Result<Self> {
        let g = p.gcd(&(n as i64));
        let (p, n) = (p / g, (n as i64 / g) as u32);
        if n == 1 {
            return self.pow(p);
        }
        let (c, v, u) = self.unit_part()?;
        if (v * p) % n as i64 != 0 {
            return Err(Error::Valuation { val: v * p, grid: self.grid, n: n as i64 });
        }
        let cp = c.pow(p)?;
        let lead = nth_root_in_field(&cp, n)
            .ok_or_else(|| Error::NoRoot { n, coeff: cp.to_string() })?;
        let r = Rational::new(p.into(), (n as i64).into());
        let len = u.len();
        let nzu: Vec<(usize, &FieldElement)> =
            u.iter().enumerate().skip(1).filter(|(_, x)| !x.is_zero()).collect();
        let mut h: Vec<FieldElement> = Vec::with_capacity(len);
        if len > 0 {
            h.push(FieldElement::one());
        }
        for k in 1..len {
            let mut s = FieldElement::zero();
            for &(j, uj) in &nzu {
                if j > k {
                    break;
                }
                let hk = &h[k - j];
                if hk.is_zero() {
                    continue;
                }
                let w = &r * Rational::from_integer((j as i64).into())
                    - Rational::from_integer(((k - j) as i64).into());
                if w.is_zero() {
                    continue;
                }
                s.add_raw(&uj.mul_raw(hk).scale_rational(&w));
            }
            s.finish();
            h.push(s.scale_ratio(1, k as i64));
        }
        let coeffs = h.iter().map(|x| if x.is_zero() { x.clone() } else { x * &lead }).collect();
        Ok(QSeries { grid: self.grid, val: v * p / n as i64, coeffs })
    }

    pub fn nth_root(&self, n: u32) -> Result<Self> {
        self.pow_ratio(1, n)
    }

    /// `f(q^k)`.
    pub fn subs_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        let mut c = vec![FieldElement::zero(); self.coeffs.len() * k as usize];
        for (j, x) in self.coeffs.iter().enumerate() {
            if !x.is_zero() {
                c[j * k as usize] = x.clone();
            }
        }
        QSeries { grid: self.grid, val: self.val * k, coeffs: c }
    }

    /// `f(q^(1/m))`: same coefficients on an `m` times finer grid.
    pub fn refine(&self, m: i64) -> Self {
        assert!(m >= 1);
        QSeries { grid: self.grid * m, ..self.clone() }
    }

    /// Keep grid indices `N = k n + m` and send them to `n`, same grid.
    /// On an integer grid this is `sum a_(kn+m) q^n`.
    pub fn multisect(&self, k: i64, m: i64) -> Self {
        assert!(k >= 1 && (0..k).contains(&m));
        let val = ceil_div(self.val - m, k);
        let bound = ceil_div(self.bound_idx() - m, k);
        let coeffs = (val..bound.max(val))
            .map(|n| self.coeffs[(k * n + m - self.val) as usize].clone())
            .collect();
        QSeries { grid: self.grid, val, coeffs }
    }

    /// Zero every term whose grid index is not `m` mod `k`; no remapping.
    pub fn residue_part(&self, k: i64, m: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if (self.val + j as i64 - m).rem_euclid(k) == 0 {
                    c.clone()
                } else {
                    FieldElement::zero()
                }
            })
            .collect();
        QSeries { coeffs, ..*self }
    }

    /// Terms with integer exponent, on grid 1.
    pub fn integer_part(&self) -> Self {
        let val = ceil_div(self.val, self.grid);
        let bound = ceil_div(self.bound_idx(), self.grid);
        let coeffs = (val..bound.max(val))
            .map(|n| self.coeffs[(n * self.grid - self.val) as usize].clone())
            .collect();
        QSeries { grid: 1, val, coeffs }
    }

    /// `f(zeta5^j q)` on an integer grid.
    pub fn twist(&self, j: i64) -> Result<Self> {
        if self.grid != 1 {
            return Err(Error::FractionalGrid(self.grid));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(t, c)| {
                if c.is_zero() {
                    return c.clone();
                }
                let e = (j * (self.val + t as i64)).rem_euclid(5);
                c * &FieldElement::zeta20_pow(4 * e)
            })
            .collect();
        Ok(QSeries { coeffs, ..*self })
    }

    /// `q d/dq`.
    pub fn theta_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_zero() {
                    c.clone()
                } else {
                    c.scale_ratio(self.val + j as i64, self.grid)
                }
            })
            .collect();
        QSeries { coeffs, ..*self }
    }

    /// Compare all coefficients with exponent below `order`.
    pub fn compare(&self, other: &Self, order: Exponent) -> Comparison {
        let known = self.bound().min(other.bound());
        if known < order {
            return Comparison::Insufficient { known };
        }
        let (a, b) = self.unify(other);
        let g = a.grid.lcm(order.denom());
        let (a, b) = (a.regrid(g), b.regrid(g));
        let top = grid_bound(order, g);
        let lo = a.val.min(b.val);
        for n in lo..top {
            if a.idx(n) != b.idx(n) {
                return Comparison::Differ { exponent: exp(n, g) };
            }
        }
        Comparison::Equal
    }

    pub fn compare_int(&self, other: &Self, order: i64) -> Comparison {
        self.compare(other, Rational64::from_integer(order))
    }

    /// `Ok` when the two series agree below `order`.
    pub fn agree_to(&self, other: &Self, order: Exponent) -> Result<()> {
        match self.compare(other, order) {
            Comparison::Equal => Ok(()),
            Comparison::Differ { exponent } => Err(Error::Precondition(format!(
                "series differ at exponent {exponent}"
            ))),
            Comparison::Insufficient { known } => Err(Error::Precision {
                needed: order.to_string(),
                known: known.to_string(),
            }),
        }
    }

    /// Integer coefficients `a_0..a_(n-1)` of an integer-grid series.
    pub fn integer_coeffs(&self, n: usize) -> Vec<num_bigint::BigInt> {
        (0..n as i64)
            .map(|k| {
                let r = self.rational_coeff(k);
                assert!(r.is_integer(), "coefficient of q^{k} is not an integer");
                r.to_integer()
            })
            .collect()
    }

    /// Exponent bound as `f64`, for diagnostics.
    pub fn bound_f64(&self) -> f64 {
        self.bound().to_f64().unwrap_or(f64::NAN)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.leading().map_or(false, |(e, _)| e.is_negative())
    }

    pub fn is_one_to_bound(&self) -> bool {
        self.terms().all(|(e, c)| e.is_zero() && c.is_one()) && self.leading().is_some()
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms().take(12) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^({e})")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", self.bound())
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.combine(rhs, true)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.combine(rhs, false)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.scale_int(-1)
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        &self - &rhs
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

/// Sum of a list of series.
pub fn sum_series<'a>(items: impl IntoIterator<Item = &'a QSeries>) -> Option<QSeries> {
    items.into_iter().fold(None, |acc, s| Some(match acc {
        None => s.clone(),
        Some(a) => &a + s,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;
    use proptest::prelude::*;

    fn ints(grid: i64, val: i64, c: &[i64]) -> QSeries {
        QSeries::from_ints(grid, val, c)
    }

    #[test]
    fn product_of_binomials() {
        let a = ints(1, 0, &[1, 1, 0, 0, 0]);
        let b = ints(1, 0, &[1, -1, 0, 0, 0]);
        assert!((&a * &b).compare_int(&ints(1, 0, &[1, 0, -1, 0, 0]), 5).is_equal());
    }

    #[test]
    fn fractional_monomials() {
        let m = QSeries::monomial(FieldElement::one(), exp(1, 5), exp(3, 1));
        let p = &m * &m;
        assert_eq!(p.grid(), 5);
        assert_eq!(p.leading().unwrap().0, exp(2, 5));
    }

    #[test]
    fn additive_identity() {
        let f = ints(1, 0, &[3, 1, 4, 1, 5]);
        assert_eq!(&f + &QSeries::zero(5), f);
    }

    #[test]
    fn geometric_inverse() {
        let f = ints(1, 0, &[1, -1, 0, 0, 0, 0]);
        assert!(f.inverse().unwrap().compare_int(&ints(1, 0, &[1; 6]), 6).is_equal());
        assert!(QSeries::zero(4).inverse().is_err());
    }

    #[test]
    fn partition_numbers_from_euler_product() {
        // oracle: p(n) by the pentagonal recurrence
        let n = 40usize;
        let mut p = vec![BigInt::zero(); n];
        p[0] = BigInt::one();
        for m in 1..n as i64 {
            let mut s = BigInt::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += &p[(m - g1) as usize] * sign;
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    s += &p[(m - g2) as usize] * sign;
                }
            }
            p[m as usize] = s;
        }
        let mut c = vec![FieldElement::zero(); n];
        c[0] = FieldElement::one();
        for e in 1..n {
            for j in (e..n).rev() {
                let t = c[j - e].clone();
                c[j] -= &t;
            }
        }
        let inv = QSeries::new(1, 0, c).inverse().unwrap();
        assert_eq!(inv.integer_coeffs(n), p);
    }

    #[test]
    fn fifth_root_of_binomial() {
        // oracle: coefficients of (1 - 5q)^(1/5) = sum binom(1/5, k) (-5)^k q^k
        let f = ints(1, 0, &[1, -5, 0, 0, 0, 0, 0, 0]);
        let g = f.nth_root(5).unwrap();
        let mut b = Rational::one();
        for k in 0..8i64 {
            assert_eq!(g.rational_coeff(k), b.clone());
            let r = Rational::new(1.into(), 5.into()) - Rational::from_integer(k.into());
            b = b * r / Rational::from_integer((k + 1).into()) * Rational::from_integer((-5).into());
        }
        assert_eq!(g.rational_coeff(1), Rational::from_integer((-1).into()));
        assert_eq!(g.rational_coeff(2), Rational::from_integer((-2).into()));
    }

    #[test]
    fn root_of_fifth_power_and_valuation() {
        let f = ints(1, 0, &[1, 1, 0, 0, 0, 0, 0]);
        assert!(f.pow(5).unwrap().nth_root(5).unwrap().compare_int(&f, 7).is_equal());
        let g = ints(1, 5, &[1, 2, 3, 4, 5, 6]);
        let r = g.nth_root(5).unwrap();
        assert_eq!(r.leading().unwrap().0, exp(1, 1));
        let bad = ints(1, 3, &[1, 2, 3]);
        assert!(matches!(bad.nth_root(5), Err(Error::Valuation { .. })));
        let nr = ints(1, 0, &[2, 1, 1]);
        assert!(matches!(nr.nth_root(2), Err(Error::NoRoot { .. })));
    }

    #[test]
    fn theta_derivative_monomials() {
        assert!(QSeries::one(5).theta_derivative().is_zero_to_bound());
        let m = QSeries::monomial(FieldElement::one(), exp(3, 5), exp(2, 1));
        let d = m.theta_derivative();
        assert_eq!(d.coeff(exp(3, 5)).unwrap(), FieldElement::from_ratio(3, 5));
    }

    #[test]
    fn substitution_rules() {
        let f = ints(1, 0, &[1, 1]);
        let g = f.subs_power(5);
        assert!(g.compare_int(&ints(1, 0, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0]), 10).is_equal());
        let h = ints(1, 0, &[1, 2, 3, 4]);
        assert_eq!(h.subs_power(5).subs_power(5), h.subs_power(25));
        let p = f.refine(5);
        assert_eq!(p.grid(), 5);
        assert_eq!(p.coeff(exp(1, 5)).unwrap(), FieldElement::one());
        assert_eq!(h.subs_power(5).multisect(5, 0), h);
        assert_eq!(h.refine(5).integer_part(), h.multisect(5, 0).truncate_int(1));
    }

    #[test]
    fn multisect_known_range() {
        let f = ints(1, 0, &(0..23).collect::<Vec<_>>());
        let s = f.multisect(5, 3);
        assert_eq!(s.val(), 0);
        assert_eq!(s.bound(), exp(4, 1));
        assert_eq!(s.rational_coeff(3), Rational::from_integer(18.into()));
        assert!(QSeries::one(10).multisect(5, 0).compare_int(&QSeries::one(2), 2).is_equal());
    }

    #[test]
    fn twist_rules() {
        let f = ints(1, 0, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(f.twist(0).unwrap(), f);
        let mut t = f.clone();
        for _ in 0..5 {
            t = t.twist(1).unwrap();
        }
        assert_eq!(t, f);
        assert!(f.refine(5).twist(1).is_err());
        // (1/5) sum_j zeta^(-jm) f(zeta^j q) keeps the class m
        for m in 0..5 {
            let mut acc = QSeries::zero(7);
            for j in 0..5 {
                let w = FieldElement::zeta20_pow(-4 * j * m);
                acc = &acc + &f.twist(j).unwrap().scale(&w);
            }
            assert_eq!(acc.scale_ratio(1, 5), f.residue_part(5, m));
        }
    }

    #[test]
    fn unknown_tail_never_passes() {
        let f = ints(1, 0, &[1, 2, 3]);
        let g = ints(1, 0, &[1, 2, 3, 0, 0]);
        assert!(matches!(f.compare_int(&g, 5), Comparison::Insufficient { .. }));
        assert_eq!(f.coeff(exp(3, 1)), None);
    }

    #[test]
    fn mul_bound_tracks_leading_zeros() {
        let f = ints(1, 0, &[0, 0, 1, 1, 1]);
        let g = ints(1, 0, &[1, 1, 1, 1, 1]);
        let p = &f * &g;
        assert_eq!(p.val(), 2);
        assert_eq!(p.bound(), exp(5, 1));
    }

    #[test]
    fn reduce_grid_round_trip() {
        let f = ints(1, 0, &[1, 2, 3, 4]);
        assert_eq!(f.regrid(10).reduce_grid(), f);
    }

    fn arb_series(len: usize) -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-9i64..10, len).prop_map(|v| QSeries::from_ints(1, 0, &v))
    }

    fn arb_unit(len: usize) -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-9i64..10, len - 1).prop_map(|v| {
            let mut c = vec![1];
            c.extend(v);
            QSeries::from_ints(1, 0, &c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn mul_commutative_associative(a in arb_series(25), b in arb_series(25), c in arb_series(25)) {
            prop_assert!((&a * &b).compare_int(&(&b * &a), 25).is_equal());
            prop_assert!((&(&a * &b) * &c).compare_int(&(&a * &(&b * &c)), 25).is_equal());
        }

        #[test]
        fn inverse_involution(f in arb_unit(30)) {
            let g = f.inverse().unwrap();
            prop_assert!((&f * &g).compare_int(&QSeries::one(30), 30).is_equal());
            prop_assert!(g.inverse().unwrap().compare_int(&f, 30).is_equal());
        }

        #[test]
        fn nth_root_round_trip(f in arb_unit(20), n in 2u32..6) {
            let p = f.pow(n as i64).unwrap();
            prop_assert!(p.nth_root(n).unwrap().compare_int(&f, 20).is_equal());
            let r = f.nth_root(n).unwrap();
            prop_assert!(r.pow(n as i64).unwrap().compare_int(&f, 20).is_equal());
        }

        #[test]
        fn multisection_interleaving(f in arb_series(60)) {
            let mut acc = QSeries::zero(60);
            for m in 0..5 {
                acc = &acc + &f.multisect(5, m).subs_power(5).shift_int(m);
            }
            prop_assert!(acc.compare_int(&f, 60).is_equal());
        }

        #[test]
        fn derivation_rule(f in arb_series(30), g in arb_series(30)) {
            let lhs = (&f * &g).theta_derivative();
            let rhs = &(&f * &g.theta_derivative()) + &(&g * &f.theta_derivative());
            prop_assert!(lhs.compare_int(&rhs, 30).is_equal());
        }
    }
}
