//! Operators on polynomials in the quintic thetas.
//!
//! A [`HomPoly`] of degree `d` is `sum a_k A^(5k) B^(5(d-k))`, a function of
//! `q`. Substituting `q -> q^(1/5)` turns it into a [`MixedPoly`]
//! `sum b_r A^r B^(5d-r)` of degree `5d`, with `b = B_d a` for the integer
//! array [`pent_array`]. The rows of `B_d` with index divisible by five form
//! the Hecke-type matrix [`hecke_matrix`], which represents `Omega_{5,0}`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::exactfield::{FieldElement, Rational};
use crate::qseries::{exp, QSeries};
use crate::quintic::{a, a5, b, b5};
use crate::report::{summarize, Check, IdentityReport};
use crate::tables::Table;
use crate::{Error, Result};

pub use crate::registry::{registry_listing, verify_registry, RegistryEntry, RegistryInfo};

/// Dense matrix of unbounded integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_table(t: &Table) -> Self {
        Self::from_rows(t.rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let data = idx.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        IntMatrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    m.data[i * o.cols + j] += x * o.get(k, j);
                }
            }
        }
        m
    }

    pub fn pow(&self, n: u32) -> Self {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn mul_field_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut s = FieldElement::zero();
                for (m, x) in self.row(r).iter().zip(v) {
                    if !m.is_zero() && !x.is_zero() {
                        s += &x.scale_int(m);
                    }
                }
                s
            })
            .collect()
    }

    /// Fraction-free Gaussian elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    /// Exact inverse over the rationals.
    pub fn inverse(&self) -> Result<Vec<Vec<Rational>>> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> =
                    self.row(r).iter().map(|x| Rational::from_integer(x.clone())).collect();
                row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(k, p);
            let piv = m[k][k].clone();
            for x in m[k].iter_mut() {
                *x /= piv.clone();
            }
            for r in 0..n {
                if r != k && !m[r][k].is_zero() {
                    let f = m[r][k].clone();
                    for c in 0..2 * n {
                        let v = &m[k][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// `true` when `lambda = 1` is an eigenvalue.
    pub fn has_eigenvalue_one(&self) -> bool {
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - 1;
            m.set(i, i, v);
        }
        m.det().is_zero()
    }

    /// First `(row, col)` where the matrix and a printed table disagree, or
    /// where the shapes differ.
    pub fn first_mismatch(&self, t: &Table) -> Option<(usize, usize)> {
        if t.rows.len() != self.rows || t.rows.iter().any(|r| r.len() != self.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        for (r, row) in t.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if *self.get(r, c) != BigInt::from(x) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_string_rows();
        let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>w$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// All `(n_1..n_5)` with nonnegative parts summing to `n`.
fn compositions5(n: usize) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                for d in 0..=n - a - b - c {
                    out.push([a, b, c, d, n - a - b - c - d]);
                }
            }
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn multinomial(parts: &[usize; 5]) -> BigInt {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

fn pow_i(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// The `(5d+1) x (d+1)` pentamidiation array, by enumerating pairs of
/// five-part compositions. Column `k` holds the coefficients of
/// `A(q^(1/5))^(5k) B(q^(1/5))^(5(d-k))` in `A^r B^(5d-r)`, row `r`.
pub fn pent_array(d: usize) -> IntMatrix {
    assert!(d >= 1);
    if let Some(m) = ARRAYS.read().get(&d) {
        return m.clone();
    }
    let m = enumerate_array(d);
    ARRAYS.write().insert(d, m.clone());
    m
}

static ARRAYS: Lazy<RwLock<HashMap<usize, IntMatrix>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn enumerate_array(d: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(5 * d + 1, d + 1);
    for k in 0..=d {
        let avecs = compositions5(k);
        let bvecs = compositions5(d - k);
        for kv in &avecs {
            let f = 5 * kv[0] + 4 * kv[1] + 3 * kv[2] + 2 * kv[3] + kv[4];
            let wa = multinomial(kv) * pow_i(3, kv[1]) * pow_i(4, kv[2]) * pow_i(2, kv[3]);
            let wa = if (kv[1] + kv[3]) % 2 == 1 { -wa } else { wa };
            for j in &bvecs {
                let g = j[1] + 2 * j[2] + 3 * j[3] + 4 * j[4];
                let wb = multinomial(j) * pow_i(3, j[1]) * pow_i(4, j[2]) * pow_i(2, j[3]);
                let r = f + g;
                let v = m.get(r, k) + &wa * &wb;
                m.set(r, k, v);
            }
        }
    }
    m
}

/// Rows `0, 5, ..., 5d` of [`pent_array`].
pub fn hecke_matrix(d: usize) -> IntMatrix {
    let idx: Vec<usize> = (0..=d).map(|k| 5 * k).collect();
    pent_array(d).select_rows(&idx)
}

type PowKey = (u8, i64);
static POWERS: Lazy<RwLock<HashMap<PowKey, Vec<QSeries>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `base^n` from a growing cache; `which` 0..=3 is `A, B, A^5, B^5`.
fn cached_power(which: u8, n: usize, order: i64) -> QSeries {
    let key = (which, order);
    if let Some(v) = POWERS.read().get(&key) {
        if let Some(s) = v.get(n) {
            return s.clone();
        }
    }
    let base = match which {
        0 => a(order),
        1 => b(order),
        2 => a5(order),
        _ => b5(order),
    };
    let mut w = POWERS.write();
    let v = w.entry(key).or_insert_with(|| vec![QSeries::one(order).regrid(base.grid())]);
    while v.len() <= n {
        let next = (v.last().unwrap() * &base).truncate_int(order);
        v.push(next);
    }
    v[n].clone()
}

/// `A^(5k) B^(5(d-k))` on the integer grid.
pub fn hom_monomial(k: usize, d: usize, order: i64) -> QSeries {
    assert!(k <= d);
    (&cached_power(2, k, order) * &cached_power(3, d - k, order)).truncate_int(order)
}

/// `A^r B^(n-r)` on grid 5.
pub fn mixed_monomial(r: usize, n: usize, order: i64) -> QSeries {
    assert!(r <= n);
    (&cached_power(0, r, order) * &cached_power(1, n - r, order)).truncate_int(order)
}

/// `sum a_k A^(5k) B^(5(d-k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoly {
    coeffs: Vec<FieldElement>,
}

impl HomPoly {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial has d+1 >= 1 coefficients");
        HomPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| FieldElement::from_int(x)).collect())
    }

    pub fn from_ratios(c: &[(i64, i64)]) -> Self {
        Self::new(c.iter().map(|&(p, q)| FieldElement::from_ratio(p, q)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_series(&self, order: i64) -> QSeries {
        let d = self.degree();
        let mut acc = QSeries::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &hom_monomial(k, d, order).scale(c);
            }
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Read off `a_k` from an integer-grid series (`A^(5k) B^(5(d-k))` starts
    /// at `q^k` with coefficient 1). Needs the series known beyond `q^d`.
    pub fn decompose(s: &QSeries, d: usize) -> Result<Self> {
        let top = d as i64 + 1;
        if s.bound() < exp(top, 1) {
            return Err(Error::Precision { needed: top.to_string(), known: s.bound().to_string() });
        }
        let mut rest = s.truncate_int(top);
        let mut out = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let c = rest.coeff(exp(k as i64, 1)).unwrap_or_else(FieldElement::zero);
            if !c.is_zero() {
                rest = &rest - &hom_monomial(k, d, top).scale(&c);
            }
            out.push(c);
        }
        if !rest.is_zero_to_bound() {
            return Err(Error::Precondition("series is not a form of the given degree".into()));
        }
        Ok(Self::new(out))
    }

    /// Exact quotient as polynomials in `A^5` (with `B^5` homogenizing).
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        let lo = den.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::DivisionByZero)?;
        let dd = den.degree();
        if dd > self.degree() {
            return Err(Error::Precondition("divisor has larger degree".into()));
        }
        let lead_inv = den.coeffs[lo].inv()?;
        let qd = self.degree() - dd;
        let mut rest = self.coeffs.clone();
        let mut quo = vec![FieldElement::zero(); qd + 1];
        for k in 0..=qd {
            let c = &rest[k + lo] * &lead_inv;
            if !c.is_zero() {
                for (j, x) in den.coeffs.iter().enumerate() {
                    if !x.is_zero() {
                        rest[k + j] -= &(&c * x);
                    }
                }
            }
            quo[k] = c;
        }
        if rest.iter().any(|c| !c.is_zero()) {
            return Err(Error::Precondition("polynomial division leaves a remainder".into()));
        }
        Ok(Self::new(quo))
    }

    /// Product of homogeneous polynomials.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![FieldElement::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        Self::new(out)
    }
}

/// `sum b_r A^r B^(n-r)` with `n = coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedPoly {
    coeffs: Vec<FieldElement>,
}

impl MixedPoly {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        assert!(!coeffs.is_empty());
        MixedPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| FieldElement::from_int(x)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_series(&self, order: i64) -> QSeries {
        let n = self.degree();
        let mut acc = QSeries::zero(order).regrid(5);
        for (r, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &mixed_monomial(r, n, order).scale(c);
            }
        }
        acc
    }

    /// Read off the coefficients of a grid-5 series `S = sum b_r A^r B^(n-r)`
    /// by peeling leading terms (`A^r B^(n-r)` starts at `q^(r/5)` with
    /// coefficient 1). Needs `S` known beyond `q^(n/5)`.
    pub fn decompose(s: &QSeries, n: usize) -> Result<Self> {
        let top = exp(n as i64 + 1, 5);
        if s.bound() < top {
            return Err(Error::Precision { needed: top.to_string(), known: s.bound().to_string() });
        }
        let order = (n as i64) / 5 + 1;
        let mut rest = s.truncate(top);
        let mut out = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let c = rest.coeff(exp(r as i64, 5)).unwrap_or_else(FieldElement::zero);
            if !c.is_zero() {
                rest = &rest - &mixed_monomial(r, n, order).scale(&c).truncate(top);
            }
            out.push(c);
        }
        if !rest.is_zero_to_bound() {
            return Err(Error::Precondition("series is not a form of the given degree".into()));
        }
        Ok(Self::new(out))
    }
}

/// `B_d a`: the polynomial evaluated at `q^(1/5)` in terms of `A(q), B(q)`.
pub fn pentamidiate_poly(p: &HomPoly) -> MixedPoly {
    pentamidiate_with(&pent_array(p.degree()), p)
}

fn pentamidiate_with(m: &IntMatrix, p: &HomPoly) -> MixedPoly {
    MixedPoly::new(m.mul_field_vec(p.coeffs()))
}

/// The residue-`m` part of a pentamidiated polynomial: the terms
/// `b_r A^r B^(5d-r)` with `r = m (mod 5)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaImage {
    pub m: usize,
    pub degree: usize,
    pub terms: Vec<(usize, FieldElement)>,
}

impl OmegaImage {
    /// `q^(-m/5) sum_r b_r A^r B^(n-r)`, on the integer grid.
    pub fn to_series(&self, order: i64) -> QSeries {
        let inner = order + 1;
        let mut acc = QSeries::zero(inner).regrid(5);
        for (r, c) in &self.terms {
            acc = &acc + &mixed_monomial(*r, self.degree, inner).scale(c);
        }
        acc.shift(exp(-(self.m as i64), 5)).reduce_grid().truncate_int(order)
    }

    /// For `m = 0` the image is again a homogeneous polynomial in `A^5, B^5`.
    pub fn to_hom(&self) -> Result<HomPoly> {
        if self.m != 0 {
            return Err(Error::Precondition("only the m = 0 part is homogeneous in A^5, B^5".into()));
        }
        let mut c = vec![FieldElement::zero(); self.degree / 5 + 1];
        for (r, x) in &self.terms {
            c[r / 5] = x.clone();
        }
        Ok(HomPoly::new(c))
    }
}

/// `Omega_{5,m}` of `p`, expressed through the pentamidiation array.
pub fn omega_poly(p: &HomPoly, m: usize) -> OmegaImage {
    assert!(m < 5);
    let b = pentamidiate_poly(p);
    let terms = b
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(r, c)| r % 5 == m && !c.is_zero())
        .map(|(r, c)| (r, c.clone()))
        .collect();
    OmegaImage { m, degree: b.degree(), terms }
}

/// Matrix route against series route: `p(q^(1/5))` against `B_d a`, on
/// grid 5 below `q^order`.
pub fn pentamidiate_series_check(p: &HomPoly, order: i64) -> IdentityReport {
    pentamidiate_series_check_with(&pent_array(p.degree()), p, order)
}

/// As [`pentamidiate_series_check`] with a caller-supplied array.
pub fn pentamidiate_series_check_with(m: &IntMatrix, p: &HomPoly, order: i64) -> IdentityReport {
    let lhs = p.to_series(5 * order).refine(5);
    let rhs = pentamidiate_with(m, p).to_series(order);
    summarize(
        "pentamidiation-series",
        "matrix route against direct substitution",
        order,
        &[Check::series_int(format!("degree {}", p.degree()), &lhs, &rhs, order)],
    )
}

/// `(A(q^5), B(q^5))` from `A, B` through principal fifth roots of
/// `B^5 - alpha^5 A^5` and `B^5 - beta^5 A^5`.
pub fn penticate(a_ser: &QSeries, b_ser: &QSeries, order: i64) -> Result<(QSeries, QSeries)> {
    let (al, be) = (FieldElement::alpha(), FieldElement::beta());
    let a5 = a_ser.pow(5)?.reduce_grid();
    let b5 = b_ser.pow(5)?.reduce_grid();
    let c = (&b5 - &a5.scale(&al.pow(5)?)).nth_root(5)?;
    let d = (&b5 - &a5.scale(&be.pow(5)?)).nth_root(5)?;
    let k = (&be - &al).inv()?;
    let big_c = (&c - &d).scale(&k);
    let big_d = (&c.scale(&be) - &d.scale(&al)).scale(&k);
    Ok((big_c.reduce_grid().truncate_int(order), big_d.reduce_grid().truncate_int(order)))
}

/// `(A(q^(1/5)), B(q^(1/5)))` from `A, B` through the fifth roots of the
/// degree-5 pentamidiation polynomials. The result lives on grid 25.
pub fn pentamidiate_radicals(a_ser: &QSeries, b_ser: &QSeries) -> Result<(QSeries, QSeries)> {
    let col = |k: usize| -> Vec<FieldElement> {
        pent_array(1).column(k).iter().map(|x| FieldElement::from_int(x.clone())).collect()
    };
    let eval = |c: Vec<FieldElement>| -> Result<QSeries> {
        let mut acc = QSeries::zero(1).regrid(a_ser.grid());
        let mut first = true;
        for (r, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = (&a_ser.pow(r as i64)? * &b_ser.pow(5 - r as i64)?).scale(x);
            acc = if first { t } else { &acc + &t };
            first = false;
        }
        Ok(acc.regrid(acc.grid() * 5))
    };
    Ok((eval(col(1))?.nth_root(5)?, eval(col(0))?.nth_root(5)?))
}

/// `(C(zeta5^k q), D(zeta5^k q))` from `B(q^5) - alpha zeta5^k A(q^5)` and
/// `B(q^5) - beta zeta5^k A(q^5)`.
pub fn change_of_sign(k: i64, order: i64) -> Result<(QSeries, QSeries)> {
    let inner = (order + 4) / 5 + 1;
    let a_5 = a(inner).subs_power(5).reduce_grid();
    let b_5 = b(inner).subs_power(5).reduce_grid();
    let z = FieldElement::zeta5().pow(k.rem_euclid(5))?;
    let c = &b_5 - &a_5.scale(&(&FieldElement::alpha() * &z));
    let d = &b_5 - &a_5.scale(&(&FieldElement::beta() * &z));
    Ok((c.truncate_int(order), d.truncate_int(order)))
}

/// `(A^5(zeta5^k q), B^5(zeta5^k q))` recombined from the twisted `C, D`.
pub fn twisted_fifth_powers(k: i64, order: i64) -> Result<(QSeries, QSeries)> {
    let (c, d) = change_of_sign(k, order)?;
    let (a5c, b5c) = (FieldElement::alpha().pow(5)?, FieldElement::beta().pow(5)?);
    let c5 = c.pow(5)?;
    let d5 = d.pow(5)?;
    let k_inv = (&b5c - &a5c).inv()?;
    let a = (&c5 - &d5).scale(&k_inv);
    let b = (&c5.scale(&b5c) - &d5.scale(&a5c)).scale(&k_inv);
    Ok((a.truncate_int(order), b.truncate_int(order)))
}

/// `det A_d = +-5^e`: returns `(sign, e)` or `None` if the determinant is
/// not of that shape.
pub fn hecke_det_exponent(d: usize) -> Option<(i8, u32)> {
    let det = hecke_matrix(d).det();
    let sign = if det.is_negative() { -1 } else { 1 };
    let mut v = det.abs();
    let mut e = 0u32;
    let five = BigInt::from(5);
    while !v.is_zero() && v.is_multiple_of(&five) {
        v /= &five;
        e += 1;
    }
    (v.is_one()).then_some((sign, e))
}

/// Coordinates of a homogeneous polynomial with integer coefficients as
/// `BigInt`s; `None` if some coefficient is not a rational integer.
pub fn integer_coords(p: &HomPoly) -> Option<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| c.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer()))
        .collect()
}

/// `A_d^(-1) a` over the rationals.
pub fn inverse_hecke_apply(a_vec: &[i64]) -> Result<Vec<Rational>> {
    let d = a_vec.len() - 1;
    let inv = hecke_matrix(d).inverse()?;
    Ok(inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(a_vec)
                .map(|(m, &x)| m * Rational::from_integer(x.into()))
                .fold(Rational::zero(), |s, t| s + t)
        })
        .collect())
}

/// Largest entry size, for display width decisions.
pub fn max_abs_entry(m: &IntMatrix) -> u64 {
    m.data.iter().map(|x| x.abs().to_u64().unwrap_or(u64::MAX)).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    /// Column `k` of `B_d` as the polynomial product `P_A^k P_B^(d-k)`.
    fn convolution_oracle(d: usize) -> IntMatrix {
        let pb = [1i64, 3, 4, 2, 1, 0];
        let pa = [0i64, 1, -2, 4, -3, 1];
        let mul = |x: &[BigInt], y: &[i64]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
            for (i, u) in x.iter().enumerate() {
                for (j, &v) in y.iter().enumerate() {
                    out[i + j] += u * v;
                }
            }
            out
        };
        let mut m = IntMatrix::zeros(5 * d + 1, d + 1);
        for k in 0..=d {
            let mut p = vec![BigInt::one()];
            for _ in 0..k {
                p = mul(&p, &pa);
            }
            for _ in 0..d - k {
                p = mul(&p, &pb);
            }
            for (r, x) in p.into_iter().enumerate().take(5 * d + 1) {
                m.set(r, k, x);
            }
        }
        m
    }

    #[test]
    fn printed_arrays() {
        assert_eq!(pent_array(1).transpose().first_mismatch(&tables::B1_TRANSPOSE), None);
        assert_eq!(pent_array(2).transpose().first_mismatch(&tables::B2_TRANSPOSE), None);
        assert_eq!(hecke_matrix(1), IntMatrix::identity(2));
        for d in 2..=6 {
            let t = tables::printed_hecke(d).unwrap();
            assert_eq!(hecke_matrix(d).first_mismatch(&t), None, "A_{d}");
        }
    }

    #[test]
    fn enumeration_matches_convolution() {
        for d in 1..=7 {
            assert_eq!(pent_array(d), convolution_oracle(d), "d = {d}");
        }
    }

    #[test]
    fn column_sums() {
        for d in 1..=6 {
            let m = pent_array(d);
            for k in 0..=d {
                let s: BigInt = m.column(k).iter().sum();
                assert_eq!(s, num_traits::pow(BigInt::from(11), d - k));
            }
        }
    }

    #[test]
    fn det_and_eigenvalue() {
        for d in 2..=6 {
            let h = hecke_matrix(d);
            assert!(h.has_eigenvalue_one(), "d = {d}");
            assert!(hecke_det_exponent(d).is_some(), "d = {d}");
        }
        assert_eq!(hecke_matrix(2).det(), BigInt::from(5));
    }

    #[test]
    fn inverse_round_trip() {
        let m = hecke_matrix(4);
        let inv = m.inverse().unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let s: Rational = (0..5)
                    .map(|k| Rational::from_integer(m.get(i, k).clone()) * &inv[k][j])
                    .fold(Rational::zero(), |a, b| a + b);
                assert_eq!(s, if i == j { Rational::one() } else { Rational::zero() });
            }
        }
    }

    #[test]
    fn theta_fifth_powers_at_fifth_root() {
        // B^5(q^(1/5)) -> first column of B_1
        let p = HomPoly::from_ints(&[1, 0]);
        assert_eq!(pentamidiate_poly(&p), MixedPoly::from_ints(&[1, 3, 4, 2, 1, 0]));
        let z = HomPoly::from_ints(&[0, 0, 0]);
        assert!(pentamidiate_poly(&z).coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn series_route() {
        for d in 1..=3 {
            let p = HomPoly::from_ints(&(0..=d as i64).map(|k| 3 * k - 2).collect::<Vec<_>>());
            let r = pentamidiate_series_check(&p, 12);
            assert!(r.passed, "{r:?}");
        }
        let mut bad = pent_array(2);
        let v = bad.get(4, 1) + 1;
        bad.set(4, 1, v);
        let r = pentamidiate_series_check_with(&bad, &HomPoly::from_ints(&[0, 1, 0]), 12);
        assert!(!r.passed);
        assert_eq!(r.first_failure.as_deref(), Some("4/5"));
    }

    #[test]
    fn decompose_reads_back_array_columns() {
        // d = 3 column by series expansion of pi(A^(5k) B^(5(3-k)))
        let d = 3;
        let m = pent_array(d);
        for k in 0..=d {
            let s = hom_monomial(k, d, 5 * d as i64 + 5).refine(5);
            let got = MixedPoly::decompose(&s, 5 * d).unwrap();
            let want: Vec<FieldElement> =
                m.column(k).into_iter().map(FieldElement::from_int).collect();
            assert_eq!(got.coeffs(), &want[..]);
        }
    }

    #[test]
    fn omega_of_partition_kernel() {
        let img = omega_poly(&HomPoly::from_ints(&[0, 1, 0]), 0);
        assert_eq!(img.to_hom().unwrap(), HomPoly::from_ints(&[0, 5, 0]));
        // reassembling all residues gives the full image
        let p = HomPoly::from_ints(&tables::E4_VECTOR);
        let full = pentamidiate_poly(&p);
        let mut back = vec![FieldElement::zero(); 21];
        for m in 0..5 {
            for (r, c) in omega_poly(&p, m).terms {
                back[r] = c;
            }
        }
        assert_eq!(full.coeffs(), &back[..]);
    }

    #[test]
    fn penticate_recovers_thetas_at_q5() {
        let (c, d) = penticate(&a(12), &b(12), 12).unwrap();
        assert!(c.compare_int(&a(3).subs_power(5).reduce_grid(), 12).is_equal());
        assert!(d.compare_int(&b(3).subs_power(5), 12).is_equal());
    }

    #[test]
    fn radicals_step_down() {
        let (x, y) = pentamidiate_radicals(&a(8), &b(8)).unwrap();
        assert!(x.compare(&a(8).refine(5), exp(8, 5)).is_equal());
        assert!(y.compare(&b(8).refine(5), exp(8, 5)).is_equal());
    }

    #[test]
    fn change_of_sign_base_case() {
        let (c0, d0) = change_of_sign(0, 20).unwrap();
        assert!(c0.compare_int(&crate::quintic::c(20), 20).is_equal());
        assert!(d0.compare_int(&crate::quintic::d(20), 20).is_equal());
        let (ta, tb) = twisted_fifth_powers(2, 20).unwrap();
        assert!(ta.compare_int(&a5(20).twist(2).unwrap(), 20).is_equal());
        assert!(tb.compare_int(&b5(20).twist(2).unwrap(), 20).is_equal());
    }
}
