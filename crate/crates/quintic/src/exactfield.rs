//! Exact arithmetic in the cyclotomic field `F = Q(z)`, `z = exp(2*pi*i/20)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^7` reduced modulo
//! `Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1`, as eight integer numerators over a
//! single positive denominator. The representation is kept canonical (the
//! gcd of all numerators and the denominator is 1), so equality is structural.
//!
//! The field contains every constant the series layer needs: `i = z^5`,
//! `zeta5 = z^4`, `zeta10 = z^2`, `sqrt5`, and the golden ratios.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Exact rational number.
pub type Rational = BigRational;

const DEG: usize = 8;

/// Element of `Q(zeta_20)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: [BigInt; DEG],
    den: BigInt,
}

fn zero_num() -> [BigInt; DEG] {
    Default::default()
}

/// Reduce a coefficient vector of length up to 15 modulo `Phi_20`.
fn reduce(c: &mut Vec<BigInt>) {
    // x^8 = x^6 - x^4 + x^2 - 1
    for k in (DEG..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let t = std::mem::take(&mut c[k]);
        c[k - 2] += &t;
        c[k - 4] -= &t;
        c[k - 6] += &t;
        c[k - 8] -= &t;
    }
    c.truncate(DEG);
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { num: zero_num(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        let mut num = zero_num();
        num[0] = n.into();
        FieldElement { num, den: BigInt::one() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(&Rational::new(p.into(), q.into()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        let mut num = zero_num();
        num[0] = r.numer().clone();
        FieldElement { num, den: r.denom().clone() }
    }

    /// Build from eight rational power-basis coordinates.
    pub fn from_coords(c: &[Rational]) -> Self {
        assert!(c.len() <= DEG);
        let mut den = BigInt::one();
        for x in c {
            den = den.lcm(x.denom());
        }
        let mut num = zero_num();
        for (k, x) in c.iter().enumerate() {
            num[k] = x.numer() * (&den / x.denom());
        }
        let mut e = FieldElement { num, den };
        e.normalize();
        e
    }

    /// `z^k` for any integer `k`.
    pub fn zeta20_pow(k: i64) -> Self {
        let k = k.rem_euclid(20) as usize;
        let mut c = vec![BigInt::zero(); k.max(DEG) + 1];
        c[k] = BigInt::one();
        if k < 10 {
            reduce(&mut c);
            let mut num = zero_num();
            for (i, v) in c.into_iter().enumerate() {
                num[i] = v;
            }
            return FieldElement { num, den: BigInt::one() };
        }
        // z^10 = -1
        -Self::zeta20_pow(k as i64 - 10)
    }

    /// `z^k` as an element, with `-1 = z^10` applied for large `k`.
    pub fn i() -> Self {
        Self::zeta20_pow(5)
    }

    pub fn zeta5() -> Self {
        Self::zeta20_pow(4)
    }

    pub fn zeta10() -> Self {
        Self::zeta20_pow(2)
    }

    pub fn sqrt5() -> Self {
        // quadratic Gauss sum over the fifth roots of unity
        let w = Self::zeta5();
        let w2 = &w * &w;
        let w3 = &w2 * &w;
        let w4 = &w3 * &w;
        &(&(&w - &w2) - &w3) + &w4
    }

    pub fn alpha() -> Self {
        (Self::one() + Self::sqrt5()).scale_ratio(1, 2)
    }

    pub fn beta() -> Self {
        (Self::one() - Self::sqrt5()).scale_ratio(1, 2)
    }

    /// `exp(pi*i*r)` for rational `r` with `10 r` integral.
    pub fn exp_pi_i(r: &Rational) -> Result<Self, Error> {
        let t = r * Rational::from_integer(10.into());
        if !t.is_integer() {
            return Err(Error::Phase(format!("exp(pi i * {r}) is not a 20th root of unity")));
        }
        let k = t.to_integer().mod_floor(&BigInt::from(20)).to_i64().unwrap();
        Ok(Self::zeta20_pow(k))
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|x| x.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for x in self.num.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for x in &self.num {
            if !x.is_zero() {
                g = g.gcd(x);
                if g.is_one() {
                    return;
                }
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for x in self.num.iter_mut() {
                if !x.is_zero() {
                    *x /= &g;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|x| x.is_zero())
    }

    /// True when only the constant coordinate is nonzero.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Power-basis coordinate `k` (coefficient of `z^k`).
    pub fn coeff(&self, k: usize) -> Rational {
        Rational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..DEG).map(|k| self.coeff(k)).collect()
    }

    /// Common denominator of the coordinates.
    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn scale_int(&self, s: &BigInt) -> Self {
        let mut r = self.clone();
        for x in r.num.iter_mut() {
            *x *= s;
        }
        r.normalize();
        r
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut r = self.clone();
        for x in r.num.iter_mut() {
            *x *= s.numer();
        }
        r.den *= s.denom();
        r.normalize();
        r
    }

    pub fn scale_ratio(&self, p: i64, q: i64) -> Self {
        self.scale_rational(&Rational::new(p.into(), q.into()))
    }

    /// Add `other` without renormalizing; call [`FieldElement::finish`] afterwards.
    pub(crate) fn add_raw(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.den == other.den {
            for (a, b) in self.num.iter_mut().zip(other.num.iter()) {
                if !b.is_zero() {
                    *a += b;
                }
            }
            return;
        }
        let (q, r) = self.den.div_rem(&other.den);
        if r.is_zero() {
            for (a, b) in self.num.iter_mut().zip(other.num.iter()) {
                if !b.is_zero() {
                    *a += b * &q;
                }
            }
            return;
        }
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        for (a, b) in self.num.iter_mut().zip(other.num.iter()) {
            if !a.is_zero() {
                *a *= &fa;
            }
            if !b.is_zero() {
                *a += b * &fb;
            }
        }
        self.den = l;
    }

    pub(crate) fn finish(&mut self) {
        self.normalize();
    }

    /// Product without the final normalization.
    pub(crate) fn mul_raw(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let den = &self.den * &other.den;
        if other.is_rational() {
            let s = &other.num[0];
            let mut num = zero_num();
            for (k, x) in self.num.iter().enumerate() {
                if !x.is_zero() {
                    num[k] = x * s;
                }
            }
            return FieldElement { num, den };
        }
        if self.is_rational() {
            return other.mul_raw(self);
        }
        let mut c = vec![BigInt::zero(); 2 * DEG - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        reduce(&mut c);
        let mut num = zero_num();
        for (i, v) in c.into_iter().enumerate() {
            num[i] = v;
        }
        FieldElement { num, den }
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let r = Rational::new(self.den.clone(), self.num[0].clone());
            return Ok(Self::from_rational(&r));
        }
        let a: Vec<Rational> = self.coords();
        let phi: Vec<Rational> = [1, 0, -1, 0, 1, 0, -1, 0, 1]
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        let s = poly_inverse_mod(&a, &phi);
        Ok(Self::from_coords(&s))
    }

    pub fn conj_complex(&self) -> Complex64 {
        self.to_complex().conj()
    }

    /// Numeric image under `z -> exp(pi*i/10)`.
    pub fn to_complex(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let v = x.to_f64().unwrap_or(f64::NAN) / den;
            acc += Complex64::from_polar(v, std::f64::consts::PI * k as f64 / 10.0);
        }
        acc
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map_or(false, |x| x.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &c * bk;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
        if r.len() < b.len() {
            break;
        }
    }
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(&mut c);
    c
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut c = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        c[i] -= x;
    }
    trim(&mut c);
    c
}

/// Inverse of `a` modulo the irreducible `m`.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant
    let c = r0[0].clone();
    let (_, s) = poly_divrem(&s0, m);
    let mut out: Vec<Rational> = s.into_iter().map(|x| x / &c).collect();
    out.resize(DEG, Rational::zero());
    out
}

/// Named constants of the field.
pub fn field_constant(name: &str) -> Result<FieldElement, Error> {
    Ok(match name {
        "i" => FieldElement::i(),
        "sqrt5" => FieldElement::sqrt5(),
        "zeta5" => FieldElement::zeta5(),
        "zeta10" => FieldElement::zeta10(),
        "zeta20" => FieldElement::zeta20_pow(1),
        "alpha" => FieldElement::alpha(),
        "beta" => FieldElement::beta(),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

fn rational_nth_root(r: &Rational, n: u32) -> Option<Rational> {
    if r.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return rational_nth_root(&-r, n).map(|x| -x);
    }
    let p = r.numer().nth_root(n);
    let q = r.denom().nth_root(n);
    if num_traits::pow(p.clone(), n as usize) == *r.numer()
        && num_traits::pow(q.clone(), n as usize) == *r.denom()
    {
        Some(Rational::new(p, q))
    } else {
        None
    }
}

/// An `n`-th root of `a` in `F`, if one is found among `s * z^j * sqrt5^e`
/// with `s` rational. Among the roots found, the one nearest the principal
/// complex root is returned.
pub fn nth_root_in_field(a: &FieldElement, n: u32) -> Option<FieldElement> {
    assert!(n >= 1);
    if n == 1 {
        return Some(a.clone());
    }
    if a.is_zero() {
        return Some(FieldElement::zero());
    }
    if let Some(r) = a.as_rational() {
        if r.is_positive() {
            if let Some(s) = rational_nth_root(&r, n) {
                return Some(FieldElement::from_rational(&s));
            }
        }
    }
    let target = {
        let c = a.to_complex();
        Complex64::from_polar(c.norm().powf(1.0 / n as f64), c.arg() / n as f64)
    };
    let s5 = FieldElement::sqrt5();
    let mut best: Option<(f64, FieldElement)> = None;
    for e in 0..2 {
        for j in 0..20 {
            let mut u = FieldElement::zeta20_pow(j);
            if e == 1 {
                u = &u * &s5;
            }
            let un = u.pow(n as i64).ok()?;
            let b = a / &un;
            let Some(r) = b.as_rational() else { continue };
            let Some(s) = rational_nth_root(&r, n) else { continue };
            let x = &FieldElement::from_rational(&s) * &u;
            let d = (x.to_complex() - target).norm();
            if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                best = Some((d, x));
            }
        }
    }
    best.map(|(_, x)| x)
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<&Rational> for FieldElement {
    fn from(r: &Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let mut r = self.clone();
        r.add_raw(rhs);
        r.normalize();
        r
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut r = self.mul_raw(rhs);
        r.normalize();
        r
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero; use [`FieldElement::inv`] for a checked form.
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero in F")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let mut r = self.clone();
        for x in r.num.iter_mut() {
            if !x.is_zero() {
                *x = -std::mem::take(x);
            }
        }
        r
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: FieldElement) -> FieldElement {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: &FieldElement) -> FieldElement {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.add_raw(rhs);
        self.normalize();
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.add_raw(&-rhs);
        self.normalize();
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for FieldElement {
    /// `c0 + c1*z + ... + c7*z^7`, zero coordinates omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in 0..DEG {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> FieldElement {
        FieldElement::zeta20_pow(k)
    }

    #[test]
    fn i_squared() {
        let i = field_constant("i").unwrap();
        assert_eq!(&i * &i, FieldElement::from_int(-1));
    }

    #[test]
    fn zeta4_squared_reduces() {
        // x^8 -> x^6 - x^4 + x^2 - 1
        let expect = FieldElement::from_coords(
            &[-1, 0, 1, 0, -1, 0, 1, 0].map(|v| Rational::from_integer(v.into())),
        );
        assert_eq!(&z(4) * &z(4), expect);
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = FieldElement::sqrt5();
        assert_eq!(&s * &s, FieldElement::from_int(5));
        assert!((s.to_complex().re - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn golden_relations() {
        let a = FieldElement::alpha();
        let b = FieldElement::beta();
        assert_eq!(&a * &a, &a + &FieldElement::one());
        assert_eq!(&a * &b, FieldElement::from_int(-1));
        assert_eq!(&a + &b, FieldElement::one());
    }

    #[test]
    fn alpha5_minus_beta5() {
        // binomial expansion: ((1+s)^5 - (1-s)^5)/32 = (10 s + 20 s^3 + 2 s^5)/32 with s^2 = 5
        let a5 = FieldElement::alpha().pow(5).unwrap();
        let b5 = FieldElement::beta().pow(5).unwrap();
        let s = FieldElement::sqrt5();
        let oracle = s.scale_ratio(10 + 20 * 5 + 2 * 25, 32);
        assert_eq!(&a5 - &b5, oracle);
        assert_eq!(oracle, s.scale_ratio(5, 1));
    }

    #[test]
    fn cyclotomic_polynomial_vanishes() {
        let v = &(&(&(&z(8) - &z(6)) + &z(4)) - &z(2)) + &FieldElement::one();
        assert!(v.is_zero());
        assert!(z(20).is_one());
        assert_eq!(z(5), FieldElement::i());
        assert_eq!(z(10), FieldElement::from_int(-1));
        assert_eq!(z(1).pow(20).unwrap(), FieldElement::one());
        assert_eq!(z(1).pow(4).unwrap(), FieldElement::zeta5());
        assert_eq!(z(1).pow(10).unwrap(), FieldElement::from_int(-1));
    }

    #[test]
    fn zeta5_is_fifth_root_of_unity() {
        assert!(FieldElement::zeta5().pow(5).unwrap().is_one());
    }

    #[test]
    fn unknown_constant() {
        assert!(field_constant("pi").is_err());
    }

    #[test]
    fn division() {
        let x = &z(3) + &FieldElement::from_ratio(2, 7);
        assert!((&x / &x).is_one());
        assert!(FieldElement::zero().inv().is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(nth_root_in_field(&FieldElement::one(), 5), Some(FieldElement::one()));
        assert_eq!(nth_root_in_field(&FieldElement::from_int(-1), 2), Some(FieldElement::i()));
        assert_eq!(nth_root_in_field(&FieldElement::from_int(5), 2), Some(FieldElement::sqrt5()));
        assert_eq!(
            nth_root_in_field(&FieldElement::from_ratio(32, 243), 5),
            Some(FieldElement::from_ratio(2, 3))
        );
        assert_eq!(nth_root_in_field(&FieldElement::from_int(2), 2), None);
    }

    #[test]
    fn exp_pi_i_values() {
        let r = |p: i64, q: i64| Rational::new(p.into(), q.into());
        assert_eq!(FieldElement::exp_pi_i(&r(1, 2)).unwrap(), FieldElement::i());
        assert_eq!(FieldElement::exp_pi_i(&r(2, 5)).unwrap(), FieldElement::zeta5());
        assert!(FieldElement::exp_pi_i(&r(1, 40)).is_err());
    }

    #[test]
    fn complex_image() {
        let w = z(1).to_complex();
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..20 {
            p *= w;
        }
        assert!((p - Complex64::new(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn display_format() {
        assert_eq!(FieldElement::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(FieldElement::i().to_string(), "1*z^5");
    }
}
