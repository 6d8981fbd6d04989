//! The quintic theta functions `A, B, C, D`, the Rogers-Ramanujan functions
//! `G, H` and the continued fraction `R = A/B`.
//!
//! `A` and `B` carry `q^(1/5)` (grid 5); `C` and `D` live on the integer grid.

use std::collections::HashMap;

use num_rational::Rational64;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::exactfield::{FieldElement, Rational};
use crate::products::{eta_power, euler, pochhammer_inf, ramanujan_f, PochhammerSpec};
use crate::qseries::{exp, QSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    A,
    B,
    C,
    D,
}

impl Which {
    pub const ALL: [Which; 4] = [Which::A, Which::B, Which::C, Which::D];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// Theta sum over an eta power.
    Sum,
    /// Infinite product.
    Product,
    /// `B(q^5) - alpha A(q^5)` and `B(q^5) - beta A(q^5)`; `C` and `D` only.
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RogersRamanujan {
    G,
    H,
}

type Key = (Which, Form, i64);
static CACHE: Lazy<RwLock<HashMap<Key, QSeries>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn poch(a: i64, b: i64, order: i64) -> QSeries {
    pochhammer_inf(&PochhammerSpec::int(a, b), order).expect("convergent")
}

/// Lift an integer-grid series `X` to `q^(1/5) X` on grid 5.
fn fifth_shift(x: &QSeries, order: i64) -> QSeries {
    x.regrid(5).shift(exp(1, 5)).truncate_int(order)
}

/// `prod_(n>=1) (1 + c q^n + q^(2n))` with `c = 2 cos(pi r)`, via
/// `(-e^(pi i r) q; q)(-e^(-pi i r) q; q)`.
pub fn quadratic_product(r: Rational64, order: i64) -> Result<QSeries> {
    let rr = Rational::new((*r.numer()).into(), (*r.denom()).into());
    let w = FieldElement::exp_pi_i(&rr)?;
    let wc = FieldElement::exp_pi_i(&-rr)?;
    let p1 = pochhammer_inf(&PochhammerSpec::new(-w, 1.into(), 1.into()), order)?;
    let p2 = pochhammer_inf(&PochhammerSpec::new(-wc, 1.into(), 1.into()), order)?;
    Ok(&p1 * &p2)
}

/// `prod (1 + beta q^n + q^(2n))`.
pub fn beta_product(order: i64) -> QSeries {
    quadratic_product(exp(3, 5), order).expect("phase in field")
}

/// `prod (1 + alpha q^n + q^(2n))`.
pub fn alpha_product(order: i64) -> QSeries {
    quadratic_product(exp(1, 5), order).expect("phase in field")
}

fn build(which: Which, form: Form, order: i64) -> Result<QSeries> {
    let m1 = -FieldElement::one();
    match (which, form) {
        (Which::A, Form::Sum) => {
            let num = ramanujan_f(&m1, 1.into(), &m1, 4.into(), order)?;
            Ok(fifth_shift(&(&num * &eta_power(-3, 5, 1, order)?), order))
        }
        (Which::B, Form::Sum) => {
            let num = ramanujan_f(&m1, 2.into(), &m1, 3.into(), order)?;
            Ok(&num * &eta_power(-3, 5, 1, order)?)
        }
        (Which::A, Form::Product) => {
            let den = &poch(2, 5, order) * &poch(3, 5, order);
            let x = &eta_power(2, 5, 1, order)? * &den.inverse()?;
            Ok(fifth_shift(&x, order))
        }
        (Which::B, Form::Product) => {
            let den = &poch(1, 5, order) * &poch(4, 5, order);
            Ok(&eta_power(2, 5, 1, order)? * &den.inverse()?)
        }
        (Which::C | Which::D, Form::Sum) => {
            let r = if which == Which::C { exp(3, 5) } else { exp(1, 5) };
            let rr = Rational::new((*r.numer()).into(), (*r.denom()).into());
            let x = FieldElement::exp_pi_i(&rr)?;
            // sum_n x^n q^(n(n-1)/2) = f(x, q/x)
            let s = ramanujan_f(&x, 0.into(), &x.inv()?, 1.into(), order)?;
            let norm = (FieldElement::one() + x).inv()?;
            Ok((&s * &eta_power(-3, 5, 5, order)?).scale(&norm))
        }
        (Which::C | Which::D, Form::Product) => {
            let quad = if which == Which::C { beta_product(order) } else { alpha_product(order) };
            Ok(&(&euler(order) * &eta_power(-3, 5, 5, order)?) * &quad)
        }
        (Which::C | Which::D, Form::Linear) => {
            let c = if which == Which::C { FieldElement::alpha() } else { FieldElement::beta() };
            let inner = (order + 4) / 5;
            let a5 = theta(Which::A, inner)?.subs_power(5);
            let b5 = theta(Which::B, inner)?.subs_power(5);
            Ok((&b5 - &a5.scale(&c)).reduce_grid().truncate_int(order))
        }
        (Which::A | Which::B, Form::Linear) => Err(Error::Precondition(
            "the linear form exists only for C and D".into(),
        )),
    }
}

/// `which` in the requested form, exponents below `order`.
pub fn theta_series(which: Which, form: Form, order: i64) -> Result<QSeries> {
    let key = (which, form, order);
    if let Some(s) = CACHE.read().get(&key) {
        return Ok(s.clone());
    }
    let s = build(which, form, order)?;
    CACHE.write().insert(key, s.clone());
    Ok(s)
}

/// Default constructors: products for `A, B`, linear forms for `C, D`.
pub fn theta(which: Which, order: i64) -> Result<QSeries> {
    match which {
        Which::A | Which::B => theta_series(which, Form::Product, order),
        Which::C | Which::D => theta_series(which, Form::Linear, order),
    }
}

pub fn a(order: i64) -> QSeries {
    theta(Which::A, order).expect("A")
}

pub fn b(order: i64) -> QSeries {
    theta(Which::B, order).expect("B")
}

pub fn c(order: i64) -> QSeries {
    theta(Which::C, order).expect("C")
}

pub fn d(order: i64) -> QSeries {
    theta(Which::D, order).expect("D")
}

static POW5: Lazy<RwLock<HashMap<(bool, i64), QSeries>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `q^e (q;q)^2 / ((q^r;q^5)(q^s;q^5))^5` on the integer grid.
fn fifth_power(is_a: bool, order: i64) -> QSeries {
    if let Some(s) = POW5.read().get(&(is_a, order)) {
        return s.clone();
    }
    let (r, s, e) = if is_a { (2, 3, 1) } else { (1, 4, 0) };
    let den = (&poch(r, 5, order) * &poch(s, 5, order)).pow(5).expect("pow");
    let x = &eta_power(2, 1, 1, order).expect("eta") * &den.inverse().expect("unit");
    let x = x.shift_int(e).truncate_int(order);
    POW5.write().insert((is_a, order), x.clone());
    x
}

/// `A^5`, on the integer grid.
pub fn a5(order: i64) -> QSeries {
    fifth_power(true, order)
}

/// `B^5`, on the integer grid.
pub fn b5(order: i64) -> QSeries {
    fifth_power(false, order)
}

pub fn rogers_ramanujan(which: RogersRamanujan, form: Form, order: i64) -> Result<QSeries> {
    match form {
        Form::Sum => {
            let shift = if which == RogersRamanujan::H { 1 } else { 0 };
            // running 1/(q;q)_n
            let mut inv = QSeries::one(order);
            let mut acc = QSeries::zero(order);
            let mut n = 0i64;
            while n * n + shift * n < order {
                if n > 0 {
                    let mut f = vec![FieldElement::zero(); order as usize];
                    f[0] = FieldElement::one();
                    if (n as usize) < f.len() {
                        f[n as usize] = -FieldElement::one();
                    }
                    inv = &inv * &QSeries::new(1, 0, f).inverse()?;
                }
                acc = &acc + &inv.shift_int(n * n + shift * n).truncate_int(order);
                n += 1;
            }
            Ok(acc)
        }
        Form::Product => {
            let (r, s) = if which == RogersRamanujan::G { (1, 4) } else { (2, 3) };
            (&poch(r, 5, order) * &poch(s, 5, order)).inverse()
        }
        Form::Linear => Err(Error::Precondition("G and H have no linear form".into())),
    }
}

/// `R = q^(1/5) (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5))`, on grid 5.
pub fn rr_continued_fraction(order: i64) -> QSeries {
    let num = &poch(1, 5, order) * &poch(4, 5, order);
    let den = &poch(2, 5, order) * &poch(3, 5, order);
    fifth_shift(&(&num * &den.inverse().expect("unit")), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_leading_term() {
        let s = a(20);
        let (e, c) = s.leading().unwrap();
        assert_eq!(e, exp(1, 5));
        assert!(c.is_one());
        assert_eq!(s.grid(), 5);
    }

    #[test]
    fn sum_equals_product() {
        for w in Which::ALL {
            let s = theta_series(w, Form::Sum, 60).unwrap();
            let p = theta_series(w, Form::Product, 60).unwrap();
            assert!(s.compare_int(&p, 60).is_equal(), "{w:?}");
        }
        for w in [Which::C, Which::D] {
            let s = theta_series(w, Form::Sum, 60).unwrap();
            let l = theta_series(w, Form::Linear, 60).unwrap();
            assert!(s.compare_int(&l, 60).is_equal(), "{w:?}");
        }
        assert!(theta_series(Which::A, Form::Linear, 10).is_err());
    }

    #[test]
    fn quadratic_products_telescope() {
        let lhs = &alpha_product(50) * &beta_product(50);
        let rhs = &poch(5, 5, 50) * &euler(50).inverse().unwrap();
        assert!(lhs.compare_int(&rhs, 50).is_equal());
    }

    #[test]
    fn rogers_ramanujan_head() {
        let g = rogers_ramanujan(RogersRamanujan::G, Form::Sum, 12).unwrap();
        // oracle: partitions into parts congruent to 1, 4 mod 5
        let mut p = vec![0i64; 12];
        p[0] = 1;
        for part in (1..12).filter(|k| k % 5 == 1 || k % 5 == 4) {
            for n in part..12 {
                p[n] += p[n - part];
            }
        }
        assert!(g.compare_int(&QSeries::from_ints(1, 0, &p), 12).is_equal());
        assert_eq!(&p[..7], &[1, 1, 1, 1, 2, 2, 3]);
        for w in [RogersRamanujan::G, RogersRamanujan::H] {
            let s = rogers_ramanujan(w, Form::Sum, 40).unwrap();
            let r = rogers_ramanujan(w, Form::Product, 40).unwrap();
            assert!(s.compare_int(&r, 40).is_equal());
        }
    }

    #[test]
    fn g_and_h_against_a_and_b() {
        let e = eta_power(2, 5, 1, 40).unwrap();
        let g = rogers_ramanujan(RogersRamanujan::G, Form::Sum, 40).unwrap();
        let h = rogers_ramanujan(RogersRamanujan::H, Form::Sum, 40).unwrap();
        assert!((&g * &e).compare_int(&b(40), 40).is_equal());
        assert!((&(&h * &e).regrid(5).shift(exp(1, 5))).compare_int(&a(40), 40).is_equal());
    }

    #[test]
    fn fifth_powers_match_grid_five_powers() {
        let a = a(30).pow(5).unwrap().reduce_grid();
        let b = b(30).pow(5).unwrap().reduce_grid();
        assert_eq!(a5(30).grid(), 1);
        assert!(a5(30).compare_int(&a, 30).is_equal());
        assert!(b5(30).compare_int(&b, 30).is_equal());
    }

    #[test]
    fn continued_fraction_quotient() {
        let r = rr_continued_fraction(40);
        assert_eq!(r.leading().unwrap().0, exp(1, 5));
        let q = &a(40) * &b(40).inverse().unwrap();
        assert!(q.compare_int(&r, 40).is_equal());
    }
}
