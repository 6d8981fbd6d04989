//! q-Pochhammer products, fractional eta powers, Ramanujan's theta function
//! `f(a, b)`, theta constants with characteristics and the Jacobi thetas.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::exactfield::{FieldElement, Rational};
use crate::qseries::{Exponent, QSeries};
use crate::{Error, Result};

/// `(z q^a; q^b)_inf`.
#[derive(Debug, Clone)]
pub struct PochhammerSpec {
    pub z: FieldElement,
    pub a: Exponent,
    pub b: Exponent,
}

impl PochhammerSpec {
    pub fn new(z: FieldElement, a: Exponent, b: Exponent) -> Self {
        PochhammerSpec { z, a, b }
    }

    /// `(q^a; q^b)_inf` with integer exponents.
    pub fn int(a: i64, b: i64) -> Self {
        Self::new(FieldElement::one(), a.into(), b.into())
    }
}

fn lcm_grid(es: &[Exponent]) -> i64 {
    es.iter().fold(1i64, |g, e| g.lcm(e.denom()))
}

fn to_idx(e: Exponent, grid: i64) -> i64 {
    (e * Rational64::from_integer(grid)).to_integer()
}

/// Truncated product `prod_(k>=0) (1 - z q^(a+kb))`, exponents below `order`.
pub fn pochhammer_inf(spec: &PochhammerSpec, order: i64) -> Result<QSeries> {
    pochhammer_twisted(spec, &FieldElement::one(), order)
}

/// `prod_(k>=0) (1 - z w^k q^(a+kb))`: the base carries a coefficient `w`.
fn pochhammer_twisted(spec: &PochhammerSpec, w: &FieldElement, order: i64) -> Result<QSeries> {
    if !spec.b.is_positive() || spec.a.is_negative() || (spec.a.is_zero() && spec.z.is_one()) {
        return Err(Error::Divergent(format!(
            "(z q^{}; q^{})_inf with z = {}",
            spec.a, spec.b, spec.z
        )));
    }
    let grid = lcm_grid(&[spec.a, spec.b]);
    let n = (order.max(0) * grid) as usize;
    let mut c = vec![FieldElement::zero(); n];
    if n == 0 {
        return Ok(QSeries::new(grid, 0, c));
    }
    c[0] = FieldElement::one();
    let (a, b) = (to_idx(spec.a, grid), to_idx(spec.b, grid));
    let mut e = a;
    let mut top = 1usize;
    let mut z = spec.z.clone();
    while (e as usize) < n {
        let e_u = e as usize;
        let new_top = (top + e_u).min(n);
        for j in (e_u..new_top).rev() {
            if c[j - e_u].is_zero() {
                continue;
            }
            let t = if z.is_one() { c[j - e_u].clone() } else { &c[j - e_u] * &z };
            c[j] -= &t;
        }
        top = new_top;
        e += b;
        if !w.is_one() {
            z = &z * w;
        }
    }
    Ok(QSeries::new(grid, 0, c))
}

/// `(q; q)_inf` on the integer grid.
pub fn euler(order: i64) -> QSeries {
    pochhammer_inf(&PochhammerSpec::int(1, 1), order).expect("convergent")
}

/// `(q^scale; q^scale)_inf^(num/den)`, exponents below `order`.
pub fn eta_power(num: i64, den: u32, scale: i64, order: i64) -> Result<QSeries> {
    assert!(scale >= 1 && den >= 1);
    let inner = (order + scale - 1) / scale;
    let e = euler(inner.max(0));
    let p = if den == 1 { e.pow(num)? } else { e.pow_ratio(num, den)? };
    Ok(p.subs_power(scale).truncate_int(order))
}

/// Ramanujan's `f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2)` with monomial
/// arguments `a = a_coeff q^a_exp`, `b = b_coeff q^b_exp`.
pub fn ramanujan_f(
    a_coeff: &FieldElement,
    a_exp: Exponent,
    b_coeff: &FieldElement,
    b_exp: Exponent,
    order: i64,
) -> Result<QSeries> {
    if !(a_exp + b_exp).is_positive() {
        return Err(Error::Divergent(format!("f(a, b) with exponents {a_exp}, {b_exp}")));
    }
    let grid = lcm_grid(&[a_exp, b_exp]);
    let ai = to_idx(a_exp, grid);
    let bi = to_idx(b_exp, grid);
    // grid index of the n-th term
    let expo = |n: i64| ai * (n * (n + 1) / 2) + bi * (n * (n - 1) / 2);
    let top = order * grid;
    let mut terms: Vec<(i64, FieldElement)> = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            let e = expo(n);
            // exponent is convex in n; stop once past the vertex and beyond the order
            let next = expo(n + dir);
            if e >= top && next >= e {
                break;
            }
            if e < top {
                let ca = a_coeff.pow(n * (n + 1) / 2)?;
                let cb = b_coeff.pow(n * (n - 1) / 2)?;
                terms.push((e, &ca * &cb));
            }
            n += dir;
        }
    }
    let val = terms.iter().map(|t| t.0).min().unwrap_or(0).min(top);
    let mut c = vec![FieldElement::zero(); (top - val).max(0) as usize];
    for (e, x) in terms {
        c[(e - val) as usize] += &x;
    }
    Ok(QSeries::new(grid, val, c))
}

/// `f(a, b)` through the Jacobi triple product `(-a; ab)(-b; ab)(ab; ab)`.
pub fn ramanujan_f_product(
    a_coeff: &FieldElement,
    a_exp: Exponent,
    b_coeff: &FieldElement,
    b_exp: Exponent,
    order: i64,
) -> Result<QSeries> {
    let ab = a_coeff * b_coeff;
    let s = a_exp + b_exp;
    let p1 = pochhammer_twisted(&PochhammerSpec::new(-a_coeff, a_exp, s), &ab, order)?;
    let p2 = pochhammer_twisted(&PochhammerSpec::new(-b_coeff, b_exp, s), &ab, order)?;
    let p3 = pochhammer_twisted(&PochhammerSpec::new(ab.clone(), s, s), &ab, order)?;
    Ok(&(&p1 * &p2) * &p3)
}

/// `exp(pi i e e'/2) sum_n exp(pi i n e') q^(scale (n + e/2)^2 / 2)`.
pub fn theta_char(eps: Rational64, eps_prime: Rational64, scale: i64, order: i64) -> Result<QSeries> {
    let r = |x: Rational64| Rational::new((*x.numer()).into(), (*x.denom()).into());
    let phase0 = FieldElement::exp_pi_i(&(r(eps) * r(eps_prime) / Rational::from_integer(2.into())))?;
    let step = FieldElement::exp_pi_i(&r(eps_prime))?;
    let half = Rational64::new(1, 2);
    let sc = Rational64::from_integer(scale);
    let expo = |n: i64| {
        let x = Rational64::from_integer(n) + eps * half;
        x * x * half * sc
    };
    let ord = Rational64::from_integer(order);
    let mut terms: Vec<(Rational64, i64)> = Vec::new();
    let center = -(eps * half).round().to_integer();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { center } else { center - 1 };
        while expo(n) < ord || expo(n + dir) < expo(n) {
            if expo(n) < ord {
                terms.push((expo(n), n));
            }
            n += dir;
        }
    }
    let grid = terms.iter().fold(ord.denom().to_owned(), |g, t| g.lcm(t.0.denom()));
    let top = order * grid;
    let val = terms.iter().map(|t| to_idx(t.0, grid)).min().unwrap_or(0).min(top);
    let mut c = vec![FieldElement::zero(); (top - val) as usize];
    for (e, n) in terms {
        let w = &phase0 * &step.pow(n)?;
        c[(to_idx(e, grid) - val) as usize] += &w;
    }
    Ok(QSeries::new(grid, val, c))
}

/// `(theta_2, theta_3, theta_4)`; `theta_2` lives on grid 4.
pub fn jacobi_null_thetas(order: i64) -> (QSeries, QSeries, QSeries) {
    let one = FieldElement::one();
    let q = |e: i64| Rational64::from_integer(e);
    // theta_3 = f(q, q), theta_4 = f(-q, -q), theta_2 = 2 q^(1/4) f(q^2, 1)
    let t3 = ramanujan_f(&one, q(1), &one, q(1), order).expect("convergent");
    let t4 = ramanujan_f(&-&one, q(1), &-&one, q(1), order).expect("convergent");
    let t2 = theta_char(Rational64::from_integer(1), Rational64::zero(), 2, order)
        .expect("representable")
        .reduce_grid();
    (t2, t3, t4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::exp;
    use proptest::prelude::*;

    #[test]
    fn euler_pentagonal() {
        let e = euler(60);
        for n in 0..60i64 {
            let mut expect = 0i64;
            for k in -10i64..=10 {
                if k * (3 * k - 1) / 2 == n {
                    expect = if k % 2 == 0 { 1 } else { -1 };
                }
            }
            assert_eq!(e.rational_coeff(n), Rational::from_integer(expect.into()), "n = {n}");
        }
    }

    #[test]
    fn g_denominator_factors() {
        let a = pochhammer_inf(&PochhammerSpec::int(1, 5), 40).unwrap();
        let b = pochhammer_inf(&PochhammerSpec::int(4, 5), 40).unwrap();
        let mut prod = QSeries::one(40);
        for n in 0..40 {
            if n % 5 == 1 || n % 5 == 4 {
                let mut c = vec![0i64; 40];
                c[0] = 1;
                c[n] = -1;
                prod = &prod * &QSeries::from_ints(1, 0, &c);
            }
        }
        assert!((&a * &b).compare_int(&prod, 40).is_equal());
    }

    #[test]
    fn order_zero_and_divergent() {
        let p = pochhammer_inf(&PochhammerSpec::int(1, 1), 0).unwrap();
        assert_eq!(p.known_len(), 0);
        assert!(pochhammer_inf(&PochhammerSpec::int(0, 1), 5).is_err());
        assert!(pochhammer_inf(&PochhammerSpec::int(1, 0), 5).is_err());
    }

    #[test]
    fn euler_cubed_jacobi() {
        let c = eta_power(3, 1, 1, 80).unwrap();
        let mut expect = vec![0i64; 80];
        for mu in 0..20i64 {
            let e = mu * (mu + 1) / 2;
            if e < 80 {
                expect[e as usize] += if mu % 2 == 0 { 2 * mu + 1 } else { -(2 * mu + 1) };
            }
        }
        assert!(c.compare_int(&QSeries::from_ints(1, 0, &expect), 80).is_equal());
    }

    #[test]
    fn fractional_eta_power_consistent() {
        let r = eta_power(-3, 5, 1, 40).unwrap();
        assert!(r.pow(5).unwrap().compare_int(&eta_power(-3, 1, 1, 40).unwrap(), 40).is_equal());
    }

    #[test]
    fn delta_head() {
        let d = eta_power(24, 1, 1, 5).unwrap().shift_int(1);
        let t: Vec<i64> = [1, 2, 3, 4].iter().map(|&n| {
            let r = d.rational_coeff(n);
            i64::try_from(r.to_integer()).unwrap()
        }).collect();
        assert_eq!(t, vec![1, -24, 252, -1472]);
    }

    #[test]
    fn b_numerator() {
        let m1 = -FieldElement::one();
        let f = ramanujan_f(&m1, exp(2, 1), &m1, exp(3, 1), 60).unwrap();
        let mut expect = vec![0i64; 60];
        for n in -10i64..=10 {
            let e = (5 * n * n - n) / 2;
            if (0..60).contains(&e) {
                expect[e as usize] += if n % 2 == 0 { 1 } else { -1 };
            }
        }
        assert!(f.compare_int(&QSeries::from_ints(1, 0, &expect), 60).is_equal());
    }

    #[test]
    fn symmetric_half_exponents() {
        let one = FieldElement::one();
        let f = ramanujan_f(&one, exp(1, 2), &one, exp(1, 2), 5).unwrap();
        assert_eq!(f.grid(), 2);
        assert_eq!(f.coeff(exp(0, 1)).unwrap(), FieldElement::one());
        assert_eq!(f.coeff(exp(1, 2)).unwrap(), FieldElement::from_int(2));
        assert_eq!(f.coeff(exp(2, 1)).unwrap(), FieldElement::from_int(2));
        assert_eq!(f.coeff(exp(1, 1)).unwrap(), FieldElement::zero());
        assert!(ramanujan_f(&one, exp(1, 1), &one, exp(-1, 1), 5).is_err());
    }

    #[test]
    fn theta3_classical() {
        let t = theta_char(Rational64::zero(), Rational64::zero(), 1, 30).unwrap().reduce_grid();
        let (_, t3, _) = jacobi_null_thetas(15);
        // scale 1 gives theta_3(q^(1/2))
        assert!(t.compare(&t3.refine(2), exp(15, 2)).is_equal());
        assert!(theta_char(exp(1, 40), exp(1, 1), 1, 5).is_err());
    }

    #[test]
    fn jacobi_quartic() {
        let (t2, t3, t4) = jacobi_null_thetas(100);
        let l = t3.pow(4).unwrap();
        let r = &t4.pow(4).unwrap() + &t2.pow(4).unwrap();
        assert!(l.compare_int(&r, 100).is_equal());
        assert_eq!(t2.grid(), 4);
        assert!(t3.twist(0).is_ok());
        // theta_4(q) = theta_3(-q)
        let neg: Vec<FieldElement> = t3.coeffs().iter().enumerate()
            .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() }).collect();
        assert_eq!(QSeries::new(1, 0, neg), t4);
    }

    #[test]
    fn pochhammer_factorization() {
        let full = euler(60);
        let mut prod = QSeries::one(60);
        for r in 1..=5 {
            prod = &prod * &pochhammer_inf(&PochhammerSpec::int(r, 5), 60).unwrap();
        }
        assert!(full.compare_int(&prod, 60).is_equal());
    }

    fn arb_monomial_pair() -> impl Strategy<Value = (i64, i64, i64, i64)> {
        (1i64..6, 1i64..6, 0i64..20, 0i64..20)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn triple_product(spec in arb_monomial_pair()) {
            let (ea, eb, ja, jb) = spec;
            let za = FieldElement::zeta20_pow(ja);
            let zb = FieldElement::zeta20_pow(jb);
            let s = ramanujan_f(&za, ea.into(), &zb, eb.into(), 100).unwrap();
            let p = ramanujan_f_product(&za, ea.into(), &zb, eb.into(), 100).unwrap();
            prop_assert!(s.compare_int(&p, 100).is_equal());
        }
    }
}
