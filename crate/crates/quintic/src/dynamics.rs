//! Differential equations satisfied by the quintic thetas: the system for
//! `A, B, E_2(q^5)`, the six-function system for `t_1..t_6`, the logarithmic
//! derivative forms of `E_2`, and Kaneko's equation with its polynomial
//! solutions.
//!
//! `theta` below always means `q d/dq`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::eisenstein::{eisenstein_level1, t_series};
use crate::exactfield::FieldElement;
use crate::pentops::{HomPoly, MixedPoly};
use crate::qseries::QSeries;
use crate::quintic::{a, a5, b, b5};
use crate::report::{errored, summarize, Check, IdentityReport};
use crate::tables;
use crate::{Error, Result};

fn r(p: i64, q: i64) -> FieldElement {
    FieldElement::from_ratio(p, q)
}

/// `sum c_k A^(5k) B^(5(d-k))` with rational coefficients.
fn hom(c: &[(i64, i64)], order: i64) -> QSeries {
    HomPoly::from_ratios(c).to_series(order)
}

/// `E_2(q^5)` below `q^order`.
pub fn p_series(order: i64) -> QSeries {
    eisenstein_level1(2, (order + 4) / 5 + 1).expect("weight 2").subs_power(5).truncate_int(order)
}

/// Right side of the `A` equation with the coefficient of `A^5 B^5` as a
/// parameter (66 in the true equation).
fn a_rhs(mid: i64, order: i64) -> QSeries {
    let poly = hom(&[(7, 1), (-mid, 1), (-5, 1)], order);
    let inner = &poly + &p_series(order).scale_int(5);
    (&a(order) * &inner.regrid(5)).scale_ratio(1, 60).truncate_int(order)
}

/// The system for `A, B` and `P = E_2(q^5)`.
pub fn verify_quintic_ode(order: i64) -> IdentityReport {
    verify_quintic_ode_with(66, order)
}

pub fn verify_quintic_ode_with(mid: i64, order: i64) -> IdentityReport {
    let (av, bv, p) = (a(order), b(order), p_series(order));
    let b_inner = &hom(&[(-5, 1), (66, 1), (7, 1)], order) + &p.scale_int(5);
    let b_rhs = (&bv * &b_inner.regrid(5)).scale_ratio(1, 60).truncate_int(order);
    let e4_q5 = HomPoly::from_ints(&tables::E4_Q5_VECTOR).to_series(order);
    let p_rhs = (&(&p * &p) - &e4_q5).scale_ratio(5, 12).truncate_int(order);
    let e2 = eisenstein_level1(2, order).expect("E2");
    let e4 = eisenstein_level1(4, order).expect("E4");
    let ram = (&(&e2 * &e2) - &e4).scale_ratio(1, 12).truncate_int(order);
    let e4_5 = eisenstein_level1(4, (order + 4) / 5 + 1).expect("E4").subs_power(5);
    summarize(
        "quintic-ode",
        "q d/dq of A, B and E2(q^5)",
        order,
        &[
            Check::series_int("A equation", &av.theta_derivative(), &a_rhs(mid, order), order),
            Check::series_int("B equation", &bv.theta_derivative(), &b_rhs, order),
            Check::series_int("P equation", &p.theta_derivative(), &p_rhs, order),
            Check::series_int("E2 equation", &e2.theta_derivative(), &ram, order),
            Check::series_int("bracket is E4(q^5)", &e4_q5, &e4_5, order),
        ],
    )
}

/// The right sides of the six-function system.
pub fn t_system_rhs(t: &[QSeries; 6], order: i64) -> [QSeries; 6] {
    let [t1, t2, t3, t4, t5, t6] = t;
    let m = |x: &QSeries, y: &QSeries| (x * y).truncate_int(order);
    let lin = |terms: &[(FieldElement, QSeries)]| {
        terms.iter().map(|(c, s)| s.scale(c)).reduce(|x, y| &x + &y).unwrap().truncate_int(order)
    };
    let one = FieldElement::one();
    let c = |n: i64| FieldElement::from_int(n);
    let t1p5t2 = t1 + &t2.scale_int(5);
    let t1pt2 = t1 + t2;
    let t1p3t2 = t1 + &t2.scale_int(3);
    let d1 = lin(&[
        (r(1, 2), m(&t1pt2, t3)),
        (r(1, 2), m(&t1p5t2, t4)),
        (r(-1, 2), t5.clone()),
        (r(-1, 2), t6.clone()),
    ]);
    let d2 = lin(&[
        (r(1, 10), m(&t1p5t2, t3)),
        (r(1, 2), m(&t1pt2, t4)),
        (r(-1, 10), t5.clone()),
        (r(-1, 2), t6.clone()),
    ]);
    let d3 = lin(&[
        (r(1, 2), m(t3, t3)),
        (one.clone(), m(t3, t4)),
        (r(5, 2), m(t4, t4)),
        (r(-1, 2), m(&t1p3t2, t5)),
        (r(-1, 2), m(&t1p5t2, t6)),
    ]);
    let d4 = lin(&[
        (r(1, 10), m(t3, t3)),
        (one.clone(), m(t3, t4)),
        (r(1, 2), m(t4, t4)),
        (r(-1, 10), m(&t1p5t2, t5)),
        (r(-1, 2), m(&t1p3t2, t6)),
    ]);
    let t2sq = m(t2, t2);
    let t1sq = m(t1, t1);
    let t1t2 = m(t1, t2);
    let u = &(t3 + t4) - &t2sq.scale_int(5);
    let v = &(t3 + &t4.scale_int(5)) + &t2sq.scale_int(25);
    let d5 = lin(&[
        (r(3, 2), m(&u, t5)),
        (r(-1, 2), m(&v, t6)),
        (r(-1, 2), m(&(&t5.scale_int(3) - t6), &t1sq)),
        (c(-1), m(&t1t2, &(&t5.scale_int(6) + &t6.scale_int(5)))),
    ]);
    let d6 = lin(&[
        (r(-1, 10), m(&v, t5)),
        (r(3, 2), m(&u, t6)),
        (r(1, 10), m(&(t5 - &t6.scale_int(15)), &t1sq)),
        (c(-1), m(&t1t2, &(t5 + &t6.scale_int(6)))),
    ]);
    [d1, d2, d3, d4, d5, d6]
}

fn t_all(order: i64) -> Result<[QSeries; 6]> {
    Ok([
        t_series(1, order)?,
        t_series(2, order)?,
        t_series(3, order)?,
        t_series(4, order)?,
        t_series(5, order)?,
        t_series(6, order)?,
    ])
}

/// The six equations `theta t_i = F_i(t_1..t_6)`.
pub fn verify_t_system(order: i64) -> IdentityReport {
    let name = "t-system";
    let anchor = "first-order system for t1..t6";
    let t = match t_all(order) {
        Ok(t) => t,
        Err(e) => return errored(name, anchor, order, &e),
    };
    let rhs = t_system_rhs(&t, order);
    let mut checks: Vec<Check> = (0..6)
        .map(|i| Check::series_int(format!("t{} equation", i + 1), &t[i].theta_derivative(), &rhs[i], order))
        .collect();
    // with the parameterizations, the t2 equation is -5 A^4 times the A equation
    let par = t_parameterizations(order);
    let rhs_par = t_system_rhs(&par, order);
    let a_eq = (&a(order).pow(4).expect("pow") * &a_rhs(66, order)).scale_int(-5).reduce_grid();
    checks.push(Check::series_int("t2 equation through A", &rhs_par[1], &a_eq, order));
    summarize(name, anchor, order, &checks)
}

/// `t_1..t_6` as polynomials in `A^5, B^5` and `E_2(q^5)`.
pub fn t_parameterizations(order: i64) -> [QSeries; 6] {
    let p = p_series(order);
    let t1 = hom(&[(1, 1), (2, 1)], order);
    let t2 = hom(&[(0, 1), (-1, 1)], order);
    let t3 = &hom(&[(-1, 24), (11, 4), (11, 24)], order) + &p.scale_ratio(25, 24);
    let t4 = &hom(&[(5, 24), (-11, 4), (-7, 24)], order) + &p.scale_ratio(-5, 24);
    let t5 = hom(&[(1, 1), (-33, 2), (119, 2), (11, 2)], order);
    let t6 = hom(&[(0, 1), (5, 2), (-55, 2), (-5, 2)], order);
    [t1, t2, t3, t4, t5, t6]
}

/// The Eisenstein definitions of `t_i` against their polynomial forms.
pub fn verify_t_parameterizations(order: i64) -> IdentityReport {
    let name = "t-parameterizations";
    let anchor = "t1..t6 in A^5, B^5 and E2(q^5)";
    let t = match t_all(order) {
        Ok(t) => t,
        Err(e) => return errored(name, anchor, order, &e),
    };
    let par = t_parameterizations(order);
    let checks: Vec<Check> =
        (0..6).map(|i| Check::series_int(format!("t{}", i + 1), &t[i], &par[i], order)).collect();
    summarize(name, anchor, order, &checks)
}

/// `E_2 = A^10 + 66 A^5 B^5 - 11 B^10 + 60 theta log A` and the `B` analogue.
pub fn verify_e2_forms(order: i64) -> IdentityReport {
    let e2 = eisenstein_level1(2, order).expect("E2");
    let (av, bv) = (a(order + 1), b(order + 1));
    let la = (&av.theta_derivative() * &av.inverse().expect("unit")).truncate_int(order);
    let lb = (&bv.theta_derivative() * &bv.inverse().expect("unit")).truncate_int(order);
    let fa = &hom(&[(-11, 1), (66, 1), (1, 1)], order).regrid(5) + &la.scale_int(60);
    let fb = &hom(&[(1, 1), (-66, 1), (-11, 1)], order).regrid(5) + &lb.scale_int(60);
    let diff = (&lb - &la).scale_int(60);
    let want = hom(&[(-12, 1), (132, 1), (12, 1)], order);
    summarize(
        "e2-log-derivative",
        "E2 through logarithmic derivatives of A and B",
        order,
        &[
            Check::series_int("A form", &fa, &e2, order),
            Check::series_int("B form", &fb, &e2, order),
            Check::series_int("difference", &diff, &want, order),
        ],
    )
}

/// Coefficients of `f_n(t) = B^(6n+1) (1 + sum a_k t^k)`, `t = A^5/B^5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KanekoSolution {
    pub n: u32,
    #[serde(serialize_with = "ser_rationals")]
    pub coeffs: Vec<BigRational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

/// Frobenius recurrence for `f_n`; fails when `n = 4 (mod 5)`, where a
/// denominator vanishes. The series is cut once two consecutive terms vanish.
pub fn kaneko_solution(n: u32) -> Result<KanekoSolution> {
    if n % 5 == 4 {
        return Err(Error::Precondition(format!("n = {n} = 4 (mod 5): the recurrence has a pole")));
    }
    let ni = n as i64;
    let mut a = vec![BigRational::one(), q(3 * ni * (6 * ni + 1), 4 - ni)];
    let cap = n as usize + 3;
    while a.len() < cap {
        let k = a.len() as i64;
        let den = k * (5 * k - ni - 1);
        let c1 = q(55 * k * k - 11 * k * (11 + 6 * ni) + 3 * (2 + ni) * (11 + 6 * ni), den);
        let c2 = q((-11 + 5 * k - 6 * ni) * (-2 + k - ni), den);
        let next = c1 * &a[a.len() - 1] + c2 * &a[a.len() - 2];
        a.push(next);
    }
    let tail_zero = a[n as usize + 1..].iter().all(|x| x.is_zero());
    if !tail_zero {
        return Err(Error::Precondition(format!("f_{n} does not terminate at degree {n}")));
    }
    a.truncate(n as usize + 1);
    while a.len() > 1 && a.last().map_or(false, |x| x.is_zero()) {
        a.pop();
    }
    Ok(KanekoSolution { n, coeffs: a })
}

/// All solutions `f_0..f_(n_max)` except the excluded `n = 4 (mod 5)`.
pub fn kaneko_polynomials(n_max: u32) -> Vec<KanekoSolution> {
    (0..=n_max).filter(|n| n % 5 != 4).map(|n| kaneko_solution(n).expect("terminates")).collect()
}

/// `f_n(t)` as a mixed polynomial `sum a_k A^(5k) B^(6n+1-5k)`.
fn kaneko_form(s: &KanekoSolution) -> MixedPoly {
    let deg = 6 * s.n as usize + 1;
    let mut c = vec![FieldElement::zero(); deg + 1];
    for (k, x) in s.coeffs.iter().enumerate() {
        c[5 * k] = FieldElement::from_rational(x);
    }
    MixedPoly::new(c)
}

/// Residual parts of `f'' - (n+1)/5 E2 f' + (n+1)(6n+1)/50 E2' f` with
/// `' = theta`: returns `(theta^2 f, (n+1)/5 E2 theta f - (n+1)(6n+1)/50 (theta E2) f)`.
fn kaneko_parts(f: &QSeries, n: u32, order: i64) -> (QSeries, QSeries) {
    let e2 = eisenstein_level1(2, order).expect("E2").regrid(5);
    let n = n as i64;
    let df = f.theta_derivative();
    let d2f = df.theta_derivative();
    let first = (&e2 * &df).scale_ratio(n + 1, 5);
    let second = (&e2.theta_derivative() * f).scale_ratio((n + 1) * (6 * n + 1), 50);
    (d2f.truncate_int(order), (&first - &second).truncate_int(order))
}

/// Kaneko's equation for `f = A, B` at `n = 0` and for `f_n` at `1 <= n`.
/// The derivative is fixed to `q d/dq`; with `d/dtau = 2 pi i q d/dq` the
/// two parts would have to vanish separately, which is reported as well.
pub fn verify_kaneko_ode(n: u32, order: i64) -> IdentityReport {
    let name = format!("kaneko-ode-{n}");
    let anchor = "modular differential equation of weight (6n+1)/5";
    let mut checks = Vec::new();
    let fs: Vec<(String, QSeries)> = if n == 0 {
        vec![("A".into(), a(order)), ("B".into(), b(order))]
    } else {
        match kaneko_solution(n) {
            Ok(s) => vec![(format!("f_{n}"), kaneko_form(&s).to_series(order))],
            Err(e) => return errored(&name, anchor, order, &e),
        }
    };
    for (label, f) in &fs {
        let (x, y) = kaneko_parts(f, n, order);
        checks.push(Check::series_int(format!("{label}, q d/dq"), &x, &y, order));
    }
    let (x, _) = kaneko_parts(&fs[0].1, n, order);
    let separate = x.is_zero_to_bound();
    let mut r = summarize(&name, anchor, order, &checks);
    r.detail = format!(
        "{}; convention q d/dq (d/dtau {})",
        r.detail,
        if separate { "also holds" } else { "fails" }
    );
    r
}

fn poly_mul(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); x.len() + y.len() - 1];
    for (i, u) in x.iter().enumerate() {
        for (j, v) in y.iter().enumerate() {
            out[i + j] += u * v;
        }
    }
    out
}

fn poly_add(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    let n = x.len().max(y.len());
    let z = BigRational::zero();
    (0..n).map(|i| x.get(i).unwrap_or(&z) + y.get(i).unwrap_or(&z)).collect()
}

/// `f_n` from `f_(n-5)` and `f_(n-10)` for `n >= 10`.
pub fn kaneko_recursion_step(n: u32) -> Result<Vec<BigRational>> {
    if n < 10 || n % 5 == 4 {
        return Err(Error::Precondition(format!("recursion needs n >= 10, n != 4 (mod 5), got {n}")));
    }
    let f5 = kaneko_solution(n - 5)?.coeffs;
    let f10 = kaneko_solution(n - 10)?.coeffs;
    let e6: Vec<BigRational> = tables::E6_VECTOR.iter().map(|&x| q(x, 1)).collect();
    let quad = [q(1, 1), q(-11, 1), q(-1, 1)];
    let mut g = vec![q(0, 1), q(1, 1)];
    for _ in 0..5 {
        g = poly_mul(&g, &quad);
    }
    let ni = n as i64;
    let c = q(12 * (6 * ni - 29) * (6 * ni - 49), (ni - 4) * (ni - 9));
    let g: Vec<BigRational> = g.into_iter().map(|x| x * &c).collect();
    let mut out = poly_add(&poly_mul(&e6, &f5), &poly_mul(&g, &f10));
    while out.len() > 1 && out.last().map_or(false, |x| x.is_zero()) {
        out.pop();
    }
    Ok(out)
}

/// The printed lists, the recursion for `n = 10..13`, and the Schwarzian of
/// `t = A^5/B^5`.
pub fn verify_kaneko_recursion(order: i64) -> IdentityReport {
    let mut checks = Vec::new();
    for (n, printed) in tables::KANEKO {
        let ok = kaneko_solution(n)
            .map(|s| s.coeffs == printed.iter().map(|&x| q(x, 1)).collect::<Vec<_>>())
            .unwrap_or(false);
        checks.push(Check::exact(format!("f_{n} printed"), ok, format!("{printed:?}")));
    }
    for n in 10..=13 {
        let ok = match (kaneko_recursion_step(n), kaneko_solution(n)) {
            (Ok(x), Ok(y)) => x == y.coeffs,
            _ => false,
        };
        checks.push(Check::exact(format!("f_{n} recursion"), ok, "two routes disagree"));
    }
    checks.push(Check::exact("pole at n = 4", kaneko_solution(4).is_err(), "n = 4 accepted"));
    let (factor, cmp) = schwarzian_factor(order);
    checks.push(Check::exact(
        "Schwarzian of A^5/B^5",
        cmp.is_some_and(|c| c.is_equal()),
        format!("factor {factor}"),
    ));
    let mut r = summarize("kaneko-recursion", "Kaneko polynomials and recursion", order, &checks);
    r.detail = format!("{}; Schwarzian: 2 t'''/t' - 3 (t''/t')^2 = {factor} * target for ' = q d/dq", r.detail);
    r
}

/// `c` with `2 t'''/t' - 3 (t''/t')^2 = c T` (`' = q d/dq`, `t = A^5/B^5`,
/// `T` the printed degree-4 form), and the comparison for that `c`.
pub fn schwarzian_factor(order: i64) -> (FieldElement, Option<crate::qseries::Comparison>) {
    let inner = order + 2;
    let t = (&a5(inner) * &b5(inner).inverse().expect("unit")).truncate_int(inner);
    let d1 = t.theta_derivative();
    let d2 = d1.theta_derivative();
    let d3 = d2.theta_derivative();
    let inv = match d1.inverse() {
        Ok(x) => x,
        Err(_) => return (FieldElement::zero(), None),
    };
    let x = (&d3 * &inv).truncate_int(order);
    let y = (&d2 * &inv).truncate_int(order);
    let s = &x.scale_int(2) - &(&y * &y).scale_int(3);
    let target = HomPoly::from_ints(&tables::SCHWARZ_TARGET).to_series(order);
    let c = s.coeff_int(0);
    let cmp = s.compare_int(&target.scale(&c), order);
    (c, Some(cmp))
}

/// Integer coefficients of `f_n` for display.
pub fn kaneko_display(s: &KanekoSolution) -> Vec<String> {
    s.coeffs.iter().map(|x| x.to_string()).collect()
}

/// `f_n` with integer coefficients or `None`.
pub fn kaneko_integer(s: &KanekoSolution) -> Option<Vec<BigInt>> {
    s.coeffs.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kaneko_small() {
        let f = |n| kaneko_integer(&kaneko_solution(n).unwrap()).unwrap();
        assert_eq!(f(1), vec![BigInt::from(1), BigInt::from(7)]);
        assert_eq!(f(2), [1, 39, -26].map(BigInt::from).to_vec());
        assert_eq!(*f(8).last().unwrap(), BigInt::from(-26999));
        assert_eq!(f(0), vec![BigInt::from(1)]);
        assert!(kaneko_solution(4).is_err());
        assert!(kaneko_recursion_step(14).is_err());
    }

    #[test]
    fn odes_at_low_order() {
        assert!(verify_quintic_ode(15).passed);
        assert!(!verify_quintic_ode_with(65, 15).passed);
        assert!(verify_e2_forms(15).passed);
        assert!(verify_kaneko_ode(0, 12).passed);
        assert!(verify_kaneko_ode(1, 12).passed);
    }

    #[test]
    fn t_system_low_order() {
        let r = verify_t_system(12);
        assert!(r.passed, "{r:?}");
        assert!(verify_t_parameterizations(12).passed);
    }

    #[test]
    fn schwarzian() {
        let (c, cmp) = schwarzian_factor(12);
        assert_eq!(c, FieldElement::from_int(-1));
        assert!(cmp.unwrap().is_equal());
    }
}
