//! Floating-point evaluation of truncated series at `q = exp(2 pi i tau)` and
//! residual checks for the Fricke transformation of `A` and `B`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::eisenstein::{eisenstein_level5, DirichletChar5};
use crate::exactfield::FieldElement;
use crate::quintic::{a, a5, b, b5, c, d, quadratic_product, rr_continued_fraction};
use crate::qseries::QSeries;
use crate::report::{Check, IdentityReport};
use crate::{Error, Result};

/// A point of the upper half plane together with `q = exp(2 pi i tau)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub tau: Complex64,
    pub q: Complex64,
}

impl ComplexPoint {
    pub fn new(tau: Complex64) -> Result<Self> {
        if tau.im <= 0.0 || !tau.im.is_finite() {
            return Err(Error::Precondition(format!("tau = {tau} is not in the upper half plane")));
        }
        Ok(ComplexPoint { tau, q: (Complex64::i() * 2.0 * PI * tau).exp() })
    }

    /// `tau -> -1/(5 tau)`.
    pub fn fricke(&self) -> Self {
        ComplexPoint::new(-1.0 / (5.0 * self.tau)).expect("upper half plane is preserved")
    }

    /// `exp(2 pi i tau e)` for a rational exponent `e`.
    pub fn q_power(&self, num: i64, den: i64) -> Complex64 {
        (Complex64::i() * 2.0 * PI * self.tau * (num as f64 / den as f64)).exp()
    }
}

/// Horner evaluation of `f` at `tau`. The neglected tail is estimated as
/// the largest coefficient magnitude times `|q|^bound`; if it exceeds
/// `2^-precision` an error names the order that would be needed.
pub fn eval_series(f: &QSeries, tau: &ComplexPoint, precision: u32) -> Result<Complex64> {
    let g = f.grid();
    let x = tau.q_power(1, g);
    let absx = x.norm();
    let coeffs: Vec<Complex64> = f.coeffs().iter().map(FieldElement::to_complex).collect();
    let n = coeffs.len() as i64;
    // growth of the last known coefficients stands in for the tail
    let tail_scale = coeffs[(3 * coeffs.len() / 4)..].iter().map(|z| z.norm()).fold(1.0, f64::max);
    let tail = tail_scale * absx.powf((f.val() + n) as f64) / (1.0 - absx).max(1e-300);
    let target = 2f64.powi(-(precision as i32));
    if !(tail < target) {
        let per_step = -absx.ln();
        let need = if per_step > 0.0 {
            ((target.ln().abs() + tail_scale.ln().max(0.0)) / per_step / g as f64).ceil() as i64
        } else {
            i64::MAX
        };
        return Err(Error::Divergent(format!(
            "tail estimate {tail:.3e} exceeds 2^-{precision} at tau = {}; order >= {need} needed",
            tau.tau
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for z in coeffs.iter().rev() {
        acc = acc * x + z;
    }
    Ok(acc * x.powi(f.val() as i32))
}

/// `|A(-1/(5 tau)) - lhs_A|` and `|B(-1/(5 tau)) - lhs_B|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrickeResiduals {
    pub a: f64,
    pub b: f64,
}

impl FrickeResiduals {
    pub fn max(&self) -> f64 {
        self.a.max(self.b)
    }
}

/// Fifth root with argument in `[0, 2 pi / 5)`.
pub fn fifth_root_branch(z: Complex64) -> Complex64 {
    let mut arg = z.arg();
    if arg < 0.0 {
        arg += 2.0 * PI;
    }
    Complex64::from_polar(z.norm().powf(0.2), arg / 5.0)
}

/// `gamma_1, gamma_2 = sqrt((5 -+ sqrt 5)/2) e^(-pi i/10) / 5^(3/10)`.
pub fn gamma_constants() -> (Complex64, Complex64) {
    let s5 = 5f64.sqrt();
    let phase = Complex64::from_polar(1.0, -PI / 10.0) / 5f64.powf(0.3);
    (phase * ((5.0 - s5) / 2.0).sqrt(), phase * ((5.0 + s5) / 2.0).sqrt())
}

/// `|1 + 25 x^10 + 5 x^20|`.
pub fn gamma_minimal_polynomial(x: Complex64) -> f64 {
    (1.0 + 25.0 * x.powi(10) + 5.0 * x.powi(20)).norm()
}

const PRECISION: u32 = 60;

/// Residuals of `A(-1/(5 tau)) = gamma_1 tau^(1/5) C(tau)` and
/// `B(-1/(5 tau)) = gamma_2 tau^(1/5) D(tau)` with series cut at `order`.
pub fn fricke_check(tau: &ComplexPoint, order: i64) -> Result<FrickeResiduals> {
    let w = tau.fricke();
    let (g1, g2) = gamma_constants();
    let root = fifth_root_branch(tau.tau);
    let av = eval_series(&a(order), &w, PRECISION)?;
    let bv = eval_series(&b(order), &w, PRECISION)?;
    let cv = eval_series(&c(order), tau, PRECISION)?;
    let dv = eval_series(&d(order), tau, PRECISION)?;
    Ok(FrickeResiduals { a: (av - g1 * root * cv).norm(), b: (bv - g2 * root * dv).norm() })
}

/// The two standard sample points `tau = i` and `tau = i/sqrt(5)`.
pub fn sample_points() -> [ComplexPoint; 2] {
    [
        ComplexPoint::new(Complex64::new(0.0, 1.0)).unwrap(),
        ComplexPoint::new(Complex64::new(0.0, 1.0 / 5f64.sqrt())).unwrap(),
    ]
}

fn alpha_beta() -> (FieldElement, FieldElement) {
    (FieldElement::alpha(), FieldElement::beta())
}

/// The Fricke image of `R`.
///
/// Exact part: `-beta C/D` against `-beta prod (1 + beta q^n + q^(2n)) /
/// (1 + alpha q^n + q^(2n))` and against the ratio of fifth roots of the
/// weight-one Eisenstein combinations taken at `alpha^5, beta^5`. The product with `alpha, beta` in the
/// printed positions equals `D/C` and is checked in that form. Numeric part:
/// `R(-1/(5 tau)) = -beta C(tau)/D(tau)` at the sample points.
pub fn fuls_check(order: i64) -> IdentityReport {
    fuls_check_with(&FieldElement::beta(), order)
}

/// Same, with `beta` in the prefactor replaced by `factor` (negative control).
pub fn fuls_check_with(factor: &FieldElement, order: i64) -> IdentityReport {
    let (al, be) = alpha_beta();
    let name = "fricke-continued-fraction";
    let anchor = "R(-1/(5 tau)) through C/D, products and Eisenstein roots";
    let cv = c(order);
    let dv = d(order);
    let dinv = dv.inverse().expect("unit");
    let lhs = (&cv * &dinv).scale(&-factor.clone()).truncate_int(order);
    // prod (1 + 2cos(pi r) q^n + q^2n); alpha = 2 cos(pi/5), beta = 2 cos(3 pi/5)
    let p_al = quadratic_product(num_rational::Rational64::new(1, 5), order).expect("product");
    let p_be = quadratic_product(num_rational::Rational64::new(3, 5), order).expect("product");
    let prod = (&p_al * &p_be.inverse().expect("unit")).truncate_int(order);
    let corrected = (&p_be * &p_al.inverse().expect("unit")).scale(&-be.clone()).truncate_int(order);
    let bq5 = b5_like(order, true);
    let aq5 = b5_like(order, false);
    let lin = |x: &FieldElement| &bq5 - &aq5.scale(x);
    let ratio = (&lin(&be) * &lin(&al).inverse().expect("unit")).truncate_int(order);
    let mut checks = vec![
        Check::series_int("-beta C/D = -beta prod (beta)/(alpha)", &lhs, &corrected, order),
        Check::series_int("prod (alpha)/(beta) = D/C", &prod, &ratio, order),
    ];
    match eisenstein_fifth_root_ratio(order) {
        Ok(x) => {
            let x = x.scale(&-be.clone()).truncate_int(order);
            checks.push(Check::series_int("-beta ratio of Eisenstein fifth roots", &lhs, &x, order));
        }
        Err(e) => checks.push(Check::exact("Eisenstein fifth roots", false, e.to_string())),
    }
    // with alpha, beta in the printed positions the combinations are B^5 - x A^5
    let (a5s, b5s) = (a5(order), b5(order));
    for (label, x) in [("alpha", &al), ("beta", &be)] {
        let want = &b5s - &a5s.scale(x);
        match eisenstein_combination(x, order) {
            Ok(e) => checks.push(Check::series_int(format!("X_{label} = B^5 - {label} A^5"), &e, &want, order)),
            Err(e) => checks.push(Check::exact(format!("X_{label}"), false, e.to_string())),
        }
    }
    // (1 - beta^5 R^5)/(1 - alpha^5 R^5) = (D/C)^5
    let r5 = (&a5(order) * &b5(order).inverse().expect("unit")).truncate_int(order);
    let one = QSeries::one(order);
    let ff = |x: &FieldElement| &one - &r5.scale(&x.pow(5).expect("pow"));
    let rform = (&ff(&be) * &ff(&al).inverse().expect("unit")).truncate_int(order);
    let ratio5 = ratio.pow(5).expect("pow").truncate_int(order);
    checks.push(Check::series_int("R^5 form = (D/C)^5", &rform, &ratio5, order));
    // numeric at the sample points
    let rr = rr_continued_fraction(order.max(20));
    for tau in sample_points() {
        let label = format!("numeric at tau = {}", tau.tau);
        let num = (|| -> Result<f64> {
            let w = tau.fricke();
            let r = eval_series(&rr, &w, 40)?;
            let cc = eval_series(&cv, &tau, 40)?;
            let dd = eval_series(&dv, &tau, 40)?;
            Ok((r + factor.to_complex() * cc / dd).norm())
        })();
        match num {
            Ok(res) => checks.push(Check::exact(label, res < 1e-9, format!("residual {res:.3e}"))),
            Err(e) => checks.push(Check::exact(label, false, e.to_string())),
        }
    }
    crate::report::summarize(name, anchor, order, &checks)
}

/// `B(q^5)` (`true`) or `A(q^5)` (`false`) on the integer grid.
fn b5_like(order: i64, is_b: bool) -> QSeries {
    let inner = (order + 4) / 5 + 1;
    let s = if is_b { b(inner) } else { a(inner) };
    s.subs_power(5).reduce_grid().truncate_int(order)
}

/// `X_x = ((1 + x i) E_(1,chi4) + (1 - x i) E_(1,chi2)) / 2`, which equals `B^5 - x A^5`.
pub fn eisenstein_combination(x: &FieldElement, order: i64) -> Result<QSeries> {
    let i = FieldElement::i();
    let e4 = eisenstein_level5(1, DirichletChar5::Chi4, order)?;
    let e2 = eisenstein_level5(1, DirichletChar5::Chi2, order)?;
    let one = FieldElement::one();
    let ci = x * &i;
    Ok((&e4.scale(&(&one + &ci)) + &e2.scale(&(&one - &ci))).scale_ratio(1, 2))
}

/// `(X_(alpha^5) / X_(beta^5))^(1/5)`, equal to `C/D`.
pub fn eisenstein_fifth_root_ratio(order: i64) -> Result<QSeries> {
    let (al, be) = alpha_beta();
    let xa = eisenstein_combination(&al.pow(5)?, order)?;
    let xb = eisenstein_combination(&be.pow(5)?, order)?;
    (&xa * &xb.inverse()?).truncate_int(order).nth_root(5)
}

/// Maximum Fricke residual over the sample points at `order`, for reports.
pub fn fricke_summary(order: i64) -> Result<Vec<(Complex64, FrickeResiduals)>> {
    sample_points().iter().map(|t| fricke_check(t, order).map(|r| (t.tau, r))).collect()
}

/// `zeta_20` as a float, used to sanity check the numeric embedding.
pub fn zeta20_image() -> Complex64 {
    FieldElement::zeta20_pow(1).to_complex()
}

/// `|eval(order) - eval(order + extra)|`.
pub fn truncation_gap(f: impl Fn(i64) -> QSeries, tau: &ComplexPoint, order: i64, extra: i64) -> Result<f64> {
    let x = eval_series(&f(order), tau, 30)?;
    let y = eval_series(&f(order + extra), tau, 30)?;
    Ok((x - y).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::euler;

    fn approx(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() < tol
    }

    #[test]
    fn constants_and_eta() {
        let tau = ComplexPoint::new(Complex64::new(0.0, 1.0)).unwrap();
        let one = eval_series(&QSeries::one(10), &tau, 20).unwrap();
        assert!((one - 1.0).norm() < 1e-15);
        // eta(i) = Gamma(1/4) / (2 pi^(3/4)), eta = q^(1/24) (q;q)
        let gamma_quarter = 3.625_609_908_221_908_f64;
        let eta = gamma_quarter / (2.0 * PI.powf(0.75));
        let e = eval_series(&euler(40), &tau, 40).unwrap();
        assert!(approx(e.re * (-2.0 * PI / 24.0).exp(), eta, 1e-10));
        let z = zeta20_image();
        let z20 = Complex64::from_polar(z.norm().powi(20), 20.0 * z.arg());
        assert!((z20 - 1.0).norm() < 1e-15);
    }

    #[test]
    fn tail_error_names_order() {
        let tau = ComplexPoint::new(Complex64::new(0.0, 0.05)).unwrap();
        let err = eval_series(&euler(10), &tau, 30).unwrap_err();
        assert!(err.to_string().contains("needed"));
        assert!(ComplexPoint::new(Complex64::new(1.0, -1.0)).is_err());
    }

    #[test]
    fn a_at_2i_is_small_positive() {
        let tau = ComplexPoint::new(Complex64::new(0.0, 2.0)).unwrap();
        let v = eval_series(&a(40), &tau, 40).unwrap();
        let direct = (-4.0 * PI / 5.0).exp();
        assert!(v.im.abs() < 1e-12 && v.re > 0.0 && approx(v.re / direct, 1.0, 0.01));
    }

    #[test]
    fn fricke_residuals() {
        for (_, r) in fricke_summary(80).unwrap() {
            assert!(r.max() < 1e-9, "{r:?}");
        }
        let (g1, g2) = gamma_constants();
        assert!(gamma_minimal_polynomial(g1) < 1e-8 && gamma_minimal_polynomial(g2) < 1e-8);
    }

    #[test]
    fn continued_fraction_image() {
        let r = fuls_check(30);
        assert!(r.passed, "{r:?}");
        assert!(!fuls_check_with(&FieldElement::alpha(), 30).passed);
    }
}
