//! Property bodies shared by the `properties` suite and the acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use quintic::products::{ramanujan_f, ramanujan_f_product};
use quintic::{FieldElement, QSeries};

pub const CASES: u32 = 64;

/// `(a exponent numerator, b exponent numerator, denominator, zeta_20 powers)`.
pub fn monomial_args() -> impl Strategy<Value = (i64, i64, i64, i64, i64)> {
    (1i64..8, 1i64..8, prop::sample::select(vec![1i64, 2, 5]), 0i64..20, 0i64..20)
}

pub fn series(grid: i64, len: usize) -> impl Strategy<Value = QSeries> {
    (prop::collection::vec(-9i64..10, len), 0i64..3).prop_map(move |(c, v)| QSeries::from_ints(grid, v, &c))
}

/// Monic series on the integer grid, suitable for principal roots.
pub fn unit(len: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-9i64..10, len - 1).prop_map(|v| {
        let mut c = vec![1];
        c.extend(v);
        QSeries::from_ints(1, 0, &c)
    })
}

pub fn triple_product(args: (i64, i64, i64, i64, i64)) -> Result<(), TestCaseError> {
    let (na, nb, den, ja, jb) = args;
    let order = 100;
    let za = FieldElement::zeta20_pow(ja);
    let zb = FieldElement::zeta20_pow(jb);
    let (ea, eb) = (quintic::qseries::exp(na, den), quintic::qseries::exp(nb, den));
    let s = ramanujan_f(&za, ea, &zb, eb, order).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let p = ramanujan_f_product(&za, ea, &zb, eb, order).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(s.compare_int(&p, order).is_equal(), "f(a, b) sum and product differ for {:?}", args);
    Ok(())
}

pub fn nth_root_round_trip(f: QSeries, n: u32) -> Result<(), TestCaseError> {
    let order = 25;
    let p = f.pow(n as i64).unwrap();
    prop_assert!(p.nth_root(n).unwrap().compare_int(&f, order).is_equal());
    let r = f.nth_root(n).unwrap();
    prop_assert!(r.pow(n as i64).unwrap().compare_int(&f, order).is_equal());
    Ok(())
}

pub fn multisection_interleaving(f: QSeries, k: i64) -> Result<(), TestCaseError> {
    let order = 60;
    let mut acc = QSeries::zero(order);
    for m in 0..k {
        acc = &acc + &f.multisect(k, m).subs_power(k).shift_int(m);
    }
    prop_assert!(acc.compare_int(&f, order).is_equal(), "k = {}", k);
    Ok(())
}

pub fn derivation_rule(f: QSeries, g: QSeries) -> Result<(), TestCaseError> {
    let order = 8;
    let lhs = (&f * &g).theta_derivative();
    let rhs = &(&f * &g.theta_derivative()) + &(&g * &f.theta_derivative());
    prop_assert!(lhs.compare_int(&rhs, order).is_equal());
    Ok(())
}
