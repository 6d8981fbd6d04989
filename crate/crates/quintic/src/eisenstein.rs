//! Dirichlet characters mod 5 and Eisenstein series of level 1 and 5.
//!
//! `E_{k,chi} = 1 + (2 / L(1-k, chi)) sum_n (sum_{d|n} chi(d) d^(k-1)) q^n`
//! and `L_{k,chi} = sum_n (sum_{d|n} chi(d) (n/d)^(k-1)) q^n`, both by a
//! divisor sieve over Gaussian-integer coefficients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::exactfield::{FieldElement, Rational};
use crate::qseries::QSeries;
use crate::{Error, Result};

/// Characters modulo 5, indexed so that `Chi3` is the Legendre symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirichletChar5 {
    Chi1,
    Chi2,
    Chi3,
    Chi4,
}

/// `a + b i` with integer parts.
type Gauss = (i64, i64);

impl DirichletChar5 {
    pub const ALL: [DirichletChar5; 4] = [Self::Chi1, Self::Chi2, Self::Chi3, Self::Chi4];

    fn table(self) -> [Gauss; 5] {
        match self {
            Self::Chi1 => [(0, 0), (1, 0), (1, 0), (1, 0), (1, 0)],
            Self::Chi2 => [(0, 0), (1, 0), (0, 1), (0, -1), (-1, 0)],
            Self::Chi3 => [(0, 0), (1, 0), (-1, 0), (-1, 0), (1, 0)],
            Self::Chi4 => [(0, 0), (1, 0), (0, -1), (0, 1), (-1, 0)],
        }
    }

    fn gauss(self, n: i64) -> Gauss {
        self.table()[n.rem_euclid(5) as usize]
    }

    pub fn value(self, n: i64) -> FieldElement {
        let (a, b) = self.gauss(n);
        &FieldElement::from_int(a) + &FieldElement::i().scale_int(&b.into())
    }

    pub fn values(self) -> [FieldElement; 5] {
        std::array::from_fn(|n| self.value(n as i64))
    }

    /// `chi(-1)`.
    pub fn parity(self) -> i64 {
        self.gauss(-1).0
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Chi1 => "chi1",
            Self::Chi2 => "chi2",
            Self::Chi3 => "chi3",
            Self::Chi4 => "chi4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "chi1" | "1" => Ok(Self::Chi1),
            "chi2" | "2" => Ok(Self::Chi2),
            "chi3" | "3" => Ok(Self::Chi3),
            "chi4" | "4" => Ok(Self::Chi4),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }

    fn check_parity(self, k: u32) -> Result<()> {
        let want = if k % 2 == 0 { 1 } else { -1 };
        if self.parity() == want {
            Ok(())
        } else {
            Err(Error::Parity { k, chi: self.label().into() })
        }
    }
}

impl fmt::Display for DirichletChar5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = Rational::one();
    for m in 1..=n {
        let mut s = Rational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate().take(m) {
            s += Rational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b[m] = -s / Rational::from_integer(BigInt::from(m + 1));
    }
    b
}

fn bernoulli_poly(k: usize, x: &Rational, b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    let mut binom = BigInt::one();
    for (j, bj) in b.iter().enumerate().take(k + 1) {
        s += Rational::from_integer(binom.clone()) * bj * num_traits::pow(x.clone(), k - j);
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    s
}

/// Generalized Bernoulli number `B_{k,chi}` for the character mod 5.
pub fn generalized_bernoulli(k: u32, chi: DirichletChar5) -> FieldElement {
    let b = bernoulli_numbers(k as usize);
    let f = Rational::from_integer(5.into());
    let mut s = FieldElement::zero();
    for a in 1..=5i64 {
        let x = Rational::new(a.into(), 5.into());
        let v = bernoulli_poly(k as usize, &x, &b);
        s += &chi.value(a).scale_rational(&v);
    }
    s.scale_rational(&num_traits::pow(f, k as usize - 1))
}

/// `L(1-k, chi) = -B_{k,chi} / k`.
pub fn l_value(k: u32, chi: DirichletChar5) -> FieldElement {
    generalized_bernoulli(k, chi).scale_ratio(-1, k as i64)
}

/// Normalizing constant `2 / L(1-k, chi)` from generalized Bernoulli numbers.
pub fn computed_constant(k: u32, chi: DirichletChar5) -> Result<FieldElement> {
    chi.check_parity(k)?;
    Ok(FieldElement::from_int(2) / l_value(k, chi))
}

/// The constants for weight at most 2 as quoted in the literature, and the
/// computed ones above that.
pub fn eisenstein_constant(k: u32, chi: DirichletChar5) -> Result<FieldElement> {
    chi.check_parity(k)?;
    let i = FieldElement::i();
    Ok(match (k, chi) {
        (1, DirichletChar5::Chi2) => &FieldElement::from_int(3) - &i,
        (1, DirichletChar5::Chi4) => &FieldElement::from_int(3) + &i,
        (2, DirichletChar5::Chi1) => FieldElement::from_int(6),
        (2, DirichletChar5::Chi3) => FieldElement::from_int(-5),
        _ => {
            if k == 3 {
                weight3_checked()?;
            }
            computed_constant(k, chi)?
        }
    })
}

/// The other odd character.
pub fn conjugate_odd(chi: DirichletChar5) -> DirichletChar5 {
    match chi {
        DirichletChar5::Chi2 => DirichletChar5::Chi4,
        DirichletChar5::Chi4 => DirichletChar5::Chi2,
        c => c,
    }
}

/// `E_{3,chi} = E_{1,conj chi} E_{2,chi3}` for both odd characters, order 30.
/// With the Bernoulli normalization the weight-1 factor carries the
/// conjugate character.
fn weight3_checked() -> Result<()> {
    static DONE: Lazy<std::result::Result<(), String>> = Lazy::new(|| {
        for chi in [DirichletChar5::Chi2, DirichletChar5::Chi4] {
            let c = computed_constant(3, chi).map_err(|e| e.to_string())?;
            let e3 = level5_raw(3, chi, &c, 30);
            let cj = conjugate_odd(chi);
            let e1 = level5_raw(1, cj, &eisenstein_constant(1, cj).unwrap(), 30);
            let e2 = level5_raw(2, DirichletChar5::Chi3, &FieldElement::from_int(-5), 30);
            if !(&e1 * &e2).compare_int(&e3, 30).is_equal() {
                return Err(format!("E_3,{chi} != E_1,{cj} E_2,chi3 with constant {c}"));
            }
        }
        Ok(())
    });
    DONE.clone().map_err(Error::Constants)
}

/// Divisor sums `sum_{d|n} chi(d) w(d, n/d)` for `1 <= n < order` as
/// Gaussian integers.
fn sieve(order: i64, chi: DirichletChar5, w: impl Fn(i64, i64) -> BigInt) -> Vec<(BigInt, BigInt)> {
    let n = order.max(1) as usize;
    let mut re = vec![BigInt::zero(); n];
    let mut im = vec![BigInt::zero(); n];
    for d in 1..n as i64 {
        let (a, b) = chi.gauss(d);
        if a == 0 && b == 0 {
            continue;
        }
        let mut m = d;
        while m < n as i64 {
            let x = w(d, m / d);
            if a != 0 {
                re[m as usize] += &x * a;
            }
            if b != 0 {
                im[m as usize] += &x * b;
            }
            m += d;
        }
    }
    re.into_iter().zip(im).collect()
}

fn gauss_to_field(re: &BigInt, im: &BigInt) -> FieldElement {
    let mut x = FieldElement::from_int(re.clone());
    if !im.is_zero() {
        x += &FieldElement::i().scale_int(im);
    }
    x
}

fn level5_raw(k: u32, chi: DirichletChar5, c: &FieldElement, order: i64) -> QSeries {
    let s = sieve(order, chi, |d, _| num_traits::pow(BigInt::from(d), k as usize - 1));
    let mut coeffs: Vec<FieldElement> =
        s.iter().map(|(a, b)| &gauss_to_field(a, b) * c).collect();
    if order > 0 {
        coeffs[0] = FieldElement::one();
    }
    coeffs.truncate(order.max(0) as usize);
    QSeries::new(1, 0, coeffs)
}

type Key = (u8, u32, DirichletChar5, i64);
static CACHE: Lazy<RwLock<HashMap<Key, QSeries>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn memo(key: Key, f: impl FnOnce() -> Result<QSeries>) -> Result<QSeries> {
    if let Some(s) = CACHE.read().get(&key) {
        return Ok(s.clone());
    }
    let s = f()?;
    CACHE.write().insert(key, s.clone());
    Ok(s)
}

fn sigma_series(k: u32, c: i64, order: i64) -> QSeries {
    let s = sieve(order, DirichletChar5::Chi1, |d, _| num_traits::pow(BigInt::from(d), k as usize));
    // Chi1 skips multiples of 5; add them back for the full divisor sum
    let n = order.max(1) as usize;
    let mut t: Vec<BigInt> = s.into_iter().map(|x| x.0).collect();
    let mut d = 5i64;
    while (d as usize) < n {
        let p = num_traits::pow(BigInt::from(d), k as usize);
        let mut m = d;
        while (m as usize) < n {
            t[m as usize] += &p;
            m += d;
        }
        d += 5;
    }
    let mut coeffs: Vec<FieldElement> = t.into_iter().map(|x| FieldElement::from_int(x * c)).collect();
    coeffs[0] = FieldElement::one();
    coeffs.truncate(order.max(0) as usize);
    QSeries::new(1, 0, coeffs)
}

/// `E_2, E_4, E_6` on the full modular group.
pub fn eisenstein_level1(k: u32, order: i64) -> Result<QSeries> {
    let c = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => return Err(Error::Precondition(format!("level-1 weight {k} not in {{2, 4, 6}}"))),
    };
    memo((0, k, DirichletChar5::Chi1, order), || Ok(sigma_series(k - 1, c, order)))
}

/// `E_{k,chi}` of level 5.
pub fn eisenstein_level5(k: u32, chi: DirichletChar5, order: i64) -> Result<QSeries> {
    if k == 0 {
        return Err(Error::Precondition("weight must be positive".into()));
    }
    let c = eisenstein_constant(k, chi)?;
    memo((1, k, chi, order), || Ok(level5_raw(k, chi, &c, order)))
}

/// `L_{k,chi} = sum_n n^(k-1)/(1 - q^(5n)) sum_{m=1}^4 chi(m) q^(mn)`.
pub fn lambert_l(k: u32, chi: DirichletChar5, order: i64) -> Result<QSeries> {
    if k < 2 {
        return Err(Error::Precondition("L_{k,chi} needs k >= 2".into()));
    }
    chi.check_parity(k)?;
    memo((2, k, chi, order), || {
        let s = sieve(order, chi, |_, e| num_traits::pow(BigInt::from(e), k as usize - 1));
        let mut coeffs: Vec<FieldElement> = s.iter().map(|(a, b)| gauss_to_field(a, b)).collect();
        coeffs.truncate(order.max(0) as usize);
        Ok(QSeries::new(1, 0, coeffs))
    })
}

/// The auxiliary series `t_1..t_6`.
pub fn t_series(index: u32, order: i64) -> Result<QSeries> {
    use DirichletChar5::*;
    let i = FieldElement::i();
    let r = |p: i64, q: i64| FieldElement::from_ratio(p, q);
    let ci = |re: (i64, i64), im: (i64, i64)| &r(re.0, re.1) + &i.scale_ratio(im.0, im.1);
    let lin = |terms: &[(FieldElement, QSeries)]| {
        terms.iter().map(|(c, s)| s.scale(c)).reduce(|a, b| &a + &b).unwrap()
    };
    match index {
        1 | 2 => {
            let e2 = eisenstein_level5(1, Chi2, order)?;
            let e4 = eisenstein_level5(1, Chi4, order)?;
            Ok(if index == 1 {
                lin(&[(ci((1, 2), (1, 1)), e2), (ci((1, 2), (-1, 1)), e4)])
            } else {
                // (E2 - E4) / (2i) = -(i/2)(E2 - E4)
                lin(&[(i.scale_ratio(-1, 2), e2), (i.scale_ratio(1, 2), e4)])
            })
        }
        3 | 4 => {
            let e1 = eisenstein_level5(2, Chi1, order)?;
            let e3 = eisenstein_level5(2, Chi3, order)?;
            let p = eisenstein_level1(2, (order + 4) / 5)?.subs_power(5).truncate_int(order);
            Ok(if index == 3 {
                lin(&[(r(5, 24), e1), (r(-1, 4), e3), (r(25, 24), p)])
            } else {
                lin(&[(r(-1, 24), e1), (r(1, 4), e3), (r(-5, 24), p)])
            })
        }
        5 | 6 => {
            let e2 = eisenstein_level5(3, Chi2, order)?;
            let e4 = eisenstein_level5(3, Chi4, order)?;
            Ok(if index == 5 {
                lin(&[(ci((1, 2), (11, 4)), e2), (ci((1, 2), (-11, 4)), e4)])
            } else {
                lin(&[(i.scale_ratio(-5, 4), e2), (i.scale_ratio(5, 4), e4)])
            })
        }
        _ => Err(Error::Precondition(format!("t index {index} not in 1..=6"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DirichletChar5::*;

    #[test]
    fn character_table() {
        let i = FieldElement::i();
        assert_eq!(Chi2.values()[2], i);
        assert_eq!(Chi4.values()[2], -&i);
        for chi in DirichletChar5::ALL {
            assert!(chi.value(0).is_zero());
            for a in 0..5 {
                for b in 0..5 {
                    assert_eq!(chi.value(a * b), &chi.value(a) * &chi.value(b));
                }
            }
        }
        // chi3 is the Legendre symbol: +1 on squares 1, 4
        assert_eq!(Chi3.value(4), FieldElement::one());
        assert_eq!(Chi3.value(2), FieldElement::from_int(-1));
        assert_eq!(&Chi2.value(3) * &Chi2.value(3), Chi3.value(3));
    }

    #[test]
    fn level1_constants() {
        let e2 = eisenstein_level1(2, 5).unwrap();
        let e4 = eisenstein_level1(4, 5).unwrap();
        let e6 = eisenstein_level1(6, 5).unwrap();
        assert_eq!(e2.coeff_int(1), FieldElement::from_int(-24));
        assert_eq!(e4.coeff_int(1), FieldElement::from_int(240));
        assert_eq!(e4.coeff_int(2), FieldElement::from_int(2160));
        assert_eq!(e6.coeff_int(1), FieldElement::from_int(-504));
        // 2 / zeta(-5) with zeta(-5) = -B_6 / 6
        let b = bernoulli_numbers(6);
        assert_eq!(b[6], Rational::new(1.into(), 42.into()));
        let z = -b[6].clone() / Rational::from_integer(6.into());
        assert_eq!(Rational::from_integer(2.into()) / z, Rational::from_integer((-504).into()));
    }

    #[test]
    fn constants_from_bernoulli_match_quoted() {
        for (k, chi) in [(1, Chi2), (1, Chi4), (2, Chi1), (2, Chi3)] {
            assert_eq!(computed_constant(k, chi).unwrap(), eisenstein_constant(k, chi).unwrap());
        }
        assert_eq!(l_value(2, Chi1), FieldElement::from_ratio(1, 3));
        assert_eq!(l_value(2, Chi3), FieldElement::from_ratio(-2, 5));
    }

    #[test]
    fn weight3_product_identity() {
        for chi in [Chi2, Chi4] {
            let e3 = eisenstein_level5(3, chi, 80).unwrap();
            let e1 = eisenstein_level5(1, conjugate_odd(chi), 80).unwrap();
            let e2 = eisenstein_level5(2, Chi3, 80).unwrap();
            assert!((&e1 * &e2).compare_int(&e3, 80).is_equal());
            // the same-character pairing fails already at q^1
            let same = &eisenstein_level5(1, chi, 80).unwrap() * &e2;
            assert!(!same.compare_int(&e3, 2).is_equal());
        }
    }

    #[test]
    fn parity_enforced() {
        assert!(eisenstein_level5(2, Chi2, 5).is_err());
        assert!(lambert_l(3, Chi1, 5).is_err());
        assert!(eisenstein_level1(8, 5).is_err());
    }

    #[test]
    fn lambert_matches_direct_divisor_formula() {
        for (k, chi) in [(2, Chi3), (4, Chi1), (3, Chi2)] {
            let l = lambert_l(k, chi, 200).unwrap();
            for n in 1..200i64 {
                let mut s = FieldElement::zero();
                for d in 1..=n {
                    if n % d == 0 {
                        s += &chi.value(d).scale_int(&num_traits::pow(BigInt::from(n / d), k as usize - 1));
                    }
                }
                assert_eq!(l.coeff_int(n), s, "k={k} {chi} n={n}");
            }
        }
        // the direct rational-function route for a few terms
        let l = lambert_l(2, Chi3, 30).unwrap();
        let mut acc = QSeries::zero(30);
        for n in 1..30i64 {
            for m in 1..5i64 {
                let mut e = m * n;
                while e < 30 {
                    let mut c = vec![0i64; 30];
                    c[e as usize] = n;
                    acc = &acc + &QSeries::from_ints(1, 0, &c).scale(&Chi3.value(m));
                    e += 5 * n;
                }
            }
        }
        assert!(acc.compare_int(&l, 30).is_equal());
    }

    #[test]
    fn e_one_fifth_is_real_quadratic() {
        let t1 = t_series(1, 40).unwrap();
        let t2 = t_series(2, 40).unwrap();
        assert!(t1.is_rational() && t2.is_rational());
        let e = &t1 + &t2.scale(&FieldElement::sqrt5());
        for (_, c) in e.terms() {
            assert!(c.to_complex().im.abs() < 1e-9);
        }
    }
}
