//! Exact finite-series identities used by the tree resistance derivation.
//!
//! Every identity is evaluated twice in exact rational arithmetic: the
//! left side term by term, the right side from its closed form. Sums whose
//! upper limit is below the lower limit are empty and evaluate to zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::ExactRational as Q;

/// `C(n, k)` as an integer; zero outside `0 <= k <= n`.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

pub fn binomial(n: i64, k: i64) -> Q {
    Q::from_bigint(binomial_int(n, k))
}

fn pow2(e: i64) -> Q {
    Q::pow2(e)
}

fn int(v: i64) -> Q {
    Q::from_int(v)
}

fn frac(n: i64, d: i64) -> Q {
    Q::ratio(n, d)
}

fn sum<F: FnMut(i64) -> Q>(lo: i64, hi: i64, f: F) -> Q {
    (lo..=hi).map(f).sum()
}

/// `sum_{i=1}^{floor((m+1)/2)} i C(top, offset + 2i + 1)`, the building
/// block shared by the tree closed form and its supporting sums.
pub fn tree_binomial_sum(top: i64, offset: i64, m: i64) -> Q {
    sum(1, (m + 1).div_euclid(2), |i| int(i) * binomial(top, offset + 2 * i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    SumInt,
    SumIntSq,
    SumTwos,
    SumIntTwos,
    SumIntSqTwos,
    BinSumNM,
    BinSumNMK,
    BinEvenSum,
    BinOddSum,
    BinEvenSumI,
    BinOddSumI,
    IEvenEvenSum4,
    IEvenOddSum,
    IEvenOddSum4,
    IOddEvenSum,
    IOddOddSum,
    I2Sum1,
    I2Sum2,
    I2Sum3,
    ManipOdd,
    ManipEven,
    PascalRule,
    BinomialFormula,
    BinomialDerivative,
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::SumInt,
        IdentityId::SumIntSq,
        IdentityId::SumTwos,
        IdentityId::SumIntTwos,
        IdentityId::SumIntSqTwos,
        IdentityId::BinSumNM,
        IdentityId::BinSumNMK,
        IdentityId::BinEvenSum,
        IdentityId::BinOddSum,
        IdentityId::BinEvenSumI,
        IdentityId::BinOddSumI,
        IdentityId::IEvenEvenSum4,
        IdentityId::IEvenOddSum,
        IdentityId::IEvenOddSum4,
        IdentityId::IOddEvenSum,
        IdentityId::IOddOddSum,
        IdentityId::I2Sum1,
        IdentityId::I2Sum2,
        IdentityId::I2Sum3,
        IdentityId::ManipOdd,
        IdentityId::ManipEven,
        IdentityId::PascalRule,
        IdentityId::BinomialFormula,
        IdentityId::BinomialDerivative,
    ];

    /// Names of the integer parameters, in order.
    pub fn params(self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            SumInt | SumIntSq | SumTwos | SumIntTwos | SumIntSqTwos => &["n"],
            BinSumNM => &["n", "m"],
            BinSumNMK => &["n", "m", "k"],
            BinEvenSum | BinOddSum | BinEvenSumI | BinOddSumI => &["n"],
            IEvenEvenSum4 | IEvenOddSum | IEvenOddSum4 | IOddEvenSum | IOddOddSum | I2Sum1 | I2Sum2 | I2Sum3 => &["p"],
            ManipOdd | ManipEven => &["n", "p"],
            PascalRule => &["n", "k"],
            BinomialFormula => &["n", "x_num", "x_den", "y_num", "y_den"],
            BinomialDerivative => &["n", "x_num", "x_den"],
        }
    }

    /// Group of related identities, for reporting.
    pub fn family(self) -> &'static str {
        use IdentityId::*;
        match self {
            SumInt | SumIntSq | SumTwos | SumIntTwos | SumIntSqTwos => "power sums",
            BinSumNM | BinSumNMK => "binomial partial sums",
            BinEvenSum | BinOddSum | BinEvenSumI | BinOddSumI => "standard binomial sums",
            IEvenEvenSum4 | IEvenOddSum | IEvenOddSum4 | IOddEvenSum | IOddOddSum | I2Sum1 | I2Sum2 | I2Sum3 => {
                "specialised binomial sums"
            }
            ManipOdd | ManipEven => "binomial series manipulations",
            PascalRule | BinomialFormula | BinomialDerivative => "binomial basics",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.to_string().eq_ignore_ascii_case(name))
    }

    fn valid(self, p: &[i64]) -> bool {
        use IdentityId::*;
        if p.len() != self.params().len() {
            return false;
        }
        match self {
            SumInt | SumIntSq | SumTwos | SumIntTwos | SumIntSqTwos => p[0] > 0,
            BinSumNM => p[0] > 0 && p[1] >= 0,
            BinSumNMK => p[0] > 0 && p[1] >= 0 && (0..=p[1]).contains(&p[2]),
            BinEvenSum | BinOddSum => p[0] > 0,
            BinEvenSumI | BinOddSumI => p[0] > 1,
            IEvenEvenSum4 | IEvenOddSum | IEvenOddSum4 | IOddEvenSum | IOddOddSum | I2Sum1 | I2Sum2 | I2Sum3 => {
                p[0] >= 0
            }
            ManipOdd | ManipEven => p[0] >= 0 && p[1] >= 0,
            PascalRule => p[1] >= 1 && p[1] < p[0],
            BinomialFormula => p[0] >= 0 && p[2] > 0 && p[4] > 0,
            BinomialDerivative => p[0] >= 1 && p[2] > 0,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEval {
    pub lhs: Q,
    pub rhs: Q,
}

impl IdentityEval {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn i2_double_sum(i_hi: i64, k_hi: i64) -> Q {
    sum(1, i_hi, |i| sum(2 * i - 1, k_hi, |k| int(i) * pow2(-k) * binomial(k + 2, 2 * i + 1)))
}

/// Evaluates both sides of an identity at the given parameters.
pub fn eval_identity(id: IdentityId, params: &[i64]) -> Result<IdentityEval> {
    use IdentityId::*;
    if !id.valid(params) {
        return Err(Error::OutOfValidityRange {
            id: id.to_string(),
            params: params.to_vec(),
        });
    }
    let p0 = params[0];
    let (lhs, rhs) = match id {
        SumInt => (sum(1, p0, int), frac(p0 * (p0 + 1), 2)),
        SumIntSq => (sum(1, p0, |k| int(k * k)), frac(p0 * (p0 + 1) * (2 * p0 + 1), 6)),
        SumTwos => (sum(1, p0, |k| pow2(-k)), int(1) - pow2(-p0)),
        SumIntTwos => (sum(1, p0, |k| int(k) * pow2(-k)), int(2) - int(p0 + 2) * pow2(-p0)),
        SumIntSqTwos => (
            sum(1, p0, |k| int(k * k) * pow2(-k)),
            int(6) - int(p0 * p0 + 4 * p0 + 6) * pow2(-p0),
        ),
        BinSumNM => {
            let (n, m) = (p0, params[1]);
            (sum(1, n, |i| binomial(m + i, m + 1)), binomial(n + m + 1, m + 2))
        }
        BinSumNMK => {
            let (n, m, k) = (p0, params[1], params[2]);
            (
                sum(1, n, |i| binomial(m + i, k + i)),
                binomial(n + m + 1, n + k) - binomial(m + 1, k),
            )
        }
        BinEvenSum => (sum(0, p0.div_euclid(2), |i| binomial(p0, 2 * i)), pow2(p0 - 1)),
        BinOddSum => (sum(0, (p0 - 1).div_euclid(2), |i| binomial(p0, 2 * i + 1)), pow2(p0 - 1)),
        BinEvenSumI => (
            sum(0, p0.div_euclid(2), |i| int(2 * i) * binomial(p0, 2 * i)),
            int(p0) * pow2(p0 - 2),
        ),
        BinOddSumI => (
            sum(0, (p0 - 1).div_euclid(2), |i| int(2 * i + 1) * binomial(p0, 2 * i + 1)),
            int(p0) * pow2(p0 - 2),
        ),
        IEvenEvenSum4 => {
            let p = p0;
            (sum(1, p + 1, |i| int(i) * binomial(2 * p + 4, 2 * i + 2)), int(p) * pow2(2 * p + 2) + 1)
        }
        IEvenOddSum => {
            let p = p0;
            (sum(1, p, |i| int(i) * binomial(2 * p + 2, 2 * i + 1)), int(p) * pow2(2 * p))
        }
        IEvenOddSum4 => {
            let p = p0;
            (sum(1, p + 1, |i| int(i) * binomial(2 * p + 4, 2 * i + 1)), int(p + 1) * pow2(2 * p + 2))
        }
        IOddEvenSum => {
            let p = p0;
            (sum(1, p, |i| int(i) * binomial(2 * p + 3, 2 * i + 2)), int(2 * p - 1) * pow2(2 * p) + 1)
        }
        IOddOddSum => {
            let p = p0;
            (
                sum(1, p, |i| int(i) * binomial(2 * p + 3, 2 * i + 1)),
                int(2 * p + 1) * pow2(2 * p) - (p + 1),
            )
        }
        I2Sum1 => (i2_double_sum(p0, 2 * p0), int(p0 * p0) + frac(p0, 2)),
        I2Sum2 => (i2_double_sum(p0, 2 * p0 - 1), int(p0 * p0) - frac(p0, 2)),
        I2Sum3 => (i2_double_sum(p0 + 1, 2 * p0 + 1), int(p0 * p0) + frac(3 * p0 + 1, 2)),
        ManipOdd => {
            let (n, p) = (p0, params[1]);
            let lhs = sum(1, p + 1, |i| {
                sum(2 * i - 1, 2 * p + 1, |k| int(i) * pow2(-k) * binomial(n + k + 3, n + 2 * i + 2))
            });
            let rhs = sum(1, p + 1, |i| {
                sum(2 * i - 1, 2 * p + 1, |k| int(i) * pow2(1 - k) * binomial(n + k + 2, n + 2 * i + 1))
            }) - pow2(-2 * p - 1) * sum(1, p + 1, |i| int(i) * binomial(n + 2 * p + 4, n + 2 * i + 2));
            (lhs, rhs)
        }
        ManipEven => {
            let (n, p) = (p0, params[1]);
            let lhs = sum(1, p, |i| {
                sum(2 * i - 1, 2 * p, |k| int(i) * pow2(-k) * binomial(n + k + 3, n + 2 * i + 2))
            });
            let rhs = sum(1, p, |i| {
                sum(2 * i - 1, 2 * p, |k| int(i) * pow2(1 - k) * binomial(n + k + 2, n + 2 * i + 1))
            }) - pow2(-2 * p) * sum(1, p, |i| int(i) * binomial(n + 2 * p + 3, n + 2 * i + 2));
            (lhs, rhs)
        }
        PascalRule => {
            let (n, k) = (p0, params[1]);
            (binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1))
        }
        BinomialFormula => {
            let n = p0;
            let x = frac(params[1], params[2]);
            let y = frac(params[3], params[4]);
            let lhs = rat_pow(&(&x + &y), n);
            let rhs = sum(0, n, |i| binomial(n, i) * rat_pow(&x, i) * rat_pow(&y, n - i));
            (lhs, rhs)
        }
        BinomialDerivative => {
            let n = p0;
            let x = frac(params[1], params[2]);
            let lhs = int(n) * rat_pow(&(&x + &Q::one()), n - 1);
            // the i = 0 term vanishes, so x^(i-1) never needs a negative power
            let rhs = sum(1, n, |i| int(i) * binomial(n, i) * rat_pow(&x, i - 1));
            (lhs, rhs)
        }
    };
    Ok(IdentityEval { lhs, rhs })
}

fn rat_pow(x: &Q, e: i64) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// Upper bounds for identity sweeps. Each grid starts at the smallest valid
/// parameter value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepBounds {
    pub power_sums_n: i64,
    pub partial_sums_n: i64,
    pub partial_sums_m: i64,
    pub standard_sums_n: i64,
    pub specialised_p: i64,
    pub manip_n: i64,
    pub manip_p: i64,
    pub pascal_n: i64,
    pub binomial_formula_n: i64,
    pub gh_n: i64,
    pub gh_p: i64,
    pub s_max: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self {
            power_sums_n: 40,
            partial_sums_n: 25,
            partial_sums_m: 25,
            standard_sums_n: 30,
            specialised_p: 15,
            manip_n: 15,
            manip_p: 10,
            pascal_n: 31,
            binomial_formula_n: 12,
            gh_n: 15,
            gh_p: 8,
            s_max: 10,
        }
    }
}

/// Rationals substituted for `x` and `y` in the binomial formula sweep.
pub const BINOMIAL_SAMPLES: [(i64, i64); 8] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 3), (1, 1), (3, 2), (2, 1)];

/// Parameter tuples covered by a sweep of `id` under `bounds`.
pub fn sweep_grid(id: IdentityId, b: &SweepBounds) -> Vec<Vec<i64>> {
    use IdentityId::*;
    match id {
        SumInt | SumIntSq | SumTwos | SumIntTwos | SumIntSqTwos => (1..=b.power_sums_n).map(|n| vec![n]).collect(),
        BinSumNM => grid2(1..=b.partial_sums_n, 0..=b.partial_sums_m),
        BinSumNMK => {
            let mut out = Vec::new();
            for n in 1..=b.partial_sums_n {
                for m in 0..=b.partial_sums_m {
                    out.extend((0..=m).map(|k| vec![n, m, k]));
                }
            }
            out
        }
        BinEvenSum | BinOddSum => (1..=b.standard_sums_n).map(|n| vec![n]).collect(),
        BinEvenSumI | BinOddSumI => (2..=b.standard_sums_n).map(|n| vec![n]).collect(),
        IEvenEvenSum4 | IEvenOddSum | IEvenOddSum4 | IOddEvenSum | IOddOddSum | I2Sum1 | I2Sum2 | I2Sum3 => {
            (0..=b.specialised_p).map(|p| vec![p]).collect()
        }
        ManipOdd | ManipEven => grid2(0..=b.manip_n, 0..=b.manip_p),
        PascalRule => {
            let mut out = Vec::new();
            for n in 2..=b.pascal_n {
                out.extend((1..n).map(|k| vec![n, k]));
            }
            out
        }
        BinomialFormula => {
            let mut out = Vec::new();
            for n in 0..=b.binomial_formula_n {
                for &(xn, xd) in &BINOMIAL_SAMPLES {
                    for &(yn, yd) in &BINOMIAL_SAMPLES {
                        out.push(vec![n, xn, xd, yn, yd]);
                    }
                }
            }
            out
        }
        BinomialDerivative => {
            let mut out = Vec::new();
            for n in 1..=b.binomial_formula_n {
                out.push(vec![n, 1, 1]);
                out.push(vec![n, -1, 1]);
            }
            out
        }
    }
}

fn grid2(a: std::ops::RangeInclusive<i64>, b: std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    a.flat_map(|x| b.clone().map(move |y| vec![x, y])).collect()
}

/// The odd-case expression from the tree derivation; vanishes for all
/// `n, p >= 0`.
pub fn g_expression(n: i64, p: i64) -> Q {
    let mut v = frac(4 * p * p + 6 * p + 2, n + 2 * p + 2)
        + int(4 * p)
        + int(4 * p * p + 4 * n * p + 4 * n + 10 * p + 6) * pow2(1 - n)
        + pow2(-2 * p);
    v += pow2(-n - 2 * p)
        * sum(1, p + 1, |i| {
            int(i)
                * (int(2) * binomial(n + 2 * p + 4, n + 2 * i + 1)
                    - binomial(n + 2 * p + 4, n + 2 * i + 2)
                    - int(2 * n + 4 * p + 6) * binomial(2 * p + 4, 2 * i + 1))
        });
    let ratio = frac(n + 2 * p + 1, n + 2 * p + 2);
    v += pow2(2 - n)
        * sum(1, p + 1, |i| {
            sum(2 * i - 1, 2 * p + 1, |k| {
                int(i)
                    * pow2(-k)
                    * (&ratio * &binomial(n + k + 2, n + 2 * i + 1) - binomial(n + k + 2, n + 2 * i)
                        + binomial(k + 3, 2 * i + 1))
            })
        });
    let ratio = frac(2 * n + 4 * p + 6, n + 2 * p + 2);
    v += pow2(-2 * p)
        * sum(1, p + 1, |i| {
            sum(1, n, |k| {
                int(i)
                    * pow2(-k)
                    * (binomial(k + 2 * p + 4, k + 2 * i + 2) - &ratio * &binomial(k + 2 * p + 3, k + 2 * i + 1))
            })
        });
    v
}

/// The even-case expression from the tree derivation; vanishes for all
/// `n, p >= 0`.
pub fn h_expression(n: i64, p: i64) -> Q {
    let mut v = frac(4 * p * p + 2 * p, n + 2 * p + 1) + int(4 * p - 2)
        + int(4 * p * p + 4 * n * p + 2 * n + 6 * p + 2) * pow2(1 - n)
        + pow2(1 - 2 * p)
        - int(4 * p * p + 2 * n * p + 2 * n + 6 * p + 2) * pow2(1 - n - 2 * p);
    v += pow2(1 - n - 2 * p)
        * sum(1, p, |i| {
            int(i)
                * (int(2) * binomial(n + 2 * p + 3, n + 2 * i + 1)
                    - binomial(n + 2 * p + 3, n + 2 * i + 2)
                    - int(2 * n + 4 * p + 4) * binomial(2 * p + 3, 2 * i + 1))
        });
    let ratio = frac(n + 2 * p, n + 2 * p + 1);
    v += pow2(2 - n)
        * sum(1, p, |i| {
            sum(2 * i - 1, 2 * p, |k| {
                int(i)
                    * pow2(-k)
                    * (&ratio * &binomial(n + k + 2, n + 2 * i + 1) - binomial(n + k + 2, n + 2 * i)
                        + binomial(k + 3, 2 * i + 1))
            })
        });
    let ratio = frac(2 * n + 4 * p + 4, n + 2 * p + 1);
    v += pow2(1 - 2 * p)
        * sum(1, p, |i| {
            sum(1, n, |k| {
                int(i)
                    * pow2(-k)
                    * (binomial(k + 2 * p + 3, k + 2 * i + 2) - &ratio * &binomial(k + 2 * p + 2, k + 2 * i + 1))
            })
        });
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SExpression {
    /// Built from the six component sums.
    pub definition: Q,
    /// The simplified closed form.
    pub simplified: Q,
}

/// The recurrence right-hand side for `r(n, l+1)` with the tree closed form
/// substituted for every earlier resistance, in both its defining and its
/// simplified form.
pub fn s_expression(n: i64, l: i64) -> Result<SExpression> {
    if n < 1 || l < 1 {
        return Err(Error::OutOfValidityRange {
            id: "s_expression".into(),
            params: vec![n, l],
        });
    }
    let big_n = n + l + 1;
    let w = |k: i64| int(4) - frac(2, big_n) - pow2(k - l);
    let u = |k: i64| frac(1, big_n) - pow2(k - n);
    let z = |k: i64, j: i64| pow2(1 + k - n) - pow2(j - l);

    let s1 = sum(1, l, |k| w(k) * int(n - k));
    let s2 = sum(1, l, |k| w(k) * pow2(1 - n - k) * tree_binomial_sum(n + k + 2, n, k));
    let s3 = sum(1, n, |k| u(k) * int(k - l));
    let s4 = sum(1, n, |k| u(k) * pow2(2 - k - l) * tree_binomial_sum(k + l + 2, k, l));
    let s5 = sum(1, n, |k| sum(1, l, |j| z(k, j) * int(k - j)));
    let s6 = sum(1, n, |k| {
        sum(1, l, |j| z(k, j) * pow2(1 - k - j) * tree_binomial_sum(k + j + 2, k, j))
    });

    let definition = recurrence_constant(n, l) + frac(1, 2 * big_n) * s1 + frac(1, big_n) * s2
        - frac(big_n + 1, big_n) * s3
        - frac(big_n + 1, big_n) * s4
        - frac(1, 2 * big_n) * s5
        - frac(1, big_n) * s6;

    let i_hi = (l + 1).div_euclid(2);
    let mut bracket = frac(l * l + l, big_n) + int(2 * l - 2) + pow2(1 - l)
        + int(l * l + 2 * n * l + 2 * n + 3 * l + 2) * pow2(1 - n);
    let ratio = frac(2 * n + 2 * l + 4, big_n);
    bracket += pow2(1 - l)
        * sum(1, i_hi, |i| {
            sum(1, n, |k| {
                int(i)
                    * pow2(-k)
                    * (binomial(k + l + 3, k + 2 * i + 2) - &ratio * &binomial(k + l + 2, k + 2 * i + 1))
            })
        });
    bracket += pow2(1 - n - l)
        * sum(1, i_hi, |i| {
            int(i)
                * (int(2) * binomial(n + l + 3, n + 2 * i + 1)
                    - binomial(n + l + 3, n + 2 * i + 2)
                    - int(2 * n + 2 * l + 4) * binomial(l + 3, 2 * i + 1))
        });
    let ratio = frac(n + l, big_n);
    bracket += pow2(2 - n)
        * sum(1, i_hi, |i| {
            sum(2 * i - 1, l, |k| {
                int(i)
                    * pow2(-k)
                    * (&ratio * &binomial(n + k + 2, n + 2 * i + 1) - binomial(n + k + 2, n + 2 * i)
                        + binomial(k + 3, 2 * i + 1))
            })
        });
    let simplified = int(2 * (n - l - 1)) + pow2(2 - n - l) * tree_binomial_sum(n + l + 3, n, l)
        + frac(1, big_n) * bracket;

    Ok(SExpression { definition, simplified })
}

/// The resistance-free terms of the tree recurrence for `r(n, l+1)`.
pub(crate) fn recurrence_constant(n: i64, l: i64) -> Q {
    let big_n = n + l + 1;
    frac(-3 * n * n + 3 * l * l - 2 * n * l - n + 5 * l + 2, 2 * big_n * big_n)
        + frac(l * l + 2 * n * l + 2 * n + 3 * l, big_n) * pow2(-n)
        + frac(n * n + n + 2, 2 * big_n) * pow2(-l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), int(1));
        }
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial_int(60, 30).to_string(), "118264581564861424");
    }

    /// Factorial definition as an independent oracle.
    #[test]
    fn binomial_matches_factorials() {
        let fact = |n: i64| (1..=n).fold(BigInt::one(), |acc, v| acc * v);
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(binomial_int(n, k), fact(n) / (fact(k) * fact(n - k)));
            }
        }
    }

    #[test]
    fn pascal_rule() {
        for n in 2..=31 {
            for k in 1..n {
                assert!(eval_identity(IdentityId::PascalRule, &[n, k]).unwrap().holds());
            }
        }
    }

    #[test]
    fn worked_examples() {
        let e = eval_identity(IdentityId::SumTwos, &[3]).unwrap();
        assert_eq!((e.lhs.clone(), e.rhs.clone()), (frac(7, 8), frac(7, 8)));

        let e = eval_identity(IdentityId::BinSumNM, &[2, 1]).unwrap();
        assert_eq!((e.lhs, e.rhs), (int(4), int(4)));

        let e = eval_identity(IdentityId::IEvenOddSum, &[2]).unwrap();
        assert_eq!((e.lhs, e.rhs), (int(32), int(32)));
    }

    #[test]
    fn validity_ranges() {
        use IdentityId::*;
        for (id, params) in [
            (SumInt, vec![0]),
            (BinEvenSumI, vec![1]),
            (BinOddSumI, vec![1]),
            (BinSumNMK, vec![2, 1, 2]),
            (PascalRule, vec![3, 3]),
            (IEvenOddSum, vec![-1]),
            (ManipOdd, vec![1]),
        ] {
            assert!(
                matches!(eval_identity(id, &params), Err(Error::OutOfValidityRange { .. })),
                "{id} {params:?}"
            );
        }
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(&id.to_string()), Some(id));
        }
        assert_eq!(IdentityId::from_name("sumtwos"), Some(IdentityId::SumTwos));
        assert_eq!(IdentityId::from_name("nope"), None);
    }

    #[test]
    fn g_and_h_examples() {
        for (n, p) in [(0, 0), (3, 2), (10, 5)] {
            assert!(g_expression(n, p).is_zero(), "g({n},{p})");
        }
        for (n, p) in [(0, 0), (4, 3), (12, 6)] {
            assert!(h_expression(n, p).is_zero(), "h({n},{p})");
        }
    }

    #[test]
    fn s_expression_examples() {
        for (n, l) in [(1, 1), (5, 4)] {
            let s = s_expression(n, l).unwrap();
            assert_eq!(s.definition, s.simplified, "s({n},{l})");
        }
        assert!(s_expression(0, 1).is_err());
    }

    #[test]
    fn manipulations_at_p_zero() {
        for n in 0..=15 {
            assert!(eval_identity(IdentityId::ManipOdd, &[n, 0]).unwrap().holds());
            let even = eval_identity(IdentityId::ManipEven, &[n, 0]).unwrap();
            assert!(even.lhs.is_zero() && even.rhs.is_zero());
        }
    }
}
