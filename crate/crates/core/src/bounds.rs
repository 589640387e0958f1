//! Closed-form crossing-number bounds in exact arithmetic, and an exhaustive
//! check of the degree-sum inequalities behind the light-face argument.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Roots;
use num_traits::{ToPrimitive, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundError {
    /// The bounds need minimum degree at least 3.
    MinDegreeBelowThree(usize),
    ZeroVertices,
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::MinDegreeBelowThree(d) => write!(f, "minimum degree {d} is below 3"),
            BoundError::ZeroVertices => f.write_str("vertex count must be positive"),
        }
    }
}

impl core::error::Error for BoundError {}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i128)
}

/// cr(G) ≤ (3·sk² + (4n − 17)·sk) / 6.
pub fn bound_thm32(n: usize, sk: usize) -> Rational {
    let (n, sk) = (n as i128, sk as i128);
    Rational::new(3 * sk * sk + (4 * n - 17) * sk, 6)
}

/// Bound for a k-crossing-critical graph of minimum degree δ containing a
/// cycle with μ = s:
/// `2k + (s − 5)/2` when δ = 3, and `2k − sk + δ(s − δ + 2) / (2(δ − 2))`
/// when δ ≥ 4.
pub fn bound_thm41(k: usize, delta: usize, s: usize, sk: usize) -> Result<Rational, BoundError> {
    if delta < 3 {
        return Err(BoundError::MinDegreeBelowThree(delta));
    }
    let two_k = int(2 * k);
    if delta == 3 {
        return Ok(two_k + (int(s) - int(5)) / int(2));
    }
    let d = delta as i128;
    Ok(two_k - int(sk) + Rational::new(d * (s as i128 - d + 2), 2 * (d - 2)))
}

/// A bound value: exact, or an irrational number pinned between two
/// rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Exact(Rational),
    /// `lo < value < hi`.
    Interval { lo: Rational, hi: Rational },
}

impl BoundValue {
    /// Decides `c ≤ value` for an integer `c`; `None` only if the interval
    /// straddles `c`.
    pub fn admits(&self, c: usize) -> Option<bool> {
        let c = int(c);
        match self {
            BoundValue::Exact(v) => Some(c <= *v),
            BoundValue::Interval { lo, hi } => {
                if c <= *lo {
                    Some(true)
                } else if c >= *hi {
                    Some(false)
                } else {
                    None
                }
            }
        }
    }

    pub fn lower(&self) -> Rational {
        match self {
            BoundValue::Exact(v) => *v,
            BoundValue::Interval { lo, .. } => *lo,
        }
    }

    pub fn upper(&self) -> Rational {
        match self {
            BoundValue::Exact(v) => *v,
            BoundValue::Interval { hi, .. } => *hi,
        }
    }

    pub fn width(&self) -> Rational {
        self.upper() - self.lower()
    }

    pub fn approx(&self) -> f64 {
        let mid = (self.lower() + self.upper()) / int(2);
        mid.numer().to_f64().unwrap_or(f64::NAN) / mid.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Interval { lo, hi } => write!(f, "({lo}, {hi})"),
        }
    }
}

/// Digits of √k used for interval bounds; the interval width is at most
/// 10^-9 / (2n).
pub const SQRT_DIGITS: u32 = 9;

/// Bounds on √k: exact when k is a perfect square, otherwise
/// `lo < √k < hi` with `hi − lo = 10^-digits`.
pub fn sqrt_bounds(k: usize, digits: u32) -> BoundValue {
    let k = k as i128;
    let r = k.sqrt();
    if r * r == k {
        return BoundValue::Exact(Rational::from_integer(r));
    }
    let scale = 10i128.pow(digits);
    let s = (k * scale * scale).sqrt();
    BoundValue::Interval {
        lo: Rational::new(s, scale),
        hi: Rational::new(s + 1, scale),
    }
}

/// Bound for k-crossing-critical graphs on n vertices: `2.5(k + 1)` when
/// δ = 3, `2(k + 4)` when δ = 4 and `2k − √k/(2n) + 35/6` when δ ≥ 5.
pub fn bound_thm42(k: usize, delta: usize, n: usize) -> Result<BoundValue, BoundError> {
    match delta {
        0..=2 => Err(BoundError::MinDegreeBelowThree(delta)),
        3 => Ok(BoundValue::Exact(Rational::new(5, 2) * int(k + 1))),
        4 => Ok(BoundValue::Exact(int(2 * (k + 4)))),
        _ => {
            if n == 0 {
                return Err(BoundError::ZeroVertices);
            }
            let base = int(2 * k) + Rational::new(35, 6);
            let two_n = int(2 * n);
            Ok(match sqrt_bounds(k, SQRT_DIGITS) {
                BoundValue::Exact(r) => BoundValue::Exact(base - r / two_n),
                BoundValue::Interval { lo, hi } => BoundValue::Interval {
                    lo: base - hi / two_n,
                    hi: base - lo / two_n,
                },
            })
        }
    }
}

/// One of the three degree-sum implications: if Σ_{i ≤ terms} 1/d_i exceeds
/// `threshold` then Σ_{i ≤ summed} (d_i − 2) ≤ `limit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma21Part {
    pub terms: usize,
    pub threshold: (i128, i128),
    pub summed: usize,
    pub limit: usize,
}

pub const LEMMA21_PARTS: [Lemma21Part; 3] = [
    Lemma21Part {
        terms: 3,
        threshold: (1, 2),
        summed: 2,
        limit: 10,
    },
    Lemma21Part {
        terms: 4,
        threshold: (1, 1),
        summed: 3,
        limit: 5,
    },
    Lemma21Part {
        terms: 5,
        threshold: (3, 2),
        summed: 4,
        limit: 4,
    },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma21Check {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Lemma21Check {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

impl Lemma21Part {
    fn threshold(&self) -> Rational {
        Rational::new(self.threshold.0, self.threshold.1)
    }

    /// Evaluates the implication on sorted degrees (only the first `terms`
    /// entries are read).
    pub fn check(&self, degrees: &[usize]) -> Lemma21Check {
        let d = &degrees[..self.terms];
        let recip = d.iter().fold(Rational::zero(), |acc, &x| acc + Rational::new(1, x as i128));
        let excess: usize = d[..self.summed].iter().map(|&x| x - 2).sum();
        Lemma21Check {
            hypothesis: recip > self.threshold(),
            conclusion: excess <= self.limit,
        }
    }
}

/// Outcome of the exhaustive check for one part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma21PartReport {
    pub part: Lemma21Part,
    /// Sorted tuples in range satisfying the hypothesis.
    pub hypothesis_tuples: usize,
    pub counterexamples: Vec<Vec<usize>>,
}

/// Checks all three implications over every sorted tuple
/// `3 ≤ d_1 ≤ … ≤ d_r ≤ d_max`. Branches whose reciprocal sum cannot exceed
/// the threshold are cut, which skips only tuples where the hypothesis fails.
pub fn lemma21_report(d_max: usize) -> Vec<Lemma21PartReport> {
    LEMMA21_PARTS
        .iter()
        .map(|&part| {
            let mut report = Lemma21PartReport {
                part,
                hypothesis_tuples: 0,
                counterexamples: Vec::new(),
            };
            let mut tuple = Vec::with_capacity(part.terms);
            extend(&part, d_max, &mut tuple, Rational::zero(), &mut report);
            report
        })
        .collect()
}

fn extend(
    part: &Lemma21Part,
    d_max: usize,
    tuple: &mut Vec<usize>,
    recip: Rational,
    report: &mut Lemma21PartReport,
) {
    if tuple.len() == part.terms {
        let c = part.check(tuple);
        if c.hypothesis {
            report.hypothesis_tuples += 1;
            if !c.conclusion {
                report.counterexamples.push(tuple.clone());
            }
        }
        return;
    }
    let from = tuple.last().copied().unwrap_or(3);
    let remaining = (part.terms - tuple.len()) as i128;
    for d in from..=d_max {
        // later entries are ≥ d, so this is the largest reachable sum
        if recip + Rational::new(remaining, d as i128) <= part.threshold() {
            break;
        }
        tuple.push(d);
        extend(part, d_max, tuple, recip + Rational::new(1, d as i128), report);
        tuple.pop();
    }
}

/// True when no tuple up to `d_max` violates any of the three implications.
pub fn verify_lemma21(d_max: usize) -> bool {
    lemma21_report(d_max)
        .iter()
        .all(|r| r.counterexamples.is_empty())
}
