//! Direct generation of the Dedekind circles from a divisibility criterion.
//!
//! A fraction `k/n` (`n ≥ 1`) is the centre of a circle of radius `1/n` in the
//! system iff either `n` is odd and `n | k² - 1`, or `8 | n` and `(k² - 1)/n`
//! is odd. Vertical lines sit at `x = k/2` for odd `k`. The criterion only
//! depends on `k mod n`, so the numerator sets `K(n) ⊂ [0, n)` generate
//! every window by integer translation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::DedekindSymbol;
use crate::rational::{ceil_i64, format_rational};

/// Circle of curvature `n ≥ 1` centred at `k/n` with co-curvature `m`,
/// where `k² - 1 = n·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissibleCircle {
    pub n: i64,
    pub k: i64,
    pub m: i64,
}

impl AdmissibleCircle {
    /// Builds the circle at `k/n`, or `None` if `k/n` is not admissible.
    pub fn new(k: i64, n: i64) -> Option<Self> {
        if n < 1 || !is_admissible(k, n).unwrap_or(false) {
            return None;
        }
        let m = ((k as i128 * k as i128 - 1) / n as i128) as i64;
        Some(Self { n, k, m })
    }

    pub fn center(&self) -> BigRational {
        BigRational::new(self.k.into(), self.n.into())
    }

    pub fn radius(&self) -> BigRational {
        BigRational::new(1.into(), self.n.into())
    }

    pub fn to_symbol(&self) -> DedekindSymbol {
        DedekindSymbol::new(self.k, self.n, self.m)
    }
}

/// Vertical line `x = k/2`, `k` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VerticalLine {
    pub k: i64,
}

impl VerticalLine {
    pub fn position(&self) -> BigRational {
        BigRational::new(self.k.into(), 2.into())
    }

    /// `±1/(0, ±k)` with the positive co-curvature orientation.
    pub fn to_symbol(&self) -> DedekindSymbol {
        if self.k > 0 {
            DedekindSymbol::new(1, 0, self.k)
        } else {
            DedekindSymbol::new(-1, 0, -self.k)
        }
    }
}

/// One record of a half-plane enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HalfPlaneItem {
    Line(VerticalLine),
    Circle(AdmissibleCircle),
}

impl HalfPlaneItem {
    /// `(n, k)` with `n = 0` for lines; the sort key of every data product.
    pub fn key(&self) -> (i64, i64) {
        match self {
            Self::Line(l) => (0, l.k),
            Self::Circle(c) => (c.n, c.k),
        }
    }

    pub fn from_key(n: i64, k: i64) -> Result<Self> {
        if n == 0 {
            if k % 2 == 0 {
                return Err(Error::Parse(format!("line numerator {k} must be odd")));
            }
            return Ok(Self::Line(VerticalLine { k }));
        }
        if n < 0 {
            return Err(Error::NegativeCurvature(n));
        }
        AdmissibleCircle::new(k, n)
            .map(Self::Circle)
            .ok_or_else(|| Error::Parse(format!("{k}/{n} is not an admissible centre")))
    }

    pub fn to_symbol(&self) -> DedekindSymbol {
        match self {
            Self::Line(l) => l.to_symbol(),
            Self::Circle(c) => c.to_symbol(),
        }
    }
}

impl PartialOrd for HalfPlaneItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfPlaneItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// `K(n)`: the admissible numerators in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumeratorSet {
    pub n: i64,
    pub ks: Vec<i64>,
}

impl fmt::Display for NumeratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, K(n)=", self.n)?;
        let ks: Vec<String> = self.ks.iter().map(i64::to_string).collect();
        f.write_str(&ks.join(", "))
    }
}

/// Whether `k/n` is a circle centre (`n ≥ 1`) or `k/2` a line (`n = 0`).
pub fn is_admissible(k: i64, n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::NegativeCurvature(n));
    }
    if n == 0 {
        return Ok(k % 2 != 0);
    }
    let k = k as i128;
    let n = n as i128;
    let numerator = k * k - 1;
    Ok(if n % 2 == 1 {
        numerator % n == 0
    } else if n % 8 == 0 {
        numerator % n == 0 && (numerator / n) % 2 != 0
    } else {
        false
    })
}

pub fn numerators(n: i64) -> Result<NumeratorSet> {
    if n < 1 {
        return Err(Error::CurvatureTooSmall(n));
    }
    // Residues with n odd or 8 | n; all other curvatures are empty.
    let ks = if n % 2 == 1 || n % 8 == 0 {
        (0..n).filter(|&k| is_admissible(k, n).unwrap_or(false)).collect()
    } else {
        Vec::new()
    };
    Ok(NumeratorSet { n, ks })
}

/// Every circle with `1 ≤ n ≤ n_max` centred in `[x_lo, x_hi)`, plus every
/// vertical line in that window, sorted by `(n, k)` with lines (`n = 0`) first.
pub fn enumerate_halfplane(n_max: i64, x_lo: &BigRational, x_hi: &BigRational) -> Result<Vec<HalfPlaneItem>> {
    if n_max < 1 {
        return Err(Error::CurvatureTooSmall(n_max));
    }
    if x_lo >= x_hi {
        return Err(Error::EmptyRange { lo: format_rational(x_lo), hi: format_rational(x_hi) });
    }
    let mut out = Vec::new();

    let two = BigRational::from_integer(BigInt::from(2));
    let (first, last) = (ceil_i64(&(x_lo * &two))?, ceil_i64(&(x_hi * &two))?);
    out.extend(
        (first..last)
            .filter(|k| k % 2 != 0)
            .map(|k| HalfPlaneItem::Line(VerticalLine { k })),
    );

    for n in 1..=n_max {
        let residues = numerators(n)?;
        if residues.ks.is_empty() {
            continue;
        }
        let nr = BigRational::from_integer(BigInt::from(n));
        let (lo, hi) = (ceil_i64(&(x_lo * &nr))?, ceil_i64(&(x_hi * &nr))?);
        // k in [lo, hi): translate each residue by whole periods of n.
        let mut ks: Vec<i64> = Vec::new();
        for &r in &residues.ks {
            let mut k = r + (lo - r).div_euclid(n) * n;
            if k < lo {
                k += n;
            }
            while k < hi {
                ks.push(k);
                k += n;
            }
        }
        ks.sort_unstable();
        out.extend(ks.into_iter().map(|k| {
            HalfPlaneItem::Circle(AdmissibleCircle::new(k, n).expect("translate of an admissible residue"))
        }));
    }
    Ok(out)
}

/// Integer solution `k² - 1 = n·m` with `n ≥ 0` and exactly two odd entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnmTriple {
    pub k: i64,
    pub n: i64,
    pub m: i64,
}

impl KnmTriple {
    pub fn to_symbol(&self) -> DedekindSymbol {
        DedekindSymbol::new(self.k, self.n, self.m)
    }
}

/// All solutions with `0 ≤ k ≤ k_max` and `n, |m| ≤ entry_bound`, sorted by
/// `(k, n, m)`.
///
/// For `k ≥ 2` the solutions are finite; `entry_bound ≥ k_max² - 1` returns
/// all of them. For `k = 1` there are infinitely many (`n = 0` with any odd
/// `m`, and `m = 0` with any odd `n`), so the bound is what truncates.
pub fn solutions_knm(k_max: i64, entry_bound: i64) -> Vec<KnmTriple> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        let target = k as i128 * k as i128 - 1;
        let two_odd = |n: i64, m: i64| [k, n, m].iter().filter(|v| *v % 2 != 0).count() == 2;
        if target == 0 {
            // n = 0 with any m, or m = 0 with any n ≥ 1.
            for m in -entry_bound..=entry_bound {
                if two_odd(0, m) {
                    out.push(KnmTriple { k, n: 0, m });
                }
            }
            for n in 1..=entry_bound {
                if two_odd(n, 0) {
                    out.push(KnmTriple { k, n, m: 0 });
                }
            }
            continue;
        }
        let limit = (target.unsigned_abs() as i128).min(entry_bound as i128);
        for n in 1..=limit {
            if target % n != 0 {
                continue;
            }
            let m = target / n;
            if m.abs() > entry_bound as i128 {
                continue;
            }
            let (n, m) = (n as i64, m as i64);
            if two_odd(n, m) {
                out.push(KnmTriple { k, n, m });
            }
        }
    }
    out.sort();
    out
}
