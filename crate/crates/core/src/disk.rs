//! The tessellation carried to the Poincaré disk.
//!
//! The half-plane to disk map sends `ẋ/(β, γ)` to the doubled symbol
//! `(2ẋ, γ - β)/(β + γ, β + γ)`, i.e. the circle centred at `(p/n, q/n)` with
//! radius `2/n` where `(p, q, n) = (2ẋ, γ - β, β + γ)`. Doubling keeps every
//! entry integral. Every image satisfies `n² + 4 = p² + q²`; conversely every
//! solution with `p ≡ 0 (mod 2)` for odd `n`, or `p ≡ 0 (mod 4)` for
//! `4 | n`, is an image, which gives a direct Diophantine enumeration.
//!
//! Convention: `p` is the horizontal coordinate and always carries the
//! stronger divisibility (even for odd `n`, a multiple of 4 when `4 | n`).
//! The line `y = 0` is `n = 0`, `(p, q) = (0, ±2)`; `(0, 2)` is canonical.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::DedekindSymbol;
use crate::rational::big_to_i64;

/// Doubled disk symbol `(p, q)/(n, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiskSymbol {
    pub p: i64,
    pub q: i64,
    pub n: i64,
}

impl DiskSymbol {
    pub fn new(p: i64, q: i64, n: i64) -> Self {
        Self { p, q, n }
    }

    /// The line `y = 0`, image of the central circle.
    pub fn axis() -> Self {
        Self::new(0, 2, 0)
    }

    pub fn is_line(&self) -> bool {
        self.n == 0
    }

    pub fn on_quadric(&self) -> bool {
        let sq = |v: i64| v as i128 * v as i128;
        sq(self.n) + 4 == sq(self.p) + sq(self.q)
    }

    /// Identifies the two encodings `(0, ±2)` of the line `y = 0`.
    pub fn canonical(&self) -> Self {
        if self.is_line() {
            Self::axis()
        } else {
            *self
        }
    }

    pub fn center(&self) -> Option<(BigRational, BigRational)> {
        (self.n != 0).then(|| {
            (
                BigRational::new(self.p.into(), self.n.into()),
                BigRational::new(self.q.into(), self.n.into()),
            )
        })
    }

    pub fn radius(&self) -> Option<BigRational> {
        (self.n != 0).then(|| BigRational::new(2.into(), self.n.into()))
    }
}

/// Half-plane symbol to doubled disk symbol.
///
/// Fails only when an entry of the image does not fit in `i64`.
pub fn phi(s: &DedekindSymbol) -> Result<DiskSymbol> {
    let p = big_to_i64(&(&s.xdot * BigInt::from(2)))?;
    let q = big_to_i64(&(&s.gamma - &s.beta))?;
    let n = big_to_i64(&(&s.beta + &s.gamma))?;
    Ok(DiskSymbol { p, q, n })
}

/// `(p, q)/(n, n) ↦ (p/2)/((n - q)/2, (n + q)/2)`.
pub fn phi_inv(d: &DiskSymbol) -> Result<DedekindSymbol> {
    if !d.on_quadric() {
        return Err(Error::NotOnQuadric { p: d.p, q: d.q, n: d.n });
    }
    if d.p % 2 != 0 || (d.n - d.q) % 2 != 0 {
        return Err(Error::HalfIntegral { p: d.p, q: d.q, n: d.n });
    }
    Ok(DedekindSymbol::new(d.p / 2, (d.n - d.q) / 2, (d.n + d.q) / 2))
}

fn permitted(n: i64) -> Result<()> {
    if n < 0 {
        return Err(Error::NegativeCurvature(n));
    }
    if n % 4 == 2 {
        return Err(Error::CurvatureNotPermitted(n));
    }
    Ok(())
}

/// Solutions of `n² + 4 = p² + q²` with `p, q ≥ 0` and `p` carrying the
/// divisibility of the convention above, sorted by `p`.
pub fn pq_solutions(n: i64) -> Result<Vec<(i64, i64)>> {
    permitted(n)?;
    let target = n as i128 * n as i128 + 4;
    let p_modulus = if n % 2 == 1 { 2 } else { 4 };
    let p_max = target.sqrt();
    let mut out = Vec::new();
    let mut p: i128 = 0;
    while p <= p_max {
        let rest = target - p * p;
        let q = rest.sqrt();
        if q * q == rest {
            out.push((p as i64, q as i64));
        }
        p += p_modulus;
    }
    Ok(out)
}

/// The axis `y = 0` followed by every circle with `1 ≤ n ≤ n_max` in all four
/// sign quadrants, sorted by `(n, p, q)`. Curvatures `≡ 2 (mod 4)` are skipped.
pub fn enumerate_disk(n_max: i64) -> Result<Vec<DiskSymbol>> {
    if n_max < 0 {
        return Err(Error::NegativeCurvature(n_max));
    }
    let mut out = vec![DiskSymbol::axis()];
    for n in 1..=n_max {
        if n % 4 == 2 {
            continue;
        }
        let mut row = Vec::new();
        for (p, q) in pq_solutions(n)? {
            for sp in [1, -1] {
                for sq in [1, -1] {
                    row.push(DiskSymbol::new(sp * p, sq * q, n));
                }
            }
        }
        row.sort();
        row.dedup();
        out.extend(row);
    }
    Ok(out)
}
