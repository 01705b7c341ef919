//! Conspicuous series of circle centres and the Fibonacci circle sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::DedekindSymbol;

/// Centre `k/n` of a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub k: i64,
    pub n: i64,
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

/// Closed-form families of centres visible in the `(n, k)` scatter plot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    /// `1/(2ℓ+1)`, the bottom row.
    A,
    /// `2ℓ/(2ℓ+1)`, the upper diagonal.
    APrime,
    /// `ℓ/(ℓ²-1)`, just above the bottom row.
    B,
    /// `(4ℓ±1)/8ℓ`
    C(Branch),
    /// `(8ℓ±3)/8(4ℓ±1)`, near slope 1/4.
    D(Branch),
    /// `(6ℓ±2)/(18ℓ±3)`, near slope 1/3.
    E(Branch),
}

impl Series {
    pub const ALL: [Series; 9] = [
        Series::A,
        Series::APrime,
        Series::B,
        Series::C(Branch::Minus),
        Series::C(Branch::Plus),
        Series::D(Branch::Minus),
        Series::D(Branch::Plus),
        Series::E(Branch::Minus),
        Series::E(Branch::Plus),
    ];

    /// Smallest valid `ℓ`.
    pub fn first_ell(self) -> i64 {
        match self {
            Series::A | Series::APrime | Series::E(Branch::Plus) => 0,
            Series::B => 2,
            Series::C(_) | Series::D(_) | Series::E(Branch::Minus) => 1,
        }
    }

    pub fn fraction(self, ell: i64) -> Result<Fraction> {
        if ell < self.first_ell() {
            return Err(Error::SeriesRange { series: self.to_string(), value: ell, min: self.first_ell() });
        }
        let (k, n) = match self {
            Series::A => (1, 2 * ell + 1),
            Series::APrime => (2 * ell, 2 * ell + 1),
            Series::B => (ell, ell * ell - 1),
            Series::C(b) => (4 * ell + b.sign(), 8 * ell),
            Series::D(b) => (8 * ell + 3 * b.sign(), 8 * (4 * ell + b.sign())),
            Series::E(b) => (6 * ell + 2 * b.sign(), 18 * ell + 3 * b.sign()),
        };
        Ok(Fraction { k, n })
    }

    /// The first `count` terms starting at [`first_ell`](Self::first_ell).
    pub fn terms(self, count: usize) -> Vec<(i64, Fraction)> {
        (self.first_ell()..)
            .take(count)
            .map(|ell| (ell, self.fraction(ell).expect("in range")))
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let branch = |b: &Branch| if *b == Branch::Plus { "+" } else { "-" };
        match self {
            Series::A => f.write_str("A"),
            Series::APrime => f.write_str("A'"),
            Series::B => f.write_str("B"),
            Series::C(b) => write!(f, "C{}", branch(b)),
            Series::D(b) => write!(f, "D{}", branch(b)),
            Series::E(b) => write!(f, "E{}", branch(b)),
        }
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Series::ALL
            .into_iter()
            .find(|series| series.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown series {s:?}; expected one of A, A', B, C±, D±, E±")))
    }
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`; negative indices follow `F_{-n} = (-1)^{n+1} F_n`.
pub fn fibonacci(n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n.unsigned_abs() {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && n % 2 == 0 {
        -a
    } else {
        a
    }
}

fn check_index(n: i64, min: i64) -> Result<()> {
    if n < min {
        return Err(Error::IndexRange { value: n, min });
    }
    Ok(())
}

/// `F_{2n-1}/(F_{2n}, F_{2n-2})`: centres `1/1, 2/3, 5/8, 13/21, …`.
pub fn fib_symbol_a(n: i64) -> Result<DedekindSymbol> {
    check_index(n, 1)?;
    Ok(DedekindSymbol::new(fibonacci(2 * n - 1), fibonacci(2 * n), fibonacci(2 * n - 2)))
}

/// Sequence A with curvature and co-curvature switched: `1/1, 5/3, 13/8, …`.
pub fn fib_symbol_b(n: i64) -> Result<DedekindSymbol> {
    fib_symbol_a(n).map(|s| s.invert())
}

/// `F_n²/(F_{n-1}F_{n+2}, F_{n+1}F_{n-2})`: centres `1/3, 4/5, 9/16, …`.
pub fn fib_symbol_c(n: i64) -> Result<DedekindSymbol> {
    check_index(n, 2)?;
    let f = fibonacci;
    Ok(DedekindSymbol::new(f(n) * f(n), f(n - 1) * f(n + 2), f(n + 1) * f(n - 2)))
}

/// Sequence C with curvature and co-curvature switched: `4/3, 9/5, 25/16, …`.
pub fn fib_symbol_d(n: i64) -> Result<DedekindSymbol> {
    fib_symbol_c(n).map(|s| s.invert())
}

/// `NT`: `ẋ/(β, γ) ↦ (ẋ + β)/(2ẋ + β + γ, β)`.
pub fn apply_a_operator(s: &DedekindSymbol) -> DedekindSymbol {
    let two = BigInt::from(2);
    DedekindSymbol::new(&s.xdot + &s.beta, &two * &s.xdot + &s.beta + &s.gamma, s.beta.clone())
}

/// Which Fibonacci sequence to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibSequence {
    A,
    B,
    C,
    D,
}

impl FibSequence {
    pub fn first_index(self) -> i64 {
        match self {
            FibSequence::A | FibSequence::B => 1,
            FibSequence::C | FibSequence::D => 2,
        }
    }

    pub fn symbol(self, n: i64) -> Result<DedekindSymbol> {
        match self {
            FibSequence::A => fib_symbol_a(n),
            FibSequence::B => fib_symbol_b(n),
            FibSequence::C => fib_symbol_c(n),
            FibSequence::D => fib_symbol_d(n),
        }
    }

    pub fn terms(self, count: usize) -> Vec<(i64, DedekindSymbol)> {
        (self.first_index()..)
            .take(count)
            .map(|n| (n, self.symbol(n).expect("in range")))
            .collect()
    }
}

impl FromStr for FibSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fib-a" => Ok(FibSequence::A),
            "fib-b" => Ok(FibSequence::B),
            "fib-c" => Ok(FibSequence::C),
            "fib-d" => Ok(FibSequence::D),
            _ => Err(Error::Parse(format!("unknown Fibonacci sequence {s:?}"))),
        }
    }
}
