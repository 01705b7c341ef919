//! Circles and lines of the plane as vectors of Minkowski space.
//!
//! A circle with centre `(x, y)` and radius `r` becomes the vector
//! `(ẋ, ẏ, β, γ) = (x/r, y/r, 1/r, γ)` where the co-curvature `γ` is fixed by
//! the normalization `-ẋ² - ẏ² + βγ = -1`. A line `2ẋx + 2ẏy = γ` has `β = 0`.
//! Similarities and the inversion in the unit circle act on these vectors by
//! matrices preserving the quadratic form.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::modular::DedekindSymbol;
use crate::rational::{format_rational, int, rational_from_json, rational_to_json, ratio, sqrt_exact};

/// Minkowski vector `(ẋ, ẏ, β, γ)` of an oriented circle or line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircleSymbol4 {
    pub xdot: BigRational,
    pub ydot: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
}

impl CircleSymbol4 {
    pub fn new(xdot: BigRational, ydot: BigRational, beta: BigRational, gamma: BigRational) -> Self {
        Self { xdot, ydot, beta, gamma }
    }

    pub fn from_ints(xdot: i64, ydot: i64, beta: i64, gamma: i64) -> Self {
        Self::new(int(xdot), int(ydot), int(beta), int(gamma))
    }

    /// `-ẋ² - ẏ² + βγ`; equals `-1` for every proper circle or line.
    pub fn norm(&self) -> BigRational {
        -(&self.xdot * &self.xdot) - &self.ydot * &self.ydot + &self.beta * &self.gamma
    }

    pub fn is_normalized(&self) -> bool {
        self.norm() == -BigRational::one()
    }

    /// Symmetric bilinear form whose diagonal is [`norm`](Self::norm).
    pub fn inner(&self, other: &Self) -> BigRational {
        let half = ratio(1, 2);
        -(&self.xdot * &other.xdot) - &self.ydot * &other.ydot
            + half * (&self.beta * &other.gamma + &self.gamma * &other.beta)
    }

    /// Positive-curvature representative; lines keep their orientation.
    pub fn canonical(&self) -> Self {
        if self.beta.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn entries(&self) -> [&BigRational; 4] {
        [&self.xdot, &self.ydot, &self.beta, &self.gamma]
    }

    /// Embeds a real-axis symbol `ẋ/(β, γ)` as `(ẋ, 0, β, γ)`.
    pub fn from_dedekind(s: &DedekindSymbol) -> Self {
        let r = |v: &BigInt| BigRational::from_integer(v.clone());
        Self::new(r(&s.xdot), BigRational::zero(), r(&s.beta), r(&s.gamma))
    }

    /// The reduced triple, when `ẏ = 0` and all entries are integers.
    pub fn to_dedekind(&self) -> Option<DedekindSymbol> {
        if !self.ydot.is_zero() || !self.entries().iter().all(|e| e.is_integer()) {
            return None;
        }
        Some(DedekindSymbol::new(
            self.xdot.to_integer(),
            self.beta.to_integer(),
            self.gamma.to_integer(),
        ))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "xdot": rational_to_json(&self.xdot),
            "ydot": rational_to_json(&self.ydot),
            "beta": rational_to_json(&self.beta),
            "gamma": rational_to_json(&self.gamma),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| Error::Parse(format!("missing field {name:?}")))
                .and_then(rational_from_json)
        };
        Ok(Self::new(field("xdot")?, field("ydot")?, field("beta")?, field("gamma")?))
    }
}

impl Neg for CircleSymbol4 {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.xdot, -self.ydot, -self.beta, -self.gamma)
    }
}

impl fmt::Display for CircleSymbol4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})/({}, {})",
            format_rational(&self.xdot),
            format_rational(&self.ydot),
            format_rational(&self.beta),
            format_rational(&self.gamma)
        )
    }
}

impl Serialize for CircleSymbol4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CircleSymbol4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

/// Which side of a circle a symbol describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// The disk bounded by the circle (positive curvature).
    Interior,
    /// The complement of that disk (negative curvature).
    Exterior,
}

/// Plain Euclidean description of a circle or a line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EuclideanShape {
    Circle {
        cx: BigRational,
        cy: BigRational,
        r: BigRational,
        orientation: Orientation,
    },
    /// The line `2ẋx + 2ẏy = γ`.
    Line {
        xdot: BigRational,
        ydot: BigRational,
        gamma: BigRational,
    },
}

impl EuclideanShape {
    pub fn circle(cx: BigRational, cy: BigRational, r: BigRational) -> Result<Self> {
        let shape = Self::Circle { cx, cy, r, orientation: Orientation::Interior };
        shape.validate()?;
        Ok(shape)
    }

    pub fn line(xdot: BigRational, ydot: BigRational, gamma: BigRational) -> Result<Self> {
        let shape = Self::Line { xdot, ydot, gamma };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Circle { r, .. } if !r.is_positive() => Err(Error::NonPositiveRadius),
            Self::Line { xdot, ydot, .. } if xdot.is_zero() && ydot.is_zero() => Err(Error::ZeroNormal),
            _ => Ok(()),
        }
    }
}

/// Minkowski vector of a circle or line.
///
/// Lines are rescaled to a unit normal; this needs `ẋ² + ẏ²` to be the
/// square of a rational, otherwise [`Error::IrrationalNormal`] is returned.
pub fn symbol_from_circle(shape: &EuclideanShape) -> Result<CircleSymbol4> {
    shape.validate()?;
    match shape {
        EuclideanShape::Circle { cx, cy, r, orientation } => {
            let beta = r.recip();
            let xdot = cx / r;
            let ydot = cy / r;
            let gamma = (&xdot * &xdot + &ydot * &ydot - BigRational::one()) / &beta;
            let symbol = CircleSymbol4::new(xdot, ydot, beta, gamma);
            Ok(match orientation {
                Orientation::Interior => symbol,
                Orientation::Exterior => -symbol,
            })
        }
        EuclideanShape::Line { xdot, ydot, gamma } => {
            let length = sqrt_exact(&(xdot * xdot + ydot * ydot)).ok_or(Error::IrrationalNormal)?;
            Ok(CircleSymbol4::new(
                xdot / &length,
                ydot / &length,
                BigRational::zero(),
                gamma / &length,
            ))
        }
    }
}

/// Reads the position of a circle or line back off its symbol.
pub fn circle_from_symbol(c: &CircleSymbol4) -> Result<EuclideanShape> {
    if !c.is_normalized() {
        return Err(Error::NotNormalized(format!("{c} has norm {}", format_rational(&c.norm()))));
    }
    if c.beta.is_zero() {
        return Ok(EuclideanShape::Line {
            xdot: c.xdot.clone(),
            ydot: c.ydot.clone(),
            gamma: c.gamma.clone(),
        });
    }
    let (c, orientation) = if c.beta.is_positive() {
        (c.clone(), Orientation::Interior)
    } else {
        (-c.clone(), Orientation::Exterior)
    };
    Ok(EuclideanShape::Circle {
        cx: &c.xdot / &c.beta,
        cy: &c.ydot / &c.beta,
        r: c.beta.recip(),
        orientation,
    })
}

/// 4×4 rational matrix acting on column vectors `(ẋ, ẏ, β, γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lorentz4 {
    rows: [[BigRational; 4]; 4],
}

impl Lorentz4 {
    pub fn from_rows(rows: [[BigRational; 4]; 4]) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[[BigRational; 4]; 4] {
        &self.rows
    }

    fn from_fn(f: impl Fn(usize, usize) -> BigRational) -> Self {
        Self { rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    /// Gram matrix of the quadratic form: `diag(-1, -1)` on the position
    /// block and `[[0, 1/2], [1/2, 0]]` on the curvature block.
    pub fn metric() -> Self {
        Self::from_fn(|i, j| match (i, j) {
            (0, 0) | (1, 1) => int(-1),
            (2, 3) | (3, 2) => ratio(1, 2),
            _ => BigRational::zero(),
        })
    }

    /// Translation of the plane by `(a, b)`.
    pub fn translation(a: BigRational, b: BigRational) -> Self {
        let zero = BigRational::zero;
        let one = BigRational::one;
        let two = int(2);
        let sq = &a * &a + &b * &b;
        Self::from_rows([
            [one(), zero(), a.clone(), zero()],
            [zero(), one(), b.clone(), zero()],
            [zero(), zero(), one(), zero()],
            [&two * &a, &two * &b, sq, one()],
        ])
    }

    /// Inversion in the unit circle centred at the origin: swaps `β` and `γ`.
    pub fn inversion() -> Self {
        Self::from_fn(|i, j| match (i, j) {
            (0, 0) | (1, 1) | (2, 3) | (3, 2) => BigRational::one(),
            _ => BigRational::zero(),
        })
    }

    /// Dilation of the plane by `s` about the origin.
    pub fn dilation(s: BigRational) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroDilation);
        }
        let inv = s.recip();
        Ok(Self::from_fn(|i, j| match (i, j) {
            (0, 0) | (1, 1) => BigRational::one(),
            (2, 2) => inv.clone(),
            (3, 3) => s.clone(),
            _ => BigRational::zero(),
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    /// `AᵀgA = g`.
    pub fn preserves_metric(&self) -> bool {
        let g = Self::metric();
        &(&self.transpose() * &g) * self == g
    }

    pub fn apply(&self, c: &CircleSymbol4) -> CircleSymbol4 {
        let v = c.entries();
        let row = |i: usize| {
            self.rows[i]
                .iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (a, x)| acc + a * x)
        };
        CircleSymbol4::new(row(0), row(1), row(2), row(3))
    }
}

impl Mul for &Lorentz4 {
    type Output = Lorentz4;

    fn mul(self, rhs: &Lorentz4) -> Lorentz4 {
        Lorentz4::from_fn(|i, j| {
            (0..4).fold(BigRational::zero(), |acc, k| acc + &self.rows[i][k] * &rhs.rows[k][j])
        })
    }
}

impl Mul for Lorentz4 {
    type Output = Lorentz4;

    fn mul(self, rhs: Lorentz4) -> Lorentz4 {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn circle(cx: BigRational, cy: BigRational, r: BigRational) -> EuclideanShape {
        EuclideanShape::circle(cx, cy, r).unwrap()
    }

    #[test]
    fn symbol_of_disk_at_half_two_thirds() {
        let s = symbol_from_circle(&circle(ratio(1, 2), ratio(2, 3), ratio(1, 6))).unwrap();
        assert_eq!(s, CircleSymbol4::from_ints(3, 4, 6, 4));
    }

    #[test]
    fn symbol_of_unit_circle() {
        let s = symbol_from_circle(&circle(int(0), int(0), int(1))).unwrap();
        assert_eq!(s, CircleSymbol4::from_ints(0, 0, 1, -1));
    }

    #[test]
    fn symbol_of_third_circle() {
        // γ = (ẋ² + ẏ² - 1)/β recomputed by hand: (1 + 0 - 1)/3 = 0.
        let s = symbol_from_circle(&circle(ratio(1, 3), int(0), ratio(1, 3))).unwrap();
        assert_eq!(s, CircleSymbol4::from_ints(1, 0, 3, 0));
        assert!(s.is_normalized());
    }

    #[test]
    fn exterior_orientation_negates() {
        let shape = EuclideanShape::Circle {
            cx: ratio(1, 2),
            cy: ratio(2, 3),
            r: ratio(1, 6),
            orientation: Orientation::Exterior,
        };
        let s = symbol_from_circle(&shape).unwrap();
        assert_eq!(s, CircleSymbol4::from_ints(-3, -4, -6, -4));
        assert_eq!(circle_from_symbol(&s).unwrap(), shape);
    }

    #[test]
    fn reads_circles_back() {
        let c = circle_from_symbol(&CircleSymbol4::from_ints(3, 4, 6, 4)).unwrap();
        assert_eq!(c, circle(ratio(1, 2), ratio(2, 3), ratio(1, 6)));

        // Same centre, ten times the curvature; γ fixed by the normalization.
        let gamma = ratio(30 * 30 + 40 * 40 - 1, 60);
        let s = CircleSymbol4::new(int(30), int(40), int(60), gamma);
        let c = circle_from_symbol(&s).unwrap();
        assert_eq!(c, circle(ratio(1, 2), ratio(2, 3), ratio(1, 60)));
    }

    #[test]
    fn reads_vertical_line() {
        let shape = circle_from_symbol(&CircleSymbol4::from_ints(1, 0, 0, 1)).unwrap();
        let EuclideanShape::Line { xdot, ydot, gamma } = shape else {
            panic!("expected a line");
        };
        assert!(ydot.is_zero());
        // 2ẋx = γ  ⇒  x = 1/2
        assert_eq!(gamma / (int(2) * xdot), ratio(1, 2));
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(matches!(
            circle_from_symbol(&CircleSymbol4::from_ints(1, 1, 1, 2)),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn norms() {
        assert_eq!(CircleSymbol4::from_ints(0, 0, 1, -1).norm(), int(-1));
        assert_eq!(CircleSymbol4::from_ints(3, 4, 6, 4).norm(), int(-1));
        assert_eq!(CircleSymbol4::from_ints(1, 1, 1, 1).norm(), int(-1));
    }

    #[test]
    fn line_symbols_are_rescaled_to_unit_normal() {
        let line = EuclideanShape::line(int(3), int(4), int(10)).unwrap();
        let s = symbol_from_circle(&line).unwrap();
        assert_eq!(s, CircleSymbol4::new(ratio(3, 5), ratio(4, 5), int(0), int(2)));
        assert!(s.is_normalized());

        let skew = EuclideanShape::line(int(1), int(1), int(0)).unwrap();
        assert_eq!(symbol_from_circle(&skew), Err(Error::IrrationalNormal));
    }

    #[test]
    fn invalid_shapes() {
        assert_eq!(EuclideanShape::circle(int(0), int(0), int(0)), Err(Error::NonPositiveRadius));
        assert_eq!(EuclideanShape::line(int(0), int(0), int(1)), Err(Error::ZeroNormal));
    }

    #[test]
    fn inversion_swaps_curvatures() {
        let n = Lorentz4::inversion();
        assert_eq!(
            n.apply(&CircleSymbol4::from_ints(3, 4, 6, 4)),
            CircleSymbol4::from_ints(3, 4, 4, 6)
        );
        assert!(n.preserves_metric());
    }

    #[test]
    fn zero_translation_is_identity() {
        assert_eq!(Lorentz4::translation(int(0), int(0)), Lorentz4::identity());
    }

    #[test]
    fn translation_moves_unit_circle() {
        // γ' = γ + 2ẋaβ + 2ẏbβ + (a² + b²)β = -1 + 0 + 0 + 1 = 0
        let t = Lorentz4::translation(int(1), int(0));
        let moved = t.apply(&CircleSymbol4::from_ints(0, 0, 1, -1));
        assert_eq!(moved, CircleSymbol4::from_ints(1, 0, 1, 0));
        assert_eq!(
            circle_from_symbol(&moved).unwrap(),
            circle(int(1), int(0), int(1))
        );
    }

    #[test]
    fn dilation_matches_euclidean_scaling() {
        let d = Lorentz4::dilation(int(3)).unwrap();
        assert!(d.preserves_metric());
        let s = symbol_from_circle(&circle(ratio(1, 2), ratio(2, 3), ratio(1, 6))).unwrap();
        let scaled = circle_from_symbol(&d.apply(&s)).unwrap();
        assert_eq!(scaled, circle(ratio(3, 2), int(2), ratio(1, 2)));
        assert_eq!(Lorentz4::dilation(int(0)), Err(Error::ZeroDilation));
    }

    #[test]
    fn identity_application() {
        let c = CircleSymbol4::from_ints(3, 4, 6, 4);
        assert_eq!(Lorentz4::identity().apply(&c), c);
    }

    #[test]
    fn json_round_trip() {
        let c = CircleSymbol4::new(ratio(1, 2), int(0), int(4), ratio(-3, 4));
        let v = c.to_json();
        assert_eq!(v, json!({"xdot": "1/2", "ydot": 0, "beta": 4, "gamma": "-3/4"}));
        assert_eq!(CircleSymbol4::from_json(&v).unwrap(), c);
        let text = serde_json::to_string(&c).unwrap();
        let back: CircleSymbol4 = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
