//! Membership certificates and the word-search oracle.
//!
//! [`reduce_to_base`] runs a Euclid-style descent: swap the smaller of `β, γ`
//! into the curvature slot with `N`, then shift `ẋ` into `[0, β)` with a power
//! of `T`. Each round strictly lowers the curvature, so the descent ends at the
//! central circle `0/(1, -1)` or at a line `±1/(0, γ)`, which is then walked
//! back to the centre explicitly. The resulting word is the certificate.
//!
//! [`orbit_bfs`] is the ground truth the enumeration is checked against: a
//! breadth-first closure of the central circle under `{N, T, T⁻¹}`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::modular::{DedekindSymbol, Letter, Word};

/// Word carrying a symbol to the central circle, with the symbols visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    /// The symbol as given.
    pub input: DedekindSymbol,
    /// Whether the input was globally negated before reduction. Negation
    /// describes the same circle and is kept out of the word.
    pub negated: bool,
    /// `word.apply(±input) = 0/(1, -1)`.
    pub word: Word,
    /// `steps[0]` is the (sign-normalized) input, `steps[i + 1]` the symbol
    /// after the `i`-th letter.
    pub steps: Vec<DedekindSymbol>,
}

impl ReductionCertificate {
    /// Applies the word to the sign-normalized input.
    pub fn replay(&self) -> DedekindSymbol {
        self.word.apply(&self.start())
    }

    /// Rebuilds the input from the central circle with the inverse word.
    pub fn inverse_replay(&self) -> DedekindSymbol {
        let s = self.word.inverse().apply(&DedekindSymbol::base());
        if self.negated {
            -s
        } else {
            s
        }
    }

    fn start(&self) -> DedekindSymbol {
        if self.negated {
            -self.input.clone()
        } else {
            self.input.clone()
        }
    }

    /// `{"word": "NtNtt", "steps": [[5, 8, 3], ...], "negated": false}`
    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.to_json(),
            "negated": self.negated,
            "word": self.word.to_string(),
            "steps": self.steps.iter().map(DedekindSymbol::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("missing field {name:?}")));
        let word: Word = field("word")?
            .as_str()
            .ok_or_else(|| Error::Parse("word must be a string".into()))?
            .parse()?;
        let steps = field("steps")?
            .as_array()
            .ok_or_else(|| Error::Parse("steps must be an array".into()))?
            .iter()
            .map(DedekindSymbol::from_json)
            .collect::<Result<Vec<_>>>()?;
        let negated = v.get("negated").and_then(Value::as_bool).unwrap_or(false);
        let input = match v.get("input") {
            Some(i) => DedekindSymbol::from_json(i)?,
            None => {
                let first = steps.first().cloned().ok_or_else(|| Error::Parse("empty steps".into()))?;
                if negated {
                    -first
                } else {
                    first
                }
            }
        };
        Ok(Self { input, negated, word, steps })
    }
}

fn check_admissible(s: &DedekindSymbol) -> Result<()> {
    if !s.is_normalized() {
        let lhs = &s.xdot * &s.xdot - BigInt::one();
        let rhs = &s.beta * &s.gamma;
        return Err(Error::NotNormalized(format!("{s}: ẋ² - 1 = {lhs} but βγ = {rhs}")));
    }
    let (odd, even) = s.parity();
    if odd != 2 {
        return Err(Error::ParityViolation { odd, even });
    }
    Ok(())
}

struct Reducer {
    current: DedekindSymbol,
    word: Word,
    steps: Vec<DedekindSymbol>,
}

impl Reducer {
    fn push(&mut self, letter: Letter) {
        self.current = self.current.apply(letter);
        self.word.push(letter);
        self.steps.push(self.current.clone());
    }

    fn push_power(&mut self, n: &BigInt) {
        let count = n.abs().to_u64().expect("translation count fits in u64");
        let letter = if n.is_positive() { Letter::T } else { Letter::TInv };
        for _ in 0..count {
            self.push(letter);
        }
    }

    /// `±1/(0, γ)` with `γ > 0` odd: `T^∓(γ-1)/2`, then `N`, then `T^∓1`.
    fn finish_line(&mut self) {
        let sign = self.current.xdot.clone();
        debug_assert!(sign.abs().is_one() && self.current.gamma.is_positive());
        let half = (&self.current.gamma - BigInt::one()) / 2;
        self.push_power(&(-&sign * half));
        self.push(Letter::N);
        self.push_power(&-sign);
    }
}

/// Certifies that `s` belongs to the orbit of the central circle.
///
/// Fails with [`Error::NotNormalized`] or [`Error::ParityViolation`] for
/// symbols that are provably outside the system.
pub fn reduce_to_base(s: &DedekindSymbol) -> Result<ReductionCertificate> {
    check_admissible(s)?;
    let start = s.canonical();
    let negated = start != *s;
    let mut r = Reducer { current: start.clone(), word: Word::new(), steps: vec![start] };
    let base = DedekindSymbol::base();

    // Invariant: β ≥ 0, and γ > 0 whenever β = 0; hence γ ≥ 0 unless at base.
    while r.current != base {
        if r.current.beta.is_zero() {
            r.finish_line();
            break;
        }
        if r.current.gamma < r.current.beta {
            r.push(Letter::N);
            if r.current.beta.is_zero() {
                r.finish_line();
                break;
            }
        }
        let shift = r.current.xdot.div_floor(&r.current.beta);
        if !shift.is_zero() {
            r.push_power(&-shift);
        }
        if r.current.xdot.is_zero() {
            // ẋ = 0 forces βγ = -1 with β > 0.
            debug_assert_eq!(r.current, base);
            break;
        }
    }
    debug_assert_eq!(r.current, base);
    Ok(ReductionCertificate { input: s.clone(), negated, word: r.word, steps: r.steps })
}

pub fn is_member(s: &DedekindSymbol) -> bool {
    reduce_to_base(s).is_ok()
}

/// Canonical symbols reachable from the central circle by words of length at
/// most `max_word_length`, never expanding a symbol with `|β| > beta_bound`.
pub fn orbit_bfs(max_word_length: usize, beta_bound: u64) -> BTreeSet<DedekindSymbol> {
    let bound = BigInt::from(beta_bound);
    let base = DedekindSymbol::base();
    let mut seen: HashSet<DedekindSymbol> = HashSet::from([base.clone()]);
    let mut frontier = vec![base];
    for _ in 0..max_word_length {
        let mut next = Vec::new();
        for s in &frontier {
            for letter in Letter::ALL {
                let image = s.apply(letter).canonical();
                if image.beta.abs() <= bound && seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_halfplane;
    use crate::rational::int;

    fn sym(x: i64, b: i64, g: i64) -> DedekindSymbol {
        DedekindSymbol::new(x, b, g)
    }

    #[test]
    fn base_needs_no_word() {
        let cert = reduce_to_base(&DedekindSymbol::base()).unwrap();
        assert!(cert.word.is_empty());
        assert!(!cert.negated);
        assert_eq!(cert.steps, vec![DedekindSymbol::base()]);
    }

    #[test]
    fn negated_base() {
        let cert = reduce_to_base(&sym(0, -1, 1)).unwrap();
        assert!(cert.word.is_empty());
        assert!(cert.negated);
        assert_eq!(cert.inverse_replay(), sym(0, -1, 1));
    }

    #[test]
    fn line_certificate_inverts_the_construction_chain() {
        let cert = reduce_to_base(&sym(1, 0, 7)).unwrap();
        let mut chain: Word = "TN".parse().unwrap();
        chain.push_power(3);
        assert_eq!(cert.word, chain.inverse());
        assert_eq!(cert.word.to_string(), "tttNt");
    }

    #[test]
    fn hand_replayed_descent() {
        let cert = reduce_to_base(&sym(5, 8, 3)).unwrap();
        assert_eq!(cert.word.to_string(), "NtNtt");
        assert_eq!(
            cert.steps,
            vec![sym(5, 8, 3), sym(5, 3, 8), sym(2, 3, 1), sym(2, 1, 3), sym(1, 1, 0), sym(0, 1, -1)]
        );
        assert!(cert.steps.iter().all(DedekindSymbol::is_normalized));
    }

    #[test]
    fn negative_position_line() {
        // Line x = -3/2 reached through N from -1/(3, 0).
        for s in [sym(-1, 0, 3), sym(-1, 3, 0), sym(1, 0, -3)] {
            let cert = reduce_to_base(&s).unwrap();
            assert_eq!(cert.replay(), DedekindSymbol::base());
            assert_eq!(cert.inverse_replay(), s);
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&sym(5, 8, 3)));
        assert!(!is_member(&sym(1, 2, 0)));
        assert!(is_member(&sym(3, 8, 1)));
        assert_eq!(reduce_to_base(&sym(1, 2, 0)), Err(Error::ParityViolation { odd: 1, even: 2 }));
        assert!(matches!(reduce_to_base(&sym(2, 2, 2)), Err(Error::NotNormalized(_))));
        assert!(!is_member(&sym(1, 0, 2)));
    }

    #[test]
    fn certificates_for_enumerated_circles() {
        for item in enumerate_halfplane(100, &int(-2), &int(2)).unwrap() {
            let s = item.to_symbol();
            let cert = reduce_to_base(&s).unwrap();
            assert_eq!(cert.replay(), DedekindSymbol::base(), "{s}");
            assert_eq!(cert.inverse_replay(), s);
            assert_eq!(cert.word.trace(&cert.steps[0]), cert.steps);
        }
    }

    #[test]
    fn xdot_strictly_decreases_across_rounds() {
        for item in enumerate_halfplane(100, &int(0), &int(1)).unwrap() {
            let cert = reduce_to_base(&item.to_symbol()).unwrap();
            // |ẋ| sampled right before each N; after the first round these
            // must strictly decrease until the descent stops.
            let before_n: Vec<BigInt> = cert
                .word
                .letters()
                .iter()
                .zip(&cert.steps)
                .filter(|(l, _)| **l == Letter::N)
                .map(|(_, s)| s.xdot.abs())
                .collect();
            for pair in before_n.windows(2).skip(1) {
                if pair[1] > BigInt::one() {
                    assert!(pair[1] < pair[0], "{} {:?}", item.to_symbol(), before_n);
                }
            }
        }
    }

    #[test]
    fn bfs_small_depths() {
        assert_eq!(orbit_bfs(0, 10), BTreeSet::from([DedekindSymbol::base()]));
        assert_eq!(
            orbit_bfs(1, 10),
            BTreeSet::from([DedekindSymbol::base(), sym(1, 1, 0), sym(-1, 1, 0)])
        );
    }

    #[test]
    fn bfs_symbols_are_admissible() {
        for s in orbit_bfs(9, 30) {
            assert!(s.is_normalized());
            assert_eq!(s.parity(), (2, 1));
            assert!(s.is_coprime());
            assert!(is_member(&s), "{s}");
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = reduce_to_base(&sym(5, 8, 3)).unwrap();
        let v = cert.to_json();
        assert_eq!(v["word"], "NtNtt");
        assert_eq!(v["steps"][0], serde_json::json!([5, 8, 3]));
        assert_eq!(ReductionCertificate::from_json(&v).unwrap(), cert);
    }
}
