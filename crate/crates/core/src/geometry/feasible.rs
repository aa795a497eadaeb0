use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::point::{rat, ExponentPoint, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub value: Rational,
    pub inclusive: bool,
}

/// Non-empty interval of admissible `1/q̃′` values; `1/q` follows from the
/// scaling relation as `1/q = 1/q̃′ + shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QInterval {
    pub lower: Endpoint,
    pub upper: Endpoint,
    /// `(n/2)(x − y) − 1`
    pub shift: Rational,
}

impl QInterval {
    pub fn contains(&self, u: Rational) -> bool {
        let lo = if self.lower.inclusive { u >= self.lower.value } else { u > self.lower.value };
        let hi = if self.upper.inclusive { u <= self.upper.value } else { u < self.upper.value };
        lo && hi
    }

    pub fn midpoint(&self) -> Rational {
        (self.lower.value + self.upper.value) * rat(1, 2)
    }

    /// The `1/q` value paired with `u`.
    pub fn inv_q(&self, u: Rational) -> Rational {
        u + self.shift
    }

    /// Interval notation, e.g. `(11/20, 5/8]`.
    pub fn notation(&self) -> String {
        format!(
            "{}{}, {}{}",
            if self.lower.inclusive { '[' } else { '(' },
            self.lower.value,
            self.upper.value,
            if self.upper.inclusive { ']' } else { ')' }
        )
    }
}

#[derive(Clone, Copy)]
struct Bound {
    value: Rational,
    inclusive: bool,
}

/// Solves the admissibility system for `u = 1/q̃′` at the point `p`, with
/// `1/q = u + (n/2)(x − y) − 1`:
///
/// ```text
/// 0 ≤ 1/q ≤ 1/q̃′ ≤ 1,
/// 1/q̃′ > 1 − n(x − 1/2),      1/q < n(1/2 − y),
/// 1/q̃′ < 1 + (n/2)(x + y − 1), 1/q > −(n/2)(x + y − 1),
/// 1/q  < n(x − 1/2),           1/q̃′ > 1 − n(1/2 − y).
/// ```
///
/// Each line pairs a constraint with its image under duality, so the solution
/// set transforms covariantly under [`dual_point`](super::dual_point).
/// Returns `None` for an empty set.
pub fn feasible_q_interval(n: u32, p: ExponentPoint) -> Result<Option<QInterval>> {
    if n < 3 {
        return Err(Error::Dimension { n, reason: "the feasibility system is stated for n >= 3" });
    }
    let nn = Rational::from_integer(n as i64);
    let half = rat(1, 2);
    let one = Rational::one();
    let (x, y) = (p.x, p.y);
    let c = nn * half * (x - y) - one;
    if c > Rational::zero() {
        // 1/q ≤ 1/q̃′ fails for every u
        return Ok(None);
    }

    let lowers = [
        Bound { value: Rational::zero(), inclusive: true },
        Bound { value: -c, inclusive: true },
        Bound { value: one - nn * (x - half), inclusive: false },
        Bound { value: -(nn * half) * (x + y - one) - c, inclusive: false },
        Bound { value: one - nn * (half - y), inclusive: false },
    ];
    let uppers = [
        Bound { value: one, inclusive: true },
        Bound { value: one - c, inclusive: true },
        Bound { value: nn * (half - y) - c, inclusive: false },
        Bound { value: one + nn * half * (x + y - one), inclusive: false },
        Bound { value: nn * (x - half) - c, inclusive: false },
    ];

    // tightest bound; on ties a strict bound wins
    let lower = lowers.iter().copied().reduce(|a, b| match a.value.cmp(&b.value) {
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Equal => Bound { value: a.value, inclusive: a.inclusive && b.inclusive },
    });
    let upper = uppers.iter().copied().reduce(|a, b| match a.value.cmp(&b.value) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => Bound { value: a.value, inclusive: a.inclusive && b.inclusive },
    });
    let (lower, upper) = (lower.expect("non-empty"), upper.expect("non-empty"));

    let empty = lower.value > upper.value || (lower.value == upper.value && !(lower.inclusive && upper.inclusive));
    if empty {
        return Ok(None);
    }
    Ok(Some(QInterval {
        lower: Endpoint { value: lower.value, inclusive: lower.inclusive },
        upper: Endpoint { value: upper.value, inclusive: upper.inclusive },
        shift: c,
    }))
}
