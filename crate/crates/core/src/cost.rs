//! Extended-integer costs: a finite `i64` or the absorbing symbol `+INF`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cost value in `Z ∪ {+INF}`.
///
/// The derived order puts every finite value below `Infinite`. Addition is
/// checked: `+INF` absorbs everything, and finite overflow is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExtendedCost {
    Finite(i64),
    Infinite,
}

pub use ExtendedCost::{Finite, Infinite};

impl ExtendedCost {
    pub const ZERO: ExtendedCost = Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        !self.is_finite()
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }

    pub fn checked_add(self, rhs: ExtendedCost) -> Result<ExtendedCost> {
        match (self, rhs) {
            (Finite(a), Finite(b)) => a.checked_add(b).map(Finite).ok_or(Error::Overflow),
            _ => Ok(Infinite),
        }
    }

    /// Sums an iterator of costs, stopping at the first overflow.
    pub fn checked_sum<I: IntoIterator<Item = ExtendedCost>>(iter: I) -> Result<ExtendedCost> {
        iter.into_iter().try_fold(ExtendedCost::ZERO, |acc, c| acc.checked_add(c))
    }

    /// Compares against a finite integer without risking overflow.
    pub fn cmp_finite(self, rhs: i64) -> Ordering {
        match self {
            Finite(v) => v.cmp(&rhs),
            Infinite => Ordering::Greater,
        }
    }
}

impl Default for ExtendedCost {
    fn default() -> Self {
        ExtendedCost::ZERO
    }
}

impl From<i64> for ExtendedCost {
    fn from(v: i64) -> Self {
        Finite(v)
    }
}

impl fmt::Display for ExtendedCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => f.write_str("INF"),
        }
    }
}

impl FromStr for ExtendedCost {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "INF" {
            Ok(Infinite)
        } else {
            s.parse::<i64>().map(Finite)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn infinity_absorbs() {
        assert_eq!(Infinite.checked_add(Finite(-5)).unwrap(), Infinite);
        assert_eq!(Finite(i64::MAX).checked_add(Infinite).unwrap(), Infinite);
        assert_eq!(Infinite.checked_add(Infinite).unwrap(), Infinite);
    }

    #[test]
    fn overflow_is_rejected() {
        assert_eq!(Finite(i64::MAX).checked_add(Finite(1)), Err(Error::Overflow));
        assert_eq!(Finite(i64::MIN).checked_add(Finite(-1)), Err(Error::Overflow));
    }

    #[test]
    fn order_puts_infinity_last() {
        assert!(Finite(i64::MAX) < Infinite);
        assert!(Finite(-3) < Finite(2));
        assert_eq!(Infinite.cmp_finite(i64::MAX), Ordering::Greater);
    }

    #[test]
    fn text_round_trip() {
        for c in [Finite(0), Finite(-17), Infinite] {
            assert_eq!(c.to_string().parse::<ExtendedCost>().unwrap(), c);
        }
        assert!("inf".parse::<ExtendedCost>().is_err());
    }

    fn cost() -> impl Strategy<Value = ExtendedCost> {
        prop_oneof![
            4 => (-1_000_000i64..1_000_000).prop_map(Finite),
            1 => Just(Infinite),
        ]
    }

    proptest! {
        #[test]
        fn addition_commutes_and_associates(a in cost(), b in cost(), c in cost()) {
            prop_assert_eq!(a.checked_add(b).unwrap(), b.checked_add(a).unwrap());
            let left = a.checked_add(b).unwrap().checked_add(c).unwrap();
            let right = a.checked_add(b.checked_add(c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
