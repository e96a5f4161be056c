use super::{BinaryOp, Monoid, Semiring};
use crate::domain::{Complex64, Numeric};
use std::fmt;
use std::str::FromStr;

/// The semirings every domain may provide under a fixed name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinSemiring {
    /// `(+, ×, 0)`
    PlusTimes,
    /// `(max, +, −∞)`
    MaxPlus,
    /// `(min, +, +∞)`
    MinPlus,
    /// `(min, max, +∞)`
    MinMax,
    /// `(∨, ∧, false)`
    OrAnd,
    /// `(min, select2nd, +∞)`
    MinSelect2nd,
}

impl BuiltinSemiring {
    pub const ALL: [BuiltinSemiring; 6] = [
        BuiltinSemiring::PlusTimes,
        BuiltinSemiring::MaxPlus,
        BuiltinSemiring::MinPlus,
        BuiltinSemiring::MinMax,
        BuiltinSemiring::OrAnd,
        BuiltinSemiring::MinSelect2nd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinSemiring::PlusTimes => "plus_times",
            BuiltinSemiring::MaxPlus => "max_plus",
            BuiltinSemiring::MinPlus => "min_plus",
            BuiltinSemiring::MinMax => "min_max",
            BuiltinSemiring::OrAnd => "or_and",
            BuiltinSemiring::MinSelect2nd => "min_select2nd",
        }
    }
}

impl fmt::Display for BuiltinSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinSemiring {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or(())
    }
}

/// `+` that treats the encoded +∞ as absorbing and otherwise saturates.
fn tropical_plus_up<T: Numeric>(a: T, b: T) -> T {
    if a == T::POS_INF || b == T::POS_INF {
        T::POS_INF
    } else {
        a.add_saturating(b)
    }
}

/// `+` that treats the encoded −∞ as absorbing and otherwise saturates.
fn tropical_plus_down<T: Numeric>(a: T, b: T) -> T {
    if a == T::NEG_INF || b == T::NEG_INF {
        T::NEG_INF
    } else {
        a.add_saturating(b)
    }
}

pub(crate) fn numeric<T: Numeric>(kind: BuiltinSemiring) -> Option<Semiring<T>> {
    let name = kind.name();
    let s = match kind {
        BuiltinSemiring::PlusTimes => Semiring::new(name, Monoid::plus(), BinaryOp::times()),
        BuiltinSemiring::MaxPlus => {
            // Unsigned −∞ would have to be 0, which is an ordinary weight.
            if !T::SIGNED {
                return None;
            }
            Semiring::new(name, Monoid::max(), BinaryOp::new("plus", tropical_plus_down::<T>))
        }
        BuiltinSemiring::MinPlus => {
            Semiring::new(name, Monoid::min(), BinaryOp::new("plus", tropical_plus_up::<T>))
        }
        BuiltinSemiring::MinMax => Semiring::new(name, Monoid::min(), BinaryOp::max()),
        BuiltinSemiring::OrAnd => return None,
        BuiltinSemiring::MinSelect2nd => Semiring::new(
            name,
            Monoid::min(),
            // An absent left operand contributes nothing, on either side.
            BinaryOp::new("select2nd", |a: T, b: T| if a == T::POS_INF { a } else { b }),
        ),
    };
    Some(s)
}

pub(crate) fn boolean(kind: BuiltinSemiring) -> Option<Semiring<bool>> {
    match kind {
        BuiltinSemiring::OrAnd => Some(Semiring::new(kind.name(), Monoid::lor(), BinaryOp::land())),
        _ => None,
    }
}

pub(crate) fn complex(kind: BuiltinSemiring) -> Option<Semiring<Complex64>> {
    match kind {
        BuiltinSemiring::PlusTimes => Some(Semiring::new(
            kind.name(),
            Monoid::new(BinaryOp::new("plus", |a, b| a + b), Complex64::new(0.0, 0.0)),
            BinaryOp::new("times", |a, b| a * b),
        )),
        _ => None,
    }
}
