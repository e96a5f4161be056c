//! Scalar value domains.
//!
//! Every container is parameterized by a single [`Scalar`] type, so a matrix
//! or vector can never mix domains. [`ValueDomain`] is the runtime tag of that
//! type, used by the registry, the file formats and diagnostics.

use crate::algebra::{builtin, BuiltinSemiring, Semiring};
use rand::{Rng, RngExt};
use std::fmt;
use std::hash::{Hash, Hasher};

pub use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueDomain {
    Bool,
    Int8,
    Int16,
    Int32,
    Int64,
    UInt8,
    UInt16,
    UInt32,
    UInt64,
    Float32,
    Float64,
    Complex64,
    OpaqueHandle,
}

impl ValueDomain {
    pub const ALL: [ValueDomain; 13] = [
        ValueDomain::Bool,
        ValueDomain::Int8,
        ValueDomain::Int16,
        ValueDomain::Int32,
        ValueDomain::Int64,
        ValueDomain::UInt8,
        ValueDomain::UInt16,
        ValueDomain::UInt32,
        ValueDomain::UInt64,
        ValueDomain::Float32,
        ValueDomain::Float64,
        ValueDomain::Complex64,
        ValueDomain::OpaqueHandle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValueDomain::Bool => "bool",
            ValueDomain::Int8 => "int8",
            ValueDomain::Int16 => "int16",
            ValueDomain::Int32 => "int32",
            ValueDomain::Int64 => "int64",
            ValueDomain::UInt8 => "uint8",
            ValueDomain::UInt16 => "uint16",
            ValueDomain::UInt32 => "uint32",
            ValueDomain::UInt64 => "uint64",
            ValueDomain::Float32 => "float32",
            ValueDomain::Float64 => "float64",
            ValueDomain::Complex64 => "complex64",
            ValueDomain::OpaqueHandle => "opaque",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|d| d.name() == name)
    }

    pub fn is_float(self) -> bool {
        matches!(
            self,
            ValueDomain::Float32 | ValueDomain::Float64 | ValueDomain::Complex64
        )
    }
}

impl fmt::Display for ValueDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identifier of external, user-owned data. Handles can be stored and compared
/// but carry no arithmetic and are never serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpaqueHandle(pub u64);

/// A type that can be stored in matrices and vectors.
pub trait Scalar: Copy + PartialEq + fmt::Debug + Send + Sync + 'static {
    const DOMAIN: ValueDomain;

    /// Feeds the exact bit representation to a hasher (floats included).
    fn hash_bits<H: Hasher>(&self, state: &mut H);

    /// Equality used by semiring law checks: exact, except floating domains
    /// which accept a difference of one unit in the last place.
    fn law_eq(self, other: Self) -> bool {
        self == other
    }

    /// Text form used by the file writers; `None` when the domain is not
    /// serializable.
    fn to_text(&self) -> Option<String>;

    /// Sample pool for law checking: identities, extremes and random values.
    fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self>;

    /// The built-in semiring of the given kind over this domain, if supported.
    fn builtin_semiring(kind: BuiltinSemiring) -> Option<Semiring<Self>>;
}

/// Ordered numeric domains: the integers and the real floating types.
pub trait Numeric: Scalar + PartialOrd {
    const ZERO: Self;
    const ONE: Self;
    /// Encoded +∞: the maximum value for integers, `INFINITY` for floats.
    const POS_INF: Self;
    /// Encoded −∞: the minimum value for integers, `NEG_INFINITY` for floats.
    const NEG_INF: Self;
    const SIGNED: bool;

    fn add_wrapping(self, rhs: Self) -> Self;
    fn mul_wrapping(self, rhs: Self) -> Self;
    /// Addition clamped to the representable range (plain addition for floats).
    fn add_saturating(self, rhs: Self) -> Self;
    fn to_f64(self) -> f64;
}

fn ulp_distance_f64(a: f64, b: f64) -> u64 {
    let key = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    key(a).wrapping_sub(key(b)).unsigned_abs()
}

fn ulp_distance_f32(a: f32, b: f32) -> u64 {
    let key = |x: f32| {
        let bits = x.to_bits() as i32 as i64;
        if bits < 0 {
            i32::MIN as i64 - bits
        } else {
            bits
        }
    };
    key(a).wrapping_sub(key(b)).unsigned_abs()
}

pub(crate) fn f64_law_eq(a: f64, b: f64) -> bool {
    a == b || (a.is_finite() && b.is_finite() && ulp_distance_f64(a, b) <= 1)
}

macro_rules! int_scalar {
    ($t:ty, $dom:ident, $signed:expr) => {
        impl Scalar for $t {
            const DOMAIN: ValueDomain = ValueDomain::$dom;

            fn hash_bits<H: Hasher>(&self, state: &mut H) {
                self.hash(state)
            }

            fn to_text(&self) -> Option<String> {
                Some(self.to_string())
            }

            fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
                let mut pool: Vec<$t> = vec![
                    0,
                    1,
                    2,
                    <$t>::MIN,
                    <$t>::MAX,
                    <$t>::MIN.wrapping_add(1),
                    <$t>::MAX.wrapping_sub(1),
                ];
                if $signed {
                    pool.push((0 as $t).wrapping_sub(1));
                }
                while pool.len() < count {
                    // Half full-range values, half small magnitudes.
                    if rng.random_bool(0.5) {
                        pool.push(rng.random::<$t>());
                    } else {
                        pool.push((rng.random_range(0u8..64) as $t).wrapping_sub(if $signed { 32 } else { 0 }));
                    }
                }
                pool
            }

            fn builtin_semiring(kind: BuiltinSemiring) -> Option<Semiring<Self>> {
                builtin::numeric(kind)
            }
        }

        impl Numeric for $t {
            const ZERO: Self = 0;
            const ONE: Self = 1;
            const POS_INF: Self = <$t>::MAX;
            const NEG_INF: Self = <$t>::MIN;
            const SIGNED: bool = $signed;

            fn add_wrapping(self, rhs: Self) -> Self {
                self.wrapping_add(rhs)
            }
            fn mul_wrapping(self, rhs: Self) -> Self {
                self.wrapping_mul(rhs)
            }
            fn add_saturating(self, rhs: Self) -> Self {
                self.saturating_add(rhs)
            }
            fn to_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

int_scalar!(i8, Int8, true);
int_scalar!(i16, Int16, true);
int_scalar!(i32, Int32, true);
int_scalar!(i64, Int64, true);
int_scalar!(u8, UInt8, false);
int_scalar!(u16, UInt16, false);
int_scalar!(u32, UInt32, false);
int_scalar!(u64, UInt64, false);

macro_rules! float_scalar {
    ($t:ty, $dom:ident, $ulp:ident, $large:expr) => {
        impl Scalar for $t {
            const DOMAIN: ValueDomain = ValueDomain::$dom;

            fn hash_bits<H: Hasher>(&self, state: &mut H) {
                self.to_bits().hash(state)
            }

            fn law_eq(self, other: Self) -> bool {
                self == other || (self.is_finite() && other.is_finite() && $ulp(self, other) <= 1)
            }

            fn to_text(&self) -> Option<String> {
                // Debug output is the shortest decimal that parses back exactly.
                Some(format!("{:?}", self))
            }

            fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
                let mut pool: Vec<$t> = vec![0.0, 1.0, 0.5, 2.0, <$t>::MIN_POSITIVE, $large];
                while pool.len() < count {
                    // Dyadic grid k/16: sums of three samples are exact.
                    pool.push(rng.random_range(0u32..(1 << 20)) as $t / 16.0);
                }
                pool
            }

            fn builtin_semiring(kind: BuiltinSemiring) -> Option<Semiring<Self>> {
                builtin::numeric(kind)
            }
        }

        impl Numeric for $t {
            const ZERO: Self = 0.0;
            const ONE: Self = 1.0;
            const POS_INF: Self = <$t>::INFINITY;
            const NEG_INF: Self = <$t>::NEG_INFINITY;
            const SIGNED: bool = true;

            fn add_wrapping(self, rhs: Self) -> Self {
                self + rhs
            }
            fn mul_wrapping(self, rhs: Self) -> Self {
                self * rhs
            }
            fn add_saturating(self, rhs: Self) -> Self {
                self + rhs
            }
            fn to_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

float_scalar!(f32, Float32, ulp_distance_f32, 1.0e37);
float_scalar!(f64, Float64, ulp_distance_f64, 1.0e300);

impl Scalar for bool {
    const DOMAIN: ValueDomain = ValueDomain::Bool;

    fn hash_bits<H: Hasher>(&self, state: &mut H) {
        self.hash(state)
    }

    fn to_text(&self) -> Option<String> {
        Some(if *self { "1" } else { "0" }.to_string())
    }

    fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
        let mut pool = vec![false, true];
        while pool.len() < count {
            pool.push(rng.random_bool(0.5));
        }
        pool
    }

    fn builtin_semiring(kind: BuiltinSemiring) -> Option<Semiring<Self>> {
        builtin::boolean(kind)
    }
}

impl Scalar for Complex64 {
    const DOMAIN: ValueDomain = ValueDomain::Complex64;

    fn hash_bits<H: Hasher>(&self, state: &mut H) {
        self.re.to_bits().hash(state);
        self.im.to_bits().hash(state);
    }

    fn law_eq(self, other: Self) -> bool {
        f64_law_eq(self.re, other.re) && f64_law_eq(self.im, other.im)
    }

    fn to_text(&self) -> Option<String> {
        Some(format!("{:?} {:?}", self.re, self.im))
    }

    fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
        let mut pool = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(1.0e300, 1.0e300),
        ];
        while pool.len() < count {
            let re = rng.random_range(0u32..(1 << 20)) as f64 / 16.0;
            let im = rng.random_range(0u32..(1 << 20)) as f64 / 16.0;
            pool.push(Complex64::new(re, im));
        }
        pool
    }

    fn builtin_semiring(kind: BuiltinSemiring) -> Option<Semiring<Self>> {
        builtin::complex(kind)
    }
}

impl Scalar for OpaqueHandle {
    const DOMAIN: ValueDomain = ValueDomain::OpaqueHandle;

    fn hash_bits<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }

    fn to_text(&self) -> Option<String> {
        None
    }

    fn law_samples<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
        (0..count).map(|_| OpaqueHandle(rng.random())).collect()
    }

    fn builtin_semiring(_kind: BuiltinSemiring) -> Option<Semiring<Self>> {
        None
    }
}
