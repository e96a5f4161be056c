//! Operation descriptors, monoids and semirings.
//!
//! A [`Semiring`] bundles a commutative [`Monoid`] (⊕ with identity 0̄) and a
//! multiplicative [`BinaryOp`] (⊗). Every kernel that combines entries is
//! parameterized by one of these, so one sparse matrix product serves
//! shortest paths, reachability, counting and label propagation alike.

pub(crate) mod builtin;
mod laws;
mod registry;

pub use builtin::BuiltinSemiring;
pub use laws::{check_laws, check_laws_exhaustive, LAW_SAMPLE_COUNT};
pub use registry::{register_semiring, registry_get, SemiringId};

use crate::domain::{Numeric, Scalar, ValueDomain};
use std::fmt;
use std::sync::Arc;

type BinaryFn<T> = dyn Fn(T, T) -> T + Send + Sync;
type UnaryFn<I, O> = dyn Fn(I) -> O + Send + Sync;

/// A named, pure binary function closed over one domain.
pub struct BinaryOp<T> {
    name: Arc<str>,
    f: Arc<BinaryFn<T>>,
}

impl<T> Clone for BinaryOp<T> {
    fn clone(&self) -> Self {
        BinaryOp {
            name: self.name.clone(),
            f: self.f.clone(),
        }
    }
}

impl<T: Scalar> fmt::Debug for BinaryOp<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryOp({}: {})", self.name, T::DOMAIN)
    }
}

impl<T: Scalar> BinaryOp<T> {
    pub fn new(name: impl Into<String>, f: impl Fn(T, T) -> T + Send + Sync + 'static) -> Self {
        BinaryOp {
            name: Arc::from(name.into()),
            f: Arc::new(f),
        }
    }

    #[inline]
    pub fn eval(&self, a: T, b: T) -> T {
        (self.f)(a, b)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> ValueDomain {
        T::DOMAIN
    }

    /// `(a, b) -> b`
    pub fn second() -> Self {
        BinaryOp::new("second", |_, b| b)
    }

    /// `(a, b) -> a`
    pub fn first() -> Self {
        BinaryOp::new("first", |a, _| a)
    }
}

impl<T: Numeric> BinaryOp<T> {
    /// Addition; wraps on integer overflow.
    pub fn plus() -> Self {
        BinaryOp::new("plus", T::add_wrapping)
    }

    /// Multiplication; wraps on integer overflow.
    pub fn times() -> Self {
        BinaryOp::new("times", T::mul_wrapping)
    }

    pub fn min() -> Self {
        BinaryOp::new("min", |a: T, b: T| if b < a { b } else { a })
    }

    pub fn max() -> Self {
        BinaryOp::new("max", |a: T, b: T| if b > a { b } else { a })
    }
}

impl BinaryOp<bool> {
    pub fn lor() -> Self {
        BinaryOp::new("lor", |a, b| a || b)
    }

    pub fn land() -> Self {
        BinaryOp::new("land", |a, b| a && b)
    }
}

/// A named, pure function from one domain into another.
pub struct UnaryOp<I, O = I> {
    name: Arc<str>,
    f: Arc<UnaryFn<I, O>>,
}

impl<I, O> Clone for UnaryOp<I, O> {
    fn clone(&self) -> Self {
        UnaryOp {
            name: self.name.clone(),
            f: self.f.clone(),
        }
    }
}

impl<I: Scalar, O: Scalar> fmt::Debug for UnaryOp<I, O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnaryOp({}: {} -> {})", self.name, I::DOMAIN, O::DOMAIN)
    }
}

impl<I: Scalar, O: Scalar> UnaryOp<I, O> {
    pub fn new(name: impl Into<String>, f: impl Fn(I) -> O + Send + Sync + 'static) -> Self {
        UnaryOp {
            name: Arc::from(name.into()),
            f: Arc::new(f),
        }
    }

    #[inline]
    pub fn eval(&self, x: I) -> O {
        (self.f)(x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn input_domain(&self) -> ValueDomain {
        I::DOMAIN
    }

    pub fn output_domain(&self) -> ValueDomain {
        O::DOMAIN
    }

    /// Maps every value to `value`, turning a matrix into its pattern.
    pub fn constant(value: O) -> Self {
        UnaryOp::new("constant", move |_| value)
    }
}

impl<T: Scalar> UnaryOp<T, T> {
    pub fn identity() -> Self {
        UnaryOp::new("identity", |x| x)
    }
}

/// An associative, commutative binary operation with an identity element.
#[derive(Clone)]
pub struct Monoid<T> {
    op: BinaryOp<T>,
    identity: T,
}

impl<T: Scalar> fmt::Debug for Monoid<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monoid({}, identity {:?})", self.op.name, self.identity)
    }
}

impl<T: Scalar> Monoid<T> {
    /// Pairs an operation with its identity. The monoid laws are not checked
    /// here; [`check_laws`] verifies them for a whole semiring.
    pub fn new(op: BinaryOp<T>, identity: T) -> Self {
        Monoid { op, identity }
    }

    #[inline]
    pub fn eval(&self, a: T, b: T) -> T {
        self.op.eval(a, b)
    }

    pub fn op(&self) -> &BinaryOp<T> {
        &self.op
    }

    pub fn identity(&self) -> T {
        self.identity
    }
}

impl<T: Numeric> Monoid<T> {
    pub fn plus() -> Self {
        Monoid::new(BinaryOp::plus(), T::ZERO)
    }

    pub fn times() -> Self {
        Monoid::new(BinaryOp::times(), T::ONE)
    }

    pub fn min() -> Self {
        Monoid::new(BinaryOp::min(), T::POS_INF)
    }

    pub fn max() -> Self {
        Monoid::new(BinaryOp::max(), T::NEG_INF)
    }
}

impl Monoid<bool> {
    pub fn lor() -> Self {
        Monoid::new(BinaryOp::lor(), false)
    }

    pub fn land() -> Self {
        Monoid::new(BinaryOp::land(), true)
    }
}

/// `(S, ⊕, ⊗, 0̄)`: the algebra a kernel runs over.
#[derive(Clone)]
pub struct Semiring<T> {
    name: Arc<str>,
    add: Monoid<T>,
    mul: BinaryOp<T>,
}

impl<T: Scalar> fmt::Debug for Semiring<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semiring")
            .field("name", &self.name)
            .field("domain", &T::DOMAIN)
            .field("add", &self.add)
            .field("mul", &self.mul)
            .finish()
    }
}

impl<T: Scalar> Semiring<T> {
    pub fn new(name: impl Into<String>, add: Monoid<T>, mul: BinaryOp<T>) -> Self {
        Semiring {
            name: Arc::from(name.into()),
            add,
            mul,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> ValueDomain {
        T::DOMAIN
    }

    /// ⊕
    #[inline]
    pub fn add(&self, a: T, b: T) -> T {
        self.add.eval(a, b)
    }

    /// ⊗
    #[inline]
    pub fn mul(&self, a: T, b: T) -> T {
        self.mul.eval(a, b)
    }

    /// 0̄, the additive identity and multiplicative annihilator.
    #[inline]
    pub fn zero(&self) -> T {
        self.add.identity
    }

    pub fn add_monoid(&self) -> &Monoid<T> {
        &self.add
    }

    pub fn mul_op(&self) -> &BinaryOp<T> {
        &self.mul
    }
}
