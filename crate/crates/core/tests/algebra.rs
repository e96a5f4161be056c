use proptest::prelude::*;
use sgk_core::algebra::{check_laws, check_laws_exhaustive};
use sgk_core::error::Law;
use sgk_core::{
    register_semiring, registry_get, BinaryOp, BuiltinSemiring, Complex64, Error, Monoid, Scalar, Semiring, ValueDomain,
};

#[test]
fn builtin_definitions() {
    let pt = registry_get::<f64>("plus_times").unwrap();
    assert_eq!(pt.mul(2.0, 3.0), 6.0);
    assert_eq!(pt.zero(), 0.0);

    let or_and = registry_get::<bool>("or_and").unwrap();
    assert!(or_and.add(true, false));
    assert!(!or_and.mul(true, false));
    assert!(!or_and.zero());

    let min_max = registry_get::<i64>("min_max").unwrap();
    assert_eq!(min_max.add(3, 5), 3);
    assert_eq!(min_max.mul(3, 5), 5);
    assert_eq!(min_max.zero(), i64::MAX);

    let max_plus = registry_get::<i32>("max_plus").unwrap();
    assert_eq!(max_plus.zero(), i32::MIN);
    assert_eq!(max_plus.mul(i32::MIN, 5), i32::MIN);
    assert_eq!(max_plus.mul(i32::MAX - 1, 5), i32::MAX);

    let min_plus = registry_get::<f32>("min_plus").unwrap();
    assert_eq!(min_plus.zero(), f32::INFINITY);
    assert_eq!(min_plus.mul(2.0, 3.0), 5.0);

    let sel = registry_get::<u8>("min_select2nd").unwrap();
    assert_eq!(sel.mul(4, 9), 9);
    assert_eq!(sel.mul(u8::MAX, 9), u8::MAX);
}

#[test]
fn unsupported_and_unknown_names() {
    assert!(matches!(
        registry_get::<bool>("max_plus"),
        Err(Error::DomainNotSupported { domain: ValueDomain::Bool, .. })
    ));
    assert!(matches!(registry_get::<u32>("max_plus"), Err(Error::DomainNotSupported { .. })));
    assert!(matches!(registry_get::<Complex64>("min_plus"), Err(Error::DomainNotSupported { .. })));
    assert!(matches!(registry_get::<i64>("nope"), Err(Error::UnknownSemiring(_))));
    assert!(matches!(
        registry_get::<i64>("plus_times/float64"),
        Err(Error::DomainMismatch { .. })
    ));
}

#[test]
fn lookup_by_returned_name_is_idempotent() {
    for kind in BuiltinSemiring::ALL {
        let Ok(s) = registry_get::<i16>(kind.name()) else { continue };
        let again = registry_get::<i16>(s.name()).unwrap();
        assert_eq!(again.name(), s.name());
        let qualified = registry_get::<i16>(&format!("{}/int16", s.name())).unwrap();
        assert_eq!(qualified.zero(), s.zero());
    }
}

#[test]
fn every_supported_builtin_passes_sampled_laws() {
    fn all<T: Scalar>() -> usize {
        let mut n = 0;
        for kind in BuiltinSemiring::ALL {
            if let Some(s) = T::builtin_semiring(kind) {
                check_laws(&s).unwrap_or_else(|v| panic!("{} over {}: {v:?}", kind, T::DOMAIN));
                n += 1;
            }
        }
        n
    }
    let total = all::<bool>()
        + all::<i8>()
        + all::<i16>()
        + all::<i32>()
        + all::<i64>()
        + all::<u8>()
        + all::<u16>()
        + all::<u32>()
        + all::<u64>()
        + all::<f32>()
        + all::<f64>()
        + all::<Complex64>();
    assert_eq!(total, 1 + 4 * 5 + 4 * 4 + 2 * 5 + 1);
}

#[test]
fn custom_min_select2nd_registers_and_is_retrievable() {
    let s = Semiring::new(
        "custom_min_guarded_second",
        Monoid::<i64>::min(),
        BinaryOp::new("guarded_second", |a: i64, b: i64| if a == i64::MAX { a } else { b }),
    );
    let small: Vec<i64> = (-4..=4).chain([i64::MIN, i64::MAX]).collect();
    check_laws_exhaustive(&s, &small).unwrap();
    let id = register_semiring(s).unwrap();
    assert_eq!(id.to_string(), "custom_min_guarded_second/int64");
    let back = registry_get::<i64>("custom_min_guarded_second").unwrap();
    assert_eq!(back.mul(1, 7), 7);
    assert!(matches!(
        registry_get::<i32>("custom_min_guarded_second"),
        Err(Error::DomainNotSupported { .. })
    ));
    let twice = Semiring::new(
        "custom_min_guarded_second",
        Monoid::<i64>::min(),
        BinaryOp::new("guarded_second", |a: i64, b: i64| if a == i64::MAX { a } else { b }),
    );
    assert!(matches!(register_semiring(twice), Err(Error::DuplicateName(_))));
}

#[test]
fn registration_rejects_law_breakers() {
    let minus = Semiring::new(
        "minus_times",
        Monoid::new(BinaryOp::new("minus", |a: i64, b: i64| a.wrapping_sub(b)), 0),
        BinaryOp::times(),
    );
    match register_semiring(minus) {
        Err(Error::LawCheckFailure(v)) => assert_eq!(v.law, Law::AddCommutativity),
        other => panic!("expected a law failure, got {other:?}"),
    }
    let plain_second = Semiring::new("raw_second", Monoid::<i64>::min(), BinaryOp::second());
    match register_semiring(plain_second) {
        Err(Error::LawCheckFailure(v)) => assert_eq!(v.law, Law::Annihilator),
        other => panic!("expected a law failure, got {other:?}"),
    }
    let builtin_name = Semiring::new("plus_times", Monoid::<i64>::plus(), BinaryOp::times());
    assert!(matches!(register_semiring(builtin_name), Err(Error::DuplicateName(_))));
}

#[test]
fn operators_report_their_domains() {
    let op = BinaryOp::<u16>::plus();
    assert_eq!(op.domain(), ValueDomain::UInt16);
    let s = registry_get::<f32>("max_plus").unwrap();
    assert_eq!(s.domain(), ValueDomain::Float32);
    assert_eq!(s.add_monoid().identity(), f32::NEG_INFINITY);
}

fn assert_laws<T: Scalar>(s: &Semiring<T>, a: T, b: T, c: T) {
    let z = s.zero();
    assert!(s.add(a, b).law_eq(s.add(b, a)));
    assert!(s.add(s.add(a, b), c).law_eq(s.add(a, s.add(b, c))));
    assert!(s.add(a, z).law_eq(a));
    assert!(s.mul(a, z).law_eq(z) && s.mul(z, a).law_eq(z));
}

fn dyadic() -> impl Strategy<Value = f64> {
    (0u32..(1 << 20)).prop_map(|k| k as f64 / 16.0)
}

proptest! {
    #[test]
    fn integer_builtins_hold_exactly(a: i32, b: i32, c: i32) {
        for kind in BuiltinSemiring::ALL {
            if let Some(s) = i32::builtin_semiring(kind) {
                assert_laws(&s, a, b, c);
            }
        }
    }

    #[test]
    fn unsigned_builtins_hold_exactly(a: u64, b: u64, c: u64) {
        for kind in BuiltinSemiring::ALL {
            if let Some(s) = u64::builtin_semiring(kind) {
                assert_laws(&s, a, b, c);
            }
        }
    }

    #[test]
    fn float_builtins_hold_to_one_ulp(a in dyadic(), b in dyadic(), c in dyadic()) {
        for kind in BuiltinSemiring::ALL {
            if let Some(s) = f64::builtin_semiring(kind) {
                assert_laws(&s, a, b, c);
            }
        }
    }

    #[test]
    fn boolean_or_and_holds(a: bool, b: bool, c: bool) {
        assert_laws(&registry_get::<bool>("or_and").unwrap(), a, b, c);
    }

    #[test]
    fn operators_are_deterministic(a: i64, b: i64) {
        let s = registry_get::<i64>("plus_times").unwrap();
        prop_assert_eq!(s.add(a, b), s.add(a, b));
        prop_assert_eq!(s.mul(a, b), s.mul(a, b));
    }
}
