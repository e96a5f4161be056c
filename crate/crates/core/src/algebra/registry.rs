//! Name-based semiring lookup.
//!
//! Built-in names resolve per domain on demand; user semirings are stored
//! type-erased under `(name, domain)` and must pass the law checks first.

use super::{check_laws, BuiltinSemiring, Semiring};
use crate::domain::{Scalar, ValueDomain};
use crate::error::{Error, Result};
use std::any::Any;
use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

type Store = HashMap<(String, ValueDomain), Box<dyn Any + Send + Sync>>;

fn store() -> &'static RwLock<Store> {
    static STORE: OnceLock<RwLock<Store>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Qualified semiring identifier, displayed as `name/domain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemiringId {
    pub name: String,
    pub domain: ValueDomain,
}

impl fmt::Display for SemiringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.domain)
    }
}

/// Looks up a semiring over `T` by name. `name` may be bare (`min_plus`) or
/// qualified with the domain (`min_plus/float64`).
pub fn registry_get<T: Scalar>(name: &str) -> Result<Semiring<T>> {
    let bare = match name.split_once('/') {
        Some((bare, domain)) => {
            let found = ValueDomain::from_name(domain)
                .ok_or_else(|| Error::UnknownSemiring(name.to_string()))?;
            if found != T::DOMAIN {
                return Err(Error::DomainMismatch {
                    expected: T::DOMAIN,
                    found,
                });
            }
            bare
        }
        None => name,
    };
    if let Ok(kind) = bare.parse::<BuiltinSemiring>() {
        return T::builtin_semiring(kind).ok_or_else(|| Error::DomainNotSupported {
            semiring: bare.to_string(),
            domain: T::DOMAIN,
        });
    }
    let guard = store().read().unwrap_or_else(|e| e.into_inner());
    if let Some(entry) = guard.get(&(bare.to_string(), T::DOMAIN)) {
        let s = entry
            .downcast_ref::<Semiring<T>>()
            .expect("registry entries are keyed by their domain");
        return Ok(s.clone());
    }
    if guard.keys().any(|(n, _)| n == bare) {
        return Err(Error::DomainNotSupported {
            semiring: bare.to_string(),
            domain: T::DOMAIN,
        });
    }
    Err(Error::UnknownSemiring(bare.to_string()))
}

/// Registers a user semiring after checking its laws. Names of built-ins are
/// reserved in every domain; user names are unique per domain.
pub fn register_semiring<T: Scalar>(s: Semiring<T>) -> Result<SemiringId> {
    let name = s.name().to_string();
    if name.is_empty() || name.contains('/') {
        return Err(Error::UnknownSemiring(name));
    }
    if name.parse::<BuiltinSemiring>().is_ok() {
        return Err(Error::DuplicateName(name));
    }
    check_laws(&s).map_err(Error::LawCheckFailure)?;
    let key = (name.clone(), T::DOMAIN);
    let mut guard = store().write().unwrap_or_else(|e| e.into_inner());
    if guard.contains_key(&key) {
        return Err(Error::DuplicateName(name));
    }
    guard.insert(key, Box::new(s));
    Ok(SemiringId {
        name,
        domain: T::DOMAIN,
    })
}
