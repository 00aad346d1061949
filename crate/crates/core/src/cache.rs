//! Per-scalar-type memo tables for expensive constant data.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) type Slot = OnceLock<RwLock<HashMap<TypeId, Arc<dyn Any + Send + Sync>>>>;

/// Returns the value cached for scalar type `T`, building it on first use.
/// Two threads may both build; the first insert wins and both results are
/// identical.
pub(crate) fn per_scalar<T: 'static, V: Send + Sync + 'static>(slot: &'static Slot, build: impl FnOnce() -> V) -> Arc<V> {
    let map = slot.get_or_init(Default::default);
    let key = TypeId::of::<T>();
    if let Some(v) = map.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Arc::clone(v).downcast::<V>().expect("cache type");
    }
    let built: Arc<dyn Any + Send + Sync> = Arc::new(build());
    let mut w = map.write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(w.entry(key).or_insert(built)).downcast::<V>().expect("cache type")
}
