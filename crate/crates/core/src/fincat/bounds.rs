use std::cell::Cell;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Size limits applied to every object and hom-set the library materializes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest base object (sets and their products).
    pub max_card: u64,
    /// Largest enumerable hom-set.
    pub max_hom: u64,
    /// Largest object of the form `T a` for a built-in monad.
    pub max_monad_card: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_card: 16, max_hom: 65536, max_monad_card: 4096 }
    }
}

static MAX_CARD: AtomicU64 = AtomicU64::new(16);
static MAX_HOM: AtomicU64 = AtomicU64::new(65536);
static MAX_MONAD: AtomicU64 = AtomicU64::new(4096);

thread_local! {
    static LOCAL: Cell<Option<Bounds>> = const { Cell::new(None) };
}

/// The bounds in force on the current thread.
pub fn current() -> Bounds {
    LOCAL.with(|l| l.get()).unwrap_or_else(|| Bounds {
        max_card: MAX_CARD.load(Ordering::Relaxed),
        max_hom: MAX_HOM.load(Ordering::Relaxed),
        max_monad_card: MAX_MONAD.load(Ordering::Relaxed),
    })
}

/// Replace the process-wide bounds.
pub fn set_global(b: Bounds) {
    MAX_CARD.store(b.max_card, Ordering::Relaxed);
    MAX_HOM.store(b.max_hom, Ordering::Relaxed);
    MAX_MONAD.store(b.max_monad_card, Ordering::Relaxed);
}

/// Run `f` with `b` in force on this thread only.
pub fn with_bounds<R>(b: Bounds, f: impl FnOnce() -> R) -> R {
    let prev = LOCAL.with(|l| l.replace(Some(b)));
    struct Restore(Option<Bounds>);
    impl Drop for Restore {
        fn drop(&mut self) {
            LOCAL.with(|l| l.set(self.0));
        }
    }
    let _restore = Restore(prev);
    f()
}

pub(crate) fn check_card(what: impl FnOnce() -> String, size: u128) -> Result<()> {
    let limit = current().max_card as u128;
    if size > limit {
        return Err(Error::BoundExceeded { what: what(), size, limit });
    }
    Ok(())
}

pub(crate) fn check_monad_card(what: impl FnOnce() -> String, size: u128) -> Result<()> {
    let limit = current().max_monad_card as u128;
    if size > limit {
        return Err(Error::BoundExceeded { what: what(), size, limit });
    }
    Ok(())
}

pub(crate) fn check_hom(what: impl FnOnce() -> String, size: u128) -> Result<()> {
    let limit = current().max_hom as u128;
    if size > limit {
        return Err(Error::BoundExceeded { what: what(), size, limit });
    }
    Ok(())
}
