//! Resource limits for Groebner computations.
//!
//! Exceeding a limit is an error, never a silently truncated answer. Limits
//! come from the defaults, the `CREMONA_LAB_BUDGET` environment variable
//! (`pairs=N,degree=D`), or a scoped override on the current thread.

use std::cell::Cell;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};

pub const ENV_VAR: &str = "CREMONA_LAB_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs processed by one Groebner computation.
    pub max_pairs: usize,
    /// Largest degree of an S-pair lcm.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_degree: 30 }
    }
}

impl Budget {
    /// Parse `pairs=N,degree=D` (either key optional) on top of the defaults.
    pub fn parse(spec: &str) -> Result<Budget> {
        let mut b = Budget::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| AlgebraError::Invalid(format!("bad budget entry '{part}'")))?;
            let bad = || AlgebraError::Invalid(format!("bad budget value '{v}'"));
            match k.trim() {
                "pairs" => b.max_pairs = v.trim().parse().map_err(|_| bad())?,
                "degree" => b.max_degree = v.trim().parse().map_err(|_| bad())?,
                other => return Err(AlgebraError::Invalid(format!("unknown budget key '{other}'"))),
            }
        }
        Ok(b)
    }

    fn from_env() -> Budget {
        std::env::var(ENV_VAR).ok().and_then(|s| Budget::parse(&s).ok()).unwrap_or_default()
    }

    /// Budget in force on this thread.
    pub fn current() -> Budget {
        static ENV: OnceLock<Budget> = OnceLock::new();
        OVERRIDE.with(|o| o.get()).unwrap_or_else(|| *ENV.get_or_init(Budget::from_env))
    }
}

thread_local! {
    static OVERRIDE: Cell<Option<Budget>> = const { Cell::new(None) };
}

/// Run `f` with `b` as the budget of this thread.
pub fn with_budget<T>(b: Budget, f: impl FnOnce() -> T) -> T {
    let prev = OVERRIDE.with(|o| o.replace(Some(b)));
    struct Restore(Option<Budget>);
    impl Drop for Restore {
        fn drop(&mut self) {
            OVERRIDE.with(|o| o.set(self.0));
        }
    }
    let _guard = Restore(prev);
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_scope() {
        assert_eq!(Budget::parse("pairs=10,degree=5").unwrap(), Budget { max_pairs: 10, max_degree: 5 });
        assert_eq!(Budget::parse("degree=12").unwrap().max_pairs, 200_000);
        assert!(Budget::parse("speed=3").is_err());
        let small = Budget { max_pairs: 3, max_degree: 4 };
        let seen = with_budget(small, Budget::current);
        assert_eq!(seen, small);
        assert_ne!(Budget::current(), small);
    }
}
