//! Powers of a key and the idempotent of its cyclic semigroup.

use std::collections::HashMap;

use super::context::GroupContext;
use super::key::GliderKey;

/// Default cap on the number of powers computed.
pub const DEFAULT_MAX_ITER: usize = 1024;

/// Powers `x, x², …` up to the first repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult {
    /// `orbit[k]` is `x^{k+1}`; pairwise distinct.
    pub orbit: Vec<GliderKey>,
    pub idempotent: Option<GliderKey>,
    /// Exponent `k` with `x^k` idempotent (smallest such).
    pub idempotent_power: Option<usize>,
    /// First exponent inside the cycle.
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
}

impl OrbitResult {
    pub fn is_resolved(&self) -> bool {
        self.idempotent.is_some()
    }
}

/// Iterates powers with exact key hashing until a repeat or `max_iter` powers.
pub fn semigroup_orbit(ctx: &GroupContext, x: &GliderKey, max_iter: usize) -> OrbitResult {
    let mut orbit = vec![x.clone()];
    let mut seen: HashMap<GliderKey, usize> = HashMap::from([(x.clone(), 1)]);
    while orbit.len() < max_iter.max(1) {
        let next = ctx.product(orbit.last().expect("orbit is nonempty"), x);
        let power = orbit.len() + 1;
        if let Some(&first) = seen.get(&next) {
            let period = power - first;
            // smallest multiple of the period at or after the cycle start
            let k = first.div_ceil(period) * period;
            return OrbitResult {
                idempotent: Some(orbit[k - 1].clone()),
                idempotent_power: Some(k),
                preperiod: Some(first),
                period: Some(period),
                orbit,
            };
        }
        seen.insert(next.clone(), power);
        orbit.push(next);
    }
    OrbitResult { orbit, idempotent: None, idempotent_power: None, preperiod: None, period: None }
}
