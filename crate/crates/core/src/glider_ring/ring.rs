//! Rational linear combinations of glider keys.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::context::{GroupContext, Inclusion};
use super::key::GliderKey;

/// A finitely supported combination `Σ q_k [k]`; zero coefficients and the
/// zero key are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    terms: BTreeMap<GliderKey, BigRational>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn from_key(key: GliderKey) -> Self {
        let mut r = RingElement::zero();
        r.add_term(key, BigRational::one());
        r
    }

    pub fn terms(&self) -> &BTreeMap<GliderKey, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &GliderKey) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, key: GliderKey, q: BigRational) {
        if key.is_zero() || q.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (k, q) in &other.terms {
            out.add_term(k.clone(), q.clone());
        }
        out
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> RingElement {
        if q.is_zero() {
            return RingElement::zero();
        }
        RingElement { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * q)).collect() }
    }

    /// Bilinear extension of the key product.
    pub fn mul(&self, other: &RingElement, ctx: &GroupContext) -> RingElement {
        let mut out = RingElement::zero();
        for (k1, q1) in &self.terms {
            for (k2, q2) in &other.terms {
                out.add_term(ctx.product(k1, k2), q1 * q2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32, ctx: &GroupContext) -> RingElement {
        assert!(n >= 1, "powers start at one");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self, ctx);
        }
        acc
    }

    /// Linear extension of induction along an inclusion.
    pub fn induce(&self, inclusion: &Inclusion) -> RingElement {
        let mut out = RingElement::zero();
        for (k, q) in &self.terms {
            out.add_term(inclusion.induce(k), q.clone());
        }
        out
    }

    /// Linear extension of restriction along an inclusion.
    pub fn restrict(&self, inclusion: &Inclusion) -> RingElement {
        let mut out = RingElement::zero();
        for (k, q) in &self.terms {
            out.add_term(inclusion.restrict(k), q.clone());
        }
        out
    }
}
