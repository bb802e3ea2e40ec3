//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(e)-1}` of
//! `Q[x]/(Φ_e(x))`. The representation is canonical: two equal field elements
//! with the same conductor have identical coefficient vectors, so derived
//! `Eq`, `Hash` and `Ord` are sound.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Precomputed reduction data for one conductor.
#[derive(Debug)]
pub struct CycField {
    pub conductor: u32,
    pub degree: usize,
    /// `reduce[k]` holds `x^k mod Φ_e` for `0 <= k < e`.
    reduce: Vec<Vec<i64>>,
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both ascending-coefficient, den monic
    let mut rem = num.to_vec();
    let dn = den.len();
    let mut quot = vec![0i64; num.len() + 1 - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn - 1];
        quot[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CycField {
    fn build(e: u32) -> CycField {
        let phi = cyclotomic_polynomial(e);
        let degree = phi.len() - 1;
        let mut reduce = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..e {
            reduce.push(cur.clone());
            // multiply by x and reduce with the monic Φ_e
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1];
            }
            if degree >= 1 {
                next[0] = 0;
            }
            if top != 0 {
                for i in 0..degree {
                    next[i] -= top * phi[i];
                }
            }
            cur = next;
        }
        CycField { conductor: e, degree, reduce }
    }

    /// Coefficients of `ζ^k` in the power basis.
    pub fn power(&self, k: i64) -> &[i64] {
        let e = self.conductor as i64;
        &self.reduce[k.rem_euclid(e) as usize]
    }
}

/// Shared, leaked per-conductor tables.
pub fn field(e: u32) -> &'static CycField {
    static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();
    assert!(e >= 1, "conductor must be positive");
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("cyclotomic field cache poisoned");
    guard
        .entry(e)
        .or_insert_with(|| Box::leak(Box::new(CycField::build(e))))
}

/// Euler's totient of the conductor.
pub fn totient(e: u32) -> usize {
    field(e).degree
}

/// An exact element of `Q(ζ_e)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(e: u32) -> Self {
        CycScalar { conductor: e, coeffs: vec![BigRational::zero(); totient(e)] }
    }

    pub fn one(e: u32) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    pub fn from_int(e: u32, v: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(e: u32, q: BigRational) -> Self {
        let mut s = Self::zero(e);
        s.coeffs[0] = q;
        s
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let f = field(e);
        let coeffs = f
            .power(k)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        CycScalar { conductor: e, coeffs }
    }

    /// Builds `Σ q_k ζ^k` from an arbitrary exponent map.
    pub fn from_exponents<'a, I>(e: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, &'a BigRational)>,
    {
        let f = field(e);
        let mut coeffs = vec![BigRational::zero(); f.degree];
        for (k, q) in terms {
            if q.is_zero() {
                continue;
            }
            for (slot, &c) in coeffs.iter_mut().zip(f.power(k)) {
                if c != 0 {
                    *slot += q * BigRational::from_integer(BigInt::from(c));
                }
            }
        }
        CycScalar { conductor: e, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients (`coeffs[k]` multiplies `ζ^k`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.conductor), "cannot embed Q(ζ_{}) into Q(ζ_{m})", self.conductor);
        let step = (m / self.conductor) as i64;
        CycScalar::from_exponents(
            m,
            self.coeffs.iter().enumerate().map(|(k, q)| (k as i64 * step, q)),
        )
    }

    fn aligned(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        let m = (a.conductor as u64).lcm(&(b.conductor as u64)) as u32;
        (a.embed(m), b.embed(m))
    }

    /// Complex conjugation `ζ^k -> ζ^{-k}`.
    pub fn conj(&self) -> Self {
        CycScalar::from_exponents(
            self.conductor,
            self.coeffs.iter().enumerate().map(|(k, q)| (-(k as i64), q)),
        )
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same(&self, other: &CycScalar) -> CycScalar {
        let e = self.conductor;
        let f = field(e);
        let n = f.degree;
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        let mut full = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[i + j] += a * b;
            }
        }
        let mut coeffs: Vec<BigRational> = full[..n].to_vec();
        for (k, c) in full.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (slot, &r) in coeffs.iter_mut().zip(f.power(k as i64)) {
                if r != 0 {
                    *slot += c * BigRational::from_integer(BigInt::from(r));
                }
            }
        }
        CycScalar { conductor: e, coeffs }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.conductor;
        let n = self.coeffs.len();
        let nonzero: Vec<usize> = (0..n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        if nonzero.len() == 1 {
            let k = nonzero[0];
            let q = self.coeffs[k].recip();
            return Ok(CycScalar::root_of_unity(e, -(k as i64)).scale(&q));
        }
        // Solve (multiplication-by-self matrix) * x = 1 over Q.
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; n];
        for j in 0..n {
            let col = self.mul_same(&CycScalar::root_of_unity(e, j as i64));
            for i in 0..n {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m[0][n] = BigRational::one();
        let sol = solve_rational_square(m).ok_or(Error::DivisionByZero)?;
        Ok(CycScalar { conductor: e, coeffs: sol })
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycScalar::one(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Parses `2`, `-1/2`, `z^3`, `1 - 2/3*z^2 + z` over conductor `e`.
    pub fn parse(e: u32, text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') && prev != Some('*') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        terms.push(cur);
        let mut acc = CycScalar::zero(e);
        for t in terms {
            acc = &acc + &parse_term(e, &t)?;
        }
        Ok(acc)
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(e: u32, term: &str) -> Result<CycScalar> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, term.strip_prefix('+').unwrap_or(term)),
    };
    let zpos = body.find(['z', 'ζ']);
    let (coef, exp) = match zpos {
        None => (parse_rational(body)?, None),
        Some(p) => {
            let coef_text = body[..p].trim_end_matches('*');
            let coef = if coef_text.is_empty() { BigRational::one() } else { parse_rational(coef_text)? };
            let rest = &body[p..];
            let rest = rest.trim_start_matches('z').trim_start_matches('ζ');
            let k = match rest.strip_prefix('^') {
                Some(k) => k.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?,
                None if rest.is_empty() => 1,
                None => return Err(Error::Parse(format!("bad term `{term}`"))),
            };
            (coef, Some(k))
        }
    };
    let coef = if sign < 0 { -coef } else { coef };
    Ok(match exp {
        None => CycScalar::from_rational(e, coef),
        Some(k) => CycScalar::root_of_unity(e, k).scale(&coef),
    })
}

/// Gaussian elimination on an augmented `n x (n+1)` rational system.
fn solve_rational_square(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = &m[col][c] * &f;
                    m[r][c] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor != rhs.conductor {
            let (a, b) = CycScalar::aligned(self, rhs);
            return &a + &b;
        }
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if self.conductor != rhs.conductor {
            *self = &*self + rhs;
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor != rhs.conductor {
            let (a, b) = CycScalar::aligned(self, rhs);
            return &a - &b;
        }
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        if self.conductor != rhs.conductor {
            let (a, b) = CycScalar::aligned(self, rhs);
            return a.mul_same(&b);
        }
        self.mul_same(rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

/// Equality across conductors (embeds both into the lcm field).
pub fn cyc_eq(a: &CycScalar, b: &CycScalar) -> bool {
    if a.conductor == b.conductor {
        a == b
    } else {
        let (x, y) = CycScalar::aligned(a, b);
        x == y
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `p/q` text form used in reports.
pub fn rational_to_string(q: &BigRational) -> String {
    fmt_rational(q)
}

pub fn parse_rational_str(text: &str) -> Result<BigRational> {
    parse_rational(text.trim())
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => out.push_str(&fmt_rational(&mag)),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&fmt_rational(&mag));
                        out.push('*');
                    }
                    if k == 1 {
                        out.push('z');
                    } else {
                        out.push_str(&format!("z^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]({})", self.conductor, self)
    }
}

/// JSON form `[e, [[k, "p/q"], …]]` listing the nonzero power-basis coefficients.
impl serde::Serialize for CycScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(usize, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k, fmt_rational(q)))
            .collect();
        (self.conductor, terms).serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for CycScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (e, terms): (u32, Vec<(i64, String)>) = serde::Deserialize::deserialize(d)?;
        if e == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let mut parsed = Vec::with_capacity(terms.len());
        for (k, q) in terms {
            parsed.push((k, parse_rational(&q).map_err(serde::de::Error::custom)?));
        }
        Ok(CycScalar::from_exponents(e, parsed.iter().map(|(k, q)| (*k, q))))
    }
}
