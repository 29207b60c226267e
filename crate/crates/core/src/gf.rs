//! Small finite fields GF(p^k) with q = p^k <= 64.
//!
//! Elements are integer codes in `[0, q)`. For extension fields the code is
//! the base-p digit vector of the reduced polynomial representative, constant
//! term in the least significant digit, so `x` in GF(4) is code 2. All four
//! operations are served from precomputed tables.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(pub u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<u8> for FieldElem {
    fn from(c: u8) -> Self {
        FieldElem(c)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients of the defining polynomial, constant term first, monic.
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^k` with `p` prime.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, k))
}

impl FieldSpec {
    /// Builds GF(p^k). Extension fields use the smallest monic irreducible
    /// polynomial of degree k, ordered by the base-p code of its lower
    /// coefficients.
    pub fn new(p: u32, k: u32) -> Result<FieldSpec> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::FieldOutOfRange(1));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldOutOfRange(q));
        }
        let q = q as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k)
        };

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            for b in 0..q {
                let (s, m) = if k == 1 {
                    ((a + b) % p, (a * b) % p)
                } else {
                    let pa = digits(a, p, k);
                    let pb = digits(b, p, k);
                    let s: Vec<u32> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                    (undigits(&s, p), undigits(&poly_mulmod(&pa, &pb, &modulus, p), p))
                };
                add[a as usize * qs + b as usize] = s as u8;
                mul[a as usize * qs + b as usize] = m as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8;
            }
        }
        Ok(FieldSpec {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    /// Builds the field of order `q`, factoring it as a prime power.
    pub fn of_order(q: u64) -> Result<FieldSpec> {
        if !(2..=MAX_ORDER as u64).contains(&q) {
            return Err(Error::FieldOutOfRange(q));
        }
        let (p, k) = prime_power(q)?;
        FieldSpec::new(p, k)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial coefficients, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u8).map(FieldElem)
    }

    pub fn elem(&self, code: u32) -> Option<FieldElem> {
        (code < self.q).then_some(FieldElem(code as u8))
    }

    /// Reduces an integer (possibly negative) into the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u8)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add_code(a.0, b.0))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add_code(a.0, self.neg_code(b.0)))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul_code(a.0, b.0))
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg_code(a.0))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.q));
        }
        Ok(FieldElem(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a.0;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            e >>= 1;
        }
        FieldElem(acc)
    }

    #[inline(always)]
    pub(crate) fn add_code(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline(always)]
    pub(crate) fn mul_code(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline(always)]
    pub(crate) fn neg_code(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero code; the caller guarantees `a != 0`.
    #[inline(always)]
    pub(crate) fn inv_code(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two reduced polynomials modulo a monic `modulus`.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u8], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + p - (c * m as u32) % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Remainder of `a` modulo monic `m`; both constant term first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (c * mi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_of_degree(code: u32, p: u32, deg: u32) -> Vec<u32> {
    let mut v = digits(code, p, deg);
    v.push(1);
    v
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    for deg in 1..=k / 2 {
        for code in 0..p.pow(deg) {
            let g = monic_of_degree(code, p, deg);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u8> {
    (0..p.pow(k))
        .map(|code| monic_of_degree(code, p, k))
        .find(|f| is_irreducible(f, p))
        .map(|f| f.into_iter().map(|c| c as u8).collect())
        .expect("irreducible polynomials exist in every degree")
}
