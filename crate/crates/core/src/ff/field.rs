//! Prime-power fields GF(p^k) with log/antilog tables.
//!
//! An element is stored as its integer code: the polynomial
//! `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` (reduced modulo the field's modulus)
//! maps to `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. For p = 2 addition is XOR.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FieldError;

/// Largest field order supported by the table representation.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// A field element, identified by its integer code in `0..q`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// JSON form of a field: `{"p": 2, "k": 6}` or with an explicit modulus
/// (coefficients lowest degree first, monic, length k+1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldDescriptor {
    pub fn new(p: u32, k: u32) -> Self {
        FieldDescriptor { p, k, modulus: None }
    }

    pub fn build(&self) -> Result<Field, FieldError> {
        Field::new(self.p, self.k, self.modulus.as_deref())
    }
}

/// The finite field GF(p^k). Immutable after construction.
#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    size: u32,
    modulus: Vec<u32>,
    generator: Gf,
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    // Addition table for small odd-characteristic fields.
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Digits of `code` in base `p`, `k` of them, lowest first.
fn digits(code: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    let mut c = code;
    for _ in 0..k {
        out.push(c % p);
        c /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut div = digits(low as u32, p, d as u32);
            div.push(1);
            if poly_rem(modulus, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^k). With `modulus = None` the modulus is the least monic
    /// polynomial (ordered by the integer code of its lower coefficients)
    /// whose root is primitive.
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadDegree(k));
        }
        let size = (p as u64)
            .checked_pow(k)
            .filter(|&s| s <= MAX_FIELD_SIZE as u64)
            .ok_or(FieldError::TooLarge { p, k })? as u32;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus(m.to_vec()));
                }
                if !is_irreducible(m, p) {
                    return Err(FieldError::Reducible(m.to_vec()));
                }
                m.to_vec()
            }
            None => Self::search_modulus(p, k, size)?,
        };

        let x = Self::x_residue(&modulus, p, k);
        let generator = if Self::order_of(&x, &modulus, p, size) == size - 1 {
            x
        } else {
            // Lexicographically least element of full order.
            (1..size)
                .map(|c| digits(c, p, k))
                .find(|d| Self::order_of(d, &modulus, p, size) == size - 1)
                .ok_or_else(|| FieldError::Reducible(modulus.clone()))?
        };

        let mut exp = vec![0u32; 2 * (size as usize - 1)];
        let mut log = vec![0u32; size as usize];
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        for e in 0..(size - 1) as usize {
            let code = undigits(&cur, p);
            exp[e] = code;
            exp[e + size as usize - 1] = code;
            log[code as usize] = e as u32;
            cur = poly_mulmod(&cur, &generator, &modulus, p);
        }

        let add_table = if p != 2 && size <= 256 {
            let mut t = vec![0u32; (size * size) as usize];
            for a in 0..size {
                let da = digits(a, p, k);
                for b in 0..size {
                    let db = digits(b, p, k);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * size + b) as usize] = undigits(&s, p);
                }
            }
            Some(t)
        } else {
            None
        };

        Ok(Field {
            p,
            k,
            size,
            modulus,
            generator: Gf(undigits(&generator, p)),
            exp,
            log,
            add_table,
        })
    }

    /// GF(2^k) with the default modulus.
    pub fn binary(k: u32) -> Result<Self, FieldError> {
        Field::new(2, k, None)
    }

    fn x_residue(modulus: &[u32], p: u32, k: u32) -> Vec<u32> {
        let mut x = vec![0u32; 2];
        x[1] = 1;
        let mut r = poly_rem(&x, modulus, p);
        r.resize(k as usize, 0);
        r
    }

    fn order_of(elem: &[u32], modulus: &[u32], p: u32, size: u32) -> u32 {
        if elem.iter().all(|&c| c == 0) {
            return 0;
        }
        let mut cur = elem.to_vec();
        for e in 1..size {
            if cur[0] == 1 && cur[1..].iter().all(|&c| c == 0) {
                return e;
            }
            cur = poly_mulmod(&cur, elem, modulus, p);
        }
        0
    }

    fn search_modulus(p: u32, k: u32, size: u32) -> Result<Vec<u32>, FieldError> {
        for low in 0..size {
            let mut m = digits(low, p, k);
            m.push(1);
            if m[0] == 0 && k > 1 {
                continue;
            }
            let x = Self::x_residue(&m, p, k);
            // A primitive root of unity of order p^k - 1 forces irreducibility.
            if Self::order_of(&x, &m, p, size) == size - 1 {
                debug_assert!(is_irreducible(&m, p));
                return Ok(m);
            }
        }
        Err(FieldError::NoModulus { p, k })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements q = p^k.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Gf {
        self.generator
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: Some(self.modulus.clone()),
        }
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> + Clone {
        (0..self.size).map(Gf)
    }

    pub fn contains(&self, a: Gf) -> bool {
        a.0 < self.size
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.p as i64) as u32)
    }

    /// generator^e
    pub fn gen_pow(&self, e: u64) -> Gf {
        Gf(self.exp[(e % (self.size as u64 - 1)) as usize])
    }

    /// Discrete logarithm to the generator; `None` for zero.
    pub fn log(&self, a: Gf) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        if let Some(t) = &self.add_table {
            return Gf(t[(a.0 * self.size + b.0) as usize]);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            return Gf::ZERO;
        }
        Gf(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn checked_inv(&self, a: Gf) -> Option<Gf> {
        if a.is_zero() {
            None
        } else {
            let l = self.log[a.0 as usize];
            Some(Gf(self.exp[((self.size - 1 - l) % (self.size - 1)) as usize]))
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Gf) -> Gf {
        self.checked_inv(a).expect("inverse of zero")
    }

    /// a / b. Panics if b is zero.
    pub fn div(&self, a: Gf, b: Gf) -> Gf {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.is_zero() {
            return Gf::ZERO;
        }
        let l = self.log[a.0 as usize] as u64;
        Gf(self.exp[((l * (e % (self.size as u64 - 1))) % (self.size as u64 - 1)) as usize])
    }

    /// `dst[j] += c * src[j]` for every j.
    pub fn axpy(&self, dst: &mut [Gf], c: Gf, src: &[Gf]) {
        if c.is_zero() {
            return;
        }
        let lc = self.log[c.0 as usize] as usize;
        if self.p == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    d.0 ^= self.exp[lc + self.log[s.0 as usize] as usize];
                }
            }
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    *d = self.add(*d, Gf(self.exp[lc + self.log[s.0 as usize] as usize]));
                }
            }
        }
    }

    /// Scales a slice in place.
    pub fn scale(&self, v: &mut [Gf], c: Gf) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn sum<I: IntoIterator<Item = Gf>>(&self, it: I) -> Gf {
        it.into_iter().fold(Gf::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn dot(&self, a: &[Gf], b: &[Gf]) -> Gf {
        a.iter().zip(b).fold(Gf::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % p64, k % p64);
        if ki > ni {
            return 0;
        }
        // small binomial, p is small so the direct product stays in range
        let mut num = 1u64;
        let mut den = 1u64;
        for j in 0..ki {
            num = num * ((ni - j) % p64) % p64;
            den = den * ((j + 1) % p64) % p64;
        }
        acc = acc * num % p64 * mod_inverse(den, p64) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}
