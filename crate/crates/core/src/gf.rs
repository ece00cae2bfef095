//! Finite fields GF(p^k) for small orders.
//!
//! Elements are dense coefficient vectors over the prime field, reduced
//! modulo a monic irreducible polynomial. Internally a vector
//! `(c_0, c_1, ..., c_{k-1})` is packed into the integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, which is also its position in
//! [`FieldSpec::enumerate`] order (constant term fastest). That integer is the
//! "index" used everywhere else in the crate and in serialized output.
//!
//! Two arithmetic paths exist: the polynomial path (always available) and
//! log/antilog tables built from a primitive element. Fields of order at most
//! 256 additionally carry full addition and multiplication tables. All paths
//! must agree bit for bit.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

const DENSE_TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds 2^16")]
    TooLarge { p: u32, k: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not an element index of GF({1})")]
    BadIndex(u32, u32),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && n % p != 0 {
        p += 1;
    }
    if n % p != 0 {
        // n itself is prime
        return Some((n as u32, 1));
    }
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p as u32, k))
}

// Polynomials over GF(p) as ascending coefficient vectors without trailing zeros.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo the nonzero polynomial `b`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (factor as u64 * bc as u64 % p as u64) as u32;
            let slot = &mut r[shift + i];
            *slot = (*slot + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// A finite field GF(p^k) with a fixed polynomial basis.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    order: u32,
    /// Monic, ascending, length k + 1.
    modulus: Vec<u32>,
    primitive: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

impl FieldSpec {
    /// Builds GF(p^k) using the lexicographically smallest monic irreducible
    /// modulus, coefficients compared from the constant term upward.
    pub fn new(p: u32, k: u32) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(GfError::TooLarge { p, k })?;
        let modulus = smallest_irreducible(p, k);
        let mut field = FieldSpec {
            p,
            k,
            order: order as u32,
            modulus,
            primitive: 0,
            log: Vec::new(),
            exp: Vec::new(),
            add_table: None,
            mul_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    /// GF(q) for a prime power q.
    pub fn with_order(q: u32) -> Result<Self, GfError> {
        match prime_power(q as u64) {
            Some((p, k)) => Self::new(p, k),
            None if q > 1 && q as u64 > MAX_ORDER => Err(GfError::TooLarge { p: q, k: 1 }),
            None => Err(GfError::NotPrime(q)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, ascending coefficients (`modulus()[k] == 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for the log tables: the first generator of
    /// the multiplicative group in enumeration order.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    fn build_tables(&mut self) {
        let q = self.order;
        let n = q - 1;
        // smallest generator in index order
        let mut primitive = 0;
        'search: for cand in 1..q {
            let mut x = 1;
            for e in 1..=n {
                x = self.poly_mul(x, cand);
                if x == 1 {
                    if e == n {
                        primitive = cand;
                        break 'search;
                    }
                    continue 'search;
                }
            }
        }
        self.primitive = primitive;
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for (e, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = e as u32;
            x = self.poly_mul(x, primitive);
        }
        self.exp = exp;
        self.log = log;
        if q <= DENSE_TABLE_LIMIT {
            let qs = q as usize;
            let mut add = vec![0u16; qs * qs];
            let mut mul = vec![0u16; qs * qs];
            for a in 0..q {
                for b in 0..q {
                    add[a as usize * qs + b as usize] = self.digit_add(a, b) as u16;
                    mul[a as usize * qs + b as usize] = self.log_mul(a, b) as u16;
                }
            }
            self.add_table = Some(add);
            self.mul_table = Some(mul);
        }
    }

    /// Coefficient vector of an element index, length k, ascending.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut x = a;
        for _ in 0..self.k {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    /// Packs a coefficient vector (ascending, entries reduced mod p) into an index.
    pub fn from_coefficients(&self, coeffs: &[u32]) -> u32 {
        let mut reduced = coeffs.iter().map(|&c| c % self.p).collect::<Vec<_>>();
        if reduced.len() > self.k as usize {
            reduced = poly_rem(&reduced, &self.modulus, self.p);
        }
        reduced
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// All elements in odometer order, constant term fastest.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElement<'_>> {
        (0..self.order).map(move |index| FieldElement { field: self, index })
    }

    pub fn element(&self, index: u32) -> Result<FieldElement<'_>, GfError> {
        if index < self.order {
            Ok(FieldElement { field: self, index })
        } else {
            Err(GfError::BadIndex(index, self.order))
        }
    }

    fn digit_add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[(a * self.order + b) as usize] as u32,
            None => self.digit_add(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let coeffs = self
            .coefficients(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect::<Vec<_>>();
        self.from_coefficients(&coeffs)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplication through the polynomial representation, no tables.
    pub fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let ca = self.coefficients(a);
        let cb = self.coefficients(b);
        let p = self.p as u64;
        let mut prod = vec![0u32; ca.len() + cb.len() - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        self.from_coefficients(&poly_rem(&prod, &self.modulus, self.p))
    }

    fn log_mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[(a * self.order + b) as usize] as u32,
            None => self.log_mul(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32, GfError> {
        if a == 0 {
            return Err(GfError::ZeroInverse);
        }
        let n = self.order - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// Square-and-multiply on the polynomial path.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_mul(result, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Discrete log with respect to [`FieldSpec::primitive_element`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.order as u64 - 1)) as usize]
    }

    /// Evaluates an ascending coefficient list (field-element indices) at `x`.
    pub fn eval_poly(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let count = (p as u64).pow(k as u32);
    for rank in 0..count {
        // rank's most significant base-p digit is the constant term
        let mut low = vec![0u32; k];
        let mut x = rank;
        for i in (0..k).rev() {
            low[i] = (x % p as u64) as u32;
            x /= p as u64;
        }
        let mut f = low;
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// An element bound to its field.
#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    field: &'a FieldSpec,
    index: u32,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.index, self.field)
    }
}

impl Serialize for FieldElement<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u32(self.index)
    }
}

impl<'a> FieldElement<'a> {
    pub fn field(&self) -> &'a FieldSpec {
        self.field
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn coefficients(&self) -> Vec<u32> {
        self.field.coefficients(self.index)
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, index: u32) -> Self {
        FieldElement {
            field: self.field,
            index,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.index, other.index)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.index, other.index)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.index))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.index, other.index)))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        Ok(self.with(self.field.inv(self.index)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.index, e))
    }
}
