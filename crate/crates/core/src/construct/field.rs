//! Finite fields GF(q) with elements coded as integers `0..q`.
//!
//! An element `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` of GF(p)[x]/(f) is
//! coded as `sum c_i p^i`. The modulus f is fixed:
//!
//! | q | f           |
//! |---|-------------|
//! | 4 | x^2 + x + 1 |
//! | 8 | x^3 + x + 1 |
//! | 9 | x^2 + x + 2 |
//!
//! and for other prime powers the lexicographically first monic primitive
//! polynomial (coefficients compared from the constant term up). In every
//! case `x` (code `p`, or `2`..`p-1` for primes) generates the
//! multiplicative group.

use crate::error::{Error, Result};

/// The largest field order supported.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone)]
pub struct GaloisField {
    q: usize,
    p: usize,
    e: usize,
    /// `exp[i] = w^i` for `0 <= i < q-1`.
    exp: Vec<usize>,
    /// `log[a]` for nonzero `a`.
    log: Vec<usize>,
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn fixed_modulus(q: usize) -> Option<Vec<usize>> {
    // Coefficients from the constant term up, without the leading 1.
    match q {
        4 => Some(vec![1, 1]),
        8 => Some(vec![1, 1, 0]),
        9 => Some(vec![2, 1]),
        _ => None,
    }
}

fn digits(mut a: usize, p: usize, e: usize) -> Vec<usize> {
    let mut out = vec![0; e];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies a code by `x` modulo the monic polynomial with lower
/// coefficients `low`.
fn times_x(a: usize, p: usize, low: &[usize]) -> usize {
    let e = low.len();
    let d = digits(a, p, e);
    let top = d[e - 1];
    let mut out = vec![0; e];
    for i in (1..e).rev() {
        out[i] = d[i - 1];
    }
    for i in 0..e {
        out[i] = (out[i] + (p - top) * low[i]) % p;
    }
    undigits(&out, p)
}

/// Powers of `x` modulo the polynomial, if it is primitive.
fn primitive_powers(p: usize, low: &[usize]) -> Option<Vec<usize>> {
    let q = p.pow(low.len() as u32);
    let mut exp = Vec::with_capacity(q - 1);
    let mut a = 1;
    for _ in 0..q - 1 {
        exp.push(a);
        a = times_x(a, p, low);
        if a == 1 && exp.len() < q - 1 {
            return None;
        }
    }
    (a == 1).then_some(exp)
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedQ(q));
        }
        let (q, p, e) = (q as usize, p as usize, e as usize);
        let exp = if e == 1 {
            let w = (2..p.max(3))
                .find(|&w| {
                    let mut a = 1;
                    (1..p - 1).all(|_| {
                        a = a * w % p;
                        a != 1
                    })
                })
                .unwrap_or(1);
            let mut exp = Vec::with_capacity(p - 1);
            let mut a = 1;
            for _ in 0..p - 1 {
                exp.push(a);
                a = a * w % p;
            }
            exp
        } else if let Some(low) = fixed_modulus(q) {
            primitive_powers(p, &low).expect("fixed moduli are primitive")
        } else {
            (0..q)
                .filter(|&c| c % p != 0)
                .find_map(|c| primitive_powers(p, &digits(c, p, e)))
                .expect("a primitive polynomial exists")
        };
        let mut log = vec![0; q];
        for (i, &a) in exp.iter().enumerate() {
            log[a] = i;
        }
        Ok(GaloisField { q, p, e, exp, log })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// The generator `w` of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        self.exp[1 % (self.q - 1)]
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
    }

    /// `w^i`, for any integer exponent.
    pub fn power_of_generator(&self, i: i64) -> usize {
        self.exp[i.rem_euclid(self.q as i64 - 1) as usize]
    }

    pub fn pow(&self, a: usize, n: usize) -> usize {
        if a == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        self.exp[self.log[a] * n % (self.q - 1)]
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }

    pub fn is_square(&self, a: usize) -> bool {
        a == 0 || self.p == 2 || self.log[a] % 2 == 0
    }
}
