//! Scalar rings used throughout the crate.
//!
//! The Z-form engine is generic over an integer type `Z` (arbitrary precision
//! [`num_bigint::BigInt`] by default, fixed width `i128` for quick experiments);
//! rational coefficients are `num_rational::Ratio<Z>`. Everything after
//! reduction lives in a [`PrimeField`] with a runtime modulus.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Integer ring the straightening engine computes over.
pub trait IntegerScalar:
    Clone + Debug + Display + Hash + Ord + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> IntegerScalar for T where
    T: Clone + Debug + Display + Hash + Ord + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

pub fn int<Z: IntegerScalar>(v: i64) -> Z {
    Z::from_i64(v).expect("integer scalar must hold i64 values")
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p, elements represented by `u32` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn from_int<Z: IntegerScalar>(&self, v: &Z) -> u32 {
        let m: Z = int(self.p as i64);
        v.mod_floor(&m).to_u32().expect("residue fits in u32")
    }

    /// Reduces an integral rational; `None` if the denominator is not 1.
    pub fn from_integral<Z: IntegerScalar>(&self, q: &Ratio<Z>) -> Option<u32> {
        if q.is_integer() {
            Some(self.from_int(q.numer()))
        } else {
            None
        }
    }

    /// Binomial coefficient C(x, k) mod p for any integer `x`.
    pub fn binomial(&self, x: i64, k: u64) -> u32 {
        binomial_mod_p(x, k, self.p)
    }
}

/// C(a, b) mod p for `0 <= a, b < p`.
fn small_binomial(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a unit because b < p.
    let mut inv = 1u64;
    let mut base = den;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    num * inv % p
}

/// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! reduced mod p.
///
/// For `k < p^e` the value mod p is periodic in `x` with period `p^e`, so `x`
/// is first moved into `[0, p^e)` and Lucas' theorem finishes the job.
pub fn binomial_mod_p(x: i64, k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    if k == 0 {
        return 1 % p;
    }
    let mut modulus: u64 = 1;
    while modulus <= k {
        modulus *= p64;
    }
    let mut xr = x.rem_euclid(modulus as i64) as u64;
    let mut kr = k;
    let mut acc = 1u64;
    while kr > 0 || xr > 0 {
        let (xd, kd) = (xr % p64, kr % p64);
        if kd > xd {
            return 0;
        }
        acc = acc * small_binomial(xd, kd, p64) % p64;
        xr /= p64;
        kr /= p64;
    }
    acc as u32
}

/// Exact generalized binomial C(x, k) for any integer `x`.
pub fn binomial<Z: IntegerScalar>(x: i64, k: u64) -> Z {
    let mut acc = Z::one();
    for i in 0..k as i64 {
        acc = acc * int::<Z>(x - i);
        acc = acc / int::<Z>(i + 1);
    }
    acc
}

pub fn factorial<Z: IntegerScalar>(n: u64) -> Z {
    (1..=n as i64).fold(Z::one(), |acc, i| acc * int::<Z>(i))
}

/// Signed Stirling numbers of the first kind: row `n` holds `s(n, j)` with
/// `x(x-1)...(x-n+1) = sum_j s(n, j) x^j`.
pub fn stirling_first<Z: IntegerScalar>(max_n: usize) -> Vec<Vec<Z>> {
    let mut rows: Vec<Vec<Z>> = vec![vec![Z::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![Z::zero(); n + 1];
        let shift = int::<Z>(n as i64 - 1);
        for (j, c) in prev.iter().enumerate() {
            // multiply by (x - (n-1))
            row[j + 1] = row[j + 1].clone() + c.clone();
            row[j] = row[j].clone() - c.clone() * shift.clone();
        }
        rows.push(row);
    }
    rows
}

/// Stirling numbers of the second kind: `x^n = sum_k S(n, k) x(x-1)...(x-k+1)`.
pub fn stirling_second<Z: IntegerScalar>(max_n: usize) -> Vec<Vec<Z>> {
    let mut rows: Vec<Vec<Z>> = vec![vec![Z::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![Z::zero(); n + 1];
        for k in 1..=n {
            let mut v = int::<Z>(k as i64) * prev.get(k).cloned().unwrap_or_else(Z::zero);
            v = v + prev[k - 1].clone();
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}
