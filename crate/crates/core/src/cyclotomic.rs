//! Exact arithmetic in the cyclotomic fields `ℚ(ζ_m)`.
//!
//! Elements are stored in the power basis `1, ζ_m, …, ζ_m^{φ(m)-1}` with rational
//! coordinates, reduced modulo the `m`-th cyclotomic polynomial. That form is
//! canonical, so equality is coordinate equality. No floating point is used
//! anywhere in this module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// Divisors of `m` in ascending order.
pub fn divisors(m: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u32;
    while (i as u64) * (i as u64) <= m as u64 {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count() as u32
}

fn mobius(mut m: u32) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Quotient of two integer polynomials (lowest degree first) where the divisor is
/// monic and the division is exact.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Coefficients of `Φ_m`, lowest degree first.
///
/// Computed as `x^m - 1` divided by `Φ_d` for every proper divisor `d` of `m`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let divs = divisors(m);
    let mut known: Vec<(u32, Vec<i64>)> = Vec::with_capacity(divs.len());
    for d in divs {
        let mut p = vec![0i64; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for (e, phi_e) in &known {
            if d % e == 0 {
                p = div_exact(&p, phi_e);
            }
        }
        known.push((d, p));
    }
    known.pop().expect("m has at least one divisor").1
}

/// Reduces a vector indexed by exponents modulo `m` into the power basis.
fn reduce_cyclic(m: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    debug_assert_eq!(v.len(), m as usize);
    let phi = cyclotomic_polynomial(m);
    let d = phi.len() - 1;
    for i in (d..m as usize).rev() {
        let c = core::mem::replace(&mut v[i], Rational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, &pj) in phi[..d].iter().enumerate() {
            if pj != 0 {
                v[i - d + j] -= &c * Rational::from_integer(BigInt::from(pj));
            }
        }
    }
    v.truncate(d);
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An exact element of `ℚ(ζ_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclotomic { order, coeffs: vec![Rational::zero(); euler_phi(order) as usize] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(n)))
    }

    /// `ζ_m^k`, for any integer `k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut v = vec![Rational::zero(); order as usize];
        v[k.rem_euclid(order as i64) as usize] = Rational::one();
        Cyclotomic { order, coeffs: reduce_cyclic(order, v) }
    }

    /// Builds `Σ c_j ζ_m^j` from coefficients of any length.
    pub fn from_powers(order: u32, powers: &[Rational]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut v = vec![Rational::zero(); order as usize];
        for (j, c) in powers.iter().enumerate() {
            if !c.is_zero() {
                v[j % order as usize] += c;
            }
        }
        Cyclotomic { order, coeffs: reduce_cyclic(order, v) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates; the length is `φ(order)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `ℚ`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer, if it is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(match op {
            ArithOp::Add => Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            },
            ArithOp::Sub => Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            },
            ArithOp::Mul => {
                let m = self.order as usize;
                let mut v = vec![Rational::zero(); m];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.coeffs.iter().enumerate() {
                        if !b.is_zero() {
                            v[(i + j) % m] += a * b;
                        }
                    }
                }
                Cyclotomic { order: self.order, coeffs: reduce_cyclic(self.order, v) }
            }
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Image under the automorphism `ζ_m ↦ ζ_m^k`; `k` must be a unit mod `m`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let m = self.order as i64;
        if k.gcd(&m) != 1 {
            return Err(Error::Usage(alloc::format!("{k} is not a unit modulo {m}")));
        }
        let mut v = vec![Rational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(j as i64 * k).rem_euclid(m) as usize] += c;
            }
        }
        Ok(Cyclotomic { order: self.order, coeffs: reduce_cyclic(self.order, v) })
    }

    /// Complex conjugation, `ζ_m ↦ ζ_m^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Image in `ℚ(ζ_M)` under `ζ_m ↦ ζ_M^{M/m}`.
    pub fn embed(&self, to: u32) -> Result<Self> {
        if to == 0 || !to.is_multiple_of(self.order) {
            return Err(Error::NotDivisible { from: self.order, to });
        }
        if to == self.order {
            return Ok(self.clone());
        }
        let step = (to / self.order) as usize;
        let mut v = vec![Rational::zero(); to as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Ok(Cyclotomic { order: to, coeffs: reduce_cyclic(to, v) })
    }

    /// Trace from `ℚ(ζ_m)` down to `ℚ`.
    pub fn trace(&self) -> Rational {
        let m = self.order;
        let phi_m = euler_phi(m) as i64;
        let mut t = Rational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let g = (j as u32).gcd(&m);
            let q = m / g;
            let tr = mobius(q) * phi_m / euler_phi(q) as i64;
            t += c * Rational::from_integer(BigInt::from(tr));
        }
        t
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = lcm(self.order, other.order);
        match (self.embed(m), other.embed(m)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if j == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            if j == 1 {
                write!(f, "ζ{}", self.order)?;
            } else {
                write!(f, "ζ{}^{}", self.order, j)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Running sum in `ℚ[x]/(x^m - 1)`, reduced to `ℚ(ζ_m)` once at the end.
///
/// Sums of many roots of unity only touch an integer counter per exponent.
#[derive(Clone, Debug)]
pub struct CyclicSum {
    order: u32,
    counts: Vec<i64>,
    rest: Option<Vec<Rational>>,
}

impl CyclicSum {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CyclicSum { order, counts: vec![0; order as usize], rest: None }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Adds `ζ_m^k`.
    pub fn add_root(&mut self, k: u64) {
        self.counts[(k % self.order as u64) as usize] += 1;
    }

    pub fn add_root_times(&mut self, k: u64, times: i64) {
        self.counts[(k % self.order as u64) as usize] += times;
    }

    /// Adds `ζ_m^shift · value`; the order of `value` must divide `m`.
    pub fn add_shifted(&mut self, value: &Cyclotomic, shift: u64) -> Result<()> {
        if !self.order.is_multiple_of(value.order) {
            return Err(Error::NotDivisible { from: value.order, to: self.order });
        }
        let step = (self.order / value.order) as u64;
        let m = self.order as u64;
        let rest = self.rest.get_or_insert_with(|| vec![Rational::zero(); m as usize]);
        for (j, c) in value.coeffs.iter().enumerate() {
            if !c.is_zero() {
                rest[((j as u64 * step + shift) % m) as usize] += c;
            }
        }
        Ok(())
    }

    pub fn add_value(&mut self, value: &Cyclotomic) -> Result<()> {
        self.add_shifted(value, 0)
    }

    pub fn finish(self) -> Cyclotomic {
        let mut v = match self.rest {
            Some(r) => r,
            None => vec![Rational::zero(); self.order as usize],
        };
        for (slot, &n) in v.iter_mut().zip(&self.counts) {
            if n != 0 {
                *slot += Rational::from_integer(BigInt::from(n));
            }
        }
        Cyclotomic { order: self.order, coeffs: reduce_cyclic(self.order, v) }
    }
}
