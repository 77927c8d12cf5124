//! Oracles shared by the integration tests. They avoid the library's
//! evaluation paths: Fibonacci numbers come from fast doubling, Lucas numbers
//! from `L(n) = 2F(n+1) - F(n)`, and sums are accumulated term by term.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `(F(n), F(n+1))` by fast doubling.
pub fn fib_doubling(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_doubling(n / 2);
    let c = &a * (BigInt::from(2) * &b - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

pub fn f(n: u64) -> BigInt {
    fib_doubling(n).0
}

pub fn l(n: u64) -> BigInt {
    let (a, b) = fib_doubling(n);
    BigInt::from(2) * b - a
}

pub fn pow(m: i64, e: u64) -> BigInt {
    let mut p = BigInt::one();
    for _ in 0..e {
        p *= m;
    }
    p
}

pub fn sign(k: u64) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_{k=0..n} m^k·seq(k)`.
pub fn weighted_sum(seq: fn(u64) -> BigInt, n: u64, m: i64) -> BigInt {
    (0..=n).map(|k| pow(m, k) * seq(k)).sum()
}

/// `Σ_{k=0..n} (-1)^k·m^(n-k)·seq(k)`.
pub fn alternating_sum(seq: fn(u64) -> BigInt, n: u64, m: i64) -> BigInt {
    (0..=n).map(|k| sign(k) * pow(m, n - k) * seq(k)).sum()
}
