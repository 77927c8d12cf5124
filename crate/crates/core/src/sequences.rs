//! Exact Fibonacci and Lucas numbers, generic constant-coefficient
//! recurrences, and annihilating polynomials for C-finite closure.
//!
//! Every value is an arbitrary-precision [`BigInt`]; indices start at 0 and
//! negative indices are not supported.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A linear recurrence with constant integer coefficients and its initial
/// terms:
///
/// ```text
/// a(n + order) = coefficients[0]·a(n) + … + coefficients[order-1]·a(n + order - 1)
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFiniteSpec {
    coefficients: Vec<BigInt>,
    initials: Vec<BigInt>,
}

impl CFiniteSpec {
    pub fn new(coefficients: Vec<BigInt>, initials: Vec<BigInt>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::MalformedSpec("order must be at least 1".into()));
        }
        if coefficients.len() != initials.len() {
            return Err(Error::MalformedSpec(format!(
                "{} coefficients but {} initial terms",
                coefficients.len(),
                initials.len()
            )));
        }
        Ok(Self {
            coefficients,
            initials,
        })
    }

    pub fn from_i64(coefficients: &[i64], initials: &[i64]) -> Result<Self> {
        Self::new(
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
            initials.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    /// `F(n+2) = F(n+1) + F(n)`, `F(0) = 0`, `F(1) = 1`.
    pub fn fibonacci() -> Self {
        Self::from_i64(&[1, 1], &[0, 1]).expect("well-formed")
    }

    /// `L(n+2) = L(n+1) + L(n)`, `L(0) = 2`, `L(1) = 1`.
    pub fn lucas() -> Self {
        Self::from_i64(&[1, 1], &[2, 1]).expect("well-formed")
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn initials(&self) -> &[BigInt] {
        &self.initials
    }

    /// The n-th term, by `n - order + 1` steps of the recurrence.
    pub fn eval(&self, n: u64) -> BigInt {
        let order = self.order();
        if (n as u128) < order as u128 {
            return self.initials[n as usize].clone();
        }
        let mut window: VecDeque<BigInt> = self.initials.iter().cloned().collect();
        for _ in 0..=(n - order as u64) {
            let next = self.step(&window);
            window.pop_front();
            window.push_back(next);
        }
        window.pop_back().expect("window is never empty")
    }

    /// The first `count` terms.
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let order = self.order();
        let mut out: Vec<BigInt> = self.initials.iter().take(count).cloned().collect();
        while out.len() < count {
            let tail = &out[out.len() - order..];
            let next = self
                .coefficients
                .iter()
                .zip(tail)
                .fold(BigInt::zero(), |acc, (c, a)| acc + c * a);
            out.push(next);
        }
        out
    }

    /// Monic characteristic polynomial, lowest degree first.
    pub fn characteristic(&self) -> Annihilator {
        let mut coeffs: Vec<BigInt> = self.coefficients.iter().map(|c| -c).collect();
        coeffs.push(BigInt::one());
        Annihilator { coeffs }
    }

    fn step(&self, window: &VecDeque<BigInt>) -> BigInt {
        self.coefficients
            .iter()
            .zip(window.iter())
            .fold(BigInt::zero(), |acc, (c, a)| acc + c * a)
    }
}

pub fn cfinite_eval(spec: &CFiniteSpec, n: u64) -> BigInt {
    spec.eval(n)
}

pub fn fib(n: u64) -> BigInt {
    CFiniteSpec::fibonacci().eval(n)
}

pub fn lucas(n: u64) -> BigInt {
    CFiniteSpec::lucas().eval(n)
}

/// `(F(n), F(n+1))` in one linear pass.
pub fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    (a, b)
}

/// `L(n) = F(n-1) + F(n+1)`; undefined at `n = 0`.
pub fn check_lemma1(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::param("n", "must be at least 1, F(n-1) is undefined at n = 0"));
    }
    Ok(lucas(n) == fib(n - 1) + fib(n + 1))
}

/// `L(n)^2 - 5·F(n)^2 = 4·(-1)^n`.
pub fn check_pell(n: u64) -> bool {
    let l = lucas(n);
    let f = fib(n);
    let sign = if n.is_multiple_of(2) { 4 } else { -4 };
    &l * &l - BigInt::from(5) * &f * &f == BigInt::from(sign)
}

/// Precomputed Fibonacci, Lucas and power tables for repeated summations.
#[derive(Clone, Debug)]
pub struct Tables {
    pub fib: Vec<BigInt>,
    pub lucas: Vec<BigInt>,
    pub powers: Vec<BigInt>,
}

impl Tables {
    /// Entries `0..len` of each table; `powers[k] = base^k`.
    pub fn new(len: usize, base: u32) -> Self {
        let fib = CFiniteSpec::fibonacci().terms(len);
        let lucas = CFiniteSpec::lucas().terms(len);
        let base = BigInt::from(base);
        let mut powers = Vec::with_capacity(len);
        let mut p = BigInt::one();
        for _ in 0..len {
            powers.push(p.clone());
            p *= &base;
        }
        Self { fib, lucas, powers }
    }
}

/// A polynomial `p(x) = Σ coeffs[i]·x^i` read as a recurrence operator: a
/// sequence `s` is annihilated by `p` when `Σ coeffs[i]·s(n+i) = 0` for all n.
///
/// The operations mirror the closure properties of C-finite sequences and
/// return an annihilator of the derived sequence. Sums use the product of
/// the two operators, which bounds the order from above without computing a
/// least common multiple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Annihilator {
    coeffs: Vec<BigInt>,
}

impl Annihilator {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::MalformedSpec(
                "annihilator must have degree at least 1".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Annihilator of Fibonacci, Lucas and every shift of either: `x^2 - x - 1`.
    pub fn fibonacci() -> Self {
        CFiniteSpec::fibonacci().characteristic()
    }

    /// Annihilator of the geometric sequence `r^n`: `x - r`.
    pub fn geometric(r: &BigInt) -> Self {
        Self {
            coeffs: vec![-r.clone(), BigInt::one()],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Annihilator of `s(n) + t(n)` given annihilators of `s` and `t`.
    pub fn sum(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Annihilator of `r^n·s(n)`; `r` must be nonzero.
    pub fn scaled(&self, r: &BigInt) -> Self {
        assert!(!r.is_zero(), "geometric scale must be nonzero");
        let d = self.order();
        let mut power = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for i in (0..=d).rev() {
            coeffs[i] = &self.coeffs[i] * &power;
            power *= r;
        }
        Self { coeffs }
    }

    /// Annihilator of the partial sums `Σ_{k≤n} s(k)`.
    pub fn partial_sum(&self) -> Self {
        self.sum(&Self::geometric(&BigInt::one()))
    }

    /// Annihilator of `Σ_{k≤n} r^(n-k)·s(k)`.
    pub fn geometric_convolution(&self, r: &BigInt) -> Self {
        self.sum(&Self::geometric(r))
    }

    /// Checks `Σ coeffs[i]·s(n+i) = 0` for every window that fits in `terms`.
    pub fn annihilates(&self, terms: &[BigInt]) -> bool {
        let width = self.coeffs.len();
        if terms.len() < width {
            return true;
        }
        terms.windows(width).all(|w| {
            self.coeffs
                .iter()
                .zip(w)
                .fold(BigInt::zero(), |acc, (c, s)| acc + c * s)
                .is_zero()
        })
    }
}
