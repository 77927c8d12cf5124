//! Rational generating functions with exact rational coefficients, and the
//! closed forms they produce for weighted Fibonacci and Lucas sums.
//!
//! Alternating-sum closed forms come in two versions: the ones implemented by
//! [`closed_form_alt`], which agree with direct summation, and the formulas
//! as they are commonly printed ([`printed_closed_form_alt`]), which carry a
//! sign error. The latter are kept so the discrepancy stays testable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::sequences::fib_pair;

/// A polynomial in `z` with rational coefficients, lowest degree first and
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(s·z)`.
    pub fn substitute(&self, s: &BigRational) -> Self {
        let mut power = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= s;
        }
        Self::new(out)
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * z + a)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    /// Comma-separated coefficient list, lowest degree first; `0` for the
    /// zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses a comma-separated list of integers or `p/q` rationals.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        s.split(',')
            .map(|tok| parse_rational(tok.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{tok}` is not an integer or p/q rational"));
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (tok, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("`{tok}` has a zero denominator")));
    }
    Ok(BigRational::new(p, q))
}

/// `num(z) / den(z)` with `den(0) != 0`, so the power series exists.
///
/// Equality is by cross-multiplication, not by coefficient lists.
#[derive(Clone, Debug)]
pub struct RationalGF {
    num: Poly,
    den: Poly,
}

impl RationalGF {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::NotExpandable);
        }
        Ok(Self { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn polynomial(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::polynomial(Poly::zero())
    }

    /// `z / (1 - z - z²)`.
    pub fn fibonacci() -> Self {
        Self::from_ints(&[0, 1], &[1, -1, -1]).expect("den(0) = 1")
    }

    /// `(2 - z) / (1 - z - z²)`.
    pub fn lucas() -> Self {
        Self::from_ints(&[2, -1], &[1, -1, -1]).expect("den(0) = 1")
    }

    /// `1 / (1 - r·z)`.
    pub fn geometric(r: &BigRational) -> Self {
        Self {
            num: Poly::one(),
            den: Poly::new(vec![BigRational::one(), -r]),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// First `count` series coefficients: with `den = Σ d_i z^i`,
    /// `a_n = (num_n - Σ_{i≥1} d_i a_{n-i}) / d_0`.
    pub fn series_coeffs(&self, count: usize) -> Vec<BigRational> {
        let d0 = self.den.coeff(0);
        let dens = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.num.coeff(n);
            for (i, d) in dens.iter().enumerate().skip(1).take(n) {
                acc -= d * &out[n - i];
            }
            out.push(acc / &d0);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `gf(s·z)`: the n-th coefficient is multiplied by `s^n`.
    pub fn substitute(&self, s: &BigRational) -> Self {
        Self {
            num: self.num.substitute(s),
            den: self.den.substitute(s),
        }
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, rhs: &RationalGF) -> RationalGF {
        self + &rhs.scale(&-BigRational::one())
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalGF {}

impl fmt::Display for RationalGF {
    /// `num/den` with each side a comma-separated coefficient list, e.g.
    /// `0,1/1,-1,-1` for `z/(1-z-z²)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.num.coeffs.iter().chain(&self.den.coeffs).any(|c| !c.is_integer()) {
            " / "
        } else {
            "/"
        };
        write!(f, "{}{sep}{}", self.num, self.den)
    }
}

impl FromStr for RationalGF {
    type Err = Error;

    /// A single `/` separates numerator from denominator. When either list
    /// holds `p/q` entries the separator must be written as ` / `.
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = match s.split_once(" / ") {
            Some(parts) => parts,
            None => {
                if s.matches('/').count() != 1 {
                    return Err(Error::Parse(format!(
                        "`{s}`: separate numerator and denominator with ` / ` when entries are rationals"
                    )));
                }
                s.split_once('/').expect("one slash")
            }
        };
        Self::new(num.parse()?, den.parse()?)
    }
}

pub fn series_coeffs(gf: &RationalGF, count: usize) -> Vec<BigRational> {
    gf.series_coeffs(count)
}

pub fn gf_add(a: &RationalGF, b: &RationalGF) -> RationalGF {
    a + b
}

pub fn gf_mul(a: &RationalGF, b: &RationalGF) -> RationalGF {
    a * b
}

pub fn gf_substitute(gf: &RationalGF, scale: &BigRational) -> RationalGF {
    gf.substitute(scale)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Fibonacci,
    Lucas,
}

impl SeqKind {
    pub fn gf(self) -> RationalGF {
        match self {
            SeqKind::Fibonacci => RationalGF::fibonacci(),
            SeqKind::Lucas => RationalGF::lucas(),
        }
    }
}

fn q(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn check_m(m: u32) -> Result<()> {
    if m < 2 {
        return Err(Error::param("m", "must be at least 2"));
    }
    Ok(())
}

/// `1/(1-z) · seq(m·z)`, whose n-th coefficient is `Σ_{k≤n} m^k·seq(k)`.
pub fn weighted_sum_gf(kind: SeqKind, m: u32) -> RationalGF {
    &RationalGF::geometric(&BigRational::one()) * &kind.gf().substitute(&q(m))
}

/// Partial-fraction decomposition of [`weighted_sum_gf`] over the factors
/// `1 - m·z - m²·z²` and `1 - z`.
pub fn weighted_sum_partial_fractions(kind: SeqKind, m: u32) -> RationalGF {
    let mm = q(m);
    let d = q(m * m + m - 1);
    let quad = Poly::new(vec![q(1), -mm.clone(), -(&mm * &mm)]);
    let (num, tail) = match kind {
        // m/D · (1 + m²z)/(1 - mz - m²z²) - m/D · 1/(1-z)
        SeqKind::Fibonacci => (
            Poly::new(vec![q(1), &mm * &mm]).scale(&(&mm / &d)),
            -(&mm / &d),
        ),
        // m/D · ((2m+1) - m(m-2)z)/(1 - mz - m²z²) + (m-2)/D · 1/(1-z)
        SeqKind::Lucas => (
            Poly::new(vec![q(2 * m + 1), -(&mm * (&mm - q(2)))]).scale(&(&mm / &d)),
            (&mm - q(2)) / &d,
        ),
    };
    let main = RationalGF::new(num, quad).expect("den(0) = 1");
    &main + &RationalGF::geometric(&BigRational::one()).scale(&tail)
}

/// `1/(1-m·z) · seq(-z)`, whose n-th coefficient is `Σ_{k≤n} (-1)^k m^(n-k) seq(k)`.
pub fn alternating_sum_gf(kind: SeqKind, m: u32) -> RationalGF {
    &RationalGF::geometric(&q(m)) * &kind.gf().substitute(&q(-1))
}

/// Partial-fraction decomposition of [`alternating_sum_gf`] over the factors
/// `1 + z - z²` and `1 - m·z`.
pub fn alternating_sum_partial_fractions(kind: SeqKind, m: u32) -> RationalGF {
    let mm = q(m);
    let d = q(m * m + m - 1);
    let quad = Poly::from_ints(&[1, 1, -1]);
    let (num, tail) = match kind {
        // 1/D · (m + z)/(1 + z - z²) - m/D · 1/(1 - mz)
        SeqKind::Fibonacci => (Poly::new(vec![&mm / &d, q(1) / &d]), -(&mm / &d)),
        // 1/D · ((m-2) - (2m+1)z)/(1 + z - z²) + m(2m+1)/D · 1/(1 - mz)
        SeqKind::Lucas => (
            Poly::new(vec![(&mm - q(2)) / &d, -q(2 * m + 1) / &d]),
            &mm * q(2 * m + 1) / &d,
        ),
    };
    let main = RationalGF::new(num, quad).expect("den(0) = 1");
    &main + &RationalGF::geometric(&mm).scale(&tail)
}

/// Lucas alternating decomposition as usually printed, with `-m(2m+1)/D` on
/// the `1/(1-mz)` term. It does not equal [`alternating_sum_gf`].
pub fn printed_alternating_lucas_partial_fractions(m: u32) -> RationalGF {
    let mm = q(m);
    let d = q(m * m + m - 1);
    let main = RationalGF::new(
        Poly::new(vec![(&mm - q(2)) / &d, -q(2 * m + 1) / &d]),
        Poly::from_ints(&[1, 1, -1]),
    )
    .expect("den(0) = 1");
    &main + &RationalGF::geometric(&mm).scale(&-(&mm * q(2 * m + 1) / &d))
}

fn to_integer(x: BigRational, what: &str) -> Result<BigInt> {
    if !x.is_integer() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {x}, not an integer")));
    }
    Ok(x.to_integer())
}

/// `Σ_{k=0..n} m^k·F(k)` or `Σ_{k=0..n} m^k·L(k)` from the closed forms
///
/// ```text
/// Σ m^k F(k) = m^(n+1)/D·[F(n+1) + m·F(n)] - m/D
/// Σ m^k L(k) = m^(n+1)/D·[(2m+1)·F(n+1) - (m-2)·F(n)] + (m-2)/D
/// ```
///
/// with `D = m² + m - 1`.
pub fn closed_form_sum(kind: SeqKind, n: u64, m: u32) -> Result<BigInt> {
    check_m(m)?;
    let (f_n, f_n1) = fib_pair(n);
    let mb = BigInt::from(m);
    let d = BigInt::from(m * m + m - 1);
    let lead = Pow::pow(&mb, n + 1);
    let value = match kind {
        SeqKind::Fibonacci => {
            BigRational::new(lead * (&f_n1 + &mb * &f_n), d.clone()) - BigRational::new(mb, d)
        }
        SeqKind::Lucas => {
            BigRational::new(
                lead * (BigInt::from(2 * m + 1) * &f_n1 - BigInt::from(m - 2) * &f_n),
                d.clone(),
            ) + BigRational::new(BigInt::from(m - 2), d)
        }
    };
    to_integer(value, "weighted sum closed form")
}

/// `Σ_{k=0..n} (-1)^k·m^(n-k)·seq(k)` from the closed forms
///
/// ```text
/// Σ (-1)^k m^(n-k) F(k) = (-1)^n/D·[m·F(n+1) - F(n)] - m^(n+1)/D
/// Σ (-1)^k m^(n-k) L(k) = (-1)^n/D·[(m-2)·F(n+1) + (2m+1)·F(n)] + m^(n+1)·(2m+1)/D
/// ```
pub fn closed_form_alt(kind: SeqKind, n: u64, m: u32) -> Result<BigInt> {
    check_m(m)?;
    let (f_n, f_n1) = fib_pair(n);
    let mb = BigInt::from(m);
    let d = BigInt::from(m * m + m - 1);
    let sign = if n.is_even() { BigInt::one() } else { -BigInt::one() };
    let lead = Pow::pow(&mb, n + 1);
    let value = match kind {
        SeqKind::Fibonacci => {
            BigRational::new(sign * (&mb * &f_n1 - &f_n), d.clone()) - BigRational::new(lead, d)
        }
        SeqKind::Lucas => {
            BigRational::new(
                sign * (BigInt::from(m - 2) * &f_n1 + BigInt::from(2 * m + 1) * &f_n),
                d.clone(),
            ) + BigRational::new(lead * BigInt::from(2 * m + 1), d)
        }
    };
    to_integer(value, "alternating sum closed form")
}

/// The alternating closed forms exactly as commonly printed:
///
/// ```text
/// (-1)^(n+1)/D·[m·F(n+1) + F(n)] - m/D·m^n
/// (-1)^(n+1)/D·[(m-2)·F(n+1) - (2m+1)·F(n)] + m(2m+1)/D·m^n
/// ```
///
/// These disagree with the direct sums (e.g. `57/11` instead of `5` for
/// Lucas at `m = 3, n = 1`) and are not used for verification.
pub fn printed_closed_form_alt(kind: SeqKind, n: u64, m: u32) -> BigRational {
    let (f_n, f_n1) = fib_pair(n);
    let mb = BigInt::from(m);
    let d = BigInt::from(m * m + m - 1);
    let sign = if n.is_even() { -BigInt::one() } else { BigInt::one() };
    let m_n = Pow::pow(&mb, n);
    match kind {
        SeqKind::Fibonacci => {
            BigRational::new(sign * (&mb * &f_n1 + &f_n), d.clone())
                - BigRational::new(&mb * m_n, d)
        }
        SeqKind::Lucas => {
            BigRational::new(
                sign * (BigInt::from(m - 2) * &f_n1 - BigInt::from(2 * m + 1) * &f_n),
                d.clone(),
            ) + BigRational::new(&mb * BigInt::from(2 * m + 1) * m_n, d)
        }
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", x.numer().abs(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
