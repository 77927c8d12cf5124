//! The identity catalog and its verification methods.
//!
//! Two families are covered, each with fixed-parameter members:
//!
//! ```text
//! general(m):      Σ_{k=0..n} m^k [L(k) + (m-2)·F(k+1)]             = m^(n+1)·F(n+1)
//! alternating(m):  Σ_{k=0..n} (-1)^k m^(n-k) [L(k+1) + (m-2)·F(k)]  = (-1)^n·F(n+1)
//! ```
//!
//! `sury` is `general(2)`, `theorem2` is `general(3)` and `corollary` is
//! `alternating(2)`. Each identity is checked per `n` by one of four
//! methods: direct exact summation, counting enumerated tilings, evaluating
//! generating-function closed forms, or a C-finite certificate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::bijection::verify_correspondence;
use crate::error::{Error, Result};
use crate::genfun::{closed_form_alt, closed_form_sum, SeqKind};
use crate::sequences::{fib, Annihilator, Tables};
use crate::tiling::{count_board, count_bracelet, enumerate_board, enumerate_bracelet, Cap, ColorScheme};

/// Number of initial terms, minus one, a certificate checks. The difference
/// of the two sides of any catalogued identity satisfies a recurrence of
/// order at most 7, so 9 vanishing terms prove it for every `n`.
pub const CERTIFICATE_ORDER_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityId {
    Sury,
    Theorem2,
    General,
    Alternating,
    Corollary,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::Sury,
        IdentityId::Theorem2,
        IdentityId::General,
        IdentityId::Alternating,
        IdentityId::Corollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Sury => "sury",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::General => "general",
            IdentityId::Alternating => "alternating",
            IdentityId::Corollary => "corollary",
        }
    }

    /// The parameter fixed by the identity, if any.
    pub fn fixed_m(self) -> Option<u32> {
        match self {
            IdentityId::Sury | IdentityId::Corollary => Some(2),
            IdentityId::Theorem2 => Some(3),
            IdentityId::General | IdentityId::Alternating => None,
        }
    }

    pub fn is_alternating(self) -> bool {
        matches!(self, IdentityId::Alternating | IdentityId::Corollary)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

/// An identity together with its parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    id: IdentityId,
    m: u32,
}

impl Identity {
    /// `m` is required for `general`/`alternating` and, when given for a
    /// fixed-parameter identity, must match it.
    pub fn new(id: IdentityId, m: Option<u32>) -> Result<Self> {
        let m = match (id.fixed_m(), m) {
            (Some(fixed), None) => fixed,
            (Some(fixed), Some(m)) if m == fixed => fixed,
            (Some(fixed), Some(m)) => {
                return Err(Error::param(
                    "m",
                    format!("{id} fixes m = {fixed}, got {m}"),
                ))
            }
            (None, None) => return Err(Error::param("m", format!("{id} needs a value for m"))),
            (None, Some(m)) => m,
        };
        if m < 2 {
            return Err(Error::param("m", "must be at least 2"));
        }
        Ok(Self { id, m })
    }

    pub fn general(m: u32) -> Result<Self> {
        Self::new(IdentityId::General, Some(m))
    }

    pub fn alternating(m: u32) -> Result<Self> {
        Self::new(IdentityId::Alternating, Some(m))
    }

    pub fn fixed(id: IdentityId) -> Result<Self> {
        Self::new(id, None)
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Tables large enough to evaluate both sides for every `n <= n_max`.
    pub fn tables(&self, n_max: u64) -> Tables {
        Tables::new(n_max as usize + 2, self.m)
    }

    /// The k-th summand of the left-hand side at `n`.
    pub fn term(&self, k: usize, n: usize, t: &Tables) -> BigInt {
        let m2 = BigInt::from(self.m) - 2;
        let sign = |j: usize| if j.is_even() { BigInt::one() } else { -BigInt::one() };
        match self.id {
            IdentityId::Sury => &t.powers[k] * &t.lucas[k],
            IdentityId::Theorem2 => &t.powers[k] * (&t.lucas[k] + &t.fib[k + 1]),
            IdentityId::General => &t.powers[k] * (&t.lucas[k] + m2 * &t.fib[k + 1]),
            IdentityId::Alternating => {
                sign(k) * &t.powers[n - k] * (&t.lucas[k + 1] + m2 * &t.fib[k])
            }
            IdentityId::Corollary => sign(k) * &t.powers[n - k] * &t.lucas[k + 1],
        }
    }

    pub fn lhs(&self, n: usize, t: &Tables) -> BigInt {
        (0..=n).map(|k| self.term(k, n, t)).sum()
    }

    pub fn rhs(&self, n: usize, t: &Tables) -> BigInt {
        if self.id.is_alternating() {
            let f = t.fib[n + 1].clone();
            if n.is_even() {
                f
            } else {
                -f
            }
        } else {
            &t.powers[n + 1] * &t.fib[n + 1]
        }
    }

    /// Annihilators of the left- and right-hand sides, built from the closure
    /// rules: scaling by `m` or `-1`, sums, partial sums and convolution with
    /// `m^n`.
    pub fn annihilators(&self) -> (Annihilator, Annihilator) {
        let phi = Annihilator::fibonacci();
        let m = BigInt::from(self.m);
        if self.id.is_alternating() {
            let signed = phi.scaled(&-BigInt::one());
            let summand = signed.sum(&signed);
            (summand.geometric_convolution(&m), signed)
        } else {
            let scaled = phi.scaled(&m);
            let summand = scaled.sum(&scaled);
            (summand.partial_sum(), scaled)
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m={})", self.id, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Tilings,
    Genfun,
    Certificate,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Tilings => "tilings",
            Method::Genfun => "genfun",
            Method::Certificate => "certificate",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Method::Direct, Method::Tilings, Method::Genfun, Method::Certificate]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

fn as_decimal<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: u64,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
    pub equal: bool,
}

impl Row {
    fn new(n: u64, lhs: BigInt, rhs: BigInt) -> Self {
        let equal = lhs == rhs;
        Self { n, lhs, rhs, equal }
    }

    pub fn as_text(&self) -> String {
        format!(
            "{} {} {} {}",
            self.n,
            self.lhs,
            self.rhs,
            if self.equal { "ok" } else { "MISMATCH" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub m: u32,
    pub method: Method,
    pub n_min: u64,
    pub n_max: u64,
    pub rows: Vec<Row>,
    pub pass: bool,
    pub failures: Vec<u64>,
}

impl IdentityReport {
    fn from_rows(identity: &Identity, method: Method, n_max: u64, rows: Vec<Row>) -> Self {
        let failures: Vec<u64> = rows.iter().filter(|r| !r.equal).map(|r| r.n).collect();
        Self {
            identity: identity.id,
            m: identity.m,
            method,
            n_min: 0,
            n_max,
            pass: failures.is_empty(),
            failures,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn as_text(&self) -> String {
        let mut s = format!(
            "identity={} m={} method={} n=0..{}\n",
            self.identity,
            self.m,
            self.method.name(),
            self.n_max
        );
        for r in &self.rows {
            s.push_str(&r.as_text());
            s.push('\n');
        }
        if self.pass {
            s.push_str("verdict: pass\n");
        } else {
            let f: Vec<String> = self.failures.iter().map(u64::to_string).collect();
            s.push_str(&format!("verdict: fail at n = {}\n", f.join(", ")));
        }
        s
    }
}

/// Both sides by exact summation for `n = 0..=n_max`.
pub fn verify_direct(identity: &Identity, n_max: u64) -> IdentityReport {
    let t = identity.tables(n_max);
    let rows = (0..=n_max as usize)
        .map(|n| Row::new(n as u64, identity.lhs(n, &t), identity.rhs(n, &t)))
        .collect();
    IdentityReport::from_rows(identity, Method::Direct, n_max, rows)
}

/// Left-hand side through the weighted-sum closed forms.
///
/// For the general family the index shift
/// `Σ m^k·F(k+1) = (1/m)·Σ_{k=1..n+1} m^k·F(k)` reduces the sum to the two
/// weighted closed forms; for the alternating family
/// `Σ (-1)^k m^(n-k) L(k+1) = 2·m^(n+1) - Σ_{k=0..n+1} (-1)^k m^(n+1-k) L(k)`.
pub fn verify_by_genfun(identity: &Identity, n_max: u64) -> Result<IdentityReport> {
    let m = identity.m;
    let mb = BigInt::from(m);
    let t = identity.tables(n_max);
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let lhs = if identity.id.is_alternating() {
            let lucas_part = BigInt::from(2) * Pow::pow(&mb, n + 1)
                - closed_form_alt(SeqKind::Lucas, n + 1, m)?;
            let fib_part = if m == 2 {
                BigInt::zero()
            } else {
                BigInt::from(m - 2) * closed_form_alt(SeqKind::Fibonacci, n, m)?
            };
            lucas_part + fib_part
        } else {
            let shifted = BigInt::from(m - 2) * closed_form_sum(SeqKind::Fibonacci, n + 1, m)?;
            let (quot, rem) = shifted.div_rem(&mb);
            if !rem.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "shifted Fibonacci sum not divisible by m = {m} at n = {n}"
                )));
            }
            closed_form_sum(SeqKind::Lucas, n, m)? + quot
        };
        rows.push(Row::new(n, lhs, identity.rhs(n as usize, &t)));
    }
    Ok(IdentityReport::from_rows(identity, Method::Genfun, n_max, rows))
}

/// Left-hand side by counting enumerated tilings.
///
/// `Σ m^k L(k)` is the number of bracelets of length `≤ n` and
/// `Σ m^k F(k+1)` the number of boards of length `≤ n`; the right-hand side
/// is `m` times the board count at `n`. For `n ≥ 1` the row also requires
/// the fold correspondence on `boards(n)` to pass and to reach exactly
/// `LHS - (m-2)·|boards(n)|` targets.
pub fn verify_by_tilings(identity: &Identity, n_max: u64, cap: Cap) -> Result<IdentityReport> {
    if identity.id.is_alternating() {
        return Err(Error::UnsupportedMethod {
            identity: identity.id.name(),
            method: Method::Tilings.name(),
        });
    }
    let scheme = ColorScheme::new(identity.m)?;
    let extra = u64::from(identity.m - 2);
    let mut bracelets = 0u64;
    let mut boards = 0u64;
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let here = enumerate_board(n, scheme, cap)?.len() as u64;
        bracelets += enumerate_bracelet(n, scheme, cap)?.len() as u64;
        boards += here;
        let lhs = bracelets + extra * boards;
        let rhs = BigInt::from(identity.m) * count_board(n, scheme);
        let mut row = Row::new(n as u64, BigInt::from(lhs), rhs);
        if n >= 1 {
            let report = verify_correspondence(n, scheme, cap)?;
            if !report.pass || report.targets != lhs - extra * here {
                row.equal = false;
            }
        }
        rows.push(row);
    }
    debug_assert_eq!(
        BigInt::from(bracelets),
        (0..=n_max as usize).map(|k| count_bracelet(k, scheme)).sum::<BigInt>()
    );
    Ok(IdentityReport::from_rows(identity, Method::Tilings, n_max, rows))
}

/// Proof that an identity holds for every `n`: the difference of its sides is
/// annihilated by a recurrence of order `annihilator_order ≤ order_bound`
/// and vanishes on `n = 0..=order_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub identity: IdentityId,
    pub m: u32,
    pub order_bound: usize,
    pub annihilator_order: usize,
    /// Coefficients of the annihilating polynomial, lowest degree first.
    pub annihilator: Vec<String>,
    pub checked: Vec<Row>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }

    pub fn as_text(&self) -> String {
        let mut s = format!(
            "identity={} m={} method=certificate order_bound={} annihilator_order={}\n",
            self.identity, self.m, self.order_bound, self.annihilator_order
        );
        for r in &self.checked {
            s.push_str(&r.as_text());
            s.push('\n');
        }
        s.push_str("verdict: certified\n");
        s
    }
}

pub fn certify_cfinite(identity: &Identity) -> Result<Certificate> {
    let (_, rhs_ann) = identity.annihilators();
    let id = *identity;
    let probe = identity.tables(3 * CERTIFICATE_ORDER_BOUND as u64);
    certify_against(identity, &|n| id.rhs(n as usize, &probe), &rhs_ann)
}

/// Certifies `lhs(identity) = rhs` for a caller-supplied right-hand side with
/// its own annihilator; used to check that wrong right-hand sides are refused.
pub fn certify_against(
    identity: &Identity,
    rhs: &dyn Fn(u64) -> BigInt,
    rhs_annihilator: &Annihilator,
) -> Result<Certificate> {
    let (lhs_ann, _) = identity.annihilators();
    let difference = lhs_ann.sum(rhs_annihilator);
    let order = difference.order();
    let checked_len = (CERTIFICATE_ORDER_BOUND + 1).max(order);
    let probe_len = 3 * CERTIFICATE_ORDER_BOUND;
    let t = identity.tables(probe_len as u64);

    let lhs_terms: Vec<BigInt> = (0..probe_len).map(|n| identity.lhs(n, &t)).collect();
    let rhs_terms: Vec<BigInt> = (0..probe_len as u64).map(rhs).collect();
    if !lhs_ann.annihilates(&lhs_terms) {
        return Err(Error::Inconsistent(format!(
            "left-hand side of {identity} escapes its annihilator"
        )));
    }
    if !rhs_annihilator.annihilates(&rhs_terms) {
        return Err(Error::Inconsistent(format!(
            "right-hand side of {identity} escapes the supplied annihilator"
        )));
    }

    let mut checked = Vec::with_capacity(checked_len);
    for n in 0..checked_len {
        let row = Row::new(n as u64, lhs_terms[n].clone(), rhs_terms[n].clone());
        if !row.equal {
            return Err(Error::CertificateRefused {
                witness: n as u64,
                lhs: row.lhs,
                rhs: row.rhs,
            });
        }
        checked.push(row);
    }
    Ok(Certificate {
        identity: identity.id,
        m: identity.m,
        order_bound: CERTIFICATE_ORDER_BOUND,
        annihilator_order: order,
        annihilator: difference.coeffs().iter().map(ToString::to_string).collect(),
        checked,
    })
}

/// Right-hand side `F(n+1)·m^(n+1)` evaluated without tables, for callers
/// building perturbations.
pub fn general_rhs(m: u32, n: u64) -> BigInt {
    Pow::pow(&BigInt::from(m), n + 1) * fib(n + 1)
}
