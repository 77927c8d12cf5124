//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error, 3 when an enumeration would exceed the cap. The cap defaults to
//! 10⁷ objects and can be set with `--cap` or the `FIBTILE_CAP` environment
//! variable (the flag wins).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::bijection::verify_correspondence;
use crate::error::Error;
use crate::genfun::{rational_to_string, Poly, RationalGF};
use crate::identity::{
    certify_cfinite, verify_by_genfun, verify_by_tilings, verify_direct, Identity, IdentityId,
    Method,
};
use crate::sequences::{fib, lucas};
use crate::tiling::{
    count_board, count_bracelet, enumerate_board, enumerate_bracelet, Cap, ColorScheme,
};

pub const CAP_ENV: &str = "FIBTILE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fibtile",
    version,
    about = "Colored tilings and exact Fibonacci-Lucas identity checks"
)]
pub struct CliConfig {
    /// Maximum number of tilings an enumeration may produce.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Plain text; for `enumerate` this is the ASCII rendering.
    #[value(alias = "ascii")]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    Fib,
    Lucas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Board,
    Bracelet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Sury,
    Theorem2,
    General,
    Alternating,
    Corollary,
}

impl From<IdentityArg> for IdentityId {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Sury => IdentityId::Sury,
            IdentityArg::Theorem2 => IdentityId::Theorem2,
            IdentityArg::General => IdentityId::General,
            IdentityArg::Alternating => IdentityId::Alternating,
            IdentityArg::Corollary => IdentityId::Corollary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Tilings,
    Genfun,
    Certificate,
}

impl From<MethodArg> for Method {
    fn from(a: MethodArg) -> Self {
        match a {
            MethodArg::Direct => Method::Direct,
            MethodArg::Tilings => Method::Tilings,
            MethodArg::Genfun => Method::Genfun,
            MethodArg::Certificate => Method::Certificate,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F(N) or L(N).
    Seq {
        name: SeqName,
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count colored tilings by formula.
    Count {
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List every colored tiling, one per line.
    Enumerate {
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Check an identity for n = 0..=N-MAX.
    Verify {
        identity: IdentityArg,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rational generating functions.
    Gf {
        #[command(subcommand)]
        command: GfCommand,
    },
    /// Check the fold correspondence between boards and bracelets.
    Correspond {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum GfCommand {
    /// Print the first COUNT series coefficients of NUM/DEN.
    Coeffs {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Runs with arguments from the process and the cap from `FIBTILE_CAP`.
pub fn main_with_env() -> i32 {
    let env_cap = std::env::var(CAP_ENV).ok();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run(std::env::args_os(), env_cap.as_deref(), &mut out, &mut err)
}

/// Parses `args` (including the program name), executes the command and
/// returns the exit status.
pub fn run<I, T>(args: I, env_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let cap = match resolve_cap(config.cap, env_cap) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match execute(&config.command, cap, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            exit_code(&e)
        }
    }
}

fn resolve_cap(flag: Option<u64>, env: Option<&str>) -> std::result::Result<Cap, String> {
    if let Some(c) = flag {
        return Ok(Cap(c));
    }
    match env {
        None => Ok(Cap::default()),
        Some(v) => v
            .trim()
            .parse()
            .map(Cap)
            .map_err(|_| format!("{CAP_ENV}=`{v}` is not a non-negative integer")),
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::InvalidParameter { name, reason } => format!("invalid value for --{name}: {reason}"),
        Error::CapExceeded { count, cap } => format!(
            "enumeration would produce {count} objects, exceeding the cap of {cap} (raise it with --cap or {CAP_ENV})"
        ),
        Error::UnsupportedMethod { identity, method } => {
            format!("--method {method} is not available for {identity}")
        }
        other => other.to_string(),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::CertificateRefused { .. } | Error::Inconsistent(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> crate::Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::Inconsistent(format!("writing output: {e}")))
}

fn execute(cmd: &Command, cap: Cap, out: &mut dyn Write) -> crate::Result<i32> {
    match cmd {
        Command::Seq { name, n, format } => {
            let v = match name {
                SeqName::Fib => fib(*n),
                SeqName::Lucas => lucas(*n),
            };
            let s = match format {
                Format::Text => format!("{v}\n"),
                Format::Json => format!("{{\"n\":{n},\"value\":\"{v}\"}}\n"),
            };
            write_out(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::Count {
            shape,
            n,
            m,
            format,
        } => {
            let scheme = ColorScheme::new(*m)?;
            let v = match shape {
                Shape::Board => count_board(*n, scheme),
                Shape::Bracelet => count_bracelet(*n, scheme),
            };
            let s = match format {
                Format::Text => format!("{v}\n"),
                Format::Json => format!("{{\"n\":{n},\"m\":{m},\"count\":\"{v}\"}}\n"),
            };
            write_out(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            shape,
            n,
            m,
            format,
        } => {
            let scheme = ColorScheme::new(*m)?;
            let mut s = String::new();
            match shape {
                Shape::Board => {
                    for t in enumerate_board(*n, scheme, cap)? {
                        match format {
                            Format::Text => s.push_str(&t.to_string()),
                            Format::Json => s.push_str(&t.to_record(scheme).to_json()),
                        }
                        s.push('\n');
                    }
                }
                Shape::Bracelet => {
                    for t in enumerate_bracelet(*n, scheme, cap)? {
                        match format {
                            Format::Text => s.push_str(&t.to_string()),
                            Format::Json => s.push_str(&t.to_record(scheme).to_json()),
                        }
                        s.push('\n');
                    }
                }
            }
            write_out(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            identity,
            n_max,
            m,
            method,
            format,
        } => {
            let identity = Identity::new((*identity).into(), *m)?;
            let report = match Method::from(*method) {
                Method::Direct => verify_direct(&identity, *n_max),
                Method::Genfun => verify_by_genfun(&identity, *n_max)?,
                Method::Tilings => verify_by_tilings(&identity, *n_max, cap)?,
                Method::Certificate => {
                    let cert = match certify_cfinite(&identity) {
                        Ok(c) => c,
                        Err(Error::CertificateRefused { witness, lhs, rhs }) => {
                            write_out(
                                out,
                                &format!("identity={identity} method=certificate\nverdict: refused at n = {witness} ({lhs} != {rhs})\n"),
                            )?;
                            return Ok(EXIT_FAILED);
                        }
                        Err(e) => return Err(e),
                    };
                    match format {
                        Format::Text => write_out(out, &cert.as_text())?,
                        Format::Json => write_out(out, &(cert.to_json() + "\n"))?,
                    }
                    return Ok(EXIT_OK);
                }
            };
            match format {
                Format::Text => write_out(out, &report.as_text())?,
                Format::Json => write_out(out, &(report.to_json() + "\n"))?,
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Gf {
            command:
                GfCommand::Coeffs {
                    num,
                    den,
                    count,
                    format,
                },
        } => {
            let num: Poly = num
                .parse()
                .map_err(|e: Error| Error::param("num", e.to_string()))?;
            let den: Poly = den
                .parse()
                .map_err(|e: Error| Error::param("den", e.to_string()))?;
            let gf = RationalGF::new(num, den)
                .map_err(|e| Error::param("den", e.to_string()))?;
            let coeffs: Vec<String> = gf
                .series_coeffs(*count)
                .iter()
                .map(|c: &BigRational| rational_to_string(c))
                .collect();
            let s = match format {
                Format::Text => format!("{}\n", coeffs.join(" ")),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({ "gf": gf.to_string(), "coeffs": coeffs })
                ),
            };
            write_out(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::Correspond { n, m, format } => {
            let scheme = ColorScheme::new(*m)?;
            let report = verify_correspondence(*n, scheme, cap)?;
            match format {
                Format::Text => write_out(out, &report.as_text())?,
                Format::Json => write_out(
                    out,
                    &(serde_json::to_string(&report).expect("serializable") + "\n"),
                )?,
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
