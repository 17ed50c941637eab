//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 when an identity fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{CoeffField, LaurentPoly};
use crate::cache::DiskCache;
use crate::cfunction::{
    ct_closed, hook_e, hook_p, norm_p_closed, princspec_direct, princspec_e_closed, princspec_p_closed,
};
use crate::error::{Error, Result};
use crate::inner::{inner, kernel};
use crate::json;
use crate::macdonald::{a_poly, e_poly, p_poly, satisfies_eigen, EPolyCache};
use crate::verify::{run_suite, Suite, SuiteParams};
use crate::weyl::check_decreasing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "macdonald", version, about = "Exact GL_n Macdonald polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Number of variables.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Directory for cached E_mu; defaults to $MACDONALD_CACHE_DIR when set.
    #[arg(long, env = "MACDONALD_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    E,
    P,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Eigenvalues,
    Relations,
    Expansions,
    Specializations,
    Wcf,
    Orthogonality,
    Norms,
    Adjoints,
    Levelshift,
    Symmetrizers,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Eigenvalues => Suite::Eigenvalues,
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Expansions => Suite::Expansions,
            SuiteArg::Specializations => Suite::Specializations,
            SuiteArg::Wcf => Suite::Wcf,
            SuiteArg::Orthogonality => Suite::Orthogonality,
            SuiteArg::Norms => Suite::Norms,
            SuiteArg::Adjoints => Suite::Adjoints,
            SuiteArg::Levelshift => Suite::Levelshift,
            SuiteArg::Symmetrizers => Suite::Symmetrizers,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nonsymmetric polynomial E_mu.
    E {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        mu: Vec<i32>,
    },
    /// Symmetric polynomial P_lambda.
    P {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i32>,
    },
    /// Antisymmetric polynomial A_{lambda+rho}.
    A {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i32>,
    },
    /// Value at (1, t, ..., t^(n-1)), directly and from closed forms.
    Spec {
        family: Family,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i32>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i32>>,
    },
    /// (P_lambda, P_lambda) at t = q^k, directly and in closed form.
    Norm {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i32>,
        #[arg(long)]
        k: u32,
    },
    /// Constant term of the weight at t = q^k, directly and in closed form.
    Ct {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: u32,
    },
    /// Runs a named invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_deg: i32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Checks the polynomial in this PolyJSON file as E_mu instead of
        /// running the full suite (eigenvalues only).
        #[arg(long, requires = "mu")]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i32>>,
    },
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Dimension(..) | Error::Index { .. } | Error::Argument(_) | Error::Io(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Identity(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Identity(text)) => {
            let _ = write!(out, "{text}");
            EXIT_FAIL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_len(n: usize, v: &[i32]) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument("--n must be at least 1".into()));
    }
    if v.len() != n {
        return Err(Error::Dimension(n, v.len()));
    }
    Ok(())
}

fn check_partition(n: usize, lambda: &[i32]) -> Result<()> {
    check_len(n, lambda)?;
    check_decreasing(lambda)?;
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::Argument("partition entries must be nonnegative".into()));
    }
    Ok(())
}

fn compute_e(common: &Common, mu: &[i32], mem: &EPolyCache) -> Result<LaurentPoly> {
    match &common.cache_dir {
        Some(dir) => Ok(DiskCache::new(dir)?.e_poly(mu, mem)?.0),
        None => e_poly(mu, mem),
    }
}

fn show_poly(f: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Json => json::to_string(f),
        Format::Pretty => format!("{}\n", json::render(f)),
    }
}

/// Prints labelled scalars and fails when they are not all equal.
fn show_values(format: Format, what: &str, values: &[(&str, CoeffField)]) -> Outcome {
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let text = match format {
        Format::Json => {
            let mut m = serde_json::Map::new();
            m.insert("quantity".into(), json!(what));
            for (k, v) in values {
                m.insert((*k).into(), json!(v.render()));
            }
            m.insert("agree".into(), json!(agree));
            format!("{}\n", serde_json::to_string_pretty(&m).expect("serializable"))
        }
        Format::Pretty => {
            let mut s = format!("{what}\n");
            for (k, v) in values {
                s.push_str(&format!("  {k}: {}\n", v.render()));
            }
            s
        }
    };
    if agree {
        Ok(text)
    } else {
        Err(Failure::Identity(format!("{text}FAIL: values differ\n")))
    }
}

fn execute(cmd: Command) -> Outcome {
    let mem = EPolyCache::new();
    match cmd {
        Command::E { common, mu } => {
            check_len(common.n, &mu)?;
            Ok(show_poly(&compute_e(&common, &mu, &mem)?, common.format))
        }
        Command::P { common, lambda } => {
            check_partition(common.n, &lambda)?;
            Ok(show_poly(&p_poly(&lambda, &mem)?, common.format))
        }
        Command::A { common, lambda } => {
            check_partition(common.n, &lambda)?;
            Ok(show_poly(&a_poly(&lambda, &mem)?, common.format))
        }
        Command::Spec { family, common, mu, lambda } => match family {
            Family::E => {
                let mu = mu.ok_or_else(|| Failure::Usage("spec e requires --mu".into()))?;
                check_len(common.n, &mu)?;
                if mu.iter().any(|&x| x < 0) {
                    return Err(Failure::Usage("--mu entries must be nonnegative".into()));
                }
                let direct = princspec_direct(&compute_e(&common, &mu, &mem)?);
                show_values(
                    common.format,
                    &format!("E_{mu:?}(1, t, ..., t^{})", common.n - 1),
                    &[("direct", direct), ("closed", princspec_e_closed(&mu)?), ("hook", hook_e(&mu)?)],
                )
            }
            Family::P => {
                let lambda = lambda.ok_or_else(|| Failure::Usage("spec p requires --lambda".into()))?;
                check_partition(common.n, &lambda)?;
                let direct = princspec_direct(&p_poly(&lambda, &mem)?);
                show_values(
                    common.format,
                    &format!("P_{lambda:?}(1, t, ..., t^{})", common.n - 1),
                    &[("direct", direct), ("closed", princspec_p_closed(&lambda)?), ("hook", hook_p(&lambda)?)],
                )
            }
        },
        Command::Norm { common, lambda, k } => {
            check_partition(common.n, &lambda)?;
            let p = p_poly(&lambda, &mem)?;
            show_values(
                common.format,
                &format!("(P_{lambda:?}, P_{lambda:?}) at t = q^{k}"),
                &[("direct", inner(&p, &p, common.n, k)?), ("closed", norm_p_closed(&lambda, k)?)],
            )
        }
        Command::Ct { common, k } => {
            if common.n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            show_values(
                common.format,
                &format!("constant term at n = {}, t = q^{k}", common.n),
                &[("direct", kernel(common.n, k).poly.ct()), ("closed", ct_closed(common.n, k)?)],
            )
        }
        Command::Verify { suite, common, max_deg, k, input, mu } => {
            let suite = suite.suite();
            if let Some(path) = input {
                let mu = mu.expect("clap enforces --mu");
                check_len(common.n, &mu)?;
                if suite != Suite::Eigenvalues {
                    return Err(Failure::Usage("--input is supported for the eigenvalues suite only".into()));
                }
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let f = json::from_str(&text)?;
                if f.n() != common.n {
                    return Err(Error::Dimension(common.n, f.n()).into());
                }
                return if satisfies_eigen(&mu, &f)? {
                    Ok(format!("eigenvalues: PASS (fixture {})\n", path.display()))
                } else {
                    Err(Failure::Identity(format!(
                        "eigenvalues: FAIL\n  counterexample: {} is not a Y-eigenvector with the eigenvalues of E_{mu:?}\n",
                        path.display()
                    )))
                };
            }
            let params = SuiteParams::new(common.n, max_deg, k);
            let report = run_suite(suite, &params, &mem)?;
            if report.passed() {
                Ok(format!("{suite}: PASS ({} checks)\n", report.checks))
            } else {
                Err(Failure::Identity(format!(
                    "{suite}: FAIL ({} of {} checks failed)\n  counterexample: {}\n",
                    report.failures.len(),
                    report.checks,
                    report.failures[0]
                )))
            }
        }
    }
}
