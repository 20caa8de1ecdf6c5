mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use imcircle::error::{Error, ErrorKind};
use imcircle::resultant::ResultantMode;
use imcircle::ring::Rat;

use render::parse_width;

/// Exact arithmetic in F[X,Y]/(X^2+Y^2+1) over the real algebraic numbers.
///
/// Polynomials are written in X and Y with rational coefficients, for
/// example "X^2 + 1/2*Y - 3". Multiplication must be explicit.
#[derive(Parser, Debug)]
#[command(name = "imcircle", version)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Print exact JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Largest total degree accepted for an input polynomial
    #[arg(long, global = true, env = "IMCIRCLE_MAX_DEGREE", default_value_t = 8,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    /// Largest algebraic degree allowed for intermediate numbers
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_algdeg: u64,
    /// Error bound for decimal approximations in text output
    #[arg(long, global = true, default_value = "1/1000000000", value_parser = parse_width)]
    refine_width: Rat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form p(Y) + q(Y)*X
    Reduce {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// u + v
    Add {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// u * v
    Mul {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// p^2 + q^2*(Y^2+1)
    Norm {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Whether u is a nonzero constant
    IsUnit {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Whether u is a linear prime aX + bY + c, with its normalization
    IsPrime {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Unit times linear primes (rational coefficients only)
    Factor {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Normalized generator of the ideal spanned by the arguments
    ///
    /// Write a leading minus sign inside parentheses, as in "(-X)", or
    /// put the arguments after "--".
    Gcd {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// d, s, t with s*u + t*v = d
    Xgcd {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Whether d divides u, with the quotient
    Divides {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Image of f in F(i) under the quotient map of a prime
    Phi {
        #[arg(allow_hyphen_values = true)]
        prime: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Certificate that the units of A miss a unit of A/(prime)
    Witness {
        #[arg(allow_hyphen_values = true)]
        prime: String,
    },
    /// Resultant of univariate polynomials, or of bivariate ones with --eliminate
    Resultant {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value = "prs")]
        mode: ResultantMode,
        #[arg(long, value_parser = ["X", "Y"])]
        eliminate: Option<String>,
    },
    /// Sylvester matrix of two univariate polynomials
    Sylvester {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Real roots with multiplicities
    Isolate {
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Nonreal roots, one per conjugate pair
    ComplexRoots {
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Parse => 1,
        ErrorKind::Domain | ErrorKind::Internal => 2,
        ErrorKind::Resource => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli.command, &cli.config) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
