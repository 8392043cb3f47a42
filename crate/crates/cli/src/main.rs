use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

/// Monomial ideals with prescribed depth functions of their powers.
#[derive(Parser, Debug)]
#[command(name = "depthfn", version)]
struct Cli {
    /// Maximum number of lcm-lattice elements before giving up (exit 3).
    #[arg(long, global = true, env = "DEPTHFN_LATTICE_CAP", default_value_t = depthfn::betti::DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the block-sum ideal for a depth function spec.
    Construct {
        /// Spec file, or inline JSON such as '{"prefix":[3,2,2],"tail":1}'.
        #[arg(long)]
        spec: String,
        /// Write the ideal document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an ideal with limit depth d and depth stability number r in n variables.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate depth S/I^k for k = 1..=kmax.
    Depth {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        kmax: usize,
        #[arg(long, default_value = "gf2")]
        field: depthfn::Field,
        /// Length of the final constant run needed to report a limit.
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Multigraded Betti numbers of an ideal.
    Betti {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value = "gf2")]
        field: depthfn::Field,
        /// Index by S/I instead of I.
        #[arg(long)]
        quotient: bool,
    },
    /// Print the predicted depth function of a spec or an (n, d, r) witness.
    Predict {
        #[arg(long, conflicts_with_all = ["n", "d", "r"])]
        spec: Option<String>,
        #[arg(long, requires_all = ["d", "r"])]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Compare predicted and computed depth prefixes.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, ignore_case = true)]
        which: Option<Which>,
        #[arg(long)]
        kmax: usize,
        /// gf<p>, q, or both (gf2 and gf3).
        #[arg(long, default_value = "gf2")]
        field: String,
        #[arg(long, default_value_t = 3)]
        window: usize,
        /// Compare against this depth function instead of the model, e.g. '{"prefix":[1],"tail":0}'.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Syzygy checks for powers of (x^t, x y^(t-2) z, y^(t-1) z).
    Buchberger {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Certified socle element of the n-th power of (x^t, x y^(t-2) z, y^(t-1) z).
    Socle {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compare the Betti engine with the Taylor oracle on seeded random ideals.
    OracleCheck {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value = "gf2")]
        field: depthfn::Field,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Prop,
    Spec,
    Ndr,
    Example,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Which {
    I,
    J,
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    let cap = cli.lattice_cap;
    match cli.command {
        Command::Construct { spec, out } => commands::construct(&spec, out.as_deref()),
        Command::Witness { n, d, r, out } => commands::witness(n, d, r, out.as_deref()),
        Command::Depth { ideal, kmax, field, window } => {
            commands::depth(&ideal, kmax, field, window, cap)
        }
        Command::Betti { ideal, field, quotient } => commands::betti(&ideal, field, quotient, cap),
        Command::Predict { spec, n, d, r } => commands::predict(spec.as_deref(), n, d, r),
        Command::Verify { family, t, spec, n, d, r, which, kmax, field, window, expect } => {
            let params =
                commands::VerifyParams { family, t, spec, n, d, r, which, kmax, window, expect };
            commands::verify(&params, &field, cap)
        }
        Command::Buchberger { t, n } => commands::buchberger(t, n, cap),
        Command::Socle { t, n } => commands::socle(t, n),
        Command::OracleCheck { seed, count, field } => commands::oracle_check(seed, count, field, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.status)
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
