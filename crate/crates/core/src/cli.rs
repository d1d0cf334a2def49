//! Command-line front end. The `rankcode` binary is a thin wrapper around
//! [`run`], which takes explicit input and output streams so the whole
//! command surface can be driven from tests.
//!
//! Exit codes: 0 success, 1 usage/parse/validation error, 2 decode
//! failure, 3 budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{median_decode_time, random_valid_eta, timing_code};
use crate::code::{AnyCode, RankCode};
use crate::error::Error;
use crate::gf::{Fe, GaloisField};
use crate::oracle::{min_distance_witness, oracle_nearest, OracleBudget};
use crate::rank_metric::random_error;
use crate::serial::{format_elements, parse_elements, parse_message, parse_word, CodeSpecFile};
use crate::twisted::TwistedCode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DECODE_FAILURE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// All randomness comes from ChaCha8 seeded with `seed_from_u64`.
pub const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (prng: ChaCha8Rng::seed_from_u64 from rand_chacha 0.3)"
);

#[derive(Debug, Parser)]
#[command(name = "rankcode", version = VERSION, about = "Twisted Gabidulin rank-metric codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Code construction
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Encode a message read from --message or standard input
    Encode(EncodeArgs),
    /// Add a seeded random error of exact rank
    Corrupt(CorruptArgs),
    /// Decode a received word
    Decode(WordArgs),
    /// Exhaustive nearest-codeword decoding
    OracleDecode(OracleArgs),
    /// Exhaustively compute the minimum distance and compare to n-k+1
    VerifyMrd(VerifyArgs),
    /// Median decode time over seeded trials
    Bench(BenchArgs),
    /// Quick internal consistency checks
    Selftest,
}

#[derive(Debug, Subcommand)]
enum CodeAction {
    /// Emit a validated code spec
    New(NewArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EtaStrategy {
    Zero,
    RandomValid,
    Explicit,
}

#[derive(Debug, Args)]
struct NewArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, value_enum, default_value_t = EtaStrategy::Zero)]
    eta: EtaStrategy,
    /// digits of eta for --eta explicit, e.g. "[1,0,2,0]" or "1020"
    #[arg(long)]
    eta_value: Option<String>,
    /// modulus coefficients, low degree first, e.g. "[2,1,0,0,1]"
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct SpecArg {
    /// code spec JSON file
    #[arg(long)]
    spec: String,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[command(flatten)]
    spec: SpecArg,
    /// message file; standard input when absent or "-"
    #[arg(long)]
    message: Option<String>,
    /// write packed digit strings instead of JSON
    #[arg(long)]
    hex: bool,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    spec: SpecArg,
    /// word file; standard input when absent or "-"
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    hex: bool,
}

#[derive(Debug, Args)]
struct CorruptArgs {
    #[command(flatten)]
    word: WordArgs,
    /// exact rank of the added error
    #[arg(long = "rank", short = 't')]
    rank: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 1_000_000)]
    max_codewords: u64,
    #[arg(long, default_value_t = 1 << 20)]
    max_field: u64,
}

impl BudgetArgs {
    fn budget(&self) -> OracleBudget {
        OracleBudget {
            max_codewords: self.max_codewords,
            max_field: self.max_field,
        }
    }
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    word: WordArgs,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArg,
    #[command(flatten)]
    budget: BudgetArgs,
    /// accept a twist whose norm breaks the MRD property
    #[arg(long)]
    unvalidated: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    spec: SpecArg,
    #[arg(long, default_value_t = 21)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// other extension degrees to time with the same q and k, e.g. "4,8"
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } | Error::FieldTooLarge { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: Option<&str>) -> Result<String, Failure> {
        match path {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
            Some(p) => fs::read_to_string(p).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: format!("{p}: {e}"),
            }),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> CmdResult {
    match command {
        Command::Code {
            action: CodeAction::New(args),
        } => {
            let spec = cmd_code_new(&args)?;
            writeln!(io.out, "{}", spec.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Encode(args) => cmd_encode(&args, io),
        Command::Corrupt(args) => cmd_corrupt(&args, io),
        Command::Decode(args) => cmd_decode(&args, io),
        Command::OracleDecode(args) => cmd_oracle(&args, io),
        Command::VerifyMrd(args) => cmd_verify_mrd(&args, io),
        Command::Bench(args) => cmd_bench(&args, io),
        Command::Selftest => cmd_selftest(io),
    }
}

fn load_spec(path: &str) -> Result<CodeSpecFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{path}: {e}"),
    })?;
    CodeSpecFile::from_json(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{path}: {e}"),
    })
}

fn cmd_code_new(args: &NewArgs) -> Result<CodeSpecFile, Failure> {
    let field = match &args.modulus {
        Some(text) => {
            let modulus: Vec<u32> = serde_json::from_str(text)
                .map_err(|e| Error::Parse(format!("--modulus: {e}")))?;
            GaloisField::with_modulus(args.q, args.n, modulus)?
        }
        None => GaloisField::new(args.q, args.n)?,
    };
    let eta = match args.eta {
        EtaStrategy::Zero => Fe::ZERO,
        EtaStrategy::Explicit => {
            let text = args.eta_value.as_deref().ok_or_else(|| Failure {
                code: EXIT_USAGE,
                message: "--eta explicit needs --eta-value".into(),
            })?;
            match parse_elements(&field, &format!("[{}]", text.trim()))
                .or_else(|_| parse_elements(&field, text))?
                .as_slice()
            {
                [e] => *e,
                _ => return Err(Error::Parse("--eta-value must be one element".into()).into()),
            }
        }
        EtaStrategy::RandomValid => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(0));
            random_valid_eta(&field, args.k, &mut rng)?
        }
    };
    let code = TwistedCode::new(field, args.k, eta, args.r, None)?;
    Ok(CodeSpecFile::of(&code, args.seed))
}

fn cmd_encode(args: &EncodeArgs, io: &mut Io) -> CmdResult {
    let code = load_spec(&args.spec.spec)?.build()?;
    let text = io.read_input(args.message.as_deref())?;
    let msg = parse_message(code.field(), &text)?;
    let word = code.encode(&msg)?;
    writeln!(io.out, "{}", format_elements(code.field(), &word, args.hex)?)?;
    Ok(EXIT_OK)
}

fn cmd_corrupt(args: &CorruptArgs, io: &mut Io) -> CmdResult {
    let code = load_spec(&args.word.spec.spec)?.build()?;
    let field = code.field();
    let word = parse_word(field, &io.read_input(args.word.input.as_deref())?)?;
    if word.len() != code.n() {
        return Err(Error::Shape {
            expected: code.n(),
            got: word.len(),
        }
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let e = random_error(field, args.rank, &mut rng)?;
    let corrupted = word.add(field, &e)?;
    writeln!(io.out, "{}", format_elements(field, &corrupted, args.word.hex)?)?;
    Ok(EXIT_OK)
}

fn cmd_decode(args: &WordArgs, io: &mut Io) -> CmdResult {
    let code = load_spec(&args.spec.spec)?.build()?;
    let word = parse_word(code.field(), &io.read_input(args.input.as_deref())?)?;
    match code.decode(&word)? {
        Some(msg) => {
            writeln!(io.out, "{}", format_elements(code.field(), &msg, args.hex)?)?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(
                io.err,
                "decode failure: no codeword within rank distance {}",
                code.max_radius()
            )?;
            Ok(EXIT_DECODE_FAILURE)
        }
    }
}

fn cmd_oracle(args: &OracleArgs, io: &mut Io) -> CmdResult {
    let code = load_spec(&args.word.spec.spec)?.build()?;
    let word = parse_word(code.field(), &io.read_input(args.word.input.as_deref())?)?;
    let hit = oracle_nearest(&code, &word, &args.budget.budget())?;
    writeln!(io.out, "{}", format_elements(code.field(), &hit.message, args.word.hex)?)?;
    writeln!(
        io.err,
        "distance {} ({})",
        hit.distance,
        if hit.unique { "unique" } else { "tie" }
    )?;
    Ok(EXIT_OK)
}

/// The one-line report printed by `verify-mrd`.
pub fn mrd_report(code: &AnyCode, budget: &OracleBudget) -> Result<(bool, String), Error> {
    let (d, witness) = min_distance_witness(code, budget)?;
    let bound = code.n() - code.k() + 1;
    if d == bound {
        Ok((true, format!("min distance {d} = n−k+1: MRD confirmed")))
    } else {
        Ok((
            false,
            format!(
                "min distance {d} < n−k+1 = {bound}: not MRD (lightest message {})",
                format_elements(code.field(), &witness, false)?
            ),
        ))
    }
}

fn cmd_verify_mrd(args: &VerifyArgs, io: &mut Io) -> CmdResult {
    let spec = load_spec(&args.spec.spec)?;
    let code = if args.unvalidated {
        spec.build_unvalidated()?
    } else {
        spec.build()?
    };
    let (ok, line) = mrd_report(&code, &args.budget.budget())?;
    writeln!(io.out, "{line}")?;
    Ok(if ok { EXIT_OK } else { EXIT_USAGE })
}

fn cmd_bench(args: &BenchArgs, io: &mut Io) -> CmdResult {
    let spec = load_spec(&args.spec.spec)?;
    let base = spec.build()?;
    let twisted = matches!(base, AnyCode::Twisted(_));
    let mut sizes = args.sizes.clone();
    if sizes.is_empty() {
        sizes.push(spec.n);
    }
    for n in sizes {
        let code = if n == spec.n {
            base.clone()
        } else {
            timing_code(spec.q, n, spec.k, twisted, args.seed)?
        };
        let median = median_decode_time(&code, args.trials, args.seed)?;
        writeln!(
            io.out,
            "n={} k={} t={} trials={} median_us={:.1}",
            n,
            code.k(),
            code.max_radius(),
            args.trials.max(1),
            median.as_secs_f64() * 1e6
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_selftest(io: &mut Io) -> CmdResult {
    let checks = crate::selftest::run_all();
    let mut all = true;
    for (name, ok) in &checks {
        all &= ok;
        writeln!(io.out, "{} {}", if *ok { "ok  " } else { "FAIL" }, name)?;
    }
    Ok(if all { EXIT_OK } else { EXIT_USAGE })
}
