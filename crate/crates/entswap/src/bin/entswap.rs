//! Command-line surface: dump the derived action tables, run the
//! verification suites, and execute protocol runs with replayable
//! transcripts.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entswap::bases::verify_hadamard_expansions;
use entswap::error::Error;
use entswap::pauli::Pauli;
use entswap::protocol::{
    run_bidirectional, run_controlled, run_key_agreement, run_multidirectional, run_qsdc,
    MessageWord, PadSpec, Transcript,
};
use entswap::report::Report;
use entswap::swap::verify_swap_identities;
use entswap::tables::{build_a2, build_a3, restrict_to_s, verify_tables, ActionTable};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_PROTOCOL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "entswap",
    about = "Entanglement-based communication protocol simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a derived action table.
    Tables {
        which: TableName,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify { suite: Suite },
    /// Execute a protocol run.
    Run {
        #[command(subcommand)]
        protocol: Protocol,
    },
    /// Describe the available tables, suites and protocols.
    Info,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    A2,
    A3,
    S,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hadamard,
    Swap,
    Tables,
    All,
}

#[derive(Args)]
struct CommonRunArgs {
    /// Seed for all randomness in the run (default: ENTSWAP_SEED or 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Write the transcript to this path.
    #[arg(long)]
    trace_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Protocol {
    /// Direct communication of a radix-4 word from Alice to Bob.
    Qsdc {
        /// Message as a radix-4 digit string.
        #[arg(long)]
        msg: String,
        /// Total number of shared pairs (default: message length).
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated message positions (default: 0..len).
        #[arg(long = "J")]
        positions: Option<String>,
        /// Bob's fixed Pauli index.
        #[arg(long, default_value_t = 0)]
        i: u8,
        /// Shared Bell state index.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Simultaneous two-way exchange.
    Bidi {
        #[arg(long)]
        msg_a: String,
        #[arg(long)]
        msg_b: String,
        /// Shared Bell state index.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Three-party exchange over a GHZ state.
    Multi {
        /// Alice's two bits, e.g. "10".
        #[arg(long)]
        bits_a: String,
        #[arg(long)]
        bit_b: u8,
        #[arg(long)]
        bit_c: u8,
        /// Shared GHZ basis index.
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Controlled two-way exchange through Claire.
    Controlled {
        #[arg(long)]
        msg_a: String,
        #[arg(long)]
        msg_b: String,
        /// Shared GHZ basis index.
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Total number of shared triples (default: message length).
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated message positions (default: 0..len).
        #[arg(long = "J")]
        positions: Option<String>,
        /// Claire's authorization.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        grant: bool,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Key agreement from entanglement swapping.
    Keyagree {
        /// Number of blocks.
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: CommonRunArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            println!("error: kind={} detail=\"{}\"", failure.kind, failure.detail);
            ExitCode::from(failure.exit)
        }
    }
}

struct Failure {
    kind: &'static str,
    detail: String,
    exit: u8,
}

fn usage(detail: impl Into<String>) -> Failure {
    Failure {
        kind: "usage-error",
        detail: detail.into(),
        exit: EXIT_USAGE,
    }
}

fn protocol_failure(err: Error) -> Failure {
    let (kind, exit) = match err {
        Error::DecodeNoCandidate { .. } | Error::DecodeAmbiguous { .. } => {
            ("protocol-failure", EXIT_PROTOCOL)
        }
        Error::BadSymbol(_) | Error::PadMismatch { .. } | Error::BadPadPositions(_) => {
            ("usage-error", EXIT_USAGE)
        }
        _ => ("protocol-failure", EXIT_PROTOCOL),
    };
    Failure {
        kind,
        detail: err.to_string(),
        exit,
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Tables { which, format } => {
            let table = match which {
                TableName::A2 => build_a2(),
                TableName::A3 => build_a3(),
                TableName::S => restrict_to_s(&build_a3()),
            };
            print_table(&table, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let mut report = Report::new("all");
            match suite {
                Suite::Hadamard => report = verify_hadamard_expansions(),
                Suite::Swap => report = verify_swap_identities(),
                Suite::Tables => report = verify_tables(),
                Suite::All => {
                    report.merge(verify_hadamard_expansions());
                    report.merge(verify_swap_identities());
                    report.merge(verify_tables());
                }
            }
            println!("{report}");
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    kind: "verification-failure",
                    detail: report
                        .first_failure()
                        .unwrap_or("unknown check")
                        .to_string(),
                    exit: EXIT_VERIFY,
                })
            }
        }
        Command::Run { protocol } => run_protocol(protocol),
        Command::Info => {
            println!("tables: a2 (16 two-letter words), a3 (64 three-letter words), s (restriction to second/third letters in {{0,2}})");
            println!("verify suites: hadamard, swap, tables, all");
            println!("protocols: qsdc, bidi, multi, controlled, keyagree");
            println!("seeds: --seed flag, else ENTSWAP_SEED, else 0");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_table(table: &ActionTable, format: Format) {
    for row in table.rows() {
        let images: Vec<String> = row
            .permutation
            .images()
            .iter()
            .map(|k| k.to_string())
            .collect();
        let words: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        match format {
            Format::Text => println!(
                "row {}: perm [{}]  words {{{}}}",
                row.label,
                images.join(" "),
                words.join(", ")
            ),
            Format::Records => println!(
                "row={} perm={} words={}",
                row.label,
                images.join(","),
                words.join(",")
            ),
        }
    }
}

fn resolve_seed(explicit: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = explicit {
        return Ok(seed);
    }
    match std::env::var("ENTSWAP_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| usage(format!("ENTSWAP_SEED is not a 64-bit integer: {text}"))),
        Err(_) => Ok(0),
    }
}

fn parse_positions(text: Option<&str>, msg_len: usize) -> Result<Vec<usize>, Failure> {
    match text {
        None => Ok((0..msg_len).collect()),
        Some("") => Ok(Vec::new()),
        Some(t) => t
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("bad position: {piece}")))
            })
            .collect(),
    }
}

fn parse_msg(text: &str) -> Result<MessageWord, Failure> {
    MessageWord::parse(text).map_err(|e| usage(e.to_string()))
}

fn write_trace(path: &Option<PathBuf>, transcript: &Transcript) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, transcript.render()).map_err(|e| Failure {
            kind: "io-error",
            detail: e.to_string(),
            exit: EXIT_PROTOCOL,
        })?;
    }
    Ok(())
}

fn run_protocol(protocol: Protocol) -> Result<ExitCode, Failure> {
    match protocol {
        Protocol::Qsdc {
            msg,
            n,
            positions,
            i,
            k,
            common,
        } => {
            let msg = parse_msg(&msg)?;
            let n = n.unwrap_or(msg.len());
            let positions = parse_positions(positions.as_deref(), msg.len())?;
            let pad = PadSpec::new(n, positions).map_err(|e| usage(e.to_string()))?;
            let sigma_i = Pauli::from_index(i)
                .ok_or_else(|| usage(format!("pauli index {i} out of range")))?;
            if k > 3 {
                return Err(usage(format!("bell index {k} out of range")));
            }
            let seed = resolve_seed(common.seed)?;
            let out = run_qsdc(&msg, sigma_i, k, &pad, seed).map_err(protocol_failure)?;
            write_trace(&common.trace_out, &out.transcript)?;
            println!("decoded={}", out.decoded);
            if out.decoded == msg {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    kind: "protocol-failure",
                    detail: "decoded message differs from input".into(),
                    exit: EXIT_PROTOCOL,
                })
            }
        }
        Protocol::Bidi {
            msg_a,
            msg_b,
            k,
            common,
        } => {
            let msg_a = parse_msg(&msg_a)?;
            let msg_b = parse_msg(&msg_b)?;
            if k > 3 {
                return Err(usage(format!("bell index {k} out of range")));
            }
            let seed = resolve_seed(common.seed)?;
            let out = run_bidirectional(&msg_a, &msg_b, k, seed).map_err(protocol_failure)?;
            write_trace(&common.trace_out, &out.transcript)?;
            println!("alice-decoded={}", out.decoded_by_alice);
            println!("bob-decoded={}", out.decoded_by_bob);
            if out.decoded_by_alice == msg_b && out.decoded_by_bob == msg_a {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    kind: "protocol-failure",
                    detail: "mutual recovery failed".into(),
                    exit: EXIT_PROTOCOL,
                })
            }
        }
        Protocol::Multi {
            bits_a,
            bit_b,
            bit_c,
            ell,
            common,
        } => {
            let bits: Vec<u8> = bits_a
                .bytes()
                .map(|b| match b {
                    b'0' => Ok(0),
                    b'1' => Ok(1),
                    _ => Err(usage(format!("bits-a must be two bits, got {bits_a}"))),
                })
                .collect::<Result<_, _>>()?;
            if bits.len() != 2 {
                return Err(usage(format!("bits-a must be two bits, got {bits_a}")));
            }
            if bit_b > 1 || bit_c > 1 {
                return Err(usage("bit-b and bit-c must be 0 or 1".to_string()));
            }
            if ell > 7 {
                return Err(usage(format!("ghz index {ell} out of range")));
            }
            let seed = resolve_seed(common.seed)?;
            let out = run_multidirectional((bits[0], bits[1]), bit_b, bit_c, ell, seed)
                .map_err(protocol_failure)?;
            write_trace(&common.trace_out, &out.transcript)?;
            println!("outcome={}", out.outcome);
            println!("alice-view={}{}", out.alice_view.0, out.alice_view.1);
            println!(
                "bob-view={}{}{}",
                out.bob_view.0 .0, out.bob_view.0 .1, out.bob_view.1
            );
            println!(
                "claire-view={}{}{}",
                out.claire_view.0 .0, out.claire_view.0 .1, out.claire_view.1
            );
            let ok = out.alice_view == (bit_b, bit_c)
                && out.bob_view == ((bits[0], bits[1]), bit_c)
                && out.claire_view == ((bits[0], bits[1]), bit_b);
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    kind: "protocol-failure",
                    detail: "mutual recovery failed".into(),
                    exit: EXIT_PROTOCOL,
                })
            }
        }
        Protocol::Controlled {
            msg_a,
            msg_b,
            ell,
            n,
            positions,
            grant,
            common,
        } => {
            let msg_a = parse_msg(&msg_a)?;
            let msg_b = parse_msg(&msg_b)?;
            if msg_a.len() != msg_b.len() {
                return Err(usage("messages must have equal length".to_string()));
            }
            if ell > 7 {
                return Err(usage(format!("ghz index {ell} out of range")));
            }
            let n = n.unwrap_or(msg_a.len());
            let positions = parse_positions(positions.as_deref(), msg_a.len())?;
            let pad = PadSpec::new(n, positions).map_err(|e| usage(e.to_string()))?;
            let seed = resolve_seed(common.seed)?;
            let out =
                run_controlled(&msg_a, &msg_b, ell, &pad, grant, seed).map_err(protocol_failure)?;
            write_trace(&common.trace_out, &out.transcript)?;
            match (out.decoded_by_alice, out.decoded_by_bob) {
                (None, None) => {
                    println!("no authorization; no message exchanged");
                    Ok(ExitCode::SUCCESS)
                }
                (Some(da), Some(db)) => {
                    println!("alice-decoded={da}");
                    println!("bob-decoded={db}");
                    if da == msg_b && db == msg_a {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        Err(Failure {
                            kind: "protocol-failure",
                            detail: "mutual recovery failed".into(),
                            exit: EXIT_PROTOCOL,
                        })
                    }
                }
                _ => Err(Failure {
                    kind: "protocol-failure",
                    detail: "inconsistent grant handling".into(),
                    exit: EXIT_PROTOCOL,
                }),
            }
        }
        Protocol::Keyagree { m, common } => {
            if m == 0 {
                return Err(usage("block count m must be at least 1".to_string()));
            }
            let seed = resolve_seed(common.seed)?;
            let out = run_key_agreement(m, seed).map_err(protocol_failure)?;
            write_trace(&common.trace_out, &out.transcript)?;
            let render = |key: &[u8]| key.iter().map(|b| b.to_string()).collect::<String>();
            println!("key-alice={}", render(&out.key_alice));
            println!("key-bob={}", render(&out.key_bob));
            for (idx, block) in out.blocks.iter().enumerate() {
                println!(
                    "block={} actions={}{} correlated={} labels={}{}{}{} outcomes={},{}",
                    idx,
                    if block.alice_swap { "A1" } else { "A0" },
                    if block.bob_cross { "B1" } else { "B0" },
                    block.correlated,
                    block.labels.0,
                    block.labels.1,
                    block.labels.2,
                    block.labels.3,
                    block.outcomes.0,
                    block.outcomes.1
                );
            }
            if out.key_alice == out.key_bob {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    kind: "protocol-failure",
                    detail: "keys disagree".into(),
                    exit: EXIT_PROTOCOL,
                })
            }
        }
    }
}
