//! `unipieces`: enumerate classes, evaluate the Springer maps, `Φ`, `Ψ` and
//! `Υ`, print pieces and Hasse diagrams, and run the invariant checks.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unipotent_pieces::classes::{
    enumerate_classes, Characteristic, ClassLabel, GroupDatum, LieType, Variety,
};
use unipotent_pieces::filtration::{upsilon_char1, upsilon_char2};
use unipotent_pieces::hasse::hasse_dot;
use unipotent_pieces::pieces::{phi, psi, sigma_pieces, special_pieces, PiecePartition};
use unipotent_pieces::springer::{gamma, gamma_inverse, WeylCharacter};
use unipotent_pieces::verify;

#[derive(Parser, Debug)]
#[command(name = "unipieces", version, about = "Unipotent and nilpotent pieces for Sp and SO")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; defaults to `table`, or `dot` for `hasse`.
    #[arg(long, global = true)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the classes with their Springer labels.
    Enumerate(DatumArgs),
    /// Springer label of `--class`, or the class of `--weyl`.
    Gamma {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        input: ClassOrWeyl,
    },
    /// `Φ` of a label in the characteristic-2 image.
    Phi {
        #[command(flatten)]
        datum: DatumArgs,
        /// Weyl character as JSON, e.g. '{"alpha":[],"beta":[2]}'.
        #[arg(long)]
        weyl: String,
    },
    /// `Ψ` of a class.
    Psi {
        #[command(flatten)]
        datum: DatumArgs,
        /// Class as JSON, e.g. '{"lambda":[2,2],"epsilon":{"0":1,"2":0}}'.
        #[arg(long)]
        class: String,
    },
    /// The pieces, labeled by characteristic-one classes.
    Pieces(DatumArgs),
    /// The special pieces.
    SpecialPieces(DatumArgs),
    /// `Υ` of an orthogonal class.
    Upsilon {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        class: String,
    },
    /// Hasse diagram of the closure order in DOT, one cluster per piece.
    Hasse(DatumArgs),
    /// Run the invariant checks exhaustively up to a rank.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_rank: u32,
        /// Comma-separated check names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Print the available checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug)]
struct DatumArgs {
    #[arg(long = "type", value_enum)]
    lie_type: TypeArg,
    #[arg(long)]
    rank: u32,
    #[arg(long = "char", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    characteristic: u8,
    #[arg(long, value_enum, default_value_t = VarietyArg::Group)]
    variety: VarietyArg,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ClassOrWeyl {
    #[arg(long)]
    class: Option<String>,
    #[arg(long)]
    weyl: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum VarietyArg {
    Group,
    Lie,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Json,
    Table,
    Dot,
}

/// Bad flags or unparsable input: exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

impl DatumArgs {
    fn datum(&self) -> anyhow::Result<GroupDatum> {
        let t = match self.lie_type {
            TypeArg::B => LieType::B,
            TypeArg::C => LieType::C,
            TypeArg::D => LieType::D,
        };
        let p = Characteristic::try_from(self.characteristic).map_err(|e| usage(e.to_string()))?;
        let v = match self.variety {
            VarietyArg::Group => Variety::Group,
            VarietyArg::Lie => Variety::LieAlgebra,
        };
        GroupDatum::new(t, self.rank, p, v).map_err(|e| usage(e.to_string()))
    }
}

fn parse_class(d: &GroupDatum, s: &str) -> anyhow::Result<ClassLabel> {
    let c: ClassLabel = serde_json::from_str(s).map_err(|e| usage(format!("--class: {e}")))?;
    match unipotent_pieces::classes::validate_class(d, &c) {
        Ok(true) => Ok(c),
        Ok(false) => Err(usage(format!("{c} is not a class of {d}"))),
        Err(e) => Err(usage(format!("--class: {e}"))),
    }
}

fn parse_weyl(s: &str) -> anyhow::Result<WeylCharacter> {
    serde_json::from_str(s).map_err(|e| usage(format!("--weyl: {e}")))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn pieces_table(p: &PiecePartition) -> String {
    let mut out = String::new();
    for piece in &p.pieces {
        let members: Vec<String> = piece.members.iter().map(|c| c.to_string()).collect();
        out += &format!("{}: {}\n", piece.label, members.join("; "));
    }
    out
}

/// Output text and exit status.
fn run(cli: &Cli) -> anyhow::Result<(String, ExitCode)> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Hasse(_) => Format::Dot,
        _ => Format::Table,
    });
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match (&cli.command, format) {
        (Command::Hasse(args), Format::Dot) => ok(hasse_dot(&args.datum()?)?),
        (_, Format::Dot) | (Command::Hasse(_), _) => Err(usage("--format dot goes with hasse only")),
        (Command::Enumerate(args), _) => {
            let d = args.datum()?;
            let rows = enumerate_classes(&d)
                .into_iter()
                .map(|c| Ok((gamma(&d, &c)?, c)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            match format {
                Format::Json => {
                    ok(pretty(&rows.iter().map(|(w, c)| json!({"class": c, "gamma": w})).collect::<Vec<_>>()))
                }
                _ => ok(rows.iter().map(|(w, c)| format!("{c}\t{w}\n")).collect()),
            }
        }
        (Command::Gamma { datum, input }, _) => {
            let d = datum.datum()?;
            let v: Value = match (&input.class, &input.weyl) {
                (Some(c), _) => serde_json::to_value(gamma(&d, &parse_class(&d, c)?)?)?,
                (_, Some(w)) => serde_json::to_value(
                    gamma_inverse(&d, &parse_weyl(w)?).map_err(|e| usage(e.to_string()))?,
                )?,
                _ => unreachable!("clap requires one of the two"),
            };
            ok(serde_json::to_string(&v)? + "\n")
        }
        (Command::Phi { datum, weyl }, _) => {
            let d = datum.datum()?;
            let w = phi(&d, &parse_weyl(weyl)?).map_err(|e| usage(e.to_string()))?;
            ok(w.to_json_string() + "\n")
        }
        (Command::Psi { datum, class }, _) => {
            let d = datum.datum()?;
            ok(psi(&d, &parse_class(&d, class)?)?.to_json_string() + "\n")
        }
        (Command::Pieces(args), _) | (Command::SpecialPieces(args), _) => {
            let d = args.datum()?;
            let p = match cli.command {
                Command::Pieces(_) => sigma_pieces(&d)?,
                _ => special_pieces(&d)?,
            };
            match format {
                Format::Json => ok(pretty(&p)),
                _ => ok(pieces_table(&p)),
            }
        }
        (Command::Upsilon { datum, class }, _) => {
            let d = datum.datum()?;
            if !d.lie_type.is_orthogonal() {
                return Err(usage("Υ is defined for types B and D"));
            }
            let c = parse_class(&d, class)?;
            let u = if d.is_char_one() { upsilon_char1(c.lambda()) } else { upsilon_char2(&d, &c)? };
            match format {
                Format::Json => ok(serde_json::to_string(&u)? + "\n"),
                _ => ok(format!("{u}\n")),
            }
        }
        (Command::Verify { max_rank, checks, list }, _) => {
            if *list {
                return ok(verify::CHECKS.iter().map(|c| format!("{}\t{}\n", c.name, c.about)).collect());
            }
            let names: Vec<&str> = checks.iter().map(String::as_str).collect();
            for name in &names {
                if verify::find(name).is_none() {
                    return Err(usage(format!("unknown check {name:?}; see --list")));
                }
            }
            match verify::run_all(&names, *max_rank) {
                Ok(rows) => match format {
                    Format::Json => ok(pretty(
                        &rows.iter().map(|(n, k)| json!({"check": n, "cases": k})).collect::<Vec<_>>(),
                    )),
                    _ => ok(rows.iter().map(|(n, k)| format!("ok\t{n}\t{k}\n")).collect()),
                },
                Err(cex) => Ok((pretty(&cex), ExitCode::FAILURE)),
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|(text, code)| emit(&cli, &text).map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
