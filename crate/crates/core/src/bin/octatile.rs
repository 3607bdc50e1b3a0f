use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use octatile::assembler::{
    assemble_hole, assemble_rotational, build_row_tiling, build_type1_variation, spiral_two_fold,
};
use octatile::geometry::{angles_from_b, spec_for_hole, spec_for_rotational, ExactAngle};
use octatile::io::{self, SvgOptions, TableKind};
use octatile::validator::validate;
use octatile::{Error, Tiling};

const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "octatile", version, about = "C11-T1A pentagon tilings: build, check, draw")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the angle table for n-fold rotational or m-gon hole pentagons.
    Tables {
        #[arg(value_parser = parse_kind)]
        kind: TableKind,
        /// Inclusive range such as 3..18.
        range: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a patch and write it as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check a patch file.
    Validate {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a patch file as SVG.
    Render {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Outline the hole of a hole-mode patch.
        #[arg(long)]
        hole: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// n-fold rotational tiling.
    Rot {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Tiling around a regular m-gon hole.
    Hole {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Parallel Octa-unit rows, or half-slid strips with --slides.
    Rows {
        #[arg(long, conflicts_with_all = ["m", "b"])]
        n: Option<u32>,
        #[arg(long, conflicts_with = "b")]
        m: Option<u32>,
        /// Angle B in degrees, e.g. 100 or 200/3.
        #[arg(long)]
        b: Option<String>,
        /// Comma separated row flags, e.g. 0,1,1.
        #[arg(long, required_unless_present = "slides", conflicts_with = "slides")]
        flips: Option<String>,
        /// Comma separated strip slides, e.g. 0,1,0.
        #[arg(long)]
        slides: Option<String>,
        #[arg(long, default_value_t = 3)]
        len: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Two-fold spiral for m in {8, 10, 14}.
    Spiral {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        belts: u32,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Output file; JSON goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_kind(s: &str) -> Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_flags(s: &str) -> Result<Vec<bool>, Error> {
    s.split(',')
        .map(|f| match f.trim() {
            "1" | "true" | "t" => Ok(true),
            "0" | "false" | "f" => Ok(false),
            other => Err(Error::Parse(format!("bad flag {other:?}, expected 0 or 1"))),
        })
        .collect()
}

enum Failure {
    Usage(Error),
    Invalid,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn build(kind: &GenKind) -> Result<Tiling, Error> {
    match kind {
        GenKind::Rot { n, depth, .. } => assemble_rotational(*n, *depth),
        GenKind::Hole { m, depth, .. } => assemble_hole(*m, *depth),
        GenKind::Spiral { m, belts, .. } => spiral_two_fold(*m, *belts),
        GenKind::Rows { n, m, b, flips, slides, len, .. } => {
            let spec = match (n, m, b) {
                (Some(n), _, _) => spec_for_rotational(*n)?,
                (_, Some(m), _) => spec_for_hole(*m)?,
                (_, _, Some(b)) => angles_from_b(b.parse::<ExactAngle>()?)?,
                _ => return Err(Error::Domain("rows need one of --n, --m or --b".into())),
            };
            match (flips, slides) {
                (_, Some(s)) => build_type1_variation(&spec, &parse_flags(s)?, *len),
                (Some(f), None) => build_row_tiling(&spec, &parse_flags(f)?, *len),
                (None, None) => Err(Error::Domain("rows need --flips or --slides".into())),
            }
        }
    }
}

fn out_path(kind: &GenKind) -> Option<&PathBuf> {
    match kind {
        GenKind::Rot { out, .. }
        | GenKind::Hole { out, .. }
        | GenKind::Rows { out, .. }
        | GenKind::Spiral { out, .. } => out.out.as_ref(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Tables { kind, range, format } => {
            let rows = io::table(kind, io::parse_range(&range)?)?;
            match format {
                Format::Text => print!("{}", io::format_table(kind, &rows)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows).map_err(Error::from)?),
            }
            Ok(())
        }
        Command::Gen { kind } => {
            let tiling = build(&kind)?;
            let json = io::to_json(&tiling);
            let report = validate(&tiling);
            let summary = format!(
                "{} tiles, {}, symmetry {}",
                tiling.len(),
                if report.valid { "valid" } else { "INVALID" },
                report.symmetry.schoenflies()
            );
            match out_path(&kind) {
                Some(p) => {
                    io::write_atomic(p, json.as_bytes())?;
                    println!("{summary}");
                }
                None => {
                    print!("{json}");
                    eprintln!("{summary}");
                }
            }
            if !report.valid {
                for p in &report.problems {
                    eprintln!("problem: {p}");
                }
                return Err(Failure::Invalid);
            }
            Ok(())
        }
        Command::Validate { path, format } => {
            let tiling = io::read_tiling(&path)?;
            let report = validate(&tiling);
            match format {
                Format::Text => print!("{report}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?),
            }
            if report.valid {
                Ok(())
            } else {
                Err(Failure::Invalid)
            }
        }
        Command::Render { path, out, hole } => {
            let tiling = io::read_tiling(&path)?;
            let opts = SvgOptions { hole_overlay: hole, ..SvgOptions::default() };
            io::write_atomic(&out, io::render_svg(&tiling, &opts).as_bytes())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invalid) => ExitCode::from(EXIT_INVALID),
    }
}
