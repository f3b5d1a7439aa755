use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zhegalkin::{
    expr_to_anf, integrate_boundary, integrate_face, integrate_top, parse_anf, parse_form,
    parse_table, stokes_check, stokes_sweep, Face, KForm, SweepMode, ZhegalkinPoly,
};

/// Boolean functions as Zhegalkin polynomials: conversion, secants, forms
/// and Hamming-cube integration.
#[derive(Parser)]
#[command(name = "zhegalkin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an expression or an `n:HEX` truth table to ANF.
    Anf {
        /// Arity; optional when the input is a table.
        #[arg(long)]
        n: Option<usize>,
        /// Expression, ANF or table text; `-` reads standard input.
        input: String,
    },
    /// Print the truth table of an ANF or expression as `n:HEX`.
    Table {
        #[arg(long)]
        n: usize,
        input: String,
    },
    /// Apply the secant ∂_I to an ANF.
    Derive {
        #[arg(long)]
        n: usize,
        #[arg(long = "var")]
        var: usize,
        input: String,
    },
    /// Exterior derivative of a form.
    D {
        #[arg(long)]
        n: usize,
        form: String,
    },
    /// Wedge product of two forms.
    Wedge {
        #[arg(long)]
        n: usize,
        a: String,
        b: String,
    },
    /// Integrate over the cube, one face, or the whole boundary.
    Integrate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        region: Region,
        form: String,
    },
    /// Check Stokes' identity on one form, or sweep a family of forms.
    Stokes {
        #[arg(long)]
        n: usize,
        /// Every (n−1)-form; n ≤ 2 only.
        #[arg(long, conflicts_with_all = ["random", "form"])]
        exhaustive: bool,
        /// Number of random (n−1)-forms.
        #[arg(long, value_name = "COUNT", conflicts_with = "form")]
        random: Option<u64>,
        #[arg(long, default_value_t = 0, requires = "random")]
        seed: u64,
        form: Option<String>,
    },
    /// Time forward+inverse Möbius transforms on random tables.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u8).range(10..=24))]
        n: u8,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Region {
    #[arg(long)]
    top: bool,
    /// Face `I,J`: x_I fixed to J.
    #[arg(long, value_name = "I,J", value_parser = parse_face)]
    face: Option<Face>,
    #[arg(long)]
    boundary: bool,
}

fn parse_face(s: &str) -> Result<Face, String> {
    let (i, j) = s.split_once(',').ok_or("expected I,J")?;
    let axis = i.trim().parse().map_err(|_| format!("bad axis {i:?}"))?;
    let level = match j.trim() {
        "0" => false,
        "1" => true,
        _ => return Err(format!("level must be 0 or 1, got {j:?}")),
    };
    Ok(Face::new(axis, level))
}

fn read_input(arg: &str) -> std::io::Result<String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf.trim().to_string())
}

fn looks_like_table(s: &str) -> bool {
    s.split_once(':')
        .is_some_and(|(n, _)| !n.is_empty() && n.bytes().all(|b| b.is_ascii_digit()))
}

/// Expression first; ANF text as a fallback, reporting the expression error.
fn function(src: &str, n: usize) -> zhegalkin::Result<ZhegalkinPoly> {
    expr_to_anf(src, n).or_else(|e| parse_anf(src, n).map_err(|_| e))
}

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

fn form_arg(src: &str, n: usize) -> Result<KForm, Box<dyn std::error::Error>> {
    Ok(parse_form(&read_input(src)?, n)?)
}

fn run(cmd: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let out = match cmd {
        Command::Anf { n, input } => {
            let src = read_input(&input)?;
            if looks_like_table(&src) {
                let table = parse_table(&src)?;
                if let Some(n) = n.filter(|&n| n != table.arity()) {
                    return Err(format!("table has arity {}, --n is {n}", table.arity()).into());
                }
                ZhegalkinPoly::from_truth_table(&table)?.to_string()
            } else {
                let n = n.ok_or("--n is required unless the input is an n:HEX table")?;
                function(&src, n)?.to_string()
            }
        }
        Command::Table { n, input } => {
            let src = read_input(&input)?;
            let p = parse_anf(&src, n).or_else(|_| expr_to_anf(&src, n))?;
            p.to_truth_table()?.to_string()
        }
        Command::Derive { n, var, input } => {
            let p = parse_anf(&read_input(&input)?, n)?;
            p.partial(var)?.to_string()
        }
        Command::D { n, form } => form_arg(&form, n)?.exterior_derivative().to_string(),
        Command::Wedge { n, a, b } => form_arg(&a, n)?.wedge(&form_arg(&b, n)?)?.to_string(),
        Command::Integrate { n, region, form } => {
            let w = form_arg(&form, n)?;
            let value = if region.top {
                integrate_top(&w)?
            } else if let Some(face) = region.face {
                integrate_face(&w, face)?
            } else {
                integrate_boundary(&w)?
            };
            bit(value).to_string()
        }
        Command::Stokes {
            n,
            exhaustive,
            random,
            seed,
            form,
        } => {
            let mode = match (exhaustive, random, form) {
                (false, None, Some(form)) => {
                    let report = stokes_check(&form_arg(&form, n)?)?;
                    println!("{report}");
                    return Ok(exit_for(report.pass));
                }
                (true, _, _) => SweepMode::Exhaustive,
                (false, Some(count), _) => SweepMode::Random { count, seed },
                (false, None, None) => {
                    return Err("give a form, --exhaustive, or --random COUNT".into());
                }
            };
            let summary = stokes_sweep(n, mode)?;
            println!("{summary}");
            return Ok(exit_for(summary.failed == 0));
        }
        Command::Bench { n, reps } => {
            let r = zhegalkin::bench_transform(n as usize, reps, 0)?;
            format!(
                "n={} entries={} reps={} min={:.3}ms median={:.3}ms throughput={:.3e} entries/s verified={}",
                r.arity,
                1u64 << r.arity,
                r.reps,
                r.min.as_secs_f64() * 1e3,
                r.median.as_secs_f64() * 1e3,
                r.entries_per_sec,
                r.verified
            )
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("zhegalkin: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zhegalkin::differential;

    #[test]
    fn d_of_zero_form_is_differential() {
        let f = parse_anf("x1*x2 + x3", 3).unwrap();
        assert_eq!(
            KForm::from_poly(f.clone()).exterior_derivative(),
            differential(&f)
        );
    }

    #[test]
    fn table_detection() {
        assert!(looks_like_table("2:8"));
        assert!(!looks_like_table("x1 | x2"));
        assert!(!looks_like_table(":8"));
    }

    #[test]
    fn face_argument() {
        assert_eq!(parse_face("2,1").unwrap(), Face::new(2, true));
        assert!(parse_face("2,3").is_err());
        assert!(parse_face("2").is_err());
    }
}
