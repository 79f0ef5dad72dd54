//! `finring`: build, analyse, compare, enumerate and persist finite rings.
//!
//! A RING argument is a ring expression (`M(2,GF(2))`,
//! `F2<u,v>/(u^3,v^2,v*u,u^2-u*v)`, `Corpus(F2Q8)`, ...) or the path of a
//! RINGTAB file.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use finring::decomposition::{peirce, structural_checks};
use finring::enumeration::{enumerate, taxonomy_census, EnumOptions};
use finring::expr::{is_presentation, parse_ring_expr};
use finring::presentation::build_ring_from_text;
use finring::properties::{profile_with, PS_I_CAP};
use finring::radicals::jacobson_radical;
use finring::ring::iso::{is_isomorphic, IsoOutcome, DEFAULT_BUDGET};
use finring::ring::ringtab::{export_ring, import_ring};
use finring::ring::MAX_ORDER;
use finring::verify::{verify_paper, VerifyOptions};
use finring::RingTable;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "finring", version, about = "Finite unital rings as operation tables")]
struct Cli {
    /// Run the long jobs: order-16 enumeration, PS I above the default cap.
    #[arg(long, global = true)]
    deep: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output file or directory, depending on the command.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a ring and print a summary.
    Build { ring: String },
    /// Evaluate every property, with witnesses for the failures.
    Props {
        ring: String,
        /// Print key=value lines instead of the table.
        #[arg(long)]
        kv: bool,
    },
    /// Peirce decomposition and the structural checks.
    Decompose { ring: String },
    /// Decide whether two rings are isomorphic.
    Iso {
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Enumerate unital rings of a small order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        noncommutative_only: bool,
        /// Shuffle the branching order with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Rebuild every corpus ring and run all suites; exit status 0 iff all pass.
    VerifyPaper {
        /// Print only the key=value lines.
        #[arg(long)]
        kv: bool,
    },
    /// Write a ring as a RINGTAB file (to PATH or --out).
    Export { ring: String, path: Option<PathBuf> },
    /// Read a RINGTAB file, re-check the axioms and print a summary.
    Import { path: PathBuf },
}

fn load(arg: &str) -> Result<RingTable> {
    let path = Path::new(arg);
    if !arg.contains('(') && path.is_file() {
        return import_ring(path).with_context(|| format!("reading {arg}"));
    }
    parse_ring_expr(arg).with_context(|| format!("building `{arg}`"))
}

fn summary(r: &RingTable) -> String {
    let j = jacobson_radical(r);
    format!(
        "provenance       {}\norder            {}\ncharacteristic   {}\nadditive type    {:?}\nunits            {}\nidempotents      {}\nnilpotents       {}\ncenter           {}\n|J|              {}\n",
        r.provenance(),
        r.order(),
        r.characteristic(),
        r.additive_invariants(),
        r.units().len(),
        r.idempotents().len(),
        r.nilpotents().len(),
        r.center().len(),
        j.len(),
    )
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ps_i_cap = if cli.deep { MAX_ORDER } else { PS_I_CAP };
    match cli.command {
        Command::Build { ring } => {
            let r = load(&ring)?;
            print!("{}", summary(&r));
            if is_presentation(&ring) {
                let b = build_ring_from_text(&ring)?;
                println!("degree           {}", b.degree);
                println!("basis            {{{}}}", b.basis_labels().join(", "));
                println!("basis orders     {:?}", b.moduli);
            }
            if let Some(p) = &cli.out {
                export_ring(&r, p)?;
            }
        }
        Command::Props { ring, kv } => {
            let r = load(&ring)?;
            let p = profile_with(&r, ps_i_cap);
            let text = if kv { p.key_values() } else { p.to_string() };
            print!("{text}");
            write_out(&cli.out, &text)?;
        }
        Command::Decompose { ring } => {
            let r = load(&ring)?;
            let d = peirce(&r)?;
            let p = profile_with(&r, ps_i_cap);
            let text = format!("{d}{}", structural_checks(&r, &d, &p));
            print!("{text}");
            write_out(&cli.out, &text)?;
        }
        Command::Iso { a, b, budget } => {
            let (ra, rb) = (load(&a)?, load(&b)?);
            match is_isomorphic(&ra, &rb, budget) {
                IsoOutcome::Isomorphic(map) => {
                    println!("isomorphic");
                    for (x, &y) in map.iter().enumerate() {
                        println!("  {} -> {}", ra.label(x), rb.label(y));
                    }
                }
                IsoOutcome::NotIsomorphic(why) => println!("not isomorphic: {why}"),
                IsoOutcome::Inconclusive => println!("inconclusive: budget of {budget} nodes exhausted"),
            }
        }
        Command::Enumerate { order, noncommutative_only, seed } => {
            let opts = EnumOptions { deep: cli.deep, noncommutative_only, shuffle_seed: seed };
            let e = enumerate(order, &opts)?;
            let census = taxonomy_census(&e.rings);
            let text = format!("order {order}: {} classes ({} labelled tables)\n{census}", e.rings.len(), e.labelled);
            print!("{text}");
            if let Some(dir) = &cli.out {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (k, r) in e.rings.iter().enumerate() {
                    export_ring(r, dir.join(format!("order{order}_class{}.ringtab", k + 1)))?;
                }
                std::fs::write(dir.join(format!("census_order{order}.txt")), &text)?;
            }
        }
        Command::VerifyPaper { kv } => {
            let report = verify_paper(&VerifyOptions { deep: cli.deep, ps_i_cap: PS_I_CAP });
            let text = if kv { report.key_values() } else { report.to_string() };
            print!("{text}");
            write_out(&cli.out, &text)?;
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Export { ring, path } => {
            let r = load(&ring)?;
            let Some(path) = path.or(cli.out) else { bail!("export needs a PATH or --out") };
            export_ring(&r, &path)?;
            println!("wrote {} (order {})", path.display(), r.order());
        }
        Command::Import { path } => {
            let r = import_ring(&path).with_context(|| format!("reading {}", path.display()))?;
            print!("{}", summary(&r));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
