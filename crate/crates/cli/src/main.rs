use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crystal_forge::character::{character, monomial_string};
use crystal_forge::demazure::{atomic_decomposition, demazure_crystal, ideal_intersection, ideal_subset};
use crystal_forge::io::{crystal_to_json, ideal_from_words, load_crystal_graph, CharacterDoc, ReportDoc, SubsetDoc};
use crystal_forge::select::select;
use crystal_forge::verify::{find_suite, SuiteOptions, SUITES};
use crystal_forge::{build_tableau_crystal, classify, CrystalGraph, Model, SubsetHandle};

#[derive(Parser)]
#[command(
    name = "crystal-forge",
    version,
    about = "Highest-weight crystals, Demazure crystals and ideal subsets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the type-A tableau crystal B(lambda) and write it as JSON.
    Build {
        #[arg(value_name = "TYPE")]
        kind: String,
        rank: usize,
        /// Partition, e.g. 2,1
        #[arg(value_parser = parse_list)]
        hw: Word,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Validate a crystal JSON file and print it in canonical form.
    Load {
        crystal: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Resolve a subset selector such as "hw; f1 @hw; f2 @hw".
    Subset { crystal: PathBuf, selector: String },
    /// The Demazure crystal B_w for a word such as 2,1.
    Demazure {
        crystal: PathBuf,
        #[arg(value_parser = parse_list)]
        w: Word,
    },
    /// The ideal subset B_I for generator words such as [[1],[2]].
    Ideal { crystal: PathBuf, generators: String },
    /// Demazure atoms of B_I, by default for the whole Weyl group.
    Atoms {
        crystal: PathBuf,
        /// Generator words; omit for every element of W.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Extremal, ideal, principal and Demazure tests with witnesses.
    Classify {
        crystal: PathBuf,
        /// A subset JSON file or a selector.
        subset: String,
    },
    /// Formal character of a subset.
    Character {
        crystal: PathBuf,
        subset: String,
        /// Render as a polynomial in x1..xn (type A only).
        #[arg(long)]
        monomials: bool,
    },
    /// B_I ∩ B_J computed as B_(I∩J).
    Intersect {
        crystal: PathBuf,
        left: String,
        right: String,
    },
    /// Run verification suites ("all" for every suite).
    Verify {
        suite: String,
        #[command(flatten)]
        instance: Instance,
        /// Ignore the exhaustive-sweep cap.
        #[arg(long)]
        force: bool,
        /// Largest crystal swept over all subsets.
        #[arg(long)]
        cap: Option<usize>,
        /// Accepted for compatibility; suites always cover all of W.
        #[arg(long, hide = true)]
        w: Option<String>,
    },
    /// Graphviz DOT, optionally with a subset filled in.
    ExportDot {
        crystal: PathBuf,
        #[arg(long)]
        subset: Option<String>,
    },
}

#[derive(Args)]
struct Instance {
    /// Crystal JSON file.
    #[arg(long, conflicts_with_all = ["kind", "rank", "hw"])]
    crystal: Option<PathBuf>,
    #[arg(long = "type", value_name = "TYPE")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, value_parser = parse_list)]
    hw: Option<Word>,
}

/// Comma-separated integers, optionally bracketed.
#[derive(Clone, Debug)]
struct Word(Vec<u32>);

fn parse_list(s: &str) -> Result<Word, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Word(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Word)
}

fn build(kind: &str, rank: usize, hw: &[u32]) -> Result<CrystalGraph> {
    if !kind.eq_ignore_ascii_case("A") {
        bail!("only type A crystals can be built; load other types from JSON");
    }
    Ok(build_tableau_crystal(rank + 1, hw)?)
}

fn load(path: &Path) -> Result<CrystalGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_crystal_graph(&text).with_context(|| format!("loading {}", path.display()))
}

/// A subset JSON file if `spec` names one, otherwise a selector.
fn subset<'g>(g: &'g CrystalGraph, spec: &str) -> Result<SubsetHandle<'g>> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        let doc: SubsetDoc = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
        return Ok(doc.to_subset(g)?);
    }
    Ok(select(g, spec)?)
}

fn ideal_words(text: &str) -> Result<Vec<Vec<u32>>> {
    serde_json::from_str(text).with_context(|| format!("expected generator words like [[1],[2]], got `{text}`"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build { kind, rank, hw, out } => emit(&crystal_to_json(&build(&kind, rank, &hw.0)?), out.as_deref())?,
        Command::Load { crystal, out } => emit(&crystal_to_json(&load(&crystal)?), out.as_deref())?,
        Command::Subset { crystal, selector } => {
            let g = load(&crystal)?;
            emit(&pretty(&SubsetDoc::from_subset(&select(&g, &selector)?)), None)?;
        }
        Command::Demazure { crystal, w } => {
            let g = load(&crystal)?;
            let w = g.weyl().element_from_labels(&w.0)?;
            emit(
                &pretty(&SubsetDoc::from_subset(&demazure_crystal(&g, &w)?.handle)),
                None,
            )?;
        }
        Command::Ideal { crystal, generators } => {
            let g = load(&crystal)?;
            let ideal = ideal_from_words(&g.weyl(), &ideal_words(&generators)?)?;
            emit(&pretty(&SubsetDoc::from_subset(&ideal_subset(&g, &ideal)?)), None)?;
        }
        Command::Atoms { crystal, ideal } => {
            let g = load(&crystal)?;
            let weyl = g.weyl();
            let ideal = match ideal {
                Some(text) => ideal_from_words(&weyl, &ideal_words(&text)?)?,
                None => weyl.lower_ideal(&weyl.enumerate(crystal_forge::verify::DEFAULT_GROUP_CAP)?),
            };
            let atoms: Vec<_> = atomic_decomposition(&g, &ideal)?
                .iter()
                .map(|a| {
                    json!({
                        "w": weyl.labels(&a.w),
                        "members": a.handle.sorted_ids(),
                        "character": CharacterDoc::from_character(&character(&a.handle)),
                    })
                })
                .collect();
            emit(&pretty(&atoms), None)?;
        }
        Command::Classify { crystal, subset: spec } => {
            let g = load(&crystal)?;
            let x = subset(&g, &spec)?;
            emit(&pretty(&ReportDoc::from_classification(&g, &classify(&x)?)), None)?;
        }
        Command::Character {
            crystal,
            subset: spec,
            monomials,
        } => {
            let g = load(&crystal)?;
            let c = character(&subset(&g, &spec)?);
            if monomials {
                let n = match g.model() {
                    Some(Model::Tableau { n, .. }) => *n,
                    None => g.cartan().rank() + 1,
                };
                emit(&monomial_string(&c, n)?, None)?;
            } else {
                emit(&pretty(&CharacterDoc::from_character(&c)), None)?;
            }
        }
        Command::Intersect { crystal, left, right } => {
            let g = load(&crystal)?;
            let weyl = g.weyl();
            let i = ideal_from_words(&weyl, &ideal_words(&left)?)?;
            let j = ideal_from_words(&weyl, &ideal_words(&right)?)?;
            emit(&pretty(&SubsetDoc::from_subset(&ideal_intersection(&g, &i, &j)?)), None)?;
        }
        Command::Verify {
            suite,
            instance,
            force,
            cap,
            w: _,
        } => {
            let g = match (&instance.crystal, &instance.kind, instance.rank, &instance.hw) {
                (Some(path), ..) => load(path)?,
                (None, Some(kind), Some(rank), Some(hw)) => build(kind, rank, &hw.0)?,
                _ => bail!("give either --crystal FILE or --type, --rank and --hw"),
            };
            let mut opts = SuiteOptions::from_env();
            opts.force = force;
            if let Some(cap) = cap {
                opts.subset_cap = cap;
            }
            let suites: Vec<_> = if suite == "all" {
                SUITES.iter().collect()
            } else {
                vec![find_suite(&suite).with_context(|| {
                    let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
                    format!("unknown suite `{suite}`; known: {}", names.join(", "))
                })?]
            };
            let mut ok = true;
            for s in suites {
                let report = (s.run)(&g, &opts)?;
                ok &= report.passed();
                print!("{}", report.render());
            }
            return Ok(ok);
        }
        Command::ExportDot { crystal, subset: spec } => {
            let g = load(&crystal)?;
            let overlay = spec.map(|s| subset(&g, &s)).transpose()?;
            print!("{}", crystal_forge::dot::to_dot(&g, overlay.as_ref()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
