//! Command-line front end: tables and JSON reports for the cell, a-function,
//! Robinson–Schensted, Kazhdan–Lusztig, J-ring, representation, verification
//! and dominance-ideal computations.
//!
//! Exit codes: 0 ok, 1 property failure, 2 usage error, 3 resource guard.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hecke::afun::AfunTable;
use hecke::gamma::GammaError;
use hecke::jring::{self, JRing};
use hecke::kl::{CellSide, KlContext, WeightFunction};
use hecke::perm::{GroupTable, SignedPerm};
use hecke::seminormal::{dump_rep, LeadingCoeffTable, SeminormalRep};
use hecke::tableau::{rs_correspondence, rs_inverse, shape_of, Bipartition, StdBitableau};
use hecke::verify::{summarize, Status, Verifier, ALL_CHECKS};

#[derive(Parser)]
#[command(
    name = "hecke",
    about = "Exact Kazhdan-Lusztig machinery for type-B Hecke algebras in the asymptotic regime",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for CellSide {
    fn from(s: Side) -> CellSide {
        match s {
            Side::Left => CellSide::Left,
            Side::Right => CellSide::Right,
            Side::TwoSided => CellSide::TwoSided,
        }
    }
}

#[derive(clap::Args)]
struct Common {
    /// Rank n of the group Wₙ.
    #[arg(short = 'n', long, default_value_t = 2)]
    rank: usize,
    /// Weight regime: `generic` (Γ = Z², b = (1,0), a = (0,1)) or `B,A`
    /// integer weights in Γ = Z.
    #[arg(long, default_value = "generic")]
    regime: String,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Raise the rank cap from 4 to 5 (combinatorial subcommands only).
    #[arg(long, default_value_t = false)]
    allow_rank5: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Left, right or two-sided Kazhdan–Lusztig cells.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// The a-function table: a, Δ, n_z and membership in 𝒟 per element.
    Afun {
        #[command(flatten)]
        common: Common,
    },
    /// Robinson–Schensted correspondence of one element, or of all elements.
    Rs {
        #[command(flatten)]
        common: Common,
        /// Window form, e.g. `[2,-1,3]`.
        #[arg(long)]
        window: Option<String>,
        /// Word form, e.g. `t s1 s2`.
        #[arg(long)]
        word: Option<String>,
        /// Invert: insertion and recording bitableaux in row-list form.
        #[arg(long, num_args = 2)]
        tableaux: Option<Vec<String>>,
    },
    /// Kazhdan–Lusztig P* polynomials (and optionally the h tensor) as JSON.
    Klpoly {
        #[command(flatten)]
        common: Common,
        /// One entry P*_{y,w} instead of the full dump.
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        w: Option<String>,
        /// Include the full h tensor in the JSON dump.
        #[arg(long, default_value_t = false)]
        with_h: bool,
    },
    /// The asymptotic ring J: blocks, identity element and matrix units.
    Jring {
        #[command(flatten)]
        common: Common,
    },
    /// Seminormal representation matrices and leading-coefficient data.
    Reps {
        #[command(flatten)]
        common: Common,
        /// One shape, e.g. `(1|1)`; all shapes when omitted.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Machine verification of P1–P15 and the structural cross-checks.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated ids (e.g. `P1,P4,CELLS-RS,DJM`) or `all`.
        #[arg(long, default_value = "all")]
        props: String,
        /// Sample size for the sampled sweeps at rank ≥ 3.
        #[arg(long, default_value_t = 100_000)]
        p15_samples: usize,
        /// Seed for every sampled sweep.
        #[arg(long, default_value_t = 0x70313521)]
        seed: u64,
        /// Wall-clock cap in seconds; remaining checks are skipped once hit.
        #[arg(long)]
        time_cap_secs: Option<u64>,
    },
    /// The Dipper–James–Murphy ideal comparison per bipartition.
    Djm {
        #[command(flatten)]
        common: Common,
        /// One bipartition, e.g. `(2|0)`; all bipartitions when omitted.
        #[arg(long)]
        shape: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_weights(common: &Common) -> Result<WeightFunction, GammaError> {
    if common.regime == "generic" {
        Ok(WeightFunction::generic(common.rank))
    } else {
        let (b, a) = common.regime.split_once(',').ok_or_else(|| {
            GammaError::Parse(format!(
                "regime must be `generic` or `B,A`, got `{}`",
                common.regime
            ))
        })?;
        let b: i32 = b
            .trim()
            .parse()
            .map_err(|e| GammaError::Parse(format!("bad weight: {e}")))?;
        let a: i32 = a
            .trim()
            .parse()
            .map_err(|e| GammaError::Parse(format!("bad weight: {e}")))?;
        WeightFunction::integer(common.rank, b, a)
    }
}

/// Rank guard; Kazhdan–Lusztig subcommands cap at 4 unconditionally.
fn guard_rank(common: &Common, kl_heavy: bool) -> Result<(), ExitCode> {
    let cap = if kl_heavy || !common.allow_rank5 {
        4
    } else {
        5
    };
    if common.rank < 1 || common.rank > cap {
        eprintln!(
            "rank {} exceeds the budget (cap {cap}{})",
            common.rank,
            if kl_heavy && common.rank == 5 {
                "; Kazhdan-Lusztig subcommands refuse rank 5"
            } else {
                "; pass --allow-rank5 to raise combinatorial subcommands to 5"
            }
        );
        return Err(ExitCode::from(3));
    }
    Ok(())
}

fn require_asymptotic(w: &WeightFunction) -> Result<(), GammaError> {
    if !w.is_asymptotic() {
        return Err(GammaError::Parse(
            "this subcommand needs the asymptotic regime b > (n−1)a > 0".into(),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, GammaError> {
    match cli.command {
        Command::Cells { common, side } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            let group = Arc::new(GroupTable::new(common.rank));
            let ctx = KlContext::new(group.clone(), weights);
            let cells = ctx.cells(side.into());
            match common.format {
                Format::Json => {
                    let val = json!({
                        "schema": "hecke/1",
                        "rank": common.rank,
                        "side": format!("{:?}", cells.side),
                        "cells": cells.cells.iter().map(|c| {
                            c.iter().map(|&e| group.element(e).render_window()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&val).unwrap());
                }
                Format::Tsv => {
                    for (i, cell) in cells.cells.iter().enumerate() {
                        let windows: Vec<String> = cell
                            .iter()
                            .map(|&e| group.element(e).render_window())
                            .collect();
                        let words: Vec<String> = cell
                            .iter()
                            .map(|&e| group.element(e).render_word())
                            .collect();
                        println!("{i}\t{}\t{}", windows.join(","), words.join(","));
                    }
                }
                Format::Pretty => {
                    println!(
                        "{:?} cells of W_{} ({} cells):",
                        cells.side,
                        common.rank,
                        cells.num_cells()
                    );
                    for (i, cell) in cells.cells.iter().enumerate() {
                        let members: Vec<String> = cell
                            .iter()
                            .map(|&e| group.element(e).render_word())
                            .collect();
                        println!("  cell {i}: {{{}}}", members.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Afun { common } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            require_asymptotic(&weights)?;
            let group = Arc::new(GroupTable::new(common.rank));
            let ctx = KlContext::new(group.clone(), weights);
            let afun = AfunTable::build(&ctx);
            let rows: Vec<_> = ctx
                .carrier()
                .iter()
                .map(|&z| {
                    let elt = group.element(z);
                    let row = afun.row(z);
                    (
                        elt.render_window(),
                        elt.render_word(),
                        shape_of(elt).render(),
                        format!("{}", row.a),
                        format!("{}", row.delta),
                        row.n_z.to_string(),
                        row.distinguished,
                    )
                })
                .collect();
            match common.format {
                Format::Json => {
                    let entries: Vec<_> = rows
                        .iter()
                        .map(|(win, word, shape, a, d, n, dist)| {
                            json!({
                                "window": win, "word": word, "shape": shape,
                                "a": a, "delta": d, "n": n, "distinguished": dist,
                            })
                        })
                        .collect();
                    let val = json!({"schema": "hecke/1", "rank": common.rank, "rows": entries});
                    println!("{}", serde_json::to_string_pretty(&val).unwrap());
                }
                Format::Tsv => {
                    println!("window\tword\tshape\ta\tdelta\tn\tdistinguished");
                    for (win, word, shape, a, d, n, dist) in rows {
                        println!("{win}\t{word}\t{shape}\t{a}\t{d}\t{n}\t{dist}");
                    }
                }
                Format::Pretty => {
                    println!(
                        "{:<14} {:<18} {:<10} {:<10} {:<10} {:>3}  in 𝒟",
                        "window", "word", "shape", "a", "Δ", "n"
                    );
                    for (win, word, shape, a, d, n, dist) in rows {
                        println!(
                            "{win:<14} {word:<18} {shape:<10} {a:<10} {d:<10} {n:>3}  {}",
                            if dist { "yes" } else { "" }
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Rs {
            common,
            window,
            word,
            tableaux,
        } => {
            if let Err(code) = guard_rank(&common, false) {
                return Ok(code);
            }
            if let Some(tabs) = tableaux {
                let a: StdBitableau = parse_bitableau(&tabs[0])?;
                let b: StdBitableau = parse_bitableau(&tabs[1])?;
                let w = rs_inverse(&a, &b)?;
                println!("{}", w.render_window());
                return Ok(ExitCode::SUCCESS);
            }
            let targets: Vec<SignedPerm> = match (window, word) {
                (Some(win), _) => vec![SignedPerm::parse_window(&win)?],
                (None, Some(word)) => vec![SignedPerm::parse_word(common.rank, &word)?],
                (None, None) => SignedPerm::enumerate(common.rank),
            };
            for w in targets {
                let (a, b) = rs_correspondence(&w);
                match common.format {
                    Format::Json => {
                        let val = json!({
                            "window": w.render_window(),
                            "shape": a.shape().render(),
                            "insertion": a.render(),
                            "recording": b.render(),
                        });
                        println!("{}", serde_json::to_string(&val).unwrap());
                    }
                    Format::Tsv => println!(
                        "{}\t{}\t{}\t{}",
                        w.render_window(),
                        a.shape().render(),
                        a.render(),
                        b.render()
                    ),
                    Format::Pretty => {
                        println!("{}  shape {}", w.render_window(), a.shape().render());
                        println!("  A = {}", a.render());
                        println!("  B = {}", b.render());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Klpoly {
            common,
            y,
            w,
            with_h,
        } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            let group = Arc::new(GroupTable::new(common.rank));
            let ctx = KlContext::new(group.clone(), weights);
            if let (Some(y), Some(w)) = (y.as_deref(), w.as_deref()) {
                let yi = group.index_of(&parse_element(common.rank, y)?);
                let wi = group.index_of(&parse_element(common.rank, w)?);
                let p = ctx.kl_star_polynomial(yi, wi);
                println!("{p}");
                return Ok(ExitCode::SUCCESS);
            }
            let tables = ctx.dump_tables(with_h);
            match common.format {
                Format::Pretty => {
                    for e in &tables.pstar {
                        if e.y != e.w {
                            println!("P*[{}, {}] = {}", e.y, e.w, e.poly);
                        }
                    }
                }
                _ => {
                    let mut val = serde_json::to_value(&tables).unwrap();
                    val["schema"] = serde_json::Value::String("hecke/1".into());
                    println!("{}", serde_json::to_string_pretty(&val).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Jring { common } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            require_asymptotic(&weights)?;
            let group = Arc::new(GroupTable::new(common.rank));
            let ctx = KlContext::new(group.clone(), weights.clone());
            ctx.h_all();
            let afun = AfunTable::build(&ctx);
            let lcs = LeadingCoeffTable::build(&group, &weights);
            let report = jring::verify_block_structure(&ctx, &afun, &lcs, 10_000);
            let ring = JRing::new(&group, &afun);
            match common.format {
                Format::Json => {
                    let blocks: Vec<_> = (0..lcs.num_labels())
                        .map(|li| {
                            let d = lcs.d(li);
                            json!({
                                "label": lcs.labels[li].render(),
                                "d": d,
                                "units": (0..d)
                                    .flat_map(|i| (0..d).map(move |j| (i, j)))
                                    .map(|(i, j)| json!({
                                        "i": i + 1,
                                        "j": j + 1,
                                        "window": group.element(lcs.w_of(li, i, j)).render_window(),
                                        "sign": lcs.sign_of(li, i, j),
                                    }))
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let val = json!({
                        "schema": "hecke/1",
                        "rank": common.rank,
                        "identity": ring.render(&ring.identity()),
                        "blocks": blocks,
                        "structure": report,
                    });
                    println!("{}", serde_json::to_string_pretty(&val).unwrap());
                }
                _ => {
                    println!("J-ring of W_{}:", common.rank);
                    println!("  1_J = {}", ring.render(&ring.identity()));
                    for (label, size) in &report.block_sizes {
                        println!("  block {label}: {size} basis elements");
                    }
                    println!(
                        "  structure check: {} ({} associativity triples)",
                        if report.ok() { "pass" } else { "FAIL" },
                        report.associativity_triples_checked
                    );
                    for v in &report.violations {
                        println!("  violation: {v}");
                    }
                }
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Reps { common, shape } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            require_asymptotic(&weights)?;
            let group = Arc::new(GroupTable::new(common.rank));
            match shape {
                Some(s) => {
                    let label = Bipartition::parse(&s)?;
                    if label.size() as usize != common.rank {
                        return Err(GammaError::Parse(format!(
                            "shape {label} has size {} but the rank is {}",
                            label.size(),
                            common.rank
                        )));
                    }
                    let rep = SeminormalRep::build(&group, &weights, &label);
                    let dump = dump_rep(&rep, &group);
                    println!("{}", serde_json::to_string_pretty(&dump).unwrap());
                }
                None => {
                    let lcs = LeadingCoeffTable::build(&group, &weights);
                    match common.format {
                        Format::Json => {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&lcs.dump(&group)).unwrap()
                            );
                        }
                        _ => {
                            println!("{:<12} {:>4} {:<10}", "label", "d", "alpha");
                            for (li, label) in lcs.labels.iter().enumerate() {
                                println!(
                                    "{:<12} {:>4} {:<10}",
                                    label.render(),
                                    lcs.d(li),
                                    format!("{}", lcs.alphas[li])
                                );
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            common,
            props,
            p15_samples,
            seed,
            time_cap_secs,
        } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            require_asymptotic(&weights)?;
            let t0 = std::time::Instant::now();
            let mut verifier = Verifier::new(common.rank, weights);
            verifier.p15_samples = p15_samples;
            verifier.seed = seed;
            let ids: Vec<String> = if props == "all" {
                ALL_CHECKS.iter().map(|s| s.to_string()).collect()
            } else {
                props.split(',').map(|s| s.trim().to_uppercase()).collect()
            };
            let reports: Vec<_> = ids
                .iter()
                .map(|id| {
                    if time_cap_secs.is_some_and(|cap| t0.elapsed().as_secs() >= cap) {
                        verifier.skipped(id, "time cap reached")
                    } else {
                        verifier.check(id)
                    }
                })
                .collect();
            match common.format {
                Format::Json => {
                    let val = json!({"schema": "hecke/1", "reports": reports});
                    println!("{}", serde_json::to_string_pretty(&val).unwrap());
                }
                _ => print!("{}", summarize(&reports)),
            }
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }

        Command::Djm { common, shape } => {
            if let Err(code) = guard_rank(&common, true) {
                return Ok(code);
            }
            let weights = parse_weights(&common)?;
            require_asymptotic(&weights)?;
            let verifier = Verifier::new(common.rank, weights);
            let reports = match shape {
                Some(s) => vec![verifier.djm_ideal(&Bipartition::parse(&s)?)],
                None => vec![verifier.check("DJM")],
            };
            match common.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
                _ => print!("{}", summarize(&reports)),
            }
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn parse_element(n: usize, s: &str) -> Result<SignedPerm, GammaError> {
    if s.trim_start().starts_with('[') {
        SignedPerm::parse_window(s)
    } else {
        SignedPerm::parse_word(n, s)
    }
}

fn parse_bitableau(s: &str) -> Result<StdBitableau, GammaError> {
    // `([[1,3],[2]],[[4]])`: two row-list tableaux.
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| {
            GammaError::Parse(format!("bitableau must look like ([[1]],[[2]]), got `{s}`"))
        })?;
    let mut depth = 0;
    let mut split = None;
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                split = Some(i);
                break;
            }
            _ => {}
        }
    }
    let split = split.ok_or_else(|| GammaError::Parse("bitableau needs two components".into()))?;
    let first = parse_tableau(&inner[..split])?;
    let second = parse_tableau(&inner[split + 1..])?;
    Ok(StdBitableau { first, second })
}

fn parse_tableau(s: &str) -> Result<hecke::tableau::Tableau, GammaError> {
    let rows: Vec<Vec<u32>> = serde_json::from_str(s.trim())
        .map_err(|e| GammaError::Parse(format!("bad tableau `{s}`: {e}")))?;
    let mut t = hecke::tableau::Tableau::empty();
    for (r, row) in rows.into_iter().enumerate() {
        for (c, x) in row.into_iter().enumerate() {
            t.place(r, c, x);
        }
    }
    Ok(t)
}
