//! Command-line entry point: one subcommand per subsystem plus the one-shot
//! acceptance run. Exit codes: 0 pass, 1 verification failure, 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use kanev::boundary::{orbits, sublattice_type, toric_rank, OrbitPartition};
use kanev::degeneration::{dominance_certificate, CoverTree, TreeShape};
use kanev::divisors::{hodge_class, identity_ledger, substitute, DivisorClass, Symbol};
use kanev::incidence::{build_incidence, eigenspaces_on_ker_deg, incidence_csv};
use kanev::lattice::{parse_root_list, Root};
use kanev::presets::{preset_roots, standard_points};
use kanev::sections::{
    build_curve, h0_2omega_minus_5l, h0_l, h0_omega, h0_omega_sq, petri_check, NodalCurveModel,
    SectionSpace,
};
use kanev::tables::{table1_report, table2_report, table3_report};
use kanev::verify::{render_ledger, run_acceptance};
use kanev::weyl::{conjugacy_classes, identify_class_fast, reflection};
use kanev::KanevError;

#[derive(Parser)]
#[command(
    name = "kanev",
    version,
    about = "exact arithmetic for the 27-line combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl group computations.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// The 27x27 incidence matrix.
    Incidence {
        #[command(subcommand)]
        cmd: IncidenceCmd,
    },
    /// Monodromy forms and the dominance determinant for a 12-root list.
    Monodromy(MonodromyArgs),
    /// Boundary orbits, sublattice types, toric ranks, tables.
    Boundary {
        #[command(subcommand)]
        cmd: BoundaryCmd,
    },
    /// Section spaces on the 72-nodal degenerate cover.
    Sections(SectionsArgs),
    /// Divisor-class identities.
    Divisors {
        #[command(subcommand)]
        cmd: DivisorsCmd,
    },
    /// Run the full acceptance ledger.
    VerifyPaper {
        /// Reduce the sampled property suites (full mode is the oracle).
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// The 25 conjugacy classes: name, order, cycle type, invariant
    /// dimension, size.
    Classes {
        /// Also classify each representative by invariants alone, without
        /// using the enumeration (cross-check of the fast path).
        #[arg(long)]
        fast: bool,
    },
    /// The reflection-products table with lcm and 1/mu columns.
    Table1,
}

#[derive(Subcommand)]
enum IncidenceCmd {
    /// Dump the matrix as CSV with line labels.
    Dump,
    /// Check the quadratic relation and eigenspace dimensions.
    Check,
}

#[derive(Args)]
struct MonodromyArgs {
    /// File with 12 root tokens.
    #[arg(long, conflicts_with = "preset")]
    roots: Option<PathBuf>,
    /// Built-in root list (thm-dominance, thm-2k5, thm-petri).
    #[arg(long, default_value = "thm-dominance")]
    preset: String,
    /// Tree shape: `cherry`, `path`, or a JSON file describing the tree.
    #[arg(long, default_value = "cherry")]
    tree: String,
}

#[derive(Subcommand)]
enum BoundaryCmd {
    /// Orbits of the reflection subgroup generated by a root list.
    Orbits {
        #[arg(long)]
        roots: PathBuf,
    },
    /// Toric rank of a boundary configuration.
    ToricRank {
        /// Roots generating the component subgroup (partition A).
        #[arg(long)]
        roots: PathBuf,
        /// Word in reflections for u, as root tokens composed left to right;
        /// the orbits of these reflections form partition B. Omitted: u = 1
        /// with both partitions trivial.
        #[arg(long, short, allow_hyphen_values = true)]
        u: Option<String>,
    },
    /// The invariant-dimension table.
    Table2,
    /// The sublattice orbit table with the discrepancy report.
    Table3,
}

#[derive(Args)]
struct SectionsArgs {
    /// Built-in configuration (thm-2k5 or thm-petri).
    #[arg(long, conflicts_with = "roots")]
    preset: Option<String>,
    /// File with 12 root tokens.
    #[arg(long, requires = "points")]
    roots: Option<PathBuf>,
    /// Comma-separated ramification points (rationals like 3 or 7/2).
    #[arg(long)]
    points: Option<String>,
    /// Which system to solve: omega, omega2, 2k5l, L, petri, or all.
    #[arg(long, default_value = "all")]
    mode: String,
    /// Include exact basis vectors in the output.
    #[arg(long)]
    basis: bool,
}

#[derive(Subcommand)]
enum DivisorsCmd {
    /// Run the identity ledger and print one PASS/FAIL line per identity.
    Verify,
    /// Evaluate a linear combination with the built-in substitution rules.
    Eval {
        /// Expression file: one `<rational> <symbol>` term per line.
        #[arg(long)]
        expr: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: String) -> Result<(), KanevError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode, KanevError> {
    match &cli.command {
        Command::Weyl { cmd } => weyl_cmd(cli, cmd),
        Command::Incidence { cmd } => incidence_cmd(cli, cmd),
        Command::Monodromy(args) => monodromy_cmd(cli, args),
        Command::Boundary { cmd } => boundary_cmd(cli, cmd),
        Command::Sections(args) => sections_cmd(cli, args),
        Command::Divisors { cmd } => divisors_cmd(cli, cmd),
        Command::VerifyPaper { fast } => verify_cmd(cli, *fast),
    }
}

fn weyl_cmd(cli: &Cli, cmd: &WeylCmd) -> Result<ExitCode, KanevError> {
    match cmd {
        WeylCmd::Classes { fast } => {
            let table = conjugacy_classes();
            if cli.json {
                let rows: Vec<Value> = table
                    .classes
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "order": c.order,
                            "even": c.even,
                            "cycle_type": c.cycle_type,
                            "inv_dim": c.inv_dim,
                            "size": c.size,
                            "fast_label": if *fast { identify_class_fast(&c.rep) } else { c.name },
                        })
                    })
                    .collect();
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({ "classes": rows }))?
                    ),
                )?;
            } else {
                let mut text = format!(
                    "{:<5} {:>5} {:<22} {:>4} {:>6}\n",
                    "name", "order", "cycle type", "inv", "size"
                );
                for c in &table.classes {
                    let mu = kanev::divisors::Partition::new(c.cycle_type.clone());
                    text.push_str(&format!(
                        "{:<5} {:>5} {:<22} {:>4} {:>6}\n",
                        c.name,
                        c.order,
                        mu.to_string(),
                        c.inv_dim,
                        c.size
                    ));
                }
                emit(cli, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Table1 => {
            let rep = table1_report();
            if cli.json {
                emit(cli, format!("{}\n", serde_json::to_string_pretty(&rep)?))?;
            } else {
                let mut text = format!(
                    "{:<6} {:<14} {:<22} {:>4} {:>8}   print check\n",
                    "class", "reflections", "partition", "lcm", "1/mu"
                );
                for row in &rep.rows {
                    let counts = row
                        .counts
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    let mark = if row.partition_matches_print && row.inv_mu_matches_print {
                        "ok".to_string()
                    } else {
                        format!(
                            "DISCREPANCY (printed {} / {})",
                            row.printed_partition, row.printed_inv_mu
                        )
                    };
                    text.push_str(&format!(
                        "{:<6} {:<14} {:<22} {:>4} {:>8}   {}\n",
                        row.class, counts, row.partition, row.lcm, row.inv_mu, mark
                    ));
                }
                emit(cli, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn incidence_cmd(cli: &Cli, cmd: &IncidenceCmd) -> Result<ExitCode, KanevError> {
    let d = build_incidence();
    match cmd {
        IncidenceCmd::Dump => {
            emit(cli, incidence_csv(&d))?;
            Ok(ExitCode::SUCCESS)
        }
        IncidenceCmd::Check => {
            let eig = eigenspaces_on_ker_deg(&d);
            let ok = d.is_symmetric()
                && d.zero_diagonal()
                && d.row_sums().iter().all(|&s| s == 10)
                && d.satisfies_quadratic_relation()
                && eig.dim_plus1 == 20
                && eig.dim_minus5 == 6;
            if cli.json {
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "symmetric": d.is_symmetric(),
                            "zero_diagonal": d.zero_diagonal(),
                            "row_sums_10": d.row_sums().iter().all(|&s| s == 10),
                            "quadratic_relation": d.satisfies_quadratic_relation(),
                            "dim_plus1": eig.dim_plus1,
                            "dim_minus5": eig.dim_minus5,
                            "pass": ok,
                        }))?
                    ),
                )?;
            } else {
                emit(
                    cli,
                    format!(
                        "symmetric/zero-diagonal/valence-10: {}\n(D+5)(D-1) = 5J: {}\n\
                         eigenspaces on ker(deg): dim(+1) = {}, dim(-5) = {}\n{}\n",
                        d.is_symmetric() && d.zero_diagonal(),
                        d.satisfies_quadratic_relation(),
                        eig.dim_plus1,
                        eig.dim_minus5,
                        if ok { "PASS" } else { "FAIL" }
                    ),
                )?;
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn load_roots(path: &PathBuf) -> Result<Vec<Root>, KanevError> {
    parse_root_list(&std::fs::read_to_string(path)?)
}

fn monodromy_cmd(cli: &Cli, args: &MonodromyArgs) -> Result<ExitCode, KanevError> {
    let roots = match &args.roots {
        Some(path) => load_roots(path)?,
        None => preset_roots(&args.preset)
            .ok_or_else(|| KanevError::Parse(format!("unknown preset `{}`", args.preset)))?,
    };
    let tree = match args.tree.as_str() {
        "cherry" => CoverTree::from_shape(TreeShape::Cherry),
        "path" => CoverTree::from_shape(TreeShape::Path),
        path => serde_json::from_str(&std::fs::read_to_string(path)?)
            .map_err(|e| KanevError::TreeShape(e.to_string()))?,
    };
    tree.validate()?;
    let cert = dominance_certificate(&roots, &tree)?;
    if cli.json {
        let forms: Vec<Value> = cert.normalized.iter().map(|m| json!(m.0)).collect();
        emit(
            cli,
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({
                    "kernel_basis": cert.kernel.basis,
                    "normalized_forms": forms,
                    "determinant": cert.determinant.to_string(),
                    "dominant": cert.dominant,
                    "matches_reference_4096": cert.matches_reference,
                }))?
            ),
        )?;
    } else {
        let mut text = String::from("kernel basis (rows of Ker(phi)):\n");
        for row in &cert.kernel.basis {
            text.push_str(&format!("  {row:?}\n"));
        }
        text.push_str("normalized monodromy forms M_i/6 (Sym^2 coordinates):\n");
        for (i, m) in cert.normalized.iter().enumerate() {
            text.push_str(&format!("  M'_{:<2} {:?}\n", i, m.sym2_coordinates()));
        }
        text.push_str(&format!(
            "det = {}  dominance: {}  |det| = 2^12: {}\n",
            cert.determinant,
            if cert.dominant { "PASS" } else { "FAIL" },
            cert.matches_reference
        ));
        emit(cli, text)?;
    }
    Ok(if cert.dominant {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn boundary_cmd(cli: &Cli, cmd: &BoundaryCmd) -> Result<ExitCode, KanevError> {
    match cmd {
        BoundaryCmd::Orbits { roots } => {
            let roots = load_roots(roots)?;
            let part = orbits(&roots)?;
            let ty = sublattice_type(&roots)?;
            if cli.json {
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "sublattice_type": ty.to_string(),
                            "degrees": part.degrees(),
                            "orbits": part.labelled_blocks(),
                        }))?
                    ),
                )?;
            } else {
                let mut text = format!("type {ty}, degrees {:?}\n", part.degrees());
                for block in part.labelled_blocks() {
                    text.push_str(&format!("  {{{}}}\n", block.join(" ")));
                }
                emit(cli, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundaryCmd::ToricRank { roots, u } => {
            let l1 = load_roots(roots)?;
            let a = orbits(&l1)?;
            let (perm, b) = match u {
                Some(word) => {
                    let us = parse_root_list(word)?;
                    let mut p = kanev::weyl::Perm::identity();
                    for r in &us {
                        p = p.compose(&reflection(r)?);
                    }
                    (p, orbits(&us)?)
                }
                None => (kanev::weyl::Perm::identity(), OrbitPartition::trivial()),
            };
            let rank = toric_rank(&perm, &a, &b)?;
            if cli.json {
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({ "toric_rank": rank }))?
                    ),
                )?;
            } else {
                emit(cli, format!("toric rank = {rank}\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundaryCmd::Table2 => {
            let rows = table2_report();
            if cli.json {
                emit(cli, format!("{}\n", serde_json::to_string_pretty(&rows)?))?;
            } else {
                let mut text = String::new();
                for r in &rows {
                    text.push_str(&format!(
                        "{:<5} inv_dim {}  (printed {}, {})\n",
                        r.class,
                        r.inv_dim,
                        r.printed,
                        if r.matches { "ok" } else { "DISCREPANCY" }
                    ));
                }
                emit(cli, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundaryCmd::Table3 => {
            let rows = table3_report()?;
            if cli.json {
                emit(cli, format!("{}\n", serde_json::to_string_pretty(&rows)?))?;
            } else {
                let mut text = String::new();
                for r in &rows {
                    text.push_str(&format!(
                        "{:<7} degrees {:?} degrees-match {} contents-match {}{}{}\n",
                        r.name,
                        r.degrees,
                        r.degrees_match_print,
                        r.contents_match_print,
                        if r.flagged_in_print {
                            " [typo row, reported]"
                        } else {
                            ""
                        },
                        if r.roots_corrected {
                            " [roots column corrected]"
                        } else {
                            ""
                        },
                    ));
                    for block in &r.orbits {
                        text.push_str(&format!("    {{{}}}\n", block.join(" ")));
                    }
                }
                emit(cli, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn section_json(name: &str, s: &SectionSpace, basis: bool) -> Value {
    let mut v = json!({
        "system": name,
        "unknowns": s.unknowns,
        "equations": s.equations,
        "rank": s.rank,
        "dim": s.dim,
        "warnings": s.warnings,
    });
    if basis {
        let rows: Vec<Vec<String>> = s
            .basis
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        v["basis"] = json!(rows);
    }
    v
}

fn parse_rational(tok: &str) -> Result<BigRational, KanevError> {
    let tok = tok.trim();
    let parse_int = |s: &str| -> Result<num_bigint::BigInt, KanevError> {
        s.trim()
            .parse()
            .map_err(|_| KanevError::Parse(format!("invalid rational `{tok}`")))
    };
    match tok.split_once('/') {
        Some((n, d)) => Ok(BigRational::new(parse_int(n)?, parse_int(d)?)),
        None => Ok(BigRational::from_integer(parse_int(tok)?)),
    }
}

fn parse_points(text: &str) -> Result<Vec<BigRational>, KanevError> {
    text.split(',').map(parse_rational).collect()
}

fn petri_json(rep: &kanev::sections::PetriReport) -> Value {
    json!({
        "dim_omega": rep.dim_omega,
        "dim_x0": rep.dim_x0,
        "dim_x1": rep.dim_x1,
        "dim_minus5": rep.dim_minus5,
        "span": rep.span,
        "ok": rep.ok,
    })
}

fn sections_cmd(cli: &Cli, args: &SectionsArgs) -> Result<ExitCode, KanevError> {
    let (roots, points) = match (&args.preset, &args.roots) {
        (Some(name), None) => {
            let roots = preset_roots(name)
                .ok_or_else(|| KanevError::Parse(format!("unknown preset `{name}`")))?;
            (roots, standard_points())
        }
        (None, Some(path)) => {
            let roots = load_roots(path)?;
            let points = parse_points(
                args.points
                    .as_ref()
                    .ok_or_else(|| KanevError::Parse("--points required with --roots".into()))?,
            )?;
            (roots, points)
        }
        _ => {
            return Err(KanevError::Parse(
                "pass either --preset or --roots/--points".into(),
            ))
        }
    };
    let curve: NodalCurveModel = build_curve(&roots, &points)?;
    let mut systems: Vec<(&str, SectionSpace)> = Vec::new();
    let mut petri_out: Option<Value> = None;
    match args.mode.as_str() {
        "omega" => systems.push(("omega", h0_omega(&curve))),
        "omega2" => systems.push(("omega2", h0_omega_sq(&curve))),
        "2k5l" => systems.push(("2omega-5L", h0_2omega_minus_5l(&curve))),
        "L" => systems.push(("L", h0_l(&curve))),
        "petri" => petri_out = Some(petri_json(&petri_check(&curve))),
        "all" => {
            systems.push(("omega", h0_omega(&curve)));
            systems.push(("omega2", h0_omega_sq(&curve)));
            systems.push(("2omega-5L", h0_2omega_minus_5l(&curve)));
            systems.push(("L", h0_l(&curve)));
            petri_out = Some(petri_json(&petri_check(&curve)));
        }
        other => return Err(KanevError::Parse(format!("unknown mode `{other}`"))),
    }
    if cli.json {
        let mut out = json!({
            "genus": curve.genus(),
            "node_counts": curve.n,
            "systems": systems
                .iter()
                .map(|(n, s)| section_json(n, s, args.basis))
                .collect::<Vec<_>>(),
        });
        if let Some(p) = petri_out {
            out["petri"] = p;
        }
        emit(cli, format!("{}\n", serde_json::to_string_pretty(&out)?))?;
    } else {
        let mut text = format!("genus {}\n", curve.genus());
        for (name, s) in &systems {
            text.push_str(&format!(
                "h0({name}): unknowns {} equations {} rank {} dim {}\n",
                s.unknowns, s.equations, s.rank, s.dim
            ));
            for w in &s.warnings {
                text.push_str(&format!("  warning: {w}\n"));
            }
        }
        if let Some(p) = petri_out {
            text.push_str(&format!("petri: {p}\n"));
        }
        emit(cli, text)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_symbol(tok: &str) -> Result<Symbol, KanevError> {
    Ok(match tok {
        "lambda" => Symbol::Lambda,
        "lambda+1" | "lambda^(+1)" => Symbol::LambdaPlus,
        "lambda-5" | "lambda^(-5)" => Symbol::LambdaMinus,
        "gamma" => Symbol::Gamma,
        "kappa1" => Symbol::Kappa1,
        "A" => Symbol::FrakA,
        "B" => Symbol::FrakB,
        "n" => Symbol::FrakN,
        "c1V" => Symbol::C1V,
        "D_E6" => Symbol::DE6,
        "D_syz" => Symbol::DSyz,
        "D_azy" => Symbol::DAzy,
        "E0" => Symbol::e0(),
        "Esyz" => Symbol::esyz(),
        "Eazy" => Symbol::eazy(),
        "D0" => Symbol::d0(),
        other => {
            if let Some(i) = other.strip_prefix("B_") {
                Symbol::B(
                    i.parse()
                        .map_err(|_| KanevError::Parse(format!("bad symbol `{other}`")))?,
                )
            } else {
                return Err(KanevError::Parse(format!("unknown symbol `{other}`")));
            }
        }
    })
}

fn divisors_cmd(cli: &Cli, cmd: &DivisorsCmd) -> Result<ExitCode, KanevError> {
    match cmd {
        DivisorsCmd::Verify => {
            let ledger = identity_ledger();
            let all = ledger.iter().all(|e| e.passed);
            if cli.json {
                let rows: Vec<Value> = ledger
                    .iter()
                    .map(|e| json!({"name": e.name, "passed": e.passed, "detail": e.detail}))
                    .collect();
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({"identities": rows, "pass": all}))?
                    ),
                )?;
            } else {
                let mut text = String::new();
                for e in &ledger {
                    text.push_str(&format!(
                        "[{}] {} ({})\n",
                        if e.passed { "PASS" } else { "FAIL" },
                        e.name,
                        e.detail
                    ));
                }
                text.push_str(if all {
                    "all identities PASS\n"
                } else {
                    "FAILURES PRESENT\n"
                });
                emit(cli, text)?;
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        DivisorsCmd::Eval { expr } => {
            let text = std::fs::read_to_string(expr)?;
            let mut class = DivisorClass::zero();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap().trim();
                if line.is_empty() {
                    continue;
                }
                let (coeff, sym) = line.split_once(' ').ok_or_else(|| {
                    KanevError::Parse(format!(
                        "line {}: expected `<rational> <symbol>`",
                        lineno + 1
                    ))
                })?;
                class.add_term(parse_rational(coeff)?, parse_symbol(sym.trim())?);
            }
            // built-in rules: the tautological relations, the boundary
            // pullbacks, and the Hodge class expansion
            let mut rules = kanev::divisors::ge6_rules();
            rules.extend(kanev::divisors::b_pullback_rules());
            rules.push((Symbol::Lambda, hodge_class()));
            let expanded = substitute(&class, &rules)?;
            if cli.json {
                let coeffs: Vec<Value> = expanded
                    .coeffs
                    .iter()
                    .map(|(s, c)| json!({"symbol": s.to_string(), "coeff": c.to_string()}))
                    .collect();
                emit(
                    cli,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({ "class": coeffs }))?
                    ),
                )?;
            } else {
                emit(cli, format!("{expanded}\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify_cmd(cli: &Cli, fast: bool) -> Result<ExitCode, KanevError> {
    let results = run_acceptance(fast);
    let all_passed = results.iter().all(|r| r.passed);
    let all_expected = results.iter().all(|r| r.as_expected);
    if cli.json {
        emit(
            cli,
            format!("{}\n", serde_json::to_string_pretty(&results)?),
        )?;
    } else {
        emit(cli, render_ledger(&results))?;
    }
    // nonzero exit when a stated criterion fails; the documented deviations
    // in criteria 2 and 7 therefore surface in the exit code by design
    Ok(if all_passed && all_expected {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
