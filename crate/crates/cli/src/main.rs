//! Command-line front end for the braid engine: construction, normalization,
//! equality, classification, invariants, and the claim-verification harness.
//!
//! Braid arguments are the canonical JSON form
//! `{"strands": q, "word": [±i, ...]}`, inline or `@path` to a file. Exit
//! codes: 0 all checks true/verified, 1 any false/falsified/inconclusive,
//! 2 usage or resource errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ttk_core::braid::BraidWord;
use ttk_core::families::{self, VerificationReport, VerifyStatus};
use ttk_core::garside;
use ttk_core::invariants;
use ttk_core::twisted_torus::{self, SurgeryKind, TwistedTorusKnot, Verdict};

#[derive(Parser)]
#[command(
    name = "ttk",
    version,
    about = "Braid engine for twisted torus knots: Garside normal form, conjugacy verification, classification, Alexander invariants"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true, env = "TTK_JSON")]
    json: bool,

    /// Node budget for the general conjugacy search
    #[arg(long, global = true, env = "TTK_BUDGET", default_value_t = garside::DEFAULT_CONJUGACY_BUDGET)]
    budget: u64,

    /// Reject braid inputs with more strands than this
    #[arg(long, global = true, env = "TTK_STRANDS_CAP", default_value_t = 64)]
    strands_cap: usize,

    /// Degree guard for polynomial invariants
    #[arg(long, global = true, env = "TTK_DEGREE_CAP", default_value_t = invariants::DEFAULT_DEGREE_CAP)]
    degree_cap: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid word of K(p,q,r,n) in canonical JSON
    #[command(allow_negative_numbers = true)]
    Braid { p: i64, q: i64, r: i64, n: i64 },
    /// Surface slope pq + n*r^2
    #[command(allow_negative_numbers = true)]
    Slope { p: i64, q: i64, r: i64, n: i64 },
    /// Primitivity flags, Seifert data, and verdict
    #[command(allow_negative_numbers = true)]
    Classify { p: i64, q: i64, r: i64, n: i64 },
    /// Predicted result of surgery at the surface slope
    #[command(allow_negative_numbers = true)]
    Surgery { p: i64, q: i64, r: i64, n: i64 },
    /// Garside left normal form of a braid
    Nf { braid: String },
    /// Decide equality of two braid words
    Eq { left: String, right: String },
    /// Check the explicit conjugation c^-1 * left * c = right
    Conj {
        left: String,
        right: String,
        conjugator: String,
    },
    /// Alexander polynomial of a knot closure
    Alex { braid: String },
    /// Number of closure components
    Components { braid: String },
    /// Run claim verifiers
    Verify {
        target: VerifyTarget,
        /// Inclusive rank range a..b where the target is one-dimensional
        #[arg(long, visible_alias = "r", env = "TTK_RANGE")]
        range: Option<IntRange>,
        /// Inclusive q range for two-parameter families
        #[arg(long)]
        q: Option<IntRange>,
        /// Inclusive k range for two-parameter families
        #[arg(long)]
        k: Option<IntRange>,
        /// Strand bound for the exhaustive generator-slide sweep
        #[arg(long, default_value_t = 10)]
        strands: usize,
    },
    /// Classification table over a parameter box
    Sweep {
        #[arg(long, default_value_t = 60)]
        p_max: i64,
        #[arg(long, default_value_t = 12)]
        q_max: i64,
        /// Include rows classified OutsideCriteria
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    /// Beta-word conjugacy by the explicit conjugator
    P1,
    /// Full twisted-torus-braid conjugacy for the two-parameter family
    T1,
    /// Half-twist coincidence of the torus family
    P1th,
    /// Generator-slide and block lemmas
    Lemmas,
    /// The displayed equation chain
    Chain,
    /// Everything, with section structure and discrepancy notes
    All,
}

/// Inclusive integer range written `a..b` (or a single value `a`).
#[derive(Debug, Clone, Copy)]
struct IntRange {
    lo: i64,
    hi: i64,
}

impl IntRange {
    fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let parse = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| format!("invalid integer '{}' in range", s))
        };
        if let Some((lo, hi)) = text.split_once("..") {
            let lo = parse(lo)?;
            let hi = parse(hi)?;
            if lo > hi {
                return Err(format!("empty range {}..{}", lo, hi));
            }
            Ok(IntRange { lo, hi })
        } else {
            let v = parse(text)?;
            Ok(IntRange { lo: v, hi: v })
        }
    }
}

fn read_braid(arg: &str, strands_cap: usize) -> Result<BraidWord> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).with_context(|| format!("reading braid file {}", path))?
    } else {
        arg.to_string()
    };
    let word: BraidWord =
        serde_json::from_str(&text).map_err(|e| anyhow!("malformed braid JSON: {}", e))?;
    if word.strands() > strands_cap {
        bail!(
            "braid has {} strands, above the cap of {} (raise --strands-cap)",
            word.strands(),
            strands_cap
        );
    }
    Ok(word)
}

fn main() -> ExitCode {
    // die silently when a downstream pipe closes, like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Braid { p, q, r, n } => {
            let word = twisted_torus::ttk_braid(&TwistedTorusKnot::new(*p, *q, *r, *n))?;
            println!("{}", serde_json::to_string(&word)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Slope { p, q, r, n } => {
            let knot = TwistedTorusKnot::new(*p, *q, *r, *n);
            let slope = twisted_torus::surface_slope(&knot);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "p": p, "q": q, "r": r, "n": n, "slope": slope })
                );
            } else {
                println!("{}", slope);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { p, q, r, n } => {
            let knot = TwistedTorusKnot::new(*p, *q, *r, *n);
            let c = twisted_torus::classify(&knot)?;
            if cli.json {
                println!("{}", serde_json::to_string(&c)?);
            } else {
                println!("{}: {}", knot, c.verdict);
                println!("  primitive wrt H:  {}", c.primitive_h);
                println!("  primitive wrt H': {}", c.primitive_h_prime);
                match c.seifert_h {
                    Some((k, data)) => println!(
                        "  seifert data:     ({}, {}) over the disk, k = {}",
                        data.multiplicities.0, data.multiplicities.1, k
                    ),
                    None => println!("  seifert data:     none"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Surgery { p, q, r, n } => {
            let knot = TwistedTorusKnot::new(*p, *q, *r, *n);
            let s = twisted_torus::surgery_description(&knot)?;
            if cli.json {
                println!("{}", serde_json::to_string(&s)?);
            } else {
                println!("{}: slope {}, {}", knot, s.slope, surgery_text(&s.kind));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nf { braid } => {
            let word = read_braid(braid, cli.strands_cap)?;
            let nf = garside::to_normal_form(&word);
            if cli.json {
                println!("{}", serde_json::to_string(&nf)?);
            } else {
                let factors: Vec<Vec<usize>> = nf
                    .factors()
                    .iter()
                    .map(|f| f.permutation().images_one_indexed())
                    .collect();
                println!(
                    "inf {}, canonical length {}, factors {:?}",
                    nf.inf(),
                    nf.canonical_length(),
                    factors
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { left, right } => {
            let a = read_braid(left, cli.strands_cap)?;
            let b = read_braid(right, cli.strands_cap)?;
            let equal = garside::equals(&a, &b)?;
            emit_bool(cli.json, "equal", equal);
            Ok(bool_exit(equal))
        }
        Command::Conj {
            left,
            right,
            conjugator,
        } => {
            let a = read_braid(left, cli.strands_cap)?;
            let b = read_braid(right, cli.strands_cap)?;
            let c = read_braid(conjugator, cli.strands_cap)?;
            let ok = garside::is_conjugate_by(&a, &b, &c)?;
            emit_bool(cli.json, "conjugate_by", ok);
            Ok(bool_exit(ok))
        }
        Command::Alex { braid } => {
            let word = read_braid(braid, cli.strands_cap)?;
            let poly = invariants::alexander_with_cap(&word, cli.degree_cap)?;
            if cli.json {
                println!("{}", serde_json::to_string(&poly)?);
            } else {
                println!("{}", poly);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { braid } => {
            let word = read_braid(braid, cli.strands_cap)?;
            println!("{}", invariants::closure_components(&word));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            range,
            q,
            k,
            strands,
        } => {
            let sections = run_verify(*target, *range, *q, *k, *strands, cli.budget)?;
            print_sections(&sections, cli.json)?;
            let all_verified = sections
                .iter()
                .flat_map(|(_, reports)| reports)
                .all(VerificationReport::is_verified);
            Ok(bool_exit(all_verified))
        }
        Command::Sweep { p_max, q_max, all } => {
            run_sweep(*p_max, *q_max, *all, cli.json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bool_exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_bool(json: bool, key: &str, value: bool) {
    if json {
        println!("{}", serde_json::json!({ key: value }));
    } else {
        println!("{}", value);
    }
}

fn surgery_text(kind: &SurgeryKind) -> String {
    match kind {
        SurgeryKind::SfsS2 {
            multiplicities: (a, b, c),
        } => format!("S2({},{},{})", a, b, c),
        SurgeryKind::LensSpace => "lens space".into(),
        SurgeryKind::ConnectedSumOfLensSpaces => "connected sum of lens spaces".into(),
        SurgeryKind::Unknown => "unknown".into(),
    }
}

type Section = (String, Vec<VerificationReport>);

fn run_verify(
    target: VerifyTarget,
    range: Option<IntRange>,
    q_range: Option<IntRange>,
    k_range: Option<IntRange>,
    strands: usize,
    budget: u64,
) -> Result<Vec<Section>> {
    let range_or = |lo: i64, hi: i64| range.unwrap_or(IntRange { lo, hi });
    let q_or = |lo: i64, hi: i64| q_range.unwrap_or(IntRange { lo, hi });
    let k_or = |lo: i64, hi: i64| k_range.unwrap_or(IntRange { lo, hi });

    let beta_reports = |r_range: IntRange| -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for r in r_range.values() {
            if r < 2 {
                bail!("beta-word rank must be at least 2, got {}", r);
            }
            out.push(families::verify_p1(r as usize)?);
        }
        Ok(out)
    };
    let t1_reports = |qs: IntRange, ks: IntRange| -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for q in qs.values().filter(|q| q % 2 == 1 && *q >= 5) {
            for k in ks.values() {
                out.push(families::verify_t1(q, k)?);
                out.push(families::verify_t1_seifert_distinction(q, k)?);
            }
        }
        Ok(out)
    };
    let p1th_reports = |qs: IntRange, ks: IntRange| -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for q in qs.values() {
            for k in ks.values() {
                out.push(families::verify_p1_theorem(q, k, budget)?);
                out.push(families::verify_p1_slope(q, k)?);
            }
        }
        Ok(out)
    };
    let chain_reports = |r_range: IntRange| -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for r in r_range.values() {
            if r < 2 {
                bail!("equation chain rank must be at least 2, got {}", r);
            }
            out.extend(families::verify_equation_chain(r as usize)?);
        }
        Ok(out)
    };

    let sections: Vec<Section> = match target {
        VerifyTarget::P1 => vec![("beta conjugacy".into(), beta_reports(range_or(2, 8))?)],
        VerifyTarget::T1 => vec![(
            "two-parameter family".into(),
            t1_reports(q_or(5, 9), k_or(2, 3))?,
        )],
        VerifyTarget::P1th => vec![(
            "torus coincidence".into(),
            p1th_reports(q_or(3, 5), k_or(2, 3))?,
        )],
        VerifyTarget::Lemmas => {
            let r_range = range_or(2, 8);
            if r_range.lo < 2 {
                bail!("lemma rank must be at least 2, got {}", r_range.lo);
            }
            vec![(
                "lemma suite".into(),
                families::lemma_sweep(strands, r_range.lo as usize, r_range.hi as usize)?,
            )]
        }
        VerifyTarget::Chain => vec![("equation chain".into(), chain_reports(range_or(2, 6))?)],
        VerifyTarget::All => {
            let mut slope_section = families::verify_slope_examples()?;
            for q in [3i64, 5, 7] {
                for k in [2i64, 3] {
                    slope_section.push(families::verify_p1_slope(q, k)?);
                }
            }
            let mut braid_section = families::lemma_sweep(strands, 2, 8)?;
            braid_section.extend(chain_reports(IntRange { lo: 2, hi: 6 })?);
            braid_section.extend(beta_reports(IntRange { lo: 2, hi: 8 })?);
            braid_section.extend(t1_reports(
                IntRange { lo: 5, hi: 9 },
                IntRange { lo: 2, hi: 3 },
            )?);
            let coincidence_section =
                p1th_reports(IntRange { lo: 3, hi: 5 }, IntRange { lo: 2, hi: 3 })?;
            vec![
                ("slopes and classification".into(), slope_section),
                ("braid conjugacy".into(), braid_section),
                ("torus coincidence".into(), coincidence_section),
            ]
        }
    };

    Ok(sections
        .into_iter()
        .map(|(name, mut reports)| {
            reports.sort_by(|a, b| {
                (a.claim_id.as_str(), &a.params).cmp(&(b.claim_id.as_str(), &b.params))
            });
            (name, reports)
        })
        .collect())
}

fn params_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for (name, value) in &report.params {
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{}={}", name, value);
    }
    out
}

fn status_text(status: VerifyStatus) -> &'static str {
    match status {
        VerifyStatus::Verified => "verified",
        VerifyStatus::Falsified => "FALSIFIED",
        VerifyStatus::Inconclusive => "inconclusive",
    }
}

fn print_sections(sections: &[Section], json: bool) -> Result<()> {
    if json {
        let all: Vec<&VerificationReport> =
            sections.iter().flat_map(|(_, r)| r.iter()).collect();
        println!("{}", serde_json::to_string_pretty(&all)?);
        return Ok(());
    }
    let mut verified = 0usize;
    let mut falsified = 0usize;
    let mut inconclusive = 0usize;
    for (name, reports) in sections {
        println!("== {} ==", name);
        println!(
            "{:<10} {:<30} {:<13} {:>6}  NOTES",
            "CLAIM", "PARAMS", "STATUS", "MS"
        );
        for report in reports {
            match report.status {
                VerifyStatus::Verified => verified += 1,
                VerifyStatus::Falsified => falsified += 1,
                VerifyStatus::Inconclusive => inconclusive += 1,
            }
            println!(
                "{:<10} {:<30} {:<13} {:>6}  {}",
                report.claim_id,
                params_text(report),
                status_text(report.status),
                report.elapsed.as_millis(),
                report.notes
            );
        }
        println!();
    }
    println!(
        "{} verified, {} falsified, {} inconclusive",
        verified, falsified, inconclusive
    );
    Ok(())
}

fn run_sweep(p_max: i64, q_max: i64, include_all: bool, json: bool) -> Result<()> {
    let mut rows = Vec::new();
    for p in 1..=p_max {
        for q in 2..=q_max {
            for r in 0..=q {
                for n in [-1i64, 1] {
                    let knot = TwistedTorusKnot::new(p, q, r, n);
                    let c = twisted_torus::classify(&knot)?;
                    if !include_all && c.verdict == Verdict::OutsideCriteria {
                        continue;
                    }
                    let braid = twisted_torus::ttk_braid(&knot)?;
                    let components = invariants::closure_components(&braid);
                    let surgery = twisted_torus::surgery_description(&knot)?;
                    rows.push(serde_json::json!({
                        "p": p,
                        "q": q,
                        "r": r,
                        "n": n,
                        "slope": surgery.slope,
                        "verdict": c.verdict.to_string(),
                        "seifert": c.seifert_h.map(|(k, d)| serde_json::json!({
                            "k": k,
                            "multiplicities": [d.multiplicities.0, d.multiplicities.1],
                        })),
                        "surgery": surgery_text(&surgery.kind),
                        "components": components,
                    }));
                }
            }
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        println!(
            "{:>4} {:>4} {:>4} {:>3} {:>8}  {:<19} {:<14} {:<14} components",
            "p", "q", "r", "n", "slope", "verdict", "seifert", "surgery"
        );
        for row in &rows {
            let int = |key: &str| row[key].as_i64().unwrap_or(0);
            let seifert = match &row["seifert"] {
                serde_json::Value::Null => "-".to_string(),
                s => format!(
                    "k={} ({},{})",
                    s["k"], s["multiplicities"][0], s["multiplicities"][1]
                ),
            };
            println!(
                "{:>4} {:>4} {:>4} {:>3} {:>8}  {:<19} {:<14} {:<14} {}",
                int("p"),
                int("q"),
                int("r"),
                int("n"),
                int("slope"),
                row["verdict"].as_str().unwrap_or("?"),
                seifert,
                row["surgery"].as_str().unwrap_or("?"),
                int("components")
            );
        }
        println!("{} rows", rows.len());
    }
    Ok(())
}
