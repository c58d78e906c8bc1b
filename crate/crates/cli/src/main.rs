//! Command-line front end for the avoidability library.
//!
//! Exit codes: 0 = avoidable / all comparisons equal / report produced,
//! 1 = unavoidable (or a comparison mismatch / conjecture counterexample),
//! 2 = usage or parse error, 3 = search budget exceeded.

use std::process::ExitCode;

use avoidable::classify::{
    conjecture_no_even_check, cyclic_saturated, dihedral_saturated, integers_partition_window,
    pq_saturated, quaternion_saturated, semidihedral_saturated, verify_family, ConjectureStatus,
    Family, IntSet, SaturatedCatalog, Verdict,
};
use avoidable::density::{
    block_density_check, density_report, eld_bound_check, evensum_obstruction,
    fibonacci_growth_check, golden_ratio_bound, SequenceKind, ELD_TOLERANCE,
};
use avoidable::{
    decide_avoidable, enumerate_saturated_sets, verify_avoiding_partition, AvoidabilityOutcome,
    Color, Error, Group, GroupSpec, SearchBudget, SubsetU,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "avoidable",
    version,
    about = "Decide avoidability of subsets in groups, Z, and N",
    after_help = "Group specs: cyclic:N, dsum:N1,N2,..., dihedral:N, semidihedral:M, \
                  quaternion:M, pq:P,Q,S, sym:N.\n\
                  Set literals are comma-separated canonical element labels; permutation \
                  cycles contain spaces, so quote them: --set \"(1 2)(3 4),(5 6)\".\n\
                  Sequence grammar: fib | pow:B | binom2 | rec:c1,c2/s1,s2 | list:a,b,...\n\
                  Exit codes: 0 avoidable/equal, 1 unavoidable/mismatch, 2 usage, 3 budget."
)]
struct Cli {
    #[command(flatten)]
    global: GlobalFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalFlags {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group order the saturated-set search will accept.
    #[arg(long, global = true)]
    budget_order: Option<u32>,
    /// Upper bound on avoidability checks performed during a search.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Reserved: every run is already deterministic; passing this is an error.
    #[arg(long, global = true)]
    seed_free: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a subset of a finite group is avoidable.
    Check {
        /// Group spec, e.g. cyclic:12 or sym:4.
        #[arg(long)]
        group: String,
        /// Comma-separated element labels, e.g. 0,1 or "(1 2)(3 4),(5 6)".
        #[arg(long)]
        set: String,
    },
    /// List the saturated (maximal avoidable) sets of a group.
    Saturated {
        #[arg(long)]
        group: String,
        /// oracle = exhaustive search, catalog = closed-form list, both = diff.
        #[arg(long, value_enum, default_value_t = Source::Both)]
        source: Source,
    },
    /// Compare the closed-form catalogs against exhaustive search over a family.
    Verify {
        /// cyclic | dihedral | semidihedral | quaternion | pq | abelian-max
        #[arg(long)]
        family: String,
        /// Inclusive parameter range lo..hi (cyclic, dihedral).
        #[arg(long)]
        range: Option<String>,
        /// Inclusive order range lo..hi (abelian-max uses the upper end).
        #[arg(long)]
        orders: Option<String>,
        /// Parameter list: m,m,... (semidihedral, quaternion) or p,q,s;p,q,s (pq).
        #[arg(long)]
        params: Option<String>,
    },
    /// Density diagnostics for a set of natural numbers.
    Density {
        /// Sequence: fib | pow:B | binom2 | rec:c1,c2/s1,s2 | list:a,b,...
        #[arg(long)]
        seq: String,
        /// Probe point; accepts 1e15-style scientific notation.
        #[arg(long, default_value = "1e6", value_parser = parse_n)]
        n: u64,
        /// Which measure to print (text mode prints all three without this).
        #[arg(long, value_enum)]
        measure: Option<Measure>,
        /// Extra check: evensum | eld-bound | growth | blocks.
        #[arg(long)]
        check: Option<String>,
    },
    /// Produce an avoiding 2-coloring of [-N, N] for a finite subset of Z.
    Partition {
        /// Comma-separated integers, e.g. 0,3,6 or -4,0.
        #[arg(long)]
        set: String,
        /// Window radius N; must be at least twice the largest magnitude.
        #[arg(long)]
        window: i64,
    },
    /// Search an abelian group for saturated sets with no even element
    /// outside the expected parity forms.
    Conjecture {
        /// Moduli of the direct sum, e.g. 2,3 for Z/2 + Z/3.
        #[arg(long)]
        moduli: String,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Catalog,
    Both,
}

#[derive(Copy, Clone, ValueEnum)]
enum Measure {
    D,
    Eld,
    Ld,
}

fn parse_n(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("cannot parse count {s:?}"))?;
    if !(0.0..=1.8e18).contains(&v) || v.fract() != 0.0 {
        return Err(format!("{s:?} is not a non-negative integer within range"));
    }
    Ok(v as u64)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.seed_free {
        eprintln!("error: --seed-free is reserved; runs are already deterministic");
        return ExitCode::from(2);
    }
    let mut budget = SearchBudget::default();
    if let Some(order) = cli.global.budget_order {
        budget.max_order = order;
    }
    if let Some(nodes) = cli.global.budget_nodes {
        budget.max_expansions = nodes;
    }
    let format = cli.global.format;
    let result = match cli.command {
        Command::Check { group, set } => cmd_check(&group, &set, format),
        Command::Saturated { group, source } => cmd_saturated(&group, source, &budget, format),
        Command::Verify { family, range, orders, params } => {
            cmd_verify(&family, range.as_deref(), orders.as_deref(), params.as_deref(), &budget, format)
        }
        Command::Density { seq, n, measure, check } => {
            cmd_density(&seq, n, measure, check.as_deref(), format)
        }
        Command::Partition { set, window } => cmd_partition(&set, window, format),
        Command::Conjecture { moduli } => cmd_conjecture(&moduli, &budget, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

/// Splits a set literal at commas that sit outside parentheses, so tuple
/// labels "(a,b)" and permutation labels "(1 2)(3 4)" survive intact.
fn split_set_literal(input: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in input.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

fn parse_group_and_set(group: &str, set: &str) -> Result<(Group, SubsetU), Error> {
    let spec = GroupSpec::parse(group)?;
    let g = Group::build(spec)?;
    let mut members = Vec::new();
    for label in split_set_literal(set) {
        members.push(g.parse_element(&label)?.0);
    }
    let u = SubsetU::new(members, g.order())?;
    Ok((g, u))
}

fn emit(format: Format, doc: Value, text: String) {
    match format {
        Format::Text => println!("{text}"),
        Format::Structured => {
            let mut wrapped = json!({ "schema_version": 1 });
            wrapped.as_object_mut().unwrap().extend(doc.as_object().cloned().unwrap_or_default());
            println!("{}", serde_json::to_string_pretty(&wrapped).unwrap());
        }
    }
}

fn color_sides(g: &Group, colors: &[Color]) -> (Vec<String>, Vec<String>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, c) in colors.iter().enumerate() {
        let label = g.format_element(avoidable::Element(i as u32));
        match c {
            Color::A => a.push(label),
            Color::B => b.push(label),
        }
    }
    (a, b)
}

fn cmd_check(group: &str, set: &str, format: Format) -> Result<u8, Error> {
    let (g, u) = parse_group_and_set(group, set)?;
    match decide_avoidable(&g, &u) {
        AvoidabilityOutcome::Avoidable(w) => {
            // Never emit an unchecked certificate.
            assert!(verify_avoiding_partition(&g, &u, &w), "witness failed re-verification");
            let (a, b) = color_sides(&g, w.colors());
            emit(
                format,
                json!({
                    "command": "check", "group": group, "set": g.format_subset(&u),
                    "verdict": "avoidable",
                    "witness": { "A": a, "B": b },
                }),
                format!(
                    "avoidable\n  A = {{{}}}\n  B = {{{}}}",
                    a.join(","),
                    b.join(",")
                ),
            );
            Ok(0)
        }
        AvoidabilityOutcome::Unavoidable(cycle) => {
            let labels: Vec<String> =
                cycle.0.iter().map(|&i| g.format_element(avoidable::Element(i))).collect();
            emit(
                format,
                json!({
                    "command": "check", "group": group, "set": g.format_subset(&u),
                    "verdict": "unavoidable",
                    "certificate": labels,
                }),
                format!("unavoidable\n  odd cycle: {}", labels.join(" - ")),
            );
            Ok(1)
        }
    }
}

fn catalog_for(spec: &GroupSpec) -> Result<SaturatedCatalog, Error> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic_saturated(*n),
        GroupSpec::Dihedral(n) => dihedral_saturated(*n),
        GroupSpec::SemiDihedral(m) => semidihedral_saturated(*m),
        GroupSpec::GeneralizedQuaternion(m) => quaternion_saturated(*m),
        GroupSpec::NonabelianPQ { p, q, s } => pq_saturated(*p, *q, *s),
        other => Err(Error::InvalidInput(format!(
            "no closed-form catalog for {other}; use --source oracle"
        ))),
    }
}

fn cmd_saturated(group: &str, source: Source, budget: &SearchBudget, format: Format) -> Result<u8, Error> {
    let spec = GroupSpec::parse(group)?;
    let g = Group::build(spec.clone())?;
    let fmt_sets = |sets: &[SubsetU]| -> Vec<String> {
        sets.iter().map(|s| g.format_subset(s)).collect()
    };
    let oracle_sets = |_: ()| -> Result<Vec<SubsetU>, Error> {
        let mut sets = enumerate_saturated_sets(&g, budget)?;
        sets.sort();
        Ok(sets)
    };
    match source {
        Source::Oracle => {
            let sets = oracle_sets(())?;
            let labels = fmt_sets(&sets);
            emit(
                format,
                json!({ "command": "saturated", "group": group, "source": "oracle",
                        "count": labels.len(), "sets": labels }),
                format!("{} saturated sets (oracle)\n{}", labels.len(), labels.join("\n")),
            );
            Ok(0)
        }
        Source::Catalog => {
            let mut sets = catalog_for(&spec)?.sets();
            sets.sort();
            let labels = fmt_sets(&sets);
            emit(
                format,
                json!({ "command": "saturated", "group": group, "source": "catalog",
                        "count": labels.len(), "sets": labels }),
                format!("{} saturated sets (catalog)\n{}", labels.len(), labels.join("\n")),
            );
            Ok(0)
        }
        Source::Both => {
            let mut catalog = catalog_for(&spec)?.sets();
            catalog.sort();
            let oracle = oracle_sets(())?;
            let only_catalog: Vec<SubsetU> =
                catalog.iter().filter(|s| !oracle.contains(s)).cloned().collect();
            let only_oracle: Vec<SubsetU> =
                oracle.iter().filter(|s| !catalog.contains(s)).cloned().collect();
            let agree = only_catalog.is_empty() && only_oracle.is_empty();
            let labels = fmt_sets(&oracle);
            let mut text = format!("{} saturated sets\n{}", labels.len(), labels.join("\n"));
            if agree {
                text.push_str("\ndiff: empty (catalog agrees with search)");
            } else {
                text.push_str(&format!(
                    "\ndiff: catalog-only {:?}, oracle-only {:?}",
                    fmt_sets(&only_catalog),
                    fmt_sets(&only_oracle)
                ));
            }
            emit(
                format,
                json!({ "command": "saturated", "group": group, "source": "both",
                        "count": labels.len(), "sets": labels,
                        "diff": { "catalog_only": fmt_sets(&only_catalog),
                                   "oracle_only": fmt_sets(&only_oracle) },
                        "agree": agree }),
                text,
            );
            Ok(if agree { 0 } else { 1 })
        }
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), Error> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::InvalidInput(format!("range must look like lo..hi, got {s:?}")))?;
    let lo = lo.trim().parse::<u32>().map_err(|_| Error::InvalidInput(format!("bad range start {lo:?}")))?;
    let hi = hi.trim().parse::<u32>().map_err(|_| Error::InvalidInput(format!("bad range end {hi:?}")))?;
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<u32>().map_err(|_| Error::InvalidInput(format!("bad integer {p:?}")))
        })
        .collect()
}

fn cmd_verify(
    family: &str,
    range: Option<&str>,
    orders: Option<&str>,
    params: Option<&str>,
    budget: &SearchBudget,
    format: Format,
) -> Result<u8, Error> {
    let need_range = || {
        range
            .ok_or_else(|| Error::InvalidInput(format!("--family {family} needs --range lo..hi")))
            .and_then(parse_range)
    };
    let need_params = || {
        params.ok_or_else(|| Error::InvalidInput(format!("--family {family} needs --params")))
    };
    let fam = match family {
        "cyclic" => {
            let (lo, hi) = need_range()?;
            Family::Cyclic { lo, hi }
        }
        "dihedral" => {
            let (lo, hi) = need_range()?;
            Family::Dihedral { lo, hi }
        }
        "semidihedral" => Family::SemiDihedral { params: parse_u32_list(need_params()?)? },
        "quaternion" => Family::Quaternion { params: parse_u32_list(need_params()?)? },
        "pq" => {
            let mut triples = Vec::new();
            for part in need_params()?.split(';') {
                let v = parse_u32_list(part)?;
                if v.len() != 3 {
                    return Err(Error::InvalidInput(format!(
                        "pq parameters are p,q,s triples; got {part:?}"
                    )));
                }
                triples.push((v[0], v[1], v[2]));
            }
            Family::Pq { params: triples }
        }
        "abelian-max" => {
            let spec = orders.ok_or_else(|| {
                Error::InvalidInput("--family abelian-max needs --orders lo..hi".into())
            })?;
            let (_, hi) = parse_range(spec)?;
            Family::AbelianMax { max_order: hi }
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown family {other:?}; expected cyclic, dihedral, semidihedral, quaternion, pq, or abelian-max"
            )))
        }
    };
    let report = verify_family(&fam, budget)?;
    let budget_hit = report
        .instances
        .iter()
        .any(|i| matches!(i.verdict, Verdict::Budget(_)));
    emit(
        format,
        json!({ "command": "verify", "family": family,
                "all_equal": report.all_equal(),
                "report": serde_json::to_value(&report).unwrap() }),
        report.render_text(),
    );
    Ok(if budget_hit {
        3
    } else if report.all_equal() {
        0
    } else {
        1
    })
}

fn cmd_density(
    seq: &str,
    n: u64,
    measure: Option<Measure>,
    check: Option<&str>,
    format: Format,
) -> Result<u8, Error> {
    let sequence = SequenceKind::parse(seq)?;
    if let Some(check) = check {
        return cmd_density_check(&sequence, seq, n, check, format);
    }
    let report = density_report(&sequence, n)?;
    let fmt_opt = |v: Option<f64>| v.map_or("n/a".to_string(), |x| format!("{x:.6}"));
    let text = match measure {
        Some(Measure::D) => format!("d = {:.6}", report.d),
        Some(Measure::Eld) => format!("eld = {}", fmt_opt(report.eld)),
        Some(Measure::Ld) => format!("ld = {}", fmt_opt(report.ld)),
        None => format!(
            "n = {}\nU(n) = {}  U2(n) = {}\nd = {:.6}\neld = {}  (window max {})\nld = {}  (window max {})",
            report.n,
            report.count,
            report.even_count,
            report.d,
            fmt_opt(report.eld),
            fmt_opt(report.eld_window_max),
            fmt_opt(report.ld),
            fmt_opt(report.ld_window_max),
        ),
    };
    emit(
        format,
        json!({ "command": "density", "seq": seq,
                "report": serde_json::to_value(&report).unwrap() }),
        text,
    );
    Ok(0)
}

fn cmd_density_check(
    sequence: &SequenceKind,
    seq: &str,
    n: u64,
    check: &str,
    format: Format,
) -> Result<u8, Error> {
    match check {
        "evensum" => {
            // Materialize a prefix; obstruction search is quadratic.
            let cap = n.min(1_000_000);
            let elems = sequence.elements_up_to(cap);
            match evensum_obstruction(&elems) {
                Some(obs) => {
                    emit(
                        format,
                        json!({ "command": "density", "seq": seq, "check": "evensum",
                                "obstruction": serde_json::to_value(&obs).unwrap() }),
                        format!(
                            "obstruction ({}, {}, {}): even pairwise sums, witness triangle {:?}",
                            obs.triple.0, obs.triple.1, obs.triple.2, obs.witness
                        ),
                    );
                    Ok(1)
                }
                None => {
                    emit(
                        format,
                        json!({ "command": "density", "seq": seq, "check": "evensum",
                                "obstruction": Value::Null, "elements_scanned": elems.len() }),
                        format!("no obstruction among the {} elements up to {cap}", elems.len()),
                    );
                    Ok(0)
                }
            }
        }
        "eld-bound" => {
            let report = eld_bound_check(sequence, n)?;
            let text = if report.passed() {
                format!(
                    "eld bound holds at n = {n} (bound {:.6} + tolerance {ELD_TOLERANCE})",
                    golden_ratio_bound()
                )
            } else {
                format!("eld bound FAILED at n = {n}: {:?}", report.outcome)
            };
            emit(
                format,
                json!({ "command": "density", "seq": seq, "check": "eld-bound",
                        "report": serde_json::to_value(&report).unwrap() }),
                text,
            );
            Ok(if report.passed() { 0 } else { 1 })
        }
        "growth" => {
            let report = fibonacci_growth_check(sequence, 20)?;
            let text = match &report.failure {
                None => format!(
                    "growth bound holds: {} even elements grow at least Fibonacci-fast from ({}, {})",
                    report.checked, report.x, report.y
                ),
                Some(f) => format!("growth bound FAILED: {f:?}"),
            };
            emit(
                format,
                json!({ "command": "density", "seq": seq, "check": "growth",
                        "report": serde_json::to_value(&report).unwrap() }),
                text,
            );
            Ok(if report.failure.is_none() { 0 } else { 1 })
        }
        "blocks" => {
            let even = sequence
                .elements_up_to(n.min(1_000_000))
                .into_iter()
                .find(|v| v % 2 == 0)
                .ok_or_else(|| Error::InvalidInput("set has no even element to block on".into()))?;
            let report = block_density_check(sequence, even, 1000)?;
            let text = match &report.violation {
                None => format!(
                    "each of {} blocks of size {} holds at most two elements",
                    report.blocks_checked, report.block_size
                ),
                Some(v) => format!("block bound FAILED: {v:?}"),
            };
            emit(
                format,
                json!({ "command": "density", "seq": seq, "check": "blocks",
                        "report": serde_json::to_value(&report).unwrap() }),
                text,
            );
            Ok(if report.violation.is_none() { 0 } else { 1 })
        }
        other => Err(Error::InvalidInput(format!(
            "unknown check {other:?}; expected evensum, eld-bound, growth, or blocks"
        ))),
    }
}

fn cmd_partition(set: &str, window: i64, format: Format) -> Result<u8, Error> {
    let mut members = Vec::new();
    for part in set.split(',') {
        members.push(part.trim().parse::<i64>().map_err(|_| {
            Error::InvalidInput(format!("bad integer {part:?} in set literal"))
        })?);
    }
    let u = IntSet::new(members);
    match integers_partition_window(&u, window) {
        Ok(coloring) => {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for v in -window..=window {
                match coloring.color(v).unwrap() {
                    Color::A => a.push(v),
                    Color::B => b.push(v),
                }
            }
            emit(
                format,
                json!({ "command": "partition", "set": u.members(), "window": window,
                        "verdict": "avoidable", "A": a, "B": b }),
                format!("avoidable on [-{window}, {window}]\n  A = {a:?}\n  B = {b:?}"),
            );
            Ok(0)
        }
        Err(Error::NotAvoidable) => {
            emit(
                format,
                json!({ "command": "partition", "set": u.members(), "window": window,
                        "verdict": "unavoidable" }),
                "unavoidable: the set lies outside every avoidable family in Z".to_string(),
            );
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn cmd_conjecture(moduli: &str, budget: &SearchBudget, format: Format) -> Result<u8, Error> {
    let moduli = parse_u32_list(moduli)?;
    let report = conjecture_no_even_check(&moduli, budget)?;
    let (text, code) = match &report.status {
        ConjectureStatus::Pass => (
            format!(
                "{}: {} saturated sets, {} with no even element, all of parity form",
                report.spec, report.saturated_checked, report.no_even_sets
            ),
            0,
        ),
        ConjectureStatus::Counterexample(sets) => (
            format!("{}: counterexamples found: {sets:?}", report.spec),
            1,
        ),
    };
    emit(
        format,
        json!({ "command": "conjecture",
                "report": serde_json::to_value(&report).unwrap() }),
        text,
    );
    Ok(code)
}
