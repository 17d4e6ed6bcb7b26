//! `mckay-lab`: command-line front end for `mckay-core`.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! or an internal consistency error occurs, 2 for usage errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mckay_core::acceptance::{self, Options};
use mckay_core::binpoly::{group_data, mckay_graph, GroupData, GroupId};
use mckay_core::coxspec::{affine_a_product, verify_spectrum, AFFINE_A_PRODUCT_MAX};
use mckay_core::diagrams::{cartan, parameters, DiagramType, Kind};
use mckay_core::exactalg::{series_expand, RationalFunction, DEFAULT_SERIES_ORDER};
use mckay_core::molien::{crosscheck_cartan, crosscheck_sigma, degree_rows, molien_series};
use mckay_core::poincare::{poincare_vector, z_polynomials};
use mckay_core::qcartan::verify_identities;
use mckay_core::reflhom::{catalog, find_entry, verify_entry, EntrySummary};
use mckay_core::{Error, Report};

#[derive(Parser)]
#[command(name = "mckay-lab", version, about = "Exact McKay correspondence computations")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Number of series coefficients printed by `--series` without a value
    /// and used by operator-inversion cross-checks.
    #[arg(long, global = true, env = "MCKAYLAB_SERIES_ORDER", default_value_t = DEFAULT_SERIES_ORDER)]
    series_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Affine,
    Finite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Chartable,
    Mckay,
    Lambda,
    /// `dim j` against `-deg P_1,j`; reported, not asserted.
    Degrees,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, labels and numerological parameters of a type.
    Diagram {
        #[arg(long = "type")]
        ty: DiagramType,
        #[arg(long, value_enum, default_value_t = KindArg::Affine)]
        kind: KindArg,
    },
    /// Determinant identities for one type or the whole catalog.
    Identities {
        /// A type such as `E8`, or `all`.
        #[arg(long = "type", default_value = "all")]
        ty: String,
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Poincare series of an affine simply-laced type.
    Poincare {
        #[arg(long = "type")]
        ty: DiagramType,
        /// Print the numerators `z_i(t)` instead of the closed forms.
        #[arg(long)]
        z: bool,
        /// Print series prefixes with this many coefficients.
        #[arg(long, num_args = 0..=1)]
        series: Option<Option<usize>>,
    },
    /// Character table, McKay graph or lambda lists of a group.
    Group {
        #[arg(long)]
        id: GroupId,
        #[arg(long, value_enum, default_value_t = Show::Chartable)]
        show: Show,
    },
    /// Multiplicity series of irrep `i` in the symmetric algebra of `j`.
    Molien {
        #[arg(long)]
        group: GroupId,
        #[arg(long = "i")]
        i: String,
        /// An irrep name or a sum such as `2 + 1'`.
        #[arg(long = "j")]
        j: String,
        #[arg(long, num_args = 0..=1)]
        series: Option<Option<usize>>,
    },
    /// Molien series against the Cartan solution and the operator-inversion
    /// series.
    Crosscheck {
        /// A group such as `O`, `BD4`, `C5`, or `all`.
        #[arg(long, default_value = "all")]
        group: String,
    },
    /// Coxeter element spectrum identities.
    Spectrum {
        /// A type such as `E7`, or `all`.
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Product over all reflection orderings for affine `A_l`.
    AffineAProduct {
        #[arg(long)]
        l: u32,
        /// Allow `l = 4`.
        #[arg(long)]
        slow: bool,
    },
    /// Homomorphisms into complex reflection groups.
    Reflhom {
        #[arg(long)]
        group: Option<GroupId>,
        #[arg(long)]
        irrep: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        verbose: bool,
    },
    /// Run every acceptance criterion.
    VerifyAll {
        /// Append per-criterion wall time.
        #[arg(long)]
        timing: bool,
        /// Print a timestamp header.
        #[arg(long)]
        timestamp: bool,
        /// Include the slow affine `A_4` enumeration.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::OutOfRange(_) | Error::InvalidRank { .. }
            | Error::NotSimplyLaced(_) | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// Rendered output plus the overall verdict.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                ),
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Diagram { ty, kind } => diagram(*ty, *kind),
        Command::Identities { ty, max_rank } => identities(ty, *max_rank),
        Command::Poincare { ty, z, series } => {
            poincare(*ty, *z, series.map(|n| n.unwrap_or(cli.series_order)))
        }
        Command::Group { id, show } => group(*id, *show),
        Command::Molien {
            group,
            i,
            j,
            series,
        } => molien(*group, i, j, series.map(|n| n.unwrap_or(cli.series_order))),
        Command::Crosscheck { group } => crosscheck(group, cli.series_order),
        Command::Spectrum { ty, max_rank } => spectrum(ty, *max_rank),
        Command::AffineAProduct { l, slow } => affine_product(*l, *slow),
        Command::Reflhom {
            group,
            irrep,
            all,
            verbose,
        } => reflhom(*group, irrep.as_deref(), *all, *verbose),
        Command::VerifyAll {
            timing,
            timestamp,
            slow,
            verbose,
        } => verify_all(*timing, *timestamp, *slow, *verbose),
    }
}

fn rf_json(f: &RationalFunction) -> Value {
    json!({ "text": f.to_factored_string(), "value": f })
}

fn reports_output(reports: Vec<Report>, verbose: bool) -> Output {
    let passed = reports.iter().all(Report::passed);
    let mut text = String::new();
    for r in &reports {
        if verbose || !r.passed() {
            text.push_str(&r.to_string());
        } else {
            let _ = writeln!(
                text,
                "{}: PASS ({}/{})",
                r.subject,
                r.count_passed(),
                r.checks.len()
            );
        }
    }
    let _ = writeln!(
        text,
        "{} of {} passed",
        reports.iter().filter(|r| r.passed()).count(),
        reports.len()
    );
    Output {
        text,
        json: json!({ "passed": passed, "reports": reports }),
        passed,
    }
}

fn types_arg(ty: &str, max_rank: usize) -> Result<Vec<DiagramType>, Failure> {
    if ty.eq_ignore_ascii_case("all") {
        Ok(DiagramType::catalog(max_rank)
            .into_iter()
            .filter(|d| d.rank() >= 1)
            .collect())
    } else {
        Ok(vec![ty.parse()?])
    }
}

fn diagram(dt: DiagramType, kind: KindArg) -> Result<Output, Failure> {
    let kind = match kind {
        KindArg::Affine => Kind::Affine,
        KindArg::Finite => Kind::Finite,
    };
    let c = cartan(dt, kind);
    let par = parameters(dt);
    let rows = c.entries.to_rows();
    let width = c.labels.iter().map(String::len).max().unwrap_or(1).max(2);
    let mut text = format!(
        "{dt} ({})\n",
        if kind == Kind::Affine { "affine" } else { "finite" }
    );
    for (label, row) in c.labels.iter().zip(&rows) {
        let _ = write!(text, "{label:>width$} |");
        for v in row {
            let _ = write!(text, " {v:>2}");
        }
        text.push('\n');
    }
    let half = |x: u32| {
        if x.is_multiple_of(2) {
            (x / 2).to_string()
        } else {
            format!("{x}/2")
        }
    };
    let _ = writeln!(
        text,
        "a = {}, b = {}, h = {}, p = {}, q = {}, r = {}",
        par.a,
        par.b,
        par.h,
        half(par.p2),
        half(par.q2),
        half(par.r2)
    );
    let json = json!({
        "diagram": dt,
        "kind": kind,
        "labels": c.labels,
        "matrix": rows,
        "affine_vertex": c.affine_vertex,
        "parameters": par,
    });
    Ok(Output::ok(text, json))
}

fn identities(ty: &str, max_rank: usize) -> Result<Output, Failure> {
    let reports = types_arg(ty, max_rank)?
        .into_iter()
        .map(verify_identities)
        .collect();
    Ok(reports_output(reports, true))
}

fn poincare(dt: DiagramType, z: bool, series: Option<usize>) -> Result<Output, Failure> {
    let mut text = String::new();
    let json = if z {
        let zp = z_polynomials(dt)?;
        let _ = writeln!(text, "z_i(t) = P_i(t) (1-t^{})(1-t^{}) for {dt}", zp.a, zp.b);
        for (l, p) in zp.labels.iter().zip(&zp.entries) {
            let _ = writeln!(text, "{l}: {p}");
        }
        serde_json::to_value(&zp).expect("serializable")
    } else {
        let pv = poincare_vector(dt)?;
        let mut rows = Vec::new();
        for (l, p) in pv.labels.iter().zip(&pv.entries) {
            let mut row = json!({ "label": l, "series": rf_json(p) });
            match series {
                Some(n) => {
                    let c = series_expand(p, n)?;
                    let shown: Vec<String> = c.iter().map(ToString::to_string).collect();
                    let _ = writeln!(text, "{l}: {}", shown.join(" "));
                    row["coefficients"] = json!(shown);
                }
                None => {
                    let _ = writeln!(text, "P_{l} = {}", p.to_factored_string());
                }
            }
            rows.push(row);
        }
        json!({ "diagram": dt, "entries": rows })
    };
    Ok(Output::ok(text, json))
}

fn group(id: GroupId, show: Show) -> Result<Output, Failure> {
    let g = group_data(id)?;
    match show {
        Show::Chartable => Ok(chartable(&g)),
        Show::Mckay => {
            let v = mckay_graph(&g);
            let mut text = format!("McKay graph of {id} (tensoring with the standard rep)\n");
            for (name, row) in g.irrep_names().iter().zip(v.adjacency.to_rows()) {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "{name:>4} | {}", cells.join(" "));
            }
            let _ = writeln!(
                text,
                "equals affine {}: {}\neigenvector property: {}",
                id.diagram(),
                v.labeled_match && v.matching.is_some(),
                v.eigenvectors
            );
            Ok(Output {
                text,
                passed: v.passed(),
                json: serde_json::to_value(&v).expect("serializable"),
            })
        }
        Show::Lambda => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, name) in g.irrep_names().iter().enumerate() {
                let x = mckay_core::binpoly::RepElement::basis(g.num_irreps(), i);
                let coeffs: Vec<String> =
                    g.lambda_series(&x)?.iter().map(|c| g.format_rep(c)).collect();
                let _ = writeln!(text, "lambda_-t {name}: {}", coeffs.join(" | "));
                rows.push(json!({ "irrep": name, "coefficients": coeffs }));
            }
            Ok(Output::ok(text, json!({ "group": id, "lambda": rows })))
        }
        Show::Degrees => {
            let rows = degree_rows(&g)?;
            let mut text = String::new();
            for r in &rows {
                let _ = writeln!(
                    text,
                    "{:>4}: dim {}, -deg P_1,j = {}{}",
                    r.irrep,
                    r.dim,
                    r.neg_degree,
                    if r.matches { "" } else { "  (differs)" }
                );
            }
            Ok(Output::ok(text, json!({ "group": id, "degrees": rows })))
        }
    }
}

fn chartable(g: &GroupData) -> Output {
    let mut cells: Vec<Vec<String>> = vec![];
    let mut header = vec![String::new()];
    header.extend(g.classes.iter().map(|c| format!("{}({})", c.name, c.size)));
    cells.push(header);
    for info in &g.irreps {
        let mut row = vec![info.name.clone()];
        row.extend(info.values.iter().map(|v| v.to_readable()));
        cells.push(row);
    }
    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut text = format!("{} (order {})\n", g.id, g.order);
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(text, "{}", line.join("  ").trim_end());
    }
    let json = json!({
        "group": g.id,
        "order": g.order,
        "classes": g.classes,
        "irreps": g.irreps,
    });
    Output::ok(text, json)
}

fn molien(id: GroupId, i: &str, j: &str, series: Option<usize>) -> Result<Output, Failure> {
    let g = group_data(id)?;
    let ii = g
        .irrep_index(i)
        .ok_or_else(|| Failure::Usage(format!("{id} has no irrep {i:?}")))?;
    let jr = g.parse_rep(j)?;
    let f = molien_series(&g, ii, &jr)?;
    let mut text = format!("P_{{{i},{j}}}(t) = {}\n", f.to_factored_string());
    let mut json = json!({ "group": id, "i": i, "j": j, "series": rf_json(&f) });
    if let Some(n) = series {
        let c: Vec<String> = series_expand(&f, n)?.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "{}", c.join(" "));
        json["coefficients"] = json!(c);
    }
    Ok(Output::ok(text, json))
}

fn crosscheck(group: &str, order: usize) -> Result<Output, Failure> {
    let groups: Vec<GroupId> = if group.eq_ignore_ascii_case("all") {
        let mut v: Vec<GroupId> = (1..=12).map(GroupId::Cyclic).collect();
        v.extend((2..=8).map(GroupId::BinaryDihedral));
        v.extend(GroupId::polyhedral());
        v
    } else {
        vec![group.parse()?]
    };
    let mut reports = Vec::new();
    for id in groups {
        let g = group_data(id)?;
        reports.push(crosscheck_cartan(&g)?);
        if GroupId::polyhedral().contains(&id) {
            reports.push(crosscheck_sigma(&g, order)?);
        }
    }
    Ok(reports_output(reports, false))
}

fn spectrum(ty: &str, max_rank: usize) -> Result<Output, Failure> {
    let mut reports = Vec::new();
    let mut summaries = Vec::new();
    for dt in types_arg(ty, max_rank)? {
        let (s, r) = verify_spectrum(dt)?;
        summaries.push(s);
        reports.push(r);
    }
    let single = summaries.len() == 1;
    let mut out = reports_output(reports, single);
    if single {
        let s = &summaries[0];
        out.text = format!(
            "det(t^2 I - c_fin) = {}\nexponents {:?}, h = {}\n{}",
            s.charpoly_t2, s.exponents, s.coxeter_number, out.text
        );
    }
    out.json["spectra"] = serde_json::to_value(&summaries).expect("serializable");
    Ok(out)
}

fn affine_product(l: u32, slow: bool) -> Result<Output, Failure> {
    if l == AFFINE_A_PRODUCT_MAX && !slow {
        return Err(Failure::Usage(format!("l = {l} needs --slow")));
    }
    let p = affine_a_product(l)?;
    let text = format!(
        "affine A{l}: {} orderings\nproduct = {}\nexpected = {}\n{}\n",
        p.orderings,
        p.lhs,
        p.rhs,
        if p.holds { "PASS" } else { "FAIL" }
    );
    Ok(Output {
        text,
        passed: p.holds,
        json: serde_json::to_value(&p).expect("serializable"),
    })
}

fn reflhom(
    group: Option<GroupId>,
    irrep: Option<&str>,
    all: bool,
    verbose: bool,
) -> Result<Output, Failure> {
    let entries: Vec<_> = match (all, group, irrep) {
        (true, _, _) => catalog()?.iter().collect(),
        (false, Some(g), Some(i)) => vec![find_entry(g, i)?],
        (false, Some(g), None) => catalog()?.iter().filter(|e| e.group == g).collect(),
        _ => {
            return Err(Failure::Usage(
                "give --all, --group, or --group with --irrep".into(),
            ))
        }
    };
    let mut reports = Vec::new();
    let mut summaries = Vec::new();
    for e in entries {
        reports.push(verify_entry(e)?);
        summaries.push(EntrySummary::from(e));
    }
    let mut out = reports_output(reports, verbose);
    out.json["entries"] = serde_json::to_value(&summaries).expect("serializable");
    Ok(out)
}

fn verify_all(timing: bool, timestamp: bool, slow: bool, verbose: bool) -> Result<Output, Failure> {
    let outcomes = acceptance::run_all(Options { slow });
    let passed = outcomes.iter().all(|o| o.passed);
    let mut text = String::new();
    let stamp = timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    if let Some(s) = stamp {
        let _ = writeln!(text, "# run at unix time {s}");
    }
    for o in &outcomes {
        let _ = write!(
            text,
            "[{}] {:>2}. {} ({}/{})",
            if o.passed { "PASS" } else { "FAIL" },
            o.number,
            o.title,
            o.report.count_passed(),
            o.report.checks.len()
        );
        if timing {
            let _ = write!(text, " {:.3}s", o.elapsed.as_secs_f64());
        }
        text.push('\n');
        if verbose || !o.passed {
            for c in &o.report.checks {
                if verbose || !c.passed {
                    let mark = if c.passed { "ok  " } else { "FAIL" };
                    let _ = writeln!(text, "       [{mark}] {}: {}", c.name, c.detail);
                }
            }
        }
    }
    let _ = writeln!(
        text,
        "{} of {} criteria passed",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    let criteria: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            let mut v = serde_json::to_value(o).expect("serializable");
            if timing {
                v["seconds"] = json!(o.elapsed.as_secs_f64());
            }
            v
        })
        .collect();
    let mut json = json!({ "passed": passed, "criteria": criteria });
    if let Some(s) = stamp {
        json["timestamp"] = json!(s);
    }
    Ok(Output { text, json, passed })
}
