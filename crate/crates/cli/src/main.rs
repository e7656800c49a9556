//! `autcurve`: batch front end for the autcurve library.

use autcurve::classify::{classify, ClassifyOptions, CSV_HEADER};
use autcurve::exec::with_threads;
use autcurve::group::character::CharacterTable;
use autcurve::group::Catalog;
use autcurve::maximality::{fuse_surface_count, maximality_verdict};
use autcurve::search::{
    count_epimorphism_classes, count_epimorphisms, count_torsion_free_homs, count_torsion_free_homs_character,
    SearchOptions, DEFAULT_NODE_CAP,
};
use autcurve::signature::{
    exceptional_families, hurwitz_bound, large_group_threshold, poschar_bound, poschar_element_order_bound, wiman_bound,
};
use autcurve::superelliptic::{
    char2_hyperelliptic_groups, char2_ramification_types, genus34_superelliptic_lists, parse_field, resolve_group_ids,
    table1_function, table1_generators, verify_invariance, verify_ramification, Table1Case,
};
use autcurve::weierstrass::{enumerate_gap_sequences, total_weight, weierstrass_point_count_bounds};
use autcurve::{Error, Exec, Signature};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "autcurve", version, about = "Group actions on compact Riemann surfaces and algebraic curves")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Group catalog (JSON lines); defaults to the bundled catalog.
    #[arg(long, env = "AUTCURVE_CATALOG", global = true)]
    catalog: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run every search on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Node cap for each generating-vector search.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP, global = true)]
    node_cap: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Every (group, signature) pair acting on a surface of the given genus.
    Classify {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        max_order: Option<usize>,
        /// Restrict to these orders (repeatable).
        #[arg(long = "order")]
        orders: Vec<usize>,
        /// Add hom counts and epimorphism classes.
        #[arg(long)]
        counts: bool,
        /// Add the maximality verdict.
        #[arg(long)]
        maximality: bool,
    },
    /// Whether some action with this group and signature is a full automorphism group.
    Maximal(GroupSig),
    /// Homomorphisms with torsion-free kernel, epimorphisms and classes.
    CountHoms {
        #[command(flatten)]
        target: GroupSig,
        /// Character table (JSON) for the character-sum count.
        #[arg(long)]
        char_table: Option<PathBuf>,
    },
    /// Number of surfaces with the given action.
    Surfaces(GroupSig),
    /// Weierstrass gap sequences of a genus.
    GapSeqs {
        #[arg(long)]
        genus: usize,
        /// Include weights.
        #[arg(long)]
        weights: bool,
    },
    /// Superelliptic data.
    #[command(subcommand)]
    Superelliptic(Super),
    /// Bounds on automorphism group orders.
    Bounds {
        #[arg(long)]
        genus: usize,
        /// Characteristic for the element-order bound.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Catalog maintenance.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args)]
struct GroupSig {
    /// Structural name (C5, D12, PSL(2,7)) or catalog id `order:index`.
    #[arg(long)]
    group: String,
    /// Signature such as `0;5,5,5`.
    #[arg(long)]
    signature: String,
}

#[derive(Args)]
struct CaseArgs {
    /// Row 1-9 of the reduced-group table.
    #[arg(long)]
    row: u8,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    /// Field `p` or `p^s`; defaults to the smallest field that works.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Super {
    /// The invariant rational function of a reduced group.
    Table1(CaseArgs),
    /// Invariance under the Möbius generators and the ramification tuple.
    Verify(CaseArgs),
    /// Artin-Schreier ramification types and groups in characteristic 2.
    Char2 {
        #[arg(long)]
        genus: usize,
    },
    /// Automorphism groups of genus 3 and 4 superelliptic curves.
    Lists {
        #[arg(long)]
        genus: usize,
        /// Characteristic, 0 allowed.
        #[arg(long)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Checks non-isomorphism within orders and completeness counts.
    Validate,
    /// Lists catalog entries.
    Info {
        #[arg(long)]
        order: Option<usize>,
    },
}

/// Rows for CSV output plus the JSON payload.
struct Output {
    json: Value,
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
    text: Option<String>,
    /// Set when the output is complete but some search hit the node cap.
    capped: Option<String>,
}

impl Output {
    fn json(v: impl Serialize) -> Result<Output, Error> {
        Ok(Output { json: to_value(v)?, table: None, text: None, capped: None })
    }
}

fn to_value(v: impl Serialize) -> Result<Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Inconsistency(e.to_string()))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) => 1,
        Error::Resource { .. } => 3,
        Error::Inconsistency(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return ExitCode::SUCCESS;
            }
            eprintln!("\n{}", Cli::command().render_help());
            return ExitCode::from(1);
        }
    };
    let threads = cli.run.threads;
    match with_threads(threads, || run(&cli)) {
        Ok(out) => match emit(&cli, &out) {
            Ok(()) => match out.capped {
                Some(msg) => {
                    eprintln!("warning: {msg}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            },
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(exit_code(&e))
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Maximal(_) => "maximal",
        Command::CountHoms { .. } => "count-homs",
        Command::Surfaces(_) => "surfaces",
        Command::GapSeqs { .. } => "gap-seqs",
        Command::Superelliptic(Super::Table1(_)) => "superelliptic table1",
        Command::Superelliptic(Super::Verify(_)) => "superelliptic verify",
        Command::Superelliptic(Super::Char2 { .. }) => "superelliptic char2",
        Command::Superelliptic(Super::Lists { .. }) => "superelliptic lists",
        Command::Bounds { .. } => "bounds",
        Command::Catalog(CatalogCmd::Validate) => "catalog validate",
        Command::Catalog(CatalogCmd::Info { .. }) => "catalog info",
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Error> {
    let rendered = render(cli, out)?;
    let mut w = std::io::stdout().lock();
    match w.write_all(rendered.as_bytes()).and_then(|_| w.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn pretty(v: &Value) -> Result<String, Error> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Inconsistency(e.to_string()))
}

fn render(cli: &Cli, out: &Output) -> Result<String, Error> {
    match cli.run.format {
        Format::Json => {
            let envelope = json!({ "command": command_name(&cli.command), "version": env!("CARGO_PKG_VERSION"), "result": &out.json });
            Ok(pretty(&envelope)? + "\n")
        }
        Format::Csv => {
            let (header, rows) = out.table.as_ref().ok_or_else(|| {
                Error::Parameter(format!("{} has no CSV form; use --format json", command_name(&cli.command)))
            })?;
            let mut cw = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            cw.write_record(header).map_err(io)?;
            for r in rows {
                cw.write_record(r).map_err(io)?;
            }
            let bytes = cw.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Inconsistency(e.to_string()))
        }
        Format::Text => match &out.text {
            Some(t) => Ok(t.clone()),
            None => Ok(pretty(&out.json)? + "\n"),
        },
    }
}

fn search_opts(run: &RunConfig) -> SearchOptions {
    SearchOptions { node_cap: run.node_cap, exec: exec(run) }
}

fn exec(run: &RunConfig) -> Exec {
    if run.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn parse_sig(s: &str) -> Result<Signature, Error> {
    s.parse()
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let owned;
    let catalog: &Catalog = match &cli.run.catalog {
        Some(p) => {
            owned = Catalog::load(p)?;
            &owned
        }
        None => Catalog::bundled(),
    };
    let run = &cli.run;
    match &cli.command {
        Command::Classify { genus, max_order, orders, counts, maximality } => {
            let opts = ClassifyOptions {
                max_order: *max_order,
                orders: (!orders.is_empty()).then(|| orders.clone()),
                node_cap: run.node_cap,
                exec: exec(run),
                counts: *counts,
                maximality: *maximality,
            };
            let report = classify(*genus, catalog, &opts)?;
            let rows = report.records.iter().map(|r| r.csv_row()).collect::<Vec<_>>();
            let text = report
                .records
                .iter()
                .map(|r| format!("{}\t{}\t({})\n", r.order, r.group, r.signature))
                .collect::<String>();
            let capped = (!report.undecided.is_empty()).then(|| {
                format!("{} pairs undecided at node cap {}; raise --node-cap", report.undecided.len(), run.node_cap)
            });
            Ok(Output {
                json: to_value(&report)?,
                table: Some((CSV_HEADER.iter().map(|s| s.to_string()).collect(), rows)),
                text: Some(text),
                capped,
            })
        }
        Command::Maximal(gs) => {
            let g = catalog.resolve(&gs.group)?;
            let sig = parse_sig(&gs.signature)?;
            let report = maximality_verdict(&g, &sig, catalog, &search_opts(run))?;
            let text = format!("{}\n", report.verdict);
            let mut json = to_value(&report)?;
            json["group"] = json!(g.label());
            json["signature"] = json!(sig.to_string());
            Ok(Output { json, table: None, text: Some(text), capped: None })
        }
        Command::CountHoms { target, char_table } => {
            let g = catalog.resolve(&target.group)?;
            let sig = parse_sig(&target.signature)?;
            let homs = count_torsion_free_homs(&g, &sig);
            let epis = count_epimorphisms(&g, &sig)?;
            let classes = count_epimorphism_classes(&g, &sig)?;
            let character = match char_table {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let table = CharacterTable::from_json(&text, Some(&g))?;
                    let c = count_torsion_free_homs_character(&table, &sig)?;
                    if c != homs {
                        return Err(Error::Inconsistency(format!(
                            "character count {c} differs from direct count {homs}"
                        )));
                    }
                    Some(c)
                }
                None => None,
            };
            let row =
                vec![g.label().to_string(), sig.to_string(), homs.to_string(), epis.to_string(), classes.to_string()];
            Ok(Output {
                json: json!({
                    "group": g.label(),
                    "signature": sig.to_string(),
                    "hom_count": homs.to_string(),
                    "epimorphisms": epis.to_string(),
                    "epi_classes": classes.to_string(),
                    "character_count": character.map(|c| c.to_string()),
                }),
                table: Some((
                    ["group", "signature", "hom_count", "epimorphisms", "epi_classes"].map(String::from).to_vec(),
                    vec![row],
                )),
                text: Some(format!("{homs}\n")),
                capped: None,
            })
        }
        Command::Surfaces(gs) => {
            let g = catalog.resolve(&gs.group)?;
            let sig = parse_sig(&gs.signature)?;
            let r = fuse_surface_count(&g, &sig, catalog, &search_opts(run))?;
            let mut json = to_value(&r)?;
            json["group"] = json!(g.label());
            json["signature"] = json!(sig.to_string());
            json["class_count"] = json!(r.class_count.to_string());
            Ok(Output { json, table: None, text: None, capped: None })
        }
        Command::GapSeqs { genus, weights } => {
            let seqs = enumerate_gap_sequences(*genus)?;
            let rows: Vec<Value> = seqs
                .iter()
                .map(|s| {
                    let mut v = json!({ "gaps": s.gaps, "nongaps": s.nongaps() });
                    if *weights {
                        v["weight"] = json!(s.weight());
                    }
                    v
                })
                .collect();
            let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let mut header = vec!["gaps".to_string(), "nongaps".to_string()];
            if *weights {
                header.push("weight".into());
            }
            let table = seqs
                .iter()
                .map(|s| {
                    let mut r = vec![join(&s.gaps), join(&s.nongaps())];
                    if *weights {
                        r.push(s.weight().to_string());
                    }
                    r
                })
                .collect();
            let text = seqs.iter().map(|s| format!("{}\n", join(&s.gaps))).collect();
            Ok(Output {
                json: json!({ "genus": genus, "sequences": rows }),
                table: Some((header, table)),
                text: Some(text),
                capped: None,
            })
        }
        Command::Superelliptic(sub) => superelliptic(sub, catalog),
        Command::Bounds { genus, p } => {
            let g = *genus;
            let (lo, hi) = weierstrass_point_count_bounds(g)?;
            let element_order = p.map(|p| poschar_element_order_bound(g, p)).transpose()?;
            let families = exceptional_families(g as u64)?;
            Output::json(json!({
                "genus": g,
                "hurwitz": hurwitz_bound(g)?.to_string(),
                "wiman_cyclic": wiman_bound(g)?.to_string(),
                "large_group_threshold": large_group_threshold(g)?.to_string(),
                "positive_characteristic": poschar_bound(g)?.to_string(),
                "element_order": element_order.map(|b| b.to_string()),
                "weierstrass_points": { "lower": lo.to_string(), "upper": hi.to_string() },
                "total_weight": total_weight(g).to_string(),
                "exceptional_families": families,
            }))
        }
        Command::Catalog(CatalogCmd::Validate) => {
            catalog.validate()?;
            let complete: Vec<usize> = catalog.complete_orders().collect();
            Output::json(json!({ "valid": true, "entries": catalog.entries().len(), "complete_orders": complete }))
        }
        Command::Catalog(CatalogCmd::Info { order }) => {
            let entries: Vec<_> = catalog.entries().iter().filter(|e| order.is_none_or(|n| e.id.order == n)).collect();
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    vec![
                        e.id.to_string(),
                        e.label.clone(),
                        e.id.order.to_string(),
                        catalog.is_complete(e.id.order).to_string(),
                        e.source.clone(),
                    ]
                })
                .collect();
            let json: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id.to_string(),
                        "label": e.label,
                        "order": e.id.order,
                        "complete_order": catalog.is_complete(e.id.order),
                        "source": e.source,
                    })
                })
                .collect();
            Ok(Output {
                json: Value::Array(json),
                table: Some((["id", "label", "order", "complete_order", "source"].map(String::from).to_vec(), rows)),
                text: None,
                capped: None,
            })
        }
    }
}

fn case_and_field(a: &CaseArgs) -> Result<(Table1Case, autcurve::superelliptic::Field), Error> {
    let case = Table1Case::from_row(a.row, a.m, a.t, a.q, a.p)?;
    let field = match &a.field {
        Some(s) => {
            let f = parse_field(s)?;
            if f.characteristic() != a.p {
                return Err(Error::Parameter(format!("field {s} does not have characteristic {}", a.p)));
            }
            f
        }
        None => case.action_field(a.p)?,
    };
    Ok((case, field))
}

fn superelliptic(sub: &Super, catalog: &Catalog) -> Result<Output, Error> {
    match sub {
        Super::Table1(a) => {
            let (case, f) = case_and_field(a)?;
            let z = table1_function(case, &f)?;
            let gens = match table1_generators(case, &f) {
                Ok(g) => g.iter().map(|m| m.render(&f)).collect(),
                Err(_) => Vec::new(),
            };
            Output::json(json!({
                "case": case,
                "row": case.row(),
                "group": case.to_string(),
                "field": f.info(),
                "z": z.render(&f),
                "numerator": z.num,
                "denominator": z.den,
                "degree": z.degree(),
                "group_order": case.group_order(a.p),
                "ramification": case.ramification(a.p),
                "generators": gens,
            }))
        }
        Super::Verify(a) => {
            let (case, f) = case_and_field(a)?;
            let z = table1_function(case, &f)?;
            let gens = table1_generators(case, &f)?;
            let inv = verify_invariance(&f, &z, &gens)?;
            let ram = verify_ramification(case, a.p)?;
            Output::json(json!({
                "case": case,
                "group": case.to_string(),
                "group_order": case.group_order(a.p),
                "invariance": inv,
                "ramification": ram,
            }))
        }
        Super::Char2 { genus } => {
            let groups = match char2_hyperelliptic_groups(*genus) {
                Ok(gs) => Some(gs),
                Err(Error::Unsupported(_)) => None,
                Err(e) => return Err(e),
            };
            Output::json(json!({
                "genus": genus,
                "ramification_types": char2_ramification_types(*genus),
                "groups": groups,
            }))
        }
        Super::Lists { genus, p } => {
            let ids = genus34_superelliptic_lists(*genus, *p)?;
            let r = resolve_group_ids(&ids, catalog);
            let resolved: Vec<Value> =
                r.resolved.iter().map(|(id, label)| json!({ "id": id.to_string(), "label": label })).collect();
            let unresolved: Vec<String> = r.unresolved.iter().map(|(o, i)| format!("({o},{i})")).collect();
            let all: Vec<String> = ids.iter().map(|(o, i)| format!("({o},{i})")).collect();
            Output::json(
                json!({ "genus": genus, "p": p, "groups": all, "resolved": resolved, "unresolved": unresolved }),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Parameter("x".into())), 1);
        assert_eq!(exit_code(&Error::Validation("x".into())), 2);
        assert_eq!(exit_code(&Error::Domain("x".into())), 2);
        assert_eq!(exit_code(&Error::Resource { what: "nodes".into(), cap: 1 }), 3);
        assert_eq!(exit_code(&Error::Inconsistency("x".into())), 4);
    }

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
