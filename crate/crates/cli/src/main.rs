//! `hamcert`: solve, verify and sweep Hamiltonian cycles in Cayley graphs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use hamcert::catalog::{
    builtin_catalog, parametric_group, route, CatalogEntry, CertStore, StoreError, CATALOG_MAX_ORDER, DEFAULT_GENSET_CAP,
};
use hamcert::cayley::CayleyGraph;
use hamcert::constructions::{solve_with, Certificate, SolveError, SolveOptions};
use hamcert::group::{parse_cycles, Elem, GroupTable};
use hamcert::oracle::{find_hamiltonian_adjacency, parse_edge_list, verify_independent, SearchBudget};
use hamcert::sweep::{run_sweep, SweepConfig};

#[derive(Parser)]
#[command(name = "hamcert", version, about = "Certified Hamiltonian cycles in Cayley graphs of small groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct GroupRef {
    /// Catalog name (`S4`, `D10`, `G24_3`, ...) or family name (`C<n>`, `D<n>`, `Q<n>`, `Z3:Z<p>^2`).
    #[arg(long, conflicts_with = "table")]
    group: Option<String>,
    /// Multiplication table file.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find and certify a Hamiltonian cycle of one Cayley graph.
    Solve {
        #[command(flatten)]
        group: GroupRef,
        /// Element indices (`1,5`) or, for permutation groups, cycles (`(1,2),(2,3,4)`).
        #[arg(long)]
        gens: String,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow plain search where no construction applies.
        #[arg(long)]
        allow_fallback: bool,
        /// Largest group order accepted.
        #[arg(long, default_value_t = SolveOptions::default().cap)]
        cap: usize,
    },
    /// Re-check a certificate file with both verifiers.
    Verify {
        file: PathBuf,
        /// Group to check against; defaults to the certificate's group name.
        #[command(flatten)]
        group: GroupRef,
    },
    /// Solve every generating set of every catalog group in a range of orders.
    Sweep {
        /// `N` or `A..B` (inclusive).
        #[arg(long, default_value = "1..63")]
        orders: String,
        #[arg(long, default_value_t = 3)]
        max_gens: usize,
        /// Generating sets per group.
        #[arg(long, default_value_t = DEFAULT_GENSET_CAP)]
        cap: usize,
        #[arg(long)]
        allow_fallback: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write every certificate into this store directory.
        #[arg(long)]
        store: Option<PathBuf>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add a wall-clock column (the report is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// List or describe catalog groups.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Print the coset multigraph of a subgroup.
    Quotient {
        #[command(flatten)]
        group: GroupRef,
        #[arg(long)]
        gens: String,
        /// Generators of the subgroup, in the same syntax as `--gens`.
        #[arg(long)]
        subgroup: String,
    },
    /// Search a graph given as an edge list (`u v` per line).
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = SearchBudget::DEFAULT.max_nodes)]
        max_nodes: u64,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List {
        #[arg(long)]
        order: Option<usize>,
    },
    Show {
        name: String,
        /// Also print the multiplication table.
        #[arg(long)]
        table: bool,
    },
}

/// Failures with their own exit codes.
#[derive(Debug)]
enum Exit {
    Unsupported(String),
    Budget(String),
    Rejected(String),
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exit::Unsupported(m) | Exit::Budget(m) | Exit::Rejected(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Exit>() {
                Some(Exit::Unsupported(_)) => ExitCode::from(2),
                Some(Exit::Budget(_)) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Solve { group, gens, out, allow_fallback, cap } => {
            let g = resolve(&group)?;
            let gens = parse_gens(&g, &gens)?;
            let opts = SolveOptions { cap, allow_fallback, ..SolveOptions::default() };
            let cert = solve_with(&g, &gens, &opts).map_err(|e| match e {
                SolveError::Unsupported { .. } | SolveError::UnsupportedByPaper { .. } | SolveError::OrderAboveCap { .. } => {
                    anyhow!(Exit::Unsupported(e.to_string()))
                }
                SolveError::BudgetExceeded => anyhow!(Exit::Budget(e.to_string())),
                e => anyhow!(e),
            })?;
            if !cert.verify_both(&g) {
                bail!("certificate failed verification");
            }
            emit(out.as_deref(), &cert.to_text())
        }
        Cmd::Verify { file, group } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let cert = Certificate::from_text(&text).map_err(|e| anyhow!(Exit::Rejected(format!("{}: {e}", file.display()))))?;
            let g = if group.group.is_some() || group.table.is_some() {
                resolve(&group)?
            } else {
                resolve(&GroupRef { group: Some(cert.group.clone()), table: None })?
            };
            if g.order() != cert.order {
                return Err(Exit::Rejected(format!("group has order {}, certificate says {}", g.order(), cert.order)).into());
            }
            let cay = CayleyGraph::new(&g, &cert.gens).map_err(|e| Exit::Rejected(e.to_string()))?;
            if let Err(f) = cay.is_hamiltonian_cycle(&cert.word, cert.repeat) {
                return Err(Exit::Rejected(format!("not a Hamiltonian cycle: {f}")).into());
            }
            if !verify_independent(&g, &cert.gens, &cert.word, cert.repeat) {
                return Err(Exit::Rejected("independent verifier rejected the certificate".into()).into());
            }
            println!("verified: {} of order {}, {} steps", cert.group, cert.order, cert.word.len() * cert.repeat);
            Ok(())
        }
        Cmd::Sweep { orders, max_gens, cap, allow_fallback, jobs, store, out, timing } => {
            let (lo, hi) = parse_range(&orders)?;
            if hi > CATALOG_MAX_ORDER {
                bail!("the catalog stops at order {CATALOG_MAX_ORDER}");
            }
            let catalog = builtin_catalog(hi);
            let cfg = SweepConfig { min_order: lo, max_order: hi, max_gens, genset_cap: cap, allow_fallback, jobs, timing };
            let report = run_sweep(&catalog, &cfg);
            emit(out.as_deref(), &report.to_tsv(timing))?;
            for name in &report.capped {
                eprintln!("note: {name} stopped at {cap} generating sets");
            }
            for name in &report.needs_more_gens {
                eprintln!("note: {name} needs more than {max_gens} generators");
            }
            if !report.skipped.is_empty() {
                eprintln!("note: {} groups skipped (no construction; see --allow-fallback)", report.skipped.len());
            }
            if let Some(dir) = store {
                write_store(&dir, &catalog, &report.rows)?;
            }
            let bad = report.failures().count();
            eprintln!("{} instances, {} failures", report.rows.len(), bad);
            if bad > 0 {
                bail!("{bad} instances failed or needed an uncredited search");
            }
            Ok(())
        }
        Cmd::Catalog { cmd: CatalogCmd::List { order } } => {
            let catalog = builtin_catalog(order.unwrap_or(CATALOG_MAX_ORDER));
            println!("name\torder\tform\ttags\taliases");
            for e in catalog.iter().filter(|e| order.is_none_or(|n| e.order == n)) {
                let tags: Vec<String> = e.tags.iter().map(|t| t.to_string()).collect();
                println!("{}\t{}\t{}\t{}\t{}", e.name, e.order, e.form, tags.join(","), e.aliases.join(","));
            }
            Ok(())
        }
        Cmd::Catalog { cmd: CatalogCmd::Show { name, table } } => {
            let catalog = builtin_catalog(order_hint(&name));
            let e = catalog.iter().find(|e| e.answers_to(&name)).ok_or_else(|| anyhow!("no catalog group named {name}"))?;
            let tags: Vec<String> = e.tags.iter().map(|t| t.to_string()).collect();
            println!("name {}", e.name);
            println!("aliases {}", e.aliases.join(" "));
            println!("order {}", e.order);
            println!("form {}", e.form);
            println!("route {}", route(e.order));
            println!("tags {}", tags.join(" "));
            println!("recipe {}", e.recipe);
            if table {
                print!("{}", e.table.to_text());
            }
            Ok(())
        }
        Cmd::Quotient { group, gens, subgroup } => {
            let g = resolve(&group)?;
            let gens = parse_gens(&g, &gens)?;
            let h = g.subgroup_closure(&parse_gens(&g, &subgroup)?);
            let cay = CayleyGraph::new(&g, &gens)?;
            let m = cay.coset_multigraph(&h);
            let doubles = m.double_edges();
            println!("cosets {} of a subgroup of order {}", m.graph.vertex_count(), h.order());
            for (u, v, s) in m.edges() {
                let double = doubles.iter().any(|&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u));
                println!("{u}\t{v}\t{}{}", s.signed(), if double { "\tdouble" } else { "" });
            }
            println!("{} double edges", doubles.len());
            Ok(())
        }
        Cmd::Oracle { file, max_nodes } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let graph = parse_edge_list(&text)?;
            let budget = SearchBudget { max_nodes, ..SearchBudget::FALLBACK };
            match find_hamiltonian_adjacency(&graph, budget) {
                Ok(cycle) => {
                    let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                    println!("cycle {}", vs.join(" "));
                    Ok(())
                }
                Err(e) if e.complete => {
                    println!("no Hamiltonian cycle (complete search, {} nodes)", e.nodes);
                    Err(Exit::Rejected("no Hamiltonian cycle".into()).into())
                }
                Err(e) => Err(Exit::Budget(e.to_string()).into()),
            }
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_store(dir: &Path, catalog: &[CatalogEntry], rows: &[hamcert::sweep::SweepRow]) -> Result<()> {
    let store = CertStore::open(dir)?;
    for r in rows {
        let Some(cert) = &r.certificate else { continue };
        let Some(e) = catalog.iter().find(|e| e.name == r.key.group) else { continue };
        match store.append(&r.key, cert, &e.table) {
            Ok(_) => {}
            Err(StoreError::Exists(id)) => {
                let old = fs::read_to_string(dir.join(format!("{id}.cert")))?;
                if old != cert.to_text() {
                    bail!("store entry {id} differs from this run");
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

/// `N`, `A..B` or `A..=B`, all inclusive.
fn parse_range(s: &str) -> Result<(usize, usize)> {
    let num = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad order `{t}`"));
    if let Some((a, b)) = s.split_once("..") {
        Ok((num(a)?, num(b.trim_start_matches('='))?))
    } else {
        let n = num(s)?;
        Ok((n, n))
    }
}

/// Smallest catalog bound that contains a group of this name.
fn order_hint(name: &str) -> usize {
    let upper = name.to_ascii_uppercase();
    let digits = |s: &str| s.chars().take_while(char::is_ascii_digit).collect::<String>().parse::<usize>().ok();
    let hint = if let Some(rest) = upper.strip_prefix('G') {
        digits(rest)
    } else if let Some(rest) = upper.strip_prefix("A4XC").or_else(|| upper.strip_prefix("A4XZ")) {
        digits(rest).map(|p| 12 * p)
    } else {
        match upper.as_str() {
            "A4" => Some(12),
            "S4" | "SL(2,3)" | "SL23" => Some(24),
            _ => None,
        }
    };
    hint.unwrap_or(CATALOG_MAX_ORDER).min(CATALOG_MAX_ORDER)
}

fn resolve(r: &GroupRef) -> Result<GroupTable> {
    if let Some(path) = &r.table {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return Ok(GroupTable::from_text(&text)?.with_name(name));
    }
    let name = r.group.as_deref().ok_or_else(|| anyhow!("give --group or --table"))?;
    // family tables coincide with the catalog's for the same names
    if let Some(g) = parametric_group(name) {
        return g.with_context(|| format!("building {name}"));
    }
    let catalog = builtin_catalog(order_hint(name));
    if let Some(e) = catalog.iter().find(|e| e.answers_to(name)) {
        return Ok(e.table.clone());
    }
    // `order<N>-...` names a group only by its order
    if let Some(rest) = name.strip_prefix("order") {
        let n: usize = rest.chars().take_while(char::is_ascii_digit).collect::<String>().parse().unwrap_or(0);
        if n > 0 && (n > CATALOG_MAX_ORDER || !route(n).is_supported()) {
            return Err(Exit::Unsupported(format!("order {n}: {}", route(n))).into());
        }
    }
    bail!("no group named {name}")
}

fn parse_gens(g: &GroupTable, text: &str) -> Result<Vec<Elem>> {
    if text.contains('(') {
        let perms = g.permutations().ok_or_else(|| anyhow!("{} is not a permutation group; give element indices", g.name()))?;
        let degree = perms[0].degree();
        return parse_cycles(text, degree)?
            .iter()
            .map(|p| g.element_of_perm(p).ok_or_else(|| anyhow!("{p} is not in {}", g.name())))
            .collect();
    }
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t.parse().with_context(|| format!("bad element `{t}`"))?;
            if i >= g.order() {
                bail!("element {i} outside a group of order {}", g.order());
            }
            Ok(Elem::new(i))
        })
        .collect()
}
