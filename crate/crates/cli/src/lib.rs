//! Argument parsing and dispatch for the `pocfrob` binary. [`run`] takes
//! the argument list and output streams so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use pocfrob_core::census::{crosscheck, enumerate, CheckStatus, RendererRegistry};
use pocfrob_core::classifier::{classify, classify_complement, Justification, Verdict};
use pocfrob_core::group::{
    is_fixed_point_free, is_malnormal, order_census_bruteforce, realize_complement,
    realize_frobenius, CyclicGroup, DirectProduct, MetacyclicGroup, QuaternionGroup,
    SemidirectProduct, DEFAULT_MALNORMAL_LIMIT,
};
use pocfrob_core::numtheory::{
    is_named_exception, zsigmondy, DiophantineFamily, FamilyTag, SolverRegistry, ZsigmondyOutcome,
    ZsigmondyQuery,
};
use pocfrob_core::order_classes::{complement_census, frobenius_spec_census, is_poc};
use pocfrob_core::spec::{parse_spec, GroupSpec};
use pocfrob_core::{ComplementSpec, Error, FrobeniusSpec, OrderCensus, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pocfrob",
    version,
    about = "Frobenius groups with perfect order classes"
)]
struct Cli {
    /// Largest group order censused by brute force.
    #[arg(long, global = true, env = "POCFROB_LIMIT", default_value_t = 20_000)]
    limit: u64,
    /// Largest group order checked for malnormality.
    #[arg(long, global = true, default_value_t = DEFAULT_MALNORMAL_LIMIT)]
    malnormal_limit: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the Frobenius groups with perfect order classes up to an order.
    Census {
        #[arg(long)]
        max: u64,
        /// tsv, json or markdown.
        #[arg(long, default_value = "tsv")]
        format: String,
        /// Rebuild each row of order up to L and compare with brute force;
        /// the report goes to standard error.
        #[arg(long, value_name = "L")]
        crosscheck: Option<u64>,
    },
    /// Decide whether a group has perfect order classes.
    Check {
        spec: String,
        /// Also build the group and test it directly.
        #[arg(long)]
        brute: bool,
    },
    /// Element-order census of a group.
    Orders {
        spec: String,
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value_t = OrdersFormat::Table)]
        format: OrdersFormat,
    },
    /// Solve an exponential Diophantine family up to a bound.
    Solve {
        family: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Search GL(dim, prime) for a subgroup isomorphic to a complement.
    Embed {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        spec: String,
        /// Require a fixed-point-free action.
        #[arg(long)]
        fpf: bool,
    },
    /// Primitive prime divisors of a^n + eps b^n.
    Zsigmondy {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrdersFormat {
    Table,
    Json,
}

/// Runs one command line and returns the exit status: 0 on success, 1 on
/// a domain error or failed crosscheck, 2 on a parse error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } => EXIT_PARSE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Unsupported(format!("write failed: {e}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Census {
            max,
            format,
            crosscheck: check,
        } => census(*max, format, *check, out, err),
        Command::Check { spec, brute } => check(cli, spec, *brute, out),
        Command::Orders {
            spec,
            brute,
            format,
        } => orders(cli, spec, *brute, *format, out),
        Command::Solve { family, bound, q } => solve(family, *bound, *q, out),
        Command::Embed {
            dim,
            prime,
            spec,
            fpf,
        } => embed(*dim, *prime, spec, *fpf, out),
        Command::Zsigmondy { a, b, n, eps } => zsig(*a, *b, *n, *eps, out),
    }
}

fn census(
    max: u64,
    format: &str,
    check: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let registry = RendererRegistry::standard();
    let renderer = registry.get(format).ok_or_else(|| Error::Parse {
        position: 0,
        message: format!(
            "unknown format '{format}', expected one of {}",
            registry.names().join(", ")
        ),
    })?;
    if max < 6 {
        return Err(Error::Domain(format!(
            "--max must be at least 6, got {max}"
        )));
    }
    let rows = enumerate(max);
    out.write_all(renderer.render(&rows).as_bytes())
        .map_err(io)?;
    let Some(limit) = check else {
        return Ok(EXIT_OK);
    };
    let report = crosscheck(&rows, limit);
    let (mut passed, mut skipped, mut failed) = (0, 0, 0);
    for entry in &report {
        match entry.status {
            CheckStatus::Passed => passed += 1,
            CheckStatus::Skipped => skipped += 1,
            CheckStatus::Failed(_) => failed += 1,
        }
        writeln!(err, "{entry}").map_err(io)?;
    }
    writeln!(
        err,
        "crosscheck: {passed} passed, {skipped} skipped, {failed} failed"
    )
    .map_err(io)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_DOMAIN })
}

fn verdict_line(v: &Verdict) -> String {
    match (v.justification, v.poc) {
        (Justification::Unclassified, _) => {
            "POC: undecided (unclassified; Theorem A conditions hold)".into()
        }
        (j, poc) => format!("POC: {} ({})", if poc { "yes" } else { "no" }, j.describe()),
    }
}

fn check(cli: &Cli, text: &str, brute: bool, out: &mut dyn Write) -> Result<i32> {
    let spec = parse_spec(text)?;
    let v = match spec {
        GroupSpec::Frobenius(f) => classify(&f)?,
        GroupSpec::Complement(h) => classify_complement(&h)?,
    };
    let mut s = format!("{spec}  order {}\n{}\n", order_of(&spec), verdict_line(&v));
    for d in &v.details {
        s.push_str(&format!("  {d}\n"));
    }
    if brute {
        s.push_str(&brute_report(cli, &spec)?);
    }
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn order_of(spec: &GroupSpec) -> u64 {
    match spec {
        GroupSpec::Frobenius(f) => f.order(),
        GroupSpec::Complement(h) => h.order(),
    }
}

fn brute_report(cli: &Cli, spec: &GroupSpec) -> Result<String> {
    let GroupSpec::Frobenius(f) = spec else {
        let c = brute_complement_census(h_of(spec), cli.limit)?;
        return Ok(format!(
            "brute force: census {c}, POC {}\n",
            yes(is_poc(&c))
        ));
    };
    let Some(action) = realize_frobenius(f)? else {
        return Ok(format!(
            "brute force: {} has no fixed-point-free action on F_{}^{}, so no such group exists\n",
            f.complement, f.kernel.p, f.kernel.r
        ));
    };
    let g = SemidirectProduct::new(f.kernel, &action, cli.limit)?;
    let c = order_census_bruteforce(&g, cli.limit)?;
    let mut s = format!(
        "brute force: fixed-point-free {}, census {c}, POC {}\n",
        yes(is_fixed_point_free(&action)?),
        yes(is_poc(&c))
    );
    if f.order() <= cli.malnormal_limit {
        let m = is_malnormal(&g, &g.complement_elements(), cli.malnormal_limit)?;
        s.push_str(&format!("brute force: complement malnormal {}\n", yes(m)));
    }
    Ok(s)
}

fn h_of(spec: &GroupSpec) -> &ComplementSpec {
    match spec {
        GroupSpec::Frobenius(f) => &f.complement,
        GroupSpec::Complement(h) => h,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn brute_complement_census(h: &ComplementSpec, limit: u64) -> Result<OrderCensus> {
    match *h {
        ComplementSpec::Cyclic(n) => order_census_bruteforce(&CyclicGroup::new(n)?, limit),
        ComplementSpec::QuatCyclic(n, m) => order_census_bruteforce(
            &DirectProduct {
                left: QuaternionGroup::new(n)?,
                right: CyclicGroup::new(m)?,
            },
            limit,
        ),
        ComplementSpec::Metacyclic(a, b, g) => {
            order_census_bruteforce(&MetacyclicGroup::new(a, b, g)?, limit)
        }
        ComplementSpec::SL2_3 | ComplementSpec::SL2_5 => complement_census(h),
    }
}

fn brute_frobenius_census(f: &FrobeniusSpec, limit: u64) -> Result<OrderCensus> {
    let action = realize_frobenius(f)?.ok_or_else(|| {
        Error::Realization(format!(
            "{} has no fixed-point-free action on F_{}^{}",
            f.complement, f.kernel.p, f.kernel.r
        ))
    })?;
    order_census_bruteforce(&SemidirectProduct::new(f.kernel, &action, limit)?, limit)
}

fn orders(
    cli: &Cli,
    text: &str,
    brute: bool,
    format: OrdersFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let spec = parse_spec(text)?;
    let census = match (&spec, brute) {
        (GroupSpec::Frobenius(f), false) => frobenius_spec_census(f)?,
        (GroupSpec::Frobenius(f), true) => brute_frobenius_census(f, cli.limit)?,
        (GroupSpec::Complement(h), false) => complement_census(h)?,
        (GroupSpec::Complement(h), true) => brute_complement_census(h, cli.limit)?,
    };
    let s = match format {
        OrdersFormat::Json => format!("{}\n", census.to_json()),
        OrdersFormat::Table => {
            let mut s = String::from("order\tcount\n");
            for (d, n) in census.entries() {
                s.push_str(&format!("{d}\t{n}\n"));
            }
            s.push_str(&format!("total\t{}\n", census.group_order()));
            s
        }
    };
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn solve(name: &str, bound: u64, q: Option<u64>, out: &mut dyn Write) -> Result<i32> {
    let tag: FamilyTag = name.parse()?;
    let family = DiophantineFamily::new(tag, q)?;
    let registry = SolverRegistry::standard();
    let mut s = String::new();
    for t in registry.solve(&family, bound)? {
        let items: Vec<String> = t.iter().map(u64::to_string).collect();
        s.push_str(&format!("({})\n", items.join(",")));
    }
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn embed(dim: usize, prime: u64, text: &str, fpf: bool, out: &mut dyn Write) -> Result<i32> {
    let h: ComplementSpec = text.parse()?;
    let s = match realize_complement(&h, dim, prime, fpf)? {
        Some(action) => format!("embedding found: {action}"),
        None => "no embedding\n".to_string(),
    };
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn zsig(a: u64, b: u64, n: u32, eps: i8, out: &mut dyn Write) -> Result<i32> {
    let q = ZsigmondyQuery::new(a, b, n, eps)?;
    let s = match zsigmondy(&q)? {
        ZsigmondyOutcome::Primitive(ps) => {
            let items: Vec<String> = ps.iter().map(u64::to_string).collect();
            format!("{}\n", items.join(" "))
        }
        ZsigmondyOutcome::Exception if is_named_exception(&q) => "exception (listed case)\n".into(),
        ZsigmondyOutcome::Exception => "exception\n".into(),
    };
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}
