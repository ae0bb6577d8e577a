//! `hyideal`: query rings, ideals and subspaces, and run the theorem checks.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyideal_core::verify::run_all;
use hyideal_core::{
    ideal_generate, parse_ring_dsl, Caps, CorpusFile, Error, PointSet, RingContext, SubSpace, YSelector,
};

/// Environment variable holding cap overrides, e.g. `structured=512,tables=128`.
const CAPS_ENV: &str = "HYIDEAL_CAPS";

#[derive(Parser)]
#[command(name = "hyideal", version, about = "H_Y-ideals over Zariski subspaces of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring-level facts.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// List the ideal lattice.
    Ideals { ring: String },
    /// Primes, maximal and minimal primes, Bourbaki and affiliated primes.
    Spec { ring: String },
    /// H_Y-ideal queries.
    Hy {
        #[command(subcommand)]
        command: HyCommand,
    },
    /// Whether an ideal is H_Y-fixed, optionally with respect to S ⊆ Y.
    Fixed {
        #[command(flatten)]
        query: Query,
        /// Selector for S.
        #[arg(long)]
        wrt: Option<String>,
    },
    /// Relative H_Y verdicts, factors and the greatest factor.
    Relative {
        #[command(flatten)]
        query: Query,
    },
    /// Run the theorem checks over a corpus.
    Verify {
        /// Corpus file, or `default` for the bundled corpus.
        #[arg(long)]
        corpus: String,
        /// Restrict to these check ids.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Elements, units, idempotents and structural flags.
    Show { ring: String },
}

#[derive(Subcommand)]
enum HyCommand {
    /// H_Y, strong and fixed verdicts with the condition profiles.
    Check {
        #[command(flatten)]
        query: Query,
    },
    /// The smallest H_Y-ideal and strong H_Y-ideal containing the ideal.
    Closure {
        #[command(flatten)]
        query: Query,
    },
}

#[derive(clap::Args)]
struct Query {
    ring: String,
    /// Subspace selector: spec, max, min or indices:[...].
    #[arg(long)]
    y: String,
    /// Generators of the ideal, as labels, indices or component tuples.
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn caps() -> Result<Caps, Error> {
    match std::env::var(CAPS_ENV) {
        Ok(text) => Caps::default().with_overrides(&text),
        Err(_) => Ok(Caps::default()),
    }
}

fn context(ring: &str) -> Result<RingContext, Error> {
    let spec = parse_ring_dsl(ring)?;
    RingContext::with_caps(ring.trim(), &spec, &caps()?)
}

fn one_subspace(ctx: &RingContext, text: &str) -> Result<PointSet, Error> {
    let sel: YSelector = text.parse()?;
    let mut sets = sel.resolve(ctx, 0)?;
    if sets.len() != 1 {
        return Err(Error::BadSpec(format!("selector `{text}` must name a single subspace")));
    }
    Ok(sets.remove(0).1)
}

fn members(ctx: &RingContext, i: usize) -> String {
    let ring = ctx.ring();
    let labels: Vec<&str> = ctx.ideal(i).members().elements().map(|a| ring.label(a)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn names(ctx: &RingContext, ix: &[usize]) -> String {
    let v: Vec<String> = ix.iter().map(|&i| ctx.ideal_name(i)).collect();
    format!("[{}]", v.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Builds the context, the subspace and the ideal, echoing the expansion.
fn with_query(query: &Query, out: &mut String, f: impl FnOnce(&SubSpace, usize, &mut String)) -> Result<(), Error> {
    let ctx = context(&query.ring)?;
    let points = one_subspace(&ctx, &query.y)?;
    let y = SubSpace::labelled(&ctx, points, query.y.clone())?;
    let gens = query.ideal.iter().map(|g| ctx.ring().parse_element(g)).collect::<Result<Vec<_>, _>>()?;
    let i = ctx.idx(&ideal_generate(ctx.ring(), &gens));
    out.push_str(&format!("Y = {}\n", ctx.points_label(points)));
    out.push_str(&format!("I = {} = {}\n", ctx.ideal_name(i), members(&ctx, i)));
    f(&y, i, out);
    Ok(())
}

fn ring_show(ring: &str) -> Result<String, Error> {
    let ctx = context(ring)?;
    let r = ctx.ring();
    let labels =
        |v: Vec<hyideal_core::Element>| v.into_iter().map(|a| r.label(a).to_string()).collect::<Vec<_>>().join(", ");
    Ok(format!(
        "ring: {}\nsize: {}\nelements: {}\nunits: {}\nidempotents: {}\nregular: {}\nroot property: {}\narithmetical: {}\n",
        ctx.name(),
        r.size(),
        labels(r.elements().collect()),
        labels(r.units()),
        labels(r.idempotents()),
        yes(r.is_regular()),
        yes(r.has_root_property()),
        yes(ctx.lattice().is_arithmetical()),
    ))
}

fn ideals(ring: &str) -> Result<String, Error> {
    let ctx = context(ring)?;
    let mut out = String::new();
    for i in 0..ctx.lattice().len() {
        out.push_str(&format!("{i:>3}  {:<12} {}\n", ctx.ideal_name(i), members(&ctx, i)));
    }
    Ok(out)
}

fn spec(ring: &str) -> Result<String, Error> {
    let ctx = context(ring)?;
    let list = |s: PointSet| names(&ctx, &ctx.prime_indices(s));
    let affiliated = ctx.affiliated_primes().map(|v| names(&ctx, &v)).unwrap_or_else(|e| format!("undefined ({e})"));
    Ok(format!(
        "primes: {}\nmaximal: {}\nminimal: {}\nBourbaki B(R): {}\naffiliated: {}\n",
        list(ctx.spec()),
        list(ctx.max_ideals()),
        list(ctx.min_primes()),
        list(ctx.bourbaki(ctx.lattice().zero_index())),
        affiliated,
    ))
}

fn hy_check(query: &Query) -> Result<String, Error> {
    let mut out = String::new();
    with_query(query, &mut out, |y, i, out| {
        out.push_str(&format!(
            "H_Y: {}, strong: {}, fixed: {}\n",
            y.is_hy_idx(i),
            y.is_strong_idx(i),
            y.is_fixed_idx(i)
        ));
        out.push_str(&format!("H_Y conditions: {}\n", y.hy_profile_idx(i).summary()));
        out.push_str(&format!("strong conditions: {}\n", y.strong_profile_idx(i).summary()));
    })?;
    Ok(out)
}

fn hy_closure(query: &Query) -> Result<String, Error> {
    let mut out = String::new();
    with_query(query, &mut out, |y, i, out| {
        let ctx = y.ctx();
        let (c, s) = (y.hy_closure_idx(i), y.strong_closure_idx(i));
        out.push_str(&format!("H_Y closure: {} = {}\n", ctx.ideal_name(c), members(ctx, c)));
        out.push_str(&format!("strong closure: {} = {}\n", ctx.ideal_name(s), members(ctx, s)));
    })?;
    Ok(out)
}

fn fixed(query: &Query, wrt: Option<&str>) -> Result<String, Error> {
    let mut out = String::new();
    let mut failure = None;
    with_query(query, &mut out, |y, i, out| {
        let ctx = y.ctx();
        let f = y.is_fixed_idx(i);
        out.push_str(&format!("fixed: {f} ({})\n", if f { "fixed" } else { "free" }));
        out.push_str(&format!("h_Y(I) = {}\n", ctx.points_label(y.hull_idx(i))));
        out.push_str(&format!("maximal fixed ideals: {}\n", names(ctx, &y.maximal_fixed())));
        if let Some(text) = wrt {
            let res = one_subspace(ctx, text).and_then(|s| Ok((s, y.is_fixed_wrt(ctx.ideal(i), s)?)));
            match res {
                Ok((s, w)) => out.push_str(&format!("fixed wrt {}: {w}\n", ctx.points_label(s))),
                Err(e) => failure = Some(e),
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn relative(query: &Query) -> Result<String, Error> {
    let mut out = String::new();
    with_query(query, &mut out, |y, i, out| {
        let ctx = y.ctx();
        let g = y.greatest_factor_idx(i, false);
        let greatest = match g.ideal {
            Some(k) => ctx.ideal_name(k),
            None => format!("not an ideal {:?}", g.formula.to_vec()),
        };
        out.push_str(&format!(
            "relative: {}; greatest factor: {}{}\n",
            y.relative_decision(i, false).is_relative(),
            greatest,
            if g.trivial { " [trivial]" } else { "" }
        ));
        out.push_str(&format!("relative strong: {}\n", y.relative_decision(i, true).is_relative()));
        out.push_str(&format!("factors: {}\n", names(ctx, &y.factors_idx(i, false, false))));
        out.push_str(&format!("minimal factors: {}\n", names(ctx, &y.minimal_factors_idx(i, false))));
        out.push_str(&format!("maximal factors: {}\n", names(ctx, &y.maximal_factors_idx(i, false))));
    })?;
    Ok(out)
}

fn verify(corpus: &str, checks: &[String], format: Format, seed: u64) -> Result<(String, bool), Error> {
    let file =
        if corpus == "default" { CorpusFile::default_corpus() } else { CorpusFile::load(&PathBuf::from(corpus))? };
    let only = if checks.is_empty() { None } else { Some(checks) };
    let report = run_all(&file, seed, caps()?, only)?;
    let text = match format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json() + "\n",
    };
    Ok((text, report.summary.fail > 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Ring { command: RingCommand::Show { ring } } => ring_show(ring).map(|s| (s, false)),
        Command::Ideals { ring } => ideals(ring).map(|s| (s, false)),
        Command::Spec { ring } => spec(ring).map(|s| (s, false)),
        Command::Hy { command: HyCommand::Check { query } } => hy_check(query).map(|s| (s, false)),
        Command::Hy { command: HyCommand::Closure { query } } => hy_closure(query).map(|s| (s, false)),
        Command::Fixed { query, wrt } => fixed(query, wrt.as_deref()).map(|s| (s, false)),
        Command::Relative { query } => relative(query).map(|s| (s, false)),
        Command::Verify { corpus, checks, format, seed } => verify(corpus, checks, *format, *seed),
    };
    match result {
        Ok((text, failures)) => {
            print!("{text}");
            if failures {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
