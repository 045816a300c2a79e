use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use coend::blocks::{block_record, WorldSheetSpec};
use coend::category::GeneratingSubcategory;
use coend::hopf::catalog::{by_name, catalog, is_semisimple, module_names, named_module};
use coend::hopf::{algebra_to_json, check_axioms, double, load_algebra, GroupTable, HopfAlgebra, ModuleRep};
use coend::linalg::is_invertible;
use coend::lyubashenko::{build_l, build_l_default, build_l_small, modularity_test, Ordering};
use coend::verify::{self, Suite};
use coend::Error;

#[derive(Parser)]
#[command(name = "coend", version, about = "Coends and conformal blocks over finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in algebras.
    Catalog(FormatArg),
    /// Check the Hopf algebra axioms.
    Validate(AlgebraArgs),
    /// Build the coend L of the inner Hom functor.
    #[command(name = "coend-L")]
    CoendL(AlgebraArgs),
    /// Dimension of a space of conformal blocks.
    Blocks(BlocksArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Drinfeld double of a group algebra.
    Double(AlgebraArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Catalog name or path to an algebra file.
    #[arg(long)]
    algebra: String,
    /// Generating objects, comma separated, e.g. `triv,sign,reg`.
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<String>>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct BlocksArgs {
    #[command(flatten)]
    common: AlgebraArgs,
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long = "in", value_delimiter = ',')]
    incoming: Vec<String>,
    #[arg(long = "out", value_delimiter = ',')]
    outgoing: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: AlgebraArgs,
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

/// Bad input from the command line, reported with exit code 2.
struct Usage(String);

enum Failure {
    Usage(Usage),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) | Error::Io(_) | Error::Parse(_) => Failure::Usage(Usage(e.to_string())),
            e => Failure::Library(e),
        }
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn load(spec: &str) -> Result<HopfAlgebra, Error> {
    if Path::new(spec).is_file() {
        load_algebra(spec)
    } else {
        by_name(spec)
    }
}

fn modules(h: &HopfAlgebra, names: &[String]) -> Result<Vec<ModuleRep>, Error> {
    names.iter().filter(|n| !n.is_empty()).map(|n| named_module(h, n)).collect()
}

fn gens(h: &HopfAlgebra, names: &Option<Vec<String>>) -> Result<Option<GeneratingSubcategory>, Error> {
    match names {
        Some(n) => Ok(Some(GeneratingSubcategory::new(modules(h, n)?)?)),
        None => Ok(None),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn cmd_catalog(f: Format) -> Outcome {
    let rows: Vec<_> = catalog()
        .iter()
        .map(|h| {
            json!({
                "name": h.name(),
                "dim": h.dim(),
                "r_matrix": h.has_r_matrix(),
                "pivot": h.pivot().is_ok(),
                "semisimple": is_semisimple(h),
                "modules": module_names(h),
            })
        })
        .collect();
    let out = match f {
        Format::Json => pretty(&json!(rows)),
        Format::Text => {
            let mut s = String::new();
            for (h, r) in catalog().iter().zip(&rows) {
                s += &format!(
                    "{:<10} dim {:<2} R-matrix {:<3} semisimple {:<3} modules {}\n",
                    h.name(),
                    h.dim(),
                    yes(h.has_r_matrix()),
                    yes(r["semisimple"] == true),
                    module_names(h).join(",")
                );
            }
            s
        }
    };
    Ok((out, true))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_out(r: &verify::Report, f: Format) -> Outcome {
    let out = match f {
        Format::Json => pretty(&serde_json::to_value(r).expect("reports serialize")),
        Format::Text => r.to_text(),
    };
    Ok((out, r.exit_code == 0))
}

fn cmd_validate(a: &AlgebraArgs) -> Outcome {
    let h = load(&a.algebra)?;
    report_out(&verify::validate(&h), a.format.format)
}

fn cmd_coend_l(a: &AlgebraArgs) -> Outcome {
    let h = load(&a.algebra)?;
    let l = match gens(&h, &a.gens)? {
        Some(g) => build_l(&g, Ordering::default())?,
        None => build_l_default(&h)?,
    };
    let iso = is_invertible(l.coadjoint_iso());
    let modular = if h.has_r_matrix() { Some(modularity_test(&h)?) } else { None };
    let ok = iso && l.dim() == h.dim();
    let out = match a.format.format {
        Format::Json => pretty(&json!({
            "algebra": h.name(),
            "dim_h": h.dim(),
            "dim_l": l.dim(),
            "generators": l.sub().objects().iter().map(|m| m.name()).collect::<Vec<_>>(),
            "coadjoint_iso": { "invertible": iso, "hash": l.coadjoint_iso().fingerprint() },
            "modular": modular.as_ref().map(|v| json!({ "modular": v.modular, "rank": v.rank, "dim": v.dim })),
        })),
        Format::Text => {
            let mut s = format!("dim L = {}\ndim H = {}\n", l.dim(), h.dim());
            s += &format!("coadjoint iso: {} #{}\n", if iso { "invertible" } else { "singular" }, l.coadjoint_iso().fingerprint());
            match &modular {
                Some(v) => s += &format!("pairing rank {} of {}: {}\n", v.rank, v.dim, if v.modular { "modular" } else { "not modular" }),
                None => s += "pairing: no R-matrix\n",
            }
            s
        }
    };
    Ok((out, ok))
}

fn cmd_blocks(b: &BlocksArgs) -> Outcome {
    let h = load(&b.common.algebra)?;
    let l = match gens(&h, &b.common.gens)? {
        Some(g) => build_l(&g, Ordering::default())?,
        None => build_l_small(&h)?,
    };
    let spec = WorldSheetSpec::new(&h, b.genus, modules(&h, &b.incoming)?, modules(&h, &b.outgoing)?)?;
    let r = block_record(&spec, &l)?;
    let out = match b.common.format.format {
        Format::Json => pretty(&serde_json::to_value(&r).expect("records serialize")),
        Format::Text => {
            let oracle = match r.oracle_dimension {
                Some(o) => format!("{o} ({})", if r.matched { "match" } else { "MISMATCH" }),
                None => "n/a".into(),
            };
            format!("{}\noracle: {oracle}\n", r.dimension)
        }
    };
    Ok((out, r.matched))
}

fn cmd_verify(v: &VerifyArgs) -> Outcome {
    let suites: Vec<Suite> = if v.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![v.suite.parse::<Suite>().map_err(|_| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Usage(format!("unknown suite {}; expected all or one of {}", v.suite, names.join(", ")))
        })?]
    };
    let h = load(&v.common.algebra)?;
    let g = gens(&h, &v.common.gens)?;
    report_out(&verify::run(&suites, &h, g.as_ref())?, v.common.format.format)
}

fn cmd_double(a: &AlgebraArgs) -> Outcome {
    let g = if Path::new(&a.algebra).is_file() {
        GroupTable::from_json(&std::fs::read_to_string(&a.algebra).map_err(Error::from)?)?
    } else {
        GroupTable::by_name(&a.algebra)?
    };
    let data = double(format!("double-{}", a.algebra), &g);
    let h = HopfAlgebra::new(data.clone())?;
    let axioms = check_axioms(&h);
    let out = match a.format.format {
        Format::Json => algebra_to_json(&data) + "\n",
        Format::Text => {
            let v = modularity_test(&h)?;
            format!(
                "{}: dim {}\naxioms: {}\npairing rank {} of {}: {}\n",
                h.name(),
                h.dim(),
                if axioms.all_passed() { "pass".to_string() } else { format!("FAIL {}", axioms.failures().join(", ")) },
                v.rank,
                v.dim,
                if v.modular { "modular" } else { "not modular" }
            )
        }
    };
    Ok((out, axioms.all_passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Catalog(f) => cmd_catalog(f.format),
        Command::Validate(a) => cmd_validate(a),
        Command::CoendL(a) => cmd_coend_l(a),
        Command::Blocks(b) => cmd_blocks(b),
        Command::Verify(v) => cmd_verify(v),
        Command::Double(a) => cmd_double(a),
    };
    match outcome {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
