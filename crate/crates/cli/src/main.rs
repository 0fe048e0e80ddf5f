use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use omnilie::balavoine::{mc_check, mc_residual, selftest};
use omnilie::catalog;
use omnilie::cohomology::DEFAULT_MAX_DEGREE;
use omnilie::io::{self, Document};
use omnilie::omni::{
    compare_adjoint, compare_graph, compare_trivial, graph_check, omni_cohomology_dims,
    trivial_omnireps, Comparison, OmniRep,
};
use omnilie::rational::format_rational;
use omnilie::{cohomology_dims, Error, LeibnizAlgebra, Representation};

#[derive(Parser)]
#[command(name = "omnilie", version, about = "Leibniz algebra and omni-representation cohomology")]
struct Cli {
    /// Skip validation when reading documents.
    #[arg(long, global = true)]
    no_validate: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra, representation or omni-representation document.
    Validate { file: String },
    /// Loday-Pirashvili cohomology dimensions.
    Cohomology {
        /// Catalog name or algebra file.
        algebra: String,
        /// `trivial`, `adjoint`, a catalog representation name or a file.
        #[arg(long, default_value = "trivial")]
        rep: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Omni-cohomology dimensions.
    OmniCohomology {
        algebra: String,
        /// `trivial:<k>` (1-based), `zero`, `adjoint` or a file.
        #[arg(long, default_value = "adjoint")]
        omnirep: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Loday-Pirashvili against omni-cohomology; exit 0 iff the dimensions agree.
    Compare {
        algebra: String,
        /// `trivial`, `adjoint` or `graph:<file>`.
        #[arg(long)]
        mode: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Maurer-Cartan check for a representation (file or catalog name).
    McCheck {
        rep: String,
        #[arg(long)]
        json: bool,
    },
    /// Randomized graded Lie checks for the Balavoine bracket.
    BalavoineSelftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
    /// List or show catalog entries.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

enum Failure {
    Math(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_math_failure() {
            Failure::Math(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))
}

fn load_algebra(source: &str, validate: bool) -> Result<LeibnizAlgebra, Failure> {
    if catalog::ALGEBRA_NAMES.contains(&source) {
        return Ok(catalog::algebra(source)?);
    }
    Ok(io::parse_algebra(&read(source)?, validate)?)
}

fn load_rep(source: &str, validate: bool) -> Result<Representation, Failure> {
    if catalog::REP_NAMES.contains(&source) {
        return Ok(catalog::rep(source)?);
    }
    Ok(io::parse_rep(&read(source)?, validate)?)
}

fn same_algebra(expected: &LeibnizAlgebra, found: &LeibnizAlgebra) -> Result<(), Failure> {
    if expected != found {
        return Err(Failure::Input(
            "the document's algebra differs from the algebra argument".into(),
        ));
    }
    Ok(())
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn print_dims(header: &str, symbol: &str, dims: &[usize]) {
    println!("{header}");
    println!("k  dim {symbol}^k");
    for (k, d) in dims.iter().enumerate() {
        println!("{k}  {d}");
    }
}

fn validate(file: &str) -> Outcome {
    match io::parse_document(&read(file)?, false)? {
        Document::Algebra(alg) => {
            alg.check().map_err(Error::NotLeibniz)?;
            println!("ok: Leibniz algebra of dimension {}", alg.dim());
        }
        Document::Rep(rep) => {
            rep.algebra().check().map_err(Error::NotLeibniz)?;
            rep.check().map_err(Error::InvalidRep)?;
            println!(
                "ok: representation of a dimension {} algebra on a dimension {} space",
                rep.algebra().dim(),
                rep.dim_v()
            );
        }
        Document::OmniRep(input) => {
            input.rho.algebra().check().map_err(Error::NotLeibniz)?;
            input.rho.check()?.map_err(Error::InvalidOmniRep)?;
            if let Some(phi) = &input.graph_phi {
                graph_check(phi)?;
                omnilie::omni::check_in_graph(&input.rho, phi)?;
            }
            println!(
                "ok: omni-representation of a dimension {} algebra on a dimension {} space",
                input.rho.algebra().dim(),
                input.rho.dim_v()
            );
        }
    }
    Ok(true)
}

fn cohomology(algebra: &str, rep: &str, max_degree: usize, json: bool, validate: bool) -> Outcome {
    let alg = load_algebra(algebra, validate)?;
    let representation = match rep {
        "trivial" => Representation::trivial(alg.clone(), 1),
        "adjoint" => Representation::adjoint(alg.clone()),
        other => {
            let r = load_rep(other, validate)?;
            same_algebra(&alg, r.algebra())?;
            r
        }
    };
    let dims = cohomology_dims(&representation, max_degree)?;
    if json {
        print_json(&json!({
            "algebra": algebra,
            "rep": rep,
            "max_degree": max_degree,
            "dims": dims,
        }));
    } else {
        print_dims(&format!("algebra {algebra}, representation {rep}"), "H", &dims);
    }
    Ok(true)
}

fn load_omnirep(alg: &LeibnizAlgebra, source: &str, validate: bool) -> Result<OmniRep, Failure> {
    if source == "adjoint" {
        return Ok(OmniRep::adjoint(alg.clone()));
    }
    if source == "zero" {
        return Ok(OmniRep::zero(alg.clone(), 1));
    }
    if let Some(k) = source.strip_prefix("trivial:") {
        let basis = trivial_omnireps(alg);
        let k: usize = k
            .parse()
            .map_err(|_| Failure::Input(format!("bad trivial omni-representation index {k:?}")))?;
        if k == 0 || k > basis.len() {
            return Err(Failure::Input(format!(
                "trivial omni-representation index {k} out of range 1..={} (use `zero` for rho = 0)",
                basis.len()
            )));
        }
        return Ok(OmniRep::trivial(alg.clone(), &basis[k - 1])?);
    }
    let input = io::parse_omnirep(&read(source)?, validate)?;
    same_algebra(alg, input.rho.algebra())?;
    Ok(input.rho)
}

fn omni_cohomology(algebra: &str, source: &str, max_degree: usize, json: bool, validate: bool) -> Outcome {
    let alg = load_algebra(algebra, validate)?;
    let rho = load_omnirep(&alg, source, validate)?;
    let dims = omni_cohomology_dims(&rho, max_degree)?;
    if json {
        print_json(&json!({
            "algebra": algebra,
            "omnirep": source,
            "max_degree": max_degree,
            "dims": dims,
        }));
    } else {
        print_dims(&format!("algebra {algebra}, omni-representation {source}"), "H_omni", &dims);
    }
    Ok(true)
}

fn compare(algebra: &str, mode: &str, max_degree: usize, json: bool, validate: bool) -> Outcome {
    let alg = load_algebra(algebra, validate)?;
    let comparisons: Vec<Comparison> = match mode {
        "trivial" => compare_trivial(&alg, max_degree)?,
        "adjoint" => vec![compare_adjoint(&alg, max_degree)?],
        other => {
            let Some(path) = other.strip_prefix("graph:") else {
                return Err(Failure::Input(format!(
                    "unknown mode {other:?}: expected trivial, adjoint or graph:<file>"
                )));
            };
            let input = io::parse_omnirep(&read(path)?, validate)?;
            same_algebra(&alg, input.rho.algebra())?;
            let phi = input
                .graph_phi
                .ok_or_else(|| Failure::Input("graph mode needs a graph_phi entry".into()))?;
            vec![compare_graph(&input.rho, &phi, max_degree)?]
        }
    };
    let all_agree = comparisons.iter().all(Comparison::agrees);
    if json {
        let rows: Vec<_> = comparisons
            .iter()
            .map(|c| json!({"label": c.label, "lp": c.lp, "omni": c.omni, "agree": c.agrees()}))
            .collect();
        print_json(&json!({
            "algebra": algebra,
            "mode": mode,
            "max_degree": max_degree,
            "comparisons": rows,
            "agree": all_agree,
        }));
    } else {
        println!("algebra {algebra}, mode {mode}");
        for c in &comparisons {
            println!("{}:", c.label);
            println!("k  dim H^k  dim H_omni^k");
            for (k, (a, b)) in c.lp.iter().zip(&c.omni).enumerate() {
                let mark = if a == b { "" } else { "  differs" };
                println!("{k}  {a}  {b}{mark}");
            }
        }
        println!("{}", if all_agree { "dimensions agree" } else { "dimensions differ" });
    }
    Ok(all_agree)
}

fn one_based(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn mc(rep: &str, json: bool, validate: bool) -> Outcome {
    let rep = load_rep(rep, validate)?;
    let result = if validate {
        mc_check(&rep)?
    } else {
        rep.algebra().check().map_err(Error::NotLeibniz)?;
        mc_residual(&rep)
    };
    let witness = result.witness();
    if json {
        print_json(&json!({
            "holds": result.holds(),
            "witness": witness.as_ref().map(|(idx, v)| json!({
                "at": idx.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "residual": v.iter().map(format_rational).collect::<Vec<_>>(),
            })),
        }));
    } else if let Some((idx, v)) = &witness {
        let v: Vec<String> = v.iter().map(format_rational).collect();
        println!(
            "Maurer-Cartan equation fails at {} with residual [{}]",
            one_based(idx),
            v.join(", ")
        );
    } else {
        println!("Maurer-Cartan equation holds");
    }
    Ok(result.holds())
}

fn balavoine(seed: u64, trials: usize, json: bool) -> Outcome {
    let report = selftest(seed, trials);
    if json {
        print_json(&json!({"report": report, "passed": report.passed()}));
    } else {
        println!("seed {seed}, {trials} random triples");
        println!("graded skew-symmetry failures: {}", report.skew_failures);
        println!("graded Jacobi failures: {}", report.jacobi_failures);
        println!(
            "[a,a] = 0 vs Leibniz: {} tables ({} Leibniz), {} mismatches",
            report.square_checks, report.square_leibniz, report.square_mismatches
        );
        println!("{}", if report.passed() { "passed" } else { "FAILED" });
    }
    Ok(report.passed())
}

fn catalog_cmd(action: Option<CatalogAction>) -> Outcome {
    match action.unwrap_or(CatalogAction::List) {
        CatalogAction::List => {
            println!("algebras:");
            for name in catalog::ALGEBRA_NAMES {
                println!("  {name:<10} {}", catalog::describe(name).unwrap_or(""));
            }
            println!("representations:");
            for name in catalog::REP_NAMES {
                println!("  {name}");
            }
        }
        CatalogAction::Show { name } => {
            if catalog::ALGEBRA_NAMES.contains(&name.as_str()) {
                println!("{}", io::to_json(&io::algebra_document(&catalog::algebra(&name)?)));
            } else {
                println!("{}", io::to_json(&io::rep_document(&catalog::rep(&name)?)));
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let validate_docs = !cli.no_validate;
    let outcome = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Cohomology { algebra, rep, max_degree, json } => {
            cohomology(&algebra, &rep, max_degree, json, validate_docs)
        }
        Command::OmniCohomology { algebra, omnirep, max_degree, json } => {
            omni_cohomology(&algebra, &omnirep, max_degree, json, validate_docs)
        }
        Command::Compare { algebra, mode, max_degree, json } => {
            compare(&algebra, &mode, max_degree, json, validate_docs)
        }
        Command::McCheck { rep, json } => mc(&rep, json, validate_docs),
        Command::BalavoineSelftest { seed, trials, json } => balavoine(seed, trials, json),
        Command::Catalog { action } => catalog_cmd(action),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
