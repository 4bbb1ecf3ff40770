//! The `tridend` command line.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage error or
//! unknown id, 3 unreadable input.

pub mod render;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::algebra::{AssocProduct, CenterMode, ProductTag, TdaFile, TridendriformAlgebra};
use crate::catalog::{self, AuditPolicy, CatalogError, Params};
use crate::exactla::{Rational, SubspaceBasis};
use crate::opspaces::{compare, fingerprint, operator_space, Comparison, OperatorKind};
use crate::rotabaxter::{self, stock, AssociativeAlgebra, RotaBaxterData};
use render::*;

#[derive(Debug, Parser)]
#[command(name = "tridend", version, about = "Exact computations on tridendriform algebras")]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub machine: bool,
    /// Also write the JSON document to this file
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Catalog id (see `tridend catalog`) or path to a TDA file
    pub source: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Catalog parameters, e.g. a=2,b=3/4. Unbound ones default to a=2,b=3,c=5,d=7
    #[arg(long)]
    pub params: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct RbArgs {
    /// Stock associative algebra: idempotent1, ex2-star or zero2
    pub algebra: Option<String>,
    /// Associative algebra file with keys dim, basis, mu
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Operator file with keys R (or operator) and theta
    #[arg(long, value_name = "PATH")]
    pub rb: Option<PathBuf>,
    /// Use R = identity with this weight
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the seven axioms
    Check(SourceArgs),
    /// Derivation space
    Der(SourceArgs),
    /// Central derivations
    Zder(SourceArgs),
    /// Centroid: maps commuting with left and right multiplication
    Centroid(SourceArgs),
    /// Quasi-centroid
    Qcentroid(SourceArgs),
    /// Elements commuting with everything
    Center {
        #[command(flatten)]
        src: SourceArgs,
        /// Restrict to one product (prec, succ, vee)
        #[arg(long)]
        product: Option<String>,
    },
    /// Annihilator of a subspace under every product
    Centralizer {
        #[command(flatten)]
        src: SourceArgs,
        /// Spanning vectors, e.g. "1,0,0;0,1,0"
        #[arg(long)]
        span: String,
    },
    /// Associativity of the sum product
    StarAssoc {
        #[command(flatten)]
        src: SourceArgs,
        /// Check ∨ instead of ∗
        #[arg(long)]
        vee: bool,
    },
    /// Check the Rota-Baxter identity
    RbCheck(RbArgs),
    /// Build the induced tridendriform algebra
    RbConstruct(RbArgs),
    /// Basis-independent invariants
    Fingerprint(SourceArgs),
    /// Compare fingerprints of two algebras
    Compare {
        left: String,
        right: String,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        params2: Option<String>,
    },
    /// List catalog entries, show one, or export it as TDA
    Catalog {
        id: Option<String>,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        export: bool,
    },
    /// Recompute every catalog dimension and compare with the recorded tables
    Tables {
        /// Fixed binding applied to every entry
        #[arg(long)]
        params: Option<String>,
        /// Also sample two more parameter tuples and warn when dimensions move
        #[arg(long)]
        generic: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("cannot read input: {0}")]
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Catalog(_) => 2,
            CliError::Parse(_) => 3,
        }
    }
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub human: String,
    pub machine: String,
    /// Reason and detail when a mathematical check failed.
    pub failure: Option<(String, String)>,
}

impl Report {
    fn ok(human: String, machine: String) -> Self {
        Report {
            human,
            machine,
            failure: None,
        }
    }

    fn failed_if(mut self, failed: bool, reason: impl Into<String>, detail: impl Into<String>) -> Self {
        if failed {
            self.failure = Some((reason.into(), detail.into()));
        }
        self
    }
}

/// Exit code and the bytes for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &report.machine) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    let stdout = if cli.machine { report.machine } else { report.human };
    match report.failure {
        None => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Some((reason, detail)) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {reason}\n{}", indent(&detail)),
        },
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_params(s: Option<&str>) -> Result<Params, CliError> {
    catalog::parse_params(s.unwrap_or("")).map_err(|e| usage(e.to_string()))
}

fn load_tda(path: &Path) -> Result<TridendriformAlgebra, CliError> {
    TridendriformAlgebra::load(path).map_err(|e| CliError::Parse(e.to_string()))
}

/// Catalog id with its bindings, filling unbound declared parameters from the default.
fn load_catalog(id: &str, params: &Params) -> Result<(String, TridendriformAlgebra), CliError> {
    let entry = catalog::lookup(id)?;
    for name in params.keys() {
        if !entry.param_names().contains(&name.as_str()) {
            return Err(CatalogError::ExtraParam {
                id: id.to_string(),
                name: name.clone(),
            }
            .into());
        }
    }
    let mut full = catalog::default_params();
    full.extend(params.clone());
    full.retain(|k, _| entry.param_names().contains(&k.as_str()));
    let alg = entry.instantiate(&full)?;
    let label = if full.is_empty() {
        id.to_string()
    } else {
        let b: Vec<String> = full.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{id} [{}]", b.join(", "))
    };
    Ok((label, alg))
}

fn resolve(source: &str, params: Option<&str>) -> Result<(String, TridendriformAlgebra), CliError> {
    let bindings = parse_params(params)?;
    if catalog::lookup(source).is_ok() || !Path::new(source).is_file() {
        return load_catalog(source, &bindings);
    }
    if params.is_some() {
        return Err(usage("--params applies to catalog ids only"));
    }
    Ok((source.to_string(), load_tda(Path::new(source))?))
}

fn load_source(src: &SourceArgs) -> Result<(String, TridendriformAlgebra), CliError> {
    match (&src.source, &src.file) {
        (Some(s), None) => resolve(s, src.params.as_deref()),
        (None, Some(path)) => {
            if src.params.is_some() {
                return Err(usage("--params applies to catalog ids only"));
            }
            Ok((path.display().to_string(), load_tda(path)?))
        }
        (Some(_), Some(_)) => Err(usage("give either a catalog id or --file, not both")),
        (None, None) => Err(usage("missing input: give a catalog id or --file PATH")),
    }
}

fn kind_label(kind: OperatorKind) -> &'static str {
    match kind {
        OperatorKind::Derivation => "Der",
        OperatorKind::CentralDerivation => "ZDer",
        OperatorKind::Centroid => "C",
        OperatorKind::QuasiCentroid => "QC",
    }
}

fn parse_rational(s: &str, what: &str) -> Result<Rational, CliError> {
    s.trim().parse().map_err(|e| usage(format!("bad {what} {s:?}: {e}")))
}

fn parse_span(s: &str, dim: usize) -> Result<SubspaceBasis, CliError> {
    let vectors = s
        .split(';')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            v.split(',')
                .map(|x| parse_rational(x, "span entry"))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SubspaceBasis::span(dim, vectors).map_err(|e| usage(format!("bad --span: {e}")))
}

fn load_rb(args: &RbArgs) -> Result<(String, AssociativeAlgebra, RotaBaxterData), CliError> {
    let (label, alg) = match (&args.algebra, &args.file) {
        (Some(id), None) => {
            let alg = stock::by_id(id).ok_or_else(|| {
                usage(format!(
                    "unknown stock algebra {id:?}; known: {}",
                    stock::IDS.join(", ")
                ))
            })?;
            (id.clone(), alg)
        }
        (None, Some(path)) => {
            let alg = AssociativeAlgebra::load(path).map_err(|e| CliError::Parse(e.to_string()))?;
            (path.display().to_string(), alg)
        }
        (Some(_), Some(_)) => return Err(usage("give either a stock algebra or --file, not both")),
        (None, None) => return Err(usage("missing algebra: give a stock id or --file PATH")),
    };
    let rb = match (&args.rb, &args.theta) {
        (Some(path), None) => RotaBaxterData::load(path).map_err(|e| CliError::Parse(e.to_string()))?,
        (None, Some(t)) => RotaBaxterData::identity(alg.dim(), parse_rational(t, "--theta")?),
        (Some(_), Some(_)) => return Err(usage("give either --rb or --theta, not both")),
        (None, None) => return Err(usage("missing operator: give --rb PATH or --theta")),
    };
    if rb.operator.rows() != alg.dim() {
        return Err(usage(format!(
            "operator is {0}x{0} but the algebra has dimension {1}",
            rb.operator.rows(),
            alg.dim()
        )));
    }
    Ok((label, alg, rb))
}

fn check(label: String, alg: &TridendriformAlgebra) -> Report {
    let res = alg.axiom_residuals();
    let record = CheckRecord {
        source: label.clone(),
        dim: alg.dim(),
        pass: res.pass,
        failing_axioms: res.failing_axioms(),
        first_failure: res.first_failure.clone(),
    };
    let mut human = format!("{label}: dimension {}\n", alg.dim());
    let detail = match &res.first_failure {
        None => {
            human.push_str("axioms: pass (all seven identities hold on every basis triple)\n");
            String::new()
        }
        Some(f) => {
            let axioms: Vec<String> = record.failing_axioms.iter().map(usize::to_string).collect();
            human.push_str("axioms: FAIL\n");
            human.push_str(&format!("  failing axioms: {}\n", axioms.join(", ")));
            human.push_str(&format!("  first failure: {f}\n"));
            f.to_string()
        }
    };
    Report::ok(human, json(&record)).failed_if(!res.pass, format!("{label} is not tridendriform"), detail)
}

fn space(kind: OperatorKind, label: String, alg: &TridendriformAlgebra) -> Report {
    let s = operator_space(alg, kind);
    let human = format!("{}({label}): {}", kind_label(kind), maps_block(s.basis()));
    Report::ok(human, json(&s.to_record()))
}

fn subspace(kind: &str, title: String, s: &SubspaceBasis) -> Report {
    Report::ok(
        format!("{title}: {}", subspace_block(s)),
        json(&SubspaceRecord::new(kind, s)),
    )
}

fn rb_check(args: &RbArgs) -> Result<Report, CliError> {
    let (label, alg, rb) = load_rb(args)?;
    let witness = rotabaxter::rota_baxter_witness(&alg, &rb).map_err(|e| usage(e.to_string()))?;
    let witness = witness.map(|(i, j)| (i + 1, j + 1));
    let record = RotaBaxterRecord {
        algebra: label.clone(),
        theta: rb.theta.clone(),
        holds: witness.is_none(),
        witness,
    };
    let mut human = format!("R on {label} (dimension {}), weight {}\n", alg.dim(), rb.theta);
    let detail = match witness {
        None => {
            human.push_str("Rota-Baxter identity holds on every basis pair\n");
            String::new()
        }
        Some((i, j)) => {
            let d = format!("R(e{i})R(e{j}) differs from R(R(e{i})e{j} + e{i}R(e{j}) + θ e{i}e{j})");
            human.push_str(&format!("Rota-Baxter identity fails at (e{i}, e{j})\n  {d}\n"));
            d
        }
    };
    Ok(Report::ok(human, json(&record)).failed_if(witness.is_some(), "not a Rota-Baxter operator", detail))
}

fn rb_construct(args: &RbArgs) -> Result<Report, CliError> {
    let (label, alg, rb) = load_rb(args)?;
    let induced = match rotabaxter::induced_tridendriform(&alg, &rb) {
        Ok(t) => t,
        Err(e) => {
            let mut report = rb_check(args)?;
            report.failure = Some(("cannot construct".into(), e.to_string()));
            return Ok(report);
        }
    };
    let res = induced.axiom_residuals();
    let record = ConstructRecord {
        algebra: label.clone(),
        theta: rb.theta.clone(),
        axioms_pass: res.pass,
        first_failure: res.first_failure.clone(),
        induced: TdaFile::from_algebra(&induced),
    };
    let mut human = format!("induced from {label} with weight {}\n", rb.theta);
    match &res.first_failure {
        None => human.push_str("axioms: pass\n"),
        Some(f) => human.push_str(&format!("axioms: FAIL\n  first failure: {f}\n")),
    }
    human.push_str(&induced.to_tda_string());
    let detail = res.first_failure.as_ref().map(ToString::to_string).unwrap_or_default();
    Ok(Report::ok(human, json(&record)).failed_if(!res.pass, "induced algebra is not tridendriform", detail))
}

fn catalog_command(id: Option<&str>, params: Option<&str>, export: bool) -> Result<Report, CliError> {
    let Some(id) = id else {
        if export || params.is_some() {
            return Err(usage("--export and --params need a catalog id"));
        }
        let listing: Vec<CatalogListing> = catalog::entries()
            .map(|e| CatalogListing {
                id: e.id().to_string(),
                dim: e.dim(),
                params: e.param_names().iter().map(|p| p.to_string()).collect(),
            })
            .collect();
        let mut rows = vec![vec!["id".to_string(), "dim".into(), "params".into()]];
        for l in &listing {
            let p = if l.params.is_empty() {
                "-".into()
            } else {
                l.params.join(",")
            };
            rows.push(vec![l.id.clone(), l.dim.to_string(), p]);
        }
        return Ok(Report::ok(columns(&rows), json(&listing)));
    };
    let entry = catalog::lookup(id)?;
    if export {
        let (_, alg) = load_catalog(id, &parse_params(params)?)?;
        let text = alg.to_tda_string();
        return Ok(Report::ok(text.clone(), text));
    }
    if params.is_some() {
        return Err(usage("--params only applies with --export"));
    }
    let detail = CatalogDetail {
        id: entry.id().to_string(),
        dim: entry.dim(),
        params: entry.param_names().iter().map(|p| p.to_string()).collect(),
        table: entry
            .table()
            .map(|(tag, i, j, k, c)| TableLine {
                product: tag.name().to_string(),
                i,
                j,
                k,
                coefficient: c.to_string(),
            })
            .collect(),
        der: entry.expected_der(),
        centroid: entry.expected_centroid(),
        quasi_centroid: entry.expected_quasi_centroid(),
        notes: entry.notes().iter().map(|n| n.to_string()).collect(),
    };
    let mut human = format!("{}: dimension {}", detail.id, detail.dim);
    if !detail.params.is_empty() {
        human.push_str(&format!(", parameters {}", detail.params.join(", ")));
    }
    human.push('\n');
    for (tag, i, j, k, c) in entry.table() {
        let coef = if c == "1" { String::new() } else { format!("({c}) ") };
        human.push_str(&format!("  e{i} {} e{j} += {coef}e{k}\n", tag.symbol()));
    }
    human.push_str(&format!("recorded Der: {}\n", expected_cell(&detail.der)));
    human.push_str(&format!("recorded C:   {}\n", expected_cell(&detail.centroid)));
    human.push_str(&format!("recorded QC:  {}\n", expected_cell(&detail.quasi_centroid)));
    for n in &detail.notes {
        human.push_str(&format!("note: {n}\n"));
    }
    Ok(Report::ok(human, json(&detail)))
}

fn tables(params: Option<&str>, generic: bool) -> Result<Report, CliError> {
    let policy = match (params, generic) {
        (Some(_), true) => return Err(usage("--params and --generic are exclusive")),
        (Some(p), false) => {
            let p = parse_params(Some(p))?;
            if let Some(bad) = p.keys().find(|k| !["a", "b", "c", "d"].contains(&k.as_str())) {
                return Err(usage(format!(
                    "unknown parameter {bad}; catalog parameters are a, b, c, d"
                )));
            }
            AuditPolicy::Fixed(p)
        }
        (None, true) => AuditPolicy::Generic,
        (None, false) => AuditPolicy::Fixed(catalog::default_params()),
    };
    let report = catalog::audit_tables(&policy);
    let mismatches: Vec<String> = report
        .records
        .iter()
        .filter(|r| r.verdict == catalog::Verdict::Mismatch)
        .map(|r| {
            format!(
                "{} {}: computed {}, recorded {}",
                r.id,
                r.invariant,
                r.computed,
                r.expected.unwrap_or(0)
            )
        })
        .chain(
            report
                .ranges
                .iter()
                .filter(|r| r.verdict == catalog::Verdict::Mismatch)
                .map(|r| {
                    format!(
                        "dim-{} {} range: computed {}..{}, {} {}..{}",
                        r.family_dim,
                        r.invariant,
                        r.computed_min,
                        r.computed_max,
                        r.source,
                        r.claimed_min,
                        r.claimed_max
                    )
                }),
        )
        .collect();
    let n = mismatches.len();
    Ok(Report::ok(report.render_human(), report.to_json()).failed_if(
        n > 0,
        format!("{n} audit mismatches"),
        mismatches.join("\n"),
    ))
}

pub fn dispatch(command: &Command) -> Result<Report, CliError> {
    Ok(match command {
        Command::Check(src) => {
            let (label, alg) = load_source(src)?;
            check(label, &alg)
        }
        Command::Der(src) => {
            let (label, alg) = load_source(src)?;
            space(OperatorKind::Derivation, label, &alg)
        }
        Command::Zder(src) => {
            let (label, alg) = load_source(src)?;
            space(OperatorKind::CentralDerivation, label, &alg)
        }
        Command::Centroid(src) => {
            let (label, alg) = load_source(src)?;
            space(OperatorKind::Centroid, label, &alg)
        }
        Command::Qcentroid(src) => {
            let (label, alg) = load_source(src)?;
            space(OperatorKind::QuasiCentroid, label, &alg)
        }
        Command::Center { src, product } => {
            let (label, alg) = load_source(src)?;
            let mode = match product {
                None => CenterMode::AllProducts,
                Some(p) => CenterMode::Single(p.parse::<ProductTag>().map_err(usage)?),
            };
            subspace("center", format!("center({label})"), &alg.center_with(mode))
        }
        Command::Centralizer { src, span } => {
            let (label, alg) = load_source(src)?;
            let a = parse_span(span, alg.dim())?;
            let c = alg.centralizer(&a).expect("span built in the algebra's dimension");
            subspace("centralizer", format!("centralizer({label}; {} vectors)", a.dim()), &c)
        }
        Command::StarAssoc { src, vee } => {
            let (label, alg) = load_source(src)?;
            let (which, name, sym) = if *vee {
                (AssocProduct::Vee, "vee", "∨")
            } else {
                (AssocProduct::Star, "star", "∗")
            };
            let witness = alg.associativity_witness(which).map(|(i, j, k)| (i + 1, j + 1, k + 1));
            let record = AssocRecord {
                source: label.clone(),
                product: name.to_string(),
                associative: witness.is_none(),
                witness,
            };
            let (human, detail) = match witness {
                None => (format!("{sym} on {label}: associative\n"), String::new()),
                Some((i, j, k)) => {
                    let d = format!("(e{i}{sym}e{j}){sym}e{k} differs from e{i}{sym}(e{j}{sym}e{k})");
                    (format!("{sym} on {label}: not associative\n  {d}\n"), d)
                }
            };
            Report::ok(human, json(&record)).failed_if(witness.is_some(), format!("{sym} is not associative"), detail)
        }
        Command::RbCheck(args) => rb_check(args)?,
        Command::RbConstruct(args) => rb_construct(args)?,
        Command::Fingerprint(src) => {
            let (label, alg) = load_source(src)?;
            let f = fingerprint(&alg);
            let human = format!("fingerprint({label})\n{}", fingerprint_lines(&f));
            Report::ok(
                human,
                json(&FingerprintRecord {
                    source: label,
                    fingerprint: f,
                }),
            )
        }
        Command::Compare {
            left,
            right,
            params,
            params2,
        } => {
            let (l_label, l) = resolve(left, params.as_deref())?;
            let (r_label, r) = resolve(right, params2.as_deref())?;
            let (lf, rf) = (fingerprint(&l), fingerprint(&r));
            let comparison = compare(&lf, &rf);
            let verdict = match &comparison {
                Comparison::Distinguishable { invariant, left, right } => {
                    format!("not isomorphic: {invariant} differs ({left} vs {right})\n")
                }
                Comparison::Inconclusive => "inconclusive: every invariant agrees\n".to_string(),
            };
            let human = format!("{l_label} vs {r_label}\n{verdict}");
            let record = CompareRecord {
                left: FingerprintRecord {
                    source: l_label,
                    fingerprint: lf,
                },
                right: FingerprintRecord {
                    source: r_label,
                    fingerprint: rf,
                },
                comparison,
            };
            Report::ok(human, json(&record))
        }
        Command::Catalog { id, params, export } => catalog_command(id.as_deref(), params.as_deref(), *export)?,
        Command::Tables { params, generic } => tables(params.as_deref(), *generic)?,
    })
}
