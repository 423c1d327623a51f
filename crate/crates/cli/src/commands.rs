use std::ffi::OsString;
use std::path::{Path, PathBuf};

use biderlab_core::biderivations::{
    bider_bracket_closure, biderivation_space, constrained_biderivation_space, extract_phi_psi, is_biderivation,
    BracketClosure,
};
use biderlab_core::derivations::{self, unflatten_map};
use biderlab_core::liealg::{catalog, CATALOG};
use biderlab_core::vdecomp::{bider_v_correspondence, compute_v, compute_vpm, verify_direct_sum, VSpace};
use biderlab_core::{Biderivation, BiderivationError, BiderivationSpace, LieAlgebra, Symmetry};
use clap::{error::ErrorKind, Parser, Subcommand};
use serde_json::{json, Value};

use crate::document::{
    algebra_to_document, biderivation_to_document, parse_algebra, parse_biderivation, AlgebraDocument,
};
use crate::error::InputError;
use crate::render::{biderivation_value, matrices_value, matrix_value, triple_value, vector_value, Text};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact derivations, biderivations and related matrix spaces of Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "biderlab", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized catalog entries.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Let `validate` report Jacobi failures instead of rejecting the file.
    #[arg(long, global = true)]
    skip_jacobi: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check indices, factors and the Jacobi identity.
    Validate { file: PathBuf },
    /// Center, lower central series, Killing form, completeness.
    Info { file: PathBuf },
    /// Der(L) and ad(L).
    Derivations { file: PathBuf },
    /// Canonical basis of the biderivation space.
    Biderivations {
        file: PathBuf,
        #[arg(long, conflicts_with = "skew")]
        symmetric: bool,
        #[arg(long)]
        skew: bool,
    },
    /// Check a candidate tuple against both biderivation conditions.
    CheckBider { file: PathBuf, bfile: PathBuf },
    /// Recover φ and ψ for a biderivation of a complete algebra.
    PhiPsi { file: PathBuf, bfile: PathBuf },
    /// The spaces V, V+ and V- of the structure matrices.
    Vdecomp { file: PathBuf },
    /// Whether the biderivation space is closed under the componentwise commutator.
    BracketClosure { file: PathBuf },
    /// List the built-in algebras, or print one as an algebra document.
    Catalog { name: Option<String> },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    text: String,
    /// 0 on success, 1 on a mathematical negative.
    code: i32,
}

impl Report {
    fn emit(self, json: bool) -> Outcome {
        let stdout = if json {
            let doc = json!({
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "version": VERSION,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
            s.push('\n');
            s
        } else {
            self.text
        };
        Outcome { code: self.code, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Catalog { name: Some(name) } => return catalog_document(&name, cli.seed),
        Command::Catalog { name: None } => Ok(catalog_list()),
        Command::Validate { file } => validate(&file, cli.skip_jacobi),
        Command::Info { file } => load(&file).map(|(doc, alg)| info(doc, &alg)),
        Command::Derivations { file } => load(&file).map(|(doc, alg)| derivations(doc, &alg)),
        Command::Biderivations { file, symmetric, skew } => {
            let mode = match (symmetric, skew) {
                (true, _) => Some(Symmetry::Symmetric),
                (_, true) => Some(Symmetry::Skew),
                _ => None,
            };
            load(&file).map(|(doc, alg)| biderivations(doc, &alg, mode))
        }
        Command::CheckBider { file, bfile } => {
            load_pair(&file, &bfile).map(|(doc, alg, b)| check_bider(doc, &alg, &b))
        }
        Command::PhiPsi { file, bfile } => load_pair(&file, &bfile).map(|(doc, alg, b)| phi_psi(doc, &alg, &b)),
        Command::Vdecomp { file } => load(&file).map(|(doc, alg)| vdecomp(doc, &alg)),
        Command::BracketClosure { file } => load(&file).map(|(doc, alg)| bracket_closure(doc, &alg)),
    };
    match result {
        Ok(report) => report.emit(json),
        Err(err) => input_failure(&err),
    }
}

fn input_failure(err: &InputError) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: format!("error: {err}\n") }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })
}

/// Parses and fully validates an algebra file. Solver commands never see
/// an unvalidated table.
fn load(path: &Path) -> Result<(AlgebraDocument, LieAlgebra), InputError> {
    let (doc, alg) = parse_algebra(&read(path)?, true)?;
    let canonical = algebra_to_document(&doc.name, &alg);
    Ok((canonical, alg))
}

fn load_pair(path: &Path, bpath: &Path) -> Result<(AlgebraDocument, LieAlgebra, Biderivation), InputError> {
    let (doc, alg) = load(path)?;
    let (_, b) = parse_biderivation(&read(bpath)?, &alg)?;
    Ok((doc, alg, b))
}

fn algebra_inputs(doc: &AlgebraDocument) -> Value {
    json!({ "algebra": doc })
}

fn title(doc: &AlgebraDocument) -> String {
    if doc.name.is_empty() {
        format!("algebra of dimension {}", doc.dim)
    } else {
        format!("{} (dimension {})", doc.name, doc.dim)
    }
}

fn validate(path: &Path, skip_jacobi: bool) -> Result<Report, InputError> {
    let (doc, alg) = parse_algebra(&read(path)?, !skip_jacobi)?;
    let doc = algebra_to_document(&doc.name, &alg);
    let violation = alg.validate().err();
    let mut text = Text::default();
    text.line(title(&doc));
    let results = match &violation {
        None => {
            text.line("valid: indices, factors and Jacobi identity all check out");
            json!({ "valid": true, "jacobi_violation": null })
        }
        Some(v) => {
            text.line("invalid").line(v.to_string());
            json!({
                "valid": false,
                "jacobi_violation": { "triple": triple_value(v.triple), "residual": vector_value(&v.residual) },
            })
        }
    };
    Ok(Report {
        command: "validate",
        inputs: algebra_inputs(&doc),
        results,
        text: text.finish(),
        code: if violation.is_some() { 1 } else { 0 },
    })
}

fn info(doc: AlgebraDocument, alg: &LieAlgebra) -> Report {
    let lcs = alg.lower_central_series();
    let killing = alg.killing_form();
    let completeness = derivations::is_complete(alg);
    let class = match lcs.nilpotency_class {
        Some(c) => json!(c),
        None => json!("not nilpotent"),
    };
    let center_dim = alg.center().dim();
    let derived_dim = alg.derived_algebra().dim();
    let mut text = Text::default();
    text.line(title(&doc))
        .field("basis", doc.basis.as_deref().unwrap_or_default().join(" "))
        .field("center dimension", center_dim)
        .field("derived algebra dimension", derived_dim)
        .field("lower central series dimensions", format!("{:?}", lcs.dims()))
        .field("nilpotency class", class.as_u64().map_or("not nilpotent".to_owned(), |c| c.to_string()))
        .field("two-step nilpotent", alg.is_two_step())
        .field("Killing form rank", killing.rank)
        .field("semisimple", killing.semisimple)
        .field("complete", completeness.complete);
    Report {
        command: "info",
        inputs: algebra_inputs(&doc),
        results: json!({
            "dim": alg.dim(),
            "center_dim": center_dim,
            "derived_dim": derived_dim,
            "lower_central_series_dims": lcs.dims(),
            "nilpotency_class": class,
            "two_step": alg.is_two_step(),
            "killing_rank": killing.rank,
            "killing_determinant": biderlab_core::rational::format(&killing.determinant),
            "semisimple": killing.semisimple,
            "complete": completeness.complete,
        }),
        text: text.finish(),
        code: 0,
    }
}

fn derivations(doc: AlgebraDocument, alg: &LieAlgebra) -> Report {
    let n = alg.dim();
    let der = derivations::derivation_space(alg);
    let completeness = derivations::is_complete(alg);
    let basis: Vec<_> = der.basis().iter().map(|v| unflatten_map(n, v)).collect();
    let mut text = Text::default();
    text.line(title(&doc))
        .field("dim Der", completeness.der_dim)
        .field("dim ad", completeness.inner_dim)
        .field("complete", completeness.complete);
    for (i, d) in basis.iter().enumerate() {
        text.matrix(&format!("D{}", i + 1), d);
    }
    Report {
        command: "derivations",
        inputs: algebra_inputs(&doc),
        results: json!({
            "der_dim": completeness.der_dim,
            "inner_dim": completeness.inner_dim,
            "center_dim": completeness.center_dim,
            "complete": completeness.complete,
            "basis": matrices_value(&basis),
        }),
        text: text.finish(),
        code: 0,
    }
}

fn mode_name(mode: Option<Symmetry>) -> &'static str {
    match mode {
        None => "all",
        Some(Symmetry::Symmetric) => "symmetric",
        Some(Symmetry::Skew) => "skew",
    }
}

fn space_for(alg: &LieAlgebra, mode: Option<Symmetry>) -> BiderivationSpace {
    match mode {
        None => biderivation_space(alg),
        Some(m) => constrained_biderivation_space(alg, m),
    }
}

fn basis_text(text: &mut Text, basis: &[Biderivation]) {
    for (a, b) in basis.iter().enumerate() {
        text.biderivation(&format!("basis[{}]", a + 1), b);
    }
}

fn biderivations(doc: AlgebraDocument, alg: &LieAlgebra, mode: Option<Symmetry>) -> Report {
    let space = space_for(alg, mode);
    let basis = space.basis();
    let mut text = Text::default();
    text.line(title(&doc)).field("mode", mode_name(mode)).field("dim", space.dim());
    basis_text(&mut text, &basis);
    Report {
        command: "biderivations",
        inputs: json!({ "algebra": doc, "mode": mode_name(mode) }),
        results: json!({
            "mode": mode_name(mode),
            "dim": space.dim(),
            "basis": basis.iter().map(biderivation_value).collect::<Vec<_>>(),
        }),
        text: text.finish(),
        code: 0,
    }
}

fn check_bider(doc: AlgebraDocument, alg: &LieAlgebra, b: &Biderivation) -> Report {
    let inputs = json!({ "algebra": doc, "biderivation": biderivation_to_document(b) });
    let mut text = Text::default();
    text.line(title(&doc));
    let (results, code) = match is_biderivation(alg, b) {
        Ok(()) => {
            text.line("ok: both conditions hold on every basis triple");
            (json!({ "is_biderivation": true, "violation": null }), 0)
        }
        Err(v) => {
            text.line("not a biderivation").line(v.to_string());
            let violation = json!({
                "condition": v.condition,
                "triple": triple_value(v.triple),
                "residual": vector_value(&v.residual),
            });
            (json!({ "is_biderivation": false, "violation": violation }), 1)
        }
    };
    Report { command: "check-bider", inputs, results, text: text.finish(), code }
}

fn classification(b: &Biderivation) -> &'static str {
    match (b.is_symmetric(), b.is_skew_symmetric()) {
        (true, true) => "zero",
        (true, false) => "symmetric",
        (false, true) => "skew",
        (false, false) => "neither",
    }
}

fn phi_psi(doc: AlgebraDocument, alg: &LieAlgebra, b: &Biderivation) -> Report {
    let inputs = json!({ "algebra": doc, "biderivation": biderivation_to_document(b) });
    let mut text = Text::default();
    text.line(title(&doc));
    let (results, code) = match extract_phi_psi(alg, b) {
        Ok(pair) => {
            let minus_q = pair.q.scale(&biderlab_core::rational::int(-1));
            text.field("classification", classification(b))
                .field("P = Q", pair.p == pair.q)
                .field("P = -Q", pair.p == minus_q)
                .matrix("P (column j is phi(e_j))", &pair.p)
                .matrix("Q (column j is psi(e_j))", &pair.q);
            let results = json!({
                "ok": true,
                "classification": classification(b),
                "p": matrix_value(&pair.p),
                "q": matrix_value(&pair.q),
                "p_equals_q": pair.p == pair.q,
                "p_equals_minus_q": pair.p == minus_q,
            });
            (results, 0)
        }
        Err(err) => {
            let reason = match &err {
                BiderivationError::NotComplete => "not_complete",
                BiderivationError::NotBiderivation(_) => "not_biderivation",
                _ => "internal",
            };
            text.line(format!("no phi/psi pair: {err}"));
            (json!({ "ok": false, "reason": reason, "message": err.to_string() }), 1)
        }
    };
    Report { command: "phi-psi", inputs, results, text: text.finish(), code }
}

fn vdecomp(doc: AlgebraDocument, alg: &LieAlgebra) -> Report {
    let VSpace { v, witnesses } = compute_v(alg);
    let (plus, minus) = compute_vpm(alg);
    let report = verify_direct_sum(alg);
    let correspondence = if report.complete {
        bider_v_correspondence(alg).ok()
    } else {
        None
    };
    let correspondence_holds = correspondence.as_ref().is_none_or(|c| c.holds());
    let code = if report.is_direct_sum && correspondence_holds { 0 } else { 1 };

    let mut text = Text::default();
    text.line(title(&doc))
        .line("M is the transpose of the phi-matrix P: M A_i = A_i Q for all i")
        .field("dim V", report.v_dim)
        .field("dim V+", report.vplus_dim)
        .field("dim V-", report.vminus_dim)
        .field("dim (V+ + V-)", report.sum_dim)
        .field("dim (V+ ∩ V-)", report.intersection_dim)
        .field("V = V+ (+) V-", report.is_direct_sum)
        .field("complete", report.complete);
    if let Some(c) = &correspondence {
        text.field("dim BiDer", c.bider_dim)
            .field("P^T in V for every basis biderivation", c.transposes_in_v);
        if let Some(s) = &c.semisimple {
            text.field("simple factors", s.factors);
        }
        text.field("correspondence holds", c.holds());
    }
    for (i, (m, q)) in v.basis().iter().zip(&witnesses).enumerate() {
        text.matrix(&format!("V[{}]", i + 1), m).matrix(&format!("  witness Q[{}]", i + 1), q);
    }
    for (i, m) in plus.basis().iter().enumerate() {
        text.matrix(&format!("V+[{}]", i + 1), m);
    }
    for (i, m) in minus.basis().iter().enumerate() {
        text.matrix(&format!("V-[{}]", i + 1), m);
    }

    let correspondence_value = correspondence.as_ref().map(|c| {
        json!({
            "bider_dim": c.bider_dim,
            "v_dim": c.v_dim,
            "transposes_in_v": c.transposes_in_v,
            "semisimple": c.semisimple.as_ref().map(|s| json!({
                "factors": s.factors,
                "vplus_dim": s.vplus_dim,
                "vminus_dim": s.vminus_dim,
                "holds": s.holds(),
            })),
            "holds": c.holds(),
        })
    });
    Report {
        command: "vdecomp",
        inputs: algebra_inputs(&doc),
        results: json!({
            "orientation": "M = P^T, the transpose of the phi-matrix; M A_i = A_i Q",
            "v_dim": report.v_dim,
            "vplus_dim": report.vplus_dim,
            "vminus_dim": report.vminus_dim,
            "sum_dim": report.sum_dim,
            "intersection_dim": report.intersection_dim,
            "direct_sum": report.is_direct_sum,
            "complete": report.complete,
            "v_basis": matrices_value(&v.basis()),
            "witnesses": matrices_value(&witnesses),
            "vplus_basis": matrices_value(&plus.basis()),
            "vminus_basis": matrices_value(&minus.basis()),
            "correspondence": correspondence_value,
        }),
        text: text.finish(),
        code,
    }
}

fn bracket_closure(doc: AlgebraDocument, alg: &LieAlgebra) -> Report {
    let basis = biderivation_space(alg).basis();
    let mut text = Text::default();
    text.line(title(&doc)).field("dim BiDer", basis.len());
    let (results, code) = match bider_bracket_closure(alg) {
        BracketClosure::Closed { algebra } => {
            let induced = algebra_to_document("induced bracket on BiDer", &algebra);
            text.line("closed under the componentwise commutator");
            for entry in &induced.brackets {
                let terms: Vec<String> = entry
                    .result
                    .iter()
                    .map(|t| format!("{} B{}", t.coeff, t.index + 1))
                    .collect();
                text.line(format!("  {{B{}, B{}}} = {}", entry.left + 1, entry.right + 1, terms.join(" + ")));
            }
            (json!({ "closed": true, "dim": basis.len(), "algebra": induced, "basis": basis.iter().map(biderivation_value).collect::<Vec<_>>() }), 0)
        }
        BracketClosure::NotClosed { pair: (a, b), commutator } => {
            text.line(format!("not closed: the commutator of basis elements {} and {} leaves the space", a + 1, b + 1));
            text.biderivation("commutator", &commutator);
            let results = json!({
                "closed": false,
                "dim": basis.len(),
                "pair": [a, b],
                "commutator": biderivation_value(&commutator),
                "basis": basis.iter().map(biderivation_value).collect::<Vec<_>>(),
            });
            (results, 1)
        }
    };
    Report { command: "bracket-closure", inputs: algebra_inputs(&doc), results, text: text.finish(), code }
}

fn catalog_list() -> Report {
    let mut text = Text::default();
    let width = CATALOG.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    for (name, description) in CATALOG {
        text.line(format!("{name:<width$}  {description}"));
    }
    let entries: Vec<Value> = CATALOG
        .iter()
        .map(|(name, description)| json!({ "name": name, "description": description }))
        .collect();
    Report {
        command: "catalog",
        inputs: json!({}),
        results: json!({ "entries": entries }),
        text: text.finish(),
        code: 0,
    }
}

/// Always the bare algebra document, so the output can be fed back in.
fn catalog_document(name: &str, seed: u64) -> Outcome {
    match catalog(name, seed) {
        Ok(alg) => {
            let doc = algebra_to_document(name, &alg);
            let value = serde_json::to_value(&doc).expect("documents serialize");
            let mut stdout = serde_json::to_string_pretty(&value).expect("values serialize");
            stdout.push('\n');
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(err) => input_failure(&InputError::Catalog(format!("{err}; run `biderlab catalog` for the list"))),
    }
}
