//! `bga`: validate ribbon-graph files, compute the derived invariants of
//! their Brauer graph algebras, compare fingerprints, and run the seeded
//! property suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation or hypothesis error,
//! 3 fingerprints distinguished (`compare` only), 4 internal cross-check
//! failure.

use brauer::algebra::{
    build_table, center_predicted, center_solve, deformation_note, expand_center_prediction,
    gram_form, CenterGenerator,
};
use brauer::corpus::{run_suites, CorpusSpec};
use brauer::exactla::{Field, FieldSpec, PrimeField, Rationals};
use brauer::invariants::{cartan_diagnostics, cartan_matrix, compare, fingerprint, CompareError, InvariantError};
use brauer::num::bigint::BigInt;
use brauer::quiver::{classify_special, detect_caterpillar, reduce, Presentation, ReducedPresentation};
use brauer::ribbon::{parse_bg, RibbonGraph};
use brauer::torus::{cross_check, TorusError};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bga",
    version,
    about = "Brauer graph algebras: derived invariants of ribbon graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a .bg file, reporting the surface data
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Full invariant fingerprint of a graph
    Fingerprint {
        path: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the fingerprints of two graphs (exit 3 when distinguished)
    Compare {
        path_a: PathBuf,
        path_b: PathBuf,
        #[arg(long)]
        field: Option<String>,
        /// Also compare genus, algebra/center dimensions and Cartan factors
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
    /// Center of the algebra: exact solver against the closed form
    Center {
        path: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Cartan matrix, its rank rule and Smith normal form
    Cartan {
        path: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Torus rank: closed formula against the exponent lattice
    #[command(name = "torus-rank")]
    TorusRank {
        path: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Dump the algebra table: basis, products, symmetrizing form
    Algebra {
        path: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random corpus and run every property suite over it
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long = "max-edges", default_value_t = 8)]
        max_edges: usize,
        #[arg(long = "max-mult", default_value_t = 3)]
        max_mult: u32,
        #[arg(long = "deform-prob", default_value_t = 0.25)]
        deform_prob: f64,
        #[arg(long)]
        field: Option<String>,
        /// Write the generated graphs as numbered .bg files into a directory
        #[arg(long = "dump-dir")]
        dump_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Validation(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Internal(_) => 4,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Internal(t) => CliError::Internal(t.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn load_graph(path: &Path) -> Result<RibbonGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|x| x == "json") {
        RibbonGraph::from_json_str(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    } else {
        parse_bg(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    }
}

fn resolve_field(flag: &Option<String>, g: &RibbonGraph) -> Result<FieldSpec, CliError> {
    match flag {
        Some(s) => FieldSpec::parse(s).map_err(|e| CliError::Usage(format!("--field {s}: {e}"))),
        None => Ok(g.field().unwrap_or(FieldSpec::Rationals)),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        print!("{}", text());
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Validate { path, json } => cmd_validate(&path, json),
        Cmd::Fingerprint { path, field, json } => cmd_fingerprint(&path, &field, json),
        Cmd::Compare {
            path_a,
            path_b,
            field,
            extended,
            json,
        } => cmd_compare(&path_a, &path_b, &field, extended, json),
        Cmd::Center { path, field, json } => cmd_center(&path, &field, json),
        Cmd::Cartan { path, field, json } => cmd_cartan(&path, &field, json),
        Cmd::TorusRank { path, field, json } => cmd_torus(&path, &field, json),
        Cmd::Algebra { path, field, json } => cmd_algebra(&path, &field, json),
        Cmd::Corpus {
            seed,
            count,
            max_edges,
            max_mult,
            deform_prob,
            field,
            dump_dir,
            json,
        } => {
            let field = match field {
                Some(s) => FieldSpec::parse(&s)
                    .map_err(|e| CliError::Usage(format!("--field {s}: {e}")))?,
                None => FieldSpec::Rationals,
            };
            let spec = CorpusSpec {
                seed,
                count,
                max_edges,
                max_mult,
                deform_prob,
                field,
            };
            if let Some(dir) = &dump_dir {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::Validation(format!("{}: {e}", dir.display())))?;
                for (i, g) in brauer::corpus::generate(&spec).iter().enumerate() {
                    let path = dir.join(format!("{i:04}.bg"));
                    std::fs::write(&path, g.to_bg_string())
                        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
                }
            }
            let report = run_suites(&spec);
            emit(json, &report, || report.render());
            if report.all_passed() {
                Ok(0)
            } else {
                Err(CliError::Internal("corpus property suites failed".into()))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ValidateReport {
    path: String,
    valid: bool,
    n_vertices: usize,
    n_edges: usize,
    n_faces: usize,
    genus: u32,
    perimeters: Vec<usize>,
    multiplicities: Vec<u32>,
    bipartite: bool,
    deformed_count: usize,
    field: FieldSpec,
    flags: brauer::quiver::SpecialFlags,
    caterpillar: bool,
    /// JSON mirror of the graph, accepted back by any command via a
    /// `.json` file.
    graph: serde_json::Value,
}

fn cmd_validate(path: &Path, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let (_, genus) = g.euler_genus();
    let p = Presentation::from_graph(&g);
    let rep = ValidateReport {
        path: path.display().to_string(),
        valid: true,
        n_vertices: g.n_vertices(),
        n_edges: g.n_edges(),
        n_faces: g.faces().len(),
        genus,
        perimeters: g.perimeters_sorted(),
        multiplicities: g.multiplicities_sorted(),
        bipartite: g.is_bipartite(),
        deformed_count: g.deformed().len(),
        field: g.field().unwrap_or(FieldSpec::Rationals),
        flags: classify_special(&g),
        caterpillar: detect_caterpillar(&p).is_some(),
        graph: g.to_json_value(),
    };
    emit(json, &rep, || {
        let mut s = String::new();
        s += &format!("valid: {}\n", rep.path);
        s += &format!(
            "vertices: {}  edges: {}  faces: {}  genus: {}\n",
            rep.n_vertices, rep.n_edges, rep.n_faces, rep.genus
        );
        s += &format!("perimeters: {:?}\n", rep.perimeters);
        s += &format!("multiplicities: {:?}\n", rep.multiplicities);
        s += &format!("bipartite: {}\n", rep.bipartite);
        s += &format!("deformed marks: {}\n", rep.deformed_count);
        s += &format!("field: {}\n", rep.field);
        s += &format!(
            "flags: local={} exceptional_presentation={} excluded_symmetry_case={} caterpillar={}\n",
            rep.flags.local,
            rep.flags.exceptional_presentation,
            rep.flags.excluded_symmetry_case,
            rep.caterpillar
        );
        s
    });
    Ok(0)
}

// ---------------------------------------------------------------------------
// fingerprint and compare
// ---------------------------------------------------------------------------

fn render_fingerprint(f: &brauer::Fingerprint) -> String {
    let mut s = String::new();
    s += &format!("field: {}\n", f.field);
    s += &format!(
        "vertices: {}  edges: {}  faces: {}  genus: {}\n",
        f.n_vertices, f.n_edges, f.n_faces, f.genus
    );
    s += &format!("perimeters: {:?}\n", f.perimeters);
    s += &format!("multiplicities: {:?}\n", f.multiplicities);
    s += &format!("bipartite: {}\n", f.bipartite);
    s += &format!("deformed marks: {}\n", f.deformed_count);
    match f.torus_rank {
        Some(r) => s += &format!("torus rank: {r}\n"),
        None => {
            s += &format!(
                "torus rank: omitted ({})\n",
                f.torus_rank_omitted.as_deref().unwrap_or("unknown")
            )
        }
    }
    s += &format!("dim algebra: {}\n", f.dim_algebra);
    s += &format!("dim center: {}\n", f.dim_center);
    s += &format!("cartan snf: [{}]\n", f.cartan_snf.join(", "));
    s += &format!(
        "flags: local={} exceptional_presentation={} excluded_symmetry_case={} caterpillar={}\n",
        f.flags.local,
        f.flags.exceptional_presentation,
        f.flags.excluded_symmetry_case,
        f.flags.caterpillar
    );
    s
}

fn cmd_fingerprint(path: &Path, field: &Option<String>, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let spec = resolve_field(field, &g)?;
    let f = fingerprint(&g, spec)?;
    emit(json, &f, || render_fingerprint(&f));
    Ok(0)
}

#[derive(Serialize)]
struct CompareJson {
    verdict: String,
    distinguished: bool,
    differing: Vec<String>,
    compared: Vec<String>,
    extended: bool,
}

fn cmd_compare(
    path_a: &Path,
    path_b: &Path,
    field: &Option<String>,
    extended: bool,
    json: bool,
) -> Result<u8, CliError> {
    let ga = load_graph(path_a)?;
    let gb = load_graph(path_b)?;
    let spec_a = resolve_field(field, &ga)?;
    let spec_b = resolve_field(field, &gb)?;
    let fa = fingerprint(&ga, spec_a)?;
    let fb = fingerprint(&gb, spec_b)?;
    let rep = compare(&fa, &fb, extended).map_err(|e: CompareError| CliError::Validation(e.to_string()))?;
    let out = CompareJson {
        verdict: rep.verdict(),
        distinguished: rep.distinguished,
        differing: rep.differing.clone(),
        compared: rep.compared.clone(),
        extended,
    };
    emit(json, &out, || format!("{}\n", out.verdict));
    Ok(if rep.distinguished { 3 } else { 0 })
}

// ---------------------------------------------------------------------------
// center
// ---------------------------------------------------------------------------

fn render_generator(
    gen: &CenterGenerator,
    g: &RibbonGraph,
    r: &ReducedPresentation,
) -> String {
    match gen {
        CenterGenerator::One => "1".to_string(),
        CenterGenerator::CycleSum { cycle, power } => {
            let vertex = g.vertex_of(r.cycles[*cycle].arrows[0]);
            format!("m[{},{power}]", g.vertices()[vertex].name)
        }
        CenterGenerator::LoopComplement { cycle, pos } => {
            let arrow = r.cycles[*cycle].arrows[*pos];
            format!("q[{}]", g.halfedge_name(arrow))
        }
        CenterGenerator::Socle { vertex } => {
            format!("s[{}]", g.edges()[*vertex].name)
        }
    }
}

#[derive(Serialize)]
struct CenterJson {
    path: String,
    field: FieldSpec,
    solver_dim: usize,
    predicted_dim: usize,
    formula_dim: usize,
    agree: bool,
    elements: Vec<String>,
    /// `None` when the quotient description is suppressed (the
    /// multiplicity-1 loop algebra).
    quotient_mults: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn center_json<F: Field>(path: &Path, g: &RibbonGraph, field: &F) -> Result<CenterJson, CliError> {
    let p = Presentation::from_graph(g);
    let r = reduce(&p);
    let table = build_table(&r, field).map_err(|e| CliError::Validation(e.to_string()))?;
    let solved = center_solve(&table);
    let predicted = center_predicted(&p, &r);
    let mult_excess: u32 = (0..g.n_vertices()).map(|v| g.mult(v).saturating_sub(1)).sum();
    let formula_dim = 1 + mult_excess as usize + predicted.free_loop_count + g.n_edges();
    for z in expand_center_prediction(&table, &predicted) {
        if !table.commutes_with_all(&z) {
            return Err(CliError::Internal(
                "a predicted center element fails to commute".into(),
            ));
        }
    }
    Ok(CenterJson {
        path: path.display().to_string(),
        field: field.spec(),
        solver_dim: solved.dim,
        predicted_dim: predicted.dim,
        formula_dim,
        agree: solved.dim == predicted.dim && predicted.dim == formula_dim,
        elements: predicted
            .generators
            .iter()
            .map(|gen| render_generator(gen, g, &r))
            .collect(),
        quotient_mults: predicted.quotient_mults,
        note: deformation_note(field.spec(), g.deformed().len()),
    })
}

fn cmd_center(path: &Path, field: &Option<String>, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let spec = resolve_field(field, &g)?;
    let rep = match spec {
        FieldSpec::Rationals => center_json(path, &g, &Rationals)?,
        FieldSpec::Prime(p) => center_json(
            path,
            &g,
            &PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?,
        )?,
    };
    if !rep.agree {
        eprintln!(
            "error: center solver dimension {} disagrees with prediction {} / formula {}",
            rep.solver_dim, rep.predicted_dim, rep.formula_dim
        );
        return Err(CliError::Internal("center oracle mismatch".into()));
    }
    emit(json, &rep, || {
        let mut s = String::new();
        s += &format!("center of {} over {}\n", rep.path, rep.field);
        s += &format!("solver dimension: {}\n", rep.solver_dim);
        s += &format!("predicted dimension: {}\n", rep.predicted_dim);
        s += &format!("closed formula 1 + sum(m-1) + loops + |E|: {}\n", rep.formula_dim);
        s += &format!("agreement: {}\n", if rep.agree { "yes" } else { "NO" });
        s += &format!("elements: {}\n", rep.elements.join(", "));
        match &rep.quotient_mults {
            Some(m) => s += &format!("quotient multiplicities: {m:?}\n"),
            None => s += "quotient multiplicities: suppressed (multiplicity-1 loop algebra)\n",
        }
        if let Some(n) = &rep.note {
            s += &format!("note: {n}\n");
        }
        s
    });
    Ok(0)
}

// ---------------------------------------------------------------------------
// cartan
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CartanJson {
    path: String,
    matrix: Vec<Vec<u64>>,
    simples: Vec<String>,
    rank: usize,
    expected_rank: usize,
    bipartite: bool,
    rule_ok: bool,
    symmetric: bool,
    snf: Vec<String>,
}

fn cmd_cartan(path: &Path, field: &Option<String>, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let spec = resolve_field(field, &g)?;
    let r = reduce(&Presentation::from_graph(&g));
    let c = match spec {
        FieldSpec::Rationals => cartan_matrix(
            &build_table(&r, &Rationals).map_err(|e| CliError::Validation(e.to_string()))?,
        ),
        FieldSpec::Prime(p) => cartan_matrix(
            &build_table(&r, &PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?)
                .map_err(|e| CliError::Validation(e.to_string()))?,
        ),
    };
    let rep = cartan_diagnostics(&c, &g);
    let out = CartanJson {
        path: path.display().to_string(),
        matrix: (0..c.rows())
            .map(|i| {
                (0..c.cols())
                    .map(|j| c.at(i, j).to_string().parse().expect("cartan entries are small"))
                    .collect()
            })
            .collect(),
        simples: g.edges().iter().map(|e| e.name.clone()).collect(),
        rank: rep.rank,
        expected_rank: rep.expected_rank,
        bipartite: rep.bipartite,
        rule_ok: rep.rule_ok,
        symmetric: rep.symmetric,
        snf: rep.snf.iter().map(BigInt::to_string).collect(),
    };
    if !out.rule_ok {
        eprintln!(
            "error: Cartan rank {} violates the bipartite rank rule (expected {})",
            out.rank, out.expected_rank
        );
        return Err(CliError::Internal("Cartan rank rule violated".into()));
    }
    emit(json, &out, || {
        let mut s = String::new();
        s += &format!("Cartan matrix of {} (simples: {})\n", out.path, out.simples.join(", "));
        for row in &out.matrix {
            s += &format!(
                "  [{}]\n",
                row.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
            );
        }
        s += &format!(
            "rank: {} (expected {}, bipartite: {})  rule_ok: {}\n",
            out.rank, out.expected_rank, out.bipartite, out.rule_ok
        );
        s += &format!("symmetric: {}\n", out.symmetric);
        s += &format!("smith normal form: [{}]\n", out.snf.join(", "));
        s
    });
    Ok(0)
}

// ---------------------------------------------------------------------------
// torus rank
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TorusJson {
    path: String,
    field: FieldSpec,
    n_vertices: usize,
    n_edges: usize,
    d: usize,
    formula: i64,
    lattice_rank: i64,
    exp_rank: usize,
    dim_d_gamma: usize,
    agree: bool,
}

fn cmd_torus(path: &Path, field: &Option<String>, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let spec = resolve_field(field, &g)?;
    let p = Presentation::from_graph(&g);
    let rep = cross_check(&p, spec).map_err(|e| match e {
        TorusError::RankLemmaViolation { .. } | TorusError::OracleMismatch { .. } => {
            CliError::Internal(e.to_string())
        }
        other => CliError::Validation(other.to_string()),
    })?;
    let out = TorusJson {
        path: path.display().to_string(),
        field: spec,
        n_vertices: rep.n_vertices,
        n_edges: rep.n_edges,
        d: rep.d,
        formula: rep.formula,
        lattice_rank: rep.lattice.rank_da,
        exp_rank: rep.lattice.exp_rank,
        dim_d_gamma: rep.lattice.dim_d_gamma,
        agree: true,
    };
    emit(json, &out, || {
        let mut s = String::new();
        s += &format!("torus rank of {} over {}\n", out.path, out.field);
        s += &format!(
            "|E| = {}, |V| = {}, d = {}\n",
            out.n_edges, out.n_vertices, out.d
        );
        s += &format!("formula |E|-|V|-d+2: {}\n", out.formula);
        s += &format!(
            "lattice: exponent rank {} (= |V|+d), dim {} , rank {}\n",
            out.exp_rank, out.dim_d_gamma, out.lattice_rank
        );
        s += "agreement: yes\n";
        s
    });
    Ok(0)
}

// ---------------------------------------------------------------------------
// algebra table dump
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ProductJson {
    left: usize,
    right: usize,
    coeff: String,
    result: usize,
}

#[derive(Serialize)]
struct AlgebraJson {
    path: String,
    field: FieldSpec,
    dim: usize,
    two_dim: bool,
    basis: Vec<String>,
    gram_rank: usize,
    gram_nondegenerate: bool,
    symmetry: String,
    center_dim: usize,
    products: Vec<ProductJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn basis_label<F: Field>(
    t: &brauer::AlgebraTable<F>,
    b: usize,
    g: &RibbonGraph,
    r: &ReducedPresentation,
) -> String {
    match t.basis()[b] {
        brauer::algebra::BasisElement::Idem(v) => format!("e[{}]", g.edges()[v].name),
        brauer::algebra::BasisElement::Soc(v) => format!("s[{}]", g.edges()[v].name),
        brauer::algebra::BasisElement::Path { cycle, start, len } => {
            let c = &r.cycles[cycle];
            let names: Vec<&str> = (0..len)
                .map(|k| g.halfedge_name(c.arrows[(start + k) % c.len()]))
                .collect();
            names.join("*")
        }
    }
}

fn algebra_json<F: Field>(path: &Path, g: &RibbonGraph, field: &F) -> Result<AlgebraJson, CliError> {
    let r = reduce(&Presentation::from_graph(g));
    let t = build_table(&r, field).map_err(|e| CliError::Validation(e.to_string()))?;
    let gram = gram_form(&t);
    let excluded = classify_special(g).excluded_symmetry_case;
    let symmetry = if gram.nondegenerate {
        "symmetric".to_string()
    } else if excluded {
        "inconclusive (standard form degenerates on the excluded case)".to_string()
    } else {
        return Err(CliError::Internal(
            "standard form degenerated outside the excluded case".into(),
        ));
    };
    let mut products = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            if let Some((c, k)) = t.mul_basis(i, j) {
                products.push(ProductJson {
                    left: i,
                    right: j,
                    coeff: c.to_string(),
                    result: k,
                });
            }
        }
    }
    Ok(AlgebraJson {
        path: path.display().to_string(),
        field: field.spec(),
        dim: t.dim(),
        two_dim: t.two_dim,
        basis: (0..t.dim()).map(|b| basis_label(&t, b, g, &r)).collect(),
        gram_rank: gram.rank,
        gram_nondegenerate: gram.nondegenerate,
        symmetry,
        center_dim: center_solve(&t).dim,
        products,
        note: deformation_note(field.spec(), g.deformed().len()),
    })
}

fn cmd_algebra(path: &Path, field: &Option<String>, json: bool) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let spec = resolve_field(field, &g)?;
    let rep = match spec {
        FieldSpec::Rationals => algebra_json(path, &g, &Rationals)?,
        FieldSpec::Prime(p) => algebra_json(
            path,
            &g,
            &PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?,
        )?,
    };
    emit(json, &rep, || {
        let mut s = String::new();
        s += &format!("algebra of {} over {}\n", rep.path, rep.field);
        s += &format!("dimension: {}\n", rep.dim);
        s += &format!("basis: {}\n", rep.basis.join(", "));
        s += &format!(
            "gram rank: {} / {}  ({})\n",
            rep.gram_rank, rep.dim, rep.symmetry
        );
        s += &format!("center dimension: {}\n", rep.center_dim);
        s += &format!("nonzero products: {}\n", rep.products.len());
        if let Some(n) = &rep.note {
            s += &format!("note: {n}\n");
        }
        s
    });
    Ok(0)
}
