//! Seeded random ribbon graphs and the exact property suites that run over
//! them. The same suites back the `corpus` CLI command and the acceptance
//! tests, so the shipped behavior is what gets verified.

use crate::algebra::{
    build_table, center_predicted, center_solve, dimension_formula, expand_center_prediction,
    gram_form, sparse_rank, AlgebraError,
};
use crate::exactla::{minors_gcd, smith_normal_form, Field, FieldSpec, Mat, PrimeField, Rationals};
use crate::invariants::{cartan_diagnostics, cartan_matrix};
use crate::quiver::{classify_special, reduce, Presentation};
use crate::ribbon::{parse_bg, RibbonGraph};
use crate::torus;
use num::bigint::BigInt;
use num::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt::Write as _;

/// Parameters of a deterministic corpus run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_edges: usize,
    pub max_mult: u32,
    /// Probability of marking each eligible perimeter-1 face.
    pub deform_prob: f64,
    pub field: FieldSpec,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 1,
            count: 200,
            max_edges: 8,
            max_mult: 3,
            deform_prob: 0.25,
            field: FieldSpec::Rationals,
        }
    }
}

/// Candidate deformation parameters used over fields of characteristic 0.
const T_CHOICES: [&str; 4] = ["1", "2", "3", "1/2"];

fn random_graph(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> RibbonGraph {
    loop {
        let n_edges = rng.gen_range(1..=spec.max_edges);
        let n = 2 * n_edges;
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(rng);

        // connectivity of the group generated by sigma and the pairing
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(h) = stack.pop() {
            let partner = h ^ 1;
            for next in [sigma[h], partner] {
                if !seen[next] {
                    seen[next] = true;
                    reached += 1;
                    stack.push(next);
                }
            }
        }
        if reached != n {
            continue;
        }

        let mut text = String::new();
        let _ = writeln!(text, "field {}", spec.field);
        let mut visited = vec![false; n];
        let mut vid = 0;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut h = start;
            while !visited[h] {
                visited[h] = true;
                orbit.push(h);
                h = sigma[h];
            }
            let mult = rng.gen_range(1..=spec.max_mult);
            let names: Vec<String> = orbit.iter().map(|h| format!("h{h}")).collect();
            let _ = writeln!(text, "vertex v{vid} mult {mult}: {}", names.join(" "));
            vid += 1;
        }
        for e in 0..n_edges {
            let _ = writeln!(text, "edge e{e}: h{} h{}", 2 * e, 2 * e + 1);
        }
        for h in 0..n {
            if sigma[h] != h ^ 1 {
                continue;
            }
            if rng.gen::<f64>() < spec.deform_prob {
                let t = if spec.field.is_char_two() {
                    "1"
                } else {
                    T_CHOICES[rng.gen_range(0..T_CHOICES.len())]
                };
                let _ = writeln!(text, "deformed h{h} t {t}");
            }
        }
        return parse_bg(&text).expect("generated graphs are valid by construction");
    }
}

/// Deterministic corpus: the same spec always yields the same graphs.
pub fn generate(spec: &CorpusSpec) -> Vec<RibbonGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| random_graph(&mut rng, spec))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, index: usize, msg: impl Into<String>) {
        self.failures.push(format!("graph {index}: {}", msg.into()));
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub spec: CorpusSpec,
    pub n_graphs: usize,
    pub outcomes: Vec<SuiteOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    pub fn outcome(&self, name: &str) -> Option<&SuiteOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    /// Deterministic text rendering; identical specs yield identical bytes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(
            out,
            "corpus seed={} count={} max_edges={} max_mult={} deform_prob={} field={}",
            s.seed, s.count, s.max_edges, s.max_mult, s.deform_prob, s.field
        );
        let _ = writeln!(out, "graphs generated: {}", self.n_graphs);
        for o in &self.outcomes {
            let status = if o.failures.is_empty() { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "suite {:<24} checked {:>5}  skipped {:>4}  {}",
                o.name, o.checked, o.skipped, status
            );
            for f in &o.failures {
                let _ = writeln!(out, "  failure: {f}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn perimeter_identities(g: &RibbonGraph, index: usize, out: &mut SuiteOutcome) {
    out.checked += 1;
    let faces = g.faces();
    let total: usize = faces.iter().map(|f| f.perimeter).sum();
    if total != 2 * g.n_edges() {
        out.fail(index, format!("perimeter sum {total} != 2|E| = {}", 2 * g.n_edges()));
        return;
    }
    let not_two: usize = faces
        .iter()
        .map(|f| f.perimeter)
        .filter(|&p| p != 2)
        .sum();
    let two_count = faces.iter().filter(|f| f.perimeter == 2).count();
    if 2 * two_count != 2 * g.n_edges() - not_two {
        out.fail(index, "perimeter-2 count identity failed");
        return;
    }
    let (chi, genus) = g.euler_genus();
    if chi % 2 != 0 || chi > 2 {
        out.fail(index, format!("bad Euler characteristic {chi}"));
    }
    let _ = genus;
}

fn torus_oracle(
    g: &RibbonGraph,
    p: &Presentation,
    index: usize,
    field: FieldSpec,
    out: &mut SuiteOutcome,
) {
    if torus::check_hypotheses(p, field).is_err() {
        out.skipped += 1;
        return;
    }
    out.checked += 1;
    let d = g.deformed().len();
    let lattice = torus::torus_rank_lattice_unchecked(p);
    let expected_rank = g.n_vertices() + d;
    if lattice.exp_rank != expected_rank {
        out.fail(
            index,
            format!("exponent rank {} != |V|+d = {expected_rank}", lattice.exp_rank),
        );
    }
    let formula = torus::torus_rank_formula_unchecked(g.n_edges(), g.n_vertices(), d);
    if lattice.rank_da != formula {
        out.fail(
            index,
            format!("lattice rank {} != formula {formula}", lattice.rank_da),
        );
    }
}

fn center_oracle<F: Field>(
    g: &RibbonGraph,
    p: &Presentation,
    field: &F,
    index: usize,
    out: &mut SuiteOutcome,
) {
    let r = reduce(p);
    let table = match build_table(&r, field) {
        Ok(t) => t,
        Err(AlgebraError::DeformationVanishes { .. }) => {
            out.skipped += 1;
            return;
        }
    };
    out.checked += 1;

    let ell = p.free_loops().len();
    let perim1 = g.faces().iter().filter(|f| f.perimeter == 1).count();
    if ell != perim1 {
        out.fail(index, format!("{ell} free loops but {perim1} perimeter-1 faces"));
        return;
    }
    let mult_excess: u32 = (0..g.n_vertices())
        .map(|v| g.mult(v).saturating_sub(1))
        .sum();
    let formula = 1 + mult_excess as usize + ell + g.n_edges();

    let predicted = center_predicted(p, &r);
    if predicted.dim != formula {
        out.fail(
            index,
            format!("predicted dim {} != closed formula {formula}", predicted.dim),
        );
        return;
    }
    let solved = center_solve(&table);
    if solved.dim != formula {
        out.fail(
            index,
            format!(
                "solver dim {} != formula {formula} over {}",
                solved.dim,
                field.spec()
            ),
        );
        return;
    }
    let expanded = expand_center_prediction(&table, &predicted);
    for (k, z) in expanded.iter().enumerate() {
        if !table.commutes_with_all(z) {
            out.fail(index, format!("predicted element {k} fails to commute"));
            return;
        }
    }
    if sparse_rank(field, table.dim(), &expanded) != predicted.dim {
        out.fail(index, "predicted center elements are linearly dependent");
    }
}

fn cartan_rule(g: &RibbonGraph, p: &Presentation, index: usize, out: &mut SuiteOutcome) {
    out.checked += 1;
    let r = reduce(p);
    let table = build_table(&r, &Rationals).expect("rational t values never vanish over Q");
    let c = cartan_matrix(&table);
    let rep = cartan_diagnostics(&c, g);
    if !rep.symmetric {
        out.fail(index, "Cartan matrix is not symmetric");
        return;
    }
    if !rep.rule_ok {
        out.fail(
            index,
            format!(
                "Cartan rank {} != expected {} (bipartite: {})",
                rep.rank, rep.expected_rank, rep.bipartite
            ),
        );
        return;
    }
    let nonzero = rep.snf.iter().filter(|d| !num::Zero::is_zero(*d)).count();
    if nonzero != rep.rank {
        out.fail(index, "SNF nonzero count disagrees with the rank");
    }
}

fn gram_rule<F: Field>(
    g: &RibbonGraph,
    p: &Presentation,
    field: &F,
    index: usize,
    out: &mut SuiteOutcome,
) {
    let r = reduce(p);
    let table = match build_table(&r, field) {
        Ok(t) => t,
        Err(AlgebraError::DeformationVanishes { .. }) => {
            out.skipped += 1;
            return;
        }
    };
    out.checked += 1;
    let rep = gram_form(&table);
    if !rep.symmetric {
        out.fail(index, "Gram matrix is not symmetric");
        return;
    }
    let excluded = classify_special(g).excluded_symmetry_case;
    if !excluded && !rep.nondegenerate {
        out.fail(
            index,
            format!("Gram rank {} < dim {} outside the excluded case", rep.rank, rep.dim),
        );
    }
}

fn structure_checks<F: Field>(
    g: &RibbonGraph,
    p: &Presentation,
    field: &F,
    seed: u64,
    index: usize,
    out: &mut SuiteOutcome,
) {
    let r = reduce(p);
    let table = match build_table(&r, field) {
        Ok(t) => t,
        Err(AlgebraError::DeformationVanishes { .. }) => {
            out.skipped += 1;
            return;
        }
    };
    out.checked += 1;

    if dimension_formula(&r) != table.dim() {
        out.fail(
            index,
            format!("dimension formula {} != enumerated {}", dimension_formula(&r), table.dim()),
        );
        return;
    }

    match p.to_ribbon() {
        Ok(back) => {
            if !g.combinatorially_eq(&back) {
                out.fail(index, "presentation roundtrip changed the graph");
                return;
            }
        }
        Err(e) => {
            out.fail(index, format!("presentation roundtrip failed: {e}"));
            return;
        }
    }

    // associativity: exhaustive for small tables, sampled otherwise
    let d = table.dim();
    let check = |i: usize, j: usize, k: usize| -> bool {
        let left = table
            .mul_basis(i, j)
            .and_then(|(c, ij)| table.mul_basis(ij, k).map(|(c2, r)| (field.mul(&c, &c2), r)));
        let right = table
            .mul_basis(j, k)
            .and_then(|(c, jk)| table.mul_basis(i, jk).map(|(c2, r)| (field.mul(&c, &c2), r)));
        let norm = |o: Option<(F::Elem, usize)>| o.filter(|(c, _)| !field.is_zero(c));
        norm(left) == norm(right)
    };
    if d <= 60 {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !check(i, j, k) {
                        out.fail(index, format!("associativity fails at ({i},{j},{k})"));
                        return;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        for _ in 0..10_000 {
            let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            if !check(i, j, k) {
                out.fail(index, format!("associativity fails at ({i},{j},{k})"));
                return;
            }
        }
    }
}

fn snf_oracle(seed: u64, count: usize, out: &mut SuiteOutcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5eed));
    for idx in 0..count {
        out.checked += 1;
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m = Mat::from_i64_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-6i64..=6)).collect())
                .collect(),
        );
        let diag = smith_normal_form(&m);
        let mut prev = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            let prod: BigInt = diag[..=k].iter().product();
            if prod != minors_gcd(&m, k + 1) {
                out.fail(idx, format!("SNF minor-gcd mismatch at size {}", k + 1));
                break;
            }
            if !num::Zero::is_zero(d) && !num::Zero::is_zero(&prev) && !num::Zero::is_zero(&(d % &prev))
            {
                out.fail(idx, "SNF divisibility chain broken");
                break;
            }
            prev = d.clone();
        }
    }
}

/// Run every property suite over the corpus of a spec.
pub fn run_suites(spec: &CorpusSpec) -> SuiteReport {
    let graphs = generate(spec);
    let presentations: Vec<Presentation> = graphs.iter().map(Presentation::from_graph).collect();

    let mut surface = SuiteOutcome::new("surface_identities");
    let mut torus_suite = SuiteOutcome::new("torus_rank_oracle");
    let mut center = SuiteOutcome::new("center_oracle");
    let mut cartan = SuiteOutcome::new("cartan_rule");
    let mut gram = SuiteOutcome::new("gram_form");
    let mut structure = SuiteOutcome::new("structure");
    let mut snf = SuiteOutcome::new("snf_oracle");

    let gf2 = PrimeField::new(2).expect("2 is prime");
    for (i, (g, p)) in graphs.iter().zip(&presentations).enumerate() {
        perimeter_identities(g, i, &mut surface);
        torus_oracle(g, p, i, spec.field, &mut torus_suite);
        center_oracle(g, p, &Rationals, i, &mut center);
        center_oracle(g, p, &gf2, i, &mut center);
        cartan_rule(g, p, i, &mut cartan);
        match spec.field {
            FieldSpec::Rationals => {
                gram_rule(g, p, &Rationals, i, &mut gram);
                structure_checks(g, p, &Rationals, spec.seed, i, &mut structure);
            }
            FieldSpec::Prime(q) => {
                let f = PrimeField::new(q).expect("validated prime");
                gram_rule(g, p, &f, i, &mut gram);
                structure_checks(g, p, &f, spec.seed, i, &mut structure);
            }
        }
    }
    snf_oracle(spec.seed, spec.count, &mut snf);

    for o in [&mut surface, &mut torus_suite, &mut center, &mut cartan, &mut gram, &mut structure, &mut snf] {
        o.failures.sort();
    }

    SuiteReport {
        spec: *spec,
        n_graphs: graphs.len(),
        outcomes: vec![surface, torus_suite, center, cartan, gram, structure, snf],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_spec() -> CorpusSpec {
        CorpusSpec {
            seed: 7,
            count: 40,
            max_edges: 5,
            max_mult: 3,
            deform_prob: 0.3,
            field: FieldSpec::Prime(2),
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = small_spec();
        let a = generate(&spec);
        let b = generate(&spec);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(x.combinatorially_eq(y));
            assert_eq!(x.to_bg_string(), y.to_bg_string());
        }
    }

    #[test]
    fn generated_marks_are_eligible() {
        for g in generate(&small_spec()) {
            for m in g.deformed() {
                assert!(g.is_mark_eligible(m.halfedge));
            }
        }
    }

    #[test]
    fn suites_pass_on_a_small_corpus() {
        let report = run_suites(&small_spec());
        assert!(report.all_passed(), "{}", report.render());
    }

    #[test]
    fn report_rendering_is_bytewise_stable() {
        let spec = small_spec();
        assert_eq!(run_suites(&spec).render(), run_suites(&spec).render());
    }
}
