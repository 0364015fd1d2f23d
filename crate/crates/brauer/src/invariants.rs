//! Cartan matrix, stable Grothendieck data, and the fingerprint of derived
//! invariants used to separate algebras.

use crate::algebra::{build_table, center_solve, AlgebraError, AlgebraTable};
use crate::exactla::{rank_exact, smith_normal_form, Field, FieldSpec, FieldSpecError, Mat, PrimeField, Rationals};
use crate::quiver::{classify_special, detect_caterpillar, reduce, Presentation, SpecialFlags};
use crate::ribbon::RibbonGraph;
use crate::torus::{self, TorusError};
use num::bigint::BigInt;
use num::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldSpecError),
    #[error("internal cross-check failed: {0}")]
    Internal(TorusError),
}

/// `C[i][j]` counts the basis elements `b` with `e_i b e_j = b`.
pub fn cartan_matrix<F: Field>(t: &AlgebraTable<F>) -> Mat<BigInt> {
    let n = t.n_q0();
    let mut c = Mat::filled(n, n, BigInt::zero());
    for b in 0..t.dim() {
        let (i, j) = (t.source_of(b), t.target_of(b));
        let v = c.at(i, j) + 1;
        c.set(i, j, v);
    }
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanReport {
    pub rank: usize,
    /// Invariant factors presenting the stable Grothendieck group.
    pub snf: Vec<BigInt>,
    /// The rank rule: `|V| - 1` for bipartite graphs, `|V|` otherwise.
    pub expected_rank: usize,
    pub bipartite: bool,
    pub rule_ok: bool,
    pub symmetric: bool,
}

pub fn cartan_diagnostics(c: &Mat<BigInt>, g: &RibbonGraph) -> CartanReport {
    let rank = rank_exact(&Rationals, &c.to_rational());
    let snf = smith_normal_form(c);
    let bipartite = g.is_bipartite();
    let expected_rank = if bipartite {
        g.n_vertices() - 1
    } else {
        g.n_vertices()
    };
    let symmetric = *c == c.transpose();
    CartanReport {
        rank,
        snf,
        expected_rank,
        bipartite,
        rule_ok: rank == expected_rank,
        symmetric,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FingerprintFlags {
    pub caterpillar: bool,
    pub local: bool,
    pub exceptional_presentation: bool,
    pub excluded_symmetry_case: bool,
}

/// The invariant tuple used for derived-equivalence comparison. Matching
/// fingerprints never certify an equivalence; differing ones refute it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fingerprint {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: usize,
    pub perimeters: Vec<usize>,
    pub multiplicities: Vec<u32>,
    pub bipartite: bool,
    pub genus: u32,
    pub deformed_count: usize,
    pub torus_rank: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus_rank_omitted: Option<String>,
    pub dim_algebra: usize,
    pub dim_center: usize,
    /// Invariant factors of the Cartan matrix, as decimal strings.
    pub cartan_snf: Vec<String>,
    pub flags: FingerprintFlags,
    pub field: FieldSpec,
}

pub fn fingerprint(g: &RibbonGraph, spec: FieldSpec) -> Result<Fingerprint, InvariantError> {
    match spec {
        FieldSpec::Rationals => fingerprint_over(g, &Rationals),
        FieldSpec::Prime(p) => fingerprint_over(g, &PrimeField::new(p)?),
    }
}

fn fingerprint_over<F: Field>(g: &RibbonGraph, field: &F) -> Result<Fingerprint, InvariantError> {
    let faces = g.faces();
    let perimeters = g.perimeters_sorted();
    let (chi, genus) = g.euler_genus();
    debug_assert_eq!(chi, 2 - 2 * genus as i64);
    assert_eq!(
        perimeters.iter().sum::<usize>(),
        2 * g.n_edges(),
        "every half-edge lies on exactly one face"
    );

    let special: SpecialFlags = classify_special(g);
    let p = Presentation::from_graph(g);
    let caterpillar = detect_caterpillar(&p);
    let r = reduce(&p);
    let table = build_table(&r, field)?;
    let center = center_solve(&table);
    let cartan = cartan_matrix(&table);
    let snf = smith_normal_form(&cartan);

    let spec = field.spec();
    let (torus_rank, torus_rank_omitted) = match torus::cross_check(&p, spec) {
        Ok(rep) => (Some(rep.formula), None),
        Err(e @ (TorusError::RankLemmaViolation { .. } | TorusError::OracleMismatch { .. })) => {
            return Err(InvariantError::Internal(e));
        }
        Err(e) => (None, Some(e.to_string())),
    };

    Ok(Fingerprint {
        n_vertices: g.n_vertices(),
        n_edges: g.n_edges(),
        n_faces: faces.len(),
        perimeters,
        multiplicities: g.multiplicities_sorted(),
        bipartite: g.is_bipartite(),
        genus,
        deformed_count: g.deformed().len(),
        torus_rank,
        torus_rank_omitted,
        dim_algebra: table.dim(),
        dim_center: center.dim,
        cartan_snf: snf.iter().map(BigInt::to_string).collect(),
        flags: FingerprintFlags {
            caterpillar: caterpillar.is_some(),
            local: special.local,
            exceptional_presentation: special.exceptional_presentation,
            excluded_symmetry_case: special.excluded_symmetry_case,
        },
        field: spec,
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompareError {
    #[error("fingerprints were computed over different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub distinguished: bool,
    /// Names of the invariants that differ.
    pub differing: Vec<String>,
    /// Names of the invariants that took part in the comparison.
    pub compared: Vec<String>,
    pub extended: bool,
}

impl CompareReport {
    pub fn verdict(&self) -> String {
        if self.distinguished {
            format!("distinguished (fields: {})", self.differing.join(", "))
        } else {
            "not distinguished by these invariants".to_string()
        }
    }
}

/// Compare two fingerprints over the same field.
///
/// The deformed-loop count and the torus rank separate algebras only in
/// characteristic 2 (away from it, marks do not change the isomorphism
/// class), so over other fields they enter the comparison only when both
/// sides are unmarked. The extended mode adds the genus, the algebra and
/// center dimensions, and the Cartan invariant factors.
pub fn compare(a: &Fingerprint, b: &Fingerprint, extended: bool) -> Result<CompareReport, CompareError> {
    if a.field != b.field {
        return Err(CompareError::FieldMismatch(a.field, b.field));
    }
    let mut compared = Vec::new();
    let mut differing = Vec::new();
    let mut check = |name: &str, differs: bool| {
        compared.push(name.to_string());
        if differs {
            differing.push(name.to_string());
        }
    };
    check("n_vertices", a.n_vertices != b.n_vertices);
    check("n_edges", a.n_edges != b.n_edges);
    check("n_faces", a.n_faces != b.n_faces);
    check("perimeters", a.perimeters != b.perimeters);
    check("multiplicities", a.multiplicities != b.multiplicities);
    check("bipartite", a.bipartite != b.bipartite);

    let marks_are_invariants =
        a.field.is_char_two() || (a.deformed_count == 0 && b.deformed_count == 0);
    if marks_are_invariants {
        check("deformed_count", a.deformed_count != b.deformed_count);
        if a.torus_rank.is_some() && b.torus_rank.is_some() {
            check("torus_rank", a.torus_rank != b.torus_rank);
        }
    }

    if extended {
        check("genus", a.genus != b.genus);
        check("dim_algebra", a.dim_algebra != b.dim_algebra);
        check("dim_center", a.dim_center != b.dim_center);
        check("cartan_snf", a.cartan_snf != b.cartan_snf);
    }

    Ok(CompareReport {
        distinguished: !differing.is_empty(),
        differing,
        compared,
        extended,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::reduce;
    use crate::ribbon::parse_bg;

    fn table_q(text: &str) -> AlgebraTable<Rationals> {
        let g = parse_bg(text).unwrap();
        build_table(&reduce(&Presentation::from_graph(&g)), &Rationals).unwrap()
    }

    fn cartan_i64(c: &Mat<BigInt>) -> Vec<Vec<i64>> {
        (0..c.rows())
            .map(|i| {
                (0..c.cols())
                    .map(|j| c.at(i, j).to_string().parse().unwrap())
                    .collect()
            })
            .collect()
    }

    const EDGE_11: &str = "vertex v1 mult 1: h1\nvertex v2 mult 1: h2\nedge e: h1 h2\n";
    const PATH2: &str = "vertex v1 mult 1: h1\nvertex v2 mult 1: h2 h3\nvertex v3 mult 1: h4\nedge e1: h1 h2\nedge e2: h3 h4\n";
    const LOOP_M2: &str = "vertex v mult 2: h1 h2\nedge e: h1 h2\n";
    const SELF_FOLDED: &str = "vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\n";

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_i64(&cartan_matrix(&table_q(EDGE_11))), vec![vec![2]]);
        assert_eq!(
            cartan_i64(&cartan_matrix(&table_q(PATH2))),
            vec![vec![2, 1], vec![1, 2]]
        );
        assert_eq!(cartan_i64(&cartan_matrix(&table_q(LOOP_M2))), vec![vec![8]]);
    }

    #[test]
    fn cartan_rank_rule() {
        let g = parse_bg(EDGE_11).unwrap();
        let rep = cartan_diagnostics(&cartan_matrix(&table_q(EDGE_11)), &g);
        assert!(rep.bipartite && rep.rank == 1 && rep.rule_ok);

        let g = parse_bg(LOOP_M2).unwrap();
        let rep = cartan_diagnostics(&cartan_matrix(&table_q(LOOP_M2)), &g);
        assert!(!rep.bipartite && rep.rank == 1 && rep.rule_ok);

        let g = parse_bg(SELF_FOLDED).unwrap();
        let rep = cartan_diagnostics(&cartan_matrix(&table_q(SELF_FOLDED)), &g);
        assert!(!rep.bipartite && rep.rank == 2 && rep.rule_ok);
        assert!(rep.symmetric);
    }

    #[test]
    fn fingerprint_of_self_folded_triangle() {
        let g = parse_bg(SELF_FOLDED).unwrap();
        let f = fingerprint(&g, FieldSpec::Rationals).unwrap();
        assert_eq!(f.n_vertices, 2);
        assert_eq!(f.n_edges, 2);
        assert_eq!(f.n_faces, 2);
        assert_eq!(f.perimeters, vec![1, 3]);
        assert_eq!(f.multiplicities, vec![1, 1]);
        assert!(!f.bipartite);
        assert_eq!(f.genus, 0);
        assert_eq!(f.deformed_count, 0);
        assert_eq!(f.torus_rank, Some(2));
        assert_eq!(f.dim_algebra, 10);
        assert_eq!(f.dim_center, 4);
    }

    #[test]
    fn fingerprint_omits_torus_rank_for_local_graphs() {
        let g = parse_bg(EDGE_11).unwrap();
        let f = fingerprint(&g, FieldSpec::Rationals).unwrap();
        assert!(f.flags.local);
        assert_eq!(f.torus_rank, None);
        assert!(f.torus_rank_omitted.is_some());
    }

    const CATERPILLAR_ONE: &str =
        "vertex c mult 1: a1 b1 c1 a2 b2 c2\nedge a: a1 a2\nedge b: b1 b2\nedge c: c1 c2\n";
    const CATERPILLAR_TWO: &str = "\
vertex v1 mult 2: x1 y1 z1
vertex v2 mult 2: x2 y2 z2
edge x: x1 x2
edge y: y1 y2
edge z: z1 z2
";

    #[test]
    fn caterpillar_pair_is_distinguished_by_vertex_count() {
        let fa = fingerprint(&parse_bg(CATERPILLAR_ONE).unwrap(), FieldSpec::Rationals).unwrap();
        let fb = fingerprint(&parse_bg(CATERPILLAR_TWO).unwrap(), FieldSpec::Rationals).unwrap();
        assert!(fa.flags.caterpillar && fb.flags.caterpillar);
        assert_eq!(fa.torus_rank, None);
        let rep = compare(&fa, &fb, false).unwrap();
        assert!(rep.distinguished);
        assert!(rep.differing.contains(&"n_vertices".to_string()));
    }

    #[test]
    fn compare_is_reflexive_negative() {
        let f = fingerprint(&parse_bg(SELF_FOLDED).unwrap(), FieldSpec::Rationals).unwrap();
        let rep = compare(&f, &f, true).unwrap();
        assert!(!rep.distinguished);
        assert!(rep.differing.is_empty());
    }

    #[test]
    fn marks_separate_over_gf2_only() {
        let plain = "vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\n";
        let marked = "vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\ndeformed b1\n";
        let f2 = FieldSpec::Prime(2);
        let fa = fingerprint(&parse_bg(plain).unwrap(), f2).unwrap();
        let fb = fingerprint(&parse_bg(marked).unwrap(), f2).unwrap();
        assert_eq!(fa.torus_rank, Some(2));
        assert_eq!(fb.torus_rank, Some(1));
        let rep = compare(&fa, &fb, false).unwrap();
        assert!(rep.distinguished);
        assert!(rep.differing.contains(&"deformed_count".to_string()));
        assert!(rep.differing.contains(&"torus_rank".to_string()));

        // over the rationals the marked presentation is isomorphic to the
        // plain one, so the pair must not be separated
        let fa = fingerprint(&parse_bg(plain).unwrap(), FieldSpec::Rationals).unwrap();
        let fb = fingerprint(&parse_bg(marked).unwrap(), FieldSpec::Rationals).unwrap();
        assert!(fb.torus_rank_omitted.is_some());
        let rep = compare(&fa, &fb, false).unwrap();
        assert!(!rep.distinguished);
    }

    #[test]
    fn compare_requires_matching_fields() {
        let g = parse_bg(SELF_FOLDED).unwrap();
        let fa = fingerprint(&g, FieldSpec::Rationals).unwrap();
        let fb = fingerprint(&g, FieldSpec::Prime(2)).unwrap();
        assert!(matches!(
            compare(&fa, &fb, false),
            Err(CompareError::FieldMismatch(..))
        ));
    }

    #[test]
    fn compare_is_symmetric() {
        let fa = fingerprint(&parse_bg(CATERPILLAR_ONE).unwrap(), FieldSpec::Rationals).unwrap();
        let fb = fingerprint(&parse_bg(CATERPILLAR_TWO).unwrap(), FieldSpec::Rationals).unwrap();
        let ab = compare(&fa, &fb, true).unwrap();
        let ba = compare(&fb, &fa, true).unwrap();
        assert_eq!(ab.differing, ba.differing);
    }

    #[test]
    fn fingerprint_serializes_with_stable_keys() {
        let g = parse_bg(SELF_FOLDED).unwrap();
        let f = fingerprint(&g, FieldSpec::Rationals).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        for key in [
            "n_vertices",
            "n_edges",
            "n_faces",
            "perimeters",
            "multiplicities",
            "bipartite",
            "genus",
            "deformed_count",
            "torus_rank",
            "dim_algebra",
            "dim_center",
            "cartan_snf",
            "flags",
            "field",
        ] {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(v["field"], "q");
    }
}
