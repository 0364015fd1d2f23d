//! Shared bodies for the fuzz targets, also replayed over the checked-in
//! seed corpora by a regular test. Each function must never panic on
//! arbitrary input; panics signal real bugs.

use crate::algebra::{build_table, center_predicted, center_solve, expand_center_prediction};
use crate::exactla::{FieldSpec, PrimeField};
use crate::invariants::fingerprint;
use crate::quiver::{reduce, Presentation};
use crate::ribbon::{parse_bg, RibbonGraph};
use crate::torus;

/// Feed bytes to the `.bg` parser; on success the graph must survive a text
/// and a JSON round trip and satisfy the face identities.
pub fn check_parse_bg(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_bg(text) else {
        return;
    };
    graph_invariants(&g);

    let again = parse_bg(&g.to_bg_string()).expect("serialized graph must reparse");
    assert!(g.combinatorially_eq(&again), "text round trip changed the graph");

    let json = g.to_json_value().to_string();
    let again = RibbonGraph::from_json_str(&json).expect("JSON round trip must parse");
    assert!(g.combinatorially_eq(&again), "JSON round trip changed the graph");
}

/// Feed bytes to the JSON reader; on success the graph must survive both
/// round trips.
pub fn check_ribbon_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = RibbonGraph::from_json_str(text) else {
        return;
    };
    graph_invariants(&g);
    let again = parse_bg(&g.to_bg_string()).expect("serialized graph must reparse");
    assert!(g.combinatorially_eq(&again));
}

fn graph_invariants(g: &RibbonGraph) {
    let faces = g.faces();
    let total: usize = faces.iter().map(|f| f.perimeter).sum();
    assert_eq!(total, 2 * g.n_edges(), "perimeters must cover each half-edge once");
    let (chi, _) = g.euler_genus();
    assert_eq!(chi % 2, 0);
    for m in g.deformed() {
        let partner = g.iota(m.halfedge);
        assert_eq!(g.sigma(g.iota(partner)), partner, "marks sit on perimeter-1 faces");
    }
}

/// Parse and, when the graph is small, drive the whole pipeline over GF(2):
/// fingerprint construction runs the center solver, the Cartan diagnostics
/// and the torus cross-check, all of which carry internal oracle assertions.
pub fn check_pipeline(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_bg(text) else {
        return;
    };
    if g.n_edges() > 5 || g.vertices().iter().any(|v| v.mult > 3) {
        return;
    }
    let p = Presentation::from_graph(&g);
    let r = reduce(&p);
    let gf2 = PrimeField::new(2).expect("2 is prime");
    let Ok(table) = build_table(&r, &gf2) else {
        return; // a t value vanished mod 2
    };

    let solved = center_solve(&table);
    let predicted = center_predicted(&p, &r);
    assert_eq!(solved.dim, predicted.dim, "center solver disagrees with prediction");
    for z in expand_center_prediction(&table, &predicted) {
        assert!(table.commutes_with_all(&z));
    }

    if torus::check_hypotheses(&p, FieldSpec::Prime(2)).is_ok() {
        torus::cross_check(&p, FieldSpec::Prime(2)).expect("torus oracle mismatch");
    }

    fingerprint(&g, FieldSpec::Prime(2)).expect("fingerprint must build");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harnesses_accept_arbitrary_junk() {
        for junk in [
            b"".as_slice(),
            b"\xff\xfe".as_slice(),
            b"vertex".as_slice(),
            b"vertex v mult 1: h1 h2\nedge e: h1 h1\n".as_slice(),
            b"{\"vertices\": []}".as_slice(),
        ] {
            check_parse_bg(junk);
            check_ribbon_json(junk);
            check_pipeline(junk);
        }
    }

    #[test]
    fn harnesses_accept_valid_graphs() {
        let doc = b"vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\n";
        check_parse_bg(doc);
        check_pipeline(doc);
    }
}
