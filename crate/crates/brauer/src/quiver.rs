//! Quiver presentations `(Q, pi, m, L, t)` attached to ribbon graphs.
//!
//! Vertices of `Q` are the edges of the graph; there is one arrow per
//! half-edge `h`, running from the edge of `h` to the edge of `sigma(h)`, and
//! the permutation `pi` on arrows is literally `sigma`. Cycles of `pi`
//! correspond to vertices of the graph and inherit their multiplicities.

use crate::ribbon::{BgError, RibbonGraph};
use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuiverError {
    #[error("pi is not a permutation of the arrows")]
    PiNotPermutation,
    #[error("arrow {arrow}: target {target} differs from the source of pi(arrow)")]
    PiTargetMismatch { arrow: usize, target: usize },
    #[error("vertex {vertex} has out-degree {out} and in-degree {inn} (both must be 2)")]
    BadDegree { vertex: usize, out: usize, inn: usize },
    #[error("deformed arrow {arrow} is not a loop with pi(arrow) != arrow")]
    BadDeformedArrow { arrow: usize },
    #[error("deformation parameter of arrow {arrow} is zero")]
    ZeroT { arrow: usize },
    #[error("multiplicity of cycle through arrow {arrow} must be positive")]
    BadMultiplicity { arrow: usize },
    #[error("arrow index {arrow} out of range")]
    ArrowOutOfRange { arrow: usize },
    #[error("presentation does not assemble into a valid ribbon graph: {0}")]
    Graph(#[from] BgError),
}

/// An orbit of `pi`, with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiCycle {
    /// Arrow ids in `pi` order.
    pub arrows: Vec<usize>,
    pub mult: u32,
}

impl PiCycle {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// The presentation data `(Q, pi, m, L, t)`. Arrows are indexed by the
/// half-edges of the originating graph.
#[derive(Debug, Clone)]
pub struct Presentation {
    n_q0: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    pi: Vec<usize>,
    cycles: Vec<PiCycle>,
    cycle_of: Vec<usize>,
    pos_of: Vec<usize>,
    deformed: Vec<(usize, BigRational)>,
}

impl Presentation {
    /// Build the presentation of a valid ribbon graph.
    pub fn from_graph(g: &RibbonGraph) -> Presentation {
        let n = g.n_halfedges();
        let mut source = vec![0usize; n];
        let mut target = vec![0usize; n];
        let mut pi = vec![0usize; n];
        for h in 0..n {
            source[h] = g.edge_of(h);
            target[h] = g.edge_of(g.sigma(h));
            pi[h] = g.sigma(h);
        }
        let mut cycles = Vec::with_capacity(g.n_vertices());
        let mut cycle_of = vec![0usize; n];
        let mut pos_of = vec![0usize; n];
        for (v, vd) in g.vertices().iter().enumerate() {
            for (i, &h) in vd.order.iter().enumerate() {
                cycle_of[h] = v;
                pos_of[h] = i;
            }
            cycles.push(PiCycle {
                arrows: vd.order.clone(),
                mult: vd.mult,
            });
        }
        let deformed = g
            .deformed()
            .iter()
            .map(|m| (m.halfedge, m.t.clone()))
            .collect();
        Presentation {
            n_q0: g.n_edges(),
            source,
            target,
            pi,
            cycles,
            cycle_of,
            pos_of,
            deformed,
        }
    }

    /// Assemble and validate a presentation from raw data. `cycle_mults`
    /// assigns a multiplicity to the cycle containing the given arrow;
    /// unassigned cycles default to 1.
    pub fn from_parts(
        n_q0: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        pi: Vec<usize>,
        cycle_mults: &[(usize, u32)],
        deformed: Vec<(usize, BigRational)>,
    ) -> Result<Presentation, QuiverError> {
        let n = source.len();
        assert_eq!(target.len(), n);
        assert_eq!(pi.len(), n);

        let mut hit = vec![false; n];
        for &img in &pi {
            if img >= n || hit[img] {
                return Err(QuiverError::PiNotPermutation);
            }
            hit[img] = true;
        }
        for a in 0..n {
            if source[a] >= n_q0 || target[a] >= n_q0 {
                return Err(QuiverError::ArrowOutOfRange { arrow: a });
            }
            if target[a] != source[pi[a]] {
                return Err(QuiverError::PiTargetMismatch {
                    arrow: a,
                    target: target[a],
                });
            }
        }
        let mut out_deg = vec![0usize; n_q0];
        let mut in_deg = vec![0usize; n_q0];
        for a in 0..n {
            out_deg[source[a]] += 1;
            in_deg[target[a]] += 1;
        }
        for v in 0..n_q0 {
            if out_deg[v] != 2 || in_deg[v] != 2 {
                return Err(QuiverError::BadDegree {
                    vertex: v,
                    out: out_deg[v],
                    inn: in_deg[v],
                });
            }
        }

        let mut cycles = Vec::new();
        let mut cycle_of = vec![usize::MAX; n];
        let mut pos_of = vec![0usize; n];
        for start in 0..n {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut arrows = Vec::new();
            let mut a = start;
            loop {
                cycle_of[a] = id;
                pos_of[a] = arrows.len();
                arrows.push(a);
                a = pi[a];
                if a == start {
                    break;
                }
            }
            cycles.push(PiCycle { arrows, mult: 1 });
        }
        for &(arrow, mult) in cycle_mults {
            if arrow >= n {
                return Err(QuiverError::ArrowOutOfRange { arrow });
            }
            if mult < 1 {
                return Err(QuiverError::BadMultiplicity { arrow });
            }
            cycles[cycle_of[arrow]].mult = mult;
        }

        for &(a, ref t) in &deformed {
            if a >= n {
                return Err(QuiverError::ArrowOutOfRange { arrow: a });
            }
            if source[a] != target[a] || pi[a] == a {
                return Err(QuiverError::BadDeformedArrow { arrow: a });
            }
            if t.is_zero() {
                return Err(QuiverError::ZeroT { arrow: a });
            }
        }

        Ok(Presentation {
            n_q0,
            source,
            target,
            pi,
            cycles,
            cycle_of,
            pos_of,
            deformed,
        })
    }

    pub fn n_q0(&self) -> usize {
        self.n_q0
    }
    pub fn n_arrows(&self) -> usize {
        self.source.len()
    }
    pub fn source(&self, a: usize) -> usize {
        self.source[a]
    }
    pub fn target(&self, a: usize) -> usize {
        self.target[a]
    }
    pub fn pi(&self, a: usize) -> usize {
        self.pi[a]
    }
    pub fn cycles(&self) -> &[PiCycle] {
        &self.cycles
    }
    pub fn cycle_of(&self, a: usize) -> usize {
        self.cycle_of[a]
    }
    pub fn position_in_cycle(&self, a: usize) -> usize {
        self.pos_of[a]
    }
    pub fn deformed(&self) -> &[(usize, BigRational)] {
        &self.deformed
    }

    pub fn is_loop(&self, a: usize) -> bool {
        self.source[a] == self.target[a]
    }

    /// Loops `gamma` with `pi(gamma) != gamma`. Their count equals the number
    /// of perimeter-1 faces of the graph.
    pub fn free_loops(&self) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&a| self.is_loop(a) && self.pi[a] != a)
            .collect()
    }

    /// Inverse of [`Presentation::from_graph`] up to relabeling: half-edges
    /// are the arrows, `sigma` is `pi`, and the edge involution pairs the two
    /// out-arrows of each quiver vertex.
    pub fn to_ribbon(&self) -> Result<RibbonGraph, QuiverError> {
        let n = self.n_arrows();
        let mut outs: Vec<Vec<usize>> = vec![Vec::new(); self.n_q0];
        for a in 0..n {
            outs[self.source[a]].push(a);
        }
        let mut lines = String::new();
        for (id, c) in self.cycles.iter().enumerate() {
            let names: Vec<String> = c.arrows.iter().map(|a| format!("h{a}")).collect();
            lines.push_str(&format!(
                "vertex v{id} mult {}: {}\n",
                c.mult,
                names.join(" ")
            ));
        }
        for (e, pair) in outs.iter().enumerate() {
            debug_assert_eq!(pair.len(), 2);
            lines.push_str(&format!("edge e{e}: h{} h{}\n", pair[0], pair[1]));
        }
        for (a, t) in &self.deformed {
            lines.push_str(&format!("deformed h{a} t {t}\n"));
        }
        Ok(crate::ribbon::parse_bg(&lines)?)
    }
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

/// One retained cycle of the reduced presentation.
#[derive(Debug, Clone)]
pub struct ReducedCycle {
    /// Original arrow ids in `pi` order.
    pub arrows: Vec<usize>,
    pub mult: u32,
    /// Source vertex of the arrow at each position.
    pub sources: Vec<usize>,
    /// Deformation parameter of the arrow at each position, if marked.
    pub deformed: Vec<Option<BigRational>>,
}

impl ReducedCycle {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    /// Length of the full cycle power: `mult * len`.
    pub fn span(&self) -> usize {
        self.mult as usize * self.arrows.len()
    }
}

/// Presentation after deleting every truncated cycle (a pi-fixed loop of
/// multiplicity 1). The `two_dim` flag marks the single-edge graph with both
/// multiplicities 1, whose algebra is two-dimensional.
#[derive(Debug, Clone)]
pub struct ReducedPresentation {
    pub n_q0: usize,
    pub two_dim: bool,
    pub cycles: Vec<ReducedCycle>,
    /// For each quiver vertex, its `(cycle, position)` occurrences among the
    /// retained cycles.
    pub occurrences: Vec<Vec<(usize, usize)>>,
}

/// Delete every cycle that is a single pi-fixed loop of multiplicity 1.
pub fn reduce(p: &Presentation) -> ReducedPresentation {
    let mut cycles = Vec::new();
    for c in p.cycles() {
        let truncated = c.len() == 1 && c.mult == 1;
        if truncated {
            continue;
        }
        let sources = c.arrows.iter().map(|&a| p.source(a)).collect();
        let deformed = c
            .arrows
            .iter()
            .map(|&a| {
                p.deformed()
                    .iter()
                    .find(|(d, _)| *d == a)
                    .map(|(_, t)| t.clone())
            })
            .collect();
        cycles.push(ReducedCycle {
            arrows: c.arrows.clone(),
            mult: c.mult,
            sources,
            deformed,
        });
    }
    let two_dim = cycles.is_empty();
    if two_dim {
        debug_assert_eq!(p.n_q0(), 1, "only the (1,1) edge reduces to nothing");
    }
    let mut occurrences = vec![Vec::new(); p.n_q0()];
    for (ci, c) in cycles.iter().enumerate() {
        for (pos, &v) in c.sources.iter().enumerate() {
            occurrences[v].push((ci, pos));
        }
    }
    debug_assert!(two_dim || occurrences.iter().all(|o| !o.is_empty()));
    ReducedPresentation {
        n_q0: p.n_q0(),
        two_dim,
        cycles,
        occurrences,
    }
}

// ---------------------------------------------------------------------------
// caterpillars and other special graphs
// ---------------------------------------------------------------------------

/// Shape of a caterpillar ideal: one pi-cycle through the doubled cycle, or
/// two disjoint pi-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaterpillarKind {
    OneCycle { mult: u32 },
    TwoCycles { mult_a: u32, mult_b: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    pub length: usize,
    pub kind: CaterpillarKind,
}

/// Detect the doubled directed n-cycle shape (n > 1): the two out-arrows of
/// every vertex share one target and the targets form a single n-cycle.
pub fn detect_caterpillar(p: &Presentation) -> Option<Caterpillar> {
    let n = p.n_q0();
    if n < 2 {
        return None;
    }
    let mut next = vec![usize::MAX; n];
    for v in 0..n {
        let outs: Vec<usize> = (0..p.n_arrows()).filter(|&a| p.source(a) == v).collect();
        debug_assert_eq!(outs.len(), 2);
        if p.target(outs[0]) != p.target(outs[1]) {
            return None;
        }
        next[v] = p.target(outs[0]);
    }
    // targets must form one cycle through all n vertices
    let mut v = 0;
    for _ in 0..n {
        v = next[v];
    }
    if v != 0 {
        return None;
    }
    let mut seen = vec![false; n];
    let mut v = 0;
    let mut steps = 0;
    while !seen[v] {
        seen[v] = true;
        v = next[v];
        steps += 1;
    }
    if steps != n {
        return None;
    }
    let kind = match p.cycles() {
        [c] => CaterpillarKind::OneCycle { mult: c.mult },
        [a, b] => CaterpillarKind::TwoCycles {
            mult_a: a.mult,
            mult_b: b.mult,
        },
        other => unreachable!("doubled n-cycle has 1 or 2 pi-cycles, found {}", other.len()),
    };
    Some(Caterpillar { length: n, kind })
}

/// Advisory flags for the small graphs that need special treatment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct SpecialFlags {
    /// One edge, hence a local algebra.
    pub local: bool,
    /// The Brauer graph is not presentation-independent here: the loop with
    /// multiplicity 1, or the edge with multiplicity 2 at both ends.
    pub exceptional_presentation: bool,
    /// The multiplicity-1 loop with both perimeter-1 faces deformed; the
    /// standard symmetrizing form can degenerate.
    pub excluded_symmetry_case: bool,
}

pub fn classify_special(g: &RibbonGraph) -> SpecialFlags {
    let local = g.n_edges() == 1;
    let loop_graph = local && g.n_vertices() == 1;
    let mult1_loop = loop_graph && g.mult(0) == 1;
    let edge22 = local && g.n_vertices() == 2 && g.mult(0) == 2 && g.mult(1) == 2;
    SpecialFlags {
        local,
        exceptional_presentation: mult1_loop || edge22,
        excluded_symmetry_case: mult1_loop && g.deformed().len() == 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::parse_bg;

    const LOOP_M1: &str = "vertex v mult 1: h1 h2\nedge e: h1 h2\n";
    const SINGLE_EDGE_11: &str = "vertex v1 mult 1: h1\nvertex v2 mult 1: h2\nedge e: h1 h2\n";
    const SELF_FOLDED: &str = "vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\n";
    const STAR3: &str = "\
vertex c mult 1: a1 b1 c1
vertex l1 mult 1: a2
vertex l2 mult 1: b2
vertex l3 mult 1: c2
edge a: a1 a2
edge b: b1 b2
edge c: c1 c2
";

    #[test]
    fn single_edge_gives_two_fixed_loops() {
        let p = Presentation::from_graph(&parse_bg(SINGLE_EDGE_11).unwrap());
        assert_eq!(p.n_q0(), 1);
        assert_eq!(p.n_arrows(), 2);
        assert_eq!(p.pi(0), 0);
        assert_eq!(p.pi(1), 1);
        assert!(p.is_loop(0) && p.is_loop(1));
        assert_eq!(p.cycles().len(), 2);
    }

    #[test]
    fn loop_graph_gives_one_two_cycle() {
        let g = parse_bg("vertex v mult 3: h1 h2\nedge e: h1 h2\n").unwrap();
        let p = Presentation::from_graph(&g);
        assert_eq!(p.n_q0(), 1);
        assert_eq!(p.cycles().len(), 1);
        assert_eq!(p.cycles()[0].len(), 2);
        assert_eq!(p.cycles()[0].mult, 3);
        assert_eq!(p.free_loops().len(), 2);
    }

    #[test]
    fn self_folded_triangle_presentation() {
        let p = Presentation::from_graph(&parse_bg(SELF_FOLDED).unwrap());
        assert_eq!(p.n_q0(), 2);
        assert_eq!(p.n_arrows(), 4);
        let mut lens: Vec<usize> = p.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 3]);
        // the half-edge b1 (index 1) is a loop with pi(a) != a
        assert_eq!(p.free_loops(), vec![1]);
    }

    #[test]
    fn degree_counts_hold() {
        for text in [LOOP_M1, SINGLE_EDGE_11, SELF_FOLDED, STAR3] {
            let g = parse_bg(text).unwrap();
            let p = Presentation::from_graph(&g);
            assert_eq!(p.n_arrows(), 2 * p.n_q0());
            assert_eq!(p.n_arrows(), 2 * g.n_edges());
            assert_eq!(p.cycles().len(), g.n_vertices());
            for a in 0..p.n_arrows() {
                assert_eq!(p.target(a), p.source(p.pi(a)));
            }
        }
    }

    #[test]
    fn free_loops_match_perimeter_one_faces() {
        for text in [LOOP_M1, SINGLE_EDGE_11, SELF_FOLDED, STAR3] {
            let g = parse_bg(text).unwrap();
            let p = Presentation::from_graph(&g);
            let perim1 = g.faces().iter().filter(|f| f.perimeter == 1).count();
            assert_eq!(p.free_loops().len(), perim1);
        }
    }

    #[test]
    fn roundtrip_through_ribbon() {
        for text in [LOOP_M1, SINGLE_EDGE_11, SELF_FOLDED, STAR3] {
            let g = parse_bg(text).unwrap();
            let p = Presentation::from_graph(&g);
            let back = p.to_ribbon().unwrap();
            assert!(g.combinatorially_eq(&back), "roundtrip failed for {text}");
        }
    }

    #[test]
    fn from_parts_rejects_bad_data() {
        // pi not a permutation
        let err = Presentation::from_parts(
            1,
            vec![0, 0],
            vec![0, 0],
            vec![1, 1],
            &[],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, QuiverError::PiNotPermutation);

        // target inconsistent with pi: arrow 0 ends at 1 but pi sends it to
        // an arrow starting at 0
        let err = Presentation::from_parts(
            2,
            vec![0, 0, 1, 1],
            vec![1, 1, 0, 0],
            vec![1, 0, 3, 2],
            &[],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::PiTargetMismatch { .. }));

        // out-degree 3 at vertex 0
        let err = Presentation::from_parts(
            2,
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 1, 2, 3, 4, 5],
            &[],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::BadDegree { .. }));
    }

    #[test]
    fn reduce_deletes_truncated_cycles() {
        let p = Presentation::from_graph(&parse_bg(STAR3).unwrap());
        let r = reduce(&p);
        assert!(!r.two_dim);
        assert_eq!(r.cycles.len(), 1);
        assert_eq!(r.cycles[0].len(), 3);
        for v in 0..r.n_q0 {
            assert_eq!(r.occurrences[v].len(), 1);
        }
    }

    #[test]
    fn reduce_flags_two_dimensional_case() {
        let p = Presentation::from_graph(&parse_bg(SINGLE_EDGE_11).unwrap());
        let r = reduce(&p);
        assert!(r.two_dim);
        assert!(r.cycles.is_empty());
    }

    #[test]
    fn reduce_keeps_higher_multiplicity() {
        let g = parse_bg("vertex v1 mult 2: h1\nvertex v2 mult 2: h2\nedge e: h1 h2\n").unwrap();
        let r = reduce(&Presentation::from_graph(&g));
        assert!(!r.two_dim);
        assert_eq!(r.cycles.len(), 2);
    }

    const CATERPILLAR_ONE: &str = "\
vertex c mult 2: a1 b1 c1 a2 b2 c2
edge a: a1 a2
edge b: b1 b2
edge c: c1 c2
";
    const CATERPILLAR_TWO: &str = "\
vertex v1 mult 3: x1 y1 z1
vertex v2 mult 3: x2 y2 z2
edge x: x1 x2
edge y: y1 y2
edge z: z1 z2
";

    #[test]
    fn caterpillar_detection() {
        let p = Presentation::from_graph(&parse_bg(CATERPILLAR_ONE).unwrap());
        assert_eq!(
            detect_caterpillar(&p),
            Some(Caterpillar {
                length: 3,
                kind: CaterpillarKind::OneCycle { mult: 2 }
            })
        );

        let p = Presentation::from_graph(&parse_bg(CATERPILLAR_TWO).unwrap());
        assert_eq!(
            detect_caterpillar(&p),
            Some(Caterpillar {
                length: 3,
                kind: CaterpillarKind::TwoCycles {
                    mult_a: 3,
                    mult_b: 3
                }
            })
        );

        let p = Presentation::from_graph(&parse_bg(STAR3).unwrap());
        assert_eq!(detect_caterpillar(&p), None);
    }

    #[test]
    fn two_parallel_edges_are_the_length_two_caterpillar() {
        let theta =
            "vertex v1 mult 1: h1 h3\nvertex v2 mult 1: h2 h4\nedge e1: h1 h2\nedge e2: h3 h4\n";
        let p = Presentation::from_graph(&parse_bg(theta).unwrap());
        assert_eq!(
            detect_caterpillar(&p),
            Some(Caterpillar {
                length: 2,
                kind: CaterpillarKind::TwoCycles {
                    mult_a: 1,
                    mult_b: 1
                }
            })
        );
    }

    #[test]
    fn caterpillars_have_no_free_loops() {
        for text in [CATERPILLAR_ONE, CATERPILLAR_TWO] {
            let p = Presentation::from_graph(&parse_bg(text).unwrap());
            assert!(detect_caterpillar(&p).is_some());
            assert!(p.free_loops().is_empty());
        }
    }

    #[test]
    fn special_flags() {
        let flags = classify_special(&parse_bg(LOOP_M1).unwrap());
        assert!(flags.local && flags.exceptional_presentation && !flags.excluded_symmetry_case);

        let edge22 = "vertex v1 mult 2: h1\nvertex v2 mult 2: h2\nedge e: h1 h2\n";
        let flags = classify_special(&parse_bg(edge22).unwrap());
        assert!(flags.local && flags.exceptional_presentation);

        let path2 = "vertex v1 mult 1: h1\nvertex v2 mult 1: h2 h3\nvertex v3 mult 1: h4\nedge e1: h1 h2\nedge e2: h3 h4\n";
        let flags = classify_special(&parse_bg(path2).unwrap());
        assert_eq!(flags, SpecialFlags::default());

        let both = "vertex v mult 1: h1 h2\nedge e: h1 h2\ndeformed h1\ndeformed h2\n";
        let flags = classify_special(&parse_bg(both).unwrap());
        assert!(flags.excluded_symmetry_case);
    }
}
