//! Ribbon graphs (combinatorial maps) with per-vertex multiplicities and
//! deformed-loop marks, plus the `.bg` text format and a JSON mirror.
//!
//! A ribbon graph is a finite half-edge set `H` together with
//!
//! * `sigma`, a permutation of `H` whose orbits are the vertices (successor
//!   in the cyclic order around each vertex), and
//! * `iota`, a fixed-point-free involution of `H` whose orbits are the edges.
//!
//! Faces are the orbits of `sigma ∘ iota` (apply the edge involution, then
//! rotate). A mark `(h, t)` may sit on a half-edge `h` with
//! `sigma(h) = iota(h)`; such half-edges correspond exactly to the faces of
//! perimeter 1.

use crate::exactla::FieldSpec;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BgError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate vertex name `{name}`")]
    DuplicateVertexName { line: usize, name: String },
    #[error("line {line}: duplicate edge name `{name}`")]
    DuplicateEdgeName { line: usize, name: String },
    #[error("line {line}: half-edge `{name}` already used in a vertex line")]
    DuplicateHalfEdgeInVertex { line: usize, name: String },
    #[error("line {line}: half-edge `{name}` already used in an edge line")]
    DuplicateHalfEdgeInEdge { line: usize, name: String },
    #[error("line {line}: unknown half-edge `{name}`")]
    UnknownHalfEdge { line: usize, name: String },
    #[error("line {line}: half-edge `{name}` belongs to no edge")]
    HalfEdgeWithoutEdge { line: usize, name: String },
    #[error("line {line}: an edge cannot pair a half-edge `{name}` with itself")]
    SelfPairedEdge { line: usize, name: String },
    #[error("line {line}: vertex `{name}` has no half-edges")]
    EmptyVertex { line: usize, name: String },
    #[error("line {line}: multiplicity must be a positive integer")]
    BadMultiplicity { line: usize },
    #[error("line {line}: deformed mark on `{name}` requires sigma(h) = iota(h) (a perimeter-1 face)")]
    IneligibleMark { line: usize, name: String },
    #[error("line {line}: duplicate deformed mark on `{name}`")]
    DuplicateMark { line: usize, name: String },
    #[error("line {line}: deformation parameter t must be nonzero")]
    ZeroT { line: usize },
    #[error("line {line}: bad field spec: {msg}")]
    BadField { line: usize, msg: String },
    #[error("line {line}: duplicate field line")]
    DuplicateField { line: usize },
    #[error("line {line}: graph is disconnected (vertex `{name}` is unreachable)")]
    Disconnected { line: usize, name: String },
    #[error("document contains no vertices")]
    Empty,
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// A deformed-loop mark: the half-edge it sits on and its nonzero parameter.
///
/// `t` is stored as an exact rational and mapped into the coefficient field
/// when the algebra is built.
#[derive(Debug, Clone, PartialEq)]
pub struct Mark {
    pub halfedge: usize,
    pub t: BigRational,
}

#[derive(Debug, Clone)]
pub struct VertexData {
    pub name: String,
    pub mult: u32,
    /// Half-edges in cyclic order; `sigma` maps each entry to the next.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct EdgeData {
    pub name: String,
    pub halves: [usize; 2],
}

/// Validated, immutable ribbon graph. All operations are pure.
#[derive(Debug, Clone)]
pub struct RibbonGraph {
    halfedge_names: Vec<String>,
    sigma: Vec<usize>,
    iota: Vec<usize>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    vertices: Vec<VertexData>,
    edges: Vec<EdgeData>,
    deformed: Vec<Mark>,
    field: Option<FieldSpec>,
}

/// A face: an orbit of `sigma ∘ iota`, listed from its smallest half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub cycle: Vec<usize>,
    pub perimeter: usize,
}

// ---------------------------------------------------------------------------
// raw records shared by the text parser and the JSON reader
// ---------------------------------------------------------------------------

struct RawVertex {
    name: String,
    mult: u32,
    halfedges: Vec<String>,
    line: usize,
}

struct RawEdge {
    name: String,
    halves: [String; 2],
    line: usize,
}

struct RawMark {
    halfedge: String,
    t: BigRational,
    line: usize,
}

struct RawDoc {
    vertices: Vec<RawVertex>,
    edges: Vec<RawEdge>,
    marks: Vec<RawMark>,
    field: Option<FieldSpec>,
}

impl RawDoc {
    fn assemble(self) -> Result<RibbonGraph, BgError> {
        if self.vertices.is_empty() {
            return Err(BgError::Empty);
        }
        let mut halfedge_names: Vec<String> = Vec::new();
        let mut he_index: HashMap<String, usize> = HashMap::new();
        let mut he_line: Vec<usize> = Vec::new();
        let mut vertex_names: HashMap<String, usize> = HashMap::new();
        let mut vertices: Vec<VertexData> = Vec::new();
        let mut vertex_line: Vec<usize> = Vec::new();

        for rv in &self.vertices {
            if vertex_names.contains_key(&rv.name) {
                return Err(BgError::DuplicateVertexName {
                    line: rv.line,
                    name: rv.name.clone(),
                });
            }
            if rv.halfedges.is_empty() {
                return Err(BgError::EmptyVertex {
                    line: rv.line,
                    name: rv.name.clone(),
                });
            }
            if rv.mult < 1 {
                return Err(BgError::BadMultiplicity { line: rv.line });
            }
            let mut order = Vec::with_capacity(rv.halfedges.len());
            for h in &rv.halfedges {
                if he_index.contains_key(h) {
                    return Err(BgError::DuplicateHalfEdgeInVertex {
                        line: rv.line,
                        name: h.clone(),
                    });
                }
                let idx = halfedge_names.len();
                he_index.insert(h.clone(), idx);
                halfedge_names.push(h.clone());
                he_line.push(rv.line);
                order.push(idx);
            }
            vertex_names.insert(rv.name.clone(), vertices.len());
            vertex_line.push(rv.line);
            vertices.push(VertexData {
                name: rv.name.clone(),
                mult: rv.mult,
                order,
            });
        }

        let n = halfedge_names.len();
        let mut sigma = vec![usize::MAX; n];
        let mut vertex_of = vec![usize::MAX; n];
        for (v, vd) in vertices.iter().enumerate() {
            let k = vd.order.len();
            for (i, &h) in vd.order.iter().enumerate() {
                sigma[h] = vd.order[(i + 1) % k];
                vertex_of[h] = v;
            }
        }

        let mut iota = vec![usize::MAX; n];
        let mut edge_of = vec![usize::MAX; n];
        let mut edge_names: HashMap<String, usize> = HashMap::new();
        let mut edges: Vec<EdgeData> = Vec::new();
        for re in &self.edges {
            if edge_names.contains_key(&re.name) {
                return Err(BgError::DuplicateEdgeName {
                    line: re.line,
                    name: re.name.clone(),
                });
            }
            let resolve = |name: &String| {
                he_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| BgError::UnknownHalfEdge {
                        line: re.line,
                        name: name.clone(),
                    })
            };
            let a = resolve(&re.halves[0])?;
            let b = resolve(&re.halves[1])?;
            if a == b {
                return Err(BgError::SelfPairedEdge {
                    line: re.line,
                    name: re.halves[0].clone(),
                });
            }
            for &h in &[a, b] {
                if edge_of[h] != usize::MAX {
                    return Err(BgError::DuplicateHalfEdgeInEdge {
                        line: re.line,
                        name: halfedge_names[h].clone(),
                    });
                }
            }
            iota[a] = b;
            iota[b] = a;
            let e = edges.len();
            edge_of[a] = e;
            edge_of[b] = e;
            edge_names.insert(re.name.clone(), e);
            edges.push(EdgeData {
                name: re.name.clone(),
                halves: [a, b],
            });
        }

        for h in 0..n {
            if edge_of[h] == usize::MAX {
                return Err(BgError::HalfEdgeWithoutEdge {
                    line: he_line[h],
                    name: halfedge_names[h].clone(),
                });
            }
        }

        let mut deformed: Vec<Mark> = Vec::new();
        for rm in &self.marks {
            let h = he_index
                .get(&rm.halfedge)
                .copied()
                .ok_or_else(|| BgError::UnknownHalfEdge {
                    line: rm.line,
                    name: rm.halfedge.clone(),
                })?;
            if sigma[h] != iota[h] {
                return Err(BgError::IneligibleMark {
                    line: rm.line,
                    name: rm.halfedge.clone(),
                });
            }
            if rm.t.is_zero() {
                return Err(BgError::ZeroT { line: rm.line });
            }
            if deformed.iter().any(|m| m.halfedge == h) {
                return Err(BgError::DuplicateMark {
                    line: rm.line,
                    name: rm.halfedge.clone(),
                });
            }
            deformed.push(Mark {
                halfedge: h,
                t: rm.t.clone(),
            });
        }
        deformed.sort_by_key(|m| m.halfedge);

        // connectivity: orbits of <sigma, iota> must cover all of H
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(h) = stack.pop() {
            for next in [sigma[h], iota[h]] {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        if let Some(h) = (0..n).find(|&h| !seen[h]) {
            let v = vertex_of[h];
            return Err(BgError::Disconnected {
                line: vertex_line[v],
                name: vertices[v].name.clone(),
            });
        }

        Ok(RibbonGraph {
            halfedge_names,
            sigma,
            iota,
            vertex_of,
            edge_of,
            vertices,
            edges,
            deformed,
            field: self.field,
        })
    }
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Parse the `.bg` text format.
///
/// ```text
/// # comment
/// field q
/// vertex v1 mult 2: h1 h2 h3
/// edge e1: h1 h2
/// deformed h3 t 1
/// ```
pub fn parse_bg(text: &str) -> Result<RibbonGraph, BgError> {
    let mut doc = RawDoc {
        vertices: Vec::new(),
        edges: Vec::new(),
        marks: Vec::new(),
        field: None,
    };
    let mut field_seen = false;
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let keyword = content.split_whitespace().next().unwrap_or("");
        match keyword {
            "vertex" => {
                let (head, tail) = content.split_once(':').ok_or_else(|| BgError::Syntax {
                    line,
                    msg: "expected `vertex <name> mult <int>: <halfedges...>`".into(),
                })?;
                let toks: Vec<&str> = head.split_whitespace().collect();
                if toks.len() != 4 || toks[2] != "mult" {
                    return Err(BgError::Syntax {
                        line,
                        msg: "expected `vertex <name> mult <int>: <halfedges...>`".into(),
                    });
                }
                let mult: u32 = toks[3]
                    .parse()
                    .map_err(|_| BgError::BadMultiplicity { line })?;
                if mult < 1 {
                    return Err(BgError::BadMultiplicity { line });
                }
                doc.vertices.push(RawVertex {
                    name: toks[1].to_string(),
                    mult,
                    halfedges: tail.split_whitespace().map(str::to_string).collect(),
                    line,
                });
            }
            "edge" => {
                let (head, tail) = content.split_once(':').ok_or_else(|| BgError::Syntax {
                    line,
                    msg: "expected `edge <name>: <halfedge> <halfedge>`".into(),
                })?;
                let toks: Vec<&str> = head.split_whitespace().collect();
                let halves: Vec<&str> = tail.split_whitespace().collect();
                if toks.len() != 2 || halves.len() != 2 {
                    return Err(BgError::Syntax {
                        line,
                        msg: "expected `edge <name>: <halfedge> <halfedge>`".into(),
                    });
                }
                doc.edges.push(RawEdge {
                    name: toks[1].to_string(),
                    halves: [halves[0].to_string(), halves[1].to_string()],
                    line,
                });
            }
            "deformed" => {
                let toks: Vec<&str> = content.split_whitespace().collect();
                let t = match toks.len() {
                    2 => BigRational::one(),
                    4 if toks[2] == "t" => {
                        parse_rational(toks[3]).ok_or_else(|| BgError::Syntax {
                            line,
                            msg: format!("bad rational `{}`", toks[3]),
                        })?
                    }
                    _ => {
                        return Err(BgError::Syntax {
                            line,
                            msg: "expected `deformed <halfedge> [t <rational>]`".into(),
                        })
                    }
                };
                doc.marks.push(RawMark {
                    halfedge: toks[1].to_string(),
                    t,
                    line,
                });
            }
            "field" => {
                let toks: Vec<&str> = content.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(BgError::Syntax {
                        line,
                        msg: "expected `field q|2|p:<prime>`".into(),
                    });
                }
                if field_seen {
                    return Err(BgError::DuplicateField { line });
                }
                field_seen = true;
                doc.field = Some(FieldSpec::parse(toks[1]).map_err(|e| BgError::BadField {
                    line,
                    msg: e.to_string(),
                })?);
            }
            other => {
                return Err(BgError::Syntax {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    doc.assemble()
}

// ---------------------------------------------------------------------------
// JSON mirror
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    name: String,
    mult: u32,
    halfedges: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    name: String,
    halfedges: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct JsonMark {
    halfedge: String,
    t: String,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    deformed: Vec<JsonMark>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<FieldSpec>,
}

impl RibbonGraph {
    pub fn to_json_value(&self) -> serde_json::Value {
        let g = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| JsonVertex {
                    name: v.name.clone(),
                    mult: v.mult,
                    halfedges: v
                        .order
                        .iter()
                        .map(|&h| self.halfedge_names[h].clone())
                        .collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    name: e.name.clone(),
                    halfedges: [
                        self.halfedge_names[e.halves[0]].clone(),
                        self.halfedge_names[e.halves[1]].clone(),
                    ],
                })
                .collect(),
            deformed: self
                .deformed
                .iter()
                .map(|m| JsonMark {
                    halfedge: self.halfedge_names[m.halfedge].clone(),
                    t: m.t.to_string(),
                })
                .collect(),
            field: self.field,
        };
        serde_json::to_value(g).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<RibbonGraph, BgError> {
        let g: JsonGraph = serde_json::from_str(text).map_err(|e| BgError::Json(e.to_string()))?;
        let doc = RawDoc {
            vertices: g
                .vertices
                .into_iter()
                .map(|v| RawVertex {
                    name: v.name,
                    mult: v.mult,
                    halfedges: v.halfedges,
                    line: 0,
                })
                .collect(),
            edges: g
                .edges
                .into_iter()
                .map(|e| RawEdge {
                    name: e.name,
                    halves: e.halfedges,
                    line: 0,
                })
                .collect(),
            marks: g
                .deformed
                .into_iter()
                .map(|m| {
                    let t = parse_rational(&m.t).ok_or(BgError::Json(format!(
                        "bad rational `{}` in deformed mark",
                        m.t
                    )))?;
                    Ok(RawMark {
                        halfedge: m.halfedge,
                        t,
                        line: 0,
                    })
                })
                .collect::<Result<_, BgError>>()?,
            field: g.field,
        };
        doc.assemble()
    }

    /// Render back to the `.bg` text format. Parsing the result reproduces
    /// the same combinatorial data.
    pub fn to_bg_string(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field {f}");
        }
        for v in &self.vertices {
            let hs: Vec<&str> = v
                .order
                .iter()
                .map(|&h| self.halfedge_names[h].as_str())
                .collect();
            let _ = writeln!(out, "vertex {} mult {}: {}", v.name, v.mult, hs.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "edge {}: {} {}",
                e.name, self.halfedge_names[e.halves[0]], self.halfedge_names[e.halves[1]]
            );
        }
        for m in &self.deformed {
            let _ = writeln!(
                out,
                "deformed {} t {}",
                self.halfedge_names[m.halfedge], m.t
            );
        }
        out
    }
}

// ---------------------------------------------------------------------------
// accessors and surface combinatorics
// ---------------------------------------------------------------------------

impl RibbonGraph {
    pub fn n_halfedges(&self) -> usize {
        self.sigma.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }
    pub fn iota(&self, h: usize) -> usize {
        self.iota[h]
    }
    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }
    pub fn vertices(&self) -> &[VertexData] {
        &self.vertices
    }
    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }
    pub fn mult(&self, v: usize) -> u32 {
        self.vertices[v].mult
    }
    pub fn deformed(&self) -> &[Mark] {
        &self.deformed
    }
    pub fn field(&self) -> Option<FieldSpec> {
        self.field
    }
    pub fn halfedge_name(&self, h: usize) -> &str {
        &self.halfedge_names[h]
    }

    /// Valency of a vertex counting half-edges, so a loop counts twice.
    pub fn valency(&self, v: usize) -> usize {
        self.vertices[v].order.len()
    }

    /// A mark may sit on `h` exactly when `sigma(h) = iota(h)`.
    pub fn is_mark_eligible(&self, h: usize) -> bool {
        self.sigma[h] == self.iota[h]
    }

    /// Half-edges eligible for a deformed mark, one per perimeter-1 face.
    pub fn eligible_mark_halfedges(&self) -> Vec<usize> {
        (0..self.n_halfedges())
            .filter(|&h| self.is_mark_eligible(h))
            .collect()
    }

    pub fn multiplicities_sorted(&self) -> Vec<u32> {
        let mut m: Vec<u32> = self.vertices.iter().map(|v| v.mult).collect();
        m.sort_unstable();
        m
    }

    /// Orbits of `sigma ∘ iota`, each starting at its smallest half-edge,
    /// ordered by that smallest half-edge.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.n_halfedges();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                cycle.push(h);
                h = self.sigma[self.iota[h]];
                if h == start {
                    break;
                }
            }
            let perimeter = cycle.len();
            faces.push(Face { cycle, perimeter });
        }
        faces
    }

    pub fn perimeters_sorted(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.faces().iter().map(|f| f.perimeter).collect();
        p.sort_unstable();
        p
    }

    /// Euler characteristic `|V| - |E| + |F|` and the genus of the
    /// underlying closed oriented surface.
    pub fn euler_genus(&self) -> (i64, u32) {
        let chi = self.n_vertices() as i64 - self.n_edges() as i64 + self.faces().len() as i64;
        assert!(chi % 2 == 0, "Euler characteristic of a map must be even");
        assert!(chi <= 2, "genus must be non-negative");
        (chi, ((2 - chi) / 2) as u32)
    }

    /// Two-colorability of the underlying graph; any loop forces `false`.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n_vertices()];
        for start in 0..self.n_vertices() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &h in &self.vertices[v].order {
                    let w = self.vertex_of[self.iota[h]];
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) => {
                            if cw == c {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Equality of the combinatorial data (sigma, iota, multiplicities and
    /// marks by half-edge index), ignoring names.
    pub fn combinatorially_eq(&self, other: &RibbonGraph) -> bool {
        if self.sigma != other.sigma || self.iota != other.iota {
            return false;
        }
        let mults = |g: &RibbonGraph| -> Vec<u32> {
            (0..g.n_halfedges()).map(|h| g.mult(g.vertex_of[h])).collect()
        };
        if mults(self) != mults(other) {
            return false;
        }
        self.deformed == other.deformed
    }
}
