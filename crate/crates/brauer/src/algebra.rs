//! The finite-dimensional algebra attached to a reduced presentation: basis,
//! structure constants, symmetrizing form and center.
//!
//! The basis consists of one idempotent per quiver vertex, all proper powers
//! of the retained cycles (paths `(cycle, start, len)` with
//! `1 <= len < mult * cycle_len`), and one socle element per quiver vertex.
//! The two full cycle powers through a vertex are identified as its socle.
//! Products of basis elements are always a scalar multiple of a single basis
//! element: concatenation along the cycle word, the full power landing in the
//! socle, and the single override `a * a = t * soc` for a deformed loop `a`.

use crate::exactla::{nullspace, rank_exact, Field, FieldSpec, Mat};
use crate::quiver::{Presentation, ReducedPresentation};
use std::collections::BTreeMap;
use thiserror::Error;

pub use crate::exactla::{PrimeField, Rationals};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("deformation parameter {t} is undefined or zero over {field}")]
    DeformationVanishes { t: String, field: String },
}

/// One element of the ordered basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisElement {
    Idem(usize),
    Path {
        cycle: usize,
        start: usize,
        len: usize,
    },
    Soc(usize),
}

#[derive(Debug, Clone)]
struct TableCycle<F: Field> {
    len: usize,
    mult: u32,
    sources: Vec<usize>,
    deformed: Vec<Option<F::Elem>>,
    /// Base offset of this cycle's paths inside the path block.
    offset: usize,
}

impl<F: Field> TableCycle<F> {
    fn span(&self) -> usize {
        self.mult as usize * self.len
    }
}

/// Sparse algebra element: sorted `(basis index, coefficient)` pairs.
pub type SparseElem<F> = Vec<(usize, <F as Field>::Elem)>;

/// Explicit basis and structure constants over an exact field.
#[derive(Debug, Clone)]
pub struct AlgebraTable<F: Field> {
    pub field: F,
    basis: Vec<BasisElement>,
    n_q0: usize,
    cycles: Vec<TableCycle<F>>,
    n_paths: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    pub two_dim: bool,
}

/// Build the multiplication table of the algebra of a reduced presentation.
pub fn build_table<F: Field>(
    r: &ReducedPresentation,
    field: &F,
) -> Result<AlgebraTable<F>, AlgebraError> {
    let mut cycles: Vec<TableCycle<F>> = Vec::with_capacity(r.cycles.len());
    let mut offset = 0;
    for rc in &r.cycles {
        let deformed = rc
            .deformed
            .iter()
            .map(|slot| match slot {
                None => Ok(None),
                Some(t) => match field.from_rational(t) {
                    Some(x) if !field.is_zero(&x) => Ok(Some(x)),
                    _ => Err(AlgebraError::DeformationVanishes {
                        t: t.to_string(),
                        field: field.spec().to_string(),
                    }),
                },
            })
            .collect::<Result<Vec<_>, _>>()?;
        let c = TableCycle {
            len: rc.len(),
            mult: rc.mult,
            sources: rc.sources.clone(),
            deformed,
            offset,
        };
        debug_assert!(c.span() >= 2, "retained cycles have span at least 2");
        offset += c.len * (c.span() - 1);
        cycles.push(c);
    }
    let n_paths = offset;
    let n_q0 = r.n_q0;

    let mut basis = Vec::with_capacity(2 * n_q0 + n_paths);
    let mut source = Vec::with_capacity(2 * n_q0 + n_paths);
    let mut target = Vec::with_capacity(2 * n_q0 + n_paths);
    for v in 0..n_q0 {
        basis.push(BasisElement::Idem(v));
        source.push(v);
        target.push(v);
    }
    for (ci, c) in cycles.iter().enumerate() {
        for s in 0..c.len {
            for len in 1..c.span() {
                basis.push(BasisElement::Path {
                    cycle: ci,
                    start: s,
                    len,
                });
                source.push(c.sources[s]);
                target.push(c.sources[(s + len) % c.len]);
            }
        }
    }
    for v in 0..n_q0 {
        basis.push(BasisElement::Soc(v));
        source.push(v);
        target.push(v);
    }

    Ok(AlgebraTable {
        field: field.clone(),
        basis,
        n_q0,
        cycles,
        n_paths,
        source,
        target,
        two_dim: r.two_dim,
    })
}

impl<F: Field> AlgebraTable<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_q0(&self) -> usize {
        self.n_q0
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn idem_index(&self, v: usize) -> usize {
        v
    }

    pub fn soc_index(&self, v: usize) -> usize {
        self.n_q0 + self.n_paths + v
    }

    pub fn path_index(&self, cycle: usize, start: usize, len: usize) -> usize {
        let c = &self.cycles[cycle];
        debug_assert!(start < c.len && 1 <= len && len < c.span());
        self.n_q0 + c.offset + start * (c.span() - 1) + (len - 1)
    }

    pub fn is_soc(&self, b: usize) -> bool {
        matches!(self.basis[b], BasisElement::Soc(_))
    }

    pub fn source_of(&self, b: usize) -> usize {
        self.source[b]
    }

    pub fn target_of(&self, b: usize) -> usize {
        self.target[b]
    }

    /// Basis indices of the arrows (length-1 paths).
    pub fn arrow_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (ci, c) in self.cycles.iter().enumerate() {
            for s in 0..c.len {
                out.push(self.path_index(ci, s, 1));
            }
        }
        out
    }

    /// Product of two basis elements: `None` means zero, otherwise a scalar
    /// multiple of a single basis element.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(F::Elem, usize)> {
        use BasisElement::*;
        if self.target[i] != self.source[j] {
            return None;
        }
        match (self.basis[i], self.basis[j]) {
            (Idem(_), _) => Some((self.field.one(), j)),
            (_, Idem(_)) => Some((self.field.one(), i)),
            (Soc(_), _) | (_, Soc(_)) => None,
            (
                Path {
                    cycle: c1,
                    start: s1,
                    len: l1,
                },
                Path {
                    cycle: c2,
                    start: s2,
                    len: l2,
                },
            ) => {
                let cy = &self.cycles[c1];
                if c1 == c2 && s2 == (s1 + l1) % cy.len {
                    let total = l1 + l2;
                    match total.cmp(&cy.span()) {
                        std::cmp::Ordering::Less => {
                            Some((self.field.one(), self.path_index(c1, s1, total)))
                        }
                        std::cmp::Ordering::Equal => {
                            Some((self.field.one(), self.soc_index(cy.sources[s1])))
                        }
                        std::cmp::Ordering::Greater => None,
                    }
                } else if c1 == c2 && s1 == s2 && l1 == 1 && l2 == 1 {
                    // a deformed loop squares to t times the socle
                    cy.deformed[s1]
                        .clone()
                        .map(|t| (t, self.soc_index(cy.sources[s1])))
                } else {
                    None
                }
            }
        }
    }

    /// The unit element: the sum of all idempotents.
    pub fn unit(&self) -> SparseElem<F> {
        (0..self.n_q0).map(|v| (v, self.field.one())).collect()
    }

    pub fn mul_sparse(&self, x: &SparseElem<F>, y: &SparseElem<F>) -> SparseElem<F> {
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some((c, k)) = self.mul_basis(*i, *j) {
                    let term = self.field.mul(&self.field.mul(a, b), &c);
                    let entry = acc.entry(k).or_insert_with(|| self.field.zero());
                    *entry = self.field.add(entry, &term);
                }
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .collect()
    }

    /// Does `z` commute with every basis element?
    pub fn commutes_with_all(&self, z: &SparseElem<F>) -> bool {
        (0..self.dim()).all(|b| {
            let e = vec![(b, self.field.one())];
            self.mul_sparse(z, &e) == self.mul_sparse(&e, z)
        })
    }
}

/// Closed-form dimension: `2|E|` plus `val(v) * (m_v * val(v) - 1)` over the
/// retained cycles; the two-dimensional case returns 2. Must agree with the
/// length of the enumerated basis.
pub fn dimension_formula(r: &ReducedPresentation) -> usize {
    if r.two_dim {
        return 2;
    }
    2 * r.n_q0
        + r.cycles
            .iter()
            .map(|c| c.len() * (c.span() - 1))
            .sum::<usize>()
}

// ---------------------------------------------------------------------------
// symmetrizing form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub dim: usize,
    pub rank: usize,
    pub nondegenerate: bool,
    /// Exact symmetry of the Gram matrix, `phi(b c) = phi(c b)`.
    pub symmetric: bool,
}

/// Gram matrix of the standard bilinear form `<a, b> = phi(a b)`, where `phi`
/// is 1 on every socle basis element and 0 on the rest of the basis. Returns
/// its exact rank; the form is symmetrizing iff the rank equals the dimension.
pub fn gram_form<F: Field>(t: &AlgebraTable<F>) -> GramReport {
    let d = t.dim();
    let mut g = Mat::filled(d, d, t.field.zero());
    for i in 0..d {
        for j in 0..d {
            if let Some((c, k)) = t.mul_basis(i, j) {
                if t.is_soc(k) {
                    g.set(i, j, c);
                }
            }
        }
    }
    let symmetric = (0..d).all(|i| (i..d).all(|j| g.at(i, j) == g.at(j, i)));
    let rank = rank_exact(&t.field, &g);
    GramReport {
        dim: d,
        rank,
        nondegenerate: rank == d,
        symmetric,
    }
}

// ---------------------------------------------------------------------------
// center: exact solver
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CenterSolution<F: Field> {
    pub dim: usize,
    pub basis: Vec<SparseElem<F>>,
}

/// Solve `z g = g z` over the idempotents and arrows (they generate the
/// algebra). Commuting with the idempotents restricts `z` to the span of the
/// closed basis elements, so only the arrow constraints enter the system.
pub fn center_solve<F: Field>(t: &AlgebraTable<F>) -> CenterSolution<F> {
    let closed: Vec<usize> = (0..t.dim())
        .filter(|&b| t.source_of(b) == t.target_of(b))
        .collect();
    let arrows = t.arrow_indices();

    let mut rows: BTreeMap<(usize, usize), Vec<(usize, F::Elem)>> = BTreeMap::new();
    for (ai, &a) in arrows.iter().enumerate() {
        for (col, &b) in closed.iter().enumerate() {
            if let Some((c, k)) = t.mul_basis(b, a) {
                rows.entry((ai, k)).or_default().push((col, c));
            }
            if let Some((c, k)) = t.mul_basis(a, b) {
                rows.entry((ai, k)).or_default().push((col, t.field.neg(&c)));
            }
        }
    }

    let mut m = Mat::filled(rows.len(), closed.len(), t.field.zero());
    for (r, (_, terms)) in rows.into_iter().enumerate() {
        for (col, c) in terms {
            let v = t.field.add(m.at(r, col), &c);
            m.set(r, col, v);
        }
    }

    let (dim, vectors) = nullspace(&t.field, &m);
    let basis = vectors
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| !t.field.is_zero(c))
                .map(|(col, c)| (closed[col], c))
                .collect()
        })
        .collect();
    CenterSolution { dim, basis }
}

// ---------------------------------------------------------------------------
// center: closed-form prediction
// ---------------------------------------------------------------------------

/// Symbolic central element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterGenerator {
    /// The unit.
    One,
    /// Sum over all rotations of the `power`-th cycle power
    /// (requires `1 <= power < mult`).
    CycleSum { cycle: usize, power: u32 },
    /// For a loop at `pos` with `pi(loop) != loop`: the path of length
    /// `span - 1` starting right after the loop.
    LoopComplement { cycle: usize, pos: usize },
    /// The socle element of a quiver vertex.
    Socle { vertex: usize },
}

#[derive(Debug, Clone)]
pub struct CenterPrediction {
    pub dim: usize,
    pub generators: Vec<CenterGenerator>,
    /// Multiset of multiplicities `> 1`; the center modulo its socle is the
    /// corresponding truncated polynomial ring. `None` when the input is the
    /// multiplicity-1 loop algebra, where that description does not apply.
    pub quotient_mults: Option<Vec<u32>>,
    /// Number of loops with `pi(loop) != loop`, equal to the number of
    /// perimeter-1 faces.
    pub free_loop_count: usize,
}

/// The closed-form center: `1`, the rotation-invariant cycle sums `m_{i,t}`,
/// one long path `q_gamma` per loop with `pi(gamma) != gamma`, and one socle
/// element per vertex.
pub fn center_predicted(p: &Presentation, r: &ReducedPresentation) -> CenterPrediction {
    let mut generators = vec![CenterGenerator::One];
    for (ci, c) in r.cycles.iter().enumerate() {
        for power in 1..c.mult {
            generators.push(CenterGenerator::CycleSum { cycle: ci, power });
        }
    }
    let mut loops = 0;
    for (ci, c) in r.cycles.iter().enumerate() {
        if c.len() < 2 {
            continue; // a length-1 cycle is a pi-fixed loop
        }
        for pos in 0..c.len() {
            if c.sources[pos] == c.sources[(pos + 1) % c.len()] {
                generators.push(CenterGenerator::LoopComplement { cycle: ci, pos });
                loops += 1;
            }
        }
    }
    debug_assert_eq!(loops, p.free_loops().len());
    for vertex in 0..r.n_q0 {
        generators.push(CenterGenerator::Socle { vertex });
    }

    let a_infinity = p.n_q0() == 1
        && p.cycles().len() == 1
        && p.cycles()[0].len() == 2
        && p.cycles()[0].mult == 1;
    let quotient_mults = if a_infinity {
        None
    } else {
        let mut mults: Vec<u32> = r
            .cycles
            .iter()
            .map(|c| c.mult)
            .filter(|&m| m > 1)
            .collect();
        mults.sort_unstable();
        Some(mults)
    };

    CenterPrediction {
        dim: generators.len(),
        generators,
        quotient_mults,
        free_loop_count: loops,
    }
}

/// Expand a symbolic central element in the basis of the table.
pub fn expand_center_generator<F: Field>(
    t: &AlgebraTable<F>,
    gen: &CenterGenerator,
) -> SparseElem<F> {
    match gen {
        CenterGenerator::One => t.unit(),
        CenterGenerator::CycleSum { cycle, power } => {
            let len = t.cycles[*cycle].len;
            (0..len)
                .map(|s| {
                    (
                        t.path_index(*cycle, s, *power as usize * len),
                        t.field.one(),
                    )
                })
                .collect()
        }
        CenterGenerator::LoopComplement { cycle, pos } => {
            let c = &t.cycles[*cycle];
            vec![(
                t.path_index(*cycle, (pos + 1) % c.len, c.span() - 1),
                t.field.one(),
            )]
        }
        CenterGenerator::Socle { vertex } => vec![(t.soc_index(*vertex), t.field.one())],
    }
}

/// Expanded predicted center elements, in generator order.
pub fn expand_center_prediction<F: Field>(
    t: &AlgebraTable<F>,
    pred: &CenterPrediction,
) -> Vec<SparseElem<F>> {
    pred.generators
        .iter()
        .map(|g| expand_center_generator(t, g))
        .collect()
}

/// Exact rank of a family of sparse elements, for independence checks.
pub fn sparse_rank<F: Field>(field: &F, dim: usize, elems: &[SparseElem<F>]) -> usize {
    let mut m = Mat::filled(elems.len(), dim, field.zero());
    for (i, e) in elems.iter().enumerate() {
        for (j, c) in e {
            m.set(i, *j, c.clone());
        }
    }
    rank_exact(field, &m)
}

/// Over a field of characteristic other than 2, deformed marks do not change
/// the isomorphism class of the algebra; callers may surface this note.
pub fn deformation_note(spec: FieldSpec, deformed_count: usize) -> Option<String> {
    if deformed_count > 0 && spec.characteristic() != 2 {
        Some(format!(
            "char {} != 2: the {} deformed mark(s) do not change the isomorphism class; \
             the algebra is isomorphic to the unmarked one",
            spec.characteristic(),
            deformed_count
        ))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{reduce, Presentation};
    use crate::ribbon::parse_bg;

    fn table_q(text: &str) -> AlgebraTable<Rationals> {
        let g = parse_bg(text).unwrap();
        let p = Presentation::from_graph(&g);
        build_table(&reduce(&p), &Rationals).unwrap()
    }

    const STAR3: &str = "\
vertex c mult 1: a1 b1 c1
vertex l1 mult 1: a2
vertex l2 mult 1: b2
vertex l3 mult 1: c2
edge a: a1 a2
edge b: b1 b2
edge c: c1 c2
";
    const EDGE_23: &str = "vertex v1 mult 2: h1\nvertex v2 mult 3: h2\nedge e: h1 h2\n";
    const LOOP_M1: &str = "vertex v mult 1: h1 h2\nedge e: h1 h2\n";
    const EDGE_11: &str = "vertex v1 mult 1: h1\nvertex v2 mult 1: h2\nedge e: h1 h2\n";
    const EDGE_22: &str = "vertex v1 mult 2: h1\nvertex v2 mult 2: h2\nedge e: h1 h2\n";
    const SELF_FOLDED: &str = "vertex v1 mult 1: a1 b1 b2\nvertex v2 mult 1: a2\nedge a: a1 a2\nedge b: b1 b2\n";

    #[test]
    fn dimensions_of_named_algebras() {
        assert_eq!(table_q(STAR3).dim(), 12);
        assert_eq!(table_q(EDGE_23).dim(), 5);
        assert_eq!(table_q(LOOP_M1).dim(), 4);
        assert_eq!(table_q(EDGE_11).dim(), 2);
        assert_eq!(table_q(EDGE_22).dim(), 4);
        assert_eq!(table_q(SELF_FOLDED).dim(), 10);
    }

    #[test]
    fn dimension_formula_matches_enumeration() {
        for text in [STAR3, EDGE_23, LOOP_M1, EDGE_11, EDGE_22, SELF_FOLDED] {
            let g = parse_bg(text).unwrap();
            let r = reduce(&Presentation::from_graph(&g));
            assert_eq!(dimension_formula(&r), build_table(&r, &Rationals).unwrap().dim());
        }
    }

    #[test]
    fn two_dimensional_table() {
        let t = table_q(EDGE_11);
        assert!(t.two_dim);
        assert_eq!(t.basis().len(), 2);
        let e = t.idem_index(0);
        let s = t.soc_index(0);
        assert_eq!(t.mul_basis(e, s), Some((Rationals.one(), s)));
        assert_eq!(t.mul_basis(s, s), None);
    }

    fn check_associativity_exhaustive<F: Field>(t: &AlgebraTable<F>) {
        let d = t.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = t
                        .mul_basis(i, j)
                        .and_then(|(c, ij)| t.mul_basis(ij, k).map(|(c2, r)| (t.field.mul(&c, &c2), r)));
                    let right = t
                        .mul_basis(j, k)
                        .and_then(|(c, jk)| t.mul_basis(i, jk).map(|(c2, r)| (t.field.mul(&c, &c2), r)));
                    let norm = |o: Option<(F::Elem, usize)>| {
                        o.filter(|(c, _)| !t.field.is_zero(c))
                    };
                    assert_eq!(norm(left), norm(right), "associativity at ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn associativity_on_small_algebras() {
        for text in [STAR3, EDGE_23, LOOP_M1, EDGE_11, EDGE_22, SELF_FOLDED] {
            check_associativity_exhaustive(&table_q(text));
        }
        // a deformed loop over GF(2)
        let g = parse_bg("vertex v mult 2: h1 h2\nedge e: h1 h2\ndeformed h1\n").unwrap();
        let t = build_table(&reduce(&Presentation::from_graph(&g)), &PrimeField::new(2).unwrap())
            .unwrap();
        check_associativity_exhaustive(&t);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let t = table_q(STAR3);
        for i in 0..t.n_q0() {
            for j in 0..t.n_q0() {
                let expect = (i == j).then(|| (Rationals.one(), i));
                assert_eq!(t.mul_basis(i, j), expect);
            }
        }
        let one = t.unit();
        for b in 0..t.dim() {
            let e = vec![(b, Rationals.one())];
            assert_eq!(t.mul_sparse(&one, &e), e);
            assert_eq!(t.mul_sparse(&e, &one), e);
        }
    }

    #[test]
    fn socle_annihilates_radical() {
        let t = table_q(SELF_FOLDED);
        for v in 0..t.n_q0() {
            let s = t.soc_index(v);
            for b in 0..t.dim() {
                if matches!(t.basis()[b], BasisElement::Idem(_)) {
                    continue;
                }
                assert_eq!(t.mul_basis(s, b), None);
                assert_eq!(t.mul_basis(b, s), None);
            }
        }
    }

    #[test]
    fn deformed_loop_squares_to_t_times_socle() {
        let g = parse_bg("vertex v mult 1: h1 h2\nedge e: h1 h2\ndeformed h1 t 2\n").unwrap();
        let t = build_table(&reduce(&Presentation::from_graph(&g)), &Rationals).unwrap();
        let x = t.path_index(0, 0, 1);
        let y = t.path_index(0, 1, 1);
        let s = t.soc_index(0);
        assert_eq!(t.mul_basis(x, x), Some((Rationals.from_int(2), s)));
        assert_eq!(t.mul_basis(y, y), None);
        assert_eq!(t.mul_basis(x, y), Some((Rationals.one(), s)));
        assert_eq!(t.mul_basis(y, x), Some((Rationals.one(), s)));
    }

    #[test]
    fn deformation_must_not_vanish_in_the_field() {
        let g = parse_bg("vertex v mult 1: h1 h2\nedge e: h1 h2\ndeformed h1 t 2\n").unwrap();
        let r = reduce(&Presentation::from_graph(&g));
        let err = build_table(&r, &PrimeField::new(2).unwrap()).unwrap_err();
        assert!(matches!(err, AlgebraError::DeformationVanishes { .. }));
    }

    #[test]
    fn gram_examples() {
        // forced 2x2 form on the two-dimensional algebra
        let rep = gram_form(&table_q(EDGE_11));
        assert_eq!(rep.rank, 2);
        assert!(rep.nondegenerate);

        for text in [STAR3, EDGE_23, LOOP_M1, EDGE_22, SELF_FOLDED] {
            let rep = gram_form(&table_q(text));
            assert!(rep.nondegenerate, "degenerate form on {text}");
        }
    }

    #[test]
    fn gram_degenerates_on_doubly_deformed_loop_over_gf2() {
        let g = parse_bg("vertex v mult 1: h1 h2\nedge e: h1 h2\ndeformed h1\ndeformed h2\n")
            .unwrap();
        let r = reduce(&Presentation::from_graph(&g));
        let t = build_table(&r, &PrimeField::new(2).unwrap()).unwrap();
        let rep = gram_form(&t);
        assert_eq!(rep.dim, 4);
        assert_eq!(rep.rank, 3);
        assert!(!rep.nondegenerate);

        // over the rationals the determinant is t_x t_y - 1
        let t = build_table(&r, &Rationals).unwrap();
        let rep = gram_form(&t);
        assert_eq!(rep.rank, 3, "t_x = t_y = 1 degenerates over any field");
    }

    #[test]
    fn gram_is_symmetric() {
        let t = table_q(SELF_FOLDED);
        let d = t.dim();
        let phi = |i: usize, j: usize| {
            t.mul_basis(i, j)
                .filter(|(_, k)| t.is_soc(*k))
                .map(|(c, _)| c)
        };
        for i in 0..d {
            for j in 0..d {
                assert_eq!(phi(i, j), phi(j, i));
            }
        }
    }

    fn center_dims(text: &str) -> (usize, usize) {
        let g = parse_bg(text).unwrap();
        let p = Presentation::from_graph(&g);
        let r = reduce(&p);
        let t = build_table(&r, &Rationals).unwrap();
        let solved = center_solve(&t);
        let predicted = center_predicted(&p, &r);
        (solved.dim, predicted.dim)
    }

    #[test]
    fn center_examples() {
        assert_eq!(center_dims(STAR3), (4, 4));
        assert_eq!(center_dims(EDGE_22), (4, 4));
        assert_eq!(center_dims(SELF_FOLDED), (4, 4));
        assert_eq!(center_dims(LOOP_M1), (4, 4));
        assert_eq!(center_dims(EDGE_11), (2, 2));
    }

    #[test]
    fn commutative_cases_have_full_center() {
        for text in [EDGE_23, EDGE_22, LOOP_M1, EDGE_11] {
            let t = table_q(text);
            assert_eq!(center_solve(&t).dim, t.dim(), "{text} should be commutative");
        }
    }

    #[test]
    fn predicted_elements_commute_and_are_independent() {
        for text in [STAR3, EDGE_23, LOOP_M1, EDGE_11, EDGE_22, SELF_FOLDED] {
            let g = parse_bg(text).unwrap();
            let p = Presentation::from_graph(&g);
            let r = reduce(&p);
            let t = build_table(&r, &Rationals).unwrap();
            let pred = center_predicted(&p, &r);
            let expanded = expand_center_prediction(&t, &pred);
            for z in &expanded {
                assert!(t.commutes_with_all(z), "non-central prediction on {text}");
            }
            assert_eq!(sparse_rank(&Rationals, t.dim(), &expanded), pred.dim);
        }
    }

    #[test]
    fn quotient_structure() {
        let g = parse_bg(EDGE_22).unwrap();
        let p = Presentation::from_graph(&g);
        let pred = center_predicted(&p, &reduce(&p));
        assert_eq!(pred.quotient_mults, Some(vec![2, 2]));

        let g = parse_bg(LOOP_M1).unwrap();
        let p = Presentation::from_graph(&g);
        let pred = center_predicted(&p, &reduce(&p));
        assert_eq!(pred.quotient_mults, None, "the multiplicity-1 loop is exempt");
        assert_eq!(pred.free_loop_count, 2);
    }
}
