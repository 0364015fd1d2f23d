//! Rank of the maximal torus of the identity component of the outer
//! automorphism group, computed two ways: a closed formula in the graph
//! counts, and the dimension of the diagonalizable group cut out by the
//! monomial equations on the arrow scalars.
//!
//! The group lives in `(k*)^{2|E|+1}`: one coordinate `k_a` per arrow of the
//! unreduced quiver and one distinguished coordinate. Each pi-cycle `C`
//! imposes `prod_{a in C} k_a^{m(C)} = kbar`, and each deformed loop `a`
//! imposes `k_a^2 = t_a kbar`. Only the exponents matter for the dimension,
//! so the computation is independent of the `t` values and of the field.

use crate::exactla::{rank_exact, smith_normal_form, FieldSpec, Mat, Rationals};
use crate::quiver::{detect_caterpillar, Presentation};
use num::bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("local algebra: the graph has a single edge, so the rank theorem does not apply")]
    Local,
    #[error("caterpillar of length {length}: the rank theorem hypotheses fail")]
    Caterpillar { length: usize },
    #[error("{d} deformed mark(s) require a field of characteristic 2 (got characteristic {characteristic})")]
    DeformedNeedsCharTwo { d: usize, characteristic: u64 },
    #[error("exponent matrix rank {got} differs from |V| + d = {expected}")]
    RankLemmaViolation { got: usize, expected: usize },
    #[error("torus rank mismatch: lattice gives {lattice}, formula gives {formula}")]
    OracleMismatch { lattice: i64, formula: i64 },
}

/// Integer exponent matrix of the defining monomial equations.
///
/// Columns are the arrows of the unreduced quiver followed by the
/// distinguished coordinate; rows are the pi-cycle equations followed by the
/// deformed-loop equations.
#[derive(Debug, Clone)]
pub struct ExponentLattice {
    pub matrix: Mat<BigInt>,
    pub n_cycle_rows: usize,
    pub n_deformed_rows: usize,
    pub n_arrows: usize,
}

/// Exponent matrix of the unreduced presentation. The `t` values do not
/// enter; they affect solvability over the algebraically closed field, not
/// the dimension.
pub fn exponent_matrix(p: &Presentation) -> ExponentLattice {
    let n_arrows = p.n_arrows();
    let cols = n_arrows + 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in p.cycles() {
        let mut row = vec![BigInt::ZERO; cols];
        for &a in &c.arrows {
            row[a] = BigInt::from(c.mult);
        }
        row[n_arrows] = BigInt::from(-1);
        rows.push(row);
    }
    let n_cycle_rows = rows.len();
    let mut deformed: Vec<usize> = p.deformed().iter().map(|(a, _)| *a).collect();
    deformed.sort_unstable();
    for a in &deformed {
        let mut row = vec![BigInt::ZERO; cols];
        row[*a] = BigInt::from(2);
        row[n_arrows] = BigInt::from(-1);
        rows.push(row);
    }
    ExponentLattice {
        n_deformed_rows: rows.len() - n_cycle_rows,
        n_cycle_rows,
        n_arrows,
        matrix: Mat::from_rows(rows),
    }
}

/// Dimensions extracted from the exponent lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeRank {
    /// Rank of the exponent matrix over the rationals.
    pub exp_rank: usize,
    /// Dimension of the solution group: columns minus rank.
    pub dim_d_gamma: usize,
    /// Torus rank after quotienting by the inner diagonal `(k*)^{|Q0|-1}`.
    pub rank_da: i64,
}

/// Lattice-route rank, without checking the theorem hypotheses.
pub fn torus_rank_lattice_unchecked(p: &Presentation) -> LatticeRank {
    let lat = exponent_matrix(p);
    let exp_rank = rank_exact(&Rationals, &lat.matrix.to_rational());
    let dim_d_gamma = (lat.n_arrows + 1) - exp_rank;
    let rank_da = dim_d_gamma as i64 - (p.n_q0() as i64 - 1);
    LatticeRank {
        exp_rank,
        dim_d_gamma,
        rank_da,
    }
}

/// Closed-formula rank `|E| - |V| - d + 2`, without hypothesis checks.
pub fn torus_rank_formula_unchecked(n_edges: usize, n_vertices: usize, d: usize) -> i64 {
    n_edges as i64 - n_vertices as i64 - d as i64 + 2
}

/// The rank theorem requires at least two simple modules, a non-caterpillar
/// quiver, and characteristic 2 whenever deformed loops are present.
pub fn check_hypotheses(p: &Presentation, field: FieldSpec) -> Result<(), TorusError> {
    if p.n_q0() < 2 {
        return Err(TorusError::Local);
    }
    if let Some(cat) = detect_caterpillar(p) {
        return Err(TorusError::Caterpillar { length: cat.length });
    }
    let d = p.deformed().len();
    if d > 0 && !field.is_char_two() {
        return Err(TorusError::DeformedNeedsCharTwo {
            d,
            characteristic: field.characteristic(),
        });
    }
    Ok(())
}

/// Lattice-route rank with hypothesis checks.
pub fn torus_rank_lattice(p: &Presentation, field: FieldSpec) -> Result<LatticeRank, TorusError> {
    check_hypotheses(p, field)?;
    Ok(torus_rank_lattice_unchecked(p))
}

/// Formula-route rank with hypothesis checks.
pub fn torus_rank_formula(p: &Presentation, field: FieldSpec) -> Result<i64, TorusError> {
    check_hypotheses(p, field)?;
    Ok(torus_rank_formula_unchecked(
        p.n_q0(),
        p.cycles().len(),
        p.deformed().len(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n_edges: usize,
    pub n_vertices: usize,
    pub d: usize,
    pub formula: i64,
    pub lattice: LatticeRank,
    /// Invariant factors of the exponent lattice, reported for reference.
    pub exp_snf: Vec<BigInt>,
}

/// Run both routes and fail hard on any disagreement: the lattice rank must
/// equal the closed formula, and the exponent matrix must have rank
/// `|V| + d`.
pub fn cross_check(p: &Presentation, field: FieldSpec) -> Result<CrossCheckReport, TorusError> {
    check_hypotheses(p, field)?;
    let lattice = torus_rank_lattice_unchecked(p);
    let n_vertices = p.cycles().len();
    let d = p.deformed().len();
    let expected_rank = n_vertices + d;
    if lattice.exp_rank != expected_rank {
        return Err(TorusError::RankLemmaViolation {
            got: lattice.exp_rank,
            expected: expected_rank,
        });
    }
    let formula = torus_rank_formula_unchecked(p.n_q0(), n_vertices, d);
    if lattice.rank_da != formula {
        return Err(TorusError::OracleMismatch {
            lattice: lattice.rank_da,
            formula,
        });
    }
    let exp_snf = smith_normal_form(&exponent_matrix(p).matrix);
    Ok(CrossCheckReport {
        n_edges: p.n_q0(),
        n_vertices,
        d,
        formula,
        lattice,
        exp_snf,
    })
}
