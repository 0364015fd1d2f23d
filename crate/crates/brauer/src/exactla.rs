//! Exact linear algebra over the rationals, prime fields and the integers.
//!
//! Everything here is dense and exact; problem sizes stay in the hundreds of
//! rows, so there is no sparse or modular machinery. Field arithmetic is
//! abstracted by the [`Field`] trait with two implementations: [`Rationals`]
//! (arbitrary-precision `BigRational`) and [`PrimeField`] (GF(p) on `u64`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldSpecError {
    #[error("unknown field `{0}` (expected `q`, `2` or `p:<prime>`)")]
    Unknown(String),
    #[error("`{0}` is not a prime")]
    NotPrime(u64),
    #[error("prime `{0}` is too large (must fit in 31 bits)")]
    TooLarge(String),
}

/// Coefficient field selector: the rationals or a prime field GF(p).
///
/// Prime fields stand in for their algebraic closures: every dimension
/// computed here (ranks, nullspaces) is stable under field extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Accepts `q`, `2` and `p:<prime>`.
    pub fn parse(s: &str) -> Result<Self, FieldSpecError> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            "2" => Ok(FieldSpec::Prime(2)),
            _ => {
                if let Some(rest) = s.strip_prefix("p:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| FieldSpecError::Unknown(s.to_string()))?;
                    if p > (1 << 31) {
                        return Err(FieldSpecError::TooLarge(rest.to_string()));
                    }
                    if !is_prime_u64(p) {
                        return Err(FieldSpecError::NotPrime(p));
                    }
                    Ok(FieldSpec::Prime(p))
                } else {
                    Err(FieldSpecError::Unknown(s.to_string()))
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn is_char_two(&self) -> bool {
        self.characteristic() == 2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(2) => write!(f, "2"),
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldSpec::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact field arithmetic, with the field object carrying any context (the
/// modulus for GF(p)).
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Image of an exact rational; `None` when the denominator vanishes.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
    fn spec(&self) -> FieldSpec;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigRational> {
        Some(r.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
}

/// GF(p) for a prime `p`, elements stored as canonical representatives in `u64`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldSpecError> {
        if !is_prime_u64(p) {
            return Err(FieldSpecError::NotPrime(p));
        }
        if p > (1 << 31) {
            return Err(FieldSpecError::TooLarge(p.to_string()));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.p as i128) as u64)
    }
    fn from_int(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, r: &BigRational) -> Option<u64> {
        let den = self.reduce_bigint(r.denom());
        let num = self.reduce_bigint(r.numer());
        let inv = self.inv(&den)?;
        Some(self.mul(&num, &inv))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
}

/// Dense row-major matrix with exact entries.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn filled(rows: usize, cols: usize, fill: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == n_cols),
            "ragged matrix rows"
        );
        Mat {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.at(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data: out,
        }
    }
}

impl Mat<BigInt> {
    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    /// View over the rationals, for rank computations on integer matrices.
    pub fn to_rational(&self) -> Mat<BigRational> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|n| BigRational::from_integer(n.clone()))
                .collect(),
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Zero entries are skipped before any arithmetic happens, so elimination on
/// the very sparse matrices produced elsewhere in the crate stays near-linear.
pub fn rref_in_place<F: Field>(field: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(pr) = (r..m.rows()).find(|&i| !field.is_zero(m.at(i, c))) else {
            continue;
        };
        m.swap_rows(r, pr);
        let inv = field
            .inv(m.at(r, c))
            .expect("pivot is nonzero by construction");
        for j in c..m.cols() {
            if !field.is_zero(m.at(r, j)) {
                let v = field.mul(m.at(r, j), &inv);
                m.set(r, j, v);
            }
        }
        for i in 0..m.rows() {
            if i == r {
                continue;
            }
            let factor = m.at(i, c).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..m.cols() {
                if field.is_zero(m.at(r, j)) {
                    continue;
                }
                let delta = field.mul(&factor, m.at(r, j));
                let v = field.sub(m.at(i, j), &delta);
                m.set(i, j, v);
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    pivot_cols
}

/// Rank by exact Gaussian elimination.
pub fn rank_exact<F: Field>(field: &F, m: &Mat<F::Elem>) -> usize {
    let mut work = m.clone();
    rref_in_place(field, &mut work).len()
}

/// Nullspace dimension and an explicit basis; every basis vector `v`
/// satisfies `m v = 0` exactly.
pub fn nullspace<F: Field>(field: &F, m: &Mat<F::Elem>) -> (usize, Vec<Vec<F::Elem>>) {
    let mut work = m.clone();
    let pivot_cols = rref_in_place(field, &mut work);
    let rank = pivot_cols.len();
    let dim = m.cols() - rank;
    let mut basis = Vec::with_capacity(dim);
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    for free in 0..m.cols() {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![field.zero(); m.cols()];
        v[free] = field.one();
        for (pr, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = field.neg(work.at(pr, free));
        }
        basis.push(v);
    }
    (dim, basis)
}

/// Matrix-vector product, for rechecking nullspace vectors.
pub fn mat_vec<F: Field>(field: &F, m: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(m.cols(), v.len());
    (0..m.rows())
        .map(|i| {
            let mut acc = field.zero();
            for j in 0..m.cols() {
                if field.is_zero(m.at(i, j)) || field.is_zero(&v[j]) {
                    continue;
                }
                let t = field.mul(m.at(i, j), &v[j]);
                acc = field.add(&acc, &t);
            }
            acc
        })
        .collect()
}

/// Diagonal of the Smith normal form of an integer matrix, as a divisibility
/// chain `d_1 | d_2 | ...` of non-negative integers of length `min(rows, cols)`.
pub fn smith_normal_form(m: &Mat<BigInt>) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows.min(cols);
    let mut diag: Vec<BigInt> = Vec::with_capacity(n);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a.at(i, j).is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a.at(i, j).abs() < a.at(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break; // trailing block is zero
        };
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t) / a.at(t, t);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = a.at(i, j) - &q * a.at(t, j);
                        a.set(i, j, v);
                    }
                }
                if !a.at(i, t).is_zero() {
                    // remainder is strictly smaller: promote it to pivot
                    a.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j) / a.at(t, t);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = a.at(i, j) - &q * a.at(i, t);
                        a.set(i, j, v);
                    }
                }
                if !a.at(t, j).is_zero() {
                    a.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: the pivot must divide the whole trailing block
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(a.at(i, j) % a.at(t, t)).is_zero() {
                        for jj in t..cols {
                            let v = a.at(t, jj) + a.at(i, jj);
                            a.set(t, jj, v);
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(a.at(t, t).abs());
        t += 1;
    }
    diag.resize(n, BigInt::zero());
    diag
}

/// gcd of all `t x t` minors, by direct enumeration. This is the classical
/// reference characterization of the Smith normal form: the product of the
/// first `t` diagonal entries equals this gcd. Exponential in `t`; intended
/// only as an oracle for small matrices.
pub fn minors_gcd(m: &Mat<BigInt>, t: usize) -> BigInt {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = Vec::new();
        for first in 0..=n - k {
            for mut rest in combos(n - first - 1, k - 1) {
                for r in rest.iter_mut() {
                    *r += first + 1;
                }
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn det(m: &Mat<BigInt>, rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.len() == 1 {
            return m.at(rows[0], cols[0]).clone();
        }
        let mut acc = BigInt::zero();
        for (k, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = det(m, &rows[1..], &sub_cols);
            let term = m.at(rows[0], c) * minor;
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let mut g = BigInt::zero();
    for rows in combos(m.rows(), t) {
        for cols in combos(m.cols(), t) {
            g = g.gcd(&det(m, &rows, &cols));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Mat<BigRational> {
        Mat::from_i64_rows(rows).to_rational()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&Rationals, &qmat(vec![vec![2]])), 1);
        assert_eq!(rank_exact(&Rationals, &qmat(vec![vec![2, 1], vec![1, 2]])), 2);
        assert_eq!(
            rank_exact(&Rationals, &qmat(vec![vec![0, 0], vec![0, 0]])),
            0
        );
    }

    #[test]
    fn rank_prime_field() {
        let f2 = PrimeField::new(2).unwrap();
        // [[2,1],[1,2]] has determinant 3, hence rank 1 over GF(3) but 2 over GF(2)
        let m = Mat::from_rows(vec![vec![0u64, 1], vec![1, 0]]);
        assert_eq!(rank_exact(&f2, &m), 2);
        let f3 = PrimeField::new(3).unwrap();
        let m3 = Mat::from_rows(vec![vec![2u64, 1], vec![1, 2]]);
        assert_eq!(rank_exact(&f3, &m3), 1);
    }

    #[test]
    fn nullspace_examples() {
        let (dim, basis) = nullspace(&Rationals, &qmat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(dim, 0);
        assert!(basis.is_empty());

        let m = qmat(vec![vec![1, 1]]);
        let (dim, basis) = nullspace(&Rationals, &m);
        assert_eq!(dim, 1);
        assert_eq!(basis[0], vec![Rationals.from_int(-1), Rationals.from_int(1)]);
        for v in &basis {
            assert!(mat_vec(&Rationals, &m, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn snf_examples() {
        let d = smith_normal_form(&Mat::from_i64_rows(vec![vec![2, 0], vec![0, 2]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2)]);
        let d = smith_normal_form(&Mat::from_i64_rows(vec![vec![2, 1], vec![1, 2]]));
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(3)]);
        let d = smith_normal_form(&Mat::from_i64_rows(vec![vec![0]]));
        assert_eq!(d, vec![BigInt::from(0)]);
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse("p:5").unwrap(), FieldSpec::Prime(5));
        assert!(FieldSpec::parse("p:4").is_err());
        assert!(FieldSpec::parse("banana").is_err());
        assert_eq!(FieldSpec::parse("p:5").unwrap().to_string(), "p:5");
        assert_eq!(FieldSpec::parse("p:2").unwrap().to_string(), "2");
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f5 = PrimeField::new(5).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        // 1/2 = 3 mod 5
        assert_eq!(f5.from_rational(&half), Some(3));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.from_rational(&half), None);
        assert_eq!(f2.from_rational(&BigRational::from_integer(BigInt::from(3))), Some(1));
    }

    fn check_against_minor_gcd(m: &Mat<BigInt>) {
        let diag = smith_normal_form(m);
        let mut prev = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            let g = minors_gcd(m, k + 1);
            // product d_1..d_k equals the gcd of all (k+1 minus 1)... of all k-minors
            let prod: BigInt = diag[..=k].iter().product();
            assert_eq!(prod, g, "minor gcd mismatch at {} for {:?}", k + 1, m);
            if !d.is_zero() && !prev.is_zero() {
                assert!((d % &prev).is_zero(), "divisibility chain broken");
            }
            prev = d.clone();
        }
    }

    proptest! {
        #[test]
        fn snf_matches_minor_gcd_oracle(
            rows in 1usize..=4,
            cols in 1usize..=4,
            entries in proptest::collection::vec(-6i64..=6, 16),
        ) {
            let m = Mat::from_i64_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| entries[i * 4 + j]).collect())
                    .collect(),
            );
            check_against_minor_gcd(&m);
        }

        #[test]
        fn rank_equals_nonzero_snf_entries(
            rows in 1usize..=4,
            cols in 1usize..=4,
            entries in proptest::collection::vec(-6i64..=6, 16),
        ) {
            let m = Mat::from_i64_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| entries[i * 4 + j]).collect())
                    .collect(),
            );
            let rank = rank_exact(&Rationals, &m.to_rational());
            let nonzero = smith_normal_form(&m)
                .iter()
                .filter(|d| !d.is_zero())
                .count();
            prop_assert_eq!(rank, nonzero);
        }

        #[test]
        fn nullspace_vectors_annihilate(
            rows in 1usize..=5,
            cols in 1usize..=5,
            entries in proptest::collection::vec(-4i64..=4, 25),
        ) {
            let m = Mat::from_i64_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| entries[i * 5 + j]).collect())
                    .collect(),
            ).to_rational();
            let (dim, basis) = nullspace(&Rationals, &m);
            prop_assert_eq!(dim, cols - rank_exact(&Rationals, &m));
            for v in &basis {
                prop_assert!(mat_vec(&Rationals, &m, v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
