//! Exact integer linear algebra.
//!
//! Everything here works over `ℤ` with arbitrary-precision entries: Smith
//! normal form with unimodular transforms, cokernels of integer maps,
//! cohomology of cochain complexes of free abelian groups, and the
//! universal-coefficient evaluation that turns integer cohomology into
//! cohomology with an arbitrary (possibly symbolic) coefficient group.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense integer matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from a list of equally long rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows do not all have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[&[T]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix from row-major data.
    ///
    /// # Panics
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        IntMatrix { rows, cols, data }
    }

    /// Builds a `rows × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column has the wrong length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { expected: (self.cols, rhs.cols), found: rhs.shape() });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch { expected: (self.cols, 1), found: (v.len(), 1) });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    /// Places `blocks` side by side. All blocks must have `rows` rows.
    pub fn hstack(rows: usize, blocks: &[&IntMatrix]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, offset + j)] = b[(i, j)].clone();
                }
            }
            offset += b.cols;
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Some(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let delta = factor * s;
                self.data[dst * self.cols + j] += delta;
            }
        }
    }

    /// `col[dst] += factor * col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let delta = factor * s;
                self.data[i * self.cols + dst] += delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -core::mem::take(x);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `U · A · V = S` with `U`, `V` unimodular and `S` diagonal with each
/// diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal `d_1, …, d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Elimination state. Transforms are only accumulated when asked for.
struct SmithReducer {
    s: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl SmithReducer {
    fn new(a: &IntMatrix, track: bool) -> Self {
        SmithReducer {
            s: a.clone(),
            u: track.then(|| IntMatrix::identity(a.rows)),
            v: track.then(|| IntMatrix::identity(a.cols)),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.s.add_row_multiple(dst, src, factor);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, factor);
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.s.add_col_multiple(dst, src, factor);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, factor);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Position of a nonzero entry of smallest absolute value in the lower
    /// right block starting at `(t, t)`.
    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows {
            for j in t..self.s.cols {
                let x = &self.s[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.magnitude() < self.s[b].magnitude(),
                };
                if better {
                    if x.is_one() || (-x).is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (m, n) = self.s.shape();
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.smallest_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let pivot = self.s[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m {
                    if self.s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &self.s[(i, t)] / &pivot;
                    if !q.is_zero() {
                        self.add_row_multiple(i, t, &-q);
                    }
                    clean &= self.s[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    if self.s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &self.s[(t, j)] / &pivot;
                    if !q.is_zero() {
                        self.add_col_multiple(j, t, &-q);
                    }
                    clean &= self.s[(t, j)].is_zero();
                }
                if !clean {
                    // Every leftover is a remainder, hence smaller than the pivot.
                    let mut best: Option<(usize, usize)> = None;
                    let candidates = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                    for pos in candidates {
                        let x = &self.s[pos];
                        if !x.is_zero() && best.is_none_or(|b| x.magnitude() < self.s[b].magnitude()) {
                            best = Some(pos);
                        }
                    }
                    let (bi, bj) = best.expect("unclean pivot row or column has a nonzero entry");
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.s[(i, j)].is_multiple_of(&pivot)));
                match offending {
                    Some(i) => self.add_row_multiple(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form with unimodular transforms, `U · A · V = S`.
///
/// Pivots are chosen by smallest absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut r = SmithReducer::new(a, true);
    r.run();
    SmithDecomposition { u: r.u.expect("tracked"), s: r.s, v: r.v.expect("tracked") }
}

/// The Smith diagonal without transforms: nonzero invariant factors, in order.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut r = SmithReducer::new(a, false);
    r.run();
    (0..a.rows.min(a.cols)).map(|i| r.s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// `coker(A) = ℤ^rows / A·ℤ^cols` in canonical form.
pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    let factors = invariant_factors(a);
    FinAbGroup {
        free_rank: a.rows - factors.len(),
        invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

fn check_composable(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<()> {
    if d_in.rows != d_out.cols {
        return Err(Error::ShapeMismatch { expected: (d_out.rows, d_in.rows), found: d_out.shape() });
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositionNonzero);
    }
    Ok(())
}

/// `ker(d_out) / im(d_in)` for `ℤ^a --d_in--> ℤ^b --d_out--> ℤ^c`.
///
/// The kernel of an integer map is saturated, so the torsion of the quotient
/// is the torsion of `coker(d_in)` and the free rank is
/// `b − rank(d_out) − rank(d_in)`.
pub fn complex_cohomology(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FinAbGroup> {
    check_composable(d_in, d_out)?;
    let in_factors = invariant_factors(d_in);
    let out_rank = rank(d_out);
    Ok(FinAbGroup {
        free_rank: d_in.rows - out_rank - in_factors.len(),
        invariant_factors: in_factors.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

/// Cohomology of `0 → ℤ^{dims[0]} → ℤ^{dims[1]} → … → 0` with
/// `diffs[j] : ℤ^{dims[j]} → ℤ^{dims[j+1]}`. One group per position.
pub fn cochain_cohomology(dims: &[usize], diffs: &[IntMatrix]) -> Result<Vec<FinAbGroup>> {
    if diffs.len() + 1 != dims.len() && !(dims.is_empty() && diffs.is_empty()) {
        return Err(Error::ShapeMismatch { expected: (dims.len().saturating_sub(1), 0), found: (diffs.len(), 0) });
    }
    for (j, d) in diffs.iter().enumerate() {
        if d.shape() != (dims[j + 1], dims[j]) {
            return Err(Error::ShapeMismatch { expected: (dims[j + 1], dims[j]), found: d.shape() });
        }
    }
    for pair in diffs.windows(2) {
        check_composable(&pair[0], &pair[1])?;
    }
    let factors: Vec<Vec<BigInt>> = diffs.iter().map(invariant_factors).collect();
    Ok((0..dims.len())
        .map(|j| {
            let out_rank = factors.get(j).map_or(0, Vec::len);
            let (in_rank, torsion) = match j.checked_sub(1) {
                Some(i) => (factors[i].len(), factors[i].iter().filter(|d| !d.is_one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            FinAbGroup { free_rank: dims[j] - out_rank - in_rank, invariant_factors: torsion }
        })
        .collect())
}

/// Repeated solving of `B · y = a` over the integers.
pub struct IntegerSolver {
    smith: SmithDecomposition,
    rank: usize,
}

impl IntegerSolver {
    pub fn new(b: &IntMatrix) -> Self {
        let smith = smith_normal_form(b);
        let rank = smith.rank();
        IntegerSolver { smith, rank }
    }

    /// An integer solution of `B · y = a`, or `None` when there is none.
    /// Free coordinates are set to zero.
    pub fn solve(&self, a: &[BigInt]) -> Option<Vec<BigInt>> {
        let ua = self.smith.u.mul_vec(a).ok()?;
        if ua[self.rank..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut z = vec![BigInt::zero(); self.smith.v.rows];
        for i in 0..self.rank {
            let (q, r) = ua[i].div_rem(&self.smith.s[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
        self.smith.v.mul_vec(&z).ok()
    }
}

/// A basis of the lattice spanned by the columns of `a`, as the columns of a
/// matrix with full column rank. Computed by unimodular column reduction to
/// echelon form.
pub fn column_basis(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let mut pivot = 0;
    for row in 0..m.rows {
        if pivot == m.cols {
            break;
        }
        loop {
            // Smallest nonzero entry of this row among the unreduced columns.
            let best = (pivot..m.cols)
                .filter(|&j| !m[(row, j)].is_zero())
                .min_by(|&x, &y| m[(row, x)].magnitude().cmp(m[(row, y)].magnitude()));
            let Some(j) = best else { break };
            m.swap_cols(pivot, j);
            let mut done = true;
            for k in pivot + 1..m.cols {
                if m[(row, k)].is_zero() {
                    continue;
                }
                let q = &m[(row, k)] / &m[(row, pivot)];
                m.add_col_multiple(k, pivot, &-q);
                done &= m[(row, k)].is_zero();
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    IntMatrix::from_fn(m.rows, pivot, |i, j| m[(i, j)].clone())
}

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_k` with
/// `2 ≤ d_1 | d_2 | … | d_k`. Equality is structural equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { free_rank: rank, invariant_factors: Vec::new() }
    }

    /// `ℤ^free_rank ⊕ ⊕ ℤ/n` for arbitrary orders `n`; an order of `0` is a
    /// copy of `ℤ`, an order of `±1` is dropped.
    pub fn new<I, T>(free_rank: usize, orders: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let orders: Vec<BigInt> = orders.into_iter().map(|o| o.into().abs()).collect();
        let extra_free = orders.iter().filter(|o| o.is_zero()).count();
        let finite: Vec<BigInt> = orders.into_iter().filter(|o| !o.is_zero() && !o.is_one()).collect();
        let factors =
            if finite.len() <= 1 {
                finite
            } else {
                let diag = IntMatrix::from_fn(finite.len(), finite.len(), |i, j| {
                    if i == j {
                        finite[i].clone()
                    } else {
                        BigInt::zero()
                    }
                });
                invariant_factors(&diag).into_iter().filter(|d| !d.is_one()).collect()
            };
        FinAbGroup { free_rank: free_rank + extra_free, invariant_factors: factors }
    }

    pub fn cyclic<T: Into<BigInt>>(order: T) -> Self {
        Self::new(0, [order])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        if other.invariant_factors.is_empty() {
            return FinAbGroup {
                free_rank: self.free_rank + other.free_rank,
                invariant_factors: self.invariant_factors.clone(),
            };
        }
        Self::new(
            self.free_rank + other.free_rank,
            self.invariant_factors.iter().chain(&other.invariant_factors).cloned(),
        )
    }
}

impl<'a> core::iter::Sum<&'a FinAbGroup> for FinAbGroup {
    fn sum<I: Iterator<Item = &'a FinAbGroup>>(iter: I) -> Self {
        let mut free = 0;
        let mut orders = Vec::new();
        for g in iter {
            free += g.free_rank;
            orders.extend(g.invariant_factors.iter().cloned());
        }
        FinAbGroup::new(free, orders)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::replace(&mut first, false) {
                f.write_str(" ⊕ ")?;
            }
            Ok(())
        };
        match self.free_rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        for d in &self.invariant_factors {
            sep(f)?;
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// A coefficient group at which a [`GroupExpr`] can be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    /// `ℤ/m`, `m ≥ 1`.
    Cyclic(BigInt),
}

/// `G^f ⊕ ⊕ G/dG ⊕ ⊕ G[b]` for an abstract abelian group `G` named `symbol`.
///
/// `G[b]` is the `b`-torsion subgroup. No simplification is attempted since
/// the structure of `G/dG` depends on `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    pub symbol: String,
    pub free_power: usize,
    pub cotorsion: Vec<BigInt>,
    pub torsion_sub: Vec<BigInt>,
}

impl GroupExpr {
    pub fn trivial(symbol: &str) -> Self {
        GroupExpr { symbol: symbol.into(), free_power: 0, cotorsion: Vec::new(), torsion_sub: Vec::new() }
    }

    /// Trivial for every choice of `G`.
    pub fn is_trivial(&self) -> bool {
        self.free_power == 0 && self.cotorsion.is_empty() && self.torsion_sub.is_empty()
    }

    pub fn evaluate(&self, at: &Coefficients) -> FinAbGroup {
        match at {
            Coefficients::Integers => FinAbGroup::new(self.free_power, self.cotorsion.iter().cloned()),
            Coefficients::Cyclic(m) => {
                let m = m.abs();
                let orders = core::iter::repeat_n(m.clone(), self.free_power)
                    .chain(self.cotorsion.iter().map(|d| d.gcd(&m)))
                    .chain(self.torsion_sub.iter().map(|b| b.gcd(&m)));
                FinAbGroup::new(0, orders)
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let g = &self.symbol;
        let mut parts: Vec<String> = Vec::new();
        match self.free_power {
            0 => {}
            1 => parts.push(g.clone()),
            k => parts.push(alloc::format!("({g})^{k}")),
        }
        parts.extend(self.cotorsion.iter().map(|d| alloc::format!("{g}/{d}{g}")));
        parts.extend(self.torsion_sub.iter().map(|b| alloc::format!("{g}[{b}]")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// `H^j(C; G)` from `H^j(C; ℤ)` and `H^{j+1}(C; ℤ)` for a cochain complex of
/// free abelian groups: `H^j ⊗ G ⊕ Tor(H^{j+1}, G)`.
pub fn coefficient_cohomology(h_here: &FinAbGroup, h_next: &FinAbGroup, symbol: &str) -> GroupExpr {
    GroupExpr {
        symbol: symbol.into(),
        free_power: h_here.free_rank,
        cotorsion: h_here.invariant_factors.clone(),
        torsion_sub: h_next.invariant_factors.clone(),
    }
}
