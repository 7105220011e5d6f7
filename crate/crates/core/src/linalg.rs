//! Dense exact matrices and the Gaussian-elimination kernel.

use std::fmt;

use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// Row-major dense matrix over a single [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, &r).expect("rectangular literal")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| crate::scalar::dot(self.field, self.row(i), v))
            .collect()
    }

    /// Row vector times matrix, `v^T M`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector-matrix shape mismatch");
        let mut out = self.field.zeros(self.cols);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if !m.is_zero() {
                    *o += &(vi * m);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.data[i * other.cols + j] + &(a * b);
                        out.data[i * other.cols + j] = cur;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if !pj.is_zero() {
                        let v = m.get(i, j) - &(&f * pj);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank and a canonical kernel basis: one vector per free column, with a 1 in
/// that column and 0 in every other free column.
pub fn rank_kernel(m: &Matrix) -> (usize, Vec<Vec<Scalar>>) {
    let (r, pivots) = m.rref();
    (pivots.len(), kernel_from_rref(&r, &pivots))
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let field = r.field();
    let free: Vec<usize> = (0..r.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = field.zeros(r.cols());
            v[fc] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, fc);
            }
            v
        })
        .collect()
}

/// Solves `M x = b`. Free variables are set to 0 in the particular solution.
pub fn solve_affine(m: &Matrix, b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    assert_eq!(b.len(), m.rows(), "right-hand side length");
    let field = m.field();
    let mut aug = Matrix::zeros(field, m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = field.zeros(m.cols());
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, m.cols()).clone();
    }
    let mut coeff = Matrix::zeros(field, r.rows(), m.cols());
    for i in 0..r.rows() {
        for j in 0..m.cols() {
            coeff.set(i, j, r.get(i, j).clone());
        }
    }
    Some((x, kernel_from_rref(&coeff, &pivots)))
}

/// A subspace held as the nonzero rows of an RREF matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub field: Field,
    pub ambient: usize,
    pub basis: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace {
                field,
                ambient,
                basis: vec![],
                pivots: vec![],
            };
        }
        let m = Matrix::from_rows(field, vectors).expect("equal-length vectors");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn full(field: Field, n: usize) -> Subspace {
        let vs: Vec<Vec<Scalar>> = (0..n).map(|i| field.unit_vector(n, i)).collect();
        Subspace::span(field, n, &vs)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Normal form of `v` modulo this subspace: pivot coordinates cleared.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let f = out[pc].clone();
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o -= &(&f * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        crate::scalar::is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` (assumed in the span) with respect to `basis`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }
}

/// Representatives of every coset of `sub` inside `ambient`, as normal forms
/// modulo `sub`. Exactly `p^(dim ambient - dim sub)` vectors.
pub fn coset_representatives(
    ambient: &[Vec<Scalar>],
    sub: &[Vec<Scalar>],
    field: Field,
    len: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let elements = field.elements().ok_or(Error::FiniteFieldRequired(
        "coset enumeration over Q is infinite",
    ))?;
    let amb = Subspace::span(field, len, ambient);
    let s = Subspace::span(field, len, sub);
    if !amb.contains_subspace(&s) {
        return Err(Error::InvalidParams(
            "subspace is not contained in the ambient space".into(),
        ));
    }
    // complement basis: ambient vectors reduced mod sub, re-echelonized
    let reduced: Vec<Vec<Scalar>> = amb.basis.iter().map(|v| s.reduce(v)).collect();
    let comp = Subspace::span(field, len, &reduced);
    let k = comp.dim();
    let p = elements.len();
    let total = p
        .checked_pow(k as u32)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "coset enumeration",
            needed: format!("{p}^{k}"),
            budget: u64::MAX,
        })?;
    let mut reps = Vec::with_capacity(total);
    let mut digits = vec![0usize; k];
    for _ in 0..total {
        let mut v = field.zeros(len);
        for (d, b) in digits.iter().zip(&comp.basis) {
            if *d != 0 {
                for (o, x) in v.iter_mut().zip(b) {
                    *o += &(&elements[*d] * x);
                }
            }
        }
        reps.push(s.reduce(&v));
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    Ok(reps)
}

/// Accumulates sparse linear equations `Σ c_j x_j = rhs`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub field: Field,
    pub vars: usize,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
}

impl LinearSystem {
    pub fn new(field: Field, vars: usize) -> Self {
        LinearSystem {
            field,
            vars,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Adds an equation; zero equations with zero right side are dropped.
    pub fn push(&mut self, terms: &[(usize, Scalar)], rhs: Scalar) {
        let mut row = self.field.zeros(self.vars);
        for (j, c) in terms {
            row[*j] += c;
        }
        if rhs.is_zero() && crate::scalar::is_zero_vec(&row) {
            return;
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn push_row(&mut self, row: Vec<Scalar>, rhs: Scalar) {
        debug_assert_eq!(row.len(), self.vars);
        if rhs.is_zero() && crate::scalar::is_zero_vec(&row) {
            return;
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            return Matrix::zeros(self.field, 0, self.vars);
        }
        Matrix::from_rows(self.field, &self.rows).expect("fixed width rows")
    }

    pub fn solve(&self) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
        if self.rows.is_empty() {
            let kernel = (0..self.vars)
                .map(|i| self.field.unit_vector(self.vars, i))
                .collect();
            return Some((self.field.zeros(self.vars), kernel));
        }
        solve_affine(&self.matrix(), &self.rhs)
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        if self.rows.is_empty() {
            return (0..self.vars)
                .map(|i| self.field.unit_vector(self.vars, i))
                .collect();
        }
        rank_kernel(&self.matrix()).1
    }
}

/// Every `k`-dimensional subspace of `F_p^n`, as RREF bases, in canonical
/// order (pivot sets lexicographically, then free entries in residue order).
pub fn enumerate_subspaces(field: Field, n: usize, k: usize) -> Result<Vec<Subspace>> {
    let p = field
        .modulus()
        .ok_or(Error::FiniteFieldRequired("subspace enumeration"))? as usize;
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| {
        // free positions: (row r, col c) with c > piv[r] and c not a pivot
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                ((pc + 1)..n)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let count = p.pow(free.len() as u32);
        let mut digits = vec![0usize; free.len()];
        for _ in 0..count {
            let mut basis = vec![field.zeros(n); k];
            for (r, &pc) in piv.iter().enumerate() {
                basis[r][pc] = field.one();
            }
            for (d, &(r, c)) in digits.iter().zip(&free) {
                basis[r][c] = field.from_i64(*d as i64);
            }
            out.push(Subspace {
                field,
                ambient: n,
                basis,
                pivots: piv.to_vec(),
            });
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }
    });
    Ok(out)
}

/// Number of `k`-dimensional subspaces of `F_p^n` (Gaussian binomial).
pub fn count_subspaces(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= u128::from(p).pow((n - i) as u32) - 1;
        den *= u128::from(p).pow((i + 1) as u32) - 1;
    }
    num / den
}

fn pivot_sets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        pivot_sets(n, k, c + 1, cur, f);
        cur.pop();
    }
}
