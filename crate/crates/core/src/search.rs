//! Exhaustive searches over F_p on a compact `u32` representation.
//!
//! Everything here is a backtracking search that assigns one basis
//! coordinate (or one basis image) at a time and checks each constraint as soon
//! as all the indices it mentions are assigned.

use crate::algebra::Algebra;
use crate::linalg::{count_subspaces, enumerate_subspaces, Matrix, Subspace};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// Default search cap, overridable through `GEXT_DEFAULT_BUDGET`.
pub fn default_budget() -> u64 {
    std::env::var("GEXT_DEFAULT_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse::<f64>().ok())
        .map(|v| v as u64)
        .unwrap_or(100_000_000)
}

fn modulus(field: Field, what: &'static str) -> Result<u32> {
    field.modulus().ok_or(Error::FiniteFieldRequired(what))
}

fn residues(v: &[Scalar]) -> Vec<u32> {
    v.iter()
        .map(|s| s.residue().expect("prime-field scalar"))
        .collect()
}

fn to_scalars(p: u32, v: &[u32]) -> Vec<Scalar> {
    v.iter()
        .map(|&x| Scalar::Residue {
            value: x,
            modulus: p,
        })
        .collect()
}

/// Solutions `x ∈ F_p^n` of: `Σ_i coef_i x_i = x_j x_k` for each quadratic
/// constraint, and `Σ_i lin_i x_i = 1`.
struct QuadraticProblem {
    p: u32,
    n: usize,
    quad: Vec<(usize, usize, Vec<(usize, u32)>)>,
    lin: Vec<(usize, u32)>,
}

impl QuadraticProblem {
    fn solve(&self) -> Vec<Vec<u32>> {
        let level = |idx: &mut dyn Iterator<Item = usize>| idx.max().unwrap_or(0);
        let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (q, (j, k, coef)) in self.quad.iter().enumerate() {
            let l = level(&mut [*j, *k].into_iter().chain(coef.iter().map(|c| c.0)));
            by_level[l].push(q);
        }
        let lin_level = level(&mut self.lin.iter().map(|c| c.0));
        let mut out = Vec::new();
        let mut x = vec![0u32; self.n];
        self.dfs(0, &mut x, &by_level, lin_level, &mut out);
        out
    }

    fn dfs(
        &self,
        t: usize,
        x: &mut Vec<u32>,
        by_level: &[Vec<usize>],
        lin_level: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if t == self.n {
            out.push(x.clone());
            return;
        }
        let p = u64::from(self.p);
        for v in 0..self.p {
            x[t] = v;
            let ok_quad = by_level[t].iter().all(|&q| {
                let (j, k, coef) = &self.quad[q];
                let lhs = coef.iter().fold(0u64, |acc, &(i, c)| {
                    (acc + u64::from(c) * u64::from(x[i])) % p
                });
                lhs == u64::from(x[*j]) * u64::from(x[*k]) % p
            });
            let ok_lin = t != lin_level
                || self.lin.iter().fold(0u64, |acc, &(i, c)| {
                    (acc + u64::from(c) * u64::from(x[i])) % p
                }) == 1;
            if ok_quad && ok_lin {
                self.dfs(t + 1, x, by_level, lin_level, out);
            }
        }
        x[t] = 0;
    }
}

fn sparse(v: &[u32]) -> Vec<(usize, u32)> {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}

/// All characters of an algebra over F_p, lexicographically sorted.
pub fn characters(a: &Algebra) -> Vec<Vec<Scalar>> {
    let p = a.field.modulus().expect("characters search needs F_p");
    let n = a.dim;
    let mut quad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            quad.push((i, j, sparse(&residues(a.basis_product(i, j)))));
        }
    }
    let prob = QuadraticProblem {
        p,
        n,
        quad,
        lin: sparse(&residues(&a.unit)),
    };
    let mut sols: Vec<Vec<Scalar>> = prob.solve().iter().map(|s| to_scalars(p, s)).collect();
    sols.sort();
    sols
}

/// Group-like elements of a coalgebra given by `comult[(i*n + j)*n + k]`
/// (coefficient of `c_j ⊗ c_k` in `Δ(c_i)`) and counit.
pub fn grouplikes(
    field: Field,
    n: usize,
    comult: &[Scalar],
    counit: &[Scalar],
) -> Result<Vec<Vec<Scalar>>> {
    let p = modulus(field, "group-like search")?;
    let mut quad = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let coef: Vec<(usize, u32)> = (0..n)
                .filter_map(|i| {
                    let c = comult[(i * n + j) * n + k].residue().expect("F_p");
                    (c != 0).then_some((i, c))
                })
                .collect();
            quad.push((j, k, coef));
        }
    }
    let prob = QuadraticProblem {
        p,
        n,
        quad,
        lin: sparse(&residues(counit)),
    };
    let mut sols: Vec<Vec<Scalar>> = prob.solve().iter().map(|s| to_scalars(p, s)).collect();
    sols.sort();
    Ok(sols)
}

/// Structure constants in compact form, optionally with a bracket.
struct Table {
    p: u32,
    n: usize,
    mult: Vec<u32>,
    unit: Vec<u32>,
    bracket: Option<Vec<u32>>,
}

impl Table {
    fn new(a: &Algebra, bracket: Option<&[Scalar]>) -> Table {
        Table {
            p: a.field.modulus().expect("F_p"),
            n: a.dim,
            mult: residues(&a.mult),
            unit: residues(&a.unit),
            bracket: bracket.map(residues),
        }
    }

    fn bilinear(&self, t: &[u32], x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.n;
        let p = u64::from(self.p);
        let mut acc = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let w = u64::from(xi) * u64::from(yj) % p;
                let base = (i * n + j) * n;
                for k in 0..n {
                    let c = t[base + k];
                    if c != 0 {
                        acc[k] = (acc[k] + w * u64::from(c)) % p;
                    }
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }
}

/// Backtracking search for unital multiplicative (and bracket-preserving)
/// linear maps `src → dst`, optionally bijective.
struct MorphismSearch<'a> {
    src: &'a Table,
    dst: &'a Table,
    bijective: bool,
    candidates: Vec<Vec<u32>>,
    // constraint lists keyed by the last source index they mention
    pairs_at: Vec<Vec<(usize, usize)>>,
    unit_level: usize,
    nodes: u64,
    node_budget: u64,
    stop_after: Option<usize>,
    found: Vec<Vec<Vec<u32>>>,
}

impl<'a> MorphismSearch<'a> {
    fn new(
        src: &'a Table,
        dst: &'a Table,
        bijective: bool,
        node_budget: u64,
        stop_after: Option<usize>,
    ) -> Self {
        let (n, m, p) = (src.n, dst.n, dst.p);
        let total = (p as usize).pow(m as u32);
        let candidates = (0..total)
            .map(|mut c| {
                let mut v = vec![0u32; m];
                for slot in v.iter_mut().rev() {
                    *slot = (c % p as usize) as u32;
                    c /= p as usize;
                }
                v
            })
            .collect();
        let mut pairs_at = vec![Vec::new(); n.max(1)];
        for i in 0..n {
            for j in 0..n {
                let base = (i * n + j) * n;
                let mut l = i.max(j);
                for k in 0..n {
                    let nz = src.mult[base + k] != 0
                        || src.bracket.as_ref().is_some_and(|b| b[base + k] != 0);
                    if nz {
                        l = l.max(k);
                    }
                }
                pairs_at[l].push((i, j));
            }
        }
        let unit_level = (0..n).rev().find(|&i| src.unit[i] != 0).unwrap_or(0);
        MorphismSearch {
            src,
            dst,
            bijective,
            candidates,
            pairs_at,
            unit_level,
            nodes: 0,
            node_budget,
            stop_after,
            found: Vec::new(),
        }
    }

    fn image_of(&self, coeffs: &[u32], imgs: &[Vec<u32>]) -> Vec<u32> {
        let p = u64::from(self.dst.p);
        let mut out = vec![0u64; self.dst.n];
        for (k, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(&imgs[k]) {
                *o = (*o + u64::from(c) * u64::from(v)) % p;
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    }

    fn consistent(&self, t: usize, imgs: &[Vec<u32>]) -> bool {
        let n = self.src.n;
        if t == self.unit_level && self.image_of(&self.src.unit, imgs) != self.dst.unit {
            return false;
        }
        for &(i, j) in &self.pairs_at[t] {
            let base = (i * n + j) * n;
            let lhs = self.image_of(&self.src.mult[base..base + n], imgs);
            if lhs != self.dst.bilinear(&self.dst.mult, &imgs[i], &imgs[j]) {
                return false;
            }
            if let (Some(bs), Some(bd)) = (&self.src.bracket, &self.dst.bracket) {
                let lhs = self.image_of(&bs[base..base + n], imgs);
                if lhs != self.dst.bilinear(bd, &imgs[i], &imgs[j]) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) -> Result<()> {
        let mut imgs: Vec<Vec<u32>> = Vec::with_capacity(self.src.n);
        let mut echelon: Vec<(usize, Vec<u32>)> = Vec::new();
        self.dfs(&mut imgs, &mut echelon)
    }

    fn done(&self) -> bool {
        self.stop_after.is_some_and(|k| self.found.len() >= k)
    }

    fn dfs(
        &mut self,
        imgs: &mut Vec<Vec<u32>>,
        echelon: &mut Vec<(usize, Vec<u32>)>,
    ) -> Result<()> {
        let t = imgs.len();
        if t == self.src.n {
            self.found.push(imgs.clone());
            return Ok(());
        }
        for ci in 0..self.candidates.len() {
            self.nodes += 1;
            if self.nodes > self.node_budget {
                return Err(Error::BudgetExceeded {
                    what: "morphism search",
                    needed: format!("more than {} nodes", self.node_budget),
                    budget: self.node_budget,
                });
            }
            let cand = self.candidates[ci].clone();
            let mut pushed = false;
            if self.bijective {
                match reduce_against(self.dst.p, echelon, &cand) {
                    Some(row) => {
                        echelon.push(row);
                        pushed = true;
                    }
                    None => continue,
                }
            }
            imgs.push(cand);
            if self.consistent(t, imgs) {
                self.dfs(imgs, echelon)?;
            }
            imgs.pop();
            if pushed {
                echelon.pop();
            }
            if self.done() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Reduces `v` against an echelon set; returns the new echelon row (pivot,
/// normalized row) when `v` is independent.
fn reduce_against(p: u32, echelon: &[(usize, Vec<u32>)], v: &[u32]) -> Option<(usize, Vec<u32>)> {
    let p64 = u64::from(p);
    let mut w: Vec<u64> = v.iter().map(|&x| u64::from(x)).collect();
    for (piv, row) in echelon {
        let f = w[*piv];
        if f == 0 {
            continue;
        }
        for (x, &r) in w.iter_mut().zip(row) {
            *x = (*x + (p64 - f) * u64::from(r)) % p64;
        }
    }
    let piv = w.iter().position(|&x| x != 0)?;
    let inv = pow_mod(w[piv], p64 - 2, p64);
    Some((piv, w.iter().map(|&x| (x * inv % p64) as u32).collect()))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn images_to_matrix(p: u32, rows: usize, imgs: &[Vec<u32>]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = imgs.iter().map(|v| to_scalars(p, v)).collect();
    Matrix::from_columns(Field::Prime(p), rows, &cols)
}

/// `p^(n²)` as the worst-case size of the linear-map space, or `None` on overflow.
fn linear_maps(p: u32, n: usize) -> Option<u64> {
    u64::from(p).checked_pow((n * n) as u32)
}

/// The complete automorphism group by brute force, optionally also
/// preserving a bracket. Requires `p^(dim²) ≤ cap`.
pub fn automorphisms(a: &Algebra, bracket: Option<&[Scalar]>, cap: u64) -> Result<Vec<Matrix>> {
    let p = modulus(
        a.field,
        "brute-force automorphism search over Q is infinite",
    )?;
    let size = linear_maps(p, a.dim);
    if size.map_or(true, |s| s > cap) {
        return Err(Error::BudgetExceeded {
            what: "automorphism search (use --aut-mode catalog or file:PATH to supply generators)",
            needed: format!("{p}^{}", a.dim * a.dim),
            budget: cap,
        });
    }
    let t = Table::new(a, bracket);
    let mut s = MorphismSearch::new(&t, &t, true, u64::MAX, None);
    s.run()?;
    let mut out: Vec<Matrix> = s
        .found
        .iter()
        .map(|im| images_to_matrix(p, a.dim, im))
        .collect();
    out.sort_by_key(matrix_key);
    Ok(out)
}

/// Some isomorphism `a → b` (bracket-preserving when both brackets are given),
/// searching at most `node_budget` candidate images.
pub fn find_isomorphism(
    a: &Algebra,
    b: &Algebra,
    brackets: Option<(&[Scalar], &[Scalar])>,
    node_budget: u64,
) -> Result<Option<Matrix>> {
    let p = modulus(a.field, "isomorphism search")?;
    if a.field != b.field {
        return Err(Error::FieldMismatch(
            a.field.to_string(),
            b.field.to_string(),
        ));
    }
    if a.dim != b.dim {
        return Ok(None);
    }
    let ta = Table::new(a, brackets.map(|x| x.0));
    let tb = Table::new(b, brackets.map(|x| x.1));
    let mut s = MorphismSearch::new(&ta, &tb, true, node_budget, Some(1));
    s.run()?;
    Ok(s.found.first().map(|im| images_to_matrix(p, a.dim, im)))
}

/// Every unital algebra morphism `a → b` (not necessarily bijective).
pub fn morphisms(a: &Algebra, b: &Algebra, node_budget: u64) -> Result<Vec<Matrix>> {
    let p = modulus(a.field, "morphism search")?;
    let ta = Table::new(a, None);
    let tb = Table::new(b, None);
    let mut s = MorphismSearch::new(&ta, &tb, false, node_budget, None);
    s.run()?;
    Ok(s.found
        .iter()
        .map(|im| images_to_matrix(p, b.dim, im))
        .collect())
}

fn matrix_key(m: &Matrix) -> Vec<u32> {
    (0..m.rows())
        .flat_map(|i| {
            m.row(i)
                .iter()
                .map(|s| s.residue().unwrap_or(0))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Proper nonzero two-sided ideals of dimension `≤ max_dim`, in canonical
/// order (by dimension, then pivot set, then entries).
pub fn proper_ideals(a: &Algebra, max_dim: usize, budget: u64) -> Result<Vec<Subspace>> {
    let p = modulus(a.field, "ideal search")?;
    let top = max_dim.min(a.dim.saturating_sub(1));
    let total: u128 = (1..=top)
        .map(|k| count_subspaces(u64::from(p), a.dim, k))
        .sum();
    if total > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            what: "ideal search",
            needed: format!("{total} subspaces"),
            budget,
        });
    }
    let mut out = Vec::new();
    for k in 1..=top {
        for s in enumerate_subspaces(a.field, a.dim, k)? {
            if a.is_two_sided_ideal(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Cheap isomorphism invariants used to skip hopeless searches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub commutative: bool,
    pub characters: usize,
    pub center: usize,
    pub commutators: usize,
    pub squares: usize,
    pub ideals_by_dim: Vec<usize>,
}

pub fn fingerprint(a: &Algebra, budget: u64) -> Result<Fingerprint> {
    let ideals = proper_ideals(a, a.dim, budget)?;
    let mut by_dim = vec![0usize; a.dim];
    for i in &ideals {
        by_dim[i.dim()] += 1;
    }
    Ok(Fingerprint {
        dim: a.dim,
        commutative: a.is_commutative(),
        characters: characters(a).len(),
        center: a.center_dim(),
        commutators: a.commutator_span().dim(),
        squares: a.square_span().dim(),
        ideals_by_dim: by_dim,
    })
}
