//! Finite-dimensional coalgebras, duality with algebras, group-likes and
//! supersolvable chains of subcoalgebras.

use std::collections::HashSet;

use crate::algebra::Algebra;
use crate::linalg::{Matrix, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// `Δ(c_i) = Σ comult[(i*n + j)*n + k] c_j ⊗ c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub comult: Vec<Scalar>,
    pub counit: Vec<Scalar>,
}

/// `C₁ ⊂ C₂ ⊂ ⋯ ⊂ C_n = C`, each given by an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcoalgebraChain {
    pub steps: Vec<Subspace>,
}

fn flip_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(s) => s.to_string(),
        None => format!("{l}*"),
    }
}

impl Coalgebra {
    pub fn unchecked(
        field: Field,
        basis: Vec<String>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let n = basis.len();
        if comult.len() != n * n * n || counit.len() != n {
            return Err(Error::Dimension(format!(
                "coalgebra of dimension {n} needs {} comult and {n} counit entries",
                n * n * n
            )));
        }
        if comult.iter().chain(&counit).any(|s| s.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                "coalgebra entries".into(),
            ));
        }
        Ok(Coalgebra {
            field,
            dim: n,
            basis,
            comult,
            counit,
        })
    }

    pub fn new(
        field: Field,
        basis: Vec<String>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let c = Self::unchecked(field, basis, comult, counit)?;
        c.validate().into_result("coalgebra")?;
        Ok(c)
    }

    pub fn d(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    /// `Δ(v)` as an `n × n` coefficient matrix.
    pub fn delta(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let d = self.d(i, j, k);
                    if !d.is_zero() {
                        let cur = m.get(j, k) + &(c * d);
                        m.set(j, k, cur);
                    }
                }
            }
        }
        m
    }

    /// Coassociativity (witness `[i, j, k, l]`) and both counit laws.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let f = self.field;
        let mut rep = ValidationReport::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        // (Δ⊗Id)Δ: Σ_m d[i][m][l] d[m][j][k]; (Id⊗Δ)Δ: Σ_m d[i][j][m] d[m][k][l]
                        let mut lhs = f.zero();
                        let mut rhs = f.zero();
                        for m in 0..n {
                            lhs += &(self.d(i, m, l) * self.d(m, j, k));
                            rhs += &(self.d(i, j, m) * self.d(m, k, l));
                        }
                        if lhs != rhs {
                            rep.push(
                                "coassociativity",
                                &[i, j, k, l],
                                format!("at {}", self.basis[i]),
                            );
                        }
                    }
                }
            }
            for j in 0..n {
                let mut left = f.zero();
                let mut right = f.zero();
                for m in 0..n {
                    left += &(&self.counit[m] * self.d(i, m, j));
                    right += &(self.d(i, j, m) * &self.counit[m]);
                }
                let want = if i == j { f.one() } else { f.zero() };
                if left != want {
                    rep.push(
                        "counit-left",
                        &[i, j],
                        format!("(ε⊗Id)Δ({}) is wrong", self.basis[i]),
                    );
                }
                if right != want {
                    rep.push(
                        "counit-right",
                        &[i, j],
                        format!("(Id⊗ε)Δ({}) is wrong", self.basis[i]),
                    );
                }
            }
        }
        rep
    }

    pub fn is_grouplike(&self, g: &[Scalar]) -> bool {
        let n = self.dim;
        let dg = self.delta(g);
        (0..n).all(|j| (0..n).all(|k| *dg.get(j, k) == &g[j] * &g[k]))
            && crate::scalar::dot(self.field, &self.counit, g).is_one()
    }

    /// `Δ(S) ⊆ S ⊗ S`: every row and column of each `Δ(b)` lies in `S`.
    pub fn is_subcoalgebra(&self, s: &Subspace) -> bool {
        s.basis.iter().all(|b| {
            let m = self.delta(b);
            (0..self.dim).all(|i| s.contains(m.row(i)) && s.contains(&m.column(i)))
        })
    }
}

/// `Δ(e_i*) = Σ e_i*(e_j e_l) e_j* ⊗ e_l*`, `ε(e_i*) = e_i*(1_A)`.
pub fn dualize_algebra(a: &Algebra) -> Result<Coalgebra> {
    a.validate().into_result("algebra")?;
    let n = a.dim;
    let mut comult = a.field.zeros(n * n * n);
    for j in 0..n {
        for l in 0..n {
            for i in 0..n {
                comult[(i * n + j) * n + l] = a.c(j, l, i).clone();
            }
        }
    }
    let basis = a.basis.iter().map(|l| flip_label(l)).collect();
    Coalgebra::new(a.field, basis, comult, a.unit.clone())
}

/// `C*` with `(f * g)(c) = f(c₍₁₎) g(c₍₂₎)` and unit `ε`, on the dual basis.
pub fn convolution_algebra(c: &Coalgebra) -> Result<Algebra> {
    c.validate().into_result("coalgebra")?;
    let n = c.dim;
    let mut mult = c.field.zeros(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult[(j * n + l) * n + i] = c.d(i, j, l).clone();
            }
        }
    }
    let basis = c.basis.iter().map(|l| flip_label(l)).collect();
    Algebra::new(c.field, basis, c.counit.clone(), mult)
}

/// The dual of `k⟨x,y | x²=1, y²=0, xy=−yx=y⟩`, on `f1, f2, f3`.
pub fn a21_dual(field: Field) -> Result<Coalgebra> {
    let mut c = dualize_algebra(&crate::catalog::coflag3(3, field)?)?;
    c.basis = vec!["f1".into(), "f2".into(), "f3".into()];
    Ok(c)
}

pub fn grouplikes(c: &Coalgebra) -> Result<Vec<Vec<Scalar>>> {
    crate::search::grouplikes(c.field, c.dim, &c.comult, &c.counit)
}

/// Nonzero normal forms modulo `s` whose leading coordinate is 1, in
/// signed-residue order.
fn projective_directions(s: &Subspace) -> Result<Vec<Vec<Scalar>>> {
    let f = s.field;
    let elements = f
        .elements()
        .ok_or(Error::FiniteFieldRequired("supersolvable chain"))?;
    let free: Vec<usize> = (0..s.ambient).filter(|i| !s.pivots.contains(i)).collect();
    let mut out = Vec::new();
    for (lead_pos, &lead) in free.iter().enumerate() {
        let rest = &free[lead_pos + 1..];
        let count = elements.len().pow(rest.len() as u32);
        for idx in 0..count {
            let mut v = f.zeros(s.ambient);
            v[lead] = f.one();
            let mut k = idx;
            for &r in rest {
                v[r] = elements[k % elements.len()].clone();
                k /= elements.len();
            }
            out.push(v);
        }
    }
    out.sort_by_key(|v| v.iter().map(Scalar::signed_key).collect::<Vec<_>>());
    Ok(out)
}

fn key(s: &Subspace) -> Vec<Vec<Scalar>> {
    s.basis.clone()
}

fn extend(
    c: &Coalgebra,
    cur: &mut Vec<Subspace>,
    dead: &mut HashSet<Vec<Vec<Scalar>>>,
) -> Result<bool> {
    let top = cur.last().expect("chain starts at C₁").clone();
    if top.dim() == c.dim {
        return Ok(true);
    }
    if dead.contains(&key(&top)) {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    for v in projective_directions(&top)? {
        let mut vecs = top.basis.clone();
        vecs.push(v);
        let next = Subspace::span(c.field, c.dim, &vecs);
        if !seen.insert(key(&next)) || !c.is_subcoalgebra(&next) {
            continue;
        }
        cur.push(next);
        if extend(c, cur, dead)? {
            return Ok(true);
        }
        cur.pop();
    }
    dead.insert(key(&top));
    Ok(false)
}

/// A full chain of subcoalgebras with `C₁` spanned by a group-like, if any.
/// Group-likes and extension directions are tried in signed-residue order, so
/// the answer is deterministic.
pub fn supersolvable_chain(c: &Coalgebra) -> Result<Option<SubcoalgebraChain>> {
    let p = c
        .field
        .modulus()
        .ok_or(Error::FiniteFieldRequired("supersolvable chain"))?;
    let budget = crate::search::default_budget();
    let needed = u64::from(p).checked_pow(c.dim as u32);
    if needed.map_or(true, |x| x > budget) {
        return Err(Error::BudgetExceeded {
            what: "subcoalgebra search",
            needed: format!("{p}^{}", c.dim),
            budget,
        });
    }
    let mut gs = grouplikes(c)?;
    gs.sort_by_key(|v| v.iter().map(Scalar::signed_key).collect::<Vec<_>>());
    let mut dead = HashSet::new();
    for g in gs {
        let mut cur = vec![Subspace::span(c.field, c.dim, &[g])];
        if extend(c, &mut cur, &mut dead)? {
            return Ok(Some(SubcoalgebraChain { steps: cur }));
        }
    }
    Ok(None)
}

impl SubcoalgebraChain {
    pub fn check(&self, c: &Coalgebra) -> bool {
        self.steps
            .iter()
            .enumerate()
            .all(|(i, s)| s.dim() == i + 1 && c.is_subcoalgebra(s))
            && self.steps.windows(2).all(|w| w[1].contains_subspace(&w[0]))
            && self.steps.len() == c.dim
            && self.steps.first().is_some_and(|s| {
                c.is_grouplike(&s.basis[0]) || {
                    // C₁ = k g for a group-like g: rescale the echelon vector
                    grouplikes(c)
                        .map(|gs| gs.iter().any(|g| s.contains(g)))
                        .unwrap_or(false)
                }
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f5() -> Field {
        Field::Prime(5)
    }

    #[test]
    fn a21_dual_matches_printed_comultiplication() {
        let q = Field::Rationals;
        let c = a21_dual(q).unwrap();
        assert!(c.validate().is_valid());
        let v = |x: &[i64]| x.iter().map(|&t| q.from_i64(t)).collect::<Vec<_>>();
        // Δ(f1) = f1⊗f1 + f2⊗f2
        assert_eq!(
            c.delta(&v(&[1, 0, 0])),
            Matrix::from_i64(q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])
        );
        // Δ(f2) = f1⊗f2 + f2⊗f1
        assert_eq!(
            c.delta(&v(&[0, 1, 0])),
            Matrix::from_i64(q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])
        );
        // Δ(f3) = f1⊗f3 + f3⊗f1 + f2⊗f3 − f3⊗f2
        assert_eq!(
            c.delta(&v(&[0, 0, 1])),
            Matrix::from_i64(q, &[&[0, 0, 1], &[0, 0, 1], &[1, -1, 0]])
        );
        assert_eq!(c.counit, v(&[1, 0, 0]));
    }

    #[test]
    fn perturbed_comult_is_rejected() {
        let mut c = a21_dual(f5()).unwrap();
        c.comult[(2 * 3 + 2) * 3 + 2] = f5().one();
        assert!(c.validate().mentions("coassociativity"));
    }

    #[test]
    fn double_dual_is_identity_on_structure() {
        for field in [Field::Rationals, f5()] {
            for a in [
                catalog::field_algebra(field),
                catalog::matrix(2, field).unwrap(),
                catalog::upper_triangular(2, field).unwrap(),
                catalog::dual_numbers(field),
                catalog::coflag3(3, field).unwrap(),
            ] {
                let back = convolution_algebra(&dualize_algebra(&a).unwrap()).unwrap();
                assert!(back.same_structure(&a));
                assert_eq!(back.basis, a.basis);
            }
        }
    }

    #[test]
    fn grouplikes_of_small_examples() {
        let c2 = dualize_algebra(&catalog::cyclic_group(2, f5()).unwrap()).unwrap();
        assert_eq!(grouplikes(&c2).unwrap().len(), 2);
        let k = dualize_algebra(&catalog::field_algebra(f5())).unwrap();
        assert_eq!(grouplikes(&k).unwrap(), vec![vec![f5().one()]]);
        let a = a21_dual(f5()).unwrap();
        let gs = grouplikes(&a).unwrap();
        let v = |x: &[i64]| x.iter().map(|&t| f5().from_i64(t)).collect::<Vec<_>>();
        assert!(gs.contains(&v(&[1, 1, 0])) && gs.contains(&v(&[1, -1, 0])));
        assert!(grouplikes(&a21_dual(Field::Rationals).unwrap()).is_err());
    }

    #[test]
    fn chain_of_a21_dual() {
        let c = a21_dual(f5()).unwrap();
        let chain = supersolvable_chain(&c).unwrap().unwrap();
        assert!(chain.check(&c));
        let v = |x: &[i64]| x.iter().map(|&t| f5().from_i64(t)).collect::<Vec<_>>();
        assert!(chain.steps[0].contains(&v(&[1, -1, 0])));
        assert_eq!(
            chain.steps[1],
            Subspace::span(f5(), 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])])
        );
    }

    #[test]
    fn matrix_dual_is_not_supersolvable() {
        let c = dualize_algebra(&catalog::matrix(2, f5()).unwrap()).unwrap();
        assert!(c.validate().is_valid());
        assert!(supersolvable_chain(&c).unwrap().is_none());
    }

    #[test]
    fn one_dimensional_chain() {
        let c = dualize_algebra(&catalog::field_algebra(f5())).unwrap();
        assert_eq!(supersolvable_chain(&c).unwrap().unwrap().steps.len(), 1);
    }
}
