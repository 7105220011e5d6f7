//! Poisson algebras: an associative algebra with a Lie bracket satisfying the
//! Leibniz rule `[pq, r] = [p, r]q + p[q, r]`.

use crate::algebra::Algebra;
use crate::linalg::Subspace;
use crate::report::ValidationReport;
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// `[e_i, e_j] = Σ bracket[(i*n + j)*n + k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAlgebra {
    pub algebra: Algebra,
    pub bracket: Vec<Scalar>,
}

impl PoissonAlgebra {
    pub fn unchecked(algebra: Algebra, bracket: Vec<Scalar>) -> Result<Self> {
        let n = algebra.dim;
        if bracket.len() != n * n * n {
            return Err(Error::Dimension(format!(
                "bracket has {} entries, expected {}",
                bracket.len(),
                n * n * n
            )));
        }
        Ok(PoissonAlgebra { algebra, bracket })
    }

    pub fn new(algebra: Algebra, bracket: Vec<Scalar>) -> Result<Self> {
        let p = Self::unchecked(algebra, bracket)?;
        p.validate().into_result("Poisson algebra")?;
        Ok(p)
    }

    /// `[a, b]_u = u(ab − ba)`.
    pub fn commutator(a: &Algebra, u: &Scalar) -> Result<Self> {
        a.validate().into_result("algebra")?;
        let n = a.dim;
        let mut bracket = a.field.zeros(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    bracket[(i * n + j) * n + k] = u * &(a.c(i, j, k) - a.c(j, i, k));
                }
            }
        }
        Ok(PoissonAlgebra {
            algebra: a.clone(),
            bracket,
        })
    }

    pub fn abelian(a: &Algebra) -> Result<Self> {
        Self::commutator(a, &a.field.zero())
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.bracket[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field().zeros(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let w = a * b;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&w * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(Scalar::is_zero)
    }

    /// Rules `assoc` (algebra axioms), `antisym`, `Jacobi`, `Leibniz`.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new();
        for v in self.algebra.validate().violations {
            rep.push("assoc", &v.witness, format!("{}: {}", v.rule, v.detail));
        }
        let n = self.dim();
        let a = &self.algebra;
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vector(i)).collect();
        for i in 0..n {
            if self.basis_bracket(i, i).iter().any(|c| !c.is_zero()) {
                rep.push("antisym", &[i, i], "[p, p] != 0");
            }
            for j in 0..n {
                let sum: Vec<Scalar> = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(x, y)| x + y)
                    .collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    rep.push("antisym", &[i, j], "[p, q] != −[q, p]");
                }
                for k in 0..n {
                    let jac = [
                        self.bracket_of(&e[i], self.basis_bracket(j, k)),
                        self.bracket_of(&e[j], self.basis_bracket(k, i)),
                        self.bracket_of(&e[k], self.basis_bracket(i, j)),
                    ];
                    if (0..n).any(|t| !(&(&jac[0][t] + &jac[1][t]) + &jac[2][t]).is_zero()) {
                        rep.push("Jacobi", &[i, j, k], "cyclic sum of [p, [q, r]] != 0");
                    }
                    let lhs = self.bracket_of(a.basis_product(i, j), &e[k]);
                    let r1 = a.product(self.basis_bracket(i, k), &e[j]);
                    let r2 = a.product(&e[i], self.basis_bracket(j, k));
                    if (0..n).any(|t| lhs[t] != &r1[t] + &r2[t]) {
                        rep.push("Leibniz", &[i, j, k], "[pq, r] != [p, r]q + p[q, r]");
                    }
                }
            }
        }
        rep
    }

    /// Span of all `[p, q]`.
    pub fn bracket_span(&self) -> Subspace {
        let n = self.dim();
        let vecs: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j).to_vec())
            .collect();
        Subspace::span(self.field(), n, &vecs)
    }

    pub fn is_perfect(&self) -> bool {
        self.bracket_span().dim() == self.dim()
    }

    /// `P × k` with `{(p, x), (q, y)} = ([p, q], 0)`.
    pub fn direct_product_k(&self) -> Result<PoissonAlgebra> {
        let k = crate::catalog::field_algebra(self.field());
        let alg = self.algebra.direct_product(&k)?;
        let n = self.dim();
        let m = n + 1;
        let mut bracket = self.field().zeros(m * m * m);
        for i in 0..n {
            for j in 0..n {
                for t in 0..n {
                    bracket[(i * m + j) * m + t] = self.bracket[(i * n + j) * n + t].clone();
                }
            }
        }
        PoissonAlgebra::new(alg, bracket)
    }

    /// `m` preserves products, unit and bracket.
    pub fn is_poisson_morphism(&self, target: &PoissonAlgebra, m: &crate::linalg::Matrix) -> bool {
        if !self.algebra.is_morphism(&target.algebra, m) {
            return false;
        }
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                m.mul_vec(self.basis_bracket(i, j)) == target.bracket_of(&m.column(i), &m.column(j))
            })
        })
    }

    pub fn is_poisson_isomorphism(
        &self,
        target: &PoissonAlgebra,
        m: &crate::linalg::Matrix,
    ) -> bool {
        m.rows() == m.cols() && m.rank() == m.rows() && self.is_poisson_morphism(target, m)
    }
}

mod extension;

pub use extension::{
    build_poisson_extension, classify_poisson_ext, extract_poisson_datum, find_poisson_iso,
    poisson_aut_group, poisson_autos, poisson_data, poisson_trivializer_second_kind,
    validate_poisson_coflag, PoissonClass, PoissonClassification, PoissonCoflagDatum,
    PoissonExtension, SecondKindTrivializer,
};
