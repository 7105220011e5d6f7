use serde::Serialize;

use crate::algebra::{characters, Algebra};
use crate::linalg::{coset_representatives, LinearSystem, Subspace};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

use super::datum::CoflagDatum;

/// `Z²`, `B²` and `H²` of one ordered character pair.
#[derive(Clone, Debug)]
pub struct H2Block {
    pub lambda: Vec<Scalar>,
    pub big_lambda: Vec<Scalar>,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Normal forms modulo `B²` of all classes (finite fields only).
    pub representatives: Option<Vec<Vec<Scalar>>>,
}

impl H2Block {
    pub fn dim_z(&self) -> usize {
        self.cocycles.dim()
    }

    pub fn dim_b(&self) -> usize {
        self.coboundaries.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.dim_z() - self.dim_b()
    }

    pub fn data(&self) -> Vec<CoflagDatum> {
        self.representatives
            .iter()
            .flatten()
            .map(|t| CoflagDatum::first(self.lambda.clone(), self.big_lambda.clone(), t.clone()))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Gh2Report {
    pub field: Field,
    pub blocks: Vec<H2Block>,
    /// `λ⁰` of the second-kind branch `{(λ⁰, u) | u ∈ k*}`.
    pub base_functional: Vec<Scalar>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Gh2Counts {
    pub first_kind: u64,
    pub second_kind: u64,
    pub total: u64,
}

impl Gh2Report {
    /// Class counts; `None` over `Q`.
    pub fn counts(&self) -> Option<Gh2Counts> {
        let p = u64::from(self.field.modulus()?);
        let first_kind: u64 = self.blocks.iter().map(|b| p.pow(b.dim_h() as u32)).sum();
        Some(Gh2Counts {
            first_kind,
            second_kind: p - 1,
            total: first_kind + p - 1,
        })
    }

    pub fn second_kind_data(&self) -> Vec<CoflagDatum> {
        self.field
            .units()
            .into_iter()
            .flatten()
            .map(|u| CoflagDatum::Second {
                lambda: self.base_functional.clone(),
                u,
            })
            .collect()
    }
}

/// Normalized `(λ, Λ)`-cocycles: kernel of the linear conditions
/// `ϑ(a,1) = ϑ(1,a) = 0` and `ϑ(a,bc) − ϑ(ab,c) − ϑ(a,b)Λ(c) + ϑ(b,c)λ(a) = 0`.
pub fn cocycle_space(a: &Algebra, lambda: &[Scalar], big_lambda: &[Scalar]) -> Subspace {
    let n = a.dim;
    let f = a.field;
    let mut sys = LinearSystem::new(f, n * n);
    for i in 0..n {
        let left: Vec<(usize, Scalar)> = (0..n).map(|j| (i * n + j, a.unit[j].clone())).collect();
        let right: Vec<(usize, Scalar)> = (0..n).map(|j| (j * n + i, a.unit[j].clone())).collect();
        sys.push(&left, f.zero());
        sys.push(&right, f.zero());
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut terms: Vec<(usize, Scalar)> = Vec::new();
                for (m, c) in a.basis_product(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((i * n + m, c.clone()));
                    }
                }
                for (m, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((m * n + k, -c));
                    }
                }
                terms.push((i * n + j, -&big_lambda[k]));
                terms.push((j * n + k, lambda[i].clone()));
                sys.push(&terms, f.zero());
            }
        }
    }
    Subspace::span(f, n * n, &sys.kernel())
}

/// `δt(a, b) = −t(ab) + λ(a)t(b) + Λ(b)t(a)` as a bilinear table.
pub fn coboundary(
    a: &Algebra,
    lambda: &[Scalar],
    big_lambda: &[Scalar],
    t: &[Scalar],
) -> Vec<Scalar> {
    let n = a.dim;
    let f = a.field;
    let mut out = f.zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            let tab = crate::scalar::dot(f, t, a.basis_product(i, j));
            out[i * n + j] = &(&(&lambda[i] * &t[j]) + &(&big_lambda[j] * &t[i])) - &tab;
        }
    }
    out
}

/// Coboundaries `δt` over `t` with `t(1) = 0`.
pub fn coboundary_space(a: &Algebra, lambda: &[Scalar], big_lambda: &[Scalar]) -> Subspace {
    let n = a.dim;
    let f = a.field;
    let mut sys = LinearSystem::new(f, n);
    sys.push_row(a.unit.clone(), f.zero());
    let images: Vec<Vec<Scalar>> = sys
        .kernel()
        .iter()
        .map(|t| coboundary(a, lambda, big_lambda, t))
        .collect();
    Subspace::span(f, n * n, &images)
}

pub fn h2_pair(a: &Algebra, lambda: &[Scalar], big_lambda: &[Scalar]) -> Result<H2Block> {
    a.character_report(lambda).into_result("λ")?;
    a.character_report(big_lambda).into_result("Λ")?;
    let z = cocycle_space(a, lambda, big_lambda);
    let b = coboundary_space(a, lambda, big_lambda);
    if !z.contains_subspace(&b) {
        return Err(Error::InvalidParams("coboundaries are not cocycles".into()));
    }
    let representatives = if a.field.is_finite() {
        let mut reps = coset_representatives(&z.basis, &b.basis, a.field, a.dim * a.dim)?;
        reps.sort_by_key(|v| v.iter().map(Scalar::signed_key).collect::<Vec<_>>());
        Some(reps)
    } else {
        None
    };
    Ok(H2Block {
        lambda: lambda.to_vec(),
        big_lambda: big_lambda.to_vec(),
        cocycles: z,
        coboundaries: b,
        representatives,
    })
}

/// One block per ordered pair of characters, plus the second-kind branch.
pub fn gh2_coflag(a: &Algebra) -> Result<Gh2Report> {
    a.validate().into_result("algebra")?;
    let chars = characters(a)?;
    let mut blocks = Vec::new();
    for l in &chars {
        for big in &chars {
            blocks.push(h2_pair(a, l, big)?);
        }
    }
    Ok(Gh2Report {
        field: a.field,
        blocks,
        base_functional: a.base_functional(),
    })
}
