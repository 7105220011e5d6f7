use crate::algebra::Algebra;
use crate::linalg::{rank_kernel, Matrix};
use crate::scalar::Field;
use crate::search::{automorphisms, find_isomorphism, fingerprint, Fingerprint};
use crate::{Error, Result};

use super::datum::{build_coflag_algebra, CoflagDatum};
use super::iso::hoc;

/// `A = A_0 ← A_1 ← ⋯ ← A_m`, each step a one-dimensional extension.
#[derive(Clone, Debug)]
pub struct CoflagTower {
    pub algebras: Vec<Algebra>,
    /// `projections[i] : algebras[i + 1] → algebras[i]`.
    pub projections: Vec<Matrix>,
}

impl CoflagTower {
    pub fn top(&self) -> &Algebra {
        self.algebras.last().expect("at least the base")
    }
}

/// Applies `data` one after another, checking each datum over the algebra
/// built so far.
pub fn coflag_tower(a: &Algebra, data: &[CoflagDatum]) -> Result<CoflagTower> {
    let mut algebras = vec![a.clone()];
    let mut projections = Vec::new();
    for (i, d) in data.iter().enumerate() {
        let cur = algebras.last().expect("nonempty");
        let ext = build_coflag_algebra(cur, d)
            .map_err(|e| Error::InvalidParams(format!("step {}: {e}", i + 1)))?;
        let (rank, kernel) = rank_kernel(&ext.projection);
        if rank != cur.dim || kernel.len() != 1 || !ext.total.is_morphism(cur, &ext.projection) {
            return Err(Error::NotAMorphism(format!(
                "step {}: projection check failed",
                i + 1
            )));
        }
        let mut total = ext.total;
        let last = total.dim - 1;
        total.basis[last] = format!("f{}", i + 1);
        projections.push(ext.projection);
        algebras.push(total);
    }
    Ok(CoflagTower {
        algebras,
        projections,
    })
}

/// One isomorphism class of co-flag algebras with how it was reached from `k`:
/// each step is a first-kind datum or `None` for `− × k`.
#[derive(Clone, Debug)]
pub struct Classified {
    pub algebra: Algebra,
    pub provenance: Vec<Option<CoflagDatum>>,
    pub fingerprint: Fingerprint,
}

/// Co-flag algebras of dimension `n` over F_p up to isomorphism, built level by
/// level from `k` through `HOC` and merged across parents by isomorphism search.
pub fn classify_coflag(n: usize, field: Field, budget: u64) -> Result<Vec<Classified>> {
    let p = field
        .modulus()
        .ok_or(Error::FiniteFieldRequired("co-flag classification"))?;
    if n == 0 {
        return Err(Error::InvalidParams("dimension must be at least 1".into()));
    }
    if p == 2 && n >= 3 {
        return Err(Error::InvalidParams(
            "classification in characteristic 2 is not supported for n ≥ 3".into(),
        ));
    }
    let k = crate::catalog::field_algebra(field);
    let mut level = vec![Classified {
        fingerprint: fingerprint(&k, budget)?,
        algebra: k,
        provenance: vec![],
    }];
    for m in 2..=n {
        let mut next: Vec<Classified> = Vec::new();
        for parent in &level {
            let autos = automorphisms(&parent.algebra, None, budget)?;
            for class in hoc(&parent.algebra, &autos)?.classes {
                let mut algebra = class.algebra;
                algebra.basis[m - 1] = format!("f{}", m - 1);
                let mut provenance = parent.provenance.clone();
                provenance.push(class.datum);
                let fp = fingerprint(&algebra, budget)?;
                let mut duplicate = false;
                for known in next.iter().filter(|c| c.fingerprint == fp) {
                    if find_isomorphism(&known.algebra, &algebra, None, budget)?.is_some() {
                        duplicate = true;
                        break;
                    }
                }
                if !duplicate {
                    next.push(Classified {
                        algebra,
                        provenance,
                        fingerprint: fp,
                    });
                }
            }
        }
        level = next;
    }
    Ok(level)
}
