//! Peeling an algebra into iterated Hochschild products along ideals.

use crate::algebra::Algebra;
use crate::hochschild::{extract_system, HochschildSystem};
use crate::linalg::{Matrix, Subspace};
use crate::search::proper_ideals;
use crate::Result;

/// `algebra ≅ quotient ⋆ ideal` through the verified map `phi`.
#[derive(Clone, Debug)]
pub struct TowerStep {
    pub algebra: Algebra,
    pub ideal: Subspace,
    pub quotient: Algebra,
    pub projection: Matrix,
    pub system: HochschildSystem,
    pub phi: Matrix,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub steps: Vec<TowerStep>,
    pub base: Algebra,
}

/// Repeatedly divides by the first smallest proper ideal (one-dimensional
/// ones first) until the algebra has none.
pub fn decompose_tower(a: &Algebra, budget: u64) -> Result<Tower> {
    a.validate().into_result("algebra")?;
    let mut cur = a.clone();
    let mut steps = Vec::new();
    loop {
        let ideals = proper_ideals(&cur, cur.dim.saturating_sub(1), budget)?;
        let Some(ideal) = ideals.into_iter().next() else {
            break;
        };
        let q = cur.quotient(&ideal)?;
        let (system, phi) = extract_system(&cur, &q.algebra, &q.projection, &q.section)?;
        steps.push(TowerStep {
            algebra: cur.clone(),
            ideal,
            quotient: q.algebra.clone(),
            projection: q.projection,
            system,
            phi,
        });
        cur = q.algebra;
    }
    Ok(Tower { steps, base: cur })
}

impl Tower {
    /// Rebuilds every step from its system and checks the stored isomorphism.
    pub fn verify(&self) -> Result<bool> {
        for s in &self.steps {
            let rebuilt = s.system.build_product()?.total;
            if !rebuilt.is_isomorphism(&s.algebra, &s.phi) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
