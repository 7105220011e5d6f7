use crate::algebra::Algebra;
use crate::linalg::{LinearSystem, Matrix};
use crate::scalar::{add_vec, scale_vec, Field, Scalar};
use crate::{Error, Result};

use super::cohomology::gh2_coflag;
use super::datum::{build_coflag_algebra, CoflagDatum};

/// `φ(a, x) = (ψ(a), r(a) + x s₀)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub s0: Scalar,
    pub psi: Matrix,
    pub r: Vec<Scalar>,
}

impl IsoWitness {
    pub fn identity(field: Field, n: usize) -> Self {
        IsoWitness {
            s0: field.one(),
            psi: Matrix::identity(field, n),
            r: field.zeros(n),
        }
    }

    /// The map on `A ⋆ k` (basis of `A`, then `f`).
    pub fn matrix(&self) -> Matrix {
        let n = self.psi.rows();
        let f = self.psi.field();
        let mut m = Matrix::zeros(f, n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.psi.get(i, j).clone());
            }
            m.set(n, i, self.r[i].clone());
        }
        m.set(n, n, self.s0.clone());
        m
    }

    /// `(s₀s₀', ψψ', r∘ψ' + s₀r')`, which is `φ ∘ φ'`.
    pub fn compose(&self, other: &IsoWitness) -> IsoWitness {
        let r = add_vec(&other.psi.vec_mul(&self.r), &scale_vec(&self.s0, &other.r));
        IsoWitness {
            s0: &self.s0 * &other.s0,
            psi: self.psi.mul(&other.psi),
            r,
        }
    }

    /// `(s₀⁻¹, ψ⁻¹, −s₀⁻¹ r∘ψ⁻¹)`.
    pub fn inverse(&self) -> IsoWitness {
        let sinv = self.s0.inv().expect("s₀ ≠ 0");
        let pinv = self.psi.inverse().expect("ψ bijective");
        let r = scale_vec(&-&sinv, &pinv.vec_mul(&self.r));
        IsoWitness {
            s0: sinv,
            psi: pinv,
            r,
        }
    }
}

pub(crate) fn character_compatible(psi: &Matrix, d: &CoflagDatum, e: &CoflagDatum) -> bool {
    match (d, e) {
        (
            CoflagDatum::First {
                lambda, big_lambda, ..
            },
            CoflagDatum::First {
                lambda: l2,
                big_lambda: b2,
                ..
            },
        ) => psi.vec_mul(l2) == *lambda && psi.vec_mul(b2) == *big_lambda,
        _ => false,
    }
}

/// Affine solution set `(s₀, r)` of `ϑ(a,b)s₀ − λ(a)r(b) − Λ(b)r(a) + r(ab) = ϑ'(ψa, ψb)`,
/// with `r(1) = 0`; unknown 0 is `s₀`, unknowns `1..=n` are `r`.
pub(crate) fn witness_system(
    a: &Algebra,
    d: &CoflagDatum,
    e: &CoflagDatum,
    psi: &Matrix,
    fixed_s0: Option<&Scalar>,
) -> LinearSystem {
    let CoflagDatum::First {
        lambda,
        big_lambda,
        theta,
    } = d
    else {
        unreachable!("first kind")
    };
    let n = a.dim;
    let f = a.field;
    let mut sys = LinearSystem::new(f, n + 1);
    let unit_terms: Vec<(usize, Scalar)> = (0..n).map(|i| (i + 1, a.unit[i].clone())).collect();
    sys.push(&unit_terms, f.zero());
    if let Some(s) = fixed_s0 {
        sys.push(&[(0, f.one())], s.clone());
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| psi.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut terms = vec![
                (0, theta[i * n + j].clone()),
                (j + 1, -&lambda[i]),
                (i + 1, -&big_lambda[j]),
            ];
            for (m, c) in a.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    terms.push((m + 1, c.clone()));
                }
            }
            sys.push(&terms, e.theta_of(a, &images[i], &images[j]));
        }
    }
    sys
}

pub(crate) fn witness_from(sol: &[Scalar], psi: &Matrix) -> IsoWitness {
    IsoWitness {
        s0: sol[0].clone(),
        psi: psi.clone(),
        r: sol[1..].to_vec(),
    }
}

/// Checks that `φ` is an isomorphism between the two products.
pub fn verify_witness(
    a: &Algebra,
    d: &CoflagDatum,
    e: &CoflagDatum,
    w: &IsoWitness,
) -> Result<bool> {
    let src = build_coflag_algebra(a, d)?.total;
    let dst = build_coflag_algebra(a, e)?.total;
    Ok(!w.s0.is_zero() && src.is_isomorphism(&dst, &w.matrix()))
}

/// Some `(s₀, ψ, r)` with `ψ` from `autos` relating two first-kind data.
/// One linear system in `(s₀, r)` per compatible `ψ`.
pub fn find_iso_first_kind(
    a: &Algebra,
    d: &CoflagDatum,
    e: &CoflagDatum,
    autos: &[Matrix],
) -> Result<Option<IsoWitness>> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    if !d.is_first_kind() || !e.is_first_kind() {
        return Err(Error::InvalidParams(
            "isomorphism search between first-kind data only".into(),
        ));
    }
    for psi in autos {
        if !character_compatible(psi, d, e) {
            continue;
        }
        let Some(sol) = nonzero_s0(witness_system(a, d, e, psi, None)) else {
            continue;
        };
        let w = witness_from(&sol, psi);
        if !verify_witness(a, d, e, &w)? {
            return Err(Error::NotAMorphism(
                "linear solve produced an invalid witness".into(),
            ));
        }
        return Ok(Some(w));
    }
    Ok(None)
}

/// A class of `HOC(A, k)`.
#[derive(Clone, Debug)]
pub struct HocClass {
    /// `None` for `A × k`.
    pub datum: Option<CoflagDatum>,
    pub algebra: Algebra,
    /// Other `GH²` representatives in the orbit, with a witness from the class
    /// representative to each.
    pub merged: Vec<(CoflagDatum, IsoWitness)>,
}

impl HocClass {
    pub fn orbit_size(&self) -> usize {
        1 + self.merged.len()
    }
}

#[derive(Clone, Debug)]
pub struct HocReport {
    pub classes: Vec<HocClass>,
}

impl HocReport {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// First-kind `GH²` representatives grouped into orbits, then `A × k`.
pub fn hoc(a: &Algebra, autos: &[Matrix]) -> Result<HocReport> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    if !a.field.is_finite() {
        return Err(Error::FiniteFieldRequired(
            "HOC needs enumerable GH² representatives",
        ));
    }
    let gh2 = gh2_coflag(a)?;
    let mut classes: Vec<HocClass> = Vec::new();
    for d in gh2.blocks.iter().flat_map(|b| b.data()) {
        let mut placed = false;
        for c in classes.iter_mut() {
            let rep = c.datum.as_ref().expect("first kind");
            if let Some(w) = find_iso_first_kind(a, rep, &d, autos)? {
                c.merged.push((d.clone(), w));
                placed = true;
                break;
            }
        }
        if !placed {
            let algebra = build_coflag_algebra(a, &d)?.total;
            classes.push(HocClass {
                datum: Some(d),
                algebra,
                merged: vec![],
            });
        }
    }
    let product = a.direct_product(&crate::catalog::field_algebra(a.field))?;
    classes.push(HocClass {
        datum: None,
        algebra: product,
        merged: vec![],
    });
    Ok(HocReport { classes })
}

/// `G(A, (λ, Λ, ϑ))` materialized over a finite field.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub elements: Vec<IsoWitness>,
}

/// Element of `A* ⋊ (k* × Aut(A))` with `(ρ, g)(ρ', g') = (ζ(g')(ρ) + ρ', gg')`,
/// `ζ(s₀, ψ)(ρ) = s₀⁻¹ ρ∘ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement {
    pub rho: Vec<Scalar>,
    pub s0: Scalar,
    pub psi: Matrix,
}

impl SemidirectElement {
    pub fn mul(&self, other: &SemidirectElement) -> SemidirectElement {
        let zeta = scale_vec(
            &other.s0.inv().expect("unit"),
            &other.psi.vec_mul(&self.rho),
        );
        SemidirectElement {
            rho: add_vec(&zeta, &other.rho),
            s0: &self.s0 * &other.s0,
            psi: self.psi.mul(&other.psi),
        }
    }
}

/// `(s₀, ψ, r) ↦ (s₀⁻¹r, (s₀, ψ))`.
pub fn embed(w: &IsoWitness) -> SemidirectElement {
    SemidirectElement {
        rho: scale_vec(&w.s0.inv().expect("unit"), &w.r),
        s0: w.s0.clone(),
        psi: w.psi.clone(),
    }
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, w: &IsoWitness) -> Option<usize> {
        self.elements.iter().position(|x| x == w)
    }

    /// Closure, identity and inverses under the composition law, agreement of
    /// the law with matrix composition, and injectivity and multiplicativity
    /// of the embedding into the semidirect product. Checks every pair.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let Some(first) = self.elements.first() else {
            return Err("empty group".into());
        };
        let n = first.psi.rows();
        let id = IsoWitness::identity(first.psi.field(), n);
        if self.index_of(&id).is_none() {
            return Err("identity missing".into());
        }
        let images: Vec<SemidirectElement> = self.elements.iter().map(embed).collect();
        for i in 0..images.len() {
            for j in (i + 1)..images.len() {
                if images[i] == images[j] {
                    return Err(format!("embedding identifies elements {i} and {j}"));
                }
            }
        }
        for (i, g) in self.elements.iter().enumerate() {
            if self.index_of(&g.inverse()).is_none() {
                return Err(format!("inverse of element {i} missing"));
            }
            if g.compose(&g.inverse()) != id {
                return Err(format!("inverse formula fails at {i}"));
            }
            for (j, h) in self.elements.iter().enumerate() {
                let gh = g.compose(h);
                if self.index_of(&gh).is_none() {
                    return Err(format!("product of {i} and {j} missing"));
                }
                if gh.matrix() != g.matrix().mul(&h.matrix()) {
                    return Err(format!("composition law disagrees with φ∘φ' at ({i}, {j})"));
                }
                if embed(&gh) != images[i].mul(&images[j]) {
                    return Err(format!("embedding not multiplicative at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }
}

/// Every `(s₀, ψ, r)` with `λ∘ψ = λ`, `Λ∘ψ = Λ` and
/// `ϑ(a,b)s₀ = ϑ(ψa, ψb) + λ(a)r(b) + Λ(b)r(a) − r(ab)`.
pub fn aut_group(a: &Algebra, d: &CoflagDatum, autos: &[Matrix]) -> Result<AutGroup> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    if !d.is_first_kind() {
        return Err(Error::InvalidParams(
            "automorphism group of a first-kind datum".into(),
        ));
    }
    let units = a.field.units().ok_or(Error::FiniteFieldRequired(
        "materializing the automorphism group",
    ))?;
    let mut elements = Vec::new();
    for psi in autos {
        if !character_compatible(psi, d, d) {
            continue;
        }
        for s0 in &units {
            for sol in all_solutions(&witness_system(a, d, d, psi, Some(s0)))? {
                elements.push(witness_from(&sol, psi));
            }
        }
    }
    let total = build_coflag_algebra(a, d)?.total;
    for w in &elements {
        if !total.is_isomorphism(&total, &w.matrix()) {
            return Err(Error::NotAMorphism(
                "group element is not an automorphism".into(),
            ));
        }
    }
    sort_witnesses(&mut elements);
    Ok(AutGroup { elements })
}

pub(crate) fn sort_witnesses(elements: &mut [IsoWitness]) {
    elements.sort_by(|x, y| {
        let key = |w: &IsoWitness| {
            let mut k = vec![w.s0.signed_key()];
            k.extend(w.psi.row_vecs().concat().iter().map(Scalar::signed_key));
            k.extend(w.r.iter().map(Scalar::signed_key));
            k
        };
        key(x).cmp(&key(y))
    });
}

/// A solution with `s₀ ≠ 0` (unknown 0), if the solution set has one.
pub(crate) fn nonzero_s0(sys: LinearSystem) -> Option<Vec<Scalar>> {
    let (part, kernel) = sys.solve()?;
    if !part[0].is_zero() {
        Some(part)
    } else {
        kernel
            .iter()
            .find(|k| !k[0].is_zero())
            .map(|k| add_vec(&part, k))
    }
}

/// Every solution over a finite field.
pub(crate) fn all_solutions(sys: &LinearSystem) -> Result<Vec<Vec<Scalar>>> {
    let Some((part, kernel)) = sys.solve() else {
        return Ok(vec![]);
    };
    let elements = sys
        .field
        .elements()
        .ok_or(Error::FiniteFieldRequired("enumerating a solution space"))?;
    let p = elements.len();
    let count = p
        .checked_pow(kernel.len() as u32)
        .filter(|&c| c as u64 <= crate::search::default_budget())
        .ok_or(Error::BudgetExceeded {
            what: "solution-space enumeration",
            needed: format!("{p}^{}", kernel.len()),
            budget: crate::search::default_budget(),
        })?;
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut sol = part.clone();
        let mut k = idx;
        for b in &kernel {
            let c = &elements[k % p];
            k /= p;
            if !c.is_zero() {
                sol = add_vec(&sol, &scale_vec(c, b));
            }
        }
        out.push(sol);
    }
    Ok(out)
}
