//! Codimension-one extensions of Poisson algebras.

use crate::algebra::characters;
use crate::coflag::iso::{
    all_solutions, character_compatible, nonzero_s0, sort_witnesses, witness_from, witness_system,
};
use crate::coflag::{
    build_coflag_algebra, h2_pair, trivializer_second_kind, validate_coflag, AutGroup, CoflagDatum,
    IsoWitness,
};
use crate::hochschild::extract_system;
use crate::linalg::{LinearSystem, Matrix, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{dot, Scalar};
use crate::search::automorphisms;
use crate::{Error, Result};

use super::PoissonAlgebra;

/// `(λ, Λ, ϑ, γ, f)`; `ϑ` and `f` are `n × n` tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PoissonCoflagDatum {
    pub lambda: Vec<Scalar>,
    pub big_lambda: Vec<Scalar>,
    pub theta: Vec<Scalar>,
    pub gamma: Vec<Scalar>,
    pub f: Vec<Scalar>,
}

impl PoissonCoflagDatum {
    pub fn coflag(&self) -> CoflagDatum {
        CoflagDatum::first(
            self.lambda.clone(),
            self.big_lambda.clone(),
            self.theta.clone(),
        )
    }

    fn f_of(&self, n: usize, x: &[Scalar], y: &[Scalar]) -> Scalar {
        bilinear(&self.f, n, x, y)
    }
}

fn bilinear(t: &[Scalar], n: usize, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let field = x[0].field();
    let mut acc = field.zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                acc += &(&(xi * yj) * &t[i * n + j]);
            }
        }
    }
    acc
}

fn shape(p: &PoissonAlgebra, d: &PoissonCoflagDatum) -> Result<()> {
    let n = p.dim();
    if d.lambda.len() != n
        || d.big_lambda.len() != n
        || d.gamma.len() != n
        || d.theta.len() != n * n
        || d.f.len() != n * n
    {
        return Err(Error::Dimension(format!(
            "Poisson co-flag datum does not fit dimension {n}"
        )));
    }
    Ok(())
}

/// Rules `CF1` … `CF5`.
pub fn validate_poisson_coflag(
    p: &PoissonAlgebra,
    d: &PoissonCoflagDatum,
) -> Result<ValidationReport> {
    shape(p, d)?;
    let a = &p.algebra;
    let n = p.dim();
    let field = p.field();
    let mut rep = ValidationReport::new();
    for v in validate_coflag(a, &d.coflag())?.violations {
        rep.push("CF1", &v.witness, format!("{}: {}", v.rule, v.detail));
    }
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let l = |v: &[Scalar]| dot(field, &d.lambda, v);
    let big = |v: &[Scalar]| dot(field, &d.big_lambda, v);
    let g = |v: &[Scalar]| dot(field, &d.gamma, v);
    let th = |x: &[Scalar], y: &[Scalar]| bilinear(&d.theta, n, x, y);
    let f = |x: &[Scalar], y: &[Scalar]| d.f_of(n, x, y);
    for i in 0..n {
        if !d.f[i * n + i].is_zero() {
            rep.push("CF2", &[i], "f(p, p) != 0");
        }
        for j in 0..n {
            let br = p.basis_bracket(i, j);
            if !l(br).is_zero() || !big(br).is_zero() || !g(br).is_zero() {
                rep.push("CF2", &[i, j], "λ, Λ or γ does not vanish on [p, q]");
            }
            if !(&d.f[i * n + j] + &d.f[j * n + i]).is_zero() {
                rep.push("CF2", &[i, j], "f is not alternating");
            }
            // (CF5) γ(pq) = γ(p)Λ(q) + λ(p)γ(q)
            if g(a.basis_product(i, j))
                != &(&d.gamma[i] * &d.big_lambda[j]) + &(&d.lambda[i] * &d.gamma[j])
            {
                rep.push("CF5", &[i, j], "γ(pq) != γ(p)Λ(q) + λ(p)γ(q)");
            }
            for k in 0..n {
                let cyc = [(i, j, k), (j, k, i), (k, i, j)];
                let mut s = field.zero();
                for &(x, y, z) in &cyc {
                    s += &f(&e[x], p.basis_bracket(y, z));
                    s += &(&d.gamma[x] * &d.f[y * n + z]);
                }
                if !s.is_zero() {
                    rep.push("CF3", &[i, j, k], "cyclic sum f(p,[q,r]) + γ(p)f(q,r) != 0");
                }
                let lhs = &(&f(a.basis_product(i, j), &e[k])
                    - &(&d.big_lambda[j] * &d.f[i * n + k]))
                    - &(&d.lambda[i] * &d.f[j * n + k]);
                let rhs = &(&(&d.gamma[k] * &d.theta[i * n + j])
                    + &th(p.basis_bracket(i, k), &e[j]))
                    + &th(&e[i], p.basis_bracket(j, k));
                if lhs != rhs {
                    rep.push(
                        "CF4",
                        &[i, j, k],
                        "f(pq,r) − Λ(q)f(p,r) − λ(p)f(q,r) != γ(r)ϑ(p,q) + ϑ([p,r],q) + ϑ(p,[q,r])",
                    );
                }
            }
        }
    }
    Ok(rep)
}

/// `P ⋆ k` with the bracket `([p, q], f(p, q) + γ(p)y − γ(q)x)`.
#[derive(Clone, Debug)]
pub struct PoissonExtension {
    pub total: PoissonAlgebra,
    pub projection: Matrix,
}

pub fn build_poisson_extension(
    p: &PoissonAlgebra,
    d: &PoissonCoflagDatum,
) -> Result<PoissonExtension> {
    validate_poisson_coflag(p, d)?.into_result("Poisson co-flag datum")?;
    let ext = build_coflag_algebra(&p.algebra, &d.coflag())?;
    let n = p.dim();
    let m = n + 1;
    let mut bracket = p.field().zeros(m * m * m);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in p.basis_bracket(i, j).iter().enumerate() {
                bracket[(i * m + j) * m + k] = c.clone();
            }
            bracket[(i * m + j) * m + n] = d.f[i * n + j].clone();
        }
        bracket[(i * m + n) * m + n] = d.gamma[i].clone();
        bracket[(n * m + i) * m + n] = -&d.gamma[i];
    }
    let total = PoissonAlgebra::new(ext.total, bracket)?;
    Ok(PoissonExtension {
        total,
        projection: ext.projection,
    })
}

/// The datum of `q` relative to a Poisson surjection `pi : q → p` with a
/// one-dimensional square-zero kernel and a unital section `s`.
pub fn extract_poisson_datum(
    q: &PoissonAlgebra,
    p: &PoissonAlgebra,
    pi: &Matrix,
    s: &Matrix,
) -> Result<PoissonCoflagDatum> {
    if !q.is_poisson_morphism(p, pi) {
        return Err(Error::NotAMorphism(
            "projection does not preserve the bracket".into(),
        ));
    }
    let (sys, phi) = extract_system(&q.algebra, &p.algebra, pi, s)?;
    if sys.v_dim != 1 || !sys.v_mult[0].is_zero() {
        return Err(Error::InvalidParams(
            "kernel must be one-dimensional with zero square".into(),
        ));
    }
    let n = p.dim();
    let v = phi.column(n);
    let line = Subspace::span(q.field(), q.dim(), std::slice::from_ref(&v));
    let coord = |w: &[Scalar]| -> Result<Scalar> {
        line.coordinates(w)
            .map(|c| c[0].clone())
            .ok_or_else(|| Error::InvalidParams("bracket leaves the kernel".into()))
    };
    let sec: Vec<Vec<Scalar>> = (0..n).map(|i| s.column(i)).collect();
    let mut gamma = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n * n);
    for i in 0..n {
        gamma.push(coord(&q.bracket_of(&sec[i], &v))?);
    }
    for i in 0..n {
        for j in 0..n {
            let w = crate::scalar::sub_vec(
                &q.bracket_of(&sec[i], &sec[j]),
                &s.mul_vec(p.basis_bracket(i, j)),
            );
            f.push(coord(&w)?);
        }
    }
    let d = PoissonCoflagDatum {
        lambda: sys.act_left.clone(),
        big_lambda: sys.act_right.clone(),
        theta: sys.cocycle.clone(),
        gamma,
        f,
    };
    validate_poisson_coflag(p, &d)?.into_result("extracted Poisson datum")?;
    Ok(d)
}

/// The second-kind extension `([p, q], −u⁻¹λ([p, q]))` with its verified
/// isomorphism `φ(p, x) = (p, λ(p) + ux)` onto `P × k`.
#[derive(Clone, Debug)]
pub struct SecondKindTrivializer {
    pub extension: PoissonAlgebra,
    pub phi: Matrix,
    pub inverse: Matrix,
}

pub fn poisson_trivializer_second_kind(
    p: &PoissonAlgebra,
    lambda: &[Scalar],
    u: &Scalar,
) -> Result<SecondKindTrivializer> {
    let datum = CoflagDatum::Second {
        lambda: lambda.to_vec(),
        u: u.clone(),
    };
    let ext = build_coflag_algebra(&p.algebra, &datum)?;
    let n = p.dim();
    let m = n + 1;
    let uinv = u.inv().expect("validated");
    let mut bracket = p.field().zeros(m * m * m);
    for i in 0..n {
        for j in 0..n {
            let br = p.basis_bracket(i, j);
            for (k, c) in br.iter().enumerate() {
                bracket[(i * m + j) * m + k] = c.clone();
            }
            bracket[(i * m + j) * m + n] = -&(&uinv * &dot(p.field(), lambda, br));
        }
    }
    let extension = PoissonAlgebra::new(ext.total, bracket)?;
    let (phi, inverse) = trivializer_second_kind(&p.algebra, &datum)?;
    let target = p.direct_product_k()?;
    if !extension.is_poisson_isomorphism(&target, &phi) {
        return Err(Error::NotAMorphism(
            "φ does not preserve the bracket".into(),
        ));
    }
    Ok(SecondKindTrivializer {
        extension,
        phi,
        inverse,
    })
}

/// Automorphisms preserving both the product and the bracket.
pub fn poisson_autos(p: &PoissonAlgebra, cap: u64) -> Result<Vec<Matrix>> {
    automorphisms(&p.algebra, Some(&p.bracket), cap)
}

fn compatible(psi: &Matrix, d: &PoissonCoflagDatum, e: &PoissonCoflagDatum) -> bool {
    character_compatible(psi, &d.coflag(), &e.coflag()) && psi.vec_mul(&e.gamma) == d.gamma
}

/// The co-flag witness system plus
/// `f(p,q)s₀ + r([p,q]) − γ(p)r(q) + γ(q)r(p) = f'(ψp, ψq)`.
fn poisson_system(
    p: &PoissonAlgebra,
    d: &PoissonCoflagDatum,
    e: &PoissonCoflagDatum,
    psi: &Matrix,
    s0: Option<&Scalar>,
) -> LinearSystem {
    let n = p.dim();
    let mut sys = witness_system(&p.algebra, &d.coflag(), &e.coflag(), psi, s0);
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| psi.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut terms = vec![
                (0, d.f[i * n + j].clone()),
                (j + 1, -&d.gamma[i]),
                (i + 1, d.gamma[j].clone()),
            ];
            for (m, c) in p.basis_bracket(i, j).iter().enumerate() {
                if !c.is_zero() {
                    terms.push((m + 1, c.clone()));
                }
            }
            sys.push(&terms, e.f_of(n, &images[i], &images[j]));
        }
    }
    sys
}

/// Some `(s₀, ψ, r)`, `ψ` a Poisson automorphism from `autos`, giving an
/// isomorphism of extensions that is both multiplicative and bracket-preserving.
pub fn find_poisson_iso(
    p: &PoissonAlgebra,
    d: &PoissonCoflagDatum,
    e: &PoissonCoflagDatum,
    autos: &[Matrix],
) -> Result<Option<IsoWitness>> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    let (src, dst) = (
        build_poisson_extension(p, d)?.total,
        build_poisson_extension(p, e)?.total,
    );
    for psi in autos {
        if !compatible(psi, d, e) {
            continue;
        }
        let Some(sol) = nonzero_s0(poisson_system(p, d, e, psi, None)) else {
            continue;
        };
        let w = witness_from(&sol, psi);
        if !src.is_poisson_isomorphism(&dst, &w.matrix()) {
            return Err(Error::NotAMorphism(
                "linear solve produced an invalid Poisson witness".into(),
            ));
        }
        return Ok(Some(w));
    }
    Ok(None)
}

/// A class of codimension-one extensions; `datum = None` is `P × k`.
#[derive(Clone, Debug)]
pub struct PoissonClass {
    pub datum: Option<PoissonCoflagDatum>,
    pub total: PoissonAlgebra,
    pub merged: Vec<(PoissonCoflagDatum, IsoWitness)>,
}

#[derive(Clone, Debug)]
pub struct PoissonClassification {
    /// Why the answer is `{P × k}` without enumeration, if it is.
    pub shortcut: Option<String>,
    /// Data enumerated before merging.
    pub data: usize,
    pub classes: Vec<PoissonClass>,
}

/// All first-kind Poisson data with `ϑ` among the `H²` coset representatives:
/// `γ` ranges over the linear `(CF2, CF5)` solutions, then `f` over the
/// solutions of `(CF2, CF3, CF4)`, which are linear once `γ` is fixed.
pub fn poisson_data(p: &PoissonAlgebra) -> Result<Vec<PoissonCoflagDatum>> {
    let a = &p.algebra;
    let n = p.dim();
    let field = p.field();
    let span = p.bracket_span();
    let kills = |c: &Vec<Scalar>| span.basis.iter().all(|b| dot(field, c, b).is_zero());
    let chars: Vec<Vec<Scalar>> = characters(a)?.into_iter().filter(kills).collect();
    let mut out = Vec::new();
    for l in &chars {
        for big in &chars {
            let block = h2_pair(a, l, big)?;
            let mut gsys = LinearSystem::new(field, n);
            for b in &span.basis {
                gsys.push_row(b.clone(), field.zero());
            }
            for i in 0..n {
                for j in 0..n {
                    let mut row = a.basis_product(i, j).to_vec();
                    row[i] -= &big[j];
                    row[j] -= &l[i];
                    gsys.push_row(row, field.zero());
                }
            }
            let gammas = all_solutions(&gsys)?;
            for theta in block.representatives.iter().flatten() {
                for gamma in &gammas {
                    for f in all_solutions(&f_system(p, l, big, theta, gamma))? {
                        out.push(PoissonCoflagDatum {
                            lambda: l.clone(),
                            big_lambda: big.clone(),
                            theta: theta.clone(),
                            gamma: gamma.clone(),
                            f,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn f_system(
    p: &PoissonAlgebra,
    l: &[Scalar],
    big: &[Scalar],
    theta: &[Scalar],
    gamma: &[Scalar],
) -> LinearSystem {
    let a = &p.algebra;
    let n = p.dim();
    let field = p.field();
    let mut sys = LinearSystem::new(field, n * n);
    let th = |x: &[Scalar], y: &[Scalar]| bilinear(theta, n, x, y);
    for i in 0..n {
        sys.push(&[(i * n + i, field.one())], field.zero());
        for j in (i + 1)..n {
            sys.push(
                &[(i * n + j, field.one()), (j * n + i, field.one())],
                field.zero(),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut terms: Vec<(usize, Scalar)> = Vec::new();
                for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, c) in p.basis_bracket(y, z).iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((x * n + m, c.clone()));
                        }
                    }
                    terms.push((y * n + z, gamma[x].clone()));
                }
                sys.push(&terms, field.zero());
                let mut t4: Vec<(usize, Scalar)> = Vec::new();
                for (m, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        t4.push((m * n + k, c.clone()));
                    }
                }
                t4.push((i * n + k, -&big[j]));
                t4.push((j * n + k, -&l[i]));
                let ei = a.basis_vector(i);
                let ej = a.basis_vector(j);
                let rhs = &(&(&gamma[k] * &theta[i * n + j]) + &th(p.basis_bracket(i, k), &ej))
                    + &th(&ei, p.basis_bracket(j, k));
                sys.push(&t4, rhs);
            }
        }
    }
    sys
}

/// `{P × k}` alone when `P` has no characters or is perfect; otherwise the
/// orbits of [`poisson_data`] under [`find_poisson_iso`], then `P × k`.
pub fn classify_poisson_ext(p: &PoissonAlgebra, autos: &[Matrix]) -> Result<PoissonClassification> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    p.validate().into_result("Poisson algebra")?;
    let product = PoissonClass {
        datum: None,
        total: p.direct_product_k()?,
        merged: vec![],
    };
    let shortcut = if characters(&p.algebra)?.is_empty() {
        Some("no algebra map to k".to_string())
    } else if p.is_perfect() {
        Some("the bracket is perfect".to_string())
    } else {
        None
    };
    if shortcut.is_some() {
        return Ok(PoissonClassification {
            shortcut,
            data: 0,
            classes: vec![product],
        });
    }
    let data = poisson_data(p)?;
    let mut classes: Vec<PoissonClass> = Vec::new();
    for d in &data {
        let mut placed = false;
        for c in classes.iter_mut() {
            if let Some(w) = find_poisson_iso(p, c.datum.as_ref().expect("first kind"), d, autos)? {
                c.merged.push((d.clone(), w));
                placed = true;
                break;
            }
        }
        if !placed {
            let total = build_poisson_extension(p, d)?.total;
            classes.push(PoissonClass {
                datum: Some(d.clone()),
                total,
                merged: vec![],
            });
        }
    }
    classes.push(product);
    Ok(PoissonClassification {
        shortcut: None,
        data: data.len(),
        classes,
    })
}

/// `GP(P, d)`: every `(s₀, ψ, r)` fixing `d`, with `ψ` a Poisson automorphism.
pub fn poisson_aut_group(
    p: &PoissonAlgebra,
    d: &PoissonCoflagDatum,
    autos: &[Matrix],
) -> Result<AutGroup> {
    if autos.is_empty() {
        return Err(Error::EmptyAutomorphisms);
    }
    let units = p.field().units().ok_or(Error::FiniteFieldRequired(
        "materializing the automorphism group",
    ))?;
    let total = build_poisson_extension(p, d)?.total;
    let mut elements = Vec::new();
    for psi in autos {
        if !compatible(psi, d, d) {
            continue;
        }
        for s0 in &units {
            for sol in all_solutions(&poisson_system(p, d, d, psi, Some(s0)))? {
                let w = witness_from(&sol, psi);
                if !total.is_poisson_isomorphism(&total, &w.matrix()) {
                    return Err(Error::NotAMorphism(
                        "group element is not a Poisson automorphism".into(),
                    ));
                }
                elements.push(w);
            }
        }
    }
    sort_witnesses(&mut elements);
    Ok(AutGroup { elements })
}

#[cfg(test)]
mod tests;
