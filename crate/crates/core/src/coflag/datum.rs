use crate::algebra::Algebra;
use crate::hochschild::{ExtensionAlgebra, HochschildSystem};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::{dot, Scalar};
use crate::{Error, Result};

/// Data of an extension of `A` by a one-dimensional kernel.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoflagDatum {
    /// Characters `λ`, `Λ` and a normalized `(λ, Λ)`-cocycle `ϑ` (`n × n`, row-major).
    First {
        lambda: Vec<Scalar>,
        big_lambda: Vec<Scalar>,
        theta: Vec<Scalar>,
    },
    /// A unital functional `λ` and `u ≠ 0`.
    Second { lambda: Vec<Scalar>, u: Scalar },
}

impl CoflagDatum {
    pub fn first(lambda: Vec<Scalar>, big_lambda: Vec<Scalar>, theta: Vec<Scalar>) -> Self {
        CoflagDatum::First {
            lambda,
            big_lambda,
            theta,
        }
    }

    /// `(λ, Λ, 0)`.
    pub fn untwisted(lambda: &[Scalar], big_lambda: &[Scalar]) -> Self {
        let n = lambda.len();
        let f = lambda[0].field();
        Self::first(lambda.to_vec(), big_lambda.to_vec(), f.zeros(n * n))
    }

    pub fn is_first_kind(&self) -> bool {
        matches!(self, CoflagDatum::First { .. })
    }

    pub fn lambda(&self) -> &[Scalar] {
        match self {
            CoflagDatum::First { lambda, .. } | CoflagDatum::Second { lambda, .. } => lambda,
        }
    }

    /// `ϑ(a, b)` for arbitrary vectors.
    pub fn theta_of(&self, a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let n = a.dim;
        let f = a.field;
        match self {
            CoflagDatum::First { theta, .. } => {
                let mut acc = f.zero();
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if !yj.is_zero() {
                            acc += &(&(xi * yj) * &theta[i * n + j]);
                        }
                    }
                }
                acc
            }
            CoflagDatum::Second { lambda, u } => {
                let l = |v: &[Scalar]| dot(f, lambda, v);
                let num = &(&l(x) * &l(y)) - &l(&a.product(x, y));
                &num * &u.inv().expect("u is nonzero")
            }
        }
    }
}

fn shape(a: &Algebra, d: &CoflagDatum) -> Result<()> {
    let n = a.dim;
    let ok = match d {
        CoflagDatum::First {
            lambda,
            big_lambda,
            theta,
        } => lambda.len() == n && big_lambda.len() == n && theta.len() == n * n,
        CoflagDatum::Second { lambda, .. } => lambda.len() == n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "co-flag datum does not fit an algebra of dimension {n}"
        )))
    }
}

/// Rules: `lambda-character`, `Lambda-character`, `normalization`, `cocycle`
/// for the first kind; `lambda-unital`, `u-nonzero` for the second.
pub fn validate_coflag(a: &Algebra, d: &CoflagDatum) -> Result<ValidationReport> {
    shape(a, d)?;
    let mut rep = ValidationReport::new();
    let n = a.dim;
    let f = a.field;
    match d {
        CoflagDatum::First {
            lambda,
            big_lambda,
            theta,
        } => {
            for v in a.character_report(lambda).violations {
                rep.push("lambda-character", &v.witness, v.detail);
            }
            for v in a.character_report(big_lambda).violations {
                rep.push("Lambda-character", &v.witness, v.detail);
            }
            let th = |x: &[Scalar], y: &[Scalar]| d.theta_of(a, x, y);
            for i in 0..n {
                let e = a.basis_vector(i);
                if !th(&e, &a.unit).is_zero() || !th(&a.unit, &e).is_zero() {
                    rep.push("normalization", &[i], "ϑ(a, 1) or ϑ(1, a) is nonzero");
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let ab = a.basis_product(i, j);
                    for k in 0..n {
                        let bc = a.basis_product(j, k);
                        let ei = a.basis_vector(i);
                        let ek = a.basis_vector(k);
                        let lhs = &th(&ei, bc) - &th(ab, &ek);
                        let rhs = &(&theta[i * n + j] * &big_lambda[k])
                            - &(&theta[j * n + k] * &lambda[i]);
                        if lhs != rhs {
                            rep.push(
                                "cocycle",
                                &[i, j, k],
                                "ϑ(a,bc) − ϑ(ab,c) != ϑ(a,b)Λ(c) − ϑ(b,c)λ(a)",
                            );
                        }
                    }
                }
            }
        }
        CoflagDatum::Second { lambda, u } => {
            if !dot(f, lambda, &a.unit).is_one() {
                rep.push("lambda-unital", &[], "λ(1) != 1");
            }
            if u.is_zero() {
                rep.push("u-nonzero", &[], "u = 0");
            }
        }
    }
    Ok(rep)
}

/// The one-dimensional Hochschild system of a datum: `a ▷ x = λ(a)x`,
/// `x ◁ a = Λ(a)x` (`Λ = λ` for the second kind), `x · y = uxy`.
pub fn hs_from_cf(a: &Algebra, d: &CoflagDatum) -> Result<HochschildSystem> {
    validate_coflag(a, d)?.into_result("co-flag datum")?;
    let n = a.dim;
    let f = a.field;
    let (left, right, u) = match d {
        CoflagDatum::First {
            lambda, big_lambda, ..
        } => (lambda.clone(), big_lambda.clone(), f.zero()),
        CoflagDatum::Second { lambda, u } => (lambda.clone(), lambda.clone(), u.clone()),
    };
    let mut cocycle = f.zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            cocycle[i * n + j] = d.theta_of(a, &a.basis_vector(i), &a.basis_vector(j));
        }
    }
    HochschildSystem::new(a.clone(), 1, left, right, cocycle, vec![u])
}

/// Inverse of [`hs_from_cf`].
pub fn cf_from_hs(s: &HochschildSystem) -> Result<CoflagDatum> {
    if s.v_dim != 1 {
        return Err(Error::Dimension(format!(
            "expected a one-dimensional kernel, got {}",
            s.v_dim
        )));
    }
    s.validate().into_result("Hochschild system")?;
    let u = s.v_mult[0].clone();
    let d = if u.is_zero() {
        CoflagDatum::first(s.act_left.clone(), s.act_right.clone(), s.cocycle.clone())
    } else {
        let d = CoflagDatum::Second {
            lambda: s.act_left.clone(),
            u,
        };
        let back = hs_from_cf(&s.algebra, &d)?;
        // (H2) forces Λ = λ, and (H6) forces ϑ = u⁻¹(λ(a)λ(b) − λ(ab))
        assert_eq!(&back, s, "a valid system with u ≠ 0 is of the second kind");
        d
    };
    Ok(d)
}

/// `A ⋆ k` for a datum; the new basis vector is `f`.
pub fn build_coflag_algebra(a: &Algebra, d: &CoflagDatum) -> Result<ExtensionAlgebra> {
    hs_from_cf(a, d)?.build_product()
}

/// `φ(a, x) = (a, λ(a) + ux)`, an isomorphism `A^(λ,u) → A × k`, together
/// with its inverse `(a, x) ↦ (a, u⁻¹(x − λ(a)))`. Both are verified.
pub fn trivializer_second_kind(a: &Algebra, d: &CoflagDatum) -> Result<(Matrix, Matrix)> {
    let CoflagDatum::Second { lambda, u } = d else {
        return Err(Error::InvalidParams(
            "trivializer needs a second-kind datum".into(),
        ));
    };
    let ext = build_coflag_algebra(a, d)?;
    let target = a.direct_product(&crate::catalog::field_algebra(a.field))?;
    let n = a.dim;
    let f = a.field;
    let uinv = u.inv().expect("validated");
    let mut phi = Matrix::identity(f, n + 1);
    let mut inv = Matrix::identity(f, n + 1);
    for i in 0..n {
        phi.set(n, i, lambda[i].clone());
        inv.set(n, i, -&(&lambda[i] * &uinv));
    }
    phi.set(n, n, u.clone());
    inv.set(n, n, uinv);
    if !ext.total.is_isomorphism(&target, &phi) || phi.mul(&inv) != Matrix::identity(f, n + 1) {
        return Err(Error::NotAMorphism(
            "trivializer failed verification".into(),
        ));
    }
    Ok((phi, inv))
}
