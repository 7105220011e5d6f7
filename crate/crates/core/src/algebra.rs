//! Finite-dimensional unital associative algebras given by structure constants.

use crate::linalg::{Matrix, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{dot, is_zero_vec, Field, Scalar};
use crate::{Error, Result};

/// `e_i e_j = Σ_k mult[(i*n + j)*n + k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<Scalar>,
    /// Closed-form character list, used where search is impossible (over Q).
    pub characters: Option<Vec<Vec<Scalar>>>,
    /// Complete automorphism group, when known in closed form.
    pub automorphisms: Option<Vec<Matrix>>,
}

impl Algebra {
    /// Checks shapes only. Use [`Algebra::new`] for a validated algebra.
    pub fn unchecked(
        field: Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        mult: Vec<Scalar>,
    ) -> Result<Algebra> {
        let n = basis.len();
        if unit.len() != n {
            return Err(Error::Dimension(format!(
                "unit has {} coordinates, dim is {n}",
                unit.len()
            )));
        }
        if mult.len() != n * n * n {
            return Err(Error::Dimension(format!(
                "structure tensor has {} entries, expected {}",
                mult.len(),
                n * n * n
            )));
        }
        if let Some(s) = unit.iter().chain(&mult).find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                s.field().to_string(),
            ));
        }
        Ok(Algebra {
            field,
            dim: n,
            basis,
            unit,
            mult,
            characters: None,
            automorphisms: None,
        })
    }

    pub fn new(
        field: Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        mult: Vec<Scalar>,
    ) -> Result<Algebra> {
        let a = Algebra::unchecked(field, basis, unit, mult)?;
        a.validate().into_result("algebra")?;
        Ok(a)
    }

    /// Builds from sparse integer entries `(i, j, k, c)`.
    pub fn from_table(
        field: Field,
        labels: &[&str],
        unit: &[i64],
        entries: &[(usize, usize, usize, i64)],
    ) -> Result<Algebra> {
        let n = labels.len();
        let mut mult = field.zeros(n * n * n);
        for &(i, j, k, c) in entries {
            mult[(i * n + j) * n + k] += &field.from_i64(c);
        }
        Algebra::new(
            field,
            labels.iter().map(|s| s.to_string()).collect(),
            unit.iter().map(|&v| field.from_i64(v)).collect(),
            mult,
        )
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.mult[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = self.field.zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &(&w * c);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim)
    }

    /// Associativity on all basis quadruples and two-sided unit law.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut rep = ValidationReport::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    for l in 0..n {
                        let mut lhs = self.field.zero();
                        let mut rhs = self.field.zero();
                        for m in 0..n {
                            if !ij[m].is_zero() {
                                lhs += &(&ij[m] * self.c(m, k, l));
                            }
                            if !jk[m].is_zero() {
                                rhs += &(&jk[m] * self.c(i, m, l));
                            }
                        }
                        if lhs != rhs {
                            rep.push(
                                "associativity",
                                &[i, j, k, l],
                                format!(
                                    "coefficient of {} in ({}{}){} is {lhs}, in {}({}{}) is {rhs}",
                                    self.basis[l],
                                    self.basis[i],
                                    self.basis[j],
                                    self.basis[k],
                                    self.basis[i],
                                    self.basis[j],
                                    self.basis[k]
                                ),
                            );
                        }
                    }
                }
            }
        }
        for j in 0..n {
            let e = self.basis_vector(j);
            if self.product(&self.unit, &e) != e {
                rep.push(
                    "unit-left",
                    &[j],
                    format!("1*{} != {}", self.basis[j], self.basis[j]),
                );
            }
            if self.product(&e, &self.unit) != e {
                rep.push(
                    "unit-right",
                    &[j],
                    format!("{}*1 != {}", self.basis[j], self.basis[j]),
                );
            }
        }
        rep
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.product(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.product(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Unital and multiplicative on all basis pairs.
    pub fn character_report(&self, chi: &[Scalar]) -> ValidationReport {
        let mut rep = ValidationReport::new();
        if chi.len() != self.dim {
            rep.push(
                "shape",
                &[],
                format!("character has {} values, dim is {}", chi.len(), self.dim),
            );
            return rep;
        }
        if !dot(self.field, chi, &self.unit).is_one() {
            rep.push("character-unit", &[], "value on the unit is not 1");
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = dot(self.field, chi, self.basis_product(i, j));
                if lhs != &chi[i] * &chi[j] {
                    rep.push(
                        "character-mult",
                        &[i, j],
                        format!("{lhs} != {}*{}", chi[i], chi[j]),
                    );
                }
            }
        }
        rep
    }

    pub fn is_character(&self, chi: &[Scalar]) -> bool {
        self.character_report(chi).is_valid()
    }

    /// Checks that `m` (columns = images of basis vectors) is a unital
    /// algebra morphism `self → target`.
    pub fn morphism_report(&self, target: &Algebra, m: &Matrix) -> ValidationReport {
        let mut rep = ValidationReport::new();
        if m.rows() != target.dim || m.cols() != self.dim {
            rep.push(
                "shape",
                &[],
                format!("expected {}x{} matrix", target.dim, self.dim),
            );
            return rep;
        }
        if m.mul_vec(&self.unit) != target.unit {
            rep.push("morphism-unit", &[], "unit not preserved");
        }
        let images: Vec<Vec<Scalar>> = (0..self.dim).map(|j| m.column(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = m.mul_vec(self.basis_product(i, j));
                let rhs = target.product(&images[i], &images[j]);
                if lhs != rhs {
                    rep.push(
                        "morphism-mult",
                        &[i, j],
                        format!(
                            "f({}{}) != f({})f({})",
                            self.basis[i], self.basis[j], self.basis[i], self.basis[j]
                        ),
                    );
                }
            }
        }
        rep
    }

    pub fn is_morphism(&self, target: &Algebra, m: &Matrix) -> bool {
        self.morphism_report(target, m).is_valid()
    }

    pub fn is_isomorphism(&self, target: &Algebra, m: &Matrix) -> bool {
        self.dim == target.dim && m.inverse().is_some() && self.is_morphism(target, m)
    }

    /// Componentwise product `A × B` with basis `(e_i, 0)` then `(0, f_j)`.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let (n, m) = (self.dim, other.dim);
        let d = n + m;
        let f = self.field;
        let mut mult = f.zeros(d * d * d);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult[(i * d + j) * d + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    mult[((n + i) * d + n + j) * d + n + k] = other.c(i, j, k).clone();
                }
            }
        }
        let mut labels = self.basis.clone();
        for l in &other.basis {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let unit = [self.unit.clone(), other.unit.clone()].concat();
        let mut out = Algebra::new(f, labels, unit, mult)?;
        if let (Some(ca), Some(cb)) = (&self.characters, &other.characters) {
            let mut chars: Vec<Vec<Scalar>> = ca
                .iter()
                .map(|c| [c.clone(), f.zeros(m)].concat())
                .chain(cb.iter().map(|c| [f.zeros(n), c.clone()].concat()))
                .collect();
            chars.sort();
            out.characters = Some(chars);
        }
        Ok(out)
    }

    /// `AV ⊆ V` and `VA ⊆ V`.
    pub fn is_two_sided_ideal(&self, v: &Subspace) -> bool {
        v.basis.iter().all(|x| {
            (0..self.dim).all(|j| {
                let e = self.basis_vector(j);
                v.contains(&self.product(&e, x)) && v.contains(&self.product(x, &e))
            })
        })
    }

    /// Quotient by a proper two-sided ideal.
    ///
    /// Returns the quotient algebra, the projection (`dim A/I × dim A`) and a
    /// unital linear section (`dim A × dim A/I`). The quotient basis is the image
    /// of `1_A` followed by the standard vectors completing a basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        let n = self.dim;
        if ideal.dim() >= n {
            return Err(Error::InvalidParams("ideal is not proper".into()));
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidParams(
                "subspace is not a two-sided ideal".into(),
            ));
        }
        let mut cols: Vec<Vec<Scalar>> = ideal.basis.clone();
        let mut comp: Vec<Vec<Scalar>> = Vec::new();
        let mut labels = Vec::new();
        let mut span = Subspace::span(self.field, n, &cols);
        let candidates = std::iter::once((self.unit.clone(), "1".to_string()))
            .chain((0..n).map(|k| (self.basis_vector(k), self.basis[k].clone())));
        for (v, label) in candidates {
            if span.contains(&v) {
                continue;
            }
            cols.push(v.clone());
            comp.push(v);
            labels.push(label);
            span = Subspace::span(self.field, n, &cols);
        }
        let m = comp.len();
        let d = ideal.dim();
        let change = Matrix::from_columns(self.field, n, &cols);
        let inv = change.inverse().expect("completed basis is invertible");
        let mut projection = Matrix::zeros(self.field, m, n);
        for i in 0..m {
            for j in 0..n {
                projection.set(i, j, inv.get(d + i, j).clone());
            }
        }
        let section = Matrix::from_columns(self.field, n, &comp);
        let mut mult = self.field.zeros(m * m * m);
        for i in 0..m {
            for j in 0..m {
                let prod = projection.mul_vec(&self.product(&comp[i], &comp[j]));
                for (k, c) in prod.into_iter().enumerate() {
                    mult[(i * m + j) * m + k] = c;
                }
            }
        }
        let unit = projection.mul_vec(&self.unit);
        let algebra = Algebra::new(self.field, labels, unit, mult)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
        })
    }

    /// The dual functional of the last basis vector on which the unit has a
    /// nonzero coordinate, scaled so that it takes the value 1 on `1_A`.
    pub fn base_functional(&self) -> Vec<Scalar> {
        let i = (0..self.dim)
            .rev()
            .find(|&i| !self.unit[i].is_zero())
            .expect("unit is nonzero");
        let mut v = self.zero_vector();
        v[i] = self.unit[i].inv().expect("nonzero");
        v
    }

    /// Span of all commutators `e_i e_j − e_j e_i`.
    pub fn commutator_span(&self) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let d = crate::scalar::sub_vec(self.basis_product(i, j), self.basis_product(j, i));
                if !is_zero_vec(&d) {
                    vs.push(d);
                }
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    /// Span of all products `e_i e_j`.
    pub fn square_span(&self) -> Subspace {
        let vs: Vec<Vec<Scalar>> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_product(i, j).to_vec())
            .filter(|v| !is_zero_vec(v))
            .collect();
        Subspace::span(self.field, self.dim, &vs)
    }

    /// Dimension of the center.
    pub fn center_dim(&self) -> usize {
        let n = self.dim;
        let mut sys = crate::linalg::LinearSystem::new(self.field, n);
        for j in 0..n {
            for k in 0..n {
                let row: Vec<Scalar> = (0..n).map(|i| self.c(i, j, k) - self.c(j, i, k)).collect();
                sys.push_row(row, self.field.zero());
            }
        }
        sys.kernel().len()
    }

    /// Image of this algebra under a change of basis: column `j` of `p` is the
    /// new `j`-th basis vector written in the old basis.
    pub fn transport(&self, p: &Matrix, labels: Vec<String>) -> Result<Algebra> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidParams("singular change of basis".into()))?;
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut mult = self.field.zeros(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = inv.mul_vec(&self.product(&cols[i], &cols[j]));
                for (k, c) in prod.into_iter().enumerate() {
                    mult[(i * n + j) * n + k] = c;
                }
            }
        }
        Algebra::new(self.field, labels, inv.mul_vec(&self.unit), mult)
    }

    /// Same field, dimension, unit and structure constants (labels ignored).
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.mult == other.mult
    }
}

/// Result of [`Algebra::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub projection: Matrix,
    pub section: Matrix,
}

/// Characters `A → k`, lexicographically sorted.
///
/// Over F_p the list comes from exhaustive pruned search; over Q only from a
/// registered closed form.
pub fn characters(a: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    if a.field.is_finite() {
        return Ok(crate::search::characters(a));
    }
    let mut list = a.characters.clone().ok_or(Error::CharactersUnavailable)?;
    for c in &list {
        a.character_report(c).into_result("registered character")?;
    }
    list.sort();
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn perturbed_matrix_algebra_fails() {
        let f5 = Field::Prime(5);
        let m2 = catalog::matrix(2, f5).unwrap();
        assert!(m2.validate().is_valid());
        let mut bad = m2.clone();
        bad.mult[5] += &f5.one();
        let rep = bad.validate();
        assert!(
            rep.mentions("associativity")
                || rep.mentions("unit-left")
                || rep.mentions("unit-right")
        );
        assert!(rep.violations.iter().any(|v| v.witness.len() == 4));
    }

    #[test]
    fn direct_product_of_fields() {
        let q = Field::Rationals;
        let k = catalog::field_algebra(q);
        let kk = k.direct_product(&k).unwrap();
        assert_eq!(kk.dim, 2);
        assert!(kk.is_commutative());
        assert_eq!(characters(&kk).unwrap().len(), 2);
    }

    #[test]
    fn quotient_section_is_unital() {
        let f5 = Field::Prime(5);
        let t2 = catalog::upper_triangular(2, f5).unwrap();
        let ideal = Subspace::span(f5, 3, &[t2.basis_vector(1)]);
        let q = t2.quotient(&ideal).unwrap();
        assert_eq!(q.algebra.dim, 2);
        assert_eq!(q.section.mul_vec(&q.algebra.unit), t2.unit);
        assert!(t2.is_morphism(&q.algebra, &q.projection));
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(f5, 2));
    }

    #[test]
    fn base_functional_choices() {
        let q = Field::Rationals;
        let m2 = catalog::matrix(2, q).unwrap();
        // e22 is the last basis vector touched by the unit
        assert_eq!(
            m2.base_functional(),
            vec![q.zero(), q.zero(), q.zero(), q.one()]
        );
        let dn = catalog::dual_numbers(q);
        assert_eq!(dn.base_functional(), vec![q.one(), q.zero()]);
    }
}
