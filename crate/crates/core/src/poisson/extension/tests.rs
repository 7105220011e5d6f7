use super::*;
use crate::catalog;
use crate::coflag::aut_group;
use crate::scalar::{scale_vec, Field};
use crate::search::default_budget;

fn f5() -> Field {
    Field::Prime(5)
}

fn v(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

/// Projection dropping the last coordinate, and the section `p ↦ (p, 0)`.
fn drop_last(field: Field, n: usize) -> (Matrix, Matrix) {
    let mut pi = Matrix::zeros(field, n, n + 1);
    for i in 0..n {
        pi.set(i, i, field.one());
    }
    (pi.clone(), pi.transpose())
}

fn table_datum(name: &str, field: Field) -> PoissonCoflagDatum {
    let h = catalog::heisenberg_poisson(field).unwrap();
    let q = catalog::heisenberg_table(name, field).unwrap();
    let (pi, s) = drop_last(field, 3);
    extract_poisson_datum(&q, &h, &pi, &s).unwrap()
}

#[test]
fn zero_extension_data_are_valid() {
    let h = catalog::heisenberg_poisson(Field::Rationals).unwrap();
    let q = Field::Rationals;
    let l1 = v(q, &[1, 0, 0]);
    let d = PoissonCoflagDatum {
        lambda: l1.clone(),
        big_lambda: l1,
        theta: q.zeros(9),
        gamma: q.zeros(3),
        f: q.zeros(9),
    };
    assert!(validate_poisson_coflag(&h, &d).unwrap().is_valid());
    let ext = build_poisson_extension(&h, &d).unwrap();
    assert_eq!(ext.total.dim(), 4);
    let mut bad = d.clone();
    bad.f[4] = q.one();
    assert!(validate_poisson_coflag(&h, &bad).unwrap().mentions("CF2"));
}

#[test]
fn printed_tables_round_trip_through_their_data() {
    let q = Field::Rationals;
    for name in ["p1", "p2", "p4:0", "p4:1", "p5:0", "p5:1"] {
        let table = catalog::heisenberg_table(name, q).unwrap();
        assert!(table.validate().is_valid(), "{name}: {}", table.validate());
        let d = table_datum(name, q);
        let rebuilt =
            build_poisson_extension(&catalog::heisenberg_poisson(q).unwrap(), &d).unwrap();
        assert!(
            rebuilt.total.algebra.same_structure(&table.algebra),
            "{name}"
        );
        assert_eq!(rebuilt.total.bracket, table.bracket, "{name}");
        assert!(rebuilt.total.is_poisson_morphism(
            &catalog::heisenberg_poisson(q).unwrap(),
            &rebuilt.projection
        ));
    }
    let product = catalog::heisenberg_table("product", q).unwrap();
    assert!(product.validate().is_valid());
    let direct = catalog::heisenberg_poisson(q)
        .unwrap()
        .direct_product_k()
        .unwrap();
    assert!(product.algebra.same_structure(&direct.algebra));
    assert_eq!(product.bracket, direct.bracket);
}

#[test]
fn second_kind_trivializers() {
    let q = Field::Rationals;
    let h = catalog::heisenberg_poisson(q).unwrap();
    let t = poisson_trivializer_second_kind(&h, &v(q, &[1, 0, 0]), &q.one()).unwrap();
    assert_eq!(t.phi.mul(&t.inverse), Matrix::identity(q, 4));
    let k = PoissonAlgebra::abelian(&catalog::field_algebra(q)).unwrap();
    assert!(poisson_trivializer_second_kind(&k, &v(q, &[1]), &q.from_i64(3)).is_ok());
    assert!(poisson_trivializer_second_kind(&k, &v(q, &[1]), &q.zero()).is_err());
}

#[test]
fn poisson_automorphisms() {
    let dn = catalog::dual_numbers(f5());
    let ab = PoissonAlgebra::abelian(&dn).unwrap();
    assert_eq!(
        poisson_autos(&ab, 1000).unwrap(),
        automorphisms(&dn, None, 1000).unwrap()
    );
    let h = catalog::heisenberg_poisson(f5()).unwrap();
    assert_eq!(
        poisson_autos(&h, default_budget()).unwrap(),
        automorphisms(&h.algebra, None, default_budget()).unwrap()
    );
    let k = PoissonAlgebra::abelian(&catalog::field_algebra(f5())).unwrap();
    assert_eq!(
        poisson_autos(&k, 10).unwrap(),
        vec![Matrix::identity(f5(), 1)]
    );
}

#[test]
fn isomorphisms_between_table_data() {
    let h = catalog::heisenberg_poisson(f5()).unwrap();
    let autos = poisson_autos(&h, default_budget()).unwrap();
    let p1 = table_datum("p1", f5());
    let w = find_poisson_iso(&h, &p1, &p1, &autos).unwrap().unwrap();
    assert!(!w.s0.is_zero());
    let (a, b) = (table_datum("p4:0", f5()), table_datum("p4:1", f5()));
    assert!(find_poisson_iso(&h, &a, &b, &autos).unwrap().is_none());
    assert!(find_poisson_iso(&h, &b, &a, &autos).unwrap().is_none());
    assert!(find_poisson_iso(&h, &a, &b, &[]).is_err());
}

#[test]
fn shortcut_for_matrix_algebra() {
    let m2 = catalog::matrix(2, f5()).unwrap();
    let p = PoissonAlgebra::commutator(&m2, &f5().one()).unwrap();
    assert_eq!(p.bracket_span().dim(), 3);
    let c = classify_poisson_ext(&p, &[Matrix::identity(f5(), 4)]).unwrap();
    assert_eq!(c.classes.len(), 1);
    assert!(c.shortcut.is_some());
}

#[test]
fn abelian_bracket_matches_algebra_classification() {
    let dn = catalog::dual_numbers(f5());
    let p = PoissonAlgebra::abelian(&dn).unwrap();
    let autos = poisson_autos(&p, 1000).unwrap();
    let c = classify_poisson_ext(&p, &autos).unwrap();
    let h = crate::coflag::hoc(&dn, &autos).unwrap();
    // with a zero bracket, γ and f are constrained by CF3–CF5 only
    assert!(c.classes.len() >= h.len());
    assert!(c.classes.iter().all(|k| k.total.validate().is_valid()));
}

#[test]
fn automorphism_groups() {
    let dn = catalog::dual_numbers(f5());
    let p = PoissonAlgebra::abelian(&dn).unwrap();
    let autos = poisson_autos(&p, 1000).unwrap();
    let l = v(f5(), &[1, 0]);
    let d = PoissonCoflagDatum {
        lambda: l.clone(),
        big_lambda: l,
        theta: v(f5(), &[0, 0, 0, 1]),
        gamma: f5().zeros(2),
        f: f5().zeros(4),
    };
    let g = poisson_aut_group(&p, &d, &autos).unwrap();
    g.verify().unwrap();
    assert_eq!(
        g.order(),
        aut_group(&dn, &d.coflag(), &autos).unwrap().order()
    );
    let h = catalog::heisenberg_poisson(f5()).unwrap();
    let g = poisson_aut_group(
        &h,
        &table_datum("p1", f5()),
        &poisson_autos(&h, default_budget()).unwrap(),
    )
    .unwrap();
    g.verify().unwrap();
}

#[test]
fn commutator_scales_with_u() {
    let t2 = catalog::upper_triangular(2, f5()).unwrap();
    let one = PoissonAlgebra::commutator(&t2, &f5().one()).unwrap();
    let three = PoissonAlgebra::commutator(&t2, &f5().from_i64(3)).unwrap();
    assert_eq!(three.bracket, scale_vec(&f5().from_i64(3), &one.bracket));
    assert!(PoissonAlgebra::commutator(&t2, &f5().zero())
        .unwrap()
        .is_abelian());
}
