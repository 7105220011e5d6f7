mod common;

use gext_core::catalog;
use gext_core::coflag::{
    cf_from_hs, coboundary, cocycle_space, embed, hs_from_cf, CoflagDatum, IsoWitness,
};
use gext_core::io::{entity_to_json, parse_entity, to_pretty, Entity};
use gext_core::linalg::rank_kernel;
use gext_core::poisson::{
    build_poisson_extension, extract_poisson_datum, poisson_data, validate_poisson_coflag,
};
use gext_core::{Field, Matrix, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f5() -> Field {
    Field::Prime(5)
}

fn vec5(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| f5().from_i64(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn seeded_hochschild_systems(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = common::random_system(&mut rng);
        prop_assert_eq!(common::check_system(&mut rng, &s), Ok(()));
    }

    #[test]
    fn products_round_trip_through_json(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = common::random_system(&mut rng);
        let e = Entity::Algebra(s.build_product().unwrap().total);
        let text = to_pretty(&entity_to_json(&e));
        let back = parse_entity(&text).unwrap();
        prop_assert_eq!(to_pretty(&entity_to_json(&back.value)), text);
    }

    #[test]
    fn one_dimensional_systems_are_data(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = common::random_system(&mut rng);
        prop_assume!(s.v_dim == 1);
        let d = cf_from_hs(&s).unwrap();
        prop_assert_eq!(hs_from_cf(&s.algebra, &d).unwrap(), s);
    }

    #[test]
    fn rational_field_laws(a in -40i64..40, b in -40i64..40, c in 1i64..40, d in 1i64..40) {
        let q = Field::Rationals;
        let x = q.fraction(a, c).unwrap();
        let y = q.fraction(b, d).unwrap();
        let z = q.fraction(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&z * &z.inv().unwrap()), &q.one());
        prop_assert_eq!(q.parse_scalar(&x.to_string()).unwrap(), (x.clone(), false));
    }

    #[test]
    fn prime_field_laws(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101]), a in any::<i32>(), b in any::<i32>()) {
        let f = Field::prime(p).unwrap();
        let (x, y) = (f.from_i64(a.into()), f.from_i64(b.into()));
        prop_assert_eq!(&(&x * &y) + &(&x * &y), &x * &(&y + &y));
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        } else {
            prop_assert!(x.is_zero());
        }
        prop_assert_eq!(x.pow(p), x);
    }

    #[test]
    fn kernels_are_kernels(entries in prop::collection::vec(0i64..5, 12), rows in 1usize..4) {
        let cols = 12 / rows.max(1);
        let data: Vec<Vec<Scalar>> = (0..rows).map(|i| vec5(&entries[i * cols..(i + 1) * cols])).collect();
        let m = Matrix::from_rows(f5(), &data).unwrap();
        let (rank, kernel) = rank_kernel(&m);
        prop_assert_eq!(rank + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn coboundaries_are_cocycles(which in 0usize..6, t in prop::collection::vec(0i64..5, 3), li in 0usize..4, ri in 0usize..4) {
        let a = catalog::coflag3(which + 1, f5()).unwrap();
        let chars = gext_core::algebra::characters(&a).unwrap();
        let (l, r) = (&chars[li % chars.len()], &chars[ri % chars.len()]);
        // t(1) = 0 on the basis 1, x, y (or the idempotents of k³)
        let mut t = vec5(&t);
        let shift = gext_core::scalar::dot(f5(), &t, &a.unit);
        let i0 = a.unit.iter().position(|c| !c.is_zero()).unwrap();
        t[i0] = &t[i0] - &(&shift * &a.unit[i0].inv().unwrap());
        let b = coboundary(&a, l, r, &t);
        prop_assert!(cocycle_space(&a, l, r).contains(&b));
    }

    #[test]
    fn witness_algebra(s in 1i64..5, s2 in 1i64..5, r in prop::collection::vec(0i64..5, 2), g in 0usize..2, h in 0usize..2) {
        let f = f5();
        let autos = [Matrix::identity(f, 2), Matrix::from_i64(f, &[&[1, 0], &[0, 3]])];
        let w = IsoWitness { s0: f.from_i64(s), psi: autos[g].clone(), r: vec5(&[0, r[0]]) };
        let v = IsoWitness { s0: f.from_i64(s2), psi: autos[h].clone(), r: vec5(&[0, r[1]]) };
        prop_assert_eq!(w.compose(&v).matrix(), w.matrix().mul(&v.matrix()));
        prop_assert_eq!(w.compose(&w.inverse()), IsoWitness::identity(f, 2));
        prop_assert_eq!(embed(&w.compose(&v)), embed(&w).mul(&embed(&v)));
    }
}

#[test]
fn poisson_data_round_trip() {
    let h = catalog::heisenberg_poisson(f5()).unwrap();
    let mut pi = Matrix::zeros(f5(), 3, 4);
    for i in 0..3 {
        pi.set(i, i, f5().one());
    }
    let sec = pi.transpose();
    let data = poisson_data(&h).unwrap();
    assert!(!data.is_empty());
    for d in &data {
        assert!(validate_poisson_coflag(&h, d).unwrap().is_valid());
        let ext = build_poisson_extension(&h, d).unwrap();
        assert!(ext.total.validate().is_valid());
        assert_eq!(
            &extract_poisson_datum(&ext.total, &h, &pi, &sec).unwrap(),
            d
        );
    }
}

#[test]
fn second_kind_round_trip_on_k() {
    let k = catalog::field_algebra(f5());
    for u in 1..5 {
        let d = CoflagDatum::Second {
            lambda: vec5(&[1]),
            u: f5().from_i64(u),
        };
        assert_eq!(cf_from_hs(&hs_from_cf(&k, &d).unwrap()).unwrap(), d);
    }
}
