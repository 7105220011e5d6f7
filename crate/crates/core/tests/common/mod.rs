//! Seeded random Hochschild systems over F_5 and the checks run on each.
#![allow(dead_code)]

use std::sync::OnceLock;

use gext_core::catalog;
use gext_core::coflag::{cocycle_space, hs_from_cf, CoflagDatum};
use gext_core::hochschild::{
    canonical_section, check_split, extract_system, is_cohomologous, psi_matrix, HochschildSystem,
};
use gext_core::search::proper_ideals;
use gext_core::{Algebra, Field, Matrix, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn f5() -> Field {
    Field::Prime(5)
}

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    f5().from_i64(rng.gen_range(0..5))
}

fn unit(rng: &mut ChaCha8Rng) -> Scalar {
    f5().from_i64(rng.gen_range(1..5))
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.gen_range(0..xs.len())]
}

/// Algebras of dimension ≤ 3 with at least one character.
fn small_algebras() -> &'static [Algebra] {
    static POOL: OnceLock<Vec<Algebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let f = f5();
        let mut v = vec![
            catalog::field_algebra(f),
            catalog::dual_numbers(f),
            catalog::cyclic_group(2, f).unwrap(),
            catalog::split_semisimple(2, f).unwrap(),
            catalog::upper_triangular(2, f).unwrap(),
            catalog::cyclic_group(3, f).unwrap(),
        ];
        v.extend((1..=6).map(|i| catalog::coflag3(i, f).unwrap()));
        v
    })
}

/// `(E, ideal of dim 2, quotient of dim ≤ 2)` drawn from small algebras.
fn quotient_pool() -> &'static [(Algebra, Matrix, Matrix, Algebra)] {
    static POOL: OnceLock<Vec<(Algebra, Matrix, Matrix, Algebra)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let f = f5();
        let k = catalog::field_algebra(f);
        let mut es: Vec<Algebra> = (1..=6).map(|i| catalog::coflag3(i, f).unwrap()).collect();
        es.push(catalog::split_semisimple(4, f).unwrap());
        es.push(catalog::cyclic_group(4, f).unwrap());
        es.push(
            catalog::dual_numbers(f)
                .direct_product(&catalog::dual_numbers(f))
                .unwrap(),
        );
        es.push(
            catalog::upper_triangular(2, f)
                .unwrap()
                .direct_product(&k)
                .unwrap(),
        );
        es.push(catalog::coflag3(5, f).unwrap().direct_product(&k).unwrap());
        let mut out = Vec::new();
        for e in es {
            for ideal in proper_ideals(&e, 2, 1 << 30)
                .unwrap()
                .into_iter()
                .filter(|i| i.dim() == 2)
            {
                let q = e.quotient(&ideal).unwrap();
                out.push((e.clone(), q.projection, q.section, q.algebra));
            }
        }
        out
    })
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut acc = f5().zeros(len);
    for b in basis {
        let c = scalar(rng);
        for (x, y) in acc.iter_mut().zip(b) {
            *x += &(&c * y);
        }
    }
    acc
}

/// Random `d × n` matrix killing the unit of `a`.
fn random_r(rng: &mut ChaCha8Rng, a: &Algebra, d: usize) -> Matrix {
    let f = f5();
    let n = a.dim;
    let mut r = Matrix::zeros(f, d, n);
    let i0 = a
        .unit
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero unit");
    let inv = a.unit[i0].inv().unwrap();
    for x in 0..d {
        let mut acc = f.zero();
        for j in (0..n).filter(|&j| j != i0) {
            let c = scalar(rng);
            acc += &(&c * &a.unit[j]);
            r.set(x, j, c);
        }
        r.set(x, i0, -&(&acc * &inv));
    }
    r
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|_| (0..d).map(|_| scalar(rng)).collect())
            .collect();
        let m = Matrix::from_rows(f5(), &rows).unwrap();
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Re-reads `s` in the basis `e_i + R e_i`, `T f_x` of its product, giving an
/// equivalent system with mixed kernel coordinates and shifted cocycle.
fn scramble(rng: &mut ChaCha8Rng, s: &HochschildSystem) -> HochschildSystem {
    let f = f5();
    let (n, d) = (s.algebra.dim, s.v_dim);
    if d == 0 {
        return s.clone();
    }
    let ext = s.build_product().unwrap();
    let r = random_r(rng, &s.algebra, d);
    let t = random_invertible(rng, d);
    let mut p = Matrix::identity(f, n + d);
    for x in 0..d {
        for i in 0..n {
            p.set(n + x, i, r.get(x, i).clone());
        }
        for y in 0..d {
            p.set(n + x, n + y, t.get(x, y).clone());
        }
    }
    let e2 = ext.total.transport(&p, ext.total.basis.clone()).unwrap();
    let sec = canonical_section(&ext);
    extract_system(&e2, &s.algebra, &ext.projection, &sec)
        .unwrap()
        .0
}

/// One seeded system: diagonal with `v_mult = 0` on `dim A ≤ 3, dim V ≤ 2`,
/// one-dimensional of either kind on `dim A ≤ 2`, or an arbitrary
/// two-dimensional kernel on `dim A ≤ 2` cut out of a small algebra.
pub fn random_system(rng: &mut ChaCha8Rng) -> HochschildSystem {
    let f = f5();
    let s = match rng.gen_range(0..3) {
        0 => {
            let a = pick(rng, small_algebras()).clone();
            let chars = gext_core::algebra::characters(&a).unwrap();
            let d = rng.gen_range(1..=2);
            let (mut left, mut right, mut cocycles) = (vec![], vec![], vec![]);
            for _ in 0..d {
                let l = pick(rng, &chars).clone();
                let r = pick(rng, &chars).clone();
                let z = cocycle_space(&a, &l, &r);
                cocycles.push(random_combination(rng, &z.basis, a.dim * a.dim));
                left.push(l);
                right.push(r);
            }
            HochschildSystem::from_characters(&a, &left, &right, &cocycles).unwrap()
        }
        1 => {
            let small: Vec<Algebra> = small_algebras()
                .iter()
                .filter(|a| a.dim <= 2)
                .cloned()
                .collect();
            let a = pick(rng, &small).clone();
            let datum = if rng.gen_bool(0.5) {
                let chars = gext_core::algebra::characters(&a).unwrap();
                let l = pick(rng, &chars).clone();
                let r = pick(rng, &chars).clone();
                let z = cocycle_space(&a, &l, &r);
                CoflagDatum::first(l, r, random_combination(rng, &z.basis, a.dim * a.dim))
            } else {
                // any functional with λ(1) = 1
                let mut l: Vec<Scalar> = (0..a.dim).map(|_| scalar(rng)).collect();
                let i0 = a.unit.iter().position(|c| !c.is_zero()).unwrap();
                let rest = (0..a.dim)
                    .filter(|&j| j != i0)
                    .fold(f.zero(), |acc, j| &acc + &(&l[j] * &a.unit[j]));
                l[i0] = &(&f.one() - &rest) * &a.unit[i0].inv().unwrap();
                CoflagDatum::Second {
                    lambda: l,
                    u: unit(rng),
                }
            };
            hs_from_cf(&a, &datum).unwrap()
        }
        _ => {
            let (e, pi, sec, a) = pick(rng, quotient_pool()).clone();
            let _ = &pi;
            extract_system(&e, &a, &pi, &sec).unwrap().0
        }
    };
    scramble(rng, &s)
}

/// Product validates, extraction along a random section is cohomologous to
/// `s`, and the canonical section splits exactly when the cocycle vanishes.
pub fn check_system(rng: &mut ChaCha8Rng, s: &HochschildSystem) -> Result<(), String> {
    if !s.validate().is_valid() {
        return Err(format!("generated system is invalid: {}", s.validate()));
    }
    let ext = s.build_product().map_err(|e| e.to_string())?;
    if !ext.total.validate().is_valid() {
        return Err("product fails the algebra axioms".into());
    }
    let (n, d) = (s.algebra.dim, s.v_dim);
    let r = random_r(rng, &s.algebra, d);
    let mut sec = canonical_section(&ext);
    for x in 0..d {
        for i in 0..n {
            sec.set(n + x, i, r.get(x, i).clone());
        }
    }
    let (t, _) =
        extract_system(&ext.total, &s.algebra, &ext.projection, &sec).map_err(|e| e.to_string())?;
    if is_cohomologous(s, &t).map_err(|e| e.to_string())?.is_none() {
        return Err("extracted system is not cohomologous to the original".into());
    }
    // the section itself is a witness: (a, x) ↦ (a, r(a) + x) carries t's product onto s's
    let t_total = t.build_product().map_err(|e| e.to_string())?.total;
    if !t_total.is_isomorphism(&ext.total, &psi_matrix(&r)) {
        return Err("the section shift is not an isomorphism of products".into());
    }
    let split = check_split(
        &ext.total,
        &s.algebra,
        &ext.projection,
        &canonical_section(&ext),
    )
    .map_err(|e| e.to_string())?;
    if split.is_some() != s.is_zero_cocycle() {
        return Err(format!(
            "split = {}, zero cocycle = {}",
            split.is_some(),
            s.is_zero_cocycle()
        ));
    }
    Ok(())
}
