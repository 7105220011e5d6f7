//! Named algebras, coalgebras and Poisson algebras.
//!
//! Catalog names (CLI identifiers): `field`, `matrix:N`, `upper-triangular:N`,
//! `cyclic-group:N`, `dual-numbers`, `heisenberg-poisson`, `coflag3:I`
//! (I = 1..6), `a21-dual`, `t2-table:I` (I = 1..7), `heisenberg-table:NAME`
//! (p1, p2, p3, p4:W, p5:W, product). Algebra names may be joined with `*`
//! for direct products, e.g. `matrix:2*field`.

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// Anything the catalog can produce.
#[derive(Clone, Debug)]
pub enum Entry {
    Algebra(Algebra),
    Poisson(PoissonAlgebra),
    Coalgebra(Coalgebra),
}

fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

/// The one-dimensional algebra `k`.
pub fn field_algebra(field: Field) -> Algebra {
    let mut a = Algebra::from_table(field, &["1"], &[1], &[(0, 0, 0, 1)]).expect("k is valid");
    a.characters = Some(vec![vec![field.one()]]);
    a.automorphisms = Some(vec![Matrix::identity(field, 1)]);
    a
}

/// `k^n` with orthogonal idempotents; its automorphisms are the permutations.
pub fn split_semisimple(n: usize, field: Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let entries: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
    let mut a = Algebra::from_table(field, &refs, &vec![1; n], &entries)?;
    a.characters = Some((0..n).rev().map(|i| field.unit_vector(n, i)).collect());
    if n <= 4 {
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        a.automorphisms = Some(
            perms
                .into_iter()
                .map(|p| {
                    let cols: Vec<Vec<Scalar>> =
                        p.iter().map(|&i| field.unit_vector(n, i)).collect();
                    Matrix::from_columns(field, n, &cols)
                })
                .collect(),
        );
    }
    Ok(a)
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// `M_n(k)` on matrix units `e_ij`, indexed `i*n + j`.
pub fn matrix(n: usize, field: Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let labels: Vec<String> = (0..n * n)
        .map(|k| format!("e{}{}", k / n + 1, k % n + 1))
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, 1));
            }
        }
    }
    let unit: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
    let mut a = Algebra::from_table(field, &refs, &unit, &entries)?;
    if n >= 2 {
        a.characters = Some(vec![]);
    } else {
        a.characters = Some(vec![vec![field.one()]]);
    }
    Ok(a)
}

/// Index pairs `(i, j)`, `i ≤ j`, in row-major order.
pub fn triangular_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// `T_n(k)`, upper triangular matrices, basis `e_ij` (`i ≤ j`) row-major.
pub fn upper_triangular(n: usize, field: Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let idx = triangular_index(n);
    let pos = |i: usize, j: usize| idx.iter().position(|&x| x == (i, j)).expect("upper index");
    let labels: Vec<String> = idx
        .iter()
        .map(|(i, j)| format!("e{}{}", i + 1, j + 1))
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut entries = Vec::new();
    for &(i, j) in &idx {
        for l in j..n {
            entries.push((pos(i, j), pos(j, l), pos(i, l), 1));
        }
    }
    let unit: Vec<i64> = idx.iter().map(|(i, j)| i64::from(i == j)).collect();
    let mut a = Algebra::from_table(field, &refs, &unit, &entries)?;
    let d = idx.len();
    a.characters = Some((0..n).map(|v| field.unit_vector(d, pos(v, v))).collect());
    Ok(a)
}

/// The group algebra `k[C_n]` on `1, d, …, d^(n-1)`; `n` must be invertible.
pub fn cyclic_group(n: usize, field: Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    if let Some(p) = field.modulus() {
        if n % p as usize == 0 {
            return Err(Error::InvalidParams(format!(
                "C_{n} needs {n} invertible, but char = {p}"
            )));
        }
    }
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "d".to_string(),
            _ => format!("d^{i}"),
        })
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            entries.push((i, j, (i + j) % n, 1));
        }
    }
    let mut unit = vec![0i64; n];
    unit[0] = 1;
    let mut a = Algebra::from_table(field, &refs, &unit, &entries)?;
    // characters d ↦ ζ with ζ^n = 1; over Q only ±1 can occur
    let roots: Vec<Scalar> = match field.elements() {
        Some(els) => els
            .into_iter()
            .filter(|z| z.pow(n as u64).is_one())
            .collect(),
        None => {
            let mut r = vec![field.one()];
            if n % 2 == 0 {
                r.push(field.from_i64(-1));
            }
            r
        }
    };
    a.characters = Some(
        roots
            .iter()
            .map(|z| (0..n).map(|i| z.pow(i as u64)).collect())
            .collect(),
    );
    if n == 2 && field.characteristic() != 2 {
        a.automorphisms = Some(vec![
            Matrix::identity(field, 2),
            Matrix::from_i64(field, &[&[1, 0], &[0, -1]]),
        ]);
    } else if n == 1 {
        a.automorphisms = Some(vec![Matrix::identity(field, 1)]);
    }
    Ok(a)
}

/// `k[X]/(X²)` on `1, x`.
pub fn dual_numbers(field: Field) -> Algebra {
    let mut a = Algebra::from_table(
        field,
        &["1", "x"],
        &[1, 0],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
    )
    .expect("dual numbers are valid");
    a.characters = Some(vec![ints(field, &[1, 0])]);
    a
}

/// The six three-dimensional co-flag algebras, `index` 1..=6, in the order
/// k³; k[X,Y]/(X²−1,Y²,XY−Y); k⟨x,y | x²=1, y²=0, xy=−yx=y⟩;
/// k[X,Y]/(X²,Y²,XY); k[X,Y]/(X²−Y,Y²,XY); k[X,Y]/(X²,Y²−Y,XY).
/// Entries 2..6 use the basis `1, x, y`.
pub fn coflag3(index: usize, field: Field) -> Result<Algebra> {
    if index == 1 {
        return split_semisimple(3, field);
    }
    let unital = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (1, 0, 1, 1),
        (0, 2, 2, 1),
        (2, 0, 2, 1),
    ];
    let (extra, chars): (Vec<(usize, usize, usize, i64)>, Vec<Vec<i64>>) = match index {
        2 => (
            vec![(1, 1, 0, 1), (1, 2, 2, 1), (2, 1, 2, 1)],
            vec![vec![1, 1, 0], vec![1, -1, 0]],
        ),
        3 => (
            vec![(1, 1, 0, 1), (1, 2, 2, 1), (2, 1, 2, -1)],
            vec![vec![1, 1, 0], vec![1, -1, 0]],
        ),
        4 => (vec![], vec![vec![1, 0, 0]]),
        5 => (vec![(1, 1, 2, 1)], vec![vec![1, 0, 0]]),
        6 => (vec![(2, 2, 2, 1)], vec![vec![1, 0, 0], vec![1, 0, 1]]),
        _ => {
            return Err(Error::InvalidParams(format!(
                "coflag3 index {index} is not in 1..=6"
            )))
        }
    };
    let entries: Vec<_> = unital.iter().copied().chain(extra).collect();
    let mut a = Algebra::from_table(field, &["1", "x", "y"], &[1, 0, 0], &entries)?;
    let mut cs: Vec<Vec<Scalar>> = chars.iter().map(|c| ints(field, c)).collect();
    cs.sort();
    cs.dedup();
    a.characters = Some(cs);
    Ok(a)
}

/// Products of `T_2` shared by all the 4-dimensional tables below, on the
/// basis `e11, e12, e22, f`.
const T2_PRODUCTS: [(usize, usize, usize, i64); 4] =
    [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)];

fn t2_extension(
    field: Field,
    extra: &[(usize, usize, usize, i64)],
    replace: bool,
) -> Result<Algebra> {
    let n = 4;
    let mut mult = field.zeros(n * n * n);
    let base: &[(usize, usize, usize, i64)] = if replace { &[] } else { &T2_PRODUCTS };
    for &(i, j, k, c) in base.iter().chain(extra) {
        mult[(i * n + j) * n + k] += &field.from_i64(c);
    }
    Algebra::unchecked(
        field,
        vec!["e11".into(), "e12".into(), "e22".into(), "f".into()],
        ints(field, &[1, 0, 1, 0]),
        mult,
    )
}

/// The seven printed 4-dimensional multiplication tables over `T_2`
/// (basis `e11, e12, e22, f`), transcribed literally. Returned without
/// validation: some of them are not unital or not associative as printed.
pub fn t2_table(index: usize, field: Field) -> Result<Algebra> {
    const F: usize = 3;
    let extra: Vec<(usize, usize, usize, i64)> = match index {
        1 => vec![(0, F, F, 1), (F, 0, F, 1)],
        2 => vec![(2, F, F, 1), (F, 2, F, 1)],
        3 => vec![
            (0, 0, F, -1),
            (0, 2, F, 1),
            (2, 0, F, -1),
            (2, 2, F, -1),
            (2, F, F, 1),
            (F, 2, F, 1),
        ],
        4 => vec![(0, F, F, 1), (F, 2, F, 1)],
        5 => vec![
            (0, 1, F, -1),
            (0, F, F, 1),
            (1, 0, F, 1),
            (1, 2, F, -1),
            (2, 1, F, 1),
            (F, 2, F, 1),
        ],
        6 => vec![(2, F, F, 1), (F, 0, F, 1)],
        7 => vec![(0, 1, F, 1), (2, F, F, 1), (F, 0, F, 1)],
        _ => {
            return Err(Error::InvalidParams(format!(
                "t2-table index {index} is not in 1..=7"
            )))
        }
    };
    t2_extension(field, &extra, false)
}

/// `H(3, k)`: `T_2(k)` with the commutator bracket.
pub fn heisenberg_poisson(field: Field) -> Result<PoissonAlgebra> {
    let t2 = upper_triangular(2, field)?;
    PoissonAlgebra::commutator(&t2, &field.one())
}

/// Printed 4-dimensional Poisson tables over `H(3, k)` on `e11, e12, e22, f`:
/// `p1`, `p2`, `p3`, `p4:W`, `p5:W` (W an integer parameter) and `product`.
/// Returned without validation.
pub fn heisenberg_table(name: &str, field: Field) -> Result<PoissonAlgebra> {
    const F: usize = 3;
    let (kind, param) = match name.split_once(':') {
        Some((k, w)) => {
            let w: i64 = w
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad parameter in `{name}`")))?;
            (k, w)
        }
        None => (name, 0),
    };
    let (mult_extra, bracket_extra): (Vec<_>, Vec<(usize, usize, i64)>) = match kind {
        "p1" => (vec![(0, F, F, 1), (F, 0, F, 1)], vec![]),
        "p2" => (vec![(2, F, F, 1), (F, 2, F, 1)], vec![]),
        "p3" => (
            vec![
                (0, 1, F, -1),
                (1, 0, F, 1),
                (1, 2, F, -1),
                (2, 1, F, 1),
                (0, F, F, 1),
                (F, 2, F, 1),
            ],
            vec![(0, 1), (2, -1)]
                .into_iter()
                .map(|(i, c)| (i, F, c))
                .collect(),
        ),
        "p4" => (
            vec![(0, F, F, 1), (F, 2, F, 1)],
            vec![(0, F, param), (2, F, -param)],
        ),
        "p5" => (
            vec![(2, F, F, 1), (F, 0, F, 1)],
            vec![(0, F, param), (2, F, -param)],
        ),
        "product" => (vec![(F, F, F, 1)], vec![]),
        _ => return Err(Error::UnknownCatalog(format!("heisenberg-table:{name}"))),
    };
    let mut alg = t2_extension(field, &mult_extra, false)?;
    if kind == "product" {
        alg.unit = ints(field, &[1, 0, 1, 1]);
    }
    let n = 4;
    let mut bracket = field.zeros(n * n * n);
    // commutator part of T_2: {e11,e12} = e12, {e12,e22} = e12
    let mut put = |i: usize, j: usize, k: usize, c: i64| {
        bracket[(i * n + j) * n + k] += &field.from_i64(c);
        bracket[(j * n + i) * n + k] -= &field.from_i64(c);
    };
    put(0, 1, 1, 1);
    put(1, 2, 1, 1);
    for (i, j, c) in bracket_extra {
        put(i, j, F, c);
    }
    Ok(PoissonAlgebra {
        algebra: alg,
        bracket,
    })
}

/// Parses a catalog spec; `params` supplies `n`/`index` when the name has no
/// `:` suffix.
pub fn lookup(spec: &str, field: Field, params: Option<usize>) -> Result<Entry> {
    if spec.contains('*') {
        let mut acc: Option<Algebra> = None;
        for part in spec.split('*') {
            let Entry::Algebra(a) = lookup(part.trim(), field, params)? else {
                return Err(Error::InvalidParams(format!(
                    "`{part}` is not an algebra; products need algebras"
                )));
            };
            acc = Some(match acc {
                None => a,
                Some(prev) => prev.direct_product(&a)?,
            });
        }
        return Ok(Entry::Algebra(acc.expect("nonempty product")));
    }
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let num = || -> Result<usize> {
        match arg {
            Some(a) => a
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad parameter in `{spec}`"))),
            None => params.ok_or_else(|| {
                Error::InvalidParams(format!("`{name}` needs a parameter (e.g. {name}:2)"))
            }),
        }
    };
    Ok(match name {
        "field" | "k" => Entry::Algebra(field_algebra(field)),
        "split" => Entry::Algebra(split_semisimple(num()?, field)?),
        "matrix" => Entry::Algebra(matrix(num()?, field)?),
        "upper-triangular" => Entry::Algebra(upper_triangular(num()?, field)?),
        "cyclic-group" => Entry::Algebra(cyclic_group(num()?, field)?),
        "dual-numbers" => Entry::Algebra(dual_numbers(field)),
        "coflag3" => Entry::Algebra(coflag3(num()?, field)?),
        "t2-table" => Entry::Algebra(t2_table(num()?, field)?),
        "heisenberg-poisson" => Entry::Poisson(heisenberg_poisson(field)?),
        "heisenberg-table" => {
            let rest =
                arg.ok_or_else(|| Error::InvalidParams("heisenberg-table needs a name".into()))?;
            Entry::Poisson(heisenberg_table(rest, field)?)
        }
        "a21-dual" => Entry::Coalgebra(crate::coalgebra::a21_dual(field)?),
        _ => return Err(Error::UnknownCatalog(spec.to_string())),
    })
}
