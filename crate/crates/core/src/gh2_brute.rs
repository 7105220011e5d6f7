//! Naive `GH²(A, V)` over F_p: enumerate every tensor quadruple, keep the
//! systems, and sort them into cohomology classes. Used as an oracle.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::hochschild::{is_cohomologous, HochschildSystem};
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct BruteClass {
    /// Least member in signed-residue order.
    pub representative: HochschildSystem,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Stratum {
    pub v_mult: Vec<i64>,
    /// `(act_left, act_right)` when `v_mult = 0`, one entry per bimodule.
    pub bimodules: Vec<(Vec<i64>, Vec<i64>, usize)>,
    pub classes: usize,
}

#[derive(Clone, Debug)]
pub struct BruteReport {
    pub systems: usize,
    pub classes: Vec<BruteClass>,
    pub strata: Vec<Stratum>,
}

fn signed(v: &[Scalar]) -> Vec<i64> {
    v.iter().map(|s| s.signed().expect("F_p")).collect()
}

fn key(s: &HochschildSystem) -> Vec<(i64, i64)> {
    [&s.v_mult, &s.act_left, &s.act_right, &s.cocycle]
        .iter()
        .flat_map(|t| t.iter().map(Scalar::signed_key))
        .collect()
}

pub fn gh2_enumerate(a: &Algebra, v_dim: usize, budget: u64) -> Result<BruteReport> {
    let field = a.field;
    let elements = field
        .elements()
        .ok_or(Error::FiniteFieldRequired("brute-force GH²"))?;
    a.validate().into_result("algebra")?;
    let (n, d) = (a.dim, v_dim);
    let lens = [n * d * d, d * n * d, n * n * d, d * d * d];
    let total_len: usize = lens.iter().sum();
    let p = elements.len() as u64;
    let count = p
        .checked_pow(total_len as u32)
        .filter(|&c| c <= budget)
        .ok_or(Error::BudgetExceeded {
            what: "brute-force GH² enumeration",
            needed: format!("{p}^{total_len}"),
            budget,
        })?;
    let mut systems = Vec::new();
    let mut digits = vec![0usize; total_len];
    for _ in 0..count {
        let vals: Vec<Scalar> = digits.iter().map(|&i| elements[i].clone()).collect();
        let (l, rest) = vals.split_at(lens[0]);
        let (r, rest) = rest.split_at(lens[1]);
        let (c, m) = rest.split_at(lens[2]);
        let s =
            HochschildSystem::data(a.clone(), d, l.to_vec(), r.to_vec(), c.to_vec(), m.to_vec())?;
        if s.validate().is_valid() {
            systems.push(s);
        }
        for x in digits.iter_mut() {
            *x += 1;
            if *x < elements.len() {
                break;
            }
            *x = 0;
        }
    }
    let mut classes: Vec<BruteClass> = Vec::new();
    for s in &systems {
        let mut found = None;
        for (i, c) in classes.iter().enumerate() {
            if is_cohomologous(&c.representative, s)?.is_some() {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                classes[i].size += 1;
                if key(s) < key(&classes[i].representative) {
                    classes[i].representative = s.clone();
                }
            }
            None => classes.push(BruteClass {
                representative: s.clone(),
                size: 1,
            }),
        }
    }
    classes.sort_by_key(|c| key(&c.representative));
    let mut by_mult: BTreeMap<Vec<i64>, Vec<&BruteClass>> = BTreeMap::new();
    for c in &classes {
        by_mult
            .entry(signed(&c.representative.v_mult))
            .or_default()
            .push(c);
    }
    let strata = by_mult
        .into_iter()
        .map(|(v_mult, cs)| {
            let mut bimodules: BTreeMap<(Vec<i64>, Vec<i64>), usize> = BTreeMap::new();
            if v_mult.iter().all(|&x| x == 0) {
                for c in &cs {
                    let r = &c.representative;
                    *bimodules
                        .entry((signed(&r.act_left), signed(&r.act_right)))
                        .or_default() += 1;
                }
            }
            Stratum {
                v_mult,
                bimodules: bimodules.into_iter().map(|((l, r), k)| (l, r, k)).collect(),
                classes: cs.len(),
            }
        })
        .collect();
    Ok(BruteReport {
        systems: systems.len(),
        classes,
        strata,
    })
}
