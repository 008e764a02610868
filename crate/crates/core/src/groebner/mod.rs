//! Groebner bases over the rationals: Buchberger's algorithm with the
//! coprimality and chain criteria, normal-form reduction, elimination,
//! ideal intersection, quotients and saturation.

pub mod hilbert;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{
    mono_div, mono_divides, mono_lcm, mono_mul, parse_poly, PolyJson, Polynomial, Vars,
};
use crate::scalar::Rat;

/// A polynomial ideal given by generators in a fixed ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    vars: Vars,
    gens: Vec<Polynomial>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<PolyJson>,
}

impl Ideal {
    pub fn new(vars: &Vars, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(g.vars() == vars, "generator lives in a different ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { vars: vars.clone(), gens }
    }

    pub fn from_strings(vars: &Vars, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| parse_poly(s, vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(vars, gens))
    }

    pub fn unit(vars: &Vars) -> Ideal {
        Ideal::new(vars, vec![Polynomial::one(vars)])
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            vars: self.vars.names().to_vec(),
            gens: self.gens.iter().map(PolyJson::from_poly).collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Ideal> {
        let vars = Vars::new(j.vars.iter().cloned());
        let mut gens = Vec::with_capacity(j.gens.len());
        for pj in &j.gens {
            let p = pj.to_poly()?;
            if p.vars() != &vars {
                return Err(Error::VarMismatch(p.vars().joined(), vars.joined()));
            }
            gens.push(p);
        }
        Ok(Ideal::new(&vars, gens))
    }

    /// The unique reduced Groebner basis for `order`, sorted ascending by
    /// leading monomial.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Vec<Polynomial> {
        buchberger(&self.gens, order)
    }

    pub fn contains(&self, p: &Polynomial, order: MonomialOrder) -> bool {
        let gb = self.groebner_basis(order);
        normal_form(p, &gb, order).is_zero()
    }

    /// Ideal equality via reduced Groebner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.vars == other.vars
            && self.groebner_basis(MonomialOrder::DegRevLex)
                == other.groebner_basis(MonomialOrder::DegRevLex)
    }
}

/// Full normal form of `p` modulo `basis`: every term of the result is
/// reducible by no leading monomial of the basis.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let vars = p.vars();
    let leads: Vec<(Vec<u32>, Rat, &Polynomial)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.lead(order).unwrap();
            (m.clone(), c.clone(), g)
        })
        .collect();
    let mut rem = p.clone();
    let mut out = Polynomial::zero(vars);
    'outer: while let Some((lm, lc)) = rem.lead(order).map(|(m, c)| (m.clone(), c.clone())) {
        for (gm, gc, g) in &leads {
            if let Some(q) = mono_div(&lm, gm) {
                let c = -(&lc / gc);
                rem.add_scaled_shift(&c, &q, g);
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the output
        out = out.add(&Polynomial::monomial(vars, lm.clone(), lc.clone()));
        rem = rem.sub(&Polynomial::monomial(vars, lm, lc));
    }
    out
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.lead(order).unwrap();
    let (gm, gc) = g.lead(order).unwrap();
    let l = mono_lcm(fm, gm);
    let mf = mono_div(&l, fm).unwrap();
    let mg = mono_div(&l, gm).unwrap();
    let mut s = Polynomial::zero(f.vars());
    s.add_scaled_shift(&fc.recip(), &mf, f);
    s.add_scaled_shift(&(-gc.recip()), &mg, g);
    s
}

/// Buchberger's algorithm returning the reduced Groebner basis.
///
/// Pair selection is the normal strategy (smallest lcm in the term order);
/// pairs are discarded by the coprimality criterion and by the chain
/// criterion before any S-polynomial is reduced.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return vec![];
    }
    let lm = |f: &Polynomial| f.lead(order).unwrap().0.clone();
    let mut lms: Vec<Vec<u32>> = basis.iter().map(|f| lm(f)).collect();

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal selection: smallest pair lcm in the term order
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                order.cmp(&mono_lcm(&lms[a], &lms[b]), &mono_lcm(&lms[c], &lms[d]))
            })
            .unwrap();
        pending.remove(&(i, j));
        let l = mono_lcm(&lms[i], &lms[j]);

        // coprimality criterion
        if l == mono_mul(&lms[i], &lms[j]) {
            continue;
        }
        // chain criterion: some k with lm_k | lcm and both side pairs settled
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && mono_divides(&lms[k], &l)
                && !pending.contains(&sorted_pair(i, k))
                && !pending.contains(&sorted_pair(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let new = basis.len();
            lms.push(lm(&r));
            basis.push(r);
            for k in 0..new {
                pending.insert((k, new));
            }
        }
    }

    reduce_basis(basis, order)
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalize and autoreduce a Groebner basis; output is monic and sorted
/// ascending by leading monomial, hence canonical for the ideal and order.
fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    // minimal generators of the leading-term ideal
    let lms: Vec<Vec<u32>> = basis.iter().map(|f| f.lead(order).unwrap().0.clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && mono_divides(&lms[j], &lms[i])
                    && (lms[j] != lms[i] || j < i)
            })
        })
        .collect();
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| if k { Some(f) } else { None })
        .collect();

    // autoreduce: replace each element by its normal form modulo the others
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter_map(|(j, f)| if j != i { Some(f.clone()) } else { None })
                .collect();
            let r = normal_form(&basis[i], &others, order);
            if r != basis[i] {
                changed = true;
                basis[i] = r;
            }
        }
        basis.retain(|f| !f.is_zero());
        if !changed {
            break;
        }
    }

    for f in basis.iter_mut() {
        let lc = f.lead(order).unwrap().1.clone();
        *f = f.scale(&lc.recip());
    }
    basis.sort_by(|a, b| order.cmp(a.lead(order).unwrap().0, b.lead(order).unwrap().0));
    basis
}

/// Generators of the elimination ideal `I ∩ k[x_k, ..]` (drop the first `k`
/// variables), expressed in the smaller ring.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    let gb = ideal.groebner_basis(MonomialOrder::Elim(k));
    let small = Vars::new(ideal.vars().names()[k..].iter().cloned());
    let mut gens = Vec::new();
    for g in gb {
        let uses_head = g.terms().any(|(e, _)| e[..k].iter().any(|&x| x > 0));
        if !uses_head {
            gens.push(g.rename(&small)?);
        }
    }
    Ok(Ideal::new(&small, gens))
}

fn fresh_var_name(vars: &Vars) -> String {
    let mut name = "t0".to_string();
    let mut i = 0;
    while vars.index(&name).is_some() {
        i += 1;
        name = format!("t{i}");
    }
    name
}

/// Ideal intersection via the elimination trick
/// `I ∩ J = (t·I + (1-t)·J) ∩ k[x]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.vars() != b.vars() {
        return Err(Error::VarMismatch(a.vars().joined(), b.vars().joined()));
    }
    let vars = a.vars();
    let tname = fresh_var_name(vars);
    let big = vars.prepend(&[&tname]);
    let positions: Vec<usize> = (1..=vars.len()).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub(&t);
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(t.mul(&f.embed(&big, &positions)));
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.embed(&big, &positions)));
    }
    let mixed = Ideal::new(&big, gens);
    let elim = eliminate(&mixed, 1)?;
    // eliminate() returns generators in a ring with the same names; rebuild
    // on the caller's Vars handle for pointer-equality friendliness
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.rename(vars))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(vars, gens))
}

/// Ideal quotient `(I : f)` for a single polynomial, computed from
/// `I ∩ (f) = f · (I : f)`.
pub fn quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        // (I : 0) is the whole ring
        return Ok(Ideal::unit(ideal.vars()));
    }
    if f.vars() != ideal.vars() {
        return Err(Error::VarMismatch(f.vars().joined(), ideal.vars().joined()));
    }
    let pf = Ideal::new(ideal.vars(), vec![f.clone()]);
    let inter = intersect(ideal, &pf)?;
    let mut gens = Vec::new();
    for g in inter.gens() {
        let q = g
            .div_exact(f)
            .ok_or_else(|| Error::math("quotient witness not divisible by f"))?;
        gens.push(q);
    }
    Ok(Ideal::new(ideal.vars(), gens))
}

/// Ideal quotient `(I : J)` as the intersection of single-generator quotients.
pub fn quotient_ideal(ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    if j.is_zero_ideal() {
        return Ok(Ideal::unit(ideal.vars()));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.gens() {
        let q = quotient(ideal, f)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    Ok(acc.unwrap())
}

/// How many quotient rounds saturation may take before giving up.
pub const SATURATION_ROUND_CAP: usize = 50;

/// Saturation `(I : J^∞)`, by iterating `I ← (I : J)` until the reduced
/// Groebner basis stabilizes.  Returns the saturated ideal and the number of
/// rounds taken.
pub fn saturate(ideal: &Ideal, j: &Ideal) -> Result<(Ideal, usize)> {
    if ideal.is_zero_ideal() {
        return Ok((ideal.clone(), 0));
    }
    let order = MonomialOrder::DegRevLex;
    let mut current = Ideal::new(ideal.vars(), ideal.groebner_basis(order));
    for round in 0..SATURATION_ROUND_CAP {
        let next = quotient_ideal(&current, j)?;
        let next = Ideal::new(ideal.vars(), next.groebner_basis(order));
        if next.gens() == current.gens() {
            return Ok((current, round));
        }
        current = next;
    }
    Err(Error::SaturationDiverged(SATURATION_ROUND_CAP))
}
