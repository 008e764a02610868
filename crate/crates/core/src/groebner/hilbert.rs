//! Hilbert series, Hilbert polynomials and the derived projective
//! invariants (dimension, degree, regularity bound) of homogeneous ideals.
//!
//! The Hilbert series of `R/I` equals that of `R/lt(I)`, so everything
//! reduces to a monomial-ideal computation: the series numerator is found by
//! the classical pivot recursion
//! `Num(I) = Num(I + (x)) + t * Num(I : x)`,
//! with the closed product formula at pairwise-coprime leaves.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ideal;
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{mono_deg, mono_div, mono_divides};
use crate::scalar::{format_rat, rat, Rat};

/// Projective invariants of `Proj(R/I)` for a homogeneous ideal `I` in a
/// ring with `n` variables (so the ambient space is `P^(n-1)`).
#[derive(Clone, Debug, PartialEq)]
pub struct SchemeInvariants {
    /// Projective dimension; `-1` for the empty scheme.
    pub dimension: i64,
    /// Degree of the scheme; `0` for the empty scheme.
    pub degree: BigInt,
    /// Hilbert polynomial coefficients, ascending in the degree variable;
    /// empty for the empty scheme.
    pub hilbert_polynomial: Vec<Rat>,
    /// Coefficients of the Hilbert series numerator over `(1-t)^n`.
    pub series_numerator: Vec<BigInt>,
    /// Degree bound from which the Hilbert function agrees with the
    /// polynomial: numerator degree plus one.
    pub regularity_bound: u32,
}

impl SchemeInvariants {
    pub fn hp_eval(&self, m: i64) -> Rat {
        let mut acc = Rat::zero();
        let mut pow = rat(1);
        for c in &self.hilbert_polynomial {
            acc += c * &pow;
            pow *= rat(m);
        }
        acc
    }

    /// Human-readable Hilbert polynomial, e.g. `t^2 + 2*t + 2`.
    pub fn hp_string(&self) -> String {
        if self.hilbert_polynomial.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.hilbert_polynomial.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let piece = if mono.is_empty() {
                format_rat(c)
            } else if c == &rat(1) {
                mono
            } else if c == &rat(-1) {
                format!("-{mono}")
            } else {
                format!("{}*{}", format_rat(c), mono)
            };
            parts.push(piece);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Remove monomials divisible by another generator.
pub fn minimalize_monomials(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut sorted: Vec<Vec<u32>> = gens.to_vec();
    sorted.sort_by_key(|m| mono_deg(m));
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| mono_divides(g, &m)) {
            out.push(m);
        }
    }
    out
}

fn uni_mul_one_minus_power(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p(t) * (1 - t^d)
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim(out)
}

fn uni_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn uni_shift(p: &[BigInt], k: usize) -> Vec<BigInt> {
    if p.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); p.len() + k];
    for (i, c) in p.iter().enumerate() {
        out[i + k] = c.clone();
    }
    out
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn eval_at_one(p: &[BigInt]) -> BigInt {
    p.iter().sum()
}

/// Synthetic division by `(1 - t)`; panics unless `p(1) == 0`.
fn div_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    // p(t) = (1 - t) q(t)  =>  q_i = p_0 + p_1 + .. + p_i
    assert!(eval_at_one(p).is_zero(), "numerator not divisible by (1 - t)");
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        out.push(acc.clone());
    }
    trim(out)
}

/// Numerator of the Hilbert series of `R/I` for the monomial ideal generated
/// by `gens`, written over `(1 - t)^n`.
pub fn series_numerator(gens: &[Vec<u32>]) -> Vec<BigInt> {
    let gens = minimalize_monomials(gens);
    if gens.iter().any(|m| mono_deg(m) == 0) {
        return vec![]; // unit ideal, zero quotient
    }
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let n = gens[0].len();
    // pairwise coprime (disjoint supports): closed formula
    let coprime = {
        let mut support_count = vec![0usize; n];
        for m in &gens {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    support_count[i] += 1;
                }
            }
        }
        let overlap = (0..n).any(|i| support_count[i] > 1);
        if overlap {
            None
        } else {
            Some(())
        }
    };
    if coprime.is_some() {
        let mut num = vec![BigInt::one()];
        for m in &gens {
            num = uni_mul_one_minus_power(&num, mono_deg(m) as usize);
        }
        return num;
    }
    // pivot on the most shared variable
    let pivot_var = (0..n)
        .max_by_key(|&i| gens.iter().filter(|m| m[i] > 0).count())
        .unwrap();
    let mut x = vec![0u32; n];
    x[pivot_var] = 1;
    // I + (x)
    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|m| m[pivot_var] == 0).cloned().collect();
    plus.push(x.clone());
    // I : x
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|m| mono_div(m, &x).unwrap_or_else(|| m.clone()))
        .collect();
    let a = series_numerator(&plus);
    let b = series_numerator(&colon);
    uni_add(&a, &uni_shift(&b, 1))
}

/// Compute the projective invariants of a homogeneous ideal.
pub fn hilbert(ideal: &Ideal) -> Result<SchemeInvariants> {
    for g in ideal.gens() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let n = ideal.vars().len();
    let order = MonomialOrder::DegRevLex;
    let gb = ideal.groebner_basis(order);
    let lms: Vec<Vec<u32>> = gb.iter().map(|g| g.lead(order).unwrap().0.clone()).collect();
    Ok(invariants_from_lms(&lms, n))
}

/// Invariants from the leading monomials of a Groebner basis.
pub fn invariants_from_lms(lms: &[Vec<u32>], n: usize) -> SchemeInvariants {
    let raw = series_numerator(lms);
    let regularity_bound = if raw.is_empty() { 0 } else { raw.len() as u32 };
    let mut k = raw.clone();
    let mut cancels = 0usize;
    while !k.is_empty() && eval_at_one(&k).is_zero() {
        k = div_one_minus_t(&k);
        cancels += 1;
    }
    if k.is_empty() || cancels >= n {
        // zero quotient, or artinian (projectively empty) quotient
        return SchemeInvariants {
            dimension: -1,
            degree: BigInt::zero(),
            hilbert_polynomial: vec![],
            series_numerator: raw,
            regularity_bound,
        };
    }
    let d = n - cancels; // Krull dimension of R/I
    let degree = eval_at_one(&k);
    // HP(T) = sum_j K_j * C(T + d - 1 - j, d - 1)
    let mut hp = vec![Rat::zero(); d];
    for (j, c) in k.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let b = binom_poly((d - 1) as i64 - j as i64, d - 1);
        let cr = Rat::from_integer(c.clone());
        for (i, bc) in b.iter().enumerate() {
            hp[i] += &cr * bc;
        }
    }
    SchemeInvariants {
        dimension: d as i64 - 1,
        degree,
        hilbert_polynomial: hp,
        series_numerator: raw,
        regularity_bound,
    }
}

/// Coefficients (ascending) of `C(T + a, k)` as a polynomial in `T`.
fn binom_poly(a: i64, k: usize) -> Vec<Rat> {
    // product of (T + a - i) for i in 0..k, divided by k!
    let mut coeffs = vec![rat(1)];
    for i in 0..k as i64 {
        let c = rat(a - i);
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (j, old) in coeffs.iter().enumerate() {
            next[j + 1] += old;
            next[j] += old * &c;
        }
        coeffs = next;
    }
    let mut fact = rat(1);
    for i in 1..=k as i64 {
        fact *= rat(i);
    }
    coeffs.into_iter().map(|c| c / &fact).collect()
}

/// Direct count of degree-`m` standard monomials (those outside the monomial
/// ideal).  Exponential in nature; used as an independent oracle in tests.
pub fn hilbert_function_direct(lms: &[Vec<u32>], n: usize, m: u32) -> u64 {
    fn rec(lms: &[Vec<u32>], current: &mut Vec<u32>, pos: usize, remaining: u32, count: &mut u64) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            if !lms.iter().any(|g| mono_divides(g, current)) {
                *count += 1;
            }
            current[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            current[pos] = e;
            rec(lms, current, pos + 1, remaining - e, count);
        }
        current[pos] = 0;
    }
    if n == 0 {
        return u64::from(m == 0);
    }
    let mut count = 0;
    let mut current = vec![0u32; n];
    rec(lms, &mut current, 0, m, &mut count);
    count
}
