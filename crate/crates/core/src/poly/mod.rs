//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` from exponent vectors to nonzero
//! coefficients, so equality, hashing-free iteration and deterministic
//! printing come for free.  All arithmetic is exact.

mod json;
mod parse;

pub use json::{PolyJson, TermJson};
pub use parse::{parse_poly, parse_rat_vec};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::scalar::{big_gcd, big_lcm, format_rat, rat, Rat};

/// A shared, ordered list of variable names defining a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Vars {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Vars(Arc::new(names))
    }

    /// Standard coordinate names: `x, y, z, t, u, v` for n <= 6, else `x1..xn`.
    pub fn standard(n: usize) -> Vars {
        if n <= 6 {
            Vars::new(["x", "y", "z", "t", "u", "v"][..n].iter().copied())
        } else {
            Vars::new((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn joined(&self) -> String {
        self.0.join(", ")
    }

    /// New ring with `extra` prepended (used for elimination tricks).
    pub fn prepend(&self, extra: &[&str]) -> Vars {
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(self.0.iter().cloned());
        Vars(Arc::new(names))
    }
}

pub fn mono_deg(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b / a if a divides b.
pub fn mono_div(b: &[u32], a: &[u32]) -> Option<Vec<u32>> {
    if mono_divides(a, b) {
        Some(b.iter().zip(a).map(|(x, y)| x - y).collect())
    } else {
        None
    }
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Polynomial {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Polynomial {
        Polynomial::constant(vars, rat(1))
    }

    /// The i-th variable as a polynomial.
    pub fn var(vars: &Vars, i: usize) -> Polynomial {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Polynomial::monomial(vars, e, rat(1))
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, coeff: Rat) -> Polynomial {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Polynomial::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.vars.len()])
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomial rings differ: [{}] vs [{}]",
            self.vars.joined(),
            other.vars.joined()
        );
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| mono_deg(e)).max()
    }

    /// Degree if homogeneous (the zero polynomial counts as homogeneous).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| mono_deg(e));
        let Some(d) = it.next() else { return Some(0) };
        if it.all(|d2| d2 == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Leading (exponent, coefficient) with respect to `order`.
    pub fn lead(&self, order: MonomialOrder) -> Option<(&Vec<u32>, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), -k)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = Polynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }

    /// Add `c * m * other` in place (the inner loop of polynomial reduction).
    pub fn add_scaled_shift(&mut self, c: &Rat, m: &[u32], other: &Polynomial) {
        for (e, k) in &other.terms {
            self.add_term(mono_mul(m, e), c * k);
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len(), "evaluation point length mismatch");
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Ring homomorphism sending variable i to `images[i]` (all images in a
    /// common target ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.vars.len(), "substitution image count mismatch");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| Vars::new(Vec::<String>::new()));
        for im in images {
            assert!(im.vars == target, "substitution images live in different rings");
        }
        // cache powers of each image
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                while powers[i].len() <= exp as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][exp as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Reinterpret in a larger ring; `positions[i]` is where old variable `i`
    /// lands in `target`.
    pub fn embed(&self, target: &Vars, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.vars.len());
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &exp) in e.iter().enumerate() {
                ne[positions[i]] += exp;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Positive rational `c` with `self / c` integral and content 1; zero for
    /// the zero polynomial.
    pub fn content(&self) -> Rat {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = big_gcd(&g, &c.numer().abs());
            l = big_lcm(&l, &c.denom().abs());
        }
        if g.is_zero() {
            Rat::zero()
        } else {
            Rat::new(g, l)
        }
    }

    /// self / content, sign-normalized so the degrevlex leading coefficient is
    /// positive.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if let Some((_, lc)) = self.lead(MonomialOrder::DegRevLex) {
            if lc.is_negative() {
                c = -c;
            }
        }
        self.scale(&c.recip())
    }

    /// Exact division: `Some(q)` with `self == q * d`, or `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_same_ring(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::DegRevLex;
        let (dlm, dlc) = d.lead(order).unwrap();
        let dlm = dlm.clone();
        let dlc = dlc.clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((rlm, rlc)) = rem.lead(order) {
            let m = mono_div(rlm, &dlm)?;
            let c = rlc / &dlc;
            quot.add_term(m.clone(), c.clone());
            rem.add_scaled_shift(&(-c), &m, d);
        }
        Some(quot)
    }

    /// Map the polynomial into the ring `target`, matching variables by name.
    /// Fails if a variable with a nonzero exponent is absent from `target`.
    pub fn rename(&self, target: &Vars) -> Result<Polynomial> {
        let mut positions = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index(name) {
                Some(j) => positions.push(j),
                None => {
                    let used = self.terms.keys().any(|e| e[i] > 0);
                    if used {
                        return Err(Error::VarMismatch(self.vars.joined(), target.joined()));
                    }
                    positions.push(usize::MAX);
                }
            }
        }
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    ne[positions[i]] += exp;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Terms sorted descending in `order` (for display and reduction).
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Vec<u32>, Rat)> {
        let mut v: Vec<(Vec<u32>, Rat)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (i, (e, c)) in self.sorted_terms(MonomialOrder::DegRevLex).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = mono_deg(e) == 0;
            if !abs.is_one() || is_const {
                write!(f, "{}", format_rat(&abs))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", names[j])?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
