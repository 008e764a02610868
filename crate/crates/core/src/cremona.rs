//! Homogeneous rational self-maps of projective space: composition,
//! involution checking, base schemes and multidegrees.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::hilbert::{hilbert, SchemeInvariants};
use crate::groebner::{saturate, Ideal};
use crate::linalg::QMatrix;
use crate::poly::{PolyJson, Polynomial, Vars};
use crate::rng::SplitMix64;
use crate::scalar::rat;

/// A rational map `P^(n-1) -> P^(n-1)` given by `n` homogeneous forms of a
/// common degree.  Components are kept exactly as supplied; any common
/// factor they share is semantically irrelevant and handled where needed.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    vars: Vars,
    components: Vec<Polynomial>,
    degree: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MapJson {
    pub n: usize,
    pub degree: u32,
    pub components: Vec<PolyJson>,
}

impl RationalMap {
    pub fn new(vars: &Vars, components: Vec<Polynomial>) -> Result<RationalMap> {
        if components.len() != vars.len() {
            return Err(Error::structural(format!(
                "a self-map of P^{} needs {} components, got {}",
                vars.len() - 1,
                vars.len(),
                components.len()
            )));
        }
        for c in &components {
            if c.vars() != vars {
                return Err(Error::VarMismatch(c.vars().joined(), vars.joined()));
            }
        }
        let mut degree: Option<u32> = None;
        for c in &components {
            match c.homogeneous_degree() {
                None => return Err(Error::NotHomogeneous(c.to_string())),
                Some(_) if c.is_zero() => {}
                Some(d) => match degree {
                    None => degree = Some(d),
                    Some(d0) if d0 == d => {}
                    Some(d0) => {
                        return Err(Error::structural(format!(
                            "components of mixed degrees {d0} and {d}"
                        )))
                    }
                },
            }
        }
        let degree = degree.ok_or_else(|| Error::structural("all components are zero"))?;
        Ok(RationalMap { vars: vars.clone(), components, degree })
    }

    pub fn from_strings(vars: &Vars, comps: &[&str]) -> Result<RationalMap> {
        let components = comps
            .iter()
            .map(|s| crate::poly::parse_poly(s, vars))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(vars, components)
    }

    pub fn identity(vars: &Vars) -> RationalMap {
        let components = (0..vars.len()).map(|i| Polynomial::var(vars, i)).collect();
        RationalMap { vars: vars.clone(), components, degree: 1 }
    }

    /// The linear map given by an invertible matrix (acting on coordinates).
    pub fn linear(vars: &Vars, m: &QMatrix) -> Result<RationalMap> {
        if m.rows != vars.len() || m.cols != vars.len() {
            return Err(Error::structural("linear map matrix has wrong shape"));
        }
        if m.inverse().is_none() {
            return Err(Error::structural("linear map matrix is singular"));
        }
        let components = (0..vars.len())
            .map(|i| {
                let mut p = Polynomial::zero(vars);
                for j in 0..vars.len() {
                    p = p.add(&Polynomial::var(vars, j).scale(&m[(i, j)]));
                }
                p
            })
            .collect();
        RationalMap::new(vars, components)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.vars.len() - 1
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            n: self.ambient_dim(),
            degree: self.degree,
            components: self.components.iter().map(PolyJson::from_poly).collect(),
        }
    }

    pub fn from_json(j: &MapJson) -> Result<RationalMap> {
        let comps = j
            .components
            .iter()
            .map(|p| p.to_poly())
            .collect::<Result<Vec<_>>>()?;
        let vars = comps
            .first()
            .map(|p| p.vars().clone())
            .ok_or_else(|| Error::structural("map with no components"))?;
        let map = RationalMap::new(&vars, comps)?;
        if map.ambient_dim() != j.n {
            return Err(Error::structural(format!(
                "declared ambient P^{} but components live on P^{}",
                j.n,
                map.ambient_dim()
            )));
        }
        if map.degree != j.degree {
            return Err(Error::structural(format!(
                "declared degree {} but components have degree {}",
                j.degree, map.degree
            )));
        }
        Ok(map)
    }
}

/// `f ∘ g`, by substituting the components of `g` into those of `f`.
pub fn compose(f: &RationalMap, g: &RationalMap) -> Result<RationalMap> {
    if f.vars != g.vars {
        return Err(Error::VarMismatch(f.vars.joined(), g.vars.joined()));
    }
    let components: Vec<Polynomial> = f
        .components
        .iter()
        .map(|c| c.substitute(&g.components))
        .collect();
    RationalMap::new(&f.vars, components)
}

/// Verify `f ∘ f = c · id` for a single homogeneous form `c` and return `c`.
///
/// Only monomial divisions are needed: the candidate is read off as
/// `(f∘f)_i / x_i` for the first usable component, then checked everywhere.
pub fn check_involution(f: &RationalMap) -> Result<Polynomial> {
    let ff = compose(f, f)?;
    scaling_factor(&ff)
}

/// Verify `g ∘ f = c · id` and `f ∘ g = c' · id`; returns `c` (from `g∘f`).
pub fn verify_inverse(f: &RationalMap, g: &RationalMap) -> Result<Polynomial> {
    let gf = compose(g, f)?;
    let c = scaling_factor(&gf).map_err(|e| match e {
        Error::NotInvolution { component } => Error::NotInverse { component },
        other => other,
    })?;
    let fg = compose(f, g)?;
    scaling_factor(&fg).map_err(|e| match e {
        Error::NotInvolution { component } => Error::NotInverse { component },
        other => other,
    })?;
    Ok(c)
}

/// If `h = c · id` componentwise, return `c`.
fn scaling_factor(h: &RationalMap) -> Result<Polynomial> {
    let vars = &h.vars;
    let mut c: Option<Polynomial> = None;
    for (i, comp) in h.components.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        let xi = Polynomial::var(vars, i);
        let q = comp
            .div_exact(&xi)
            .ok_or(Error::NotInvolution { component: i })?;
        match &c {
            None => c = Some(q),
            Some(c0) if *c0 == q => {}
            Some(_) => return Err(Error::NotInvolution { component: i }),
        }
    }
    let c = c.ok_or_else(|| Error::math("composition is identically zero"))?;
    // zero components must stay zero only if c is zero, which it is not
    for (i, comp) in h.components.iter().enumerate() {
        if comp.is_zero() {
            return Err(Error::NotInvolution { component: i });
        }
    }
    Ok(c)
}

/// Conjugate `f` by the linear change of coordinates `m`:
/// returns `m^-1 ∘ f ∘ m`.
pub fn conjugate(f: &RationalMap, m: &QMatrix) -> Result<RationalMap> {
    let inv = m
        .inverse()
        .ok_or_else(|| Error::structural("conjugating matrix is singular"))?;
    let ell = RationalMap::linear(&f.vars, m)?;
    let fm = compose(f, &ell)?;
    let components: Vec<Polynomial> = (0..f.vars.len())
        .map(|i| {
            let mut p = Polynomial::zero(&f.vars);
            for j in 0..f.vars.len() {
                if !inv[(i, j)].is_zero() {
                    p = p.add(&fm.components[j].scale(&inv[(i, j)]));
                }
            }
            p
        })
        .collect();
    RationalMap::new(&f.vars, components)
}

/// The ideal generated by the components (scheme-theoretic base locus,
/// before saturation).
pub fn base_ideal(f: &RationalMap) -> Ideal {
    Ideal::new(&f.vars, f.components.clone())
}

/// Base ideal saturated by the irrelevant maximal ideal.
pub fn saturated_base_ideal(f: &RationalMap) -> Result<Ideal> {
    let m = irrelevant_ideal(&f.vars);
    let (s, _) = saturate(&base_ideal(f), &m)?;
    Ok(s)
}

pub fn irrelevant_ideal(vars: &Vars) -> Ideal {
    Ideal::new(vars, (0..vars.len()).map(|i| Polynomial::var(vars, i)).collect())
}

/// Hilbert-polynomial classes of base schemes of quadro-quadric maps:
/// the classical trichotomy on `P^4` plus the fourth class appearing on
/// `P^5`; `Other` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SchemeType {
    I,
    II,
    III,
    IV,
    Other,
}

impl std::fmt::Display for SchemeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeType::I => write!(f, "I"),
            SchemeType::II => write!(f, "II"),
            SchemeType::III => write!(f, "III"),
            SchemeType::IV => write!(f, "IV"),
            SchemeType::Other => write!(f, "other"),
        }
    }
}

impl std::str::FromStr for SchemeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<SchemeType> {
        Ok(match s {
            "I" => SchemeType::I,
            "II" => SchemeType::II,
            "III" => SchemeType::III,
            "IV" => SchemeType::IV,
            "other" | "Other" => SchemeType::Other,
            _ => return Err(Error::structural(format!("unknown scheme type {s:?}"))),
        })
    }
}

/// Classify the saturated base scheme by its Hilbert polynomial.
///
/// On `P^4` the three named classes are the quadro-quadric trichotomy:
/// `t^2 + 2t + 2` (quadric surface plus a point), `(t^2 + 7t + 2)/2`
/// (plane plus plane plus line), `5t` (double plane plus conic).  On `P^5`
/// the four classes have Hilbert polynomials `(2t^3 + 9t^2 + 13t + 12)/6`,
/// `(t^3 + 9t^2 + 20t + 6)/6`, `(3t^2 + 9t)/2` and `2t^2 + 3t + 1`,
/// matching the base schemes of the four generic involutions there.
pub fn scheme_type(f: &RationalMap) -> Result<(SchemeType, SchemeInvariants)> {
    let sat = saturated_base_ideal(f)?;
    let inv = hilbert(&sat)?;
    let q = crate::scalar::ratio;
    let fingerprints: Vec<(Vec<crate::scalar::Rat>, SchemeType)> = match (f.vars.len(), f.degree) {
        (5, 2) => vec![
            (vec![rat(2), rat(2), rat(1)], SchemeType::I),
            (vec![rat(1), q(7, 2), q(1, 2)], SchemeType::II),
            (vec![rat(0), rat(5)], SchemeType::III),
        ],
        (6, 2) => vec![
            (vec![rat(2), q(13, 6), q(3, 2), q(1, 3)], SchemeType::I),
            (vec![rat(1), q(10, 3), q(3, 2), q(1, 6)], SchemeType::II),
            (vec![rat(0), q(9, 2), q(3, 2)], SchemeType::III),
            (vec![rat(1), rat(3), rat(2)], SchemeType::IV),
        ],
        _ => Vec::new(),
    };
    let ty = fingerprints
        .iter()
        .find(|(hp, _)| &inv.hilbert_polynomial == hp)
        .map(|(_, t)| t.clone())
        .unwrap_or(SchemeType::Other);
    Ok((ty, inv))
}

/// How many independent successful trial batches multidegree needs.
pub const MULTIDEGREE_TRIALS: u32 = 3;
const REDRAWS_PER_TRIAL: u64 = 4;

/// Multidegree `(d_1, ..., d_(n-1))` of a quadro-quadric involution of
/// `P^(n-1)`: `d_k` is the degree of the preimage of a general codimension-k
/// linear subspace.
///
/// Computed from `trials` independent batches of random members of the
/// linear system: the residual of `k` random combinations after saturating
/// away the base locus has dimension `n-1-k` and degree `d_k`.  All batches
/// must agree; disagreement or persistent degenerate sections are reported
/// as errors rather than guessed around.
pub fn multidegree(f: &RationalMap, seed: u64, trials: u32) -> Result<Vec<BigInt>> {
    check_involution(f)?;
    let n = f.vars.len();
    if trials == 0 {
        return Err(Error::structural("multidegree needs at least one trial"));
    }
    let base = base_ideal(f);
    let base_gb = Ideal::new(&f.vars, base.groebner_basis(crate::order::MonomialOrder::DegRevLex));

    let trial_ids: Vec<u64> = (0..trials as u64).collect();
    let results: Vec<Result<Vec<BigInt>>> = crate::maybe_par_map(trial_ids, |t| {
        multidegree_trial(f, &base_gb, seed.wrapping_add(t))
    });

    let mut agreed: Option<Vec<BigInt>> = None;
    let mut disagreements = 0usize;
    for r in results {
        let v = r?;
        match &agreed {
            None => agreed = Some(v),
            Some(a) if *a == v => {}
            Some(_) => disagreements += 1,
        }
    }
    if disagreements > 0 {
        return Err(Error::TrialsDisagree(disagreements));
    }
    let mut out = agreed.unwrap();
    debug_assert_eq!(out.len(), n - 2);
    // palindromic sanity for involutions comes out of the computation; the
    // first entry must be the degree of the defining forms
    if out[0] != BigInt::from(f.degree) {
        return Err(Error::math(format!(
            "d_1 = {} differs from the map degree {}",
            out[0], f.degree
        )));
    }
    out.shrink_to_fit();
    Ok(out)
}

fn multidegree_trial(f: &RationalMap, base: &Ideal, seed: u64) -> Result<Vec<BigInt>> {
    let n = f.vars.len();
    let mut out = Vec::with_capacity(n - 2);
    // d_n would be 1 (the preimage of a general point); the published
    // convention lists d_1 through d_(n-1), ending in the inverse's degree
    for k in 1..n - 1 {
        let mut last_err = None;
        let mut done = false;
        for redraw in 0..REDRAWS_PER_TRIAL {
            let mut rng = SplitMix64::new(
                seed.wrapping_mul(0x2545f4914f6cdd1d)
                    .wrapping_add((k as u64) << 32)
                    .wrapping_add(redraw),
            );
            match residual_degree(f, base, k, &mut rng) {
                Ok(d) => {
                    out.push(d);
                    done = true;
                    break;
                }
                Err(e @ Error::DegenerateSection { .. }) => last_err = Some(e),
                Err(e) => return Err(e),
            }
        }
        if !done {
            return Err(last_err.unwrap());
        }
    }
    Ok(out)
}

fn residual_degree(
    f: &RationalMap,
    base: &Ideal,
    k: usize,
    rng: &mut SplitMix64,
) -> Result<BigInt> {
    let vars = &f.vars;
    let n = vars.len();
    let mut sections = Vec::with_capacity(k);
    for _ in 0..k {
        let mut s = Polynomial::zero(vars);
        for c in f.components() {
            s = s.add(&c.scale(&rng.small_coeff()));
        }
        if s.is_zero() {
            return Err(Error::DegenerateSection { found: -2, expected: (n - 1 - k) as i64 });
        }
        sections.push(s);
    }
    let lk = Ideal::new(vars, sections);
    let (residual, _) = saturate(&lk, base)?;
    let (residual, _) = saturate(&residual, &irrelevant_ideal(vars))?;
    let inv = hilbert(&residual)?;
    let expected = (n - 1 - k) as i64;
    if inv.dimension != expected {
        return Err(Error::DegenerateSection { found: inv.dimension, expected });
    }
    Ok(inv.degree)
}
