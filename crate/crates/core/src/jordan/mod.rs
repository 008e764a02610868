//! Finite-dimensional commutative algebras over the rationals: the Jordan
//! identity, generic rank and trace forms, adjoints, radicals, Peirce
//! decompositions, and reconstruction of an algebra from its adjoint map.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cremona::{check_involution, RationalMap};
use crate::error::{Error, Result};
use crate::linalg::{poly_rank, QMatrix};
use crate::poly::{Polynomial, Vars};
use crate::scalar::{format_rat, parse_rat, rat, ratio, Rat};

/// A commutative (not necessarily associative, not necessarily unital)
/// algebra given by structure constants on a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    dim: usize,
    basis_names: Vec<String>,
    unit: Option<Vec<Rat>>,
    /// `table[i][j]` is the coordinate vector of `b_i ∘ b_j`.
    table: Vec<Vec<Vec<Rat>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AlgebraEntryJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    /// Sparse upper-triangular product table; missing entries are zero.
    pub table: Vec<AlgebraEntryJson>,
}

impl Algebra {
    /// Build from a sparse upper-triangular table (`i <= j`); the symmetric
    /// entries are filled in automatically, which makes commutativity a
    /// structural invariant.
    pub fn new(
        basis_names: Vec<String>,
        unit: Option<Vec<Rat>>,
        entries: &[(usize, usize, Vec<Rat>)],
    ) -> Result<Algebra> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::structural("algebra of dimension zero"));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for n in &basis_names {
                if !seen.insert(n) {
                    return Err(Error::structural(format!("duplicate basis name {n:?}")));
                }
            }
        }
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for (i, j, coeffs) in entries {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::structural(format!("table index ({i}, {j}) out of range")));
            }
            if i > j {
                return Err(Error::structural(format!(
                    "table entry ({i}, {j}) must be given with i <= j"
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::structural(format!(
                    "product vector for ({i}, {j}) has length {}, expected {dim}",
                    coeffs.len()
                )));
            }
            table[i][j] = coeffs.clone();
            table[j][i] = coeffs.clone();
        }
        let alg = Algebra { dim, basis_names, unit: None, table };
        let alg = match unit {
            None => alg,
            Some(e) => {
                if e.len() != dim {
                    return Err(Error::structural("unit vector has wrong length"));
                }
                for j in 0..dim {
                    let mut bj = vec![Rat::zero(); dim];
                    bj[j] = Rat::one();
                    if alg.mul_rat(&e, &bj) != bj {
                        return Err(Error::structural(format!(
                            "claimed unit fails e ∘ {} = {}",
                            alg.basis_names[j], alg.basis_names[j]
                        )));
                    }
                }
                Algebra { unit: Some(e), ..alg }
            }
        };
        Ok(alg)
    }

    /// The one-dimensional unital algebra.
    pub fn scalar(name: &str) -> Algebra {
        Algebra::new(vec![name.to_string()], Some(vec![rat(1)]), &[(0, 0, vec![rat(1)])])
            .expect("scalar algebra is well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn product_entry(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i][j]
    }

    /// Coordinates used for generic elements, adjoints and trace forms:
    /// `x, y, z, t, u, v` (or `x1..xn` above dimension six).
    pub fn coords(&self) -> Vars {
        Vars::standard(self.dim)
    }

    pub fn mul_rat(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        out[k] += &f * &self.table[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn mul_poly(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let vars = x[0].vars();
        let mut out = vec![Polynomial::zero(vars); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        out[k] = out[k].add(&f.scale(&self.table[i][j][k]));
                    }
                }
            }
        }
        out
    }

    /// The generic element: coordinate variables as a vector over `coords()`.
    pub fn generic_element(&self) -> Vec<Polynomial> {
        let vars = self.coords();
        (0..self.dim).map(|i| Polynomial::var(&vars, i)).collect()
    }

    fn embed_unit(&self, vars: &Vars) -> Result<Vec<Polynomial>> {
        let e = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::structural("operation requires a unital algebra"))?;
        Ok(e.iter().map(|c| Polynomial::constant(vars, c.clone())).collect())
    }

    /// Check the Jordan identity `(x^2 ∘ y) ∘ x = x^2 ∘ (y ∘ x)` on two
    /// independent generic elements.  Failure carries a witness component.
    pub fn check_jordan(&self) -> Result<()> {
        let n = self.dim;
        let names: Vec<String> = (1..=n)
            .map(|i| format!("a{i}"))
            .chain((1..=n).map(|i| format!("b{i}")))
            .collect();
        let ring = Vars::new(names);
        let x: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
        let y: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, n + i)).collect();
        let x2 = self.mul_poly(&x, &x);
        let xy = self.mul_poly(&x, &y);
        let lhs = self.mul_poly(&self.mul_poly(&x2, &y), &x);
        let rhs = self.mul_poly(&x2, &xy);
        for k in 0..n {
            let diff = lhs[k].sub(&rhs[k]);
            if !diff.is_zero() {
                return Err(Error::NotJordan { component: k, witness: diff.to_string() });
            }
        }
        Ok(())
    }

    /// Generic rank: the degree of the minimal polynomial of a generic
    /// element over the span of the unit.  Computed with fraction-free
    /// elimination on the rows `e, x, x^2, ...`.
    pub fn rank(&self) -> Result<usize> {
        let vars = self.coords();
        let e = self.embed_unit(&vars)?;
        let x = self.generic_element();
        let mut rows: Vec<Vec<Polynomial>> = vec![e, x.clone()];
        let mut power = x.clone();
        for r in 1..=self.dim {
            if poly_rank(&rows) == r {
                return Ok(r);
            }
            power = self.mul_poly(&power, &x);
            rows.push(power.clone());
        }
        // a commutative power-associative algebra always terminates above,
        // but guard against pathological tables
        Err(Error::math("generic minimal polynomial not found up to the dimension"))
    }

    /// Generic trace, quadratic and norm forms of a rank-3 algebra, from
    /// `x^3 - T(x) x^2 + S(x) x - N(x) e = 0`.
    pub fn trace_forms(&self) -> Result<(Polynomial, Polynomial, Polynomial)> {
        let r = self.rank()?;
        if r != 3 {
            return Err(Error::WrongRank { found: r, expected: 3 });
        }
        let vars = self.coords();
        let e = self.embed_unit(&vars)?;
        let x = self.generic_element();
        let x2 = self.mul_poly(&x, &x);
        let x3 = self.mul_poly(&x2, &x);
        let n = self.dim;

        // Solve the 3-unknown linear system coordinatewise by Cramer's rule
        // on a nonsingular coordinate triple, then verify globally.
        let col = |i: usize| [x2[i].clone(), x[i].neg(), e[i].clone()];
        let det3 = |m: &[[Polynomial; 3]; 3]| -> Polynomial {
            let a = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
            let b = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
            let c = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
            a.sub(&b).add(&c)
        };
        let mut solution: Option<(Polynomial, Polynomial, Polynomial)> = None;
        'search: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let m = [col(i), col(j), col(k)];
                    let d = det3(&m);
                    if d.is_zero() {
                        continue;
                    }
                    let rhs = [x3[i].clone(), x3[j].clone(), x3[k].clone()];
                    let mut replaced = m.clone();
                    let mut vals = Vec::with_capacity(3);
                    for c in 0..3 {
                        for (rix, r) in rhs.iter().enumerate() {
                            replaced[rix][c] = r.clone();
                        }
                        let dc = det3(&replaced);
                        for (rix, _) in rhs.iter().enumerate() {
                            replaced[rix][c] = m[rix][c].clone();
                        }
                        match dc.div_exact(&d) {
                            Some(q) => vals.push(q),
                            None => continue 'search,
                        }
                    }
                    let (t, s, nn) = (vals[0].clone(), vals[1].clone(), vals[2].clone());
                    solution = Some((t, s, nn));
                    break 'search;
                }
            }
        }
        let (t, s, nrm) =
            solution.ok_or_else(|| Error::math("trace-form system is singular everywhere"))?;
        // global verification on every coordinate
        for i in 0..n {
            let lhs = x3[i].clone();
            let rhs = t.mul(&x2[i]).sub(&s.mul(&x[i])).add(&nrm.mul(&e[i]));
            if lhs != rhs {
                return Err(Error::math(format!(
                    "rank-3 relation fails on coordinate {i}: {}",
                    lhs.sub(&rhs)
                )));
            }
        }
        for (f, d, label) in [(&t, 1u32, "T"), (&s, 2, "S"), (&nrm, 3, "N")] {
            if f.homogeneous_degree() != Some(d) {
                return Err(Error::math(format!("{label} is not homogeneous of degree {d}")));
            }
        }
        Ok((t, s, nrm))
    }

    /// Components of the adjoint `x^# = x^2 - T(x) x + S(x) e`.
    pub fn adjoint_components(&self) -> Result<Vec<Polynomial>> {
        let (t, s, _) = self.trace_forms()?;
        let vars = self.coords();
        let e = self.embed_unit(&vars)?;
        let x = self.generic_element();
        let x2 = self.mul_poly(&x, &x);
        Ok((0..self.dim)
            .map(|i| x2[i].sub(&t.mul(&x[i])).add(&s.mul(&e[i])))
            .collect())
    }

    /// The adjoint as a projective self-map (quadro-quadric candidate).
    pub fn adjoint_map(&self) -> Result<RationalMap> {
        RationalMap::new(&self.coords(), self.adjoint_components()?)
    }

    /// Evaluate a linear/quadratic form (polynomial over `coords()`) at a
    /// rational vector.
    fn eval_form(&self, f: &Polynomial, v: &[Rat]) -> Rat {
        f.eval(v)
    }

    /// Basis of the radical: the kernel of the generic trace bilinear form
    /// `(x, y) -> T(x ∘ y)`, verified to be a nil ideal.
    pub fn radical_basis(&self) -> Result<Vec<Vec<Rat>>> {
        let (t, _, _) = self.trace_forms()?;
        let n = self.dim;
        let mut b = QMatrix::zeros(n, n);
        for i in 0..n {
            let mut ei = vec![Rat::zero(); n];
            ei[i] = Rat::one();
            for j in i..n {
                let mut ej = vec![Rat::zero(); n];
                ej[j] = Rat::one();
                let prod = self.mul_rat(&ei, &ej);
                let val = self.eval_form(&t, &prod);
                b[(i, j)] = val.clone();
                b[(j, i)] = val;
            }
        }
        let kernel = b.kernel();

        // post-verification: the kernel must be an ideal ...
        let span = |vecs: &[Vec<Rat>]| -> QMatrix {
            QMatrix::from_rows(vecs.iter().map(|v| v.clone()).collect())
        };
        let in_span = |m: &QMatrix, v: &[Rat]| -> bool {
            if m.rows == 0 {
                return v.iter().all(|c| c.is_zero());
            }
            let mut rows: Vec<Vec<Rat>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
            let r0 = span(&rows).rank();
            rows.push(v.to_vec());
            span(&rows).rank() == r0
        };
        let kmat = span(&kernel);
        for z in &kernel {
            for i in 0..n {
                let mut ei = vec![Rat::zero(); n];
                ei[i] = Rat::one();
                let prod = self.mul_rat(z, &ei);
                if !in_span(&kmat, &prod) {
                    return Err(Error::math("trace-form kernel is not an ideal"));
                }
            }
        }
        // ... and nilpotent: powers of the span shrink to zero
        let mut current = kernel.clone();
        for _ in 0..=n {
            if current.is_empty() || span(&current).rank() == 0 {
                return Ok(kernel);
            }
            let mut next = Vec::new();
            for u in &current {
                for z in &kernel {
                    next.push(self.mul_rat(u, z));
                }
            }
            // compress to an independent set to keep the iteration small
            let mut compressed: Vec<Vec<Rat>> = Vec::new();
            for v in next {
                if !in_span(&span(&compressed), &v) {
                    compressed.push(v);
                }
            }
            current = compressed;
        }
        Err(Error::math("trace-form kernel is not nilpotent"))
    }

    pub fn radical_dim(&self) -> Result<usize> {
        Ok(self.radical_basis()?.len())
    }

    /// Peirce decomposition with respect to an idempotent `u`: eigenspace
    /// bases of left multiplication for eigenvalues `0, 1/2, 1`.
    pub fn peirce(&self, u: &[Rat]) -> Result<PeirceDecomposition> {
        if u.len() != self.dim {
            return Err(Error::structural("idempotent vector has wrong length"));
        }
        if self.mul_rat(u, u) != u.to_vec() {
            return Err(Error::NotIdempotent);
        }
        let n = self.dim;
        let mut l = QMatrix::zeros(n, n);
        for j in 0..n {
            let mut ej = vec![Rat::zero(); n];
            ej[j] = Rat::one();
            let col = self.mul_rat(u, &ej);
            for i in 0..n {
                l[(i, j)] = col[i].clone();
            }
        }
        let eigenspace = |lambda: Rat| -> Vec<Vec<Rat>> {
            let mut m = l.clone();
            for i in 0..n {
                let v = &m[(i, i)] - &lambda;
                m[(i, i)] = v;
            }
            m.kernel()
        };
        let zero = eigenspace(rat(0));
        let half = eigenspace(ratio(1, 2));
        let one = eigenspace(rat(1));
        if zero.len() + half.len() + one.len() != n {
            return Err(Error::math(
                "multiplication by the idempotent is not diagonalizable with eigenvalues 0, 1/2, 1",
            ));
        }
        Ok(PeirceDecomposition { zero, half, one })
    }

    pub fn to_json(&self) -> AlgebraJson {
        let mut table = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                if self.table[i][j].iter().any(|c| !c.is_zero()) {
                    table.push(AlgebraEntryJson {
                        i,
                        j,
                        coeffs: self.table[i][j].iter().map(format_rat).collect(),
                    });
                }
            }
        }
        AlgebraJson {
            dim: self.dim,
            basis: self.basis_names.clone(),
            unit: self
                .unit
                .as_ref()
                .map(|e| e.iter().map(format_rat).collect()),
            table,
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Algebra> {
        if j.basis.len() != j.dim {
            return Err(Error::structural(format!(
                "declared dim {} but {} basis names",
                j.dim,
                j.basis.len()
            )));
        }
        let unit = match &j.unit {
            None => None,
            Some(u) => Some(u.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?),
        };
        let entries = j
            .table
            .iter()
            .map(|e| {
                let coeffs = e
                    .coeffs
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok((e.i, e.j, coeffs))
            })
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(j.basis.clone(), unit, &entries)
    }
}

#[derive(Clone, Debug)]
pub struct PeirceDecomposition {
    pub zero: Vec<Vec<Rat>>,
    pub half: Vec<Vec<Rat>>,
    pub one: Vec<Vec<Rat>>,
}

/// Direct product `A × B` on the concatenated bases.  The result is unital
/// exactly when both factors are.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let n = a.dim + b.dim;
    let mut names = a.basis_names.clone();
    for name in &b.basis_names {
        if names.contains(name) {
            return Err(Error::structural(format!(
                "basis name {name:?} appears in both factors"
            )));
        }
        names.push(name.clone());
    }
    let mut entries = Vec::new();
    for i in 0..a.dim {
        for j in i..a.dim {
            let mut v = vec![Rat::zero(); n];
            v[..a.dim].clone_from_slice(&a.table[i][j]);
            entries.push((i, j, v));
        }
    }
    for i in 0..b.dim {
        for j in i..b.dim {
            let mut v = vec![Rat::zero(); n];
            v[a.dim..].clone_from_slice(&b.table[i][j]);
            entries.push((a.dim + i, a.dim + j, v));
        }
    }
    let unit = match (&a.unit, &b.unit) {
        (Some(ea), Some(eb)) => {
            let mut e = ea.clone();
            e.extend(eb.iter().cloned());
            Some(e)
        }
        _ => None,
    };
    Algebra::new(names, unit, &entries)
}

/// Adjoin a unit to an algebra (typically a nilpotent one).
pub fn unitalize(nil: &Algebra) -> Result<Algebra> {
    let mut ename = "e".to_string();
    let mut k = 0;
    while nil.basis_names.contains(&ename) {
        k += 1;
        ename = format!("e{k}");
    }
    let n = nil.dim + 1;
    let mut names = vec![ename];
    names.extend(nil.basis_names.iter().cloned());
    let mut entries = Vec::new();
    let mut e = vec![Rat::zero(); n];
    e[0] = Rat::one();
    entries.push((0, 0, e.clone()));
    for j in 1..n {
        let mut v = vec![Rat::zero(); n];
        v[j] = Rat::one();
        entries.push((0, j, v));
    }
    for i in 0..nil.dim {
        for j in i..nil.dim {
            let mut v = vec![Rat::zero(); n];
            v[1..].clone_from_slice(&nil.table[i][j]);
            entries.push((i + 1, j + 1, v));
        }
    }
    Algebra::new(names, Some(e), &entries)
}

/// Reconstruct a unital algebra from a quadratic involution and a designated
/// unit point, inverting the adjoint construction:
///
/// * the scaling factor of `f ∘ f` is the norm `N`;
/// * `N(λe - x) = λ^3 - T(x) λ^2 + S(x) λ - N(x)` yields `T` and `S`;
/// * polarizing `x^# = x^2 - T(x) x + S(x) e` recovers the product.
///
/// The reconstruction is honest: if `f` is not the adjoint of a unital
/// algebra at `e`, one of the intermediate identities fails.
pub fn algebra_from_involution(f: &RationalMap, unit: &[Rat]) -> Result<Algebra> {
    let vars = f.vars().clone();
    let n = vars.len();
    if unit.len() != n {
        return Err(Error::structural("unit vector has wrong length"));
    }
    if f.degree() != 2 {
        return Err(Error::structural("adjoint reconstruction needs a quadratic map"));
    }
    let norm = check_involution(f)?;
    if norm.homogeneous_degree() != Some(3) {
        return Err(Error::math(format!(
            "involution scaling has degree {:?}, expected the cubic norm",
            norm.homogeneous_degree()
        )));
    }
    // fixed point: f(e) must be proportional to e with factor N(e) = 1
    let e_img: Vec<Rat> = f.components().iter().map(|c| c.eval(unit)).collect();
    if e_img != unit {
        return Err(Error::math("designated unit is not fixed by the involution"));
    }
    if norm.eval(unit) != rat(1) {
        return Err(Error::math("norm does not take value 1 at the unit"));
    }

    // expand N(λ e - x)
    let lam_ring = vars.prepend(&["lam"]);
    let positions: Vec<usize> = (1..=n).collect();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let lam_e = Polynomial::var(&lam_ring, 0).scale(&unit[i]);
            lam_e.sub(&Polynomial::var(&vars, i).embed(&lam_ring, &positions))
        })
        .collect();
    let expanded = norm.substitute(&images);
    let mut buckets: Vec<Polynomial> = vec![Polynomial::zero(&vars); 4];
    for (e, c) in expanded.terms() {
        let k = e[0] as usize;
        let rest: Vec<u32> = e[1..].to_vec();
        buckets[k] = buckets[k].add(&Polynomial::monomial(&vars, rest, c.clone()));
    }
    let t_form = buckets[2].neg();
    let s_form = buckets[1].clone();
    if buckets[3] != Polynomial::one(&vars) {
        return Err(Error::math("N(λe - x) has non-unit cubic coefficient"));
    }
    if buckets[0] != norm.neg() {
        return Err(Error::math("N(λe - x) constant term does not recover -N"));
    }

    // polarize: b_i # b_j and the quadratic forms at basis points
    let basis_vec = |i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    };
    let apply = |v: &[Rat]| -> Vec<Rat> { f.components().iter().map(|c| c.eval(v)).collect() };
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i..n {
            let bi = basis_vec(i);
            let bj = basis_vec(j);
            let sum: Vec<Rat> = bi.iter().zip(&bj).map(|(a, b)| a + b).collect();
            let sharp: Vec<Rat> = apply(&sum)
                .iter()
                .zip(apply(&bi).iter().zip(apply(&bj)))
                .map(|(s, (a, b))| s - a - b)
                .collect();
            let ti = t_form.eval(&bi);
            let tj = t_form.eval(&bj);
            let ds = s_form.eval(&sum) - s_form.eval(&bi) - s_form.eval(&bj);
            let half = ratio(1, 2);
            let prod: Vec<Rat> = (0..n)
                .map(|k| {
                    let mut acc = sharp[k].clone();
                    acc += &ti * &bj[k];
                    acc += &tj * &bi[k];
                    acc -= &ds * &unit[k];
                    acc * &half
                })
                .collect();
            entries.push((i, j, prod));
        }
    }
    Algebra::new(vars.names().to_vec(), Some(unit.to_vec()), &entries)
        .map_err(|e| Error::math(format!("reconstructed table is not a unital algebra: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    /// The split three-dimensional algebra Q x Q x Q.
    fn split3() -> Algebra {
        Algebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            Some(vec![rat(1), rat(1), rat(1)]),
            &[
                (0, 0, vec![rat(1), rat(0), rat(0)]),
                (1, 1, vec![rat(0), rat(1), rat(0)]),
                (2, 2, vec![rat(0), rat(0), rat(1)]),
            ],
        )
        .unwrap()
    }

    /// Q[eps]/(eps^3) on basis (e, a, b) with a^2 = b.
    fn eps3() -> Algebra {
        Algebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            Some(vec![rat(1), rat(0), rat(0)]),
            &[
                (0, 0, vec![rat(1), rat(0), rat(0)]),
                (0, 1, vec![rat(0), rat(1), rat(0)]),
                (0, 2, vec![rat(0), rat(0), rat(1)]),
                (1, 1, vec![rat(0), rat(0), rat(1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn split3_is_jordan_of_rank_3() {
        let a = split3();
        a.check_jordan().unwrap();
        assert_eq!(a.rank().unwrap(), 3);
        let (t, s, n) = a.trace_forms().unwrap();
        let v = a.coords();
        assert_eq!(t, parse_poly("x + y + z", &v).unwrap());
        assert_eq!(s, parse_poly("x*y + x*z + y*z", &v).unwrap());
        assert_eq!(n, parse_poly("x*y*z", &v).unwrap());
        let adj = a.adjoint_components().unwrap();
        assert_eq!(adj[0], parse_poly("y*z", &v).unwrap());
        assert_eq!(adj[1], parse_poly("x*z", &v).unwrap());
        assert_eq!(adj[2], parse_poly("x*y", &v).unwrap());
        assert_eq!(a.radical_dim().unwrap(), 0);
    }

    #[test]
    fn eps3_invariants() {
        let a = eps3();
        a.check_jordan().unwrap();
        assert_eq!(a.rank().unwrap(), 3);
        let v = a.coords();
        let adj = a.adjoint_components().unwrap();
        assert_eq!(adj[0], parse_poly("x^2", &v).unwrap());
        assert_eq!(adj[1], parse_poly("-x*y", &v).unwrap());
        assert_eq!(adj[2], parse_poly("y^2 - x*z", &v).unwrap());
        assert_eq!(a.radical_dim().unwrap(), 2);
    }

    #[test]
    fn adjoint_biduality() {
        // (x^#)^# = N(x) x for both sample algebras
        for a in [split3(), eps3()] {
            let adj = a.adjoint_components().unwrap();
            let (_, _, n) = a.trace_forms().unwrap();
            let x = a.generic_element();
            let double: Vec<Polynomial> = adj.iter().map(|c| c.substitute(&adj)).collect();
            for i in 0..a.dim() {
                assert_eq!(double[i], n.mul(&x[i]));
            }
        }
    }

    #[test]
    fn rank_of_small_algebras() {
        assert_eq!(Algebra::scalar("c").rank().unwrap(), 1);
        // a rank-2 algebra: Q ⊕ Q w with w^2 = 1 (split quadratic)
        let q = Algebra::new(
            vec!["a".into(), "w".into()],
            Some(vec![rat(1), rat(0)]),
            &[
                (0, 0, vec![rat(1), rat(0)]),
                (0, 1, vec![rat(0), rat(1)]),
                (1, 1, vec![rat(1), rat(0)]),
            ],
        )
        .unwrap();
        assert_eq!(q.rank().unwrap(), 2);
    }

    #[test]
    fn non_jordan_table_is_caught() {
        // three orthogonal idempotents, a line a in the (e1, e2) half-space,
        // a line w in the (e2, e3) half-space, and w^2 = e2 + e3: unital and
        // commutative, but the Jordan identity fails
        let half = || ratio(1, 2);
        let z = || rat(0);
        let a = Algebra::new(
            vec!["e1".into(), "e2".into(), "e3".into(), "w".into(), "a".into()],
            Some(vec![rat(1), rat(1), rat(1), rat(0), rat(0)]),
            &[
                (0, 0, vec![rat(1), z(), z(), z(), z()]),
                (1, 1, vec![z(), rat(1), z(), z(), z()]),
                (2, 2, vec![z(), z(), rat(1), z(), z()]),
                (0, 4, vec![z(), z(), z(), z(), half()]),
                (1, 4, vec![z(), z(), z(), z(), half()]),
                (1, 3, vec![z(), z(), z(), half(), z()]),
                (2, 3, vec![z(), z(), z(), half(), z()]),
                (3, 3, vec![z(), rat(1), rat(1), z(), z()]),
            ],
        )
        .unwrap();
        assert!(matches!(a.check_jordan(), Err(Error::NotJordan { .. })));
    }

    #[test]
    fn peirce_of_split3() {
        let a = split3();
        let u = vec![rat(1), rat(0), rat(0)];
        let p = a.peirce(&u).unwrap();
        assert_eq!(p.one.len(), 1);
        assert_eq!(p.half.len(), 0);
        assert_eq!(p.zero.len(), 2);
        assert!(matches!(
            a.peirce(&[rat(2), rat(0), rat(0)]),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn product_and_unitalization() {
        let c = Algebra::scalar("w");
        let prod = direct_product(&c, &split3()).unwrap();
        prod.check_jordan().unwrap();
        assert_eq!(prod.dim(), 4);
        assert_eq!(prod.rank().unwrap(), 4);

        // nilpotent algebra v1^2 = v2 with zero products otherwise
        let nil = Algebra::new(
            vec!["v1".into(), "v2".into()],
            None,
            &[(0, 0, vec![rat(0), rat(1)])],
        )
        .unwrap();
        let uni = unitalize(&nil).unwrap();
        uni.check_jordan().unwrap();
        assert_eq!(uni.rank().unwrap(), 3);
        assert_eq!(uni.radical_dim().unwrap(), 2);
    }

    #[test]
    fn reconstruction_roundtrip() {
        for a in [split3(), eps3()] {
            let f = a.adjoint_map().unwrap();
            let e = a.unit().unwrap().to_vec();
            let b = algebra_from_involution(&f, &e).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn reconstruction_rejects_wrong_unit() {
        let a = split3();
        let f = a.adjoint_map().unwrap();
        assert!(algebra_from_involution(&f, &[rat(1), rat(1), rat(0)]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = eps3();
        let j = a.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back = Algebra::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(a, back);
    }
}
