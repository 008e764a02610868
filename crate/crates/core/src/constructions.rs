//! Constructions producing Cremona involutions: the standard involution,
//! two explicit quadro-quadric families, gluing along a common semisimple
//! part, and the two classical quadro-to-cubo-cubic liftings (Spampinato
//! and Zorn matrices).

use crate::cremona::{check_involution, compose, RationalMap};
use crate::error::{Error, Result};
use crate::jordan::Algebra;
use crate::linalg::QMatrix;
use crate::poly::{Polynomial, Vars};
use crate::scalar::{rat, Rat};
use num_traits::Zero;

/// The standard involution of `P^(n-1)`:
/// `[x_1 : ... : x_n] -> [x_2 x_3 .. x_n : ... : x_1 .. x_(n-1)]`,
/// of bidegree `(n-1, n-1)`.
pub fn standard_involution(n: usize) -> Result<RationalMap> {
    if n < 3 {
        return Err(Error::structural(
            "the standard involution needs at least 3 coordinates (on P^1 it degenerates to a linear map)",
        ));
    }
    let vars = Vars::new((1..=n).map(|i| format!("x{i}")));
    let components = (0..n)
        .map(|i| {
            let mut p = Polynomial::one(&vars);
            for j in 0..n {
                if j != i {
                    p = p.mul(&Polynomial::var(&vars, j));
                }
            }
            p
        })
        .collect();
    RationalMap::new(&vars, components)
}

/// The quadratic involution `F^α` of `P^(2+α1+α2+α3)`:
///
/// `(x, a_1, a_2, a_3) -> (x2 x3, x1 x3, x1 x2, x1 a_1, x2 a_2, x3 a_3)`
///
/// satisfying `F∘F = x1 x2 x3 · id`.
pub fn falpha(alpha: (usize, usize, usize)) -> Result<RationalMap> {
    let (a1, a2, a3) = alpha;
    let mut names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
    for (i, cnt) in [(1, a1), (2, a2), (3, a3)] {
        for k in 1..=cnt {
            names.push(format!("a{i}{k}"));
        }
    }
    let vars = Vars::new(names);
    let x = |i: usize| Polynomial::var(&vars, i);
    let mut components = vec![x(1).mul(&x(2)), x(0).mul(&x(2)), x(0).mul(&x(1))];
    let mut offset = 3;
    for (i, cnt) in [(0, a1), (1, a2), (2, a3)] {
        for k in 0..cnt {
            components.push(x(i).mul(&Polynomial::var(&vars, offset + k)));
        }
        offset += cnt;
    }
    RationalMap::new(&vars, components)
}

/// The quadratic involution `F_n` of `P^(2n)` built from n copies of the
/// radical of `C[ε]/(ε^3)`:
///
/// `(a, b_1, c_1, ..) -> (a^2, -a b_1, b_1^2 - a c_1, ..)`
///
/// satisfying `F_n ∘ F_n = a^3 · id`.
pub fn fn_map(n: usize) -> Result<RationalMap> {
    if n == 0 {
        return Err(Error::structural("F_n needs at least one (b, c) block"));
    }
    let mut names = vec!["a".to_string()];
    for k in 1..=n {
        names.push(format!("b{k}"));
        names.push(format!("c{k}"));
    }
    let vars = Vars::new(names);
    let a = Polynomial::var(&vars, 0);
    let mut components = vec![a.mul(&a)];
    for k in 0..n {
        let b = Polynomial::var(&vars, 1 + 2 * k);
        let c = Polynomial::var(&vars, 2 + 2 * k);
        components.push(a.mul(&b).neg());
        components.push(b.mul(&b).sub(&a.mul(&c)));
    }
    RationalMap::new(&vars, components)
}

/// Spampinato's lifting of a quadro-quadric involution to a cubo-cubic one:
/// `[x : r] -> [r f(x) : N(x)]`, where `N` is the scaling of `f ∘ f`.
/// The lift `g` satisfies `g ∘ g = (r N(x))^2 · id`.
pub fn spampinato_lift(f: &RationalMap) -> Result<RationalMap> {
    if f.degree() != 2 {
        return Err(Error::structural("Spampinato lifting starts from a quadratic map"));
    }
    let norm = check_involution(f)?;
    let mut rname = "r".to_string();
    let mut k = 0;
    while f.vars().index(&rname).is_some() {
        k += 1;
        rname = format!("r{k}");
    }
    let mut names = f.vars().names().to_vec();
    names.push(rname);
    let vars = Vars::new(names);
    let n = f.vars().len();
    let positions: Vec<usize> = (0..n).collect();
    let r = Polynomial::var(&vars, n);
    let mut components: Vec<Polynomial> = f
        .components()
        .iter()
        .map(|c| r.mul(&c.embed(&vars, &positions)))
        .collect();
    components.push(norm.embed(&vars, &positions));
    RationalMap::new(&vars, components)
}

/// One input to [`glue`]: a quadratic involution extending the common
/// semisimple map by radical coordinates, with an optional twisting
/// automorphism acting on the semisimple block.
pub struct GlueBlock {
    pub map: RationalMap,
    pub twist: Option<QMatrix>,
}

/// Glue quadro-quadric involutions along their common semisimple part.
///
/// Every block map must have the shape `(F_ss(x), 𝓕_i(x, y_i))` where the
/// tail is bilinear in (everything, radical part); each twist `φ` must
/// commute with `F_ss` and preserve its scaling norm.  The glued map is
/// `(F_ss(x), 𝓕_1(x, y_1), 𝓕_2(φ_2 x, y_2), ...)` on the concatenated
/// coordinates, with radical names made unique per block.
pub fn glue(fss: &RationalMap, blocks: &[GlueBlock]) -> Result<RationalMap> {
    let n = fss.vars().len();
    let norm = check_involution(fss)?;

    // assemble the glued ring: semisimple names, then per-block tail names
    let mut names = fss.vars().names().to_vec();
    let mut tail_sizes = Vec::with_capacity(blocks.len());
    for (bi, block) in blocks.iter().enumerate() {
        let bv = block.map.vars();
        if bv.len() <= n {
            return Err(Error::structural(format!(
                "block {bi} has no radical coordinates beyond the semisimple part"
            )));
        }
        if bv.names()[..n] != *fss.vars().names() {
            return Err(Error::structural(format!(
                "block {bi} does not start with the semisimple coordinates"
            )));
        }
        let tail = bv.len() - n;
        tail_sizes.push(tail);
        for name in &bv.names()[n..] {
            let mut candidate = name.clone();
            if names.contains(&candidate) {
                candidate = format!("{name}_{}", bi + 1);
            }
            while names.contains(&candidate) {
                candidate.push('_');
            }
            names.push(candidate);
        }
    }
    let vars = Vars::new(names);
    let ss_positions: Vec<usize> = (0..n).collect();

    let mut components: Vec<Polynomial> = fss
        .components()
        .iter()
        .map(|c| c.embed(&vars, &ss_positions))
        .collect();

    let mut offset = n;
    for (bi, block) in blocks.iter().enumerate() {
        let bv = block.map.vars();
        let tail = tail_sizes[bi];

        // structural checks: head components equal F_ss, tail components
        // have no term purely in the semisimple block
        for (i, c) in block.map.components()[..n].iter().enumerate() {
            let expected = fss.components()[i].embed(bv, &(0..n).collect::<Vec<_>>());
            if *c != expected {
                return Err(Error::structural(format!(
                    "component {i} of block {bi} differs from the semisimple map"
                )));
            }
        }
        for (i, c) in block.map.components()[n..].iter().enumerate() {
            let pure_ss = c
                .terms()
                .any(|(e, _)| e[n..].iter().all(|&x| x == 0));
            if pure_ss {
                return Err(Error::structural(format!(
                    "tail component {i} of block {bi} has a term with no radical variable"
                )));
            }
        }

        // twist checks: commutes with F_ss and preserves the norm
        let twist_images: Vec<Polynomial> = match &block.twist {
            None => (0..n).map(|i| Polynomial::var(fss.vars(), i)).collect(),
            Some(m) => {
                let ell = RationalMap::linear(fss.vars(), m)?;
                let lhs = compose(&ell, fss)?;
                let rhs = compose(fss, &ell)?;
                if lhs != rhs {
                    return Err(Error::math(format!(
                        "twist of block {bi} does not commute with the semisimple map"
                    )));
                }
                let twisted_norm = norm.substitute(ell.components());
                if twisted_norm != norm {
                    return Err(Error::math(format!(
                        "twist of block {bi} does not preserve the norm"
                    )));
                }
                ell.components().to_vec()
            }
        };

        // substitution images for the block's ring: twisted semisimple
        // coordinates, then this block's slice of the glued tail
        let mut images: Vec<Polynomial> = twist_images
            .iter()
            .map(|p| p.embed(&vars, &ss_positions))
            .collect();
        for k in 0..tail {
            images.push(Polynomial::var(&vars, offset + k));
        }
        for c in &block.map.components()[n..] {
            components.push(c.substitute(&images));
        }
        offset += tail;
    }
    RationalMap::new(&vars, components)
}

/// The cubo-cubic involution of `P(Z_2(J)) = P^(2n+1)` from Zorn matrices
/// over a rank-3 algebra `J`: with the product
///
/// `(a,x,y,b) • (a',x',y',b') = (aa' + T(x,y'), ax' + b'x + y#y', a'y + by' + x#x', bb' + T(x',y))`
///
/// the conjugation `(a,x,y,b) -> (b,x,y,a)`, the skew element
/// `σ = (1,0,0,-1)` and the triple product
/// `[M,N,P] = (M•N̄)•P + (P•N̄)•M - (P•M̄)•N`, the map is
/// `M -> σ • [M, σ•M, M]`.
pub fn zorn_map(j: &Algebra) -> Result<RationalMap> {
    let n = j.dim();
    let (t_form, _, _) = j.trace_forms()?;
    let adj = j.adjoint_components()?;

    let mut names = vec!["a".to_string()];
    names.extend((1..=n).map(|i| format!("x{i}")));
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("b".to_string());
    let vars = Vars::new(names);

    type Z = (Polynomial, Vec<Polynomial>, Vec<Polynomial>, Polynomial);

    let eval_vec = |forms: &[Polynomial], v: &[Polynomial]| -> Vec<Polynomial> {
        forms.iter().map(|f| f.substitute(v)).collect()
    };
    let vec_add = |u: &[Polynomial], v: &[Polynomial]| -> Vec<Polynomial> {
        u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
    };
    let vec_sub = |u: &[Polynomial], v: &[Polynomial]| -> Vec<Polynomial> {
        u.iter().zip(v).map(|(a, b)| a.sub(b)).collect()
    };
    let sharp_pair = |u: &[Polynomial], v: &[Polynomial]| -> Vec<Polynomial> {
        let s = eval_vec(&adj, &vec_add(u, v));
        vec_sub(&vec_sub(&s, &eval_vec(&adj, u)), &eval_vec(&adj, v))
    };
    // bilinear trace pairing T(x, y) = T(x ∘ y)
    let t_pair = |u: &[Polynomial], v: &[Polynomial]| -> Polynomial {
        let prod = j.mul_poly(u, v);
        let mut acc = Polynomial::zero(&vars);
        for (k, p) in prod.iter().enumerate() {
            let mut unitv = vec![Rat::zero(); n];
            unitv[k] = rat(1);
            let tau = t_form.eval(&unitv);
            if !tau.is_zero() {
                acc = acc.add(&p.scale(&tau));
            }
        }
        acc
    };
    let scale_vec = |c: &Polynomial, v: &[Polynomial]| -> Vec<Polynomial> {
        v.iter().map(|p| c.mul(p)).collect()
    };
    let mul = |m: &Z, p: &Z| -> Z {
        let (a1, x1, y1, b1) = m;
        let (a2, x2, y2, b2) = p;
        (
            a1.mul(a2).add(&t_pair(x1, y2)),
            vec_add(&vec_add(&scale_vec(a1, x2), &scale_vec(b2, x1)), &sharp_pair(y1, y2)),
            vec_add(&vec_add(&scale_vec(a2, y1), &scale_vec(b1, y2)), &sharp_pair(x1, x2)),
            b1.mul(b2).add(&t_pair(x2, y1)),
        )
    };
    let conj = |m: &Z| -> Z { (m.3.clone(), m.1.clone(), m.2.clone(), m.0.clone()) };
    let add = |m: &Z, p: &Z| -> Z {
        (m.0.add(&p.0), vec_add(&m.1, &p.1), vec_add(&m.2, &p.2), m.3.add(&p.3))
    };
    let neg = |m: &Z| -> Z { (m.0.neg(), m.1.iter().map(|p| p.neg()).collect(), m.2.iter().map(|p| p.neg()).collect(), m.3.neg()) };
    let triple = |m: &Z, nn: &Z, p: &Z| -> Z {
        let a = mul(&mul(m, &conj(nn)), p);
        let b = mul(&mul(p, &conj(nn)), m);
        let c = mul(&mul(p, &conj(m)), nn);
        add(&add(&a, &b), &neg(&c))
    };

    let generic: Z = (
        Polynomial::var(&vars, 0),
        (0..n).map(|i| Polynomial::var(&vars, 1 + i)).collect(),
        (0..n).map(|i| Polynomial::var(&vars, 1 + n + i)).collect(),
        Polynomial::var(&vars, 1 + 2 * n),
    );
    let sigma: Z = (
        Polynomial::one(&vars),
        vec![Polynomial::zero(&vars); n],
        vec![Polynomial::zero(&vars); n],
        Polynomial::one(&vars).neg(),
    );
    let tr = triple(&generic, &mul(&sigma, &generic), &generic);
    let result = mul(&sigma, &tr);

    let mut components = vec![result.0];
    components.extend(result.1);
    components.extend(result.2);
    components.push(result.3);
    RationalMap::new(&vars, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cremona::verify_inverse;
    use crate::poly::parse_poly;

    #[test]
    fn standard_involution_shapes() {
        assert!(standard_involution(2).is_err());
        let f = standard_involution(3).unwrap();
        assert_eq!(f.degree(), 2);
        let g = standard_involution(5).unwrap();
        assert_eq!(g.degree(), 4);
        let c = check_involution(&g).unwrap();
        assert_eq!(c, parse_poly("x1^3*x2^3*x3^3*x4^3*x5^3", g.vars()).unwrap());
    }

    #[test]
    fn falpha_is_involutive() {
        for alpha in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 3)] {
            let f = falpha(alpha).unwrap();
            let c = check_involution(&f).unwrap();
            assert_eq!(c, parse_poly("x1*x2*x3", f.vars()).unwrap(), "alpha = {alpha:?}");
        }
    }

    #[test]
    fn fn_map_is_involutive() {
        assert!(fn_map(0).is_err());
        for n in 1..=4 {
            let f = fn_map(n).unwrap();
            let c = check_involution(&f).unwrap();
            assert_eq!(c, parse_poly("a^3", f.vars()).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn spampinato_of_p2_is_standard_p3() {
        let f = falpha((0, 0, 0)).unwrap();
        let g = spampinato_lift(&f).unwrap();
        // [x : r] -> [r f(x) : N(x)] is the standard involution of P^3
        // after identifying r with the fourth coordinate
        let gv = g.vars();
        let expected: Vec<Polynomial> = ["r*x2*x3", "r*x1*x3", "r*x1*x2", "x1*x2*x3"]
            .iter()
            .map(|s| parse_poly(s, gv).unwrap())
            .collect();
        assert_eq!(g.components().to_vec(), expected);
        let c = check_involution(&g).unwrap();
        // g ∘ g = (r N)^2 id with N = x1 x2 x3
        assert_eq!(c, parse_poly("(r*x1*x2*x3)^2", g.vars()).unwrap());
    }

    #[test]
    fn spampinato_scaling_identity() {
        // lift a nontrivial P^3 involution and check g∘g = (r N)^2 id
        let v = Vars::standard(4);
        let f = RationalMap::from_strings(&v, &["y^2", "x*y", "-x*z", "-x*t"]).unwrap();
        let norm = check_involution(&f).unwrap();
        let g = spampinato_lift(&f).unwrap();
        let c = check_involution(&g).unwrap();
        let gv = g.vars();
        let r = Polynomial::var(gv, 4);
        let n_embedded = norm.embed(gv, &[0, 1, 2, 3]);
        assert_eq!(c, r.mul(&n_embedded).pow(2));
        assert_eq!(verify_inverse(&g, &g).unwrap(), c);
    }

    #[test]
    fn glue_reassembles_falpha() {
        // three single-line blocks over the standard P^2 involution glue to
        // F^(1,1,1)
        let fss = falpha((0, 0, 0)).unwrap();
        let blocks: Vec<GlueBlock> = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
            .into_iter()
            .map(|alpha| GlueBlock { map: falpha(alpha).unwrap(), twist: None })
            .collect();
        let g = glue(&fss, &blocks).unwrap();
        let expect = falpha((1, 1, 1)).unwrap();
        let renamed: Vec<Polynomial> = g
            .components()
            .iter()
            .map(|c| c.rename(expect.vars()).unwrap())
            .collect();
        assert_eq!(renamed, expect.components().to_vec());
        check_involution(&g).unwrap();
    }

    #[test]
    fn glue_with_cyclic_twist() {
        // the 3-cycle on coordinates commutes with the standard involution
        let fss = falpha((0, 0, 0)).unwrap();
        let mut cycle = QMatrix::zeros(3, 3);
        cycle[(0, 1)] = rat(1);
        cycle[(1, 2)] = rat(1);
        cycle[(2, 0)] = rat(1);
        let blocks = vec![
            GlueBlock { map: falpha((1, 0, 0)).unwrap(), twist: None },
            GlueBlock { map: falpha((1, 0, 0)).unwrap(), twist: Some(cycle) },
        ];
        let g = glue(&fss, &blocks).unwrap();
        check_involution(&g).unwrap();
        // the twisted block reads x2 instead of x1
        let gv = g.vars();
        assert_eq!(g.components()[4], parse_poly("x2*a11_2", gv).unwrap());
    }

    #[test]
    fn glue_rejects_norm_breaking_twist() {
        let fss = falpha((0, 0, 0)).unwrap();
        let mut m = QMatrix::identity(3);
        m[(0, 0)] = rat(2); // scales the norm
        let blocks = vec![GlueBlock { map: falpha((1, 0, 0)).unwrap(), twist: Some(m) }];
        assert!(glue(&fss, &blocks).is_err());
    }

    #[test]
    fn falpha_permutation_symmetry() {
        // swapping x1 <-> x2 together with the first two radical blocks
        // carries F^(2,1,0) to the F^(1,2,0) pattern
        let f = falpha((2, 1, 0)).unwrap();
        let mut m = QMatrix::zeros(6, 6);
        // rows: old coordinates as combinations of the new ones
        m[(0, 1)] = rat(1); // x1 = X2
        m[(1, 0)] = rat(1); // x2 = X1
        m[(2, 2)] = rat(1); // x3 = X3
        m[(3, 4)] = rat(1); // a11 = A21
        m[(4, 5)] = rat(1); // a12 = A22
        m[(5, 3)] = rat(1); // a21 = A11
        let g = crate::cremona::conjugate(&f, &m).unwrap();
        let expected: Vec<Polynomial> =
            ["x2*x3", "x1*x3", "x1*x2", "x1*a11", "x2*a12", "x2*a21"]
                .iter()
                .map(|s| parse_poly(s, f.vars()).unwrap())
                .collect();
        assert_eq!(g.components().to_vec(), expected);
    }

    #[test]
    fn fn2_is_conjugate_to_a_jordan_adjoint() {
        // F_2 is linearly conjugate to the adjoint of the unitalization of
        // the nilalgebra v1^2 = v2^2 = v3, v1 v2 = v4 via
        // b1 = y + z, b2 = y - z, c1 = t + u, c2 = t - u
        let f = fn_map(2).unwrap();
        let mut m = QMatrix::zeros(5, 5);
        m[(0, 0)] = rat(1);
        m[(1, 1)] = rat(1);
        m[(1, 2)] = rat(1); // b1 = y + z
        m[(2, 3)] = rat(1);
        m[(2, 4)] = rat(1); // c1 = t + u
        m[(3, 1)] = rat(1);
        m[(3, 2)] = rat(-1); // b2 = y - z
        m[(4, 3)] = rat(1);
        m[(4, 4)] = rat(-1); // c2 = t - u
        let g = crate::cremona::conjugate(&f, &m).unwrap();
        // in the new coordinates (written with the ring's position symbols)
        let expected: Vec<Polynomial> = [
            "a^2",
            "-a*b1",
            "-a*c1",
            "b1^2 + c1^2 - a*b2",
            "2*b1*c1 - a*c2",
        ]
        .iter()
        .map(|s| parse_poly(s, f.vars()).unwrap())
        .collect();
        assert_eq!(g.components().to_vec(), expected);
    }

    #[test]
    fn trace_pairings_agree_on_catalog_algebras() {
        // the bilinear trace used by the Zorn construction can be read two
        // ways: T(x ∘ y), or the polarization T(x)T(y) - ΔS(x,y); they
        // must coincide on every rank-3 algebra of the catalog
        use num_traits::Zero;
        for e in &crate::catalog::catalog().entries {
            if e.negative {
                continue;
            }
            let alg = e.algebra().unwrap();
            let n = alg.dim();
            let (t, s, _) = alg.trace_forms().unwrap();
            let vars2 = Vars::new(
                (1..=n)
                    .map(|i| format!("p{i}"))
                    .chain((1..=n).map(|i| format!("q{i}"))),
            );
            let xpos: Vec<usize> = (0..n).collect();
            let ypos: Vec<usize> = (n..2 * n).collect();
            let x: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&vars2, i)).collect();
            let y: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&vars2, n + i)).collect();
            // T(x ∘ y)
            let prod = alg.mul_poly(&x, &y);
            let mut t_of_prod = Polynomial::zero(&vars2);
            for (k, p) in prod.iter().enumerate() {
                let mut unit = vec![crate::scalar::Rat::zero(); n];
                unit[k] = rat(1);
                let tau = t.eval(&unit);
                if !tau.is_zero() {
                    t_of_prod = t_of_prod.add(&p.scale(&tau));
                }
            }
            // T(x) T(y) - (S(x+y) - S(x) - S(y))
            let tx = t.embed(&vars2, &xpos);
            let ty = t.embed(&vars2, &ypos);
            let sx = s.embed(&vars2, &xpos);
            let sy = s.embed(&vars2, &ypos);
            let xplusy: Vec<Polynomial> = x.iter().zip(&y).map(|(a, b)| a.add(b)).collect();
            let s_sum = s.substitute(&xplusy);
            let polarized = tx.mul(&ty).sub(&s_sum.sub(&sx).sub(&sy));
            assert_eq!(t_of_prod, polarized, "trace pairings differ for {}", e.id);
        }
    }

    #[test]
    fn zorn_over_dual_numbers_cubed() {
        // J = Q[e]/(e^3), basis (1, e, e^2)
        let z2 = |i: usize| {
            let mut v = vec![rat(0); 3];
            v[i] = rat(1);
            v
        };
        let j = Algebra::new(
            vec!["one".into(), "e".into(), "e2".into()],
            Some(z2(0)),
            &[(0, 0, z2(0)), (0, 1, z2(1)), (0, 2, z2(2)), (1, 1, z2(2))],
        )
        .unwrap();
        let z = zorn_map(&j).unwrap();
        assert_eq!(z.degree(), 3);
        let c = check_involution(&z).unwrap();
        assert_eq!(c.homogeneous_degree(), Some(8));
    }

    #[test]
    fn zorn_over_split3_is_cubo_cubic() {
        let j = {
            use crate::jordan::Algebra;
            let e = |i: usize| {
                let mut v = vec![rat(0); 3];
                v[i] = rat(1);
                v
            };
            Algebra::new(
                vec!["p".into(), "q".into(), "r".into()],
                Some(vec![rat(1), rat(1), rat(1)]),
                &[(0, 0, e(0)), (1, 1, e(1)), (2, 2, e(2))],
            )
            .unwrap()
        };
        let z = zorn_map(&j).unwrap();
        assert_eq!(z.vars().len(), 8);
        assert_eq!(z.degree(), 3);
        let c = check_involution(&z).unwrap();
        assert_eq!(c.homogeneous_degree(), Some(8));
    }
}
