//! The classification catalog: rank-3 Jordan algebras in dimensions 3-6
//! together with their adjoint quadro-quadric involutions of P^2 through
//! P^5, plus the nilalgebras used to build them.  Data lives in JSON files
//! compiled into the library; every stored fact can be re-verified from
//! scratch with [`verify_entry`] / [`verify_table`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cremona::{
    check_involution, multidegree, scheme_type, RationalMap, SchemeType, MULTIDEGREE_TRIALS,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::jordan::{algebra_from_involution, direct_product, unitalize, Algebra};
use crate::poly::{parse_poly, Vars};
use crate::scalar::{parse_rat, Rat};

/// A non-unital nilpotent building block: named basis plus sparse
/// multiplication table, products given as coefficient vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NilEntry {
    pub id: String,
    pub basis: Vec<String>,
    pub table: Vec<TableRow>,
}

/// One product `b_i ∘ b_j` (given with `i <= j`) as coefficients over the
/// basis, each coefficient a rational in string form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

/// A recipe for building an algebra from smaller pieces.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// Explicit sparse multiplication table.
    MultTable {
        basis: Vec<String>,
        #[serde(default)]
        unit: Option<Vec<String>>,
        table: Vec<TableRow>,
    },
    /// The one-dimensional unital algebra.
    Scalar,
    /// The rank-2 algebra of a diagonal quadratic form: basis
    /// `e, w_1, .., w_(dim-1)` with `w_i^2 = -e` for `i <= neg` and all
    /// other products of basis vectors zero.
    Quadratic { dim: usize, neg: usize },
    /// A nilalgebra from the nil catalog, by id.
    Named { name: String },
    /// Direct product of unital factors.
    DirectProduct { factors: Vec<Construction> },
    /// Adjoin a unit to a non-unital (nilpotent) algebra.
    Unitalize { nil: Box<Construction> },
}

/// One catalog row: an algebra presented through its adjoint involution,
/// with the invariants the classification records for it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    /// Ambient space of the adjoint map: "P2" .. "P5".
    pub space: String,
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub vars: Vec<String>,
    /// Components of the adjoint involution (absent only on negative
    /// controls, which carry no Jordan structure).
    #[serde(default)]
    pub adjoint: Vec<String>,
    /// Coordinates of the unit element, rationals in string form.
    #[serde(default)]
    pub unit: Vec<String>,
    #[serde(default)]
    pub radical_dim: Option<usize>,
    #[serde(default)]
    pub scheme_type: Option<String>,
    #[serde(default)]
    pub multidegree: Option<Vec<u64>>,
    #[serde(default)]
    pub construction: Option<Construction>,
    /// Primary components of the saturated base scheme, each a generator
    /// list; their intersection must equal the saturated base ideal.
    #[serde(default)]
    pub decomposition: Option<Vec<Vec<String>>>,
    /// A deliberate non-example: the construction must FAIL the Jordan
    /// identity check.
    #[serde(default)]
    pub negative: bool,
    #[serde(default)]
    pub notes: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct NilFile {
    nilalgebras: Vec<NilEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EntryFile {
    entries: Vec<Entry>,
}

/// The full catalog: nil building blocks plus one entry list per ambient
/// space.
pub struct Catalog {
    pub nilalgebras: Vec<NilEntry>,
    pub entries: Vec<Entry>,
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The built-in catalog (parsed once).
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| {
        let nil: NilFile =
            serde_json::from_str(include_str!("data/nil.json")).expect("nil.json is well formed");
        let mut entries = Vec::new();
        for text in [
            include_str!("data/p2.json"),
            include_str!("data/p3.json"),
            include_str!("data/p4.json"),
            include_str!("data/p5.json"),
        ] {
            let f: EntryFile = serde_json::from_str(text).expect("catalog data is well formed");
            entries.extend(f.entries);
        }
        let mut seen = std::collections::HashSet::new();
        for e in &entries {
            assert!(seen.insert(e.id.clone()), "duplicate catalog id {}", e.id);
        }
        Catalog { nilalgebras: nil.nilalgebras, entries }
    })
}

/// Look up an entry by id.
pub fn entry(id: &str) -> Result<&'static Entry> {
    catalog()
        .entries
        .iter()
        .find(|e| e.id == id)
        .ok_or(Error::UnknownEntry(id.to_string()))
}

/// Look up a nilalgebra by id and realize it (no unit).
pub fn nilalgebra(id: &str) -> Result<Algebra> {
    let n = catalog()
        .nilalgebras
        .iter()
        .find(|e| e.id == id)
        .ok_or(Error::UnknownEntry(id.to_string()))?;
    build_table(&n.basis, None, &n.table)
}

fn parse_rats(strings: &[String]) -> Result<Vec<Rat>> {
    strings.iter().map(|s| parse_rat(s)).collect()
}

fn build_table(basis: &[String], unit: Option<&[String]>, table: &[TableRow]) -> Result<Algebra> {
    let entries: Vec<(usize, usize, Vec<Rat>)> = table
        .iter()
        .map(|r| Ok((r.i, r.j, parse_rats(&r.coeffs)?)))
        .collect::<Result<_>>()?;
    let unit = unit.map(parse_rats).transpose()?;
    Algebra::new(basis.to_vec(), unit, &entries)
}

fn suffix_basis(a: &Algebra, k: usize) -> Result<Algebra> {
    let names: Vec<String> = a.basis_names().iter().map(|n| format!("{n}.{k}")).collect();
    let mut entries = Vec::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let p = a.product_entry(i, j);
            if p.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                entries.push((i, j, p.to_vec()));
            }
        }
    }
    Algebra::new(names, a.unit().map(|u| u.to_vec()), &entries)
}

/// Realize a construction as an algebra.
pub fn build(c: &Construction) -> Result<Algebra> {
    match c {
        Construction::MultTable { basis, unit, table } => {
            build_table(basis, unit.as_deref(), table)
        }
        Construction::Scalar => Ok(Algebra::scalar("e")),
        Construction::Quadratic { dim, neg } => {
            if *dim < 2 || *neg + 1 > *dim {
                return Err(Error::structural("quadratic factor needs dim >= 2 and neg < dim"));
            }
            let mut names = vec!["e".to_string()];
            names.extend((1..*dim).map(|i| format!("w{i}")));
            let mut entries = Vec::new();
            let mut e = vec![Rat::from_integer((-1).into()); 1];
            e.resize(*dim, Rat::from_integer(0.into()));
            for i in 0..*dim {
                let mut unitv = vec![Rat::from_integer(0.into()); *dim];
                unitv[i] = Rat::from_integer(1.into());
                entries.push((0, i, unitv));
            }
            for i in 1..=*neg {
                entries.push((i, i, e.clone()));
            }
            let mut unit = vec![Rat::from_integer(0.into()); *dim];
            unit[0] = Rat::from_integer(1.into());
            Algebra::new(names, Some(unit), &entries)
        }
        Construction::Named { name } => nilalgebra(name),
        Construction::DirectProduct { factors } => {
            if factors.is_empty() {
                return Err(Error::structural("direct product needs at least one factor"));
            }
            // suffix basis names per factor so they never collide
            let mut algs = factors
                .iter()
                .enumerate()
                .map(|(k, f)| build(f).and_then(|a| suffix_basis(&a, k + 1)));
            let first = algs.next().expect("non-empty")?;
            algs.try_fold(first, |acc, a| direct_product(&acc, &a?))
        }
        Construction::Unitalize { nil } => unitalize(&build(nil)?),
    }
}

/// Compare two maps on rings of the same dimension, ignoring how the
/// variables are named (constructions name coordinates after basis
/// elements, stored adjoints use x, y, z, ...).
fn maps_equal_up_to_names(a: &RationalMap, b: &RationalMap) -> bool {
    a.vars().len() == b.vars().len()
        && a.components().len() == b.components().len()
        && a.components().iter().zip(b.components()).all(|(p, q)| {
            let pt: Vec<_> = p.terms().collect();
            let qt: Vec<_> = q.terms().collect();
            pt == qt
        })
}

impl Entry {
    /// The adjoint involution as stored.
    pub fn adjoint_map(&self) -> Result<RationalMap> {
        if self.adjoint.is_empty() {
            return Err(Error::structural(format!("entry {} stores no adjoint", self.id)));
        }
        let vars = Vars::new(self.vars.iter().cloned());
        let comps: Vec<&str> = self.adjoint.iter().map(|s| s.as_str()).collect();
        RationalMap::from_strings(&vars, &comps)
    }

    /// The algebra, reconstructed from the stored adjoint and unit.
    pub fn algebra(&self) -> Result<Algebra> {
        let f = self.adjoint_map()?;
        let unit = parse_rats(&self.unit)?;
        algebra_from_involution(&f, &unit)
    }

    /// The algebra built from the stored construction, if any.
    pub fn constructed_algebra(&self) -> Result<Option<Algebra>> {
        self.construction.as_ref().map(build).transpose()
    }
}

/// How much of an entry to re-verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Jordan structure only: reconstruction, Jordan identity, rank 3,
    /// radical dimension, construction consistency, involution property.
    Fast,
    /// Everything, including the Groebner-based scheme invariants:
    /// scheme type, multidegree, primary decomposition.
    Full,
}

/// Re-verify one catalog entry against first principles.
pub fn verify_entry(e: &Entry, level: Level, seed: u64) -> Result<()> {
    let fail = |reason: String| Error::EntryFailed { id: e.id.clone(), reason };

    if e.negative {
        let c = e
            .construction
            .as_ref()
            .ok_or_else(|| fail("negative control needs a construction".into()))?;
        let alg = build(c).map_err(|err| fail(format!("construction failed: {err}")))?;
        return match alg.check_jordan() {
            Err(Error::NotJordan { .. }) => Ok(()),
            Err(err) => Err(fail(format!("expected a Jordan-identity failure, got: {err}"))),
            Ok(()) => Err(fail("non-example unexpectedly satisfies the Jordan identity".into())),
        };
    }

    let f = e.adjoint_map().map_err(|err| fail(format!("bad adjoint: {err}")))?;
    check_involution(&f).map_err(|err| fail(format!("stored adjoint is not an involution: {err}")))?;

    let alg = e.algebra().map_err(|err| fail(format!("reconstruction failed: {err}")))?;
    alg.check_jordan()
        .map_err(|err| fail(format!("reconstructed algebra is not Jordan: {err}")))?;
    let rank = alg.rank().map_err(|err| fail(err.to_string()))?;
    if rank != 3 {
        return Err(fail(format!("rank {rank}, expected 3")));
    }
    let roundtrip = alg.adjoint_map().map_err(|err| fail(err.to_string()))?;
    if roundtrip != f {
        return Err(fail("adjoint of reconstructed algebra differs from stored map".into()));
    }
    if let Some(dr) = e.radical_dim {
        let found = alg.radical_dim().map_err(|err| fail(err.to_string()))?;
        if found != dr {
            return Err(fail(format!("radical dimension {found}, expected {dr}")));
        }
    }
    if let Some(constructed) = e
        .constructed_algebra()
        .map_err(|err| fail(format!("construction failed: {err}")))?
    {
        constructed
            .check_jordan()
            .map_err(|err| fail(format!("constructed algebra is not Jordan: {err}")))?;
        let cadj = constructed.adjoint_map().map_err(|err| fail(err.to_string()))?;
        if !maps_equal_up_to_names(&cadj, &f) {
            return Err(fail("constructed algebra has a different adjoint".into()));
        }
    }

    if level == Level::Fast {
        return Ok(());
    }

    if let Some(expected) = &e.scheme_type {
        let expected: SchemeType = expected.parse().map_err(|err: Error| fail(err.to_string()))?;
        let (found, _) = scheme_type(&f).map_err(|err| fail(err.to_string()))?;
        if found != expected {
            return Err(fail(format!("scheme type {found}, expected {expected}")));
        }
    }
    if let Some(md) = &e.multidegree {
        let expected: Vec<BigInt> = md.iter().map(|&d| BigInt::from(d)).collect();
        let found = multidegree(&f, seed, MULTIDEGREE_TRIALS).map_err(|err| fail(err.to_string()))?;
        if found != expected {
            return Err(fail(format!("multidegree {found:?}, expected {expected:?}")));
        }
    }
    if let Some(parts) = &e.decomposition {
        let vars = f.vars().clone();
        let mut inter: Option<Ideal> = None;
        for gens in parts {
            let polys = gens
                .iter()
                .map(|s| parse_poly(s, &vars))
                .collect::<Result<Vec<_>>>()
                .map_err(|err| fail(format!("bad decomposition generator: {err}")))?;
            let part = Ideal::new(&vars, polys);
            inter = Some(match inter {
                None => part,
                Some(acc) => crate::groebner::intersect(&acc, &part)
                    .map_err(|err| fail(err.to_string()))?,
            });
        }
        let inter = inter.ok_or_else(|| fail("empty decomposition".into()))?;
        let sat = crate::cremona::saturated_base_ideal(&f).map_err(|err| fail(err.to_string()))?;
        if !inter.same_ideal(&sat) {
            return Err(fail(
                "intersection of decomposition components differs from saturated base ideal".into(),
            ));
        }
    }
    Ok(())
}

/// Verify many entries (all, or one ambient space), fanning out across
/// entries when the parallel feature is enabled.  Returns per-entry results
/// in catalog order.
pub fn verify_table(space: Option<&str>, level: Level, seed: u64) -> Vec<(String, Result<()>)> {
    let selected: Vec<&'static Entry> = catalog()
        .entries
        .iter()
        .filter(|e| space.is_none_or(|s| e.space == s))
        .collect();
    crate::maybe_par_map(selected, move |e| (e.id.clone(), verify_entry(e, level, seed)))
}


/// Group entry ids by ambient space, in catalog order.
pub fn spaces() -> BTreeMap<String, Vec<String>> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for e in &catalog().entries {
        out.entry(e.space.clone()).or_default().push(e.id.clone());
    }
    out
}
