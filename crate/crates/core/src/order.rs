//! Monomial orders on exponent vectors.

use std::cmp::Ordering;

/// A term order on monomials of a fixed polynomial ring.
///
/// `Elim(k)` is the block order eliminating the first `k` variables: compare
/// the first block by degree-reverse-lexicographic order, then the remaining
/// variables the same way.  A Groebner basis for `Elim(k)` intersected with
/// the subring on the last variables generates the elimination ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Elim(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elim(k) => {
                let k = k.min(a.len());
                match degrevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => degrevlex(&a[k..], &b[k..]),
                    ord => ord,
                }
            }
        }
    }
}
