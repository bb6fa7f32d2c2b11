//! Groupoid morphisms, isomorphism search and canonical forms.

use std::fmt;

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::analysis::GroupTable;
use crate::constructions::from_group;
use crate::error::{Error, Result};
use crate::verify::Groupoid;

/// A relabeling of `1..=n`; `forward[i - 1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Bijection {
    forward: Vec<usize>,
}

impl Bijection {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut seen = vec![false; n + 1];
        for &y in &forward {
            if y == 0 || y > n || seen[y] {
                return Err(Error::ValueOutOfRange {
                    what: "bijection",
                    value: y,
                    n,
                });
            }
            seen[y] = true;
        }
        Ok(Self { forward })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            forward: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    /// Image of `i`. Panics if `i` is outside `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.forward[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut back = vec![0; self.n()];
        for (i, &y) in self.forward.iter().enumerate() {
            back[y - 1] = i + 1;
        }
        Self { forward: back }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Bijection) -> Self {
        Self {
            forward: self.forward.iter().map(|&y| other.apply(y)).collect(),
        }
    }

    /// Transports `a` along this bijection. The result is units-first only if
    /// the bijection maps units to units.
    pub fn transport(&self, a: &FiniteAlgebra) -> FiniteAlgebra {
        assert_eq!(self.n(), a.n(), "bijection size differs from algebra");
        a.relabel(&self.forward)
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.forward.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", i + 1, y)?;
        }
        Ok(())
    }
}

/// First composable pair `(i, j)` of `a` at which the total map `f` fails to
/// be multiplicative: `(f(i), f(j))` is not composable in `b`, or
/// `f(i j) ≠ f(i) f(j)`.
pub fn morphism_violation(
    f: &[usize],
    a: &Groupoid,
    b: &Groupoid,
) -> Result<Option<(usize, usize)>> {
    if f.len() != a.n() {
        return Err(Error::ShapeMismatch {
            what: "map",
            expected: a.n(),
            actual: f.len(),
        });
    }
    if let Some(&y) = f.iter().find(|&&y| y == 0 || y > b.n()) {
        return Err(Error::ValueOutOfRange {
            what: "map",
            value: y,
            n: b.n(),
        });
    }
    let image = |i: usize| f[i - 1];
    Ok(a.composable_pairs().find(|&(i, j)| {
        let (fi, fj) = (image(i), image(j));
        !b.is_composable(fi, fj) || b.entry(fi, fj) != image(a.entry(i, j))
    }))
}

/// `f(μ(x, y)) = μ'(f(x), f(y))` for every composable pair.
pub fn is_morphism(f: &[usize], a: &Groupoid, b: &Groupoid) -> Result<bool> {
    Ok(morphism_violation(f, a, b)?.is_none())
}

/// Searches for an isomorphism `a → b`.
///
/// Only bijections that send units to units and respect anchors are tried:
/// a multiplicative bijection maps idempotents (the units) to idempotents,
/// and then `f(α(x)) = α(f(x))` follows from `α(x) x = x`.
pub fn are_isomorphic(a: &Groupoid, b: &Groupoid) -> Option<Bijection> {
    if a.type_pair() != b.type_pair() || !same_invariants(a, b) {
        return None;
    }
    let n = a.n();
    let mut search = IsoSearch {
        a,
        b,
        f: vec![0; n + 1],
        used: vec![false; n + 1],
    };
    if !search.extend(1) {
        return None;
    }
    let forward = search.f[1..].to_vec();
    debug_assert!(is_morphism(&forward, a, b).unwrap());
    Some(Bijection { forward })
}

/// Cheap necessary condition: for each unit, the sorted counts of elements
/// anchored at it and each other unit, compared as a multiset over units.
fn same_invariants(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    let profile = |g: &FiniteAlgebra| {
        let m = g.m();
        let mut cells = vec![0usize; m * m];
        for i in g.elements() {
            cells[(g.u_left(i) - 1) * m + g.u_right(i) - 1] += 1;
        }
        let mut per_unit: Vec<Vec<usize>> = (0..m)
            .map(|u| {
                let mut row: Vec<usize> = (0..m).map(|v| cells[u * m + v]).collect();
                row.sort_unstable();
                row
            })
            .collect();
        per_unit.sort();
        per_unit
    };
    profile(a) == profile(b)
}

struct IsoSearch<'a> {
    a: &'a Groupoid,
    b: &'a Groupoid,
    /// 1-based; `0` = unassigned.
    f: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, x: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let n = a.n();
        if x > n {
            return true;
        }
        let candidates: Vec<usize> = if a.is_unit(x) {
            b.units().collect()
        } else {
            let (l, r) = (self.f[a.u_left(x)], self.f[a.u_right(x)]);
            b.elements()
                .filter(|&y| !b.is_unit(y) && b.u_left(y) == l && b.u_right(y) == r)
                .collect()
        };
        for y in candidates {
            if self.used[y] {
                continue;
            }
            self.f[x] = y;
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.used[y] = false;
            self.f[x] = 0;
        }
        false
    }

    /// Checks every pair among `1..=x`: composability must agree, and the
    /// product's image must match when assigned and be free otherwise.
    fn consistent(&self, x: usize) -> bool {
        let (a, b, f) = (self.a, self.b, &self.f);
        for p in 1..=x {
            for q in 1..=x {
                if a.is_composable(p, q) != b.is_composable(f[p], f[q]) {
                    return false;
                }
                if !a.is_composable(p, q) {
                    continue;
                }
                let t = a.entry(p, q);
                let image = b.entry(f[p], f[q]);
                if f[t] != 0 && image != f[t] {
                    return false;
                }
                if f[t] == 0 && self.used[image] {
                    return false;
                }
            }
        }
        true
    }
}

/// Isomorphism test for two group tables, through their `(k;1)` groupoids.
pub fn groups_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    match (from_group(g), from_group(h)) {
        (Ok(a), Ok(b)) => are_isomorphic(&a, &b).is_some(),
        _ => false,
    }
}

/// Serialized tables of a canonical relabeling:
/// `u_left ++ u_right ++ inv ++ table`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalKey(Vec<u16>);

impl CanonicalKey {
    pub fn of(a: &FiniteAlgebra) -> Self {
        Self(a.key_parts().concat())
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Rearranges `perm` into the next permutation in lexicographic order.
/// Returns `false` (leaving `perm` sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(perm: &mut [T]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        perm.reverse();
        return false;
    };
    let j = perm.iter().rposition(|x| *x > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// The relabeled copy of `g` with the smallest serialization over all
/// bijections preserving the unit set, and that serialization.
///
/// Cost is `m! · (n - m)!` relabelings.
pub fn canonical_form(g: &Groupoid) -> (Groupoid, CanonicalKey) {
    let (n, m) = g.type_pair();
    let parts = g.key_parts();
    let len = 3 * n + n * n;
    let mut best: Option<Vec<u16>> = None;
    let mut best_perm = Vec::new();
    let mut scratch = vec![0u16; len];

    let mut units: Vec<usize> = (1..=m).collect();
    loop {
        let mut rest: Vec<usize> = (m + 1..=n).collect();
        loop {
            let perm: Vec<usize> = units.iter().chain(rest.iter()).copied().collect();
            serialize_relabeled(parts, n, &perm, &mut scratch);
            if best.as_ref().is_none_or(|b| scratch < *b) {
                best = Some(scratch.clone());
                best_perm = perm;
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
        if !next_permutation(&mut units) {
            break;
        }
    }
    let relabeled = g.relabel(&best_perm);
    let key = CanonicalKey(best.expect("at least one permutation"));
    debug_assert_eq!(key, CanonicalKey::of(&relabeled));
    (Groupoid::new_unchecked(relabeled), key)
}

pub fn canonical_key(g: &Groupoid) -> CanonicalKey {
    canonical_form(g).1
}

fn serialize_relabeled(parts: [&[u16]; 4], n: usize, perm: &[usize], out: &mut [u16]) {
    let map = |v: u16| {
        if v == 0 {
            0
        } else {
            perm[v as usize - 1] as u16
        }
    };
    let [u_left, u_right, inv, table] = parts;
    for i in 0..n {
        let pi = perm[i] - 1;
        out[pi] = map(u_left[i]);
        out[n + pi] = map(u_right[i]);
        out[2 * n + pi] = map(inv[i]);
        for j in 0..n {
            out[3 * n + pi * n + perm[j] - 1] = map(table[i * n + j]);
        }
    }
}
