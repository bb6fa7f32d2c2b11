//! Exhaustive enumeration of groupoids of a type `(n;m)` up to isomorphism.
//!
//! [`enumerate_groupoids`] is a backtracking search. It fixes `α`, `β` on the
//! non-units, then an inversion that is an involution swapping anchors, then
//! fills the composable cells of the table. Unit and inverse cells are forced,
//! every value must keep `α`/`β` (closure), and rows and columns may not
//! repeat (cancellation). Each completed table still goes through the full
//! cascade, and survivors are merged by canonical key.
//!
//! [`enumerate_groupoids_unpruned`] is the reference path. It tries every
//! assignment of `α`, `β`, `ι` and every composable cell of the table and
//! keeps what the cascade accepts. It is only usable for tiny types.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::constructions::Named;
use crate::error::{Error, Result};
use crate::morphisms::{are_isomorphic, canonical_form, CanonicalKey};
use crate::verify::{classify_structure, Groupoid};

/// Largest `n` accepted by [`enumerate_groupoids`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// Largest number of candidate tables [`enumerate_groupoids_unpruned`] will try.
pub const MAX_UNPRUNED_CANDIDATES: u64 = 100_000_000;

/// Isomorphism classes of groupoids of one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub type_pair: (usize, usize),
    /// Canonical forms, sorted by key.
    pub representatives: Vec<Groupoid>,
    /// `keys[i]` is the canonical key of `representatives[i]`.
    pub keys: Vec<CanonicalKey>,
    /// Named construction isomorphic to each representative, if any.
    pub witness_names: Vec<Option<String>>,
    /// Number of labelled groupoids (units fixed on `1..=m`) that passed.
    pub labelled_count: u64,
}

impl ClassificationResult {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    fn from_survivors(n: usize, m: usize, found: Survivors) -> Self {
        let (keys, representatives): (Vec<_>, Vec<_>) = found.classes.into_iter().unzip();
        let witness_names = representatives.iter().map(match_named).collect();
        Self {
            type_pair: (n, m),
            representatives,
            keys,
            witness_names,
            labelled_count: found.labelled,
        }
    }
}

#[derive(Default)]
struct Survivors {
    classes: BTreeMap<CanonicalKey, Groupoid>,
    labelled: u64,
    /// Every passing table, when collecting instead of classifying.
    all: Option<Vec<Groupoid>>,
}

impl Survivors {
    fn collecting() -> Self {
        Self {
            all: Some(Vec::new()),
            ..Self::default()
        }
    }

    fn offer(&mut self, a: &FiniteAlgebra) {
        if !classify_structure(a).is_groupoid() {
            return;
        }
        self.labelled += 1;
        let g = Groupoid::new_unchecked(a.clone());
        if let Some(all) = &mut self.all {
            all.push(g);
            return;
        }
        let (canonical, key) = canonical_form(&g);
        self.classes.entry(key).or_insert(canonical);
    }

    fn merge(mut self, other: Survivors) -> Survivors {
        self.labelled += other.labelled;
        for (k, g) in other.classes {
            self.classes.entry(k).or_insert(g);
        }
        match (&mut self.all, other.all) {
            (Some(mine), Some(theirs)) => mine.extend(theirs),
            (None, theirs) => self.all = theirs,
            _ => {}
        }
        self
    }
}

fn check_type(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::InvalidType { n, m });
    }
    Ok(())
}

/// Non-unit anchor assignments, indexed by `0..m^(2(n-m))`.
fn anchors_for(n: usize, m: usize, mut index: u64) -> (Vec<usize>, Vec<usize>) {
    let mut u_left: Vec<usize> = (1..=m).collect();
    let mut u_right = u_left.clone();
    for _ in m..n {
        let cell = (index % (m * m) as u64) as usize;
        index /= (m * m) as u64;
        u_left.push(cell / m + 1);
        u_right.push(cell % m + 1);
    }
    (u_left, u_right)
}

fn anchor_count(n: usize, m: usize) -> u64 {
    ((m * m) as u64).pow((n - m) as u32)
}

/// All groupoids of type `(n;m)` up to isomorphism, for `n <= 6`.
pub fn enumerate_groupoids(n: usize, m: usize) -> Result<ClassificationResult> {
    let found = pruned_search(n, m, Survivors::default)?;
    Ok(ClassificationResult::from_survivors(n, m, found))
}

/// Every groupoid of type `(n;m)` on the labels `1..=n` (units on `1..=m`),
/// without identifying isomorphic ones. Order is unspecified.
pub fn labelled_groupoids(n: usize, m: usize) -> Result<Vec<Groupoid>> {
    let found = pruned_search(n, m, Survivors::collecting)?;
    Ok(found.all.unwrap_or_default())
}

fn pruned_search(n: usize, m: usize, init: fn() -> Survivors) -> Result<Survivors> {
    check_type(n, m)?;
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Unsupported {
            n,
            m,
            reason: "the pruned search supports n <= 6",
        });
    }
    Ok((0..anchor_count(n, m))
        .into_par_iter()
        .map(|index| {
            let (u_left, u_right) = anchors_for(n, m, index);
            let mut found = init();
            for inv in involutions(&u_left, &u_right, m) {
                TableFill::new(n, m, &u_left, &u_right, &inv).run(&mut found);
            }
            found
        })
        .reduce(init, Survivors::merge))
}

/// Inversions compatible with the anchors: involutions fixing the units and
/// sending an element anchored at `(u, v)` to one anchored at `(v, u)`.
fn involutions(u_left: &[usize], u_right: &[usize], m: usize) -> Vec<Vec<usize>> {
    fn go(inv: &mut Vec<usize>, u_left: &[usize], u_right: &[usize], out: &mut Vec<Vec<usize>>) {
        let Some(x) = inv.iter().position(|&v| v == 0) else {
            out.push(inv.clone());
            return;
        };
        for y in x..inv.len() {
            if inv[y] == 0 && u_left[y] == u_right[x] && u_right[y] == u_left[x] {
                inv[x] = y + 1;
                inv[y] = x + 1;
                go(inv, u_left, u_right, out);
                inv[x] = 0;
                inv[y] = 0;
            }
        }
    }
    let n = u_left.len();
    let mut inv: Vec<usize> = (1..=n).map(|i| if i <= m { i } else { 0 }).collect();
    let mut out = Vec::new();
    go(&mut inv, u_left, u_right, &mut out);
    out
}

/// Backtracking fill of the composable cells of one table.
struct TableFill {
    algebra: FiniteAlgebra,
    n: usize,
    /// Free cells in row-major order, each with its admissible values.
    free: Vec<(usize, usize, Vec<usize>)>,
    /// `row_used[i * (n + 1) + t]`: value `t` already appears in row `i`.
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    dead: bool,
}

impl TableFill {
    fn new(n: usize, m: usize, u_left: &[usize], u_right: &[usize], inv: &[usize]) -> Self {
        let algebra =
            FiniteAlgebra::from_flat(n, m, u_left, u_right, inv, &vec![0; n * n]).unwrap();
        let mut fill = Self {
            algebra,
            n,
            free: Vec::new(),
            row_used: vec![false; (n + 1) * (n + 1)],
            col_used: vec![false; (n + 1) * (n + 1)],
            dead: false,
        };
        for x in 1..=n {
            let (l, r, y) = (u_left[x - 1], u_right[x - 1], inv[x - 1]);
            fill.force(l, x, x);
            fill.force(x, r, x);
            fill.force(x, y, l);
            fill.force(y, x, r);
        }
        for i in 1..=n {
            for j in 1..=n {
                if fill.algebra.is_composable(i, j) && fill.algebra.entry(i, j) == 0 {
                    let values = (1..=n)
                        .filter(|&t| {
                            u_left[t - 1] == u_left[i - 1] && u_right[t - 1] == u_right[j - 1]
                        })
                        .collect();
                    fill.free.push((i, j, values));
                }
            }
        }
        fill
    }

    fn force(&mut self, i: usize, j: usize, t: usize) {
        let current = self.algebra.entry(i, j);
        if current == t {
            return;
        }
        if current != 0 || !self.can_place(i, j, t) {
            self.dead = true;
            return;
        }
        self.place(i, j, t);
    }

    fn can_place(&self, i: usize, j: usize, t: usize) -> bool {
        let w = self.n + 1;
        !self.row_used[i * w + t] && !self.col_used[j * w + t]
    }

    fn place(&mut self, i: usize, j: usize, t: usize) {
        let w = self.n + 1;
        self.algebra.set_entry(i, j, t).unwrap();
        self.row_used[i * w + t] = true;
        self.col_used[j * w + t] = true;
    }

    fn clear(&mut self, i: usize, j: usize, t: usize) {
        let w = self.n + 1;
        self.algebra.set_entry(i, j, 0).unwrap();
        self.row_used[i * w + t] = false;
        self.col_used[j * w + t] = false;
    }

    fn run(mut self, found: &mut Survivors) {
        if !self.dead {
            self.fill_from(0, found);
        }
    }

    fn fill_from(&mut self, cell: usize, found: &mut Survivors) {
        if cell == self.free.len() {
            found.offer(&self.algebra);
            return;
        }
        let (i, j) = (self.free[cell].0, self.free[cell].1);
        for v in 0..self.free[cell].2.len() {
            let t = self.free[cell].2[v];
            if self.can_place(i, j, t) {
                self.place(i, j, t);
                self.fill_from(cell + 1, found);
                self.clear(i, j, t);
            }
        }
    }
}

/// Number of candidates [`enumerate_groupoids_unpruned`] would try.
pub fn unpruned_candidate_count(n: usize, m: usize) -> Result<u64> {
    check_type(n, m)?;
    let mut total: u64 = 0;
    for index in 0..anchor_count(n, m) {
        let (u_left, u_right) = anchors_for(n, m, index);
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| u_right[i] == u_left[j])
            .count();
        let count = (n as u64)
            .checked_pow((n - m + cells) as u32)
            .ok_or(Error::Unsupported {
                n,
                m,
                reason: "search space overflows",
            })?;
        total = total.checked_add(count).ok_or(Error::Unsupported {
            n,
            m,
            reason: "search space overflows",
        })?;
    }
    Ok(total)
}

/// Reference enumeration: every `α`, `β` on non-units, every `ι` on
/// non-units with values in `1..=n`, and every value in `1..=n` on each
/// composable cell, filtered by the cascade alone.
pub fn enumerate_groupoids_unpruned(n: usize, m: usize) -> Result<ClassificationResult> {
    if unpruned_candidate_count(n, m)? > MAX_UNPRUNED_CANDIDATES {
        return Err(Error::Unsupported {
            n,
            m,
            reason: "unpruned search space exceeds 10^8 candidates",
        });
    }
    let non_units = n - m;
    let inv_count = (n as u64).pow(non_units as u32);
    let found = (0..anchor_count(n, m))
        .into_par_iter()
        .flat_map(|a| (0..inv_count).into_par_iter().map(move |i| (a, i)))
        .map(|(anchor_index, mut inv_index)| {
            let (u_left, u_right) = anchors_for(n, m, anchor_index);
            let mut inv: Vec<usize> = (1..=m).collect();
            for _ in 0..non_units {
                inv.push((inv_index % n as u64) as usize + 1);
                inv_index /= n as u64;
            }
            let mut a =
                FiniteAlgebra::from_flat(n, m, &u_left, &u_right, &inv, &vec![0; n * n]).unwrap();
            let cells: Vec<(usize, usize)> = a.composable_pairs().collect();
            for &(i, j) in &cells {
                a.set_entry(i, j, 1).unwrap();
            }
            let mut found = Survivors::default();
            loop {
                found.offer(&a);
                // Odometer over the composable cells.
                let mut carry = true;
                for &(i, j) in &cells {
                    let v = a.entry(i, j);
                    if v < n {
                        a.set_entry(i, j, v + 1).unwrap();
                        carry = false;
                        break;
                    }
                    a.set_entry(i, j, 1).unwrap();
                }
                if carry {
                    break;
                }
            }
            found
        })
        .reduce(Survivors::default, Survivors::merge);
    Ok(ClassificationResult::from_survivors(n, m, found))
}

/// Constructions tried by [`match_named`], in order.
pub fn named_candidates() -> Vec<Named> {
    let mut out = Vec::new();
    for k in 1..=MAX_ENUMERATION_ORDER {
        out.push(Named::Nul(k));
    }
    for k in 1..=6 {
        out.push(Named::Cyclic(k));
    }
    out.extend([
        Named::Klein,
        Named::S3,
        Named::EZ3,
        Named::Z2Z2,
        Named::F42,
        Named::K4Z4,
    ]);
    out
}

/// Name of the first known construction isomorphic to `g`.
pub fn match_named(g: &Groupoid) -> Option<String> {
    named_candidates().into_iter().find_map(|named| {
        let candidate = named.build().ok()?;
        if candidate.type_pair() != g.type_pair() {
            return None;
        }
        are_isomorphic(g, &candidate).map(|_| named.display_name())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{nul_groupoid, saltus_f42};
    use crate::fixtures;

    #[test]
    fn anchor_indexing_covers_all_assignments() {
        let mut seen = std::collections::HashSet::new();
        for index in 0..anchor_count(4, 2) {
            let (l, r) = anchors_for(4, 2, index);
            assert_eq!(&l[..2], &[1, 2]);
            assert_eq!(&r[..2], &[1, 2]);
            seen.insert((l, r));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn involution_choices() {
        // Two arrows anchored (1,2) and (2,1): only the swap works.
        assert_eq!(
            involutions(&[1, 2, 1, 2], &[1, 2, 2, 1], 2),
            vec![vec![1, 2, 4, 3]]
        );
        // Two loops at unit 2: identity or swap.
        assert_eq!(
            involutions(&[1, 2, 2, 2], &[1, 2, 2, 2], 2),
            vec![vec![1, 2, 3, 4], vec![1, 2, 4, 3]]
        );
        // An arrow with no reverse arrow has no inversion.
        assert!(involutions(&[1, 2, 1], &[1, 2, 2], 2).is_empty());
    }

    #[test]
    fn type_4_2() {
        let result = enumerate_groupoids(4, 2).unwrap();
        assert_eq!(result.class_count(), 3);
        let mut names: Vec<_> = result.witness_names.iter().flatten().cloned().collect();
        names.sort();
        assert_eq!(names, ["F(4;2)", "Z₂ ⊔ Z₂", "{e} ⊔ Z₃"]);
    }

    #[test]
    fn rejects_bad_types() {
        assert!(matches!(
            enumerate_groupoids(3, 0),
            Err(Error::InvalidType { .. })
        ));
        assert!(matches!(
            enumerate_groupoids(2, 3),
            Err(Error::InvalidType { .. })
        ));
        assert!(matches!(
            enumerate_groupoids(7, 1),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(
            enumerate_groupoids_unpruned(4, 1),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn names() {
        assert_eq!(match_named(&saltus_f42()).as_deref(), Some("F(4;2)"));
        let swapped_inverse_completion =
            Groupoid::new(fixtures::swapped_inverse_groupoid()).unwrap();
        assert_eq!(
            match_named(&swapped_inverse_completion).as_deref(),
            Some("{e} ⊔ Z₃")
        );
        assert_eq!(
            match_named(&nul_groupoid(4).unwrap()).as_deref(),
            Some("nul")
        );
        let g = Groupoid::new(fixtures::nine_three()).unwrap();
        assert_eq!(match_named(&g), None);
    }
}
