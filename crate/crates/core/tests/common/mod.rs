//! Reference implementations used as test oracles. The oracles work on plain
//! arrays and do not call the library's checking, isomorphism or enumeration
//! code; [`all_labelled_up_to`] is only a fixture source.

#![allow(dead_code)]

use groupoid_core::{FiniteAlgebra, Groupoid};

/// A structure table as plain 0-based arrays; `NONE` marks an undefined product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raw {
    pub n: usize,
    pub m: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub inv: Vec<usize>,
    pub t: Vec<Vec<usize>>,
}

pub const NONE: usize = usize::MAX;

impl Raw {
    pub fn of(x: &FiniteAlgebra) -> Self {
        let down = |v: usize| if v == 0 { NONE } else { v - 1 };
        let n = x.n();
        Raw {
            n,
            m: x.m(),
            a: x.u_left_values().into_iter().map(down).collect(),
            b: x.u_right_values().into_iter().map(down).collect(),
            inv: x.inv_values().into_iter().map(down).collect(),
            t: x.table_rows()
                .into_iter()
                .map(|r| r.into_iter().map(down).collect())
                .collect(),
        }
    }

    pub fn composable(&self, x: usize, y: usize) -> bool {
        self.b[x] == self.a[y]
    }

    /// Groupoid axioms straight from the definition.
    pub fn is_groupoid(&self) -> bool {
        let n = self.n;
        let units: Vec<usize> = (0..self.m).collect();
        let is_unit = |x: usize| x < self.m;
        // α, β, ι total and α, β land in the unit set, which they fix.
        for x in 0..n {
            if self.a[x] == NONE || self.b[x] == NONE || self.inv[x] == NONE {
                return false;
            }
            if !is_unit(self.a[x]) || !is_unit(self.b[x]) {
                return false;
            }
        }
        for &u in &units {
            if self.a[u] != u || self.b[u] != u {
                return false;
            }
        }
        // μ defined exactly on composable pairs, with α(xy) = α(x), β(xy) = β(y).
        for x in 0..n {
            for y in 0..n {
                let p = self.t[x][y];
                if self.composable(x, y) != (p != NONE) {
                    return false;
                }
                if p != NONE && (self.a[p] != self.a[x] || self.b[p] != self.b[y]) {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.composable(x, y) && self.composable(y, z) {
                        let l = self.t[self.t[x][y]][z];
                        let r = self.t[x][self.t[y][z]];
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        // α(x) x = x = x β(x).
        for x in 0..n {
            if self.t[self.a[x]][x] != x || self.t[x][self.b[x]] != x {
                return false;
            }
        }
        // x ι(x) = α(x), ι(x) x = β(x).
        for x in 0..n {
            let y = self.inv[x];
            if !self.composable(x, y) || !self.composable(y, x) {
                return false;
            }
            if self.t[x][y] != self.a[x] || self.t[y][x] != self.b[x] {
                return false;
            }
        }
        true
    }

    /// True if `f` (0-based images) carries every part of `self` onto `other`.
    pub fn maps_onto(&self, other: &Raw, f: &[usize]) -> bool {
        let img = |v: usize| if v == NONE { NONE } else { f[v] };
        (0..self.n).all(|x| {
            other.a[f[x]] == img(self.a[x])
                && other.b[f[x]] == img(self.b[x])
                && other.inv[f[x]] == img(self.inv[x])
                && (0..self.n).all(|y| other.t[f[x]][f[y]] == img(self.t[x][y]))
        })
    }
}

/// Calls `visit` with every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn go(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == p.len() {
            return visit(p);
        }
        for i in k..p.len() {
            p.swap(k, i);
            if !go(p, k + 1, visit) {
                p.swap(k, i);
                return false;
            }
            p.swap(k, i);
        }
        true
    }
    let mut p: Vec<usize> = (0..n).collect();
    go(&mut p, 0, &mut visit);
}

/// Isomorphism by trying all `n!` bijections, with no unit-to-unit pruning.
pub fn brute_force_isomorphic(x: &FiniteAlgebra, y: &FiniteAlgebra) -> bool {
    if x.n() != y.n() {
        return false;
    }
    let (rx, ry) = (Raw::of(x), Raw::of(y));
    let mut found = false;
    for_each_permutation(x.n(), |f| {
        found = rx.maps_onto(&ry, f);
        !found
    });
    found
}

/// Group multiplication tables on `0..k` with identity `0`, one per
/// isomorphism class: every Latin square with the identity row and column
/// fixed, filtered by associativity, then deduplicated by trying all
/// relabelings that fix `0`.
pub fn group_census(k: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(t: &mut Vec<Vec<usize>>, cell: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let k = t.len();
        if cell == (k - 1) * (k - 1) {
            out.push(t.clone());
            return;
        }
        let (i, j) = (cell / (k - 1) + 1, cell % (k - 1) + 1);
        for v in 0..k {
            if (0..j).any(|c| t[i][c] == v) || (0..i).any(|r| t[r][j] == v) {
                continue;
            }
            t[i][j] = v;
            fill(t, cell + 1, out);
        }
        t[i][j] = usize::MAX;
    }
    let mut t = vec![vec![usize::MAX; k]; k];
    t[0] = (0..k).collect();
    for (x, row) in t.iter_mut().enumerate() {
        row[0] = x;
    }
    let mut latin = Vec::new();
    if k == 1 {
        latin.push(t.clone());
    } else {
        fill(&mut t, 0, &mut latin);
    }
    let associative = |t: &Vec<Vec<usize>>| {
        (0..k).all(|x| (0..k).all(|y| (0..k).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
    };
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    for g in latin.into_iter().filter(associative) {
        let seen = classes.iter().any(|h| {
            let mut iso = false;
            for_each_permutation(k, |f| {
                iso = f[0] == 0 && (0..k).all(|x| (0..k).all(|y| h[f[x]][f[y]] == f[g[x][y]]));
                !iso
            });
            iso
        });
        if !seen {
            classes.push(g);
        }
    }
    classes
}

/// Labelled groupoids of type `(n;m)` found by trying every total assignment
/// and checking the definition directly. Only feasible for `n <= 3`.
pub fn brute_force_labelled(n: usize, m: usize) -> Vec<Raw> {
    let mut out = Vec::new();
    let non_units = n - m;
    let anchor_choices = (m * m).pow(non_units as u32);
    for anchors in 0..anchor_choices {
        let mut a: Vec<usize> = (0..m).collect();
        let mut b = a.clone();
        let mut rest = anchors;
        for _ in 0..non_units {
            a.push(rest % (m * m) / m);
            b.push(rest % m);
            rest /= m * m;
        }
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| b[x] == a[y])
            .collect();
        for inv_code in 0..n.pow(n as u32) {
            let inv: Vec<usize> = (0..n).map(|x| inv_code / n.pow(x as u32) % n).collect();
            for table_code in 0..n.pow(cells.len() as u32) {
                let mut t = vec![vec![NONE; n]; n];
                for (c, &(x, y)) in cells.iter().enumerate() {
                    t[x][y] = table_code / n.pow(c as u32) % n;
                }
                let raw = Raw {
                    n,
                    m,
                    a: a.clone(),
                    b: b.clone(),
                    inv: inv.clone(),
                    t,
                };
                if raw.is_groupoid() {
                    out.push(raw);
                }
            }
        }
    }
    out
}

/// Every unit-preserving relabeling of `g`, as 1-based image lists.
pub fn unit_preserving_relabelings(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_permutation(m, |pu| {
        for_each_permutation(n - m, |pr| {
            let f: Vec<usize> = pu
                .iter()
                .map(|&u| u + 1)
                .chain(pr.iter().map(|&r| m + r + 1))
                .collect();
            out.push(f);
            true
        });
        true
    });
    out
}

pub fn all_labelled_up_to(max_n: usize) -> Vec<Groupoid> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            out.extend(groupoid_core::labelled_groupoids(n, m).unwrap());
        }
    }
    out
}

/// Group isomorphism between the isotropy groups at units `u` and `v`
/// (0-based), by trying every bijection.
pub fn isotropy_groups_isomorphic(r: &Raw, u: usize, v: usize) -> bool {
    let gu: Vec<usize> = (0..r.n).filter(|&x| r.a[x] == u && r.b[x] == u).collect();
    let gv: Vec<usize> = (0..r.n).filter(|&x| r.a[x] == v && r.b[x] == v).collect();
    if gu.len() != gv.len() {
        return false;
    }
    let pos = |list: &[usize], x: usize| list.iter().position(|&y| y == x).unwrap();
    let mut found = false;
    for_each_permutation(gu.len(), |f| {
        found = (0..gu.len()).all(|i| {
            (0..gu.len()).all(|j| {
                let p = pos(&gu, r.t[gu[i]][gu[j]]);
                gv[f[p]] == r.t[gv[f[i]]][gv[f[j]]]
            })
        });
        !found
    });
    found
}

/// Every structural law of a groupoid, checked on the raw tables. Returns
/// the first law that fails.
pub fn check_laws(r: &Raw) -> Result<(), String> {
    let fail = |law: &str, at: String| Err(format!("{law} fails at {at}"));
    for u in 0..r.m {
        if (r.a[u], r.b[u], r.t[u][u]) != (u, u, u) {
            return fail("unit idempotence", format!("{}", u + 1));
        }
    }
    for x in 0..r.n {
        for y in (0..r.n).filter(|&y| r.composable(x, y)) {
            let p = r.t[x][y];
            if (r.a[p], r.b[p]) != (r.a[x], r.b[y]) {
                return fail("closure", format!("({},{})", x + 1, y + 1));
            }
        }
        for u in 0..r.m {
            if r.composable(x, u) && r.t[x][u] == x && u != r.b[x] {
                return fail("right unit uniqueness", format!("({},{})", x + 1, u + 1));
            }
            if r.composable(u, x) && r.t[u][x] == x && u != r.a[x] {
                return fail("left unit uniqueness", format!("({},{})", u + 1, x + 1));
            }
        }
        let y = r.inv[x];
        if r.inv[y] != x || (r.a[y], r.b[y]) != (r.b[x], r.a[x]) {
            return fail("inversion involution", format!("{}", x + 1));
        }
        for z1 in 0..r.n {
            for z2 in z1 + 1..r.n {
                if r.composable(x, z1) && r.composable(x, z2) && r.t[x][z1] == r.t[x][z2] {
                    return fail(
                        "left cancellation",
                        format!("({},{},{})", x + 1, z1 + 1, z2 + 1),
                    );
                }
                if r.composable(z1, x) && r.composable(z2, x) && r.t[z1][x] == r.t[z2][x] {
                    return fail(
                        "right cancellation",
                        format!("({},{},{})", x + 1, z1 + 1, z2 + 1),
                    );
                }
            }
        }
    }
    for u in 0..r.m {
        let members: Vec<usize> = (0..r.n).filter(|&x| r.a[x] == u && r.b[x] == u).collect();
        let closed = members.iter().all(|&x| {
            members.contains(&r.inv[x]) && members.iter().all(|&y| members.contains(&r.t[x][y]))
        });
        if !closed || !members.contains(&u) {
            return fail("isotropy group", format!("{}", u + 1));
        }
    }
    let transitive =
        (0..r.m).all(|u| (0..r.m).all(|v| (0..r.n).any(|x| r.a[x] == u && r.b[x] == v)));
    if transitive {
        for v in 1..r.m {
            if !isotropy_groups_isomorphic(r, 0, v) {
                return fail("isotropy isomorphism", format!("units 1 and {}", v + 1));
            }
        }
    }
    Ok(())
}
