//! Builders for standard groupoids, all in units-first numbering.

use std::fmt;
use std::str::FromStr;

use crate::algebra::FiniteAlgebra;
use crate::analysis::GroupTable;
use crate::error::{Error, Result};
use crate::verify::{require_level, Groupoid, Level};

/// `G₀` as a groupoid over itself: only `x · x = x` is defined.
pub fn nul_groupoid(size: usize) -> Result<Groupoid> {
    let mut a = FiniteAlgebra::blank(size, size)?;
    for i in 1..=size {
        a.set_u_left(i, i)?;
        a.set_u_right(i, i)?;
        a.set_inv(i, i)?;
        a.set_entry(i, i, i)?;
    }
    Ok(Groupoid::new_unchecked(a))
}

/// A group as a `(k;1)` groupoid. The group's unit becomes element 1 and
/// the remaining elements follow in list order.
pub fn from_group(g: &GroupTable) -> Result<Groupoid> {
    g.check_axioms()?;
    let k = g.order();
    let mut order = vec![g.unit()];
    order.extend(g.elements().iter().copied().filter(|&e| e != g.unit()));
    let label = |e: usize| order.iter().position(|&x| x == e).unwrap() + 1;
    let mut a = FiniteAlgebra::blank(k, 1)?;
    for (p, &x) in order.iter().enumerate() {
        let i = p + 1;
        a.set_u_left(i, 1)?;
        a.set_u_right(i, 1)?;
        a.set_inv(i, label(g.inverse(x).expect("checked group")))?;
        for (q, &y) in order.iter().enumerate() {
            a.set_entry(i, q + 1, label(g.mul(x, y).expect("checked group")))?;
        }
    }
    Ok(Groupoid::new_unchecked(a))
}

/// `Zₖ` on `1..=k`, where element `r + 1` is the residue `r`.
pub fn cyclic_group(k: usize) -> Result<GroupTable> {
    if k == 0 {
        return Err(Error::InvalidType { n: 0, m: 1 });
    }
    let rows: Vec<Vec<usize>> = (0..k)
        .map(|a| (0..k).map(|b| (a + b) % k + 1).collect())
        .collect();
    Ok(GroupTable::new((1..=k).collect(), 1, &rows)?)
}

/// The Klein four-group `{(1), σ, τ, στ}` as `1, 2, 3, 4`.
pub fn klein_four() -> GroupTable {
    let rows = [
        vec![1, 2, 3, 4],
        vec![2, 1, 4, 3],
        vec![3, 4, 1, 2],
        vec![4, 3, 2, 1],
    ];
    GroupTable::new(vec![1, 2, 3, 4], 1, &rows).expect("Klein table is a group")
}

/// `S₃` with the identity as 1, the two 3-cycles as 2 and 3, and the three
/// transpositions as 4, 5, 6.
pub fn symmetric_s3() -> GroupTable {
    let rows = [
        vec![1, 2, 3, 4, 5, 6],
        vec![2, 3, 1, 6, 4, 5],
        vec![3, 1, 2, 5, 6, 4],
        vec![4, 5, 6, 1, 2, 3],
        vec![5, 6, 4, 3, 1, 2],
        vec![6, 4, 5, 2, 3, 1],
    ];
    GroupTable::new((1..=6).collect(), 1, &rows).expect("S3 table is a group")
}

/// The saltus groupoid `F(4;2)`: `1 = Id(Ox)`, `2 = Id(Oy)`, `3: Ox → Oy`,
/// `4: Oy → Ox`.
pub fn saltus_f42() -> Groupoid {
    Groupoid::new_unchecked(crate::fixtures::saltus_table())
}

/// Disjoint union of two monoidoids (or groupoids).
///
/// Elements are renumbered to stay units-first: units of `a`, then units
/// of `b`, then non-units of `a`, then non-units of `b`, each block in its
/// original order. Pairs from different sides are never composable.
pub fn disjoint_union(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    require_level(a, Level::Monoidoid)?;
    require_level(b, Level::Monoidoid)?;
    let (na, ma) = a.type_pair();
    let (nb, mb) = b.type_pair();
    let (n, m) = (na + nb, ma + mb);
    let label_a = |i: usize| if i <= ma { i } else { m + (i - ma) };
    let label_b = |i: usize| {
        if i <= mb {
            ma + i
        } else {
            m + (na - ma) + (i - mb)
        }
    };

    let mut out = FiniteAlgebra::blank(n, m)?;
    for (side, label) in [(a, &label_a as &dyn Fn(usize) -> usize), (b, &label_b)] {
        for i in side.elements() {
            let x = label(i);
            out.set_u_left(x, label(side.u_left(i)))?;
            out.set_u_right(x, label(side.u_right(i)))?;
            out.set_inv(x, label(side.inv(i)))?;
            for j in side.elements() {
                if let Some(p) = side.product(i, j) {
                    out.set_entry(x, label(j), label(p))?;
                }
            }
        }
    }
    Ok(out)
}

fn union_of_groups(a: &GroupTable, b: &GroupTable) -> Groupoid {
    let (a, b) = (from_group(a).unwrap(), from_group(b).unwrap());
    Groupoid::new_unchecked(disjoint_union(&a, &b).expect("groups are monoidoids"))
}

/// `K₄ ⊔ Z₄` as an `(8;2)` groupoid: `1 = (1)`, `2 = 0̂`, `3..=5 = σ, τ, στ`,
/// `6..=8 = 1̂, 2̂, 3̂`.
pub fn k4_z4() -> Groupoid {
    union_of_groups(&klein_four(), &cyclic_group(4).unwrap())
}

/// `{e} ⊔ Z₃`.
pub fn e_z3() -> Groupoid {
    union_of_groups(&cyclic_group(1).unwrap(), &cyclic_group(3).unwrap())
}

/// `Z₂ ⊔ Z₂`.
pub fn z2_z2() -> Groupoid {
    union_of_groups(&cyclic_group(2).unwrap(), &cyclic_group(2).unwrap())
}

/// A named construction, as accepted on the command line
/// (`nul:<k>`, `zn:<k>`, `klein`, `s3`, `f42`, `k4-z4`, `e-z3`, `z2-z2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Nul(usize),
    Cyclic(usize),
    Klein,
    S3,
    F42,
    K4Z4,
    EZ3,
    Z2Z2,
}

impl Named {
    pub fn build(self) -> Result<Groupoid> {
        match self {
            Named::Nul(k) => nul_groupoid(k),
            Named::Cyclic(k) => from_group(&cyclic_group(k)?),
            Named::Klein => from_group(&klein_four()),
            Named::S3 => from_group(&symmetric_s3()),
            Named::F42 => Ok(saltus_f42()),
            Named::K4Z4 => Ok(k4_z4()),
            Named::EZ3 => Ok(e_z3()),
            Named::Z2Z2 => Ok(z2_z2()),
        }
    }

    /// Display name used when labelling classification results.
    pub fn display_name(self) -> String {
        match self {
            Named::Nul(_) => "nul".into(),
            Named::Cyclic(k) => format!("Z{}", subscript(k)),
            Named::Klein => "K₄".into(),
            Named::S3 => "S₃".into(),
            Named::F42 => "F(4;2)".into(),
            Named::K4Z4 => "K₄ ⊔ Z₄".into(),
            Named::EZ3 => "{e} ⊔ Z₃".into(),
            Named::Z2Z2 => "Z₂ ⊔ Z₂".into(),
        }
    }
}

fn subscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Nul(k) => write!(f, "nul:{k}"),
            Named::Cyclic(k) => write!(f, "zn:{k}"),
            Named::Klein => f.write_str("klein"),
            Named::S3 => f.write_str("s3"),
            Named::F42 => f.write_str("f42"),
            Named::K4Z4 => f.write_str("k4-z4"),
            Named::EZ3 => f.write_str("e-z3"),
            Named::Z2Z2 => f.write_str("z2-z2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "unknown construction {0:?}; expected nul:<k>, zn:<k>, klein, s3, f42, k4-z4, e-z3 or z2-z2"
)]
pub struct UnknownConstruction(pub String);

impl FromStr for Named {
    type Err = UnknownConstruction;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let unknown = || UnknownConstruction(s.to_string());
        let sized = |rest: &str| rest.parse::<usize>().ok().filter(|&k| k >= 1);
        if let Some(rest) = s.strip_prefix("nul:") {
            return sized(rest).map(Named::Nul).ok_or_else(unknown);
        }
        if let Some(rest) = s.strip_prefix("zn:") {
            return sized(rest).map(Named::Cyclic).ok_or_else(unknown);
        }
        match s {
            "klein" => Ok(Named::Klein),
            "s3" => Ok(Named::S3),
            "f42" => Ok(Named::F42),
            "k4-z4" => Ok(Named::K4Z4),
            "e-z3" => Ok(Named::EZ3),
            "z2-z2" => Ok(Named::Z2Z2),
            _ => Err(unknown()),
        }
    }
}
