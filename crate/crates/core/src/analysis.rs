//! Derived structure of a groupoid: anchors, fibres, transitivity and
//! isotropy groups.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::error::{GroupAxiom, Result};
use crate::verify::{require_level, Groupoid, Level};

/// A finite group given by a total multiplication table over a list of
/// element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    elements: Vec<usize>,
    unit: usize,
    /// Row-major over positions in `elements`; entries are element ids.
    mul: Vec<usize>,
}

impl Serialize for GroupTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GroupTable", 3)?;
        s.serialize_field("unit", &self.unit)?;
        s.serialize_field("elements", &self.elements)?;
        s.serialize_field("table", &self.rows())?;
        s.end()
    }
}

impl GroupTable {
    /// Builds a group table, checking closure, identity, inverses and
    /// associativity. `rows[p][q]` is the product of `elements[p]` and
    /// `elements[q]`.
    pub fn new(elements: Vec<usize>, unit: usize, rows: &[Vec<usize>]) -> Result<Self, GroupAxiom> {
        let k = elements.len();
        if k == 0 {
            return Err(GroupAxiom::Empty);
        }
        for (p, e) in elements.iter().enumerate() {
            if elements[..p].contains(e) {
                return Err(GroupAxiom::DuplicateElement(*e));
            }
        }
        let cells: usize = rows.iter().map(Vec::len).sum();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(GroupAxiom::TableShape {
                expected: k * k,
                actual: cells,
            });
        }
        let table = Self {
            elements,
            unit,
            mul: rows.concat(),
        };
        table.check_axioms()?;
        Ok(table)
    }

    /// Re-verifies the group axioms by exhaustive scan.
    pub fn check_axioms(&self) -> Result<(), GroupAxiom> {
        let k = self.order();
        let Some(e) = self.position(self.unit) else {
            return Err(GroupAxiom::UnitNotMember(self.unit));
        };
        let mut pos = Vec::with_capacity(k * k);
        for p in 0..k {
            for q in 0..k {
                match self.position(self.mul[p * k + q]) {
                    Some(r) => pos.push(r),
                    None => return Err(GroupAxiom::Closure(self.elements[p], self.elements[q])),
                }
            }
        }
        for p in 0..k {
            if pos[e * k + p] != p || pos[p * k + e] != p {
                return Err(GroupAxiom::Identity(self.unit));
            }
        }
        for p in 0..k {
            if !(0..k).any(|q| pos[p * k + q] == e && pos[q * k + p] == e) {
                return Err(GroupAxiom::Inverse(self.elements[p]));
            }
        }
        for p in 0..k {
            for q in 0..k {
                for r in 0..k {
                    if pos[pos[p * k + q] * k + r] != pos[p * k + pos[q * k + r]] {
                        let el = &self.elements;
                        return Err(GroupAxiom::Associativity(el[p], el[q], el[r]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn position(&self, element: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == element)
    }

    /// Product of two member elements; `None` if either is not a member.
    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        let (p, q) = (self.position(a)?, self.position(b)?);
        Some(self.mul[p * self.order() + q])
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.position(a)?;
        self.elements
            .iter()
            .copied()
            .find(|&b| self.mul(a, b) == Some(self.unit))
    }

    /// The table as rows indexed by position.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order())
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// `(α(aᵢ), β(aᵢ))`.
pub fn anchor(a: &FiniteAlgebra, i: usize) -> Result<(usize, usize)> {
    a.check_index(i)?;
    Ok((a.u_left(i), a.u_right(i)))
}

/// First unit pair `(u, v)`, in lexicographic order, that is not the anchor
/// of any element; `None` when the groupoid is transitive.
pub fn missing_anchor(g: &Groupoid) -> Option<(usize, usize)> {
    let m = g.m();
    let mut hit = vec![false; m * m];
    for i in g.elements() {
        hit[(g.u_left(i) - 1) * m + (g.u_right(i) - 1)] = true;
    }
    hit.iter().position(|&h| !h).map(|p| (p / m + 1, p % m + 1))
}

pub fn is_transitive(g: &Groupoid) -> bool {
    missing_anchor(g).is_none()
}

/// `α⁻¹(u)` in ascending order.
pub fn alpha_fibre(a: &FiniteAlgebra, u: usize) -> Result<Vec<usize>> {
    a.check_unit(u)?;
    Ok(a.elements().filter(|&i| a.u_left(i) == u).collect())
}

/// `β⁻¹(u)` in ascending order.
pub fn beta_fibre(a: &FiniteAlgebra, u: usize) -> Result<Vec<usize>> {
    a.check_unit(u)?;
    Ok(a.elements().filter(|&i| a.u_right(i) == u).collect())
}

/// The isotropy group `G(u) = α⁻¹(u) ∩ β⁻¹(u)` under the restricted product.
pub fn isotropy_group(g: &Groupoid, u: usize) -> Result<GroupTable> {
    g.check_unit(u)?;
    let elements: Vec<usize> = g
        .elements()
        .filter(|&i| g.u_left(i) == u && g.u_right(i) == u)
        .collect();
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|&x| elements.iter().map(|&y| g.entry(x, y)).collect())
        .collect();
    Ok(GroupTable::new(elements, u, &rows)?)
}

/// The isotropy group bundle `Is(G)` and its split into isotropy groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropyBundle {
    /// Elements with `α(x) = β(x)`, ascending.
    pub elements: Vec<usize>,
    /// `groups[u - 1]` is the isotropy group at unit `u`.
    pub groups: Vec<GroupTable>,
}

pub fn isotropy_bundle(g: &Groupoid) -> IsotropyBundle {
    let elements = g
        .elements()
        .filter(|&i| g.u_left(i) == g.u_right(i))
        .collect();
    let groups = g
        .units()
        .map(|u| isotropy_group(g, u).expect("isotropy groups of a groupoid are groups"))
        .collect();
    IsotropyBundle { elements, groups }
}

/// `α = β` everywhere.
pub fn is_group_bundle(g: &Groupoid) -> bool {
    g.elements().all(|i| g.u_left(i) == g.u_right(i))
}

/// Solves for an inversion ignoring the supplied one: for each `i`, the
/// unique `j` with `i j = α(i)` and `j i = β(i)`. Returns `None` when some
/// element has no such `j` or more than one.
///
/// Requires `a` to be at least a monoidoid.
pub fn find_inverses(a: &FiniteAlgebra) -> Result<Option<Vec<usize>>> {
    require_level(a, Level::Monoidoid)?;
    let mut inverses = Vec::with_capacity(a.n());
    for i in a.elements() {
        let mut candidates = a.elements().filter(|&j| {
            a.is_composable(i, j)
                && a.is_composable(j, i)
                && a.entry(i, j) == a.u_left(i)
                && a.entry(j, i) == a.u_right(i)
        });
        match (candidates.next(), candidates.next()) {
            (Some(j), None) => inverses.push(j),
            _ => return Ok(None),
        }
    }
    Ok(Some(inverses))
}
