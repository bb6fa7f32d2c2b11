//! The finite universal algebra `(G, α, β, μ, ι; G₀)` in table form.
//!
//! Elements are the integers `1..=n`, and the units are exactly `1..=m`.
//! Every structure map is stored as a 1-based array in which `0` means
//! "unassigned", and the multiplication table stores `0` for products that
//! are not defined. Construction only checks shapes and value ranges, so a
//! [`FiniteAlgebra`] may be arbitrarily malformed; deciding what it is
//! belongs to [`crate::verify`].

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported number of elements.
pub const MAX_ORDER: usize = 1024;

/// Raw structure tables of a finite algebra with units-first numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAlgebra {
    n: usize,
    m: usize,
    u_left: Vec<u16>,
    u_right: Vec<u16>,
    inv: Vec<u16>,
    /// Row-major `n × n`.
    table: Vec<u16>,
}

/// Serialized with the table as a list of rows.
impl Serialize for FiniteAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FiniteAlgebra", 6)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("u_left", &self.u_left)?;
        s.serialize_field("u_right", &self.u_right)?;
        s.serialize_field("inv", &self.inv)?;
        let rows: Vec<&[u16]> = self.table.chunks(self.n).collect();
        s.serialize_field("table", &rows)?;
        s.end()
    }
}

fn check_type(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n || n > MAX_ORDER {
        return Err(Error::InvalidType { n, m });
    }
    Ok(())
}

fn narrow(what: &'static str, values: &[usize], expected: usize, n: usize) -> Result<Vec<u16>> {
    if values.len() != expected {
        return Err(Error::ShapeMismatch {
            what,
            expected,
            actual: values.len(),
        });
    }
    values
        .iter()
        .map(|&value| {
            if value > n {
                Err(Error::ValueOutOfRange { what, value, n })
            } else {
                Ok(value as u16)
            }
        })
        .collect()
}

impl FiniteAlgebra {
    /// Builds an algebra from its four tables. `table` is given as `n` rows.
    pub fn new(
        n: usize,
        m: usize,
        u_left: &[usize],
        u_right: &[usize],
        inv: &[usize],
        table: &[Vec<usize>],
    ) -> Result<Self> {
        check_type(n, m)?;
        if table.len() != n {
            return Err(Error::ShapeMismatch {
                what: "table",
                expected: n,
                actual: table.len(),
            });
        }
        let flat: Vec<usize> = table
            .iter()
            .map(|row| {
                if row.len() == n {
                    Ok(row.iter().copied())
                } else {
                    Err(Error::ShapeMismatch {
                        what: "table row",
                        expected: n,
                        actual: row.len(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Self::from_flat(n, m, u_left, u_right, inv, &flat)
    }

    /// Same as [`FiniteAlgebra::new`] with a row-major table of length `n²`.
    pub fn from_flat(
        n: usize,
        m: usize,
        u_left: &[usize],
        u_right: &[usize],
        inv: &[usize],
        table: &[usize],
    ) -> Result<Self> {
        check_type(n, m)?;
        Ok(Self {
            n,
            m,
            u_left: narrow("u_left", u_left, n, n)?,
            u_right: narrow("u_right", u_right, n, n)?,
            inv: narrow("inv", inv, n, n)?,
            table: narrow("table", table, n * n, n)?,
        })
    }

    /// An algebra of type `(n;m)` with every entry unassigned.
    pub fn blank(n: usize, m: usize) -> Result<Self> {
        check_type(n, m)?;
        Ok(Self {
            n,
            m,
            u_left: vec![0; n],
            u_right: vec![0; n],
            inv: vec![0; n],
            table: vec![0; n * n],
        })
    }

    pub(crate) fn from_raw(
        n: usize,
        m: usize,
        u_left: Vec<u16>,
        u_right: Vec<u16>,
        inv: Vec<u16>,
        table: Vec<u16>,
    ) -> Self {
        debug_assert!(u_left.len() == n && u_right.len() == n && inv.len() == n);
        debug_assert_eq!(table.len(), n * n);
        Self {
            n,
            m,
            u_left,
            u_right,
            inv,
            table,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The type pair `(n, m)`.
    pub fn type_pair(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn units(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.m
    }

    pub fn is_unit(&self, i: usize) -> bool {
        (1..=self.m).contains(&i)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_unit(&self, u: usize) -> Result<()> {
        if self.is_unit(u) {
            Ok(())
        } else {
            Err(Error::UnitOutOfRange { unit: u, m: self.m })
        }
    }

    /// Encoded `α(aᵢ)`; `0` when unassigned. Panics if `i` is out of range.
    #[inline]
    pub fn u_left(&self, i: usize) -> usize {
        self.u_left[i - 1] as usize
    }

    /// Encoded `β(aᵢ)`; `0` when unassigned.
    #[inline]
    pub fn u_right(&self, i: usize) -> usize {
        self.u_right[i - 1] as usize
    }

    /// Encoded `ι(aᵢ)`; `0` when unassigned.
    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i - 1] as usize
    }

    /// Raw table entry for `aᵢ · aⱼ`; `0` when the product is undefined.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.table[(i - 1) * self.n + (j - 1)] as usize
    }

    /// The product `aᵢ · aⱼ`, if the table defines one.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        match self.entry(i, j) {
            0 => None,
            k => Some(k),
        }
    }

    /// `(i, j)` is a composable pair: `β(aᵢ) = α(aⱼ)`.
    pub fn composable(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.is_composable(i, j))
    }

    #[inline]
    pub(crate) fn is_composable(&self, i: usize, j: usize) -> bool {
        self.u_right(i) == self.u_left(j)
    }

    /// All composable pairs in row-major order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.elements().flat_map(move |i| {
            self.elements()
                .filter(move |&j| self.is_composable(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn u_left_values(&self) -> Vec<usize> {
        self.u_left.iter().map(|&v| v as usize).collect()
    }

    pub fn u_right_values(&self) -> Vec<usize> {
        self.u_right.iter().map(|&v| v as usize).collect()
    }

    pub fn inv_values(&self) -> Vec<usize> {
        self.inv.iter().map(|&v| v as usize).collect()
    }

    /// The table as `n` rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    fn check_value(&self, what: &'static str, value: usize) -> Result<u16> {
        if value > self.n {
            Err(Error::ValueOutOfRange {
                what,
                value,
                n: self.n,
            })
        } else {
            Ok(value as u16)
        }
    }

    pub fn set_u_left(&mut self, i: usize, value: usize) -> Result<()> {
        self.check_index(i)?;
        self.u_left[i - 1] = self.check_value("u_left", value)?;
        Ok(())
    }

    pub fn set_u_right(&mut self, i: usize, value: usize) -> Result<()> {
        self.check_index(i)?;
        self.u_right[i - 1] = self.check_value("u_right", value)?;
        Ok(())
    }

    pub fn set_inv(&mut self, i: usize, value: usize) -> Result<()> {
        self.check_index(i)?;
        self.inv[i - 1] = self.check_value("inv", value)?;
        Ok(())
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: usize) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        let n = self.n;
        self.table[(i - 1) * n + (j - 1)] = self.check_value("table", value)?;
        Ok(())
    }

    /// Serialization used for ordering relabelings: `u_left ++ u_right ++ inv ++ table`.
    pub(crate) fn key_parts(&self) -> [&[u16]; 4] {
        [&self.u_left, &self.u_right, &self.inv, &self.table]
    }

    /// Transports every table along `perm`, where `perm[i - 1]` is the new
    /// label of element `i`. Unassigned entries stay unassigned.
    ///
    /// `perm` must be a permutation of `1..=n`; the caller is responsible for
    /// keeping units on `1..=m` if the result is to stay units-first.
    pub(crate) fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let map = |v: u16| {
            if v == 0 {
                0
            } else {
                perm[v as usize - 1] as u16
            }
        };
        let mut u_left = vec![0; n];
        let mut u_right = vec![0; n];
        let mut inv = vec![0; n];
        let mut table = vec![0; n * n];
        for i in 0..n {
            let pi = perm[i] - 1;
            u_left[pi] = map(self.u_left[i]);
            u_right[pi] = map(self.u_right[i]);
            inv[pi] = map(self.inv[i]);
            for (j, &pj) in perm.iter().enumerate() {
                table[pi * n + pj - 1] = map(self.table[i * n + j]);
            }
        }
        Self::from_raw(n, self.m, u_left, u_right, inv, table)
    }
}
