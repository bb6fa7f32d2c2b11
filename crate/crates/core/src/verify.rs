//! The staged verification cascade.
//!
//! Each stage assumes the previous ones passed:
//!
//! 1. [`validate_structure`]: every structure value is assigned and in range,
//!    units are fixed by `α`, `β`, `ι`, the unit maps are onto `1..=m`, `ι` is
//!    injective, and the table is non-zero exactly on composable pairs.
//! 2. [`check_associativity`]: `α`/`β` are carried along products, then
//!    `(x y) z = x (y z)` on every composable triple.
//! 3. [`check_identities`]: `α(x) x = x β(x) = x`.
//! 4. [`check_inverses`]: `x ι(x) = α(x)` and `ι(x) x = β(x)`.
//!
//! All scans run in ascending (lexicographic) order, so the witness of a
//! failure is the first violation found and is deterministic.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// Highest stage of the cascade an algebra passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Level {
    Malformed,
    Structure,
    Semigroupoid,
    Monoidoid,
    Groupoid,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::Malformed => "Malformed",
            Level::Structure => "Structure",
            Level::Semigroupoid => "Semigroupoid",
            Level::Monoidoid => "Monoidoid",
            Level::Groupoid => "Groupoid",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FailureCode {
    IncompleteStructure,
    UnitOutOfRange,
    NonInjectiveInversion,
    UnitNotSurjective,
    ProductOnNonComposable,
    UnitSelfMapViolation,
    NotAssociative,
    NoUnit,
    NoInverse,
}

impl FailureCode {
    /// The last level passed by an algebra failing with this code.
    pub fn level(self) -> Level {
        match self {
            FailureCode::NotAssociative => Level::Structure,
            FailureCode::NoUnit => Level::Semigroupoid,
            FailureCode::NoInverse => Level::Monoidoid,
            _ => Level::Malformed,
        }
    }
}

/// Elements that exhibit a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<usize>")]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl From<Witness> for Vec<usize> {
    fn from(w: Witness) -> Self {
        match w {
            Witness::Element(i) => vec![i],
            Witness::Pair(i, j) => vec![i, j],
            Witness::Triple(i, j, k) => vec![i, j, k],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(i) => write!(f, "{i}"),
            Witness::Pair(i, j) => write!(f, "({i},{j})"),
            Witness::Triple(i, j, k) => write!(f, "({i},{j},{k})"),
        }
    }
}

/// First failure found by the cascade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Diagnostic {
    pub code: FailureCode,
    pub witness: Witness,
}

impl Diagnostic {
    pub fn new(code: FailureCode, witness: Witness) -> Self {
        Self { code, witness }
    }

    /// Re-checks the witness in isolation: true iff the named condition is
    /// really violated at the witness elements.
    pub fn is_violated_by(&self, a: &FiniteAlgebra) -> bool {
        let n = a.n();
        let m = a.m();
        let in_range = |i: usize| (1..=n).contains(&i);
        match (self.code, self.witness) {
            (FailureCode::IncompleteStructure, Witness::Element(i)) => {
                in_range(i) && (a.u_left(i) == 0 || a.u_right(i) == 0 || a.inv(i) == 0)
            }
            (FailureCode::IncompleteStructure, Witness::Pair(i, j)) => {
                in_range(i) && in_range(j) && a.is_composable(i, j) && a.entry(i, j) == 0
            }
            (FailureCode::UnitOutOfRange, Witness::Element(i)) => {
                in_range(i) && (a.u_left(i) > m || a.u_right(i) > m)
            }
            (FailureCode::UnitSelfMapViolation, Witness::Element(k)) => {
                (1..=m).contains(&k) && (a.u_left(k) != k || a.u_right(k) != k || a.inv(k) != k)
            }
            (FailureCode::UnitNotSurjective, Witness::Element(u)) => {
                (1..=m).contains(&u)
                    && (a.elements().all(|i| a.u_left(i) != u)
                        || a.elements().all(|i| a.u_right(i) != u))
            }
            (FailureCode::NonInjectiveInversion, Witness::Pair(i, j)) => {
                in_range(i) && in_range(j) && i != j && a.inv(i) == a.inv(j)
            }
            (FailureCode::ProductOnNonComposable, Witness::Pair(i, j)) => {
                in_range(i) && in_range(j) && !a.is_composable(i, j) && a.entry(i, j) != 0
            }
            (FailureCode::NotAssociative, Witness::Pair(i, j)) => {
                in_range(i) && in_range(j) && a.is_composable(i, j) && {
                    let t = a.entry(i, j);
                    t == 0 || a.u_left(t) != a.u_left(i) || a.u_right(t) != a.u_right(j)
                }
            }
            (FailureCode::NotAssociative, Witness::Triple(i, j, k)) => {
                if !(in_range(i) && in_range(j) && in_range(k)) {
                    return false;
                }
                if !a.is_composable(i, j) || !a.is_composable(j, k) {
                    return false;
                }
                let (ij, jk) = (a.entry(i, j), a.entry(j, k));
                if ij == 0 || jk == 0 {
                    return true;
                }
                a.entry(ij, k) != a.entry(i, jk)
            }
            (FailureCode::NoUnit, Witness::Element(i)) => {
                in_range(i) && {
                    let (l, r) = (a.u_left(i), a.u_right(i));
                    l == 0 || r == 0 || a.entry(l, i) != i || a.entry(i, r) != i
                }
            }
            (FailureCode::NoInverse, Witness::Element(i)) => {
                in_range(i) && {
                    let j = a.inv(i);
                    j == 0
                        || !a.is_composable(i, j)
                        || !a.is_composable(j, i)
                        || a.entry(i, j) != a.u_left(i)
                        || a.entry(j, i) != a.u_right(i)
                }
            }
            _ => false,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FailureCode::*;
        use Witness::*;
        match (self.code, self.witness) {
            (IncompleteStructure, Element(i)) => {
                write!(
                    f,
                    "structure incomplete: element {i} has an unassigned structure value"
                )
            }
            (IncompleteStructure, Pair(i, j)) => {
                write!(
                    f,
                    "structure incomplete: composable pair ({i},{j}) has no product"
                )
            }
            (UnitOutOfRange, w) => write!(f, "left or right unit of element {w} is not a unit"),
            (NonInjectiveInversion, Pair(i, j)) => {
                write!(
                    f,
                    "inversion is not injective: elements {i} and {j} share an inverse"
                )
            }
            (UnitNotSurjective, w) => write!(f, "unit {w} is not in the image of alpha and beta"),
            (ProductOnNonComposable, w) => write!(f, "product defined on non-composable pair {w}"),
            (UnitSelfMapViolation, w) => {
                write!(f, "unit {w} is not fixed by alpha, beta and the inversion")
            }
            (NotAssociative, Pair(i, j)) => write!(
                f,
                "not associative: product of ({i},{j}) does not keep the left and right units"
            ),
            (NotAssociative, w) => write!(f, "not associative at {w}"),
            (NoUnit, w) => write!(f, "element {w} has no unit"),
            (NoInverse, w) => write!(f, "element {w} has no inverse"),
            (code, w) => write!(f, "{code:?} at {w}"),
        }
    }
}

/// Outcome of [`classify_structure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CheckVerdict {
    pub level: Level,
    pub diagnostic: Option<Diagnostic>,
}

impl CheckVerdict {
    pub fn is_groupoid(&self) -> bool {
        self.level == Level::Groupoid
    }
}

impl fmt::Display for CheckVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.diagnostic {
            None => write!(f, "G is a groupoid"),
            Some(d) => write!(f, "G is not a groupoid (level {}): {d}", self.level),
        }
    }
}

pub type StageResult = std::result::Result<(), Diagnostic>;

fn fail(code: FailureCode, witness: Witness) -> StageResult {
    Err(Diagnostic::new(code, witness))
}

/// Stage 1: the algebra is a well-defined structure.
pub fn validate_structure(a: &FiniteAlgebra) -> StageResult {
    let (n, m) = a.type_pair();
    for i in 1..=n {
        if a.u_left(i) == 0 || a.u_right(i) == 0 || a.inv(i) == 0 {
            return fail(FailureCode::IncompleteStructure, Witness::Element(i));
        }
        if a.u_left(i) > m || a.u_right(i) > m {
            return fail(FailureCode::UnitOutOfRange, Witness::Element(i));
        }
    }
    for k in 1..=m {
        if a.u_left(k) != k || a.u_right(k) != k || a.inv(k) != k {
            return fail(FailureCode::UnitSelfMapViolation, Witness::Element(k));
        }
    }
    let mut hit_left = vec![false; m + 1];
    let mut hit_right = vec![false; m + 1];
    for i in 1..=n {
        hit_left[a.u_left(i)] = true;
        hit_right[a.u_right(i)] = true;
    }
    if let Some(u) = (1..=m).find(|&u| !hit_left[u] || !hit_right[u]) {
        return fail(FailureCode::UnitNotSurjective, Witness::Element(u));
    }
    let mut first_with_inverse = vec![0usize; n + 1];
    let mut clash: Option<(usize, usize)> = None;
    for j in 1..=n {
        let slot = &mut first_with_inverse[a.inv(j)];
        if *slot == 0 {
            *slot = j;
        } else {
            let candidate = (*slot, j);
            if clash.is_none_or(|c| candidate < c) {
                clash = Some(candidate);
            }
        }
    }
    if let Some((i, j)) = clash {
        return fail(FailureCode::NonInjectiveInversion, Witness::Pair(i, j));
    }
    for i in 1..=n {
        for j in 1..=n {
            match (a.is_composable(i, j), a.entry(i, j)) {
                (true, 0) => return fail(FailureCode::IncompleteStructure, Witness::Pair(i, j)),
                (false, v) if v != 0 => {
                    return fail(FailureCode::ProductOnNonComposable, Witness::Pair(i, j))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Stage 2: closure of `α`/`β` along products, then associativity.
pub fn check_associativity(a: &FiniteAlgebra) -> StageResult {
    let n = a.n();
    for i in 1..=n {
        for j in 1..=n {
            if !a.is_composable(i, j) {
                continue;
            }
            let t = a.entry(i, j);
            if t == 0 || a.u_left(t) != a.u_left(i) || a.u_right(t) != a.u_right(j) {
                return fail(FailureCode::NotAssociative, Witness::Pair(i, j));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if !a.is_composable(i, j) {
                continue;
            }
            let ij = a.entry(i, j);
            for k in 1..=n {
                if !a.is_composable(j, k) {
                    continue;
                }
                if a.entry(ij, k) != a.entry(i, a.entry(j, k)) {
                    return fail(FailureCode::NotAssociative, Witness::Triple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Stage 3: every element is fixed by its left and right unit.
pub fn check_identities(a: &FiniteAlgebra) -> StageResult {
    for i in a.elements() {
        let (l, r) = (a.u_left(i), a.u_right(i));
        if l == 0 || r == 0 || a.entry(l, i) != i || a.entry(i, r) != i {
            return fail(FailureCode::NoUnit, Witness::Element(i));
        }
    }
    Ok(())
}

/// Stage 4: `ι` gives two-sided inverses.
///
/// A pair `(x, ι(x))` that is not composable counts as a failure too.
pub fn check_inverses(a: &FiniteAlgebra) -> StageResult {
    for i in a.elements() {
        let j = a.inv(i);
        let ok = j != 0
            && a.is_composable(i, j)
            && a.is_composable(j, i)
            && a.entry(i, j) == a.u_left(i)
            && a.entry(j, i) == a.u_right(i);
        if !ok {
            return fail(FailureCode::NoInverse, Witness::Element(i));
        }
    }
    Ok(())
}

/// Runs the four stages in order and stops at the first failure.
pub fn classify_structure(a: &FiniteAlgebra) -> CheckVerdict {
    let stages: [fn(&FiniteAlgebra) -> StageResult; 4] = [
        validate_structure,
        check_associativity,
        check_identities,
        check_inverses,
    ];
    for stage in stages {
        if let Err(d) = stage(a) {
            return CheckVerdict {
                level: d.code.level(),
                diagnostic: Some(d),
            };
        }
    }
    CheckVerdict {
        level: Level::Groupoid,
        diagnostic: None,
    }
}

/// Checks that `a` reaches at least `required`, returning its verdict.
pub fn require_level(a: &FiniteAlgebra, required: Level) -> Result<CheckVerdict> {
    let verdict = classify_structure(a);
    if verdict.level >= required {
        Ok(verdict)
    } else {
        Err(Error::Precondition { required, verdict })
    }
}

/// A [`FiniteAlgebra`] that passed the whole cascade.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Groupoid(FiniteAlgebra);

impl Groupoid {
    pub fn new(a: FiniteAlgebra) -> Result<Self> {
        require_level(&a, Level::Groupoid)?;
        Ok(Self(a))
    }

    pub(crate) fn new_unchecked(a: FiniteAlgebra) -> Self {
        debug_assert!(classify_structure(&a).is_groupoid());
        Self(a)
    }

    pub fn as_algebra(&self) -> &FiniteAlgebra {
        &self.0
    }

    pub fn into_inner(self) -> FiniteAlgebra {
        self.0
    }
}

impl Deref for Groupoid {
    type Target = FiniteAlgebra;

    fn deref(&self) -> &FiniteAlgebra {
        &self.0
    }
}

impl AsRef<FiniteAlgebra> for Groupoid {
    fn as_ref(&self) -> &FiniteAlgebra {
        &self.0
    }
}

impl TryFrom<FiniteAlgebra> for Groupoid {
    type Error = Error;

    fn try_from(a: FiniteAlgebra) -> Result<Self> {
        Self::new(a)
    }
}

impl From<Groupoid> for FiniteAlgebra {
    fn from(g: Groupoid) -> Self {
        g.0
    }
}
