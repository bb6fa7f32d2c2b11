//! Worked inputs: three structure files, a monoidoid that is not a groupoid,
//! and hand-built `(4;2)` tables with some products left as parameters.

use crate::algebra::FiniteAlgebra;

fn build(
    n: usize,
    m: usize,
    u_left: &[usize],
    u_right: &[usize],
    inv: &[usize],
    rows: &[&[usize]],
) -> FiniteAlgebra {
    let table: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    FiniteAlgebra::new(n, m, u_left, u_right, inv, &table).expect("fixture tables are well-shaped")
}

/// The saltus groupoid `F(4;2)`: identities on the two axes and the two swaps.
pub fn saltus_table() -> FiniteAlgebra {
    build(
        4,
        2,
        &[1, 2, 1, 2],
        &[1, 2, 2, 1],
        &[1, 2, 4, 3],
        &[&[1, 0, 3, 0], &[0, 2, 0, 4], &[0, 3, 0, 1], &[4, 0, 2, 0]],
    )
}

/// A transitive `(9;3)` groupoid.
pub fn nine_three() -> FiniteAlgebra {
    build(
        9,
        3,
        &[1, 2, 3, 1, 1, 2, 2, 3, 3],
        &[1, 2, 3, 2, 3, 1, 3, 1, 2],
        &[1, 2, 3, 6, 8, 4, 9, 5, 7],
        &[
            &[1, 0, 0, 4, 5, 0, 0, 0, 0],
            &[0, 2, 0, 0, 0, 6, 7, 0, 0],
            &[0, 0, 3, 0, 0, 0, 0, 8, 9],
            &[0, 4, 0, 0, 0, 1, 5, 0, 0],
            &[0, 0, 5, 0, 0, 0, 0, 1, 4],
            &[6, 0, 0, 2, 7, 0, 0, 0, 0],
            &[0, 0, 7, 0, 0, 0, 0, 6, 2],
            &[8, 0, 0, 9, 3, 0, 0, 0, 0],
            &[0, 9, 0, 0, 0, 8, 3, 0, 0],
        ],
    )
}

/// A `(6;1)` monoid supplied with a wrong inversion (elements 5 and 6 are
/// swapped, but both are self-inverse).
pub fn six_one_monoid() -> FiniteAlgebra {
    build(
        6,
        1,
        &[1; 6],
        &[1; 6],
        &[1, 3, 2, 4, 6, 5],
        &[
            &[1, 2, 3, 4, 5, 6],
            &[2, 3, 1, 6, 4, 5],
            &[3, 1, 2, 5, 6, 4],
            &[4, 5, 6, 1, 2, 3],
            &[5, 6, 4, 3, 1, 2],
            &[6, 4, 5, 2, 3, 1],
        ],
    )
}

/// `{e} ⊔ {1, 0, -1}` with the multiplicative monoid of signs, encoded as
/// `e = 1`, `1 = 2`, `0 = 3`, `-1 = 4`. The inversion is the identity, which
/// is right for every element except `0`.
pub fn signed_unit_monoidoid() -> FiniteAlgebra {
    build(
        4,
        2,
        &[1, 2, 2, 2],
        &[1, 2, 2, 2],
        &[1, 2, 3, 4],
        &[&[1, 0, 0, 0], &[0, 2, 3, 4], &[0, 3, 3, 3], &[0, 4, 3, 2]],
    )
}

/// A `(4;2)` table with `3, 4` both anchored at unit `2` and `ι = id`. The
/// products `3·4` and `4·3` are parameters, each meant to range over
/// `{2, 3, 4}`.
pub fn fixed_inverse_completion(m34: usize, m43: usize) -> FiniteAlgebra {
    build(
        4,
        2,
        &[1, 2, 2, 2],
        &[1, 2, 2, 2],
        &[1, 2, 3, 4],
        &[
            &[1, 0, 0, 0],
            &[0, 2, 3, 4],
            &[0, 3, 4, m34],
            &[0, 4, m43, 3],
        ],
    )
}

/// As [`fixed_inverse_completion`] but `ι` swaps `3, 4`; the parameters are
/// `3·3` and `4·4`.
pub fn swapped_inverse_completion(m33: usize, m44: usize) -> FiniteAlgebra {
    build(
        4,
        2,
        &[1, 2, 2, 2],
        &[1, 2, 2, 2],
        &[1, 2, 4, 3],
        &[
            &[1, 0, 0, 0],
            &[0, 2, 3, 4],
            &[0, 3, m33, 2],
            &[0, 4, 2, m44],
        ],
    )
}

/// The only groupoid among the [`swapped_inverse_completion`] tables;
/// isomorphic to `{e} ⊔ Z₃`.
pub fn swapped_inverse_groupoid() -> FiniteAlgebra {
    swapped_inverse_completion(4, 3)
}

/// Two isotropy groups of order 2 and no arrows between the units;
/// isomorphic to `Z₂ ⊔ Z₂`.
pub fn split_groupoid() -> FiniteAlgebra {
    build(
        4,
        2,
        &[1, 2, 1, 2],
        &[1, 2, 1, 2],
        &[1, 2, 3, 4],
        &[&[1, 0, 3, 0], &[0, 2, 0, 4], &[3, 0, 1, 0], &[0, 4, 0, 2]],
    )
}
