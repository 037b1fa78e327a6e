//! Shared fixtures for the benchmark targets.

use zgenus_core::{internal_band_sum, whitehead_double_3, KnotSeifert, LambdaMatrix, LaurentPoly};

/// The 6x6 Whitehead-double Seifert matrix with generic parameters.
pub fn whitehead3_knot() -> KnotSeifert {
    internal_band_sum(&whitehead_double_3([2, -3, 1], [1, -1, 1]).unwrap())
}

/// tV − Vᵀ of a Seifert matrix, the workhorse input of every determinant.
pub fn presentation_matrix(knot: &KnotSeifert) -> LambdaMatrix {
    let v = knot.matrix();
    LambdaMatrix::from_fn(v.len(), |i, j| {
        LaurentPoly::from_terms([(1i64, v[i][j]), (0i64, -v[j][i])])
    })
}
