//! Alexander polynomials and modules presented by tN − Nᵀ.
//!
//! For a boundary system the presentation matrix inherits the block shape
//! with r−1 zero rows, so the module splits as Λ^(r−1) ⊕ T with the torsion
//! part presented by the square nondegenerate block tV − Vᵀ. The order of T
//! is det(tV − Vᵀ), reported as a canonical associate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::seifert::{BoundarySeifertSystem, KnotSeifert};

/// A square presentation matrix whose first `free_rows` rows and columns
/// vanish, presenting Λ^free ⊕ coker(block).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentedModule {
    p: LambdaMatrix,
    free_rows: usize,
}

impl PresentedModule {
    pub fn new(p: LambdaMatrix, free_rows: usize) -> Result<Self> {
        if free_rows > p.size() {
            return Err(Error::SizeMismatch(format!(
                "{free_rows} declared free rows in a {} matrix",
                p.size()
            )));
        }
        for i in 0..p.size() {
            for j in 0..p.size() {
                if (i < free_rows || j < free_rows) && !p.entry(i, j).is_zero() {
                    return Err(Error::BadBlockPattern { row: i, col: j });
                }
            }
        }
        Ok(Self { p, free_rows })
    }

    pub fn matrix(&self) -> &LambdaMatrix {
        &self.p
    }

    pub fn free_rows(&self) -> usize {
        self.free_rows
    }

    /// The square block presenting the torsion submodule.
    pub fn torsion_block(&self) -> LambdaMatrix {
        let k = self.free_rows;
        let m = self.p.size() - k;
        LambdaMatrix::from_fn(m, |i, j| self.p.entry(i + k, j + k).clone())
    }
}

/// Free rank, torsion presentation and order of a presented module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionDecomposition {
    pub free_rank: usize,
    pub torsion_presentation: LambdaMatrix,
    /// det of the torsion presentation as a canonical associate.
    pub order: LaurentPoly,
}

/// Whether the torsion obstruction to being Z-weakly slice vanishes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SliceVerdict {
    WeaklySliceCompatible,
    Obstructed,
}

/// The Alexander polynomial det(tV − Vᵀ) as a canonical associate. The
/// unknot (empty matrix) yields 1.
pub fn alexander_polynomial(knot: &KnotSeifert) -> LaurentPoly {
    t_v_minus_v_transpose(knot.matrix()).det().canonical_associate()
}

fn t_v_minus_v_transpose(v: &[Vec<i64>]) -> LambdaMatrix {
    let n = v.len();
    LambdaMatrix::from_fn(n, |i, j| {
        LaurentPoly::from_terms([(1i64, v[i][j]), (0i64, -v[j][i])])
    })
}

/// The Alexander module presentation tN − Nᵀ of a boundary system, with
/// r−1 declared free rows.
pub fn presentation(system: &BoundarySeifertSystem) -> PresentedModule {
    let p = t_v_minus_v_transpose(system.matrix());
    PresentedModule::new(p, system.components() - 1)
        .expect("block pattern is inherited from the Seifert system")
}

/// Splits a presented module into its free part and torsion part. Fails
/// with `DegenerateTorsionBlock` when the torsion block is singular over
/// Q(t).
pub fn torsion_decomposition(module: &PresentedModule) -> Result<TorsionDecomposition> {
    let block = module.torsion_block();
    if block.rank_over_fractions() < block.size() {
        return Err(Error::DegenerateTorsionBlock);
    }
    let order = block.det().canonical_associate();
    Ok(TorsionDecomposition {
        free_rank: module.free_rows(),
        torsion_presentation: block,
        order,
    })
}

/// The Z-weakly-slice obstruction: compatible iff the torsion order is a
/// unit, i.e. the torsion submodule vanishes.
pub fn is_torsion_free(module: &PresentedModule) -> Result<SliceVerdict> {
    let decomposition = torsion_decomposition(module)?;
    Ok(if decomposition.order.is_one() {
        SliceVerdict::WeaklySliceCompatible
    } else {
        SliceVerdict::Obstructed
    })
}

/// The Alexander module of the 2-component link family L_n:
/// Λ ⊕ Λ/⟨(n−1)t − n⟩ ⊕ Λ/⟨nt − (n−1)⟩.
pub fn ln_family_module(n: i64) -> PresentedModule {
    let mut p = LambdaMatrix::zero(3);
    p.set(1, 1, LaurentPoly::from_terms([(1i64, n - 1), (0i64, -n)]));
    p.set(2, 2, LaurentPoly::from_terms([(1i64, n), (0i64, -(n - 1))]));
    PresentedModule::new(p, 1).expect("diagonal presentation has the block pattern")
}

/// Classical lower bound input: the symmetrized Seifert form V + Vᵀ.
pub fn symmetrized_form(knot: &KnotSeifert) -> crate::matrix::IntSymMatrix {
    let n = knot.size();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| knot.matrix()[i][j] + knot.matrix()[j][i])
                .collect()
        })
        .collect();
    crate::matrix::IntSymMatrix::from_i64(&rows).expect("symmetric by construction")
}

/// Knot signature σ(V + Vᵀ).
pub fn knot_signature(knot: &KnotSeifert) -> i64 {
    symmetrized_form(knot).signature()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::{internal_band_sum, whitehead_double_2, BoundarySeifertSystem};
    use num_bigint::BigInt;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_polynomial_is_one() {
        assert_eq!(alexander_polynomial(&KnotSeifert::unknot()), p("1"));
    }

    #[test]
    fn trefoil_polynomial() {
        assert_eq!(alexander_polynomial(&KnotSeifert::trefoil()), p("t^2 - t + 1"));
    }

    #[test]
    fn unit_determinant_genus_one_matrix() {
        let k = KnotSeifert::new(vec![vec![-1, 1], vec![0, 0]]).unwrap();
        assert_eq!(alexander_polynomial(&k), p("1"));
    }

    #[test]
    fn presentation_of_trefoil() {
        let s = BoundarySeifertSystem::from_knot_block(&KnotSeifert::trefoil(), 1).unwrap();
        let m = presentation(&s);
        assert_eq!(m.free_rows(), 0);
        assert_eq!(m.matrix().entry(0, 0), &p("1 - t"));
        assert_eq!(m.matrix().entry(0, 1), &p("t"));
        assert_eq!(m.matrix().entry(1, 0), &p("-1"));
        assert_eq!(m.matrix().entry(1, 1), &p("1 - t"));
    }

    #[test]
    fn torsion_decomposition_of_link_system() {
        let s = BoundarySeifertSystem::from_knot_block(&KnotSeifert::trefoil(), 2).unwrap();
        let d = torsion_decomposition(&presentation(&s)).unwrap();
        assert_eq!(d.free_rank, 1);
        assert_eq!(d.order, p("t^2 - t + 1"));
        assert_eq!(d.order.eval_at_one(), BigInt::from(1));
    }

    #[test]
    fn degenerate_block_rejected() {
        let mut m = LambdaMatrix::zero(2);
        m.set(1, 1, p("0"));
        let module = PresentedModule::new(m, 1).unwrap();
        assert_eq!(torsion_decomposition(&module), Err(Error::DegenerateTorsionBlock));
    }

    #[test]
    fn presented_module_checks_block_pattern() {
        let mut m = LambdaMatrix::zero(2);
        m.set(0, 1, p("t"));
        m.set(1, 1, p("1"));
        assert_eq!(
            PresentedModule::new(m, 1),
            Err(Error::BadBlockPattern { row: 0, col: 1 })
        );
    }

    #[test]
    fn ln_family() {
        // n = 2: order (t-2)(2t-1), obstructed, order(1) = -1
        let d = torsion_decomposition(&ln_family_module(2)).unwrap();
        assert_eq!(d.free_rank, 1);
        assert_eq!(d.order, p("2*t^2 - 5*t + 2"));
        assert_eq!(d.order.eval_at_one(), BigInt::from(-1));
        assert_eq!(
            is_torsion_free(&ln_family_module(2)).unwrap(),
            SliceVerdict::Obstructed
        );
        // n = 0 and n = 1 are unobstructed
        for n in [0, 1] {
            assert_eq!(
                is_torsion_free(&ln_family_module(n)).unwrap(),
                SliceVerdict::WeaklySliceCompatible
            );
        }
    }

    #[test]
    fn whitehead_unlinked_is_compatible() {
        let s = whitehead_double_2(0, 1, -1).unwrap();
        assert_eq!(
            is_torsion_free(&presentation(&s)).unwrap(),
            SliceVerdict::WeaklySliceCompatible
        );
        let s = whitehead_double_2(3, 1, -1).unwrap();
        assert_eq!(
            is_torsion_free(&presentation(&s)).unwrap(),
            SliceVerdict::Obstructed
        );
    }

    #[test]
    fn band_sum_preserves_order() {
        let s = whitehead_double_2(2, 1, 1).unwrap();
        let d = torsion_decomposition(&presentation(&s)).unwrap();
        let banded = alexander_polynomial(&internal_band_sum(&s));
        assert!(d.order.is_associate(&banded));
    }

    #[test]
    fn trefoil_signature() {
        assert_eq!(knot_signature(&KnotSeifert::trefoil()), -2);
    }
}
