//! Acceptance suite. One test per criterion; everything is exact
//! arithmetic, so every assertion is exact equality (of canonical
//! associates where equality up to units is meant).

mod common;

use common::{poly, random_hermitian, random_poly, rng};

use num_bigint::BigInt;
use zgenus_core::{
    alexander::{
        alexander_polynomial, is_torsion_free, ln_family_module, presentation,
        torsion_decomposition, SliceVerdict,
    },
    blanchfield::{build_h, verify_certificate},
    find_hermitian_presentation,
    fraction::Fraction,
    genus::{shake_genus, z_genus_knot, z_genus_link, SearchBudget},
    laurent::LaurentPoly,
    matrix::LambdaMatrix,
    seifert::{
        internal_band_sum, parallel_link, random_boundary_system, whitehead_double_2,
        whitehead_double_3, KnotSeifert,
    },
    ResidueClass,
};

fn t_n_minus_n_transpose(m: &[Vec<i64>]) -> LambdaMatrix {
    LambdaMatrix::from_fn(m.len(), |i, j| {
        LaurentPoly::from_terms([(1i64, m[i][j]), (0i64, -m[j][i])])
    })
}

/// Criterion 1: Whitehead 2-component coefficient identities, n in [-5,5],
/// clasps in {±1}²: t³ coefficient 4a₁a₂n², t⁴ coefficient −a₁a₂n², and
/// det(tM−Mᵀ) evaluated at t = 1 equals 1.
#[test]
fn criterion_1_whitehead2_coefficients() {
    for n in -5i64..=5 {
        for a1 in [1i64, -1] {
            for a2 in [1i64, -1] {
                let system = whitehead_double_2(n, a1, a2).unwrap();
                let m = internal_band_sum(&system);
                let det = t_n_minus_n_transpose(m.matrix()).det();
                assert_eq!(det.coeff(3), BigInt::from(4 * a1 * a2 * n * n), "t^3 at n={n}");
                assert_eq!(det.coeff(4), BigInt::from(-a1 * a2 * n * n), "t^4 at n={n}");
                assert_eq!(det.eval_at_one(), BigInt::from(1), "det(1) at n={n}");
            }
        }
    }
}

/// Criterion 2: Whitehead 2-component genus: 0 for n = 0, 1 otherwise,
/// exact, witnessed by the clasp submatrix [[0,a₁],[0,0]] with
/// det(tA−Aᵀ) = t on the nose.
#[test]
fn criterion_2_whitehead2_genus() {
    let budget = SearchBudget::default();
    for n in -5i64..=5 {
        for a1 in [1i64, -1] {
            for a2 in [1i64, -1] {
                let system = whitehead_double_2(n, a1, a2).unwrap();
                let report = z_genus_link(&system, &budget);
                let expect = usize::from(n != 0);
                assert_eq!(
                    (report.lower, report.upper, report.exact),
                    (expect, expect, true),
                    "genus at n={n}, a=({a1},{a2})"
                );
                if n == 0 {
                    continue;
                }
                // re-derive the witness block and pin the clasp submatrix
                let knot = internal_band_sum(&system);
                let p = report.witness_basis.expect("witness for the upper bound");
                let block = |col_a: usize, col_b: usize| -> i64 {
                    (0..4)
                        .map(|i| (0..4).map(|j| p[i][col_a] * knot.matrix()[i][j] * p[j][col_b]).sum::<i64>())
                        .sum()
                };
                let a = [[block(0, 0), block(0, 1)], [block(1, 0), block(1, 1)]];
                assert_eq!(a, [[0, a1], [0, 0]], "witness block at n={n}");
                let t_a = LambdaMatrix::from_fn(2, |i, j| {
                    LaurentPoly::from_terms([(1i64, a[i][j]), (0i64, -a[j][i])])
                });
                assert_eq!(t_a.det(), poly("t"), "witness determinant at n={n}");
            }
        }
    }
}

fn whitehead3_slice_condition(n: [i64; 3], a: [i64; 3]) -> bool {
    if n == [0, 0, 0] {
        return true;
    }
    // lk(L_i, L_j) = n_k for {i,j,k} = {1,2,3}
    let pairs = [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)];
    pairs
        .iter()
        .any(|&(i, j, k)| a[i] == -a[j] && n[k] == 0 && n[i].abs() == n[j].abs())
}

/// Criterion 3: Whitehead 3-component: det(tM−Mᵀ) ≐ t³ exactly on the
/// condition set, with the printed t⁵ and t⁶ coefficients for every tuple.
#[test]
fn criterion_3_whitehead3_criterion() {
    let t3 = poly("t^3");
    for n1 in -4i64..=4 {
        for n2 in -4i64..=4 {
            for n3 in -4i64..=4 {
                for signs in 0..8u8 {
                    let a = [
                        if signs & 1 == 0 { 1 } else { -1 },
                        if signs & 2 == 0 { 1 } else { -1 },
                        if signs & 4 == 0 { 1 } else { -1 },
                    ];
                    let n = [n1, n2, n3];
                    let system = whitehead_double_3(n, a).unwrap();
                    let m = internal_band_sum(&system);
                    let det = t_n_minus_n_transpose(m.matrix()).det();
                    let c5 = 12 * n1 * n2 * n3 * a[0] * a[1] * a[2]
                        - n1 * n1 * a[1] * a[2]
                        - n2 * n2 * a[0] * a[2]
                        - n3 * n3 * a[0] * a[1];
                    let c6 = -2 * n1 * n2 * n3 * a[0] * a[1] * a[2];
                    assert_eq!(det.coeff(5), BigInt::from(c5), "t^5 at n={n:?} a={a:?}");
                    assert_eq!(det.coeff(6), BigInt::from(c6), "t^6 at n={n:?} a={a:?}");
                    let is_trivial = det.is_associate(&t3);
                    assert_eq!(
                        is_trivial,
                        whitehead3_slice_condition(n, a),
                        "criterion at n={n:?} a={a:?} det={det}"
                    );
                    if is_trivial {
                        assert_eq!(det, t3, "exact value on the condition set");
                    }
                }
            }
        }
    }
}

/// Criterion 4: the L_n family is obstructed exactly for n outside {0,1},
/// with torsion order ±1 at t = 1 for every n.
#[test]
fn criterion_4_ln_family() {
    for n in -5i64..=5 {
        let module = ln_family_module(n);
        let decomposition = torsion_decomposition(&module).unwrap();
        let at_one = decomposition.order.eval_at_one();
        assert!(
            at_one == BigInt::from(1) || at_one == BigInt::from(-1),
            "order(1) = {at_one} at n={n}"
        );
        let verdict = is_torsion_free(&module).unwrap();
        let expect = if n == 0 || n == 1 {
            SliceVerdict::WeaklySliceCompatible
        } else {
            SliceVerdict::Obstructed
        };
        assert_eq!(verdict, expect, "verdict at n={n}");
    }
}

/// Criterion 5: 200 seeded random boundary systems with r ≤ 3, g ≤ 2 and
/// coefficients ≤ 3: free rank r−1, torsion order ≐ det(tV−Vᵀ), order(1)
/// = ±1, Δ ≐ involute(Δ), and rank over Q(t) of tN−Nᵀ equal to 2g.
#[test]
fn criterion_5_torsion_decomposition_suite() {
    for seed in 0u64..200 {
        let r = 1 + (seed as usize % 3);
        let g = (seed as usize / 3) % 3;
        let system = random_boundary_system(r, g, 3, seed);
        let module = presentation(&system);
        let decomposition = torsion_decomposition(&module).unwrap();
        assert_eq!(decomposition.free_rank, r - 1, "free rank at seed {seed}");
        let knot = internal_band_sum(&system);
        let delta = alexander_polynomial(&knot);
        assert!(
            decomposition.order.is_associate(&delta),
            "order vs det(tV-V^T) at seed {seed}"
        );
        let at_one = decomposition.order.eval_at_one();
        assert!(
            at_one == BigInt::from(1) || at_one == BigInt::from(-1),
            "order(1) at seed {seed}"
        );
        assert!(delta.is_associate(&delta.involute()), "symmetry at seed {seed}");
        assert_eq!(
            module.matrix().rank_over_fractions(),
            2 * g,
            "rank at seed {seed}"
        );
    }
}

fn scale_residue(value: &ResidueClass, p: &LaurentPoly) -> ResidueClass {
    ResidueClass::new(&Fraction::from(p.clone()) * value.rep(), value.ambient())
}

/// Criterion 6: Blanchfield pairing properties on 100 random Hermitian
/// presentations of size ≤ 4: Hermitian symmetry, sesquilinearity,
/// well-definedness modulo the image, annihilation by det(A); and the
/// identity (1−t)N + (1−t⁻¹)Nᵀ = (t⁻¹−1)(tN−Nᵀ) symbolically.
#[test]
fn criterion_6_blanchfield_pairing_properties() {
    let mut r = rng(0xB1A);
    for case in 0u64..100 {
        let size = 1 + (case as usize % 4);
        let a = random_hermitian(&mut r, size);
        let v: Vec<LaurentPoly> = (0..size).map(|_| random_poly(&mut r, 1, 2)).collect();
        let w: Vec<LaurentPoly> = (0..size).map(|_| random_poly(&mut r, 1, 2)).collect();
        let u: Vec<LaurentPoly> = (0..size).map(|_| random_poly(&mut r, 1, 1)).collect();
        let scalar = random_poly(&mut r, 1, 2);

        let base = a.pair(&v, &w).unwrap();
        // Hermitian symmetry
        assert_eq!(base, a.pair(&w, &v).unwrap().involute(), "symmetry case {case}");
        // sesquilinearity in both slots
        let scaled_v: Vec<LaurentPoly> = v.iter().map(|x| x * &scalar).collect();
        assert_eq!(
            a.pair(&scaled_v, &w).unwrap(),
            scale_residue(&base, &scalar),
            "left linearity case {case}"
        );
        let scaled_w: Vec<LaurentPoly> = w.iter().map(|x| x * &scalar).collect();
        assert_eq!(
            a.pair(&v, &scaled_w).unwrap(),
            scale_residue(&base, &scalar.involute()),
            "right conjugate-linearity case {case}"
        );
        // well-definedness modulo the image A·Λⁿ
        let shifted: Vec<LaurentPoly> = (0..size)
            .map(|i| {
                let mut acc = v[i].clone();
                for (j, uj) in u.iter().enumerate() {
                    acc = &acc + &(a.matrix().entry(i, j) * uj);
                }
                acc
            })
            .collect();
        assert_eq!(a.pair(&shifted, &w).unwrap(), base, "well-defined case {case}");
        // annihilation by det(A)
        let det_v: Vec<LaurentPoly> = v.iter().map(|x| x * a.det()).collect();
        assert!(a.pair(&det_v, &w).unwrap().is_zero(), "annihilation case {case}");
    }
    // the H identity holds symbolically for every input
    let factor = poly("t^-1 - 1");
    for seed in 0u64..40 {
        let r_components = 1 + (seed as usize % 3);
        let g = (seed as usize / 3) % 3;
        let system = random_boundary_system(r_components, g, 3, seed);
        let lhs = build_h(&system);
        let rhs = presentation(&system).matrix().scale(&factor);
        assert_eq!(lhs, rhs, "H identity at seed {seed}");
        assert!(lhs.is_hermitian(), "H Hermitian at seed {seed}");
        assert!(
            lhs.eval_at_one().into_symmetric().unwrap().signature() == 0,
            "H(1) = 0 at seed {seed}"
        );
    }
    for (n, a1, a2) in [(0i64, 1i64, 1i64), (3, 1, -1), (-2, -1, -1)] {
        let system = whitehead_double_2(n, a1, a2).unwrap();
        assert_eq!(
            build_h(&system),
            presentation(&system).matrix().scale(&factor)
        );
    }
}

/// Criterion 7: parallel/cable oracle: the band sum of P_{p,n}(K) has
/// Alexander polynomial ≐ Δ_K(t^w) with w = p−n, checked against direct
/// exponent substitution, for the trefoil and the figure-eight and all
/// p+n ≤ 4; w = 0 cases are Z-weakly slice.
#[test]
fn criterion_7_parallel_cable_oracle() {
    let budget = SearchBudget::default();
    for knot in [KnotSeifert::trefoil(), KnotSeifert::figure_eight()] {
        let delta = alexander_polynomial(&knot);
        for p in 0usize..=4 {
            for n in 0usize..=4 {
                if p + n == 0 || p + n > 4 {
                    continue;
                }
                let link = parallel_link(&knot, p, n).unwrap();
                let banded = alexander_polynomial(&internal_band_sum(&link));
                let w = p as i64 - n as i64;
                // independent oracle: substitute t ↦ t^w in Δ_K
                let expect = delta.substitute_power(w);
                assert!(
                    banded.is_associate(&expect),
                    "cable formula at p={p}, n={n}: got {banded}, want {expect}"
                );
                if w == 0 {
                    assert_eq!(
                        is_torsion_free(&presentation(&link)).unwrap(),
                        SliceVerdict::WeaklySliceCompatible,
                        "weakly slice at p={p}, n={n}"
                    );
                    let report = z_genus_link(&link, &budget);
                    assert_eq!(
                        (report.lower, report.upper, report.exact),
                        (0, 0, true),
                        "genus 0 at p={p}, n={n}"
                    );
                }
            }
        }
    }
}

/// Criterion 8: shake genus of the trefoil equals its Z-genus 1, and the
/// P_{2,1} cross-check agrees.
#[test]
fn criterion_8_shake_genus() {
    let budget = SearchBudget::default();
    let trefoil = KnotSeifert::trefoil();
    let direct = z_genus_knot(&trefoil, &budget);
    assert_eq!((direct.lower, direct.upper, direct.exact), (1, 1, true));
    let report = shake_genus(&trefoil, &budget);
    assert_eq!(report.genus.upper, 1);
    assert!(report.consistent, "checks: {:?}", report.parallel_checks);
    let p21 = report
        .parallel_checks
        .iter()
        .find(|c| c.ell == 1)
        .expect("P_{2,1} cross-check present");
    assert_eq!(p21.report.upper, 1);
}

/// Criterion 9: certificate round trip: the Hermitian search on the
/// trefoil at genus 1 yields a passing certificate, bit-identical to the
/// stored golden file, which re-verifies on every run.
#[test]
fn criterion_9_certificate_round_trip() {
    let budget = SearchBudget::default();
    let trefoil = KnotSeifert::trefoil();
    let (found, report) =
        find_hermitian_presentation(&trefoil, 1, &budget).expect("search succeeds");
    assert!(report.verdict);
    assert!(report.hermitian_ok && report.det_matches_order && report.size_matches);
    assert_eq!(report.signature_at_one, 0);
    assert_eq!(found.size(), 2);
    assert!(found.det().is_associate(&poly("t^2 - t + 1")));

    let golden_path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../corpus/trefoil_hermitian.json"
    );
    let text = std::fs::read_to_string(golden_path).expect("golden file bundled");
    let golden: serde_json::Value = serde_json::from_str(&text).unwrap();
    let matrix: LambdaMatrix = serde_json::from_value(golden["matrix"].clone()).unwrap();
    assert_eq!(&matrix, found.matrix(), "search result matches the golden file");
    let again = verify_certificate(&matrix, &trefoil, golden["genus"].as_u64().unwrap() as usize);
    assert!(again.verdict, "golden certificate re-verifies");
}
