//! The corpus runner: recomputes the explicit identities the engine is
//! supposed to reproduce, against the bundled golden files.

use std::path::Path;

use num_bigint::BigInt;
use serde::Serialize;
use zgenus_core::{
    alexander::{alexander_polynomial, is_torsion_free, ln_family_module, presentation, SliceVerdict},
    blanchfield::verify_certificate,
    find_hermitian_presentation, internal_band_sum, parallel_link, whitehead_double_2,
    whitehead_double_3, z_genus_link, KnotSeifert, LambdaMatrix, LaurentPoly, SearchBudget,
};

use crate::document::CertificateDocument;

#[derive(Debug, Serialize)]
pub struct CorpusOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CorpusOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn t_v_minus_v_transpose(m: &[Vec<i64>]) -> LambdaMatrix {
    LambdaMatrix::from_fn(m.len(), |i, j| {
        LaurentPoly::from_terms([(1i64, m[i][j]), (0i64, -m[j][i])])
    })
}

fn whitehead2_coefficients(budget: &SearchBudget) -> Vec<CorpusOutcome> {
    let mut coeffs = CorpusOutcome::new("whitehead-2 determinant coefficients");
    let mut genus = CorpusOutcome::new("whitehead-2 z-genus");
    for n in -5i64..=5 {
        for a1 in [1i64, -1] {
            for a2 in [1i64, -1] {
                let system = whitehead_double_2(n, a1, a2).expect("valid clasps");
                let det = t_v_minus_v_transpose(internal_band_sum(&system).matrix()).det();
                let ok = det.coeff(3) == BigInt::from(4 * a1 * a2 * n * n)
                    && det.coeff(4) == BigInt::from(-a1 * a2 * n * n)
                    && det.eval_at_one() == BigInt::from(1);
                coeffs.check(ok, || format!("n={n}, a=({a1},{a2}): det = {det}"));

                let report = z_genus_link(&system, budget);
                let expect = usize::from(n != 0);
                genus.check(
                    report.lower == expect && report.upper == expect && report.exact,
                    || format!("n={n}, a=({a1},{a2}): bounds [{}, {}]", report.lower, report.upper),
                );
            }
        }
    }
    vec![coeffs, genus]
}

fn whitehead3_condition(n: [i64; 3], a: [i64; 3]) -> bool {
    if n == [0, 0, 0] {
        return true;
    }
    let pairs = [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)];
    pairs
        .iter()
        .any(|&(i, j, k)| a[i] == -a[j] && n[k] == 0 && n[i].abs() == n[j].abs())
}

fn whitehead3_criterion() -> CorpusOutcome {
    let mut outcome = CorpusOutcome::new("whitehead-3 slice criterion");
    let t3: LaurentPoly = LaurentPoly::monomial(1, 3);
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
                    let system = whitehead_double_3(n, a).expect("valid clasps");
                    let det = t_v_minus_v_transpose(internal_band_sum(&system).matrix()).det();
                    let c5 = 12 * n1 * n2 * n3 * a[0] * a[1] * a[2]
                        - n1 * n1 * a[1] * a[2]
                        - n2 * n2 * a[0] * a[2]
                        - n3 * n3 * a[0] * a[1];
                    let c6 = -2 * n1 * n2 * n3 * a[0] * a[1] * a[2];
                    let ok = det.coeff(5) == BigInt::from(c5)
                        && det.coeff(6) == BigInt::from(c6)
                        && det.is_associate(&t3) == whitehead3_condition(n, a);
                    outcome.check(ok, || format!("n={n:?}, a={a:?}: det = {det}"));
                }
            }
        }
    }
    outcome
}

fn ln_family() -> CorpusOutcome {
    let mut outcome = CorpusOutcome::new("L_n family obstruction");
    for n in -5i64..=5 {
        let module = ln_family_module(n);
        let verdict = is_torsion_free(&module).expect("nondegenerate");
        let expect = if n == 0 || n == 1 {
            SliceVerdict::WeaklySliceCompatible
        } else {
            SliceVerdict::Obstructed
        };
        outcome.check(verdict == expect, || format!("n={n}: verdict {verdict:?}"));
    }
    outcome
}

fn parallel_cable() -> CorpusOutcome {
    let mut outcome = CorpusOutcome::new("parallel-link cable formula");
    for knot in [KnotSeifert::trefoil(), KnotSeifert::figure_eight()] {
        let delta = alexander_polynomial(&knot);
        for p in 0usize..=4 {
            for n in 0usize..=4 {
                if p + n == 0 || p + n > 4 {
                    continue;
                }
                let link = parallel_link(&knot, p, n).expect("nonempty");
                let banded = alexander_polynomial(&internal_band_sum(&link));
                let expect = delta.substitute_power(p as i64 - n as i64);
                let mut ok = banded.is_associate(&expect);
                if p == n {
                    ok = ok
                        && is_torsion_free(&presentation(&link)).expect("nondegenerate")
                            == SliceVerdict::WeaklySliceCompatible;
                }
                outcome.check(ok, || format!("p={p}, n={n}: got {banded}, want ≐ {expect}"));
            }
        }
    }
    outcome
}

fn golden_certificate(corpus_dir: &Path, budget: &SearchBudget) -> CorpusOutcome {
    let mut outcome = CorpusOutcome::new("golden Hermitian certificate");
    let path = corpus_dir.join("trefoil_hermitian.json");
    let loaded: anyhow::Result<CertificateDocument> = (|| {
        let text = std::fs::read_to_string(&path)?;
        Ok(serde_json::from_str(&text)?)
    })();
    match loaded {
        Err(err) => outcome.check(false, || format!("{}: {err}", path.display())),
        Ok(doc) => match doc.knot() {
            Err(err) => outcome.check(false, || err.to_string()),
            Ok(knot) => {
                let report = verify_certificate(&doc.matrix, &knot, doc.genus);
                outcome.check(report.verdict, || format!("stored certificate fails: {report:?}"));
                match find_hermitian_presentation(&knot, doc.genus, budget) {
                    None => outcome.check(false, || "search found no presentation".into()),
                    Some((found, fresh)) => {
                        outcome.check(fresh.verdict, || "fresh certificate fails".into());
                        outcome.check(found.matrix() == &doc.matrix, || {
                            format!(
                                "search drifted from golden file: {}",
                                serde_json::to_string(found.matrix()).unwrap_or_default()
                            )
                        });
                    }
                }
            }
        },
    }
    outcome
}

pub fn run(corpus_dir: &Path, budget: &SearchBudget) -> Vec<CorpusOutcome> {
    let mut outcomes = whitehead2_coefficients(budget);
    outcomes.push(whitehead3_criterion());
    outcomes.push(ln_family());
    outcomes.push(parallel_cable());
    outcomes.push(golden_certificate(corpus_dir, budget));
    outcomes
}

pub fn render_table(outcomes: &[CorpusOutcome]) -> String {
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for outcome in outcomes {
        out.push_str(&format!(
            "{:width$}  {:>6} cases  {}\n",
            outcome.name,
            outcome.cases,
            if outcome.passed() {
                "ok".to_string()
            } else {
                format!("FAILED ({})", outcome.failures.len())
            },
        ));
        for failure in outcome.failures.iter().take(5) {
            out.push_str(&format!("    mismatch: {failure}\n"));
        }
    }
    out
}
