//! Invariant reports assembled from the engine layers.

use serde::Serialize;
use zgenus_core::{
    alexander::{presentation, torsion_decomposition},
    blanchfield::CertificateReport,
    find_hermitian_presentation, internal_band_sum, z_genus_link, BoundarySeifertSystem,
    GenusReport, SearchBudget,
};

/// The unit relating a raw determinant to the canonical associate printed
/// in the report: raw = sign · t^shift · canonical.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OrderUnit {
    pub sign: i8,
    pub shift: i64,
}

#[derive(Debug, Serialize)]
pub struct InvariantReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub alexander: String,
    pub free_rank: usize,
    pub torsion_order: String,
    pub torsion_order_unit: OrderUnit,
    pub weakly_slice: String,
    pub genus: GenusReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
}

pub fn invariant_report(
    system: &BoundarySeifertSystem,
    label: Option<String>,
    budget: &SearchBudget,
    want_certificate: bool,
) -> anyhow::Result<InvariantReport> {
    let module = presentation(system);
    let decomposition = torsion_decomposition(&module)?;
    let raw_det = decomposition.torsion_presentation.det();
    let unit = raw_det.normalize_assoc().expect("nondegenerate block");
    let weakly_slice = decomposition.order.is_one();
    let knot = internal_band_sum(system);
    let mut genus = z_genus_link(system, budget);
    let mut certificate = None;
    if want_certificate {
        if let Some((found, report)) = find_hermitian_presentation(&knot, genus.upper, budget) {
            genus.witness_hermitian = Some(found.matrix().clone());
            certificate = Some(report);
        }
    }
    debug_assert_eq!(weakly_slice, genus.upper == 0 && genus.exact);
    Ok(InvariantReport {
        label,
        alexander: decomposition.order.to_string(),
        free_rank: decomposition.free_rank,
        torsion_order: decomposition.order.to_string(),
        torsion_order_unit: OrderUnit {
            sign: unit.sign,
            shift: unit.shift,
        },
        weakly_slice: if weakly_slice { "yes" } else { "no" }.to_string(),
        genus,
        certificate,
    })
}

pub fn render_text(report: &InvariantReport) -> String {
    let mut out = String::new();
    if let Some(label) = &report.label {
        out.push_str(&format!("label:         {label}\n"));
    }
    out.push_str(&format!("alexander:     {}\n", report.alexander));
    out.push_str(&format!("free rank:     {}\n", report.free_rank));
    out.push_str(&format!("torsion order: {}\n", report.torsion_order));
    out.push_str(&format!("weakly slice:  {}\n", report.weakly_slice));
    out.push_str(&render_genus_line(&report.genus));
    if let Some(cert) = &report.certificate {
        out.push_str(&format!(
            "certificate:   {}\n",
            if cert.verdict { "pass" } else { "fail" }
        ));
    }
    out
}

pub fn render_genus_line(genus: &GenusReport) -> String {
    format!(
        "z-genus:       lower {}, upper {}{}{}\n",
        genus.lower,
        genus.upper,
        if genus.exact { " (exact)" } else { "" },
        if genus.budget_exhausted {
            ", budget exhausted"
        } else {
            ""
        },
    )
}
