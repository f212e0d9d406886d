//! Deterministic text and JSON rendering of command results. No timestamps,
//! fixed term order: identical invocations print identical bytes.

use crate::Format;
use equichow_core::coeff::Coeff;
use equichow_core::json::{self, presentation_to_dto};
use equichow_core::moduli::ModuliReport;
use equichow_core::poly::GradedPolynomial;
use equichow_core::presentation::RingPresentation;
use equichow_core::{
    AnyPresentation, BigInt, BigRational, GradedAbelianGroup, GroupSpec, NaiveComparisonReport,
    ProjectiveAction,
};
use serde_json::{json, Value};

fn render(value: Value) -> String {
    serde_json::to_string_pretty(&value).expect("serializable")
}

fn presentation_value<C: Coeff>(p: &RingPresentation<C>) -> Value {
    serde_json::to_value(presentation_to_dto(p)).expect("serializable")
}

fn group_value(g: &GradedAbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "text": g.to_string(),
    })
}

fn polynomial_value<C: Coeff>(p: &GradedPolynomial<C>) -> Value {
    json!({
        "text": p.to_string(),
        "terms": serde_json::to_value(json::polynomial_to_terms(p)).expect("serializable"),
    })
}

/// Ring text with a degrees line when some variable has degree above 1.
fn presentation_text<C: Coeff>(p: &RingPresentation<C>) -> String {
    let mut out = p.to_string();
    if !p.ambient().all_degree_one() {
        let degrees: Vec<String> = p
            .ambient()
            .vars()
            .iter()
            .map(|v| format!("{}={}", v.name, v.degree))
            .collect();
        out.push_str(&format!("\ndegrees: {}", degrees.join(", ")));
    }
    out
}

pub fn point_ring_output(
    spec: GroupSpec,
    ring: &RingPresentation<BigInt>,
    format: Format,
) -> String {
    match format {
        Format::Text => presentation_text(ring),
        Format::Json => render(json!({
            "command": "point-ring",
            "group": spec.to_string(),
            "presentation": presentation_value(ring),
        })),
    }
}

pub fn proj_output(
    action: &ProjectiveAction,
    integrals: &[(GradedPolynomial<BigInt>, GradedPolynomial<BigInt>)],
    format: Format,
) -> String {
    let presentation = action.presentation();
    let module_rank = action.module_rank().ok();
    let fixed = action.fixed_points().ok();
    match format {
        Format::Text => {
            let mut lines = vec![format!("ring: {presentation}")];
            match module_rank {
                Some(rank) => lines.push(format!("module rank: {rank}")),
                None => lines.push("module rank: verification failed".into()),
            }
            match &fixed {
                Some(table) => {
                    lines.push("fixed points:".into());
                    for datum in table {
                        lines.push(format!(
                            "  r={}  weights {}  h -> {}  euler: {}",
                            datum.index,
                            action.weights()[datum.index],
                            datum.restriction,
                            datum.euler
                        ));
                    }
                }
                None => lines.push("fixed points: skipped (weights are not pairwise distinct)".into()),
            }
            for (class, value) in integrals {
                lines.push(format!("integral {class} = {value}"));
            }
            lines.join("\n")
        }
        Format::Json => render(json!({
            "command": "proj",
            "weights": action
                .weights()
                .iter()
                .map(|c| c.weights().to_vec())
                .collect::<Vec<_>>(),
            "presentation": presentation_value(&presentation),
            "module_rank": module_rank,
            "fixed_points": fixed.map(|table| table
                .iter()
                .map(|d| json!({
                    "index": d.index,
                    "weights": action.weights()[d.index].weights().to_vec(),
                    "restriction": d.restriction.to_string(),
                    "euler": d.euler.to_string(),
                }))
                .collect::<Vec<_>>()),
            "integrals": integrals
                .iter()
                .map(|(class, value)| json!({
                    "class": class.to_string(),
                    "value": value.to_string(),
                }))
                .collect::<Vec<_>>(),
        })),
    }
}

fn graded_lines_int(p: &RingPresentation<BigInt>, max_degree: u64) -> Vec<String> {
    (0..=max_degree)
        .map(|d| format!("  A^{d} = {}", p.graded_piece(d)))
        .collect()
}

pub fn quotient_output(
    rational: &RingPresentation<BigRational>,
    integral: Option<&RingPresentation<BigInt>>,
    max_degree: u64,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut lines = vec![format!("rational presentation: {rational}")];
            lines.push("dimensions over Q:".into());
            for d in 0..=max_degree {
                lines.push(format!("  dim A^{d} = {}", rational.graded_dimension(d)));
            }
            if let Some(integral) = integral {
                lines.push(format!("integral excision: {integral}"));
                lines.push("graded pieces:".into());
                lines.extend(graded_lines_int(integral, max_degree));
            }
            lines.join("\n")
        }
        Format::Json => render(json!({
            "command": "quotient",
            "rational": {
                "presentation": presentation_value(rational),
                "dimensions": (0..=max_degree)
                    .map(|d| json!({"degree": d, "dim": rational.graded_dimension(d)}))
                    .collect::<Vec<_>>(),
            },
            "integral": integral.map(|p| json!({
                "presentation": presentation_value(p),
                "graded": (0..=max_degree)
                    .map(|d| json!({"degree": d, "group": group_value(&p.graded_piece(d))}))
                    .collect::<Vec<_>>(),
            })),
        })),
    }
}

pub fn comparison_output(
    report: &NaiveComparisonReport,
    max_degree: u64,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut lines = vec![
                format!("equivariant ring: {}", report.presentation),
                format!("({})", report.identity),
                "class map:".into(),
            ];
            for (name, image) in &report.class_map {
                lines.push(format!("  {name} -> {image}"));
            }
            lines.push(format!("degree-2 piece: {}", report.degree_two));
            lines.push(format!("p*p = {}", report.p_squared));
            lines.push(format!(
                "p*p in the naive image 2Z*t^2: {}",
                report.p_squared_in_naive_image
            ));
            lines.push("graded pieces:".into());
            lines.extend(graded_lines_int(&report.presentation, max_degree));
            lines.join("\n")
        }
        Format::Json => render(json!({
            "command": "quotient",
            "example": "weights-122",
            "identity": report.identity,
            "presentation": presentation_value(&report.presentation),
            "class_map": report
                .class_map
                .iter()
                .map(|(name, image)| json!({"class": name, "image": image.to_string()}))
                .collect::<Vec<_>>(),
            "degree_2_piece": group_value(&report.degree_two),
            "p_squared": report.p_squared.to_string(),
            "p_squared_in_naive_image": report.p_squared_in_naive_image,
            "graded": (0..=max_degree)
                .map(|d| json!({
                    "degree": d,
                    "group": group_value(&report.presentation.graded_piece(d)),
                }))
                .collect::<Vec<_>>(),
        })),
    }
}

pub fn moduli_output(report: &ModuliReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut lines = vec![report.identity.clone()];
            lines.push(format!("presentation: {}", report.presentation));
            lines.push("checks:".into());
            for check in &report.checks {
                let mark = if check.passed { "ok" } else { "FAILED" };
                lines.push(format!("  {mark}  {}: {}", check.name, check.detail));
            }
            lines.push("graded pieces:".into());
            for (d, piece) in &report.graded {
                lines.push(format!("  A^{d} = {piece}"));
            }
            lines.join("\n")
        }
        Format::Json => render(json!({
            "command": "moduli",
            "identity": report.identity,
            "presentation": presentation_value(&report.presentation),
            "checks": report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "detail": c.detail, "passed": c.passed}))
                .collect::<Vec<_>>(),
            "graded": report
                .graded
                .iter()
                .map(|(d, piece)| json!({"degree": d, "group": group_value(piece)}))
                .collect::<Vec<_>>(),
        })),
    }
}

pub fn picard_output(group: &GradedAbelianGroup, format: Format) -> String {
    match format {
        Format::Text => format!("Pic(M_{{1,1}}) = A^1(M_{{1,1}}) = {group}"),
        Format::Json => render(json!({
            "command": "moduli",
            "target": "picard",
            "identity": "Pic(M_{1,1}) = Z/12",
            "degree": 1,
            "group": group_value(group),
        })),
    }
}

pub fn polynomial_output<C: Coeff>(p: &GradedPolynomial<C>, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => render(json!({
            "command": "reduce",
            "normal_form": polynomial_value(p),
        })),
    }
}

pub fn graded_output(presentation: &AnyPresentation, degrees: &[u64], format: Format) -> String {
    match presentation {
        AnyPresentation::Integers(p) => match format {
            Format::Text => degrees
                .iter()
                .map(|&d| format!("A^{d} = {}", p.graded_piece(d)))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Json => render(json!({
                "command": "graded",
                "coefficient_domain": "integers",
                "graded": degrees
                    .iter()
                    .map(|&d| json!({"degree": d, "group": group_value(&p.graded_piece(d))}))
                    .collect::<Vec<_>>(),
            })),
        },
        AnyPresentation::Rationals(p) => match format {
            Format::Text => degrees
                .iter()
                .map(|&d| format!("dim A^{d} = {}", p.graded_dimension(d)))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Json => render(json!({
                "command": "graded",
                "coefficient_domain": "rationals",
                "graded": degrees
                    .iter()
                    .map(|&d| json!({"degree": d, "dim": p.graded_dimension(d)}))
                    .collect::<Vec<_>>(),
            })),
        },
    }
}
