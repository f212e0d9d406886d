//! Structured JSON encoding of presentations and polynomials. The encoding
//! round-trips bit-exactly: serialize, parse, serialize again yields the same
//! bytes.

use crate::ambient::Ambient;
use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::GradedPolynomial;
use crate::presentation::{AnyPresentation, RingPresentation, Strategy};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariableDto {
    pub name: String,
    pub degree: u32,
}

/// One term: decimal coefficient string plus `[variable, exponent]` pairs in
/// declared order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDto {
    pub coeff: String,
    pub monomial: Vec<(String, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyDto {
    None,
    PrincipalUnivariate,
    MonicInVariable(String),
    GroebnerRational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationDto {
    pub coefficient_domain: String,
    pub variables: Vec<VariableDto>,
    pub relations: Vec<Vec<TermDto>>,
    pub strategy: StrategyDto,
}

pub fn polynomial_to_terms<C: Coeff>(p: &GradedPolynomial<C>) -> Vec<TermDto> {
    p.sorted_terms()
        .into_iter()
        .map(|(m, c)| TermDto {
            coeff: c.to_string(),
            monomial: m
                .pairs()
                .iter()
                .map(|&(var, exp)| (p.ambient().name(var as usize).to_string(), exp))
                .collect(),
        })
        .collect()
}

fn terms_to_polynomial<C: Coeff>(
    ambient: &std::sync::Arc<Ambient>,
    terms: &[TermDto],
) -> Result<GradedPolynomial<C>> {
    let mut collected = Vec::with_capacity(terms.len());
    for term in terms {
        let coeff = C::parse(&term.coeff)
            .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", term.coeff)))?;
        let mut pairs = Vec::with_capacity(term.monomial.len());
        for (name, exp) in &term.monomial {
            let index = ambient
                .index_of(name)
                .ok_or_else(|| Error::UndeclaredVariable(name.clone()))?;
            pairs.push((index, *exp));
        }
        collected.push((Monomial::from_pairs(pairs), coeff));
    }
    GradedPolynomial::from_terms(ambient, collected)
}

fn strategy_to_dto(strategy: &Strategy) -> StrategyDto {
    match strategy {
        Strategy::None => StrategyDto::None,
        Strategy::PrincipalUnivariate => StrategyDto::PrincipalUnivariate,
        Strategy::MonicInVariable(v) => StrategyDto::MonicInVariable(v.clone()),
        Strategy::GroebnerRational => StrategyDto::GroebnerRational,
    }
}

fn strategy_from_dto(dto: &StrategyDto) -> Strategy {
    match dto {
        StrategyDto::None => Strategy::None,
        StrategyDto::PrincipalUnivariate => Strategy::PrincipalUnivariate,
        StrategyDto::MonicInVariable(v) => Strategy::MonicInVariable(v.clone()),
        StrategyDto::GroebnerRational => Strategy::GroebnerRational,
    }
}

pub fn presentation_to_dto<C: Coeff>(p: &RingPresentation<C>) -> PresentationDto {
    PresentationDto {
        coefficient_domain: C::DOMAIN.label().to_string(),
        variables: p
            .ambient()
            .vars()
            .iter()
            .map(|v| VariableDto {
                name: v.name.clone(),
                degree: v.degree,
            })
            .collect(),
        relations: p.relations().iter().map(polynomial_to_terms).collect(),
        strategy: strategy_to_dto(p.strategy()),
    }
}

pub fn any_presentation_to_dto(p: &AnyPresentation) -> PresentationDto {
    match p {
        AnyPresentation::Integers(p) => presentation_to_dto(p),
        AnyPresentation::Rationals(p) => presentation_to_dto(p),
    }
}

pub fn presentation_from_dto(dto: &PresentationDto) -> Result<AnyPresentation> {
    let ambient = Ambient::new(
        dto.variables
            .iter()
            .map(|v| (v.name.clone(), v.degree)),
    )?;
    let strategy = strategy_from_dto(&dto.strategy);
    match dto.coefficient_domain.as_str() {
        label if label == Domain::Integers.label() => {
            let relations: Vec<GradedPolynomial<BigInt>> = dto
                .relations
                .iter()
                .map(|terms| terms_to_polynomial(&ambient, terms))
                .collect::<Result<_>>()?;
            Ok(AnyPresentation::Integers(RingPresentation::new(
                &ambient, relations, strategy,
            )?))
        }
        label if label == Domain::Rationals.label() => {
            let relations: Vec<GradedPolynomial<BigRational>> = dto
                .relations
                .iter()
                .map(|terms| terms_to_polynomial(&ambient, terms))
                .collect::<Result<_>>()?;
            Ok(AnyPresentation::Rationals(RingPresentation::new(
                &ambient, relations, strategy,
            )?))
        }
        other => Err(Error::Parse(format!(
            "unknown coefficient domain `{other}`"
        ))),
    }
}

/// Serialize a presentation to its canonical JSON text.
pub fn presentation_to_json(p: &AnyPresentation) -> String {
    serde_json::to_string_pretty(&any_presentation_to_dto(p)).expect("serializable")
}

/// Parse a presentation from JSON text.
pub fn presentation_from_json(text: &str) -> Result<AnyPresentation> {
    let dto: PresentationDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    presentation_from_dto(&dto)
}
