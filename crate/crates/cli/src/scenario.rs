//! Quotient scenario files: JSON schema, loading, and semantic validation
//! with positional diagnostics.

use equichow_core::error::{Error, Result};
use equichow_core::parse::parse_polynomial;
use equichow_core::poly::IntPolynomial;
use equichow_core::{Character, CharacterLattice, QuotientScenario, RemovedLocus, Representation};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct ScenarioFile {
    pub torus_rank: usize,
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub removed: Vec<RemovedEntry>,
    #[serde(default)]
    pub classes: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RemovedEntry {
    Coordinate { kept: Vec<usize> },
    QuotientWeights { quotient_weights: Vec<Vec<i64>> },
}

/// Parse and validate a scenario file.
pub fn load_scenario(text: &str) -> Result<QuotientScenario> {
    let file: ScenarioFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scenario: {e}")))?;
    if file.torus_rank == 0 {
        return Err(Error::InvalidScenario(
            "torus_rank: must be at least 1".into(),
        ));
    }
    if file.weights.is_empty() {
        return Err(Error::InvalidScenario(
            "weights: at least one weight is required".into(),
        ));
    }
    for (i, w) in file.weights.iter().enumerate() {
        if w.len() != file.torus_rank {
            return Err(Error::InvalidScenario(format!(
                "weights[{i}]: expected {} entries for rank {}, found {}",
                file.torus_rank,
                file.torus_rank,
                w.len()
            )));
        }
    }
    let lattice = CharacterLattice::new(file.torus_rank)?;
    let characters: Vec<Character> = file
        .weights
        .iter()
        .map(|w| Character::new(w.clone()))
        .collect();
    let representation = Representation::new(lattice.clone(), characters)?;

    let removed: Vec<RemovedLocus> = file
        .removed
        .into_iter()
        .map(|entry| match entry {
            RemovedEntry::Coordinate { kept } => RemovedLocus::Coordinate { kept },
            RemovedEntry::QuotientWeights { quotient_weights } => RemovedLocus::QuotientWeights {
                weights: quotient_weights.into_iter().map(Character::new).collect(),
            },
        })
        .collect();

    let classes: Vec<IntPolynomial> = file
        .classes
        .iter()
        .enumerate()
        .map(|(i, text)| {
            parse_polynomial(lattice.ambient(), text)
                .map_err(|e| Error::InvalidScenario(format!("classes[{i}]: {e}")))
        })
        .collect::<Result<_>>()?;

    QuotientScenario::new(representation, removed, classes)
}

/// `-2,-4,-6` parses as rank-1 characters; `1,0;0,1` as rank-2 characters
/// separated by `;`.
pub fn parse_weights(text: &str) -> Result<Vec<Character>> {
    let characters: Vec<Character> = if text.contains(';') {
        text.split(';')
            .map(|part| {
                part.split(',')
                    .map(|w| {
                        w.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad weight `{w}`")))
                    })
                    .collect::<Result<Vec<i64>>>()
                    .map(Character::new)
            })
            .collect::<Result<_>>()?
    } else {
        text.split(',')
            .map(|w| {
                w.trim()
                    .parse::<i64>()
                    .map(|v| Character::new(vec![v]))
                    .map_err(|_| Error::Parse(format!("bad weight `{w}`")))
            })
            .collect::<Result<_>>()?
    };
    if characters.is_empty() {
        return Err(Error::Parse("empty weight list".into()));
    }
    let rank = characters[0].rank();
    if characters.iter().any(|c| c.rank() != rank) {
        return Err(Error::Parse(
            "all weight tuples must have the same rank".into(),
        ));
    }
    Ok(characters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_the_weights_122_scenario() {
        let text = r#"{
            "torus_rank": 1,
            "weights": [[1], [2], [2]],
            "removed": [{"kept": []}]
        }"#;
        let scenario = load_scenario(text).unwrap();
        assert_eq!(scenario.representation.dim(), 3);
        assert_eq!(scenario.removed.len(), 1);
        assert!(scenario.classes.is_empty());
    }

    #[test]
    fn rejects_empty_weight_list() {
        let text = r#"{"torus_rank": 1, "weights": []}"#;
        let err = load_scenario(text).unwrap_err();
        assert!(matches!(err, Error::InvalidScenario(_)));
    }

    #[test]
    fn rejects_rank_mismatch_with_position() {
        let text = r#"{"torus_rank": 1, "weights": [[1], [2, 3]]}"#;
        let err = load_scenario(text).unwrap_err();
        assert!(err.to_string().contains("weights[1]"));
    }

    #[test]
    fn rejects_out_of_range_removed_index() {
        let text = r#"{
            "torus_rank": 1,
            "weights": [[1], [2]],
            "removed": [{"kept": [5]}]
        }"#;
        let err = load_scenario(text).unwrap_err();
        assert!(err.to_string().contains("removed[0].kept[0]"));
        assert!(err.to_string().contains("5"));
    }

    #[test]
    fn parses_classes_in_the_point_ring() {
        let text = r#"{
            "torus_rank": 1,
            "weights": [[2], [4], [6]],
            "classes": ["12*t"]
        }"#;
        let scenario = load_scenario(text).unwrap();
        assert_eq!(scenario.classes[0].to_string(), "12*t");
    }

    #[test]
    fn weight_syntax() {
        let rank1 = parse_weights("-2,-4,-6").unwrap();
        assert_eq!(rank1.len(), 3);
        assert_eq!(rank1[0].weights(), &[-2]);
        let rank2 = parse_weights("1,0;0,1").unwrap();
        assert_eq!(rank2.len(), 2);
        assert_eq!(rank2[0].weights(), &[1, 0]);
        assert!(parse_weights("1,0;2").is_err());
        assert!(parse_weights("x").is_err());
    }
}
