//! JSON documents with a top-level `kind` tag. Rationals are `"p/q"` strings
//! and elements are referred to by label.

use std::path::Path;

use gradual_core::level_core::{fmt_rational, parse_rational};
use gradual_core::{
    DirectedSetSystem, ElementSet, FiniteGroup, FuzzySubset, Grade, GradualSubset, GroundSet, IntervalPiece, LevelGrid,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    FuzzySubset(FuzzyDoc),
    GradualSubset(GradualDoc),
    Group(GroupDoc),
    FuzzySubgroup(FuzzyDoc),
    System(SystemDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyDoc {
    pub elements: Vec<String>,
    pub grades: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDoc {
    pub lo: String,
    pub hi: String,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradualDoc {
    pub elements: Vec<String>,
    pub pieces: Vec<PieceDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub elements: Vec<String>,
    /// `table[i][j]` is the label of `elements[i] * elements[j]`.
    pub table: Vec<Vec<String>>,
}

/// Objects are listed per cell of the grid: the open gap below each level,
/// then the level itself. `transitions[c]` maps positions in `objects[c + 1]`
/// to positions in `objects[c]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub elements: Vec<String>,
    pub levels: Vec<String>,
    pub objects: Vec<Vec<String>>,
    pub transitions: Vec<Vec<usize>>,
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::FuzzySubset(_) => "fuzzy-subset",
            Document::GradualSubset(_) => "gradual-subset",
            Document::Group(_) => "group",
            Document::FuzzySubgroup(_) => "fuzzy-subgroup",
            Document::System(_) => "system",
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed document: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn mismatch(&self, wanted: &str) -> CliError {
        CliError::Input(format!("expected a {wanted} document, found {}", self.kind()))
    }

    pub fn into_fuzzy(self) -> Result<FuzzyDoc, CliError> {
        match self {
            Document::FuzzySubset(d) | Document::FuzzySubgroup(d) => Ok(d),
            other => Err(other.mismatch("fuzzy-subset")),
        }
    }

    pub fn into_gradual(self) -> Result<GradualDoc, CliError> {
        match self {
            Document::GradualSubset(d) => Ok(d),
            other => Err(other.mismatch("gradual-subset")),
        }
    }

    pub fn into_group(self) -> Result<GroupDoc, CliError> {
        match self {
            Document::Group(d) => Ok(d),
            other => Err(other.mismatch("group")),
        }
    }

    pub fn into_system(self) -> Result<SystemDoc, CliError> {
        match self {
            Document::System(d) => Ok(d),
            other => Err(other.mismatch("system")),
        }
    }
}

fn ground(labels: &[String]) -> Result<GroundSet, CliError> {
    Ok(GroundSet::new(labels.to_vec())?)
}

fn set_of(ground: &GroundSet, labels: &[String]) -> Result<ElementSet, CliError> {
    let mut s = ElementSet::with_capacity(ground.len());
    for l in labels {
        s.insert(ground.index_of(l)?);
    }
    Ok(s)
}

fn labels_of(ground: &GroundSet, s: &ElementSet) -> Vec<String> {
    s.ones().map(|x| ground.label(x).to_string()).collect()
}

impl FuzzyDoc {
    pub fn to_core(&self) -> Result<(GroundSet, FuzzySubset), CliError> {
        let g = ground(&self.elements)?;
        if self.grades.len() != g.len() {
            return Err(CliError::Input(format!("{} elements but {} grades", g.len(), self.grades.len())));
        }
        let grades = self
            .grades
            .iter()
            .map(|s| Ok(Grade::new(parse_rational(s)?)?))
            .collect::<Result<_, CliError>>()?;
        Ok((g, FuzzySubset::new(grades)))
    }

    pub fn from_core(ground: &GroundSet, mu: &FuzzySubset) -> Self {
        FuzzyDoc {
            elements: ground.labels().to_vec(),
            grades: mu.grades().iter().map(|g| fmt_rational(g.value())).collect(),
        }
    }
}

impl GradualDoc {
    pub fn to_core(&self) -> Result<(GroundSet, GradualSubset), CliError> {
        let g = ground(&self.elements)?;
        let pieces = self
            .pieces
            .iter()
            .map(|p| {
                let piece = IntervalPiece::new(parse_rational(&p.lo)?, parse_rational(&p.hi)?, p.lo_closed, p.hi_closed)?;
                Ok((piece, set_of(&g, &p.value)?))
            })
            .collect::<Result<_, CliError>>()?;
        let sigma = GradualSubset::from_pieces(g.len(), pieces)?;
        Ok((g, sigma))
    }

    pub fn from_core(ground: &GroundSet, sigma: &GradualSubset) -> Self {
        GradualDoc {
            elements: ground.labels().to_vec(),
            pieces: sigma
                .map()
                .pieces()
                .into_iter()
                .map(|(p, s)| PieceDoc {
                    lo: fmt_rational(&p.lo),
                    hi: fmt_rational(&p.hi),
                    lo_closed: p.lo_closed,
                    hi_closed: p.hi_closed,
                    value: labels_of(ground, &s),
                })
                .collect(),
        }
    }
}

impl GroupDoc {
    pub fn to_core(&self) -> Result<FiniteGroup, CliError> {
        let g = ground(&self.elements)?;
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|l| Ok(g.index_of(l)?)).collect::<Result<Vec<_>, CliError>>())
            .collect::<Result<_, CliError>>()?;
        Ok(FiniteGroup::from_cayley(self.elements.clone(), table)?)
    }

    pub fn from_core(group: &FiniteGroup) -> Self {
        GroupDoc {
            elements: group.labels().to_vec(),
            table: group
                .table()
                .iter()
                .map(|row| row.iter().map(|&x| group.label(x).to_string()).collect())
                .collect(),
        }
    }
}

impl SystemDoc {
    pub fn to_core(&self) -> Result<(GroundSet, DirectedSetSystem), CliError> {
        let g = ground(&self.elements)?;
        let levels = self.levels.iter().map(|l| parse_rational(l)).collect::<Result<_, _>>()?;
        let grid = LevelGrid::new(levels)?;
        let objects = self
            .objects
            .iter()
            .map(|o| o.iter().map(|l| Ok(g.index_of(l)?)).collect::<Result<Vec<_>, CliError>>())
            .collect::<Result<_, CliError>>()?;
        let system = DirectedSetSystem::new(grid, objects, self.transitions.clone())?;
        Ok((g, system))
    }

    pub fn from_core(ground: &GroundSet, system: &DirectedSetSystem) -> Self {
        SystemDoc {
            elements: ground.labels().to_vec(),
            levels: system.grid().levels().iter().map(fmt_rational).collect(),
            objects: system
                .objects()
                .iter()
                .map(|o| o.iter().map(|&x| ground.label(x).to_string()).collect())
                .collect(),
            transitions: system.transitions().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuzzy_document_round_trip() {
        let text = r#"{"kind":"fuzzy-subset","elements":["a","b"],"grades":["1","1/2"]}"#;
        let doc = Document::parse(text).unwrap();
        let (g, mu) = doc.clone().into_fuzzy().unwrap().to_core().unwrap();
        assert_eq!(mu.grade(1), &Grade::from_ratio(1, 2).unwrap());
        let back = Document::FuzzySubset(FuzzyDoc::from_core(&g, &mu));
        assert_eq!(back, doc);
        assert_eq!(Document::parse(&back.to_json()).unwrap(), back);
    }

    #[test]
    fn bad_documents() {
        assert!(Document::parse(r#"{"kind":"nonsense"}"#).is_err());
        let doc = Document::parse(r#"{"kind":"fuzzy-subset","elements":["a"],"grades":["3/2"]}"#).unwrap();
        assert!(doc.into_fuzzy().unwrap().to_core().is_err());
        let doc = Document::parse(r#"{"kind":"group","elements":["e","x"],"table":[["e","x"],["x","x"]]}"#).unwrap();
        assert!(doc.into_group().unwrap().to_core().is_err());
    }

    #[test]
    fn group_document_round_trip() {
        let g = FiniteGroup::symmetric(3);
        let doc = GroupDoc::from_core(&g);
        assert_eq!(doc.to_core().unwrap(), g);
    }
}
