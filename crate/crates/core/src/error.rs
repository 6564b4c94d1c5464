use thiserror::Error;

/// Errors raised by the constructors and operators of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} is outside the allowed range {1}")]
    OutOfRange(String, &'static str),
    #[error("invalid interval piece: {0}")]
    InvalidPiece(String),
    #[error("pieces do not partition (0,1]: {0}")]
    NotPartition(String),
    #[error("pieces overlap: {0}")]
    Overlap(String),
    #[error("level set is not inf-compact: infimum {0} of a piece is not attained")]
    NotInfCompact(String),
    #[error("level set does not contain 1")]
    MissingOne,
    #[error("empty family")]
    EmptyFamily,
    #[error("ground sets differ ({0} vs {1} elements)")]
    GroundMismatch(usize, usize),
    #[error("element index {0} out of range")]
    UnknownElement(usize),
    #[error("gradual subset is not decreasing")]
    NotDecreasing,
    #[error("gradual subset is not strict decreasing")]
    NotStrictDecreasing,
    #[error("property (F) fails for element {element}: its membership levels have supremum {supremum} which is not attained")]
    PropertyFViolated { element: usize, supremum: String },
    #[error("property (inf-F) fails for element {element} at level {infimum}")]
    PropertyInfFViolated { element: usize, infimum: String },
    #[error("Cayley table is malformed: {0}")]
    MalformedTable(String),
    #[error("operation is not associative: ({0}*{1})*{2} differs from {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("map does not respect products at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("a level value is empty")]
    EmptyLevelValue,
    #[error("first gradual subgroup is not contained in the second")]
    NotIncluded,
    #[error("not a fuzzy subgroup: mu({x}*{y}^-1) < min(mu({x}), mu({y}))")]
    NotFuzzySubgroup { x: usize, y: usize },
    #[error("fuzzy subgroup is constant 0")]
    ConstantZero,
    #[error("level grid does not contain breakpoint {0}")]
    GridTooCoarse(String),
    #[error("invalid level grid: {0}")]
    InvalidGrid(String),
    #[error("invalid directed system: {0}")]
    InvalidSystem(String),
    #[error("transition maps are not injective")]
    NotInjective,
    #[error("maps do not form a cocone: {0}")]
    NotCocone(String),
    #[error("identity violated: {0}")]
    LawViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
