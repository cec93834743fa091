use thiserror::Error;

/// Errors produced by rackkit operations.
///
/// Element labels carried by variants are 1-based, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: expected an integer, found {token:?}")]
    NonInteger { line: usize, token: String },

    #[error("table is empty")]
    EmptyTable,

    #[error("table size must be positive")]
    ZeroSize,

    #[error("expected {expected} rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },

    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongRowLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry {value} at row {row}, column {column} is outside 1..={n}")]
    EntryOutOfRange {
        row: usize,
        column: usize,
        value: i64,
        n: usize,
    },

    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("not a rack: {0}")]
    NotARack(String),

    #[error("diagonal map is not a bijection ({0} and {1} have the same image)")]
    DiagonalNotBijective(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error(
        "not a congruence: {x} ~ {x_prime} and {y} ~ {y_prime}, \
         but {x}>{y}={xy} is not equivalent to {x_prime}>{y_prime}={xy_prime}"
    )]
    NotACongruence {
        x: usize,
        x_prime: usize,
        y: usize,
        y_prime: usize,
        xy: usize,
        xy_prime: usize,
    },

    #[error("{name} must be at least 1, got {value}")]
    InvalidExponent { name: &'static str, value: i64 },

    #[error("unknown index convention {0:?} (expected def or prop3)")]
    InvalidConvention(String),

    #[error("not a subrack: {a}>{b}={product} leaves the subset")]
    NotASubrack { a: usize, b: usize, product: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("rack of order {n} exceeds the supported maximum {max} for this operation")]
    TooLarge { n: usize, max: usize },

    #[error("t={t} is not a unit modulo {n}")]
    NotAUnit { t: i64, n: u64 },

    #[error("s(1-t-s) = {value} is not 0 modulo {n} (t={t}, s={s})")]
    TsRelation { n: u64, t: i64, s: i64, value: i64 },

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("arc {arc} appears {count} times as {role}; expected exactly once")]
    ArcMultiplicity {
        arc: u32,
        role: &'static str,
        count: usize,
    },

    #[error("crossing {crossing} references unknown arc {arc}")]
    UnknownArc { crossing: usize, arc: u32 },

    #[error("free arc {0} also appears in a crossing")]
    FreeArcInCrossing(u32),

    #[error("coloring of {arcs} arcs does not match the diagram")]
    ColoringMismatch { arcs: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
