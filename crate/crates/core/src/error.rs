use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no primitive multiple of the zero vector")]
    NoPrimitiveMultiple,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("empty generator list")]
    EmptyGeneratorList,

    #[error("letter refers to generator {index} but there are only {count} generators")]
    LetterOutOfRange { index: usize, count: usize },

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("not an index-2 subgroup: the character is identically zero")]
    NotIndexTwo,

    #[error("element not in subgroup")]
    NotInSubgroup,

    #[error("character space has dimension {dimension}, above the cap of {cap}")]
    CapExceeded { dimension: usize, cap: usize },

    #[error("expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("invalid PD code: {0}")]
    InvalidPd(String),

    #[error("inconsistent orientation while tracing component through arc {0}")]
    InconsistentOrientation(u32),

    #[error("empty component subset")]
    EmptySubset,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
