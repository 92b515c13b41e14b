use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument identifier {0:?}: expected [A-Za-z0-9_]+")]
    InvalidArgumentId(String),
    #[error("unknown argument {0}")]
    UnknownArgument(String),
    #[error("attack {from}>{to} is not part of the graph")]
    UnknownAttack { from: String, to: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: argument {name} declared twice")]
    DuplicateArgument { line: usize, name: String },
    #[error("line {line}: attack {from}>{to} references undeclared argument {missing}")]
    UndeclaredArgument {
        line: usize,
        from: String,
        to: String,
        missing: String,
    },
    #[error("enumeration size {0} out of range 1..={max}", max = crate::enumerate::MAX_ENUMERATION_SIZE)]
    EnumerationSize(usize),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}
