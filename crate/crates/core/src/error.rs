use std::fmt;

/// Group axiom that a candidate Cayley table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Shape,
    Latin,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "shape",
            Axiom::Latin => "latin square",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a group: {axiom} fails at witness ({}, {}, {})", witness[0], witness[1], witness[2])]
    NotAGroup { axiom: Axiom, witness: [usize; 3] },

    #[error("size guard: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("time budget exhausted")]
    TimeBudget,

    #[error("invalid ZM parameters: {0}")]
    InvalidZmParameters(String),

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("orders {a} and {b} are not coprime")]
    NotCoprimeOrders { a: usize, b: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid lambda: {0}")]
    InvalidLambda(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a complement: {0}")]
    NotAComplement(String),

    #[error("action is not faithful: {0} nonidentity element(s) act trivially")]
    ActionNotFaithful(usize),

    #[error("not abelian: {0}")]
    NotAbelian(String),

    #[error("not a p-group: order {0}")]
    NotPGroup(usize),

    #[error("index is {index}, expected {expected}")]
    NotIndexP { index: usize, expected: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("methods disagree: {0}")]
    MethodDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
