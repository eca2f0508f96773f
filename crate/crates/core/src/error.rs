use thiserror::Error;

/// The three identity families a quandle operation table must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `a ◁ a = a` for every element.
    Idempotency,
    /// Every right translation `- ◁ b` is a bijection.
    RightInvertibility,
    /// `(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)`, together with its mirror for `◁⁻¹`.
    SelfDistributivity,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::Idempotency => write!(f, "idempotency"),
            Axiom::RightInvertibility => write!(f, "right invertibility"),
            Axiom::SelfDistributivity => write!(f, "self-distributivity"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    Shape(&'static str),

    /// A table failed axiom validation. The witness is the triple of
    /// indices at which the first failing identity was found; for
    /// right-invertibility it is `(i, i', j)` with column `j` sending both
    /// `i` and `i'` to the same value.
    #[error("axiom violation ({axiom}) at witness ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomViolation {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },

    #[error("map is not a homomorphism: fails at pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),

    #[error("domain mismatch between composed maps")]
    DomainMismatch,

    #[error("maps do not share a codomain")]
    CodomainMismatch,

    #[error("relations live on different base quandles")]
    BaseMismatch,

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("generated group exceeds the size cap of {0} elements")]
    GroupTooLarge(usize),

    /// Two generator words for the same group element were mapped to
    /// different images. Unreachable when the inducing homomorphism is
    /// surjective; reported instead of silently picking one image.
    #[error("inconsistent generator words while extending a map to the inner group")]
    WordInconsistency,

    #[error("claimed subgroup is not a subgroup")]
    NotASubgroup,

    #[error("group is not a subgroup of the inner automorphism group")]
    NotASubgroupOfInn,

    #[error("partition is not a congruence")]
    NotACongruence,

    #[error("square does not commute")]
    SquareNotCommuting,

    #[error("map is not in the required class for a lifting square")]
    ClassViolation,

    #[error("no diagonal fill exists for the square")]
    NoFill,

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    #[error("comparison leg must have a trivial quandle as domain")]
    PhiNotTrivialDomain,

    #[error("comparison leg must be surjective")]
    PhiNotSurjective,

    #[error("order {0} exceeds the enumeration bound of {1}")]
    OrderTooLarge(usize, usize),

    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
