use alloc::string::String;

use crate::steenrod::DSquaredFailure;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator `{name}` has degree {degree}: even degrees only, and at least 2")]
    GeneratorDegree { name: String, degree: u32 },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("top degree {0} is odd")]
    OddTopDegree(u32),
    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("relation {index} is a nonzero constant")]
    ConstantRelation { index: usize },
    #[error("relation {index} has degree {degree}, above the admissible bound {bound}")]
    RelationDegree {
        index: usize,
        degree: u32,
        bound: u32,
    },
    #[error("the quotient is nonzero in degree {degree}, above the top degree {top}")]
    NotTruncated { degree: u32, top: u32 },
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("monomial has {found} exponents, the presentation has {expected} generators")]
    Arity { expected: usize, found: usize },
    #[error("the degree of the zero polynomial is undetermined")]
    ZeroPolynomialDegree,

    #[error("expected {expected} Sq2 values, one per generator, found {found}")]
    Sq2Count { expected: usize, found: usize },
    #[error("Sq2 of generator {generator} must have degree {expected}, found {found}")]
    Sq2Degree {
        generator: usize,
        expected: u32,
        found: u32,
    },
    #[error("Sq2 of generator {generator} is not homogeneous")]
    Sq2Inhomogeneous { generator: usize },
    #[error("Sq2 of degree-2 generator {generator} must equal its square")]
    UnstableAxiom { generator: usize },
    #[error("Sq2 does not preserve the ideal: Sq2 of relation {relation} is nonzero")]
    RelationNotStable { relation: usize },
    #[error("twist class has degree {0}, expected 2")]
    TwistDegree(u32),
    #[error("{0}")]
    DSquared(DSquaredFailure),

    #[error("twist `{0}` is declared twice")]
    DuplicateTwist(String),
    #[error("unknown twist `{0}`")]
    UnknownTwist(String),
    #[error("{family}: {requirement}")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("no closed-form table is known for {0}")]
    NotTabulated(String),
}
