use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("q = {0} is not an odd prime below 2^31")]
    NotOddPrime(u64),
    #[error("polynomials over different fields (q = {0} and q = {1})")]
    FieldMismatch(u32, u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("{0}: polynomial must have positive degree")]
    ConstantPolynomial(&'static str),
    #[error("{0} is not monic and irreducible")]
    NotMonicIrreducible(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("invalid equation: {0}")]
    InvalidInstance(&'static str),
    #[error("the instance is not imaginary (two places above infinity)")]
    NotImaginary,
    #[error("n = 0: the equation is trivially solvable")]
    TrivialInstance,
    #[error("precision {given} too small, need at least {required}")]
    PrecisionTooSmall { given: u32, required: u32 },
    #[error("a search bound is required for non-imaginary instances")]
    MissingBound,
    #[error("search space exceeds 2^64 candidates")]
    SearchTooLarge,
    #[error("invalid class field description: {0}")]
    InvalidSpec(String),
    #[error("class field description out of scope: {0}")]
    SpecScope(String),
    #[error("{0} is ramified for this class field description")]
    Ramified(String),
    #[error("irreducible factors of unequal degrees modulo {0}")]
    UnequalFactorDegrees(String),
    #[error("deg l = {deg_l} is not divisible by d_infinity = {d_infinity}")]
    NonIntegralDegStar { deg_l: usize, d_infinity: usize },
}
