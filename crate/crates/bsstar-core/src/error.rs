use thiserror::Error;

/// Errors produced by graph construction, sampling, and verification.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {n} out of range (expected 2..=12)")]
    DimensionOutOfRange { n: usize },

    #[error("symbols are not a permutation of 1..={n}")]
    InvalidSymbols { n: usize },

    #[error("cannot parse permutation {input:?}: {reason}")]
    ParsePermutation { input: String, reason: String },

    #[error("position {pos} out of range (expected 1..={n})")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("swap positions must be distinct (both are {pos})")]
    SamePosition { pos: usize },

    #[error("rank {value} out of range for dimension {n} (must be < {n}!)")]
    RankOutOfRange { value: u64, n: usize },

    #[error("block {block} out of range (expected 1..={n})")]
    BlockOutOfRange { block: usize, n: usize },

    #[error("cross-edge blocks must be distinct (both are {block})")]
    SameBlock { block: usize },

    #[error("block set must be nonempty")]
    EmptyBlockSet,

    #[error("edge id {value} out of range for dimension {n}")]
    EdgeIdOutOfRange { value: u64, n: usize },

    #[error("vertices {u} and {v} are not adjacent")]
    NotAnEdge { u: String, v: String },

    #[error("duplicate edge {edge} in fault set")]
    DuplicateEdge { edge: String },

    #[error("fault set size {m} exceeds edge count {edges}")]
    FaultSizeTooLarge { m: usize, edges: usize },

    #[error("source and target vertices must be distinct")]
    SameVertex,

    #[error("dimension {n} unsupported here (max {max})")]
    UnsupportedDimension { n: usize, max: usize },

    #[error("enumerating {count} fault sets exceeds the budget of {budget}")]
    EnumerationBudget { count: u128, budget: u128 },

    #[error("sweep needs about {required} flow computations, over the budget of {budget}; raise --budget, pass --force, or use sampled mode")]
    FlowBudget { required: u128, budget: u128 },

    #[error("conditional sampler hit the rejection cap ({attempts} attempts) without an accepted draw")]
    SamplerSaturated { attempts: u64 },
}
