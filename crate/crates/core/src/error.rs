use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("thin permutations cannot have an inner run of size one")]
    InnerRunOfSizeOne,
    #[error("permutation {0} is not pop-stacked")]
    NotPopStacked(String),
    #[error("permutation {0} is not a layered pop-stacked permutation")]
    NotLayeredPopstacked(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("word is not the scanline word of a permutation with {k} runs")]
    NotARunWord { k: usize },
    #[error("letter {letter} outside alphabet 1..={k}")]
    LetterOutOfRange { letter: u32, k: usize },
    #[error("singular linear system while extracting a generating function")]
    SingularSystem,

    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("denominator does not split into factors (1 - jz)")]
    NonSplittingDenominator,
    #[error("square root needs a series with constant term 1")]
    NonUnitConstantTerm,
    #[error("composition needs an inner series with zero constant term")]
    CompositionConstantTerm,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("the roots 1 and 12 of the generating tree have no parent")]
    RootPermutation,
    #[error("truncation order {0} too large for the functional-equation check (max 10)")]
    TruncationTooLarge(usize),

    #[error("permutation {0} is not 2-pop-stack-sortable")]
    Not2PSS(String),
    #[error("invalid colouring: red up-step at gap {0} has no adjacent down-step")]
    InvalidColouring(usize),

    #[error("threshold {k} outside 1..={max}")]
    ThresholdOutOfRange { k: usize, max: usize },
    #[error("shadow words of different shapes are incomparable")]
    IncomparableShape,
    #[error("{what} = {value} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("cell (i={i}, j={j}) lies outside the region allowed after {m} flips (n={n})")]
    OutOfAllowedRegion { n: usize, m: usize, i: usize, j: usize },
    #[error("permutation {0} is not in the image of T^(n-2)")]
    NotInImage(String),
    #[error("dot ({i}, {value}) violates the bandwidth bound {bound}")]
    BandwidthViolation { i: usize, value: usize, bound: usize },
}
