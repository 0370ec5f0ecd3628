use alloc::string::String;
use core::fmt;

/// Errors shared by all machine, word and dynamics operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A state whose output row is not a bijection on the alphabet.
    NotInvertible { state: String },
    /// A letter whose transition column is not a bijection on the states.
    NotReversible { letter: String },
    /// Two machines were combined but their ordered alphabets differ.
    AlphabetMismatch,
    /// A state-count budget would be exceeded; reports the required size.
    BudgetExceeded { required: u128 },
    /// The operation needs an identity sink but the machine has none.
    NoSink,
    /// An identifier does not name a state of the machine.
    UnknownState { name: String },
    /// An identifier does not name a letter of the machine.
    UnknownLetter { name: String },
    /// The operation is undefined on the empty word.
    EmptyWord,
    /// Commutator words need at least two generators.
    TooFewGenerators,
    /// A machine constructor was given an empty alphabet.
    EmptyAlphabet,
    /// A constructor would reuse the reserved sink identifier.
    SinkCollision { name: String },
    /// The subset of states handed to a constructor is empty.
    EmptySubset,
    /// Duplicate identifier within a state or alphabet list.
    DuplicateIdentifier { name: String },
    /// A transition or output table has the wrong number of entries.
    MalformedTable,
    /// Group table: no two-sided identity at position 0.
    NoIdentity,
    /// Group table: an element without a two-sided inverse.
    NoInverse { element: String },
    /// Group table: an associativity witness (i*j)*k != i*(j*k).
    NotAssociative { i: String, j: String, k: String },
    /// A residue is outside the modulus handed to partial_sums.
    ResidueOutOfRange { value: u64, modulus: u64 },
    /// A point word has the wrong length for the requested level.
    LengthMismatch { expected: usize, got: usize },
    /// extract_relation produced a candidate that failed the word-problem
    /// check; this indicates a bug, it is never expected on valid input.
    VerificationFailed { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible { state } => {
                write!(f, "machine is not invertible: output row of state `{state}` is not a bijection")
            }
            Error::NotReversible { letter } => {
                write!(f, "machine is not reversible: transition column of letter `{letter}` is not a bijection")
            }
            Error::AlphabetMismatch => write!(f, "machines have different ordered alphabets"),
            Error::BudgetExceeded { required } => {
                write!(f, "state budget exceeded: operation requires {required} states")
            }
            Error::NoSink => write!(f, "machine has no identity sink state"),
            Error::UnknownState { name } => write!(f, "unknown state `{name}`"),
            Error::UnknownLetter { name } => write!(f, "unknown letter `{name}`"),
            Error::EmptyWord => write!(f, "operation is undefined on the empty word"),
            Error::TooFewGenerators => write!(f, "need at least two generators"),
            Error::EmptyAlphabet => write!(f, "alphabet must be nonempty"),
            Error::SinkCollision { name } => {
                write!(f, "identifier `{name}` collides with the reserved sink state")
            }
            Error::EmptySubset => write!(f, "state subset must be nonempty"),
            Error::DuplicateIdentifier { name } => write!(f, "duplicate identifier `{name}`"),
            Error::MalformedTable => write!(f, "transition/output table has the wrong shape"),
            Error::NoIdentity => write!(f, "element 0 is not a two-sided identity"),
            Error::NoInverse { element } => write!(f, "element `{element}` has no two-sided inverse"),
            Error::NotAssociative { i, j, k } => {
                write!(f, "multiplication is not associative at ({i}, {j}, {k})")
            }
            Error::ResidueOutOfRange { value, modulus } => {
                write!(f, "residue {value} out of range for modulus {modulus}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "point has length {got}, expected {expected}")
            }
            Error::VerificationFailed { detail } => {
                write!(f, "internal verification failed: {detail}")
            }
        }
    }
}
