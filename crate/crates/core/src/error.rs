use core::fmt;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Every precondition failure the library can report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two matrices that must compose (or add) have incompatible shapes.
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    /// `d_out · d_in` is not the zero matrix.
    CompositionNonzero,
    /// The vertex set is not the one the operation expects.
    UnknownVertex(u32),
    /// The given vertex set is not a face of the complex.
    NotAFace,
    /// The complex has no faces at all, not even the empty face.
    VoidComplex,
    /// The presentation is malformed (wrong vector length, trivial relation).
    InvalidPresentation(String),
    /// The presentation has no generators.
    NoGenerators,
    /// More generators than fit a generator bitmask.
    TooManyGenerators(usize),
    /// A relation sets an element equal to `0`, so the binoid has extra units.
    NotPositive,
    /// A relation is not of the form `squarefree monomial = ∞`.
    NotSimplicialPresentation,
    /// A relation is not of the form `monomial = ∞`.
    NotMonomialPresentation,
    /// An `∞`-relation is present but the operation needs an integral binoid.
    NotIntegral,
    /// The difference group has torsion.
    Torsion,
    /// The prime ideal does not belong to the spectrum.
    NotInSpec,
    /// The set of primes is not closed under taking subsets.
    NotOpen,
    /// Localizing at this support kills the binoid (`D(F)` is empty).
    DegenerateLocalization,
    /// The generators do not span the difference group.
    NotFullDimensional,
    /// The cone spanned by the generators contains a line.
    NotPointed,
    /// Cone facets and height-one primes do not correspond bijectively.
    FacetPrimeMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "matrix shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::CompositionNonzero => f.write_str("consecutive differentials do not compose to zero"),
            Error::UnknownVertex(v) => write!(f, "vertex {v} is not a vertex of the complex"),
            Error::NotAFace => f.write_str("the given vertex set is not a face of the complex"),
            Error::VoidComplex => f.write_str("the complex is void (it has no faces)"),
            Error::InvalidPresentation(msg) => write!(f, "invalid presentation: {msg}"),
            Error::NoGenerators => f.write_str("the presentation has no generators"),
            Error::TooManyGenerators(n) => write!(f, "{n} generators exceed the supported maximum of 63"),
            Error::NotPositive => f.write_str("a relation equates an element with 0; the binoid is not positive"),
            Error::NotSimplicialPresentation => {
                f.write_str("not a simplicial presentation: every relation must be a squarefree monomial = inf")
            }
            Error::NotMonomialPresentation => {
                f.write_str("not a monomial presentation: every relation must be of the form monomial = inf")
            }
            Error::NotIntegral => f.write_str("the binoid is not integral (it has an inf-relation)"),
            Error::Torsion => f.write_str("the difference group has torsion"),
            Error::NotInSpec => f.write_str("the ideal is not a prime of this spectrum"),
            Error::NotOpen => f.write_str("the set of primes is not open (not closed under subsets)"),
            Error::DegenerateLocalization => f.write_str("the localization is the zero binoid"),
            Error::NotFullDimensional => f.write_str("the generators do not span the difference group"),
            Error::NotPointed => f.write_str("the cone of the binoid is not pointed"),
            Error::FacetPrimeMismatch => f.write_str("cone facets do not match the height-one primes bijectively"),
        }
    }
}

impl core::error::Error for Error {}
