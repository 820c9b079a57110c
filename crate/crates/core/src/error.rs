use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Sidelengths violate the strict triangle inequality or the area cutoff.
    DegenerateTriangle,
    /// A homogeneous point with (numerically) zero coordinate sum was asked
    /// for a cartesian position.
    InfinitePoint,
    CoincidentPoints,
    /// Five lines do not determine a unique nondegenerate line-conic.
    DegenerateConic,
    /// NaN or infinite input where a finite value is required.
    InvalidInput(&'static str),
    /// The composed chord map is a multiple of the identity: every point of
    /// the circle closes, so there is no finite solution list.
    DegenerateComposition,
    /// A perspectrix seed path closed on itself for every seed choice.
    PathClosed,
    NoRealIntersection,
    /// The circle is neither the incircle nor an excircle of the triangle.
    NotTritangent,
    OutOfRange,
    NonEllipse,
    UnknownCenter(u32),
    SeedMismatch,
    /// A post-condition residual exceeded its tolerance.
    Inconsistent { check: &'static str, residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateTriangle => f.write_str("degenerate triangle"),
            Error::InfinitePoint => f.write_str("point at infinity has no cartesian position"),
            Error::CoincidentPoints => f.write_str("points coincide"),
            Error::DegenerateConic => f.write_str("lines do not determine a unique conic"),
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
            Error::DegenerateComposition => f.write_str(
                "composed chord map is the identity: every circle point closes (special configuration)",
            ),
            Error::PathClosed => f.write_str("every perspectrix seed path closed on itself"),
            Error::NoRealIntersection => f.write_str("line misses the circle"),
            Error::NotTritangent => f.write_str("circle is neither the incircle nor an excircle"),
            Error::OutOfRange => f.write_str("argument out of range"),
            Error::NonEllipse => f.write_str("conic is not a real ellipse"),
            Error::UnknownCenter(k) => write!(f, "X({k}) is not in the registry"),
            Error::SeedMismatch => f.write_str("seed is not the A-vertex of an incircle solution"),
            Error::Inconsistent { check, residual } => {
                write!(f, "internal inconsistency: {check} residual {residual:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
