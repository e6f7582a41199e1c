//! Combinatorial models for pants decompositions of surfaces and the label
//! dynamics of the flip–twist groupoid.
//!
//! The crate has four largely independent layers:
//!
//! * [`graph`] — pants decompositions as leg-marked trivalent graphs with a
//!   curve labeling, flips and S-moves acting on them, canonical certificates,
//!   and exhaustive orbit enumeration for small surfaces.
//! * [`homology`] / [`double_pants`] — the symplectic lattice `H_1` of the
//!   closed surface, Dehn twists as transvections, Lagrangian planes, and the
//!   labeled class tables of double pants decompositions with a script
//!   replayer.
//! * [`torus`] — the exact slope model of curves inside a handle
//!   (one-holed torus), where the three-twist label swap is verified on the
//!   nose rather than just homologically.
//! * [`hexagon`] — the genus-2 labeling machine: hexagonal labelings, the
//!   moves generated by rotation, reflection and switches, and the orbit
//!   censuses (6 strict orbits, 15 labeled orbits).

pub mod double_pants;
pub mod error;
pub mod graph;
pub mod hexagon;
pub mod homology;
pub mod script;
pub mod surface;
pub mod torus;

pub use error::Error;
pub use surface::SurfaceSig;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// A sign, used for twist directions and flip sign choices.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// All signs in lexicographic search order (`+` before `-`).
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(()),
        }
    }
}
