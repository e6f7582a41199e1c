//! Surface signatures (genus, holes) and the derived pants/curve counts.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An oriented surface of genus `g` with `n` holes, subject to `2g + n > 2`.
///
/// The sphere with three holes (0,3) is admitted: its decomposition is the
/// trivial one with no curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSig {
    genus: u32,
    holes: u32,
}

impl SurfaceSig {
    pub fn new(genus: u32, holes: u32) -> Result<Self> {
        if 2 * genus + holes > 2 {
            Ok(SurfaceSig { genus, holes })
        } else {
            Err(Error::InvalidSurface { genus, holes })
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn holes(&self) -> u32 {
        self.holes
    }

    /// Number of curves in any pants decomposition: `3g - 3 + n`.
    pub fn curve_count(&self) -> u32 {
        3 * self.genus + self.holes - 3
    }

    /// Number of pairs of pants: `2g - 2 + n`.
    pub fn pants_count(&self) -> u32 {
        2 * self.genus + self.holes - 2
    }
}

impl std::fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.holes)
    }
}
