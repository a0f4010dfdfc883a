use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Tables are not total, have the wrong shape, or do not describe a lattice.
    #[error("structural error: {0}")]
    Structure(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An operation was handed an input outside its contract, e.g. a
    /// non-distributive algebra on the Boolean track.
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("size guard exceeded while {what}: more than {cap} members")]
    Resource { what: String, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size caps for the exhaustive closures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of members of any generated set family
    /// (biorthogonally closed sets, opens, upsets, closed elements).
    pub max_family: usize,
    /// Compactness pairs are scanned exhaustively when the algebra has at
    /// most this many elements, and sampled otherwise.
    pub compact_exhaustive_max: usize,
}

pub const DEFAULT_MAX_FAMILY: usize = 1 << 20;
pub const DEFAULT_COMPACT_EXHAUSTIVE_MAX: usize = 12;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_family: DEFAULT_MAX_FAMILY,
            compact_exhaustive_max: DEFAULT_COMPACT_EXHAUSTIVE_MAX,
        }
    }
}

impl Limits {
    pub fn with_max_family(max_family: usize) -> Self {
        Limits {
            max_family,
            ..Self::default()
        }
    }

    pub(crate) fn guard(&self, len: usize, what: &str) -> Result<()> {
        if len > self.max_family {
            Err(Error::Resource {
                what: what.to_string(),
                cap: self.max_family,
            })
        } else {
            Ok(())
        }
    }
}
