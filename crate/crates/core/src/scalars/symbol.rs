use std::fmt;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};

/// How a parameter behaves under complex conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reality {
    Real,
    Imaginary,
    Unrestricted,
}

/// Deformation parameters known to the catalog, in canonical order.
pub const KNOWN_PARAMS: [&str; 12] = [
    "alpha", "alphat", "alpha1", "alpha2", "beta", "beta1", "beta2", "gamma", "gamma1", "chi",
    "lambda", "xi",
];

struct Registry {
    entries: Vec<(String, Reality)>,
}

// Known parameters are registered eagerly so symbol ids, and hence canonical
// term orders, do not depend on which thread interns a name first.
static REGISTRY: Lazy<RwLock<Registry>> = Lazy::new(|| {
    let mut entries = Vec::new();
    for reality in [Reality::Unrestricted, Reality::Real, Reality::Imaginary] {
        for name in KNOWN_PARAMS {
            entries.push((name.to_string(), reality));
        }
    }
    RwLock::new(Registry { entries })
});

/// An interned formal parameter. Two symbols with the same name but a
/// different reality flag are distinct variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamSymbol(u32);

impl ParamSymbol {
    pub fn new(name: &str, reality: Reality) -> Self {
        {
            let reg = REGISTRY.read();
            if let Some(k) = reg.entries.iter().position(|(n, r)| n == name && *r == reality) {
                return ParamSymbol(k as u32);
            }
        }
        let mut reg = REGISTRY.write();
        if let Some(k) = reg.entries.iter().position(|(n, r)| n == name && *r == reality) {
            return ParamSymbol(k as u32);
        }
        reg.entries.push((name.to_string(), reality));
        ParamSymbol((reg.entries.len() - 1) as u32)
    }

    /// Interning index; stable for the known parameters.
    pub fn index(&self) -> u32 {
        self.0
    }

    pub fn unrestricted(name: &str) -> Self {
        Self::new(name, Reality::Unrestricted)
    }

    pub fn name(&self) -> String {
        REGISTRY.read().entries[self.0 as usize].0.clone()
    }

    pub fn reality(&self) -> Reality {
        REGISTRY.read().entries[self.0 as usize].1
    }

    /// Sign picked up under conjugation: `+1` for real, `-1` for imaginary.
    pub fn conj_sign(&self) -> Result<i64> {
        match self.reality() {
            Reality::Real => Ok(1),
            Reality::Imaginary => Ok(-1),
            Reality::Unrestricted => Err(Error::UnrestrictedConjugate(self.name())),
        }
    }
}

impl fmt::Display for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reality() {
            Reality::Unrestricted => write!(f, "{}", self.name()),
            Reality::Real => write!(f, "{}[re]", self.name()),
            Reality::Imaginary => write!(f, "{}[im]", self.name()),
        }
    }
}
