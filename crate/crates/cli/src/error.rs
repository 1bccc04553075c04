//! Error-to-exit-code mapping.
//!
//! 0 success, 2 input error, 3 mathematical inconsistency (a residual
//! denominator, a failed congruence system, a failed cross-check),
//! 4 heavy-run gate refused.

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MATH: u8 = 3;
pub const EXIT_GATE: u8 = 4;

pub enum CliError {
    Input(String),
    Math(String),
    Gate(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(_) => EXIT_MATH,
            CliError::Gate(_) => EXIT_GATE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Math(m) | CliError::Gate(m) => m,
        }
    }
}

impl From<chernloc::PolyError> for CliError {
    fn from(e: chernloc::PolyError) -> Self {
        use chernloc::PolyError::*;
        match &e {
            NotPolynomial { .. } | NotDivisible { .. } => CliError::Math(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<chernloc::SymmError> for CliError {
    fn from(e: chernloc::SymmError) -> Self {
        match &e {
            chernloc::SymmError::Poly(p) => CliError::from(p.clone()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<chernloc::GrassError> for CliError {
    fn from(e: chernloc::GrassError) -> Self {
        match &e {
            chernloc::GrassError::Poly(p) => CliError::from(p.clone()),
            chernloc::GrassError::Symm(s) => CliError::from(s.clone()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<chernloc::CsmError> for CliError {
    fn from(e: chernloc::CsmError) -> Self {
        use chernloc::CsmError::*;
        match &e {
            Inconsistent { .. } | Underdetermined { .. } => CliError::Math(e.to_string()),
            Poly(p) => CliError::from(p.clone()),
            Grass(g) => CliError::from(g.clone()),
            Symm(s) => CliError::from(s.clone()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<chernloc::PositivityError> for CliError {
    fn from(e: chernloc::PositivityError) -> Self {
        match &e {
            chernloc::PositivityError::Poly(p) => CliError::from(p.clone()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
