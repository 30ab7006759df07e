use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: unreadable or invalid specification, parameters or flags.
    #[error("{0}")]
    Validation(String),
    /// The computation itself failed: infeasible calibration, non-normalizable
    /// inverse, degenerate evidence and the like.
    #[error("{0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numerical(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<fuzzy_prior::Error> for CliError {
    fn from(e: fuzzy_prior::Error) -> Self {
        use fuzzy_prior::Error as E;
        match e {
            E::InvalidParameter { .. }
            | E::InvalidLossParams(_)
            | E::InvalidInterval { .. }
            | E::InvalidGrid(_)
            | E::GridMismatch => CliError::Validation(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_split_by_kind() {
        let bad = fuzzy_prior::LossParams::new(-1.0, 0.0, 1.0, 1.0).unwrap_err();
        assert_eq!(CliError::from(bad).exit_code(), 1);
        let infeasible = fuzzy_prior::Error::InfeasibleB1 {
            b1: 5.0,
            bound: 3.4,
        };
        assert_eq!(CliError::from(infeasible).exit_code(), 2);
    }
}
