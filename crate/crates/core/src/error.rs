use thiserror::Error;

use crate::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("modulus {0} must be odd and at least 3")]
    BadModulus(u64),
    #[error("color {value} exceeds {max}, the largest color modulo {modulus}")]
    ColorOutOfRange { value: u32, max: u32, modulus: u32 },
    #[error("colors live in different rings ({0} vs {1})")]
    ModulusMismatch(Modulus, Modulus),
    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("card {card} has a face that is not a K3-type")]
    InvalidCard { card: String },
}
