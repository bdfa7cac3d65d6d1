//! Colors, K3-types, cards and K4-type canonical forms.
//!
//! Colors are plain `u32` values; the ring they live in (the integers or
//! an odd cyclic group) is carried separately as a [`Modulus`].

mod card;
mod color;
mod error;
pub mod graph;
mod k3;

pub use card::{symmetries, Card, K4Type, Position, VertexCheck, FACES, OPPOSITE};
pub use color::{mod_reduce, nu, nu_in, Color, Modulus, NuSet};
pub use error::CoreError;
pub use k3::{is_k3_type, k3_less, K3Type, Triple};

/// Writes colors the compact way when every color fits in one hex digit,
/// otherwise separated by dots.
pub fn format_colors(colors: &[u32]) -> String {
    if colors.iter().all(|&c| c < 16) {
        colors
            .iter()
            .map(|&c| char::from_digit(c, 16).unwrap())
            .collect()
    } else {
        colors
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Parses a color string: dotted decimal, or one hex digit per color.
pub fn parse_colors(text: &str) -> Result<Vec<u32>, CoreError> {
    let bad = |reason: &str| CoreError::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let text = text.trim();
    if text.is_empty() {
        return Err(bad("empty"));
    }
    if text.contains('.') {
        text.split('.')
            .map(|part| part.parse::<u32>().map_err(|_| bad("not a decimal color")))
            .collect()
    } else {
        text.chars()
            .map(|ch| match ch {
                '0'..='9' | 'a'..='f' => Ok(ch.to_digit(16).unwrap()),
                _ => Err(bad("expected digits 0-9 or a-f")),
            })
            .collect()
    }
}
