//! Number and cell formatting shared by the text, CSV and Markdown outputs.

use std::str::FromStr;

use rust_decimal::{Decimal, RoundingStrategy};

/// Rounds the shortest decimal representation of `x` half-up to `places`.
pub fn round_half_up(x: f64, places: u32) -> Decimal {
    let exact = Decimal::from_str(&x.to_string())
        .or_else(|_| Decimal::from_scientific(&format!("{x:e}")))
        .unwrap_or_default();
    exact.round_dp_with_strategy(places, RoundingStrategy::MidpointAwayFromZero)
}

/// `x` with exactly `places` decimals.
pub fn fixed(x: f64, places: u32) -> String {
    let mut d = round_half_up(x, places);
    d.rescale(places);
    d.to_string()
}

/// Normalized variance to three decimals, with values that round to one
/// printed as `1`.
pub fn normalized_variance(x: f64) -> String {
    if round_half_up(x, 3) == Decimal::ONE {
        "1".to_string()
    } else {
        fixed(x, 3)
    }
}

/// Compact design cell: `d` for a single depth, `(d, w)` when the rest of the
/// weight sits on `strength`, and `{d: w, ...}` otherwise.
pub fn design_cell(support: &[(usize, f64)], strength: usize, places: u32, bold: bool) -> String {
    let depth = |d: usize| {
        if bold {
            format!("**{d}**")
        } else {
            d.to_string()
        }
    };
    match support {
        [(d, _)] => depth(*d),
        [(d, w), (s, _)] if *s == strength => format!("({}, {})", depth(*d), fixed(*w, places)),
        _ => {
            let parts: Vec<String> = support
                .iter()
                .map(|&(d, w)| format!("{}: {}", depth(d), fixed(w, places)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
    }
}
