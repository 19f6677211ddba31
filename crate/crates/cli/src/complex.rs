//! Complex numbers on the command line and in parameter files.
//!
//! Accepted forms: a real number (`1`, `-0.5`), a two-element array
//! `[re, im]`, or a pure imaginary shorthand `i`, `3i`, `-i/3`, `0.5i/2`.

use serde::{Deserialize, Deserializer};
use su2_pfaffian::{c64, C64};

pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: [f64; 2] = serde_json::from_str(t).map_err(|e| format!("bad complex array {t:?}: {e}"))?;
        return Ok(c64(v[0], v[1]));
    }
    if let Ok(x) = t.parse::<f64>() {
        return Ok(c64(x, 0.0));
    }
    parse_imaginary(t).ok_or_else(|| format!("cannot parse {t:?} as a complex number (try [re,im], 1.5, 3i or i/3)"))
}

fn parse_imaginary(t: &str) -> Option<C64> {
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().ok()?),
        None => (t, 1.0),
    };
    let coef = num.strip_suffix('i')?.trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().ok()?,
    };
    (den != 0.0 && coef.is_finite() && den.is_finite()).then(|| c64(0.0, coef / den))
}

/// Serde adapter for the same three forms.
pub fn deserialize_complex<'de, D: Deserializer<'de>>(d: D) -> Result<C64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Pair([f64; 2]),
        Real(f64),
        Text(String),
    }
    match Repr::deserialize(d)? {
        Repr::Pair([re, im]) => Ok(c64(re, im)),
        Repr::Real(x) => Ok(c64(x, 0.0)),
        Repr::Text(s) => parse_complex(&s).map_err(serde::de::Error::custom),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_forms() {
        assert_eq!(parse_complex("i/3").unwrap(), c64(0.0, 1.0 / 3.0));
        assert_eq!(parse_complex("-i/3").unwrap(), c64(0.0, -1.0 / 3.0));
        assert_eq!(parse_complex("3i").unwrap(), c64(0.0, 3.0));
        assert_eq!(parse_complex("-3i").unwrap(), c64(0.0, -3.0));
        assert_eq!(parse_complex("i").unwrap(), c64(0.0, 1.0));
        assert_eq!(parse_complex("2").unwrap(), c64(2.0, 0.0));
        assert_eq!(parse_complex("[0.5, -1]").unwrap(), c64(0.5, -1.0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x", "i/0", "[1]", "1+", "3j"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }
}
