//! Text form of hypercomplex numbers: `a + b e1 + c e2 + ...`.
//!
//! Rendering is compact (zero terms dropped, unit coefficients elided);
//! parsing accepts the compact form as well as the fully spelled one.
//! Whitespace is ignored and consecutive terms must be joined by a sign.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Renders coefficients of `{1, e1, ..., e_{n-1}}`.
pub fn render<T: Scalar>(coeffs: &[T]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&format!("e{k}"));
        } else {
            out.push_str(&format!("{mag} e{k}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a sum of terms over `dim` basis units (`dim - 1` imaginary units).
pub fn parse<T: Scalar>(text: &str, dim: usize) -> Result<Vec<T>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut coeffs = vec![T::zero(); dim];
    for (negative, term) in split_signed_terms(&compact)? {
        let (coef, unit) = parse_term::<T>(term, dim)?;
        let value = if negative { -coef } else { coef };
        coeffs[unit] = coeffs[unit].clone() + value;
    }
    Ok(coeffs)
}

/// Splits `compact` at top-level `+`/`-` signs (outside parentheses).
pub(crate) fn split_signed_terms(compact: &str) -> Result<Vec<(bool, &str)>> {
    let mut terms = Vec::new();
    let bytes = compact.as_bytes();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    let mut i = 0usize;
    if let Some(&b) = bytes.first() {
        if b == b'+' || b == b'-' {
            negative = b == b'-';
            start = 1;
            i = 1;
        }
    }
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced ')' in {compact:?}")));
                }
            }
            b'+' | b'-' if depth == 0 => {
                let term = &compact[start..i];
                if term.is_empty() {
                    return Err(Error::Parse(format!("missing term in {compact:?}")));
                }
                terms.push((negative, term));
                negative = bytes[i] == b'-';
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '(' in {compact:?}")));
    }
    let term = &compact[start..];
    if term.is_empty() {
        return Err(Error::Parse(format!("missing term in {compact:?}")));
    }
    terms.push((negative, term));
    Ok(terms)
}

fn parse_term<T: Scalar>(term: &str, dim: usize) -> Result<(T, usize)> {
    let (coef_text, unit) = match term.rfind('e') {
        Some(pos) if pos + 1 < term.len() && term[pos + 1..].bytes().all(|b| b.is_ascii_digit()) => {
            let unit: usize = term[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad unit in {term:?}")))?;
            if unit == 0 || unit >= dim {
                return Err(Error::Parse(format!("unit e{unit} out of range (1..{})", dim - 1)));
            }
            (term[..pos].trim_end_matches('*'), unit)
        }
        _ => (term, 0),
    };
    let coef = if coef_text.is_empty() {
        if unit == 0 {
            return Err(Error::Parse(format!("empty term {term:?}")));
        }
        T::one()
    } else {
        coef_text
            .parse::<T>()
            .map_err(|_| Error::Parse(format!("bad coefficient {coef_text:?}")))?
    };
    Ok((coef, unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Rational;

    #[test]
    fn renders_compact_form() {
        let c: Vec<Rational> = vec![int(1), int(-1), ratio(1, 2), int(0)];
        assert_eq!(render(&c), "1 - e1 + 1/2 e2");
        let z: Vec<Rational> = vec![int(0); 4];
        assert_eq!(render(&z), "0");
        let n: Vec<Rational> = vec![int(0), int(0), int(0), int(-3)];
        assert_eq!(render(&n), "-3 e3");
    }

    #[test]
    fn parses_spelled_and_compact_forms() {
        let a: Vec<Rational> = parse("1 + 2 e1 - 3/4 e2 + 0 e3", 4).unwrap();
        assert_eq!(a, vec![int(1), int(2), ratio(-3, 4), int(0)]);
        let b: Vec<Rational> = parse("-e3+e1", 4).unwrap();
        assert_eq!(b, vec![int(0), int(1), int(0), int(-1)]);
        let c: Vec<Rational> = parse("2*e7", 8).unwrap();
        assert_eq!(c[7], int(2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse::<Rational>("", 4).is_err());
        assert!(parse::<Rational>("1 + e4", 4).is_err());
        assert!(parse::<Rational>("1 e1 e2", 4).is_err());
        assert!(parse::<Rational>("1 ++ e2", 4).is_err());
        assert!(parse::<Rational>("x", 4).is_err());
    }
}
