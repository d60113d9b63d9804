//! Text grammars accepted on the command line.

use num_bigint::BigInt;
use regdet_core::numberfield::IntegerPolynomial;
use regdet_core::ComplexValue;

/// Parses `a+bi` with either part optional: `2`, `3i`, `-i`, `1-0.5i`,
/// `1e-3+2.5e1i`. A trailing `j` is accepted in place of `i`.
pub fn parse_complex(text: &str) -> Result<ComplexValue, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("cannot parse complex literal {text:?} (expected a+bi)");
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|re| ComplexValue::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(ComplexValue::new(re, im))
}

/// Comma-separated integer coefficients, lowest degree first: `-2,0,0,1`
/// is `x³ − 2`.
pub fn parse_polynomial(text: &str) -> Result<IntegerPolynomial, String> {
    let coeffs = text
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<BigInt>()
                .map_err(|_| format!("bad polynomial coefficient {part:?} in {text:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    IntegerPolynomial::new(coeffs).map_err(|e| e.to_string())
}

/// `lo,hi` pair of floats.
pub fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [lo, hi] => {
            let lo = lo.parse::<f64>().map_err(|_| format!("bad range bound {lo:?}"))?;
            let hi = hi.parse::<f64>().map_err(|_| format!("bad range bound {hi:?}"))?;
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(format!("range {text:?} must be finite with lo <= hi"));
            }
            Ok((lo, hi))
        }
        _ => Err(format!("range {text:?} must be of the form lo,hi")),
    }
}
