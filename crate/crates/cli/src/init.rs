//! Initial-condition mini-language.
//!
//! A signed sum of terms `c sin m` or `c cos m`. The coefficient defaults
//! to 1 and the mode to 1; whitespace is ignored. A bare number is a
//! constant. Examples: `-sin+0.1sin2`, `cos`, `0.3 cos 2 - 1e-2 sin 5`.

use dg_lab::spectral::Trig;

use crate::error::CliError;

fn number_len(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        *i > start
    };
    let mut any = digits(&mut i);
    if i < b.len() && b[i] == b'.' {
        i += 1;
        any |= digits(&mut i);
    }
    if !any {
        return 0;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        let mut j = i + 1;
        if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
            j += 1;
        }
        let mut k = j;
        if digits(&mut k) {
            i = k;
        }
    }
    i
}

/// Parses an expression into trigonometric terms.
pub fn parse_terms(expr: &str) -> Result<Vec<Trig<f64>>, CliError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| CliError::Usage(format!("cannot parse initial data {expr:?}: {why}"));
    if compact.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut rest = compact.as_str();
    let mut terms = Vec::new();
    while !rest.is_empty() {
        let mut sign = 1.0;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1.0;
            rest = r;
        } else if !terms.is_empty() {
            return Err(bad("terms must be joined by + or -"));
        }
        let n = number_len(rest);
        let coeff = if n > 0 {
            let v: f64 = rest[..n].parse().map_err(|_| bad("bad coefficient"))?;
            rest = &rest[n..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
            v
        } else {
            1.0
        };
        let kind = if let Some(r) = rest.strip_prefix("sin") {
            rest = r;
            Some(true)
        } else if let Some(r) = rest.strip_prefix("cos") {
            rest = r;
            Some(false)
        } else if n > 0 {
            None
        } else {
            return Err(bad("expected a number, sin or cos"));
        };
        let amp = sign * coeff;
        match kind {
            None => terms.push(Trig::Cos(0, amp)),
            Some(is_sin) => {
                let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
                let mode = if digits == 0 {
                    1
                } else {
                    let m = rest[..digits].parse().map_err(|_| bad("bad mode number"))?;
                    rest = &rest[digits..];
                    m
                };
                terms.push(if is_sin { Trig::Sin(mode, amp) } else { Trig::Cos(mode, amp) });
            }
        }
    }
    Ok(terms)
}

/// Highest mode that appears in the terms.
pub fn max_mode(terms: &[Trig<f64>]) -> usize {
    terms
        .iter()
        .map(|t| match t {
            Trig::Sin(m, _) | Trig::Cos(m, _) => *m,
        })
        .max()
        .unwrap_or(0)
}
