//! Linear combinations of named vectors, e.g. `X-iY`, `2iT+(1/2)L1`.

use num_traits::{One, Zero};

use super::LieError;
use crate::linalg::{axpy, Vector};
use crate::scalar::GaussianRational;

fn coefficient_prefix(c: &GaussianRational) -> String {
    if c.is_one() {
        return String::new();
    }
    if *c == -GaussianRational::one() {
        return "-".into();
    }
    let integral = c.re().is_integer() && c.im().is_integer();
    if integral && (c.re().is_zero() || c.im().is_zero()) {
        return c.to_string();
    }
    format!("({c})")
}

pub fn format_combination(names: &[String], v: &[GaussianRational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let (negated, c) = if c.re().is_zero() || c.im().is_zero() {
            let neg = c.re() < &num_rational::BigRational::zero() || c.im() < &num_rational::BigRational::zero();
            if neg && !out.is_empty() {
                (true, -c)
            } else {
                (false, c.clone())
            }
        } else {
            (false, c.clone())
        };
        if !out.is_empty() {
            out.push(if negated { '-' } else { '+' });
        }
        out.push_str(&coefficient_prefix(&c));
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_terms(text: &str) -> Result<Vec<String>, LieError> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(LieError::BadCombination(text.to_string()));
                }
            }
            '+' | '-' if depth == 0 && !cur.is_empty() => {
                terms.push(std::mem::take(&mut cur));
            }
            _ => {}
        }
        if !(ch == '+' && depth == 0 && cur.is_empty()) {
            cur.push(ch);
        }
    }
    if depth != 0 || cur.is_empty() {
        return Err(LieError::BadCombination(text.to_string()));
    }
    terms.push(cur);
    Ok(terms)
}

fn parse_coefficient(prefix: &str) -> Option<GaussianRational> {
    match prefix {
        "" | "+" => Some(GaussianRational::one()),
        "-" => Some(-GaussianRational::one()),
        _ => {
            let (sign, body) = match prefix.strip_prefix('-') {
                Some(rest) => (-GaussianRational::one(), rest),
                None => (GaussianRational::one(), prefix.strip_prefix('+').unwrap_or(prefix)),
            };
            let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
            let body = body.strip_suffix('*').unwrap_or(body);
            body.parse::<GaussianRational>().ok().map(|c| &sign * &c)
        }
    }
}

/// Parse `c1 name1 ± c2 name2 …` where each name is resolved by `lookup`
/// (longest matching suffix of the term) and the remaining prefix is a
/// scalar coefficient, optionally parenthesized.
pub fn parse_combination(
    text: &str,
    dim: usize,
    lookup: impl Fn(&str) -> Option<Vector>,
) -> Result<Vector, LieError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = vec![GaussianRational::zero(); dim];
    for term in split_terms(&compact)? {
        let parsed = term
            .char_indices()
            .map(|(i, _)| i)
            .find_map(|i| lookup(&term[i..]).and_then(|v| parse_coefficient(&term[..i]).map(|c| (c, v))));
        let (c, v) = parsed.ok_or_else(|| LieError::BadCombination(term.clone()))?;
        axpy(&mut out, &c, &v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn names() -> Vec<String> {
        ["T", "X", "Y", "X1"].iter().map(|s| s.to_string()).collect()
    }

    fn lookup(s: &str) -> Option<Vector> {
        names().iter().position(|n| n == s).map(|i| unit_vector(4, i))
    }

    fn v(xs: &[&str]) -> Vector {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn formats() {
        assert_eq!(format_combination(&names(), &v(&["0", "1", "-i", "0"])), "X-iY");
        assert_eq!(format_combination(&names(), &v(&["0", "2i", "2", "0"])), "2iX+2Y");
        assert_eq!(format_combination(&names(), &v(&["-1", "0", "0", "1/2+i"])), "-T+(1/2+i)X1");
        assert_eq!(format_combination(&names(), &v(&["0", "0", "0", "0"])), "0");
    }

    #[test]
    fn parses() {
        assert_eq!(parse_combination("X - iY", 4, lookup).unwrap(), v(&["0", "1", "-i", "0"]));
        assert_eq!(parse_combination("2iX+2Y", 4, lookup).unwrap(), v(&["0", "2i", "2", "0"]));
        assert_eq!(parse_combination("-T+(1/2+i)X1", 4, lookup).unwrap(), v(&["-1", "0", "0", "1/2+i"]));
        assert_eq!(parse_combination("3X1", 4, lookup).unwrap(), v(&["0", "0", "0", "3"]));
        assert!(parse_combination("Z", 4, lookup).is_err());
        assert!(parse_combination("(X", 4, lookup).is_err());
    }

    #[test]
    fn roundtrip() {
        for s in ["X-iY", "2iX+2Y", "-T+(1/2+i)X1", "(-1/3)T-3iY"] {
            let x = parse_combination(s, 4, lookup).unwrap();
            assert_eq!(format_combination(&names(), &x), s);
        }
    }
}
