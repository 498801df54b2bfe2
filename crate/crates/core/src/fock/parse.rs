use super::{Monomial, State};
use crate::exactmath::{parse_gauss, GaussRat, ParseError};

/// Parses a state in the grammar
/// `state := term ('+' term)*; term := [coeff '*'] factor* '|0>'`.
///
/// Terms may also be separated by `-`, which negates the following term; the
/// literal `0` denotes the zero state. Like terms are merged.
pub fn parse_state(text: &str) -> Result<State, ParseError> {
    if text.trim() == "0" {
        return Ok(State::zero());
    }
    let mut state = State::zero();
    for (start, end, negate) in split_terms(text)? {
        let (m, mut c) = parse_term(&text[start..end], start)?;
        if negate {
            c = -c;
        }
        state.add_term(m, &c);
    }
    Ok(state)
}

pub fn print_state(s: &State) -> String {
    s.to_string()
}

/// Splits on `+`/`-` at paren depth zero that directly follow a `|0>` terminator.
fn split_terms(text: &str) -> Result<Vec<(usize, usize, bool)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negate = false;
    let mut last_sig: Option<u8> = None;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(i, "unbalanced `)`"));
                }
            }
            b'+' | b'-' if depth == 0 && last_sig == Some(b'>') => {
                out.push((start, i, negate));
                start = i + 1;
                negate = b == b'-';
            }
            _ => {}
        }
        if !b.is_ascii_whitespace() {
            last_sig = Some(b);
        }
    }
    if depth != 0 {
        return Err(ParseError::new(text.len(), "unbalanced `(`"));
    }
    out.push((start, text.len(), negate));
    Ok(out)
}

fn parse_term(term: &str, offset: usize) -> Result<(Monomial, GaussRat), ParseError> {
    let lead = term.len() - term.trim_start().len();
    let body = term.trim();
    let base = offset + lead;
    if body.is_empty() {
        return Err(ParseError::new(base, "empty term"));
    }
    let Some(word_end) = body.strip_suffix("|0>").map(str::len) else {
        return Err(ParseError::new(base + body.len(), "term must end with `|0>`"));
    };
    let word = &body[..word_end];
    let (coeff, factors_at) = split_coeff(word, base)?;
    let m = parse_factors(&word[factors_at..], base + factors_at)?;
    Ok((m, coeff))
}

/// Separates the optional coefficient prefix. Returns the coefficient and the
/// byte offset where the factor word starts.
fn split_coeff(word: &str, base: usize) -> Result<(GaussRat, usize), ParseError> {
    let starts_factor = |s: &str| {
        let s = s.trim_start();
        s.is_empty() || s.starts_with('a')
    };
    if starts_factor(word) {
        return Ok((GaussRat::one(), 0));
    }
    if let Some(rest) = word.strip_prefix('-') {
        if starts_factor(rest) {
            return Ok((GaussRat::from_int(-1), 1));
        }
    }
    let bytes = word.as_bytes();
    let mut depth = 0i32;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' if depth == 0 && starts_factor(&word[i + 1..]) => {
                let text = word[..i].trim();
                let c = parse_coeff(text, base)?;
                return Ok((c, i + 1));
            }
            _ => {}
        }
    }
    Err(ParseError::new(base, "expected `coeff*` before the factor word"))
}

fn parse_coeff(text: &str, base: usize) -> Result<GaussRat, ParseError> {
    let inner = match text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(t) => t,
        None => text,
    };
    parse_gauss(inner, base)
}

fn parse_factors(word: &str, base: usize) -> Result<Monomial, ParseError> {
    let mut a = Vec::new();
    let mut astar = Vec::new();
    let bytes = word.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if bytes[i] != b'a' {
            return Err(ParseError::new(base + i, "expected `a(` or `a*(`"));
        }
        let factor_at = i;
        i += 1;
        let star = bytes.get(i) == Some(&b'*');
        if star {
            i += 1;
        }
        if bytes.get(i) != Some(&b'(') {
            return Err(ParseError::new(base + i, "expected `(`"));
        }
        let close = word[i..].find(')').map(|k| i + k).ok_or_else(|| ParseError::new(base + i, "missing `)`"))?;
        let idx_text = word[i + 1..close].trim();
        let idx: i64 =
            idx_text.parse().map_err(|_| ParseError::new(base + i + 1, format!("invalid mode index `{idx_text}`")))?;
        if star {
            if idx > 0 {
                return Err(ParseError::new(
                    base + factor_at,
                    format!("a*({idx}) is not a creation mode (index must be <= 0)"),
                ));
            }
            astar.push(u32::try_from(-idx).map_err(|_| ParseError::new(base + i + 1, "mode index out of range"))?);
        } else {
            if idx >= 0 {
                return Err(ParseError::new(
                    base + factor_at,
                    format!("a({idx}) is not a creation mode (index must be <= -1)"),
                ));
            }
            a.push(u32::try_from(-idx - 1).map_err(|_| ParseError::new(base + i + 1, "mode index out of range"))?);
        }
        i = close + 1;
    }
    Ok(Monomial::new(a, astar))
}
