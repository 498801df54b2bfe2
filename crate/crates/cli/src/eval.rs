use weylflow::exactmath::{GaussRat, ParseError};
use weylflow::fock::State;
use weylflow::modes::{act_gen, beta_mode, d_op, virasoro_mode_exact, GenMode};

/// One operator in an `--apply` list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeOp {
    Gen(GenMode),
    Virasoro(i64),
    Beta(i64),
    D,
}

impl ModeOp {
    pub fn needs_mu(&self) -> bool {
        matches!(self, ModeOp::Virasoro(_))
    }

    pub fn apply(&self, mu: Option<&GaussRat>, s: &State) -> State {
        match *self {
            ModeOp::Gen(g) => act_gen(g, s),
            ModeOp::Virasoro(n) => virasoro_mode_exact(mu.expect("checked by the caller"), n, s),
            ModeOp::Beta(n) => beta_mode(n, s),
            ModeOp::D => d_op(s),
        }
    }
}

/// Parses a whitespace- or comma-separated list of `a(n)`, `a*(n)`, `L(n)`, `beta(n)`
/// and `D`.
pub fn parse_modes(text: &str) -> Result<Vec<ModeOp>, ParseError> {
    let mut ops = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() || ch == b',' {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'*') {
            i += 1;
        }
        let name = &text[start..i];
        if name == "D" {
            ops.push(ModeOp::D);
            continue;
        }
        if name.is_empty() {
            return Err(ParseError::new(start, "expected a mode name"));
        }
        if bytes.get(i) != Some(&b'(') {
            return Err(ParseError::new(i, "expected `(`"));
        }
        let close = text[i..].find(')').map(|k| i + k).ok_or_else(|| ParseError::new(i, "missing `)`"))?;
        let n: i64 =
            text[i + 1..close].trim().parse().map_err(|_| ParseError::new(i + 1, "mode index must be an integer"))?;
        let op = match name {
            "a" => ModeOp::Gen(GenMode::a(n)),
            "a*" => ModeOp::Gen(GenMode::astar(n)),
            "L" => ModeOp::Virasoro(n),
            "beta" => ModeOp::Beta(n),
            _ => return Err(ParseError::new(start, format!("unknown mode `{name}`"))),
        };
        ops.push(op);
        i = close + 1;
    }
    if ops.is_empty() {
        return Err(ParseError::new(0, "no modes to apply"));
    }
    Ok(ops)
}
