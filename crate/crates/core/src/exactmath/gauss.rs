use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;

use super::{ParseError, Rat};

/// An exact element `re + im·i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::real(Rat::from(n))
    }

    /// Shorthand for `p/q` on the real axis.
    pub fn frac(p: i64, q: i64) -> Self {
        GaussRat::real(Rat::new(p, q))
    }

    /// Shorthand for `(a/b) + (c/d)·i`.
    pub fn complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussRat::new(Rat::new(a, b), Rat::new(c, d))
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the value is an ordinary integer.
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.im.is_zero() {
            self.re.to_i64()
        } else {
            None
        }
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, k: &Rat) -> GaussRat {
        GaussRat::new(&self.re * k, &self.im * k)
    }

    pub fn scale_int(&self, k: &BigInt) -> GaussRat {
        let k = Rat::from(k.clone());
        self.scale(&k)
    }
}

/// Least integer not below the real part; the imaginary part is ignored.
pub fn ceil_re(w: &GaussRat) -> BigInt {
    w.re.ceil()
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat::real(&self.re * &rhs.re);
        }
        GaussRat::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Div<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    /// Panics on division by zero, like the integer operators.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussRat) -> GaussRat {
        let inv = rhs.inv().expect("division by zero GaussRat");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl GaussRat {
    /// True when printing needs parentheses to be used as a product factor.
    pub fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl fmt::Display for GaussRat {
    /// Canonical text `p/q+r/s*i`, omitting zero parts and unit imaginary coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&self.re.to_string());
        }
        let neg = self.im.is_negative();
        let mag = self.im.abs();
        if neg {
            out.push('-');
        } else if !self.re.is_zero() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push('i');
        f.write_str(&out)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GaussRat {
    type Err = ParseError;

    /// Parses `a`, `p/q`, `p/q+r/s*i`, `1/4+1/2i`, `i/2`, `-i` and parenthesized forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s, 0)
    }
}

pub(crate) fn parse_gauss(s: &str, offset: usize) -> Result<GaussRat, ParseError> {
    let compact: Vec<(usize, char)> =
        s.char_indices().filter(|(_, c)| !c.is_whitespace()).map(|(p, c)| (p + offset, c)).collect();
    let mut chars: &[(usize, char)] = &compact;
    if chars.is_empty() {
        return Err(ParseError::new(offset, "empty number"));
    }
    if chars[0].1 == '(' {
        match chars.last() {
            Some((_, ')')) => chars = &chars[1..chars.len() - 1],
            _ => return Err(ParseError::new(chars[0].0, "unbalanced parenthesis")),
        }
    }
    if chars.is_empty() {
        return Err(ParseError::new(offset, "empty number"));
    }

    // Split into signed terms at '+'/'-' that do not follow '/' or '*'.
    let mut terms: Vec<(bool, &[(usize, char)])> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i].1;
        if (c == '+' || c == '-') && (i == 0 || !matches!(chars[i - 1].1, '/' | '*' | '+' | '-')) {
            if i > start {
                terms.push((negative, &chars[start..i]));
            } else if i > 0 {
                return Err(ParseError::new(chars[i].0, "dangling sign"));
            }
            negative = c == '-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= chars.len() {
        let pos = chars.last().map(|p| p.0).unwrap_or(offset);
        return Err(ParseError::new(pos, "expected a number after sign"));
    }
    terms.push((negative, &chars[start..]));

    let mut acc = GaussRat::zero();
    for (neg, term) in terms {
        let pos = term[0].0;
        let text: String = term.iter().map(|(_, c)| *c).collect();
        let value = parse_term(&text).map_err(|msg| ParseError::new(pos, msg))?;
        if neg {
            acc -= &value;
        } else {
            acc += &value;
        }
    }
    Ok(acc)
}

fn parse_term(t: &str) -> Result<GaussRat, String> {
    let rat = |x: &str| -> Result<Rat, String> { x.parse::<Rat>().map_err(|e| e.message) };
    if t == "i" {
        return Ok(GaussRat::i());
    }
    if let Some(rest) = t.strip_prefix("i/") {
        let d = rat(rest)?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(GaussRat::new(Rat::zero(), d.recip()));
    }
    if let Some(rest) = t.strip_prefix("i*") {
        return Ok(GaussRat::new(Rat::zero(), rat(rest)?));
    }
    if let Some(head) = t.strip_suffix('i') {
        let head = head.strip_suffix('*').unwrap_or(head);
        return Ok(GaussRat::new(Rat::zero(), rat(head)?));
    }
    if t.contains('i') {
        return Err(format!("malformed imaginary term `{t}`"));
    }
    Ok(GaussRat::real(rat(t)?))
}
