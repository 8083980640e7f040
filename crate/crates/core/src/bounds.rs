//! Catalog of extremal bounds evaluated in exact arithmetic.
//!
//! Every algebraic entry has the shape `a + b * sqrt(d)` with rational
//! `a`, `b` and `d`, which is enough for the `n^{3/2}` and `sqrt(t-1)` terms
//! that occur. Comparisons against integers square both sides instead of
//! touching floating point. The one entry involving a logarithm is
//! evaluated in `f64` and marked advisory.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cliques::binomial;
use crate::error::{Error, Result};

/// `rational + coefficient * sqrt(radicand)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: BigRational,
    pub coefficient: BigRational,
    pub radicand: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn big(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Exact square root of a non-negative rational when it exists.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (p, q) = (r.numer().sqrt(), r.denom().sqrt());
    (&p * &p == *r.numer() && &q * &q == *r.denom()).then(|| BigRational::new(p, q))
}

impl Surd {
    pub fn rational(a: BigRational) -> Self {
        Self {
            rational: a,
            coefficient: BigRational::zero(),
            radicand: BigRational::zero(),
        }
    }

    /// `a + b sqrt(d)`, folding perfect squares into the rational part.
    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::Parameter("negative radicand".into()));
        }
        if b.is_zero() || d.is_zero() {
            return Ok(Self::rational(a));
        }
        if let Some(root) = rational_sqrt(&d) {
            return Ok(Self::rational(a + b * root));
        }
        Ok(Self {
            rational: a,
            coefficient: b,
            radicand: d,
        })
    }

    pub fn is_rational(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        // compare b sqrt(d) with l = x - a
        let l = x - &self.rational;
        if self.is_rational() {
            return BigRational::zero().cmp(&l);
        }
        let rhs = &self.coefficient * &self.coefficient * &self.radicand;
        let lhs = &l * &l;
        match (self.coefficient.is_positive(), l.is_negative()) {
            (true, true) => Ordering::Greater,
            (false, false) => {
                if l.is_zero() && rhs.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Less
                }
            }
            (true, false) => rhs.cmp(&lhs),
            (false, true) => lhs.cmp(&rhs),
        }
    }

    /// `value * 10^digits` rounded down, at most three units below.
    fn scaled(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10).pow(digits);
        let a = &self.rational * big(&scale);
        let mut total = a.floor().to_integer();
        if !self.is_rational() {
            // |b| sqrt(d) 10^k = sqrt(N / D) = sqrt(N D) / D with N / D = b^2 d 10^{2k}
            let sq = &self.coefficient * &self.coefficient * &self.radicand * big(&(&scale * &scale));
            let (num, den) = (sq.numer(), sq.denom());
            let prod = num * den;
            let mut root = prod.sqrt();
            if self.coefficient.is_negative() && &root * &root != prod {
                root += 1;
            }
            let term = BigRational::new(root, den.clone());
            total += if self.coefficient.is_negative() {
                -term.ceil().to_integer()
            } else {
                term.floor().to_integer()
            };
        }
        total
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.coefficient.to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }

    /// Decimal rendering rounded half-up to `sig` significant digits, with
    /// trailing zeros removed.
    pub fn render(&self, sig: usize) -> String {
        const GUARD: u32 = 60;
        let scaled = self.scaled(GUARD);
        render_scaled(&scaled, GUARD, sig)
    }
}

pub fn render_f64(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    place_point(neg, &digits, exp)
}

fn render_scaled(v: &BigInt, frac_digits: u32, sig: usize) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let neg = v.sign() == Sign::Minus;
    let digits = v.abs().to_string();
    // value = 0.digits * 10^(len - frac_digits)
    let exp = digits.len() as i32 - frac_digits as i32 - 1;
    let mut kept: Vec<u8> = digits.bytes().take(sig).map(|b| b - b'0').collect();
    let mut exp = exp;
    if digits.len() > sig && digits.as_bytes()[sig] >= b'5' {
        let mut i = kept.len();
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.truncate(sig);
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let s: String = kept.iter().map(|d| (d + b'0') as char).collect();
    place_point(neg, &s, exp)
}

/// `digits` read as `d.ddd * 10^exp`.
fn place_point(neg: bool, digits: &str, exp: i32) -> String {
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(digits);
    } else {
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            out.push_str(digits);
            out.extend(std::iter::repeat_n('0', int_len - digits.len()));
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Surd", 4)?;
        st.serialize_field("rational", &self.rational.to_string())?;
        st.serialize_field("coefficient", &self.coefficient.to_string())?;
        st.serialize_field("radicand", &self.radicand.to_string())?;
        st.serialize_field("decimal", &self.render(12))?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Upper,
    Lower,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Exact(Surd),
    Float { float: f64, decimal: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundResult {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub value: BoundValue,
    pub side: Side,
    pub assumptions: Vec<String>,
    /// Floating-point or asymptotic-only values are reported, not asserted.
    pub advisory: bool,
}

impl BoundResult {
    pub fn decimal(&self) -> String {
        match &self.value {
            BoundValue::Exact(s) => s.render(12),
            BoundValue::Float { decimal, .. } => decimal.clone(),
        }
    }

    pub fn exact(&self) -> Option<&Surd> {
        match &self.value {
            BoundValue::Exact(s) => Some(s),
            BoundValue::Float { .. } => None,
        }
    }
}

pub const CATALOG: &[&str] = &[
    "thm_main_a",
    "thm_main_b",
    "thm_main_c",
    "furedi_k2t_ex",
    "furedi_bipartite",
    "alon_shikhelman",
    "luo",
    "fo_c2k_upper",
    "fo_c2k_triangle_upper",
    "cor_maincor",
    "cor_k2t_lower_r",
    "cor_k2t_upper_r",
    "cor_even_cycle",
    "cor_jiangma",
    "timmons_upper",
    "thm_linearberge",
    "thm_linearlower",
    "thm_linearlower2",
    "claim_clique_bound",
];

/// Named parameters given as strings, e.g. `n=10000`, `c=1/2`, `c=0.5`.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    /// Parses `key=value` items.
    pub fn parse<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut p = Self::new();
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected key=value, got {:?}", item)))?;
            p.0.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(p)
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Parameter(format!("missing required parameter {}", key)))
    }

    fn int(&self, key: &str) -> Result<BigInt> {
        let raw = self.raw(key)?;
        parse_rational(raw)
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
            .ok_or_else(|| Error::Parameter(format!("{} = {:?} is not an integer", key, raw)))
    }

    fn small(&self, key: &str) -> Result<i64> {
        self.int(key)?
            .to_i64()
            .ok_or_else(|| Error::Parameter(format!("{} is out of range", key)))
    }

    fn rational(&self, key: &str) -> Result<BigRational> {
        let raw = self.raw(key)?;
        parse_rational(raw).ok_or_else(|| Error::Parameter(format!("{} = {:?} is not a number", key, raw)))
    }

    fn rational_or(&self, key: &str, default: i64) -> Result<BigRational> {
        if self.0.contains_key(key) {
            self.rational(key)
        } else {
            Ok(int(default))
        }
    }
}

/// Accepts integers, `p/q`, decimals and scientific notation such as `1e4`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_rational(p)?;
        let q = parse_rational(q)?;
        return (!q.is_zero()).then(|| p / q);
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = BigInt::from_str(&format!("{}{}", ip, fp)).ok()?;
    let exp = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if exp >= 0 {
        big(&(digits * ten.pow(exp as u32)))
    } else {
        BigRational::new(digits, ten.pow((-exp) as u32))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

fn pow_i(base: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 && base.is_zero() {
        return Err(Error::Parameter("zero raised to a negative power".into()));
    }
    let b = if e < 0 { base.recip() } else { base.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    Ok(acc)
}

fn binom(n: i64, k: i64) -> BigRational {
    if n < 0 || k < 0 {
        return BigRational::zero();
    }
    int(binomial(n as u64, k as u64) as i64)
}

struct Eval {
    assumptions: Vec<String>,
    advisory: bool,
}

impl Eval {
    fn require(&mut self, ok: bool, what: &str) {
        if ok {
            self.assumptions.push(format!("holds: {}", what));
        } else {
            self.assumptions.push(format!("violated: {}", what));
        }
    }

    fn note(&mut self, what: &str) {
        self.assumptions.push(what.to_string());
    }

    fn residual(&mut self, term: &str) {
        self.assumptions.push(format!("residual: {} omitted", term));
        self.advisory = true;
    }
}

/// `coef * n * sqrt(rad * n)`, i.e. `coef * sqrt(rad) * n^{3/2}`.
fn n_three_halves(coef: BigRational, rad: BigRational, n: &BigRational) -> Result<Surd> {
    Surd::new(BigRational::zero(), coef * n, rad * n)
}

/// Evaluates catalog entry `name` at `params`.
pub fn evaluate(name: &str, p: &Params) -> Result<BoundResult> {
    let mut ev = Eval {
        assumptions: Vec::new(),
        advisory: false,
    };
    let (value, side) = match name {
        "thm_main_a" | "thm_main_b" | "thm_main_c" => main_theorem(name, p, &mut ev)?,
        "furedi_k2t_ex" => {
            let (n, t) = (p.rational("n")?, p.small("t")?);
            ev.require(t >= 2, "t >= 2");
            ev.residual("O(n^{4/3})");
            (n_three_halves(BigRational::new(1.into(), 2.into()), int(t - 1), &n)?, Side::Lower)
        }
        "furedi_bipartite" => {
            let (n, t) = (p.rational("n")?, p.small("t")?);
            ev.require(t >= 2, "t >= 2");
            ev.residual("O(n^{4/3})");
            (n_three_halves(int(1), int(t - 1), &n)?, Side::Lower)
        }
        "alon_shikhelman" | "cor_maincor" => {
            let (n, t) = (p.rational("n")?, p.small("t")?);
            if name == "cor_maincor" {
                ev.require(t >= 7, "t >= 7");
            } else {
                ev.require(t >= 2, "t >= 2");
            }
            ev.residual("(1 + o(1)) factor");
            (n_three_halves(BigRational::new((t - 1).into(), 6.into()), int(t - 1), &n)?, Side::Lower)
        }
        "luo" => {
            let (n, k, r) = (p.small("n")?, p.small("k")?, p.small("r")?);
            ev.require(n >= k && k >= 2 && r >= 1, "n >= k >= 2, r >= 1");
            let v = int(n) / int(k - 1) * binom(k - 1, r);
            (Surd::rational(v), Side::Upper)
        }
        "fo_c2k_upper" | "fo_c2k_triangle_upper" | "cor_even_cycle" => {
            let (k, ex) = (p.small("k")?, p.rational("ex_value")?);
            let coef = if name == "fo_c2k_upper" {
                BigRational::new((2 * k).into(), 3.into())
            } else {
                BigRational::new((2 * k - 3).into(), 3.into())
            };
            if name == "cor_even_cycle" {
                ev.require(k >= 5, "k >= 5");
            } else {
                ev.require(k >= 2, "k >= 2");
            }
            (Surd::rational(coef * ex), Side::Upper)
        }
        "cor_k2t_lower_r" => {
            let (n, r, t) = (p.rational("n")?, p.small("r")?, p.small("t")?);
            let half_up = (r + 1) / 2;
            ev.require(t > half_up - 2 && half_up - 2 >= 0, "t > ceil(r/2) - 2 >= 0");
            ev.residual("(1 + o(1)) factor");
            // sqrt(t-1) / r^{3/2} n^{3/2} = (n / r) sqrt((t-1) n / r)
            let v = Surd::new(BigRational::zero(), &n / int(r), int(t - 1) * &n / int(r))?;
            (v, Side::Lower)
        }
        "cor_k2t_upper_r" => {
            let (n, r, t) = (p.rational("n")?, p.small("r")?, p.small("t")?);
            let threshold = BigRational::new(((r - 1) * (r * r * r - r * r - 4 * r)).into(), 2.into()) + int(1);
            ev.residual("(1 + o(1)) factor");
            let coef = if int(t) >= threshold {
                ev.note("branch: t >= (r-1)(r^3-r^2-4r)/2 + 1");
                binom(t, r - 1) / int(r * t)
            } else {
                ev.note("branch: t < (r-1)(r^3-r^2-4r)/2 + 1");
                BigRational::new((r * r - r - 4).into(), 2.into())
            };
            (n_three_halves(coef, int(t - 1), &n)?, Side::Upper)
        }
        "cor_jiangma" => {
            let (n, k, r, ex) = (p.small("n")?, p.small("k")?, p.small("r")?, p.rational("ex_value")?);
            ev.require(n >= 2 && k >= 2 && r >= 4, "n, k >= 2 and r >= 4");
            let first = binom(2 * k - 2, r - 1) / int(r * (k - 1));
            let second = int(r * r - r - 4);
            let coef = if first > second { first } else { second };
            (Surd::rational(coef * ex), Side::Upper)
        }
        "timmons_upper" => {
            let (n, r, t) = (p.rational("n")?, p.small("r")?, p.small("t")?);
            ev.require(r >= 3 && t >= 1, "r >= 3, t >= 1");
            let v = Surd::new(&n / int(r), &n / int(r), int(2 * (t + 1)) * &n)?;
            (v, Side::Upper)
        }
        "thm_linearberge" => {
            let (n, r, t) = (p.rational("n")?, p.small("r")?, p.small("t")?);
            ev.require(r >= 2 && t >= 2, "r, t >= 2");
            ev.residual("O(n)");
            (n_three_halves(BigRational::one() / int(r * (r - 1)), int(t - 1), &n)?, Side::Upper)
        }
        "thm_linearlower" => {
            let (n, t) = (p.rational("n")?, p.small("t")?);
            ev.require(n >= int(t) && t >= 2, "n >= t >= 2");
            ev.residual("O(n)");
            (n_three_halves(BigRational::new(1.into(), 12.into()), int(t - 1), &n)?, Side::Lower)
        }
        "thm_linearlower2" => {
            let (n, t) = (p.rational("n")?, p.small("t")?);
            let c = p.rational_or("c", 1)?;
            ev.require(t >= 2, "t >= 2");
            if !p.0.contains_key("c") {
                ev.note("c defaults to 1");
            }
            ev.note("evaluated in floating point");
            ev.advisory = true;
            let tf = (t - 1) as f64;
            let nf = n.to_f64().unwrap_or(f64::NAN);
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let factor = if t == 2 { 1.0 } else { 1.0 - cf * tf.ln().powf(1.5) / tf.sqrt() };
            let v = factor * tf.sqrt() / 6.0 * nf.powf(1.5);
            return Ok(BoundResult {
                name: name.to_string(),
                params: p.0.clone(),
                value: BoundValue::Float {
                    float: v,
                    decimal: render_f64(v, 12),
                },
                side: Side::Lower,
                assumptions: ev.assumptions,
                advisory: true,
            });
        }
        "claim_clique_bound" => {
            let (n, x, r, i) = (p.rational("n")?, p.rational("x")?, p.small("r")?, p.small("i")?);
            let (c, ex) = (p.rational("c")?, p.rational("ex_value")?);
            ev.require(n.is_positive(), "n > 0");
            let first = int(2) * &c * &x * pow_i(&n, i - 1)? / int(r);
            let second = pow_i(&(int(2) * &ex / &n), i - 1).map(|f| &c * &x * int(r - 1) * f);
            let v = match second {
                Ok(s) if s < first => s,
                _ => first,
            };
            (Surd::rational(v), Side::Upper)
        }
        other => return Err(Error::Parameter(format!("unknown bound {:?}", other))),
    };
    Ok(BoundResult {
        name: name.to_string(),
        params: p.0.clone(),
        value: BoundValue::Exact(value),
        side,
        assumptions: ev.assumptions,
        advisory: ev.advisory,
    })
}

fn main_theorem(name: &str, p: &Params, ev: &mut Eval) -> Result<(Surd, Side)> {
    let r = p.small("r")?;
    let ex = p.rational("ex_value")?;
    let cut = BigRational::new((r * r * r - r * r - 4 * r).into(), 2.into());
    let has_ci = p.0.contains_key("c") && p.0.contains_key("i") && p.0.contains_key("n");
    let scale = if has_ci {
        let (c, i, n) = (p.rational("c")?, p.small("i")?, p.rational("n")?);
        ev.require((0..r).contains(&i), "0 <= i <= r - 1");
        Some((c.clone() * pow_i(&n, i - 1)?, c, i, n))
    } else {
        None
    };
    let v = match name {
        "thm_main_a" => {
            let (s, _, _, _) = scale.ok_or_else(|| Error::Parameter("thm_main_a needs c, i and n".into()))?;
            ev.require(s >= cut, "c n^{i-1} >= (r^3 - r^2 - 4r)/2");
            int(2) * s * ex / int(r)
        }
        "thm_main_b" => {
            match scale {
                Some((s, ..)) => ev.require(s <= cut, "c n^{i-1} <= (r^3 - r^2 - 4r)/2"),
                None => ev.note("unchecked: c n^{i-1} <= (r^3 - r^2 - 4r)/2 (c, i, n not given)"),
            }
            int(r * r - r - 4) * ex
        }
        _ => {
            let (_, c, i, n) = scale.ok_or_else(|| Error::Parameter("thm_main_c needs c, i and n".into()))?;
            ev.require(i > 1, "i > 1");
            ev.note("requires n large enough");
            ev.advisory = true;
            c * int(r - 1) * pow_i(&ex, i)? * pow_i(&(int(2) / n), i - 1)?
        }
    };
    Ok((Surd::rational(v), Side::Upper))
}

/// `(bound name, parameters, rendered value)`.
pub type ReferenceRow = (&'static str, &'static [(&'static str, &'static str)], &'static str);

/// Frozen evaluations computed independently at 80-digit precision.
pub const REFERENCE_TABLE: &[ReferenceRow] = &[
    ("furedi_k2t_ex", &[("n", "24"), ("t", "2")], "58.7877538268"),
    ("furedi_k2t_ex", &[("n", "10000"), ("t", "5")], "1000000"),
    ("furedi_bipartite", &[("n", "1000"), ("t", "3")], "44721.35955"),
    ("alon_shikhelman", &[("n", "500"), ("t", "4")], "9682.45836552"),
    ("cor_maincor", &[("n", "10000"), ("t", "7")], "2449489.74278"),
    ("luo", &[("n", "6"), ("k", "4"), ("r", "3")], "2"),
    ("luo", &[("n", "100"), ("k", "7"), ("r", "3")], "333.333333333"),
    ("fo_c2k_upper", &[("k", "3"), ("ex_value", "100")], "200"),
    ("fo_c2k_triangle_upper", &[("k", "4"), ("ex_value", "77")], "128.333333333"),
    ("cor_even_cycle", &[("k", "5"), ("ex_value", "1000")], "2333.33333333"),
    ("cor_jiangma", &[("n", "50"), ("k", "6"), ("r", "4"), ("ex_value", "200")], "1600"),
    ("cor_k2t_lower_r", &[("n", "900"), ("r", "4"), ("t", "3")], "4772.97077301"),
    ("cor_k2t_upper_r", &[("n", "1000"), ("r", "3"), ("t", "5")], "63245.5532034"),
    ("cor_k2t_upper_r", &[("n", "1000"), ("r", "3"), ("t", "7")], "77459.6669241"),
    ("timmons_upper", &[("n", "343"), ("r", "3"), ("t", "2")], "5301.08613896"),
    ("thm_linearberge", &[("n", "2000"), ("r", "3"), ("t", "4")], "25819.8889747"),
    ("thm_linearlower", &[("n", "2000"), ("t", "10")], "22360.679775"),
    ("thm_main_a", &[("r", "3"), ("ex_value", "10"), ("c", "2"), ("i", "2"), ("n", "20")], "266.666666667"),
    ("thm_main_b", &[("r", "3"), ("ex_value", "10")], "20"),
    ("claim_clique_bound", &[("n", "30"), ("x", "7"), ("r", "3"), ("i", "2"), ("c", "1"), ("ex_value", "45")], "42"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub observed: String,
    pub bound: String,
    pub side: Side,
    pub passed: bool,
    pub advisory: bool,
}

/// `observed <= value` for upper bounds and `observed >= value` for lower
/// bounds, decided exactly for algebraic values.
pub fn cross_check(observed: &BigInt, bound: &BoundResult) -> bool {
    cross_check_report(observed, bound).passed
}

pub fn cross_check_report(observed: &BigInt, bound: &BoundResult) -> CrossCheck {
    let ord = match &bound.value {
        BoundValue::Exact(s) => s.cmp_rational(&big(observed)).reverse(),
        BoundValue::Float { float, .. } => observed
            .to_f64()
            .and_then(|o| o.partial_cmp(float))
            .unwrap_or(Ordering::Equal),
    };
    let passed = match bound.side {
        Side::Upper => ord != Ordering::Greater,
        Side::Lower => ord != Ordering::Less,
    };
    CrossCheck {
        observed: observed.to_string(),
        bound: bound.decimal(),
        side: bound.side,
        passed,
        advisory: bound.advisory || matches!(bound.value, BoundValue::Float { .. }),
    }
}

/// Exact floor.
pub fn floor_of(s: &Surd) -> BigInt {
    let mut c = s.scaled(0) + BigInt::from(3);
    while s.cmp_rational(&big(&c)) == Ordering::Less {
        c -= 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(name: &str, kv: &[(&str, &str)]) -> BoundResult {
        let mut p = Params::new();
        for (k, v) in kv {
            p = p.with(k, v);
        }
        evaluate(name, &p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(eval("luo", &[("n", "6"), ("k", "4"), ("r", "3")]).decimal(), "2");
        assert_eq!(eval("thm_main_b", &[("r", "3"), ("ex_value", "10")]).decimal(), "20");
        assert_eq!(eval("cor_maincor", &[("t", "7"), ("n", "1e4")]).decimal(), "2449489.74278");
    }

    #[test]
    fn reference_table() {
        assert_eq!(REFERENCE_TABLE.len(), 20);
        for (name, kv, want) in REFERENCE_TABLE {
            assert_eq!(eval(name, kv).decimal(), *want, "{}", name);
        }
    }

    #[test]
    fn exact_comparison() {
        // (1/2) 24^{3/2} = 58.78..
        let b = eval("furedi_k2t_ex", &[("n", "24"), ("t", "2")]);
        assert!(cross_check(&BigInt::from(60), &b));
        assert!(cross_check(&BigInt::from(59), &b));
        assert!(!cross_check(&BigInt::from(58), &b));
        let up = eval("timmons_upper", &[("n", "7"), ("r", "3"), ("t", "2")]);
        assert!(cross_check(&BigInt::from(0), &up));
        assert!(cross_check(&BigInt::from(7), &up));
    }

    #[test]
    fn surd_ordering() {
        let s = Surd::new(int(1), int(-1), int(2)).unwrap(); // 1 - sqrt 2
        assert_eq!(s.cmp_rational(&int(0)), Ordering::Less);
        assert_eq!(s.cmp_rational(&int(-1)), Ordering::Greater);
        assert_eq!(s.render(12), "-0.414213562373");
        let sq = Surd::new(int(0), int(3), int(4)).unwrap();
        assert!(sq.is_rational());
        assert_eq!(sq.render(12), "6");
        assert_eq!(floor_of(&Surd::new(int(0), int(1), int(2)).unwrap()), BigInt::from(1));
        assert_eq!(floor_of(&Surd::rational(int(5))), BigInt::from(5));
    }

    #[test]
    fn rendering() {
        assert_eq!(Surd::rational(BigRational::new(1.into(), 3.into())).render(12), "0.333333333333");
        assert_eq!(Surd::rational(BigRational::new(2.into(), 3.into())).render(12), "0.666666666667");
        assert_eq!(Surd::rational(int(9_999_999_999_999)).render(12), "10000000000000");
        assert_eq!(render_f64(0.5, 12), "0.5");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("1e4"), Some(int(10000)));
        assert_eq!(parse_rational("1/2"), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse_rational("0.25"), Some(BigRational::new(1.into(), 4.into())));
        assert_eq!(parse_rational("-3"), Some(int(-3)));
        assert_eq!(parse_rational("x"), None);
        assert!(evaluate("luo", &Params::new().with("n", 6)).is_err());
        assert!(evaluate("nope", &Params::new()).is_err());
    }

    #[test]
    fn jiangma_matches_even_cycle_at_r3() {
        for k in 5..12 {
            let j = eval("cor_jiangma", &[("n", "10"), ("k", &k.to_string()), ("r", "3"), ("ex_value", "1")]);
            let e = eval("cor_even_cycle", &[("k", &k.to_string()), ("ex_value", "1")]);
            assert_eq!(j.exact(), e.exact());
            assert!(j.assumptions.iter().any(|a| a.starts_with("violated")));
        }
    }

    #[test]
    fn every_catalog_entry_evaluates() {
        let p = Params::new()
            .with("n", 100)
            .with("r", 4)
            .with("t", 3)
            .with("k", 3)
            .with("c", 2)
            .with("i", 2)
            .with("x", 10)
            .with("ex_value", 50);
        for name in CATALOG {
            evaluate(name, &p).unwrap_or_else(|e| panic!("{}: {}", name, e));
        }
    }
}
