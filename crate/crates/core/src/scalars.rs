//! Exact scalars: Gaussian rationals and polynomials in bubble symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial is not constant: {0}")]
    NotConstant(String),
}

/// An element of Q(i) with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        GaussianRational::new(BigRational::new(n.into(), d.into()), BigRational::zero())
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        GaussianRational::from_int(0)
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
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

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussianRational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn sign(negative: bool) -> Self {
        if negative {
            GaussianRational::from_int(-1)
        } else {
            GaussianRational::one()
        }
    }

    /// Text form used inside polynomial renderings; `standalone` drops the
    /// parentheses around a lone fraction.
    fn render(&self, standalone: bool) -> String {
        let fmt_q = |q: &BigRational| -> String {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        };
        if self.im.is_zero() {
            let s = fmt_q(&self.re);
            if standalone || self.re.is_integer() {
                s
            } else {
                format!("({})", s)
            }
        } else if self.re.is_zero() {
            if self.im.is_one() {
                "i".to_string()
            } else if (-self.im.clone()).is_one() {
                "-i".to_string()
            } else if self.im.is_integer() {
                format!("{}*i", fmt_q(&self.im))
            } else {
                format!("({})*i", fmt_q(&self.im))
            }
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            format!("({}{}{}*i)", fmt_q(&self.re), sign, fmt_q(&self.im.abs()))
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: GaussianRational) -> GaussianRational {
        &self + &o
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: GaussianRational) -> GaussianRational {
        &self - &o
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

/// A polynomial variable: an odd bubble symbol `D<k>` or a named parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Delta(u32),
    Param(String),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Delta(k) => write!(f, "D{}", k),
            Var::Param(s) => write!(f, "{}", s),
        }
    }
}

/// Sorted list of (variable, positive exponent).
pub type Monomial = Vec<(Var, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<Var, u32> = BTreeMap::new();
    for (v, e) in a.iter().chain(b.iter()) {
        *m.entry(v.clone()).or_insert(0) += e;
    }
    m.into_iter().collect()
}

fn mono_degree(m: &Monomial) -> u32 {
    m.iter().map(|(_, e)| e).sum()
}

/// Polynomial over Q(i) in bubble symbols (odd index only) and named
/// parameters. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BubblePolynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl BubblePolynomial {
    pub fn zero() -> Self {
        BubblePolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    /// The bubble symbol with `k` black dots; zero when `k` is even.
    pub fn delta(k: u32) -> Self {
        if k % 2 == 0 {
            return Self::zero();
        }
        Self::var(Var::Delta(k))
    }

    pub fn param(name: &str) -> Self {
        Self::var(Var::Param(name.to_string()))
    }

    pub fn var(v: Var) -> Self {
        if let Var::Delta(k) = v {
            if k % 2 == 0 {
                return Self::zero();
            }
        }
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], GaussianRational::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(GaussianRational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn has_delta(&self) -> bool {
        self.terms
            .keys()
            .any(|m| m.iter().any(|(v, _)| matches!(v, Var::Delta(_))))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute each variable present in `values`; others stay formal.
    pub fn substitute(&self, values: &BTreeMap<Var, BubblePolynomial>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (v, e) in m {
                let factor = match values.get(v) {
                    Some(p) => p.pow(*e),
                    None => {
                        let mut q = Self::zero();
                        q.add_term(vec![(v.clone(), *e)], GaussianRational::one());
                        q
                    }
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(mono_degree).max().unwrap_or(0)
    }

    /// Terms in rendering order: higher total degree first.
    fn ordered_terms(&self) -> Vec<(&Monomial, &GaussianRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| mono_degree(b.0).cmp(&mono_degree(a.0)).then(a.0.cmp(b.0)));
        v
    }

    /// Signed textual pieces, one per term, e.g. ("+", "(1/2)*i*D1^2").
    pub(crate) fn render_pieces(&self, suffix: &str) -> Vec<(bool, String)> {
        let mut out = Vec::new();
        for (m, c) in self.ordered_terms() {
            let (neg, c) = if (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let mut factors: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{}^{}", v, e) })
                .collect();
            if !suffix.is_empty() {
                factors.push(suffix.to_string());
            }
            let text = if factors.is_empty() {
                c.render(true)
            } else if c.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", c.render(false), factors.join("*"))
            };
            out.push((neg, text));
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

pub(crate) fn join_pieces(pieces: &[(bool, String)]) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (neg, text)) in pieces.iter().enumerate() {
        if idx == 0 {
            if *neg {
                s.push('-');
            }
        } else {
            s.push_str(if *neg { " - " } else { " + " });
        }
        s.push_str(text);
    }
    s
}

impl fmt::Display for BubblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_pieces(&self.render_pieces("")))
    }
}

impl fmt::Debug for BubblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a BubblePolynomial> for &'a BubblePolynomial {
    type Output = BubblePolynomial;
    fn add(self, o: &BubblePolynomial) -> BubblePolynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BubblePolynomial> for &'a BubblePolynomial {
    type Output = BubblePolynomial;
    fn sub(self, o: &BubblePolynomial) -> BubblePolynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a BubblePolynomial> for &'a BubblePolynomial {
    type Output = BubblePolynomial;
    fn mul(self, o: &BubblePolynomial) -> BubblePolynomial {
        let mut out = BubblePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for BubblePolynomial {
    type Output = BubblePolynomial;
    fn add(self, o: BubblePolynomial) -> BubblePolynomial {
        &self + &o
    }
}

impl Sub for BubblePolynomial {
    type Output = BubblePolynomial;
    fn sub(self, o: BubblePolynomial) -> BubblePolynomial {
        &self - &o
    }
}

impl Mul for BubblePolynomial {
    type Output = BubblePolynomial;
    fn mul(self, o: BubblePolynomial) -> BubblePolynomial {
        &self * &o
    }
}

impl Neg for BubblePolynomial {
    type Output = BubblePolynomial;
    fn neg(self) -> BubblePolynomial {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl Neg for &BubblePolynomial {
    type Output = BubblePolynomial;
    fn neg(self) -> BubblePolynomial {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl From<GaussianRational> for BubblePolynomial {
    fn from(c: GaussianRational) -> Self {
        BubblePolynomial::constant(c)
    }
}

/// Values for the odd bubble symbols; missing odd indices and all even
/// indices read as zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaSpec {
    values: BTreeMap<u32, BubblePolynomial>,
}

impl DeltaSpec {
    pub fn new() -> Self {
        DeltaSpec::default()
    }

    pub fn with(mut self, k: u32, v: impl Into<BubblePolynomial>) -> Self {
        self.set(k, v.into());
        self
    }

    pub fn set(&mut self, k: u32, v: BubblePolynomial) {
        if k % 2 == 1 {
            self.values.insert(k, v);
        }
    }

    pub fn get(&self, k: u32) -> BubblePolynomial {
        if k % 2 == 0 {
            return BubblePolynomial::zero();
        }
        self.values.get(&k).cloned().unwrap_or_else(BubblePolynomial::zero)
    }

    /// The assignment leaving every bubble formal (`D_k` maps to itself).
    pub fn formal(max_k: u32) -> Self {
        let mut d = DeltaSpec::new();
        for k in (1..=max_k).step_by(2) {
            d.set(k, BubblePolynomial::delta(k));
        }
        d
    }

    pub fn entries(&self) -> impl Iterator<Item = (&u32, &BubblePolynomial)> {
        self.values.iter()
    }
}

/// Replace every bubble symbol by its value in `delta`.
pub fn specialize(p: &BubblePolynomial, delta: &DeltaSpec) -> BubblePolynomial {
    let mut map = BTreeMap::new();
    for (m, _) in p.terms() {
        for (v, _) in m {
            if let Var::Delta(k) = v {
                map.insert(v.clone(), delta.get(*k));
            }
        }
    }
    p.substitute(&map)
}

/// Numeric specialization; fails if formal parameters remain.
pub fn specialize_numeric(
    p: &BubblePolynomial,
    delta: &DeltaSpec,
) -> Result<GaussianRational, ScalarError> {
    let s = specialize(p, delta);
    s.as_constant().ok_or_else(|| ScalarError::NotConstant(s.to_string()))
}

/// The clockwise-bubble parameters: d'_k - d_k = -sum_{0<i<k/2} d_{2i-1} d'_{k-2i}.
pub fn delta_prime(delta: &DeltaSpec, k: u32) -> BubblePolynomial {
    delta_prime_table(delta, k)[k as usize].clone()
}

/// Values d'_0..=d'_k (index 0 is unused and zero).
pub fn delta_prime_table(delta: &DeltaSpec, k: u32) -> Vec<BubblePolynomial> {
    let mut table = vec![BubblePolynomial::zero(); k as usize + 1];
    for m in 1..=k {
        let mut v = delta.get(m);
        let mut i = 1;
        while 2 * i < m {
            let prod = &delta.get(2 * i - 1) * &table[(m - 2 * i) as usize];
            v = &v - &prod;
            i += 1;
        }
        table[m as usize] = v;
    }
    table
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BubblePolynomial, ScalarError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BubblePolynomial, ScalarError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = d.as_constant().ok_or_else(|| self.err("division by non-constant"))?;
                    acc = acc.scale(&c.inv()?);
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BubblePolynomial, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BubblePolynomial, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(BubblePolynomial::constant(GaussianRational::real(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "i" {
                    return Ok(BubblePolynomial::constant(GaussianRational::i()));
                }
                if let Some(rest) = name.strip_prefix('D') {
                    if let Ok(k) = rest.parse::<u32>() {
                        return Ok(BubblePolynomial::delta(k));
                    }
                }
                Ok(BubblePolynomial::param(name))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_frac(n, d)
    }

    #[test]
    fn gaussian_examples() {
        let a = GaussianRational::new(BigRational::one(), BigRational::one());
        assert_eq!(&a * &a.conj(), GaussianRational::from_int(2));
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        assert_eq!(&q(1, 3) + &q(1, 6), q(1, 2));
        assert_eq!(GaussianRational::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn poly_examples() {
        let d1 = BubblePolynomial::delta(1);
        let d3 = BubblePolynomial::delta(3);
        assert_eq!((&d1 * &d3).to_string(), "D1*D3");
        assert_eq!(&(&d1 + &BubblePolynomial::one()) - &d1, BubblePolynomial::one());
        assert_eq!((&d1 * &d1).to_string(), "D1^2");
        assert!(BubblePolynomial::delta(4).is_zero());
    }

    #[test]
    fn specialize_examples() {
        let p = BubblePolynomial::parse("D1^2 + 2").unwrap();
        let d = DeltaSpec::new().with(1, GaussianRational::from_int(3));
        assert_eq!(specialize_numeric(&p, &d).unwrap(), GaussianRational::from_int(11));
        let p3 = BubblePolynomial::delta(3);
        assert_eq!(specialize_numeric(&p3, &d).unwrap(), GaussianRational::zero());
        assert_eq!(
            specialize_numeric(&BubblePolynomial::from_int(5), &d).unwrap(),
            GaussianRational::from_int(5)
        );
    }

    #[test]
    fn rendering_round_trip() {
        let s = "(1/2)*i*D1^2*D3 + 3";
        let p = BubblePolynomial::parse(s).unwrap();
        assert_eq!(p.to_string(), s);
        assert_eq!(BubblePolynomial::parse(&p.to_string()).unwrap(), p);
        let g = BubblePolynomial::parse("d1 - 4/9").unwrap();
        assert_eq!(g.to_string(), "d1 - 4/9");
    }

    #[test]
    fn delta_prime_unfolds() {
        let formal = DeltaSpec::formal(9);
        let d = |k| BubblePolynomial::delta(k);
        assert_eq!(delta_prime(&formal, 1), d(1));
        assert_eq!(delta_prime(&formal, 3), &d(3) - &(&d(1) * &d(1)));
        let expect5 = &(&d(5) - &(&d(1) * &d(3)).scale(&GaussianRational::from_int(2))) + &d(1).pow(3);
        assert_eq!(delta_prime(&formal, 5), expect5);
        for k in (2..=10).step_by(2) {
            assert!(delta_prime(&formal, k).is_zero());
        }
    }

    fn arb_q() -> impl Strategy<Value = GaussianRational> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| {
            GaussianRational::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
        })
    }

    fn arb_poly() -> impl Strategy<Value = BubblePolynomial> {
        prop::collection::vec((arb_q(), 0u32..3, 0u32..3), 0..4).prop_map(|ts| {
            let mut p = BubblePolynomial::zero();
            for (c, a, b) in ts {
                let m = &BubblePolynomial::delta(1).pow(a) * &BubblePolynomial::delta(3).pow(b);
                p = &p + &m.scale(&c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_q(), b in arb_q(), c in arb_q()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn specialize_is_multiplicative(p in arb_poly(), r in arb_poly(), v1 in arb_q(), v3 in arb_q()) {
            let d = DeltaSpec::new().with(1, v1).with(3, v3);
            prop_assert_eq!(&p * &r, &r * &p);
            let lhs = specialize_numeric(&(&p * &r), &d).unwrap();
            let rhs = &specialize_numeric(&p, &d).unwrap() * &specialize_numeric(&r, &d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
