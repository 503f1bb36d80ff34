//! The affine walled Brauer-Clifford superalgebra: words in its generators,
//! the homomorphism `φ` into `End(↓^t ↑^r)`, a relation table, and the
//! verification harness.
//!
//! Strands are numbered from the right: `c_1` and `x_1` live on the rightmost
//! `↑`, `c̄_1` on the rightmost `↓`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagrams::{DiagramError, Word};
use crate::engine::drawing::{Drawing, Layer, Prim};
use crate::engine::{compute_g, Cyclotomic, EngineError, Morphism};
use crate::scalars::{delta_prime, BubblePolynomial, DeltaSpec, GaussianRational as Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalledError {
    #[error("generator {letter} out of range for (r, t) = ({r}, {t})")]
    OutOfRange { letter: String, r: usize, t: usize },
    #[error("cannot parse generator {0}")]
    Parse(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S(usize),
    SBar(usize),
    C(usize),
    CBar(usize),
    E,
    X,
    XBar,
    /// Central `ω_k`, `k` odd.
    Omega(u32),
    /// Central `ω̄_k`.
    OmegaBar(u32),
}

impl Letter {
    pub fn odd(self) -> bool {
        matches!(self, Letter::C(_) | Letter::CBar(_))
    }

    pub fn parse(s: &str) -> Result<Letter, WalledError> {
        let bad = || WalledError::Parse(s.to_string());
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        let l = if let Some(p) = s.strip_prefix("sb") {
            Letter::SBar(num(p)?)
        } else if let Some(p) = s.strip_prefix("cb") {
            Letter::CBar(num(p)?)
        } else if let Some(p) = s.strip_prefix("wb") {
            Letter::OmegaBar(num(p)? as u32)
        } else if s == "xb1" {
            Letter::XBar
        } else if s == "x1" {
            Letter::X
        } else if s == "e1" {
            Letter::E
        } else if let Some(p) = s.strip_prefix('s') {
            Letter::S(num(p)?)
        } else if let Some(p) = s.strip_prefix('c') {
            Letter::C(num(p)?)
        } else if let Some(p) = s.strip_prefix('w') {
            let k = num(p)? as u32;
            if k % 2 == 0 {
                return Err(bad());
            }
            Letter::Omega(k)
        } else {
            return Err(bad());
        };
        Ok(l)
    }

    fn in_range(self, r: usize, t: usize) -> bool {
        match self {
            Letter::S(i) => i >= 1 && i < r,
            Letter::SBar(j) => j >= 1 && j < t,
            Letter::C(i) => i >= 1 && i <= r,
            Letter::CBar(j) => j >= 1 && j <= t,
            Letter::E | Letter::XBar => r >= 1 && t >= 1,
            Letter::X => r >= 1,
            Letter::Omega(k) => k % 2 == 1,
            Letter::OmegaBar(k) => k >= 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S(i) => write!(f, "s{}", i),
            Letter::SBar(j) => write!(f, "sb{}", j),
            Letter::C(i) => write!(f, "c{}", i),
            Letter::CBar(j) => write!(f, "cb{}", j),
            Letter::E => write!(f, "e1"),
            Letter::X => write!(f, "x1"),
            Letter::XBar => write!(f, "xb1"),
            Letter::Omega(k) => write!(f, "w{}", k),
            Letter::OmegaBar(k) => write!(f, "wb{}", k),
        }
    }
}

/// A product of generators, leftmost factor outermost.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WalledWord(pub Vec<Letter>);

impl WalledWord {
    pub fn parse(s: &str) -> Result<WalledWord, WalledError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            // `x1^3` repeats a letter.
            let (base, k) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| WalledError::Parse(tok.to_string()))?),
                None => (tok, 1),
            };
            let l = Letter::parse(base)?;
            out.extend(std::iter::repeat_n(l, k));
        }
        Ok(WalledWord(out))
    }

    pub fn parity(&self) -> bool {
        self.0.iter().filter(|l| l.odd()).count() % 2 == 1
    }

    pub fn validate(&self, r: usize, t: usize) -> Result<(), WalledError> {
        match self.0.iter().find(|l| !l.in_range(r, t)) {
            Some(l) => Err(WalledError::OutOfRange { letter: l.to_string(), r, t }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for WalledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A linear combination of words.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Combination(pub Vec<(BubblePolynomial, WalledWord)>);

impl Combination {
    pub fn word(s: &str) -> Combination {
        Combination(vec![(BubblePolynomial::one(), WalledWord::parse(s).expect("valid word"))])
    }

    pub fn scaled(c: i64, s: &str) -> Combination {
        Combination(vec![(BubblePolynomial::from_int(c), WalledWord::parse(s).expect("valid word"))])
    }

    pub fn plus(mut self, other: Combination) -> Combination {
        self.0.extend(other.0);
        self
    }

    pub fn minus(self, other: Combination) -> Combination {
        let neg = other.0.into_iter().map(|(c, w)| (-&c, w)).collect();
        self.plus(Combination(neg))
    }

    pub fn times(&self, other: &Combination) -> Combination {
        let mut out = Vec::new();
        for (a, u) in &self.0 {
            for (b, v) in &other.0 {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                out.push((a * b, WalledWord(w)));
            }
        }
        Combination(out)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermSpec {
    pub coeff: String,
    pub word: String,
}

/// One relation `lhs = rhs`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RelationInstance {
    pub id: String,
    pub lhs: Vec<TermSpec>,
    pub rhs: Vec<TermSpec>,
}

impl RelationInstance {
    pub fn new(id: impl Into<String>, lhs: Combination, rhs: Combination) -> RelationInstance {
        let spec = |c: Combination| c.0.into_iter().map(|(c, w)| TermSpec { coeff: c.to_string(), word: w.to_string() }).collect();
        RelationInstance { id: id.into(), lhs: spec(lhs), rhs: spec(rhs) }
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> Result<Combination, WalledError> {
        let parse = |ts: &[TermSpec]| -> Result<Combination, WalledError> {
            ts.iter()
                .map(|t| {
                    let c = BubblePolynomial::parse(&t.coeff).map_err(|e| WalledError::Parse(format!("{}: {}", t.coeff, e)))?;
                    Ok((c, WalledWord::parse(&t.word)?))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Combination)
        };
        Ok(parse(&self.lhs)?.minus(parse(&self.rhs)?))
    }
}

/// The walled word `↓^t ↑^r`.
pub fn walled_word(r: usize, t: usize) -> Word {
    Word::walled(r, t)
}

/// The drawing of a non-central generator.
fn phi_drawing(l: Letter, r: usize, t: usize) -> Result<Drawing, WalledError> {
    let w = walled_word(r, t);
    let up = |i: usize| t + r - i;
    let down = |j: usize| t - j;
    let layer = |pos, prim| Layer { pos, prim };
    let layers: Vec<Layer> = match l {
        Letter::S(i) => vec![layer(up(i + 1), Prim::Cross)],
        Letter::SBar(j) => vec![layer(down(j + 1), Prim::Cross)],
        Letter::C(i) => vec![layer(up(i), Prim::White)],
        Letter::CBar(j) => vec![layer(down(j), Prim::White)],
        Letter::X => vec![layer(up(1), Prim::Black)],
        Letter::E => {
            // The rightmost `↑` moves left under the others, caps with the
            // last `↓`, and a cup returns it to the right edge.
            let mut v: Vec<Layer> = (t..t + r - 1).rev().map(|p| layer(p, Prim::Cross)).collect();
            v.push(layer(t - 1, Prim::LCap));
            v.push(layer(t - 1, Prim::RCup));
            v.extend((t..t + r - 1).map(|p| layer(p, Prim::Cross)));
            v
        }
        Letter::XBar => {
            let mut v: Vec<Layer> = (t - 1..t + r - 1).map(|p| layer(p, Prim::Cross)).collect();
            v.push(layer(t + r - 1, Prim::Black));
            v.extend((t - 1..t + r - 1).rev().map(|p| layer(p, Prim::Cross)));
            v
        }
        Letter::Omega(_) | Letter::OmegaBar(_) => Vec::new(),
    };
    let mut d = Drawing::identity(&w);
    for l in layers {
        d.push(l.pos, l.prim)?;
    }
    Ok(d)
}

/// Scalar image of a central generator.
fn central_value(l: Letter, delta: &DeltaSpec) -> Option<BubblePolynomial> {
    match l {
        Letter::Omega(k) => Some(-&delta.get(k)),
        Letter::OmegaBar(k) if k % 2 == 1 => Some(delta_prime(delta, k)),
        Letter::OmegaBar(_) => Some(BubblePolynomial::zero()),
        _ => None,
    }
}

/// `φ(g)` in `End(↓^t ↑^r)`, bubbles specialized by `delta`.
pub fn phi(l: Letter, r: usize, t: usize, delta: &DeltaSpec) -> Result<Morphism, WalledError> {
    WalledWord(vec![l]).validate(r, t)?;
    let w = walled_word(r, t);
    if let Some(c) = central_value(l, delta) {
        return Ok(Morphism::identity(&w).scale(&c));
    }
    let m = Morphism::from_drawing(&phi_drawing(l, r, t)?)?;
    let m = match l {
        Letter::C(_) | Letter::CBar(_) => m.scale(&BubblePolynomial::constant(Q::i())),
        Letter::X => m.scale(&BubblePolynomial::from_int(-1)),
        _ => m,
    };
    Ok(m.specialize(delta))
}

/// `φ` on words and their combinations, with generator images cached.
pub struct Phi {
    pub r: usize,
    pub t: usize,
    pub delta: DeltaSpec,
    cache: Mutex<BTreeMap<Letter, Morphism>>,
}

impl Phi {
    pub fn new(r: usize, t: usize, delta: DeltaSpec) -> Phi {
        Phi { r, t, delta, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn letter(&self, l: Letter) -> Result<Morphism, WalledError> {
        if let Some(m) = self.cache.lock().unwrap().get(&l) {
            return Ok(m.clone());
        }
        let m = phi(l, self.r, self.t, &self.delta)?;
        self.cache.lock().unwrap().insert(l, m.clone());
        Ok(m)
    }

    pub fn word(&self, w: &WalledWord) -> Result<Morphism, WalledError> {
        w.validate(self.r, self.t)?;
        let mut acc = Morphism::identity(&walled_word(self.r, self.t));
        for l in w.0.iter().rev() {
            acc = self.letter(*l)?.compose(&acc)?.specialize(&self.delta);
        }
        Ok(acc)
    }

    pub fn combination(&self, c: &Combination) -> Result<Morphism, WalledError> {
        let w = walled_word(self.r, self.t);
        let mut acc = Morphism::zero(&w, &w);
        for (coeff, word) in &c.0 {
            acc = acc.add_scaled(&self.word(word)?, coeff)?;
        }
        Ok(acc.specialize(&self.delta))
    }
}

/// `φ(Σ c·w)` for `(r, t)`.
pub fn phi_word(c: &Combination, r: usize, t: usize, delta: &DeltaSpec) -> Result<Morphism, WalledError> {
    Phi::new(r, t, delta.clone()).combination(c)
}

fn w(s: &str) -> Combination {
    Combination::word(s)
}

fn neg(s: &str) -> Combination {
    Combination::scaled(-1, s)
}

fn zero() -> Combination {
    Combination::default()
}

/// Symmetric-group relations for the letter prefix `s` (or `sb`).
fn coxeter(out: &mut Vec<RelationInstance>, family: &str, s: &str, n: usize) {
    for i in 1..n {
        out.push(RelationInstance::new(format!("{family}: {s}{i}^2 = 1"), w(&format!("{s}{i} {s}{i}")), w("")));
        if i + 1 < n {
            let (a, b) = (format!("{s}{i}"), format!("{s}{}", i + 1));
            out.push(RelationInstance::new(format!("{family}: braid {a} {b}"), w(&format!("{a} {b} {a}")), w(&format!("{b} {a} {b}"))));
        }
        for j in i + 2..n {
            let (a, b) = (format!("{s}{i}"), format!("{s}{j}"));
            out.push(RelationInstance::new(format!("{family}: {a} {b} commute"), w(&format!("{a} {b}")), w(&format!("{b} {a}"))));
        }
    }
}

/// Clifford relations with square `square` and the permutation action.
fn clifford(out: &mut Vec<RelationInstance>, family: &str, c: &str, s: &str, n: usize, square: i64) {
    for i in 1..=n {
        out.push(RelationInstance::new(format!("{family}: {c}{i}^2 = {square}"), w(&format!("{c}{i} {c}{i}")), Combination::scaled(square, "")));
        for j in 1..=n {
            if i != j {
                out.push(RelationInstance::new(format!("{family}: {c}{i} {c}{j} anticommute"), w(&format!("{c}{i} {c}{j}")), neg(&format!("{c}{j} {c}{i}"))));
            }
        }
        for k in 1..n {
            let image = if i == k { k + 1 } else if i == k + 1 { k } else { i };
            out.push(RelationInstance::new(
                format!("{family}: {s}{k} {c}{i} {s}{k} = {c}{image}"),
                w(&format!("{s}{k} {c}{i} {s}{k}")),
                w(&format!("{c}{image}")),
            ));
        }
    }
}

/// Every listed relation instance for `(r, t)`: the symmetric group and
/// Hecke-Clifford relations on both sides of the wall, the walled relations
/// (1)-(10), and the affine relations (1), (2), (4)-(11). Affine relation (3)
/// involves a generator without a diagram image and is omitted. `max_power`
/// bounds the exponents in the families indexed by `k`.
pub fn relation_table(r: usize, t: usize, max_power: u32) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let rel = |id: String, l: Combination, rr: Combination| RelationInstance::new(id, l, rr);
    coxeter(&mut out, "symmetric", "s", r);
    clifford(&mut out, "sergeev", "c", "s", r, -1);
    if r >= 1 {
        for i in 1..=r {
            let sign = if i == 1 { -1 } else { 1 };
            out.push(rel(format!("affine sergeev: x1 c{i}"), w(&format!("x1 c{i}")), Combination::scaled(sign, &format!("c{i} x1"))));
        }
        for j in 2..r {
            out.push(rel(format!("affine sergeev: s{j} x1 commute"), w(&format!("s{j} x1")), w(&format!("x1 s{j}"))));
        }
    }
    if r >= 2 {
        let x2 = w("s1 x1 s1").minus(w("s1")).plus(w("c1 c2 s1"));
        let x1 = w("x1");
        out.push(rel("affine sergeev: x1 x2 commute".into(), x1.times(&x2), x2.times(&x1)));
    }
    coxeter(&mut out, "dual sergeev", "sb", t);
    clifford(&mut out, "dual sergeev", "cb", "sb", t, 1);
    if t >= 1 && r >= 1 {
        for i in 1..=t {
            let sign = if i == 1 { -1 } else { 1 };
            out.push(rel(format!("dual affine sergeev: xb1 cb{i}"), w(&format!("xb1 cb{i}")), Combination::scaled(sign, &format!("cb{i} xb1"))));
        }
        for j in 2..t {
            out.push(rel(format!("dual affine sergeev: sb{j} xb1 commute"), w(&format!("sb{j} xb1")), w(&format!("xb1 sb{j}"))));
        }
    }
    if t >= 2 && r >= 1 {
        let x2 = w("sb1 xb1 sb1").minus(w("sb1")).minus(w("cb1 cb2 sb1"));
        let x1 = w("xb1");
        out.push(rel("dual affine sergeev: xb1 xb2 commute".into(), x1.times(&x2), x2.times(&x1)));
    }
    if r == 0 || t == 0 {
        return out;
    }
    // Walled relations.
    out.push(rel("walled: e1 c1 = e1 cb1".into(), w("e1 c1"), w("e1 cb1")));
    out.push(rel("walled: c1 e1 = cb1 e1".into(), w("c1 e1"), w("cb1 e1")));
    for i in 1..=r {
        for j in 1..t {
            out.push(rel(format!("walled: sb{j} c{i} commute"), w(&format!("sb{j} c{i}")), w(&format!("c{i} sb{j}"))));
        }
    }
    for i in 1..r {
        for j in 1..=t {
            out.push(rel(format!("walled: s{i} cb{j} commute"), w(&format!("s{i} cb{j}")), w(&format!("cb{j} s{i}"))));
        }
    }
    for i in 1..=r {
        for j in 1..=t {
            out.push(rel(format!("walled: c{i} cb{j} anticommute"), w(&format!("c{i} cb{j}")), neg(&format!("cb{j} c{i}"))));
        }
    }
    for i in 1..r {
        for j in 1..t {
            out.push(rel(format!("walled: s{i} sb{j} commute"), w(&format!("s{i} sb{j}")), w(&format!("sb{j} s{i}"))));
        }
    }
    out.push(rel("walled: e1^2 = 0".into(), w("e1 e1"), zero()));
    if r >= 2 {
        out.push(rel("walled: e1 s1 e1 = e1".into(), w("e1 s1 e1"), w("e1")));
    }
    if t >= 2 {
        out.push(rel("walled: e1 sb1 e1 = e1".into(), w("e1 sb1 e1"), w("e1")));
    }
    for i in 2..r {
        out.push(rel(format!("walled: s{i} e1 commute"), w(&format!("s{i} e1")), w(&format!("e1 s{i}"))));
    }
    for i in 2..t {
        out.push(rel(format!("walled: sb{i} e1 commute"), w(&format!("sb{i} e1")), w(&format!("e1 sb{i}"))));
    }
    if r >= 2 && t >= 2 {
        out.push(rel("walled: e1 s1 sb1 e1 s1 = e1 s1 sb1 e1 sb1".into(), w("e1 s1 sb1 e1 s1"), w("e1 s1 sb1 e1 sb1")));
        out.push(rel("walled: s1 e1 s1 sb1 e1 = sb1 e1 s1 sb1 e1".into(), w("s1 e1 s1 sb1 e1"), w("sb1 e1 s1 sb1 e1")));
    }
    for i in 2..=r {
        out.push(rel(format!("walled: c{i} e1 commute"), w(&format!("c{i} e1")), w(&format!("e1 c{i}"))));
    }
    for i in 2..=t {
        out.push(rel(format!("walled: cb{i} e1 commute"), w(&format!("cb{i} e1")), w(&format!("e1 cb{i}"))));
    }
    out.push(rel("walled: e1 c1 e1 = 0".into(), w("e1 c1 e1"), zero()));
    out.push(rel("walled: e1 cb1 e1 = 0".into(), w("e1 cb1 e1"), zero()));
    // Affine walled relations.
    out.push(rel("affine: e1 (x1 + xb1) = 0".into(), w("e1 x1").plus(w("e1 xb1")), zero()));
    out.push(rel("affine: (x1 + xb1) e1 = 0".into(), w("x1 e1").plus(w("xb1 e1")), zero()));
    if r >= 2 {
        out.push(rel("affine: e1 s1 x1 s1 = s1 x1 s1 e1".into(), w("e1 s1 x1 s1"), w("s1 x1 s1 e1")));
    }
    if t >= 2 {
        out.push(rel("affine: e1 sb1 xb1 sb1 = sb1 xb1 sb1 e1".into(), w("e1 sb1 xb1 sb1"), w("sb1 xb1 sb1 e1")));
    }
    for k in 0..max_power.div_ceil(2) {
        let m = 2 * k + 1;
        out.push(rel(format!("affine: e1 x1^{m} e1 = w{m} e1"), w(&format!("e1 x1^{m} e1")), w(&format!("w{m} e1"))));
    }
    for k in 0..=max_power / 2 {
        let m = 2 * k;
        out.push(rel(format!("affine: e1 x1^{m} e1 = 0"), w(&format!("e1 x1^{m} e1")), zero()));
    }
    for k in 1..=max_power {
        out.push(rel(format!("affine: e1 xb1^{k} e1 = wb{k} e1"), w(&format!("e1 xb1^{k} e1")), w(&format!("wb{k} e1"))));
    }
    for i in 1..=t {
        out.push(rel(format!("affine: x1 cb{i} commute"), w(&format!("x1 cb{i}")), w(&format!("cb{i} x1"))));
    }
    for i in 1..=r {
        out.push(rel(format!("affine: xb1 c{i} commute"), w(&format!("xb1 c{i}")), w(&format!("c{i} xb1"))));
    }
    for i in 1..t {
        out.push(rel(format!("affine: x1 sb{i} commute"), w(&format!("x1 sb{i}")), w(&format!("sb{i} x1"))));
    }
    for i in 1..r {
        out.push(rel(format!("affine: xb1 s{i} commute"), w(&format!("xb1 s{i}")), w(&format!("s{i} xb1"))));
    }
    out
}

/// Bubble values `δ_k ↦ d_k` for odd `k <= max_k`, kept symbolic.
pub fn symbolic_delta(max_k: u32) -> DeltaSpec {
    let mut d = DeltaSpec::new();
    for k in (1..=max_k).step_by(2) {
        d.set(k, BubblePolynomial::param(&format!("d{}", k)));
    }
    d
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub pass: bool,
    /// Normal form of the failing difference.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub r: usize,
    pub t: usize,
    pub entries: Vec<CheckEntry>,
    pub passed: usize,
    pub failed: usize,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// `φ(f(x_1))` and `e_1 f(x_1)` style combinations, `f` lowest degree first.
fn poly_in(letter: &str, coeffs: &[BubblePolynomial], prefix: &str) -> Combination {
    Combination(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let word = if k == 0 { prefix.to_string() } else { format!("{} {}^{}", prefix, letter, k) };
                (c.clone(), WalledWord::parse(&word).expect("valid word"))
            })
            .collect(),
    )
}

fn entry(id: String, m: Result<Morphism, WalledError>) -> CheckEntry {
    match m {
        Ok(m) if m.is_zero() => CheckEntry { id, pass: true, residual: None },
        Ok(m) => CheckEntry { id, pass: false, residual: Some(m.to_string()) },
        Err(e) => CheckEntry { id, pass: false, residual: Some(format!("error: {}", e)) },
    }
}

/// Check every relation of `table` under `φ`, then the `g` identity
/// `(-1)^ℓ φ(e_1 f(x_1)) = φ(e_1 g(x̄_1))` for each `f` in `fs`, and, when
/// `cyclotomic` is set, that `φ(f(x_1))` and `φ(g(x̄_1))` reduce to zero.
pub fn verify_presentation(
    r: usize,
    t: usize,
    delta: &DeltaSpec,
    table: &[RelationInstance],
    fs: &[Vec<BubblePolynomial>],
    cyclotomic: bool,
) -> PresentationReport {
    let phi = Phi::new(r, t, delta.clone());
    let mut entries: Vec<CheckEntry> = table
        .iter()
        .map(|rel| entry(rel.id.clone(), rel.difference().and_then(|c| phi.combination(&c))))
        .collect();
    if r >= 1 && t >= 1 {
        for f in fs {
            let label = crate::engine::cyclotomic::render_univariate(f, "t");
            let g = match compute_g(f, delta) {
                Ok(g) => g,
                Err(e) => {
                    entries.push(CheckEntry { id: format!("g identity for f = {}", label), pass: false, residual: Some(e.to_string()) });
                    continue;
                }
            };
            let ell = f.len() - 1;
            let sign = if ell % 2 == 0 { 1 } else { -1 };
            let lhs = poly_in("x1", f, "e1");
            let lhs = Combination(lhs.0.into_iter().map(|(c, w)| (c.scale(&Q::from_int(sign)), w)).collect());
            let diff = lhs.minus(poly_in("xb1", &g, "e1"));
            entries.push(entry(format!("g identity for f = {}", label), phi.combination(&diff)));
            if cyclotomic {
                let reduced = |c: Combination| -> Result<Morphism, WalledError> {
                    let cyc = Cyclotomic::new(f.clone(), delta.clone())?;
                    Ok(cyc.reduce(&phi.combination(&c)?)?)
                };
                entries.push(entry(format!("f(x1) vanishes for f = {}", label), reduced(poly_in("x1", f, ""))));
                entries.push(entry(format!("g(xb1) vanishes for f = {}", label), reduced(poly_in("xb1", &g, ""))));
            }
        }
    }
    let passed = entries.iter().filter(|e| e.pass).count();
    let failed = entries.len() - passed;
    PresentationReport { r, t, entries, passed, failed }
}

/// `(r+t)! 2^{r+t} ℓ^{r+t}`.
pub fn hom_dimension(r: usize, t: usize, ell: u32) -> u128 {
    let m = (r + t) as u32;
    (1..=m as u128).product::<u128>() * 2u128.pow(m) * (ell as u128).pow(m)
}

/// The count of normal diagrams spanning `End(↓^t ↑^r)` with fewer than
/// `ell` black dots per strand.
pub fn enumerated_dimension(r: usize, t: usize, ell: u32) -> Result<usize, WalledError> {
    let w = walled_word(r, t);
    Ok(crate::engine::hom_basis(&w, &w, ell)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> DeltaSpec {
        symbolic_delta(11)
    }

    #[test]
    fn letters_round_trip() {
        let w = WalledWord::parse("s1 sb2 c1 cb2 e1 x1^2 xb1 w3 wb4").unwrap();
        assert_eq!(w.to_string(), "s1 sb2 c1 cb2 e1 x1 x1 xb1 w3 wb4");
        assert!(WalledWord::parse("w2").is_err());
        assert!(WalledWord::parse("s1").unwrap().validate(1, 1).is_err());
    }

    #[test]
    fn generator_images() {
        let d = delta();
        let w = walled_word(1, 1);
        let c = phi(Letter::C(1), 1, 1, &d).unwrap();
        assert_eq!(c.compose(&c).unwrap(), Morphism::identity(&w).scale(&BubblePolynomial::from_int(-1)));
        let e = phi(Letter::E, 1, 1, &d).unwrap();
        assert!(e.compose(&e).unwrap().specialize(&d).is_zero());
        let x = phi(Letter::X, 2, 1, &d).unwrap();
        let dot = Morphism::parse("(tensor idv id1 black)").unwrap();
        assert_eq!(x, dot.scale(&BubblePolynomial::from_int(-1)));
        assert_eq!(phi_word(&Combination::word(""), 2, 2, &d).unwrap(), Morphism::identity(&walled_word(2, 2)));
        assert!(phi_word(&Combination::word("s1 s1").minus(Combination::word("")), 2, 1, &d).unwrap().is_zero());
    }

    #[test]
    fn dimensions() {
        assert_eq!(hom_dimension(1, 0, 1), 2);
        assert_eq!(hom_dimension(1, 1, 1), 8);
        assert_eq!(hom_dimension(1, 1, 2), 32);
        for (r, t, ell) in [(1, 0, 1), (1, 1, 1), (1, 1, 2), (2, 1, 1)] {
            assert_eq!(enumerated_dimension(r, t, ell).unwrap() as u128, hom_dimension(r, t, ell));
        }
    }
}
