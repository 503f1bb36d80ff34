//! Words, matchings and normally ordered dotted diagrams.
//!
//! A strand runs from its inward endpoint (`src`: a bottom `^` or a top `v`)
//! to its outward endpoint (`dst`: a top `^` or a bottom `v`). Black dots sit
//! next to `src`, the white dot (if any) next to `dst`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid word letter {0:?} (expected '^' or 'v')")]
    BadLetter(char),
    #[error("enumeration needs a finite black-dot bound")]
    Unbounded,
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }

    pub fn ascii(self) -> char {
        match self {
            Orient::Up => '^',
            Orient::Down => 'v',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Orient>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Word, DiagramError> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '^' | 'u' | 'U' => Ok(Orient::Up),
                'v' | 'd' | 'D' => Ok(Orient::Down),
                other => Err(DiagramError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn ups(r: usize) -> Word {
        Word(vec![Orient::Up; r])
    }

    /// `v^t ^^r`, the walled word.
    pub fn walled(r: usize, t: usize) -> Word {
        let mut w = vec![Orient::Down; t];
        w.extend(std::iter::repeat_n(Orient::Up, r));
        Word(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn ascii(&self) -> String {
        self.0.iter().map(|o| o.ascii()).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.ascii())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Bottom(usize),
    Top(usize),
}

impl End {
    fn encode(self) -> String {
        match self {
            End::Bottom(i) => format!("b{}", i),
            End::Top(i) => format!("t{}", i),
        }
    }

    fn decode(s: &str) -> Result<End, DiagramError> {
        let bad = || DiagramError::Malformed(format!("bad endpoint {:?}", s));
        let (head, tail) = s.split_at(1.min(s.len()));
        let i: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "b" => Ok(End::Bottom(i)),
            "t" => Ok(End::Top(i)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub src: End,
    pub dst: End,
    pub white: u8,
    pub black: u32,
}

impl Strand {
    /// Sort key: strands meeting the bottom come first, by their leftmost
    /// bottom endpoint; cup strands follow by leftmost top endpoint.
    pub fn order_key(&self) -> (u8, usize) {
        let bottoms: Vec<usize> = [self.src, self.dst]
            .iter()
            .filter_map(|e| if let End::Bottom(i) = e { Some(*i) } else { None })
            .collect();
        if let Some(m) = bottoms.iter().min() {
            return (0, *m);
        }
        let tops = [self.src, self.dst].map(|e| if let End::Top(i) = e { i } else { usize::MAX });
        (1, tops[0].min(tops[1]))
    }
}

/// The bijection underlying a diagram: `(src, dst)` pairs in source order
/// (bottom `^` positions, then top `v` positions).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub pairs: Vec<(End, End)>,
}

/// Inward endpoints in bijection-table order.
pub fn sources(bottom: &Word, top: &Word) -> Vec<End> {
    let mut v: Vec<End> = (0..bottom.len()).filter(|&i| bottom.0[i] == Orient::Up).map(End::Bottom).collect();
    v.extend((0..top.len()).filter(|&i| top.0[i] == Orient::Down).map(End::Top));
    v
}

/// Outward endpoints in bijection-table order.
pub fn targets(bottom: &Word, top: &Word) -> Vec<End> {
    let mut v: Vec<End> = (0..top.len()).filter(|&i| top.0[i] == Orient::Up).map(End::Top).collect();
    v.extend((0..bottom.len()).filter(|&i| bottom.0[i] == Orient::Down).map(End::Bottom));
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalDiagram {
    pub bottom: Word,
    pub top: Word,
    /// Strands in canonical order (see [`Strand::order_key`]).
    pub strands: Vec<Strand>,
}

/// Opaque key: equal iff the diagrams are equivalent.
pub type DiagramKey = NormalDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Affine,
    Cyclotomic(u32),
}

impl NormalDiagram {
    pub fn new(bottom: Word, top: Word, mut strands: Vec<Strand>) -> NormalDiagram {
        strands.sort_by_key(|s| s.order_key());
        NormalDiagram { bottom, top, strands }
    }

    pub fn identity(w: &Word) -> NormalDiagram {
        let strands = (0..w.len())
            .map(|i| match w.0[i] {
                Orient::Up => Strand { src: End::Bottom(i), dst: End::Top(i), white: 0, black: 0 },
                Orient::Down => Strand { src: End::Top(i), dst: End::Bottom(i), white: 0, black: 0 },
            })
            .collect();
        NormalDiagram::new(w.clone(), w.clone(), strands)
    }

    /// Odd iff the number of white dots is odd.
    pub fn parity(&self) -> bool {
        self.strands.iter().map(|s| s.white as u32).sum::<u32>() % 2 == 1
    }

    pub fn matching(&self) -> Matching {
        let mut pairs: Vec<(End, End)> = self.strands.iter().map(|s| (s.src, s.dst)).collect();
        let order = sources(&self.bottom, &self.top);
        pairs.sort_by_key(|p| order.iter().position(|e| *e == p.0));
        Matching { pairs }
    }

    pub fn strand_at(&self, e: End) -> Option<usize> {
        self.strands.iter().position(|s| s.src == e || s.dst == e)
    }

    pub fn total_black(&self) -> u32 {
        self.strands.iter().map(|s| s.black).sum()
    }

    pub fn key(&self) -> DiagramKey {
        self.clone()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "bottom": self.bottom.ascii(),
            "top": self.top.ascii(),
            "pairs": self.strands.iter().map(|s| vec![s.src.encode(), s.dst.encode()]).collect::<Vec<_>>(),
            "white": self.strands.iter().map(|s| s.white).collect::<Vec<_>>(),
            "black": self.strands.iter().map(|s| s.black).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<NormalDiagram, DiagramError> {
        let bad = |m: &str| DiagramError::Malformed(m.to_string());
        let word = |k: &str| -> Result<Word, DiagramError> {
            Word::parse(v.get(k).and_then(|x| x.as_str()).ok_or_else(|| bad(k))?)
        };
        let bottom = word("bottom")?;
        let top = word("top")?;
        let pairs = v.get("pairs").and_then(|x| x.as_array()).ok_or_else(|| bad("pairs"))?;
        let white = v.get("white").and_then(|x| x.as_array()).ok_or_else(|| bad("white"))?;
        let black = v.get("black").and_then(|x| x.as_array()).ok_or_else(|| bad("black"))?;
        if pairs.len() != white.len() || pairs.len() != black.len() {
            return Err(bad("length mismatch"));
        }
        let mut strands = Vec::new();
        for ((p, w), b) in pairs.iter().zip(white).zip(black) {
            let p = p.as_array().ok_or_else(|| bad("pair"))?;
            let e = |k: usize| -> Result<End, DiagramError> {
                End::decode(p.get(k).and_then(|x| x.as_str()).ok_or_else(|| bad("pair entry"))?)
            };
            strands.push(Strand {
                src: e(0)?,
                dst: e(1)?,
                white: w.as_u64().ok_or_else(|| bad("white"))? as u8,
                black: b.as_u64().ok_or_else(|| bad("black"))? as u32,
            });
        }
        let d = NormalDiagram::new(bottom, top, strands);
        let problems = validate(&d, Mode::Affine);
        if !problems.is_empty() {
            return Err(DiagramError::Malformed(problems.join("; ")));
        }
        Ok(d)
    }
}

impl fmt::Display for NormalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {}:", self.bottom, self.top)?;
        for s in &self.strands {
            write!(f, " {}>{}", s.src.encode(), s.dst.encode())?;
            if s.black > 0 {
                write!(f, " x{}", s.black)?;
            }
            if s.white > 0 {
                write!(f, " c")?;
            }
            write!(f, ";")?;
        }
        write!(f, "]")
    }
}

/// Every violated invariant, each naming the strand index.
pub fn validate(d: &NormalDiagram, mode: Mode) -> Vec<String> {
    let mut out = Vec::new();
    let srcs = sources(&d.bottom, &d.top);
    let tgts = targets(&d.bottom, &d.top);
    let mut seen_src = vec![false; srcs.len()];
    let mut seen_dst = vec![false; tgts.len()];
    for (k, s) in d.strands.iter().enumerate() {
        match srcs.iter().position(|e| *e == s.src) {
            Some(i) if !seen_src[i] => seen_src[i] = true,
            Some(_) => out.push(format!("strand {}: source used twice", k)),
            None => out.push(format!("strand {}: {:?} is not an inward endpoint", k, s.src)),
        }
        match tgts.iter().position(|e| *e == s.dst) {
            Some(i) if !seen_dst[i] => seen_dst[i] = true,
            Some(_) => out.push(format!("strand {}: target used twice", k)),
            None => out.push(format!("strand {}: {:?} is not an outward endpoint", k, s.dst)),
        }
        if s.white > 1 {
            out.push(format!("strand {}: at most one white dot allowed, found {}", k, s.white));
        }
        if let Mode::Cyclotomic(l) = mode {
            if s.black >= l {
                out.push(format!("strand {}: {} black dots, cyclotomic bound is {}", k, s.black, l));
            }
        }
    }
    if seen_src.iter().any(|x| !x) || seen_dst.iter().any(|x| !x) || srcs.len() != tgts.len() {
        out.push("matching is not a bijection".to_string());
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All matchings between `bottom` and `top`, lexicographic in the
/// bijection table.
pub fn matchings(bottom: &Word, top: &Word) -> Vec<Matching> {
    let srcs = sources(bottom, top);
    let tgts = targets(bottom, top);
    if srcs.len() != tgts.len() {
        return Vec::new();
    }
    let mut perm: Vec<usize> = (0..srcs.len()).collect();
    let mut out = Vec::new();
    loop {
        out.push(Matching { pairs: srcs.iter().zip(&perm).map(|(s, &t)| (*s, tgts[t])).collect() });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// One representative per equivalence class with fewer than `black_bound`
/// black dots per strand (`None` means unbounded, which is an error).
pub fn enumerate_normal(
    bottom: &Word,
    top: &Word,
    black_bound: Option<u32>,
) -> Result<Vec<NormalDiagram>, DiagramError> {
    let bound = black_bound.ok_or(DiagramError::Unbounded)?.max(1) as u64;
    let mut out = Vec::new();
    for m in matchings(bottom, top) {
        let base = NormalDiagram::new(
            bottom.clone(),
            top.clone(),
            m.pairs.iter().map(|&(src, dst)| Strand { src, dst, white: 0, black: 0 }).collect(),
        );
        let s = base.strands.len() as u32;
        for w in 0..(1u64 << s) {
            for b in 0..bound.pow(s) {
                let mut d = base.clone();
                let mut rest = b;
                for k in (0..s as usize).rev() {
                    d.strands[k].white = ((w >> (s as usize - 1 - k)) & 1) as u8;
                    d.strands[k].black = (rest % bound) as u32;
                    rest /= bound;
                }
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Remove every black dot.
pub fn strip_dots(d: &NormalDiagram) -> NormalDiagram {
    let mut e = d.clone();
    for s in &mut e.strands {
        s.black = 0;
    }
    e
}
