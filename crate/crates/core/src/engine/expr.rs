//! Generator expressions and their s-expression syntax.
//!
//! ```text
//! expr  := atom | (compose e1 e2 ...) | (tensor e1 e2 ...) | (pow e k) | (id WORD) | (cross WORD)
//! atom  := id1 | idv | lcup | lcap | rcup | rcap | cross | cross-inv
//!        | black | white | black-down | white-down
//! ```
//!
//! `(compose a b)` is `a ∘ b` (`b` first); `(tensor a b)` puts `a` on the
//! left. `cross-inv` is the inverse of the sideways crossing, from `^v` to
//! `v^`.

use std::fmt;

use crate::diagrams::{Orient, Word};

use super::drawing::{Drawing, Prim};
use super::EngineError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorExpr {
    Id(Word),
    LCup,
    LCap,
    RCup,
    RCap,
    /// Crossing with the given two-letter bottom word.
    Cross(Orient, Orient),
    Black(Orient),
    White(Orient),
    Tensor(Vec<GeneratorExpr>),
    /// Listed top first: `Compose([a, b])` is `a ∘ b`.
    Compose(Vec<GeneratorExpr>),
    Pow(Box<GeneratorExpr>, u32),
}

impl GeneratorExpr {
    pub fn crossing() -> Self {
        GeneratorExpr::Cross(Orient::Up, Orient::Up)
    }

    /// Inverse of the sideways crossing.
    pub fn crossing_inv() -> Self {
        GeneratorExpr::Cross(Orient::Up, Orient::Down)
    }

    pub fn id(w: &str) -> Self {
        GeneratorExpr::Id(Word::parse(w).expect("valid word"))
    }

    pub fn tensor(parts: Vec<GeneratorExpr>) -> Self {
        GeneratorExpr::Tensor(parts)
    }

    pub fn compose(parts: Vec<GeneratorExpr>) -> Self {
        GeneratorExpr::Compose(parts)
    }

    /// The layered drawing this expression denotes.
    pub fn to_drawing(&self) -> Result<Drawing, EngineError> {
        use GeneratorExpr::*;
        let one = |bottom: &str, prim: Prim| Drawing::from_layers(&Word::parse(bottom).unwrap(), &[(0, prim)]);
        match self {
            Id(w) => Ok(Drawing::identity(w)),
            LCup => one("", Prim::LCup),
            LCap => one("v^", Prim::LCap),
            RCup => one("", Prim::RCup),
            RCap => one("^v", Prim::RCap),
            Cross(a, b) => Drawing::from_layers(&Word(vec![*a, *b]), &[(0, Prim::Cross)]),
            Black(o) => Drawing::from_layers(&Word(vec![*o]), &[(0, Prim::Black)]),
            White(o) => Drawing::from_layers(&Word(vec![*o]), &[(0, Prim::White)]),
            Tensor(parts) => {
                let mut acc = Drawing::identity(&Word::empty());
                for p in parts {
                    acc = acc.tensor(&p.to_drawing()?);
                }
                Ok(acc)
            }
            Compose(parts) => {
                let mut it = parts.iter().rev();
                let mut acc = match it.next() {
                    Some(p) => p.to_drawing()?,
                    None => return Err(EngineError::Parse("empty composition".into())),
                };
                for p in it {
                    acc = acc.then(&p.to_drawing()?)?;
                }
                Ok(acc)
            }
            Pow(e, k) => {
                let d = e.to_drawing()?;
                let top = d.top();
                if top != d.bottom {
                    return Err(EngineError::InterfaceMismatch { expected: d.bottom.ascii(), found: top.ascii() });
                }
                let mut acc = Drawing::identity(&d.bottom);
                for _ in 0..*k {
                    acc = acc.then(&d)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn parse(s: &str) -> Result<GeneratorExpr, EngineError> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let e = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(EngineError::Parse(format!("trailing input at token {}", pos)));
        }
        Ok(e)
    }
}

fn tokenize(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn word_arg(tokens: &[String], pos: &mut usize) -> Result<Word, EngineError> {
    let t = tokens.get(*pos).ok_or_else(|| EngineError::Parse("missing word".into()))?;
    *pos += 1;
    if t == "()" || t == "-" {
        return Ok(Word::empty());
    }
    Word::parse(t).map_err(|e| EngineError::Parse(e.to_string()))
}

fn parse_expr(tokens: &[String], pos: &mut usize) -> Result<GeneratorExpr, EngineError> {
    use GeneratorExpr::*;
    let t = tokens.get(*pos).ok_or_else(|| EngineError::Parse("unexpected end of input".into()))?.clone();
    *pos += 1;
    if t != "(" {
        return atom(&t);
    }
    let head = tokens.get(*pos).ok_or_else(|| EngineError::Parse("empty list".into()))?.clone();
    *pos += 1;
    let e = match head.as_str() {
        "compose" | "tensor" => {
            let mut parts = Vec::new();
            while tokens.get(*pos).map(String::as_str) != Some(")") {
                if *pos >= tokens.len() {
                    return Err(EngineError::Parse("unclosed list".into()));
                }
                parts.push(parse_expr(tokens, pos)?);
            }
            if head == "compose" { Compose(parts) } else { Tensor(parts) }
        }
        "pow" => {
            let e = parse_expr(tokens, pos)?;
            let k = tokens
                .get(*pos)
                .and_then(|s| s.parse::<u32>().ok())
                .ok_or_else(|| EngineError::Parse("pow needs a nonnegative exponent".into()))?;
            *pos += 1;
            Pow(Box::new(e), k)
        }
        "id" => Id(word_arg(tokens, pos)?),
        "cross" => {
            let w = word_arg(tokens, pos)?;
            if w.len() != 2 {
                return Err(EngineError::Parse(format!("crossing needs a two-letter word, got {}", w)));
            }
            Cross(w.0[0], w.0[1])
        }
        other => return Err(EngineError::Parse(format!("unknown form {}", other))),
    };
    if tokens.get(*pos).map(String::as_str) != Some(")") {
        return Err(EngineError::Parse(format!("expected ) after {}", head)));
    }
    *pos += 1;
    Ok(e)
}

fn atom(t: &str) -> Result<GeneratorExpr, EngineError> {
    use GeneratorExpr::*;
    use Orient::*;
    Ok(match t {
        "id1" | "id^" => Id(Word(vec![Up])),
        "idv" => Id(Word(vec![Down])),
        "lcup" => LCup,
        "lcap" => LCap,
        "rcup" => RCup,
        "rcap" => RCap,
        "cross" => Cross(Up, Up),
        "cross-inv" => Cross(Up, Down),
        "black" => Black(Up),
        "white" => White(Up),
        "black-down" => Black(Down),
        "white-down" => White(Down),
        other => {
            if let Some(w) = other.strip_prefix("id") {
                if let Ok(w) = Word::parse(w) {
                    return Ok(Id(w));
                }
            }
            return Err(EngineError::Parse(format!("unknown atom {}", other)));
        }
    })
}

impl fmt::Display for GeneratorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorExpr::*;
        match self {
            Id(w) if w.is_empty() => write!(f, "(id ())"),
            Id(w) => write!(f, "(id {})", w.ascii()),
            LCup => write!(f, "lcup"),
            LCap => write!(f, "lcap"),
            RCup => write!(f, "rcup"),
            RCap => write!(f, "rcap"),
            Cross(a, b) => write!(f, "(cross {}{})", a.ascii(), b.ascii()),
            Black(Orient::Up) => write!(f, "black"),
            Black(Orient::Down) => write!(f, "black-down"),
            White(Orient::Up) => write!(f, "white"),
            White(Orient::Down) => write!(f, "white-down"),
            Tensor(p) | Compose(p) => {
                write!(f, "({}", if matches!(self, Tensor(_)) { "tensor" } else { "compose" })?;
                for e in p {
                    write!(f, " {}", e)?;
                }
                write!(f, ")")
            }
            Pow(e, k) => write!(f, "(pow {} {})", e, k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_type() {
        let e = GeneratorExpr::parse("(compose (tensor id1 lcap) (tensor lcup id1))").unwrap();
        let d = e.to_drawing().unwrap();
        assert_eq!(d.bottom.ascii(), "^");
        assert_eq!(d.top().ascii(), "^");
        assert_eq!(GeneratorExpr::parse(&e.to_string()).unwrap(), e);
        assert!(GeneratorExpr::parse("(compose lcap lcap)").unwrap().to_drawing().is_err());
        assert!(GeneratorExpr::parse("(tensor id1").is_err());
        let p = GeneratorExpr::parse("(pow (cross ^^) 2)").unwrap().to_drawing().unwrap();
        assert_eq!(p.layers.len(), 2);
        assert_eq!(GeneratorExpr::parse("id^v^").unwrap(), GeneratorExpr::id("^v^"));
    }
}
