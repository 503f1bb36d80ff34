//! Layered drawings: a bottom word plus a bottom-to-top list of elementary
//! layers, each acting at one position of the current word.

use crate::diagrams::{End, NormalDiagram, Orient, Word};

use super::EngineError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prim {
    /// `() -> ^v`
    LCup,
    /// `v^ -> ()`
    LCap,
    /// `() -> v^`
    RCup,
    /// `^v -> ()`
    RCap,
    /// Crossing of the strands at `pos`, `pos+1`; the `^v` crossing is the
    /// inverse of the sideways one.
    Cross,
    Black,
    White,
}

impl Prim {
    pub fn is_dot(self) -> bool {
        matches!(self, Prim::Black | Prim::White)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    pub pos: usize,
    pub prim: Prim,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Drawing {
    pub bottom: Word,
    pub layers: Vec<Layer>,
}

/// Word above a layer, or an error if the layer does not fit.
pub fn apply_layer(w: &Word, l: Layer) -> Result<Word, EngineError> {
    use Orient::*;
    let bad = || EngineError::BadLayer(format!("{:?} at {} on {}", l.prim, l.pos, w));
    let v = &w.0;
    let p = l.pos;
    let mut out = v.clone();
    match l.prim {
        Prim::LCup | Prim::RCup => {
            if p > v.len() {
                return Err(bad());
            }
            let pair = if l.prim == Prim::LCup { [Up, Down] } else { [Down, Up] };
            out.splice(p..p, pair);
        }
        Prim::LCap | Prim::RCap => {
            let want = if l.prim == Prim::LCap { [Down, Up] } else { [Up, Down] };
            if p + 1 >= v.len() || v[p] != want[0] || v[p + 1] != want[1] {
                return Err(bad());
            }
            out.drain(p..p + 2);
        }
        Prim::Cross => {
            if p + 1 >= v.len() {
                return Err(bad());
            }
            out.swap(p, p + 1);
        }
        Prim::Black | Prim::White => {
            if p >= v.len() {
                return Err(bad());
            }
        }
    }
    Ok(Word(out))
}

impl Drawing {
    pub fn identity(w: &Word) -> Drawing {
        Drawing { bottom: w.clone(), layers: Vec::new() }
    }

    pub fn from_layers(bottom: &Word, layers: &[(usize, Prim)]) -> Result<Drawing, EngineError> {
        let mut d = Drawing::identity(bottom);
        for &(pos, prim) in layers {
            d.push(pos, prim)?;
        }
        Ok(d)
    }

    /// Words at every level: `levels()[h]` lies below layer `h`.
    pub fn levels(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.layers.len() + 1);
        out.push(self.bottom.clone());
        for l in &self.layers {
            let next = apply_layer(out.last().unwrap(), *l).expect("drawing is well-typed");
            out.push(next);
        }
        out
    }

    pub fn top(&self) -> Word {
        self.levels().pop().unwrap()
    }

    pub fn push(&mut self, pos: usize, prim: Prim) -> Result<(), EngineError> {
        apply_layer(&self.top(), Layer { pos, prim })?;
        self.layers.push(Layer { pos, prim });
        Ok(())
    }

    /// `other` stacked on top of `self`.
    pub fn then(&self, other: &Drawing) -> Result<Drawing, EngineError> {
        let top = self.top();
        if top != other.bottom {
            return Err(EngineError::InterfaceMismatch { expected: top.ascii(), found: other.bottom.ascii() });
        }
        let mut layers = self.layers.clone();
        layers.extend_from_slice(&other.layers);
        Ok(Drawing { bottom: self.bottom.clone(), layers })
    }

    /// `(self ⊗ 1) ∘ (1 ⊗ other)`.
    pub fn tensor(&self, other: &Drawing) -> Drawing {
        let shift = self.bottom.len();
        let mut layers: Vec<Layer> =
            other.layers.iter().map(|l| Layer { pos: l.pos + shift, prim: l.prim }).collect();
        layers.extend_from_slice(&self.layers);
        Drawing { bottom: self.bottom.concat(&other.bottom), layers }
    }

    pub fn odd(&self) -> bool {
        self.layers.iter().filter(|l| l.prim == Prim::White).count() % 2 == 1
    }
}

/// Bubble-sort swaps (left positions) taking `items` to ascending order.
fn sort_swaps<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut v = items.to_vec();
    let mut swaps = Vec::new();
    let n = v.len();
    for i in 0..n {
        for j in 0..n.saturating_sub(1 + i) {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                swaps.push(j);
            }
        }
    }
    swaps
}

/// The fixed drawing of a normal diagram that defines its coefficient sign:
/// white dots on bottom `v` ends (left one higher), black dots on bottom `^`
/// ends, a dot-free middle built from left cups, left caps and crossings,
/// black dots on top `v` ends, white dots on top `^` ends (left one higher).
pub fn representative(d: &NormalDiagram) -> Drawing {
    let bottom = &d.bottom;
    let top = &d.top;
    let mut dr = Drawing::identity(bottom);
    let strand_of = |e: End| d.strand_at(e).expect("endpoint is matched");

    for i in (0..bottom.len()).rev() {
        if bottom.0[i] == Orient::Down && d.strands[strand_of(End::Bottom(i))].white % 2 == 1 {
            dr.layers.push(Layer { pos: i, prim: Prim::White });
        }
    }
    for i in 0..bottom.len() {
        if bottom.0[i] == Orient::Up {
            for _ in 0..d.strands[strand_of(End::Bottom(i))].black {
                dr.layers.push(Layer { pos: i, prim: Prim::Black });
            }
        }
    }

    // Sort keys for the bottom: caps first (down end, then up end), then
    // through strands by top position.
    let top_pos = |s: usize| -> Option<usize> {
        match (d.strands[s].src, d.strands[s].dst) {
            (End::Top(j), _) | (_, End::Top(j)) => Some(j),
            _ => None,
        }
    };
    let cap_strands: Vec<usize> = {
        let mut v: Vec<usize> = (0..d.strands.len()).filter(|&s| top_pos(s).is_none()).collect();
        v.sort_by_key(|&s| d.strands[s].order_key());
        v
    };
    let bottom_keys: Vec<(usize, usize, usize)> = (0..bottom.len())
        .map(|i| {
            let s = strand_of(End::Bottom(i));
            match cap_strands.iter().position(|&c| c == s) {
                Some(k) => (0, k, if bottom.0[i] == Orient::Down { 0 } else { 1 }),
                None => (1, top_pos(s).unwrap(), 0),
            }
        })
        .collect();
    for p in sort_swaps(&bottom_keys) {
        dr.layers.push(Layer { pos: p, prim: Prim::Cross });
    }
    for _ in &cap_strands {
        dr.layers.push(Layer { pos: 0, prim: Prim::LCap });
    }

    let cup_strands: Vec<usize> = {
        let mut v: Vec<usize> = (0..d.strands.len())
            .filter(|&s| matches!((d.strands[s].src, d.strands[s].dst), (End::Top(_), End::Top(_))))
            .collect();
        v.sort_by_key(|&s| d.strands[s].order_key());
        v
    };
    for _ in &cup_strands {
        dr.layers.push(Layer { pos: 0, prim: Prim::LCup });
    }
    let top_keys: Vec<(usize, usize, usize)> = (0..top.len())
        .map(|j| {
            let s = strand_of(End::Top(j));
            match cup_strands.iter().position(|&c| c == s) {
                Some(k) => (0, k, if top.0[j] == Orient::Up { 0 } else { 1 }),
                None => (1, j, 0),
            }
        })
        .collect();
    for p in sort_swaps(&top_keys).into_iter().rev() {
        dr.layers.push(Layer { pos: p, prim: Prim::Cross });
    }

    for j in 0..top.len() {
        if top.0[j] == Orient::Down {
            for _ in 0..d.strands[strand_of(End::Top(j))].black {
                dr.layers.push(Layer { pos: j, prim: Prim::Black });
            }
        }
    }
    for j in (0..top.len()).rev() {
        if top.0[j] == Orient::Up && d.strands[strand_of(End::Top(j))].white % 2 == 1 {
            dr.layers.push(Layer { pos: j, prim: Prim::White });
        }
    }
    debug_assert_eq!(dr.top(), *top);
    dr
}
