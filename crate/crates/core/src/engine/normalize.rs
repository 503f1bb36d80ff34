//! Rewriting a layered drawing into normal diagrams with bubble
//! coefficients.
//!
//! Open strands first: black dots are pushed back to the inward end, white
//! dots forward to the outward end. Closed components are then handled one
//! at a time: their dots are gathered at the rightmost point of the loop,
//! that point is exposed to the right edge by inserting inverse crossing
//! pairs, and the loop is replaced by its bubble value.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::{Mutex, OnceLock};

use crate::diagrams::{End, NormalDiagram, Orient, Strand, Word};
use crate::scalars::BubblePolynomial;

use super::drawing::{Drawing, Layer, Prim};
use super::EngineError;

const STEP_LIMIT: usize = 5_000_000;

type Point = (usize, usize);

struct Comp {
    closed: bool,
    points: Vec<Point>,
    /// `events[k]` is the layer met between `points[k]` and the next point,
    /// if it touches the strand.
    events: Vec<Option<usize>>,
}

struct Analysis {
    levels: Vec<Word>,
    /// Number of non-dot layers below each level.
    skel: Vec<usize>,
    comps: Vec<Comp>,
}

impl Comp {
    fn touching(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + '_ {
        self.events.iter().enumerate().filter_map(|(k, e)| e.map(|e| (k, e)))
    }
}

fn levels_of(d: &Drawing) -> Vec<Word> {
    d.levels()
}

/// Whether a layer meets the strand at position `p` of its input word.
fn touches(l: Layer, p: usize) -> bool {
    match l.prim {
        Prim::LCup | Prim::RCup => false,
        Prim::LCap | Prim::RCap | Prim::Cross => p == l.pos || p == l.pos + 1,
        Prim::Black | Prim::White => p == l.pos,
    }
}

/// Next point along the orientation and the layer met on the way, if any.
fn step(levels: &[Word], layers: &[Layer], (h, p): Point) -> Option<(Point, Option<usize>)> {
    let o = levels[h].0[p];
    match o {
        Orient::Up => {
            if h == layers.len() {
                return None;
            }
            let l = layers[h];
            let q = l.pos;
            let np = match l.prim {
                Prim::LCup | Prim::RCup => if p < q { p } else { p + 2 },
                Prim::LCap | Prim::RCap => {
                    if p == q || p == q + 1 {
                        return Some(((h, if p == q { q + 1 } else { q }), Some(h)));
                    }
                    if p < q { p } else { p - 2 }
                }
                Prim::Cross => if p == q { q + 1 } else if p == q + 1 { q } else { p },
                Prim::Black | Prim::White => p,
            };
            Some(((h + 1, np), touches(l, p).then_some(h)))
        }
        Orient::Down => {
            if h == 0 {
                return None;
            }
            let l = layers[h - 1];
            let q = l.pos;
            let np = match l.prim {
                Prim::LCup | Prim::RCup => {
                    if p == q || p == q + 1 {
                        return Some(((h, if p == q { q + 1 } else { q }), Some(h - 1)));
                    }
                    if p < q { p } else { p - 2 }
                }
                Prim::LCap | Prim::RCap => if p < q { p } else { p + 2 },
                Prim::Cross => if p == q { q + 1 } else if p == q + 1 { q } else { p },
                Prim::Black | Prim::White => p,
            };
            Some(((h - 1, np), touches(l, np).then_some(h - 1)))
        }
    }
}

fn analyze(d: &Drawing) -> Analysis {
    let levels = levels_of(d);
    let mut skel = vec![0; levels.len()];
    for (i, l) in d.layers.iter().enumerate() {
        skel[i + 1] = skel[i] + usize::from(!l.prim.is_dot());
    }
    let mut seen: Vec<Vec<bool>> = levels.iter().map(|w| vec![false; w.len()]).collect();
    let mut comps = Vec::new();
    let top = d.layers.len();
    let mut starts: Vec<Point> = Vec::new();
    for (p, o) in levels[0].0.iter().enumerate() {
        if *o == Orient::Up {
            starts.push((0, p));
        }
    }
    for (p, o) in levels[top].0.iter().enumerate() {
        if *o == Orient::Down {
            starts.push((top, p));
        }
    }
    for s in starts {
        let mut points = vec![s];
        let mut events = Vec::new();
        seen[s.0][s.1] = true;
        let mut cur = s;
        while let Some((nx, ev)) = step(&levels, &d.layers, cur) {
            seen[nx.0][nx.1] = true;
            points.push(nx);
            events.push(ev);
            cur = nx;
        }
        comps.push(Comp { closed: false, points, events });
    }
    for h in 0..levels.len() {
        for p in 0..levels[h].len() {
            if seen[h][p] {
                continue;
            }
            let s = (h, p);
            let mut points = vec![s];
            let mut events = Vec::new();
            seen[h][p] = true;
            let mut cur = s;
            loop {
                let (nx, ev) = step(&levels, &d.layers, cur).expect("closed components have no ends");
                events.push(ev);
                if nx == s {
                    break;
                }
                seen[nx.0][nx.1] = true;
                points.push(nx);
                cur = nx;
            }
                comps.push(Comp { closed: true, points, events });
        }
    }
    Analysis { levels, skel, comps }
}

/// Dot-through-crossing corrections, keyed by the crossing's bottom word
/// and the strand carrying the dot (`true` for the one starting bottom
/// left). With `S` the oriented smoothing and `S_w` the same smoothing with
/// two white dots (see [`smoothing`]), a black dot satisfies
/// `dot_above ∘ X - X ∘ dot_below = a S + b S_w`.
fn crossing_rule(o: (Orient, Orient), from_left: bool) -> (i64, i64) {
    use Orient::*;
    match (o, from_left) {
        ((Up, Up), true) => (-1, 1),
        ((Up, Up), false) => (1, 1),
        ((Down, Down), true) => (1, 1),
        ((Down, Down), false) => (-1, 1),
        ((Down, Up), true) => (-1, -1),
        ((Down, Up), false) => (-1, 1),
        ((Up, Down), true) => (1, -1),
        ((Up, Down), false) => (1, 1),
    }
}

/// The smoothing of a crossing at `q` with bottom word `o`, without and
/// with white dots.
pub(crate) fn smoothing(o: (Orient, Orient), q: usize) -> (Vec<Layer>, Vec<Layer>) {
    use Orient::*;
    let l = |pos, prim| Layer { pos, prim };
    match o {
        (Up, Up) | (Down, Down) => (vec![], vec![l(q, Prim::White), l(q + 1, Prim::White)]),
        (Down, Up) => (
            vec![l(q, Prim::LCap), l(q, Prim::LCup)],
            vec![l(q + 1, Prim::White), l(q, Prim::LCap), l(q, Prim::LCup), l(q, Prim::White)],
        ),
        (Up, Down) => (
            vec![l(q, Prim::RCap), l(q, Prim::RCup)],
            vec![l(q, Prim::White), l(q, Prim::RCap), l(q, Prim::RCup), l(q + 1, Prim::White)],
        ),
    }
}

fn replace(d: &Drawing, start: usize, count: usize, new: &[Layer]) -> Drawing {
    let mut layers = d.layers[..start].to_vec();
    layers.extend_from_slice(new);
    layers.extend_from_slice(&d.layers[start + count..]);
    Drawing { bottom: d.bottom.clone(), layers }
}

/// Swap sign of two adjacent dot layers.
fn dot_swap_negative(a: Layer, b: Layer) -> bool {
    if a.pos == b.pos {
        a.prim != b.prim
    } else {
        a.prim == Prim::White && b.prim == Prim::White
    }
}

/// Move the dot at layer `i` past its neighbour in the picture direction
/// (`up`). The first returned term is the moved drawing; the rest are
/// corrections. `None` at the boundary.
fn move_dot(d: &Drawing, levels: &[Word], i: usize, up: bool) -> Option<Vec<(Drawing, i64)>> {
    let dot = d.layers[i];
    let p = dot.pos;
    let j = if up {
        if i + 1 >= d.layers.len() {
            return None;
        }
        i + 1
    } else {
        if i == 0 {
            return None;
        }
        i - 1
    };
    let other = d.layers[j];
    let q = other.pos;
    let swapped = |new_dot_pos: usize| -> Drawing {
        let mut e = d.clone();
        e.layers[i] = other;
        e.layers[j] = Layer { pos: new_dot_pos, prim: dot.prim };
        e
    };
    match other.prim {
        Prim::Black | Prim::White => {
            let s = if dot_swap_negative(dot, other) { -1 } else { 1 };
            Some(vec![(swapped(p), s)])
        }
        Prim::LCup | Prim::RCup => {
            if up {
                Some(vec![(swapped(if p < q { p } else { p + 2 }), 1)])
            } else if p == q || p == q + 1 {
                let mut e = d.clone();
                e.layers[i].pos = if p == q { q + 1 } else { q };
                Some(vec![(e, 1)])
            } else {
                Some(vec![(swapped(if p < q { p } else { p - 2 }), 1)])
            }
        }
        Prim::LCap | Prim::RCap => {
            if !up {
                Some(vec![(swapped(if p < q { p } else { p + 2 }), 1)])
            } else if p == q || p == q + 1 {
                let mut e = d.clone();
                e.layers[i].pos = if p == q { q + 1 } else { q };
                Some(vec![(e, 1)])
            } else {
                Some(vec![(swapped(if p < q { p } else { p - 2 }), 1)])
            }
        }
        Prim::Cross => {
            if p != q && p != q + 1 {
                return Some(vec![(swapped(p), 1)]);
            }
            let t = p - q;
            let mut out = vec![(swapped(q + 1 - t), 1)];
            if dot.prim == Prim::Black {
                let w = &levels[j];
                let o = (w.0[q], w.0[q + 1]);
                // Moving down the dot starts on top; top-right lies on the
                // strand from bottom left. Moving up it starts at the bottom.
                let from_left = if up { t == 0 } else { t == 1 };
                let (a, b) = crossing_rule(o, from_left);
                let s = if up { -1 } else { 1 };
                let (plain, whites) = smoothing(o, q);
                let start = i.min(j);
                if a != 0 {
                    out.push((replace(d, start, 2, &plain), s * a));
                }
                if b != 0 {
                    out.push((replace(d, start, 2, &whites), s * b));
                }
            }
            Some(out)
        }
    }
}

fn bubble_sign(k: i64) -> BubblePolynomial {
    BubblePolynomial::from_int(k)
}

#[derive(Default)]
struct Accum {
    out: BTreeMap<NormalDiagram, BubblePolynomial>,
}

impl Accum {
    fn add(&mut self, d: NormalDiagram, c: BubblePolynomial) {
        if c.is_zero() {
            return;
        }
        let e = self.out.entry(d.clone()).or_insert_with(BubblePolynomial::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.out.remove(&d);
        }
    }
}

/// Value of a clockwise loop carrying `k` black dots at its right side.
fn clockwise_value(k: u32) -> Result<BubblePolynomial, EngineError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BubblePolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&k) {
        return Ok(v.clone());
    }
    // Move the dots to the left leg and twist that leg to the right edge;
    // the dots then sit on an upward segment with nothing to their right.
    let mut layers = vec![(0, Prim::LCup)];
    layers.extend(std::iter::repeat_n((0, Prim::Black), k as usize));
    layers.extend([(0, Prim::Cross), (0, Prim::Cross), (0, Prim::RCap)]);
    let d = Drawing::from_layers(&Word::empty(), &layers)?;
    let res = reduce(&d, BubblePolynomial::one())?;
    let v = res.get(&empty_diagram()).cloned().unwrap_or_else(BubblePolynomial::zero);
    cache.lock().unwrap().insert(k, v.clone());
    Ok(v)
}

fn empty_diagram() -> NormalDiagram {
    NormalDiagram::new(Word::empty(), Word::empty(), Vec::new())
}

enum Action {
    Replace(Vec<(Drawing, BubblePolynomial)>),
    Done(NormalDiagram, BubblePolynomial),
}

type Normal = BTreeMap<NormalDiagram, BubblePolynomial>;

/// Rewrite `d` (with coefficient `c`) into normal diagrams.
///
/// Results are memoized per drawing for the duration of the call, since
/// different rewriting paths often meet in the same intermediate drawing.
pub fn reduce(d: &Drawing, c: BubblePolynomial) -> Result<Normal, EngineError> {
    if c.is_zero() {
        return Ok(Normal::new());
    }
    let unit = reduce_unit(d)?;
    let mut acc = Accum::default();
    for (n, v) in unit.iter() {
        acc.add(n.clone(), &c * v);
    }
    Ok(acc.out)
}

struct Frame {
    drawing: Drawing,
    children: Vec<(Drawing, BubblePolynomial)>,
    next: usize,
    acc: Accum,
}

fn reduce_unit(root: &Drawing) -> Result<Rc<Normal>, EngineError> {
    let one = BubblePolynomial::one();
    let mut memo: HashMap<Drawing, Rc<Normal>> = HashMap::new();
    let mut steps = 0usize;
    // Expand a drawing: either a finished result or a frame to work through.
    let mut expand = |d: &Drawing, memo: &mut HashMap<Drawing, Rc<Normal>>| -> Result<Option<Frame>, EngineError> {
        steps += 1;
        if steps > STEP_LIMIT {
            return Err(EngineError::NonTerminating);
        }
        match next_action(d, &one)? {
            Action::Done(n, c) => {
                let mut acc = Accum::default();
                acc.add(n, c);
                memo.insert(d.clone(), Rc::new(acc.out));
                Ok(None)
            }
            Action::Replace(items) => {
                let children = items.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                Ok(Some(Frame { drawing: d.clone(), children, next: 0, acc: Accum::default() }))
            }
        }
    };
    let mut stack: Vec<Frame> = Vec::new();
    if let Some(f) = expand(root, &mut memo)? {
        stack.push(f);
    }
    while let Some(top) = stack.last_mut() {
        if top.next == top.children.len() {
            let f = stack.pop().unwrap();
            memo.insert(f.drawing, Rc::new(f.acc.out));
            continue;
        }
        let (child, c) = &top.children[top.next];
        if let Some(r) = memo.get(child) {
            for (n, v) in r.iter() {
                top.acc.add(n.clone(), c * v);
            }
            top.next += 1;
            continue;
        }
        let child = child.clone();
        if let Some(f) = expand(&child, &mut memo)? {
            stack.push(f);
        }
    }
    Ok(memo.remove(root).expect("root is reduced"))
}

fn scaled(terms: Vec<(Drawing, i64)>, c: &BubblePolynomial) -> Vec<(Drawing, BubblePolynomial)> {
    terms.into_iter().map(|(d, k)| (d, c * &bubble_sign(k))).collect()
}

fn next_action(d: &Drawing, c: &BubblePolynomial) -> Result<Action, EngineError> {
    let a = analyze(d);
    // Open strands: black dots back to the start.
    for comp in a.comps.iter().filter(|c| !c.closed) {
        let mut clean = true;
        for (k, ev) in comp.touching() {
            let prim = d.layers[ev].prim;
            if !prim.is_dot() {
                clean = false;
            } else if prim == Prim::Black && !clean {
                let up = a.levels[comp.points[k].0].0[comp.points[k].1] == Orient::Down;
                let moved = move_dot(d, &a.levels, ev, up).expect("a dot behind a layer can move");
                return Ok(Action::Replace(scaled(moved, c)));
            }
        }
    }
    // Open strands: white dots forward to the end.
    for comp in a.comps.iter().filter(|c| !c.closed) {
        let mut clean = true;
        for (k, ev) in comp.touching().rev() {
            let prim = d.layers[ev].prim;
            if prim != Prim::White {
                clean = false;
            } else if !clean {
                let up = a.levels[comp.points[k].0].0[comp.points[k].1] == Orient::Up;
                let moved = move_dot(d, &a.levels, ev, up).expect("a dot behind a layer can move");
                return Ok(Action::Replace(scaled(moved, c)));
            }
        }
    }
    // Closed components, in a fixed order depending only on the dot-free
    // skeleton.
    let mut loops: Vec<(Point, usize)> = a
        .comps
        .iter()
        .enumerate()
        .filter(|(_, c)| c.closed)
        .map(|(i, c)| (c.points.iter().map(|&(h, p)| (a.skel[h], p)).min().unwrap(), i))
        .collect();
    loops.sort();
    let mut ready = Vec::new();
    for &(_, li) in &loops {
        match loop_action(d, &a, li, c)? {
            Some(act) => return Ok(act),
            None => ready.push(li),
        }
    }
    if let Some(&li) = ready.first() {
        return evaluate_loop(d, &a, li, c);
    }
    let (n, sign) = extract(d, &a);
    Ok(Action::Done(n, c * &bubble_sign(sign)))
}

/// Target point of a loop: the rightmost point of its skeleton, preferring
/// upward segments, then lower levels.
fn loop_target(a: &Analysis, li: usize) -> (usize, usize, usize) {
    let comp = &a.comps[li];
    comp.points
        .iter()
        .map(|&(h, p)| {
            let w = &a.levels[h];
            let rc = w.len() - 1 - p;
            let down = usize::from(w.0[p] == Orient::Down);
            (rc, down, a.skel[h], p)
        })
        .min()
        .map(|(rc, down, k, p)| {
            let _ = down;
            (rc, k, p)
        })
        .unwrap()
}

fn loop_dots(d: &Drawing, a: &Analysis, li: usize) -> Vec<(usize, usize)> {
    // (event index, layer)
    let comp = &a.comps[li];
    comp.touching().filter(|&(_, ev)| d.layers[ev].prim.is_dot()).collect()
}

fn loop_action(d: &Drawing, a: &Analysis, li: usize, c: &BubblePolynomial) -> Result<Option<Action>, EngineError> {
    let comp = &a.comps[li];
    let dots = loop_dots(d, a, li);
    if dots.is_empty() {
        return Ok(Some(Action::Replace(Vec::new())));
    }
    let (rc, k, p) = loop_target(a, li);
    let at_target = |ev: usize| a.skel[ev] == k && d.layers[ev].pos == p;
    let m = comp.points.len();
    // Indices of points lying on the target segment.
    let target_pts: Vec<usize> = (0..m).filter(|&i| a.skel[comp.points[i].0] == k && comp.points[i].1 == p).collect();
    for &(e, ev) in &dots {
        if at_target(ev) {
            continue;
        }
        // The dot sits between points e and e+1.
        let fwd = target_pts.iter().map(|&t| (t + m - (e + 1)) % m).min().unwrap();
        let bwd = target_pts.iter().map(|&t| (e + m - t) % m).min().unwrap();
        let forward = fwd <= bwd;
        let (h, pp) = if forward { comp.points[(e + 1) % m] } else { comp.points[e] };
        let _ = pp;
        // Picture direction: towards the chosen neighbouring point.
        let up = if forward {
            a.levels[comp.points[e].0].0[comp.points[e].1] == Orient::Up
        } else {
            a.levels[comp.points[e].0].0[comp.points[e].1] == Orient::Down
        };
        let _ = h;
        // Move the front dot of a run of dots on this strand.
        let mut ev = ev;
        loop {
            let j = if up { ev + 1 } else { ev.wrapping_sub(1) };
            match d.layers.get(j) {
                Some(l) if l.prim.is_dot() && l.pos == d.layers[ev].pos => ev = j,
                _ => break,
            }
        }
        let moved = move_dot(d, &a.levels, ev, up).expect("loop dots always have neighbours");
        return Ok(Some(Action::Replace(scaled(moved, c))));
    }
    if rc > 0 {
        let top = dots.iter().map(|&(_, ev)| ev).max().unwrap();
        let mut e = d.clone();
        let x = Layer { pos: p, prim: Prim::Cross };
        e.layers.splice(top + 1..top + 1, [x, x]);
        return Ok(Some(Action::Replace(vec![(e, c.clone())])));
    }
    Ok(None)
}

fn evaluate_loop(d: &Drawing, a: &Analysis, li: usize, c: &BubblePolynomial) -> Result<Action, EngineError> {
    let comp = &a.comps[li];
    let dots = loop_dots(d, a, li);
    let (_, _, p) = loop_target(a, li);
    let first = dots.iter().map(|&(_, ev)| ev).min().unwrap();
    let h = first;
    let up = a.levels[h].0[p] == Orient::Up;
    // Dots in order along the loop.
    let mut along: Vec<usize> = dots.iter().map(|&(_, ev)| ev).collect();
    along.sort();
    if !up {
        along.reverse();
    }
    let whites: Vec<usize> = along.iter().copied().filter(|&ev| d.layers[ev].prim == Prim::White).collect();
    if whites.len() % 2 == 1 {
        return Ok(Action::Replace(Vec::new()));
    }
    let mut neg = false;
    // Bring the loop's white dots together past foreign white dots.
    let lo = *along.iter().min().unwrap();
    let hi = *along.iter().max().unwrap();
    let own: std::collections::HashSet<usize> = along.iter().copied().collect();
    for ev in lo..=hi {
        if !own.contains(&ev) && d.layers[ev].prim == Prim::White {
            let below = whites.iter().filter(|&&w| w < ev).count();
            neg ^= below % 2 == 1;
        }
    }
    // Pair consecutive whites along the loop.
    let mut open: Option<usize> = None;
    let mut blacks_between = 0;
    for &ev in &along {
        match (d.layers[ev].prim, open) {
            (Prim::White, None) => {
                open = Some(ev);
                blacks_between = 0;
            }
            (Prim::White, Some(_)) => {
                neg ^= blacks_between % 2 == 1;
                if !up {
                    neg = !neg;
                }
                open = None;
            }
            (Prim::Black, Some(_)) => blacks_between += 1,
            _ => {}
        }
    }
    let k = along.iter().filter(|&&ev| d.layers[ev].prim == Prim::Black).count() as u32;
    let value = if up { BubblePolynomial::delta(k) } else { clockwise_value(k)? };
    if value.is_zero() {
        return Ok(Action::Replace(Vec::new()));
    }
    let rest = remove_component(d, &a.levels, comp);
    let coeff = &(c * &value) * &bubble_sign(if neg { -1 } else { 1 });
    Ok(Action::Replace(vec![(rest, coeff)]))
}

fn remove_component(d: &Drawing, levels: &[Word], comp: &Comp) -> Drawing {
    let mut on: Vec<Vec<bool>> = levels.iter().map(|w| vec![false; w.len()]).collect();
    for &(h, p) in &comp.points {
        on[h][p] = true;
    }
    let mut layers = Vec::new();
    for (i, l) in d.layers.iter().enumerate() {
        let below = |q: usize| on[i][..q.min(on[i].len())].iter().filter(|x| **x).count();
        let keep = match l.prim {
            Prim::LCup | Prim::RCup => !on[i + 1][l.pos],
            Prim::LCap | Prim::RCap | Prim::Cross => !on[i][l.pos] && !on[i][l.pos + 1],
            Prim::Black | Prim::White => !on[i][l.pos],
        };
        if keep {
            layers.push(Layer { pos: l.pos - below(l.pos), prim: l.prim });
        }
    }
    Drawing { bottom: d.bottom.clone(), layers }
}

/// Read off the normal diagram of a drawing whose dots are all in place,
/// with the sign relating the drawing to the representative.
fn extract(d: &Drawing, a: &Analysis) -> (NormalDiagram, i64) {
    let top = d.layers.len();
    // An upward point starts at the bottom or ends at the top.
    let end_of = |(h, p): Point, start: bool| {
        if (a.levels[h].0[p] == Orient::Up) == start { End::Bottom(p) } else { End::Top(p) }
    };
    let mut strands = Vec::new();
    // (layer, strand, sort group, endpoint index)
    let mut whites: Vec<(usize, usize, u8, usize)> = Vec::new();
    let mut neg = false;
    for (si, comp) in a.comps.iter().enumerate() {
        debug_assert!(!comp.closed);
        let src = end_of(comp.points[0], true);
        let dst = end_of(*comp.points.last().unwrap(), false);
        let mut black = 0;
        let mut white = 0u32;
        for (_, ev) in comp.touching() {
            match d.layers[ev].prim {
                Prim::Black => black += 1,
                Prim::White => {
                    white += 1;
                    let (g, j) = match dst {
                        End::Top(j) => (0, j),
                        End::Bottom(j) => (1, j),
                    };
                    whites.push((ev, si, g, j));
                }
                _ => {}
            }
        }
        if matches!(dst, End::Bottom(_)) && (white / 2) % 2 == 1 {
            neg = !neg;
        }
        strands.push(Strand { src, dst, white: (white % 2) as u8, black });
    }
    // Current order: highest first. Target: by group and endpoint, keeping
    // the height order on each strand.
    whites.sort_by_key(|x| std::cmp::Reverse(x.0));
    let keyed: Vec<(u8, usize, usize)> = whites.iter().enumerate().map(|(i, w)| (w.2, w.3, i)).collect();
    for i in 0..keyed.len() {
        for j in i + 1..keyed.len() {
            if whites[i].1 != whites[j].1 && keyed[i] > keyed[j] {
                neg = !neg;
            }
        }
    }
    let n = NormalDiagram::new(d.bottom.clone(), a.levels[top].clone(), strands);
    (n, if neg { -1 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dr(b: &str, l: &[(usize, Prim)]) -> Drawing {
        Drawing::from_layers(&Word::parse(b).unwrap(), l).unwrap()
    }

    #[test]
    fn clockwise_matches_recursion() {
        use crate::scalars::{delta_prime, DeltaSpec};
        let formal = DeltaSpec::formal(9);
        for k in 0..=7 {
            assert_eq!(clockwise_value(k).unwrap(), delta_prime(&formal, k.max(1)) * BubblePolynomial::from_int(i64::from(k > 0)), "k = {}", k);
        }
    }

    #[test]
    fn zigzag_is_identity() {
        let r = reduce(&dr("^", &[(0, Prim::LCup), (1, Prim::LCap)]), BubblePolynomial::one()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.keys().next().unwrap(), &NormalDiagram::identity(&Word::parse("^").unwrap()));
    }
}
