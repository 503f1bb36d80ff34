//! TikZ rendering of normal diagrams and morphisms.

use std::fmt::Write;

use crate::diagrams::{End, NormalDiagram, Orient};
use crate::engine::Morphism;

fn point(e: End) -> (usize, usize) {
    match e {
        End::Bottom(i) => (i, 0),
        End::Top(j) => (j, 2),
    }
}

/// One `tikzpicture`: bottom endpoints on `y = 0`, top endpoints on `y = 2`,
/// each strand drawn from its source with an arrow at its target. Black
/// dots sit near the source, white dots near the target.
pub fn render_diagram(d: &NormalDiagram) -> String {
    let mut out = String::from("\\begin{tikzpicture}[baseline=14pt, scale=0.6, thick]\n");
    for (i, o) in d.bottom.0.iter().enumerate() {
        let _ = writeln!(out, "  \\node[below] at ({}, 0) {{\\tiny ${}$}};", i, if *o == Orient::Up { "\\uparrow" } else { "\\downarrow" });
    }
    for s in &d.strands {
        let (x0, y0) = point(s.src);
        let (x1, y1) = point(s.dst);
        let _ = write!(out, "  \\draw[->] ({x0}, {y0}) .. controls ({x0}, 1) and ({x1}, 1) .. ({x1}, {y1})");
        if s.black > 0 {
            let _ = write!(out, " node[pos=0.3, circle, fill=black, inner sep=1.5pt] {{}}");
            if s.black > 1 {
                let _ = write!(out, " node[pos=0.3, right=2pt] {{\\tiny ${}$}}", s.black);
            }
        }
        if s.white > 0 {
            let _ = write!(out, " node[pos=0.7, circle, draw, fill=white, inner sep=1.5pt] {{}}");
        }
        out.push_str(";\n");
    }
    out.push_str("\\end{tikzpicture}");
    out
}

/// A sum of rendered diagrams with their coefficients.
pub fn render_morphism(m: &Morphism) -> String {
    if m.terms.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = m.terms.iter().map(|(d, c)| format!("\\left({}\\right)\n{}", c, render_diagram(d))).collect();
    parts.join("\n+\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Word;

    #[test]
    fn identity_picture() {
        let d = NormalDiagram::identity(&Word::parse("^v").unwrap());
        let s = render_diagram(&d);
        assert!(s.starts_with("\\begin{tikzpicture}"));
        assert_eq!(s.matches("\\draw").count(), 2);
        assert!(s.contains("(0, 0) .. controls (0, 1) and (0, 1) .. (0, 2)"));
        assert!(s.contains("(1, 2) .. controls (1, 1) and (1, 1) .. (1, 0)"));
    }

    #[test]
    fn dots_and_coefficients() {
        let m = Morphism::parse("(compose black black white)").unwrap();
        let s = render_morphism(&m);
        assert!(s.contains("fill=black"));
        assert!(s.contains("fill=white"));
        assert!(s.contains("$2$"));
    }
}
