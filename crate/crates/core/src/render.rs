//! Pictures of dotted Brauer diagrams, one panel per term.

use std::fmt::Write as _;

use crate::document::{ElementDocument, TermDocument};

struct Shape {
    cups: Vec<(usize, usize)>,
    caps: Vec<(usize, usize)>,
    through: Vec<(usize, usize)>,
}

fn shape(t: &TermDocument) -> Shape {
    let mut s = Shape { cups: Vec::new(), caps: Vec::new(), through: Vec::new() };
    for &(a, b) in &t.matching {
        let (a, b) = (a.min(b), a.max(b));
        if a > 0 {
            s.cups.push((a as usize, b as usize));
        } else if b < 0 {
            s.caps.push(((-b) as usize, (-a) as usize));
        } else {
            s.through.push((b as usize, (-a) as usize));
        }
    }
    s.cups.sort();
    s.caps.sort();
    s.through.sort();
    s
}

const PANEL_GAP: usize = 20;
const TOP_Y: usize = 50;
const BOTTOM_Y: usize = 170;

fn panel_width(d: usize) -> usize {
    40 * d.max(1) + 40
}

fn vx(offset: usize, k: usize) -> usize {
    offset + 40 * k
}

/// SVG 1.1 drawing. Identical documents give identical output.
pub fn render_svg(doc: &ElementDocument) -> String {
    let d = doc.d;
    let w = panel_width(d);
    let panels = doc.terms.len().max(1);
    let width = panels * w + (panels + 1) * PANEL_GAP;
    let height = BOTTOM_Y + 40;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    if doc.terms.is_empty() {
        let x = PANEL_GAP;
        let _ = writeln!(s, r#"<g class="term"><rect x="{x}" y="10" width="{w}" height="{}" fill="none" stroke="gray"/>"#, height - 20);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="24" text-anchor="middle">0</text></g>"#,
            x + w / 2,
            (TOP_Y + BOTTOM_Y) / 2 + 8
        );
    }
    for (i, t) in doc.terms.iter().enumerate() {
        let x0 = PANEL_GAP + i * (w + PANEL_GAP);
        let sh = shape(t);
        let _ = writeln!(s, r#"<g class="term"><rect x="{x0}" y="10" width="{w}" height="{}" fill="none" stroke="gray"/>"#, height - 20);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="30" font-family="monospace" font-size="14" text-anchor="middle">{}</text>"#,
            x0 + w / 2,
            t.coeff
        );
        for &(a, b) in &sh.cups {
            let depth = TOP_Y + 20 + 15 * (b - a);
            let (xa, xb) = (vx(x0, a), vx(x0, b));
            let _ = writeln!(s, r#"<path d="M {xa} {TOP_Y} C {xa} {depth} {xb} {depth} {xb} {TOP_Y}" fill="none" stroke="black" stroke-width="2"/>"#);
        }
        for &(a, b) in &sh.caps {
            let depth = BOTTOM_Y - 20 - 15 * (b - a);
            let (xa, xb) = (vx(x0, a), vx(x0, b));
            let _ = writeln!(
                s,
                r#"<path d="M {xa} {BOTTOM_Y} C {xa} {depth} {xb} {depth} {xb} {BOTTOM_Y}" fill="none" stroke="black" stroke-width="2"/>"#
            );
        }
        for &(p, q) in &sh.through {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{TOP_Y}" x2="{}" y2="{BOTTOM_Y}" stroke="black" stroke-width="2"/>"#,
                vx(x0, p),
                vx(x0, q)
            );
        }
        for (dots, y, label_dy) in [(&t.top_dots, TOP_Y, -6i64), (&t.bottom_dots, BOTTOM_Y, 16)] {
            for (k, &count) in dots.iter().enumerate() {
                let x = vx(x0, k + 1);
                let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="2" fill="gray"/>"#);
                if count > 0 {
                    let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="5" fill="black"/>"#);
                    if count > 1 {
                        let _ = writeln!(
                            s,
                            r#"<text x="{}" y="{}" font-family="monospace" font-size="11">{count}</text>"#,
                            x + 7,
                            y as i64 + label_dy
                        );
                    }
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

fn col(k: usize) -> usize {
    1 + 4 * (k - 1)
}

struct Grid {
    rows: Vec<Vec<char>>,
    width: usize,
}

impl Grid {
    fn row(&mut self) -> &mut Vec<char> {
        self.rows.push(vec![' '; self.width]);
        self.rows.last_mut().expect("just pushed")
    }

    fn text(&mut self, s: &str) {
        let w = self.width;
        let r = self.row();
        r.clear();
        r.extend(s.chars());
        if r.len() < w {
            r.resize(w, ' ');
        }
    }
}

fn arc_row(row: &mut [char], a: usize, b: usize, left: char, fill: char, mid: char, right: char) {
    let (ca, cb) = (col(a), col(b));
    for c in row.iter_mut().take(cb).skip(ca + 1) {
        *c = fill;
    }
    row[(ca + cb) / 2] = mid;
    row[ca] = left;
    row[cb] = right;
}

fn ascii_term(t: &TermDocument, d: usize) -> Vec<String> {
    let sh = shape(t);
    let width = col(d.max(1)) + 2;
    let mut g = Grid { rows: Vec::new(), width };
    g.text(&format!("({})", t.coeff));
    let labels = g.row();
    for k in 1..=d {
        let s = k.to_string();
        for (i, ch) in s.chars().enumerate() {
            if col(k) + i < labels.len() {
                labels[col(k) + i] = ch;
            }
        }
    }

    let top_rows = t.top_dots.iter().copied().max().unwrap_or(0);
    for r in 0..top_rows {
        let row = g.row();
        for k in 1..=d {
            row[col(k)] = if t.top_dots[k - 1] > r { '*' } else { '|' };
        }
    }
    if top_rows == 0 {
        let row = g.row();
        for k in 1..=d {
            row[col(k)] = '|';
        }
    }

    let mut cups = sh.cups.clone();
    cups.sort_by_key(|&(a, b)| (b - a, a));
    let mut open: Vec<usize> = (1..=d).collect();
    for &(a, b) in &cups {
        let row = g.row();
        for &k in &open {
            row[col(k)] = '|';
        }
        arc_row(row, a, b, '\\', '_', '∪', '/');
        open.retain(|&k| k != a && k != b);
    }

    let span = sh.through.iter().map(|&(p, q)| col(p).abs_diff(col(q))).max().unwrap_or(0);
    for r in 0..span.max(1) {
        let row = g.row();
        for &(p, q) in &sh.through {
            let (cp, cq) = (col(p), col(q));
            let dx = cp.abs_diff(cq);
            if r >= dx {
                row[cq] = '|';
            } else if cq > cp {
                row[cp + r + 1] = '\\';
            } else {
                row[cp - r - 1] = '/';
            }
        }
    }

    let mut caps = sh.caps.clone();
    caps.sort_by_key(|&(a, b)| (std::cmp::Reverse(b - a), a));
    let mut closed: Vec<usize> = sh.through.iter().map(|&(_, q)| q).collect();
    for &(a, b) in &caps {
        let row = g.row();
        for &k in &closed {
            row[col(k)] = '|';
        }
        arc_row(row, a, b, '/', '-', '∩', '\\');
        closed.push(a);
        closed.push(b);
    }

    let bottom_rows = t.bottom_dots.iter().copied().max().unwrap_or(0);
    for r in (0..bottom_rows.max(1)).rev() {
        let row = g.row();
        for k in 1..=d {
            row[col(k)] = if t.bottom_dots[k - 1] > r { '*' } else { '|' };
        }
    }
    let labels = g.row();
    for k in 1..=d {
        let s = format!("{k}'");
        for (i, ch) in s.chars().enumerate() {
            if col(k) + i < labels.len() {
                labels[col(k) + i] = ch;
            }
        }
    }
    g.rows.into_iter().map(|r| r.into_iter().collect::<String>().trim_end().to_string()).collect()
}

/// Text drawing: cups as `\_∪_/`, caps as `/-∩-\`, crossings with `\` and `/`, dots as `*`.
pub fn render_ascii(doc: &ElementDocument) -> String {
    if doc.terms.is_empty() {
        return "(0)\n".to_string();
    }
    let mut out = String::new();
    for (i, t) in doc.terms.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for line in ascii_term(t, doc.d) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{normalize, PdElement};
    use crate::tensoraction::GeneratorToken::{E, S, Y};

    #[test]
    fn ascii_pictures() {
        let y1 = ElementDocument::from_affine(&normalize(&[Y(1)], 2).unwrap());
        assert_eq!(render_ascii(&y1), "(1)\n 1   2\n *   |\n |   |\n |   |\n 1'  2'\n");
        let e = ElementDocument::from_affine(&normalize(&[E(1)], 2).unwrap());
        let pic = render_ascii(&e);
        assert!(pic.contains('∪') && pic.contains('∩'), "{pic}");
        let s = ElementDocument::from_affine(&normalize(&[S(1)], 2).unwrap());
        let pic = render_ascii(&s);
        assert!(pic.contains('\\') && pic.contains('/'), "{pic}");
        assert_eq!(render_ascii(&ElementDocument::from_affine(&PdElement::zero(2))), "(0)\n");
    }

    #[test]
    fn svg_is_deterministic() {
        let x = normalize(&[S(1), Y(2), E(1), Y(1)], 2).unwrap();
        let doc = ElementDocument::from_affine(&x);
        let a = render_svg(&doc);
        assert_eq!(a, render_svg(&doc.clone()));
        assert!(a.starts_with("<?xml") && a.contains("version=\"1.1\""));
        assert_eq!(a.matches("class=\"term\"").count(), x.terms().len());
        let zero = render_svg(&ElementDocument::from_affine(&PdElement::zero(2)));
        assert!(zero.contains(">0</text>"));
    }
}
