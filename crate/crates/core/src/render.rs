//! Deterministic SVG and text pictures of tilings, particle configurations and matchings.

use std::fmt::Write;

use crate::error::Result;
use crate::extended::{Edge, MatchingWindow, Vertex};
use crate::half::Half;
use crate::steep::{Going, InterlacedSeq, Orient, TilingWindow};

/// Fill of north- and east-going dominos.
pub const GREEN: &str = "#2e8b57";
/// Fill of south- and west-going dominos.
pub const ORANGE: &str = "#ff8c00";

const UNIT: i64 = 20;

fn fill(g: Going) -> &'static str {
    if g.covers_empty() {
        GREEN
    } else {
        ORANGE
    }
}

/// One `rect` per domino, lattice `y` pointing up. With `particles`, a disc (occupied) or ring
/// (empty) marks each unit square of the window.
pub fn tiling_svg(t: &TilingWindow, particles: bool) -> Result<String> {
    let a = t.half_width();
    let two_l = t.word().len() as i64;
    let (x0, y_top) = (-a, a);
    let (w, h) = (2 * a, 2 * a + two_l);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w * UNIT,
        h * UNIT,
        w * UNIT,
        h * UNIT
    )
    .unwrap();
    let px = |x: i64| (x - x0) * UNIT;
    let py = |y: i64| (y_top - y) * UNIT;
    for d in t.dominos() {
        let [s1, s2] = d.squares();
        let (left, top) = (s1.0.min(s2.0), s1.1.max(s2.1) + 1);
        let (dw, dh) = match d.orient {
            Orient::H => (2, 1),
            Orient::V => (1, 2),
        };
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="black" stroke-width="1"/>"#,
            px(left),
            py(top),
            dw * UNIT,
            dh * UNIT,
            fill(d.going)
        )
        .unwrap();
    }
    if particles {
        for sq in t.window_squares() {
            let occupied = t.is_occupied(sq)?;
            let (cx, cy) = (px(sq.0) + UNIT / 2, py(sq.1 + 1) + UNIT / 2);
            let style = if occupied { r#"fill="black""# } else { r#"fill="white" stroke="black""# };
            writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{}" {style}/>"#, UNIT / 5).unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// One character per unit square, top row first: the going-type of its domino, `.` outside the
/// strip window.
pub fn tiling_ascii(t: &TilingWindow) -> String {
    let a = t.half_width();
    let two_l = t.word().len() as i64;
    let mut out = String::new();
    for b in (-a - two_l..a).rev() {
        let line: String = (-a..a)
            .map(|x| match t.domino_at((x, b)) {
                Some(d) if t.in_window((x, b)) => match d.going {
                    Going::N => 'N',
                    Going::E => 'E',
                    Going::S => 'S',
                    Going::W => 'W',
                },
                _ => '.',
            })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One row per diagonal `m`: `•` for occupied and `∘` for empty sites `x ∈ ℤ + ½`, `|x| < A`,
/// increasing to the right.
pub fn particle_ascii(s: &InterlacedSeq, half_width: i64) -> String {
    let mut out = String::new();
    let width = s.word().len().to_string().len();
    for m in 0..=s.word().len() {
        let maya = s.maya(m);
        let row: String = (-half_width..half_width)
            .map(|a| if maya.is_occupied(Half::int(a) + Half::HALF) { '•' } else { '∘' })
            .collect();
        writeln!(out, "{m:>width$} {row}").unwrap();
    }
    out
}

/// One `line` per edge of `G_◊` inside the window, matched edges bold; vertices of the columns
/// `V_j` matched to the left are filled, and the dotted path traces `Y`.
pub fn matching_svg(m: &MatchingWindow) -> String {
    let g = m.geometry();
    let a = m.half_height();
    let (lo, hi) = (Half::int(-a), Half::int(a));
    let x_max = *g.abscissas.last().expect("columns");
    let px = |x: Half| (x.twice() + 2) * UNIT;
    let py = |y: Half| (hi.twice() - y.twice() + 2) * UNIT;
    let (w, h) = (px(x_max) + 2 * UNIT, py(lo) + 2 * UNIT);
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#)
        .unwrap();
    let pos = |v: Vertex| (px(g.abscissas[v.col]), py(v.y));
    for col in 0..g.columns() - 1 {
        for y in g.ordinates(col, lo, hi) {
            let v = Vertex::new(col, y);
            for u in g.neighbours(v) {
                if u.col != col + 1 || u.y < lo || u.y > hi {
                    continue;
                }
                let e = Edge { left: v, right: u };
                let ((x1, y1), (x2, y2)) = (pos(v), pos(u));
                let style = if m.edges().contains(&e) {
                    r##"stroke="#8b4513" stroke-width="6""##
                } else {
                    r##"stroke="#999999" stroke-width="1""##
                };
                writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#).unwrap();
            }
        }
    }
    for col in 0..g.columns() {
        for y in g.ordinates(col, lo, hi) {
            let v = Vertex::new(col, y);
            let (cx, cy) = pos(v);
            let style =
                if col % 2 == 0 && m.left_matched(v) { r#"fill="black""# } else { r#"fill="white" stroke="black""# };
            writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{}" {style}/>"#, UNIT / 4).unwrap();
        }
    }
    let path: Vec<String> = (0..g.columns()).map(|c| format!("{},{}", px(g.abscissas[c]), py(g.zero[c]))).collect();
    writeln!(out, r#"<polyline points="{}" fill="none" stroke="red" stroke-dasharray="4 4"/>"#, path.join(" "))
        .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::minimal_matching;
    use crate::steep::{minimal_tiling, SignWord};

    #[test]
    fn one_rect_per_domino() {
        let w: SignWord = "+++++---++".parse().unwrap();
        let t = minimal_tiling(&w, 8).unwrap();
        let svg = tiling_svg(&t, false).unwrap();
        assert_eq!(svg.matches("<rect").count(), t.dominos().len());
        assert_eq!(tiling_svg(&t, false).unwrap(), svg);
        assert!(svg.contains(GREEN) && svg.contains(ORANGE));
    }

    #[test]
    fn ascii_particles_of_minimal() {
        let w: SignWord = "+-".parse().unwrap();
        let s = InterlacedSeq::empty(&w);
        assert_eq!(particle_ascii(&s, 2), "0 ••∘∘\n1 •••∘\n2 ••••\n");
    }

    #[test]
    fn matching_picture_is_stable() {
        let m = minimal_matching(&"h+,h-".parse().unwrap(), 4).unwrap();
        let svg = matching_svg(&m);
        assert_eq!(svg, matching_svg(&m));
        assert!(svg.matches(r#"stroke-width="6""#).count() > 0);
    }
}
