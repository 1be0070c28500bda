use std::fmt::Write;

use super::{Patch, Tile};

fn cell_lines(t: &Tile) -> [String; 3] {
    [
        format!("⌜{}⌝", t.top),
        format!("{}·{}", t.left, t.right),
        format!("⌞{}⌟", t.bottom),
    ]
}

/// Three text lines per row of tiles, top row first; empty cells are blank.
pub fn render_ascii(p: &Patch) -> String {
    let width = (0..p.height())
        .flat_map(|y| (0..p.width()).map(move |x| (x, y)))
        .filter_map(|(x, y)| p.get(x, y))
        .flat_map(|t| cell_lines(t).map(|l| l.chars().count()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for y in (0..p.height()).rev() {
        let mut lines = [String::new(), String::new(), String::new()];
        for x in 0..p.width() {
            let cell = p.get(x, y).map(cell_lines);
            for (k, line) in lines.iter_mut().enumerate() {
                if x > 0 {
                    line.push(' ');
                }
                let text = cell.as_ref().map_or("", |c| c[k].as_str());
                line.push_str(text);
                line.extend(std::iter::repeat_n(' ', width - text.chars().count()));
            }
        }
        for line in lines {
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

const CELL: usize = 140;
const MARGIN: usize = 10;

/// Standalone SVG document: one `rect` and four edge labels per tile.
pub fn render_svg(p: &Patch) -> String {
    let w = p.width() * CELL + 2 * MARGIN;
    let h = p.height() * CELL + 2 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    for y in (0..p.height()).rev() {
        for x in 0..p.width() {
            let Some(t) = p.get(x, y) else { continue };
            let px = MARGIN + x * CELL;
            let py = MARGIN + (p.height() - 1 - y) * CELL;
            let (cx, cy) = (px + CELL / 2, py + CELL / 2);
            writeln!(
                out,
                r#"  <rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" style="fill:#f7f5ee;stroke:#333333;stroke-width:1"/>"#
            )
            .unwrap();
            let label = |out: &mut String, x: usize, y: usize, anchor: &str, text: &str| {
                writeln!(
                    out,
                    r#"  <text x="{x}" y="{y}" style="font-family:monospace;font-size:10px;text-anchor:{anchor}">{}</text>"#,
                    escape(text)
                )
                .unwrap();
            };
            label(&mut out, cx, py + 14, "middle", t.top.as_str());
            label(&mut out, px + CELL - 4, cy + 4, "end", t.right.as_str());
            label(&mut out, px + 4, cy + 4, "start", t.left.as_str());
            label(&mut out, cx, py + CELL - 6, "middle", t.bottom.as_str());
        }
    }
    out.push_str("</svg>\n");
    out
}
