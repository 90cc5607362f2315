//! Lattice path drawings as ASCII art or SVG.

use std::fmt::Write;

use arcperm_core::{Step, StepPath};

/// Pixels per unit step in SVG output.
const UNIT: i64 = 24;
const MARGIN: i64 = 24;

/// Band a step is drawn in: band `h` spans heights `h..h+1`, and a flat step
/// at height `h` sits on the floor of band `h`.
fn band(height: i64, step: Step) -> i64 {
    match step {
        Step::Up | Step::Flat => height,
        Step::Down => height - 1,
    }
}

fn glyph(step: Step) -> char {
    match step {
        Step::Up => '/',
        Step::Down => '\\',
        Step::Flat => '_',
    }
}

/// Start height of every step.
fn starts(path: &StepPath) -> Vec<i64> {
    let mut h = 0;
    path.steps()
        .iter()
        .map(|s| {
            let start = h;
            h += s.delta();
            start
        })
        .collect()
}

/// Column of the first step of every vertex.
fn group_columns(path: &StepPath) -> Vec<usize> {
    path.group_sizes()
        .iter()
        .scan(0, |col, &size| {
            let here = *col;
            *col += size;
            Some(here)
        })
        .collect()
}

/// One text row per band, top band first, followed by the vertex indices
/// written vertically under the first step of each vertex.
pub fn ascii(path: &StepPath) -> String {
    let steps = path.steps();
    let from = starts(path);
    let bands: Vec<i64> = steps.iter().zip(&from).map(|(&s, &h)| band(h, s)).collect();
    let (Some(&top), Some(&bottom)) = (bands.iter().max(), bands.iter().min()) else {
        return String::new();
    };
    let mut out = String::new();
    for row in (bottom..=top).rev() {
        let line: String = steps
            .iter()
            .zip(&bands)
            .map(|(&s, &b)| if b == row { glyph(s) } else { ' ' })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }

    let columns = group_columns(path);
    let digits = columns.len().to_string().len();
    for place in (0..digits).rev() {
        let mut line = vec![' '; steps.len()];
        for (i, &col) in columns.iter().enumerate() {
            let label = (i + 1).to_string();
            let pos = label.len() as isize - 1 - place as isize;
            if pos >= 0 {
                line[col] = label.as_bytes()[pos as usize] as char;
            }
        }
        let line: String = line.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A polyline over a unit grid, with each vertex index centred under the
/// steps it contributes.
pub fn svg(path: &StepPath) -> String {
    let width = path.len() as i64;
    let (low, high) = (path.min_height(), path.max_height());
    let rows = high - low;
    let px = |x: i64| MARGIN + x * UNIT;
    let py = |h: i64| MARGIN + (high - h) * UNIT;
    let total_w = 2 * MARGIN + width * UNIT;
    let total_h = 2 * MARGIN + rows * UNIT + UNIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#ccc" stroke-width="1">"##);
    for x in 0..=width {
        let _ = writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(high),
            py(low)
        );
    }
    for h in low..=high {
        let _ = writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            py(h),
            px(0),
            px(width)
        );
    }
    let _ = writeln!(out, "</g>");

    let mut points = vec![format!("{},{}", px(0), py(0))];
    let mut h = 0;
    for (x, s) in path.steps().iter().enumerate() {
        h += s.delta();
        points.push(format!("{},{}", px(x as i64 + 1), py(h)));
    }
    let _ = writeln!(
        out,
        r##"<polyline fill="none" stroke="#000" stroke-width="2" points="{}"/>"##,
        points.join(" ")
    );

    let label_y = py(low) + UNIT * 3 / 4;
    for (i, (&col, &size)) in group_columns(path)
        .iter()
        .zip(path.group_sizes())
        .enumerate()
    {
        let cx = px(col as i64) + size as i64 * UNIT / 2;
        let _ = writeln!(
            out,
            r#"<text x="{cx}" y="{label_y}" font-family="monospace" font-size="12" text-anchor="middle">{}</text>"#,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}
