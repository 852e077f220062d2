//! Minimal SVG scatter and histogram renderings. The CSVs are the ground
//! truth; these exist so a run can be eyeballed without a plotting stack.
//! Output is plain string assembly with fixed-precision coordinates and no
//! timestamps, so identical data yields identical bytes.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 25.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 55.0;
const POINT_COLOR: &str = "#33658a";
const AXIS_COLOR: &str = "#333333";

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        MARGIN_LEFT + (v - self.x_min) / (self.x_max - self.x_min) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM
            - (v - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn open_svg(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{title}</text>",
        WIDTH / 2.0
    );
}

fn axes(out: &mut String, frame: &Frame, x_label: &str, y_label: &str, x_ticks: &[f64], y_ticks: &[f64]) {
    let x0 = frame.x(frame.x_min);
    let x1 = frame.x(frame.x_max);
    let y0 = frame.y(frame.y_min);
    let y1 = frame.y(frame.y_max);
    let _ = writeln!(
        out,
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"{AXIS_COLOR}\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"{AXIS_COLOR}\"/>"
    );
    for &t in x_ticks {
        let x = frame.x(t);
        let _ = writeln!(
            out,
            "<line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"{AXIS_COLOR}\"/>",
            y0 + 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">{t}</text>",
            y0 + 18.0
        );
    }
    for &t in y_ticks {
        let y = frame.y(t);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"{AXIS_COLOR}\"/>",
            x0 - 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">{t}</text>",
            x0 - 9.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\">{x_label}</text>",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        "<text x=\"18\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">{y_label}</text>",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );
}

/// Scatter of `values` against their index, y fixed to [-1.05, 1.05].
pub fn tau_scatter_svg(title: &str, y_label: &str, values: &[f64]) -> String {
    let n = values.len().max(2);
    let frame = Frame { x_min: 0.0, x_max: (n - 1) as f64, y_min: -1.05, y_max: 1.05 };
    let mut out = String::new();
    open_svg(&mut out, title);
    let x_ticks: Vec<f64> = (0..=4).map(|k| ((n - 1) as f64 * k as f64 / 4.0).round()).collect();
    axes(&mut out, &frame, "state index", y_label, &x_ticks, &[-1.0, -0.5, 0.0, 0.5, 1.0]);
    let zero_y = frame.y(0.0);
    let _ = writeln!(
        out,
        "<line x1=\"{:.2}\" y1=\"{zero_y:.2}\" x2=\"{:.2}\" y2=\"{zero_y:.2}\" \
         stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>",
        frame.x(frame.x_min),
        frame.x(frame.x_max)
    );
    for (i, &v) in values.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2\" fill=\"{POINT_COLOR}\" fill-opacity=\"0.6\"/>",
            frame.x(i as f64),
            frame.y(v.clamp(-1.05, 1.05))
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Bar rendering of an equal-width histogram over [0, 1].
pub fn histogram_svg(title: &str, x_label: &str, edges: &[f64], counts: &[u64]) -> String {
    let max_count = counts.iter().copied().max().unwrap_or(1).max(1) as f64;
    let frame = Frame { x_min: 0.0, x_max: 1.0, y_min: 0.0, y_max: max_count * 1.05 };
    let mut out = String::new();
    open_svg(&mut out, title);
    let mut y_ticks = vec![0.0];
    for k in 1..=4 {
        y_ticks.push((max_count * k as f64 / 4.0).round());
    }
    axes(&mut out, &frame, x_label, "count", &[0.0, 0.25, 0.5, 0.75, 1.0], &y_ticks);
    for (k, &count) in counts.iter().enumerate() {
        let x = frame.x(edges[k]);
        let w = frame.x(edges[k + 1]) - x;
        let y = frame.y(count as f64);
        let h = frame.y(0.0) - y;
        let _ = writeln!(
            out,
            "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{:.2}\" height=\"{h:.2}\" \
             fill=\"{POINT_COLOR}\" fill-opacity=\"0.8\" stroke=\"white\" stroke-width=\"0.5\"/>",
            w.max(0.0)
        );
    }
    out.push_str("</svg>\n");
    out
}
