//! Minimal SVG scatter/line plots written by hand.

use std::fmt::Write;

const PANEL: f64 = 480.0;

#[derive(Clone, Debug)]
pub enum Mark {
    Dots { radius: f64 },
    Line,
}

#[derive(Clone, Debug)]
pub struct Series {
    pub points: Vec<(f64, f64)>,
    pub color: &'static str,
    pub mark: Mark,
}

impl Series {
    pub fn dots(points: Vec<(f64, f64)>, color: &'static str) -> Self {
        Self { points, color, mark: Mark::Dots { radius: 2.5 } }
    }

    pub fn line(points: Vec<(f64, f64)>, color: &'static str) -> Self {
        Self { points, color, mark: Mark::Line }
    }
}

/// How a panel's data extents become its frame.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Layout {
    /// the data extents as they are
    #[default]
    Fit,
    /// origin in the centre, each axis scaled on its own
    Centred,
    /// origin in the centre, equal scale on both axes
    Square,
}

/// One panel: data coordinates mapped into a square with a 5% margin
/// around the data extents.
#[derive(Clone, Debug, Default)]
pub struct Panel {
    pub title: String,
    pub series: Vec<Series>,
    pub layout: Layout,
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn map(&self, (x, y): (f64, f64), dx: f64) -> (f64, f64) {
        let sx = (x - self.x0) / (self.x1 - self.x0) * PANEL;
        let sy = (self.y1 - y) / (self.y1 - self.y0) * PANEL;
        (dx + sx, 30.0 + sy)
    }
}

impl Panel {
    pub fn new(title: impl Into<String>, layout: Layout) -> Self {
        Self { title: title.into(), series: Vec::new(), layout }
    }

    pub fn push(&mut self, s: Series) -> &mut Self {
        self.series.push(s);
        self
    }

    fn frame(&self) -> Frame {
        let pts = self.series.iter().flat_map(|s| s.points.iter()).filter(|p| p.0.is_finite() && p.1.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
        }
        match self.layout {
            Layout::Fit => {}
            Layout::Centred => {
                let (rx, ry) = (x0.abs().max(x1.abs()).max(1e-9), y0.abs().max(y1.abs()).max(1e-9));
                (x0, x1, y0, y1) = (-rx, rx, -ry, ry);
            }
            Layout::Square => {
                let r = x0.abs().max(x1.abs()).max(y0.abs()).max(y1.abs()).max(1e-9);
                (x0, x1, y0, y1) = (-r, r, -r, r);
            }
        }
        let (w, h) = ((x1 - x0).max(1e-9), (y1 - y0).max(1e-9));
        Frame { x0: x0 - 0.05 * w, x1: x1 + 0.05 * w, y0: y0 - 0.05 * h, y1: y1 + 0.05 * h }
    }

    fn render(&self, out: &mut String, dx: f64) {
        let f = self.frame();
        let _ = writeln!(
            out,
            r#"<rect x="{dx:.1}" y="30.0" width="{PANEL:.1}" height="{PANEL:.1}" fill="white" stroke="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="20.0" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
            dx + PANEL / 2.0,
            escape(&self.title)
        );
        // axes through the origin when it is in view
        if f.x0 < 0.0 && f.x1 > 0.0 {
            let (a, b) = (f.map((0.0, f.y0), dx), f.map((0.0, f.y1), dx));
            let _ = writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb"/>"##, a.0, a.1, b.0, b.1);
        }
        if f.y0 < 0.0 && f.y1 > 0.0 {
            let (a, b) = (f.map((f.x0, 0.0), dx), f.map((f.x1, 0.0), dx));
            let _ = writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb"/>"##, a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="10">x: [{:.4}, {:.4}]  y: [{:.4}, {:.4}]</text>"#,
            dx + 4.0,
            30.0 + PANEL + 14.0,
            f.x0,
            f.x1,
            f.y0,
            f.y1
        );
        for s in &self.series {
            let pts: Vec<(f64, f64)> = s
                .points
                .iter()
                .filter(|p| p.0.is_finite() && p.1.is_finite())
                .map(|&p| f.map(p, dx))
                .collect();
            match s.mark {
                Mark::Dots { radius } => {
                    for (x, y) in pts {
                        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{radius}" fill="{}"/>"#, s.color);
                    }
                }
                Mark::Line => {
                    if pts.len() < 2 {
                        continue;
                    }
                    let path: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let _ = writeln!(
                        out,
                        r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
                        path.join(" "),
                        s.color
                    );
                }
            }
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Panels laid out side by side.
pub fn render(panels: &[Panel]) -> String {
    let gap = 20.0;
    let width = panels.len() as f64 * (PANEL + gap) + gap;
    let height = PANEL + 60.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.1} {height:.1}" width="{width:.0}" height="{height:.0}">"#
    );
    for (i, p) in panels.iter().enumerate() {
        p.render(&mut out, gap + i as f64 * (PANEL + gap));
    }
    out.push_str("</svg>\n");
    out
}

/// Splits a path into upper and lower mirror images, for `|y| = f(x)`
/// curves.
pub fn mirrored(points: &[(f64, f64)]) -> [Vec<(f64, f64)>; 2] {
    [points.to_vec(), points.iter().map(|&(x, y)| (x, -y)).collect()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centred_frames_put_the_origin_in_the_middle() {
        let mut p = Panel::new("t", Layout::Square);
        p.push(Series::dots(vec![(1.0, 2.0), (3.0, 0.5)], "black"));
        let f = p.frame();
        assert_eq!(f.x0, -f.x1);
        assert_eq!(f.y0, -f.y1);
        assert!((f.x1 - 3.3).abs() < 1e-12);
        assert!((f.y1 - 3.3).abs() < 1e-12);

        p.layout = Layout::Centred;
        let f = p.frame();
        assert!((f.x1 - 3.3).abs() < 1e-12);
        assert!((f.y1 - 2.2).abs() < 1e-12);
        assert_eq!(f.y0, -f.y1);
    }

    #[test]
    fn output_is_well_formed_and_deterministic() {
        let mut p = Panel::new("a < b", Layout::Fit);
        p.push(Series::dots(vec![(0.0, 0.0), (1.0, 1.0)], "black"));
        p.push(Series::line(vec![(0.0, 1.0), (1.0, 0.0)], "red"));
        let a = render(&[p.clone(), p.clone()]);
        assert_eq!(a, render(&[p.clone(), p]));
        assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<circle").count(), 4);
        assert!(a.contains("a &lt; b"));
    }
}
