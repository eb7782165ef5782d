//! Pictures of a maximal path: the triangle, the skipped points, the path
//! itself and the triangles removed by both corner-cutting recursions.

use std::fmt::Write as _;

use crate::complex::{mu_side, MultiplicityTrace};
use crate::geometry::{lattice_points, LatticePoint, Side};
use crate::path::{build_maximal_path, LatticePath, MarkedConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Show {
    pub path: bool,
    pub marked_points: bool,
    pub subdivision: bool,
    pub labels: bool,
}

impl Default for Show {
    fn default() -> Self {
        Self {
            path: true,
            marked_points: true,
            subdivision: true,
            labels: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    pub show: Show,
    /// Pixels per lattice unit; SVG only.
    pub scale: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            format: Format::Svg,
            show: Show::default(),
            scale: 60,
        }
    }
}

/// Everything a picture needs, computed once.
#[derive(Debug, Clone)]
pub struct Scene {
    pub config: MarkedConfig,
    pub path: LatticePath,
    pub traces: [MultiplicityTrace; 2],
}

impl Scene {
    pub fn new(config: MarkedConfig) -> Self {
        let path = build_maximal_path(&config);
        let traces = Side::BOTH.map(|side| mu_side(&path, side).1);
        Self {
            config,
            path,
            traces,
        }
    }

    pub fn mu(&self) -> u64 {
        self.traces.iter().map(MultiplicityTrace::replay).product()
    }
}

pub fn render(scene: &Scene, spec: &RenderSpec) -> String {
    match spec.format {
        Format::Svg => render_svg(scene, spec),
        Format::Ascii => render_ascii(scene, spec),
    }
}

const MARGIN: i64 = 30;

fn render_svg(scene: &Scene, spec: &RenderSpec) -> String {
    let d = scene.config.degree();
    let scale = i64::from(spec.scale.max(1));
    let size = 2 * MARGIN + d * scale;
    let px = |p: LatticePoint| (MARGIN + p.x * scale, MARGIN + (d - p.y) * scale);
    let poly = |pts: &[LatticePoint]| {
        pts.iter()
            .map(|&p| {
                let (x, y) = px(p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{size}" height="{size}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <polygon class="newton" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        poly(&scene.config.triangle().vertices())
    );

    if spec.show.subdivision {
        for trace in &scene.traces {
            let (class, fill) = match trace.side {
                Side::Plus => ("cut plus", "#cfe3f7"),
                Side::Minus => ("cut minus", "#f7dccf"),
            };
            let _ = writeln!(out, r#"  <g class="{class}">"#);
            for step in &trace.steps {
                let _ = writeln!(
                    out,
                    r#"    <polygon points="{}" fill="{fill}" stroke="gray" stroke-width="1"/>"#,
                    poly(&step.triangle)
                );
                if spec.show.labels {
                    let (cx, cy) = step
                        .triangle
                        .iter()
                        .map(|&p| px(p))
                        .fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
                    let _ = writeln!(
                        out,
                        r#"    <text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>"#,
                        cx / 3,
                        cy / 3 + 4,
                        step.factor
                    );
                }
            }
            let _ = writeln!(out, "  </g>");
        }
    }

    for p in lattice_points(scene.config.triangle()) {
        let (x, y) = px(p);
        let _ = writeln!(out, r#"  <circle class="lattice" cx="{x}" cy="{y}" r="2" fill="gray"/>"#);
    }

    if spec.show.path {
        let _ = writeln!(
            out,
            r#"  <polyline class="path" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
            poly(scene.path.points())
        );
        for &p in scene.path.points() {
            let (x, y) = px(p);
            let _ = writeln!(out, r#"  <circle class="vertex" cx="{x}" cy="{y}" r="4" fill="black"/>"#);
        }
    }

    if spec.show.marked_points {
        for p in scene.config.marked_points() {
            let (x, y) = px(p);
            let _ = writeln!(out, r#"  <g class="marked">"#);
            let _ = writeln!(
                out,
                r#"    <circle cx="{x}" cy="{y}" r="6" fill="white" stroke="red" stroke-width="2"/>"#
            );
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="2"/>"#,
                x - 5,
                y - 5,
                x + 5,
                y + 5
            );
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="2"/>"#,
                x - 5,
                y + 5,
                x + 5,
                y - 5
            );
            let _ = writeln!(out, "  </g>");
        }
    }

    if spec.show.labels {
        let _ = writeln!(
            out,
            r#"  <text class="caption" x="{}" y="{}" font-size="14">mu = {} x {} = {}</text>"#,
            MARGIN,
            MARGIN / 2 + 4,
            scene.traces[0].replay(),
            scene.traces[1].replay(),
            scene.mu()
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Grid picture with `d+1` rows: `o` path vertex, `x` marked point, `.`
/// other lattice point. Trace lines follow the grid.
fn render_ascii(scene: &Scene, spec: &RenderSpec) -> String {
    let d = scene.config.degree();
    let marked = scene.config.marked_points();
    let on_path = |p: &LatticePoint| scene.path.points().contains(p);
    let mut out = String::new();
    for y in (0..=d).rev() {
        let row: Vec<String> = (0..=d - y)
            .map(|x| {
                let p = LatticePoint::new(x, y);
                if spec.show.marked_points && marked.contains(&p) {
                    "x".to_string()
                } else if spec.show.path && on_path(&p) {
                    "o".to_string()
                } else {
                    ".".to_string()
                }
            })
            .collect();
        let _ = writeln!(out, "{:>3} | {}", y, row.join(" "));
    }
    let _ = writeln!(out, "    +-{}", "--".repeat(d as usize));
    if spec.show.path {
        let pts: Vec<String> = scene.path.points().iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "path ({} steps): {}", scene.path.len(), pts.join(" "));
    }
    if spec.show.subdivision {
        for trace in &scene.traces {
            let factors: Vec<String> = trace.steps.iter().map(|s| s.factor.to_string()).collect();
            let _ = writeln!(
                out,
                "{}: {} = {}",
                trace.side,
                if factors.is_empty() { "1".to_string() } else { factors.join("*") },
                trace.replay()
            );
            if spec.show.labels {
                for step in &trace.steps {
                    let [a, b, c] = step.triangle;
                    let _ = writeln!(out, "  k={} T={} {} {} factor {}", step.pivot, a, b, c, step.factor);
                }
            }
        }
    }
    if spec.show.labels {
        let _ = writeln!(out, "mu = {}", scene.mu());
    }
    out
}
