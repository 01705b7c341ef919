//! SVG scenes of the tessellation in the half-plane and in the disk.
//!
//! All geometry is decided in exact arithmetic; coordinates are converted to
//! pixels and printed with three decimals only when the document is written,
//! so a fixed configuration always yields the same bytes.
//!
//! Element conventions: every circle of the system is a `<circle>`, every
//! straight member (vertical lines, the disk's `y = 0` axis) is a `<line>`,
//! and the model boundary (real axis, unit circle) is a `<path>`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::disk::{enumerate_disk, DiskSymbol};
use crate::enumeration::{enumerate_halfplane, AdmissibleCircle, HalfPlaneItem, VerticalLine};
use crate::error::{Error, Result};
use crate::rational::{format_rational, int, to_f64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    HalfPlane,
    Disk,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half-plane" => Ok(Model::HalfPlane),
            "disk" => Ok(Model::Disk),
            _ => Err(Error::Parse(format!("unknown model {s:?}; expected half-plane or disk"))),
        }
    }
}

/// Closed rectangle `[x_min, x_max] × [y_min, y_max]` of the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Viewport {
    pub x_min: BigRational,
    pub x_max: BigRational,
    pub y_min: BigRational,
    pub y_max: BigRational,
}

impl Viewport {
    pub fn new(x_min: BigRational, x_max: BigRational, y_min: BigRational, y_max: BigRational) -> Result<Self> {
        let v = Self { x_min, x_max, y_min, y_max };
        v.validate()?;
        Ok(v)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_min >= self.x_max || self.y_min >= self.y_max {
            return Err(Error::Config(format!(
                "empty viewport [{}, {}] x [{}, {}]",
                format_rational(&self.x_min),
                format_rational(&self.x_max),
                format_rational(&self.y_min),
                format_rational(&self.y_max)
            )));
        }
        Ok(())
    }

    /// Whether the bounding box of the circle meets the viewport.
    pub fn meets_circle(&self, cx: &BigRational, cy: &BigRational, r: &BigRational) -> bool {
        cx - r <= self.x_max && cx + r >= self.x_min && cy - r <= self.y_max && cy + r >= self.y_min
    }

    pub fn contains_x(&self, x: &BigRational) -> bool {
        *x >= self.x_min && *x <= self.x_max
    }

    pub fn contains_y(&self, y: &BigRational) -> bool {
        *y >= self.y_min && *y <= self.y_max
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub model: Model,
    pub viewport: Viewport,
    /// Width of the output in pixels; the height follows the viewport's aspect.
    pub width_px: u32,
    pub stroke_width: f64,
    /// Largest curvature drawn.
    pub n_max: i64,
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        self.viewport.validate()?;
        if self.n_max < 1 {
            return Err(Error::Config(format!("n_max must be at least 1, got {}", self.n_max)));
        }
        if self.width_px == 0 {
            return Err(Error::Config("width must be positive".into()));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::Config(format!("stroke width must be positive, got {}", self.stroke_width)));
        }
        Ok(())
    }
}

/// The members of the half-plane system meeting a viewport.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlaneScene {
    pub lines: Vec<VerticalLine>,
    pub circles: Vec<AdmissibleCircle>,
}

/// The members of the disk system meeting a viewport.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskScene {
    pub axis: bool,
    pub circles: Vec<DiskSymbol>,
}

pub fn halfplane_scene(viewport: &Viewport, n_max: i64) -> Result<HalfPlaneScene> {
    viewport.validate()?;
    // Radii are at most 1, so centres of visible circles lie within 1 of the window.
    let lo = &viewport.x_min - int(1);
    let hi = &viewport.x_max + int(2);
    let zero = BigRational::zero();
    let mut scene = HalfPlaneScene { lines: Vec::new(), circles: Vec::new() };
    for item in enumerate_halfplane(n_max, &lo, &hi)? {
        match item {
            HalfPlaneItem::Line(line) if viewport.contains_x(&line.position()) => scene.lines.push(line),
            HalfPlaneItem::Circle(c) if viewport.meets_circle(&c.center(), &zero, &c.radius()) => {
                scene.circles.push(c)
            }
            _ => {}
        }
    }
    Ok(scene)
}

pub fn disk_scene(viewport: &Viewport, n_max: i64) -> Result<DiskScene> {
    viewport.validate()?;
    let mut scene = DiskScene { axis: false, circles: Vec::new() };
    for d in enumerate_disk(n_max)? {
        match (d.center(), d.radius()) {
            (Some((cx, cy)), Some(r)) => {
                if viewport.meets_circle(&cx, &cy, &r) {
                    scene.circles.push(d);
                }
            }
            _ => scene.axis = viewport.contains_y(&BigRational::zero()),
        }
    }
    Ok(scene)
}

struct Canvas {
    viewport: Viewport,
    scale: BigRational,
    width: u32,
    height: u32,
}

impl Canvas {
    fn new(viewport: &Viewport, width: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::from(width)) / (&viewport.x_max - &viewport.x_min);
        let height = to_f64(&((&viewport.y_max - &viewport.y_min) * &scale)).round().max(1.0) as u32;
        Self { viewport: viewport.clone(), scale, width, height }
    }

    fn px(&self, x: &BigRational) -> String {
        num(&((x - &self.viewport.x_min) * &self.scale))
    }

    fn py(&self, y: &BigRational) -> String {
        num(&((&self.viewport.y_max - y) * &self.scale))
    }

    fn len(&self, r: &BigRational) -> String {
        num(&(r * &self.scale))
    }
}

fn num(r: &BigRational) -> String {
    let s = format!("{:.3}", to_f64(r));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn header(out: &mut String, canvas: &Canvas, config: &RenderConfig) {
    let (w, h) = (canvas.width, canvas.height);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<defs><clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\"/></clipPath></defs>");
    let _ = writeln!(
        out,
        "<g clip-path=\"url(#viewport)\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\">",
        config.stroke_width
    );
}

fn footer(out: &mut String) {
    out.push_str("</g>\n</svg>\n");
}

/// SVG document for the configured model and viewport.
pub fn render_svg(config: &RenderConfig) -> Result<String> {
    config.validate()?;
    let canvas = Canvas::new(&config.viewport, config.width_px);
    let vp = &config.viewport;
    let mut out = String::new();
    header(&mut out, &canvas, config);
    match config.model {
        Model::HalfPlane => {
            let scene = halfplane_scene(vp, config.n_max)?;
            let zero = BigRational::zero();
            if vp.contains_y(&zero) {
                let _ = writeln!(
                    out,
                    "<path class=\"boundary\" d=\"M {} {} H {}\"/>",
                    canvas.px(&vp.x_min),
                    canvas.py(&zero),
                    canvas.px(&vp.x_max)
                );
            }
            for line in &scene.lines {
                let x = canvas.px(&line.position());
                let _ = writeln!(
                    out,
                    "<line class=\"geodesic\" data-k=\"{}\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\"/>",
                    line.k,
                    canvas.py(&vp.y_max),
                    canvas.py(&vp.y_min)
                );
            }
            for c in &scene.circles {
                let _ = writeln!(
                    out,
                    "<circle class=\"geodesic\" data-k=\"{}\" data-n=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    c.k,
                    c.n,
                    canvas.px(&c.center()),
                    canvas.py(&zero),
                    canvas.len(&c.radius())
                );
            }
        }
        Model::Disk => {
            let scene = disk_scene(vp, config.n_max)?;
            let (zero, one) = (BigRational::zero(), int(1));
            let _ = writeln!(
                out,
                "<path class=\"boundary\" d=\"M {right} {cy} A {r} {r} 0 1 0 {left} {cy} A {r} {r} 0 1 0 {right} {cy}\"/>",
                right = canvas.px(&one),
                left = canvas.px(&-one.clone()),
                cy = canvas.py(&zero),
                r = canvas.len(&one),
            );
            if scene.axis {
                let _ = writeln!(
                    out,
                    "<line class=\"geodesic\" x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"/>",
                    canvas.px(&vp.x_min),
                    canvas.px(&vp.x_max),
                    y = canvas.py(&zero)
                );
            }
            for d in &scene.circles {
                let (cx, cy) = d.center().expect("proper circle");
                let r = d.radius().expect("proper circle");
                let _ = writeln!(
                    out,
                    "<circle class=\"geodesic\" data-p=\"{}\" data-q=\"{}\" data-n=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    d.p,
                    d.q,
                    d.n,
                    canvas.px(&cx),
                    canvas.py(&cy),
                    canvas.len(&r)
                );
            }
        }
    }
    footer(&mut out);
    debug_assert!(!out.contains('\r'));
    Ok(out)
}

/// Number of `<circle` elements in an SVG document.
pub fn count_circle_elements(svg: &str) -> usize {
    svg.matches("<circle ").count()
}

/// Number of `<line` elements in an SVG document.
pub fn count_line_elements(svg: &str) -> usize {
    svg.matches("<line ").count()
}
