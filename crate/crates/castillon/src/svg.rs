//! SVG figures.
//!
//! Output is plain text with every coordinate printed to 6 decimals, so equal
//! inputs give equal bytes. The frame of a triangle is the bounding box of its
//! four tritangent circles; all figures of one triangle share it. The y axis
//! is flipped so that the picture has the usual orientation.

use std::fmt::Write as _;

use castillon_core::brocard::{brocard_frame, shared_axis, BrocardInellipse};
use castillon_core::ccp_closed::solutions_for;
use castillon_core::centers;
use castillon_core::conic::Ellipse;
use castillon_core::geom::{bary_to_cartesian, cartesian_of_line, circle_for, CircleData, CircleTag};
use castillon_core::inconic::{inconic_from_perspector, solve_ccp_inconic};
use castillon_core::{HomoBary, Point, TriangleData};

use crate::problem::Problem;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    /// Both solutions on one tritangent circle.
    Inc,
    /// The same with the shared Brocard objects.
    Broc,
    /// All four circles with their Brocard axes and de Longchamps point.
    Excs,
    /// An inconic and its circularized image, stacked.
    Inconic,
}

const WIDTH_PX: f64 = 800.0;

const STYLE: &str = "\
.reference{fill:none;stroke:#000}\
.solution-t1{fill:none;stroke:#c0392b}\
.solution-t2{fill:none;stroke:#2471a3}\
.circle{fill:none;stroke:#555}\
.conic{fill:none;stroke:#7d3c98;stroke-dasharray:4 2}\
.axis{stroke:#1e8449}\
.lemoine{stroke:#b9770e}\
.marker{stroke:#000}";

/// Coordinate with 6 decimals, without a negative zero.
pub fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Math-space bounding box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub min: Point,
    pub max: Point,
}

impl Frame {
    pub fn for_triangle(t: &TriangleData) -> Frame {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for tag in CircleTag::ALL {
            let c = circle_for(t, tag);
            lo = Point::new(lo.x.min(c.center.x - c.radius), lo.y.min(c.center.y - c.radius));
            hi = Point::new(hi.x.max(c.center.x + c.radius), hi.y.max(c.center.y + c.radius));
        }
        let pad = 0.05 * (hi.x - lo.x).max(hi.y - lo.y);
        Frame { min: Point::new(lo.x - pad, lo.y - pad), max: Point::new(hi.x + pad, hi.y + pad) }
    }

    fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    fn view_box(&self) -> String {
        format!("{} {} {} {}", num(self.min.x), num(-self.max.y), num(self.width()), num(self.height()))
    }

    /// Segment of `a x + b y + c = 0` inside the frame.
    pub fn clip(&self, line: &[f64; 3]) -> Option<(Point, Point)> {
        let [a, b, c] = *line;
        let mut hits: Vec<Point> = Vec::new();
        if b.abs() > 0.0 {
            for x in [self.min.x, self.max.x] {
                let y = -(a * x + c) / b;
                if y >= self.min.y && y <= self.max.y {
                    hits.push(Point::new(x, y));
                }
            }
        }
        if a.abs() > 0.0 {
            for y in [self.min.y, self.max.y] {
                let x = -(b * y + c) / a;
                if x >= self.min.x && x <= self.max.x {
                    hits.push(Point::new(x, y));
                }
            }
        }
        let mut best: Option<(Point, Point)> = None;
        let mut far = 0.0;
        for i in 0..hits.len() {
            for j in i + 1..hits.len() {
                let d = hits[i].distance(hits[j]);
                if d > far {
                    far = d;
                    best = Some((hits[i], hits[j]));
                }
            }
        }
        best
    }
}

/// Element buffer in one frame.
struct Canvas {
    frame: Frame,
    body: String,
    stroke: f64,
}

impl Canvas {
    fn new(frame: Frame) -> Canvas {
        let stroke = 0.003 * frame.width().max(frame.height());
        Canvas { frame, body: String::new(), stroke }
    }

    fn xy(p: Point) -> (String, String) {
        (num(p.x), num(-p.y))
    }

    fn polygon(&mut self, class: &str, pts: &[Point]) {
        let list: Vec<String> = pts.iter().map(|p| {
            let (x, y) = Canvas::xy(*p);
            format!("{x},{y}")
        }).collect();
        let _ = writeln!(
            self.body,
            "<polygon class=\"{class}\" stroke-width=\"{}\" points=\"{}\"/>",
            num(self.stroke),
            list.join(" ")
        );
    }

    fn circle(&mut self, class: &str, c: &CircleData) {
        let (x, y) = Canvas::xy(c.center);
        let _ = writeln!(
            self.body,
            "<circle class=\"{class}\" stroke-width=\"{}\" cx=\"{x}\" cy=\"{y}\" r=\"{}\"/>",
            num(self.stroke),
            num(c.radius)
        );
    }

    fn ellipse(&mut self, class: &str, e: &Ellipse) {
        let (ma, mi) = e.semi_axes();
        let (f1, f2) = e.foci();
        let d = f2 - f1;
        // rotation in the flipped frame, degrees
        let angle = if d.norm() > 1e-12 * ma { (-d.y).atan2(d.x).to_degrees() } else { 0.0 };
        let (x, y) = Canvas::xy(e.center);
        let _ = writeln!(
            self.body,
            "<ellipse class=\"{class}\" stroke-width=\"{}\" cx=\"{x}\" cy=\"{y}\" rx=\"{}\" ry=\"{}\" transform=\"rotate({} {x} {y})\"/>",
            num(self.stroke),
            num(ma),
            num(mi),
            num(angle)
        );
    }

    fn line(&mut self, class: &str, name: &str, line: &[f64; 3]) {
        if let Some((p, q)) = self.frame.clip(line) {
            let (x1, y1) = Canvas::xy(p);
            let (x2, y2) = Canvas::xy(q);
            let _ = writeln!(
                self.body,
                "<line class=\"{class}\" data-name=\"{name}\" stroke-width=\"{}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>",
                num(self.stroke)
            );
        }
    }

    /// Cross marker; `data-x`/`data-y` are its SVG user coordinates.
    fn marker(&mut self, name: &str, p: Point) {
        let s = 4.0 * self.stroke;
        let (x, y) = Canvas::xy(p);
        let (l, r) = (num(p.x - s), num(p.x + s));
        let (t, b) = (num(-p.y - s), num(-p.y + s));
        let _ = writeln!(
            self.body,
            "<path class=\"marker\" data-name=\"{name}\" data-x=\"{x}\" data-y=\"{y}\" stroke-width=\"{}\" d=\"M{l} {y}L{r} {y}M{x} {t}L{x} {b}\"/>",
            num(self.stroke)
        );
    }
}

fn document(panels: &[Canvas]) -> String {
    let heights: Vec<f64> = panels.iter().map(|c| WIDTH_PX * c.frame.height() / c.frame.width()).collect();
    let total: f64 = heights.iter().sum();
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\"{}>",
        num(WIDTH_PX),
        num(total),
        if panels.len() == 1 { format!(" viewBox=\"{}\"", panels[0].frame.view_box()) } else { String::new() }
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    if panels.len() == 1 {
        out.push_str(&panels[0].body);
    } else {
        let mut y = 0.0;
        for (c, h) in panels.iter().zip(&heights) {
            let _ = writeln!(
                out,
                "<svg x=\"0\" y=\"{}\" width=\"{}\" height=\"{}\" viewBox=\"{}\">",
                num(y),
                num(WIDTH_PX),
                num(*h),
                c.frame.view_box()
            );
            out.push_str(&c.body);
            out.push_str("</svg>\n");
            y += h;
        }
    }
    out.push_str("</svg>\n");
    out
}

fn draw_solutions(cv: &mut Canvas, t: &TriangleData, tag: CircleTag) -> Result<(), CliError> {
    let (m1, m2) = solutions_for(t, tag);
    cv.polygon("solution-t1", &m1.cartesian(t)?);
    cv.polygon("solution-t2", &m2.cartesian(t)?);
    Ok(())
}

fn inc(t: &TriangleData, tag: CircleTag, brocard: bool) -> Result<String, CliError> {
    let mut cv = Canvas::new(Frame::for_triangle(t));
    cv.polygon("reference", &t.vertices());
    draw_solutions(&mut cv, t, tag)?;
    cv.circle("circle", &circle_for(t, tag));
    if brocard {
        let (m1, _) = solutions_for(t, tag);
        let f = brocard_frame(m1.cartesian(t)?)?;
        let own = &f.triangle;
        let e = BrocardInellipse::for_frame(&f)?;
        cv.ellipse("conic", &e.ellipse);
        if let Some(axis) = f.axis {
            cv.line("axis", "brocard-axis", &cartesian_of_line(&axis, own)?);
        }
        cv.line("lemoine", "lemoine-axis", &cartesian_of_line(&f.lemoine, own)?);
        cv.marker("omega1", bary_to_cartesian(&f.omega1, own)?);
        cv.marker("omega2", bary_to_cartesian(&f.omega2, own)?);
        cv.marker("X15", bary_to_cartesian(&f.x15, own)?);
        if let Some(p) = f.x16 {
            cv.marker("X16", bary_to_cartesian(&p, own)?);
        }
        if let Some(p) = f.x187 {
            cv.marker("X187", bary_to_cartesian(&p, own)?);
        }
    }
    Ok(document(&[cv]))
}

fn excs(t: &TriangleData) -> Result<String, CliError> {
    let mut cv = Canvas::new(Frame::for_triangle(t));
    cv.polygon("reference", &t.vertices());
    for tag in CircleTag::ALL {
        draw_solutions(&mut cv, t, tag)?;
        cv.circle("circle", &circle_for(t, tag));
        let (m1, _) = solutions_for(t, tag);
        if let Some(axis) = shared_axis(&m1, t)? {
            cv.line("axis", &format!("axis-{}", tag.name()), &cartesian_of_line(&axis, t)?);
        }
    }
    cv.marker("X20", bary_to_cartesian(&centers::center(20, t)?, t)?);
    Ok(document(&[cv]))
}

fn inconic(t: &TriangleData, p: &HomoBary) -> Result<String, CliError> {
    let spec = inconic_from_perspector(p, t)?;
    let sol = solve_ccp_inconic(&spec, t)?;
    let mut top = Canvas::new(Frame::for_triangle(t));
    top.polygon("reference", &t.vertices());
    top.polygon("solution-t1", &sol.cartesian[0]);
    top.polygon("solution-t2", &sol.cartesian[1]);
    top.ellipse("circle", &spec.ellipse);
    top.ellipse("conic", &sol.common);
    let img = &sol.circularization.image;
    let mut bottom = Canvas::new(Frame::for_triangle(img));
    bottom.polygon("reference", &img.vertices());
    draw_solutions(&mut bottom, img, sol.circularization.tag)?;
    bottom.circle("circle", &sol.circularization.circle);
    let (m1, _) = solutions_for(img, sol.circularization.tag);
    let e = BrocardInellipse::for_frame(&brocard_frame(m1.cartesian(img)?)?)?;
    bottom.ellipse("conic", &e.ellipse);
    Ok(document(&[top, bottom]))
}

/// Centroid perspector, used when the problem names none.
pub const DEFAULT_PERSPECTOR: HomoBary = HomoBary::new(1.0, 1.0, 1.0);

pub fn render(problem: &Problem, figure: Figure) -> Result<String, CliError> {
    let t = problem
        .triangle()
        .ok_or_else(|| CliError::Input("figures need a triangle".into()))?;
    let tag = match problem {
        Problem::Tritangent { tag, .. } => *tag,
        Problem::General { circle, .. } => {
            castillon_core::ccp_general::identify_tritangent(t, circle).unwrap_or(CircleTag::Incircle)
        }
        Problem::Inconic { .. } => CircleTag::Incircle,
    };
    match figure {
        Figure::Inc => inc(t, tag, false),
        Figure::Broc => inc(t, tag, true),
        Figure::Excs => excs(t),
        Figure::Inconic => {
            let p = match problem {
                Problem::Inconic { perspector, .. } => *perspector,
                _ => DEFAULT_PERSPECTOR,
            };
            inconic(t, &p)
        }
    }
}
