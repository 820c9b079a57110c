//! A small registry of triangle centers and the solution/reference
//! correspondence check.
//!
//! Most entries are center functions `f(a, b, c)` giving the first
//! barycentric, the others following cyclically.

use alloc::vec::Vec;

use crate::ccp_closed::incircle_solutions;
use crate::geom::{transfer_point, HomoBary, Point, TriangleData};
use crate::math::sqrt;
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Checked in the test suite against a defining geometric property.
    PropertyTested,
    /// Verified only through homogeneity and the correspondence it enters.
    TranscriptionTrusted,
}

#[derive(Clone, Copy, Debug)]
pub struct CenterDef {
    pub index: u32,
    /// Common name, empty when none is in wide use.
    pub name: &'static str,
    pub provenance: Provenance,
    eval: fn(&Ctx) -> HomoBary,
}

impl CenterDef {
    pub fn evaluate(&self, t: &TriangleData) -> HomoBary {
        (self.eval)(&Ctx::new(t))
    }
}

/// Side lengths with the quantities the formulas share.
struct Ctx {
    a: f64,
    b: f64,
    c: f64,
    /// Twice the area.
    s2: f64,
}

impl Ctx {
    fn new(t: &TriangleData) -> Self {
        Ctx { a: t.a(), b: t.b(), c: t.c(), s2: 2.0 * t.area() }
    }

    fn cyclic(&self, f: impl Fn(f64, f64, f64, f64) -> f64) -> HomoBary {
        let (a, b, c, k) = (self.a, self.b, self.c, self.s2);
        HomoBary::new(f(a, b, c, k), f(b, c, a, k), f(c, a, b, k))
    }
}

fn conway_a(a: f64, b: f64, c: f64) -> f64 {
    0.5 * (b * b + c * c - a * a)
}

fn half_perimeter_excess(a: f64, b: f64, c: f64) -> f64 {
    0.5 * (b + c - a)
}

fn sum_one(p: HomoBary) -> [f64; 3] {
    let s = p.sum();
    [p.x / s, p.y / s, p.z / s]
}

/// `α·P + β·Q` on sum-one representatives.
fn affine(alpha: f64, p: HomoBary, beta: f64, q: HomoBary) -> HomoBary {
    let (p, q) = (sum_one(p), sum_one(q));
    HomoBary::new(alpha * p[0] + beta * q[0], alpha * p[1] + beta * q[1], alpha * p[2] + beta * q[2])
}

fn x1(c: &Ctx) -> HomoBary {
    c.cyclic(|a, _, _, _| a)
}
fn x2(c: &Ctx) -> HomoBary {
    c.cyclic(|_, _, _, _| 1.0)
}
fn x3(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| a * a * conway_a(a, b, c))
}
fn x4(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| conway_a(b, c, a) * conway_a(c, a, b))
}
fn x6(c: &Ctx) -> HomoBary {
    c.cyclic(|a, _, _, _| a * a)
}
fn x7(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| 1.0 / half_perimeter_excess(a, b, c))
}
fn x15(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (sqrt(3.0) * conway_a(a, b, c) + s))
}
fn x16(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (sqrt(3.0) * conway_a(a, b, c) - s))
}
fn x20(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| {
        let (a2, b2, c2) = (a * a, b * b, c * c);
        3.0 * a2 * a2 - 2.0 * a2 * (b2 + c2) - (b2 - c2) * (b2 - c2)
    })
}
fn x175(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a - 0.5 * s / half_perimeter_excess(a, b, c))
}
fn x176(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a + 0.5 * s / half_perimeter_excess(a, b, c))
}
fn x187(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| a * a * (2.0 * a * a - b * b - c * c))
}
fn x279(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| {
        let u = half_perimeter_excess(a, b, c);
        1.0 / (u * u)
    })
}
fn x371(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (conway_a(a, b, c) + s))
}
fn x372(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (conway_a(a, b, c) - s))
}
fn x390(c: &Ctx) -> HomoBary {
    affine(2.0, x1(c), -1.0, x7(c))
}
fn x481(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a - s / half_perimeter_excess(a, b, c))
}
fn x482(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a + s / half_perimeter_excess(a, b, c))
}
fn x511(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| {
        let (a2, b2, c2) = (a * a, b * b, c * c);
        a2 * (a2 * (b2 + c2) - b2 * b2 - c2 * c2)
    })
}
fn x512(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| a * a * (b * b - c * c))
}
fn x514(c: &Ctx) -> HomoBary {
    c.cyclic(|_, b, c, _| b - c)
}
fn x516(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| 2.0 * a * a * a - a * a * (b + c) - (b + c) * (b - c) * (b - c))
}
fn x1151(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (2.0 * conway_a(a, b, c) + s))
}
fn x1152(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, s| a * a * (2.0 * conway_a(a, b, c) - s))
}
fn x1350(c: &Ctx) -> HomoBary {
    affine(2.0, x3(c), -1.0, x6(c))
}
fn x3053(c: &Ctx) -> HomoBary {
    c.cyclic(|a, b, c, _| a * a * (b * b + c * c - 3.0 * a * a))
}

use Provenance::{PropertyTested as P, TranscriptionTrusted as T};

macro_rules! def {
    ($i:expr, $name:expr, $prov:expr, $f:ident) => {
        CenterDef { index: $i, name: $name, provenance: $prov, eval: $f }
    };
}

pub static REGISTRY: [CenterDef; 26] = [
    def!(1, "incenter", P, x1),
    def!(2, "centroid", P, x2),
    def!(3, "circumcenter", P, x3),
    def!(4, "orthocenter", P, x4),
    def!(6, "symmedian point", P, x6),
    def!(7, "Gergonne point", P, x7),
    def!(15, "first isodynamic point", P, x15),
    def!(16, "second isodynamic point", P, x16),
    def!(20, "de Longchamps point", P, x20),
    def!(175, "isoperimetric point", T, x175),
    def!(176, "equal detour point", T, x176),
    def!(187, "Schoute center", P, x187),
    def!(279, "", T, x279),
    def!(371, "Kenmotu point", T, x371),
    def!(372, "", T, x372),
    def!(390, "reflection of X7 in X1", P, x390),
    def!(481, "first Eppstein point", T, x481),
    def!(482, "second Eppstein point", T, x482),
    def!(511, "infinite point of the Brocard axis", P, x511),
    def!(512, "", P, x512),
    def!(514, "", T, x514),
    def!(516, "infinite point of the Soddy line", P, x516),
    def!(1151, "", T, x1151),
    def!(1152, "", T, x1152),
    def!(1350, "reflection of X6 in X3", P, x1350),
    def!(3053, "", T, x3053),
];

pub fn lookup(idx: u32) -> Option<&'static CenterDef> {
    REGISTRY.iter().find(|d| d.index == idx)
}

pub fn center(idx: u32, t: &TriangleData) -> Result<HomoBary> {
    lookup(idx).map(|d| d.evaluate(t)).ok_or(Error::UnknownCenter(idx))
}

pub fn center_of_vertices(idx: u32, vertices: [Point; 3]) -> Result<HomoBary> {
    center(idx, &TriangleData::from_vertices(vertices)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PairStatus {
    /// Worst angular deviation over the three comparisons.
    Verified(f64),
    /// Deviation above tolerance.
    Failed(f64),
    DataOnly,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrespondencePair {
    pub i: u32,
    pub k: u32,
    pub status: PairStatus,
}

const PAIR_DATA: &str = include_str!("../data/appendix_pairs.txt");

/// The versioned pair list shipped with the crate.
pub fn appendix_pairs() -> Vec<(u32, u32)> {
    parse_pairs(PAIR_DATA).expect("bundled pair list is well formed")
}

/// Parse the `castillon-pairs/1` format: a header line, `#` comments and one
/// `i k` pair per line.
pub fn parse_pairs(text: &str) -> Result<Vec<(u32, u32)>> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("# castillon-pairs/1") {
        return Err(Error::InvalidInput("missing castillon-pairs/1 header"));
    }
    let mut out = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<u32>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(k)), None) => out.push((i, k)),
            _ => return Err(Error::InvalidInput("malformed pair line")),
        }
    }
    Ok(out)
}

pub const CORRESPONDENCE_TOL: f64 = 1e-9;

/// Check every listed pair whose two centers are both registered.
pub fn verify_correspondences(t: &TriangleData) -> Result<(Report, Vec<CorrespondencePair>)> {
    let (m1, m2) = incircle_solutions(t);
    let sol = [
        TriangleData::from_vertices(m1.cartesian(t)?)?,
        TriangleData::from_vertices(m2.cartesian(t)?)?,
    ];
    let mut report = Report::new();
    let mut pairs = Vec::new();
    for (i, k) in appendix_pairs() {
        let (Some(di), Some(dk)) = (lookup(i), lookup(k)) else {
            pairs.push(CorrespondencePair { i, k, status: PairStatus::DataOnly });
            report.skip(alloc::format!("pair [{i},{k}]"), "center not in registry");
            continue;
        };
        let reference = dk.evaluate(t);
        let on = |s: &TriangleData| transfer_point(&di.evaluate(s), s, t);
        let (p1, p2) = (on(&sol[0])?, on(&sol[1])?);
        let dev = p1
            .angular_distance(&p2)
            .max(p1.angular_distance(&reference))
            .max(p2.angular_distance(&reference));
        let ok = report.check(alloc::format!("pair [{i},{k}]"), dev, CORRESPONDENCE_TOL);
        let status = if ok { PairStatus::Verified(dev) } else { PairStatus::Failed(dev) };
        pairs.push(CorrespondencePair { i, k, status });
    }
    Ok((report, pairs))
}
