//! Solution files: building, residuals and re-verification.
//!
//! Every residual is computed from the values as written (15 significant
//! digits), so reading a file back and recomputing reproduces them.

use std::collections::BTreeMap;

use castillon_core::brocard::{brocard_frame, verify_pair, BrocardInellipse};
use castillon_core::ccp_closed::{exversion, gergonne, solution_symmedian, solutions_for, SolutionLabel, VertexMatrix};
use castillon_core::ccp_general::{
    identify_tritangent, set_deviation, solve_ccp_mobius, solve_ccp_perspectrix, CcpProblem, CcpSolution,
    Multiplicity,
};
use castillon_core::conic::ConicMatrix;
use castillon_core::geom::{
    cartesian_line, cartesian_to_bary, circle_for, transfer_line, transfer_point, CircleData, CircleTag, HomoBary,
    Point, TriangleData, Vertex,
};
use castillon_core::inconic::{circularizing_projectivity, fit_deviation, inconic_from_perspector, solve_ccp_inconic};
use castillon_core::linalg::Mat3;
use castillon_core::report::Status;
use serde::{Deserialize, Serialize};

use crate::problem::{parse_tag, Problem, ProblemFile};
use crate::{round15, CliError};

pub const SCHEMA: &str = "castillon/1";

/// Largest residual drift tolerated by [`recheck`].
pub const RECHECK_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Solver {
    Mobius,
    Perspectrix,
    Closed,
    All,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Mobius => "mobius",
            Solver::Perspectrix => "perspectrix",
            Solver::Closed => "closed",
            Solver::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleRecord {
    pub center: [f64; 2],
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InconicRecord {
    pub perspector: [f64; 3],
    pub center: [f64; 2],
    pub semi_axes: [f64; 2],
    /// Tritangent circle the inconic becomes after circularization.
    pub circularized: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionRecord {
    pub label: String,
    pub multiplicity: String,
    /// Side `i → i+1` passes through point `i` of the problem.
    pub vertices: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub barycentrics: Option<Vec<[f64; 3]>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SharedRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmedian: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brocard_angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brocard_points: Option<[[f64; 3]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brocard_axis: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemoine_axis: Option<[f64; 3]>,
    /// Cartesian point-conic matrix, scaled to unit max entry.
    pub inellipse: [[f64; 3]; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub schema: String,
    pub problem: ProblemFile,
    pub solver: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconic: Option<InconicRecord>,
    pub solutions: Vec<SolutionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shared: Option<SharedRecord>,
    /// Fixed-point discriminant of the composed chord map over its squared norm.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<f64>,
    /// Worst vertex deviation (in radii) of each extra solver against the
    /// reported solutions; `null` when the solution counts differ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_deviation: Option<BTreeMap<String, Option<f64>>>,
    /// `null` marks a non-finite value.
    pub residuals: BTreeMap<String, Option<f64>>,
}

impl SolutionFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solution files serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<SolutionFile, CliError> {
        let f: SolutionFile = serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!("solution file, line {} column {}: {e}", e.line(), e.column()))
        })?;
        if f.schema != SCHEMA {
            return Err(CliError::Input(format!("unsupported schema {:?}", f.schema)));
        }
        Ok(f)
    }
}

fn r2(p: Point) -> [f64; 2] {
    [round15(p.x), round15(p.y)]
}

fn r3(v: [f64; 3]) -> [f64; 3] {
    v.map(round15)
}

fn bary_record(p: &HomoBary) -> [f64; 3] {
    r3(p.normalized().to_array())
}

fn line_record(v: [f64; 3]) -> [f64; 3] {
    let m = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let lead = v.iter().copied().find(|x| x.abs() > 1e-3 * m).unwrap_or(1.0);
    let k = if lead < 0.0 { -1.0 / m } else { 1.0 / m };
    r3(v.map(|x| x * k))
}

fn matrix_record(m: &Mat3) -> [[f64; 3]; 3] {
    let s = m.max_abs();
    let lead = m.0[0][0];
    let k = if lead < 0.0 { -1.0 / s } else { 1.0 / s };
    m.0.map(|row| r3(row.map(|x| x * k)))
}

fn point(p: [f64; 2]) -> Point {
    Point::new(p[0], p[1])
}

/// Rows rotated so that side `i → i+1` passes through reference vertex `i`.
fn aligned(vm: &VertexMatrix) -> VertexMatrix {
    let k = vm.side_through.iter().position(|v| *v == Vertex::A).unwrap_or(0);
    let mut out = vm.clone();
    for i in 0..3 {
        out.rows[i] = vm.rows[(i + k) % 3];
        out.side_through[i] = vm.side_through[(i + k) % 3];
    }
    out
}

fn multiplicity_name(m: Multiplicity) -> &'static str {
    match m {
        Multiplicity::Distinct => "distinct",
        Multiplicity::Tangent => "tangent",
    }
}

fn matrix_solution(vm: &VertexMatrix, t: &TriangleData, label: &str) -> Result<SolutionRecord, CliError> {
    let vm = aligned(vm);
    Ok(SolutionRecord {
        label: label.to_string(),
        multiplicity: "distinct".into(),
        vertices: vm.cartesian(t)?.iter().map(|p| r2(*p)).collect(),
        barycentrics: Some(vm.rows.iter().map(bary_record).collect()),
    })
}

fn point_solution(vertices: &[Point], m: Multiplicity, t: Option<&TriangleData>, label: &str) -> SolutionRecord {
    SolutionRecord {
        label: label.to_string(),
        multiplicity: multiplicity_name(m).into(),
        vertices: vertices.iter().map(|p| r2(*p)).collect(),
        barycentrics: t.map(|t| vertices.iter().map(|p| bary_record(&cartesian_to_bary(*p, t))).collect()),
    }
}

/// Worst deviation between two solution lists matched as unordered sets.
fn list_deviation(a: &[Vec<Point>], b: &[Vec<Point>], scale: f64) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let d = |x: &Vec<Point>, y: &Vec<Point>| set_deviation(x, y) / scale;
    Some(match a.len() {
        0 => 0.0,
        1 => d(&a[0], &b[0]),
        2 => (d(&a[0], &b[0]).max(d(&a[1], &b[1]))).min(d(&a[0], &b[1]).max(d(&a[1], &b[0]))),
        _ => return None,
    })
}

/// Vertex lists from each solver for a tritangent circle of `t`.
struct TritangentRuns {
    closed: Vec<Vec<Point>>,
    mobius: Result<Vec<CcpSolution>, CliError>,
    perspectrix: Result<Vec<Vec<Point>>, CliError>,
}

fn run_tritangent(t: &TriangleData, circle: &CircleData, tag: CircleTag) -> Result<TritangentRuns, CliError> {
    let (m1, m2) = solutions_for(t, tag);
    let closed = vec![m1.cartesian(t)?.to_vec(), m2.cartesian(t)?.to_vec()];
    let mobius = solve_ccp_mobius(&CcpProblem::for_triangle(t, *circle)).map_err(CliError::from);
    let perspectrix = solve_ccp_perspectrix(t, circle)
        .map(|s| s.cartesian.iter().map(|c| c.to_vec()).collect())
        .map_err(CliError::from);
    Ok(TritangentRuns { closed, mobius, perspectrix })
}

fn discriminant_of(prob: &CcpProblem) -> Option<f64> {
    let m = prob.composed_map().ok()?.normalized();
    let n = m.norm();
    Some(round15(m.fixed_point_discriminant() / (n * n)))
}

fn circle_record(c: &CircleData, tag: Option<CircleTag>) -> CircleRecord {
    CircleRecord { center: r2(c.center), radius: round15(c.radius), tag: tag.map(|t| t.name().to_string()) }
}

/// Brocard objects of one tritangent solution, in reference terms; the
/// residuals check that the other solution shares them.
fn shared_record(m1: &VertexMatrix, t: &TriangleData) -> Result<SharedRecord, CliError> {
    let f = brocard_frame(m1.cartesian(t)?)?;
    let e = BrocardInellipse::for_frame(&f)?;
    let own = f.triangle;
    Ok(SharedRecord {
        symmedian: Some(bary_record(&solution_symmedian(m1, t)?)),
        brocard_angle: Some(round15(f.omega)),
        brocard_points: Some([
            bary_record(&transfer_point(&f.omega1, &own, t)?),
            bary_record(&transfer_point(&f.omega2, &own, t)?),
        ]),
        brocard_axis: f.axis.map(|a| transfer_line(&a, &own, t).map(|l| line_record(l.to_array()))).transpose()?,
        lemoine_axis: Some(line_record(transfer_line(&f.lemoine, &own, t)?.to_array())),
        inellipse: matrix_record(e.conic.matrix()),
    })
}

/// Solve `pf` with `solver` (or the natural default for its kind).
pub fn build_solution(pf: &ProblemFile, solver: Option<Solver>) -> Result<SolutionFile, CliError> {
    let problem = pf.resolve()?;
    let mut file = SolutionFile {
        schema: SCHEMA.into(),
        problem: pf.clone(),
        solver: String::new(),
        circle: None,
        inconic: None,
        solutions: Vec::new(),
        shared: None,
        discriminant: None,
        cross_deviation: None,
        residuals: BTreeMap::new(),
    };
    match &problem {
        Problem::Tritangent { triangle, tag } => {
            let circle = circle_for(triangle, *tag);
            build_tritangent(&mut file, triangle, &circle, *tag, solver.unwrap_or(Solver::Closed))?;
        }
        Problem::General { circle, points, triangle } => {
            let tri_case = triangle.and_then(|t| {
                let same = points.len() == 3 && points.iter().zip(t.vertices()).all(|(p, v)| *p == v);
                identify_tritangent(&t, circle).filter(|_| same).map(|tag| (t, tag))
            });
            let solver = solver.unwrap_or(Solver::Mobius);
            match (tri_case, solver) {
                (Some((t, tag)), _) => build_tritangent(&mut file, &t, circle, tag, solver)?,
                (None, Solver::Mobius | Solver::All) => {
                    build_general(&mut file, circle, points, triangle.as_ref())?;
                    file.solver = solver.name().into();
                }
                (None, _) => {
                    return Err(CliError::Input(format!(
                        "solver {} needs a triangle and one of its tritangent circles",
                        solver.name()
                    )))
                }
            }
        }
        Problem::Inconic { triangle, perspector } => {
            build_inconic(&mut file, triangle, perspector, solver.unwrap_or(Solver::Closed))?;
        }
    }
    file.residuals = residuals(&problem, &file)?;
    Ok(file)
}

fn build_tritangent(
    file: &mut SolutionFile,
    t: &TriangleData,
    circle: &CircleData,
    tag: CircleTag,
    solver: Solver,
) -> Result<(), CliError> {
    file.solver = solver.name().into();
    file.circle = Some(circle_record(circle, Some(tag)));
    file.discriminant = discriminant_of(&CcpProblem::for_triangle(t, *circle));
    let matrices: (VertexMatrix, VertexMatrix) = match solver {
        Solver::Closed | Solver::All => solutions_for(t, tag),
        Solver::Perspectrix => {
            let s = solve_ccp_perspectrix(t, circle)?;
            (s.first, s.second)
        }
        Solver::Mobius => {
            let sols = solve_ccp_mobius(&CcpProblem::for_triangle(t, *circle))?;
            if sols.len() != 2 || sols[0].multiplicity != Multiplicity::Distinct {
                return Err(CliError::Degenerate("tritangent problem without two distinct solutions".into()));
            }
            let vm = |s: &CcpSolution, label| VertexMatrix {
                rows: [0, 1, 2].map(|i| cartesian_to_bary(s.vertices[i], t)),
                label,
                circle: tag,
                side_through: [Vertex::A, Vertex::B, Vertex::C],
            };
            (vm(&sols[0], SolutionLabel::T1), vm(&sols[1], SolutionLabel::T2))
        }
    };
    let labels = match solver {
        Solver::Closed | Solver::All => [SolutionLabel::T1.name(), SolutionLabel::T2.name()],
        _ => ["S1", "S2"],
    };
    file.solutions = vec![matrix_solution(&matrices.0, t, labels[0])?, matrix_solution(&matrices.1, t, labels[1])?];
    file.shared = Some(shared_record(&matrices.0, t)?);
    if solver == Solver::All {
        let runs = run_tritangent(t, circle, tag)?;
        let mut cross = BTreeMap::new();
        let mob = runs.mobius.ok().map(|s| s.into_iter().map(|x| x.vertices).collect::<Vec<_>>());
        let per = runs.perspectrix.ok();
        let dm = mob.and_then(|m| list_deviation(&runs.closed, &m, circle.radius));
        let dp = per.and_then(|p| list_deviation(&runs.closed, &p, circle.radius));
        cross.insert("mobius".to_string(), dm.map(round15));
        cross.insert("perspectrix".to_string(), dp.map(round15));
        let max = match (dm, dp) {
            (Some(x), Some(y)) => Some(round15(x.max(y))),
            _ => None,
        };
        cross.insert("max".to_string(), max);
        file.cross_deviation = Some(cross);
    }
    Ok(())
}

fn build_general(
    file: &mut SolutionFile,
    circle: &CircleData,
    points: &[Point],
    triangle: Option<&TriangleData>,
) -> Result<(), CliError> {
    let prob = CcpProblem::new(*circle, points.to_vec())?;
    file.circle = Some(circle_record(circle, None));
    file.discriminant = discriminant_of(&prob);
    let sols = solve_ccp_mobius(&prob)?;
    file.solutions = sols
        .iter()
        .enumerate()
        .map(|(i, s)| point_solution(&s.vertices, s.multiplicity, triangle, &format!("S{}", i + 1)))
        .collect();
    Ok(())
}

fn build_inconic(file: &mut SolutionFile, t: &TriangleData, p: &HomoBary, solver: Solver) -> Result<(), CliError> {
    let spec = inconic_from_perspector(p, t)?;
    let sol = solve_ccp_inconic(&spec, t)?;
    let circ = &sol.circularization;
    let (a, b) = spec.ellipse.semi_axes();
    file.solver = solver.name().into();
    file.inconic = Some(InconicRecord {
        perspector: bary_record(p),
        center: r2(spec.ellipse.center),
        semi_axes: [round15(a), round15(b)],
        circularized: circ.tag.name().into(),
    });
    let image_prob = CcpProblem::for_triangle(&circ.image, circ.circle);
    file.discriminant = discriminant_of(&image_prob);
    let back = circ.map.inverse();
    let pulled = |tri: &[Point]| -> Result<Vec<Point>, CliError> {
        tri.iter().map(|q| back.apply(*q).map_err(CliError::from)).collect()
    };
    let from_points = |tri: &[Point], label| -> Result<VertexMatrix, CliError> {
        let v = pulled(tri)?;
        Ok(VertexMatrix {
            rows: [0, 1, 2].map(|i| cartesian_to_bary(v[i], t)),
            label,
            circle: circ.tag,
            side_through: [Vertex::A, Vertex::B, Vertex::C],
        })
    };
    let (m1, m2, labels) = match solver {
        Solver::Closed | Solver::All => (sol.solutions.0.clone(), sol.solutions.1.clone(), ["T1", "T2"]),
        Solver::Mobius => {
            let s = solve_ccp_mobius(&image_prob)?;
            if s.len() != 2 {
                return Err(CliError::Degenerate("circularized problem without two solutions".into()));
            }
            (from_points(&s[0].vertices, SolutionLabel::T1)?, from_points(&s[1].vertices, SolutionLabel::T2)?, ["S1", "S2"])
        }
        Solver::Perspectrix => {
            let s = solve_ccp_perspectrix(&circ.image, &circ.circle)?;
            (from_points(&s.cartesian[0], SolutionLabel::T1)?, from_points(&s.cartesian[1], SolutionLabel::T2)?, ["S1", "S2"])
        }
    };
    file.solutions = vec![matrix_solution(&m1, t, labels[0])?, matrix_solution(&m2, t, labels[1])?];
    file.shared = Some(SharedRecord { inellipse: matrix_record(sol.common_conic.matrix()), ..SharedRecord::default() });
    if solver == Solver::All {
        let scale = a;
        let closed = vec![sol.cartesian[0].to_vec(), sol.cartesian[1].to_vec()];
        let mob = solve_ccp_mobius(&image_prob)
            .ok()
            .and_then(|s| s.iter().map(|x| pulled(&x.vertices).ok()).collect::<Option<Vec<_>>>());
        let per = solve_ccp_perspectrix(&circ.image, &circ.circle)
            .ok()
            .and_then(|s| s.cartesian.iter().map(|c| pulled(c).ok()).collect::<Option<Vec<_>>>());
        let dm = mob.and_then(|m| list_deviation(&closed, &m, scale));
        let dp = per.and_then(|p| list_deviation(&closed, &p, scale));
        let mut cross = BTreeMap::new();
        cross.insert("mobius".to_string(), dm.map(round15));
        cross.insert("perspectrix".to_string(), dp.map(round15));
        let max = match (dm, dp) {
            (Some(x), Some(y)) => Some(round15(x.max(y))),
            _ => None,
        };
        cross.insert("max".to_string(), max);
        file.cross_deviation = Some(cross);
    }
    Ok(())
}

/// Symmedian both solutions for `tag` share: the cevian point of the contacts.
pub fn expected_symmedian(t: &TriangleData, tag: CircleTag) -> HomoBary {
    match tag {
        CircleTag::Incircle => gergonne(&t.sides()),
        CircleTag::Excircle(v) => gergonne(&exversion(t, v)),
    }
}

fn recorded_matrix(rec: &SolutionRecord, tag: CircleTag) -> Result<VertexMatrix, CliError> {
    let rows = rec
        .barycentrics
        .as_ref()
        .filter(|b| b.len() == 3)
        .ok_or_else(|| CliError::Input(format!("solution {} lacks three barycentric rows", rec.label)))?;
    let label = if rec.label.ends_with('2') { SolutionLabel::T2 } else { SolutionLabel::T1 };
    Ok(VertexMatrix {
        rows: [0, 1, 2].map(|i| HomoBary::from_array(rows[i])),
        label,
        circle: tag,
        side_through: [Vertex::A, Vertex::B, Vertex::C],
    })
}

fn insert(map: &mut BTreeMap<String, Option<f64>>, key: impl Into<String>, v: f64) {
    map.insert(key.into(), v.is_finite().then_some(v));
}

fn multiplicity_of(name: &str) -> Multiplicity {
    if name == "tangent" {
        Multiplicity::Tangent
    } else {
        Multiplicity::Distinct
    }
}

/// Residuals of the recorded solutions of `file` against `problem`.
pub fn residuals(problem: &Problem, file: &SolutionFile) -> Result<BTreeMap<String, Option<f64>>, CliError> {
    let mut out = BTreeMap::new();
    let verts: Vec<Vec<Point>> = file.solutions.iter().map(|s| s.vertices.iter().copied().map(point).collect()).collect();
    match problem {
        Problem::Tritangent { .. } | Problem::General { .. } => {
            let (circle, points) = match problem {
                Problem::Tritangent { triangle, tag } => (circle_for(triangle, *tag), triangle.vertices().to_vec()),
                Problem::General { circle, points, .. } => (*circle, points.clone()),
                Problem::Inconic { .. } => unreachable!(),
            };
            let prob = CcpProblem::new(circle, points)?;
            let (mut on, mut inc) = (0.0_f64, 0.0_f64);
            for (rec, v) in file.solutions.iter().zip(&verts) {
                if v.len() != prob.points().len() {
                    return Err(CliError::Input(format!("solution {} has the wrong vertex count", rec.label)));
                }
                let s = CcpSolution { vertices: v.clone(), multiplicity: multiplicity_of(&rec.multiplicity) };
                on = on.max(s.on_circle_residual(&circle));
                inc = inc.max(s.incidence_residual(&prob));
            }
            insert(&mut out, "on_curve", on);
            insert(&mut out, "incidence", inc);
            let tagged = file.circle.as_ref().and_then(|c| c.tag.as_deref()).and_then(parse_tag);
            if let (Some(t), Some(tag), 2) = (problem.triangle(), tagged, file.solutions.len()) {
                pair_residuals(&mut out, t, tag, file)?;
            }
        }
        Problem::Inconic { triangle: t, perspector } => {
            let spec = inconic_from_perspector(perspector, t)?;
            let circ = circularizing_projectivity(&spec, t)?;
            let tag = circ.tag;
            let mut on = 0.0_f64;
            for p in verts.iter().flatten() {
                on = on.max(circ.point_residual(*p)?);
            }
            insert(&mut out, "on_curve", on);
            let ms: Vec<VertexMatrix> =
                file.solutions.iter().map(|s| recorded_matrix(s, tag)).collect::<Result<_, _>>()?;
            let inc = ms.iter().map(|m| m.side_incidence_residual()).fold(0.0, f64::max);
            insert(&mut out, "incidence", inc);
            if let (Some(shared), [m1, m2]) = (&file.shared, ms.as_slice()) {
                let common = ConicMatrix::point(Mat3(shared.inellipse));
                let mut tangency = 0.0_f64;
                for v in &verts {
                    for i in 0..v.len() {
                        let l = cartesian_line(v[i], v[(i + 1) % v.len()]);
                        tangency = tangency.max(common.tangency_residual(&l));
                    }
                }
                insert(&mut out, "common_conic_tangency", tangency);
                insert(&mut out, "common_conic_fit", fit_deviation(m1, m2, &common, t)?);
            }
        }
    }
    Ok(out)
}

fn pair_residuals(
    out: &mut BTreeMap<String, Option<f64>>,
    t: &TriangleData,
    tag: CircleTag,
    file: &SolutionFile,
) -> Result<(), CliError> {
    let m1 = recorded_matrix(&file.solutions[0], tag)?;
    let m2 = recorded_matrix(&file.solutions[1], tag)?;
    let want = expected_symmedian(t, tag);
    let k = solution_symmedian(&m1, t)?
        .angular_distance(&want)
        .max(solution_symmedian(&m2, t)?.angular_distance(&want));
    insert(out, "symmedian", k);
    insert(out, "side_incidence", m1.side_incidence_residual().max(m2.side_incidence_residual()));
    for c in verify_pair(t, &m1, &m2, "shared: ")?.checks() {
        if !matches!(c.status, Status::Skipped(_)) {
            insert(out, c.name.clone(), c.value);
        }
    }
    Ok(())
}

/// Largest drift between recorded residuals and ones recomputed from the
/// recorded solutions.
pub fn recheck(file: &SolutionFile) -> Result<f64, CliError> {
    let problem = file.problem.resolve()?;
    let fresh = residuals(&problem, file)?;
    if fresh.len() != file.residuals.len() || fresh.keys().ne(file.residuals.keys()) {
        return Err(CliError::Input("recorded residual names differ from recomputed ones".into()));
    }
    let mut drift = 0.0_f64;
    for (k, v) in &fresh {
        match (v, &file.residuals[k]) {
            (Some(a), Some(b)) => drift = drift.max((a - b).abs()),
            (None, None) => {}
            _ => drift = f64::INFINITY,
        }
    }
    Ok(drift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excircle_symmedian_is_the_exverted_gergonne_point() {
        let t = TriangleData::from_sides(6.0, 9.0, 13.0).unwrap();
        for tag in CircleTag::ALL {
            let (m1, m2) = solutions_for(&t, tag);
            let want = expected_symmedian(&t, tag);
            for m in [&m1, &m2] {
                let d = solution_symmedian(m, &t).unwrap().angular_distance(&want);
                assert!(d < 1e-10, "{} {d:e}", tag.name());
            }
        }
    }

    #[test]
    fn aligned_rows_put_vertex_a_first() {
        let t = TriangleData::from_sides(4.0, 5.0, 6.0).unwrap();
        let (m1, _) = solutions_for(&t, CircleTag::Excircle(Vertex::A));
        let a = aligned(&m1);
        assert_eq!(a.side_through, [Vertex::A, Vertex::B, Vertex::C]);
        assert!(a.side_incidence_residual() < 1e-12);
    }
}
