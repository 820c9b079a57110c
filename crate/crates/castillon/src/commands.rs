//! Command implementations. Each returns the process exit code and writes
//! to the given streams, so tests can drive them without a subprocess.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use castillon_core::brocard::{de_longchamps_concurrence, verify_brocard_closed_form, verify_pair};
use castillon_core::ccp_closed::{
    incircle_solutions, incircle_solutions_with, solution_symmedian, solutions_for, twenty_three_from_one,
    GoldenConstants, VertexMatrix,
};
use castillon_core::ccp_general::{set_deviation, solve_ccp_mobius, CcpProblem};
use castillon_core::centers::{verify_correspondences, PairStatus, Provenance, REGISTRY};
use castillon_core::geom::{circle_for, CircleTag, Vertex};
use castillon_core::report::{Report, Status};
use castillon_core::{Result as CoreResult, TriangleData};

use crate::output::{build_solution, expected_symmedian, Solver};
use crate::problem::ProblemFile;
use crate::svg::{render, Figure};
use crate::sweep::{env_seed, Sampler};
use crate::{exit, CliError};

fn read_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    ProblemFile::from_json(&text)
}

fn write_or_print(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::from),
    }
}

fn report_error(e: &CliError, stderr: &mut dyn Write) -> u8 {
    let _ = writeln!(stderr, "castillon: {e}");
    e.exit_code()
}

pub fn solve(input: &Path, solver: Option<Solver>, out: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let mut run = || -> Result<u8, CliError> {
        let file = build_solution(&read_problem(input)?, solver)?;
        write_or_print(out, &file.to_json(), stdout)?;
        if file.solutions.is_empty() {
            let _ = writeln!(stderr, "castillon: {}", CliError::NoSolution);
            return Ok(exit::NO_SOLUTION);
        }
        Ok(exit::OK)
    };
    let result = run();
    result.unwrap_or_else(|e| report_error(&e, stderr))
}

/// Set deviation between two solution triangles read as barycentric rows.
fn row_set_deviation(a: &VertexMatrix, b: &VertexMatrix) -> f64 {
    let one_way = |x: &VertexMatrix, y: &VertexMatrix| {
        x.rows
            .iter()
            .map(|p| y.rows.iter().map(|q| p.angular_distance(q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Every claim about one reference triangle.
pub fn triangle_claims(t: &TriangleData) -> CoreResult<Report> {
    let mut rep = Report::new();
    for tag in CircleTag::ALL {
        let name = tag.name();
        let circle = circle_for(t, tag);
        let (m1, m2) = solutions_for(t, tag);
        rep.check(
            format!("{name} sides through A, B, C"),
            m1.side_incidence_residual().max(m2.side_incidence_residual()),
            1e-10,
        );
        rep.check(format!("{name} vertices on circle"), m1.on_circle_residual(t)?.max(m2.on_circle_residual(t)?), 1e-10);
        let want = expected_symmedian(t, tag);
        let k = solution_symmedian(&m1, t)?.angular_distance(&want).max(solution_symmedian(&m2, t)?.angular_distance(&want));
        rep.check(format!("{name} symmedian is the contact cevian point"), k, 1e-10);
        let closed = [m1.cartesian(t)?, m2.cartesian(t)?];
        let mobius = solve_ccp_mobius(&CcpProblem::for_triangle(t, circle))?;
        if mobius.len() == 2 {
            let d = |i: usize, j: usize| set_deviation(&closed[i], &mobius[j].vertices) / circle.radius;
            let dev = d(0, 0).max(d(1, 1)).min(d(0, 1).max(d(1, 0)));
            rep.check(format!("{name} closed form matches mobius solver"), dev, 1e-9);
        } else {
            rep.fail(format!("{name} mobius solver finds two solutions"));
        }
        if tag != CircleTag::Incircle {
            rep.append(verify_pair(t, &m1, &m2, &format!("{name} "))?);
        }
    }
    rep.append(verify_pair(t, &incircle_solutions(t).0, &incircle_solutions(t).1, "incircle ")?);
    rep.append(verify_brocard_closed_form(t)?);
    rep.append(de_longchamps_concurrence(t)?);
    rep.append(verify_correspondences(t)?.0);
    rep.append(twenty_three_claims(t)?);
    let g = GoldenConstants::golden();
    rep.check("golden identities", g.identity_defect().max(g.conjugate().identity_defect()), 1e-15);
    let (t1, _) = incircle_solutions_with(&g.conjugate(), &t.sides());
    let (_, t2) = incircle_solutions(t);
    rep.check("golden conjugate maps T1 to T2", row_set_deviation(&t1, &t2), 1e-9);
    Ok(rep)
}

/// Generated vertices against the stored matrices.
pub fn twenty_three_claims(t: &TriangleData) -> CoreResult<Report> {
    let seed = incircle_solutions(t).1.row_for(Vertex::A);
    let generated = twenty_three_from_one(&seed, t)?;
    let mut worst = 0.0_f64;
    for g in &generated {
        let (m1, m2) = solutions_for(t, g.circle);
        let m = if g.label == m1.label { m1 } else { m2 };
        worst = worst.max(g.coords.angular_distance(&m.row_for(g.vertex)));
    }
    let mut rep = Report::new();
    rep.check(format!("twenty-three from one ({} vertices)", generated.len()), worst, 1e-10);
    Ok(rep)
}

fn print_report(rep: &Report, stdout: &mut dyn Write) {
    for c in rep.checks() {
        let _ = writeln!(stdout, "{c}");
    }
}

/// Worst value per claim over many reports, in first-seen order.
#[derive(Default)]
pub struct Aggregate {
    order: Vec<String>,
    worst: BTreeMap<String, (f64, f64, usize, usize)>,
}

impl Aggregate {
    pub fn add(&mut self, rep: &Report) {
        for c in rep.checks() {
            if matches!(c.status, Status::Skipped(_)) {
                continue;
            }
            let e = self.worst.entry(c.name.clone()).or_insert_with(|| {
                self.order.push(c.name.clone());
                (0.0, c.tolerance, 0, 0)
            });
            if c.value.is_nan() || c.value > e.0 {
                e.0 = c.value;
            }
            e.2 += 1;
            if !c.passed() {
                e.3 += 1;
            }
        }
    }

    pub fn failures(&self) -> usize {
        self.worst.values().map(|e| e.3).sum()
    }

    pub fn lines(&self) -> Vec<String> {
        self.order
            .iter()
            .map(|k| {
                let (w, tol, n, f) = self.worst[k];
                let tag = if f == 0 { "PASS" } else { "FAIL" };
                format!("{tag} {k} worst {w:.3e} tol {tol:.0e} ({n} trials, {f} failed)")
            })
            .collect()
    }
}

pub fn verify(input: Option<&Path>, sweep: Option<usize>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let mut run = || -> Result<u8, CliError> {
        let mut failures = 0;
        if let Some(path) = input {
            let t = read_problem(path)?
                .triangle_data()?
                .ok_or_else(|| CliError::Input("verify needs a triangle".into()))?;
            let rep = triangle_claims(&t)?;
            print_report(&rep, stdout);
            failures += rep.failures().count();
        }
        if let Some(n) = sweep {
            let seed = env_seed();
            let mut sampler = Sampler::new(seed);
            let mut agg = Aggregate::default();
            let mut errors = 0;
            for _ in 0..n {
                let t = sampler.triangle();
                match triangle_claims(&t) {
                    Ok(rep) => agg.add(&rep),
                    Err(e) => {
                        errors += 1;
                        let _ = writeln!(stderr, "castillon: sides {:?}: {e}", t.sides().to_array());
                    }
                }
            }
            let _ = writeln!(stdout, "sweep of {n} triangles, seed {seed}");
            for l in agg.lines() {
                let _ = writeln!(stdout, "{l}");
            }
            failures += agg.failures() + errors;
        }
        if input.is_none() && sweep.is_none() {
            return Err(CliError::Input("give a problem file, --sweep N, or both".into()));
        }
        if failures > 0 {
            let _ = writeln!(stderr, "castillon: {}", CliError::ClaimFailed(failures));
            return Ok(exit::CLAIM_FAILED);
        }
        Ok(exit::OK)
    };
    let result = run();
    result.unwrap_or_else(|e| report_error(&e, stderr))
}

pub fn centers(input: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let mut run = || -> Result<u8, CliError> {
        let Some(path) = input else {
            for c in REGISTRY.iter() {
                let prov = match c.provenance {
                    Provenance::PropertyTested => "property-tested",
                    Provenance::TranscriptionTrusted => "transcription-trusted",
                };
                let _ = writeln!(stdout, "X({}) {} [{prov}]", c.index, if c.name.is_empty() { "-" } else { c.name });
            }
            return Ok(exit::OK);
        };
        let t = read_problem(path)?
            .triangle_data()?
            .ok_or_else(|| CliError::Input("centers needs a triangle".into()))?;
        let (rep, pairs) = verify_correspondences(&t)?;
        for p in &pairs {
            let line = match p.status {
                PairStatus::Verified(d) => format!("PASS X({}) of solutions = X({}) of reference {d:.3e}", p.i, p.k),
                PairStatus::Failed(d) => format!("FAIL X({}) of solutions = X({}) of reference {d:.3e}", p.i, p.k),
                PairStatus::DataOnly => format!("DATA X({}) of solutions = X({}) of reference (not in registry)", p.i, p.k),
            };
            let _ = writeln!(stdout, "{line}");
        }
        Ok(if rep.passed() { exit::OK } else { exit::CLAIM_FAILED })
    };
    let result = run();
    result.unwrap_or_else(|e| report_error(&e, stderr))
}

pub fn render_cmd(input: &Path, figure: Figure, out: &Path, stderr: &mut dyn Write) -> u8 {
    let run = || -> Result<u8, CliError> {
        let problem = read_problem(input)?.resolve()?;
        let svg = render(&problem, figure)?;
        std::fs::write(out, svg).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
        Ok(exit::OK)
    };
    let result = run();
    result.unwrap_or_else(|e| report_error(&e, stderr))
}
