// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use castillon::commands::twenty_three_claims;
use castillon::output::expected_symmedian;
use castillon::sweep::{env_seed, Sampler};
use castillon_core::brocard::{de_longchamps_concurrence, verify_brocard_closed_form, verify_pair, verify_shared_objects};
use castillon_core::ccp_closed::{
    incircle_solutions, incircle_solutions_with, solution_symmedian, solutions_for, GoldenConstants,
    VertexMatrix,
};
use castillon_core::ccp_general::{
    fixed_points, set_deviation, solve_ccp_mobius, solve_ccp_perspectrix, CcpProblem, CircleParam, Multiplicity,
};
use castillon_core::centers::{appendix_pairs, verify_correspondences, PairStatus};
use castillon_core::geom::circle_for;
use castillon_core::inconic::{inconic_from_perspector, solve_ccp_inconic};
use castillon_core::report::Report;
use castillon_core::{CircleData, CircleTag, HomoBary, Point, TriangleData};

const TRIALS: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn triangles(n: usize, salt: u64) -> Vec<TriangleData> {
    let mut s = Sampler::new(env_seed().wrapping_add(salt));
    (0..n).map(|_| s.triangle()).collect()
}

/// Deviation of two solution pairs as unordered sets of unordered vertex sets.
fn pair_deviation(a: &[[Point; 3]; 2], b: [&[Point]; 2]) -> f64 {
    let d = |i: usize, j: usize| set_deviation(&a[i], b[j]);
    d(0, 0).max(d(1, 1)).min(d(0, 1).max(d(1, 0)))
}

fn closed_cartesian(t: &TriangleData, tag: CircleTag) -> [[Point; 3]; 2] {
    let (m1, m2) = solutions_for(t, tag);
    [m1.cartesian(t).unwrap(), m2.cartesian(t).unwrap()]
}

fn c1_agreement(ts: &[TriangleData]) -> Outcome {
    let start = Instant::now();
    let (mut worst, mut failed) = (0.0_f64, 0);
    let (mut persp_ok, mut reseeded, mut cases) = (0, 0, 0);
    for t in ts {
        for tag in CircleTag::ALL {
            cases += 1;
            let circle = circle_for(t, tag);
            let closed = closed_cartesian(t, tag);
            match solve_ccp_mobius(&CcpProblem::for_triangle(t, circle)) {
                Ok(m) if m.len() == 2 => {
                    let dev = pair_deviation(&closed, [&m[0].vertices, &m[1].vertices]) / circle.radius;
                    worst = worst.max(dev);
                    if !(dev <= 1e-9) {
                        failed += 1;
                    }
                }
                _ => failed += 1,
            }
            if let Ok(p) = solve_ccp_perspectrix(t, &circle) {
                reseeded += usize::from(p.reseeds > 0);
                let dev = pair_deviation(&closed, [&p.cartesian[0], &p.cartesian[1]]) / circle.radius;
                if dev <= 1e-9 {
                    persp_ok += 1;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let share = persp_ok as f64 / cases as f64;
    Outcome::new(
        failed == 0 && share >= 0.99 && secs <= 10.0,
        format!(
            "closed vs mobius worst {worst:.2e}·R, {failed} failed; perspectrix {:.2}% ({reseeded} reseeded); {secs:.2} s",
            100.0 * share
        ),
    )
}

fn c2_incidence(ts: &[TriangleData]) -> Outcome {
    let (mut worst, mut wrong_count) = (0.0_f64, 0);
    for t in ts {
        for tag in CircleTag::ALL {
            let (m1, m2) = solutions_for(t, tag);
            worst = worst.max(m1.side_incidence_residual()).max(m2.side_incidence_residual());
            let prob = CcpProblem::for_triangle(t, circle_for(t, tag));
            match solve_ccp_mobius(&prob) {
                Ok(s) if s.len() == 2 => {
                    worst = s.iter().map(|x| x.incidence_residual(&prob)).fold(worst, f64::max);
                }
                _ => wrong_count += 1,
            }
        }
    }
    Outcome::new(worst <= 1e-10 && wrong_count == 0, format!("worst {worst:.2e}, {wrong_count} cases without two solutions"))
}

fn c3_symmedian(ts: &[TriangleData]) -> Outcome {
    let mut worst = 0.0_f64;
    for t in ts {
        for tag in CircleTag::ALL {
            let want = expected_symmedian(t, tag);
            let (m1, m2) = solutions_for(t, tag);
            for m in [&m1, &m2] {
                worst = worst.max(solution_symmedian(m, t).unwrap().angular_distance(&want));
            }
        }
    }
    let t = TriangleData::from_sides(6.0, 9.0, 13.0).unwrap();
    let k = solution_symmedian(&incircle_solutions(&t).0, &t).unwrap();
    let explicit = k.angular_distance(&HomoBary::new(1.0 / 8.0, 1.0 / 5.0, 1.0));
    Outcome::new(worst <= 1e-10 && explicit <= 1e-10, format!("worst {worst:.2e}; (6,9,13) off [1/8:1/5:1] by {explicit:.2e}"))
}

fn tally(reports: impl Iterator<Item = Report>) -> (usize, f64) {
    let (mut failures, mut margin) = (0, 0.0_f64);
    for r in reports {
        failures += r.failures().count();
        for c in r.checks() {
            if c.value.is_finite() && c.tolerance > 0.0 {
                margin = margin.max(c.value / c.tolerance);
            }
        }
    }
    (failures, margin)
}

fn shared_reports(t: &TriangleData) -> Report {
    let mut rep = verify_shared_objects(t).unwrap();
    for tag in CircleTag::ALL.into_iter().skip(1) {
        let (m1, m2) = solutions_for(t, tag);
        rep.append(verify_pair(t, &m1, &m2, &format!("{} ", tag.name())).unwrap());
    }
    rep
}

fn c4_shared(ts: &[TriangleData]) -> Outcome {
    let (failures, margin) = tally(ts.iter().map(shared_reports));
    Outcome::new(failures == 0, format!("{failures} failed checks, worst value/tolerance {margin:.2e}"))
}

fn c5_brocard_points(ts: &[TriangleData]) -> Outcome {
    let (failures, margin) = tally(ts.iter().map(|t| verify_brocard_closed_form(t).unwrap()));
    Outcome::new(failures == 0, format!("{failures} failed checks, worst value/tolerance {margin:.2e}"))
}

fn c6_concurrence(ts: &[TriangleData]) -> Outcome {
    let (failures, margin) = tally(ts.iter().map(|t| de_longchamps_concurrence(t).unwrap()));
    Outcome::new(failures == 0, format!("{failures} failed checks, worst value/tolerance {margin:.2e}"))
}

fn c7_twenty_three(ts: &[TriangleData]) -> Outcome {
    let (failures, margin) = tally(ts.iter().map(|t| twenty_three_claims(t).unwrap()));
    Outcome::new(failures == 0, format!("{failures} failed checks, worst value/tolerance {margin:.2e}"))
}

fn c8_inconic() -> Outcome {
    let mut s = Sampler::new(env_seed().wrapping_add(8));
    let (mut runs, mut errors) = (0, 0);
    let mut reps = Vec::new();
    for _ in 0..20 {
        let t = s.triangle();
        for _ in 0..10 {
            let p = s.interior_point();
            runs += 1;
            match inconic_from_perspector(&p, &t).and_then(|spec| solve_ccp_inconic(&spec, &t)) {
                Ok(sol) => reps.push(sol.report),
                Err(_) => errors += 1,
            }
        }
    }
    let (failures, margin) = tally(reps.into_iter());
    Outcome::new(
        failures == 0 && errors == 0,
        format!("{runs} perspectors, {errors} errors, {failures} failed checks, worst value/tolerance {margin:.2e}"),
    )
}

fn c9_correspondences() -> Outcome {
    let ts = triangles(100, 9);
    let listed = appendix_pairs().len();
    let (mut failures, mut verified, mut data_only, mut reported) = (0, 0, 0, 0);
    for t in &ts {
        let (rep, pairs) = verify_correspondences(t).unwrap();
        failures += rep.failures().count();
        reported = pairs.len();
        verified = pairs.iter().filter(|p| !matches!(p.status, PairStatus::DataOnly)).count();
        data_only = pairs.iter().filter(|p| matches!(p.status, PairStatus::DataOnly)).count();
    }
    Outcome::new(
        failures == 0 && verified >= 10 && reported == listed,
        format!("{verified} pairs verified, {data_only} data-only, {reported}/{listed} reported, {failures} failures"),
    )
}

fn row_set_deviation(a: &VertexMatrix, b: &VertexMatrix) -> f64 {
    let one_way = |x: &VertexMatrix, y: &VertexMatrix| {
        x.rows
            .iter()
            .map(|p| y.rows.iter().map(|q| p.angular_distance(q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

fn c10_golden() -> Outcome {
    let g = GoldenConstants::golden();
    let identities = g.identity_defect().max(g.conjugate().identity_defect());
    let worst = triangles(100, 10)
        .iter()
        .map(|t| row_set_deviation(&incircle_solutions_with(&g.conjugate(), &t.sides()).0, &incircle_solutions(t).1))
        .fold(0.0, f64::max);
    Outcome::new(identities <= 1e-15 && worst <= 1e-9, format!("identities {identities:.2e}, conjugate T1 vs T2 {worst:.2e}"))
}

fn unit_circle() -> CircleData {
    CircleData { center: Point::new(0.0, 0.0), radius: 1.0 }
}

fn problem(points: &[Point]) -> CcpProblem {
    CcpProblem::new(unit_circle(), points.to_vec()).unwrap()
}

fn normalized_discriminant(prob: &CcpProblem) -> f64 {
    let m = prob.composed_map().unwrap().normalized();
    m.fixed_point_discriminant() / (m.norm() * m.norm())
}

fn problem_json(points: &[Point]) -> String {
    let pts: Vec<String> = points.iter().map(|p| format!("[{:?}, {:?}]", p.x, p.y)).collect();
    format!("{{\"circle\": {{\"center\": [0, 0], \"radius\": 1}}, \"points\": [{}]}}", pts.join(", "))
}

fn cli_solve(dir: &Path, name: &str, json: &str) -> (i32, usize) {
    let input = dir.join(format!("{name}.json"));
    let out = dir.join(format!("{name}.out.json"));
    std::fs::write(&input, json).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_castillon"))
        .arg("solve")
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap()
        .status;
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    let count = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v["solutions"].as_array().map(|a| a.len()))
        .unwrap_or(usize::MAX);
    (status.code().unwrap_or(-1), count)
}

fn c11_trichotomy() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (Point::new(0.01, 0.0), Point::new(0.0, 0.01));
    let none = [p1, p2, Point::new(-0.01, 0.005)];
    let many = [p1, p2, Point::new(-2.0, 0.0)];

    // witness: no parameter closes the chord walk
    let prob = problem(&none);
    let samples = 10_000;
    let min_residual = (0..samples)
        .map(|k| {
            let half = core::f64::consts::PI * k as f64 / samples as f64;
            prob.closure_residual(&CircleParam::new(half.sin(), half.cos())).unwrap()
        })
        .fold(f64::INFINITY, f64::min);

    // tangent case: bisect the third point along the axis for the sign change
    let (mut lo, mut hi) = (-0.01, -2.0);
    let at = |x: f64| normalized_discriminant(&problem(&[p1, p2, Point::new(x, 0.0)]));
    assert!(at(lo) < 0.0 && at(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if at(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let tangent = [p1, p2, Point::new(hi, 0.0)];
    let disc = at(hi);
    let roots = fixed_points(&problem(&tangent).composed_map().unwrap()).unwrap().len();
    let lib_tangent = solve_ccp_mobius(&problem(&tangent)).unwrap();

    let counts = [none.as_slice(), tangent.as_slice(), many.as_slice()]
        .map(|pts| solve_ccp_mobius(&problem(pts)).unwrap().len());
    let cli = [("none", &none), ("tangent", &tangent), ("many", &many)].map(|(n, pts)| cli_solve(dir.path(), n, &problem_json(pts)));
    let pass = min_residual >= 1e-3
        && counts == [0, 1, 2]
        && roots == 1
        && lib_tangent.first().map(|s| s.multiplicity) == Some(Multiplicity::Tangent)
        && cli == [(3, 0), (0, 1), (0, 2)];
    Outcome::new(
        pass,
        format!(
            "counts {counts:?}, exit codes {:?}, min closure residual {min_residual:.3e}, tangent at x = {hi:.15} (discriminant {disc:.1e})",
            cli.map(|c| c.0)
        ),
    )
}

fn run_twice(args: &[&str], out: &Path) -> bool {
    let mut outputs = Vec::new();
    for _ in 0..2 {
        let status = Command::new(env!("CARGO_BIN_EXE_castillon")).args(args).status().unwrap();
        if !status.success() {
            return false;
        }
        outputs.push(std::fs::read(out).unwrap());
    }
    outputs[0] == outputs[1]
}

fn c12_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.json");
    std::fs::write(&input, r#"{"triangle": {"a": 6, "b": 9, "c": 13}, "circle": "incircle"}"#).unwrap();
    let input = input.to_str().unwrap();
    let mut stable = 0;
    let mut runs = 0;
    for solver in ["closed", "mobius", "perspectrix", "all"] {
        let out = dir.path().join(format!("{solver}.json"));
        runs += 1;
        stable += usize::from(run_twice(&["solve", input, "--solver", solver, "--out", out.to_str().unwrap()], &out));
    }
    for figure in ["inc", "broc", "excs", "inconic"] {
        let out = dir.path().join(format!("{figure}.svg"));
        runs += 1;
        stable += usize::from(run_twice(&["render", input, "--figure", figure, "--out", out.to_str().unwrap()], &out));
    }
    Outcome::new(stable == runs, format!("{stable}/{runs} invocations byte-identical across two runs"))
}

fn main() {
    let ts = triangles(TRIALS, 0);
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 12] = [
        ("closed form, mobius and perspectrix agree", Box::new(|| c1_agreement(&ts))),
        ("sides pass through their vertices, two solutions", Box::new(|| c2_incidence(&ts))),
        ("solution symmedian is the contact cevian point", Box::new(|| c3_symmedian(&ts))),
        ("shared brocard objects", Box::new(|| c4_shared(&ts))),
        ("closed-form brocard points", Box::new(|| c5_brocard_points(&ts))),
        ("brocard axes through X20, incircle axis through X1 and X7", Box::new(|| c6_concurrence(&ts))),
        ("twenty-three vertices from one", Box::new(|| c7_twenty_three(&ts))),
        ("inconic solutions share an inscribed conic", Box::new(c8_inconic)),
        ("center correspondences", Box::new(c9_correspondences)),
        ("golden-ratio structure", Box::new(c10_golden)),
        ("general solver trichotomy", Box::new(c11_trichotomy)),
        ("byte-stable solve and render", Box::new(c12_determinism)),
    ];
    println!("acceptance, seed {}", env_seed());
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} C{:<2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
