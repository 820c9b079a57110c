use castillon_core::ccp_closed::solutions_for;
use castillon_core::ccp_general::{
    chord_involution, set_deviation, solve_ccp_mobius, solve_ccp_perspectrix, CcpProblem, CircleParam, Multiplicity,
};
use castillon_core::geom::circle_for;
use castillon_core::{CircleData, CircleTag, Point, TriangleData, Vertex};
use proptest::prelude::*;

fn circle() -> impl Strategy<Value = CircleData> {
    (-5.0f64..5.0, -5.0f64..5.0, 0.1f64..10.0).prop_map(|(x, y, r)| CircleData::new(Point::new(x, y), r).unwrap())
}

/// A point at `scale` radii from the center, in a random direction.
fn point_at(c: &CircleData, scale: f64, angle: f64) -> Point {
    c.at_angle(angle) * scale + c.center * (1.0 - scale)
}

fn pairs_match(t: &TriangleData, tag: CircleTag, found: &[[Point; 3]; 2], tol: f64) -> bool {
    let (m1, m2) = solutions_for(t, tag);
    let closed = [m1.cartesian(t).unwrap(), m2.cartesian(t).unwrap()];
    let d = |i: usize, j: usize| set_deviation(&closed[i], &found[j]);
    d(0, 0).max(d(1, 1)).min(d(0, 1).max(d(1, 0))) <= tol * circle_for(t, tag).radius
}

proptest! {
    #[test]
    fn chord_maps_are_involutions(c in circle(), scale in 0.0f64..3.0, angle in 0.0f64..6.3) {
        prop_assume!((scale - 1.0).abs() > 1e-3);
        let m = chord_involution(&c, point_at(&c, scale, angle)).unwrap();
        prop_assert!(m.involution_defect() <= 1e-12);
    }

    #[test]
    fn chord_map_lands_on_the_chord(c in circle(), scale in 0.0f64..3.0, angle in 0.0f64..6.3, theta in 0.0f64..6.3) {
        prop_assume!((scale - 1.0).abs() > 1e-3);
        let p = point_at(&c, scale, angle);
        let start = c.at_angle(theta);
        prop_assume!(start.distance(p) > 1e-3 * c.radius);
        let end = chord_involution(&c, p).unwrap().apply(&CircleParam::of_point(&c, start)).point_on(&c);
        prop_assert!(c.on_circle_residual(end) <= 1e-12);
        let (u, v) = (end - start, p - start);
        prop_assert!(u.cross(v).abs() <= 1e-9 * v.norm() * c.radius);
    }

    #[test]
    fn rotating_the_points_keeps_the_vertex_sets(
        c in circle(),
        pts in prop::collection::vec((0.0f64..0.9, 0.0f64..6.3), 3..6),
    ) {
        let points: Vec<Point> = pts.iter().map(|(s, a)| point_at(&c, *s, *a)).collect();
        let mut turned = points.clone();
        turned.rotate_left(1);
        let a = solve_ccp_mobius(&CcpProblem::new(c, points).unwrap());
        let b = solve_ccp_mobius(&CcpProblem::new(c, turned).unwrap());
        let (Ok(a), Ok(b)) = (a, b) else { return Ok(()) };
        prop_assert_eq!(a.len(), b.len());
        for s in &a {
            let best = b.iter().map(|x| set_deviation(&s.vertices, &x.vertices)).fold(f64::INFINITY, f64::min);
            prop_assert!(best <= 1e-7 * c.radius);
        }
    }

    /// One chord point outside reverses orientation on the circle, so the
    /// composed map has two real fixed points.
    #[test]
    fn one_exterior_point_gives_two_solutions(
        c in circle(),
        inner in prop::collection::vec((0.0f64..0.95, 0.0f64..6.3), 2),
        outer in (1.05f64..5.0, 0.0f64..6.3),
    ) {
        let mut points: Vec<Point> = inner.iter().map(|(s, a)| point_at(&c, *s, *a)).collect();
        points.push(point_at(&c, outer.0, outer.1));
        let prob = CcpProblem::new(c, points).unwrap();
        let sols = solve_ccp_mobius(&prob).unwrap();
        prop_assert_eq!(sols.len(), 2);
        for s in &sols {
            prop_assert_eq!(s.multiplicity, Multiplicity::Distinct);
            prop_assert!(s.incidence_residual(&prob) <= 1e-8);
        }
    }
}

#[test]
fn close_to_center_points_have_no_solution() {
    let c = CircleData::new(Point::new(0.0, 0.0), 1.0).unwrap();
    let pts = vec![Point::new(0.01, 0.0), Point::new(0.0, 0.01), Point::new(-0.01, 0.005)];
    let prob = CcpProblem::new(c, pts).unwrap();
    assert!(solve_ccp_mobius(&prob).unwrap().is_empty());
    assert!(prob.composed_map().unwrap().fixed_point_discriminant() < 0.0);
}

#[test]
fn perspectrix_on_the_equilateral_incircle() {
    let t = TriangleData::from_sides(1.0, 1.0, 1.0).unwrap();
    let circle = circle_for(&t, CircleTag::Incircle);
    let p = solve_ccp_perspectrix(&t, &circle).unwrap();
    assert!(pairs_match(&t, CircleTag::Incircle, &p.cartesian, 1e-9));
}

#[test]
fn perspectrix_on_the_3_4_5_a_excircle() {
    let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
    let tag = CircleTag::Excircle(Vertex::A);
    let p = solve_ccp_perspectrix(&t, &circle_for(&t, tag)).unwrap();
    assert!(pairs_match(&t, tag, &p.cartesian, 1e-9));
}

#[test]
fn mobius_on_every_tritangent_circle_of_6_9_13() {
    let t = TriangleData::from_sides(6.0, 9.0, 13.0).unwrap();
    for tag in CircleTag::ALL {
        let sols = solve_ccp_mobius(&CcpProblem::for_triangle(&t, circle_for(&t, tag))).unwrap();
        let found = [
            [sols[0].vertices[0], sols[0].vertices[1], sols[0].vertices[2]],
            [sols[1].vertices[0], sols[1].vertices[1], sols[1].vertices[2]],
        ];
        assert!(pairs_match(&t, tag, &found, 1e-12), "{}", tag.name());
    }
}
