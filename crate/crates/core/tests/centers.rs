use castillon_core::centers::{center, Provenance, REGISTRY};
use castillon_core::geom::{bary_direction, bary_to_cartesian, circle_for, line_distance, touch_point};
use castillon_core::{CircleTag, HomoBary, Point, TriangleData, Vertex};
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = TriangleData> {
    (0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0).prop_filter_map("not a usable triangle", |(a, b, c)| {
        let t = TriangleData::from_sides(a, b, c).ok()?;
        (t.max_side() * t.max_side() / (2.0 * t.area()) <= 1e3).then_some(t)
    })
}

fn at(idx: u32, t: &TriangleData) -> Point {
    bary_to_cartesian(&center(idx, t).unwrap(), t).unwrap()
}

fn direction_gap(p: Point, q: Point) -> f64 {
    (p.cross(q) / (p.norm() * q.norm())).abs()
}

#[test]
fn x2_on_any_triangle() {
    let t = TriangleData::from_sides(2.0, 3.0, 4.0).unwrap();
    assert!(center(2, &t).unwrap().angular_distance(&HomoBary::new(1.0, 1.0, 1.0)) < 1e-15);
}

#[test]
fn x20_of_3_4_5_reflects_x4_in_x3() {
    let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
    let want = at(3, &t) * 2.0 - at(4, &t);
    assert!(at(20, &t).distance(want) <= 1e-12);
}

#[test]
fn provenance_marks_untested_centers() {
    let trusted: Vec<u32> = REGISTRY
        .iter()
        .filter(|c| c.provenance == Provenance::TranscriptionTrusted)
        .map(|c| c.index)
        .collect();
    assert_eq!(trusted, [175, 176, 279, 371, 372, 481, 482, 514, 1151, 1152, 3053]);
}

proptest! {
    #[test]
    fn every_center_is_homogeneous(t in triangle()) {
        let [a, b, c] = t.sides().to_array();
        let twice = TriangleData::from_sides(2.0 * a, 2.0 * b, 2.0 * c).unwrap();
        for def in REGISTRY.iter() {
            let d = def.evaluate(&t).angular_distance(&def.evaluate(&twice));
            prop_assert!(d <= 1e-10, "X{} off by {d:e}", def.index);
        }
    }

    #[test]
    fn every_center_follows_a_relabeling(t in triangle()) {
        let [a, b, c] = t.sides().to_array();
        let turned = TriangleData::from_sides(b, c, a).unwrap();
        for def in REGISTRY.iter() {
            let [x, y, z] = def.evaluate(&t).to_array();
            let d = def.evaluate(&turned).angular_distance(&HomoBary::new(y, z, x));
            prop_assert!(d <= 1e-10, "X{} off by {d:e}", def.index);
        }
    }

    #[test]
    fn incenter_is_equidistant_from_the_sides(t in triangle()) {
        let p = at(1, &t);
        let r = t.inradius();
        for v in Vertex::ALL {
            prop_assert!((line_distance(&t.side_line(v), p).abs() - r).abs() <= 1e-10 * t.max_side());
        }
    }

    #[test]
    fn centroid_is_the_vertex_mean(t in triangle()) {
        let [a, b, c] = t.vertices();
        prop_assert!(at(2, &t).distance((a + b + c) * (1.0 / 3.0)) <= 1e-12 * t.max_side());
    }

    #[test]
    fn circumcenter_is_equidistant_from_the_vertices(t in triangle()) {
        let o = at(3, &t);
        let r = t.circumradius();
        for p in t.vertices() {
            prop_assert!((o.distance(p) - r).abs() <= 1e-9 * r);
        }
    }

    #[test]
    fn orthocenter_lies_on_the_altitudes(t in triangle()) {
        let h = at(4, &t);
        let [a, b, c] = t.vertices();
        for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
            let side = r - q;
            prop_assert!(((h - p).dot(side) / (side.norm() * t.circumradius())).abs() <= 1e-8);
        }
    }

    #[test]
    fn symmedian_distances_follow_the_sides(t in triangle()) {
        let k = at(6, &t);
        let d: Vec<f64> = Vertex::ALL.iter().map(|v| line_distance(&t.side_line(*v), k).abs() / t.sides().get(*v)).collect();
        prop_assert!((d[0] - d[1]).abs().max((d[1] - d[2]).abs()) <= 1e-10 * d[0].max(1e-300) + 1e-13);
    }

    #[test]
    fn gergonne_is_on_each_contact_cevian(t in triangle()) {
        let g = at(7, &t);
        let circle = circle_for(&t, CircleTag::Incircle);
        for v in Vertex::ALL {
            let (p, q) = (t.vertex(v), touch_point(&circle, &t, v));
            prop_assert!(direction_gap(g - p, q - p) <= 1e-9);
        }
    }

    #[test]
    fn isodynamic_points_weight_vertex_distances_by_sides(t in triangle()) {
        for idx in [15, 16] {
            let p = at(idx, &t);
            let w: Vec<f64> = Vertex::ALL.iter().map(|v| p.distance(t.vertex(*v)) * t.sides().get(*v)).collect();
            let spread = w.iter().cloned().fold(f64::MIN, f64::max) - w.iter().cloned().fold(f64::MAX, f64::min);
            prop_assert!(spread <= 1e-8 * w[0], "X{idx}: {w:?}");
        }
    }

    #[test]
    fn de_longchamps_reflects_the_orthocenter(t in triangle()) {
        let want = at(3, &t) * 2.0 - at(4, &t);
        prop_assert!(at(20, &t).distance(want) <= 1e-9 * t.circumradius());
    }

    #[test]
    fn schoute_center_inverts_the_symmedian(t in triangle()) {
        let (o, k) = (at(3, &t), at(6, &t));
        let d = k - o;
        prop_assume!(d.norm() > 1e-6 * t.circumradius());
        let r = t.circumradius();
        let want = o + d * (r * r / d.dot(d));
        prop_assert!(at(187, &t).distance(want) <= 1e-8 * want.distance(o).max(r));
    }

    #[test]
    fn x390_reflects_gergonne_in_incenter(t in triangle()) {
        let want = at(1, &t) * 2.0 - at(7, &t);
        prop_assert!(at(390, &t).distance(want) <= 1e-9 * t.max_side());
    }

    #[test]
    fn x1350_reflects_symmedian_in_circumcenter(t in triangle()) {
        let want = at(3, &t) * 2.0 - at(6, &t);
        prop_assert!(at(1350, &t).distance(want) <= 1e-9 * t.circumradius());
    }

    #[test]
    fn x511_points_along_the_brocard_axis(t in triangle()) {
        let axis = at(6, &t) - at(3, &t);
        prop_assume!(axis.norm() > 1e-6 * t.circumradius());
        let p = center(511, &t).unwrap();
        prop_assert!(p.sum().abs() <= 1e-12 * p.to_array().iter().map(|v| v.abs()).sum::<f64>());
        prop_assert!(direction_gap(bary_direction(&p, &t), axis) <= 1e-8);
    }

    #[test]
    fn x512_is_the_lemoine_axis_at_infinity(t in triangle()) {
        let [a, b, c] = t.sides().to_array();
        let (a2, b2, c2) = (a * a, b * b, c * c);
        // trilinear polar of X6 meets the line at infinity
        let lemoine = [b2 * c2, c2 * a2, a2 * b2];
        let hit = HomoBary::new(lemoine[1] - lemoine[2], lemoine[2] - lemoine[0], lemoine[0] - lemoine[1]);
        prop_assume!(hit.max_abs() > 1e-9 * a2 * b2);
        prop_assert!(center(512, &t).unwrap().angular_distance(&hit) <= 1e-9);
    }

    #[test]
    fn x516_points_along_the_soddy_line(t in triangle()) {
        let line = at(7, &t) - at(1, &t);
        prop_assume!(line.norm() > 1e-6 * t.max_side());
        let p = center(516, &t).unwrap();
        prop_assert!(direction_gap(bary_direction(&p, &t), line) <= 1e-8);
    }
}
