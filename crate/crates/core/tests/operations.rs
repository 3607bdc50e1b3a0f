mod common;

use octatile::assembler::{
    assemble_hole, assemble_rotational, build_row_tiling, build_strip, build_triunit, build_type1_variation,
    extend_search, glue, spiral_two_fold, GlueStep, Mode, WedgeParams,
};
use octatile::geometry::{
    angles_from_b, realize, reflect_to_octa, spec_for_hole, spec_for_rotational, EdgeLabel, ExactAngle, Isometry,
    OctaUnit, Point, VertexLabel,
};
use octatile::validator::{
    boundary_cycles, build_incidence, check_edge_to_edge, check_hole, check_overlap_gap, classify_vertices,
    detect_point_symmetry, detect_symmetry, validate, VertexKind,
};
use octatile::{Error, Tiling};

fn kinds(t: &Tiling) -> Vec<VertexKind> {
    classify_vertices(t).into_iter().map(|c| c.kind).collect()
}

fn octa_pair(b: ExactAngle) -> Tiling {
    let seed = Tiling::seed(angles_from_b(b).unwrap(), Mode::Freeform).unwrap();
    glue(&seed, GlueStep { host_tile: 0, host_edge: EdgeLabel::DE, guest_edge: EdgeLabel::DE, guest_reflected: true }).unwrap()
}

/// Float angle sums at every distinct vertex point, straight from tile geometry.
fn brute_force_sums(t: &Tiling) -> Vec<(Point, f64, Vec<VertexLabel>)> {
    let mut out: Vec<(Point, f64, Vec<VertexLabel>)> = Vec::new();
    for g in t.geoms() {
        for v in VertexLabel::ALL {
            let p = g.vertex(v);
            let a = g.interior_angle_deg(v);
            match out.iter_mut().find(|(q, _, _)| q.dist(p) < 1e-7) {
                Some(entry) => {
                    entry.1 += a;
                    entry.2.push(v);
                }
                None => out.push((p, a, vec![v])),
            }
        }
    }
    out
}

#[test]
fn angles_from_b_examples() {
    let s = angles_from_b(ExactAngle::degrees(120)).unwrap();
    let want = [100, 120, 140, 70, 110].map(ExactAngle::degrees);
    assert_eq!(s.angles(), want);
    assert!((s.e() - 1.732).abs() < 5e-4);
    let s = angles_from_b(ExactAngle::degrees(60)).unwrap();
    assert_eq!(s.angles(), [140, 60, 160, 80, 100].map(ExactAngle::degrees));
    assert!((s.e() - 1.0).abs() < 1e-12);
    let s = angles_from_b(ExactAngle::degrees(90)).unwrap();
    assert_eq!(s.angles().into_iter().sum::<ExactAngle>(), ExactAngle::degrees(540));
}

#[test]
fn family_specs() {
    let s = spec_for_rotational(5).unwrap();
    assert_eq!(s.angles(), [132, 72, 156, 78, 102].map(ExactAngle::degrees));
    assert!((s.e() - 1.176).abs() < 5e-4);
    let s = spec_for_rotational(13).unwrap();
    for (a, want) in s.angles().iter().zip([161.54, 27.69, 170.77, 85.38, 94.62]) {
        assert!((a.to_f64() - want).abs() < 0.01);
    }
    assert!((spec_for_rotational(6).unwrap().e() - 1.0).abs() < 1e-12);
    let s = spec_for_hole(7).unwrap();
    for (a, want) in s.angles().iter().zip([77.14, 154.29, 128.57, 64.29, 115.71]) {
        assert!((a.to_f64() - want).abs() < 0.01);
    }
    assert!((s.e() - 1.950).abs() < 5e-4);
    let s = spec_for_hole(10).unwrap();
    assert_eq!(s.angles(), [108, 108, 144, 72, 108].map(ExactAngle::degrees));
    assert!((s.e() - 1.618).abs() < 5e-4);
    assert_eq!(spec_for_hole(9).unwrap(), spec_for_rotational(3).unwrap());
}

#[test]
fn realized_coordinates_match_float_walk() {
    let s = angles_from_b(ExactAngle::degrees(120)).unwrap();
    let g = realize(&s).unwrap();
    let (pts, closure) = common::walk([100.0, 120.0, 140.0, 70.0, 110.0], 2.0 * 60f64.to_radians().sin());
    assert!(closure < 1e-12);
    for (p, q) in g.vertices.iter().zip(pts) {
        assert!(p.dist(q) < 1e-12);
    }
    let d = g.vertex(VertexLabel::D);
    let e = g.vertex(VertexLabel::E);
    assert!((d.x - 1.3264).abs() < 1e-4 && (d.y - 1.8508).abs() < 1e-4);
    assert!((e.x + 0.1736).abs() < 1e-4 && (e.y - 0.9848).abs() < 1e-4);
    assert!((d.dist(e) - 1.732).abs() < 5e-4);

    let g = realize(&spec_for_rotational(6).unwrap()).unwrap();
    for edge in EdgeLabel::ALL {
        assert!((g.edge_length(edge) - 1.0).abs() < 1e-12);
    }
    for n in 3..=18 {
        assert!(realize(&spec_for_rotational(n).unwrap()).unwrap().signed_area() > 0.0);
    }
}

#[test]
fn octa_unit_examples() {
    let unit = reflect_to_octa(&realize(&spec_for_rotational(6).unwrap()).unwrap());
    let b = unit.boundary();
    for i in 0..8 {
        assert!((b[i].dist(b[(i + 1) % 8]) - 1.0).abs() < 1e-12);
    }
    for n in [3, 5, 9, 14] {
        let s = spec_for_rotational(n).unwrap();
        let d = s.angle(VertexLabel::D);
        assert_eq!(OctaUnit::boundary_angles(&s)[3], d + d);
    }
    let angles = OctaUnit::boundary_angles(&spec_for_rotational(4).unwrap());
    assert_eq!(angles[7], ExactAngle::degrees(210));
}

#[test]
fn isometry_examples() {
    let t = Isometry::new(ExactAngle::degrees(33), Point::new(0.5, -2.0), true);
    assert_eq!(Isometry::IDENTITY.compose(&t), t);
    let step = Isometry::rotate(ExactAngle::new(120, 7).unwrap());
    let seven = (0..7).fold(Isometry::IDENTITY, |acc, _| acc.compose(&step));
    assert_eq!(seven.rotation(), ExactAngle::degrees(120));
    let r = Isometry::reflect_across(ExactAngle::degrees(37), Point::new(1.0, 2.0));
    assert!(r.compose(&r).approx_eq(&Isometry::IDENTITY, 1e-12));
}

#[test]
fn glue_examples() {
    let pair = octa_pair(ExactAngle::degrees(72));
    let unit = reflect_to_octa(pair.prototile());
    for (p, q) in pair.geom(1).unwrap().vertices.iter().zip(unit.mirror.vertices) {
        assert!(p.dist(q) < 1e-12);
    }
    let seed = Tiling::seed(spec_for_rotational(5).unwrap(), Mode::Freeform).unwrap();
    let bad = GlueStep { host_tile: 0, host_edge: EdgeLabel::AB, guest_edge: EdgeLabel::DE, guest_reflected: false };
    assert!(matches!(glue(&seed, bad), Err(Error::LengthMismatch { .. })));
    let seed = Tiling::seed(spec_for_rotational(6).unwrap(), Mode::Freeform).unwrap();
    let ok = GlueStep { host_tile: 0, host_edge: EdgeLabel::DE, guest_edge: EdgeLabel::AB, guest_reflected: false };
    assert_eq!(glue(&seed, ok).unwrap().len(), 2);
}

#[test]
fn strip_examples() {
    let s = spec_for_rotational(6).unwrap();
    assert_eq!(build_strip(&s, 1).unwrap().len(), 2);
    for k in 1..6 {
        assert_eq!(build_strip(&spec_for_hole(11).unwrap(), k).unwrap().len(), 2 * k as usize);
    }
    let strip = build_strip(&s, 3).unwrap();
    assert_eq!(strip.len(), 6);
    let mut full = 0;
    for (_, sum, labels) in brute_force_sums(&strip) {
        assert!(sum < 360.0 + 1e-9);
        if (sum - 360.0).abs() < 1e-9 {
            full += 1;
            assert_eq!(labels.iter().map(|&l| s.angle(l)).sum::<ExactAngle>(), ExactAngle::FULL);
        }
    }
    assert!(full > 0);
    assert!(kinds(&strip).iter().all(|k| matches!(k, VertexKind::Abc | VertexKind::Ddee)));
}

#[test]
fn triunit_examples() {
    let s = spec_for_rotational(4).unwrap();
    let third = s.b().checked_scale(1, 3).unwrap();
    let t = build_triunit(&s, third, WedgeParams::new(1).unwrap()).unwrap();
    assert_eq!(t.len(), 6);
    let k = kinds(&t);
    assert!(!k.is_empty());
    assert!(k.iter().all(|k| matches!(k, VertexKind::Abc | VertexKind::Eec | VertexKind::Ddab)), "{k:?}");
    for depth in 1..=4 {
        let t = build_triunit(&s, third, WedgeParams::new(depth).unwrap()).unwrap();
        assert_eq!(t.len(), (3 * depth * (depth + 1)) as usize);
    }
}

#[test]
fn triunit_inner_boundary_follows_the_m_gon() {
    let m = 12;
    let s = spec_for_hole(m).unwrap();
    let t = build_triunit(&s, ExactAngle::new(360, m as i64).unwrap(), WedgeParams::new(2).unwrap()).unwrap();
    let cover = boundary_cycles(&t, &build_incidence(&t));
    let turn = (360.0 / m as f64).to_radians();
    let found = cover.cycles.iter().any(|c| {
        let p = &c.points;
        let n = p.len();
        (0..n).any(|i| {
            let seg = |k: usize| (p[(i + k) % n], p[(i + k + 1) % n]);
            let unit = (0..3).all(|k| {
                let (a, b) = seg(k);
                (a.dist(b) - 1.0).abs() < 1e-9
            });
            let turns = (0..2).all(|k| {
                let (a, b) = seg(k);
                let (_, c) = seg(k + 1);
                let (u, v) = (b - a, c - b);
                (u.cross(v).atan2(u.dot(v)).abs() - turn).abs() < 1e-9
            });
            unit && turns
        })
    });
    assert!(found);
}

#[test]
fn rotational_examples() {
    let t = assemble_rotational(3, 1).unwrap();
    assert_eq!(t.len(), 18);
    let s = t.spec();
    let centre = brute_force_sums(&t)
        .into_iter()
        .find(|(p, _, _)| p.norm() < 1e-9)
        .expect("vertex at the center");
    assert_eq!(centre.2, vec![VertexLabel::B; 3]);
    assert_eq!(centre.2.iter().map(|&l| s.angle(l)).sum::<ExactAngle>(), ExactAngle::FULL);
    let sym = detect_symmetry(&assemble_rotational(5, 2).unwrap());
    assert_eq!((sym.rotation_order, sym.reflection_axes), (5, 0));
    for depth in 1..=2 {
        assert!(assemble_rotational(6, depth).unwrap().spec().is_equilateral());
    }
}

#[test]
fn rotational_vertices_are_full_or_boundary() {
    let t = assemble_rotational(3, 1).unwrap();
    let s = t.spec();
    let boundary: Vec<Point> = boundary_cycles(&t, &build_incidence(&t)).cycles.into_iter().flat_map(|c| c.points).collect();
    for (p, sum, labels) in brute_force_sums(&t) {
        let on_boundary = boundary.iter().any(|q| q.dist(p) < 1e-7);
        if !on_boundary {
            assert!((sum - 360.0).abs() < 1e-9);
            assert_eq!(labels.iter().map(|&l| s.angle(l)).sum::<ExactAngle>(), ExactAngle::FULL);
        }
    }
}

#[test]
fn hole_examples() {
    let t = assemble_hole(8, 1).unwrap();
    let h = check_hole(&t, 8).unwrap();
    assert_eq!(h.vertices.len(), 8);
    for i in 0..8 {
        assert!((h.vertices[i].dist(h.vertices[(i + 1) % 8]) - 1.0).abs() < 1e-9);
    }
    let sym = detect_symmetry(&t);
    assert_eq!((sym.rotation_order, sym.reflection_axes), (8, 0));
    assert!((assemble_hole(18, 1).unwrap().spec().e() - 1.0).abs() < 1e-12);

    let hole9 = assemble_hole(9, 1).unwrap();
    let rot3 = assemble_rotational(3, 1).unwrap();
    assert_eq!(hole9.spec(), rot3.spec());
    assert!(validate(&hole9).hole.is_some());
    assert!(check_hole(&rot3, 9).is_err());
    assert!(kinds(&rot3).contains(&VertexKind::CenterB { k: 3 }));
    assert!(!kinds(&hole9).iter().any(|k| matches!(k, VertexKind::CenterB { .. })));

    let h12 = check_hole(&assemble_hole(12, 1).unwrap(), 12).unwrap();
    assert_eq!(h12.vertices.len(), 12);
    let h7 = check_hole(&assemble_hole(7, 2).unwrap(), 7).unwrap();
    let r = 1.0 / (2.0 * (180.0f64 / 7.0).to_radians().sin());
    assert!((r - 1.152).abs() < 5e-4);
    for p in &h7.vertices {
        assert!((p.dist(h7.center) - r).abs() < 1e-9);
    }
    assert!(matches!(check_hole(&assemble_rotational(5, 1).unwrap(), 5), Err(Error::NoHole)));
}

#[test]
fn row_examples() {
    for n in [3, 5, 8] {
        let s = spec_for_rotational(n).unwrap();
        assert!(validate(&build_row_tiling(&s, &[false, false], 3).unwrap()).valid);
        assert!(validate(&build_row_tiling(&s, &[false, true], 3).unwrap()).valid);
        assert_eq!(build_row_tiling(&s, &[false], 4).unwrap().tiles(), build_strip(&s, 4).unwrap().tiles());
    }
}

#[test]
fn any_flip_sequence_validates() {
    let s = spec_for_hole(11).unwrap();
    for bits in 0u32..64 {
        let flips: Vec<bool> = (0..6).map(|i| bits >> i & 1 == 1).collect();
        let t = build_row_tiling(&s, &flips, 3).unwrap();
        let r = validate(&t);
        assert!(r.valid && r.edge_to_edge, "{flips:?}: {:?}", r.problems);
        assert!(r.vertex_classes.iter().all(|c| matches!(c.kind, VertexKind::Abc | VertexKind::Ddee)));
    }
}

#[test]
fn slid_strips_have_flat_vertices() {
    let s = spec_for_rotational(7).unwrap();
    let t = build_type1_variation(&s, &[false, true, true, false], 3).unwrap();
    let r = validate(&t);
    assert!(r.valid, "{:?}", r.problems);
    assert!(!r.edge_to_edge);
    assert!(!check_edge_to_edge(&t));
    assert!(kinds(&t).contains(&VertexKind::FlatDe));
    let flat = build_type1_variation(&s, &[false, false], 3).unwrap();
    assert!(check_edge_to_edge(&flat));
}

#[test]
fn spiral_examples() {
    let r = validate(&spiral_two_fold(8, 1).unwrap());
    assert!(r.valid && r.edge_to_edge && r.symmetry.rotation_order == 2);
    let t = spiral_two_fold(10, 2).unwrap();
    assert!(validate(&t).valid);
    assert_eq!(t.spec().angles(), [108, 108, 144, 72, 108].map(ExactAngle::degrees));
    let sym = detect_symmetry(&spiral_two_fold(14, 1).unwrap());
    assert_eq!((sym.rotation_order, sym.reflection_axes), (2, 0));
}

#[test]
fn search_examples() {
    let seed = Tiling::seed(spec_for_rotational(5).unwrap(), Mode::Freeform).unwrap();
    let steps = extend_search(&seed, 0, EdgeLabel::DE, 16).unwrap();
    assert_eq!(steps.len(), 2);
    assert!(steps.iter().all(|s| s.guest_edge == EdgeLabel::DE));
    assert!(steps.iter().any(|s| s.guest_reflected));

    let eq = Tiling::seed(spec_for_rotational(6).unwrap(), Mode::Freeform).unwrap();
    for edge in EdgeLabel::ALL {
        assert!(!extend_search(&eq, 0, edge, 16).unwrap().is_empty());
    }
    let pair = octa_pair(ExactAngle::degrees(72));
    assert!(matches!(extend_search(&pair, 0, EdgeLabel::DE, 16), Err(Error::NotFrontier { .. })));
}

#[test]
fn incidence_examples() {
    let inc = build_incidence(&octa_pair(ExactAngle::degrees(100)));
    let singles = inc.edges.values().filter(|v| v.len() == 1).count();
    let doubles: Vec<_> = inc.edges.values().filter(|v| v.len() == 2).collect();
    assert_eq!(singles, 8);
    assert_eq!(doubles.len(), 1);
    assert!(doubles[0].iter().all(|&(_, e)| e == EdgeLabel::DE));

    let empty = Tiling::new(spec_for_rotational(4).unwrap(), Mode::Freeform).unwrap();
    let inc = build_incidence(&empty);
    assert!(inc.vertices.is_empty() && inc.edges.is_empty());
}

#[test]
fn classification_examples() {
    for n in [3, 7, 12] {
        assert!(kinds(&assemble_rotational(n, 1).unwrap()).contains(&VertexKind::CenterB { k: n }));
    }
    let s = spec_for_rotational(5).unwrap();
    assert!(kinds(&build_type1_variation(&s, &[true, false, true], 3).unwrap()).contains(&VertexKind::FlatDe));
}

#[test]
fn overlap_and_gap_examples() {
    for t in [assemble_rotational(4, 2).unwrap(), assemble_hole(14, 2).unwrap(), spiral_two_fold(10, 1).unwrap()] {
        assert_eq!(check_overlap_gap(&t), (vec![], false));
    }
    let mut dup = assemble_rotational(5, 1).unwrap();
    let copy = dup.tiles()[7];
    let id = dup.push(copy);
    assert_eq!(check_overlap_gap(&dup).0, vec![(7, id)]);

    let s = spec_for_rotational(5).unwrap();
    let far = Isometry::translate(Point::new(50.0, -20.0));
    let apart = Tiling::with_tiles(s, Mode::Freeform, vec![Isometry::IDENTITY, far]).unwrap();
    assert_eq!(check_overlap_gap(&apart), (vec![], false));
    assert!(check_edge_to_edge(&Tiling::seed(s, Mode::Freeform).unwrap()));
}

#[test]
fn bare_polygon_has_dihedral_symmetry() {
    for m in [7, 12, 18] {
        let pts: Vec<Point> = (0..m)
            .map(|i| {
                let a = (360.0 * i as f64 / m as f64 + 11.0).to_radians();
                Point::new(3.0 + a.cos(), -1.0 + a.sin())
            })
            .collect();
        let sym = detect_point_symmetry(&pts, 1e-9);
        assert_eq!((sym.rotation_order, sym.reflection_axes), (m, m));
        assert!(sym.center.dist(Point::new(3.0, -1.0)) < 1e-9);
    }
}
