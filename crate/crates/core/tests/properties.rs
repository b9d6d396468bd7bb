use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sodvis::geom::{
    det3, orient3d, point_in_polygon_2d, rat, segment_crosses_polygon, Point3, PointLocation, Rat,
};
use sodvis::harness::{perturbed_eight_edge, random_scene, ray_oracle, theorem_suite, TrialConfig};
use sodvis::scene::{
    brush, cube, eight_edge_scene, tetrahedron, validate_scene, Isometry, Polygon, Polyhedron,
    Scene,
};
use sodvis::sod::{analyze, swirl_in_hemisphere, Hemisphere, Orientation};
use sodvis::sphere::{build_sod, build_vismap, Arc, SodFile};
use sodvis::visibility::{PointClass, World};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Point3> {
    (small_rat(), small_rat(), small_rat()).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

/// Points around the eight-edge scene, on a grid fine enough to land on
/// polygons now and then.
fn scene_point() -> impl Strategy<Value = Point3> {
    let c = (-48i64..=48).prop_map(|n| rat(n, 2));
    (c.clone(), c.clone(), c).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

fn signed_permutation() -> impl Strategy<Value = [[i64; 3]; 3]> {
    (0usize..6, prop::array::uniform3(prop::bool::ANY)).prop_map(|(k, s)| {
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut m = [[0; 3]; 3];
        for r in 0..3 {
            m[r][perms[k][r]] = if s[r] { 1 } else { -1 };
        }
        m
    })
}

fn corpus() -> Vec<Polyhedron> {
    vec![tetrahedron(), cube(&Rat::one()).unwrap(), brush(2).unwrap()]
}

/// Reference winding number of the projected boundary around `q`, or
/// `None` when `q` lies on it.
fn winding(poly: &Polygon, p: &Point3, axis: usize) -> Option<i32> {
    let proj = |v: &Point3| match axis {
        0 => (v.y.clone(), v.z.clone()),
        1 => (v.z.clone(), v.x.clone()),
        _ => (v.x.clone(), v.y.clone()),
    };
    let q = proj(p);
    let mut w = 0;
    for lp in poly.loops() {
        for i in 0..lp.len() {
            let a = proj(&lp[i]);
            let b = proj(&lp[(i + 1) % lp.len()]);
            let cross = &(&(&b.0 - &a.0) * &(&q.1 - &a.1)) - &(&(&b.1 - &a.1) * &(&q.0 - &a.0));
            let within = |v: &Rat, l: &Rat, h: &Rat| (l <= v && v <= h) || (h <= v && v <= l);
            if cross.is_zero() && within(&q.0, &a.0, &b.0) && within(&q.1, &a.1, &b.1) {
                return None;
            }
            if a.1 <= q.1 && b.1 > q.1 && cross.is_positive() {
                w += 1;
            } else if a.1 > q.1 && b.1 <= q.1 && cross.is_negative() {
                w -= 1;
            }
        }
    }
    Some(w)
}

#[test]
fn point_in_polygon_matches_winding_reference() {
    let mut polys: Vec<Polygon> = eight_edge_scene().polygons().to_vec();
    for p in corpus() {
        polys.extend(p.facets().polygons().iter().cloned());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for poly in &polys {
        let n = &poly.plane().normal;
        let axis = n.dominant_axis();
        let (o1, o2) = ((axis + 1) % 3, (axis + 2) % 3);
        let (mut lo, mut hi) = (poly.outer()[0].clone(), poly.outer()[0].clone());
        for v in poly.vertices() {
            for i in 0..3 {
                let set = |p: &mut Point3, c: Rat| match i {
                    0 => p.x = c,
                    1 => p.y = c,
                    _ => p.z = c,
                };
                if v.coord(i) < lo.coord(i) {
                    set(&mut lo, v.coord(i).clone());
                }
                if v.coord(i) > hi.coord(i) {
                    set(&mut hi, v.coord(i).clone());
                }
            }
        }
        for _ in 0..1000 {
            let mut pick = |i: usize| {
                let u = Rat::new(rng.gen_range(-20..=84), 64);
                lo.coord(i) + &(&(hi.coord(i) - lo.coord(i)) * &u)
            };
            let (a, b) = (pick(o1), pick(o2));
            // solve n . x = offset for the dominant coordinate
            let rest = &(n.coord(o1) * &a) + &(n.coord(o2) * &b);
            let c = &(&poly.plane().offset - &rest) / n.coord(axis);
            let mut xyz = [Rat::zero(), Rat::zero(), Rat::zero()];
            xyz[axis] = c;
            xyz[o1] = a;
            xyz[o2] = b;
            let [x, y, z] = xyz;
            let p = Point3::new(x, y, z);
            let got = point_in_polygon_2d(poly, &p).unwrap();
            let want = match winding(poly, &p, axis) {
                None => PointLocation::Boundary,
                Some(0) => PointLocation::Outside,
                Some(_) => PointLocation::Inside,
            };
            assert_eq!(got, want, "{} at {p}", poly.id());
        }
    }
}

proptest! {
    #[test]
    fn orient3d_flips_under_transpositions(a in point(), b in point(), c in point(), d in point()) {
        let s = orient3d(&a, &b, &c, &d);
        prop_assert_eq!(orient3d(&b, &a, &c, &d), s.flip());
        prop_assert_eq!(orient3d(&a, &c, &b, &d), s.flip());
        prop_assert_eq!(orient3d(&a, &b, &d, &c), s.flip());
        prop_assert_eq!(orient3d(&d, &b, &c, &a), s.flip());
        prop_assert_eq!(orient3d(&a, &b, &c, &d), s);
    }

    #[test]
    fn predicate_signs_are_scale_invariant(
        a in point(), b in point(), c in point(), d in point(),
        k in (1i64..50, 1i64..50).prop_map(|(n, m)| rat(n, m)),
    ) {
        let s = |p: &Point3| p.scale(&k);
        prop_assert_eq!(orient3d(&s(&a), &s(&b), &s(&c), &s(&d)), orient3d(&a, &b, &c, &d));
        prop_assert_eq!(det3(&s(&a), &s(&b), &s(&c)).signum(), det3(&a, &b, &c).signum());
        let poly = Polygon::new("t", vec![a.clone(), b.clone(), c.clone()]);
        if let Ok(poly) = poly {
            let big = poly.map_points(s).unwrap();
            let q = Point3::int(0, 0, 0);
            prop_assert_eq!(
                segment_crosses_polygon(&s(&d), &q, &big),
                segment_crosses_polygon(&d, &q, &poly)
            );
        }
    }

    #[test]
    fn segment_crossing_is_symmetric(p in scene_point(), q in scene_point()) {
        for poly in eight_edge_scene().polygons() {
            prop_assert_eq!(
                segment_crosses_polygon(&p, &q, poly),
                segment_crosses_polygon(&q, &p, poly)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scene_sightlines_are_symmetric(p in scene_point(), q in scene_point()) {
        let w = World::scene(&eight_edge_scene());
        prop_assert_eq!(w.sees_point(&p, &q), w.sees_point(&q, &p));
    }

    #[test]
    fn polyhedron_sightlines_are_symmetric(
        k in 0usize..2,
        p in (-12i64..=12, -12i64..=12, -12i64..=12),
        q in (-12i64..=12, -12i64..=12, -12i64..=12),
    ) {
        let w = World::polyhedron(&corpus()[k]);
        let pt = |(x, y, z): (i64, i64, i64)| Point3::new(rat(x, 4), rat(y, 4), rat(z, 4));
        let (p, q) = (pt(p), pt(q));
        prop_assert_eq!(w.sees_point(&p, &q), w.sees_point(&q, &p));
    }

    #[test]
    fn counts_are_invariant_under_isometries(
        m in signed_permutation(),
        t in (-9i64..=9, -9i64..=9, -9i64..=9),
        p in scene_point(),
    ) {
        let iso = Isometry::from_int(m, t).unwrap();
        let s = eight_edge_scene();
        let moved = Scene::new(
            s.polygons().iter().map(|f| f.map_points(|v| iso.apply(v)).unwrap()).collect(),
        );
        let before = World::scene(&s);
        let after = World::scene(&moved);
        let q = iso.apply(&p);
        prop_assert_eq!(before.count_visible_edges(&p), after.count_visible_edges(&q));
        prop_assert_eq!(before.visible_vertices(&p), after.visible_vertices(&q));
    }

    #[test]
    fn weak_count_never_below_positive_count(p in scene_point()) {
        let w = World::scene(&eight_edge_scene());
        let (weak, positive) = w.count_visible_edges(&p).unwrap();
        prop_assert!(positive <= weak);
        for v in w.all_edge_visibility(&p).unwrap() {
            prop_assert!(v.clear.subset_of(&v.seen));
            for s in [&v.seen, &v.clear] {
                for (i, iv) in s.intervals.iter().enumerate() {
                    prop_assert!(!iv.lo.is_negative() && iv.hi <= Rat::one() && iv.lo <= iv.hi);
                    if let Some(next) = s.intervals.get(i + 1) {
                        prop_assert!(iv.hi <= next.lo);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn adding_a_polygon_never_enlarges_visible_sets(seed in 0u64..10_000, p in scene_point()) {
        let cfg = TrialConfig { seed, triangles: 4, ..TrialConfig::default() };
        let s = random_scene(&cfg).unwrap();
        let old = &s.polygons()[..3];
        let base = World::scene(&Scene::new(old.to_vec()));
        let more = World::scene(&Scene::new(s.polygons().to_vec()));
        for e in 0..base.edges().len() {
            prop_assert_eq!(&base.edges()[e], &more.edges()[e]);
            let a = base.edge_visibility(&p, e).unwrap();
            let b = more.edge_visibility(&p, e).unwrap();
            prop_assert!(b.seen.subset_of(&a.seen), "edge {} seen {:?} vs {:?}", e, b.seen, a.seen);
            prop_assert!(b.clear.subset_of(&a.clear), "edge {} clear {:?} vs {:?}", e, b.clear, a.clear);
        }
    }

    #[test]
    fn oracle_agrees_on_random_scenes(seed in 0u64..10_000, p in scene_point()) {
        let cfg = TrialConfig { seed, triangles: 4, ..TrialConfig::default() };
        let w = World::scene(&random_scene(&cfg).unwrap());
        let r = ray_oracle(&w, &p, 300, seed);
        prop_assert!(r.agrees(), "{:?}", r.disagreements);
    }

    #[test]
    fn polyhedron_bounds_hold(
        k in 0usize..3,
        c in (-24i64..=24, -24i64..=24, -24i64..=60),
    ) {
        let poly = &corpus()[k];
        let w = World::polyhedron(poly);
        let p = Point3::new(rat(c.0, 8), rat(c.1, 8), rat(c.2, 8));
        let (weak, positive) = w.count_visible_edges(&p).unwrap();
        prop_assert!(weak >= 6);
        match w.classify_point(&p) {
            PointClass::Exterior => prop_assert!(positive >= 3),
            class => {
                prop_assert!(positive >= 6);
                if k == 1 && class == PointClass::Interior {
                    prop_assert!(weak >= 12);
                }
            }
        }
    }

    #[test]
    fn projected_arcs_are_minor(seed in 0u64..10_000, p in scene_point()) {
        let cfg = TrialConfig { seed, ..TrialConfig::default() };
        let w = World::scene(&random_scene(&cfg).unwrap());
        if let Ok(m) = build_vismap(&w, &p) {
            for a in &m.arcs {
                prop_assert!(a.check().is_ok());
                prop_assert!(!a.u.cross(&a.v).is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn deformed_copies_obey_the_diagram_laws(seed in 0u64..1_000_000) {
        let (s, p) = perturbed_eight_edge(seed);
        let w = World::scene(&s);
        prop_assert!(w.visible_vertices(&p).is_empty());
        let sod = build_sod(&w, &p).unwrap();
        let r = analyze(&sod, Some((&w, &p))).unwrap();
        prop_assert!(r.law_failures().is_empty(), "{:?}", r.law_failures());
        for a in 0..sod.len() {
            let [x, y] = sod.feeds_into(a);
            prop_assert!(!sod.feeds_into(x).contains(&a) && !sod.feeds_into(y).contains(&a));
            for o in [Orientation::Cw, Orientation::Ccw] {
                let n = r.swirls.iter().filter(|w| w.orientation == o && w.contains_arc(a)).count();
                prop_assert!(n <= 1);
            }
        }
        let v = r.swirls.len();
        prop_assert!(r.swirl_graph.edges.len() + 4 <= 2 * v);
        prop_assert!(r.cover.unwrap().check.size >= 8);
    }

    #[test]
    fn hemisphere_walk_finds_an_eye_inside(
        seed in 0u64..1_000_000,
        pole in (-60i64..=60, -60i64..=60, -60i64..=60),
    ) {
        let (s, p) = perturbed_eight_edge(seed);
        let sod = build_sod(&World::scene(&s), &p).unwrap();
        let Some(h) = Hemisphere::new(Point3::int(pole.0, pole.1, pole.2)) else {
            return Ok(());
        };
        let walk = swirl_in_hemisphere(&sod, &h).unwrap();
        prop_assert!(walk.swirl.corners.iter().all(|d| h.contains(d)));
        let faces = sod.map().faces();
        let eye = &faces[walk.swirl.eye.unwrap()];
        prop_assert!(eye.corners().all(|d| h.contains(d)));
    }
}

#[test]
fn builtins_validate() {
    assert!(validate_scene(&eight_edge_scene()).is_valid());
    for p in corpus() {
        assert!(validate_scene(p.facets()).is_valid());
    }
}

#[test]
fn generators_and_suites_are_deterministic() {
    let cfg = TrialConfig {
        seed: 21,
        trials: 3,
        ..TrialConfig::default()
    };
    assert_eq!(random_scene(&cfg).unwrap(), random_scene(&cfg).unwrap());
    assert_eq!(perturbed_eight_edge(5), perturbed_eight_edge(5));
    let a = serde_json::to_string(&theorem_suite(&cfg)).unwrap();
    let b = serde_json::to_string(&theorem_suite(&cfg)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sod_files_round_trip() {
    let w = World::scene(&eight_edge_scene());
    let sod = build_sod(&w, &Point3::origin()).unwrap();
    let text = serde_json::to_string(&sod.to_file()).unwrap();
    let back: SodFile = serde_json::from_str(&text).unwrap();
    assert_eq!(&back.to_map().unwrap(), sod.map());
    let mut wrong = back.clone();
    wrong.feeds_into.as_mut().unwrap().swap(0, 1);
    assert!(wrong.to_map().is_err());
    // abstract arcs without provenance load too
    let bare = SodFile {
        viewpoint: None,
        arcs: sod
            .arcs()
            .iter()
            .map(|a| Arc::new(a.id, a.u.clone(), a.v.clone()).unwrap())
            .collect(),
        feeds_into: None,
    };
    assert_eq!(bare.to_map().unwrap().hosts, sod.map().hosts);
}
