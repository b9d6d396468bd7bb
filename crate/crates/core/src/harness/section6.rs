//! Exact verification of the eight-edge scene: disjointness facts,
//! occlusion points, their barycentric coordinates and the final counts.

use serde::Serialize;

use crate::geom::{orient2d, rat, Plane, Point3, Rat};
use crate::scene::{
    check_symmetry, closed_polygons_meet, eight_edge_scene, Isometry, Polygon, Scene,
};
use crate::visibility::World;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section6Report {
    pub pass: bool,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }
}

fn p(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Point3 {
    Point3::new(rat(x.0, x.1), rat(y.0, y.1), rat(z.0, z.1))
}

fn corners(poly: &Polygon) -> Vec<Point3> {
    poly.vertices().cloned().collect()
}

/// Parameter where the ray `t * d` meets the plane.
fn ray_plane(pl: &Plane, d: &Point3) -> Option<Rat> {
    let den = pl.normal.dot(d);
    (!den.is_zero()).then(|| &pl.offset / &den)
}

/// Barycentric coordinates of `x` in triangle `abc`, if `x` is on its plane.
pub fn barycentric(x: &Point3, tri: &[Point3]) -> Option<[Rat; 3]> {
    let (a, b, c) = (&tri[0], &tri[1], &tri[2]);
    let n = (a - c).cross(&(b - c));
    let n2 = n.norm2();
    if n2.is_zero() || !n.dot(&(x - c)).is_zero() {
        return None;
    }
    let alpha = &(x - c).cross(&(b - c)).dot(&n) / &n2;
    let beta = &(a - c).cross(&(x - c)).dot(&n) / &n2;
    let gamma = &(&Rat::one() - &alpha) - &beta;
    Some([alpha, beta, gamma])
}

fn combine(w: &[Rat; 3], tri: &[Point3]) -> Point3 {
    (0..3).fold(Point3::origin(), |acc, i| &acc + &tri[i].scale(&w[i]))
}

/// y-coordinates where the polygon boundary crosses the plane `x = c`.
fn section_ys(poly: &Polygon, c: &Rat) -> Vec<Rat> {
    let vs = corners(poly);
    let mut ys = Vec::new();
    for i in 0..vs.len() {
        let (a, b) = (&vs[i], &vs[(i + 1) % vs.len()]);
        let (da, db) = (&a.x - c, &b.x - c);
        if da.signum() * db.signum() < 0 || da.is_zero() {
            let t = &da / &(&da - &db);
            ys.push(a.lerp(b, &t).y);
        }
    }
    ys.sort();
    ys.dedup();
    ys
}

/// Two convex polygons in the plane meet only at `q`: some line through `q`
/// has one closed polygon on each side, with `q` the only point of the first
/// on the line.
fn touch_only_at(first: &[(Rat, Rat)], second: &[(Rat, Rat)], q: &(Rat, Rat)) -> bool {
    let sides = |poly: &[(Rat, Rat)], dir: &(Rat, Rat)| -> Vec<i32> {
        let far = (&q.0 + &dir.0, &q.1 + &dir.1);
        poly.iter().map(|v| orient2d(q, &far, v).as_i32()).collect()
    };
    let dirs: Vec<(Rat, Rat)> = first
        .iter()
        .chain(second)
        .flat_map(|a| {
            first
                .iter()
                .chain(second)
                .map(move |b| (&b.0 - &a.0, &b.1 - &a.1))
        })
        .filter(|d| !(d.0.is_zero() && d.1.is_zero()))
        .collect();
    dirs.iter().any(|d| {
        let s1 = sides(first, d);
        let s2 = sides(second, d);
        let on_line = first
            .iter()
            .zip(&s1)
            .filter(|(v, s)| **s == 0 && *v != q)
            .count();
        [1, -1].iter().any(|&sg| {
            on_line == 0
                && s1.iter().all(|&s| s == 0 || s == sg)
                && s2.iter().all(|&s| s == 0 || s == -sg)
        })
    })
}

pub fn verify_section6() -> Section6Report {
    let scene = eight_edge_scene();
    let mut c = Checks(Vec::new());
    let poly = |id: &str| scene.polygon_by_id(id).expect("builtin polygon").clone();
    let (r1, r2, t1, t2, t3, t4) = (
        poly("R1"),
        poly("R2"),
        poly("T1"),
        poly("T2"),
        poly("T3"),
        poly("T4"),
    );

    disjointness(&mut c, &scene, [&r1, &r2, &t1, &t2, &t3, &t4]);

    let alpha2 = Plane::new(Point3::int(7, -2, 15), Rat::int(-65));
    let alpha4 = Plane::new(Point3::int(7, 2, -15), Rat::int(-65));
    c.add(
        "plane of T2 is 7x - 2y + 15z + 65 = 0",
        t2.plane().same_plane(&alpha2),
        "",
    );
    c.add(
        "plane of T4 is 7x + 2y - 15z + 65 = 0",
        t4.plane().same_plane(&alpha4),
        "",
    );
    let beta = Plane::new(Point3::int(1, 0, 0), Rat::int(5));
    c.add("plane of R1 is x = 5", r1.plane().same_plane(&beta), "");

    let published = [
        (
            "a1",
            Point3::int(5, 1, -15),
            &t2,
            rat(65, 192),
            p((325, 192), (65, 192), (-325, 64)),
            Some([rat(149, 8832), rat(519, 1472), rat(5569, 8832)]),
        ),
        (
            "a2",
            Point3::int(5, -1, -15),
            &t2,
            rat(65, 188),
            p((325, 188), (-65, 188), (-975, 188)),
            Some([rat(261, 8648), rat(1423, 4324), rat(5541, 8648)]),
        ),
        (
            "b1",
            Point3::int(15, -2, 35),
            &r1,
            rat(1, 3),
            p((5, 1), (-2, 3), (35, 3)),
            None,
        ),
        (
            "b2",
            Point3::int(7, 0, -8),
            &r1,
            rat(5, 7),
            p((5, 1), (0, 1), (-40, 7)),
            None,
        ),
        (
            "c1",
            Point3::int(15, -2, 35),
            &t4,
            rat(65, 424),
            p((975, 424), (-65, 212), (2275, 424)),
            Some([rat(153, 19504), rat(1577, 4876), rat(13043, 19504)]),
        ),
        (
            "c2",
            Point3::int(-7, -8, 3),
            &t4,
            rat(13, 22),
            p((-91, 22), (-52, 11), (39, 22)),
            Some([rat(21, 1012), rat(193, 253), rat(219, 1012)]),
        ),
    ];
    for (name, vertex, occluder, t, point, coeffs) in published {
        let got_t = ray_plane(occluder.plane(), &vertex);
        c.add(
            &format!("{name}: ray parameter"),
            got_t.as_ref() == Some(&t),
            format!("{got_t:?} vs {t}"),
        );
        let got = vertex.scale(&t);
        c.add(&format!("{name}: point"), got == point, format!("{got:?}"));
        c.add(
            &format!("{name}: in {}", occluder.id()),
            occluder.contains_closed(&point),
            "",
        );
        c.add(
            &format!("{name}: before the vertex"),
            t.is_positive() && t < Rat::one(),
            "",
        );
        if let Some(w) = coeffs {
            let tri = corners(occluder);
            let mine = barycentric(&point, &tri);
            c.add(
                &format!("{name}: barycentric coefficients"),
                mine.as_ref() == Some(&w),
                format!("{mine:?}"),
            );
            c.add(
                &format!("{name}: coefficients reproduce the point"),
                combine(&w, &tri) == point,
                "",
            );
            let convex =
                w.iter().all(Rat::is_positive) && w.iter().cloned().sum::<Rat>() == Rat::one();
            c.add(&format!("{name}: convex combination"), convex, "");
        }
    }

    let world = World::scene(&scene);
    let o = Point3::origin();
    let vv = world.visible_vertices(&o);
    c.add("origin sees no vertex", vv.is_empty(), format!("{vv:?}"));
    match world.count_visible_edges(&o) {
        Ok((weak, positive)) => {
            c.add(
                "origin sees exactly eight edges",
                weak == 8,
                format!("{weak}"),
            );
            c.add(
                "origin sees positive portions of exactly eight edges",
                positive == 8,
                format!("{positive}"),
            );
        }
        Err(e) => c.add("edge counts", false, e.to_string()),
    }
    occluded_edges(&mut c, &world, &o);

    let pass = c.0.iter().all(|k| k.pass);
    Section6Report { pass, checks: c.0 }
}

fn disjointness(c: &mut Checks, scene: &Scene, [r1, r2, t1, t2, t3, _t4]: [&Polygon; 6]) {
    let polys = scene.polygons();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let meet = closed_polygons_meet(&polys[i], &polys[j]);
            c.add(
                &format!("{} and {} are disjoint", polys[i].id(), polys[j].id()),
                !meet,
                "",
            );
        }
    }
    let five = Rat::int(5);
    c.add(
        "R1 and R2 lie in x = 5 and x = -5",
        r1.vertices().all(|v| v.x == five) && r2.vertices().all(|v| v.x == -&five),
        "",
    );
    let ys1 = section_ys(t1, &five);
    c.add(
        "T1 meets x = 5 at y = -52/11 and -8/7",
        ys1 == vec![rat(-52, 11), rat(-8, 7)],
        format!("{ys1:?}"),
    );
    let ys2 = section_ys(t2, &five);
    c.add(
        "T2 meets x = 5 at y = -65/11 and -10/7",
        ys2 == vec![rat(-65, 11), rat(-10, 7)],
        format!("{ys2:?}"),
    );
    let xz = |poly: &Polygon| -> Vec<(Rat, Rat)> {
        poly.vertices()
            .map(|v| (v.x.clone(), v.z.clone()))
            .collect()
    };
    let q = (Rat::int(7), Rat::int(-8));
    let touch = touch_only_at(&xz(t1), &xz(t2), &q);
    c.add(
        "T1 and T2 project to y = 0 touching only at (7, 0, -8)",
        touch,
        "",
    );
    let v = Point3::int(7, 0, -8);
    c.add(
        "(7, 0, -8) is a vertex of T1 and not of T2",
        t1.vertices().any(|x| x == &v) && !t2.vertices().any(|x| x == &v),
        "",
    );
    let only_zero = |poly: &Polygon, sign: i32, at: &Point3| {
        poly.vertices().all(|x| x == at || x.y.signum() == sign)
            && poly.vertices().filter(|x| x.y.is_zero()).count() == 1
    };
    c.add(
        "T1 has negative y except at (7, 0, -8)",
        only_zero(t1, -1, &v),
        "",
    );
    c.add(
        "T3 has positive y except at (7, 0, 8)",
        only_zero(t3, 1, &Point3::int(7, 0, 8)),
        "",
    );
    let phi1 =
        Isometry::from_int([[1, 0, 0], [0, -1, 0], [0, 0, -1]], (0, 0, 0)).expect("orthogonal");
    let phi2 =
        Isometry::from_int([[-1, 0, 0], [0, 0, -1], [0, 1, 0]], (0, 0, 0)).expect("orthogonal");
    c.add(
        "(x, y, z) -> (x, -y, -z) is a symmetry",
        check_symmetry(scene, &phi1),
        "",
    );
    c.add(
        "(x, y, z) -> (-x, -z, y) is a symmetry",
        check_symmetry(scene, &phi2),
        "",
    );
    c.add(
        "(x, y, z) -> (-x, -z, y) has period 4",
        phi2.power(4) == Isometry::identity() && phi2.power(2) != Isometry::identity(),
        "",
    );
}

fn occluded_edges(c: &mut Checks, world: &World, o: &Point3) {
    let find = |a: Point3, b: Point3| {
        (0..world.edges().len()).find(|&e| {
            let (x, y) = &world.edges()[e];
            (x == &a && y == &b) || (x == &b && y == &a)
        })
    };
    let edges = [
        (
            "R1 edge with z < 0",
            Point3::int(5, -1, -15),
            Point3::int(5, 1, -15),
        ),
        (
            "R1 edge with z > 0",
            Point3::int(5, 1, 15),
            Point3::int(5, -1, 15),
        ),
        (
            "T1 edge between its positive-x vertices",
            Point3::int(15, -2, 35),
            Point3::int(7, 0, -8),
        ),
        (
            "T1 edge between its positive-z vertices",
            Point3::int(15, -2, 35),
            Point3::int(-7, -8, 3),
        ),
    ];
    for (name, a, b) in edges {
        let ok = find(a, b)
            .is_some_and(|e| world.edge_visibility(o, e).is_ok_and(|v| v.seen.is_empty()));
        c.add(&format!("{name} is occluded"), ok, "");
    }
    let t1_open = find(Point3::int(7, 0, -8), Point3::int(-7, -8, 3)).is_some_and(|e| {
        world
            .visible_subsegments(o, e)
            .is_ok_and(|v| v.has_positive_part())
    });
    c.add("third T1 edge is partly visible", t1_open, "");
}
