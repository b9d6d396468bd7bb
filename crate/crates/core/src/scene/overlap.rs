//! Exact pairwise intersection tests between planar polygons.

use crate::geom::{orient2d, project_2d, PointLocation, Rat, Sign};

use super::polygon::{segments_touch, Polygon};

type P2 = (Rat, Rat);

/// Do the relative interiors of `a` and `b` share a point?
pub fn interiors_overlap(a: &Polygon, b: &Polygon) -> bool {
    if a.plane().is_parallel(b.plane()) {
        if a.plane().same_plane(b.plane()) {
            coplanar_interiors_overlap(a, b)
        } else {
            false
        }
    } else {
        line_pieces(a, b)
            .iter()
            .any(|m| a.locate(m) == PointLocation::Inside && b.locate(m) == PointLocation::Inside)
    }
}

/// Do the closed polygons `a` and `b` share a point?
pub fn closed_polygons_meet(a: &Polygon, b: &Polygon) -> bool {
    if a.plane().is_parallel(b.plane()) {
        if !a.plane().same_plane(b.plane()) {
            return false;
        }
        let edges_meet = a
            .edges()
            .any(|(p, q)| b.edges().any(|(r, s)| segments_touch(p, q, r, s)));
        edges_meet
            || a.vertices().any(|v| b.contains_closed(v))
            || b.vertices().any(|v| a.contains_closed(v))
    } else {
        line_pieces(a, b)
            .iter()
            .any(|m| a.contains_closed(m) && b.contains_closed(m))
    }
}

/// Sample points along the intersection line of two non-parallel planes:
/// every point where either boundary meets the other plane plus the midpoints
/// between consecutive ones. Membership in each closed polygon is constant on
/// the open pieces in between.
fn line_pieces(a: &Polygon, b: &Polygon) -> Vec<crate::geom::Point3> {
    let dir = a.plane().normal.cross(&b.plane().normal);
    let mut pts = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        let pl = y.plane();
        for (p, q) in x.edges() {
            let sp = pl.eval(p);
            let sq = pl.eval(q);
            if sp.is_zero() {
                pts.push(p.clone());
            } else if sp.signum() * sq.signum() < 0 {
                let t = &sp / &(&sp - &sq);
                pts.push(p.lerp(q, &t));
            }
        }
    }
    let mut keyed: Vec<(Rat, crate::geom::Point3)> =
        pts.into_iter().map(|p| (dir.dot(&p), p)).collect();
    keyed.sort_by(|l, r| l.0.cmp(&r.0));
    keyed.dedup_by(|l, r| l.0 == r.0);
    let mut out = Vec::with_capacity(keyed.len() * 2);
    for (i, (_, p)) in keyed.iter().enumerate() {
        out.push(p.clone());
        if let Some((_, q)) = keyed.get(i + 1) {
            out.push(p.midpoint(q));
        }
    }
    out
}

fn sub(a: &P2, b: &P2) -> P2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross2(a: &P2, b: &P2) -> Rat {
    &(&a.0 * &b.1) - &(&a.1 * &b.0)
}

fn dot2(a: &P2, b: &P2) -> Rat {
    &(&a.0 * &b.0) + &(&a.1 * &b.1)
}

/// Parameters in (0, 1) along `[a, b]` where it meets the closed segment `[c, d]`.
fn split_params(a: &P2, b: &P2, c: &P2, d: &P2, out: &mut Vec<Rat>) {
    let r = sub(b, a);
    let s = sub(d, c);
    let den = cross2(&r, &s);
    let ca = sub(c, a);
    let open = |t: &Rat| t.is_positive() && *t < Rat::one();
    if den.is_zero() {
        if !cross2(&ca, &r).is_zero() {
            return;
        }
        let rr = dot2(&r, &r);
        for e in [c, d] {
            let t = &dot2(&sub(e, a), &r) / &rr;
            if open(&t) {
                out.push(t);
            }
        }
        return;
    }
    let t = &cross2(&ca, &s) / &den;
    let u = &cross2(&ca, &r) / &den;
    if open(&t) && !u.is_negative() && u <= Rat::one() {
        out.push(t);
    }
}

struct Flat {
    loops: Vec<Vec<P2>>,
    // +1 when the region is left of each directed projected edge
    side: i32,
}

fn flatten(p: &Polygon, axis: usize) -> Flat {
    let loops: Vec<Vec<P2>> = p
        .loops()
        .iter()
        .map(|lp| lp.iter().map(|v| project_2d(v, axis)).collect())
        .collect();
    let outer = &loops[0];
    let n = outer.len();
    let mut area = Rat::zero();
    for i in 0..n {
        area += &cross2(&outer[i], &outer[(i + 1) % n]);
    }
    Flat {
        loops,
        side: area.signum(),
    }
}

fn flat_edges(f: &Flat) -> impl Iterator<Item = (&P2, &P2)> {
    f.loops.iter().flat_map(|lp| {
        let n = lp.len();
        (0..n).map(move |i| (&lp[i], &lp[(i + 1) % n]))
    })
}

fn locate_flat(f: &Flat, q: &P2) -> (PointLocation, Option<P2>) {
    let mut inside = false;
    for (a, b) in flat_edges(f) {
        if orient2d(a, b, q) == Sign::Zero {
            let within = |v: &Rat, l: &Rat, h: &Rat| (v >= l && v <= h) || (v >= h && v <= l);
            if within(&q.0, &a.0, &b.0) && within(&q.1, &a.1, &b.1) {
                return (PointLocation::Boundary, Some(sub(b, a)));
            }
        }
        if (a.1 > q.1) != (b.1 > q.1) {
            let x = &a.0 + &(&(&(&q.1 - &a.1) * &(&b.0 - &a.0)) / &(&b.1 - &a.1));
            if q.0 < x {
                inside = !inside;
            }
        }
    }
    (
        if inside {
            PointLocation::Inside
        } else {
            PointLocation::Outside
        },
        None,
    )
}

/// Coplanar case: split every boundary edge of each polygon where the other
/// polygon's boundary meets it. The interiors overlap iff some piece runs
/// through the other's interior, or runs along the other's boundary with
/// both regions on the same side.
fn coplanar_interiors_overlap(a: &Polygon, b: &Polygon) -> bool {
    let axis = a.plane().normal.dominant_axis();
    let fa = flatten(a, axis);
    let fb = flatten(b, axis);
    for (x, y) in [(&fa, &fb), (&fb, &fa)] {
        for (p, q) in flat_edges(x) {
            let mut ts = vec![Rat::zero(), Rat::one()];
            for (c, d) in flat_edges(y) {
                split_params(p, q, c, d, &mut ts);
            }
            ts.sort();
            ts.dedup();
            let dir = sub(q, p);
            for w in ts.windows(2) {
                let t = Rat::midpoint(&w[0], &w[1]);
                let m = (&p.0 + &(&dir.0 * &t), &p.1 + &(&dir.1 * &t));
                match locate_flat(y, &m) {
                    (PointLocation::Inside, _) => return true,
                    (PointLocation::Boundary, Some(ydir))
                        if dot2(&dir, &ydir).signum() * x.side * y.side > 0 =>
                    {
                        return true;
                    }
                    _ => {}
                }
            }
        }
    }
    false
}
