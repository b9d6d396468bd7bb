//! Exact orientation, incidence and containment predicates.

use serde::{Deserialize, Serialize};

use super::point::{Plane, Point3};
use super::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        match r.signum() {
            s if s < 0 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Where a point lies relative to a closed planar region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// Sign of `det(b - a, c - a, d - a)`.
pub fn orient3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> Sign {
    Sign::of(&det3(&(b - a), &(c - a), &(d - a)))
}

pub fn det3(u: &Point3, v: &Point3, w: &Point3) -> Rat {
    u.cross(v).dot(w)
}

/// Sign of `normal . p - offset`.
pub fn side_of_plane(pl: &Plane, p: &Point3) -> Sign {
    Sign::of(&pl.eval(p))
}

pub fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    (b - a).cross(&(c - a)).is_zero()
}

/// The axis-aligned boxes of `[p, q]` and `[a, b]` are disjoint.
fn boxes_apart(p: &Point3, q: &Point3, a: &Point3, b: &Point3) -> bool {
    (0..3).any(|i| {
        let span = |u: &Point3, v: &Point3| {
            let (x, y) = (u.coord(i), v.coord(i));
            if x <= y {
                (x.clone(), y.clone())
            } else {
                (y.clone(), x.clone())
            }
        };
        let (l1, h1) = span(p, q);
        let (l2, h2) = span(a, b);
        h1 < l2 || h2 < l1
    })
}

/// `p` on the closed segment `[a, b]`.
pub fn on_segment(p: &Point3, a: &Point3, b: &Point3) -> bool {
    let outside = |i: usize| {
        let (x, lo, hi) = (p.coord(i), a.coord(i), b.coord(i));
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        x < lo || x > hi
    };
    if (0..3).any(outside) || !collinear(a, b, p) {
        return false;
    }
    let ap = p - a;
    let ab = b - a;
    let t = ap.dot(&ab);
    !t.is_negative() && t <= ab.norm2()
}

/// Parameter `t` with `a + t d` collinear with `p` and `w`, if unique.
pub fn collinear_param(p: &Point3, w: &Point3, a: &Point3, d: &Point3) -> Option<Rat> {
    let pw = w - p;
    if pw.is_zero() {
        return None;
    }
    let c0 = pw.cross(&(a - p));
    let c1 = pw.cross(d);
    if c1.is_zero() {
        return None;
    }
    let axis = c1.dominant_axis();
    let t = -(c0.coord(axis) / c1.coord(axis));
    let check = &c0 + &c1.scale(&t);
    if check.is_zero() {
        Some(t)
    } else {
        None
    }
}

/// Parameters `(s, u)` of the intersection `p + s d1 = a + u d2` of two coplanar,
/// non-parallel lines.
fn line_line_params(p: &Point3, d1: &Point3, a: &Point3, d2: &Point3) -> Option<(Rat, Rat)> {
    let c = d1.cross(d2);
    if c.is_zero() {
        return None;
    }
    let w = a - p;
    if !w.dot(&c).is_zero() {
        return None;
    }
    let c2 = c.norm2();
    let s = &w.cross(d2).dot(&c) / &c2;
    let u = &w.cross(d1).dot(&c) / &c2;
    Some((s, u))
}

/// Whether the open segment `(p, q)` meets the closed segment `[a, b]`.
pub fn open_segment_meets_segment(p: &Point3, q: &Point3, a: &Point3, b: &Point3) -> bool {
    if boxes_apart(p, q, a, b) {
        return false;
    }
    let d1 = q - p;
    let d2 = b - a;
    if !det3(&d1, &(a - p), &(b - p)).is_zero() {
        return false;
    }
    if d1.cross(&d2).is_zero() {
        if !d1.cross(&(a - p)).is_zero() {
            return false;
        }
        // Collinear: compare parameters along p -> q.
        let l = d1.norm2();
        let sa = &(a - p).dot(&d1) / &l;
        let sb = &(b - p).dot(&d1) / &l;
        let (lo, hi) = if sa <= sb { (sa, sb) } else { (sb, sa) };
        return hi.is_positive() && lo < Rat::one();
    }
    match line_line_params(p, &d1, a, &d2) {
        Some((s, u)) => s.is_positive() && s < Rat::one() && !u.is_negative() && u <= Rat::one(),
        None => false,
    }
}

/// Whether the ray `{p + s d : s > 0}` meets the closed segment `[a, b]`.
pub fn ray_meets_segment(p: &Point3, d: &Point3, a: &Point3, b: &Point3) -> bool {
    let d2 = b - a;
    if !det3(d, &(a - p), &(b - p)).is_zero() {
        return false;
    }
    if d.cross(&d2).is_zero() {
        if !d.cross(&(a - p)).is_zero() {
            return false;
        }
        let sa = (a - p).dot(d);
        let sb = (b - p).dot(d);
        return sa.is_positive() || sb.is_positive();
    }
    match line_line_params(p, d, a, &d2) {
        Some((s, u)) => s.is_positive() && !u.is_negative() && u <= Rat::one(),
        None => false,
    }
}

/// 2D coordinates after dropping `axis`.
pub fn project_2d(p: &Point3, axis: usize) -> (Rat, Rat) {
    match axis {
        0 => (p.y.clone(), p.z.clone()),
        1 => (p.z.clone(), p.x.clone()),
        _ => (p.x.clone(), p.y.clone()),
    }
}

pub fn orient2d(a: &(Rat, Rat), b: &(Rat, Rat), c: &(Rat, Rat)) -> Sign {
    let v = &(&(&b.0 - &a.0) * &(&c.1 - &a.1)) - &(&(&b.1 - &a.1) * &(&c.0 - &a.0));
    Sign::of(&v)
}

fn on_segment_2d(p: &(Rat, Rat), a: &(Rat, Rat), b: &(Rat, Rat)) -> bool {
    if orient2d(a, b, p) != Sign::Zero {
        return false;
    }
    let within = |v: &Rat, l: &Rat, h: &Rat| (v >= l && v <= h) || (v >= h && v <= l);
    within(&p.0, &a.0, &b.0) && within(&p.1, &a.1, &b.1)
}

/// Classify a point against planar loops (outer boundary plus holes) by exact
/// boundary tests followed by crossing parity.
///
/// The point must lie on the loops' plane; `normal` picks the projection axis.
pub fn locate_in_loops(loops: &[Vec<Point3>], normal: &Point3, p: &Point3) -> PointLocation {
    let axis = normal.dominant_axis();
    let q = project_2d(p, axis);
    let mut inside = false;
    for lp in loops {
        let pts: Vec<(Rat, Rat)> = lp.iter().map(|v| project_2d(v, axis)).collect();
        let n = pts.len();
        for i in 0..n {
            let a = &pts[i];
            let b = &pts[(i + 1) % n];
            if on_segment_2d(&q, a, b) {
                return PointLocation::Boundary;
            }
            if (a.1 > q.1) != (b.1 > q.1) {
                // x-coordinate of the edge at height q.1
                let x = &a.0 + &(&(&(&q.1 - &a.1) * &(&b.0 - &a.0)) / &(&b.1 - &a.1));
                if q.0 < x {
                    inside = !inside;
                }
            }
        }
    }
    if inside {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// Intersection parameter of the line `a + t d` with a plane, if transversal.
pub fn plane_line_param(pl: &Plane, a: &Point3, d: &Point3) -> Option<Rat> {
    let den = pl.normal.dot(d);
    if den.is_zero() {
        None
    } else {
        Some(&(&pl.offset - &pl.normal.dot(a)) / &den)
    }
}
