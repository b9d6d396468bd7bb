use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::swirls::{turn, Orientation, State, Swirl, SwirlError};
use crate::geom::{det3, Point3, Rat};
use crate::sphere::{Arc, Sod, SphereFace};

/// Open hemisphere `{d : d . pole > 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hemisphere {
    pub pole: Point3,
}

impl Hemisphere {
    pub fn new(pole: Point3) -> Option<Hemisphere> {
        (!pole.is_zero()).then_some(Hemisphere { pole })
    }

    pub fn contains(&self, d: &Point3) -> bool {
        d.dot(&self.pole).is_positive()
    }

    pub fn opposite(&self) -> Hemisphere {
        Hemisphere { pole: -&self.pole }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("no arc meets the hemisphere")]
    Empty,
    #[error("first walk left the hemisphere at arc {0}")]
    Escaped(usize),
    #[error("enclosed loop has zero signed area")]
    DegenerateLoop,
    #[error("swirl reached by the second walk has a corner outside the hemisphere")]
    EyeOutside(Box<Swirl>),
    #[error("swirl reached by the second walk has no eye face")]
    NoEye(Box<Swirl>),
    #[error(transparent)]
    Swirl(#[from] SwirlError),
}

/// A stretch of the first walk along one arc, `from` -> endpoint `end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Leg {
    pub arc: usize,
    pub end: usize,
    pub from: Point3,
    pub to: Point3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HemisphereWalk {
    pub legs: Vec<Leg>,
    /// Corners of the enclosed region in walk order.
    pub enclosed: Vec<Point3>,
    pub enclosed_orientation: Orientation,
    pub swirl: Swirl,
}

fn same_dir(a: &Point3, b: &Point3) -> bool {
    a.cross(b).is_zero() && a.dot(b).is_positive()
}

fn in_range(from: &Point3, to: &Point3, d: &Point3) -> bool {
    if same_dir(from, to) {
        return same_dir(from, d);
    }
    Arc::new(0, from.clone(), to.clone()).is_ok_and(|r| r.contains(d))
}

/// Sign of the signed area of a closed geodesic polygon inside the
/// hemisphere, after central projection onto the tangent plane at the pole
/// (which maps great-circle arcs to straight segments).
fn loop_orientation(corners: &[Point3], h: &Hemisphere) -> Option<Orientation> {
    let mut sum = Rat::zero();
    for i in 0..corners.len() {
        let (a, b) = (&corners[i], &corners[(i + 1) % corners.len()]);
        let w = &a.dot(&h.pole) * &b.dot(&h.pole);
        sum += &(&det3(a, b, &h.pole) / &w);
    }
    match sum.signum() {
        0 => None,
        s if s > 0 => Some(Orientation::Ccw),
        _ => Some(Orientation::Cw),
    }
}

/// First walk from an arc meeting `h`: go to an endpoint inside `h`, enter
/// the arc it feeds into, repeat until the walk returns to a point it has
/// already covered. Then walk again from a corner of the enclosed region,
/// always turning the way that region was traversed, until a swirl closes.
pub fn swirl_in_hemisphere(sod: &Sod, h: &Hemisphere) -> Result<HemisphereWalk, WalkError> {
    swirl_in_hemisphere_in(sod, &sod.map().faces(), h)
}

/// As `swirl_in_hemisphere`, with the faces of the diagram already enumerated.
pub fn swirl_in_hemisphere_in(
    sod: &Sod,
    faces: &[SphereFace],
    h: &Hemisphere,
) -> Result<HemisphereWalk, WalkError> {
    let arcs = sod.arcs();
    let a0 = (0..arcs.len())
        .find(|&a| h.contains(&arcs[a].u) || h.contains(&arcs[a].v))
        .ok_or(WalkError::Empty)?;
    let k0 = if h.contains(&arcs[a0].v) { 1 } else { 0 };
    let q = arcs[a0].endpoint(k0);
    let o = arcs[a0].endpoint(1 - k0);
    let start = if h.contains(o) {
        o.clone()
    } else {
        // where the arc crosses the hemisphere boundary
        &q.scale(&-o.dot(&h.pole)) + &o.scale(&q.dot(&h.pole))
    };
    let mut legs = vec![Leg {
        arc: a0,
        end: k0,
        from: start,
        to: q.clone(),
    }];
    let (hit, r) = loop {
        let last = legs.last().unwrap();
        let b = sod.feeds_into(last.arc)[last.end];
        let entry = last.to.clone();
        let right = turn(sod, (last.arc, last.end), Orientation::Cw).1;
        let kb = [right, 1 - right]
            .into_iter()
            .find(|&k| h.contains(arcs[b].endpoint(k)))
            .ok_or(WalkError::Escaped(b))?;
        let target = arcs[b].endpoint(kb).clone();
        if let Some(found) = first_revisit(&legs, b, &entry, &target) {
            break found;
        }
        legs.push(Leg {
            arc: b,
            end: kb,
            from: entry,
            to: target,
        });
    };
    let mut enclosed = vec![r];
    for leg in &legs[hit..] {
        if !same_dir(enclosed.last().unwrap(), &leg.to) {
            enclosed.push(leg.to.clone());
        }
    }
    if same_dir(&enclosed[0], enclosed.last().unwrap()) && enclosed.len() > 1 {
        enclosed.pop();
    }
    let way = loop_orientation(&enclosed, h).ok_or(WalkError::DegenerateLoop)?;

    let s0: State = match legs.get(hit + 1) {
        Some(l) => (l.arc, l.end),
        None => (legs[hit].arc, legs[hit].end),
    };
    let mut seen = vec![s0];
    let mut s = s0;
    let cycle = loop {
        s = turn(sod, s, way);
        if let Some(i) = seen.iter().position(|&x| x == s) {
            break seen[i..].to_vec();
        }
        seen.push(s);
    };
    let swirl = Swirl::from_cycle(sod, faces, &cycle, way)?;
    if !swirl.corners.iter().all(|c| h.contains(c)) {
        return Err(WalkError::EyeOutside(Box::new(swirl)));
    }
    match swirl.eye {
        Some(f) if faces[f].corners().all(|c| h.contains(c)) => {}
        Some(_) => return Err(WalkError::EyeOutside(Box::new(swirl))),
        None => return Err(WalkError::NoEye(Box::new(swirl))),
    }
    Ok(HemisphereWalk {
        legs,
        enclosed,
        enclosed_orientation: way,
        swirl,
    })
}

/// Earliest point of the stretch `entry -> target` on arc `b` already covered
/// by a leg, with that leg's index.
fn first_revisit(
    legs: &[Leg],
    b: usize,
    entry: &Point3,
    target: &Point3,
) -> Option<(usize, Point3)> {
    let ahead = Arc::new(0, entry.clone(), target.clone()).ok();
    let mut best: Option<(usize, Point3)> = None;
    for (i, leg) in legs.iter().enumerate().filter(|(_, l)| l.arc == b) {
        if in_range(&leg.from, &leg.to, entry) {
            return Some((i, entry.clone()));
        }
        let Some(ahead) = &ahead else { continue };
        for c in [&leg.from, &leg.to] {
            if !ahead.contains(c) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((_, d)) => ahead.cmp_along(c, d) == Ordering::Less,
            };
            if better {
                best = Some((i, c.clone()));
            }
        }
    }
    best
}

/// Pole of a great circle through the interiors of two eyes.
pub fn separating_pole(w1: &Swirl, w2: &Swirl) -> Option<Point3> {
    let p = w1.interior_point().cross(&w2.interior_point());
    (!p.is_zero()).then_some(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourSwirls {
    pub seeds: [usize; 2],
    pub pole: Point3,
    /// Swirls found in the hemisphere on each side of the separating circle.
    pub found: [Swirl; 2],
    pub distinct: bool,
}

/// Separate a clockwise and a counterclockwise eye by a great circle and
/// walk both open hemispheres it bounds.
pub fn four_swirls(
    sod: &Sod,
    faces: &[SphereFace],
    swirls: &[Swirl],
) -> Result<Option<FourSwirls>, WalkError> {
    let cw = swirls.iter().position(|w| w.orientation == Orientation::Cw);
    let ccw = swirls
        .iter()
        .position(|w| w.orientation == Orientation::Ccw);
    let (Some(i), Some(j)) = (cw, ccw) else {
        return Ok(None);
    };
    let Some(pole) = separating_pole(&swirls[i], &swirls[j]) else {
        return Ok(None);
    };
    let h = Hemisphere { pole: pole.clone() };
    let w3 = swirl_in_hemisphere_in(sod, faces, &h)?.swirl;
    let w4 = swirl_in_hemisphere_in(sod, faces, &h.opposite())?.swirl;
    let key = |w: &Swirl| (w.orientation, w.arcs.clone());
    let keys = [key(&swirls[i]), key(&swirls[j]), key(&w3), key(&w4)];
    let distinct = (0..4).all(|a| (a + 1..4).all(|b| keys[a] != keys[b]));
    Ok(Some(FourSwirls {
        seeds: [i, j],
        pole,
        found: [w3, w4],
        distinct,
    }))
}
