use serde::Serialize;

use crate::geom::{Point3, Rat};
use crate::sphere::{Arc, GreatSemicircle, Sod};
use crate::visibility::World;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMember {
    /// Source edge, for covers induced by a scene.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<usize>,
    pub semicircle: GreatSemicircle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemicircleCover {
    pub members: Vec<CoverMember>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("arc {0} has no source edge")]
    NoSource(usize),
    #[error("viewpoint lies on the line of edge {0}")]
    OnEdgeLine(usize),
}

/// The projection of the whole line through edge `(a, b)` seen from `p`.
pub fn line_semicircle(p: &Point3, a: &Point3, b: &Point3) -> Option<GreatSemicircle> {
    let da = a - p;
    let dir = b - a;
    let n = da.cross(&(b - p));
    let foot = &da - &dir.scale(&(&da.dot(&dir) / &dir.norm2()));
    GreatSemicircle::new(n, foot).ok()
}

/// One semicircle per edge carrying an arc; each arc lies inside the
/// projection of its edge's line.
pub fn induced_cover(world: &World, p: &Point3, sod: &Sod) -> Result<SemicircleCover, CoverError> {
    let mut edges: Vec<usize> = Vec::new();
    for a in sod.arcs() {
        let e = a.source_edge.ok_or(CoverError::NoSource(a.id))?;
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    edges.sort_unstable();
    let members = edges
        .into_iter()
        .map(|e| {
            let (a, b) = &world.edges()[e];
            line_semicircle(p, a, b)
                .map(|s| CoverMember {
                    edge: Some(e),
                    semicircle: s,
                })
                .ok_or(CoverError::OnEdgeLine(e))
        })
        .collect::<Result<_, _>>()?;
    Ok(SemicircleCover { members })
}

/// A semicircle on the arc's own circle holding it in its relative interior.
pub fn arc_semicircle(a: &Arc) -> GreatSemicircle {
    let uv = a.u.dot(&a.v);
    let m = if !uv.is_negative() {
        &a.u + &a.v
    } else {
        // tangent at u towards v, tilted back towards u
        let t = a.normal.cross(&a.u);
        let slack = &(&(&a.u.norm2() * &a.v.norm2()) - &(&uv * &uv)) / &(&Rat::int(-2) * &uv);
        &t + &a.u.scale(&slack)
    };
    GreatSemicircle::new(a.normal.clone(), m).expect("arc circle")
}

/// The trivial cover with one semicircle per arc.
pub fn arc_cover(arcs: &[Arc]) -> SemicircleCover {
    SemicircleCover {
        members: arcs
            .iter()
            .map(|a| CoverMember {
                edge: None,
                semicircle: arc_semicircle(a),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub pass: bool,
    pub size: usize,
    /// For each arc, the first member containing it.
    pub membership: Vec<Option<usize>>,
}

pub fn check_cover(arcs: &[Arc], cover: &SemicircleCover) -> CoverCheck {
    let membership: Vec<Option<usize>> = arcs
        .iter()
        .map(|a| {
            cover
                .members
                .iter()
                .position(|m| m.semicircle.interior_contains(a))
        })
        .collect();
    CoverCheck {
        pass: membership.iter().all(Option::is_some),
        size: cover.members.len(),
        membership,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_semicircles_hold_wide_arcs() {
        for (u, v) in [
            ((1, 0, 0), (0, 1, 0)),
            ((1, 0, 0), (-9, 1, 0)),
            ((1, 2, 3), (-3, -1, 1)),
        ] {
            let a = Arc::new(0, Point3::int(u.0, u.1, u.2), Point3::int(v.0, v.1, v.2)).unwrap();
            assert!(arc_semicircle(&a).interior_contains(&a));
        }
    }

    #[test]
    fn line_projection() {
        let s = line_semicircle(
            &Point3::origin(),
            &Point3::int(-3, 1, 2),
            &Point3::int(5, 1, 2),
        )
        .unwrap();
        assert!(s.m.dot(&Point3::int(100, 1, 2)).is_positive());
        assert!(s.m.dot(&Point3::int(-100, 1, 2)).is_positive());
        assert!(s.normal.dot(&Point3::int(7, 1, 2)).is_zero());
    }
}
