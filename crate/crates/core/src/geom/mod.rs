//! Exact rational geometry kernel: scalars, points, directions, planes and
//! the predicates every other module is built on.
//!
//! Nothing here rounds. Directions on the unit sphere are nonzero vectors
//! modulo positive scaling, so no square roots are ever needed.

mod point;
mod predicates;
mod rat;

pub use point::{Dir3, Plane, Point3, ZeroDirection};
pub use predicates::{
    collinear, collinear_param, det3, locate_in_loops, on_segment, open_segment_meets_segment,
    orient2d, orient3d, plane_line_param, project_2d, ray_meets_segment, side_of_plane,
    PointLocation, Sign,
};
pub use rat::{rat, ParseRatError, Rat};

use crate::scene::Polygon;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("point {0:?} does not lie on the polygon's plane")]
pub struct OffPlane(pub Point3);

/// Exact location of `p` relative to the closed polygon. `p` must lie on
/// the polygon's plane.
pub fn point_in_polygon_2d(poly: &Polygon, p: &Point3) -> Result<PointLocation, OffPlane> {
    if !poly.plane().contains(p) {
        return Err(OffPlane(p.clone()));
    }
    Ok(locate_in_loops(poly.loops(), &poly.plane().normal, p))
}

/// True iff `p` and `q` lie in distinct open half-spaces of the polygon's
/// plane and the segment `pq` meets the closed polygon.
pub fn segment_crosses_polygon(p: &Point3, q: &Point3, poly: &Polygon) -> bool {
    let pl = poly.plane();
    let sp = pl.eval(p);
    let sq = pl.eval(q);
    if sp.signum() * sq.signum() >= 0 {
        return false;
    }
    // sp and sq have opposite signs, so the crossing parameter is in (0, 1).
    let t = &sp / &(&sp - &sq);
    let x = p.lerp(q, &t);
    locate_in_loops(poly.loops(), &pl.normal, &x) != PointLocation::Outside
}
