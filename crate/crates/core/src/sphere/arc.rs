use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::geom::{det3, Dir3, Point3, Rat, ZeroDirection};

/// Direction from `p` towards `q`.
pub fn project(p: &Point3, q: &Point3) -> Result<Dir3, ZeroDirection> {
    Dir3::new(q - p)
}

/// Scale a nonzero vector so its first nonzero coordinate is +-1. Two
/// vectors are positively proportional iff their canonical forms agree.
pub fn canonical(v: &Point3) -> Point3 {
    let lead = v
        .coords()
        .into_iter()
        .find(|c| !c.is_zero())
        .expect("nonzero vector")
        .abs();
    v.scale(&lead.recip())
}

/// Minor great-circle arc from `u` to `v` (strictly shorter than a
/// semicircle), optionally tagged with the edge piece it was projected from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub id: usize,
    pub normal: Point3,
    pub u: Point3,
    pub v: Point3,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_edge: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_lo: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_hi: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArcError {
    #[error("arc endpoints are parallel or antipodal")]
    NotMinor,
    #[error("arc normal is not u x v")]
    BadNormal,
}

impl Arc {
    pub fn new(id: usize, u: Point3, v: Point3) -> Result<Arc, ArcError> {
        let normal = u.cross(&v);
        if normal.is_zero() {
            return Err(ArcError::NotMinor);
        }
        Ok(Arc {
            id,
            normal,
            u,
            v,
            source_edge: None,
            t_lo: None,
            t_hi: None,
        })
    }

    pub fn with_source(mut self, edge: usize, lo: Rat, hi: Rat) -> Arc {
        self.source_edge = Some(edge);
        self.t_lo = Some(lo);
        self.t_hi = Some(hi);
        self
    }

    /// Checks an arc read from a file: `u`, `v` non-parallel and the stored
    /// normal a positive multiple of `u x v`.
    pub fn check(&self) -> Result<(), ArcError> {
        let n = self.u.cross(&self.v);
        if n.is_zero() {
            return Err(ArcError::NotMinor);
        }
        if !n.cross(&self.normal).is_zero() || !n.dot(&self.normal).is_positive() {
            return Err(ArcError::BadNormal);
        }
        Ok(())
    }

    pub fn endpoint(&self, end: usize) -> &Point3 {
        if end == 0 {
            &self.u
        } else {
            &self.v
        }
    }

    pub fn on_circle(&self, d: &Point3) -> bool {
        self.normal.dot(d).is_zero()
    }

    /// `d = alpha u + beta v` with `alpha, beta >= 0`, `d != 0`.
    pub fn contains(&self, d: &Point3) -> bool {
        self.on_circle(d)
            && !d.is_zero()
            && !det3(&self.u, d, &self.normal).is_negative()
            && !det3(d, &self.v, &self.normal).is_negative()
    }

    /// Strictly between the endpoints.
    pub fn contains_interior(&self, d: &Point3) -> bool {
        self.on_circle(d)
            && det3(&self.u, d, &self.normal).is_positive()
            && det3(d, &self.v, &self.normal).is_positive()
    }

    /// A direction in the relative interior (not the angular midpoint
    /// unless `|u| = |v|`).
    pub fn midpoint(&self) -> Point3 {
        &self.u + &self.v
    }

    /// Order along the arc from `u` to `v` for two directions on it.
    pub fn cmp_along(&self, a: &Point3, b: &Point3) -> Ordering {
        match det3(a, b, &self.normal).signum() {
            s if s > 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn same_circle(&self, o: &Arc) -> bool {
        self.normal.cross(&o.normal).is_zero()
    }

    /// Relative interiors share a point.
    pub fn interiors_meet(&self, o: &Arc) -> bool {
        if self.same_circle(o) {
            [&self.u, &self.v, &self.midpoint()]
                .iter()
                .any(|d| o.contains_interior(d))
                || [&o.u, &o.v, &o.midpoint()]
                    .iter()
                    .any(|d| self.contains_interior(d))
        } else {
            let l = self.normal.cross(&o.normal);
            [l.clone(), -&l]
                .iter()
                .any(|d| self.contains_interior(d) && o.contains_interior(d))
        }
    }

    /// Points where the two arcs' relative interiors cross transversally.
    pub fn crossings(&self, o: &Arc) -> Vec<Point3> {
        if self.same_circle(o) {
            return Vec::new();
        }
        let l = self.normal.cross(&o.normal);
        [l.clone(), -&l]
            .into_iter()
            .filter(|d| self.contains_interior(d) && o.contains_interior(d))
            .collect()
    }
}

/// Half of a great circle: `{d : d . normal = 0, d . m >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreatSemicircle {
    pub normal: Point3,
    pub m: Point3,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("semicircle selector must be nonzero and orthogonal to the normal")]
pub struct BadSemicircle;

impl GreatSemicircle {
    pub fn new(normal: Point3, m: Point3) -> Result<GreatSemicircle, BadSemicircle> {
        if normal.is_zero() || m.is_zero() || !normal.dot(&m).is_zero() {
            return Err(BadSemicircle);
        }
        Ok(GreatSemicircle { normal, m })
    }

    /// The open semicircle meets the closed arc.
    pub fn interior_meets(&self, a: &Arc) -> bool {
        if self.normal.cross(&a.normal).is_zero() {
            // linear functional on the arc's cone peaks at an endpoint
            return a.u.dot(&self.m).is_positive() || a.v.dot(&self.m).is_positive();
        }
        let l = self.normal.cross(&a.normal);
        [l.clone(), -&l]
            .iter()
            .any(|d| d.dot(&self.m).is_positive() && a.contains(d))
    }

    /// The closed arc lies in the open semicircle.
    pub fn interior_contains(&self, a: &Arc) -> bool {
        self.normal.cross(&a.normal).is_zero()
            && a.u.dot(&self.m).is_positive()
            && a.v.dot(&self.m).is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_examples() {
        let o = Point3::origin();
        assert_eq!(
            project(&o, &Point3::int(10, 0, 0)).unwrap(),
            Dir3::int(1, 0, 0)
        );
        let a1 = Point3::new(Rat::new(325, 192), Rat::new(65, 192), Rat::new(-325, 64));
        assert_eq!(project(&o, &a1).unwrap(), Dir3::int(5, 1, -15));
        assert_eq!(
            project(&Point3::int(1, 1, 1), &Point3::int(1, 1, 2)).unwrap(),
            Dir3::int(0, 0, 1)
        );
        assert!(project(&o, &o).is_err());
    }

    #[test]
    fn membership_and_crossing() {
        let a = Arc::new(0, Point3::int(1, 0, 0), Point3::int(0, 1, 0)).unwrap();
        assert!(a.contains_interior(&Point3::int(1, 1, 0)));
        assert!(a.contains(&Point3::int(2, 0, 0)));
        assert!(!a.contains_interior(&Point3::int(1, 0, 0)));
        assert!(!a.contains(&Point3::int(-1, 1, 0)));
        let b = Arc::new(1, Point3::int(1, 1, -1), Point3::int(1, 1, 1)).unwrap();
        assert!(a.interiors_meet(&b));
        assert_eq!(a.crossings(&b).len(), 1);
        let c = Arc::new(2, Point3::int(1, 1, 0), Point3::int(-1, 1, 0)).unwrap();
        assert!(a.interiors_meet(&c));
        assert!(Arc::new(3, Point3::int(1, 0, 0), Point3::int(-2, 0, 0)).is_err());
        assert_eq!(
            a.cmp_along(&Point3::int(3, 1, 0), &Point3::int(1, 3, 0)),
            Ordering::Less
        );
    }

    #[test]
    fn semicircle_tests() {
        let a = Arc::new(0, Point3::int(1, 0, 0), Point3::int(0, 1, 0)).unwrap();
        let upper = GreatSemicircle::new(Point3::int(0, 0, 1), Point3::int(1, 1, 0)).unwrap();
        assert!(upper.interior_contains(&a));
        let lower = GreatSemicircle::new(Point3::int(0, 0, 1), Point3::int(-1, -1, 0)).unwrap();
        assert!(!lower.interior_meets(&a));
        let across = GreatSemicircle::new(Point3::int(1, -1, 0), Point3::int(0, 0, 1)).unwrap();
        // meets the arc's circle at +-(1,1,0), but only at height 0
        assert!(!across.interior_meets(&a));
        let tilted = GreatSemicircle::new(Point3::int(1, -1, 0), Point3::int(1, 1, 1)).unwrap();
        assert!(tilted.interior_meets(&a));
    }
}
