use crate::geom::{Point3, Rat};

use super::Scene;

/// Rigid motion `x -> M x + t` with `M` rational and orthogonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    m: [[Rat; 3]; 3],
    t: Point3,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("matrix is not orthogonal")]
pub struct NotOrthogonal;

impl Isometry {
    pub fn new(m: [[Rat; 3]; 3], t: Point3) -> Result<Isometry, NotOrthogonal> {
        for i in 0..3 {
            for j in 0..3 {
                let dot: Rat = (0..3).map(|k| &m[i][k] * &m[j][k]).sum();
                if dot != if i == j { Rat::one() } else { Rat::zero() } {
                    return Err(NotOrthogonal);
                }
            }
        }
        Ok(Isometry { m, t })
    }

    pub fn from_int(m: [[i64; 3]; 3], t: (i64, i64, i64)) -> Result<Isometry, NotOrthogonal> {
        let m = m.map(|row| row.map(Rat::int));
        Isometry::new(m, Point3::int(t.0, t.1, t.2))
    }

    pub fn identity() -> Isometry {
        Isometry::from_int([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (0, 0, 0)).expect("identity")
    }

    pub fn translation(t: Point3) -> Isometry {
        Isometry {
            t,
            ..Isometry::identity()
        }
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        let c = p.coords();
        let row = |i: usize| -> Rat { (0..3).map(|k| &self.m[i][k] * c[k]).sum() };
        &Point3::new(row(0), row(1), row(2)) + &self.t
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Isometry) -> Isometry {
        let mut m: [[Rat; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| &self.m[i][k] * &first.m[k][j]).sum();
            }
        }
        let t = self.apply(&first.t);
        Isometry { m, t }
    }

    pub fn power(&self, n: u32) -> Isometry {
        (0..n).fold(Isometry::identity(), |acc, _| self.compose(&acc))
    }
}

/// Index `j` with `iso(polygon i) == polygon j` for every `i`, when `iso`
/// permutes the scene's polygons as point sets.
pub fn polygon_permutation(s: &Scene, iso: &Isometry) -> Option<Vec<usize>> {
    let polys = s.polygons();
    let mut used = vec![false; polys.len()];
    let mut perm = Vec::with_capacity(polys.len());
    for p in polys {
        let image = p.map_points(|v| iso.apply(v)).ok()?;
        let j = (0..polys.len()).find(|&j| !used[j] && polys[j].same_point_set(&image))?;
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

pub fn check_symmetry(s: &Scene, iso: &Isometry) -> bool {
    polygon_permutation(s, iso).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::eight_edge_scene;

    fn phi1() -> Isometry {
        Isometry::from_int([[1, 0, 0], [0, -1, 0], [0, 0, -1]], (0, 0, 0)).unwrap()
    }

    fn phi2() -> Isometry {
        // (x, y, z) -> (-x, -z, y)
        Isometry::from_int([[-1, 0, 0], [0, 0, -1], [0, 1, 0]], (0, 0, 0)).unwrap()
    }

    #[test]
    fn published_symmetries() {
        let s = eight_edge_scene();
        assert!(check_symmetry(&s, &phi1()));
        assert!(check_symmetry(&s, &phi2()));
        assert!(check_symmetry(&s, &phi2().power(4)));
        assert!(!check_symmetry(
            &s,
            &Isometry::translation(Point3::int(1, 0, 0))
        ));
        // R1 R2 T1 T2 T3 T4 -> R2 R1 T2 T3 T4 T1
        assert_eq!(
            polygon_permutation(&s, &phi2()).unwrap(),
            vec![1, 0, 3, 4, 5, 2]
        );
        assert_eq!(
            polygon_permutation(&s, &phi1()).unwrap(),
            vec![0, 1, 4, 5, 2, 3]
        );
        assert_eq!(phi2().power(4), Isometry::identity());
        assert_ne!(phi2().power(2), Isometry::identity());
    }

    #[test]
    fn rejects_non_orthogonal() {
        assert!(Isometry::from_int([[2, 0, 0], [0, 1, 0], [0, 0, 1]], (0, 0, 0)).is_err());
        let r = crate::geom::rat;
        let rot = [
            [r(3, 5), r(-4, 5), Rat::zero()],
            [r(4, 5), r(3, 5), Rat::zero()],
            [Rat::zero(), Rat::zero(), Rat::one()],
        ];
        assert!(Isometry::new(rot, Point3::origin()).is_ok());
    }
}
