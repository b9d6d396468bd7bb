use crate::geom::{rat, Point3, Rat};

use super::polygon::loop_area_vector;
use super::{Polygon, PolygonError, Polyhedron, PolyhedronError, Scene};

pub const BUILTIN_NAMES: &[&str] = &["tetrahedron", "cube", "brush", "eight_edge_scene"];

#[derive(Clone, Debug)]
pub enum Builtin {
    Scene(Scene),
    Polyhedron(Polyhedron),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuiltinError {
    #[error(
        "unknown builtin {0:?} (expected one of tetrahedron, cube, brush(k), eight_edge_scene)"
    )]
    Unknown(String),
    #[error("invalid parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
}

fn pts(v: &[(i64, i64, i64)]) -> Vec<Point3> {
    v.iter().map(|&(x, y, z)| Point3::int(x, y, z)).collect()
}

/// Winds `verts` so the Newell normal points away from `inside`.
fn outward(mut verts: Vec<Point3>, inside: &Point3) -> Vec<Point3> {
    if loop_area_vector(&verts)
        .dot(&(&verts[0] - inside))
        .is_negative()
    {
        verts.reverse();
    }
    verts
}

/// Regular tetrahedron on alternate corners of the cube `[-1, 1]^3`.
pub fn tetrahedron() -> Polyhedron {
    let v = pts(&[(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]);
    let c = Point3::origin();
    let facets = (0..4)
        .map(|skip| {
            let tri: Vec<Point3> = (0..4)
                .filter(|&i| i != skip)
                .map(|i| v[i].clone())
                .collect();
            Polygon::new(format!("F{skip}"), outward(tri, &c)).expect("tetrahedron facet")
        })
        .collect();
    Polyhedron::new(facets).expect("tetrahedron is a valid polyhedron")
}

/// The cube `[0, s]^3`.
pub fn cube(s: &Rat) -> Result<Polyhedron, BuiltinError> {
    if !s.is_positive() {
        return Err(BuiltinError::BadParams {
            name: "cube".into(),
            reason: "side must be positive".into(),
        });
    }
    let half = s * &rat(1, 2);
    let c = Point3::new(half.clone(), half.clone(), half);
    let corner = |bits: [bool; 3]| {
        let f = |b: bool| if b { s.clone() } else { Rat::zero() };
        Point3::new(f(bits[0]), f(bits[1]), f(bits[2]))
    };
    let mut facets = Vec::new();
    for axis in 0..3 {
        for high in [false, true] {
            let (u, w) = ((axis + 1) % 3, (axis + 2) % 3);
            let quad: Vec<Point3> = [(false, false), (true, false), (true, true), (false, true)]
                .iter()
                .map(|&(bu, bw)| {
                    let mut bits = [false; 3];
                    bits[axis] = high;
                    bits[u] = bu;
                    bits[w] = bw;
                    corner(bits)
                })
                .collect();
            let name = format!("{}{}", ["x", "y", "z"][axis], if high { "+" } else { "-" });
            facets.push(Polygon::new(name, outward(quad, &c))?);
        }
    }
    Ok(Polyhedron::new(facets)?)
}

/// Box `[0, k]^2 x [0, 1]` with a tall tetrahedral spike standing on the top
/// facet over each unit cell. A point just below a spike tip sees only the
/// six spike edges.
pub fn brush(k: usize) -> Result<Polyhedron, BuiltinError> {
    if k == 0 {
        return Err(BuiltinError::BadParams {
            name: "brush".into(),
            reason: "k must be at least 1".into(),
        });
    }
    let kk = k as i64;
    let centre = Point3::new(rat(kk, 2), rat(kk, 2), rat(1, 2));
    let mut facets = Vec::new();
    facets.push(Polygon::new(
        "bottom",
        outward(
            pts(&[(0, 0, 0), (kk, 0, 0), (kk, kk, 0), (0, kk, 0)]),
            &centre,
        ),
    )?);
    let sides: [[(i64, i64); 2]; 4] = [
        [(0, 0), (kk, 0)],
        [(kk, 0), (kk, kk)],
        [(kk, kk), (0, kk)],
        [(0, kk), (0, 0)],
    ];
    for (i, [(x0, y0), (x1, y1)]) in sides.iter().enumerate() {
        let quad = pts(&[(*x0, *y0, 0), (*x1, *y1, 0), (*x1, *y1, 1), (*x0, *y0, 1)]);
        facets.push(Polygon::new(format!("side{i}"), outward(quad, &centre))?);
    }
    let mut holes = Vec::new();
    for i in 0..kk {
        for j in 0..kk {
            let (x, y) = (Rat::int(i), Rat::int(j));
            let at = |dx: Rat, dy: Rat, z: i64| Point3::new(&x + &dx, &y + &dy, Rat::int(z));
            let base = vec![
                at(rat(1, 4), rat(1, 4), 1),
                at(rat(3, 4), rat(1, 4), 1),
                at(rat(1, 2), rat(3, 4), 1),
            ];
            let apex = at(rat(1, 2), rat(5, 12), 5);
            let inside = at(rat(1, 2), rat(5, 12), 2);
            for s in 0..3 {
                let tri = vec![base[s].clone(), base[(s + 1) % 3].clone(), apex.clone()];
                facets.push(Polygon::new(
                    format!("spike{i}_{j}_{s}"),
                    outward(tri, &inside),
                )?);
            }
            holes.push(base);
        }
    }
    let top = pts(&[(0, 0, 1), (kk, 0, 1), (kk, kk, 1), (0, kk, 1)]);
    facets.push(Polygon::with_holes("top", outward(top, &centre), holes)?);
    Ok(Polyhedron::new(facets)?)
}

/// Two rectangles and four triangles, viewed from the origin, that hide
/// every vertex while leaving exactly eight edges partly visible.
pub fn eight_edge_scene() -> Scene {
    let polys = [
        (
            "R1",
            pts(&[(5, -1, -15), (5, 1, -15), (5, 1, 15), (5, -1, 15)]),
        ),
        (
            "R2",
            pts(&[(-5, -15, -1), (-5, 15, -1), (-5, 15, 1), (-5, -15, 1)]),
        ),
        ("T1", pts(&[(15, -2, 35), (7, 0, -8), (-7, -8, 3)])),
        ("T2", pts(&[(-15, -35, -2), (-7, 8, 0), (7, -3, -8)])),
        ("T3", pts(&[(15, 2, -35), (7, 0, 8), (-7, 8, -3)])),
        ("T4", pts(&[(-15, 35, 2), (-7, -8, 0), (7, 3, 8)])),
    ];
    Scene::new(
        polys
            .into_iter()
            .map(|(id, v)| Polygon::new(id, v).expect("published polygon"))
            .collect(),
    )
}

/// Resolves `name` (also accepting `brush(k)` / `cube(s)` call syntax) with
/// optional rational parameters.
pub fn builtin(name: &str, params: &[Rat]) -> Result<Builtin, BuiltinError> {
    let (base, inline) = match name.split_once('(') {
        Some((b, rest)) => {
            let arg = rest
                .strip_suffix(')')
                .ok_or_else(|| BuiltinError::Unknown(name.to_string()))?;
            let r: Rat = arg.trim().parse().map_err(|e| BuiltinError::BadParams {
                name: b.to_string(),
                reason: format!("{e}"),
            })?;
            (b, vec![r])
        }
        None => (name, Vec::new()),
    };
    let params: Vec<Rat> = if inline.is_empty() {
        params.to_vec()
    } else {
        inline
    };
    let bad = |reason: &str| BuiltinError::BadParams {
        name: base.to_string(),
        reason: reason.to_string(),
    };
    match base {
        "tetrahedron" | "eight_edge_scene" if !params.is_empty() => Err(bad("takes no parameters")),
        "tetrahedron" => Ok(Builtin::Polyhedron(tetrahedron())),
        "eight_edge_scene" => Ok(Builtin::Scene(eight_edge_scene())),
        "cube" => match params.as_slice() {
            [] => Ok(Builtin::Polyhedron(cube(&Rat::one())?)),
            [s] => Ok(Builtin::Polyhedron(cube(s)?)),
            _ => Err(bad("expected at most one side length")),
        },
        "brush" => match params.as_slice() {
            [] => Ok(Builtin::Polyhedron(brush(2)?)),
            [k] if k.is_integer() && k.is_positive() && *k <= Rat::int(64) => {
                Ok(Builtin::Polyhedron(brush(k.to_f64() as usize)?))
            }
            _ => Err(bad("expected one integer k in 1..=64")),
        },
        _ => Err(BuiltinError::Unknown(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert!(matches!(
            builtin("brush(3)", &[]),
            Ok(Builtin::Polyhedron(_))
        ));
        assert!(matches!(
            builtin("cube", &[rat(3, 2)]),
            Ok(Builtin::Polyhedron(_))
        ));
        assert!(matches!(
            builtin("eight_edge_scene", &[]),
            Ok(Builtin::Scene(_))
        ));
        assert!(matches!(
            builtin("dodecahedron", &[]),
            Err(BuiltinError::Unknown(_))
        ));
        assert!(matches!(
            builtin("brush", &[rat(1, 2)]),
            Err(BuiltinError::BadParams { .. })
        ));
        assert!(matches!(
            builtin("cube", &[Rat::int(-1)]),
            Err(BuiltinError::BadParams { .. })
        ));
    }

    #[test]
    fn eight_edge_scene_counts() {
        let s = eight_edge_scene();
        let rects = s.polygons().iter().filter(|p| p.outer().len() == 4).count();
        let tris = s.polygons().iter().filter(|p| p.outer().len() == 3).count();
        assert_eq!((rects, tris, s.edges().len()), (2, 4, 20));
    }
}
