use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rat::Rat;

/// Rational point (or free vector) in 3-space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[Rat; 3]", into = "[Rat; 3]")]
pub struct Point3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl From<[Rat; 3]> for Point3 {
    fn from([x, y, z]: [Rat; 3]) -> Point3 {
        Point3 { x, y, z }
    }
}

impl From<Point3> for [Rat; 3] {
    fn from(p: Point3) -> [Rat; 3] {
        [p.x, p.y, p.z]
    }
}

impl Point3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Point3 {
        Point3 { x, y, z }
    }

    pub fn int(x: i64, y: i64, z: i64) -> Point3 {
        Point3::new(Rat::int(x), Rat::int(y), Rat::int(z))
    }

    pub fn origin() -> Point3 {
        Point3::default()
    }

    pub fn coord(&self, axis: usize) -> &Rat {
        match axis {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("axis out of range"),
        }
    }

    pub fn dot(&self, o: &Point3) -> Rat {
        &(&(&self.x * &o.x) + &(&self.y * &o.y)) + &(&self.z * &o.z)
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3 {
            x: &(&self.y * &o.z) - &(&self.z * &o.y),
            y: &(&self.z * &o.x) - &(&self.x * &o.z),
            z: &(&self.x * &o.y) - &(&self.y * &o.x),
        }
    }

    pub fn scale(&self, k: &Rat) -> Point3 {
        Point3 {
            x: &self.x * k,
            y: &self.y * k,
            z: &self.z * k,
        }
    }

    /// The positive multiple with coprime integer coordinates.
    pub fn primitive(&self) -> Point3 {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let cs = self.coords();
        let den = cs.iter().fold(BigInt::from(1), |l, c| l.lcm(&c.denom()));
        let ns: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let g = ns.iter().fold(BigInt::from(0), |g, n| g.gcd(n));
        if g == BigInt::from(0) {
            return self.clone();
        }
        let c = |n: &BigInt| Rat::from_bigints(n / &g, BigInt::from(1)).expect("unit denominator");
        Point3::new(c(&ns[0]), c(&ns[1]), c(&ns[2]))
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point3, t: &Rat) -> Point3 {
        self + &(other - self).scale(t)
    }

    pub fn midpoint(&self, other: &Point3) -> Point3 {
        self.lerp(other, &Rat::new(1, 2))
    }

    /// Index of the coordinate with the largest absolute value.
    pub fn dominant_axis(&self) -> usize {
        let (ax, ay, az) = (self.x.abs(), self.y.abs(), self.z.abs());
        if ax >= ay && ax >= az {
            0
        } else if ay >= az {
            1
        } else {
            2
        }
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

impl<'b> Add<&'b Point3> for &Point3 {
    type Output = Point3;
    fn add(self, o: &'b Point3) -> Point3 {
        Point3 {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
            z: &self.z + &o.z,
        }
    }
}

impl<'b> Sub<&'b Point3> for &Point3 {
    type Output = Point3;
    fn sub(self, o: &'b Point3) -> Point3 {
        Point3 {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
            z: &self.z - &o.z,
        }
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        &self + &o
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        &self - &o
    }
}

impl Neg for &Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3 {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        -&self
    }
}

impl<'b> Mul<&'b Rat> for &Point3 {
    type Output = Point3;
    fn mul(self, k: &'b Rat) -> Point3 {
        self.scale(k)
    }
}

/// Nonzero rational vector taken modulo positive scaling: a point of the
/// unit sphere without radicals.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Point3", into = "Point3")]
pub struct Dir3(Point3);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("zero vector is not a direction")]
pub struct ZeroDirection;

impl TryFrom<Point3> for Dir3 {
    type Error = ZeroDirection;
    fn try_from(v: Point3) -> Result<Dir3, ZeroDirection> {
        Dir3::new(v)
    }
}

impl From<Dir3> for Point3 {
    fn from(d: Dir3) -> Point3 {
        d.0
    }
}

impl Dir3 {
    pub fn new(v: Point3) -> Result<Dir3, ZeroDirection> {
        if v.is_zero() {
            Err(ZeroDirection)
        } else {
            Ok(Dir3(v))
        }
    }

    pub fn int(x: i64, y: i64, z: i64) -> Dir3 {
        Dir3::new(Point3::int(x, y, z)).expect("nonzero literal direction")
    }

    /// Representative vector (any positive multiple is equivalent).
    pub fn vec(&self) -> &Point3 {
        &self.0
    }

    pub fn into_vec(self) -> Point3 {
        self.0
    }

    pub fn is_parallel(&self, o: &Dir3) -> bool {
        self.0.cross(&o.0).is_zero()
    }

    pub fn is_antipodal(&self, o: &Dir3) -> bool {
        self.is_parallel(o) && self.0.dot(&o.0).is_negative()
    }

    pub fn antipode(&self) -> Dir3 {
        Dir3(-&self.0)
    }
}

impl PartialEq for Dir3 {
    fn eq(&self, o: &Dir3) -> bool {
        self.is_parallel(o) && self.0.dot(&o.0).is_positive()
    }
}

impl Eq for Dir3 {}

impl fmt::Debug for Dir3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dir3{:?}", self.0)
    }
}

/// Plane `{x : normal . x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plane {
    pub normal: Point3,
    pub offset: Rat,
}

impl Plane {
    pub fn new(normal: Point3, offset: Rat) -> Plane {
        assert!(!normal.is_zero(), "plane normal must be nonzero");
        Plane { normal, offset }
    }

    /// Plane through three non-collinear points, oriented by `(b - a) x (c - a)`.
    pub fn through(a: &Point3, b: &Point3, c: &Point3) -> Option<Plane> {
        let n = (b - a).cross(&(c - a));
        if n.is_zero() {
            return None;
        }
        let off = n.dot(a);
        Some(Plane {
            normal: n,
            offset: off,
        })
    }

    /// Signed evaluation `normal . p - offset`.
    pub fn eval(&self, p: &Point3) -> Rat {
        &self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.eval(p).is_zero()
    }

    /// Same point set (normals may differ by any nonzero factor).
    pub fn same_plane(&self, o: &Plane) -> bool {
        if !self.normal.cross(&o.normal).is_zero() {
            return false;
        }
        // n2 = k n1, so the planes agree iff off2 = k off1.
        let axis = self.normal.dominant_axis();
        let k = o.normal.coord(axis) / self.normal.coord(axis);
        &self.offset * &k == o.offset
    }

    pub fn is_parallel(&self, o: &Plane) -> bool {
        self.normal.cross(&o.normal).is_zero()
    }
}
