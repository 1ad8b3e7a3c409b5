use super::{Point, RigidTransform};
use crate::error::{Error, Result};

/// Axis-aligned bounding box. Closed on all faces: boundary contact counts
/// as intersection/containment throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb {
    pub min: Point,
    pub max: Point,
}

impl Aabb {
    pub fn new(min: Point, max: Point) -> Result<Self> {
        if (0..3).any(|i| min[i] > max[i]) {
            return Err(Error::invalid(format!("box min {min:?} exceeds max {max:?}")));
        }
        Ok(Self { min, max })
    }

    /// Tight box over a non-empty point set.
    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a Point>) -> Result<Self> {
        let mut it = points.into_iter();
        let first = it.next().ok_or(Error::EmptyGeometry)?;
        let mut b = Self { min: *first, max: *first };
        for p in it {
            b.grow(p);
        }
        Ok(b)
    }

    pub fn grow(&mut self, p: &Point) {
        for i in 0..3 {
            self.min[i] = self.min[i].min(p[i]);
            self.max[i] = self.max[i].max(p[i]);
        }
    }

    pub fn union(&self, other: &Aabb) -> Aabb {
        let mut b = *self;
        b.grow(&other.min);
        b.grow(&other.max);
        b
    }

    pub fn intersects(&self, other: &Aabb) -> bool {
        (0..3).all(|i| self.min[i] <= other.max[i] && self.max[i] >= other.min[i])
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        (0..3).all(|i| self.min[i] <= p[i] && p[i] <= self.max[i])
    }

    pub fn center(&self) -> Point {
        Point::from((self.min.coords + self.max.coords) * 0.5)
    }

    pub fn extent(&self) -> super::Vec3 {
        self.max - self.min
    }

    /// Conservative box around the transform of this box (transforms the
    /// eight corners and re-wraps them).
    pub fn transformed(&self, t: &RigidTransform) -> Aabb {
        let mut out: Option<Aabb> = None;
        for ix in 0..2 {
            for iy in 0..2 {
                for iz in 0..2 {
                    let corner = Point::new(
                        if ix == 0 { self.min.x } else { self.max.x },
                        if iy == 0 { self.min.y } else { self.max.y },
                        if iz == 0 { self.min.z } else { self.max.z },
                    );
                    let p = t.apply_point(&corner);
                    match &mut out {
                        Some(b) => b.grow(&p),
                        None => out = Some(Aabb { min: p, max: p }),
                    }
                }
            }
        }
        out.unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec3;

    #[test]
    fn rejects_inverted_box() {
        assert!(Aabb::new(Point::new(1.0, 0.0, 0.0), Point::new(0.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn boundary_contact_is_intersection() {
        let a = Aabb::new(Point::origin(), Point::new(1.0, 1.0, 1.0)).unwrap();
        let b = Aabb::new(Point::new(1.0, 0.0, 0.0), Point::new(2.0, 1.0, 1.0)).unwrap();
        assert!(a.intersects(&b));
        let c = Aabb::new(Point::new(1.0 + 1e-12, 0.0, 0.0), Point::new(2.0, 1.0, 1.0)).unwrap();
        assert!(!a.intersects(&c));
    }

    #[test]
    fn transformed_contains_all_transformed_corners() {
        let b = Aabb::new(Point::new(-1.0, 0.0, 2.0), Point::new(3.0, 1.0, 2.5)).unwrap();
        let t = RigidTransform::rotation_z(0.4) * RigidTransform::from_translation(Vec3::new(5.0, -1.0, 0.0));
        let tb = b.transformed(&t);
        for p in [&b.min, &b.max] {
            assert!(tb.contains_point(&t.apply_point(p)));
        }
    }
}
