use super::{Mat3, Point, Vec3};
use crate::error::{Error, Result};

const ORTHONORMAL_TOL: f64 = 1e-6;

/// An SE(3) element: orthonormal rotation (det +1) plus translation.
///
/// Used for mesh placement, ego poses, and camera extrinsics. Composition
/// follows the usual convention: `(a * b)(x) = a(b(x))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidTransform {
    rotation: Mat3,
    translation: Vec3,
}

impl RigidTransform {
    pub fn identity() -> Self {
        Self { rotation: Mat3::identity(), translation: Vec3::zeros() }
    }

    /// Builds a transform, rejecting rotation blocks that are not orthonormal
    /// with positive determinant (tolerance 1e-6, loose enough for poses read
    /// from text files).
    pub fn new(rotation: Mat3, translation: Vec3) -> Result<Self> {
        let gram = rotation * rotation.transpose();
        let dev = (gram - Mat3::identity()).abs().max();
        if !dev.is_finite() || dev > ORTHONORMAL_TOL {
            return Err(Error::invalid(format!(
                "rotation is not orthonormal (max deviation {dev:.3e})"
            )));
        }
        if rotation.determinant() <= 0.0 {
            return Err(Error::invalid("rotation has non-positive determinant"));
        }
        Ok(Self { rotation, translation })
    }

    pub fn from_translation(translation: Vec3) -> Self {
        Self { rotation: Mat3::identity(), translation }
    }

    pub fn rotation_x(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            rotation: Mat3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c),
            translation: Vec3::zeros(),
        }
    }

    pub fn rotation_y(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            rotation: Mat3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c),
            translation: Vec3::zeros(),
        }
    }

    pub fn rotation_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            rotation: Mat3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0),
            translation: Vec3::zeros(),
        }
    }

    /// Parses a row-major 4x4 homogeneous matrix. The bottom row must be
    /// (0, 0, 0, 1) within 1e-9.
    pub fn from_matrix4_row_major(m: &[f64; 16]) -> Result<Self> {
        let bottom = [m[12], m[13], m[14], m[15] - 1.0];
        if bottom.iter().any(|x| x.abs() > 1e-9) {
            return Err(Error::invalid(format!(
                "bottom row is not (0, 0, 0, 1): ({}, {}, {}, {})",
                m[12], m[13], m[14], m[15]
            )));
        }
        let rotation = Mat3::new(m[0], m[1], m[2], m[4], m[5], m[6], m[8], m[9], m[10]);
        let translation = Vec3::new(m[3], m[7], m[11]);
        Self::new(rotation, translation)
    }

    pub fn to_matrix4_row_major(&self) -> [f64; 16] {
        let r = &self.rotation;
        let t = &self.translation;
        [
            r[(0, 0)], r[(0, 1)], r[(0, 2)], t.x,
            r[(1, 0)], r[(1, 1)], r[(1, 2)], t.y,
            r[(2, 0)], r[(2, 1)], r[(2, 2)], t.z,
            0.0, 0.0, 0.0, 1.0,
        ]
    }

    pub fn rotation(&self) -> &Mat3 {
        &self.rotation
    }

    pub fn translation(&self) -> &Vec3 {
        &self.translation
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        Point::from(self.rotation * p.coords + self.translation)
    }

    pub fn apply_vector(&self, v: &Vec3) -> Vec3 {
        self.rotation * v
    }

    pub fn inverse(&self) -> Self {
        let rt = self.rotation.transpose();
        Self { rotation: rt, translation: -(rt * self.translation) }
    }

    /// Heading of the local +x axis in the world xy-plane.
    pub fn yaw(&self) -> f64 {
        self.rotation[(1, 0)].atan2(self.rotation[(0, 0)])
    }

    /// Same translation, rotation reduced to the yaw component (roll and
    /// pitch discarded). This is the frame occupancy grids are anchored to.
    pub fn yaw_only(&self) -> Self {
        let mut t = Self::rotation_z(self.yaw());
        t.translation = self.translation;
        t
    }
}

impl std::ops::Mul for &RigidTransform {
    type Output = RigidTransform;

    fn mul(self, rhs: &RigidTransform) -> RigidTransform {
        RigidTransform {
            rotation: self.rotation * rhs.rotation,
            translation: self.rotation * rhs.translation + self.translation,
        }
    }
}

impl std::ops::Mul for RigidTransform {
    type Output = RigidTransform;

    fn mul(self, rhs: RigidTransform) -> RigidTransform {
        &self * &rhs
    }
}
