//! Foundational geometric types: rigid transforms, triangle meshes, boxes,
//! pinhole cameras, and a BVH for ray and box queries.
//!
//! Conventions: right-handed, z-up world frame; cameras look along +z in
//! their local frame; all lengths in meters.

mod aabb;
mod bvh;
mod camera;
mod mesh;
mod obj;
mod ply;
mod ray;
mod transform;
mod tribox;

pub use aabb::Aabb;
pub use bvh::{Bvh, RayHit};
pub use camera::PinholeCamera;
pub use mesh::TriangleMesh;
pub use obj::{read_obj, write_obj};
pub use ply::read_ply;
pub use ray::Ray;
pub use transform::RigidTransform;
pub use tribox::triangle_box_overlap;

use crate::error::{Error, Result};
use std::path::Path;

pub type Point = nalgebra::Point3<f64>;
pub type Vec3 = nalgebra::Vector3<f64>;
pub type Mat3 = nalgebra::Matrix3<f64>;

/// Loads a mesh file, dispatching on the extension (`.obj` or `.ply`).
pub fn load_mesh(path: impl AsRef<Path>) -> Result<TriangleMesh> {
    let path = path.as_ref();
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .unwrap_or_default();
    let bytes = std::fs::read(path).map_err(|e| Error::file(path, e))?;
    match ext.as_str() {
        "obj" => obj::read_obj_named(&bytes, &path.display().to_string()),
        "ply" => ply::read_ply(&bytes),
        other => Err(Error::invalid(format!(
            "unsupported mesh extension `{other}` for {}",
            path.display()
        ))),
    }
}
