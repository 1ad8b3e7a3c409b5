use super::{Aabb, Point, RigidTransform};
use crate::error::{Error, Result};

/// Indexed triangle mesh. Positions only; no normals, UVs, or materials.
///
/// Degenerate triangles (repeated vertex index, or exactly zero area) are
/// dropped at construction and counted — exported game assets commonly
/// contain them and they cannot contribute occupancy or ray hits.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleMesh {
    vertices: Vec<Point>,
    triangles: Vec<[u32; 3]>,
    degenerate_dropped: usize,
}

impl TriangleMesh {
    pub fn new(vertices: Vec<Point>, triangles: Vec<[u32; 3]>) -> Result<Self> {
        let count = vertices.len();
        let mut kept = Vec::with_capacity(triangles.len());
        let mut dropped = 0usize;
        for tri in triangles {
            for &i in &tri {
                if i as usize >= count {
                    return Err(Error::IndexOutOfBounds { index: i as usize, count });
                }
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                dropped += 1;
                continue;
            }
            let [a, b, c] = [
                vertices[tri[0] as usize],
                vertices[tri[1] as usize],
                vertices[tri[2] as usize],
            ];
            if (b - a).cross(&(c - a)).norm_squared() == 0.0 {
                dropped += 1;
                continue;
            }
            kept.push(tri);
        }
        Ok(Self { vertices, triangles: kept, degenerate_dropped: dropped })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Number of degenerate triangles dropped at construction.
    pub fn degenerate_dropped(&self) -> usize {
        self.degenerate_dropped
    }

    pub fn triangle_points(&self, i: usize) -> [Point; 3] {
        let [a, b, c] = self.triangles[i];
        [self.vertices[a as usize], self.vertices[b as usize], self.vertices[c as usize]]
    }

    pub fn iter_triangle_points(&self) -> impl Iterator<Item = [Point; 3]> + '_ {
        (0..self.triangles.len()).map(|i| self.triangle_points(i))
    }

    /// Applies a rigid transform to every vertex; topology unchanged.
    pub fn transformed(&self, t: &RigidTransform) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| t.apply_point(v)).collect(),
            triangles: self.triangles.clone(),
            degenerate_dropped: self.degenerate_dropped,
        }
    }

    /// Tight axis-aligned bounds over all vertices.
    pub fn aabb(&self) -> Result<Aabb> {
        Aabb::from_points(&self.vertices)
    }

    /// True when every undirected edge is shared by exactly two triangles.
    pub fn is_closed(&self) -> bool {
        if self.triangles.is_empty() {
            return false;
        }
        let mut edges = std::collections::HashMap::new();
        for tri in &self.triangles {
            for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
                let key = if a < b { (a, b) } else { (b, a) };
                *edges.entry(key).or_insert(0u32) += 1;
            }
        }
        edges.values().all(|&n| n == 2)
    }

    /// Closed axis-aligned cuboid spanning `b` (12 triangles, outward CCW
    /// winding).
    pub fn cuboid(b: &Aabb) -> Self {
        let (lo, hi) = (b.min, b.max);
        let vertices = vec![
            Point::new(lo.x, lo.y, lo.z),
            Point::new(hi.x, lo.y, lo.z),
            Point::new(hi.x, hi.y, lo.z),
            Point::new(lo.x, hi.y, lo.z),
            Point::new(lo.x, lo.y, hi.z),
            Point::new(hi.x, lo.y, hi.z),
            Point::new(hi.x, hi.y, hi.z),
            Point::new(lo.x, hi.y, hi.z),
        ];
        let triangles = vec![
            // bottom (z = lo.z), top (z = hi.z)
            [0, 2, 1], [0, 3, 2],
            [4, 5, 6], [4, 6, 7],
            // -y, +y
            [0, 1, 5], [0, 5, 4],
            [2, 3, 7], [2, 7, 6],
            // -x, +x
            [3, 0, 4], [3, 4, 7],
            [1, 2, 6], [1, 6, 5],
        ];
        Self::new(vertices, triangles).expect("cuboid is always valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec3;
    use approx::assert_abs_diff_eq;

    fn unit_triangle() -> TriangleMesh {
        TriangleMesh::new(
            vec![Point::origin(), Point::new(1.0, 0.0, 0.0), Point::new(0.0, 1.0, 0.0)],
            vec![[0, 1, 2]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_out_of_range_index() {
        let err = TriangleMesh::new(vec![Point::origin()], vec![[0, 0, 1]]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfBounds { index: 1, count: 1 }));
    }

    #[test]
    fn drops_degenerate_triangles_with_count() {
        let mesh = TriangleMesh::new(
            vec![
                Point::origin(),
                Point::new(1.0, 0.0, 0.0),
                Point::new(0.0, 1.0, 0.0),
                Point::new(2.0, 0.0, 0.0), // collinear with 0 and 1
            ],
            vec![[0, 1, 2], [0, 0, 1], [0, 1, 3]],
        )
        .unwrap();
        assert_eq!(mesh.triangle_count(), 1);
        assert_eq!(mesh.degenerate_dropped(), 2);
    }

    #[test]
    fn identity_transform_leaves_vertices() {
        let mesh = unit_triangle();
        let out = mesh.transformed(&RigidTransform::identity());
        assert_eq!(out.vertices(), mesh.vertices());
    }

    #[test]
    fn pure_translation_shifts_vertices() {
        let mesh = unit_triangle();
        let out = mesh.transformed(&RigidTransform::from_translation(Vec3::new(1.0, 0.0, 0.0)));
        assert_eq!(
            out.vertices(),
            &[Point::new(1.0, 0.0, 0.0), Point::new(2.0, 0.0, 0.0), Point::new(1.0, 1.0, 0.0)]
        );
    }

    #[test]
    fn rotation_then_inverse_restores_vertices() {
        let mesh = unit_triangle();
        let rot = RigidTransform::rotation_z(std::f64::consts::FRAC_PI_2);
        let back = mesh.transformed(&rot).transformed(&rot.inverse());
        for (a, b) in back.vertices().iter().zip(mesh.vertices()) {
            assert_abs_diff_eq!(a.coords, b.coords, epsilon = 1e-9);
        }
    }

    #[test]
    fn aabb_of_unit_cube() {
        let cube = TriangleMesh::cuboid(
            &Aabb::new(Point::origin(), Point::new(1.0, 1.0, 1.0)).unwrap(),
        );
        let b = cube.aabb().unwrap();
        assert_eq!(b.min, Point::origin());
        assert_eq!(b.max, Point::new(1.0, 1.0, 1.0));
    }

    #[test]
    fn aabb_of_empty_mesh_errors() {
        let mesh = TriangleMesh::new(vec![], vec![]).unwrap();
        assert!(matches!(mesh.aabb(), Err(Error::EmptyGeometry)));
    }

    #[test]
    fn aabb_translates_with_mesh() {
        let mesh = unit_triangle();
        let t = RigidTransform::from_translation(Vec3::new(2.0, 3.0, 4.0));
        let b0 = mesh.aabb().unwrap();
        let b1 = mesh.transformed(&t).aabb().unwrap();
        assert_eq!(b1.min, t.apply_point(&b0.min));
        assert_eq!(b1.max, t.apply_point(&b0.max));
    }

    #[test]
    fn cuboid_is_closed_and_triangle_is_not() {
        let cube = TriangleMesh::cuboid(
            &Aabb::new(Point::origin(), Point::new(1.0, 2.0, 3.0)).unwrap(),
        );
        assert!(cube.is_closed());
        assert!(!unit_triangle().is_closed());
    }
}
