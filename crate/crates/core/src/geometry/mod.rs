//! Oriented point clouds: loading, validation, and synthetic generation.
//!
//! Every point carries a unit normal. Loaders re-normalize normals that are
//! off unit length and reject normals that cannot be normalized, so the rest
//! of the crate can rely on `acos(n_i . n_j)` being well defined.

mod io;
mod synth;

pub use io::{load_point_cloud, parse_off, parse_xyzn, write_xyzn, CloudFormat};
pub use synth::{synth_cloud, SynthKind};

use nalgebra::{Point3, Vector3};

use crate::error::Error;
use crate::Result;

/// Normals within this distance of unit length are kept bit-for-bit;
/// anything further is re-normalized.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Normals shorter than this cannot be normalized meaningfully.
const MIN_NORMAL_LEN: f64 = 1e-12;

/// A 3D surface point paired with its unit surface normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedPoint {
    pub position: Point3<f64>,
    pub normal: Vector3<f64>,
}

impl OrientedPoint {
    /// Builds an oriented point, normalizing `normal` if it is more than
    /// [`UNIT_TOLERANCE`] away from unit length.
    ///
    /// Keeping already-unit normals untouched makes loading idempotent: a
    /// cloud written out and read back compares equal.
    pub fn new(position: Point3<f64>, normal: Vector3<f64>) -> Result<Self> {
        if !position.iter().all(|c| c.is_finite()) {
            return Err(Error::Validation(format!(
                "non-finite position component in {position:?}"
            )));
        }
        let normal = normalize_unit(normal)?;
        Ok(Self { position, normal })
    }
}

/// Normalizes a vector to unit length, leaving vectors already within
/// [`UNIT_TOLERANCE`] of unit length untouched.
pub fn normalize_unit(v: Vector3<f64>) -> Result<Vector3<f64>> {
    if !v.iter().all(|c| c.is_finite()) {
        return Err(Error::Validation(format!(
            "non-finite normal component in {v:?}"
        )));
    }
    let len = v.norm();
    if len < MIN_NORMAL_LEN {
        return Err(Error::Validation(format!(
            "zero-length normal {v:?} cannot be normalized"
        )));
    }
    if (len - 1.0).abs() <= UNIT_TOLERANCE {
        Ok(v)
    } else {
        Ok(v / len)
    }
}

/// An immutable, ordered collection of oriented points.
///
/// Order is exactly file or generation order; chunk boundaries elsewhere in
/// the crate reference these indices, so it must never be perturbed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<OrientedPoint>,
}

impl PointCloud {
    /// Wraps a non-empty point sequence.
    pub fn new(points: Vec<OrientedPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Validation("point cloud is empty".to_string()));
        }
        Ok(Self { points })
    }

    /// Number of oriented points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[OrientedPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &OrientedPoint {
        &self.points[i]
    }
}

/// Per-vertex normals as the normalized sum of incident-face cross products.
///
/// The cross product of two triangle edges has magnitude twice the face
/// area, so summing raw cross products weights each face by its area.
/// Zero-area faces contribute nothing and are skipped.
pub fn compute_vertex_normals(
    vertices: &[Point3<f64>],
    faces: &[[usize; 3]],
) -> Result<Vec<Vector3<f64>>> {
    let mut sums = vec![Vector3::zeros(); vertices.len()];
    let mut incident = vec![0usize; vertices.len()];

    for (fi, face) in faces.iter().enumerate() {
        for &v in face {
            if v >= vertices.len() {
                return Err(Error::Validation(format!(
                    "face {fi} references vertex {v}, but only {} vertices exist",
                    vertices.len()
                )));
            }
        }
        let [a, b, c] = *face;
        let cross = (vertices[b] - vertices[a]).cross(&(vertices[c] - vertices[a]));
        for &v in face {
            incident[v] += 1;
        }
        if cross.norm() == 0.0 {
            continue; // degenerate face
        }
        for &v in face {
            sums[v] += cross;
        }
    }

    sums.into_iter()
        .enumerate()
        .map(|(vi, sum)| {
            if incident[vi] == 0 {
                return Err(Error::Validation(format!(
                    "vertex {vi} has no incident faces"
                )));
            }
            normalize_unit(sum).map_err(|_| {
                Error::Validation(format!(
                    "vertex {vi} has only degenerate incident faces; normal undefined"
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_normal_is_normalized() {
        let p = OrientedPoint::new(Point3::origin(), Vector3::new(0.0, 0.0, 2.0)).unwrap();
        assert_eq!(p.normal, Vector3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn zero_normal_is_rejected() {
        let err = OrientedPoint::new(Point3::origin(), Vector3::zeros()).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn unit_normal_is_kept_bitwise() {
        let n = Vector3::new(1.0, 1.0, 1.0).normalize();
        let p = OrientedPoint::new(Point3::origin(), n).unwrap();
        assert_eq!(p.normal, n);
    }

    #[test]
    fn empty_cloud_is_rejected() {
        assert!(matches!(
            PointCloud::new(Vec::new()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn single_triangle_normals_point_up() {
        let vertices = [
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ];
        let normals = compute_vertex_normals(&vertices, &[[0, 1, 2]]).unwrap();
        for n in normals {
            assert_eq!(n, Vector3::new(0.0, 0.0, 1.0));
        }
    }

    #[test]
    fn coplanar_triangles_match_single_triangle() {
        let vertices = [
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ];
        let normals = compute_vertex_normals(&vertices, &[[0, 1, 2], [0, 2, 3]]).unwrap();
        for n in normals {
            assert_eq!(n, Vector3::new(0.0, 0.0, 1.0));
        }
    }

    #[test]
    fn unused_vertex_is_an_error() {
        let vertices = [
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(5.0, 5.0, 5.0),
        ];
        let err = compute_vertex_normals(&vertices, &[[0, 1, 2]]).unwrap_err();
        assert!(err.to_string().contains("vertex 3"));
    }

    #[test]
    fn degenerate_face_is_skipped() {
        // The second face has zero area; vertex normals come from the first.
        let vertices = [
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ];
        let normals = compute_vertex_normals(&vertices, &[[0, 1, 2], [0, 1, 1]]).unwrap();
        for n in normals {
            assert_eq!(n, Vector3::new(0.0, 0.0, 1.0));
        }
    }

    #[test]
    fn face_index_out_of_range_is_an_error() {
        let vertices = [
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ];
        let err = compute_vertex_normals(&vertices, &[[0, 1, 7]]).unwrap_err();
        assert!(err.to_string().contains("vertex 7"));
    }
}
