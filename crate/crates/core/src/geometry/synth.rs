//! Seeded synthetic clouds for desk-scale runs and tests.

use nalgebra::{Point3, Vector3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{OrientedPoint, PointCloud};
use crate::error::Error;
use crate::Result;

/// Torus major radius used by [`SynthKind::Torus`].
pub const TORUS_MAJOR_RADIUS: f64 = 2.0;
/// Torus minor (tube) radius used by [`SynthKind::Torus`].
pub const TORUS_MINOR_RADIUS: f64 = 0.5;

/// Shapes available from [`synth_cloud`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthKind {
    /// Unit sphere; the normal at each point is the point itself.
    Sphere,
    /// Torus with radii [`TORUS_MAJOR_RADIUS`] and [`TORUS_MINOR_RADIUS`];
    /// normals are the analytic surface normals.
    Torus,
    /// Uniform points in [-1, 1]^3 with random unit normals.
    UniformBox,
}

impl std::str::FromStr for SynthKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sphere" => Ok(SynthKind::Sphere),
            "torus" => Ok(SynthKind::Torus),
            "uniform_box" => Ok(SynthKind::UniformBox),
            other => Err(Error::Usage(format!(
                "unknown synthetic cloud kind '{other}' (expected sphere, torus, or uniform_box)"
            ))),
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    // Area-uniform on the sphere: z uniform, azimuth uniform.
    let z: f64 = rng.gen_range(-1.0..1.0);
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    Vector3::new(r * theta.cos(), r * theta.sin(), z).normalize()
}

/// Generates a deterministic synthetic cloud: a pure function of
/// `(kind, count, seed)`.
pub fn synth_cloud(kind: SynthKind, count: usize, seed: u64) -> Result<PointCloud> {
    if count == 0 {
        return Err(Error::Validation(
            "synthetic cloud needs at least one point".to_string(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        let point = match kind {
            SynthKind::Sphere => {
                let n = random_unit(&mut rng);
                OrientedPoint { position: Point3::from(n), normal: n }
            }
            SynthKind::Torus => {
                let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let ring = TORUS_MAJOR_RADIUS + TORUS_MINOR_RADIUS * phi.cos();
                let position = Point3::new(ring * theta.cos(), ring * theta.sin(), TORUS_MINOR_RADIUS * phi.sin());
                let normal = Vector3::new(phi.cos() * theta.cos(), phi.cos() * theta.sin(), phi.sin());
                OrientedPoint { position, normal }
            }
            SynthKind::UniformBox => {
                let position = Point3::new(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                );
                OrientedPoint { position, normal: random_unit(&mut rng) }
            }
        };
        points.push(point);
    }
    PointCloud::new(points)
}
