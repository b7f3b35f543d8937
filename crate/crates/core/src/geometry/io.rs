//! File ingestion: `xyzn` oriented-point lists and ASCII OFF triangle meshes.
//!
//! `xyzn` is one point per line, six whitespace-separated decimal reals
//! (`px py pz nx ny nz`); `#` starts a comment line. OFF files carry no
//! normals, so per-vertex normals are derived from the incident faces.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use nalgebra::{Point3, Vector3};

use super::{compute_vertex_normals, OrientedPoint, PointCloud};
use crate::error::Error;
use crate::Result;

/// Supported point-cloud file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudFormat {
    Xyzn,
    Off,
}

impl std::str::FromStr for CloudFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xyzn" => Ok(CloudFormat::Xyzn),
            "off" => Ok(CloudFormat::Off),
            other => Err(Error::Usage(format!(
                "unknown cloud format '{other}' (expected xyzn or off)"
            ))),
        }
    }
}

/// Loads an oriented point cloud from `path` in the given format.
pub fn load_point_cloud(path: impl AsRef<Path>, format: CloudFormat) -> Result<PointCloud> {
    let file = File::open(path.as_ref())?;
    let reader = BufReader::new(file);
    match format {
        CloudFormat::Xyzn => parse_xyzn(reader),
        CloudFormat::Off => parse_off(reader),
    }
}

fn parse_f64(token: &str, line: usize) -> Result<f64> {
    token.parse::<f64>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a decimal real, found '{token}'"),
    })
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found '{token}'"),
    })
}

/// Parses the `xyzn` format from any buffered reader.
pub fn parse_xyzn<R: BufRead>(reader: R) -> Result<PointCloud> {
    let mut points = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 6 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 6 values (px py pz nx ny nz), found {}", tokens.len()),
            });
        }
        let mut vals = [0.0; 6];
        for (v, t) in vals.iter_mut().zip(&tokens) {
            *v = parse_f64(t, line_no)?;
        }
        let position = Point3::new(vals[0], vals[1], vals[2]);
        let normal = Vector3::new(vals[3], vals[4], vals[5]);
        let index = points.len();
        let point = OrientedPoint::new(position, normal)
            .map_err(|e| Error::Validation(format!("point {index}: {e}")))?;
        points.push(point);
    }
    PointCloud::new(points)
}

/// Writes a cloud in the `xyzn` format. Values use Rust's shortest
/// round-trip float formatting, so re-loading reproduces the cloud exactly.
pub fn write_xyzn<W: Write>(cloud: &PointCloud, mut writer: W) -> std::io::Result<()> {
    for p in cloud.points() {
        writeln!(
            writer,
            "{} {} {} {} {} {}",
            p.position.x, p.position.y, p.position.z, p.normal.x, p.normal.y, p.normal.z
        )?;
    }
    Ok(())
}

/// Parses an ASCII OFF triangle mesh and derives per-vertex normals.
///
/// Accepts the counts either on the line after the `OFF` keyword or on the
/// keyword line itself; faces must be triangles.
pub fn parse_off<R: BufRead>(reader: R) -> Result<PointCloud> {
    // (1-based line number, content) with comments and blanks stripped.
    let mut lines = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lines.push((idx + 1, trimmed.to_string()));
    }
    let mut it = lines.into_iter();

    let (header_no, header) = it
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "empty OFF file".to_string() })?;
    let mut header_tokens = header.split_whitespace();
    if header_tokens.next() != Some("OFF") {
        return Err(Error::Parse {
            line: header_no,
            msg: "expected OFF header".to_string(),
        });
    }
    let rest: Vec<&str> = header_tokens.collect();
    let (counts_no, counts): (usize, Vec<String>) = if rest.is_empty() {
        let (no, line) = it.next().ok_or_else(|| Error::Parse {
            line: header_no,
            msg: "missing vertex/face count line".to_string(),
        })?;
        (no, line.split_whitespace().map(str::to_string).collect())
    } else {
        (header_no, rest.into_iter().map(str::to_string).collect())
    };
    if counts.len() < 2 {
        return Err(Error::Parse {
            line: counts_no,
            msg: "expected vertex and face counts".to_string(),
        });
    }
    let n_vertices = parse_usize(&counts[0], counts_no)?;
    let n_faces = parse_usize(&counts[1], counts_no)?;

    let mut vertices = Vec::with_capacity(n_vertices);
    for _ in 0..n_vertices {
        let (no, line) = it.next().ok_or_else(|| Error::Parse {
            line: counts_no,
            msg: format!("expected {n_vertices} vertex lines"),
        })?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: no,
                msg: format!("expected 3 vertex coordinates, found {}", tokens.len()),
            });
        }
        vertices.push(Point3::new(
            parse_f64(tokens[0], no)?,
            parse_f64(tokens[1], no)?,
            parse_f64(tokens[2], no)?,
        ));
    }

    let mut faces = Vec::with_capacity(n_faces);
    for _ in 0..n_faces {
        let (no, line) = it.next().ok_or_else(|| Error::Parse {
            line: counts_no,
            msg: format!("expected {n_faces} face lines"),
        })?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.first() != Some(&"3") || tokens.len() != 4 {
            return Err(Error::Parse {
                line: no,
                msg: "only triangular faces are supported".to_string(),
            });
        }
        faces.push([
            parse_usize(tokens[1], no)?,
            parse_usize(tokens[2], no)?,
            parse_usize(tokens[3], no)?,
        ]);
    }

    let normals = compute_vertex_normals(&vertices, &faces)?;
    let points = vertices
        .into_iter()
        .zip(normals)
        .map(|(position, normal)| OrientedPoint { position, normal })
        .collect();
    PointCloud::new(points)
}
