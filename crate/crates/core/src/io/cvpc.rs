//! CVPC point-cloud files: magic `CVPC`, little-endian u32 version (=1),
//! u32 point count, then per point f32 x, y, z and u32 actor tag.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::geom::PointCloud;

const MAGIC: &[u8; 4] = b"CVPC";
const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CvpcError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad magic, not a CVPC file")]
    BadMagic,
    #[error("unsupported CVPC version {0}")]
    BadVersion(u32),
    #[error("truncated CVPC payload")]
    Truncated,
}

pub fn write_cloud(path: &Path, cloud: &PointCloud) -> Result<(), CvpcError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(cloud.len() as u32).to_le_bytes())?;
    let mut rec = [0u8; 16];
    for (p, &tag) in cloud.points.iter().zip(&cloud.tags) {
        rec[0..4].copy_from_slice(&p[0].to_le_bytes());
        rec[4..8].copy_from_slice(&p[1].to_le_bytes());
        rec[8..12].copy_from_slice(&p[2].to_le_bytes());
        rec[12..16].copy_from_slice(&tag.to_le_bytes());
        w.write_all(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a cloud; `sensor_id` and `frame_index` are not stored in the file and
/// are taken from the caller (they are encoded in the directory layout).
pub fn read_cloud(path: &Path, sensor_id: &str, frame_index: u32) -> Result<PointCloud, CvpcError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut header = [0u8; 12];
    r.read_exact(&mut header).map_err(|_| CvpcError::Truncated)?;
    if &header[0..4] != MAGIC {
        return Err(CvpcError::BadMagic);
    }
    let version = u32::from_le_bytes(header[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(CvpcError::BadVersion(version));
    }
    let count = u32::from_le_bytes(header[8..12].try_into().unwrap()) as usize;
    let mut payload = Vec::new();
    r.read_to_end(&mut payload)?;
    if payload.len() != count * 16 {
        return Err(CvpcError::Truncated);
    }
    let mut cloud = PointCloud::new(sensor_id.to_string(), frame_index);
    cloud.points.reserve_exact(count);
    cloud.tags.reserve_exact(count);
    for rec in payload.chunks_exact(16) {
        cloud.points.push([
            f32::from_le_bytes(rec[0..4].try_into().unwrap()),
            f32::from_le_bytes(rec[4..8].try_into().unwrap()),
            f32::from_le_bytes(rec[8..12].try_into().unwrap()),
        ]);
        cloud.tags.push(u32::from_le_bytes(rec[12..16].try_into().unwrap()));
    }
    Ok(cloud)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_bits() {
        let mut cloud = PointCloud::new("rsu_a".into(), 17);
        cloud.push([1.5, -2.25, 0.125], 0);
        cloud.push([f32::MIN_POSITIVE, 1e9, -0.0], 42);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("frame.cvpc");
        write_cloud(&path, &cloud).unwrap();
        let back = read_cloud(&path, "rsu_a", 17).unwrap();
        assert_eq!(back, cloud);

        let raw = std::fs::read(&path).unwrap();
        assert_eq!(&raw[0..4], b"CVPC");
        assert_eq!(u32::from_le_bytes(raw[4..8].try_into().unwrap()), 1);
        assert_eq!(u32::from_le_bytes(raw[8..12].try_into().unwrap()), 2);
        assert_eq!(raw.len(), 12 + 2 * 16);
    }

    #[test]
    fn rejects_foreign_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bogus.cvpc");
        std::fs::write(&path, b"NOPExxxxyyyy").unwrap();
        assert!(matches!(
            read_cloud(&path, "s", 0),
            Err(CvpcError::BadMagic)
        ));
    }
}
