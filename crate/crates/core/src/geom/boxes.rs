use serde::{Deserialize, Serialize};

use super::cloud::PointCloud;
use super::pose::{wrap_angle, Pose};

/// Face-inclusion slack for point-in-box tests, in meters.
const FACE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ObjectClass {
    Car,
    Pedestrian,
    Cyclist,
    Unknown,
}

impl ObjectClass {
    pub fn name(&self) -> &'static str {
        match self {
            ObjectClass::Car => "Car",
            ObjectClass::Pedestrian => "Pedestrian",
            ObjectClass::Cyclist => "Cyclist",
            ObjectClass::Unknown => "Unknown",
        }
    }
}

/// Gravity-aligned 3D box. `yaw` rotates the length axis; boxes with yaw
/// differing by pi describe the same geometry, so comparisons go through
/// [`bev_iou`] rather than raw angles.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedBox {
    pub cx: f64,
    pub cy: f64,
    pub cz: f64,
    pub length: f64,
    pub width: f64,
    pub height: f64,
    pub yaw: f64,
    pub score: f64,
    pub class: ObjectClass,
    /// Sensor that produced the box, when known.
    pub source_id: Option<String>,
    /// BEV distance from the emitting sensor to the box center, filled at
    /// broadcast time.
    pub source_distance: Option<f64>,
}

impl OrientedBox {
    pub fn new(cx: f64, cy: f64, cz: f64, length: f64, width: f64, height: f64, yaw: f64) -> Self {
        Self {
            cx,
            cy,
            cz,
            length,
            width,
            height,
            yaw: wrap_angle(yaw),
            score: 1.0,
            class: ObjectClass::Unknown,
            source_id: None,
            source_distance: None,
        }
    }

    pub fn bev_area(&self) -> f64 {
        self.length * self.width
    }

    pub fn volume(&self) -> f64 {
        self.length * self.width * self.height
    }

    pub fn bottom_z(&self) -> f64 {
        self.cz - 0.5 * self.height
    }

    pub fn top_z(&self) -> f64 {
        self.cz + 0.5 * self.height
    }

    pub fn bev_center(&self) -> [f64; 2] {
        [self.cx, self.cy]
    }

    /// Corners of the BEV footprint in counter-clockwise order.
    pub fn bev_corners(&self) -> [[f64; 2]; 4] {
        let (s, c) = self.yaw.sin_cos();
        let hl = 0.5 * self.length;
        let hw = 0.5 * self.width;
        let mut out = [[0.0; 2]; 4];
        for (i, (lx, ly)) in [(hl, hw), (-hl, hw), (-hl, -hw), (hl, -hw)]
            .into_iter()
            .enumerate()
        {
            out[i] = [self.cx + c * lx - s * ly, self.cy + s * lx + c * ly];
        }
        out
    }

    /// Maps the box through `t`: center transformed, yaw advanced by `t.yaw`.
    pub fn transformed(&self, t: &Pose) -> OrientedBox {
        let c = t.apply([self.cx, self.cy, self.cz]);
        let mut out = self.clone();
        out.cx = c[0];
        out.cy = c[1];
        out.cz = c[2];
        out.yaw = wrap_angle(self.yaw + t.yaw);
        out
    }

    /// True when `p` lies inside the box volume (faces inclusive within 1e-9).
    pub fn contains(&self, p: [f64; 3]) -> bool {
        if (p[2] - self.cz).abs() > 0.5 * self.height + FACE_TOL {
            return false;
        }
        let (s, c) = self.yaw.sin_cos();
        let dx = p[0] - self.cx;
        let dy = p[1] - self.cy;
        let lx = c * dx + s * dy;
        let ly = -s * dx + c * dy;
        lx.abs() <= 0.5 * self.length + FACE_TOL && ly.abs() <= 0.5 * self.width + FACE_TOL
    }
}

/// Indices of cloud points strictly inside the box (faces inclusive within 1e-9).
pub fn points_in_box(b: &OrientedBox, cloud: &PointCloud) -> Vec<usize> {
    cloud
        .points
        .iter()
        .enumerate()
        .filter(|(_, p)| b.contains([p[0] as f64, p[1] as f64, p[2] as f64]))
        .map(|(i, _)| i)
        .collect()
}

/// Count-only variant of [`points_in_box`].
pub fn count_points_in_box(b: &OrientedBox, cloud: &PointCloud) -> usize {
    cloud
        .points
        .iter()
        .filter(|p| b.contains([p[0] as f64, p[1] as f64, p[2] as f64]))
        .count()
}

/// BEV intersection-over-union of two yaw-rotated rectangles, computed by
/// clipping one footprint against the other (Sutherland-Hodgman) and taking
/// the exact polygon areas.
pub fn bev_iou(a: &OrientedBox, b: &OrientedBox) -> f64 {
    let area_a = a.bev_area();
    let area_b = b.bev_area();
    if area_a <= 0.0 || area_b <= 0.0 {
        return 0.0;
    }
    // Cheap reject: disjoint bounding circles.
    let ra = 0.5 * a.length.hypot(a.width);
    let rb = 0.5 * b.length.hypot(b.width);
    let d = (a.cx - b.cx).hypot(a.cy - b.cy);
    if d > ra + rb {
        return 0.0;
    }
    let inter = convex_clip_area(&a.bev_corners(), &b.bev_corners());
    let union = area_a + area_b - inter;
    if union <= 0.0 {
        return 0.0;
    }
    (inter / union).clamp(0.0, 1.0)
}

/// Area of `subject` clipped to the convex polygon `clip` (both CCW).
fn convex_clip_area(subject: &[[f64; 2]; 4], clip: &[[f64; 2]; 4]) -> f64 {
    let mut poly: Vec<[f64; 2]> = subject.to_vec();
    let mut next: Vec<[f64; 2]> = Vec::with_capacity(8);
    for i in 0..4 {
        if poly.is_empty() {
            return 0.0;
        }
        let e0 = clip[i];
        let e1 = clip[(i + 1) % 4];
        next.clear();
        let mut prev = *poly.last().unwrap();
        let mut prev_side = edge_side(e0, e1, prev);
        for &cur in &poly {
            let cur_side = edge_side(e0, e1, cur);
            if cur_side >= 0.0 {
                if prev_side < 0.0 {
                    next.push(edge_intersection(e0, e1, prev, cur));
                }
                next.push(cur);
            } else if prev_side >= 0.0 {
                next.push(edge_intersection(e0, e1, prev, cur));
            }
            prev = cur;
            prev_side = cur_side;
        }
        std::mem::swap(&mut poly, &mut next);
    }
    polygon_area(&poly)
}

fn edge_side(e0: [f64; 2], e1: [f64; 2], p: [f64; 2]) -> f64 {
    (e1[0] - e0[0]) * (p[1] - e0[1]) - (e1[1] - e0[1]) * (p[0] - e0[0])
}

fn edge_intersection(e0: [f64; 2], e1: [f64; 2], p0: [f64; 2], p1: [f64; 2]) -> [f64; 2] {
    let d0 = edge_side(e0, e1, p0);
    let d1 = edge_side(e0, e1, p1);
    let t = d0 / (d0 - d1);
    [p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])]
}

fn polygon_area(poly: &[[f64; 2]]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        acc += p[0] * q[1] - q[0] * p[1];
    }
    0.5 * acc.abs()
}
