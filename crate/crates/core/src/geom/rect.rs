use thiserror::Error;

use super::pose::wrap_angle;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    /// The input hull is degenerate (fewer than 3 non-collinear points), so no
    /// rotated rectangle is defined. Callers fall back to an axis-aligned bound.
    #[error("input points are collinear or too few for a rectangle fit")]
    CollinearInput,
}

/// Minimum-area enclosing rectangle of a BEV point set. `yaw` is aligned with
/// the long side and canonicalized to `(-pi/2, pi/2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BevRect {
    pub cx: f64,
    pub cy: f64,
    pub length: f64,
    pub width: f64,
    pub yaw: f64,
}

/// Convex hull by Andrew's monotone chain, counter-clockwise, no duplicate
/// endpoint. Collinear points on the boundary are dropped.
pub fn convex_hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    let n = pts.len();
    if n < 3 {
        return pts;
    }
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * n);
    for &p in pts.iter() {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Minimum-area enclosing rectangle via convex hull plus a caliper sweep over
/// hull-edge orientations (the optimum is aligned with some hull edge).
pub fn min_area_rect(points: &[[f64; 2]]) -> Result<BevRect, GeomError> {
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Err(GeomError::CollinearInput);
    }
    let mut best: Option<(f64, BevRect)> = None;
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        let ex = b[0] - a[0];
        let ey = b[1] - a[1];
        let norm = ex.hypot(ey);
        if norm <= f64::EPSILON {
            continue;
        }
        let (ux, uy) = (ex / norm, ey / norm);
        // Project all hull points onto the edge direction and its normal.
        let mut min_u = f64::INFINITY;
        let mut max_u = f64::NEG_INFINITY;
        let mut min_v = f64::INFINITY;
        let mut max_v = f64::NEG_INFINITY;
        for p in &hull {
            let u = ux * p[0] + uy * p[1];
            let v = -uy * p[0] + ux * p[1];
            min_u = min_u.min(u);
            max_u = max_u.max(u);
            min_v = min_v.min(v);
            max_v = max_v.max(v);
        }
        let du = max_u - min_u;
        let dv = max_v - min_v;
        let area = du * dv;
        if best.as_ref().is_none_or(|(ab, _)| area < *ab) {
            let cu = 0.5 * (min_u + max_u);
            let cv = 0.5 * (min_v + max_v);
            let cx = ux * cu - uy * cv;
            let cy = uy * cu + ux * cv;
            let (length, width, yaw) = if du >= dv {
                (du, dv, uy.atan2(ux))
            } else {
                (dv, du, ux.atan2(-uy))
            };
            best = Some((
                area,
                BevRect {
                    cx,
                    cy,
                    length,
                    width,
                    yaw: canonical_half_turn(yaw),
                },
            ));
        }
    }
    let (area, rect) = best.ok_or(GeomError::CollinearInput)?;
    if area <= f64::EPSILON {
        return Err(GeomError::CollinearInput);
    }
    Ok(rect)
}

/// Rectangle yaw is only defined modulo pi; fold into `(-pi/2, pi/2]`.
fn canonical_half_turn(yaw: f64) -> f64 {
    let mut y = wrap_angle(yaw);
    if y <= -std::f64::consts::FRAC_PI_2 {
        y += std::f64::consts::PI;
    } else if y > std::f64::consts::FRAC_PI_2 {
        y -= std::f64::consts::PI;
    }
    y
}
