use serde::{Deserialize, Serialize};

/// Normalize an angle to `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut w = a.rem_euclid(two_pi);
    if w > std::f64::consts::PI {
        w -= two_pi;
    }
    // rem_euclid can land exactly on -pi via rounding; keep the (-pi, pi] convention.
    if w <= -std::f64::consts::PI {
        w = std::f64::consts::PI;
    }
    w
}

/// Rigid transform with yaw-only rotation: maps child-frame coordinates
/// into the parent frame.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    #[serde(default)]
    pub z: f64,
    #[serde(default)]
    pub yaw: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, z: f64, yaw: f64) -> Self {
        Self {
            x,
            y,
            z,
            yaw: wrap_angle(yaw),
        }
    }

    pub fn identity() -> Self {
        Self {
            x: 0.0,
            y: 0.0,
            z: 0.0,
            yaw: 0.0,
        }
    }

    /// `self` then `other`: the result maps p the way `self.apply(other.apply(p))` does.
    pub fn compose(&self, other: &Pose) -> Pose {
        let (s, c) = self.yaw.sin_cos();
        Pose {
            x: self.x + c * other.x - s * other.y,
            y: self.y + s * other.x + c * other.y,
            z: self.z + other.z,
            yaw: wrap_angle(self.yaw + other.yaw),
        }
    }

    pub fn inverse(&self) -> Pose {
        let (s, c) = self.yaw.sin_cos();
        // R(-yaw) * (-t)
        Pose {
            x: -(c * self.x + s * self.y),
            y: -(-s * self.x + c * self.y),
            z: -self.z,
            yaw: wrap_angle(-self.yaw),
        }
    }

    pub fn apply(&self, p: [f64; 3]) -> [f64; 3] {
        let (s, c) = self.yaw.sin_cos();
        [
            self.x + c * p[0] - s * p[1],
            self.y + s * p[0] + c * p[1],
            self.z + p[2],
        ]
    }

    pub fn apply_bev(&self, p: [f64; 2]) -> [f64; 2] {
        let (s, c) = self.yaw.sin_cos();
        [self.x + c * p[0] - s * p[1], self.y + s * p[0] + c * p[1]]
    }

    /// BEV distance between two pose origins.
    pub fn bev_distance(&self, other: &Pose) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn compose_identity() {
        let id = Pose::identity();
        let c = id.compose(&id);
        assert_eq!(c, id);
    }

    #[test]
    fn compose_translations_add() {
        let a = Pose::new(1.0, 0.0, 0.0, 0.0);
        let b = Pose::new(0.0, 2.0, 0.0, 0.0);
        let c = a.compose(&b);
        assert_abs_diff_eq!(c.x, 1.0);
        assert_abs_diff_eq!(c.y, 2.0);
        assert_abs_diff_eq!(c.yaw, 0.0);
    }

    #[test]
    fn compose_quarter_turn_maps_x_to_y() {
        let a = Pose::new(0.0, 0.0, 0.0, FRAC_PI_2);
        let b = Pose::new(1.0, 0.0, 0.0, 0.0);
        let c = a.compose(&b);
        assert_abs_diff_eq!(c.x, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.y, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.yaw, FRAC_PI_2);
    }

    #[test]
    fn inverse_identity_and_translation() {
        assert_eq!(Pose::identity().inverse(), Pose::identity());
        let p = Pose::new(3.0, 0.0, 0.0, 0.0).inverse();
        assert_abs_diff_eq!(p.x, -3.0);
        assert_abs_diff_eq!(p.y, 0.0);
    }

    #[test]
    fn inverse_round_trips_points() {
        let p = Pose::new(1.0, 0.0, 0.5, FRAC_PI_2);
        let inv = p.inverse();
        assert_abs_diff_eq!(inv.x, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.y, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.yaw, -FRAC_PI_2, epsilon = 1e-12);
        for q in [[0.0, 0.0, 0.0], [2.5, -1.0, 0.3], [-4.0, 7.0, 1.0]] {
            let r = inv.apply(p.apply(q));
            for k in 0..3 {
                assert_abs_diff_eq!(r[k], q[k], epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn wrap_angle_convention() {
        assert_abs_diff_eq!(wrap_angle(PI), PI);
        assert_abs_diff_eq!(wrap_angle(-PI), PI);
        assert_abs_diff_eq!(wrap_angle(3.0 * PI), PI);
        assert_abs_diff_eq!(wrap_angle(-0.25), -0.25);
        assert_abs_diff_eq!(wrap_angle(2.0 * PI + 0.1), 0.1, epsilon = 1e-12);
    }
}
