//! Shared geometry: yaw-only rigid transforms, oriented boxes, rotated-rectangle
//! IoU by polygon clipping, point-in-box tests, and minimum-area rectangle fitting.
//!
//! Poses are SE(2) with a carried z offset: every rotation is about +z. Boxes are
//! gravity-aligned, so all overlap math happens on the BEV plane.

mod boxes;
mod cloud;
mod pose;
mod rect;

pub use boxes::{bev_iou, points_in_box, ObjectClass, OrientedBox};
pub use cloud::PointCloud;
pub use pose::{wrap_angle, Pose};
pub use rect::{convex_hull, min_area_rect, BevRect, GeomError};
