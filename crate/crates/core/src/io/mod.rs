//! Persisted formats: binary point-cloud files and JSON-lines label files.

mod cvpc;
mod labels;

pub use cvpc::{read_cloud, write_cloud, CvpcError};
pub use labels::{
    group_by_frame, read_label_records, write_label_records, write_label_sets, LabelRecord,
    LabelSet,
};
