/// One sensor sweep. Coordinates live in the emitting sensor's frame; the
/// per-point `actor_tag` identifies the struck actor (0 for ground and static
/// geometry) and is consumed only by evaluation, never by the pipeline.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointCloud {
    pub sensor_id: String,
    pub frame_index: u32,
    pub points: Vec<[f32; 3]>,
    pub tags: Vec<u32>,
}

impl PointCloud {
    pub fn new(sensor_id: String, frame_index: u32) -> Self {
        Self {
            sensor_id,
            frame_index,
            points: Vec::new(),
            tags: Vec::new(),
        }
    }

    pub fn push(&mut self, p: [f32; 3], tag: u32) {
        self.points.push(p);
        self.tags.push(tag);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// New cloud keeping only the listed point indices, in order.
    pub fn select(&self, indices: &[usize]) -> PointCloud {
        PointCloud {
            sensor_id: self.sensor_id.clone(),
            frame_index: self.frame_index,
            points: indices.iter().map(|&i| self.points[i]).collect(),
            tags: indices.iter().map(|&i| self.tags[i]).collect(),
        }
    }
}
