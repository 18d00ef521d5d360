//! Physical world: grid of candidate emitter locations, sensor positions
//! and the ground-truth emitter powers over time.

use nalgebra::DVector;

use crate::error::{Error, Result};

/// Minimum sensor-to-grid-point separation; 1/R^eta blows up at R -> 0.
pub const EPS_GEO: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Candidate emitter locations, row-major over a rectangular area.
#[derive(Clone, Debug)]
pub struct Grid {
    pub width: f64,
    pub height: f64,
    pub rows: usize,
    pub cols: usize,
    points: Vec<Point>,
}

impl Grid {
    /// Grid points sit at cell centers, row-major (row 0 at the bottom).
    pub fn build(width: f64, height: f64, rows: usize, cols: usize) -> Result<Grid> {
        if width <= 0.0 || height <= 0.0 {
            return Err(Error::Config(format!(
                "grid area must be positive, got {width} x {height}"
            )));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::Config(format!(
                "grid must have at least one row and column, got {rows} x {cols}"
            )));
        }
        let cw = width / cols as f64;
        let ch = height / rows as f64;
        let mut points = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                points.push(Point::new((c as f64 + 0.5) * cw, (r as f64 + 0.5) * ch));
            }
        }
        Ok(Grid {
            width,
            height,
            rows,
            cols,
            points,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, p: usize) -> Point {
        self.points[p]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// Distance and orientation of grid point `p` seen from a sensor.
///
/// `broadside` is the direction of the array broadside axis, measured from
/// the +x axis (default +y, i.e. pi/2). The returned angle is measured from
/// the broadside axis; only sin(theta) enters the array model, so points
/// behind the array fold onto the front via the usual ULA ambiguity.
pub fn geometry(grid: &Grid, sensor: Point, broadside: f64, p: usize) -> Result<(f64, f64)> {
    let target = grid.point(p);
    let r = sensor.dist(&target);
    if r < EPS_GEO {
        return Err(Error::Geometry(format!(
            "sensor at ({}, {}) is within {EPS_GEO} m of grid point {p}",
            sensor.x, sensor.y
        )));
    }
    let bearing = (target.y - sensor.y).atan2(target.x - sensor.x);
    let mut theta = broadside - bearing;
    while theta > std::f64::consts::PI {
        theta -= 2.0 * std::f64::consts::PI;
    }
    while theta <= -std::f64::consts::PI {
        theta += 2.0 * std::f64::consts::PI;
    }
    Ok((r, theta))
}

#[derive(Clone, Debug)]
pub struct SensorLayout {
    positions: Vec<Point>,
}

impl SensorLayout {
    pub fn new(positions: Vec<Point>, grid: &Grid) -> Result<SensorLayout> {
        if positions.is_empty() {
            return Err(Error::Config("at least one sensor is required".into()));
        }
        for (i, s) in positions.iter().enumerate() {
            for (p, g) in grid.points().iter().enumerate() {
                if s.dist(g) < EPS_GEO {
                    return Err(Error::Config(format!(
                        "sensor {i} coincides with grid point {p}"
                    )));
                }
            }
        }
        Ok(SensorLayout { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, n: usize) -> Point {
        self.positions[n]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }
}

/// One emitter: a starting grid index, a transmit power and optional
/// relocation events. A move keeps the power (power-preserving move).
#[derive(Clone, Debug)]
pub struct SourceSpec {
    pub index: usize,
    pub power: f64,
    pub moves: Vec<MoveEvent>,
}

#[derive(Clone, Copy, Debug)]
pub struct MoveEvent {
    /// 1-based slot at which the source appears at the new index.
    pub slot: usize,
    pub to: usize,
}

/// Fully materialized per-slot ground truth x(t), t = 1..T.
#[derive(Clone, Debug)]
pub struct GroundTruthTrajectory {
    states: Vec<DVector<f64>>,
}

impl GroundTruthTrajectory {
    pub fn slots(&self) -> usize {
        self.states.len()
    }

    /// Ground truth at 1-based slot t.
    pub fn at(&self, t: usize) -> &DVector<f64> {
        &self.states[t - 1]
    }
}

/// Overlapping sources at one index sum their powers.
pub fn make_trajectory(
    sources: &[SourceSpec],
    grid_len: usize,
    slots: usize,
) -> Result<GroundTruthTrajectory> {
    for (i, s) in sources.iter().enumerate() {
        if s.index >= grid_len {
            return Err(Error::Config(format!(
                "source {i} index {} out of range (P = {grid_len})",
                s.index
            )));
        }
        if s.power < 0.0 {
            return Err(Error::Config(format!("source {i} has negative power")));
        }
        for m in &s.moves {
            if m.to >= grid_len {
                return Err(Error::Config(format!(
                    "source {i} move target {} out of range (P = {grid_len})",
                    m.to
                )));
            }
            if m.slot == 0 || m.slot > slots {
                return Err(Error::Config(format!(
                    "source {i} move slot {} outside 1..={slots}",
                    m.slot
                )));
            }
        }
    }
    let mut states = Vec::with_capacity(slots);
    for t in 1..=slots {
        let mut x = DVector::zeros(grid_len);
        for s in sources {
            let mut idx = s.index;
            for m in &s.moves {
                if t >= m.slot {
                    idx = m.to;
                }
            }
            x[idx] += s.power;
        }
        states.push(x);
    }
    Ok(GroundTruthTrajectory { states })
}
