//! Exact rational straight-line drawings.
//!
//! All predicates work over `BigRational`, so questions such as "does this
//! drawing still have a crossing" are decided exactly.

mod crossings;
mod layout;
mod point;

pub(crate) use crossings::free_radius_among;
pub use crossings::{
    free_radius, list_crossings, segment_intersection, validate_general_position, Crossing, GeneralPositionReport,
    Violation,
};
pub use layout::circle_layout;
pub use point::{orientation, rational, Point, Rational};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{EnergyInstance, NodeId};

/// Coordinates for nodes `0..len`, indexed by node id.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Drawing {
    coords: Vec<Point>,
}

impl Drawing {
    pub fn new(coords: Vec<Point>) -> Self {
        Drawing { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, u: NodeId) -> Result<&Point> {
        self.coords.get(u).ok_or(Error::MissingCoordinate(u))
    }

    pub fn points(&self) -> &[Point] {
        &self.coords
    }

    pub fn push(&mut self, p: Point) -> NodeId {
        self.coords.push(p);
        self.coords.len() - 1
    }

    /// Errors unless every node of `instance` has a coordinate and no
    /// coordinates are left over.
    pub fn check_covers(&self, instance: &EnergyInstance) -> Result<()> {
        let n = instance.num_nodes();
        if self.coords.len() < n {
            return Err(Error::MissingCoordinate(self.coords.len()));
        }
        if self.coords.len() > n {
            return Err(Error::InvalidInstance(format!("drawing has {} points for {n} nodes", self.coords.len())));
        }
        Ok(())
    }

    /// Applies `p ↦ scale·p + offset` to every point.
    pub fn transformed(&self, scale: &Rational, offset: &Point) -> Drawing {
        Drawing { coords: self.coords.iter().map(|p| &p.scale(scale) + offset).collect() }
    }
}
