//! Shared inputs for the benchmarks.

use grdual_core::amodel::{valuation_table, ValuationTable};
use grdual_core::network::{rectangles_chart, NetworkChart};
use grdual_core::GrassmannShape;

pub fn shape(k: usize, n: usize) -> GrassmannShape {
    GrassmannShape::new(k, n).expect("valid shape")
}

pub fn chart(k: usize, n: usize) -> NetworkChart {
    rectangles_chart(shape(k, n))
}

pub fn table(k: usize, n: usize) -> ValuationTable {
    valuation_table(&chart(k, n), None).expect("valuations of the rectangles chart")
}
