//! The code families of the capability tables: optimal WRM codes on a
//! two-dimensional grid and the MCJ codes of the same designed distance.

use serde::Serialize;

use crate::codes::{footprint, MonomialSet};
use crate::rsdec::gs_capability_ultimate;
use crate::zeros::{Bound, BoundTable};
use crate::Rational;

use super::{capability_from_table, MvdecError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableGrid {
    pub name: String,
    /// Field size q; the grid lives in GF(q)^2.
    pub q: u32,
    pub sizes: [u32; 2],
    pub weights: [i64; 2],
    pub us: Vec<u32>,
}

impl TableGrid {
    pub fn table2() -> Self {
        TableGrid {
            name: "table2".into(),
            q: 64,
            sizes: [64, 8],
            weights: [1, 8],
            us: vec![3, 4, 7, 15, 16, 20],
        }
    }

    pub fn table3() -> Self {
        TableGrid {
            name: "table3".into(),
            q: 256,
            sizes: [256, 16],
            weights: [1, 16],
            us: vec![5, 8, 15, 31, 36, 55],
        }
    }

    pub fn n(&self) -> u64 {
        self.sizes[0] as u64 * self.sizes[1] as u64
    }

    pub fn columns(&self) -> Result<Vec<TableColumn>, MvdecError> {
        let w = [Rational::from_integer(self.weights[0]), Rational::from_integer(self.weights[1])];
        self.us
            .iter()
            .map(|&u| {
                let wrm = MonomialSet::wrm(&self.sizes, Rational::from_integer(u as i64), &w)?;
                let distance = wrm.monomials().iter().map(|m| footprint(&self.sizes, m)).min().unwrap_or(0);
                let mcj = MonomialSet::mcj(&self.sizes, distance);
                let mcj = (mcj.len() != wrm.len()).then_some(mcj);
                Ok(TableColumn { u, distance, wrm, mcj })
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct TableColumn {
    pub u: u32,
    pub distance: u64,
    pub wrm: MonomialSet,
    /// Only when it is larger than the WRM code.
    pub mcj: Option<MonomialSet>,
}

impl TableColumn {
    /// Ultimate capability of the subfield subcode decoder, from the RS
    /// code of dimension t q + 1 on the n grid points.
    pub fn sub_capability(&self, grid: &TableGrid) -> u64 {
        let t = self.wrm.max_total_degree().unwrap_or(0) as u64;
        gs_capability_ultimate(grid.n(), t * grid.q as u64 + 1)
    }
}

/// One table cell: E_max of the WRM code and, if different, of the MCJ
/// code. `None` where no E is admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CapabilityCell {
    pub u: u32,
    pub wrm: Option<i64>,
    pub mcj: Option<Option<i64>>,
}

fn cap_or_none(table: &BoundTable, set: &MonomialSet) -> Result<Option<i64>, MvdecError> {
    match capability_from_table(table, set.monomials()) {
        Ok(c) => Ok(Some(c.e_max)),
        Err(MvdecError::NoCapability { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn capability_row(grid: &TableGrid, columns: &[TableColumn], r: u32, bound: &Bound) -> Result<Vec<CapabilityCell>, MvdecError> {
    let table = BoundTable::new(bound, r, &grid.sizes)?;
    columns
        .iter()
        .map(|c| {
            Ok(CapabilityCell {
                u: c.u,
                wrm: cap_or_none(&table, &c.wrm)?,
                mcj: c.mcj.as_ref().map(|s| cap_or_none(&table, s)).transpose()?,
            })
        })
        .collect()
}
