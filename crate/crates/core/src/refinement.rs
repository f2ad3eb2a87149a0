//! Refinement of an initial table to its partial level valuations.
//!
//! A row survives only if each of its undetermined cells (U, or 1 in S4) has
//! a validator: another row, compatible with it, that puts the bottom value
//! in the same column. Removal happens in batches — every cycle checks all
//! rows against the table as it stood when the cycle began — until a cycle
//! removes nothing.

use serde::Serialize;

use crate::nmatrix::Value;
use crate::tabulation::{Row, Table};

const BOTTOM: Value = Value(0);
const UNDETERMINED: Value = Value(1);
const TOP: Value = Value(2);

/// Every column that is top in `v` is top in `w` as well.
pub fn is_compatible(v: &Row, w: &Row) -> bool {
    v.values
        .iter()
        .zip(&w.values)
        .all(|(&a, &b)| a != TOP || b == TOP)
}

/// Ids of the rows of `table` that are compatible with `row` and hold the
/// bottom value in `column`. An empty result means the cell is unsupported.
pub fn find_validators(table: &Table, row: &Row, column: usize) -> Vec<usize> {
    table
        .rows()
        .iter()
        .filter(|w| w.values[column] == BOTTOM && is_compatible(row, w))
        .map(|w| w.id)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    /// The value is not undetermined; nothing to validate.
    Skip,
    Supported(Vec<usize>),
    Unsupported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowRecord {
    pub id: usize,
    pub cells: Vec<Cell>,
}

impl RowRecord {
    pub fn is_supported(&self) -> bool {
        !self.cells.contains(&Cell::Unsupported)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub rows: Vec<RowRecord>,
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidatorsTrace {
    pub cycles: Vec<CycleRecord>,
}

impl ValidatorsTrace {
    /// The record of the last cycle, which removed nothing: validators
    /// against the fixpoint itself.
    pub fn validators(&self) -> Option<&CycleRecord> {
        self.cycles.last()
    }

    pub fn removed(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().flat_map(|c| c.removed.iter().copied())
    }
}

/// One batch cycle with the full validators record.
pub fn refine_cycle(table: &Table) -> (Table, CycleRecord) {
    let rows: Vec<RowRecord> = table
        .rows()
        .iter()
        .map(|row| RowRecord {
            id: row.id,
            cells: row
                .values
                .iter()
                .enumerate()
                .map(|(col, &v)| {
                    if v != UNDETERMINED {
                        return Cell::Skip;
                    }
                    let ids = find_validators(table, row, col);
                    if ids.is_empty() {
                        Cell::Unsupported
                    } else {
                        Cell::Supported(ids)
                    }
                })
                .collect(),
        })
        .collect();
    let removed: Vec<usize> = rows
        .iter()
        .filter(|r| !r.is_supported())
        .map(|r| r.id)
        .collect();
    let next = table.retain(|r| removed.binary_search(&r.id).is_err());
    (next, CycleRecord { rows, removed })
}

/// Cycles until nothing is removed, recording every cycle including the
/// final, empty one.
pub fn refine_fixpoint(table: &Table) -> (Table, ValidatorsTrace) {
    let mut trace = ValidatorsTrace::default();
    let mut current = table.clone();
    loop {
        let (next, record) = refine_cycle(&current);
        let done = record.removed.is_empty();
        trace.cycles.push(record);
        current = next;
        if done {
            return (current, trace);
        }
    }
}

/// A row as three column masks.
#[derive(Clone, Copy)]
struct Masks {
    top: u128,
    undetermined: u128,
    bottom: u128,
}

impl Masks {
    fn of(row: &Row) -> Masks {
        let mut m = Masks {
            top: 0,
            undetermined: 0,
            bottom: 0,
        };
        for (i, &v) in row.values.iter().enumerate() {
            let bit = 1u128 << i;
            match v {
                TOP => m.top |= bit,
                UNDETERMINED => m.undetermined |= bit,
                _ => m.bottom |= bit,
            }
        }
        m
    }
}

/// The fixpoint of [`refine_fixpoint`] without the trace, plus the number of
/// cycles run (counting the final empty one).
pub fn refine(table: &Table) -> (Table, usize) {
    let masks: Vec<Masks> = table.rows().iter().map(Masks::of).collect();
    let mut alive: Vec<usize> = (0..masks.len()).collect();
    let mut cycles = 0;
    loop {
        cycles += 1;
        let survivors: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&i| {
                let v = masks[i];
                if v.undetermined == 0 {
                    return true;
                }
                let mut covered = 0u128;
                for &j in &alive {
                    let w = masks[j];
                    if v.top & !w.top == 0 {
                        covered |= w.bottom;
                        if v.undetermined & !covered == 0 {
                            return true;
                        }
                    }
                }
                false
            })
            .collect();
        if survivors.len() == alive.len() {
            break;
        }
        alive = survivors;
    }
    let mut keep = vec![false; masks.len()];
    for i in alive {
        keep[i] = true;
    }
    let mut idx = 0;
    let refined = table.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
    (refined, cycles)
}
