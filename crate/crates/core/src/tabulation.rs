//! Initial truth tables: every locally consistent assignment of values to the
//! columns of a subformula closure, plus the closed-form row-count bounds.

use std::sync::Arc;

use thiserror::Error;

use crate::formula::{Connective, Formula, Signature, SubformulaClosure};
use crate::nmatrix::{MatrixKind, Value, ValueSet};

/// Tables wider than this are rejected; rows are kept as 128-bit masks
/// during refinement.
pub const MAX_COLUMNS: usize = 128;

/// Default cap on generated rows.
pub const DEFAULT_ROW_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("closure contains □ but the {0:?} matrix has no modal operator")]
    SignatureMismatch(MatrixKind),
    #[error("closure has {0} columns; at most {MAX_COLUMNS} are supported")]
    TooManyColumns(usize),
    #[error("table exceeds the limit of {0} rows")]
    TooManyRows(usize),
}

/// How a column is computed from earlier columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnShape {
    Atom,
    Unary(Connective, usize),
    Binary(Connective, usize, usize),
}

#[derive(Debug)]
struct Layout {
    closure: SubformulaClosure,
    shapes: Vec<ColumnShape>,
}

/// One partial valuation: a value per closure column, and a row id that is
/// stable across refinement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub id: usize,
    pub values: Vec<Value>,
}

#[derive(Clone, Debug)]
pub struct Table {
    layout: Arc<Layout>,
    kind: MatrixKind,
    rows: Vec<Row>,
}

impl PartialEq for Table {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.layout.closure == other.layout.closure
            && self.rows == other.rows
    }
}

impl Eq for Table {}

fn shapes_of(closure: &SubformulaClosure) -> Vec<ColumnShape> {
    let idx = |f: &Formula| closure.index_of(f).expect("closure is subformula-closed");
    closure
        .formulas()
        .iter()
        .map(|f| match f {
            Formula::Atom(_) => ColumnShape::Atom,
            Formula::Neg(a) => ColumnShape::Unary(Connective::Neg, idx(a)),
            Formula::Box(a) => ColumnShape::Unary(Connective::Box, idx(a)),
            Formula::And(a, b) => ColumnShape::Binary(Connective::And, idx(a), idx(b)),
            Formula::Or(a, b) => ColumnShape::Binary(Connective::Or, idx(a), idx(b)),
            Formula::Imp(a, b) => ColumnShape::Binary(Connective::Imp, idx(a), idx(b)),
        })
        .collect()
}

/// All locally consistent rows over `closure` in `kind`, sorted
/// lexicographically and numbered from 1.
pub fn generate_table(closure: &SubformulaClosure, kind: MatrixKind) -> Result<Table, TableError> {
    generate_table_with_limit(closure, kind, DEFAULT_ROW_LIMIT)
}

pub fn generate_table_with_limit(
    closure: &SubformulaClosure,
    kind: MatrixKind,
    max_rows: usize,
) -> Result<Table, TableError> {
    if kind.signature() == Signature::Ipl && closure.signature() == Signature::S4 {
        return Err(TableError::SignatureMismatch(kind));
    }
    if closure.len() > MAX_COLUMNS {
        return Err(TableError::TooManyColumns(closure.len()));
    }
    let layout = Arc::new(Layout {
        shapes: shapes_of(closure),
        closure: closure.clone(),
    });
    let mut expander = Expander {
        shapes: &layout.shapes,
        kind,
        current: vec![Value(0); closure.len()],
        rows: Vec::new(),
        max_rows,
    };
    expander.expand(0)?;
    let mut values = expander.rows;
    values.sort();
    let rows = values
        .into_iter()
        .enumerate()
        .map(|(i, values)| Row { id: i + 1, values })
        .collect();
    Ok(Table { layout, kind, rows })
}

/// Depth-first expansion: atoms first, then each column in closure order,
/// branching on every value of its cell.
struct Expander<'a> {
    shapes: &'a [ColumnShape],
    kind: MatrixKind,
    current: Vec<Value>,
    rows: Vec<Vec<Value>>,
    max_rows: usize,
}

impl Expander<'_> {
    fn expand(&mut self, col: usize) -> Result<(), TableError> {
        if col == self.shapes.len() {
            if self.rows.len() == self.max_rows {
                return Err(TableError::TooManyRows(self.max_rows));
            }
            self.rows.push(self.current.clone());
            return Ok(());
        }
        for v in allowed(self.kind, self.shapes[col], &self.current).iter() {
            self.current[col] = v;
            self.expand(col + 1)?;
        }
        Ok(())
    }
}

fn allowed(kind: MatrixKind, shape: ColumnShape, values: &[Value]) -> ValueSet {
    let m = kind.nmatrix();
    match shape {
        ColumnShape::Atom => kind.atom_values(),
        ColumnShape::Unary(c, a) => m
            .lookup(c, &[values[a]])
            .expect("built-in tables are total"),
        ColumnShape::Binary(c, a, b) => m
            .lookup(c, &[values[a], values[b]])
            .expect("built-in tables are total"),
    }
}

impl Table {
    pub fn closure(&self) -> &SubformulaClosure {
        &self.layout.closure
    }

    pub fn columns(&self) -> &[Formula] {
        self.layout.closure.formulas()
    }

    pub fn shapes(&self) -> &[ColumnShape] {
        &self.layout.shapes
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ids(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.id).collect()
    }

    pub fn row(&self, id: usize) -> Option<&Row> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn column_of(&self, f: &Formula) -> Option<usize> {
        self.layout.closure.index_of(f)
    }

    pub fn label(&self, v: Value) -> &'static str {
        self.kind.nmatrix().label(v)
    }

    /// Whether `values` is a partial valuation over this table's closure:
    /// atoms within the allowed atom values and every compound column inside
    /// its table cell.
    pub fn is_locally_consistent(&self, values: &[Value]) -> bool {
        values.len() == self.shapes().len()
            && self
                .shapes()
                .iter()
                .enumerate()
                .all(|(i, &s)| allowed(self.kind, s, values).contains(values[i]))
    }

    /// A copy keeping only rows whose id satisfies `keep`; order and ids are
    /// preserved.
    pub fn retain(&self, mut keep: impl FnMut(&Row) -> bool) -> Table {
        Table {
            layout: Arc::clone(&self.layout),
            kind: self.kind,
            rows: self.rows.iter().filter(|r| keep(r)).cloned().collect(),
        }
    }

    /// Rebuilds a table from explicit rows. Rows are taken as given; callers
    /// are responsible for local consistency.
    pub fn from_rows(closure: &SubformulaClosure, kind: MatrixKind, rows: Vec<Row>) -> Table {
        Table {
            layout: Arc::new(Layout {
                shapes: shapes_of(closure),
                closure: closure.clone(),
            }),
            kind,
            rows,
        }
    }
}

/// Closed-form bounds on the number of initial rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: u128,
    pub upper: u128,
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

impl Bounds {
    /// `lb = b^|atoms|` and `ub = κ^(|Λ| − |atoms|) · b^|atoms|`, where `b` is
    /// the number of values an atom may take (2 for the intuitionistic
    /// matrix, 3 otherwise) and `κ` the branching factor. Saturates at
    /// `u128::MAX`.
    pub fn for_closure(closure: &SubformulaClosure, kind: MatrixKind) -> Bounds {
        let atoms = closure.atom_count();
        let base = kind.atom_values().len() as u128;
        let kappa = kind.nmatrix().branching_factor() as u128;
        let lower = saturating_pow(base, atoms);
        let upper = saturating_pow(kappa, closure.len() - atoms).saturating_mul(lower);
        Bounds { lower, upper }
    }
}

pub fn upper_bound(f: &Formula, kind: MatrixKind) -> u128 {
    Bounds::for_closure(&SubformulaClosure::of(f), kind).upper
}

pub fn lower_bound(f: &Formula, kind: MatrixKind) -> u128 {
    Bounds::for_closure(&SubformulaClosure::of(f), kind).lower
}
