//! Non-deterministic matrices: a finite value set, a designated subset, and
//! one set-valued table per connective.
//!
//! Three matrices are built in: Grätz's three-valued matrix for S4
//! ([`MatrixKind::S4`]), its reduction over the full modal signature
//! ([`MatrixKind::S4Reduced`]), and the intuitionistic matrix
//! ([`MatrixKind::Ipl`]). Their tables are literal data below.

use std::borrow::Cow;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Connective, Signature};

/// A truth value, as an index into its matrix's value list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Value(pub u8);

impl Value {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of values, as a bitmask over value indices (at most 8 values).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ValueSet(u8);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub const fn from_bits(bits: u8) -> Self {
        ValueSet(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn of(values: &[Value]) -> Self {
        ValueSet(values.iter().fold(0, |acc, v| acc | 1 << v.0))
    }

    pub fn singleton(v: Value) -> Self {
        ValueSet(1 << v.0)
    }

    pub fn contains(self, v: Value) -> bool {
        v.0 < 8 && self.0 & (1 << v.0) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Value> {
        (0..8u8).filter(move |i| self.0 & (1 << i) != 0).map(Value)
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

// Bitmask shorthands. Bit i is value index i; the S4 values 0/1/2 and the
// intuitionistic F/U/T both occupy indices 0/1/2.
const V0: ValueSet = ValueSet::from_bits(0b001);
const V1: ValueSet = ValueSet::from_bits(0b010);
const V2: ValueSet = ValueSet::from_bits(0b100);
const V12: ValueSet = ValueSet::from_bits(0b110);

const F: ValueSet = V0;
const T: ValueSet = V2;
const UT: ValueSet = V12;

/// One connective's table, row-major over argument tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    pub connective: Connective,
    pub cells: Cow<'static, [ValueSet]>,
}

impl Operation {
    const fn unary(connective: Connective, cells: &'static [ValueSet; 3]) -> Self {
        Operation {
            connective,
            cells: Cow::Borrowed(cells),
        }
    }

    const fn binary(connective: Connective, cells: &'static [ValueSet; 9]) -> Self {
        Operation {
            connective,
            cells: Cow::Borrowed(cells),
        }
    }
}

// Grätz's matrix for S4 (Table 1). Rows are the left argument.
const S4_NEG: [ValueSet; 3] = [V12, V0, V0];
const S4_BOX: [ValueSet; 3] = [V0, V0, V2];
#[rustfmt::skip]
const S4_IMP: [ValueSet; 9] = [
    V12, V12, V12,
    V0,  V12, V12,
    V0,  V1,  V12,
];
#[rustfmt::skip]
const S4_OR: [ValueSet; 9] = [
    V0,  V12, V12,
    V12, V12, V12,
    V12, V12, V12,
];
#[rustfmt::skip]
const S4_AND: [ValueSet; 9] = [
    V0, V0,  V0,
    V0, V12, V12,
    V0, V12, V12,
];

// The reduced matrix (Table 2); ¬ and □ are shared with Table 1.
#[rustfmt::skip]
const S4R_IMP: [ValueSet; 9] = [
    V12, V12, V2,
    V0,  V12, V2,
    V0,  V1,  V2,
];
#[rustfmt::skip]
const S4R_OR: [ValueSet; 9] = [
    V0,  V12, V2,
    V12, V12, V2,
    V2,  V2,  V2,
];
#[rustfmt::skip]
const S4R_AND: [ValueSet; 9] = [
    V0, V0, V0,
    V0, V1, V1,
    V0, V1, V2,
];

// The intuitionistic matrix (Table 3), over F < U < T.
const IPL_NEG: [ValueSet; 3] = [UT, UT, F];
#[rustfmt::skip]
const IPL_IMP: [ValueSet; 9] = [
    UT, UT, T,
    UT, UT, T,
    F,  F,  T,
];
#[rustfmt::skip]
const IPL_OR: [ValueSet; 9] = [
    F, F, T,
    F, F, T,
    T, T, T,
];
#[rustfmt::skip]
const IPL_AND: [ValueSet; 9] = [
    F, F, F,
    F, F, F,
    F, F, T,
];

const S4_OPS: [Operation; 5] = [
    Operation::unary(Connective::Neg, &S4_NEG),
    Operation::unary(Connective::Box, &S4_BOX),
    Operation::binary(Connective::Imp, &S4_IMP),
    Operation::binary(Connective::Or, &S4_OR),
    Operation::binary(Connective::And, &S4_AND),
];

const S4_REDUCED_OPS: [Operation; 5] = [
    Operation::unary(Connective::Neg, &S4_NEG),
    Operation::unary(Connective::Box, &S4_BOX),
    Operation::binary(Connective::Imp, &S4R_IMP),
    Operation::binary(Connective::Or, &S4R_OR),
    Operation::binary(Connective::And, &S4R_AND),
];

const IPL_OPS: [Operation; 4] = [
    Operation::unary(Connective::Neg, &IPL_NEG),
    Operation::binary(Connective::Imp, &IPL_IMP),
    Operation::binary(Connective::Or, &IPL_OR),
    Operation::binary(Connective::And, &IPL_AND),
];

const S4_LABELS: [&str; 3] = ["0", "1", "2"];
const IPL_LABELS: [&str; 3] = ["F", "U", "T"];

static S4_MATRIX: Nmatrix = Nmatrix {
    name: Cow::Borrowed("M_S4"),
    labels: Cow::Borrowed(&S4_LABELS),
    designated: V12,
    ops: Cow::Borrowed(&S4_OPS),
};

static S4_REDUCED_MATRIX: Nmatrix = Nmatrix {
    name: Cow::Borrowed("M'_S4"),
    labels: Cow::Borrowed(&S4_LABELS),
    designated: V12,
    ops: Cow::Borrowed(&S4_REDUCED_OPS),
};

static IPL_MATRIX: Nmatrix = Nmatrix {
    name: Cow::Borrowed("M_IPL"),
    labels: Cow::Borrowed(&IPL_LABELS),
    designated: T,
    ops: Cow::Borrowed(&IPL_OPS),
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NmatrixError {
    #[error("matrix {matrix} has no table for {connective}")]
    UnknownConnective {
        matrix: String,
        connective: Connective,
    },
    #[error("{connective} takes {expected} argument(s), got {got}")]
    ArityMismatch {
        connective: Connective,
        expected: usize,
        got: usize,
    },
    #[error("value index {0} is out of range")]
    ValueOutOfRange(u8),
    #[error("invalid matrix: {0}")]
    Invalid(String),
}

/// A finite non-deterministic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nmatrix {
    name: Cow<'static, str>,
    labels: Cow<'static, [&'static str]>,
    designated: ValueSet,
    ops: Cow<'static, [Operation]>,
}

impl Nmatrix {
    /// Builds and validates a matrix. Cells are row-major over argument
    /// tuples, so a binary table over `n` values has `n * n` cells.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<&'static str>,
        designated: ValueSet,
        ops: Vec<Operation>,
    ) -> Result<Self, NmatrixError> {
        let n = labels.len();
        if n == 0 || n > 8 {
            return Err(NmatrixError::Invalid(format!(
                "{n} values (1..=8 supported)"
            )));
        }
        let all = ValueSet::from_bits(((1u16 << n) - 1) as u8);
        if designated.is_empty() || designated == all || !designated.is_subset(all) {
            return Err(NmatrixError::Invalid(
                "designated values must be a non-empty proper subset".into(),
            ));
        }
        for (i, op) in ops.iter().enumerate() {
            if ops[..i].iter().any(|o| o.connective == op.connective) {
                return Err(NmatrixError::Invalid(format!(
                    "duplicate table for {}",
                    op.connective
                )));
            }
            let expected = n.pow(op.connective.arity() as u32);
            if op.cells.len() != expected {
                return Err(NmatrixError::Invalid(format!(
                    "table for {} has {} cells, expected {expected}",
                    op.connective,
                    op.cells.len()
                )));
            }
            if let Some(cell) = op.cells.iter().find(|c| c.is_empty() || !c.is_subset(all)) {
                return Err(NmatrixError::Invalid(format!(
                    "table for {} has an invalid cell {cell:?}",
                    op.connective
                )));
            }
        }
        Ok(Nmatrix {
            name: Cow::Owned(name.into()),
            labels: Cow::Owned(labels),
            designated,
            ops: Cow::Owned(ops),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value_count(&self) -> usize {
        self.labels.len()
    }

    pub fn values(&self) -> impl Iterator<Item = Value> {
        (0..self.labels.len() as u8).map(Value)
    }

    pub fn label(&self, v: Value) -> &'static str {
        self.labels[v.index()]
    }

    pub fn value_by_label(&self, label: &str) -> Option<Value> {
        self.labels
            .iter()
            .position(|l| *l == label)
            .map(|i| Value(i as u8))
    }

    pub fn designated(&self) -> ValueSet {
        self.designated
    }

    pub fn is_designated(&self, v: Value) -> bool {
        self.designated.contains(v)
    }

    pub fn connectives(&self) -> impl Iterator<Item = Connective> + '_ {
        self.ops.iter().map(|o| o.connective)
    }

    pub fn operation(&self, connective: Connective) -> Option<&Operation> {
        self.ops.iter().find(|o| o.connective == connective)
    }

    /// The output set of `connective` at `args`.
    pub fn lookup(&self, connective: Connective, args: &[Value]) -> Result<ValueSet, NmatrixError> {
        let op = self
            .operation(connective)
            .ok_or_else(|| NmatrixError::UnknownConnective {
                matrix: self.name.to_string(),
                connective,
            })?;
        if args.len() != connective.arity() {
            return Err(NmatrixError::ArityMismatch {
                connective,
                expected: connective.arity(),
                got: args.len(),
            });
        }
        let n = self.value_count();
        let mut offset = 0;
        for a in args {
            if a.index() >= n {
                return Err(NmatrixError::ValueOutOfRange(a.0));
            }
            offset = offset * n + a.index();
        }
        Ok(op.cells[offset])
    }

    /// Largest output-cell cardinality over all tables.
    pub fn branching_factor(&self) -> usize {
        self.ops
            .iter()
            .flat_map(|o| o.cells.iter())
            .map(|c| c.len())
            .max()
            .unwrap_or(1)
    }

    /// One markdown table per connective, laid out as row-argument by
    /// column-argument for binary connectives.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let set = |c: ValueSet| {
            let inner: Vec<&str> = c.iter().map(|v| self.label(v)).collect();
            format!("{{{}}}", inner.join(", "))
        };
        for (i, op) in self.ops.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let n = self.value_count();
            if op.connective.arity() == 1 {
                let _ = writeln!(out, "|   | {} |", op.connective);
                out.push_str("|---|---|\n");
                for v in self.values() {
                    let _ = writeln!(out, "| {} | {} |", self.label(v), set(op.cells[v.index()]));
                }
            } else {
                let header: Vec<&str> = self.values().map(|v| self.label(v)).collect();
                let _ = writeln!(out, "| {} | {} |", op.connective, header.join(" | "));
                let _ = writeln!(out, "|---|{}", "---|".repeat(n));
                for a in self.values() {
                    let row: Vec<String> = self
                        .values()
                        .map(|b| set(op.cells[a.index() * n + b.index()]))
                        .collect();
                    let _ = writeln!(out, "| {} | {} |", self.label(a), row.join(" | "));
                }
            }
        }
        out
    }
}

/// The built-in matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Grätz's matrix for S4.
    S4,
    /// The reduced S4 matrix with deterministic-leaning `→ ∨ ∧`.
    S4Reduced,
    /// The three-valued intuitionistic matrix.
    Ipl,
}

impl MatrixKind {
    pub fn nmatrix(self) -> &'static Nmatrix {
        match self {
            MatrixKind::S4 => &S4_MATRIX,
            MatrixKind::S4Reduced => &S4_REDUCED_MATRIX,
            MatrixKind::Ipl => &IPL_MATRIX,
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            MatrixKind::S4 | MatrixKind::S4Reduced => Signature::S4,
            MatrixKind::Ipl => Signature::Ipl,
        }
    }

    /// Values an atom may take in a row. Intuitionistic atoms are never `U`.
    pub fn atom_values(self) -> ValueSet {
        match self {
            MatrixKind::S4 | MatrixKind::S4Reduced => V0 | V1 | V2,
            MatrixKind::Ipl => F | T,
        }
    }

    /// The value whose preservation witnesses must respect (`2` / `T`).
    pub fn top(self) -> Value {
        Value(2)
    }

    /// The value that needs a witness (`1` / `U`).
    pub fn undetermined(self) -> Value {
        Value(1)
    }

    /// The value a witness must take (`0` / `F`).
    pub fn bottom(self) -> Value {
        Value(0)
    }
}

impl std::ops::BitOr for ValueSet {
    type Output = ValueSet;

    fn bitor(self, rhs: ValueSet) -> ValueSet {
        ValueSet(self.0 | rhs.0)
    }
}

/// The three S4 values, `0 < 1 < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S4Value {
    Zero,
    One,
    Two,
}

impl S4Value {
    pub const ALL: [S4Value; 3] = [S4Value::Zero, S4Value::One, S4Value::Two];

    pub fn value(self) -> Value {
        Value(self as u8)
    }

    pub fn from_value(v: Value) -> Option<Self> {
        Self::ALL.get(v.index()).copied()
    }

    pub fn is_designated(self) -> bool {
        self != S4Value::Zero
    }
}

/// The three intuitionistic values, `F < U < T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IplValue {
    F,
    U,
    T,
}

impl IplValue {
    pub const ALL: [IplValue; 3] = [IplValue::F, IplValue::U, IplValue::T];

    pub fn value(self) -> Value {
        Value(self as u8)
    }

    pub fn from_value(v: Value) -> Option<Self> {
        Self::ALL.get(v.index()).copied()
    }

    pub fn is_designated(self) -> bool {
        self == IplValue::T
    }
}
