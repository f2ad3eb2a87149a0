//! Validity and entailment verdicts read off refined tables.

use serde_json::{json, Map, Value as Json};
use thiserror::Error;

use crate::formula::{ClosureError, Formula, Signature, Style, SubformulaClosure};
use crate::nmatrix::{MatrixKind, Value};
use crate::oracle::g4ip_prove;
use crate::refinement::refine;
use crate::tabulation::{generate_table, Bounds, Row, Table, TableError};
use crate::translation::box_translate;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("`{0}` contains □ and cannot be decided intuitionistically")]
    NotIntuitionistic(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// What counts as true for an S4 verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Value 1 or 2.
    #[default]
    Designated,
    /// Value 2 only.
    Necessity,
}

impl Mode {
    fn accepts(self, kind: MatrixKind, v: Value) -> bool {
        match self {
            Mode::Designated => kind.nmatrix().is_designated(v),
            Mode::Necessity => v == kind.top(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub logic: Signature,
    /// The lowest-id fixpoint row with every premise accepted and the
    /// conclusion rejected.
    pub countermodel: Option<Row>,
    pub initial_rows: usize,
    pub final_rows: usize,
    pub cycles: usize,
    pub lb: u128,
    pub ub: u128,
    /// The refined table the verdict was read from.
    pub table: Table,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub mode: Mode,
}

impl Verdict {
    /// The countermodel as `(formula, value label)` pairs in column order.
    pub fn assignment(&self) -> Option<Vec<(&Formula, &'static str)>> {
        self.countermodel.as_ref().map(|row| {
            self.table
                .columns()
                .iter()
                .zip(&row.values)
                .map(|(f, &v)| (f, self.table.label(v)))
                .collect()
        })
    }

    /// Whether `row` accepts every premise and rejects the conclusion,
    /// checked directly against the row's values.
    pub fn refutes(&self, row: &Row) -> bool {
        let kind = self.table.kind();
        let value = |f: &Formula| self.table.column_of(f).map(|c| row.values[c]);
        self.premises
            .iter()
            .all(|p| value(p).is_some_and(|v| self.mode.accepts(kind, v)))
            && value(&self.conclusion).is_some_and(|v| !self.mode.accepts(kind, v))
    }

    pub fn to_json(&self, style: Style) -> Json {
        let countermodel = self.countermodel.as_ref().map(|row| {
            let mut assignment = Map::new();
            for (f, label) in self.assignment().unwrap_or_default() {
                assignment.insert(f.print(style), Json::from(label));
            }
            json!({ "id": row.id, "assignment": assignment })
        });
        json!({
            "valid": self.valid,
            "logic": self.logic.to_string(),
            "countermodel": countermodel,
            "initial_rows": self.initial_rows,
            "final_rows": self.final_rows,
            "cycles": self.cycles,
            // Bounds can exceed the range JSON numbers hold exactly.
            "lb": bound_json(self.lb),
            "ub": bound_json(self.ub),
        })
    }
}

fn bound_json(b: u128) -> Json {
    u64::try_from(b).map_or_else(|_| Json::from(b.to_string()), Json::from)
}

fn closure(premises: &[Formula], conclusion: &Formula) -> SubformulaClosure {
    let mut roots = premises.to_vec();
    roots.push(conclusion.clone());
    match SubformulaClosure::new(&roots) {
        Ok(c) => c,
        Err(ClosureError::NoRoots) => unreachable!("the conclusion is always a root"),
    }
}

fn decide_with(
    premises: &[Formula],
    conclusion: &Formula,
    kind: MatrixKind,
    mode: Mode,
) -> Result<Verdict, DecideError> {
    let closure = closure(premises, conclusion);
    let initial = generate_table(&closure, kind)?;
    let bounds = Bounds::for_closure(&closure, kind);
    let (table, cycles) = refine(&initial);
    let mut verdict = Verdict {
        valid: true,
        logic: kind.signature(),
        countermodel: None,
        initial_rows: initial.len(),
        final_rows: table.len(),
        cycles,
        lb: bounds.lower,
        ub: bounds.upper,
        table,
        premises: premises.to_vec(),
        conclusion: conclusion.clone(),
        mode,
    };
    verdict.countermodel = verdict
        .table
        .rows()
        .iter()
        .find(|r| verdict.refutes(r))
        .cloned();
    verdict.valid = verdict.countermodel.is_none();
    Ok(verdict)
}

/// Intuitionistic consequence: every refined row giving all premises `T`
/// gives the conclusion `T`.
pub fn decide_ipl(premises: &[Formula], conclusion: &Formula) -> Result<Verdict, DecideError> {
    for f in premises.iter().chain([conclusion]) {
        if !f.fits(Signature::Ipl) {
            return Err(DecideError::NotIntuitionistic(f.to_string()));
        }
    }
    decide_with(premises, conclusion, MatrixKind::Ipl, Mode::Designated)
}

/// `β₁ → (β₂ → … → (βₙ → φ))`; just `φ` without premises.
pub fn fold_premises(premises: &[Formula], conclusion: &Formula) -> Formula {
    premises
        .iter()
        .rev()
        .fold(conclusion.clone(), |acc, p| Formula::imp(p.clone(), acc))
}

/// S4 consequence in the reduced matrix. Premises are folded into nested
/// implications and the result is decided as a theorem.
pub fn decide_s4(
    premises: &[Formula],
    conclusion: &Formula,
    mode: Mode,
) -> Result<Verdict, DecideError> {
    decide_with(
        &[],
        &fold_premises(premises, conclusion),
        MatrixKind::S4Reduced,
        mode,
    )
}

/// S4 consequence checked row by row: every refined row designating all
/// premises designates the conclusion.
pub fn decide_s4_direct(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Verdict, DecideError> {
    decide_with(
        premises,
        conclusion,
        MatrixKind::S4Reduced,
        Mode::Designated,
    )
}

/// Decides `Γ ⊢ φ` as the single formula `β₁ → (… → φ)`.
pub fn entail_via_deduction(
    premises: &[Formula],
    conclusion: &Formula,
    logic: Signature,
) -> Result<Verdict, DecideError> {
    let folded = fold_premises(premises, conclusion);
    match logic {
        Signature::Ipl => decide_ipl(&[], &folded),
        Signature::S4 => decide_s4(&[], &folded, Mode::Designated),
    }
}

/// The three independent verdicts on an intuitionistic formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub formula: Formula,
    pub ipl: bool,
    pub s4: bool,
    pub oracle: bool,
    pub agree: bool,
}

impl CrossCheckReport {
    pub fn to_json(&self, style: Style) -> Json {
        json!({
            "formula": self.formula.print(style),
            "ipl": self.ipl,
            "s4": self.s4,
            "oracle": self.oracle,
            "agree": self.agree,
        })
    }
}

pub fn cross_check(f: &Formula) -> Result<CrossCheckReport, DecideError> {
    let boxed = box_translate(f).map_err(|_| DecideError::NotIntuitionistic(f.to_string()))?;
    let ipl = decide_ipl(&[], f)?.valid;
    let s4 = decide_s4(&[], &boxed, Mode::Designated)?.valid;
    let oracle = g4ip_prove(&[], f);
    Ok(CrossCheckReport {
        formula: f.clone(),
        ipl,
        s4,
        oracle,
        agree: ipl == s4 && s4 == oracle,
    })
}
