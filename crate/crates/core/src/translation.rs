//! The Gödel–McKinsey–Tarski box translation into S4, its semi-translation
//! (the box translation with the outermost `□` removed), and the derivation
//! of the intuitionistic tables from the S4 ones through the pair encoding
//! `F = ⟨0;0⟩`, `U = ⟨1;0⟩`, `T = ⟨2;2⟩`.

use thiserror::Error;

use crate::formula::{Connective, Formula, Signature};
use crate::nmatrix::{IplValue, MatrixKind, Value, ValueSet};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("`{0}` contains □ and is not an intuitionistic formula")]
    NotIntuitionistic(String),
    #[error("{0} is not an intuitionistic connective")]
    NotIntuitionisticConnective(Connective),
}

/// An intuitionistic formula together with its two modal images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationResult {
    pub source: Formula,
    /// The box translation; always equal to `□semi`.
    pub boxed: Formula,
    pub semi: Formula,
}

impl TranslationResult {
    pub fn new(source: &Formula) -> Result<Self, TranslationError> {
        Ok(TranslationResult {
            source: source.clone(),
            boxed: box_translate(source)?,
            semi: semi_translate(source)?,
        })
    }
}

fn require_ipl(f: &Formula) -> Result<(), TranslationError> {
    if f.fits(Signature::Ipl) {
        Ok(())
    } else {
        Err(TranslationError::NotIntuitionistic(f.to_string()))
    }
}

/// `p ↦ □p`, `¬a ↦ □¬a*`, `a # b ↦ □(a* # b*)`.
pub fn box_translate(f: &Formula) -> Result<Formula, TranslationError> {
    require_ipl(f)?;
    Ok(boxed(f))
}

/// `p ↦ p`, `¬a ↦ ¬a*`, `a # b ↦ a* # b*`, where `*` is the box translation.
pub fn semi_translate(f: &Formula) -> Result<Formula, TranslationError> {
    require_ipl(f)?;
    Ok(semi(f))
}

fn boxed(f: &Formula) -> Formula {
    Formula::boxed(semi(f))
}

fn semi(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Neg(a) => Formula::neg(boxed(a)),
        Formula::And(a, b) => Formula::and(boxed(a), boxed(b)),
        Formula::Or(a, b) => Formula::or(boxed(a), boxed(b)),
        Formula::Imp(a, b) => Formula::imp(boxed(a), boxed(b)),
        Formula::Box(_) => unreachable!("checked by require_ipl"),
    }
}

/// The S4 pair behind an intuitionistic value.
fn encode(v: IplValue) -> (Value, Value) {
    match v {
        IplValue::F => (Value(0), Value(0)),
        IplValue::U => (Value(1), Value(0)),
        IplValue::T => (Value(2), Value(2)),
    }
}

/// `c ↦ ⟨c; □c⟩`, read back as an intuitionistic value.
fn decode(c: Value) -> IplValue {
    let boxed = MatrixKind::S4
        .nmatrix()
        .lookup(Connective::Box, &[c])
        .expect("□ is total on S4 values");
    let pair = (c, boxed.iter().next().expect("□ is deterministic"));
    IplValue::ALL
        .into_iter()
        .find(|&v| encode(v) == pair)
        .expect("every ⟨c; □c⟩ is an intuitionistic value")
}

/// A table over intuitionistic values, row-major like [`crate::nmatrix::Operation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTable {
    pub connective: Connective,
    pub cells: Vec<ValueSet>,
}

/// Rebuilds the intuitionistic table for `connective` from the S4 tables.
///
/// Negation reads `¬` from Grätz's matrix; the binary connectives read the
/// reduced matrix. Only the second pair component of each argument is
/// consulted.
pub fn derive_ipl_multiop(connective: Connective) -> Result<DerivedTable, TranslationError> {
    let source = match connective {
        Connective::Neg => MatrixKind::S4,
        Connective::Imp | Connective::Or | Connective::And => MatrixKind::S4Reduced,
        Connective::Box => return Err(TranslationError::NotIntuitionisticConnective(connective)),
    };
    let s4 = source.nmatrix();
    let out = |args: &[Value]| {
        let set = s4.lookup(connective, args).expect("S4 tables are total");
        ValueSet::of(&set.iter().map(|c| decode(c).value()).collect::<Vec<_>>())
    };
    let cells = if connective.arity() == 1 {
        IplValue::ALL.iter().map(|&z| out(&[encode(z).1])).collect()
    } else {
        IplValue::ALL
            .iter()
            .flat_map(|&z| IplValue::ALL.iter().map(move |&w| (z, w)))
            .map(|(z, w)| out(&[encode(z).1, encode(w).1]))
            .collect()
    };
    Ok(DerivedTable { connective, cells })
}

impl DerivedTable {
    pub fn cell(&self, args: &[IplValue]) -> ValueSet {
        let idx = args.iter().fold(0, |acc, v| acc * 3 + *v as usize);
        self.cells[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn ipl(s: &str) -> Formula {
        parse(s, Signature::Ipl).unwrap()
    }
    fn s4(s: &str) -> Formula {
        parse(s, Signature::S4).unwrap()
    }

    #[test]
    fn box_translation_examples() {
        assert_eq!(box_translate(&ipl("p")).unwrap(), s4("[]p"));
        assert_eq!(box_translate(&ipl("~p")).unwrap(), s4("[]~[]p"));
        assert_eq!(box_translate(&ipl("p -> q")).unwrap(), s4("[]([]p -> []q)"));
    }

    #[test]
    fn semi_translation_examples() {
        assert_eq!(semi_translate(&ipl("p")).unwrap(), s4("p"));
        assert_eq!(semi_translate(&ipl("~p")).unwrap(), s4("~[]p"));
        assert_eq!(semi_translate(&ipl("p | q")).unwrap(), s4("[]p | []q"));
    }

    #[test]
    fn modal_input_is_rejected() {
        assert!(matches!(
            box_translate(&s4("[]p")),
            Err(TranslationError::NotIntuitionistic(_))
        ));
        assert!(semi_translate(&s4("p -> []p")).is_err());
        assert!(derive_ipl_multiop(Connective::Box).is_err());
    }

    #[test]
    fn result_bundles_both_images() {
        let r = TranslationResult::new(&ipl("~~(p | ~p)")).unwrap();
        assert_eq!(r.boxed, Formula::boxed(r.semi.clone()));
    }

    #[test]
    fn derived_cells_from_spec_examples() {
        use IplValue::*;
        let neg = derive_ipl_multiop(Connective::Neg).unwrap();
        assert_eq!(neg.cell(&[T]), ValueSet::singleton(F.value()));
        let imp = derive_ipl_multiop(Connective::Imp).unwrap();
        assert_eq!(imp.cell(&[T, U]), ValueSet::singleton(F.value()));
        let and = derive_ipl_multiop(Connective::And).unwrap();
        assert_eq!(and.cell(&[U, T]), ValueSet::singleton(F.value()));
    }

    #[test]
    fn pair_encoding_round_trips() {
        for v in IplValue::ALL {
            assert_eq!(decode(encode(v).0), v);
        }
    }
}
