//! Exhaustive enumeration of small formulas, used for cross-validation.

use crate::formula::{Connective, Formula, Signature};

/// Every formula over `atoms` with exactly `n` connectives, for each
/// `n ≤ max_connectives`, grouped by connective count.
pub fn formulas_by_size(
    atoms: &[&str],
    max_connectives: usize,
    signature: Signature,
) -> Vec<Vec<Formula>> {
    let unary: Vec<Connective> = Connective::ALL
        .into_iter()
        .filter(|c| c.arity() == 1 && c.in_signature(signature))
        .collect();
    let binary: Vec<Connective> = Connective::ALL
        .into_iter()
        .filter(|c| c.arity() == 2)
        .collect();
    let mut levels: Vec<Vec<Formula>> = vec![atoms.iter().map(|a| Formula::atom(*a)).collect()];
    for n in 1..=max_connectives {
        let mut level = Vec::new();
        for &c in &unary {
            for f in &levels[n - 1] {
                level.push(Formula::apply(c, vec![f.clone()]));
            }
        }
        for &c in &binary {
            for i in 0..n {
                for l in &levels[i] {
                    for r in &levels[n - 1 - i] {
                        level.push(Formula::apply(c, vec![l.clone(), r.clone()]));
                    }
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Every formula over `atoms` with at most `max_connectives` connectives.
pub fn formulas_up_to(
    atoms: &[&str],
    max_connectives: usize,
    signature: Signature,
) -> Vec<Formula> {
    formulas_by_size(atoms, max_connectives, signature)
        .into_iter()
        .flatten()
        .collect()
}

/// Calls `visit` on every formula over `atoms` with at most
/// `max_connectives` connectives, in the order of [`formulas_up_to`], without
/// materializing the largest size class.
pub fn visit_formulas(
    atoms: &[&str],
    max_connectives: usize,
    signature: Signature,
    mut visit: impl FnMut(&Formula),
) {
    let levels = formulas_by_size(atoms, max_connectives.saturating_sub(1), signature);
    levels.iter().flatten().for_each(&mut visit);
    if max_connectives == 0 {
        return;
    }
    let n = max_connectives;
    for c in Connective::ALL {
        if c.arity() == 1 && c.in_signature(signature) {
            for f in &levels[n - 1] {
                visit(&Formula::apply(c, vec![f.clone()]));
            }
        }
    }
    for c in Connective::ALL.into_iter().filter(|c| c.arity() == 2) {
        for i in 0..n {
            for l in &levels[i] {
                for r in &levels[n - 1 - i] {
                    visit(&Formula::apply(c, vec![l.clone(), r.clone()]));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_over_two_atoms() {
        let sizes: Vec<usize> = formulas_by_size(&["p", "q"], 4, Signature::Ipl)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, [2, 14, 182, 2954, 53690]);
        let s4: Vec<usize> = formulas_by_size(&["p"], 2, Signature::S4)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(s4, [1, 5, 40]);
    }

    #[test]
    fn distinct_and_well_sized() {
        let all = formulas_up_to(&["p", "q"], 3, Signature::Ipl);
        let set: HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all
            .iter()
            .all(|f| f.complexity() <= 3 && f.fits(Signature::Ipl)));
    }

    #[test]
    fn visitor_matches_materialized_list() {
        for sig in [Signature::Ipl, Signature::S4] {
            for max in 0..=3 {
                let mut seen = Vec::new();
                visit_formulas(&["p", "q"], max, sig, |f| seen.push(f.clone()));
                assert_eq!(seen, formulas_up_to(&["p", "q"], max, sig));
            }
        }
    }
}
