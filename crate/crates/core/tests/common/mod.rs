//! Shared helpers for the integration tests: random formulas and oracles
//! that recompute tables and fixpoints the slow, obvious way.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use rnmx::formula::{parse, Connective, Formula, Signature, SubformulaClosure};
use rnmx::nmatrix::{MatrixKind, Value};
use rnmx::tabulation::Table;

pub fn ipl(s: &str) -> Formula {
    parse(s, Signature::Ipl).unwrap()
}

pub fn s4(s: &str) -> Formula {
    parse(s, Signature::S4).unwrap()
}

/// A random formula with exactly `size` connectives.
pub fn random_formula_of_size(
    rng: &mut StdRng,
    size: usize,
    atoms: &[&str],
    sig: Signature,
) -> Formula {
    if size == 0 {
        return Formula::atom(atoms[rng.random_range(0..atoms.len())]);
    }
    let conns: Vec<Connective> = Connective::ALL
        .into_iter()
        .filter(|c| c.in_signature(sig))
        .collect();
    let c = conns[rng.random_range(0..conns.len())];
    if c.arity() == 1 {
        Formula::apply(c, vec![random_formula_of_size(rng, size - 1, atoms, sig)])
    } else {
        let left = rng.random_range(0..size);
        Formula::apply(
            c,
            vec![
                random_formula_of_size(rng, left, atoms, sig),
                random_formula_of_size(rng, size - 1 - left, atoms, sig),
            ],
        )
    }
}

/// A random formula with at most `max` connectives.
pub fn random_formula(rng: &mut StdRng, max: usize, atoms: &[&str], sig: Signature) -> Formula {
    let size = rng.random_range(0..=max);
    random_formula_of_size(rng, size, atoms, sig)
}

/// Every assignment of values to the closure's columns, kept if it respects
/// the atom restriction and every table cell. Sorted lexicographically.
pub fn brute_force_rows(closure: &SubformulaClosure, kind: MatrixKind) -> Vec<Vec<Value>> {
    let m = kind.nmatrix();
    let cols = closure.formulas();
    let n = m.value_count();
    let mut out = Vec::new();
    let total = n.pow(cols.len() as u32);
    for code in 0..total {
        let mut rest = code;
        let mut vals = vec![Value(0); cols.len()];
        for i in (0..cols.len()).rev() {
            vals[i] = Value((rest % n) as u8);
            rest /= n;
        }
        let ok = cols.iter().enumerate().all(|(i, f)| {
            let sub = |g: &Formula| vals[closure.index_of(g).unwrap()];
            match f.children().as_slice() {
                [] => kind.atom_values().contains(vals[i]),
                [a] => m
                    .lookup(f.connective().unwrap(), &[sub(a)])
                    .unwrap()
                    .contains(vals[i]),
                [a, b] => m
                    .lookup(f.connective().unwrap(), &[sub(a), sub(b)])
                    .unwrap()
                    .contains(vals[i]),
                _ => unreachable!(),
            }
        });
        if ok {
            out.push(vals);
        }
    }
    out
}

/// The greatest fixpoint by removing one unsupported row at a time, scanning
/// rows in a random order each round.
pub fn one_at_a_time_fixpoint(table: &Table, rng: &mut StdRng) -> BTreeSet<usize> {
    let mut rows: Vec<(usize, Vec<Value>)> = table
        .rows()
        .iter()
        .map(|r| (r.id, r.values.clone()))
        .collect();
    loop {
        rows.shuffle(rng);
        let victim = rows.iter().position(|(_, v)| {
            v.iter().enumerate().any(|(col, &x)| {
                x == Value(1)
                    && !rows.iter().any(|(_, w)| {
                        w[col] == Value(0)
                            && v.iter()
                                .zip(w)
                                .all(|(&a, &b)| a != Value(2) || b == Value(2))
                    })
            })
        });
        match victim {
            Some(i) => {
                rows.remove(i);
            }
            None => return rows.into_iter().map(|(id, _)| id).collect(),
        }
    }
}

/// One printed table from the appendix: its root formulas, printed columns
/// and rows of value letters.
pub struct GoldenTable {
    pub name: String,
    pub roots: Vec<Formula>,
    pub columns: Vec<Formula>,
    pub rows: Vec<String>,
}

pub fn appendix_tables() -> Vec<GoldenTable> {
    let text = include_str!("../data/appendix_a.txt");
    let mut out: Vec<GoldenTable> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(name) = line.strip_prefix('[') {
            out.push(GoldenTable {
                name: name.trim_end_matches(']').to_owned(),
                roots: Vec::new(),
                columns: Vec::new(),
                rows: Vec::new(),
            });
            continue;
        }
        let t = out.last_mut().expect("section header first");
        if let Some(r) = line.strip_prefix("root:") {
            t.roots.push(ipl(r));
        } else if let Some(c) = line.strip_prefix("columns:") {
            t.columns = c.split(';').map(ipl).collect();
        } else {
            t.rows.push(line.to_owned());
        }
    }
    out
}

/// `table`'s rows re-read in the golden column order, as letter strings.
pub fn rows_in_order(table: &Table, columns: &[Formula]) -> Option<BTreeSet<String>> {
    let idx: Vec<usize> = columns
        .iter()
        .map(|f| table.column_of(f))
        .collect::<Option<_>>()?;
    Some(
        table
            .rows()
            .iter()
            .map(|r| idx.iter().map(|&i| table.label(r.values[i])).collect())
            .collect(),
    )
}
