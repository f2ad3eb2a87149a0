//! An intuitionistic sequent prover in the contraction-free style (G4ip).
//!
//! Deliberately independent of the table machinery: formulas are converted
//! to a private representation with a falsum constant, and `¬a` is read as
//! `a → ⊥`. Every rule application strictly decreases a well-founded
//! multiset measure, so search terminates without loop checks.

use std::collections::HashMap;
use std::rc::Rc;

use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
enum P {
    Atom(u32),
    Bot,
    And(Rc<P>, Rc<P>),
    Or(Rc<P>, Rc<P>),
    Imp(Rc<P>, Rc<P>),
}

#[derive(Default)]
struct Interner(HashMap<String, u32>);

impl Interner {
    fn convert(&mut self, f: &Formula) -> Rc<P> {
        Rc::new(match f {
            Formula::Atom(name) => {
                let next = self.0.len() as u32;
                P::Atom(*self.0.entry(name.clone()).or_insert(next))
            }
            Formula::Neg(a) => P::Imp(self.convert(a), Rc::new(P::Bot)),
            Formula::And(a, b) => P::And(self.convert(a), self.convert(b)),
            Formula::Or(a, b) => P::Or(self.convert(a), self.convert(b)),
            Formula::Imp(a, b) => P::Imp(self.convert(a), self.convert(b)),
            // Modal formulas are outside the language; treat □a as an
            // opaque atom so the search stays total.
            Formula::Box(_) => {
                let next = self.0.len() as u32;
                P::Atom(*self.0.entry(f.to_string()).or_insert(next))
            }
        })
    }
}

/// Whether `premises ⊢ conclusion` is derivable in intuitionistic logic.
pub fn g4ip_prove(premises: &[Formula], conclusion: &Formula) -> bool {
    let mut interner = Interner::default();
    let ctx = premises.iter().map(|f| interner.convert(f)).collect();
    let goal = interner.convert(conclusion);
    prove(ctx, goal)
}

/// Whether `f` is an intuitionistic theorem.
pub fn g4ip_theorem(f: &Formula) -> bool {
    g4ip_prove(&[], f)
}

fn has_atom(ctx: &[Rc<P>], a: u32) -> bool {
    ctx.iter().any(|g| matches!(**g, P::Atom(b) if b == a))
}

fn prove(mut ctx: Vec<Rc<P>>, goal: Rc<P>) -> bool {
    // Invertible left rules, applied eagerly.
    loop {
        if ctx.iter().any(|g| **g == P::Bot) {
            return true;
        }
        let Some(i) = ctx.iter().position(|g| match &**g {
            P::And(..) | P::Or(..) => true,
            P::Imp(a, _) => match &**a {
                P::Atom(x) => has_atom(&ctx, *x),
                P::Bot | P::And(..) | P::Or(..) => true,
                P::Imp(..) => false,
            },
            _ => false,
        }) else {
            break;
        };
        let g = ctx.swap_remove(i);
        match &*g {
            P::And(a, b) => {
                ctx.push(a.clone());
                ctx.push(b.clone());
            }
            P::Or(a, b) => {
                let mut right = ctx.clone();
                right.push(b.clone());
                ctx.push(a.clone());
                return prove(ctx, goal.clone()) && prove(right, goal);
            }
            P::Imp(a, b) => match &**a {
                P::Atom(_) => ctx.push(b.clone()),
                P::Bot => {}
                P::And(c, d) => ctx.push(Rc::new(P::Imp(
                    c.clone(),
                    Rc::new(P::Imp(d.clone(), b.clone())),
                ))),
                P::Or(c, d) => {
                    ctx.push(Rc::new(P::Imp(c.clone(), b.clone())));
                    ctx.push(Rc::new(P::Imp(d.clone(), b.clone())));
                }
                P::Imp(..) => unreachable!(),
            },
            _ => unreachable!(),
        }
    }

    // Invertible right rules.
    match &*goal {
        P::Atom(x) if has_atom(&ctx, *x) => return true,
        P::And(a, b) => return prove(ctx.clone(), a.clone()) && prove(ctx, b.clone()),
        P::Imp(a, b) => {
            ctx.push(a.clone());
            return prove(ctx, b.clone());
        }
        _ => {}
    }

    // Non-invertible choices, with backtracking.
    if let P::Or(a, b) = &*goal {
        if prove(ctx.clone(), a.clone()) || prove(ctx.clone(), b.clone()) {
            return true;
        }
    }
    for i in 0..ctx.len() {
        if let P::Imp(ab, e) = &*ctx[i] {
            if let P::Imp(c, d) = &**ab {
                let mut rest = ctx.clone();
                rest.swap_remove(i);
                let mut first = rest.clone();
                first.push(Rc::new(P::Imp(d.clone(), e.clone())));
                let left_goal = Rc::new(P::Imp(c.clone(), d.clone()));
                if prove(first, left_goal) {
                    let mut second = rest;
                    second.push(e.clone());
                    if prove(second, goal.clone()) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
