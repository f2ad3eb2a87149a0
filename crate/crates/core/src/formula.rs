//! Propositional formulas over the intuitionistic signature `{¬, ∧, ∨, →}`
//! and the modal signature `{¬, □, ∧, ∨, →}`.
//!
//! A [`Formula`] is a plain tree. It carries no signature tag of its own; a
//! formula belongs to the intuitionistic language exactly when it contains no
//! `□` node, which [`Formula::fits`] checks. Parsing under
//! [`Signature::Ipl`] rejects `□` outright.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The two object languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// Intuitionistic propositional logic: `¬, ∧, ∨, →`.
    Ipl,
    /// Modal logic S4: `¬, □, ∧, ∨, →`.
    S4,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::Ipl => f.write_str("IPL"),
            Signature::S4 => f.write_str("S4"),
        }
    }
}

/// Connective tags, shared by both signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connective {
    Neg,
    Box,
    And,
    Or,
    Imp,
}

impl Connective {
    pub const ALL: [Connective; 5] = [
        Connective::Neg,
        Connective::Box,
        Connective::Imp,
        Connective::Or,
        Connective::And,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::Neg | Connective::Box => 1,
            Connective::And | Connective::Or | Connective::Imp => 2,
        }
    }

    pub fn symbol(self, style: Style) -> &'static str {
        match (self, style) {
            (Connective::Neg, Style::Ascii) => "~",
            (Connective::Neg, Style::Unicode) => "¬",
            (Connective::Box, Style::Ascii) => "[]",
            (Connective::Box, Style::Unicode) => "□",
            (Connective::And, Style::Ascii) => "/\\",
            (Connective::And, Style::Unicode) => "∧",
            (Connective::Or, Style::Ascii) => "\\/",
            (Connective::Or, Style::Unicode) => "∨",
            (Connective::Imp, Style::Ascii) => "->",
            (Connective::Imp, Style::Unicode) => "→",
        }
    }

    /// Whether the connective belongs to the given signature.
    pub fn in_signature(self, signature: Signature) -> bool {
        self != Connective::Box || signature == Signature::S4
    }

    /// Binding strength used by the printer; larger binds tighter.
    fn precedence(self) -> u8 {
        match self {
            Connective::Imp => 1,
            Connective::Or => 2,
            Connective::And => 3,
            Connective::Neg | Connective::Box => 4,
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol(Style::Unicode))
    }
}

/// Output notation for the printer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Ascii,
    #[default]
    Unicode,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Neg(Box<Formula>),
    Box(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds an atom. The name is not validated here; use [`is_atom_name`]
    /// when the name comes from outside.
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn boxed(f: Formula) -> Self {
        Formula::Box(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    /// Applies a connective to operands; `args` must match its arity.
    pub fn apply(connective: Connective, mut args: Vec<Formula>) -> Self {
        assert_eq!(
            args.len(),
            connective.arity(),
            "arity mismatch for {connective:?}"
        );
        match connective {
            Connective::Neg => Formula::neg(args.pop().unwrap()),
            Connective::Box => Formula::boxed(args.pop().unwrap()),
            _ => {
                let r = args.pop().unwrap();
                let l = args.pop().unwrap();
                match connective {
                    Connective::And => Formula::and(l, r),
                    Connective::Or => Formula::or(l, r),
                    _ => Formula::imp(l, r),
                }
            }
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// The main connective, or `None` for atoms.
    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) => None,
            Formula::Neg(_) => Some(Connective::Neg),
            Formula::Box(_) => Some(Connective::Box),
            Formula::And(..) => Some(Connective::And),
            Formula::Or(..) => Some(Connective::Or),
            Formula::Imp(..) => Some(Connective::Imp),
        }
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![],
            Formula::Neg(a) | Formula::Box(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => vec![a, b],
        }
    }

    /// `0` for atoms, `+1` per unary node, `l + r + 1` per binary node.
    pub fn complexity(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Neg(a) | Formula::Box(a) => a.complexity() + 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.complexity() + b.complexity() + 1
            }
        }
    }

    pub fn depth(&self) -> usize {
        self.children()
            .into_iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    /// The smallest signature containing the formula.
    pub fn signature(&self) -> Signature {
        if self.contains_box() {
            Signature::S4
        } else {
            Signature::Ipl
        }
    }

    pub fn fits(&self, signature: Signature) -> bool {
        signature == Signature::S4 || !self.contains_box()
    }

    fn contains_box(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Box(_) => true,
            Formula::Neg(a) => a.contains_box(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.contains_box() || b.contains_box()
            }
        }
    }

    /// Pre-order (root, left, right) walk over all subformula occurrences.
    pub fn preorder(&self) -> Preorder<'_> {
        Preorder { stack: vec![self] }
    }

    /// The distinct atoms, in order of first occurrence.
    pub fn atoms(&self) -> Vec<Formula> {
        let mut seen = Vec::new();
        for f in self.preorder() {
            if f.is_atom() && !seen.contains(f) {
                seen.push(f.clone());
            }
        }
        seen
    }

    pub fn print(&self, style: Style) -> String {
        let mut out = String::new();
        write_formula(self, style, 0, &mut out);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print(Style::Unicode))
    }
}

pub struct Preorder<'a> {
    stack: Vec<&'a Formula>,
}

impl<'a> Iterator for Preorder<'a> {
    type Item = &'a Formula;

    fn next(&mut self) -> Option<&'a Formula> {
        let f = self.stack.pop()?;
        self.stack.extend(f.children().into_iter().rev());
        Some(f)
    }
}

fn write_formula(f: &Formula, style: Style, min_prec: u8, out: &mut String) {
    let Some(conn) = f.connective() else {
        if let Formula::Atom(name) = f {
            out.push_str(name);
        }
        return;
    };
    let prec = conn.precedence();
    let parens = prec < min_prec;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Neg(a) | Formula::Box(a) => {
            out.push_str(conn.symbol(style));
            write_formula(a, style, 4, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            // ∧ and ∨ associate to the left. A nested implication is
            // parenthesized on both sides, even though `->` associates right.
            let (left_min, right_min) = match conn {
                Connective::Imp => (2, 2),
                _ => (prec, prec + 1),
            };
            write_formula(a, style, left_min, out);
            out.push(' ');
            out.push_str(conn.symbol(style));
            out.push(' ');
            write_formula(b, style, right_min, out);
        }
        Formula::Atom(_) => unreachable!(),
    }
    if parens {
        out.push(')');
    }
}

/// Atom names are `[a-z][a-zA-Z0-9_]*`.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

// ---------------------------------------------------------------------------
// Parser

/// Nesting limit for the recursive-descent parser.
pub const MAX_NESTING: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty formula")]
    Empty,
    #[error("unexpected character `{ch}` at byte {offset}")]
    UnexpectedChar { offset: usize, ch: char },
    #[error("unexpected token `{token}` at byte {offset}; expected {expected}")]
    UnexpectedToken {
        offset: usize,
        token: String,
        expected: &'static str,
    },
    #[error("unexpected end of input at byte {offset}; expected {expected}")]
    UnexpectedEnd {
        offset: usize,
        expected: &'static str,
    },
    #[error(
        "modal operator `{token}` at byte {offset} is not part of the intuitionistic language"
    )]
    ModalInIpl { offset: usize, token: String },
    #[error("formula nested deeper than {MAX_NESTING} levels at byte {offset}")]
    TooDeep { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Empty => 0,
            ParseError::UnexpectedChar { offset, .. }
            | ParseError::UnexpectedToken { offset, .. }
            | ParseError::UnexpectedEnd { offset, .. }
            | ParseError::ModalInIpl { offset, .. }
            | ParseError::TooDeep { offset } => *offset,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Op(Connective),
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token<'a> {
    tok: Tok<'a>,
    offset: usize,
    text: &'a str,
}

fn lex(text: &str) -> Result<Vec<Token<'_>>, ParseError> {
    const MULTI: [(&str, Connective); 8] = [
        ("->", Connective::Imp),
        ("/\\", Connective::And),
        ("\\/", Connective::Or),
        ("[]", Connective::Box),
        ("→", Connective::Imp),
        ("∧", Connective::And),
        ("∨", Connective::Or),
        ("□", Connective::Box),
    ];
    let mut tokens = Vec::new();
    let mut i = 0;
    'outer: while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        for (sym, conn) in MULTI {
            if rest.starts_with(sym) {
                tokens.push(Token {
                    tok: Tok::Op(conn),
                    offset: i,
                    text: &text[i..i + sym.len()],
                });
                i += sym.len();
                continue 'outer;
            }
        }
        let tok = match c {
            '~' | '¬' => Tok::Op(Connective::Neg),
            '&' => Tok::Op(Connective::And),
            '|' => Tok::Op(Connective::Or),
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'a'..='z' => {
                let end = rest
                    .char_indices()
                    .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
                    .map_or(rest.len(), |(j, _)| j);
                tokens.push(Token {
                    tok: Tok::Ident(&rest[..end]),
                    offset: i,
                    text: &rest[..end],
                });
                i += end;
                continue;
            }
            _ => return Err(ParseError::UnexpectedChar { offset: i, ch: c }),
        };
        tokens.push(Token {
            tok,
            offset: i,
            text: &text[i..i + c.len_utf8()],
        });
        i += c.len_utf8();
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    end: usize,
    signature: Signature,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn peek_op(&self, conn: Connective) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Op(c), .. }) if *c == conn)
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            let offset = self.peek().map_or(self.end, |t| t.offset);
            return Err(ParseError::TooDeep { offset });
        }
        Ok(())
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        self.descend()?;
        let lhs = self.or()?;
        let f = if self.peek_op(Connective::Imp) {
            self.pos += 1;
            Formula::imp(lhs, self.imp()?)
        } else {
            lhs
        };
        self.depth -= 1;
        Ok(f)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let base = self.depth;
        let mut f = self.and()?;
        while self.peek_op(Connective::Or) {
            // Left-nested chains deepen the tree by one per operator.
            self.descend()?;
            self.pos += 1;
            f = Formula::or(f, self.and()?);
        }
        self.depth = base;
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let base = self.depth;
        let mut f = self.unary()?;
        while self.peek_op(Connective::And) {
            self.descend()?;
            self.pos += 1;
            f = Formula::and(f, self.unary()?);
        }
        self.depth = base;
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        const EXPECTED: &str = "an atom, `(`, or a prefix operator";
        let Some(t) = self.peek().cloned() else {
            return Err(ParseError::UnexpectedEnd {
                offset: self.end,
                expected: EXPECTED,
            });
        };
        self.pos += 1;
        match t.tok {
            Tok::Ident(name) => Ok(Formula::atom(name)),
            Tok::Op(conn @ (Connective::Neg | Connective::Box)) => {
                if !conn.in_signature(self.signature) {
                    return Err(ParseError::ModalInIpl {
                        offset: t.offset,
                        token: t.text.to_owned(),
                    });
                }
                self.descend()?;
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(Formula::apply(conn, vec![inner]))
            }
            Tok::LParen => {
                let inner = self.imp()?;
                match self.peek() {
                    Some(Token {
                        tok: Tok::RParen, ..
                    }) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(t) => Err(ParseError::UnexpectedToken {
                        offset: t.offset,
                        token: t.text.to_owned(),
                        expected: "`)` or a binary operator",
                    }),
                    None => Err(ParseError::UnexpectedEnd {
                        offset: self.end,
                        expected: "`)`",
                    }),
                }
            }
            _ => Err(ParseError::UnexpectedToken {
                offset: t.offset,
                token: t.text.to_owned(),
                expected: EXPECTED,
            }),
        }
    }
}

/// Parses `text` under `signature`.
///
/// Precedence from tightest: `~`/`[]`, `/\`, `\/`, `->`. `/\` and `\/` are
/// left-associative, `->` is right-associative. Unicode `¬ □ ∧ ∨ →` and the
/// aliases `&`, `|` are accepted.
pub fn parse(text: &str, signature: Signature) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        signature,
        depth: 0,
    };
    let f = p.imp()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::UnexpectedToken {
            offset: t.offset,
            token: t.text.to_owned(),
            expected: "a binary operator or end of input",
        });
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// Subformula closure

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("a subformula closure needs at least one root formula")]
    NoRoots,
}

/// A finite, non-empty, subformula-closed set of formulas in column order:
/// increasing complexity, ties broken by first occurrence in a pre-order walk
/// over the roots (in the order given).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubformulaClosure {
    formulas: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl SubformulaClosure {
    pub fn new(roots: &[Formula]) -> Result<Self, ClosureError> {
        if roots.is_empty() {
            return Err(ClosureError::NoRoots);
        }
        let mut first_seen: Vec<&Formula> = Vec::new();
        let mut seen: HashMap<&Formula, ()> = HashMap::new();
        for root in roots {
            for f in root.preorder() {
                if seen.insert(f, ()).is_none() {
                    first_seen.push(f);
                }
            }
        }
        let mut keyed: Vec<(usize, &Formula)> = first_seen
            .into_iter()
            .map(|f| (f.complexity(), f))
            .collect();
        // Stable: equal complexities keep first-occurrence order.
        keyed.sort_by_key(|&(c, _)| c);
        let formulas: Vec<Formula> = keyed.into_iter().map(|(_, f)| f.clone()).collect();
        let index = formulas
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Ok(SubformulaClosure { formulas, index })
    }

    pub fn of(root: &Formula) -> Self {
        Self::new(std::slice::from_ref(root)).expect("one root")
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    /// The complexity-0 members.
    pub fn atoms(&self) -> impl Iterator<Item = &Formula> {
        self.formulas.iter().filter(|f| f.is_atom())
    }

    pub fn atom_count(&self) -> usize {
        self.atoms().count()
    }

    pub fn signature(&self) -> Signature {
        if self
            .formulas
            .iter()
            .any(|f| f.connective() == Some(Connective::Box))
        {
            Signature::S4
        } else {
            Signature::Ipl
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }
    fn q() -> Formula {
        Formula::atom("q")
    }

    fn ipl(s: &str) -> Formula {
        parse(s, Signature::Ipl).unwrap()
    }

    #[test]
    fn parses_grammar_cases() {
        assert_eq!(
            ipl("p -> (q -> p)"),
            Formula::imp(p(), Formula::imp(q(), p()))
        );
        assert_eq!(
            ipl("~~(p \\/ ~p)"),
            Formula::neg(Formula::neg(Formula::or(p(), Formula::neg(p()))))
        );
        assert_eq!(
            parse("[]p -> [][]p", Signature::S4).unwrap(),
            Formula::imp(Formula::boxed(p()), Formula::boxed(Formula::boxed(p())))
        );
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(ipl("p -> q -> p"), ipl("p -> (q -> p)"));
    }

    #[test]
    fn conjunction_and_disjunction_associate_left() {
        assert_eq!(ipl("p & q & p"), ipl("(p & q) & p"));
        assert_eq!(ipl("p | q | p"), ipl("(p | q) | p"));
    }

    #[test]
    fn precedence_levels() {
        assert_eq!(ipl("~p & q | p -> q"), ipl("(((~p) & q) | p) -> q"));
        assert_eq!(ipl("p | q & p"), ipl("p | (q & p)"));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(ipl("¬¬(p ∨ ¬p)"), ipl("~~(p \\/ ~p)"));
        assert_eq!(ipl("p ∧ q → p"), ipl("p /\\ q -> p"));
        assert_eq!(
            parse("□p → □□p", Signature::S4).unwrap(),
            parse("[]p -> [][]p", Signature::S4).unwrap()
        );
    }

    #[test]
    fn box_rejected_under_ipl() {
        let err = parse("p -> []p", Signature::Ipl).unwrap_err();
        assert_eq!(
            err,
            ParseError::ModalInIpl {
                offset: 5,
                token: "[]".into()
            }
        );
        assert!(matches!(
            parse("□p", Signature::Ipl),
            Err(ParseError::ModalInIpl { offset: 0, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(parse("", Signature::Ipl), Err(ParseError::Empty));
        assert_eq!(parse("   ", Signature::Ipl), Err(ParseError::Empty));
        assert_eq!(
            parse("p -> ", Signature::Ipl),
            Err(ParseError::UnexpectedEnd {
                offset: 5,
                expected: "an atom, `(`, or a prefix operator"
            })
        );
        assert_eq!(parse("(p", Signature::Ipl).unwrap_err().offset(), 2);
        assert_eq!(parse("p q", Signature::Ipl).unwrap_err().offset(), 2);
        assert_eq!(
            parse("P", Signature::Ipl),
            Err(ParseError::UnexpectedChar { offset: 0, ch: 'P' })
        );
        assert_eq!(parse("p -> )", Signature::Ipl).unwrap_err().offset(), 5);
        // Byte offsets, not char offsets.
        assert_eq!(parse("¬ #", Signature::Ipl).unwrap_err().offset(), 3);
    }

    #[test]
    fn nesting_limit() {
        let deep = "~".repeat(MAX_NESTING + 5) + "p";
        assert!(matches!(
            parse(&deep, Signature::Ipl),
            Err(ParseError::TooDeep { .. })
        ));
        let ok = "~".repeat(MAX_NESTING - 1) + "p";
        assert!(parse(&ok, Signature::Ipl).is_ok());
        let chain = vec!["p"; MAX_NESTING + 5].join(" & ");
        assert!(matches!(
            parse(&chain, Signature::Ipl),
            Err(ParseError::TooDeep { .. })
        ));
    }

    #[test]
    fn complexity_values() {
        assert_eq!(p().complexity(), 0);
        assert_eq!(Formula::neg(p()).complexity(), 1);
        assert_eq!(ipl("~~(p \\/ ~p)").complexity(), 4);
        assert_eq!(ipl("p -> (q -> p)").complexity(), 2);
    }

    #[test]
    fn atoms_are_complexity_zero_subformulas() {
        assert_eq!(ipl("~~(p \\/ ~p)").atoms(), vec![p()]);
        assert_eq!(ipl("p -> (q -> p)").atoms(), vec![p(), q()]);
        assert_eq!(
            ipl("(p & q) | r").atoms(),
            vec![p(), q(), Formula::atom("r")]
        );
    }

    #[test]
    fn closure_of_double_negated_excluded_middle() {
        let c = SubformulaClosure::of(&ipl("~~(p \\/ ~p)"));
        let printed: Vec<String> = c.formulas().iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, ["p", "¬p", "p ∨ ¬p", "¬(p ∨ ¬p)", "¬¬(p ∨ ¬p)"]);
    }

    #[test]
    fn closure_tie_break_is_first_occurrence() {
        let c = SubformulaClosure::of(&ipl("p -> (q -> p)"));
        let printed: Vec<String> = c.formulas().iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, ["p", "q", "q → p", "p → (q → p)"]);
        assert_eq!(SubformulaClosure::of(&p()).formulas(), &[p()]);
    }

    #[test]
    fn closure_over_several_roots() {
        let c = SubformulaClosure::new(&[ipl("q"), ipl("p -> q")]).unwrap();
        let printed: Vec<String> = c.formulas().iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, ["q", "p", "p → q"]);
        assert_eq!(SubformulaClosure::new(&[]), Err(ClosureError::NoRoots));
    }

    #[test]
    fn printer_examples() {
        assert_eq!(ipl("p -> q -> p").print(Style::Ascii), "p -> (q -> p)");
        assert_eq!(ipl("~(p \\/ ~p)").print(Style::Unicode), "¬(p ∨ ¬p)");
        assert_eq!(Formula::boxed(p()).print(Style::Ascii), "[]p");
        assert_eq!(ipl("(p -> q) -> p").print(Style::Ascii), "(p -> q) -> p");
        assert_eq!(ipl("p & q -> p").print(Style::Unicode), "p ∧ q → p");
        assert_eq!(ipl("p & (q & p)").print(Style::Ascii), "p /\\ (q /\\ p)");
        assert_eq!(ipl("~(p & q)").print(Style::Ascii), "~(p /\\ q)");
    }

    #[test]
    fn signature_detection() {
        assert_eq!(ipl("p -> q").signature(), Signature::Ipl);
        let s4 = parse("[]p -> p", Signature::S4).unwrap();
        assert_eq!(s4.signature(), Signature::S4);
        assert!(!s4.fits(Signature::Ipl));
        assert!(s4.fits(Signature::S4));
    }

    #[test]
    fn atom_names() {
        assert!(is_atom_name("p"));
        assert!(is_atom_name("p_1Q"));
        assert!(!is_atom_name("P"));
        assert!(!is_atom_name("1p"));
        assert!(!is_atom_name(""));
    }
}
