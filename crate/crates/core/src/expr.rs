//! Text expressions for groupoid elements: whitespace-separated generator tokens,
//! composed as functions (the rightmost token acts first).
//!
//! Tokens: `xN`, `sN`, `bN`, `cN`, `dN` (1-based component `N`), `p(i j …)` for a
//! permutation given by its 1-based image list, `gN(word)` for a Grigorchuk word on
//! component `N`, and `inv(…)` for the inverse of a sub-expression. Arities are
//! inferred: the domain is the smallest `C(m)` on which every token is defined.

use crate::cantor::Permutation;
use crate::error::{Error, Result};
use crate::grigorchuk::{GrigWord, KleinLabel};
use crate::groupoid::GroupoidElement;
use crate::limits::Limits;

const MAX_DOMAIN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Split(usize),
    Sigma(usize),
    Klein(usize, KleinLabel),
    Word(usize, GrigWord),
    Perm(Vec<usize>),
    Inv(Vec<Term>),
}

/// A parsed expression: terms in written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let terms = p.sequence()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(Expr { terms })
    }

    /// Smallest domain arity on which the expression is defined, and its range arity.
    pub fn arity(&self) -> Result<(usize, usize)> {
        (1..=MAX_DOMAIN)
            .find_map(|m| seq_out(&self.terms, m).map(|out| (m, out)))
            .ok_or_else(|| Error::Parse("no domain arity makes every token defined".into()))
    }

    pub fn to_element(&self) -> Result<GroupoidElement> {
        self.to_element_with(&Limits::default())
    }

    pub fn to_element_with(&self, limits: &Limits) -> Result<GroupoidElement> {
        let (m, _) = self.arity()?;
        build_seq(&self.terms, m, limits)
    }

    /// Builds the expression starting from a given domain arity.
    pub fn to_element_from(&self, m: usize, limits: &Limits) -> Result<GroupoidElement> {
        if seq_out(&self.terms, m).is_none() {
            return Err(Error::ArityMismatch {
                expected: self.arity()?.0,
                found: m,
            });
        }
        build_seq(&self.terms, m, limits)
    }
}

/// Parses and builds in one step.
pub fn parse_element(s: &str) -> Result<GroupoidElement> {
    Expr::parse(s)?.to_element()
}

fn seq_out(terms: &[Term], m: usize) -> Option<usize> {
    terms.iter().rev().try_fold(m, |cur, t| term_out(t, cur))
}

fn term_out(t: &Term, m: usize) -> Option<usize> {
    match t {
        Term::Split(i) => (*i < m).then_some(m + 1),
        Term::Sigma(i) | Term::Klein(i, _) | Term::Word(i, _) => (*i < m).then_some(m),
        Term::Perm(images) => (images.len() == m).then_some(m),
        Term::Inv(inner) => inv_domain(inner, m),
    }
}

/// Domain of `inner` when its range must be `m`: the inverse then maps `C(m)` there.
fn inv_domain(inner: &[Term], m: usize) -> Option<usize> {
    (1..=m + MAX_DOMAIN).find(|&d| seq_out(inner, d) == Some(m))
}

fn build_seq(terms: &[Term], m: usize, limits: &Limits) -> Result<GroupoidElement> {
    let mut acc = GroupoidElement::identity(m);
    let mut cur = m;
    for t in terms.iter().rev() {
        let elem = build_term(t, cur, limits)?;
        cur = elem.range_roots();
        acc = elem.multiply_with(&acc, limits)?;
    }
    Ok(acc)
}

fn build_term(t: &Term, m: usize, limits: &Limits) -> Result<GroupoidElement> {
    match t {
        Term::Split(i) => GroupoidElement::split(m, *i),
        Term::Sigma(i) => GroupoidElement::sigma(m, *i),
        Term::Klein(i, k) => GroupoidElement::grigorchuk_at_with(m, *i, &k.word(), limits),
        Term::Word(i, w) => GroupoidElement::grigorchuk_at_with(m, *i, w, limits),
        Term::Perm(images) => {
            if images.len() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: images.len(),
                });
            }
            Ok(GroupoidElement::from_permutation(Permutation::from_images(
                images.clone(),
            )?))
        }
        Term::Inv(inner) => {
            let d = inv_domain(inner, m).ok_or(Error::ArityMismatch {
                expected: m,
                found: 0,
            })?;
            Ok(build_seq(inner, d, limits)?.invert())
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn sequence(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(terms),
                _ => terms.push(self.term()?),
            }
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected a number"))
    }

    fn index(&mut self) -> Result<usize> {
        let n = self.number()?;
        n.checked_sub(1)
            .ok_or_else(|| self.error("indices are 1-based"))
    }

    /// A bare letter means component 1.
    fn optional_index(&mut self) -> Result<usize> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.index()
        } else {
            Ok(0)
        }
    }

    fn term(&mut self) -> Result<Term> {
        let name = self.ident();
        match name.as_str() {
            "x" => Ok(Term::Split(self.optional_index()?)),
            "s" | "a" => Ok(Term::Sigma(self.optional_index()?)),
            "b" => Ok(Term::Klein(self.optional_index()?, KleinLabel::B)),
            "c" => Ok(Term::Klein(self.optional_index()?, KleinLabel::C)),
            "d" => Ok(Term::Klein(self.optional_index()?, KleinLabel::D)),
            "p" => {
                self.expect('(')?;
                let mut images = Vec::new();
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(',') => self.pos += 1,
                        _ => images.push(self.index()?),
                    }
                }
                Permutation::from_images(images.clone())?;
                Ok(Term::Perm(images))
            }
            "g" => {
                let i = self.index()?;
                self.expect('(')?;
                let start = self.pos;
                while self.peek().is_some_and(|c| c != ')') {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                self.expect(')')?;
                Ok(Term::Word(i, GrigWord::parse(&word)?))
            }
            "inv" => {
                self.expect('(')?;
                let inner = self.sequence()?;
                self.expect(')')?;
                Ok(Term::Inv(inner))
            }
            "" => Err(self.error("expected a generator")),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}
