//! Star-free generalized regular expressions extended with the Kleene star
//! of terminal words.
//!
//! The grammar has no general star: repetition exists only as `"word"*`, so
//! the class restriction is structural, not checked. Concrete syntax:
//!
//! ```text
//! expr  := inter ('|' inter)*
//! inter := diff ('&' diff)*
//! diff  := cat ('\' cat)*
//! cat   := fact+
//! fact  := '!' fact | base
//! base  := '(' expr ')' | LETTER | STRING '*' | STRING | 'EPS' | 'EMPTY' | 'ANY'
//! ```
//!
//! where `STRING` is double-quoted. Unstarred strings denote the
//! concatenation of their letters; `&`, `\` and `ANY` are sugar over
//! complement and union.

use std::fmt;
use thiserror::Error;

use crate::automata::{Alphabet, AutomataError, Dfa, Nfa};
use crate::words;

/// AST of an SF(R) expression. There is deliberately no general star node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SfrExpr {
    Letter(char),
    /// `w*` for a terminal word `w`; the empty word gives `{eps}`.
    WordStar(String),
    Empty,
    Union(Box<SfrExpr>, Box<SfrExpr>),
    Concat(Box<SfrExpr>, Box<SfrExpr>),
    Complement(Box<SfrExpr>),
}

impl SfrExpr {
    pub fn union(a: SfrExpr, b: SfrExpr) -> SfrExpr {
        SfrExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: SfrExpr, b: SfrExpr) -> SfrExpr {
        SfrExpr::Concat(Box::new(a), Box::new(b))
    }

    pub fn complement(e: SfrExpr) -> SfrExpr {
        SfrExpr::Complement(Box::new(e))
    }

    /// `a & b` desugared as `!(!a | !b)`.
    pub fn intersect(a: SfrExpr, b: SfrExpr) -> SfrExpr {
        SfrExpr::complement(SfrExpr::union(SfrExpr::complement(a), SfrExpr::complement(b)))
    }

    /// `a \ b` desugared as `a & !b`.
    pub fn difference(a: SfrExpr, b: SfrExpr) -> SfrExpr {
        SfrExpr::intersect(a, SfrExpr::complement(b))
    }

    /// `ANY`: the full language, as the complement of the empty one.
    pub fn any() -> SfrExpr {
        SfrExpr::complement(SfrExpr::Empty)
    }

    /// `EPS`: the empty-word language `""*`.
    pub fn epsilon() -> SfrExpr {
        SfrExpr::WordStar(String::new())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SfrParseError {
    #[error("position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("position {pos}: letter `{letter}` is not in the alphabet")]
    ForeignLetter { pos: usize, letter: char },
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Letter(char),
    Str(String),
    Keyword(&'static str),
    Punct(char), // ( ) ! & \ | *
}

fn tokenize(text: &str, alphabet: &Alphabet) -> Result<Vec<(usize, Token)>, SfrParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '(' | ')' | '!' | '&' | '\\' | '|' | '*' => {
                out.push((pos, Token::Punct(c)));
                i += 1;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => {
                            return Err(SfrParseError::Syntax {
                                pos,
                                msg: "unterminated string".into(),
                            })
                        }
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some(&c) => {
                            if !alphabet.contains(c) {
                                return Err(SfrParseError::ForeignLetter { pos: i, letter: c });
                            }
                            s.push(c);
                            i += 1;
                        }
                    }
                }
                out.push((pos, Token::Str(s)));
            }
            c if c.is_alphanumeric() => {
                let start = i;
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "EPS" => out.push((start, Token::Keyword("EPS"))),
                    "EMPTY" => out.push((start, Token::Keyword("EMPTY"))),
                    "ANY" => out.push((start, Token::Keyword("ANY"))),
                    _ => {
                        // a run of letters is juxtaposed concatenation
                        for (off, c) in word.chars().enumerate() {
                            if !alphabet.contains(c) {
                                return Err(SfrParseError::ForeignLetter {
                                    pos: start + off,
                                    letter: c,
                                });
                            }
                            out.push((start + off, Token::Letter(c)));
                        }
                    }
                }
            }
            other => {
                return Err(SfrParseError::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> SfrParseError {
        SfrParseError::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn expr(&mut self) -> Result<SfrExpr, SfrParseError> {
        let mut e = self.inter()?;
        while self.peek() == Some(&Token::Punct('|')) {
            self.bump();
            e = SfrExpr::union(e, self.inter()?);
        }
        Ok(e)
    }

    fn inter(&mut self) -> Result<SfrExpr, SfrParseError> {
        let mut e = self.diff()?;
        while self.peek() == Some(&Token::Punct('&')) {
            self.bump();
            e = SfrExpr::intersect(e, self.diff()?);
        }
        Ok(e)
    }

    fn diff(&mut self) -> Result<SfrExpr, SfrParseError> {
        let mut e = self.cat()?;
        while self.peek() == Some(&Token::Punct('\\')) {
            self.bump();
            e = SfrExpr::difference(e, self.cat()?);
        }
        Ok(e)
    }

    fn starts_fact(tok: &Token) -> bool {
        matches!(
            tok,
            Token::Punct('!')
                | Token::Punct('(')
                | Token::Letter(_)
                | Token::Str(_)
                | Token::Keyword(_)
        )
    }

    fn cat(&mut self) -> Result<SfrExpr, SfrParseError> {
        let mut e = self.fact()?;
        while self.peek().is_some_and(Self::starts_fact) {
            let rhs = self.fact()?;
            e = SfrExpr::concat(e, rhs);
        }
        Ok(e)
    }

    fn fact(&mut self) -> Result<SfrExpr, SfrParseError> {
        if self.peek() == Some(&Token::Punct('!')) {
            self.bump();
            return Ok(SfrExpr::complement(self.fact()?));
        }
        self.base()
    }

    fn base(&mut self) -> Result<SfrExpr, SfrParseError> {
        match self.bump() {
            Some(Token::Punct('(')) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Token::Punct(')')) => Ok(e),
                    _ => {
                        self.idx -= 1;
                        Err(self.err("expected `)`"))
                    }
                }
            }
            Some(Token::Letter(c)) => Ok(SfrExpr::Letter(c)),
            Some(Token::Str(s)) => {
                if self.peek() == Some(&Token::Punct('*')) {
                    self.bump();
                    Ok(SfrExpr::WordStar(s))
                } else {
                    // unstarred string: concatenation of its letters
                    let mut letters = s.chars().map(SfrExpr::Letter);
                    match letters.next() {
                        None => Ok(SfrExpr::epsilon()),
                        Some(first) => Ok(letters.fold(first, SfrExpr::concat)),
                    }
                }
            }
            Some(Token::Keyword("EPS")) => Ok(SfrExpr::epsilon()),
            Some(Token::Keyword("EMPTY")) => Ok(SfrExpr::Empty),
            Some(Token::Keyword("ANY")) => Ok(SfrExpr::any()),
            Some(other) => {
                self.idx -= 1;
                Err(self.err(format!("unexpected token {other:?}")))
            }
            None => {
                self.idx -= 1;
                Err(self.err("unexpected end of input"))
            }
        }
    }
}

/// Parses the concrete syntax over the given alphabet.
pub fn parse_sfr(text: &str, alphabet: &Alphabet) -> Result<SfrExpr, SfrParseError> {
    let tokens = tokenize(text, alphabet)?;
    let mut p = Parser { tokens: &tokens, idx: 0, end: text.chars().count() };
    let e = p.expr()?;
    if p.idx < tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl fmt::Display for SfrExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SfrExpr::Letter(c) => write!(f, "{c}"),
            SfrExpr::WordStar(w) => write!(f, "\"{w}\"*"),
            SfrExpr::Empty => write!(f, "EMPTY"),
            SfrExpr::Union(a, b) => write!(f, "({a} | {b})"),
            SfrExpr::Concat(a, b) => write!(f, "({a} {b})"),
            SfrExpr::Complement(e) => write!(f, "!({e})"),
        }
    }
}

/// Compiles an expression to the minimal complete DFA of its language.
pub fn compile_sfr(e: &SfrExpr, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    let d = match e {
        SfrExpr::Letter(c) => {
            alphabet.index_of(*c)?;
            let mut n = Nfa::new(alphabet.clone(), 2);
            n.add_initial(0)?;
            n.add_accepting(1)?;
            n.add_transition(0, Some(*c), 1)?;
            n.determinize()
        }
        SfrExpr::WordStar(w) => words::wstar_dfa(w, alphabet).map_err(|e| match e {
            words::WordError::Automata(a) => a,
            words::WordError::EmptyWord => unreachable!("wstar accepts the empty word"),
        })?,
        SfrExpr::Empty => Dfa::empty_language(alphabet.clone()),
        SfrExpr::Union(a, b) => {
            let (da, db) = (compile_sfr(a, alphabet)?, compile_sfr(b, alphabet)?);
            Nfa::union(&Nfa::from_dfa(&da), &Nfa::from_dfa(&db))?.determinize()
        }
        SfrExpr::Concat(a, b) => {
            let (da, db) = (compile_sfr(a, alphabet)?, compile_sfr(b, alphabet)?);
            Nfa::concat(&Nfa::from_dfa(&da), &Nfa::from_dfa(&db))?.determinize()
        }
        SfrExpr::Complement(inner) => compile_sfr(inner, alphabet)?.complement(),
    };
    Ok(d.minimize())
}

#[cfg(test)]
mod tests;
