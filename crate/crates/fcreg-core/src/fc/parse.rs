//! Parser for the FC concrete syntax.
//!
//! ```text
//! formula := 'E' VAR ':' formula | 'A' VAR ':' formula | disj
//! disj    := conj ('|' conj)*
//! conj    := unit ('&' unit)*
//! unit    := '!' unit | '(' formula ')' | atom
//! atom    := term '=' term '.' term | term '=' term
//! term    := VAR | '\'' LETTER '\'' | 'eps'
//! ```
//!
//! `x = y` abbreviates `x = y . eps`. Quantifier bodies extend as far right
//! as possible. `E`, `A` and `eps` are reserved.

use thiserror::Error;

use super::{FcFormula, FcTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FcParseError {
    #[error("position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Letter(char),
    Eps,
    Exists,
    Forall,
    Punct(char), // : | & ! ( ) = .
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, FcParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            ':' | '|' | '&' | '!' | '(' | ')' | '=' | '.' => {
                out.push((i, Token::Punct(c)));
                i += 1;
            }
            '\'' => {
                let letter = *chars.get(i + 1).ok_or(FcParseError::Syntax {
                    pos: i,
                    msg: "unterminated letter constant".into(),
                })?;
                if chars.get(i + 2) != Some(&'\'') {
                    return Err(FcParseError::Syntax {
                        pos: i,
                        msg: "letter constant must be a single quoted character".into(),
                    });
                }
                out.push((i, Token::Letter(letter)));
                i += 3;
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "E" => Token::Exists,
                    "A" => Token::Forall,
                    "eps" => Token::Eps,
                    _ => Token::Ident(word),
                };
                out.push((start, tok));
            }
            other => {
                return Err(FcParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    end: usize,
}

impl Parser {
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

    fn err(&self, msg: impl Into<String>) -> FcParseError {
        FcParseError::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn expect_punct(&mut self, c: char) -> Result<(), FcParseError> {
        if self.peek() == Some(&Token::Punct(c)) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn formula(&mut self) -> Result<FcFormula, FcParseError> {
        match self.peek() {
            Some(Token::Exists) | Some(Token::Forall) => {
                let exists = self.peek() == Some(&Token::Exists);
                self.bump();
                let var = match self.bump() {
                    Some(Token::Ident(v)) => v,
                    _ => {
                        self.idx -= 1;
                        return Err(self.err("expected a variable after the quantifier"));
                    }
                };
                self.expect_punct(':')?;
                let body = self.formula()?;
                Ok(if exists { FcFormula::exists(var, body) } else { FcFormula::forall(var, body) })
            }
            _ => self.disj(),
        }
    }

    fn disj(&mut self) -> Result<FcFormula, FcParseError> {
        let mut f = self.conj()?;
        while self.peek() == Some(&Token::Punct('|')) {
            self.bump();
            f = FcFormula::or(f, self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<FcFormula, FcParseError> {
        let mut f = self.unit()?;
        while self.peek() == Some(&Token::Punct('&')) {
            self.bump();
            f = FcFormula::and(f, self.unit()?);
        }
        Ok(f)
    }

    fn unit(&mut self) -> Result<FcFormula, FcParseError> {
        match self.peek() {
            Some(Token::Punct('!')) => {
                self.bump();
                Ok(FcFormula::not(self.unit()?))
            }
            Some(Token::Punct('(')) => {
                self.bump();
                let f = self.formula()?;
                self.expect_punct(')')?;
                Ok(f)
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<FcFormula, FcParseError> {
        let x = self.term()?;
        self.expect_punct('=')?;
        let y = self.term()?;
        let z = if self.peek() == Some(&Token::Punct('.')) {
            self.bump();
            self.term()?
        } else {
            FcTerm::Epsilon
        };
        Ok(FcFormula::Atom(x, y, z))
    }

    fn term(&mut self) -> Result<FcTerm, FcParseError> {
        match self.bump() {
            Some(Token::Ident(v)) => Ok(FcTerm::Var(v)),
            Some(Token::Letter(c)) => Ok(FcTerm::Letter(c)),
            Some(Token::Eps) => Ok(FcTerm::Epsilon),
            _ => {
                self.idx -= 1;
                Err(self.err("expected a term (variable, 'letter' or eps)"))
            }
        }
    }
}

/// Parses an FC formula. Free variables are allowed; sentence-hood is
/// checked at evaluation time.
pub fn parse_fc(text: &str) -> Result<FcFormula, FcParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, idx: 0, end: text.chars().count() };
    let f = p.formula()?;
    if p.idx < p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}
