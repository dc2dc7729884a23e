//! Parser for the term syntax: juxtaposition is left-associative
//! application, parentheses group, lowercase identifiers are variables, and
//! uppercase names resolve to atoms or profile definitions.

use crate::profile::NamingProfile;
use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("unbalanced parenthesis at byte {position}")]
    UnbalancedParens { position: usize },
    #[error("unknown uppercase name `{name}` at byte {position}")]
    UnknownUppercaseName { name: String, position: usize },
    #[error("empty parenthesis group at byte {position}")]
    EmptyGroup { position: usize },
    #[error("invalid character `{ch}` at byte {position}")]
    InvalidCharacter { ch: char, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    /// One uppercase letter plus optional primes, e.g. `S`, `K`, `I'`.
    Upper(String),
    /// `[a-z][A-Za-z0-9_]*`.
    Lower(String),
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, ch)) = chars.next() {
        match ch {
            c if c.is_whitespace() => {}
            '(' => tokens.push((Token::Open, pos)),
            ')' => tokens.push((Token::Close, pos)),
            c if c.is_ascii_uppercase() => {
                let mut name = String::from(c);
                while let Some(&(_, '\'')) = chars.peek() {
                    name.push('\'');
                    chars.next();
                }
                tokens.push((Token::Upper(name), pos));
            }
            c if c.is_ascii_lowercase() => {
                let mut name = String::from(c);
                while let Some(&(_, next)) = chars.peek() {
                    if next.is_ascii_alphanumeric() || next == '_' {
                        name.push(next);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push((Token::Lower(name), pos));
            }
            c => return Err(ParseError::InvalidCharacter { ch: c, position: pos }),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    profile: &'a NamingProfile,
    use_defs: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Token, usize)> {
        self.tokens.get(self.pos)
    }

    /// A maximal run of atoms, folded into left-nested application.
    /// `open_at` is the position of the enclosing `(`, if any.
    fn sequence(&mut self, open_at: Option<usize>) -> Result<Term, ParseError> {
        let mut acc: Option<Term> = None;
        loop {
            match self.peek() {
                None | Some((Token::Close, _)) => break,
                _ => {
                    let atom = self.atom()?;
                    acc = Some(match acc {
                        None => atom,
                        Some(f) => Term::app(f, atom),
                    });
                }
            }
        }
        match acc {
            Some(t) => Ok(t),
            None => match open_at {
                Some(position) => Err(ParseError::EmptyGroup { position }),
                None => Err(ParseError::EmptyInput),
            },
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let (token, pos) = self.tokens[self.pos].clone();
        self.pos += 1;
        match token {
            Token::Open => {
                let inner = self.sequence(Some(pos))?;
                match self.peek() {
                    Some((Token::Close, _)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(ParseError::UnbalancedParens { position: pos }),
                }
            }
            Token::Close => Err(ParseError::UnbalancedParens { position: pos }),
            Token::Upper(name) => {
                if let Some(atom) = self.profile.atom(&name) {
                    return Ok(atom);
                }
                if self.use_defs {
                    if let Some(def) = self.profile.lookup_def(&name) {
                        return Ok(def.clone());
                    }
                }
                Err(ParseError::UnknownUppercaseName { name, position: pos })
            }
            Token::Lower(name) => Ok(Term::var(name)),
        }
    }
}

pub(crate) fn parse_term(
    text: &str,
    profile: &NamingProfile,
    use_defs: bool,
) -> Result<Term, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, profile, use_defs };
    let term = parser.sequence(None)?;
    // A leftover token here can only be a stray `)`.
    if let Some(&(_, position)) = parser.peek() {
        return Err(ParseError::UnbalancedParens { position });
    }
    Ok(term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::app;
    use crate::term::Term::{K, S};

    fn modern(text: &str) -> Result<Term, ParseError> {
        NamingProfile::modern().parse(text)
    }

    #[test]
    fn left_associative_application() {
        assert_eq!(modern("S K K").unwrap(), app![S, K, K]);
    }

    #[test]
    fn parentheses_group() {
        assert_eq!(
            modern("S (K S) K").unwrap(),
            app![S, Term::app(K, S), K]
        );
    }

    #[test]
    fn unbalanced_parens_is_an_error() {
        assert_eq!(
            modern("S (K"),
            Err(ParseError::UnbalancedParens { position: 2 })
        );
        assert_eq!(
            modern("S K) x"),
            Err(ParseError::UnbalancedParens { position: 3 })
        );
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(modern(""), Err(ParseError::EmptyInput));
        assert_eq!(modern("   "), Err(ParseError::EmptyInput));
    }

    #[test]
    fn empty_group_is_an_error() {
        assert_eq!(modern("S ()"), Err(ParseError::EmptyGroup { position: 2 }));
    }

    #[test]
    fn lowercase_names_are_variables() {
        assert_eq!(modern("x").unwrap(), Term::var("x"));
        assert_eq!(
            modern("foo_1 x").unwrap(),
            Term::app(Term::var("foo_1"), Term::var("x"))
        );
    }

    #[test]
    fn reserved_fresh_namespace_is_rejected() {
        assert!(matches!(
            modern("_v1"),
            Err(ParseError::InvalidCharacter { ch: '_', .. })
        ));
    }

    #[test]
    fn unknown_uppercase_names_are_errors_not_vars() {
        assert_eq!(
            modern("S Q"),
            Err(ParseError::UnknownUppercaseName { name: "Q".to_string(), position: 2 })
        );
    }

    #[test]
    fn defined_names_expand_at_parse_time() {
        assert_eq!(modern("I").unwrap(), app![S, K, K]);
        assert_eq!(modern("I'").unwrap(), Term::app(Term::app(S, K), Term::app(K, K)));
        // With definitions disabled the same name is unknown.
        assert!(matches!(
            NamingProfile::modern().parse_without_defs("I"),
            Err(ParseError::UnknownUppercaseName { .. })
        ));
    }

    #[test]
    fn juxtaposed_single_letters_need_no_spaces() {
        assert_eq!(modern("SKK").unwrap(), app![S, K, K]);
        let schoen = NamingProfile::schoenfinkel();
        assert_eq!(
            schoen.parse_without_defs("S(CS)C").unwrap(),
            NamingProfile::modern().parse_without_defs("S(KS)K").unwrap()
        );
    }

    #[test]
    fn profile_atom_spelling_is_enforced() {
        let schoen = NamingProfile::schoenfinkel();
        assert!(matches!(
            schoen.parse_without_defs("K"),
            Err(ParseError::UnknownUppercaseName { .. })
        ));
    }
}
