//! Naming profiles: how atom and combinator names are spelled on input and
//! output. The `modern` profile writes the constancy atom as `K` and uses
//! `B`/`C` for composition and flip; the `schoenfinkel` profile writes the
//! constancy atom as `C` (there it is the letter for "Konstantheit") and uses
//! `Z`/`T` for the same two derived combinators.

use std::collections::BTreeMap;
use std::fmt;

use crate::parse::{self, ParseError};
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Modern,
    Schoenfinkel,
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::Modern => f.write_str("modern"),
            ProfileKind::Schoenfinkel => f.write_str("schoenfinkel"),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum DefineError {
    /// `S` and the constancy atom cannot be redefined.
    #[error("`{0}` is a reserved atom name")]
    ReservedName(String),
    /// Definable names are a single uppercase letter plus optional primes.
    #[error("`{0}` is not a valid combinator name")]
    InvalidName(String),
    /// Definitions must be closed terms over the atoms only.
    #[error("definition of `{0}` contains variables: {1}")]
    NotClosed(String, String),
}

/// Maps display names to defined terms, and fixes the spelling of the
/// constancy atom. Every definition is a closed term over `{S, K}`; names are
/// expanded at parse time, so the kernel calculus stays pure.
#[derive(Debug, Clone)]
pub struct NamingProfile {
    kind: ProfileKind,
    defs: BTreeMap<String, Term>,
}

impl NamingProfile {
    /// `K` is the constancy atom; `B` is composition, `C` is flip. The paper
    /// names `I`, `I'`, `Z`, `T` are accepted as well.
    pub fn modern() -> Self {
        let mut defs = BTreeMap::new();
        defs.insert("I".to_string(), zoo_terms::identity());
        defs.insert("I'".to_string(), zoo_terms::identity_alt());
        defs.insert("B".to_string(), zoo_terms::compose());
        defs.insert("C".to_string(), zoo_terms::flip());
        defs.insert("Z".to_string(), zoo_terms::compose());
        defs.insert("T".to_string(), zoo_terms::flip());
        NamingProfile { kind: ProfileKind::Modern, defs }
    }

    /// `C` is the constancy atom (`K` is not a recognized name here, which
    /// catches profile mix-ups); `Z` is composition, `T` is flip.
    pub fn schoenfinkel() -> Self {
        let mut defs = BTreeMap::new();
        defs.insert("I".to_string(), zoo_terms::identity());
        defs.insert("I'".to_string(), zoo_terms::identity_alt());
        defs.insert("Z".to_string(), zoo_terms::compose());
        defs.insert("T".to_string(), zoo_terms::flip());
        NamingProfile { kind: ProfileKind::Schoenfinkel, defs }
    }

    pub fn of_kind(kind: ProfileKind) -> Self {
        match kind {
            ProfileKind::Modern => Self::modern(),
            ProfileKind::Schoenfinkel => Self::schoenfinkel(),
        }
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    /// Resolves a name that denotes an atom under this profile.
    pub fn atom(&self, name: &str) -> Option<Term> {
        match (self.kind, name) {
            (_, "S") => Some(Term::S),
            (ProfileKind::Modern, "K") => Some(Term::K),
            (ProfileKind::Schoenfinkel, "C") => Some(Term::K),
            _ => None,
        }
    }

    pub fn lookup_def(&self, name: &str) -> Option<&Term> {
        self.defs.get(name)
    }

    pub fn definitions(&self) -> impl Iterator<Item = (&str, &Term)> {
        self.defs.iter().map(|(name, term)| (name.as_str(), term))
    }

    /// Adds or replaces a definition. Returns the previous definition when
    /// the name was already bound, so callers can warn about redefinition.
    pub fn define(&mut self, name: &str, term: Term) -> Result<Option<Term>, DefineError> {
        if self.atom(name).is_some() {
            return Err(DefineError::ReservedName(name.to_string()));
        }
        if !valid_combinator_name(name) {
            return Err(DefineError::InvalidName(name.to_string()));
        }
        let vars = term.free_vars();
        if !vars.is_empty() {
            let list = vars.into_iter().collect::<Vec<_>>().join(", ");
            return Err(DefineError::NotClosed(name.to_string(), list));
        }
        Ok(self.defs.insert(name.to_string(), term))
    }

    /// Parses with definition expansion: defined names are replaced by their
    /// closed terms at parse time.
    pub fn parse(&self, text: &str) -> Result<Term, ParseError> {
        parse::parse_term(text, self, true)
    }

    /// Parses with definitions disabled; only atom spellings are recognized
    /// among uppercase names.
    pub fn parse_without_defs(&self, text: &str) -> Result<Term, ParseError> {
        parse::parse_term(text, self, false)
    }

    /// Renders a term with minimal parenthesization: an argument is
    /// parenthesized iff it is an application. The constancy atom is spelled
    /// per the profile.
    pub fn print(&self, term: &Term) -> String {
        let mut out = String::new();
        self.print_into(term, false, &mut out);
        out
    }

    fn print_into(&self, term: &Term, as_arg: bool, out: &mut String) {
        match term {
            Term::S => out.push('S'),
            Term::K => out.push_str(match self.kind {
                ProfileKind::Modern => "K",
                ProfileKind::Schoenfinkel => "C",
            }),
            Term::Var(name) => out.push_str(name),
            Term::App(fun, arg) => {
                if as_arg {
                    out.push('(');
                }
                self.print_into(fun, false, out);
                out.push(' ');
                self.print_into(arg, true, out);
                if as_arg {
                    out.push(')');
                }
            }
        }
    }
}

/// Definable combinator names: one uppercase letter plus optional primes.
pub fn valid_combinator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_uppercase()) && chars.all(|c| c == '\'')
}

/// Closed SK forms of the stock derived combinators. These are the shapes the
/// registry in [`crate::zoo`] verifies by reduction.
pub mod zoo_terms {
    use crate::app;
    use crate::term::Term::{K, S};
    use crate::term::Term;

    /// `S K K`: the identity.
    pub fn identity() -> Term {
        app![S, K, K]
    }

    /// `(S K)(K K)`: the alternative identity form.
    pub fn identity_alt() -> Term {
        Term::app(Term::app(S, K), Term::app(K, K))
    }

    /// `S (K S) K`: composition; `compose f g x` contracts to `f (g x)`.
    pub fn compose() -> Term {
        app![S, Term::app(K, S), K]
    }

    /// `S (Z Z S) (K K)` with `Z` the composition term spelled out in full:
    /// `flip f y x` contracts to `f x y`.
    pub fn flip() -> Term {
        let z = compose();
        app![S, app![z.clone(), z, S], Term::app(K, K)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_spellings_differ_by_profile() {
        let modern = NamingProfile::modern();
        let schoen = NamingProfile::schoenfinkel();
        assert_eq!(modern.atom("K"), Some(Term::K));
        assert_eq!(modern.atom("C"), None);
        assert_eq!(schoen.atom("C"), Some(Term::K));
        assert_eq!(schoen.atom("K"), None);
        assert_eq!(schoen.atom("S"), Some(Term::S));
    }

    #[test]
    fn print_uses_profile_spelling() {
        let t = zoo_terms::identity();
        assert_eq!(NamingProfile::modern().print(&t), "S K K");
        assert_eq!(NamingProfile::schoenfinkel().print(&t), "S C C");
    }

    #[test]
    fn define_rejects_open_terms_and_reserved_names() {
        let mut p = NamingProfile::modern();
        assert!(matches!(
            p.define("K", Term::S),
            Err(DefineError::ReservedName(_))
        ));
        assert!(matches!(
            p.define("Q", Term::var("x")),
            Err(DefineError::NotClosed(..))
        ));
        assert!(matches!(
            p.define("Qx", Term::S),
            Err(DefineError::InvalidName(_))
        ));
        assert_eq!(p.define("Q", Term::S), Ok(None));
        assert_eq!(p.define("Q", Term::K), Ok(Some(Term::S)));
    }

    #[test]
    fn definitions_are_closed_sk_terms() {
        for profile in [NamingProfile::modern(), NamingProfile::schoenfinkel()] {
            for (_, term) in profile.definitions() {
                assert!(term.is_closed());
            }
        }
    }
}
