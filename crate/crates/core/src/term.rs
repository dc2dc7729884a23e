//! The applicative term language: the atoms `S` and `K`, named variables,
//! and strictly binary application.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A term of the calculus. Applications are strictly binary; `f x y` is the
/// left-nested tree `App(App(f, x), y)`. Terms are immutable after
/// construction, so subtrees are shared freely (including across threads).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// The fusion atom: `S f g x` contracts to `(f x)(g x)`.
    S,
    /// The constancy atom: `K a b` contracts to `a`.
    K,
    /// A named variable. Parsed names match `[a-z][A-Za-z0-9_]*`; names
    /// starting with `_` are reserved for machine-generated fresh variables
    /// and are rejected by the parser.
    Var(String),
    /// Application of a function term to an argument term.
    App(Arc<Term>, Arc<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Arc::new(fun), Arc::new(arg))
    }

    /// Left-nested application of `self` to each argument in order.
    pub fn apply(self, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(self, Term::app)
    }

    pub fn is_app(&self) -> bool {
        matches!(self, Term::App(..))
    }

    /// Node count, counting atoms, variables, and application nodes alike.
    /// Iterative so that very deep terms cannot overflow the stack.
    pub fn node_count(&self) -> usize {
        let mut count = 0usize;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            count += 1;
            if let Term::App(f, a) = t {
                stack.push(f);
                stack.push(a);
            }
        }
        count
    }

    /// The set of variable names occurring in the term.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut vars = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(name) => {
                    vars.insert(name.clone());
                }
                Term::App(f, a) => {
                    stack.push(f);
                    stack.push(a);
                }
                _ => {}
            }
        }
        vars
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v == name,
            Term::App(f, a) => f.contains_var(name) || a.contains_var(name),
            _ => false,
        }
    }

    /// A term is closed when it contains no variable node.
    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(f, a) => f.is_closed() && a.is_closed(),
            _ => true,
        }
    }

    /// Replaces every occurrence of `Var(name)` by `replacement`. There are
    /// no binders in the term language, so substitution cannot capture.
    pub fn substitute(&self, name: &str, replacement: &Term) -> Term {
        match self {
            Term::Var(v) if v == name => replacement.clone(),
            Term::App(f, a) => {
                Term::app(f.substitute(name, replacement), a.substitute(name, replacement))
            }
            other => other.clone(),
        }
    }
}

/// Minimal parenthesization: an argument is wrapped iff it is itself an
/// application. Atoms use the modern spelling (`K` for constancy); use
/// [`crate::profile::NamingProfile::print`] to render under a profile.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Term, f: &mut fmt::Formatter<'_>, as_arg: bool) -> fmt::Result {
            match t {
                Term::S => f.write_str("S"),
                Term::K => f.write_str("K"),
                Term::Var(v) => f.write_str(v),
                Term::App(fun, arg) => {
                    if as_arg {
                        f.write_str("(")?;
                    }
                    go(fun, f, false)?;
                    f.write_str(" ")?;
                    go(arg, f, true)?;
                    if as_arg {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, false)
    }
}

/// Shorthand for building application chains in tests and registries:
/// `app![S, K, K]` is `((S K) K)`.
#[macro_export]
macro_rules! app {
    ($head:expr $(, $rest:expr)+ $(,)?) => {{
        let t = $head;
        $(let t = $crate::term::Term::app(t, $rest);)+
        t
    }};
}
