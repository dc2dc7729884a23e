//! Bracket abstraction: eliminates a variable from a term, producing a
//! variable-free applied form. `abstract_var("x", t, alg)` yields a term
//! `[x]t` with `([x]t) a` reducing like `t[x := a]`, which is how every
//! function becomes expressible in `S` and `K` alone.

use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbstractionAlgorithm {
    /// Three rules: `[x]x = S K K`; `[x]M = K M` when `x` is not free in
    /// `M`; `[x](M N) = S ([x]M) ([x]N)` otherwise.
    Naive,
    /// Adds the eta rule `[x](M x) = M` when `x` is not free in `M`,
    /// checked before the K rule and the S split.
    Optimized,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbstractionError {
    #[error("duplicate variable `{0}` in abstraction list")]
    DuplicateVariable(String),
}

fn identity_term() -> Term {
    Term::app(Term::app(Term::S, Term::K), Term::K)
}

/// Eliminates `x` from `t`. The result never contains `Var(x)`, and when
/// `t`'s only variable was `x` the result is closed.
pub fn abstract_var(x: &str, t: &Term, alg: AbstractionAlgorithm) -> Term {
    if alg == AbstractionAlgorithm::Optimized {
        if let Term::App(fun, arg) = t {
            if matches!(arg.as_ref(), Term::Var(v) if v == x) && !fun.contains_var(x) {
                return fun.as_ref().clone();
            }
        }
    }
    if !t.contains_var(x) {
        return Term::app(Term::K, t.clone());
    }
    match t {
        Term::Var(v) if v == x => identity_term(),
        Term::App(fun, arg) => Term::app(
            Term::app(Term::S, abstract_var(x, fun, alg)),
            abstract_var(x, arg, alg),
        ),
        // Atoms and other variables were handled by the K rule above.
        _ => unreachable!("terms without x are covered by the K rule"),
    }
}

/// Iterated abstraction, innermost variable first: `abstract_many([f, x], t)`
/// is `[f]([x]t)`, so the result expects its arguments in list order.
pub fn abstract_many(
    vars: &[&str],
    t: &Term,
    alg: AbstractionAlgorithm,
) -> Result<Term, AbstractionError> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(AbstractionError::DuplicateVariable(v.to_string()));
        }
    }
    Ok(vars
        .iter()
        .rev()
        .fold(t.clone(), |acc, x| abstract_var(x, &acc, alg)))
}

/// Left-nested application of `f` to `args` in order: the applied form of a
/// multi-argument call under currying.
pub fn apply_curried(f: &Term, args: &[Term]) -> Term {
    f.clone().apply(args.iter().cloned())
}
