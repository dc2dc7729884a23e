//! Registry of the stock derived combinators, each carried with the applied
//! form it must reduce to and verified by reduction rather than trusted.

use crate::abstraction::{abstract_many, apply_curried, AbstractionAlgorithm};
use crate::profile::zoo_terms;
use crate::reduce::{fresh_var, normalize, ReductionTrace, Strategy};
use crate::term::Term;

/// A named combinator plus its defining behaviour: applying `definition` to
/// fresh variables `v1 .. v{arity}` must normalize to `spec` exactly.
#[derive(Debug, Clone)]
pub struct ZooEntry {
    pub name: &'static str,
    pub definition: Term,
    pub arity: usize,
    /// Expected normal form over the same fresh variables.
    pub spec: Term,
    /// True when the definition was produced by the abstraction algorithm
    /// rather than transcribed.
    pub derived: bool,
}

/// Outcome of checking an entry (or a transform) by reduction.
#[derive(Debug, Clone)]
pub enum Verdict {
    Pass,
    Fail(Box<ReductionTrace>),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// The built-in registry:
///
/// * `I  = S K K` and `I' = (S K)(K K)`, both identities;
/// * `Z  = S (K S) K`, composition (`Z f g x => f (g x)`), with `B` as its
///   modern alias;
/// * `T  = S (Z Z S) (K K)` with `Z` spelled out, argument flip
///   (`T f y x => f x y`), with `C` as its modern alias;
/// * `W`, duplication (`W f x => f x x`), derived by abstraction.
pub fn builtin_zoo() -> Vec<ZooEntry> {
    let v = fresh_var;
    let w_def = abstract_many(
        &["f", "x"],
        &Term::app(Term::app(Term::var("f"), Term::var("x")), Term::var("x")),
        AbstractionAlgorithm::Optimized,
    )
    .expect("distinct variable list");
    vec![
        ZooEntry {
            name: "I",
            definition: zoo_terms::identity(),
            arity: 1,
            spec: v(1),
            derived: false,
        },
        ZooEntry {
            name: "I'",
            definition: zoo_terms::identity_alt(),
            arity: 1,
            spec: v(1),
            derived: false,
        },
        ZooEntry {
            name: "Z",
            definition: zoo_terms::compose(),
            arity: 3,
            spec: Term::app(v(1), Term::app(v(2), v(3))),
            derived: false,
        },
        ZooEntry {
            name: "T",
            definition: zoo_terms::flip(),
            arity: 3,
            spec: Term::app(Term::app(v(1), v(3)), v(2)),
            derived: false,
        },
        ZooEntry {
            name: "B",
            definition: zoo_terms::compose(),
            arity: 3,
            spec: Term::app(v(1), Term::app(v(2), v(3))),
            derived: false,
        },
        ZooEntry {
            name: "C",
            definition: zoo_terms::flip(),
            arity: 3,
            spec: Term::app(Term::app(v(1), v(3)), v(2)),
            derived: false,
        },
        ZooEntry {
            name: "W",
            definition: w_def,
            arity: 2,
            spec: Term::app(Term::app(v(1), v(2)), v(2)),
            derived: true,
        },
    ]
}

/// Applies the definition to fresh variables and compares the normal form
/// with the entry's spec, structurally.
pub fn verify_entry(entry: &ZooEntry, max_steps: usize) -> Verdict {
    let args: Vec<Term> = (1..=entry.arity).map(fresh_var).collect();
    let applied = apply_curried(&entry.definition, &args);
    let trace = normalize(&applied, Strategy::NormalOrder, max_steps, true);
    match trace.normal_form() {
        Some(nf) if *nf == entry.spec => Verdict::Pass,
        _ => Verdict::Fail(Box::new(trace)),
    }
}

/// `S K phi` is an identity for every closed `phi`: the argument `phi` is
/// discarded by the K rule before it is ever reduced.
pub fn identity_for_any(phi: &Term) -> Term {
    Term::app(Term::app(Term::S, Term::K), phi.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abstraction::abstract_many;
    use crate::profile::NamingProfile;
    use crate::reduce::{ext_equal, omega, ExtEqual, Outcome};
    use crate::term::Term::{K, S};

    #[test]
    fn every_builtin_passes_within_100_steps() {
        for entry in builtin_zoo() {
            assert!(
                verify_entry(&entry, 100).passed(),
                "{} failed verification",
                entry.name
            );
        }
    }

    #[test]
    fn wrong_definition_fails() {
        let bogus = ZooEntry {
            name: "bogus",
            definition: K,
            arity: 1,
            spec: fresh_var(1),
            derived: false,
        };
        assert!(!verify_entry(&bogus, 100).passed());
    }

    #[test]
    fn identity_forms_are_ext_equal() {
        let zoo = builtin_zoo();
        let i = &zoo.iter().find(|e| e.name == "I").unwrap().definition;
        let i_alt = &zoo.iter().find(|e| e.name == "I'").unwrap().definition;
        assert_eq!(ext_equal(i, i_alt, 1, 1_000), ExtEqual::Equal);
    }

    #[test]
    fn compose_matches_abstraction() {
        let body = Term::app(
            Term::var("f"),
            Term::app(Term::var("g"), Term::var("x")),
        );
        let from_abstraction =
            abstract_many(&["f", "g", "x"], &body, AbstractionAlgorithm::Naive).unwrap();
        assert_eq!(
            ext_equal(&zoo_terms::compose(), &from_abstraction, 3, 5_000),
            ExtEqual::Equal
        );
    }

    #[test]
    fn flip_matches_abstraction() {
        let body = Term::app(
            Term::app(Term::var("f"), Term::var("x")),
            Term::var("y"),
        );
        let from_abstraction =
            abstract_many(&["f", "y", "x"], &body, AbstractionAlgorithm::Naive).unwrap();
        assert_eq!(
            ext_equal(&zoo_terms::flip(), &from_abstraction, 3, 5_000),
            ExtEqual::Equal
        );
    }

    #[test]
    fn identity_for_any_closed_phi() {
        let x = Term::var("x");
        for phi in [K, S, Term::app(S, K), zoo_terms::compose(), zoo_terms::flip()] {
            let t = Term::app(identity_for_any(&phi), x.clone());
            let trace = normalize(&t, Strategy::NormalOrder, 100, false);
            assert_eq!(trace.normal_form(), Some(&x), "failed for phi = {phi}");
        }
    }

    #[test]
    fn identity_for_any_divergent_phi() {
        // With a divergent phi the identity still works under normal order,
        // while applicative order burns the step budget inside phi.
        let phi = Term::app(omega(), omega());
        let t = Term::app(identity_for_any(&phi), Term::var("x"));
        let normal = normalize(&t, Strategy::NormalOrder, 100, false);
        assert_eq!(normal.normal_form(), Some(&Term::var("x")));
        let applicative = normalize(&t, Strategy::ApplicativeOrder, 1_000, false);
        assert_eq!(applicative.outcome, Outcome::StepLimit);
    }

    #[test]
    fn profile_spellings_of_the_paper_forms() {
        // The composition shape reads S(CS)C in the schoenfinkel profile and
        // S(KS)K in the modern one.
        let schoen = NamingProfile::schoenfinkel();
        let modern = NamingProfile::modern();
        let z = schoen.parse_without_defs("S(CS)C").unwrap();
        assert_eq!(z, modern.parse_without_defs("S(KS)K").unwrap());
        assert_eq!(z, zoo_terms::compose());
    }
}
