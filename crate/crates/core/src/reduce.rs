//! Reduction under the two rewrite rules, `K a b => a` and
//! `S f g x => (f x)(g x)`, with strategy selection, step traces, bounds,
//! and cycle detection.

use std::collections::HashMap;

use crate::profile::NamingProfile;
use crate::term::Term;

/// Default step budget. Every identity in the golden registry normalizes in
/// under 30 steps; the bound exists only to classify divergence.
pub const DEFAULT_MAX_STEPS: usize = 10_000;
/// Default whole-term node cap guarding against size blow-up.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Contract the leftmost-outermost redex. Finds a normal form whenever
    /// one exists.
    NormalOrder,
    /// Contract the leftmost-innermost redex. May diverge where normal
    /// order succeeds.
    ApplicativeOrder,
}

/// Which rewrite rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    K,
    S,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::K => "K",
            Rule::S => "S",
        }
    }
}

/// One move from the root towards a subterm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStep {
    Fun,
    Arg,
}

pub type RedexPath = Vec<PathStep>;

/// Renders a path as `/fun/arg/...`; the root is `/`.
pub fn path_to_string(path: &[PathStep]) -> String {
    if path.is_empty() {
        return "/".to_string();
    }
    let mut out = String::new();
    for step in path {
        out.push_str(match step {
            PathStep::Fun => "/fun",
            PathStep::Arg => "/arg",
        });
    }
    out
}

/// One recorded contraction: the term it applied to, where, and which rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub term: Term,
    pub redex_path: RedexPath,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NormalForm(Term),
    StepLimit,
    /// The same whole term recurred; the payload is the cycle length.
    CycleDetected(usize),
    SizeExceeded,
}

impl Outcome {
    pub fn kind(&self) -> String {
        match self {
            Outcome::NormalForm(_) => "NormalForm".to_string(),
            Outcome::StepLimit => "StepLimit".to_string(),
            Outcome::CycleDetected(period) => format!("CycleDetected {period}"),
            Outcome::SizeExceeded => "SizeExceeded".to_string(),
        }
    }
}

/// The full record of one reduction run. `steps[i]` holds the i-th term of
/// the sequence together with the contraction applied to it; `final_term` is
/// the term the run stopped at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub final_term: Term,
    pub outcome: Outcome,
}

impl ReductionTrace {
    pub fn normal_form(&self) -> Option<&Term> {
        match &self.outcome {
            Outcome::NormalForm(t) => Some(t),
            _ => None,
        }
    }

    /// Line-oriented serialization: one step per line,
    /// `<step#> <rule> <redex_path> <printed term>`, then `OUTCOME <kind>`.
    pub fn to_lines(&self, profile: &NamingProfile) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{} {} {} {}\n",
                i,
                step.rule.name(),
                path_to_string(&step.redex_path),
                profile.print(&step.term)
            ));
        }
        out.push_str(&format!("OUTCOME {}\n", self.outcome.kind()));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("term exceeded the node cap of {cap}")]
pub struct SizeExceeded {
    pub cap: usize,
}

/// Classifies a fully saturated redex at the root of `t`.
fn redex_rule(t: &Term) -> Option<Rule> {
    if let Term::App(f1, _) = t {
        match f1.as_ref() {
            Term::App(f2, _) if matches!(f2.as_ref(), Term::K) => return Some(Rule::K),
            Term::App(f2, _) => {
                if let Term::App(f3, _) = f2.as_ref() {
                    if matches!(f3.as_ref(), Term::S) {
                        return Some(Rule::S);
                    }
                }
            }
            _ => {}
        }
    }
    None
}

pub fn is_redex(t: &Term) -> bool {
    redex_rule(t).is_some()
}

/// A normal form contains no redex anywhere.
pub fn is_normal_form(t: &Term) -> bool {
    if is_redex(t) {
        return false;
    }
    match t {
        Term::App(f, a) => is_normal_form(f) && is_normal_form(a),
        _ => true,
    }
}

/// The redex the strategy would contract, or `None` when `t` is normal.
/// Normal order picks the first redex in preorder (node before function
/// before argument); applicative order the first in postorder.
pub fn find_redex(t: &Term, strategy: Strategy) -> Option<RedexPath> {
    let mut path = Vec::new();
    let found = match strategy {
        Strategy::NormalOrder => find_outermost(t, &mut path),
        Strategy::ApplicativeOrder => find_innermost(t, &mut path),
    };
    found.then_some(path)
}

fn find_outermost(t: &Term, path: &mut RedexPath) -> bool {
    if is_redex(t) {
        return true;
    }
    if let Term::App(f, a) = t {
        path.push(PathStep::Fun);
        if find_outermost(f, path) {
            return true;
        }
        path.pop();
        path.push(PathStep::Arg);
        if find_outermost(a, path) {
            return true;
        }
        path.pop();
    }
    false
}

fn find_innermost(t: &Term, path: &mut RedexPath) -> bool {
    if let Term::App(f, a) = t {
        path.push(PathStep::Fun);
        if find_innermost(f, path) {
            return true;
        }
        path.pop();
        path.push(PathStep::Arg);
        if find_innermost(a, path) {
            return true;
        }
        path.pop();
        if is_redex(t) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("path leads outside the term")]
    BadPath,
    #[error("no {0:?}-redex at the path")]
    NotARedex(Rule),
}

/// Contracts the redex at `path` with `rule`, rebuilding the spine above it.
/// Used both by [`step`] and by trace replay.
pub fn contract_at(t: &Term, path: &[PathStep], rule: Rule) -> Result<Term, ReplayError> {
    match path.split_first() {
        None => contract_root(t, rule),
        Some((PathStep::Fun, rest)) => match t {
            Term::App(f, a) => Ok(Term::app(contract_at(f, rest, rule)?, a.as_ref().clone())),
            _ => Err(ReplayError::BadPath),
        },
        Some((PathStep::Arg, rest)) => match t {
            Term::App(f, a) => Ok(Term::app(f.as_ref().clone(), contract_at(a, rest, rule)?)),
            _ => Err(ReplayError::BadPath),
        },
    }
}

fn contract_root(t: &Term, rule: Rule) -> Result<Term, ReplayError> {
    match rule {
        Rule::K => {
            // K a b => a
            if let Term::App(f1, _b) = t {
                if let Term::App(f2, a) = f1.as_ref() {
                    if matches!(f2.as_ref(), Term::K) {
                        return Ok(a.as_ref().clone());
                    }
                }
            }
            Err(ReplayError::NotARedex(Rule::K))
        }
        Rule::S => {
            // S f g x => (f x)(g x)
            if let Term::App(f1, x) = t {
                if let Term::App(f2, g) = f1.as_ref() {
                    if let Term::App(f3, f) = f2.as_ref() {
                        if matches!(f3.as_ref(), Term::S) {
                            let fx = Term::App(f.clone(), x.clone());
                            let gx = Term::App(g.clone(), x.clone());
                            return Ok(Term::app(fx, gx));
                        }
                    }
                }
            }
            Err(ReplayError::NotARedex(Rule::S))
        }
    }
}

/// Contracts the strategy's redex once. `Ok(None)` means `t` is already in
/// normal form; `SizeExceeded` is raised when the contractum would pass the
/// node cap.
pub fn step_capped(
    t: &Term,
    strategy: Strategy,
    node_cap: usize,
) -> Result<Option<Term>, SizeExceeded> {
    let Some(path) = find_redex(t, strategy) else {
        return Ok(None);
    };
    let rule = rule_at(t, &path).expect("find_redex returned a redex position");
    let next = contract_at(t, &path, rule).expect("contraction at a redex position");
    if next.node_count() > node_cap {
        return Err(SizeExceeded { cap: node_cap });
    }
    Ok(Some(next))
}

/// [`step_capped`] with the default node cap.
pub fn step(t: &Term, strategy: Strategy) -> Result<Option<Term>, SizeExceeded> {
    step_capped(t, strategy, DEFAULT_NODE_CAP)
}

/// The rule of the redex found at `path`.
pub fn rule_at(t: &Term, path: &[PathStep]) -> Option<Rule> {
    let mut cur = t;
    for p in path {
        match (cur, p) {
            (Term::App(f, _), PathStep::Fun) => cur = f,
            (Term::App(_, a), PathStep::Arg) => cur = a,
            _ => return None,
        }
    }
    redex_rule(cur)
}

/// Iterates [`step`] until normal form, the step limit, the node cap, or
/// (with `detect_cycles`) a structurally identical whole term recurs. The
/// returned trace records every contraction.
pub fn normalize(
    t: &Term,
    strategy: Strategy,
    max_steps: usize,
    detect_cycles: bool,
) -> ReductionTrace {
    normalize_capped(t, strategy, max_steps, detect_cycles, DEFAULT_NODE_CAP)
}

pub fn normalize_capped(
    t: &Term,
    strategy: Strategy,
    max_steps: usize,
    detect_cycles: bool,
    node_cap: usize,
) -> ReductionTrace {
    assert!(max_steps >= 1, "max_steps must be positive");
    let mut steps: Vec<TraceStep> = Vec::new();
    // Maps each term of the reduction sequence to its index in it. The
    // equality check on a hash hit is what confirms a true recurrence.
    let mut seen: HashMap<Term, usize> = HashMap::new();
    if detect_cycles {
        seen.insert(t.clone(), 0);
    }
    let mut cur = t.clone();
    loop {
        let Some(path) = find_redex(&cur, strategy) else {
            return ReductionTrace {
                steps,
                final_term: cur.clone(),
                outcome: Outcome::NormalForm(cur),
            };
        };
        if steps.len() >= max_steps {
            return ReductionTrace { steps, final_term: cur, outcome: Outcome::StepLimit };
        }
        let rule = rule_at(&cur, &path).expect("redex rule at found path");
        let next = contract_at(&cur, &path, rule).expect("contraction at found path");
        if next.node_count() > node_cap {
            return ReductionTrace { steps, final_term: cur, outcome: Outcome::SizeExceeded };
        }
        steps.push(TraceStep { term: cur, redex_path: path, rule });
        if detect_cycles {
            if let Some(&first) = seen.get(&next) {
                let period = steps.len() - first;
                return ReductionTrace {
                    steps,
                    final_term: next,
                    outcome: Outcome::CycleDetected(period),
                };
            }
            seen.insert(next.clone(), steps.len());
        }
        cur = next;
    }
}

/// Verdict of the extensional-equality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtEqual {
    Equal,
    NotEqual,
    /// At least one side hit a bound before reaching a normal form.
    Inconclusive,
}

/// Fresh variables for extensional checks come from a namespace the parser
/// rejects, so user input can never collide with them.
pub fn fresh_var(i: usize) -> Term {
    Term::var(format!("_v{i}"))
}

/// `S (S K K) (S K K)`: applies its argument to itself, so `omega omega`
/// reduces forever. The stock witness for divergence and cycling.
pub fn omega() -> Term {
    let i = Term::app(Term::app(Term::S, Term::K), Term::K);
    Term::app(Term::app(Term::S, i.clone()), i)
}

/// Applies both terms to fresh variables `_v1 .. _v{arity}` and normalizes
/// under normal order. Equal iff both reach the same normal form.
pub fn ext_equal(x: &Term, y: &Term, arity: usize, max_steps: usize) -> ExtEqual {
    let args: Vec<Term> = (1..=arity).map(fresh_var).collect();
    let xa = x.clone().apply(args.iter().cloned());
    let ya = y.clone().apply(args);
    let tx = normalize(&xa, Strategy::NormalOrder, max_steps, true);
    let ty = normalize(&ya, Strategy::NormalOrder, max_steps, true);
    match (tx.normal_form(), ty.normal_form()) {
        (Some(nx), Some(ny)) => {
            if nx == ny {
                ExtEqual::Equal
            } else {
                ExtEqual::NotEqual
            }
        }
        _ => ExtEqual::Inconclusive,
    }
}
