//! The core transducer type and its structural classification.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// A complete deterministic letter-to-letter transducer `(Q, A, delta, lambda)`
/// with a common input/output alphabet.
///
/// States and letters are addressed by their index into the ordered `states`
/// and `alphabet` lists; the declaration order is significant everywhere
/// (serialization, BFS tie-breaking) and preserved by all operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mealy {
    states: Vec<String>,
    alphabet: Vec<String>,
    /// Row-major `[state * |A| + letter] -> state`.
    transition: Vec<usize>,
    /// Row-major `[state * |A| + letter] -> letter`.
    output: Vec<usize>,
}

/// One occurrence of a state or its formal inverse in a group word.
///
/// The negative sign is only meaningful on invertible machines; operations
/// that act with signed states check invertibility at the use site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedState {
    pub base: usize,
    pub positive: bool,
}

impl SignedState {
    pub fn pos(base: usize) -> Self {
        SignedState { base, positive: true }
    }

    pub fn neg(base: usize) -> Self {
        SignedState { base, positive: false }
    }

    pub fn inverse(self) -> Self {
        SignedState { base: self.base, positive: !self.positive }
    }

    /// Index into the doubled alphabet `[q_1..q_n, q_1^-1..q_n^-1]`.
    pub fn tilde_index(self, state_count: usize) -> usize {
        if self.positive {
            self.base
        } else {
            state_count + self.base
        }
    }
}

/// Structural classification of a machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFlags {
    pub invertible: bool,
    pub reversible: bool,
    pub output_reversible: bool,
    pub bireversible: bool,
    /// Identity sinks: states `e` with `delta(e,a) = e` and `lambda(e,a) = a`
    /// for every letter.
    pub sink_states: Vec<usize>,
    /// Whether some identity sink is reachable from every state.
    pub sink_accessible_from_all: bool,
}

impl Mealy {
    /// Builds a machine from explicit tables, validating completeness,
    /// determinism and identifier uniqueness.
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        transition: Vec<usize>,
        output: Vec<usize>,
    ) -> Result<Mealy, Error> {
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(Error::DuplicateIdentifier { name: s.clone() });
            }
        }
        for (i, a) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(a) {
                return Err(Error::DuplicateIdentifier { name: a.clone() });
            }
        }
        let n = states.len() * alphabet.len();
        if transition.len() != n || output.len() != n {
            return Err(Error::MalformedTable);
        }
        if transition.iter().any(|&q| q >= states.len())
            || output.iter().any(|&a| a >= alphabet.len())
        {
            return Err(Error::MalformedTable);
        }
        Ok(Mealy { states, alphabet, transition, output })
    }

    /// Builds a machine from `(state, letter) -> (state, letter)` rules given
    /// by name. Convenient for hand-written machines in tests.
    pub fn from_rules(
        states: &[&str],
        alphabet: &[&str],
        rules: &[(&str, &str, &str, &str)],
    ) -> Result<Mealy, Error> {
        let states: Vec<String> = states.iter().map(|s| s.to_string()).collect();
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
        let find = |list: &[String], name: &str, state: bool| -> Result<usize, Error> {
            list.iter().position(|x| x == name).ok_or_else(|| {
                if state {
                    Error::UnknownState { name: name.to_string() }
                } else {
                    Error::UnknownLetter { name: name.to_string() }
                }
            })
        };
        let n = states.len() * alphabet.len();
        let mut transition = vec![usize::MAX; n];
        let mut output = vec![usize::MAX; n];
        for &(q, a, p, b) in rules {
            let qi = find(&states, q, true)?;
            let ai = find(&alphabet, a, false)?;
            let pi = find(&states, p, true)?;
            let bi = find(&alphabet, b, false)?;
            let idx = qi * alphabet.len() + ai;
            if transition[idx] != usize::MAX {
                return Err(Error::DuplicateIdentifier { name: q.to_string() });
            }
            transition[idx] = pi;
            output[idx] = bi;
        }
        if transition.contains(&usize::MAX) {
            return Err(Error::MalformedTable);
        }
        Mealy::new(states, alphabet, transition, output)
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn letter_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.states[q]
    }

    pub fn letter_name(&self, a: usize) -> &str {
        &self.alphabet[a]
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == name)
    }

    /// `delta(q, a)`
    pub fn next_state(&self, q: usize, a: usize) -> usize {
        self.transition[q * self.alphabet.len() + a]
    }

    /// `lambda(q, a)`
    pub fn output_letter(&self, q: usize, a: usize) -> usize {
        self.output[q * self.alphabet.len() + a]
    }

    /// One transition: `(delta(q, a), lambda(q, a))`.
    pub fn step(&self, q: usize, a: usize) -> (usize, usize) {
        let idx = q * self.alphabet.len() + a;
        (self.transition[idx], self.output[idx])
    }

    /// State reached from `q` after consuming the whole input word.
    pub fn run_states(&self, q: usize, input: &[usize]) -> usize {
        input.iter().fold(q, |s, &a| self.next_state(s, a))
    }

    /// Whether the output row of every state is a bijection on the alphabet.
    pub fn is_invertible(&self) -> bool {
        self.first_non_invertible_state().is_none()
    }

    /// Lowest-indexed state whose output row is not a bijection, if any.
    pub fn first_non_invertible_state(&self) -> Option<usize> {
        let m = self.alphabet.len();
        (0..self.states.len()).find(|&q| {
            let mut seen = vec![false; m];
            for a in 0..m {
                let b = self.output_letter(q, a);
                if seen[b] {
                    return true;
                }
                seen[b] = true;
            }
            false
        })
    }

    /// Whether the transition column of every letter is a bijection on states.
    pub fn is_reversible(&self) -> bool {
        self.first_non_reversible_letter().is_none()
    }

    /// Lowest-indexed letter whose transition column is not a bijection.
    pub fn first_non_reversible_letter(&self) -> Option<usize> {
        let n = self.states.len();
        (0..self.alphabet.len()).find(|&a| {
            let mut seen = vec![false; n];
            for q in 0..n {
                let p = self.next_state(q, a);
                if seen[p] {
                    return true;
                }
                seen[p] = true;
            }
            false
        })
    }

    /// For an invertible machine: the letter `b` with `lambda(q, b) = a`.
    pub fn input_for_output(&self, q: usize, a: usize) -> Option<usize> {
        (0..self.alphabet.len()).find(|&b| self.output_letter(q, b) == a)
    }

    /// Identity sinks: `delta(e, a) = e` and `lambda(e, a) = a` for all `a`.
    pub fn sink_states(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&q| {
                (0..self.alphabet.len())
                    .all(|a| self.next_state(q, a) == q && self.output_letter(q, a) == a)
            })
            .collect()
    }
}

/// Computes every classification predicate of a machine in one pass.
pub fn classify(m: &Mealy) -> ClassFlags {
    let invertible = m.is_invertible();
    let reversible = m.is_reversible();
    let output_reversible = invertible && output_reversible(m);
    let sink_states = m.sink_states();
    ClassFlags {
        invertible,
        reversible,
        output_reversible,
        bireversible: reversible && output_reversible,
        sink_accessible_from_all: sink_accessible_from_all(m, &sink_states),
        sink_states,
    }
}

/// Whether the output automaton is a reversible semiautomaton: for each
/// output letter `b`, every state has exactly one outgoing and one incoming
/// edge whose output is `b`. Assumes the per-state rows are bijections.
fn output_reversible(m: &Mealy) -> bool {
    for b in 0..m.letter_count() {
        let mut seen = vec![false; m.state_count()];
        for q in 0..m.state_count() {
            let a = match m.input_for_output(q, b) {
                Some(a) => a,
                None => return false,
            };
            let p = m.next_state(q, a);
            if seen[p] {
                return false;
            }
            seen[p] = true;
        }
    }
    true
}

/// Reverse reachability from the sink set in the transition digraph.
fn sink_accessible_from_all(m: &Mealy, sinks: &[usize]) -> bool {
    if sinks.is_empty() {
        return false;
    }
    let mut reached = vec![false; m.state_count()];
    for &e in sinks {
        reached[e] = true;
    }
    loop {
        let mut changed = false;
        for q in 0..m.state_count() {
            if !reached[q]
                && (0..m.letter_count()).any(|a| reached[m.next_state(q, a)])
            {
                reached[q] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reached.iter().all(|&r| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cayley_machine, zn_group};
    use crate::testutil::{adding_machine, aleshin_machine};

    #[test]
    fn classify_cayley_z3() {
        // Rows and columns enumerated by hand from the nine transitions:
        // lambda(1,.) = (0,1,0) and lambda(2,.) = (0,0,2) are not bijections,
        // the column maps g -> g+x are.
        let m = cayley_machine(&zn_group(3));
        let flags = classify(&m);
        assert!(flags.reversible);
        assert!(!flags.invertible);
        assert!(!flags.bireversible);
        assert!(flags.sink_states.is_empty());
        assert!(!flags.sink_accessible_from_all);
    }

    #[test]
    fn classify_aleshin() {
        let flags = classify(&aleshin_machine());
        assert!(flags.invertible);
        assert!(flags.reversible);
        assert!(flags.output_reversible);
        assert!(flags.bireversible);
        assert!(flags.sink_states.is_empty());
    }

    #[test]
    fn classify_adding_machine() {
        let m = adding_machine();
        let flags = classify(&m);
        assert!(flags.invertible);
        assert!(!flags.reversible);
        assert!(!flags.bireversible);
        assert_eq!(flags.sink_states, vec![m.state_index("e").unwrap()]);
        assert!(flags.sink_accessible_from_all);
    }

    #[test]
    fn bireversible_implies_invertible() {
        let flags = classify(&aleshin_machine());
        assert!(!flags.bireversible || flags.invertible);
    }

    #[test]
    fn duplicate_state_rejected() {
        let r = Mealy::new(
            alloc::vec![
                alloc::string::String::from("q"),
                alloc::string::String::from("q")
            ],
            alloc::vec![alloc::string::String::from("0")],
            alloc::vec![0, 0],
            alloc::vec![0, 0],
        );
        assert!(matches!(r, Err(Error::DuplicateIdentifier { .. })));
    }

    #[test]
    fn sink_unreachable_is_flagged() {
        // q loops to itself on every input, never reaching the sink e.
        let m = Mealy::from_rules(
            &["q", "e"],
            &["0"],
            &[("q", "0", "q", "0"), ("e", "0", "e", "0")],
        )
        .unwrap();
        let flags = classify(&m);
        assert_eq!(flags.sink_states.len(), 2);
        assert!(flags.sink_accessible_from_all);
        let m2 = Mealy::from_rules(
            &["q", "e"],
            &["0", "1"],
            &[
                ("q", "0", "q", "1"),
                ("q", "1", "q", "0"),
                ("e", "0", "e", "0"),
                ("e", "1", "e", "1"),
            ],
        )
        .unwrap();
        let flags2 = classify(&m2);
        assert_eq!(flags2.sink_states, alloc::vec![1]);
        assert!(!flags2.sink_accessible_from_all);
    }
}
