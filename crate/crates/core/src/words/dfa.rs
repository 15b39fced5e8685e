use num_bigint::BigInt;
use num_traits::Zero;

use crate::cases::CaseSpec;

/// A deterministic automaton over `{0, ..., alphabet-1}`. A missing
/// transition rejects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: u32,
    start: usize,
    transitions: Vec<Option<usize>>,
    accepting: Vec<bool>,
    labels: Vec<String>,
}

impl Dfa {
    fn from_fn(
        alphabet: u32,
        labels: Vec<String>,
        accepting: Vec<bool>,
        start: usize,
        step: impl Fn(usize, u32) -> Option<usize>,
    ) -> Self {
        let states = labels.len();
        debug_assert_eq!(accepting.len(), states);
        let transitions = (0..states)
            .flat_map(|s| (0..alphabet).map(move |c| (s, c)))
            .map(|(s, c)| step(s, c))
            .collect();
        Self {
            alphabet,
            start,
            transitions,
            accepting,
            labels,
        }
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn next(&self, state: usize, letter: u32) -> Option<usize> {
        if letter >= self.alphabet {
            return None;
        }
        self.transitions[state * self.alphabet as usize + letter as usize]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn label(&self, state: usize) -> &str {
        &self.labels[state]
    }

    pub fn accepts(&self, word: &[u32]) -> bool {
        let mut state = self.start;
        for &c in word {
            match self.next(state, c) {
                Some(s) => state = s,
                None => return false,
            }
        }
        self.accepting[state]
    }
}

/// The automaton of a family's words over `alphabet_size(m)` letters.
///
/// States: the last cold letter (case 1); a cold letter with its run parity
/// (case 2); whether the last letter was `0` (case 3); free / just read `1` /
/// inside zeros (case 4); the current `0`-run parity or `1`-run residue
/// (case 5).
pub fn build_dfa(spec: CaseSpec, m: u32) -> Dfa {
    let s = spec.alphabet_size(m);
    match spec {
        CaseSpec::DistinctAdjacent { a } => {
            // states 0..a: last letter was that cold letter; state a: otherwise
            let a_us = a as usize;
            let mut labels: Vec<String> = (0..a).map(|c| format!("after cold {c}")).collect();
            labels.push("free".into());
            Dfa::from_fn(s, labels, vec![true; a_us + 1], a_us, move |state, c| {
                if c < a {
                    (state != c as usize).then_some(c as usize)
                } else {
                    Some(a_us)
                }
            })
        }
        CaseSpec::EvenRuns { a } => {
            // 0: free; 1 + 2c: odd run of c; 2 + 2c: even run of c
            let mut labels = vec!["free".to_string()];
            let mut accepting = vec![true];
            for c in 0..a {
                labels.push(format!("odd run of {c}"));
                labels.push(format!("even run of {c}"));
                accepting.extend([false, true]);
            }
            Dfa::from_fn(s, labels, accepting, 0, move |state, c| {
                let odd_of = (state >= 1 && state % 2 == 1).then(|| (state as u32 - 1) / 2);
                match odd_of {
                    Some(run) => (c == run).then_some(2 + 2 * run as usize),
                    None if c < a => Some(1 + 2 * c as usize),
                    None => Some(0),
                }
            })
        }
        CaseSpec::AvoidZeroPairs { b, .. } => Dfa::from_fn(
            s,
            vec!["free".into(), "after 0".into()],
            vec![true, true],
            0,
            move |state, c| {
                if state == 1 && (1..=b).contains(&c) {
                    None
                } else {
                    Some(usize::from(c == 0))
                }
            },
        ),
        CaseSpec::OneZeroBlocks => Dfa::from_fn(
            s,
            vec!["free".into(), "after 1".into(), "in zeros".into()],
            vec![true, false, true],
            0,
            |state, c| match (state, c) {
                (1, 0) => Some(2),
                (1, _) => None,
                (0, 0) => None,
                (_, 0) => Some(2),
                (_, 1) => Some(1),
                _ => Some(0),
            },
        ),
        CaseSpec::EvenZeroTripleOne => {
            const FREE: usize = 0;
            const ZERO_ODD: usize = 1;
            const ZERO_EVEN: usize = 2;
            const ONE_1: usize = 3;
            const ONE_2: usize = 4;
            const ONE_0: usize = 5;
            let labels = [
                "free",
                "0-run odd",
                "0-run even",
                "1-run mod 3 = 1",
                "1-run mod 3 = 2",
                "1-run mod 3 = 0",
            ]
            .map(String::from)
            .to_vec();
            let accepting = vec![true, false, true, false, false, true];
            Dfa::from_fn(s, labels, accepting, FREE, |state, c| {
                let closed = matches!(state, FREE | ZERO_EVEN | ONE_0);
                match c {
                    0 => match state {
                        ZERO_ODD => Some(ZERO_EVEN),
                        _ if closed => Some(ZERO_ODD),
                        _ => None,
                    },
                    1 => match state {
                        ONE_1 => Some(ONE_2),
                        ONE_2 => Some(ONE_0),
                        _ if closed => Some(ONE_1),
                        _ => None,
                    },
                    _ => closed.then_some(FREE),
                }
            })
        }
    }
}

/// Per-state outgoing edges with letters of equal effect merged.
struct Edges {
    plain: Vec<Vec<(usize, u64)>>,
    marked: Vec<Option<usize>>,
}

fn edges(dfa: &Dfa, marked_letter: Option<u32>) -> Edges {
    let n = dfa.state_count();
    let mut plain = vec![Vec::new(); n];
    let mut marked = vec![None; n];
    for (state, out) in plain.iter_mut().enumerate() {
        for c in 0..dfa.alphabet_size() {
            let Some(t) = dfa.next(state, c) else {
                continue;
            };
            if Some(c) == marked_letter {
                marked[state] = Some(t);
                continue;
            }
            match out.iter_mut().find(|(target, _)| *target == t) {
                Some((_, mult)) => *mult += 1,
                None => out.push((t, 1)),
            }
        }
    }
    Edges { plain, marked }
}

/// Accepted words of length `len`, optionally with exactly `marks`
/// occurrences of the marked letter. With `m = 0` there is no marked letter,
/// so every word has zero marks.
pub fn count_automaton(spec: CaseSpec, m: u32, len: usize, marks: Option<usize>) -> BigInt {
    match marks {
        None => {
            let dfa = build_dfa(spec, m);
            let e = edges(&dfa, None);
            let layers = run_layers(&dfa, &e, len, 0);
            accepted(&dfa, &layers, 0)
        }
        Some(k) => {
            let dfa = build_dfa(spec, m);
            let e = edges(&dfa, spec.marked_letter(m));
            let layers = run_layers(&dfa, &e, len, k);
            accepted(&dfa, &layers, k)
        }
    }
}

/// Accepted words of every length `0..=max_len` from a single pass.
pub fn count_automaton_prefix(spec: CaseSpec, m: u32, max_len: usize) -> Vec<BigInt> {
    let dfa = build_dfa(spec, m);
    let e = edges(&dfa, None);
    let n = dfa.state_count();
    let mut occ = vec![BigInt::zero(); n];
    occ[dfa.start()] = BigInt::from(1);
    let mut out = Vec::with_capacity(max_len + 1);
    for step in 0..=max_len {
        out.push(
            occ.iter()
                .enumerate()
                .filter(|(s, _)| dfa.is_accepting(*s))
                .map(|(_, c)| c)
                .sum(),
        );
        if step == max_len {
            break;
        }
        let mut next = vec![BigInt::zero(); n];
        for (state, count) in occ.iter().enumerate() {
            for &(t, mult) in &e.plain[state] {
                next[t] += count * mult;
            }
        }
        occ = next;
    }
    out
}

/// `[count with j marks for j in 0..=len]`.
pub fn count_automaton_by_marks(spec: CaseSpec, m: u32, len: usize) -> Vec<BigInt> {
    let dfa = build_dfa(spec, m);
    let e = edges(&dfa, spec.marked_letter(m));
    let layers = run_layers(&dfa, &e, len, len);
    (0..=len).map(|j| accepted(&dfa, &layers, j)).collect()
}

// occupancy[state][j]: words reaching `state` with j marks, j <= max_marks
fn run_layers(dfa: &Dfa, e: &Edges, len: usize, max_marks: usize) -> Vec<Vec<BigInt>> {
    let n = dfa.state_count();
    let mut occ = vec![vec![BigInt::zero(); max_marks + 1]; n];
    occ[dfa.start()][0] = BigInt::from(1);
    for _ in 0..len {
        let mut next = vec![vec![BigInt::zero(); max_marks + 1]; n];
        for (state, row) in occ.iter().enumerate() {
            for (j, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for &(t, mult) in &e.plain[state] {
                    if mult == 1 {
                        next[t][j] += count;
                    } else {
                        next[t][j] += count * mult;
                    }
                }
                if let Some(t) = e.marked[state] {
                    if j < max_marks {
                        next[t][j + 1] += count;
                    }
                }
            }
        }
        occ = next;
    }
    occ
}

fn accepted(dfa: &Dfa, occ: &[Vec<BigInt>], marks: usize) -> BigInt {
    occ.iter()
        .enumerate()
        .filter(|(s, _)| dfa.is_accepting(*s))
        .map(|(_, row)| row[marks].clone())
        .sum()
}
