//! The cross-check matrix for one family and extension level.
//!
//! Every route to `f_m` and `c_m` is computed up to a word length and
//! compared pairwise. The explicit formulas are taken from a [`Formulas`]
//! table so a deliberately broken formula can be swapped in to exercise the
//! failure path.

use std::fmt;

use num_bigint::BigInt;

use crate::cases::{
    c1_case3_binomial, c1_explicit, c2_explicit_case2, cm_explicit_case1, cm_printed_case1,
    f0_sequence, fm_explicit, fm_sequence, CaseSpec,
};
use crate::error::Result;
use crate::sequence::{composition_triangle, invert_power, lift_triangle, row_sums};
use crate::words::{count_automaton, count_automaton_by_marks, ExhaustiveCounter};
use crate::BigTriangle;

pub type C1Formula = fn(CaseSpec, usize, usize) -> Result<BigInt>;
pub type FmFormula = fn(CaseSpec, u32, usize) -> Result<BigInt>;
pub type Case1CmFormula = fn(u32, u32, usize, usize) -> Result<BigInt>;
pub type Case2C2Formula = fn(u32, usize, usize) -> Result<BigInt>;

/// The explicit formulas under test.
#[derive(Clone, Copy, Debug)]
pub struct Formulas {
    pub c1: C1Formula,
    pub fm: FmFormula,
    pub cm_case1: Case1CmFormula,
    pub c2_case2: Case2C2Formula,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            c1: c1_explicit,
            fm: fm_explicit,
            cm_case1: cm_explicit_case1,
            c2_case2: c2_explicit_case2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree {
        witness: String,
        left: BigInt,
        right: BigInt,
    },
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub name: String,
    pub compared: usize,
    pub outcome: Outcome,
}

impl Comparison {
    fn run(name: &str, pairs: impl IntoIterator<Item = (String, BigInt, BigInt)>) -> Self {
        let mut compared = 0;
        for (witness, left, right) in pairs {
            compared += 1;
            if left != right {
                return Self {
                    name: name.into(),
                    compared,
                    outcome: Outcome::Disagree {
                        witness,
                        left,
                        right,
                    },
                };
            }
        }
        Self {
            name: name.into(),
            compared,
            outcome: Outcome::Agree,
        }
    }

    fn try_run(name: &str, pairs: Result<Vec<(String, BigInt, BigInt)>>) -> Self {
        match pairs {
            Ok(p) => Self::run(name, p),
            Err(e) => Self::skipped(name, e.to_string()),
        }
    }

    fn skipped(name: &str, why: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            compared: 0,
            outcome: Outcome::Skipped(why.into()),
        }
    }

    pub fn disagrees(&self) -> bool {
        matches!(self.outcome, Outcome::Disagree { .. })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Agree => write!(f, "agree     {:<44} {} values", self.name, self.compared),
            Outcome::Disagree {
                witness,
                left,
                right,
            } => write!(
                f,
                "DISAGREE  {:<44} at {witness}: {left} vs {right}",
                self.name
            ),
            Outcome::Skipped(why) => write!(f, "skipped   {:<44} {why}", self.name),
        }
    }
}

/// The printed case-1 `c_m` leading term `m^{n-k}` against the lift of `c_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjudication {
    /// First `(n, k)` where the printed form differs, with printed and lifted
    /// values.
    pub printed_first_mismatch: Option<((usize, usize), BigInt, BigInt)>,
    /// Whether the corrected `(m-1)^{n-k}` form matched on every cell.
    pub corrected_agrees: bool,
    pub cells: usize,
}

impl fmt::Display for Adjudication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.printed_first_mismatch {
            Some(((n, k), printed, lifted)) => write!(
                f,
                "leading term m^(n-k): differs at (n,k)=({n},{k}), printed {printed}, lifted {lifted}"
            )?,
            None => write!(f, "leading term m^(n-k): no difference in range")?,
        }
        write!(
            f,
            "; leading term (m-1)^(n-k): {} on {} cells",
            if self.corrected_agrees {
                "agrees"
            } else {
                "DISAGREES"
            },
            self.cells
        )
    }
}

/// Compares printed and corrected case-1 `c_m` sums against `lifted`.
pub fn adjudicate_case1(a: u32, m: u32, lifted: &BigTriangle) -> Result<Adjudication> {
    let mut printed_first_mismatch = None;
    let mut corrected_agrees = true;
    let mut cells = 0;
    for (n, k, v) in lifted.cells() {
        cells += 1;
        let printed = cm_printed_case1(a, m, n, k)?;
        if printed_first_mismatch.is_none() && &printed != v {
            printed_first_mismatch = Some(((n, k), printed, v.clone()));
        }
        if &cm_explicit_case1(a, m, n, k)? != v {
            corrected_agrees = false;
        }
    }
    Ok(Adjudication {
        printed_first_mismatch,
        corrected_agrees,
        cells,
    })
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub spec: CaseSpec,
    pub m: u32,
    /// Largest word length; sequences run to `n = max_len + 1`.
    pub max_len: usize,
    pub counter: ExhaustiveCounter,
    pub formulas: Formulas,
}

impl VerifyConfig {
    pub fn new(spec: CaseSpec, m: u32, max_len: usize) -> Self {
        Self {
            spec,
            m,
            max_len,
            counter: ExhaustiveCounter::default(),
            formulas: Formulas::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub spec: CaseSpec,
    pub m: u32,
    pub max_len: usize,
    pub comparisons: Vec<Comparison>,
    pub adjudication: Option<Adjudication>,
}

impl VerifyReport {
    /// True iff no comparison disagrees.
    pub fn all_agree(&self) -> bool {
        !self.comparisons.iter().any(Comparison::disagrees)
    }

    pub fn first_disagreement(&self) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.disagrees())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} m={} lengths 0..={}", self.spec, self.m, self.max_len)?;
        for c in &self.comparisons {
            writeln!(f, "  {c}")?;
        }
        if let Some(adj) = &self.adjudication {
            writeln!(f, "  note      case-1 c_m {adj}")?;
        }
        write!(
            f,
            "{}",
            if self.all_agree() {
                "all sources agree"
            } else {
                "sources DISAGREE"
            }
        )
    }
}

fn cell_pairs(
    reference: &BigTriangle,
    mut other: impl FnMut(usize, usize) -> Result<BigInt>,
) -> Result<Vec<(String, BigInt, BigInt)>> {
    reference
        .cells()
        .map(|(n, k, v)| Ok((format!("(n,k)=({n},{k})"), other(n, k)?, v.clone())))
        .collect()
}

/// Runs the full matrix for `config`.
pub fn verify_case(config: &VerifyConfig) -> Result<VerifyReport> {
    let VerifyConfig {
        spec,
        m,
        max_len,
        counter,
        formulas,
    } = config.clone();
    let n_max = max_len + 1;
    let len = n_max.max(spec.seed_count());
    let f0 = f0_sequence(spec, len)?;
    let recurrence = fm_sequence(spec, m, len)?;
    let invert = invert_power(&f0, m);
    let rec = |n: usize| recurrence[n].clone();
    let mut out = Vec::new();

    out.push(Comparison::run(
        "f_m: invert transform vs recurrence",
        (1..=n_max).map(|n| (format!("n={n}"), invert[n].clone(), rec(n))),
    ));
    out.push(Comparison::try_run(
        "f_m: explicit formula vs recurrence",
        (1..=n_max)
            .map(|n| Ok((format!("n={n}"), (formulas.fm)(spec, m, n)?, rec(n))))
            .collect(),
    ));
    out.push(Comparison::run(
        "f_m: automaton count vs recurrence",
        (0..=max_len).map(|l| {
            (
                format!("L={l}"),
                count_automaton(spec, m, l, None),
                rec(l + 1),
            )
        }),
    ));
    let exhaustive_lengths: Vec<usize> = (0..=max_len)
        .filter(|&l| counter.within_budget(spec.alphabet_size(m), l))
        .collect();
    out.push(Comparison::try_run(
        "f_m: exhaustive count vs recurrence",
        exhaustive_lengths
            .iter()
            .map(|&l| Ok((format!("L={l}"), counter.count(spec, m, l)?, rec(l + 1))))
            .collect(),
    ));

    let c1_conv = composition_triangle(&f0.truncate(n_max)?);
    out.push(Comparison::try_run(
        "c_1: explicit formula vs convolution",
        cell_pairs(&c1_conv, |n, k| (formulas.c1)(spec, n, k)),
    ));
    match spec {
        CaseSpec::AvoidZeroPairs { a, b } if a == b + 1 => out.push(Comparison::try_run(
            "c_1: a=b+1 sum vs convolution",
            cell_pairs(&c1_conv, |n, k| c1_case3_binomial(b, n, k)),
        )),
        CaseSpec::EvenRuns { a } => {
            let lifted = lift_triangle(&c1_conv, 2)?;
            out.push(Comparison::try_run(
                "c_2: explicit formula vs lift of c_1",
                cell_pairs(&lifted, |n, k| (formulas.c2_case2)(a, n, k)),
            ));
        }
        _ => {}
    }

    let mut adjudication = None;
    if m == 0 {
        for name in [
            "f_m: row sums of c_m vs recurrence",
            "c_m: lift of c_1 vs convolution",
            "c_m: marked automaton vs triangle",
            "c_m: marked exhaustive vs triangle",
        ] {
            out.push(Comparison::skipped(name, "c_m needs m >= 1"));
        }
    } else {
        let cm_conv = composition_triangle(&invert_power(&f0, m - 1).truncate(n_max)?);
        let sums = row_sums(&cm_conv);
        out.push(Comparison::run(
            "f_m: row sums of c_m vs recurrence",
            (1..=n_max).map(|n| (format!("n={n}"), sums[n].clone(), rec(n))),
        ));
        let lifted = lift_triangle(&c1_conv, m)?;
        out.push(Comparison::run(
            "c_m: lift of c_1 vs convolution",
            lifted.cells().map(|(n, k, v)| {
                (
                    format!("(n,k)=({n},{k})"),
                    v.clone(),
                    cm_conv[(n, k)].clone(),
                )
            }),
        ));
        if let CaseSpec::DistinctAdjacent { a } = spec {
            out.push(Comparison::try_run(
                "c_m: case-1 explicit formula vs convolution",
                cell_pairs(&cm_conv, |n, k| (formulas.cm_case1)(a, m, n, k)),
            ));
            adjudication = Some(adjudicate_case1(a, m, &cm_conv)?);
        }
        out.push(Comparison::run(
            "c_m: marked automaton vs triangle",
            (0..=max_len).flat_map(|l| {
                let hist = count_automaton_by_marks(spec, m, l);
                let cm = &cm_conv;
                hist.into_iter()
                    .enumerate()
                    .map(move |(j, v)| (format!("L={l}, marks={j}"), v, cm[(l + 1, j + 1)].clone()))
            }),
        ));
        out.push(Comparison::try_run(
            "c_m: marked exhaustive vs triangle",
            exhaustive_lengths
                .iter()
                .map(|&l| {
                    let hist = counter.marked_histogram(spec, m, l)?;
                    Ok(hist
                        .into_iter()
                        .enumerate()
                        .map(|(j, v)| {
                            (
                                format!("L={l}, marks={j}"),
                                v,
                                cm_conv[(l + 1, j + 1)].clone(),
                            )
                        })
                        .collect::<Vec<_>>())
                })
                .collect::<Result<Vec<_>>>()
                .map(|v| v.into_iter().flatten().collect()),
        ));
    }

    Ok(VerifyReport {
        spec,
        m,
        max_len,
        comparisons: out,
        adjudication,
    })
}
