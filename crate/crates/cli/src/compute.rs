use std::fmt;

use clap::ValueEnum;
use rwords_core::cases::{explicit_triangle, f0_sequence, fm_explicit, fm_sequence};
use rwords_core::sequence::{composition_triangle, invert_power, lift_triangle};
use rwords_core::words::count_automaton_prefix;
use rwords_core::{BigInt, BigTriangle, CaseSpec};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqSource {
    Recurrence,
    Invert,
    Explicit,
    Automaton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleSource {
    Convolution,
    Formula,
    Eq3,
}

impl fmt::Display for SeqSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

impl fmt::Display for TriangleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

/// `f_m(1..=n)` from `source`.
pub fn sequence(
    spec: CaseSpec,
    m: u32,
    n: usize,
    source: SeqSource,
) -> Result<Vec<BigInt>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    // recurrences need their seeds even when fewer terms are printed
    let padded = n.max(spec.seed_count());
    let values = match source {
        SeqSource::Recurrence => fm_sequence(spec, m, padded)?.into_values(),
        SeqSource::Invert => invert_power(&f0_sequence(spec, padded)?, m).into_values(),
        SeqSource::Explicit => (1..=n)
            .map(|i| fm_explicit(spec, m, i))
            .collect::<Result<_, _>>()?,
        SeqSource::Automaton => count_automaton_prefix(spec, m, n - 1),
    };
    Ok(values.into_iter().take(n).collect())
}

/// `c_m(n, k)` for `1 <= k <= n <= size` from `source`.
pub fn triangle(
    spec: CaseSpec,
    m: u32,
    size: usize,
    source: TriangleSource,
) -> Result<BigTriangle, CliError> {
    if size == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if m == 0 {
        return Err(CliError::Usage(
            "the triangle c_m(n,k) is defined for m >= 1".into(),
        ));
    }
    let padded = size.max(spec.seed_count());
    let triangle = match source {
        TriangleSource::Convolution => {
            let f = fm_sequence(spec, m - 1, padded)?.truncate(size)?;
            composition_triangle(&f)
        }
        TriangleSource::Eq3 => {
            let f0 = f0_sequence(spec, padded)?.truncate(size)?;
            lift_triangle(&composition_triangle(&f0), m)?
        }
        TriangleSource::Formula => match explicit_triangle(spec, m, size) {
            Some(t) => t?,
            None => {
                return Err(CliError::Usage(format!(
                "no closed formula for c_m with {spec}, m={m}; available sources: convolution, eq3"
            )))
            }
        },
    };
    Ok(triangle)
}

pub fn render_sequence(values: &[BigInt]) -> String {
    let parts: Vec<String> = values.iter().map(BigInt::to_string).collect();
    parts.join(" ")
}

pub fn render_triangle(t: &BigTriangle) -> String {
    let rows: Vec<String> = t.rows().map(render_sequence).collect();
    rows.join("\n")
}
