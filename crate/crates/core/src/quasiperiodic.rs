//! Quasiperiodic structure: Fibonacci step lengths, the substitution word,
//! the signal x(τ) = cos(2πτ) + cos(2πατ), and time partitions.
//!
//! The word is the canonical fixed point of A → AB, B → A, so the
//! generation-g word has length l_{g+1} (with word(1) = "A") and every
//! word is a prefix of the next. Partitions map word symbols to raw
//! durations A ↦ φ, B ↦ 1 and rescale to the requested total time, which
//! reproduces the long/short interval geometry of the Fibonacci chain.

use crate::error::{Error, Result};

/// (1 + √5) / 2.
pub const GOLDEN_RATIO: f64 = 1.618033988749894848204586834365638118;

/// Largest n for which l_n fits comfortably in 64-bit arithmetic.
pub const MAX_FIBONACCI_INDEX: usize = 92;

const WORD_LENGTH_BUDGET: u64 = 100_000_000;

/// The integer sequence l_0 = 0, l_1 = 1, l_{n+1} = l_n + l_{n−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibonacciLengths {
    values: Vec<u64>,
}

impl FibonacciLengths {
    /// Tabulate l_0 ..= l_{n_max}.
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max > MAX_FIBONACCI_INDEX {
            return Err(Error::FibonacciIndexTooLarge {
                n_max,
                max: MAX_FIBONACCI_INDEX,
            });
        }
        let mut values = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let next = match n {
                0 => 0u64,
                1 => 1,
                _ => values[n - 1] + values[n - 2],
            };
            values.push(next);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Result<u64> {
        self.values
            .get(n)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                n,
                max: self.max_index(),
            })
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}

/// Two-letter alphabet of the substitution system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'A',
            Symbol::B => 'B',
        }
    }
}

/// A finite generation of the Fibonacci word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibonacciWord {
    symbols: Vec<Symbol>,
    generation: u32,
}

impl FibonacciWord {
    /// word(1) = "A"; word(g+1) applies A → AB, B → A to word(g).
    pub fn new(generation: u32) -> Result<Self> {
        if generation == 0 {
            return Err(Error::ZeroGeneration);
        }
        let length = Self::length_of(generation)?;
        let mut symbols = Vec::with_capacity(length as usize);
        symbols.push(Symbol::A);
        for _ in 1..generation {
            let mut next = Vec::with_capacity(2 * symbols.len());
            for &s in &symbols {
                match s {
                    Symbol::A => {
                        next.push(Symbol::A);
                        next.push(Symbol::B);
                    }
                    Symbol::B => next.push(Symbol::A),
                }
            }
            symbols = next;
        }
        Ok(Self {
            symbols,
            generation,
        })
    }

    /// Length of word(g), i.e. l_{g+1}, without building the word.
    pub fn length_of(generation: u32) -> Result<u64> {
        if generation == 0 {
            return Err(Error::ZeroGeneration);
        }
        let (mut prev, mut cur) = (1u64, 1u64); // lengths of word(1), word(2) start at 1, 2
        let mut len = 1u64;
        for _ in 1..generation {
            len = prev + cur;
            prev = cur;
            cur = len;
            if len > WORD_LENGTH_BUDGET {
                return Err(Error::WordTooLong {
                    generation,
                    length: len,
                    budget: WORD_LENGTH_BUDGET,
                });
            }
        }
        Ok(if generation == 1 { 1 } else { len })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn generation(&self) -> u32 {
        self.generation
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn to_letters(&self) -> String {
        self.symbols.iter().map(|s| s.as_char()).collect()
    }
}

/// The signal x(τ) = cos(2πτ) + cos(2πατ); quasiperiodic for irrational α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiperiodicSignal {
    pub alpha: f64,
}

impl QuasiperiodicSignal {
    pub fn new(alpha: f64) -> Self {
        Self { alpha }
    }

    /// α = golden ratio, the default choice.
    pub fn golden() -> Self {
        Self::new(GOLDEN_RATIO)
    }

    pub fn eval(&self, tau: f64) -> f64 {
        let two_pi = 2.0 * std::f64::consts::PI;
        (two_pi * tau).cos() + (two_pi * self.alpha * tau).cos()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Uniform,
    FibonacciWord,
    Custom,
}

/// Strictly increasing times t_0 = 0 < t_1 < … < t_N = t_total.
///
/// The increments are stored as the source of truth (and are nudged so
/// they sum to the total within a couple of ulps); node times are their
/// running sums with the endpoints pinned exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TimePartition {
    times: Vec<f64>,
    increments: Vec<f64>,
    kind: PartitionKind,
}

impl TimePartition {
    /// N equal segments of `[0, t_total]`.
    pub fn uniform(t_total: f64, n_segments: usize) -> Result<Self> {
        if !(t_total > 0.0) || !t_total.is_finite() {
            return Err(Error::NonPositiveTime { t: t_total });
        }
        if n_segments == 0 {
            return Err(Error::BadPartition {
                reason: "need at least one segment".into(),
            });
        }
        let increments = vec![t_total / n_segments as f64; n_segments];
        Self::from_increments(increments, t_total, PartitionKind::Uniform)
    }

    /// Quasiperiodic partition: the first `n_segments` symbols of `word`
    /// become raw durations A ↦ φ, B ↦ 1, rescaled to sum to `t_total`.
    pub fn from_word(t_total: f64, n_segments: usize, word: &FibonacciWord) -> Result<Self> {
        if !(t_total > 0.0) || !t_total.is_finite() {
            return Err(Error::NonPositiveTime { t: t_total });
        }
        if n_segments == 0 {
            return Err(Error::BadPartition {
                reason: "need at least one segment".into(),
            });
        }
        if n_segments > word.len() {
            return Err(Error::WordTooShort {
                requested: n_segments,
                available: word.len(),
            });
        }
        let raw: Vec<f64> = word.symbols()[..n_segments]
            .iter()
            .map(|s| match s {
                Symbol::A => GOLDEN_RATIO,
                Symbol::B => 1.0,
            })
            .collect();
        let total_raw: f64 = raw.iter().sum();
        let increments: Vec<f64> = raw.iter().map(|r| t_total * (r / total_raw)).collect();
        Self::from_increments(increments, t_total, PartitionKind::FibonacciWord)
    }

    /// Partition from explicit node times; must start at 0, be strictly
    /// increasing, and end at a positive total.
    pub fn custom(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::BadPartition {
                reason: "need at least two times".into(),
            });
        }
        if times[0] != 0.0 {
            return Err(Error::BadPartition {
                reason: format!("first time must be exactly 0, got {}", times[0]),
            });
        }
        for pair in times.windows(2) {
            if !(pair[1] > pair[0]) || !pair[1].is_finite() {
                return Err(Error::BadPartition {
                    reason: format!("times not strictly increasing at {} -> {}", pair[0], pair[1]),
                });
            }
        }
        let increments: Vec<f64> = times.windows(2).map(|p| p[1] - p[0]).collect();
        Ok(Self {
            times,
            increments,
            kind: PartitionKind::Custom,
        })
    }

    fn from_increments(mut increments: Vec<f64>, t_total: f64, kind: PartitionKind) -> Result<Self> {
        // absorb the rescaling residue into the largest increment so the
        // sum hits t_total to within an ulp or two
        let sum: f64 = increments.iter().sum();
        let residue = t_total - sum;
        if residue != 0.0 {
            let (max_idx, _) = increments
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(b.1))
                .expect("non-empty");
            increments[max_idx] += residue;
        }
        let mut times = Vec::with_capacity(increments.len() + 1);
        times.push(0.0);
        let mut acc = 0.0;
        for &d in &increments {
            if !(d > 0.0) {
                return Err(Error::BadPartition {
                    reason: format!("non-positive increment {d}"),
                });
            }
            acc += d;
            times.push(acc);
        }
        *times.last_mut().expect("non-empty") = t_total;
        Ok(Self {
            times,
            increments,
            kind,
        })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    pub fn n_segments(&self) -> usize {
        self.increments.len()
    }

    pub fn total_time(&self) -> f64 {
        *self.times.last().expect("non-empty")
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }
}
