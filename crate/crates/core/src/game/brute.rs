//! Exhaustive search for the optimal classical strategy.
//!
//! Encodings are enumerated as base-d counters over string index order, one
//! digit per string, most significant digit first. Only encodings onto at
//! most `d` symbols are visited: any finer encoding necessarily leaks parity
//! (some symbol class is smaller than `d` and must miss a parity class), and
//! for the unrestricted bound the cap is validated separately by an
//! exhaustive all-symbol-count check at d=2 in the tests.

use rayon::prelude::*;

use super::{
    optimal_decoding_for, ClassicalStrategy, ExactProbability, GameError, GameSpec,
};

/// Counter values processed per work unit; fixed so results do not depend on
/// the number of threads.
const CHUNK: u64 = 1 << 14;

/// Outcome of the exhaustive search: the exact optimum and a strategy
/// achieving it (the one with the smallest encoding counter).
#[derive(Clone, Debug)]
pub struct ClassicalOptimum {
    pub value: ExactProbability,
    pub strategy: ClassicalStrategy,
    pub encodings_searched: u64,
}

/// Exhaustively computes the optimal classical success probability.
///
/// With `parity_oblivious` set, encodings that leak parity are discarded;
/// otherwise every encoding onto at most `d` symbols competes. Each encoding
/// is completed with its optimal decodings. `d = 2, 3` run quickly; `d = 4`
/// (2^32 encodings) requires `allow_long`; larger alphabets are refused.
pub fn brute_force_classical_bound(
    d: usize,
    parity_oblivious: bool,
    allow_long: bool,
) -> Result<ClassicalOptimum, GameError> {
    let spec = GameSpec::new(d)?;
    if d > 4 {
        let approx = (d as f64).powi((d * d) as i32);
        return Err(GameError::SearchInfeasible { d, approx });
    }
    let dd = spec.string_count();
    let total: u64 = (d as u64).pow(dd as u32);
    if d == 4 && !allow_long {
        return Err(GameError::SearchRefused {
            d,
            encodings: total,
        });
    }

    let chunks = total.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            scan_range(d, parity_oblivious, start, end)
        })
        .reduce(
            || (0u32, u64::MAX),
            |a, b| {
                // Higher score wins; ties go to the smaller counter.
                match a.0.cmp(&b.0) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => {
                        if a.1 <= b.1 {
                            a
                        } else {
                            b
                        }
                    }
                }
            },
        );

    let (score, counter) = best;
    debug_assert!(counter < total, "search space never empties");
    let encoding = decode_counter(d, counter);
    let strategy = optimal_decoding_for(d, &encoding)?;
    let value = ExactProbability::new(score as u64, 2 * dd as u64)?;
    debug_assert_eq!(strategy.success(), value);
    Ok(ClassicalOptimum {
        value,
        strategy,
        encodings_searched: total,
    })
}

/// Digits of `counter` in base `d`, most significant first (string index 0).
fn decode_counter(d: usize, counter: u64) -> Vec<usize> {
    let dd = d * d;
    let mut digits = vec![0usize; dd];
    let mut rest = counter;
    for i in (0..dd).rev() {
        digits[i] = (rest % d as u64) as usize;
        rest /= d as u64;
    }
    digits
}

/// Scans counters in `[start, end)` and returns the best (score, counter).
fn scan_range(d: usize, parity_oblivious: bool, start: u64, end: u64) -> (u32, u64) {
    let dd = d * d;
    let mut digits = decode_counter(d, start);
    let mut best = (0u32, u64::MAX);

    // Per-symbol counts, laid out as symbol * d + value; d <= 4 so 16 slots.
    let mut by_x1 = [0u8; 16];
    let mut by_x2 = [0u8; 16];
    let mut by_parity = [0u8; 16];

    for counter in start..end {
        by_x1[..d * d].fill(0);
        by_x2[..d * d].fill(0);
        by_parity[..d * d].fill(0);
        for (idx, &s) in digits.iter().enumerate() {
            let x1 = idx / d;
            let x2 = idx % d;
            by_x1[s * d + x1] += 1;
            by_x2[s * d + x2] += 1;
            by_parity[s * d + (x1 + x2) % d] += 1;
        }

        let oblivious = !parity_oblivious
            || (0..d).all(|s| {
                let row = &by_parity[s * d..(s + 1) * d];
                row.iter().all(|&c| c == row[0])
            });

        if oblivious {
            let mut score = 0u32;
            for s in 0..d {
                let m1 = by_x1[s * d..(s + 1) * d].iter().copied().max().unwrap();
                let m2 = by_x2[s * d..(s + 1) * d].iter().copied().max().unwrap();
                score += m1 as u32 + m2 as u32;
            }
            if score > best.0 || (score == best.0 && counter < best.1) {
                best = (score, counter);
            }
        }

        // Odometer step to the next encoding.
        for i in (0..dd).rev() {
            digits[i] += 1;
            if digits[i] == d {
                digits[i] = 0;
            } else {
                break;
            }
        }
    }
    best
}
