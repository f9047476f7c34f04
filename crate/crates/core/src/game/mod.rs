//! Classical side of the parity-oblivious random access code.
//!
//! Everything here is exact: probabilities are rationals, bounds are
//! computed by exhaustive enumeration, and equalities in tests are
//! tolerance-free. Alice holds a two-dit string over `{0,...,d-1}`, Bob must
//! guess one of the dits, and the message may not leak the string's modular
//! parity. The optimal classical success probability is `(d+1)/(2d)`, which
//! is also the ceiling for any preparation-noncontextual theory, so beating
//! it certifies contextuality.

mod brute;

pub use brute::{brute_force_classical_bound, ClassicalOptimum};

use num_rational::Ratio;
use thiserror::Error;

/// A single alphabet symbol ("dit").
pub type Dit = u8;

/// Largest supported alphabet; partitions use `u8` dits.
pub const MAX_ALPHABET: usize = 255;

#[derive(Debug, Error)]
pub enum GameError {
    #[error("alphabet size must be at least 2 (got {d})")]
    AlphabetTooSmall { d: usize },
    #[error("alphabet size {d} exceeds the supported maximum of {MAX_ALPHABET}")]
    AlphabetTooLarge { d: usize },
    #[error(
        "exhaustive search for d={d} spans {encodings} encodings; pass the long-run flag to proceed"
    )]
    SearchRefused { d: usize, encodings: u64 },
    #[error("exhaustive search for d={d} spans about {approx:.3e} encodings and is not tractable")]
    SearchInfeasible { d: usize, approx: f64 },
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("invalid probability {numer}/{denom}")]
    InvalidProbability { numer: u64, denom: u64 },
    #[error("strategy parse error: {0}")]
    Parse(String),
}

/// The game instance: two-dit strings over a `d`-letter alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameSpec {
    d: usize,
}

impl GameSpec {
    pub fn new(d: usize) -> Result<Self, GameError> {
        if d < 2 {
            return Err(GameError::AlphabetTooSmall { d });
        }
        if d > MAX_ALPHABET {
            return Err(GameError::AlphabetTooLarge { d });
        }
        Ok(Self { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of input strings, `d^2`.
    pub fn string_count(&self) -> usize {
        self.d * self.d
    }

    /// All strings in index order: 00, 01, ..., (d-1)(d-1).
    pub fn strings(&self) -> impl Iterator<Item = (Dit, Dit)> + '_ {
        let d = self.d as Dit;
        (0..d).flat_map(move |x1| (0..d).map(move |x2| (x1, x2)))
    }

    /// Index of a string in the enumeration order above.
    pub fn string_index(&self, x1: Dit, x2: Dit) -> usize {
        x1 as usize * self.d + x2 as usize
    }

    /// Modular parity `x1 + x2 mod d`, the quantity Bob must learn nothing about.
    pub fn parity(&self, x1: Dit, x2: Dit) -> usize {
        (x1 as usize + x2 as usize) % self.d
    }
}

/// The `d` parity classes over the `d^2` strings: class `l` holds every
/// string with `x1 + x2 = l (mod d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    d: usize,
    classes: Vec<Vec<(Dit, Dit)>>,
}

impl PartitionTable {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Class `l` in string-index order.
    pub fn class(&self, l: usize) -> &[(Dit, Dit)] {
        &self.classes[l]
    }

    pub fn classes(&self) -> &[Vec<(Dit, Dit)>] {
        &self.classes
    }

    pub fn class_of(&self, x1: Dit, x2: Dit) -> usize {
        (x1 as usize + x2 as usize) % self.d
    }
}

/// Builds the parity partition table for alphabet size `d`.
pub fn parity_partitions(d: usize) -> Result<PartitionTable, GameError> {
    let spec = GameSpec::new(d)?;
    let mut classes = vec![Vec::with_capacity(d); d];
    for (x1, x2) in spec.strings() {
        classes[spec.parity(x1, x2)].push((x1, x2));
    }
    Ok(PartitionTable { d, classes })
}

/// A deterministic encoding/decoding pair.
///
/// `encoding[i]` is the symbol Alice sends for the string with index `i`;
/// `decodings[y][s]` is Bob's guess for dit `y+1` on receiving symbol `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalStrategy {
    d: usize,
    encoding: Vec<usize>,
    decodings: [Vec<Dit>; 2],
}

impl ClassicalStrategy {
    pub fn new(
        d: usize,
        encoding: Vec<usize>,
        decodings: [Vec<Dit>; 2],
    ) -> Result<Self, GameError> {
        let spec = GameSpec::new(d)?;
        if encoding.len() != spec.string_count() {
            return Err(GameError::InvalidStrategy(format!(
                "encoding must cover all {} strings, got {}",
                spec.string_count(),
                encoding.len()
            )));
        }
        let max_symbol = *encoding.iter().max().expect("d >= 2");
        for (y, dec) in decodings.iter().enumerate() {
            if dec.len() <= max_symbol {
                return Err(GameError::InvalidStrategy(format!(
                    "decoding {} covers {} symbols but symbol {} is used",
                    y + 1,
                    dec.len(),
                    max_symbol
                )));
            }
            if let Some(&g) = dec.iter().find(|&&g| g as usize >= d) {
                return Err(GameError::InvalidStrategy(format!(
                    "decoding {} guesses {} outside the alphabet",
                    y + 1,
                    g
                )));
            }
        }
        Ok(Self {
            d,
            encoding,
            decodings,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn encoding(&self) -> &[usize] {
        &self.encoding
    }

    pub fn decoding(&self, y: usize) -> &[Dit] {
        &self.decodings[y]
    }

    /// Number of symbols in use (max used symbol + 1).
    pub fn symbol_count(&self) -> usize {
        self.encoding.iter().max().map_or(0, |m| m + 1)
    }

    /// Whether receiving a symbol tells Bob anything about the parity.
    ///
    /// The message is oblivious exactly when, for every used symbol, the
    /// preimage class meets every parity class in the same number of
    /// strings; any imbalance shifts Bob's posterior over parities.
    pub fn leaks_parity(&self) -> bool {
        let spec = GameSpec { d: self.d };
        let symbols = self.symbol_count();
        let mut counts = vec![0u32; symbols * self.d];
        for (x1, x2) in spec.strings() {
            let s = self.encoding[spec.string_index(x1, x2)];
            counts[s * self.d + spec.parity(x1, x2)] += 1;
        }
        for s in 0..symbols {
            let row = &counts[s * self.d..(s + 1) * self.d];
            if row.iter().sum::<u32>() == 0 {
                continue; // unused symbol
            }
            if row.iter().any(|&c| c != row[0]) {
                return true;
            }
        }
        false
    }

    /// Exact average success probability over uniform strings and queries.
    pub fn success(&self) -> ExactProbability {
        let spec = GameSpec { d: self.d };
        let mut hits = 0u64;
        for (x1, x2) in spec.strings() {
            let s = self.encoding[spec.string_index(x1, x2)];
            if self.decodings[0][s] == x1 {
                hits += 1;
            }
            if self.decodings[1][s] == x2 {
                hits += 1;
            }
        }
        ExactProbability::new(hits, 2 * spec.string_count() as u64)
            .expect("hit count bounded by trials")
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("d={}\n", self.d));
        out.push_str("encode:");
        for s in &self.encoding {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
        for (y, dec) in self.decodings.iter().enumerate() {
            out.push_str(&format!("decode{}:", y + 1));
            for g in dec {
                out.push_str(&format!(" {g}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format produced by [`ClassicalStrategy::to_text`].
    pub fn from_text(text: &str) -> Result<Self, GameError> {
        let mut d = None;
        let mut encoding = None;
        let mut decode1 = None;
        let mut decode2 = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("d=") {
                d = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|e| GameError::Parse(format!("bad d line: {e}")))?,
                );
            } else if let Some(rest) = line.strip_prefix("encode:") {
                encoding = Some(parse_numbers::<usize>(rest)?);
            } else if let Some(rest) = line.strip_prefix("decode1:") {
                decode1 = Some(parse_numbers::<Dit>(rest)?);
            } else if let Some(rest) = line.strip_prefix("decode2:") {
                decode2 = Some(parse_numbers::<Dit>(rest)?);
            } else {
                return Err(GameError::Parse(format!("unrecognized line: {line}")));
            }
        }
        let d = d.ok_or_else(|| GameError::Parse("missing d= line".into()))?;
        let encoding = encoding.ok_or_else(|| GameError::Parse("missing encode: line".into()))?;
        let decode1 = decode1.ok_or_else(|| GameError::Parse("missing decode1: line".into()))?;
        let decode2 = decode2.ok_or_else(|| GameError::Parse("missing decode2: line".into()))?;
        Self::new(d, encoding, [decode1, decode2])
    }
}

fn parse_numbers<N: std::str::FromStr>(s: &str) -> Result<Vec<N>, GameError>
where
    N::Err: std::fmt::Display,
{
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<N>()
                .map_err(|e| GameError::Parse(format!("bad number {tok}: {e}")))
        })
        .collect()
}

/// Completes an encoding with the best deterministic decodings.
///
/// For each used symbol and each query, the guess is the majority dit over
/// the symbol's preimage class, ties broken by the smallest dit so the
/// completion is deterministic. No decoding of the same encoding scores
/// higher.
pub fn optimal_decoding_for(d: usize, encoding: &[usize]) -> Result<ClassicalStrategy, GameError> {
    let spec = GameSpec::new(d)?;
    if encoding.len() != spec.string_count() {
        return Err(GameError::InvalidStrategy(format!(
            "encoding must cover all {} strings, got {}",
            spec.string_count(),
            encoding.len()
        )));
    }
    let symbols = encoding.iter().max().expect("d >= 2") + 1;
    let mut counts = vec![[0u32; 2]; symbols * d]; // [symbol * d + dit][y]
    for (x1, x2) in spec.strings() {
        let s = encoding[spec.string_index(x1, x2)];
        counts[s * d + x1 as usize][0] += 1;
        counts[s * d + x2 as usize][1] += 1;
    }
    let mut decodings = [vec![0 as Dit; symbols], vec![0 as Dit; symbols]];
    for s in 0..symbols {
        for y in 0..2 {
            let mut best = (0u32, 0 as Dit);
            for b in 0..d {
                let c = counts[s * d + b][y];
                if c > best.0 {
                    best = (c, b as Dit);
                }
            }
            decodings[y][s] = best.1;
        }
    }
    ClassicalStrategy::new(d, encoding.to_vec(), decodings)
}

/// The preparation-noncontextual ceiling `(d+1)/(2d)`, equal to the optimal
/// classical success probability.
pub fn noncontextual_bound(d: usize) -> Result<ExactProbability, GameError> {
    if d < 2 {
        return Err(GameError::AlphabetTooSmall { d });
    }
    ExactProbability::new(d as u64 + 1, 2 * d as u64)
}

/// An exact probability, stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactProbability(Ratio<u64>);

impl ExactProbability {
    pub fn new(numer: u64, denom: u64) -> Result<Self, GameError> {
        if denom == 0 || numer > denom {
            return Err(GameError::InvalidProbability { numer, denom });
        }
        Ok(Self(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }
}

impl std::fmt::Display for ExactProbability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn position_encoding(d: usize, y: usize) -> Vec<usize> {
        let spec = GameSpec::new(d).unwrap();
        spec.strings()
            .map(|(x1, x2)| if y == 0 { x1 as usize } else { x2 as usize })
            .collect()
    }

    #[test]
    fn partitions_d3_match_the_known_classes() {
        let t = parity_partitions(3).unwrap();
        assert_eq!(t.class(0), &[(0, 0), (1, 2), (2, 1)]);
        assert_eq!(t.class(1), &[(0, 1), (1, 0), (2, 2)]);
        assert_eq!(t.class(2), &[(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn partitions_d2_and_d4() {
        let t = parity_partitions(2).unwrap();
        assert_eq!(t.class(0), &[(0, 0), (1, 1)]);
        assert_eq!(t.class(1), &[(0, 1), (1, 0)]);

        let t = parity_partitions(4).unwrap();
        assert_eq!(t.class(0), &[(0, 0), (1, 3), (2, 2), (3, 1)]);
        assert_eq!(t.class(3), &[(0, 3), (1, 2), (2, 1), (3, 0)]);
    }

    #[test]
    fn partitions_reject_small_alphabets() {
        assert!(matches!(
            parity_partitions(1),
            Err(GameError::AlphabetTooSmall { d: 1 })
        ));
        assert!(matches!(
            parity_partitions(0),
            Err(GameError::AlphabetTooSmall { d: 0 })
        ));
    }

    #[test]
    fn partition_invariants_up_to_d16() {
        for d in 2..=16 {
            let t = parity_partitions(d).unwrap();
            let mut seen = std::collections::HashSet::new();
            for (l, class) in t.classes().iter().enumerate() {
                assert_eq!(class.len(), d, "class size at d={d}");
                for &(x1, x2) in class {
                    assert_eq!((x1 as usize + x2 as usize) % d, l);
                    assert!(seen.insert((x1, x2)), "classes overlap at d={d}");
                }
            }
            assert_eq!(seen.len(), d * d, "union misses strings at d={d}");
        }
    }

    #[test]
    fn position_encodings_do_not_leak() {
        for d in 2..=6 {
            for y in 0..2 {
                let enc = position_encoding(d, y);
                let strat = optimal_decoding_for(d, &enc).unwrap();
                assert!(!strat.leaks_parity(), "position encoding leaked at d={d}");
            }
        }
    }

    #[test]
    fn identity_encoding_leaks() {
        let enc: Vec<usize> = (0..9).collect();
        let strat = ClassicalStrategy::new(3, enc, [vec![0; 9], vec![0; 9]]).unwrap();
        assert!(strat.leaks_parity());
    }

    #[test]
    fn more_than_d_symbols_always_leaks() {
        // Any encoding onto >= d+1 used symbols has a class smaller than d,
        // which must miss some parity class entirely.
        let d = 3;
        for trial in 0..50u64 {
            let mut enc = vec![0usize; 9];
            let mut state = trial.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
            for e in enc.iter_mut() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                *e = (state >> 33) as usize % (d + 1);
            }
            // Force d+1 distinct symbols to be present.
            for s in 0..=d {
                enc[s] = s;
            }
            let strat = optimal_decoding_for(d, &enc).unwrap();
            assert!(strat.leaks_parity(), "encoding {enc:?} should leak");
        }
    }

    #[test]
    fn success_of_first_position_strategy_d3() {
        // Encode x1, guess it exactly, guess the other dit with a constant.
        let enc = position_encoding(3, 0);
        let strat =
            ClassicalStrategy::new(3, enc, [vec![0, 1, 2], vec![0, 0, 0]]).unwrap();
        assert_eq!(strat.success(), ExactProbability::new(2, 3).unwrap());
    }

    #[test]
    fn success_of_constant_strategy_d2() {
        let strat = ClassicalStrategy::new(2, vec![0; 4], [vec![0], vec![0]]).unwrap();
        assert_eq!(strat.success(), ExactProbability::new(1, 2).unwrap());
    }

    #[test]
    fn success_of_second_position_strategy_d2() {
        let enc = position_encoding(2, 1);
        let strat = ClassicalStrategy::new(2, enc, [vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(strat.success(), ExactProbability::new(3, 4).unwrap());
    }

    #[test]
    fn optimal_decoding_is_identity_for_position_encoding() {
        let strat = optimal_decoding_for(2, &position_encoding(2, 0)).unwrap();
        assert_eq!(strat.decoding(0), &[0, 1]);
        let strat = optimal_decoding_for(3, &position_encoding(3, 0)).unwrap();
        assert_eq!(strat.decoding(0), &[0, 1, 2]);
    }

    #[test]
    fn optimal_decoding_breaks_ties_low() {
        let strat = optimal_decoding_for(3, &vec![0; 9]).unwrap();
        assert_eq!(strat.decoding(0), &[0]);
        assert_eq!(strat.decoding(1), &[0]);
    }

    #[test]
    fn optimal_decoding_beats_every_decoding_exhaustively_at_d2() {
        // All encodings onto at most 2 symbols, against all 16 decoding pairs.
        for code in 0..16u32 {
            let enc: Vec<usize> = (0..4).map(|i| ((code >> i) & 1) as usize).collect();
            let best = optimal_decoding_for(2, &enc).unwrap().success();
            for d1 in 0..4u32 {
                for d2 in 0..4u32 {
                    let dec1: Vec<Dit> = (0..2).map(|s| ((d1 >> s) & 1) as Dit).collect();
                    let dec2: Vec<Dit> = (0..2).map(|s| ((d2 >> s) & 1) as Dit).collect();
                    let strat =
                        ClassicalStrategy::new(2, enc.clone(), [dec1, dec2]).unwrap();
                    assert!(strat.success() <= best);
                }
            }
        }
    }

    #[test]
    fn noncontextual_bound_values() {
        assert_eq!(noncontextual_bound(3).unwrap(), ExactProbability::new(2, 3).unwrap());
        assert_eq!(noncontextual_bound(4).unwrap(), ExactProbability::new(5, 8).unwrap());
        assert_eq!(noncontextual_bound(5).unwrap(), ExactProbability::new(3, 5).unwrap());
        assert!(noncontextual_bound(1).is_err());
    }

    #[test]
    fn exact_probability_reduces_and_displays() {
        let p = ExactProbability::new(12, 18).unwrap();
        assert_eq!(p.numer(), 2);
        assert_eq!(p.denom(), 3);
        assert_eq!(p.to_string(), "2/3");
        assert_eq!(ExactProbability::new(4, 4).unwrap().to_string(), "1");
        assert!(ExactProbability::new(3, 2).is_err());
        assert!(ExactProbability::new(1, 0).is_err());
    }

    #[test]
    fn strategy_text_round_trip() {
        let strat = optimal_decoding_for(3, &position_encoding(3, 0)).unwrap();
        let text = strat.to_text();
        let parsed = ClassicalStrategy::from_text(&text).unwrap();
        assert_eq!(parsed, strat);
    }

    #[test]
    fn strategy_parse_rejects_garbage() {
        assert!(ClassicalStrategy::from_text("nonsense").is_err());
        assert!(ClassicalStrategy::from_text("d=3\nencode: 0\n").is_err());
    }

    proptest! {
        /// Relabeling the symbol alphabet and permuting decodings to match
        /// leaves the success probability unchanged.
        #[test]
        fn success_invariant_under_symbol_relabeling(
            enc in proptest::collection::vec(0usize..3, 9),
            dec1 in proptest::collection::vec(0u8..3, 3),
            dec2 in proptest::collection::vec(0u8..3, 3),
            perm_pick in 0usize..6,
        ) {
            let perms: [[usize; 3]; 6] =
                [[0,1,2],[0,2,1],[1,0,2],[1,2,0],[2,0,1],[2,1,0]];
            let perm = perms[perm_pick];
            let strat = ClassicalStrategy::new(3, enc.clone(), [dec1.clone(), dec2.clone()]).unwrap();

            let renc: Vec<usize> = enc.iter().map(|&s| perm[s]).collect();
            let mut rdec1 = vec![0u8; 3];
            let mut rdec2 = vec![0u8; 3];
            for s in 0..3 {
                rdec1[perm[s]] = dec1[s];
                rdec2[perm[s]] = dec2[s];
            }
            let relabeled = ClassicalStrategy::new(3, renc, [rdec1, rdec2]).unwrap();
            prop_assert_eq!(strat.success(), relabeled.success());
        }

        /// Any used symbol class whose size is not a multiple of d leaks.
        #[test]
        fn indivisible_class_sizes_leak(enc in proptest::collection::vec(0usize..3, 9)) {
            let strat = optimal_decoding_for(3, &enc).unwrap();
            let mut sizes = vec![0usize; strat.symbol_count()];
            for &s in strat.encoding() {
                sizes[s] += 1;
            }
            if sizes.iter().any(|&n| n > 0 && n % 3 != 0) {
                prop_assert!(strat.leaks_parity());
            }
        }
    }
}
