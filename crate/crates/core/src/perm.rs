//! Permutation words and the generator actions used by every family.
//!
//! A word `x_0 x_1 … x_{n-1}` lists the images of `0, 1, …, n-1`. Symbols are
//! single decimal digits, so the degree is capped at [`MAX_DEGREE`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermWord {
    len: u8,
    entries: [u8; MAX_DEGREE],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Names the generator `(0 1 i)` of a star digraph, `2 <= i <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex(u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl GenIndex {
    pub fn new(i: usize, n: usize) -> Result<Self> {
        if n < 3 || i < 2 || i >= n {
            return Err(Error::out_of_range("generator index", i, format!("2..={} for degree {n}", n.saturating_sub(1))));
        }
        Ok(GenIndex(i as u8))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl PermWord {
    pub fn new(entries: &[u8]) -> Result<Self> {
        let n = entries.len();
        let text = || entries.iter().map(|d| d.to_string()).collect::<String>();
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::InvalidWord {
                word: text(),
                reason: format!("degree must be in 1..={MAX_DEGREE}"),
            });
        }
        let mut seen = [false; MAX_DEGREE];
        for &x in entries {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::InvalidWord {
                    word: text(),
                    reason: "not a bijection on 0..n".into(),
                });
            }
            seen[x as usize] = true;
        }
        Ok(Self::from_slice_unchecked(entries))
    }

    fn from_slice_unchecked(entries: &[u8]) -> Self {
        let mut buf = [0u8; MAX_DEGREE];
        buf[..entries.len()].copy_from_slice(entries);
        PermWord {
            len: entries.len() as u8,
            entries: buf,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        let v: Vec<u8> = (0..n as u8).collect();
        Self::new(&v)
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.entries[..self.len as usize]
    }

    pub fn parity(&self) -> Parity {
        parity(self)
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Exchanges the symbols at positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> PermWord {
        let mut w = *self;
        w.entries.swap(a, b);
        w
    }

    /// Moves the symbol at position `k` to position `target[k]`.
    ///
    /// `target` must itself be a permutation of `0..degree`.
    pub fn move_positions(&self, target: &[usize]) -> PermWord {
        debug_assert_eq!(target.len(), self.degree());
        let mut w = *self;
        for (k, &t) in target.iter().enumerate() {
            w.entries[t] = self.entries[k];
        }
        w
    }

    /// Every word of degree `n` in lexicographic (= Lehmer rank) order.
    pub fn all(n: usize) -> Result<Vec<PermWord>> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::out_of_range("degree", n, format!("1..={MAX_DEGREE}")));
        }
        (0..factorial(n)).map(|r| lehmer_unrank(r, n)).collect()
    }
}

impl PartialOrd for PermWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_slice().cmp(other.as_slice())
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in self.as_slice() {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermWord({self})")
    }
}

impl FromStr for PermWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match digits {
            Some(d) => PermWord::new(&d),
            None => Err(Error::InvalidWord {
                word: s.to_string(),
                reason: "symbols must be single decimal digits".into(),
            }),
        }
    }
}

impl Serialize for PermWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn parity(w: &PermWord) -> Parity {
    let x = w.as_slice();
    let mut inversions = 0usize;
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if x[a] > x[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// One step along the generator `(0 1 i)`.
///
/// Forward sends `x` to `y` with `y_0 = x_i`, `y_1 = x_0`, `y_i = x_1`.
pub fn apply_star_gen(w: &PermWord, i: GenIndex, direction: Direction) -> Result<PermWord> {
    let i = i.get();
    if i >= w.degree() {
        return Err(Error::out_of_range("generator index", i, format!("2..={}", w.degree().saturating_sub(1))));
    }
    let x = w.as_slice();
    let mut y = *w;
    match direction {
        Direction::Forward => {
            y.entries[0] = x[i];
            y.entries[1] = x[0];
            y.entries[i] = x[1];
        }
        Direction::Inverse => {
            y.entries[0] = x[1];
            y.entries[1] = x[i];
            y.entries[i] = x[0];
        }
    }
    Ok(y)
}

/// `x` if `x < i`, else `x + 1`.
pub fn phi_shift(x: u8, i: u8, n: usize) -> Result<u8> {
    if x as usize >= n {
        return Err(Error::out_of_range("symbol", x, format!("0..{n}")));
    }
    if i as usize > n {
        return Err(Error::out_of_range("insertion symbol", i, format!("0..={n}")));
    }
    Ok(if x < i { x } else { x + 1 })
}

/// Embeds an even word of degree `n` into degree `n + 1`.
///
/// Shifts every symbol past `i`, exchanges the first two symbols when
/// `i + j` is odd, and inserts `i` at position `j`. The swap keeps the
/// output even: inserting `i` at `j` changes the inversion count by
/// `i + j - 2a` for some `a`.
pub fn zeta_embed(w: &PermWord, i: usize, j: usize) -> Result<PermWord> {
    let n = w.degree();
    if n < 2 || n + 1 > MAX_DEGREE {
        return Err(Error::out_of_range("degree", n, format!("2..={}", MAX_DEGREE - 1)));
    }
    if i > n {
        return Err(Error::out_of_range("i", i, format!("0..={n}")));
    }
    if !(2..=n).contains(&j) {
        return Err(Error::out_of_range("j", j, format!("2..={n}")));
    }
    if !w.is_even() {
        return Err(Error::OddWord(w.to_string()));
    }
    let mut out = Vec::with_capacity(n + 1);
    for &x in w.as_slice() {
        out.push(if (x as usize) < i { x } else { x + 1 });
    }
    if (i + j) % 2 == 1 {
        out.swap(0, 1);
    }
    out.insert(j, i as u8);
    Ok(PermWord::from_slice_unchecked(&out))
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rank in the factorial number system; lexicographic order on words.
pub fn lehmer_rank(w: &PermWord) -> u64 {
    let x = w.as_slice();
    let n = x.len();
    let mut rank = 0u64;
    for a in 0..n {
        let smaller_after = x[a + 1..].iter().filter(|&&y| y < x[a]).count() as u64;
        rank = rank * (n - a) as u64 + smaller_after;
    }
    rank
}

pub fn lehmer_unrank(rank: u64, n: usize) -> Result<PermWord> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::out_of_range("degree", n, format!("1..={MAX_DEGREE}")));
    }
    let total = factorial(n);
    if rank >= total {
        return Err(Error::out_of_range("rank", rank, format!("0..{total}")));
    }
    let mut digits = vec![0u64; n];
    let mut r = rank;
    for a in (0..n).rev() {
        let base = (n - a) as u64;
        digits[a] = r % base;
        r /= base;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let out: Vec<u8> = digits.iter().map(|&d| pool.remove(d as usize)).collect();
    Ok(PermWord::from_slice_unchecked(&out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> PermWord {
        s.parse().unwrap()
    }

    fn fwd(s: &str, i: usize) -> String {
        let x = w(s);
        apply_star_gen(&x, GenIndex::new(i, x.degree()).unwrap(), Direction::Forward)
            .unwrap()
            .to_string()
    }

    #[test]
    fn parity_examples() {
        assert_eq!(w("0123").parity(), Parity::Even);
        assert_eq!(w("1320").parity(), Parity::Even);
        assert_eq!(w("1032").parity(), Parity::Even);
        assert_eq!(w("0132").parity(), Parity::Odd);
    }

    #[test]
    fn star_generator_reproduces_printed_triangles() {
        for tri in [["0123", "3021", "1320"], ["1203", "3102", "2301"], ["2013", "3210", "0312"]] {
            for k in 0..3 {
                assert_eq!(fwd(tri[k], 3), tri[(k + 1) % 3]);
            }
        }
        assert_eq!(fwd("13042", 2), "01342");
        assert_eq!(fwd("01342", 2), "30142");
        assert_eq!(fwd("30142", 2), "13042");
    }

    #[test]
    fn generator_index_range() {
        assert!(GenIndex::new(1, 4).is_err());
        assert!(GenIndex::new(4, 4).is_err());
        assert!(GenIndex::new(2, 2).is_err());
        let g = GenIndex::new(4, 5).unwrap();
        assert!(apply_star_gen(&w("0123"), g, Direction::Forward).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_shift(0, 0, 2).unwrap(), 1);
        assert_eq!(phi_shift(2, 3, 3).unwrap(), 2);
        assert_eq!(phi_shift(1, 1, 2).unwrap(), 2);
        assert!(phi_shift(3, 0, 3).is_err());
        assert!(phi_shift(0, 4, 3).is_err());
    }

    #[test]
    fn phi_is_monotone_and_skips_i() {
        for n in 1..=9usize {
            for i in 0..=n as u8 {
                let img: Vec<u8> = (0..n as u8).map(|x| phi_shift(x, i, n).unwrap()).collect();
                assert!(img.windows(2).all(|p| p[0] < p[1]));
                assert!(!img.contains(&i));
            }
        }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_embed(&w("0123"), 1, 4).unwrap(), w("20341"));
        assert_eq!(zeta_embed(&w("012"), 3, 2).unwrap(), w("1032"));
        assert_eq!(zeta_embed(&w("01"), 2, 2).unwrap(), w("012"));
        assert_eq!(zeta_embed(&w("01"), 0, 2).unwrap(), w("120"));
        assert_eq!(zeta_embed(&w("01"), 1, 2).unwrap(), w("201"));
        for x in ["012", "120", "201"] {
            assert_eq!(zeta_embed(&w(x), 3, 3).unwrap().to_string(), format!("{x}3"));
        }
        assert!(matches!(zeta_embed(&w("0132"), 1, 2), Err(Error::OddWord(_))));
        assert!(zeta_embed(&w("0123"), 5, 2).is_err());
        assert!(zeta_embed(&w("0123"), 1, 1).is_err());
    }

    #[test]
    fn zeta_even_injective_and_images_distinct() {
        for n in 2..=5 {
            let evens: Vec<PermWord> = PermWord::all(n).unwrap().into_iter().filter(|x| x.is_even()).collect();
            let mut images = std::collections::BTreeSet::new();
            for i in 0..=n {
                for j in 2..=n {
                    let img: std::collections::BTreeSet<PermWord> =
                        evens.iter().map(|x| zeta_embed(x, i, j).unwrap()).collect();
                    assert_eq!(img.len(), evens.len(), "not injective at n={n} i={i} j={j}");
                    assert!(img.iter().all(|y| y.is_even()));
                    assert!(images.insert(img), "repeated image at n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(lehmer_rank(&w("0123")), 0);
        assert_eq!(lehmer_rank(&w("3210")), 23);
        assert!(lehmer_unrank(24, 4).is_err());
        for r in 0..24 {
            assert_eq!(lehmer_rank(&lehmer_unrank(r, 4).unwrap()), r);
        }
        // lexicographic order of the exhaustive list
        let all = PermWord::all(4).unwrap();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn parsing_rejects_bad_words() {
        assert!("0113".parse::<PermWord>().is_err());
        assert!("01a".parse::<PermWord>().is_err());
        assert!("".parse::<PermWord>().is_err());
        assert_eq!(w("30142").to_string(), "30142");
    }

    fn word_strategy() -> impl Strategy<Value = PermWord> {
        (3usize..=MAX_DEGREE)
            .prop_flat_map(|n| (Just(n), 0..factorial(n)))
            .prop_map(|(n, r)| lehmer_unrank(r, n).unwrap())
    }

    proptest! {
        #[test]
        fn generator_has_order_three(x in word_strategy(), pick in 0usize..8) {
            let i = GenIndex::new(2 + pick % (x.degree() - 2), x.degree()).unwrap();
            let mut y = x;
            for _ in 0..3 {
                y = apply_star_gen(&y, i, Direction::Forward).unwrap();
            }
            prop_assert_eq!(y, x);
            let there = apply_star_gen(&x, i, Direction::Forward).unwrap();
            prop_assert_eq!(apply_star_gen(&there, i, Direction::Inverse).unwrap(), x);
            prop_assert_eq!(there.parity(), x.parity());
        }

        #[test]
        fn rank_roundtrip(x in word_strategy()) {
            prop_assert_eq!(lehmer_unrank(lehmer_rank(&x), x.degree()).unwrap(), x);
        }
    }
}
