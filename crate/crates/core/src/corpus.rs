//! Deterministic text families used by the experiments.
//!
//! Generators return strings without the sentinel; callers append `$`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pv::{PStr, PSym};

/// Whether generated letters are tagged as constants or parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Constant,
    Parameter,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Constant, Mode::Parameter];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Constant => "constant",
            Mode::Parameter => "p-string",
        }
    }
}

/// Text families known to the generator and the experiment harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Fibonacci,
    ThueMorse,
    PeriodDoubling,
    Random,
    AppendixTn,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fibonacci => "fibonacci",
            Family::ThueMorse => "thue_morse",
            Family::PeriodDoubling => "period_doubling",
            Family::Random => "random",
            Family::AppendixTn => "appendix_tn",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "fibonacci" => Family::Fibonacci,
            "thue_morse" => Family::ThueMorse,
            "period_doubling" => Family::PeriodDoubling,
            "random" => Family::Random,
            "appendix_tn" => Family::AppendixTn,
            _ => return None,
        })
    }
}

/// A fully determined corpus request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: Family,
    /// Index `k` for the word families, length for `random`, `n` for `appendix_tn`.
    pub param: usize,
    pub mode: Mode,
    /// Only used by the random family.
    pub seed: u64,
}

impl CorpusSpec {
    /// Generates the text, without sentinel. `appendix_tn` carries its own
    /// tagging and ignores `mode`.
    pub fn generate(&self) -> PStr {
        match self.family {
            Family::Fibonacci => tag(&fibonacci(self.param), self.mode),
            Family::ThueMorse => tag(&thue_morse(self.param), self.mode),
            Family::PeriodDoubling => tag(&period_doubling(self.param), self.mode),
            Family::Random => random_pstring(self.param, 2, self.mode, self.seed),
            Family::AppendixTn => {
                let mut t = appendix_tn(self.param).into_vec();
                t.pop();
                t.into()
            }
        }
    }
}

/// Tags every byte as a constant or a parameter.
pub fn tag(letters: &[u8], mode: Mode) -> PStr {
    letters
        .iter()
        .map(|&b| match mode {
            Mode::Constant => PSym::Const(b as u32),
            Mode::Parameter => PSym::Param(b as u32),
        })
        .collect()
}

/// `Fib_1 = b`, `Fib_2 = a`, `Fib_k = Fib_{k-1} Fib_{k-2}`.
pub fn fibonacci(k: usize) -> Vec<u8> {
    assert!(k >= 1, "Fibonacci strings are indexed from 1");
    let (mut older, mut old) = (b"b".to_vec(), b"a".to_vec());
    if k == 1 {
        return older;
    }
    for _ in 2..k {
        let mut next = old.clone();
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut old, next);
    }
    old
}

fn morphism(k: usize, image_of_b: &[u8; 2]) -> Vec<u8> {
    let mut w = vec![b'a'];
    for _ in 0..k {
        w = w
            .iter()
            .flat_map(|&c| if c == b'a' { *b"ab" } else { *image_of_b })
            .collect();
    }
    w
}

/// `k` applications of `a -> ab, b -> ba` to `a`.
pub fn thue_morse(k: usize) -> Vec<u8> {
    morphism(k, b"ba")
}

/// `k` applications of `a -> ab, b -> aa` to `a`.
pub fn period_doubling(k: usize) -> Vec<u8> {
    morphism(k, b"aa")
}

/// `n` symbols drawn uniformly from the first `alphabet_size` letters
/// starting at `a`, using ChaCha8 seeded with `seed`.
pub fn random_pstring(n: usize, alphabet_size: u8, mode: Mode, seed: u64) -> PStr {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters: Vec<u8> = (0..n)
        .map(|_| b'a' + rng.gen_range(0..alphabet_size))
        .collect();
    tag(&letters, mode)
}

/// The family `x1 a1 ... xn an x1 a1 ... xn an y1 a1 ... yn an z $` whose
/// Type 1 suffix-link closure grows quadratically.
///
/// Naming: constants `a_i` are the letters from `a`; parameters continue from
/// `t` as `x_1..x_n`, then `y_1..y_n`, then `z`. For `n = 3` this spells
/// `taubvctaubvcwaxbycz$`; for larger `n` codes run past ASCII `z`.
pub fn appendix_tn(n: usize) -> PStr {
    assert!(n >= 1);
    let a = |i: usize| PSym::Const(b'a' as u32 + i as u32 - 1);
    let x = |i: usize| PSym::Param(b't' as u32 + i as u32 - 1);
    let y = |i: usize| PSym::Param(b't' as u32 + (n + i) as u32 - 1);
    let z = PSym::Param(b't' as u32 + 2 * n as u32);
    let mut out = Vec::with_capacity(6 * n + 2);
    for _ in 0..2 {
        for i in 1..=n {
            out.push(x(i));
            out.push(a(i));
        }
    }
    for i in 1..=n {
        out.push(y(i));
        out.push(a(i));
    }
    out.push(z);
    out.push(crate::pv::SENTINEL);
    out.into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pv::{prev_encode, Alphabet, PvStr};

    #[test]
    fn fibonacci_words() {
        assert_eq!(fibonacci(1), b"b");
        assert_eq!(fibonacci(2), b"a");
        assert_eq!(fibonacci(5), b"abaab");
        assert_eq!(fibonacci(11).len(), 89);
        let lens: Vec<usize> = (1..=10).map(|k| fibonacci(k).len()).collect();
        assert_eq!(lens, [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
    }

    #[test]
    fn morphic_words() {
        assert_eq!(thue_morse(0), b"a");
        assert_eq!(thue_morse(2), b"abba");
        assert_eq!(period_doubling(2), b"abaa");
        assert_eq!(thue_morse(4).len(), 16);
        assert_eq!(period_doubling(13).len(), 8192);
    }

    #[test]
    fn random_strings_are_seeded() {
        assert!(random_pstring(0, 2, Mode::Constant, 1).is_empty());
        let a = random_pstring(100, 2, Mode::Parameter, 42);
        assert_eq!(a, random_pstring(100, 2, Mode::Parameter, 42));
        assert_ne!(a, random_pstring(100, 2, Mode::Parameter, 43));
        let c = random_pstring(100, 2, Mode::Constant, 42);
        assert_eq!(Alphabet::decode(&a), Alphabet::decode(&c));
    }

    #[test]
    fn random_symbol_frequency_is_balanced() {
        let n = 10_240;
        let w = random_pstring(n, 2, Mode::Constant, 7);
        let a_count = w.iter().filter(|s| s.code() == b'a' as u32).count() as f64;
        let sigma = (n as f64 * 0.25).sqrt();
        assert!((a_count - n as f64 / 2.0).abs() <= 3.0 * sigma, "{a_count}");
    }

    #[test]
    fn counterexample_family() {
        let t3 = appendix_tn(3);
        assert_eq!(t3.len(), 20);
        let params = Alphabet::with_params(b"tuvwxyz");
        assert_eq!(t3, params.encode(b"taubvctaubvcwaxbycz$"));
        assert_eq!(
            prev_encode(&t3),
            PvStr::parse("0 a 0 b 0 c 6 a 6 b 6 c 0 a 0 b 0 c 0 $").unwrap()
        );
        for n in 1..=8 {
            assert_eq!(appendix_tn(n).len(), 6 * n + 2);
        }
    }

    #[test]
    fn modes_share_letters() {
        for fam in [Family::Fibonacci, Family::ThueMorse, Family::PeriodDoubling] {
            let c = CorpusSpec {
                family: fam,
                param: 6,
                mode: Mode::Constant,
                seed: 0,
            };
            let p = CorpusSpec {
                mode: Mode::Parameter,
                ..c
            };
            assert_eq!(
                Alphabet::decode(&c.generate()),
                Alphabet::decode(&p.generate())
            );
            assert!(p.generate().iter().all(|s| s.is_param()));
        }
    }
}
