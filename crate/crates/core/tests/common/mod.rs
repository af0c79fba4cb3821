#![allow(dead_code)]

use plst::pv::{Alphabet, PStr};
use plst::trie::PsTrie;
use plst::Plst;
use rand::seq::SliceRandom;
use rand::Rng;

/// Constants `a b c`, parameters `x y z w`.
pub fn mixed_alphabet() -> Alphabet {
    Alphabet::with_params(b"xyzw")
}

/// Random letters drawn from `pool`.
pub fn random_letters<R: Rng>(rng: &mut R, len: usize, pool: &[u8]) -> Vec<u8> {
    (0..len).map(|_| *pool.choose(rng).unwrap()).collect()
}

/// A random pool of 1 to 3 constants and 1 to 3 parameters, or a one-sided
/// pool now and then.
pub fn random_pool<R: Rng>(rng: &mut R) -> Vec<u8> {
    let consts = &b"abc"[..rng.gen_range(0..=3)];
    let params = &b"xyz"[..rng.gen_range(0..=3)];
    let mut pool = [consts, params].concat();
    if pool.is_empty() {
        pool.push(b'x');
    }
    pool
}

/// Renames the parameters of `letters` by a random injective map into `xyzw`.
pub fn rename_params<R: Rng>(rng: &mut R, letters: &[u8]) -> Vec<u8> {
    let mut target = b"xyzw".to_vec();
    target.shuffle(rng);
    letters
        .iter()
        .map(|&b| match b {
            b'x' => target[0],
            b'y' => target[1],
            b'z' => target[2],
            b'w' => target[3],
            other => other,
        })
        .collect()
}

/// Counts edges whose recovered label differs from the trie path between
/// the corresponding trie nodes. PLST nodes are located in the trie through
/// their depth and a leaf below them, never through labels.
pub fn label_discrepancies(text: &PStr) -> usize {
    let trie = PsTrie::build(text, 50_000_000).unwrap();
    let plst = Plst::from_trie(&trie).unwrap();
    let image: Vec<_> = (0..plst.node_count() as u32)
        .map(|v| {
            let s = *plst.leaves_below(v).iter().min().unwrap();
            let mut t = trie.leaf_of_suffix(s);
            while trie.depth(t) > plst.depth(v) {
                t = trie.parent(t).unwrap();
            }
            t
        })
        .collect();
    plst.edges()
        .iter()
        .enumerate()
        .filter(|(e, edge)| {
            let path = trie.path_label(image[edge.parent as usize], image[edge.child as usize]);
            path.as_ref() != Some(&plst.materialize_label(*e as u32))
        })
        .count()
}
