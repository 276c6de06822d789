#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use braidrep::BraidWord;
use rand::Rng;

/// Decides equality of positive braid words by breadth-first search over
/// single applications of the braid relations. Braid relations preserve
/// word length, so the class of a positive word is finite and the search
/// is complete.
pub struct RewriteOracle {
    class_of: HashMap<Vec<u8>, usize>,
}

impl RewriteOracle {
    pub fn new() -> Self {
        RewriteOracle {
            class_of: HashMap::new(),
        }
    }

    fn neighbours(w: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            if i + 1 < w.len() && w[i].abs_diff(w[i + 1]) >= 2 {
                let mut v = w.to_vec();
                v.swap(i, i + 1);
                out.push(v);
            }
            if i + 2 < w.len() && w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1 {
                let mut v = w.to_vec();
                v[i] = w[i + 1];
                v[i + 1] = w[i];
                v[i + 2] = w[i + 1];
                out.push(v);
            }
        }
        out
    }

    /// Class id of a positive word (1-based generator letters).
    pub fn class(&mut self, w: &[u8]) -> usize {
        if let Some(&c) = self.class_of.get(w) {
            return c;
        }
        let id = self.class_of.len();
        let mut queue = VecDeque::from([w.to_vec()]);
        self.class_of.insert(w.to_vec(), id);
        while let Some(cur) = queue.pop_front() {
            for n in Self::neighbours(&cur) {
                if !self.class_of.contains_key(&n) {
                    self.class_of.insert(n.clone(), id);
                    queue.push_back(n);
                }
            }
        }
        id
    }
}

/// All words of length `len` over letters `1..=gens`.
pub fn all_positive_words(gens: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=gens).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn to_braid_word(w: &[u8]) -> BraidWord {
    BraidWord::new(w.iter().map(|&l| l as i32).collect())
}

/// Uniformly random signed word of exactly `len` letters.
pub fn random_signed_word(rng: &mut impl Rng, rank: usize, len: usize) -> BraidWord {
    BraidWord::new(
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=rank as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect(),
    )
}
