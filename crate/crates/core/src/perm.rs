//! Permutations of `{1, …, m}` in one-line form.
//!
//! Products are read left to right: `a.compose(&b)` first applies `a`, then
//! `b`, so `(a·b)(i) = b(a(i))`. This is the same order in which letters of
//! a braid word act, which makes the projection from braids to permutations
//! a homomorphism without any reversal.
//!
//! Points are 1-based in every textual form and 0-based in storage.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within a cycle")]
    RepeatedInCycle(usize),
    #[error("not a bijection: {0:?}")]
    NotBijection(Vec<usize>),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

/// An element of the symmetric group `S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // image[i] = π(i + 1) - 1
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, PermError> {
        let degree = one_line.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &p in one_line {
            if p == 0 || p > degree || seen[p - 1] {
                return Err(PermError::NotBijection(one_line.to_vec()));
            }
            seen[p - 1] = true;
        }
        Ok(Permutation {
            image: one_line.iter().map(|p| p - 1).collect(),
        })
    }

    /// 0-based constructor for internal use; the caller guarantees bijectivity.
    pub(crate) fn from_zero_based_unchecked(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { image }
    }

    /// The transposition `(i, i+1)` (1-based `i`).
    pub fn adjacent_transposition(degree: usize, i: usize) -> Self {
        assert!(i >= 1 && i < degree, "σ{i} is not a generator of S_{degree}");
        let mut image: Vec<usize> = (0..degree).collect();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// Left-to-right product of (possibly overlapping) cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut seen = Vec::with_capacity(cycle.len());
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::OutOfRange { point: p, degree });
                }
                if seen.contains(&p) {
                    return Err(PermError::RepeatedInCycle(p));
                }
                seen.push(p);
            }
            let mut c = Permutation::identity(degree);
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                c.image[p - 1] = q - 1;
            }
            acc = acc.compose_unchecked(&c);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `π(point)` with 1-based points.
    pub fn apply(&self, point: usize) -> usize {
        self.image[point - 1] + 1
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|p| p + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p] = i;
        }
        Permutation { image }
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`; the Coxeter length in `S_m`.
    pub fn inversions(&self) -> usize {
        let n = self.image.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles, each starting at its minimum, sorted by minimum,
    /// fixed points omitted.
    pub fn to_cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle notation with explicit separators, e.g. `(1,2)(3,4)`; `()` for
    /// the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.to_cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    /// Whether `s_i · π` is shorter than `π` (1-based `i`), i.e. `π(i) > π(i+1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.image[i - 1] > self.image[i]
    }

    /// Whether `π · s_i` is shorter than `π` (1-based `i`), i.e. `π⁻¹(i) > π⁻¹(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let a = self.image.iter().position(|&p| p == i - 1).unwrap();
        let b = self.image.iter().position(|&p| p == i).unwrap();
        a > b
    }

    /// `s_i · π`: swaps positions `i` and `i+1` of the one-line form.
    pub(crate) fn left_mul_adjacent(&self, i: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// `π · s_i`: swaps the values `i` and `i+1`.
    pub(crate) fn right_mul_adjacent(&self, i: usize) -> Permutation {
        let (a, b) = (i - 1, i);
        Permutation {
            image: self
                .image
                .iter()
                .map(|&p| if p == a { b } else if p == b { a } else { p })
                .collect(),
        }
    }

    /// Parses either `[2,1,4,3]` or `(1,2)(3,4)` at the given degree. One-line
    /// input must have exactly `degree` entries.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Self, PermError> {
        let t = text.trim();
        if t.starts_with('[') {
            let p: Permutation = t.parse()?;
            if p.degree() != degree {
                return Err(PermError::DegreeMismatch(p.degree(), degree));
            }
            return Ok(p);
        }
        let cycles = parse_cycles(t)?;
        Permutation::from_cycles(degree, &cycles)
    }
}

fn parse_points(body: &str) -> Result<Vec<usize>, PermError> {
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| PermError::Parse(format!("bad point {s:?}")))
        })
        .collect()
}

/// Parses `(1,2)(3,4)` / `(1 2)(3 4)`; `()` is the empty product.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::Parse(format!("expected '(' in {text:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {text:?}")))?;
        let points = parse_points(&rest[1..close])?;
        if points.len() == 1 {
            return Err(PermError::Parse(format!(
                "ambiguous cycle ({}) - separate points with commas",
                &rest[1..close]
            )));
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses the one-line form `[2,1,4,3]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse(format!("expected [..] in {s:?}")))?;
        Permutation::from_one_line(&parse_points(body)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
