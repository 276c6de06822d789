//! Finite Coxeter systems of types `A_n`, `B_n`, `D_n` and `I₂(k)`.
//!
//! Generators are labelled `s1, s2, …` in text and `0, 1, …` in code. For
//! `B_n` the 4-bond joins `s1` and `s2`; for `D_n` the branch node is `s2`,
//! adjacent to `s1`, `s3` and `s4`, and the tail continues `s4 - s5 - …`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("cannot parse Coxeter type {0:?} (expected e.g. A5, B4, D4, I2(7))")]
    Parse(String),
    #[error("type {0} is out of scope: only types A, B, D and I2(k) are supported")]
    OutOfScope(String),
    #[error("{family}{rank} is invalid: rank must be at least {min}")]
    RankOutOfRange {
        family: &'static str,
        rank: usize,
        min: usize,
    },
    #[error("expected {expected} generator images, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("generator images have different degrees")]
    DegreeMismatch,
    #[error("generator images violate relation {0}")]
    RelationViolated(String),
    #[error("closure has {found} elements but {ctype} has order {expected}: the image is not faithful")]
    OrderMismatch {
        ctype: CoxeterType,
        expected: u64,
        found: u64,
    },
    #[error("closure exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("longest element is not unique")]
    NoUniqueLongest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    family: Family,
    param: usize,
}

impl CoxeterType {
    pub fn new(family: Family, param: usize) -> Result<Self, CoxeterError> {
        let (name, min) = match family {
            Family::A => ("A", 1),
            Family::B => ("B", 2),
            Family::D => ("D", 4),
            Family::I2 => ("I2", 2),
        };
        if param < min {
            return Err(CoxeterError::RankOutOfRange {
                family: name,
                rank: param,
                min,
            });
        }
        Ok(CoxeterType { family, param })
    }

    pub fn a(n: usize) -> Result<Self, CoxeterError> {
        Self::new(Family::A, n)
    }

    pub fn b(n: usize) -> Result<Self, CoxeterError> {
        Self::new(Family::B, n)
    }

    pub fn d(n: usize) -> Result<Self, CoxeterError> {
        Self::new(Family::D, n)
    }

    pub fn i2(k: usize) -> Result<Self, CoxeterError> {
        Self::new(Family::I2, k)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank `n` for A/B/D, the bond label `k` for `I₂(k)`.
    pub fn param(&self) -> usize {
        self.param
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.param,
        }
    }

    /// Group order from the classification; `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        let n = self.param as u64;
        let fact = |k: u64| (1..=k).try_fold(1u64, |acc, i| acc.checked_mul(i));
        match self.family {
            Family::A => fact(n + 1),
            Family::B => fact(n)?.checked_mul(1u64.checked_shl(n as u32)?),
            Family::D => fact(n)?.checked_mul(1u64.checked_shl(n as u32 - 1)?),
            Family::I2 => n.checked_mul(2),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.param),
            Family::B => write!(f, "B{}", self.param),
            Family::D => write!(f, "D{}", self.param),
            Family::I2 => write!(f, "I2({})", self.param),
        }
    }
}

const OUT_OF_SCOPE: &[&str] = &["H2", "H3", "H4", "F4", "E6", "E7", "E8", "G2"];

impl FromStr for CoxeterType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        if OUT_OF_SCOPE.contains(&upper.as_str()) {
            return Err(CoxeterError::OutOfScope(upper));
        }
        let bad = || CoxeterError::Parse(s.to_string());
        if let Some(rest) = upper.strip_prefix("I2") {
            let k = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            return CoxeterType::i2(k.trim().parse().map_err(|_| bad())?);
        }
        let (head, num) = upper.split_at(upper.chars().next().map_or(0, |c| c.len_utf8()));
        let n: usize = num.parse().map_err(|_| bad())?;
        match head {
            "A" => CoxeterType::a(n),
            "B" => CoxeterType::b(n),
            "D" => CoxeterType::d(n),
            "H" | "F" | "E" => Err(CoxeterError::OutOfScope(upper.clone())),
            _ => Err(bad()),
        }
    }
}

/// Symmetric matrix of bond labels `m(s, s')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    size: usize,
    entries: Vec<usize>,
}

impl CoxeterMatrix {
    /// Checks symmetry, unit diagonal and off-diagonal entries `≥ 2`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Option<Self> {
        let size = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return None;
            }
            for (j, &v) in row.iter().enumerate() {
                let ok = if i == j { v == 1 } else { v >= 2 && rows[j][i] == v };
                if !ok {
                    return None;
                }
            }
        }
        Some(CoxeterMatrix {
            size,
            entries: rows.concat(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `m(i, j)` for 0-based generator indices.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.size).map(|c| c.to_vec()).collect()
    }
}

pub fn coxeter_matrix(ctype: CoxeterType) -> CoxeterMatrix {
    let n = ctype.rank();
    let mut rows = vec![vec![2; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut bond = |i: usize, j: usize, m: usize| {
        rows[i][j] = m;
        rows[j][i] = m;
    };
    match ctype.family() {
        Family::A => (0..n.saturating_sub(1)).for_each(|i| bond(i, i + 1, 3)),
        Family::B => {
            bond(0, 1, 4);
            (1..n - 1).for_each(|i| bond(i, i + 1, 3));
        }
        Family::D => {
            bond(0, 1, 3);
            bond(1, 2, 3);
            bond(1, 3, 3);
            (3..n - 1).for_each(|i| bond(i, i + 1, 3));
        }
        Family::I2 => bond(0, 1, ctype.param()),
    }
    CoxeterMatrix::from_rows(&rows).expect("standard Coxeter matrices are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `s s' s … = s' s s' …`, `m(s, s')` letters per side.
    Braid,
    /// `s² = 1`.
    Order,
}

/// A defining relation; words are 0-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub kind: RelationKind,
}

impl Relation {
    fn braid(i: usize, j: usize, m: usize) -> Self {
        let alternate = |a: usize, b: usize| (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect();
        Relation {
            lhs: alternate(i, j),
            rhs: alternate(j, i),
            kind: RelationKind::Braid,
        }
    }

    fn order(i: usize) -> Self {
        Relation {
            lhs: vec![i, i],
            rhs: Vec::new(),
            kind: RelationKind::Order,
        }
    }

    /// The two generators of a braid relation.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match self.kind {
            RelationKind::Braid => Some((self.lhs[0], self.rhs[0])),
            RelationKind::Order => None,
        }
    }
}

/// Renders a 0-based generator word as `s1s2s1`; the empty word is `1`.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", word_string(&self.lhs), word_string(&self.rhs))
    }
}

/// One braid relation per unordered pair of generators, in lexicographic
/// order of the pair.
pub fn artin_relations(cm: &CoxeterMatrix) -> Vec<Relation> {
    let n = cm.size();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| Relation::braid(i, j, cm.get(i, j)))
        .collect()
}

/// Order relations `s² = 1` followed by the braid relations.
pub fn coxeter_relations(cm: &CoxeterMatrix) -> Vec<Relation> {
    let mut out: Vec<Relation> = (0..cm.size()).map(Relation::order).collect();
    out.extend(artin_relations(cm));
    out
}
