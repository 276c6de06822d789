//! Concrete finite realizations of Coxeter groups.
//!
//! [`CayleyRealization`] enumerates the group generated by a list of
//! permutations and stores full multiplication-by-generator tables. It works
//! for any type but only for small groups. [`SymmetricGroup`] realizes type
//! `A_{m-1}` directly on one-line permutations, so `S_12` never has to be
//! enumerated.
//!
//! Both implement [`Realization`], which is all the Garside engine needs.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::coxeter::{coxeter_matrix, coxeter_relations, CoxeterError, CoxeterMatrix, CoxeterType};
use crate::perm::Permutation;

/// Default bound on the number of elements a Cayley closure may reach.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000_000;

/// A finite Coxeter group with a fixed generating set. Generator indices are
/// 0-based; products are left to right as everywhere in this crate.
pub trait Realization {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug;

    fn coxeter_type(&self) -> CoxeterType;
    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn generator(&self, s: usize) -> Self::Elem;
    /// The longest element `w0`.
    fn longest(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn length(&self, a: &Self::Elem) -> usize;
    /// `length(s·a) < length(a)`.
    fn is_left_descent(&self, a: &Self::Elem, s: usize) -> bool;
    /// `length(a·s) < length(a)`.
    fn is_right_descent(&self, a: &Self::Elem, s: usize) -> bool;
    /// `s·a`
    fn left_mul_gen(&self, s: usize, a: &Self::Elem) -> Self::Elem;
    /// `a·s`
    fn right_mul_gen(&self, a: &Self::Elem, s: usize) -> Self::Elem;
    /// The element as a permutation of the realizing degree.
    fn permutation(&self, a: &Self::Elem) -> Permutation;
    /// Short label used in normal-form text.
    fn label(&self, a: &Self::Elem) -> String;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    fn left_descents(&self, a: &Self::Elem) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_left_descent(a, s)).collect()
    }

    fn right_descents(&self, a: &Self::Elem) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(a, s)).collect()
    }

    /// Reduced word, stripping the smallest left descent at each step.
    fn reduced_word(&self, a: &Self::Elem) -> Vec<usize> {
        let mut w = a.clone();
        let mut word = Vec::with_capacity(self.length(a));
        while let Some(s) = (0..self.rank()).find(|&s| self.is_left_descent(&w, s)) {
            word.push(s);
            w = self.left_mul_gen(s, &w);
        }
        word
    }

    /// Evaluates a 0-based generator word.
    fn eval_word(&self, word: &[usize]) -> Self::Elem {
        word.iter()
            .fold(self.identity(), |acc, &s| self.right_mul_gen(&acc, s))
    }
}

/// Meet in left weak order (longest common prefix).
pub fn meet_weak_left<R: Realization + ?Sized>(r: &R, a: &R::Elem, b: &R::Elem) -> R::Elem {
    meet_and_remainder(r, a, b).0
}

/// Returns `(t, t⁻¹·b)` where `t` is the left weak meet of `a` and `b`.
///
/// A generator that is a left descent of both lies below the meet, and
/// stripping it from both sides preserves the set of common lower bounds,
/// so greedy stripping terminates at the meet.
pub(crate) fn meet_and_remainder<R: Realization + ?Sized>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> (R::Elem, R::Elem) {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut t = r.identity();
    while let Some(s) = (0..r.rank()).find(|&s| r.is_left_descent(&a, s) && r.is_left_descent(&b, s)) {
        a = r.left_mul_gen(s, &a);
        b = r.left_mul_gen(s, &b);
        t = r.right_mul_gen(&t, s);
    }
    (t, b)
}

/// Dense element id; the identity is 0 and ids follow BFS discovery order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Fully enumerated finite Coxeter group given by permutation images of its
/// generators.
#[derive(Debug, Clone)]
pub struct CayleyRealization {
    ctype: CoxeterType,
    matrix: CoxeterMatrix,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElemId>,
    right: Vec<ElemId>,
    left: Vec<ElemId>,
    inverse: Vec<ElemId>,
    length: Vec<u32>,
    w0: ElemId,
}

/// [`realize_with_cap`] with [`DEFAULT_CLOSURE_CAP`].
pub fn realize(
    ctype: CoxeterType,
    generator_images: &[Permutation],
) -> Result<CayleyRealization, CoxeterError> {
    realize_with_cap(ctype, generator_images, DEFAULT_CLOSURE_CAP)
}

/// Enumerates the group generated by `generator_images` after checking that
/// they satisfy the Coxeter relations of `ctype`. Fails unless the closure
/// has exactly the order of `ctype`.
pub fn realize_with_cap(
    ctype: CoxeterType,
    generator_images: &[Permutation],
    cap: usize,
) -> Result<CayleyRealization, CoxeterError> {
    let rank = ctype.rank();
    if generator_images.len() != rank {
        return Err(CoxeterError::GeneratorCount {
            expected: rank,
            got: generator_images.len(),
        });
    }
    let degree = generator_images[0].degree();
    if generator_images.iter().any(|g| g.degree() != degree) {
        return Err(CoxeterError::DegreeMismatch);
    }
    let matrix = coxeter_matrix(ctype);
    let eval = |word: &[usize]| {
        word.iter().fold(Permutation::identity(degree), |acc, &s| {
            acc.compose_unchecked(&generator_images[s])
        })
    };
    for rel in coxeter_relations(&matrix) {
        if eval(&rel.lhs) != eval(&rel.rhs) {
            return Err(CoxeterError::RelationViolated(rel.to_string()));
        }
    }

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, ElemId(0))]);
    let mut length = vec![0u32];
    let mut right = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        for g in generator_images {
            let next = elements[id].compose_unchecked(g);
            let next_id = match index.get(&next) {
                Some(&n) => n,
                None => {
                    if elements.len() >= cap {
                        return Err(CoxeterError::CapExceeded(cap));
                    }
                    let n = ElemId(elements.len() as u32);
                    index.insert(next.clone(), n);
                    elements.push(next);
                    length.push(length[id] + 1);
                    queue.push_back(n.index());
                    n
                }
            };
            right.push(next_id);
        }
    }

    let expected = ctype.order();
    if expected != Some(elements.len() as u64) {
        return Err(CoxeterError::OrderMismatch {
            ctype,
            expected: expected.unwrap_or(u64::MAX),
            found: elements.len() as u64,
        });
    }

    let left = elements
        .iter()
        .flat_map(|w| generator_images.iter().map(|g| index[&g.compose_unchecked(w)]))
        .collect();
    let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
    let max_len = *length.iter().max().unwrap();
    let mut longest = length.iter().enumerate().filter(|(_, &l)| l == max_len);
    let w0 = ElemId(longest.next().unwrap().0 as u32);
    if longest.next().is_some() {
        return Err(CoxeterError::NoUniqueLongest);
    }

    Ok(CayleyRealization {
        ctype,
        matrix,
        generators: generator_images.to_vec(),
        elements,
        index,
        right,
        left,
        inverse,
        length,
        w0,
    })
}

impl CayleyRealization {
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn degree(&self) -> usize {
        self.generators[0].degree()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id.index()]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        (0..self.elements.len() as u32).map(ElemId)
    }

    /// Tab-separated table of id, one-line permutation and length.
    pub fn dump(&self) -> String {
        let mut out = String::from("id\tpermutation\tlength\n");
        for (i, p) in self.elements.iter().enumerate() {
            out.push_str(&format!("{i}\t{p}\t{}\n", self.length[i]));
        }
        out
    }
}

impl Realization for CayleyRealization {
    type Elem = ElemId;

    fn coxeter_type(&self) -> CoxeterType {
        self.ctype
    }

    fn rank(&self) -> usize {
        self.generators.len()
    }

    fn identity(&self) -> ElemId {
        ElemId(0)
    }

    fn generator(&self, s: usize) -> ElemId {
        self.right[s]
    }

    fn longest(&self) -> ElemId {
        self.w0
    }

    fn mul(&self, a: &ElemId, b: &ElemId) -> ElemId {
        self.index[&self.element(*a).compose_unchecked(self.element(*b))]
    }

    fn inverse(&self, a: &ElemId) -> ElemId {
        self.inverse[a.index()]
    }

    fn length(&self, a: &ElemId) -> usize {
        self.length[a.index()] as usize
    }

    fn is_left_descent(&self, a: &ElemId, s: usize) -> bool {
        self.length[self.left_mul_gen(s, a).index()] < self.length[a.index()]
    }

    fn is_right_descent(&self, a: &ElemId, s: usize) -> bool {
        self.length[self.right_mul_gen(a, s).index()] < self.length[a.index()]
    }

    fn left_mul_gen(&self, s: usize, a: &ElemId) -> ElemId {
        self.left[a.index() * self.rank() + s]
    }

    fn right_mul_gen(&self, a: &ElemId, s: usize) -> ElemId {
        self.right[a.index() * self.rank() + s]
    }

    fn permutation(&self, a: &ElemId) -> Permutation {
        self.element(*a).clone()
    }

    fn label(&self, a: &ElemId) -> String {
        a.0.to_string()
    }
}

/// `S_m` as the Coxeter group `A_{m-1}`, generated by `(i, i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGroup {
    degree: usize,
}

/// Type-A realization without a Cayley table: length is the inversion count
/// and `w0` is the reversal `i ↦ m + 1 - i`.
pub fn type_a_realization(m: usize) -> Result<SymmetricGroup, CoxeterError> {
    CoxeterType::a(m.saturating_sub(1))?;
    Ok(SymmetricGroup { degree: m })
}

impl SymmetricGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> Option<u64> {
        self.coxeter_type().order()
    }
}

impl Realization for SymmetricGroup {
    type Elem = Permutation;

    fn coxeter_type(&self) -> CoxeterType {
        CoxeterType::a(self.degree - 1).expect("degree checked at construction")
    }

    fn rank(&self) -> usize {
        self.degree - 1
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn generator(&self, s: usize) -> Permutation {
        Permutation::adjacent_transposition(self.degree, s + 1)
    }

    fn longest(&self) -> Permutation {
        Permutation::from_zero_based_unchecked((0..self.degree).rev().collect())
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose_unchecked(b)
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn length(&self, a: &Permutation) -> usize {
        a.inversions()
    }

    fn is_left_descent(&self, a: &Permutation, s: usize) -> bool {
        a.has_left_descent(s + 1)
    }

    fn is_right_descent(&self, a: &Permutation, s: usize) -> bool {
        a.has_right_descent(s + 1)
    }

    fn left_mul_gen(&self, s: usize, a: &Permutation) -> Permutation {
        a.left_mul_adjacent(s + 1)
    }

    fn right_mul_gen(&self, a: &Permutation, s: usize) -> Permutation {
        a.right_mul_adjacent(s + 1)
    }

    fn permutation(&self, a: &Permutation) -> Permutation {
        a.clone()
    }

    fn label(&self, a: &Permutation) -> String {
        a.to_string()
    }

    fn is_identity(&self, a: &Permutation) -> bool {
        a.is_identity()
    }

    fn right_descents(&self, a: &Permutation) -> Vec<usize> {
        let inv = a.inverse();
        (0..self.rank())
            .filter(|&s| inv.zero_based()[s] > inv.zero_based()[s + 1])
            .collect()
    }
}
