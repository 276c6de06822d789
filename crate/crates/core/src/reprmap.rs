//! Maps from Artin groups of finite Coxeter type into classical braid groups.
//!
//! A [`RepMap`] pairs a faithful permutation representation `e: W → S_m` with
//! a choice of braid words `f(sᵢ)` whose underlying permutations are
//! `e(sᵢ)`. Extending `f` to all words gives a map `A_W → B_m` that always
//! commutes with the projections to `W` and `S_m`; whether it respects the
//! Artin relations depends on the chosen lifts and is decided by
//! [`verify`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{
    artin_relations, coxeter_relations, word_string, CoxeterError, CoxeterType, Relation,
};
use crate::garside::{BraidElement, BraidWord, GarsideError};
use crate::perm::{PermError, Permutation};
use crate::realization::{
    realize, type_a_realization, CayleyRealization, ElemId, Realization, SymmetricGroup,
};

pub const DEFAULT_SEED: u64 = 20_001_008;
pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_MAX_WORD_LENGTH: usize = 20;
pub const DEFAULT_SCAN_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepMapError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Garside(#[from] GarsideError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("f(s{generator}) projects to {found}, but e(s{generator}) = {expected}")]
    DiagramMismatch {
        generator: usize,
        expected: String,
        found: String,
    },
    #[error("the map for {0} is not a homomorphism")]
    NotHomomorphism(String),
    #[error("scan exceeds the cap of {0} elements")]
    ScanCapExceeded(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    #[serde(rename = "builtin-An")]
    An,
    #[serde(rename = "builtin-I2-even")]
    I2Even,
    #[serde(rename = "builtin-I2-odd")]
    I2Odd,
    #[serde(rename = "builtin-Bn")]
    Bn,
    #[serde(rename = "builtin-D4")]
    D4,
    #[serde(rename = "custom")]
    Custom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::An => "builtin-An",
            Provenance::I2Even => "builtin-I2-even",
            Provenance::I2Odd => "builtin-I2-odd",
            Provenance::Bn => "builtin-Bn",
            Provenance::D4 => "builtin-D4",
            Provenance::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A pair `(e, f)` with its source and target groups materialized.
#[derive(Debug, Clone)]
pub struct RepMap {
    source_type: CoxeterType,
    e_images: Vec<Permutation>,
    f_images: Vec<BraidWord>,
    provenance: Provenance,
    source: Arc<CayleyRealization>,
    target: Arc<SymmetricGroup>,
}

impl RepMap {
    /// Validates that `e` is a faithful representation of `source_type` and
    /// that each `f(sᵢ)` projects to `e(sᵢ)`.
    pub fn new(
        source_type: CoxeterType,
        e_images: Vec<Permutation>,
        f_images: Vec<BraidWord>,
        provenance: Provenance,
    ) -> Result<Self, RepMapError> {
        if f_images.len() != e_images.len() {
            return Err(RepMapError::InvalidParameter(format!(
                "{} permutation images but {} braid images",
                e_images.len(),
                f_images.len()
            )));
        }
        let source = Arc::new(realize(source_type, &e_images)?);
        let target = Arc::new(type_a_realization(source.degree())?);
        for (i, (e, f)) in e_images.iter().zip(&f_images).enumerate() {
            let projected = BraidElement::from_word(&target, f)?.underlying_permutation();
            if projected != *e {
                return Err(RepMapError::DiagramMismatch {
                    generator: i + 1,
                    expected: e.cycle_string(),
                    found: projected.cycle_string(),
                });
            }
        }
        Ok(RepMap {
            source_type,
            e_images,
            f_images,
            provenance,
            source,
            target,
        })
    }

    pub fn source_type(&self) -> CoxeterType {
        self.source_type
    }

    pub fn target_m(&self) -> usize {
        self.target.degree()
    }

    pub fn e_images(&self) -> &[Permutation] {
        &self.e_images
    }

    pub fn f_images(&self) -> &[BraidWord] {
        &self.f_images
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `W` realized through `e`: element ids of this realization are
    /// elements of `W`, and their permutations are their `e`-images.
    pub fn source(&self) -> &Arc<CayleyRealization> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SymmetricGroup> {
        &self.target
    }

    /// Braid word obtained by substituting `f(sᵢ)` (or its inverse) for each
    /// letter of a source word.
    pub fn image_word(&self, word: &BraidWord) -> Result<BraidWord, RepMapError> {
        word.check_rank(self.source.rank())?;
        let mut letters = Vec::new();
        for &l in word.letters() {
            let f = &self.f_images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                letters.extend_from_slice(f.letters());
            } else {
                letters.extend_from_slice(f.inverse().letters());
            }
        }
        Ok(BraidWord::new(letters))
    }

    fn info(&self) -> MapInfo {
        MapInfo {
            coxeter_type: self.source_type.to_string(),
            m: self.target_m(),
            provenance: self.provenance,
        }
    }
}

fn cycles(degree: usize, spec: &[(usize, usize)]) -> Permutation {
    let cs: Vec<Vec<usize>> = spec.iter().map(|&(a, b)| vec![a, b]).collect();
    Permutation::from_cycles(degree, &cs).expect("built-in cycles are in range")
}

fn word(letters: impl IntoIterator<Item = usize>) -> BraidWord {
    BraidWord::new(letters.into_iter().map(|l| l as i32).collect())
}

/// `I₂(k)` for even `k`, acting on `2k` points.
///
/// `s1 ↦ (1,2)(3,4)⋯(2k-1,2k)` and `s2 ↦ (1,3)(2,5)(4,7)⋯(2k-4,2k-1)(2k-2,2k)`.
/// `f(s1)` is `σ1σ3⋯σ_{2k-1}`; `f(s2)` is the simple lift of `e(s2)`, the
/// positive braid in which every pair of strands crosses at most once.
pub fn build_i2_even(k: usize) -> Result<RepMap, RepMapError> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(RepMapError::InvalidParameter(format!(
            "I2(k) even construction needs even k >= 2, got {k}"
        )));
    }
    let m = 2 * k;
    let s1: Vec<(usize, usize)> = (1..=k).map(|i| (2 * i - 1, 2 * i)).collect();
    let mut s2 = vec![(1, 3)];
    s2.extend((1..k - 1).map(|j| (2 * j, 2 * j + 3)));
    s2.push((2 * k - 2, 2 * k));
    let e = vec![cycles(m, &s1), cycles(m, &s2)];

    let target = Arc::new(type_a_realization(m)?);
    let f2 = BraidElement::simple_lift(&target, e[1].clone()).to_word();
    let f1 = word((1..=k).map(|i| 2 * i - 1));
    RepMap::new(CoxeterType::i2(k)?, e, vec![f1, f2], Provenance::I2Even)
}

/// `I₂(k)` for odd `k`, acting on `k` points.
pub fn build_i2_odd(k: usize) -> Result<RepMap, RepMapError> {
    if k < 3 || k % 2 != 1 {
        return Err(RepMapError::InvalidParameter(format!(
            "I2(k) odd construction needs odd k >= 3, got {k}"
        )));
    }
    let evens: Vec<usize> = (2..k).step_by(2).collect();
    let odds: Vec<usize> = (1..k - 1).step_by(2).collect();
    let e = vec![
        cycles(k, &evens.iter().map(|&i| (i, i + 1)).collect::<Vec<_>>()),
        cycles(k, &odds.iter().map(|&i| (i, i + 1)).collect::<Vec<_>>()),
    ];
    let f = vec![word(evens), word(odds)];
    RepMap::new(CoxeterType::i2(k)?, e, f, Provenance::I2Odd)
}

/// Dispatches on the parity of `k`.
pub fn build_i2(k: usize) -> Result<RepMap, RepMapError> {
    if k.is_multiple_of(2) {
        build_i2_even(k)
    } else {
        build_i2_odd(k)
    }
}

/// `B_n` on `2n` points: `s_{n-j} ↦ (j+1, j+2)(2n-j-1, 2n-j)` for
/// `0 ≤ j ≤ n-2` and `s1 ↦ (n, n+1)`, lifted letter by letter.
pub fn build_bn(n: usize) -> Result<RepMap, RepMapError> {
    if n < 2 {
        return Err(RepMapError::InvalidParameter(format!(
            "B_n construction needs n >= 2, got {n}"
        )));
    }
    let m = 2 * n;
    let mut e = vec![Permutation::identity(m); n];
    let mut f = vec![BraidWord::default(); n];
    e[0] = cycles(m, &[(n, n + 1)]);
    f[0] = word([n]);
    for j in 0..=n - 2 {
        let g = n - j - 1;
        e[g] = cycles(m, &[(j + 1, j + 2), (2 * n - j - 1, 2 * n - j)]);
        f[g] = word([j + 1, 2 * n - j - 1]);
    }
    RepMap::new(CoxeterType::b(n)?, e, f, Provenance::Bn)
}

/// `A_n` mapped identically onto the braid group on `n+1` strands.
pub fn build_an(n: usize) -> Result<RepMap, RepMapError> {
    let m = n + 1;
    let e = (1..=n).map(|i| cycles(m, &[(i, i + 1)])).collect();
    let f = (1..=n).map(|i| word([i])).collect();
    RepMap::new(CoxeterType::a(n)?, e, f, Provenance::An)
}

/// `D_4` on 8 points. The lift is not a homomorphism.
pub fn build_d4() -> Result<RepMap, RepMapError> {
    let e = vec![
        cycles(8, &[(3, 4), (5, 6)]),
        cycles(8, &[(2, 3), (6, 7)]),
        cycles(8, &[(3, 5), (4, 6)]),
        cycles(8, &[(1, 2), (7, 8)]),
    ];
    let f = vec![word([3, 5]), word([2, 6]), word([4, 3, 5, 4]), word([1, 7])];
    RepMap::new(CoxeterType::d(4)?, e, f, Provenance::D4)
}

/// The built-in map for a type: `A_n`, `B_n`, `I₂(k)` and `D_4`.
pub fn build_for_type(ctype: CoxeterType) -> Result<RepMap, RepMapError> {
    use crate::coxeter::Family;
    match ctype.family() {
        Family::A => build_an(ctype.param()),
        Family::B => build_bn(ctype.param()),
        Family::I2 => build_i2(ctype.param()),
        Family::D if ctype.param() == 4 => build_d4(),
        Family::D => Err(RepMapError::InvalidParameter(format!(
            "no built-in map for {ctype}; only D4 is available"
        ))),
    }
}

/// Image of a source word under `f`, in normal form.
pub fn apply_map(map: &RepMap, source_word: &BraidWord) -> Result<BraidElement<SymmetricGroup>, RepMapError> {
    let image = map.image_word(source_word)?;
    Ok(BraidElement::from_word(&map.target, &image)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapInfo {
    #[serde(rename = "type")]
    pub coxeter_type: String,
    pub m: usize,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub e_cycles: String,
    pub f_word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub lhs: String,
    pub rhs: String,
    pub f_lhs: String,
    pub f_rhs: String,
    pub equal: bool,
    pub nf_lhs: String,
    pub nf_rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramCheck {
    pub generator_checks: usize,
    pub generator_failures: usize,
    pub samples: usize,
    pub max_word_length: usize,
    pub seed: u64,
    pub failures: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub map: MapInfo,
    pub source_order: usize,
    pub generators: Vec<GeneratorInfo>,
    pub relations: Vec<RelationCheck>,
    pub embedding_relations: Vec<EmbeddingCheck>,
    pub diagram: DiagramCheck,
    pub is_homomorphism: bool,
    pub verdict: String,
    pub witnesses: Vec<RelationCheck>,
    pub scans: Vec<ScanReport>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn witness(&self, lhs: &str, rhs: &str) -> Option<&RelationCheck> {
        self.witnesses.iter().find(|w| w.lhs == lhs && w.rhs == rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub max_word_length: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: DEFAULT_SAMPLES,
            max_word_length: DEFAULT_MAX_WORD_LENGTH,
            seed: DEFAULT_SEED,
        }
    }
}

fn to_signed(gens: &[usize]) -> BraidWord {
    word(gens.iter().map(|s| s + 1))
}

/// Checks one Artin relation by normalizing both sides of its image.
pub fn check_relation(map: &RepMap, rel: &Relation) -> RelationCheck {
    let lhs_word = map.image_word(&to_signed(&rel.lhs)).expect("relation letters are generators");
    let rhs_word = map.image_word(&to_signed(&rel.rhs)).expect("relation letters are generators");
    let lhs = BraidElement::from_word(&map.target, &lhs_word).expect("image letters checked");
    let rhs = BraidElement::from_word(&map.target, &rhs_word).expect("image letters checked");
    RelationCheck {
        lhs: word_string(&rel.lhs),
        rhs: word_string(&rel.rhs),
        f_lhs: lhs_word.to_string(),
        f_rhs: rhs_word.to_string(),
        equal: lhs == rhs,
        nf_lhs: lhs.to_string(),
        nf_rhs: rhs.to_string(),
    }
}

pub fn relation_checks(map: &RepMap) -> Vec<RelationCheck> {
    artin_relations(map.source.matrix())
        .iter()
        .map(|rel| check_relation(map, rel))
        .collect()
}

pub fn is_homomorphism(map: &RepMap) -> bool {
    relation_checks(map).iter().all(|c| c.equal)
}

/// Random signed word over `rank` generators with length in `0..=max_len`.
pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
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

/// Runs every check: Artin relations through `f`, Coxeter relations
/// through `e`, and commutation of the projection square on generators and
/// on random words.
pub fn verify(map: &RepMap, opts: &VerifyOptions) -> VerificationReport {
    let relations = relation_checks(map);
    let is_hom = relations.iter().all(|c| c.equal);
    let witnesses: Vec<RelationCheck> = relations.iter().filter(|c| !c.equal).cloned().collect();

    let degree = map.target_m();
    let eval = |w: &[usize]| {
        w.iter().fold(Permutation::identity(degree), |acc, &s| {
            acc.compose(&map.e_images[s]).expect("same degree")
        })
    };
    let embedding_relations = coxeter_relations(map.source.matrix())
        .iter()
        .map(|rel| EmbeddingCheck {
            relation: rel.to_string(),
            holds: eval(&rel.lhs) == eval(&rel.rhs),
        })
        .collect();

    let generator_failures = (0..map.source.rank())
        .filter(|&i| {
            let f = BraidElement::from_word(&map.target, &map.f_images[i]).expect("checked");
            f.underlying_permutation() != *map.source.element(map.source.generator(i))
        })
        .count();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..opts.samples {
        let w = random_word(&mut rng, map.source.rank(), opts.max_word_length);
        let braid = apply_map(map, &w).expect("generated letters are generators");
        let in_w: ElemId = w
            .letters()
            .iter()
            .fold(map.source.identity(), |acc, &l| {
                map.source.right_mul_gen(&acc, l.unsigned_abs() as usize - 1)
            });
        if braid.underlying_permutation() != *map.source.element(in_w) {
            failures += 1;
            first_failure.get_or_insert_with(|| w.to_string());
        }
    }

    let generators = map
        .e_images
        .iter()
        .zip(&map.f_images)
        .enumerate()
        .map(|(i, (e, f))| GeneratorInfo {
            name: format!("s{}", i + 1),
            e_cycles: e.cycle_string(),
            f_word: f.to_string(),
        })
        .collect();

    VerificationReport {
        map: map.info(),
        source_order: map.source.order(),
        generators,
        relations,
        embedding_relations,
        diagram: DiagramCheck {
            generator_checks: map.source.rank(),
            generator_failures,
            samples: opts.samples,
            max_word_length: opts.max_word_length,
            seed: opts.seed,
            failures,
            first_failure,
        },
        is_homomorphism: is_hom,
        verdict: if is_hom { "homomorphism" } else { "not a homomorphism" }.to_string(),
        witnesses,
        scans: Vec::new(),
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "map {} -> braid group on {} strands ({})",
            self.map.coxeter_type, self.map.m, self.map.provenance
        )?;
        writeln!(f, "source group order: {}", self.source_order)?;
        for g in &self.generators {
            writeln!(f, "  {}: e = {}  f = {}", g.name, g.e_cycles, g.f_word)?;
        }
        writeln!(f, "embedding relations:")?;
        for c in &self.embedding_relations {
            writeln!(f, "  {:<24} {}", c.relation, if c.holds { "ok" } else { "FAILS" })?;
        }
        writeln!(f, "braid relations:")?;
        for c in &self.relations {
            writeln!(
                f,
                "  {} = {}: {}",
                c.lhs,
                c.rhs,
                if c.equal { "equal" } else { "NOT equal" }
            )?;
            writeln!(f, "    lhs {}", c.nf_lhs)?;
            writeln!(f, "    rhs {}", c.nf_rhs)?;
        }
        let d = &self.diagram;
        writeln!(
            f,
            "diagram: {} generator checks ({} failures), {} random words of length <= {} with seed {} ({} failures)",
            d.generator_checks, d.generator_failures, d.samples, d.max_word_length, d.seed, d.failures
        )?;
        for w in &self.witnesses {
            writeln!(f, "witness: {} = {} fails", w.lhs, w.rhs)?;
        }
        for s in &self.scans {
            write!(f, "{s}")?;
        }
        writeln!(f, "verdict: {}", self.verdict)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub kind: String,
    pub map: MapInfo,
    pub bound: usize,
    pub elements_scanned: usize,
    pub distinct_images: usize,
    pub all_distinct: bool,
    /// Nontrivial source elements with trivial image.
    pub kernel: Vec<String>,
    /// Whether every element found in the kernel is pure in the source.
    pub kernel_pure: bool,
    /// Up to ten pairs of distinct source elements with equal images.
    pub collisions: Vec<(String, String)>,
    /// Whether `f(Δ)` is a pure braid (kernel scans only).
    pub delta_image_pure: Option<bool>,
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "scan {} on {} (bound {}): {} elements, {} distinct images, {} nontrivial kernel elements",
            self.kind,
            self.map.coxeter_type,
            self.bound,
            self.elements_scanned,
            self.distinct_images,
            self.kernel.len()
        )?;
        writeln!(f, "  all images distinct: {}", self.all_distinct)?;
        if let Some(p) = self.delta_image_pure {
            writeln!(f, "  image of Delta is pure: {p}")?;
        }
        for k in &self.kernel {
            writeln!(f, "  kernel element: {k}")?;
        }
        for (a, b) in &self.collisions {
            writeln!(f, "  collision: {a} and {b}")?;
        }
        Ok(())
    }
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct ImageTally {
    seen: HashMap<(i64, Vec<Permutation>), String>,
    scanned: usize,
    kernel: Vec<String>,
    collisions: Vec<(String, String)>,
    collision_count: usize,
}

impl ImageTally {
    fn new() -> Self {
        ImageTally {
            seen: HashMap::new(),
            scanned: 0,
            kernel: Vec::new(),
            collisions: Vec::new(),
            collision_count: 0,
        }
    }

    fn record(&mut self, label: String, trivial_source: bool, image: &BraidElement<SymmetricGroup>) {
        self.scanned += 1;
        if image.is_identity() && !trivial_source {
            self.kernel.push(label.clone());
        }
        match self.seen.get(&image.key()) {
            Some(prev) => {
                self.collision_count += 1;
                if self.collisions.len() < 10 {
                    self.collisions.push((prev.clone(), label));
                }
            }
            None => {
                self.seen.insert(image.key(), label);
            }
        }
    }
}

/// Images of `s1^a s2^b` for `|a|, |b| ≤ bound` under the `I₂(2)` map. The
/// source group is free abelian on `s1, s2`, so these are all distinct
/// source elements.
pub fn injectivity_scan_i2_2(bound: usize) -> Result<ScanReport, RepMapError> {
    if bound < 1 {
        return Err(RepMapError::InvalidParameter("bound must be at least 1".into()));
    }
    let map = build_i2_even(2)?;
    let target = &map.target;
    let f1 = BraidElement::from_word(target, &map.f_images[0])?;
    let f2 = BraidElement::from_word(target, &map.f_images[1])?;
    let b = bound as i64;
    let mut tally = ImageTally::new();
    for a in -b..=b {
        let left = f1.pow(a);
        for c in -b..=b {
            let image = left.multiply(&f2.pow(c))?;
            tally.record(format!("s1^{a} s2^{c}"), a == 0 && c == 0, &image);
        }
    }
    Ok(ScanReport {
        kind: "injectivity-grid".into(),
        map: map.info(),
        bound,
        elements_scanned: tally.scanned,
        distinct_images: tally.seen.len(),
        all_distinct: tally.collision_count == 0,
        kernel_pure: true,
        kernel: tally.kernel,
        collisions: tally.collisions,
        delta_image_pure: None,
    })
}

/// Enumerates normal forms `Δ^p x₁⋯x_ℓ` of the source Artin group with
/// `p ∈ {-1, 0}` and `ℓ ≤ max_canonical_length`, and tallies their images.
pub fn kernel_scan(
    map: &RepMap,
    max_canonical_length: usize,
    cap: usize,
) -> Result<ScanReport, RepMapError> {
    if !is_homomorphism(map) {
        return Err(RepMapError::NotHomomorphism(map.source_type.to_string()));
    }
    let src = &map.source;
    let w0 = src.longest();
    let simples: Vec<ElemId> = src
        .elements()
        .filter(|&x| !src.is_identity(&x) && x != w0)
        .collect();
    // successors[x] = simples y with every left descent of y a right descent of x
    let successors: HashMap<ElemId, Vec<ElemId>> = simples
        .iter()
        .map(|&x| {
            let next = simples
                .iter()
                .copied()
                .filter(|y| src.left_descents(y).into_iter().all(|s| src.is_right_descent(&x, s)))
                .collect();
            (x, next)
        })
        .collect();

    let mut sequences: Vec<Vec<ElemId>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<ElemId>> = vec![Vec::new()];
    for _ in 0..max_canonical_length {
        let mut next = Vec::new();
        for seq in &frontier {
            let options = match seq.last() {
                None => &simples,
                Some(x) => &successors[x],
            };
            for &y in options {
                let mut s = seq.clone();
                s.push(y);
                next.push(s);
            }
            if 2 * (sequences.len() + next.len()) > cap {
                return Err(RepMapError::ScanCapExceeded(cap));
            }
        }
        sequences.extend(next.iter().cloned());
        frontier = next;
    }

    let mut tally = ImageTally::new();
    let mut kernel_pure = true;
    for delta in [-1i64, 0] {
        for seq in &sequences {
            let element = BraidElement::from_simples(src, delta, seq);
            debug_assert_eq!(element.factors(), seq.as_slice());
            let image = apply_map(map, &element.to_word())?;
            if image.is_identity() && !element.is_identity() && !element.is_pure() {
                kernel_pure = false;
            }
            tally.record(element.to_string(), element.is_identity(), &image);
        }
    }
    let delta_word = BraidElement::delta(src, 1).to_word();
    let delta_image_pure = apply_map(map, &delta_word)?.is_pure();

    Ok(ScanReport {
        kind: "kernel".into(),
        map: map.info(),
        bound: max_canonical_length,
        elements_scanned: tally.scanned,
        distinct_images: tally.seen.len(),
        all_distinct: tally.collision_count == 0,
        kernel_pure,
        kernel: tally.kernel,
        collisions: tally.collisions,
        delta_image_pure: Some(delta_image_pure),
    })
}
