//! Set-system view of clique coverings of complete multipartite graphs.
//!
//! Number the cliques of a covering of `K_t(d)` as `1..=k`. Vertex `j` of
//! part `i` gets the set `A_i^j` of cliques containing it. Two sets of the
//! same part are disjoint (their vertices are not adjacent) and two sets of
//! different parts meet (their edge is covered), and the sum of the set sizes
//! is the sigma of the covering. For `d = 2` these are Bollobás pairs
//! `(A_i, B_i) = (A_i^1, A_i^2)`, for which `Σ 1/C(a_i + b_i, a_i) <= 1`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::binomial;
use crate::constructions::{complete_multipartite, MultipartiteSpec};
use crate::covers::{verify, CliqueCover, CoverMode};
use crate::error::{Error, Result};
use crate::exact::ExactSolver;

pub type GroundSet = BTreeSet<usize>;

/// Pairs `(A_i, B_i)` over a ground set of 1-based clique indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BollobasPairs {
    pub pairs: Vec<(GroundSet, GroundSet)>,
}

impl BollobasPairs {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// First `(i, j)` (0-based) where `A_i ∩ B_j = ∅` fails to match `i = j`.
    pub fn pattern_violation(&self) -> Option<(usize, usize)> {
        let t = self.pairs.len();
        (0..t)
            .flat_map(|i| (0..t).map(move |j| (i, j)))
            .find(|&(i, j)| self.pairs[i].0.is_disjoint(&self.pairs[j].1) != (i == j))
    }
}

/// Pairs of a covering of `K_t(2)`; `x_i = 2i`, `y_i = 2i + 1`.
pub fn cover_to_pairs(t: usize, cover: &CliqueCover) -> Result<BollobasPairs> {
    let family = family_from_cover(t, 2, cover)?;
    Ok(BollobasPairs {
        pairs: family
            .sets
            .into_iter()
            .map(|mut tuple| {
                let b = tuple.pop().expect("two sets per part");
                let a = tuple.pop().expect("two sets per part");
                (a, b)
            })
            .collect(),
    })
}

/// `Σ 1 / C(a_i + b_i, a_i)` as an exact rational; refuses pattern violations.
pub fn bollobas_sum(pairs: &BollobasPairs) -> Result<BigRational> {
    if let Some((i, j)) = pairs.pattern_violation() {
        let what = if i == j { "intersect" } else { "are disjoint" };
        return Err(Error::premise(format!(
            "not a Bollobás system: A_{} and B_{} {what}",
            i + 1,
            j + 1
        )));
    }
    let mut sum = BigRational::zero();
    for (a, b) in &pairs.pairs {
        let c = binomial((a.len() + b.len()) as u64, a.len() as u64);
        sum += BigRational::new(BigInt::one(), BigInt::from(c));
    }
    Ok(sum)
}

/// Tuples `(A_i^1, ..., A_i^d)` for `i = 1..=t`, stored 0-based as `sets[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureFamily {
    pub d: usize,
    pub t: usize,
    pub sets: Vec<Vec<GroundSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDefect {
    Shape,
    EmptySet { i: usize, j: usize },
    /// Two sets of the same tuple intersect.
    SameTupleMeet { i: usize, j1: usize, j2: usize },
    /// Sets from different tuples are disjoint.
    CrossDisjoint { i1: usize, j1: usize, i2: usize, j2: usize },
}

impl fmt::Display for FamilyDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyDefect::Shape => write!(f, "family must have t tuples of d sets"),
            FamilyDefect::EmptySet { i, j } => write!(f, "A_{}^{} is empty", i + 1, j + 1),
            FamilyDefect::SameTupleMeet { i, j1, j2 } => {
                write!(f, "A_{}^{} and A_{}^{} intersect", i + 1, j1 + 1, i + 1, j2 + 1)
            }
            FamilyDefect::CrossDisjoint { i1, j1, i2, j2 } => {
                write!(f, "A_{}^{} and A_{}^{} are disjoint", i1 + 1, j1 + 1, i2 + 1, j2 + 1)
            }
        }
    }
}

impl ConjectureFamily {
    /// `Σ k_ij`.
    pub fn total_size(&self) -> usize {
        self.sets.iter().flatten().map(BTreeSet::len).sum()
    }

    /// Checks the intersection pattern and that every set is nonempty.
    pub fn check(&self) -> std::result::Result<(), FamilyDefect> {
        if self.sets.len() != self.t || self.sets.iter().any(|tuple| tuple.len() != self.d) {
            return Err(FamilyDefect::Shape);
        }
        for (i, tuple) in self.sets.iter().enumerate() {
            if let Some(j) = tuple.iter().position(BTreeSet::is_empty) {
                return Err(FamilyDefect::EmptySet { i, j });
            }
            for j1 in 0..self.d {
                for j2 in j1 + 1..self.d {
                    if !tuple[j1].is_disjoint(&tuple[j2]) {
                        return Err(FamilyDefect::SameTupleMeet { i, j1, j2 });
                    }
                }
            }
        }
        for i1 in 0..self.t {
            for i2 in i1 + 1..self.t {
                for j1 in 0..self.d {
                    for j2 in 0..self.d {
                        if self.sets[i1][j1].is_disjoint(&self.sets[i2][j2]) {
                            return Err(FamilyDefect::CrossDisjoint { i1, j1, i2, j2 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The `d = 2` family as Bollobás pairs.
    pub fn to_pairs(&self) -> Option<BollobasPairs> {
        (self.d == 2).then(|| BollobasPairs {
            pairs: self.sets.iter().map(|tuple| (tuple[0].clone(), tuple[1].clone())).collect(),
        })
    }
}

/// `A_i^j` = 1-based indices of the cliques containing vertex `j` of part `i`.
pub fn family_from_cover(t: usize, d: usize, cover: &CliqueCover) -> Result<ConjectureFamily> {
    let g = complete_multipartite_or_empty(t, d);
    verify(&g, cover)?.into_result()?;
    let mut sets = vec![vec![GroundSet::new(); d]; t];
    for (a, clique) in cover.cliques().iter().enumerate() {
        for &v in clique {
            sets[v / d][v % d].insert(a + 1);
        }
    }
    Ok(ConjectureFamily { d, t, sets })
}

/// One clique per ground element: the vertices whose set contains it.
pub fn cover_from_family(family: &ConjectureFamily) -> Result<CliqueCover> {
    family
        .check()
        .map_err(|defect| Error::premise(format!("invalid family: {defect}")))?;
    let ground: GroundSet = family.sets.iter().flatten().flatten().copied().collect();
    let cliques = ground
        .iter()
        .map(|&e| {
            let mut clique = Vec::new();
            for (i, tuple) in family.sets.iter().enumerate() {
                for (j, set) in tuple.iter().enumerate() {
                    if set.contains(&e) {
                        clique.push(i * family.d + j);
                    }
                }
            }
            clique
        })
        .collect();
    Ok(CliqueCover::new(CoverMode::Cover, cliques).allowing_singletons(true))
}

fn complete_multipartite_or_empty(t: usize, d: usize) -> crate::graph::Graph {
    if t == 0 || d == 0 {
        crate::graph::Graph::empty(t * d)
    } else {
        complete_multipartite(t, d)
    }
}

/// Largest `d * t` handled exhaustively.
pub const MAX_FAMILY_VERTICES: usize = 8;

fn check_regime(d: usize, t: usize) -> Result<()> {
    if d < 2 || t < 1 {
        return Err(Error::premise("families need d >= 2 and t >= 1"));
    }
    if d * t > MAX_FAMILY_VERTICES {
        return Err(Error::premise(format!(
            "d * t = {} exceeds the exhaustive regime (at most {MAX_FAMILY_VERTICES})",
            d * t
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinFamily {
    pub value: usize,
    pub witness: ConjectureFamily,
    /// Direct enumeration result, computed for the small cases where it is cheap.
    pub enumerated: Option<usize>,
}

/// Pairs `(d, t)` cross-checked by direct family enumeration.
pub const ENUMERATED_CASES: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];

/// Minimum `Σ k_ij` over families for `(d, t)`, via the exact sigma clique
/// cover number of `K_t(d)`. Families with `t = 1` have no required
/// intersections, so the minimum there is 0 (the edgeless `K_1(d)`).
pub fn min_family_size(d: usize, t: usize, ground_cap: usize) -> Result<MinFamily> {
    check_regime(d, t)?;
    let spec = MultipartiteSpec::uniform(t, d)?;
    let g = crate::constructions::build_multipartite(&spec);
    let solved = ExactSolver::default().solve(&g, crate::exact::Objective::Scc)?;
    if solved.witness.count() > ground_cap {
        return Err(Error::premise(format!(
            "the optimal witness uses {} ground elements, above the cap {ground_cap}",
            solved.witness.count()
        )));
    }
    let witness = family_from_cover(t, d, &solved.witness)?;
    debug_assert_eq!(witness.total_size(), solved.value);
    let enumerated = if ENUMERATED_CASES.contains(&(d, t)) {
        Some(min_family_size_enumerated(d, t, ground_cap)?)
    } else {
        None
    };
    Ok(MinFamily {
        value: solved.value,
        witness,
        enumerated,
    })
}

/// Minimum `Σ k_ij` by enumerating families directly, without graphs.
///
/// A ground element is described by the sets containing it; by the pattern
/// it lies in at most one set per tuple, so it is a map from tuples to
/// `{none, 1..=d}`. A family without repeated elements is a set of such
/// maps, enumerated as increasing index sequences so that relabelings of the
/// ground set are visited once. At most `ground_cap` elements are used.
pub fn min_family_size_enumerated(d: usize, t: usize, ground_cap: usize) -> Result<usize> {
    check_regime(d, t)?;
    // slot (i, j) -> bit i*d + j
    let slot = |i: usize, j: usize| i * d + j;
    let mut columns: Vec<(u32, u32)> = Vec::new(); // (slot mask, size)
    let choices = d + 1;
    for code in 1..choices.pow(t as u32) {
        let mut mask = 0u32;
        let mut c = code;
        for i in 0..t {
            let pick = c % choices;
            c /= choices;
            if pick > 0 {
                mask |= 1 << slot(i, pick - 1);
            }
        }
        columns.push((mask, mask.count_ones()));
    }
    columns.sort_unstable();

    // requirement bits: one per unordered pair of slots in different tuples
    let mut req_index = vec![vec![usize::MAX; t * d]; t * d];
    let mut reqs = 0;
    for a in 0..t * d {
        for b in a + 1..t * d {
            if a / d != b / d {
                req_index[a][b] = reqs;
                reqs += 1;
            }
        }
    }
    let satisfied: Vec<u64> = columns
        .iter()
        .map(|&(mask, _)| {
            let slots: Vec<usize> = (0..t * d).filter(|&s| mask >> s & 1 == 1).collect();
            let mut bits = 0u64;
            for (x, &a) in slots.iter().enumerate() {
                for &b in &slots[x + 1..] {
                    bits |= 1 << req_index[a][b];
                }
            }
            bits
        })
        .collect();
    let all = if reqs == 64 { u64::MAX } else { (1u64 << reqs) - 1 };

    struct Walk<'a> {
        columns: &'a [(u32, u32)],
        satisfied: &'a [u64],
        all: u64,
        cap: usize,
        best: u32,
    }
    impl Walk<'_> {
        fn go(&mut self, start: usize, done: u64, total: u32, used: usize) {
            if done == self.all {
                self.best = self.best.min(total);
                return;
            }
            if used == self.cap {
                return;
            }
            for k in start..self.columns.len() {
                let size = self.columns[k].1;
                if total + size >= self.best || self.satisfied[k] & !done == 0 {
                    continue;
                }
                self.go(k + 1, done | self.satisfied[k], total + size, used + 1);
            }
        }
    }
    let mut walk = Walk {
        columns: &columns,
        satisfied: &satisfied,
        all,
        cap: ground_cap,
        best: u32::MAX,
    };
    walk.go(0, 0, 0, 0);
    if walk.best == u32::MAX {
        return Err(Error::premise(format!("no valid family uses at most {ground_cap} ground elements")));
    }
    Ok(walk.best as usize)
}
