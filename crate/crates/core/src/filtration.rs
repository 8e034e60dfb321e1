//! The filtration of the permutation operad as a bimodule over its
//! separable suboperad.
//!
//! Writing `Sep` for the suboperad generated by 12 and 21 (all separable
//! permutations), the filtration starts from `P₂ = Sep` with generator set
//! `G₂ = {12, 21}`, and for `n > 2` takes `G_n` to be the arity-n
//! permutations missing from `P_{n−1}`, and `P_n` the `Sep`-bimodule
//! generated by all `G_i`, `i ≤ n`. Membership is computed two ways: a
//! generative brute-force closure under single-step left and right actions
//! (each action strictly increases arity, so a bottom-up sweep per arity is
//! exhaustive), and a fast structural criterion on the substitution
//! decomposition tree. Level sets are dense bit sets indexed by the Lehmer
//! rank of a permutation, so iteration order is lexicographic and the
//! construction is deterministic.

use rayon::prelude::*;

use crate::decompose::{decompose, eval_tree, DecompositionTree};
use crate::perm::Permutation;

/// Hard cap on arities handled by the filtration machinery; `10!` bit sets
/// are the largest we materialize.
pub const FILTRATION_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiltrationError {
    #[error("arity {0} exceeds the filtration cap {FILTRATION_CAP}")]
    CapExceeded(usize),
    #[error("module index must be at least 2, found {0}")]
    BadModuleIndex(usize),
    #[error("cyclic arrangement length {0} exceeds the cap {1}")]
    CycleCapExceeded(usize, usize),
}

/// Per-arity cardinalities of one filtration level, plus the generator
/// counts that feed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    /// Module index m of `P_m`.
    pub module: usize,
    /// `(arity, |P_m(arity)|)` for arities `2..=max_arity`.
    pub counts: Vec<(usize, u64)>,
    /// `(n, |G_n|)` for `n = 2..=module`.
    pub generator_counts: Vec<(usize, u64)>,
}

// Dense set of arity-n permutations addressed by Lehmer rank; lexicographic
// iteration comes for free.
#[derive(Clone)]
struct LevelSet {
    arity: usize,
    bits: Vec<u64>,
    len: usize,
}

impl LevelSet {
    fn new(arity: usize) -> Self {
        let capacity = factorial(arity);
        LevelSet {
            arity,
            bits: vec![0; capacity.div_ceil(64)],
            len: 0,
        }
    }

    fn insert(&mut self, p: &Permutation) {
        self.insert_rank(lehmer_rank(p));
    }

    fn insert_rank(&mut self, rank: usize) {
        let (word, bit) = (rank / 64, rank % 64);
        if self.bits[word] >> bit & 1 == 0 {
            self.bits[word] |= 1 << bit;
            self.len += 1;
        }
    }

    fn contains(&self, p: &Permutation) -> bool {
        let rank = lehmer_rank(p);
        self.bits[rank / 64] >> (rank % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.len
    }

    fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        let arity = self.arity;
        self.bits
            .iter()
            .enumerate()
            .flat_map(move |(w, &word)| {
                (0..64).filter_map(move |b| (word >> b & 1 == 1).then_some(w * 64 + b))
            })
            .map(move |rank| lehmer_unrank(arity, rank))
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn lehmer_rank(p: &Permutation) -> usize {
    let n = p.arity();
    let mut rank = 0;
    for j in 1..=n {
        let v = p.at(j);
        let smaller_remaining = (j + 1..=n).filter(|&k| p.at(k) < v).count();
        rank = rank * (n - j + 1) + smaller_remaining;
    }
    rank
}

fn lehmer_unrank(n: usize, mut rank: usize) -> Permutation {
    let mut digits = vec![0usize; n];
    for j in (0..n).rev() {
        let base = n - j;
        digits[j] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    let entries: Vec<usize> = digits.into_iter().map(|d| pool.remove(d)).collect();
    Permutation::from_one_line(entries).expect("unrank yields a bijection")
}

/// The filtration up to a maximal handled arity: the separable level sets
/// and every generator set `G_n`, `n ≤ max_arity`. Read-only once built.
pub struct Filtration {
    max_arity: usize,
    // sep[k] = separable permutations of arity k, k >= 2
    sep: Vec<LevelSet>,
    // gens[n] = G_n in lexicographic order, n >= 2
    gens: Vec<Vec<Permutation>>,
}

impl Filtration {
    /// Computes the separable levels and `G_2 ..= G_max_arity`.
    pub fn build(max_arity: usize) -> Result<Self, FiltrationError> {
        if !(2..=FILTRATION_CAP).contains(&max_arity) {
            return Err(FiltrationError::CapExceeded(max_arity));
        }
        let sep = separable_levels(max_arity);
        let mut gens: Vec<Vec<Permutation>> = vec![Vec::new(); max_arity + 1];
        gens[2] = vec![
            Permutation::identity(2),
            Permutation::from_one_line([2, 1]).unwrap(),
        ];
        let mut this = Filtration {
            max_arity,
            sep,
            gens,
        };
        for n in 3..=max_arity {
            // G_n = S_n minus the arity-n component of P_{n-1}
            let reached = this.module_level_sets(n - 1, n);
            let mut g = Vec::new();
            for rank in 0..factorial(n) {
                let p = lehmer_unrank(n, rank);
                if !reached[n].contains(&p) {
                    g.push(p);
                }
            }
            this.gens[n] = g;
        }
        Ok(this)
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// The generator set `G_n` in lexicographic order.
    pub fn generators(&self, n: usize) -> Result<&[Permutation], FiltrationError> {
        if n < 2 {
            return Err(FiltrationError::BadModuleIndex(n));
        }
        if n > self.max_arity {
            return Err(FiltrationError::CapExceeded(n));
        }
        Ok(&self.gens[n])
    }

    /// `(n, |G_n|)` for `n = 2..=max_arity`.
    pub fn generator_counts(&self) -> Vec<(usize, u64)> {
        (2..=self.max_arity)
            .map(|n| (n, self.gens[n].len() as u64))
            .collect()
    }

    /// True iff sigma belongs to some `G_n`.
    pub fn is_generator(&self, sigma: &Permutation) -> Result<bool, FiltrationError> {
        let n = sigma.arity();
        if n < 2 {
            return Ok(false);
        }
        Ok(self.generators(n)?.contains(sigma))
    }

    // Level sets of P_m for arities 2..=max_arity, index = arity. The
    // closure is staged bottom-up: every arity-K element is a seed or a
    // single action of a separable element on a lower-arity element.
    // Candidate generation within a stage is data-parallel; bit-set
    // insertion commutes, so the merged level is independent of the
    // partitioning.
    #[allow(clippy::needless_range_loop)] // q indexes two arrays in lockstep
    fn module_level_sets(&self, m: usize, max_arity: usize) -> Vec<LevelSet> {
        let mut levels: Vec<LevelSet> = (0..=max_arity).map(LevelSet::new).collect();
        for k in 2..=max_arity {
            if k <= m {
                for g in &self.gens[k] {
                    levels[k].insert(g);
                }
            }
            for q in 2..k {
                let p = k - q + 1;
                let lower: Vec<Permutation> = levels[q].iter().collect();
                let ranks: Vec<usize> = lower
                    .par_iter()
                    .flat_map_iter(|t| {
                        let mut out = Vec::new();
                        for a in self.sep[p].iter() {
                            for i in 1..=p {
                                out.push(lehmer_rank(&a.compose(i, t).expect("valid position")));
                            }
                            for j in 1..=q {
                                out.push(lehmer_rank(&t.compose(j, &a).expect("valid position")));
                            }
                        }
                        out
                    })
                    .collect();
                for rank in ranks {
                    levels[k].insert_rank(rank);
                }
            }
        }
        levels
    }

    /// Brute-force membership: sigma ∈ P_m, via the generative closure.
    /// Generators of arity beyond sigma's cannot contribute, so large `m`
    /// is clamped rather than rejected.
    pub fn membership_bruteforce(
        &self,
        sigma: &Permutation,
        m: usize,
    ) -> Result<bool, FiltrationError> {
        if m < 2 {
            return Err(FiltrationError::BadModuleIndex(m));
        }
        let arity = sigma.arity();
        if arity > self.max_arity {
            return Err(FiltrationError::CapExceeded(arity));
        }
        if arity == 1 {
            return Ok(true);
        }
        let levels = self.module_level_sets(m.min(arity), arity);
        Ok(levels[arity].contains(sigma))
    }

    /// Per-arity cardinalities of `P_m`.
    pub fn filtration_counts(
        &self,
        m: usize,
        max_arity: usize,
    ) -> Result<FiltrationReport, FiltrationError> {
        if m < 2 {
            return Err(FiltrationError::BadModuleIndex(m));
        }
        if max_arity > self.max_arity || m > self.max_arity {
            return Err(FiltrationError::CapExceeded(max_arity.max(m)));
        }
        let levels = self.module_level_sets(m, max_arity);
        Ok(FiltrationReport {
            module: m,
            counts: (2..=max_arity)
                .map(|k| (k, levels[k].len() as u64))
                .collect(),
            generator_counts: (2..=m).map(|n| (n, self.gens[n].len() as u64)).collect(),
        })
    }

    /// The membership predicate of `P_m` precomputed for bulk sweeps.
    pub fn membership_table(&self, m: usize, max_arity: usize) -> ModuleLevels {
        ModuleLevels {
            module: m,
            levels: self.module_level_sets(m, max_arity),
        }
    }
}

/// Precomputed level sets of one `P_m`, read-only.
pub struct ModuleLevels {
    module: usize,
    levels: Vec<LevelSet>,
}

impl ModuleLevels {
    pub fn module(&self) -> usize {
        self.module
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        let arity = sigma.arity();
        arity == 1 || (arity < self.levels.len() && self.levels[arity].contains(sigma))
    }
}

/// The minimal generator seed of a permutation: the subtree of the
/// decomposition spanned by its simple nodes, with the separable context
/// stripped at the root and every separable appendage contracted.
///
/// `None` for separable permutations. Otherwise `sigma` lies in `P_m`
/// exactly when the seed arity is at most `m`: the seed reaches `sigma`
/// through left and right actions by separable elements, and no smaller
/// generator can, because those actions preserve the nesting pattern of
/// simple nodes.
pub fn minimal_seed(sigma: &Permutation) -> Option<Permutation> {
    let tree = decompose(sigma);
    if tree.simple_node_count() == 0 {
        return None;
    }
    let lca = descend_to_lca(&tree);
    let reduced = reduce_at_root(lca);
    Some(eval_tree(&reduced).expect("reduced tree is well formed"))
}

/// Fast membership: sigma ∈ P_m iff separable or its minimal generator
/// seed has arity ≤ m. Agrees with the brute-force closure everywhere.
pub fn membership_fast(sigma: &Permutation, m: usize) -> bool {
    match minimal_seed(sigma) {
        None => true,
        Some(seed) => seed.arity() <= m,
    }
}

fn contains_simple(t: &DecompositionTree) -> bool {
    t.simple_node_count() > 0
}

// Walk down while exactly one child carries all the simple nodes; the
// stopping node is the least common ancestor of every simple node.
fn descend_to_lca(tree: &DecompositionTree) -> &DecompositionTree {
    let mut node = tree;
    loop {
        match node {
            DecompositionTree::Simple(..) => return node,
            DecompositionTree::Plus(kids) | DecompositionTree::Minus(kids) => {
                let mut carriers = kids.iter().filter(|k| contains_simple(k));
                let first = carriers.next().expect("LCA path carries simple nodes");
                if carriers.next().is_none() {
                    node = first;
                } else {
                    return node;
                }
            }
            DecompositionTree::Leaf => unreachable!("leaf cannot carry simple nodes"),
        }
    }
}

// At the root of the seed the enclosing separable context can also absorb
// leading and trailing separable children of a linear node; interior runs
// and everything below only contract to single leaves.
fn reduce_at_root(node: &DecompositionTree) -> DecompositionTree {
    match node {
        DecompositionTree::Simple(skel, kids) => {
            DecompositionTree::Simple(skel.clone(), kids.iter().map(reduce_child).collect())
        }
        DecompositionTree::Plus(kids) => {
            DecompositionTree::Plus(reduce_linear_children(kids, true))
        }
        DecompositionTree::Minus(kids) => {
            DecompositionTree::Minus(reduce_linear_children(kids, true))
        }
        DecompositionTree::Leaf => unreachable!("LCA is never a leaf"),
    }
}

fn reduce_inner(node: &DecompositionTree) -> DecompositionTree {
    match node {
        DecompositionTree::Leaf => DecompositionTree::Leaf,
        DecompositionTree::Simple(skel, kids) => {
            DecompositionTree::Simple(skel.clone(), kids.iter().map(reduce_child).collect())
        }
        DecompositionTree::Plus(kids) => {
            DecompositionTree::Plus(reduce_linear_children(kids, false))
        }
        DecompositionTree::Minus(kids) => {
            DecompositionTree::Minus(reduce_linear_children(kids, false))
        }
    }
}

fn reduce_child(kid: &DecompositionTree) -> DecompositionTree {
    if contains_simple(kid) {
        reduce_inner(kid)
    } else {
        DecompositionTree::Leaf
    }
}

// Maximal runs of simple-free children become one leaf each; at the seed
// root, boundary runs disappear into the context instead.
fn reduce_linear_children(kids: &[DecompositionTree], at_root: bool) -> Vec<DecompositionTree> {
    let mut out = Vec::new();
    let mut in_free_run = false;
    for kid in kids {
        if contains_simple(kid) {
            out.push(reduce_inner(kid));
            in_free_run = false;
        } else {
            if !in_free_run {
                out.push(DecompositionTree::Leaf);
            }
            in_free_run = true;
        }
    }
    if at_root {
        if !contains_simple(&kids[0]) {
            out.remove(0);
        }
        if !contains_simple(kids.last().unwrap()) {
            out.pop();
        }
    }
    out
}

// Separable level sets by self-closure from {12, 21}: every separable
// permutation of arity >= 3 is a single action of a smaller separable on a
// smaller separable.
#[allow(clippy::needless_range_loop)] // q indexes two arrays in lockstep
fn separable_levels(max_arity: usize) -> Vec<LevelSet> {
    let mut sep: Vec<LevelSet> = (0..=max_arity).map(LevelSet::new).collect();
    if max_arity >= 2 {
        sep[2].insert(&Permutation::identity(2));
        sep[2].insert(&Permutation::from_one_line([2, 1]).unwrap());
    }
    for k in 3..=max_arity {
        let mut stage = LevelSet::new(k);
        for q in 2..k {
            let p = k - q + 1;
            for t in sep[q].iter() {
                for a in sep[p].iter() {
                    for i in 1..=p {
                        stage.insert(&a.compose(i, &t).expect("valid position"));
                    }
                }
            }
        }
        sep[k] = stage;
    }
    sep
}

/// Convenience wrapper: `(n, |G_n|)` for `n = 2..=n_max`.
pub fn generator_counts(n_max: usize) -> Result<Vec<(usize, u64)>, FiltrationError> {
    Ok(Filtration::build(n_max)?.generator_counts())
}

/// Convenience wrapper building a fresh filtration for one table.
pub fn filtration_counts(m: usize, max_arity: usize) -> Result<FiltrationReport, FiltrationError> {
    Filtration::build(max_arity.max(m))?.filtration_counts(m, max_arity)
}

/// Convenience wrapper for one membership query.
pub fn membership_bruteforce(sigma: &Permutation, m: usize) -> Result<bool, FiltrationError> {
    if m < 2 {
        return Err(FiltrationError::BadModuleIndex(m));
    }
    Filtration::build(sigma.arity().max(2))?.membership_bruteforce(sigma, m)
}

/// Cap for direct cyclic-arrangement enumeration.
pub const CYCLE_CAP: usize = 12;

/// Number of ways of cyclically arranging `1..=p` so that no two adjacent
/// entries differ by 1 cyclically (1 and p count as differing by 1).
/// Arrangements are counted up to rotation; the two orientations of a cycle
/// are distinct. Shifting the argument by one, this counts the generator
/// sets: the count at `p` equals `|G_{p−1}|` for `p ≥ 5`.
pub fn nonconsecutive_cycle_count(p: usize) -> Result<u64, FiltrationError> {
    if p == 0 || p > CYCLE_CAP {
        return Err(FiltrationError::CycleCapExceeded(p, CYCLE_CAP));
    }
    if p == 1 {
        return Ok(1);
    }
    let forbidden = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d == 1 || d == p - 1
    };
    // fix 1 first to quotient by rotation, extend with pruning
    let mut used = vec![false; p + 1];
    used[1] = true;
    let mut count = 0u64;
    let mut seq = vec![1usize];
    dfs_cycles(&mut seq, &mut used, p, &forbidden, &mut count);
    Ok(count)
}

fn dfs_cycles(
    seq: &mut Vec<usize>,
    used: &mut [bool],
    p: usize,
    forbidden: &impl Fn(usize, usize) -> bool,
    count: &mut u64,
) {
    if seq.len() == p {
        if !forbidden(*seq.last().unwrap(), seq[0]) {
            *count += 1;
        }
        return;
    }
    let last = *seq.last().unwrap();
    for v in 2..=p {
        if !used[v] && !forbidden(last, v) {
            used[v] = true;
            seq.push(v);
            dfs_cycles(seq, used, p, forbidden, count);
            seq.pop();
            used[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lehmer_rank_round_trips() {
        for n in 1..=6 {
            for (expected_rank, perm) in all_permutations(n).unwrap().enumerate() {
                assert_eq!(lehmer_rank(&perm), expected_rank, "{perm}");
                assert_eq!(lehmer_unrank(n, expected_rank), perm);
            }
        }
    }

    #[test]
    fn separable_levels_match_schroeder() {
        let sep = separable_levels(8);
        let expected = [2usize, 6, 22, 90, 394, 1806, 8558];
        for (k, &want) in (2..=8).zip(expected.iter()) {
            assert_eq!(sep[k].len(), want, "arity {k}");
        }
        // closure-generated sets coincide with the pattern-avoidance test
        #[allow(clippy::needless_range_loop)]
        for k in 2..=6 {
            for perm in all_permutations(k).unwrap() {
                assert_eq!(sep[k].contains(&perm), perm.is_separable(), "{perm}");
            }
        }
    }

    #[test]
    fn generator_sets_match_paper() {
        let f = Filtration::build(6).unwrap();
        assert!(f.generators(3).unwrap().is_empty());
        let g4: Vec<String> = f
            .generators(4)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(g4, vec!["2413", "3142"]);
        let g5: Vec<String> = f
            .generators(5)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let mut expected = vec!["42513", "31524", "35142", "24153", "41352", "25314"];
        expected.sort();
        assert_eq!(g5, expected);
        assert_eq!(f.generators(6).unwrap().len(), 46);
    }

    #[test]
    fn generator_counts_match_published_sequence() {
        let f = Filtration::build(7).unwrap();
        assert_eq!(
            f.generator_counts(),
            vec![(2, 2), (3, 0), (4, 2), (5, 6), (6, 46), (7, 354)]
        );
    }

    #[test]
    fn filtration_tables_match_paper() {
        let f = Filtration::build(7).unwrap();
        let table = |m: usize| -> Vec<u64> {
            f.filtration_counts(m, 7)
                .unwrap()
                .counts
                .into_iter()
                .map(|(_, c)| c)
                .collect()
        };
        assert_eq!(table(2), vec![2, 6, 22, 90, 394, 1806]);
        assert_eq!(table(3), vec![2, 6, 22, 90, 394, 1806]);
        assert_eq!(table(4), vec![2, 6, 24, 114, 590, 3182]);
        assert_eq!(table(5), vec![2, 6, 24, 120, 674, 3950]);
        assert_eq!(table(6), vec![2, 6, 24, 120, 720, 4686]);
        assert_eq!(table(7), vec![2, 6, 24, 120, 720, 5040]);
    }

    #[test]
    fn membership_examples() {
        let f = Filtration::build(5).unwrap();
        // separable permutations are in every level
        assert!(f.membership_bruteforce(&p("123"), 2).unwrap());
        assert!(membership_fast(&p("123"), 2));
        // 2413 enters at m = 4
        assert!(!f.membership_bruteforce(&p("2413"), 3).unwrap());
        assert!(f.membership_bruteforce(&p("2413"), 4).unwrap());
        assert!(!membership_fast(&p("2413"), 3));
        assert!(membership_fast(&p("2413"), 4));
        // 3156427 has the unique simple skeleton 3142
        assert!(membership_fast(&p("3156427"), 4));
        // arity-7 element with two simple nodes enters only at m = 7
        let double = p("2413").compose(1, &p("2413")).unwrap();
        assert_eq!(decompose(&double).simple_node_count(), 2);
        assert!(!membership_fast(&double, 6));
        assert!(membership_fast(&double, 7));
        assert_eq!(minimal_seed(&double).unwrap(), double);
    }

    #[test]
    fn minimal_seed_strips_context_and_appendages() {
        assert_eq!(minimal_seed(&p("123")), None);
        assert_eq!(minimal_seed(&p("2413")).unwrap(), p("2413"));
        // one inflated slot and one context leaf both strip away
        assert_eq!(minimal_seed(&p("24513")).unwrap(), p("2413"));
        let wrapped = p("12").compose(1, &p("2413")).unwrap();
        assert_eq!(minimal_seed(&wrapped).unwrap(), p("2413"));
        assert_eq!(minimal_seed(&p("3156427")).unwrap(), p("3142"));
    }

    #[test]
    fn fast_and_bruteforce_agree_exhaustively_small() {
        let f = Filtration::build(6).unwrap();
        for m in 2..=6 {
            let table = f.membership_table(m, 6);
            for n in 2..=6 {
                for perm in all_permutations(n).unwrap() {
                    assert_eq!(
                        table.contains(&perm),
                        membership_fast(&perm, m),
                        "sigma={perm} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn filtration_is_nested_and_stabilizes() {
        let f = Filtration::build(6).unwrap();
        let tables: Vec<ModuleLevels> = (2..=6).map(|m| f.membership_table(m, 6)).collect();
        for n in 2..=6 {
            for perm in all_permutations(n).unwrap() {
                for w in tables.windows(2) {
                    assert!(
                        !w[0].contains(&perm) || w[1].contains(&perm),
                        "nesting fails at {perm}"
                    );
                }
            }
        }
        // P_m(k) = S_k for k <= m
        for m in 2..=6usize {
            let report = f.filtration_counts(m, 6).unwrap();
            for &(k, count) in &report.counts {
                if k <= m {
                    assert_eq!(count, factorial(k) as u64, "P_{m}({k})");
                }
            }
        }
    }

    #[test]
    fn generators_are_nonpercolating_and_dihedral_closed() {
        let f = Filtration::build(7).unwrap();
        for n in 4..=7 {
            let gens = f.generators(n).unwrap();
            for g in gens {
                assert!(!g.to_grid().is_percolating(), "{g} percolates");
                for image in g.dihedral_orbit() {
                    assert!(gens.contains(&image), "orbit of {g} leaves G_{n}");
                }
            }
        }
    }

    #[test]
    fn nonconsecutive_cycle_counts() {
        assert_eq!(nonconsecutive_cycle_count(2).unwrap(), 0);
        assert_eq!(nonconsecutive_cycle_count(3).unwrap(), 0);
        assert_eq!(nonconsecutive_cycle_count(4).unwrap(), 0);
        assert_eq!(nonconsecutive_cycle_count(5).unwrap(), 2);
        assert!(nonconsecutive_cycle_count(13).is_err());
    }

    #[test]
    fn non_simple_generators_at_arity_seven_are_double_inflations() {
        // |G_7| exceeds the simple count by exactly the 16 one-slot
        // inflations of 2413/3142 by 2413/3142
        let f = Filtration::build(7).unwrap();
        let g7 = f.generators(7).unwrap();
        let simple_count = g7.iter().filter(|g| g.is_simple()).count();
        assert_eq!(g7.len() - simple_count, 16);
        let skeletons = [p("2413"), p("3142")];
        let mut expected: Vec<Permutation> = Vec::new();
        for outer in &skeletons {
            for slot in 1..=4 {
                for inner in &skeletons {
                    expected.push(outer.compose(slot, inner).unwrap());
                }
            }
        }
        expected.sort();
        expected.dedup();
        assert_eq!(expected.len(), 16);
        for witness in &expected {
            assert!(!witness.is_simple());
            assert!(g7.contains(witness), "{witness} missing from G_7");
            let tree = decompose(witness);
            assert_eq!(tree.simple_node_count(), 2);
            for skel in tree.simple_skeletons() {
                assert!(skeletons.contains(skel));
            }
        }
    }

    #[test]
    fn cycle_count_matches_generators_at_shift_one() {
        let f = Filtration::build(6).unwrap();
        for n in 4..=6 {
            assert_eq!(
                nonconsecutive_cycle_count(n + 1).unwrap(),
                f.generators(n).unwrap().len() as u64,
                "shift mismatch at n={n}"
            );
        }
    }
}
