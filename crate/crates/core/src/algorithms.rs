//! Candidate-chain algorithms for right transversals, double-coset
//! representatives (middle transversals) and middle sub-factors.
//!
//! All three share one loop. Starting from a seed set `C(-1)` and a chosen
//! `g_0 ∈ C(-1)`, each step intersects the candidate set with a cut
//! determined by the last chosen element and picks the next element from
//! what is left, stopping once the candidate set is empty:
//!
//! | algorithm | seed `C(-1)` | cut for `g_n`   |
//! |-----------|--------------|-----------------|
//! | RTA       | `G`          | `H^c g_n`       |
//! | MTA       | `G`          | `(H g_n K)^c`   |
//! | MSFA      | `Mid(H, K)`  | `(H g_n K)^c`   |
//!
//! The free choice at each step is resolved by a [`ChoicePolicy`]. The
//! `enumerate_all_*` functions instead follow every choice.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::products::{mid_director_subgroups, sandwich, triple_product};
use crate::set::ElementSet;

pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// How `g_{n+1}` is picked from a nonempty candidate set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ChoicePolicy {
    /// Least element index.
    #[default]
    Smallest,
    /// Uniform choice from a ChaCha8 stream with this seed.
    Random(u64),
    /// Explicit `g_1, g_2, ...` (not `g_0`). Each must be a current
    /// candidate. Once the script runs out, falls back to `Smallest`.
    Scripted(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Recording {
    /// Chain cardinalities only.
    #[default]
    Sizes,
    /// Chain cardinalities and the candidate sets themselves.
    Full,
}

#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub policy: ChoicePolicy,
    pub recording: Recording,
}

impl RunConfig {
    pub fn new(policy: ChoicePolicy) -> Self {
        RunConfig {
            policy,
            recording: Recording::Sizes,
        }
    }

    pub fn full(mut self) -> Self {
        self.recording = Recording::Full;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "RTA")]
    Rta,
    #[serde(rename = "MTA")]
    Mta,
    #[serde(rename = "MSFA")]
    Msfa,
    #[serde(rename = "Extension")]
    Extension,
}

/// Record of one run.
///
/// `chain_sizes[j]` (and `chains[j]` when recorded) is the candidate set
/// `C(chain_start + j)`. Ordinary runs start at `C(-1)`; an extension run
/// starts at `C*(N)` where `N` is the sub-factor run's step count.
/// `chosen` always holds the full sequence `g_0, g_1, ...`, and the element
/// `chosen[i]` was drawn from `C(i - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgoTrace {
    pub algorithm: Algorithm,
    pub h: ElementSet,
    pub k: Option<ElementSet>,
    pub chosen: Vec<usize>,
    pub chain_start: isize,
    pub chain_sizes: Vec<usize>,
    pub chains: Option<Vec<ElementSet>>,
    /// `N`, the index of the first empty candidate set.
    pub n_steps: usize,
    pub output: ElementSet,
}

struct Chooser<'p> {
    policy: &'p ChoicePolicy,
    rng: Option<ChaCha8Rng>,
    scripted: usize,
}

impl<'p> Chooser<'p> {
    fn new(policy: &'p ChoicePolicy) -> Self {
        let rng = match policy {
            ChoicePolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
            _ => None,
        };
        Chooser {
            policy,
            rng,
            scripted: 0,
        }
    }

    /// Picks `g_step` from the nonempty `candidates`.
    fn pick(&mut self, step: usize, candidates: &ElementSet) -> Result<usize> {
        match self.policy {
            ChoicePolicy::Smallest => Ok(candidates.first().expect("nonempty candidates")),
            ChoicePolicy::Random(_) => {
                let rng = self.rng.as_mut().unwrap();
                let i = rng.gen_range(0..candidates.len());
                Ok(candidates.iter().nth(i).unwrap())
            }
            ChoicePolicy::Scripted(script) => match script.get(self.scripted) {
                Some(&x) => {
                    self.scripted += 1;
                    if candidates.contains(x) {
                        Ok(x)
                    } else {
                        Err(Error::ScriptedChoiceInvalid { step, element: x })
                    }
                }
                None => Ok(candidates.first().expect("nonempty candidates")),
            },
        }
    }
}

struct ChainRecorder {
    sizes: Vec<usize>,
    sets: Option<Vec<ElementSet>>,
}

impl ChainRecorder {
    fn new(recording: Recording) -> Self {
        ChainRecorder {
            sizes: Vec::new(),
            sets: (recording == Recording::Full).then(Vec::new),
        }
    }

    fn push(&mut self, c: &ElementSet) {
        self.sizes.push(c.len());
        if let Some(sets) = &mut self.sets {
            sets.push(c.clone());
        }
    }
}

/// Continues the chain from `candidates` (which is `C(chosen.len() - 1)`,
/// already recorded) until it empties.
fn drive(
    chosen: &mut Vec<usize>,
    mut candidates: ElementSet,
    cut: impl Fn(usize) -> ElementSet,
    chooser: &mut Chooser<'_>,
    rec: &mut ChainRecorder,
) -> Result<()> {
    while !candidates.is_empty() {
        let next = chooser.pick(chosen.len(), &candidates)?;
        chosen.push(next);
        candidates.intersect_with(&cut(next));
        rec.push(&candidates);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_chain(
    g: &Group,
    algorithm: Algorithm,
    h: &ElementSet,
    k: Option<&ElementSet>,
    seed: ElementSet,
    g0: usize,
    cfg: &RunConfig,
    cut: impl Fn(usize) -> ElementSet,
) -> Result<AlgoTrace> {
    let mut rec = ChainRecorder::new(cfg.recording);
    let mut chooser = Chooser::new(&cfg.policy);
    rec.push(&seed);
    let mut candidates = seed;
    candidates.intersect_with(&cut(g0));
    rec.push(&candidates);
    let mut chosen = vec![g0];
    drive(&mut chosen, candidates, &cut, &mut chooser, &mut rec)?;

    let output = g.set_of(chosen.iter().copied())?;
    Ok(AlgoTrace {
        algorithm,
        h: h.clone(),
        k: k.cloned(),
        n_steps: chosen.len() - 1,
        chosen,
        chain_start: -1,
        chain_sizes: rec.sizes,
        chains: rec.sets,
        output,
    })
}

/// Per-element cut sets, computed once.
fn rta_cuts(g: &Group, h: &ElementSet) -> Vec<ElementSet> {
    let outside = h.complement();
    (0..g.order()).map(|x| g.right_translate(&outside, x)).collect()
}

fn double_coset_cuts(g: &Group, h: &ElementSet, k: &ElementSet) -> Vec<ElementSet> {
    let mut cuts: Vec<Option<ElementSet>> = vec![None; g.order()];
    for x in 0..g.order() {
        if cuts[x].is_some() {
            continue;
        }
        let block = sandwich(g, h, x, k);
        let cut = block.complement();
        for y in block.iter() {
            cuts[y] = Some(cut.clone());
        }
    }
    cuts.into_iter().map(Option::unwrap).collect()
}

/// Right transversal algorithm. Output `{g_0, .., g_N}` has `N + 1 = |G:H|`
/// elements.
pub fn rta(g: &Group, h: &ElementSet, g0: usize, cfg: &RunConfig) -> Result<AlgoTrace> {
    g.require_subgroup(h, "H")?;
    g.check_element(g0)?;
    let outside = h.complement();
    run_chain(g, Algorithm::Rta, h, None, g.full_set(), g0, cfg, |x| {
        g.right_translate(&outside, x)
    })
}

/// Middle transversal algorithm: one representative per double coset
/// `HxK`; `N + 1` is the number of double cosets.
pub fn mta(g: &Group, h: &ElementSet, k: &ElementSet, g0: usize, cfg: &RunConfig) -> Result<AlgoTrace> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    g.check_element(g0)?;
    run_chain(g, Algorithm::Mta, h, Some(k), g.full_set(), g0, cfg, |x| {
        sandwich(g, h, x, k).complement()
    })
}

/// Middle sub-factor algorithm: a maximal `X` with `H·X·K` direct, grown
/// inside `Mid(H, K)`.
pub fn msfa(g: &Group, h: &ElementSet, k: &ElementSet, g0: usize, cfg: &RunConfig) -> Result<AlgoTrace> {
    let mid = mid_director_subgroups(g, h, k)?;
    g.check_element(g0)?;
    if mid.is_empty() {
        return Err(Error::MidEmpty);
    }
    if !mid.contains(g0) {
        return Err(Error::G0NotInMid(g0));
    }
    run_chain(g, Algorithm::Msfa, h, Some(k), mid, g0, cfg, |x| {
        sandwich(g, h, x, k).complement()
    })
}

/// Grows a middle sub-factor `X` into a middle transversal `X* ⊇ X` by
/// reseeding the chain with `G \ HXK` and dropping the `Mid` restriction.
///
/// When `HXK = G` already, the input trace is returned unchanged.
pub fn extend_to_middle_transversal(
    g: &Group,
    h: &ElementSet,
    k: &ElementSet,
    msfa_trace: &AlgoTrace,
    cfg: &RunConfig,
) -> Result<AlgoTrace> {
    g.owns(h)?;
    g.owns(k)?;
    if msfa_trace.algorithm != Algorithm::Msfa
        || msfa_trace.h.group_id() != g.id()
        || &msfa_trace.h != h
        || msfa_trace.k.as_ref() != Some(k)
    {
        return Err(Error::TraceMismatch);
    }
    let covered = triple_product(g, h, &msfa_trace.output, k)?;
    if covered.is_full() {
        return Ok(msfa_trace.clone());
    }

    let mut rec = ChainRecorder::new(cfg.recording);
    let mut chooser = Chooser::new(&cfg.policy);
    let candidates = covered.complement();
    rec.push(&candidates);
    let mut chosen = msfa_trace.chosen.clone();
    drive(
        &mut chosen,
        candidates,
        |x| sandwich(g, h, x, k).complement(),
        &mut chooser,
        &mut rec,
    )?;
    let output = g.set_of(chosen.iter().copied())?;
    Ok(AlgoTrace {
        algorithm: Algorithm::Extension,
        h: h.clone(),
        k: Some(k.clone()),
        n_steps: chosen.len() - 1,
        chosen,
        chain_start: msfa_trace.n_steps as isize,
        chain_sizes: rec.sizes,
        chains: rec.sets,
        output,
    })
}

/// Settings for the exhaustive `enumerate_all_*` searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Bound on both result sets and explored search states.
    pub limit: usize,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    /// Start only from the block (coset or double coset) of the least seed
    /// element. Every output meets that block exactly once, so nothing is
    /// lost.
    pub upto_symmetry: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            limit: DEFAULT_ENUM_LIMIT,
            jobs: 1,
            upto_symmetry: false,
        }
    }
}

/// Follows every branch of the chain from every `g_0`.
///
/// A search state is determined by the set of elements chosen so far (the
/// candidate set is the seed intersected with their cuts, whatever the
/// order), so states are deduplicated on that set.
fn explore(g: &Group, seed: &ElementSet, cuts: &[ElementSet], cfg: &EnumConfig) -> Result<BTreeSet<ElementSet>> {
    let roots: Vec<usize> = match (cfg.upto_symmetry, seed.first()) {
        (true, Some(first)) => seed.difference(&cuts[first]).to_vec(),
        _ => seed.to_vec(),
    };
    let visited: Mutex<HashSet<ElementSet>> = Mutex::new(HashSet::new());
    let results: Mutex<BTreeSet<ElementSet>> = Mutex::new(BTreeSet::new());
    let states = AtomicUsize::new(0);
    let over = Error::EnumerationLimitExceeded { limit: cfg.limit };

    let from_root = |g0: usize| -> Result<()> {
        let mut start = seed.clone();
        start.intersect_with(&cuts[g0]);
        let chosen = g.singleton(g0);
        if !visited.lock().unwrap().insert(chosen.clone()) {
            return Ok(());
        }
        let mut stack = vec![(chosen, start)];
        while let Some((chosen, candidates)) = stack.pop() {
            if states.fetch_add(1, Ordering::Relaxed) >= cfg.limit {
                return Err(over.clone());
            }
            if candidates.is_empty() {
                let mut out = results.lock().unwrap();
                out.insert(chosen);
                if out.len() > cfg.limit {
                    return Err(over.clone());
                }
                continue;
            }
            for x in candidates.iter() {
                let next = chosen.with(x);
                if visited.lock().unwrap().insert(next.clone()) {
                    stack.push((next, candidates.intersection(&cuts[x])));
                }
            }
        }
        Ok(())
    };

    if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| roots.par_iter().try_for_each(|&g0| from_root(g0)))?;
    } else {
        roots.iter().try_for_each(|&g0| from_root(g0))?;
    }
    Ok(results.into_inner().unwrap())
}

/// Every right transversal reachable by the right transversal algorithm.
pub fn enumerate_all_right_transversals(g: &Group, h: &ElementSet, cfg: &EnumConfig) -> Result<BTreeSet<ElementSet>> {
    g.require_subgroup(h, "H")?;
    explore(g, &g.full_set(), &rta_cuts(g, h), cfg)
}

/// Every middle transversal reachable by the middle transversal algorithm.
pub fn enumerate_all_middle_transversals(
    g: &Group,
    h: &ElementSet,
    k: &ElementSet,
    cfg: &EnumConfig,
) -> Result<BTreeSet<ElementSet>> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    explore(g, &g.full_set(), &double_coset_cuts(g, h, k), cfg)
}

/// Every middle sub-factor reachable by the middle sub-factor algorithm.
pub fn enumerate_all_middle_subfactors(
    g: &Group,
    h: &ElementSet,
    k: &ElementSet,
    cfg: &EnumConfig,
) -> Result<BTreeSet<ElementSet>> {
    let mid = mid_director_subgroups(g, h, k)?;
    if mid.is_empty() {
        return Err(Error::MidEmpty);
    }
    explore(g, &mid, &double_coset_cuts(g, h, k), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::oracle;
    use crate::products::is_middle_transversal;
    use crate::word::{parse_element, parse_subset};

    fn group(spec: GroupSpec) -> Group {
        build_group(&spec).unwrap()
    }

    fn set(g: &Group, s: &str) -> ElementSet {
        parse_subset(g, s).unwrap()
    }

    fn el(g: &Group, s: &str) -> usize {
        parse_element(g, s).unwrap()
    }

    fn script(g: &Group, items: &[&str]) -> RunConfig {
        RunConfig::new(ChoicePolicy::Scripted(items.iter().map(|s| el(g, s)).collect())).full()
    }

    #[test]
    fn rta_on_z12() {
        let z = group(GroupSpec::Cyclic { n: 12 });
        let h = set(&z, "0,3,6,9");
        let t = rta(&z, &h, 0, &script(&z, &["1", "2"])).unwrap();
        assert_eq!(t.n_steps, 2);
        assert_eq!(t.output, set(&z, "0,1,2"));
        assert_eq!(t.chain_sizes, [12, 8, 4, 0]);
        let chains = t.chains.unwrap();
        assert_eq!(chains[1], set(&z, "1,2,4,5,7,8,10,11"));
        assert_eq!(chains[2], set(&z, "2,5,8,11"));

        let whole = rta(&z, &z.full_set(), 5, &RunConfig::default()).unwrap();
        assert_eq!((whole.n_steps, whole.output.to_vec()), (0, vec![5]));

        let trivial = rta(&z, &z.singleton(0), 0, &RunConfig::default()).unwrap();
        assert_eq!(trivial.n_steps, 11);
        assert!(trivial.output.is_full());
    }

    #[test]
    fn rta_rejects_bad_input() {
        let z = group(GroupSpec::Cyclic { n: 12 });
        assert!(matches!(
            rta(&z, &set(&z, "0,1"), 0, &RunConfig::default()),
            Err(Error::NotASubgroup("H"))
        ));
        let h = set(&z, "0,3,6,9");
        assert!(matches!(
            rta(&z, &h, 0, &script(&z, &["3"])),
            Err(Error::ScriptedChoiceInvalid { step: 1, element: 3 })
        ));
        assert!(matches!(
            rta(&z, &h, 40, &RunConfig::default()),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn mta_on_d12() {
        let g = group(GroupSpec::Dihedral { n: 6 });
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        let t = mta(&g, &h, &k, g.identity(), &script(&g, &["a^2"])).unwrap();
        assert_eq!(t.n_steps, 1);
        assert_eq!(t.output, set(&g, "1,a^2"));
        assert_eq!(t.chain_sizes, [12, 4, 0]);
        assert_eq!(t.chains.unwrap()[1], set(&g, "a^2,a^5,ba^2,ba^5"));

        let e = g.singleton(g.identity());
        let all = mta(&g, &e, &e, 0, &RunConfig::default()).unwrap();
        assert!(all.output.is_full());

        let one = mta(&g, &g.full_set(), &k, 7, &RunConfig::default()).unwrap();
        assert_eq!((one.n_steps, one.output.to_vec()), (0, vec![7]));
    }

    #[test]
    fn msfa_on_d12() {
        let g = group(GroupSpec::Dihedral { n: 6 });
        let (h, k) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        let t = msfa(&g, &h, &k, g.identity(), &RunConfig::default().full()).unwrap();
        assert_eq!(t.n_steps, 0);
        assert_eq!(t.output, g.singleton(g.identity()));
        assert_eq!(t.chain_sizes, [8, 0]);

        assert_eq!(msfa(&g, &h, &k, el(&g, "a^2"), &RunConfig::default()), Err(Error::G0NotInMid(2)));

        let (h5, k5) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        assert_eq!(msfa(&g, &h5, &k5, 0, &RunConfig::default()), Err(Error::MidEmpty));
    }

    #[test]
    fn msfa_with_coprime_orders_is_a_middle_transversal() {
        let s3 = group(GroupSpec::Symmetric { n: 3 });
        let (h, k) = (set(&s3, "(),(1 2)"), set(&s3, "(),(1 2 3),(1 3 2)"));
        for g0 in 0..6 {
            let t = msfa(&s3, &h, &k, g0, &RunConfig::default()).unwrap();
            assert!(is_middle_transversal(&s3, &h, &t.output, &k).unwrap());
            assert!(triple_product(&s3, &h, &t.output, &k).unwrap().is_full());
        }
    }

    #[test]
    fn extension_on_d12() {
        let g = group(GroupSpec::Dihedral { n: 6 });
        let (h, k) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        let base = msfa(&g, &h, &k, g.identity(), &RunConfig::default()).unwrap();

        let ext = extend_to_middle_transversal(&g, &h, &k, &base, &script(&g, &["a^2"])).unwrap();
        assert_eq!(ext.algorithm, Algorithm::Extension);
        assert_eq!(ext.n_steps, 1);
        assert_eq!(ext.chain_start, 0);
        assert_eq!(ext.chain_sizes, [4, 0]);
        assert_eq!(ext.output, set(&g, "1,a^2"));
        assert_eq!(ext.chains.unwrap()[0], set(&g, "a^2,a^5,a^2b,a^5b"));

        let ext = extend_to_middle_transversal(&g, &h, &k, &base, &script(&g, &["a^5"])).unwrap();
        assert_eq!(ext.output, set(&g, "1,a^5"));

        let mta_trace = mta(&g, &h, &k, 0, &RunConfig::default()).unwrap();
        assert_eq!(
            extend_to_middle_transversal(&g, &h, &k, &mta_trace, &RunConfig::default()),
            Err(Error::TraceMismatch)
        );
        assert_eq!(
            extend_to_middle_transversal(&g, &k, &h, &base, &RunConfig::default()),
            Err(Error::TraceMismatch)
        );
    }

    #[test]
    fn extension_is_identity_when_already_covering() {
        let z = group(GroupSpec::Cyclic { n: 12 });
        let (h, k) = (set(&z, "0,6"), set(&z, "0,4,8"));
        let base = msfa(&z, &h, &k, 0, &RunConfig::default()).unwrap();
        assert!(triple_product(&z, &h, &base.output, &k).unwrap().is_full());
        let ext = extend_to_middle_transversal(&z, &h, &k, &base, &RunConfig::default()).unwrap();
        assert_eq!(ext, base);
    }

    #[test]
    fn random_policy_is_seeded() {
        let g = group(GroupSpec::Dihedral { n: 6 });
        let e = g.singleton(0);
        let h = set(&g, "1,b");
        let run = |seed| rta(&g, &h, 0, &RunConfig::new(ChoicePolicy::Random(seed))).unwrap();
        assert_eq!(run(7), run(7));
        let distinct: BTreeSet<Vec<usize>> = (0..20).map(|s| run(s).chosen).collect();
        assert!(distinct.len() > 1);
        let t = mta(&g, &e, &h, 3, &RunConfig::new(ChoicePolicy::Random(1))).unwrap();
        assert_eq!(t.output.len(), 6);
    }

    #[test]
    fn enumerations_match_known_counts() {
        let cfg = EnumConfig::default();
        let z = group(GroupSpec::Cyclic { n: 12 });
        assert_eq!(enumerate_all_right_transversals(&z, &set(&z, "0,3,6,9"), &cfg).unwrap().len(), 64);
        let singles = enumerate_all_right_transversals(&z, &z.full_set(), &cfg).unwrap();
        assert_eq!(singles, (0..12).map(|x| z.singleton(x)).collect());

        let s3 = group(GroupSpec::Symmetric { n: 3 });
        assert_eq!(enumerate_all_right_transversals(&s3, &set(&s3, "(),(1 2)"), &cfg).unwrap().len(), 8);

        let g = group(GroupSpec::Dihedral { n: 6 });
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        let mts = enumerate_all_middle_transversals(&g, &h, &k, &cfg).unwrap();
        assert_eq!(mts, oracle::all_middle_transversals(&g, &h, &k, cfg.limit).unwrap());
        assert_eq!(mts.len(), 32);
        assert_eq!(enumerate_all_middle_subfactors(&g, &h, &k, &cfg), Err(Error::MidEmpty));

        let (h, k) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        assert_eq!(enumerate_all_middle_transversals(&g, &h, &k, &cfg).unwrap().len(), 32);
        let subs = enumerate_all_middle_subfactors(&g, &h, &k, &cfg).unwrap();
        let hk = set(&g, "1,a,a^3,a^4,b,ab,a^3b,a^4b");
        assert_eq!(subs, hk.iter().map(|x| g.singleton(x)).collect());
    }

    #[test]
    fn enumeration_modes_agree() {
        let g = group(GroupSpec::Dihedral { n: 6 });
        let (h, k) = (set(&g, "1,b"), set(&g, "1,ba"));
        let base = enumerate_all_middle_transversals(&g, &h, &k, &EnumConfig::default()).unwrap();
        for cfg in [
            EnumConfig { upto_symmetry: true, ..EnumConfig::default() },
            EnumConfig { jobs: 4, ..EnumConfig::default() },
            EnumConfig { jobs: 3, upto_symmetry: true, ..EnumConfig::default() },
        ] {
            assert_eq!(enumerate_all_middle_transversals(&g, &h, &k, &cfg).unwrap(), base);
        }
        let tiny = EnumConfig { limit: 5, ..EnumConfig::default() };
        assert_eq!(
            enumerate_all_middle_transversals(&g, &h, &k, &tiny),
            Err(Error::EnumerationLimitExceeded { limit: 5 })
        );
    }
}
