//! Brute-force ground truth for cross-checking the algorithms.
//!
//! Nothing here calls into [`crate::algorithms`] or [`crate::products`]; only
//! the multiplication table and raw set operations are used.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::ElementSet;

pub const DEFAULT_SUBGROUP_ORDER_BOUND: usize = 24;

/// Disjoint blocks covering the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<ElementSet>,
}

impl Partition {
    pub fn new(g: &Group, blocks: Vec<ElementSet>) -> Result<Partition> {
        let mut seen = g.empty_set();
        for b in &blocks {
            g.owns(b)?;
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(&seen) {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            seen.union_with(b);
        }
        if !seen.is_full() {
            return Err(Error::InvalidPartition("blocks do not cover the group".into()));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(ElementSet::len).collect()
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: usize) -> &ElementSet {
        self.blocks.iter().find(|b| b.contains(x)).expect("partition covers the group")
    }

    /// `s` meets every block in exactly one element.
    pub fn is_system_of_representatives(&self, s: &ElementSet) -> bool {
        self.blocks.iter().all(|b| b.intersection(s).len() == 1)
    }

    /// Every way of choosing one element per block.
    pub fn all_selections(&self, g: &Group, limit: usize) -> Result<BTreeSet<ElementSet>> {
        let total = self
            .blocks
            .iter()
            .try_fold(1usize, |acc, b| acc.checked_mul(b.len()));
        match total {
            Some(t) if t <= limit => {}
            _ => return Err(Error::EnumerationLimitExceeded { limit }),
        }
        let mut acc = vec![g.empty_set()];
        for b in &self.blocks {
            acc = acc
                .iter()
                .flat_map(|partial| b.iter().map(move |x| partial.with(x)))
                .collect();
        }
        Ok(acc.into_iter().collect())
    }
}

fn require_subgroup(g: &Group, s: &ElementSet, label: &'static str) -> Result<()> {
    if g.is_subgroup(s)? {
        Ok(())
    } else {
        Err(Error::NotASubgroup(label))
    }
}

/// `{ a*x*b : a in A, b in B }`, straight from the table.
fn sandwich(g: &Group, a: &ElementSet, x: usize, b: &ElementSet) -> ElementSet {
    let mut out = g.empty_set();
    for p in a.iter() {
        for q in b.iter() {
            out.insert(g.mul(g.mul(p, x), q));
        }
    }
    out
}

fn sweep(g: &Group, block_of: impl Fn(usize) -> ElementSet) -> Result<Partition> {
    let mut assigned = g.empty_set();
    let mut blocks = Vec::new();
    for x in 0..g.order() {
        if assigned.contains(x) {
            continue;
        }
        let b = block_of(x);
        assigned.union_with(&b);
        blocks.push(b);
    }
    Partition::new(g, blocks)
}

/// Right cosets `Hx`.
pub fn right_coset_partition(g: &Group, h: &ElementSet) -> Result<Partition> {
    require_subgroup(g, h, "H")?;
    sweep(g, |x| g.right_translate(h, x))
}

/// Double cosets `HxK`.
pub fn double_coset_partition(g: &Group, h: &ElementSet, k: &ElementSet) -> Result<Partition> {
    require_subgroup(g, h, "H")?;
    require_subgroup(g, k, "K")?;
    sweep(g, |x| sandwich(g, h, x, k))
}

/// One element from each right coset, in every combination.
pub fn all_right_transversals(g: &Group, h: &ElementSet, limit: usize) -> Result<BTreeSet<ElementSet>> {
    right_coset_partition(g, h)?.all_selections(g, limit)
}

/// One element from each double coset, in every combination.
pub fn all_middle_transversals(
    g: &Group,
    h: &ElementSet,
    k: &ElementSet,
    limit: usize,
) -> Result<BTreeSet<ElementSet>> {
    double_coset_partition(g, h, k)?.all_selections(g, limit)
}

/// `x` such that `(a, b) ↦ a·x·b` is injective on `A × B`.
pub fn mid_director_by_definition(g: &Group, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    g.owns(a)?;
    g.owns(b)?;
    let mut out = g.empty_set();
    for x in 0..g.order() {
        let mut hit = g.empty_set();
        let injective = a
            .iter()
            .all(|p| b.iter().all(|q| hit.insert(g.mul(g.mul(p, x), q))));
        if injective {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `a x b = a' x' b'` implies `x = x'`, checked over all six coordinates.
pub fn is_middle_direct_by_definition(g: &Group, a: &ElementSet, x: &ElementSet, b: &ElementSet) -> Result<bool> {
    g.owns(a)?;
    g.owns(x)?;
    g.owns(b)?;
    let triples: Vec<(usize, usize)> = a
        .iter()
        .flat_map(|p| x.iter().flat_map(move |t| b.iter().map(move |q| (t, (p, q)))))
        .map(|(t, (p, q))| (t, g.mul(g.mul(p, t), q)))
        .collect();
    Ok(triples
        .iter()
        .all(|&(t, v)| triples.iter().all(|&(t2, v2)| v != v2 || t == t2)))
}

/// Full uniqueness of `a x b` over all three coordinates.
pub fn is_direct_triple_by_definition(g: &Group, a: &ElementSet, x: &ElementSet, b: &ElementSet) -> Result<bool> {
    g.owns(a)?;
    g.owns(x)?;
    g.owns(b)?;
    let mut hit = g.empty_set();
    Ok(a.iter().all(|p| {
        x.iter()
            .all(|t| b.iter().all(|q| hit.insert(g.mul(g.mul(p, t), q))))
    }))
}

/// All maximal `X` with `H·X·K` direct.
///
/// These are the maximal cliques of the compatibility graph on
/// `Mid(H, K)` where two elements are joined when their double cosets are
/// disjoint. Returns the empty collection when `Mid(H, K)` is empty, in
/// which case `∅` is the only (trivial) sub-factor.
pub fn all_maximal_direct_triples(
    g: &Group,
    h: &ElementSet,
    k: &ElementSet,
    limit: usize,
) -> Result<BTreeSet<ElementSet>> {
    require_subgroup(g, h, "H")?;
    require_subgroup(g, k, "K")?;
    let mid = mid_director_by_definition(g, h, k)?;
    let mut out = BTreeSet::new();
    if mid.is_empty() {
        return Ok(out);
    }
    let blocks: Vec<ElementSet> = (0..g.order()).map(|x| sandwich(g, h, x, k)).collect();
    let mut adj = vec![g.empty_set(); g.order()];
    for x in mid.iter() {
        for y in mid.iter() {
            if x != y && blocks[x].is_disjoint(&blocks[y]) {
                adj[x].insert(y);
            }
        }
    }
    bron_kerbosch(g.empty_set(), mid, g.empty_set(), &adj, &mut out, limit)?;
    Ok(out)
}

fn bron_kerbosch(
    r: ElementSet,
    mut p: ElementSet,
    mut x: ElementSet,
    adj: &[ElementSet],
    out: &mut BTreeSet<ElementSet>,
    limit: usize,
) -> Result<()> {
    if p.is_empty() && x.is_empty() {
        out.insert(r);
        if out.len() > limit {
            return Err(Error::EnumerationLimitExceeded { limit });
        }
        return Ok(());
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| adj[u].intersection(&p).len())
        .unwrap();
    for v in p.difference(&adj[pivot]).to_vec() {
        bron_kerbosch(
            r.with(v),
            p.intersection(&adj[v]),
            x.intersection(&adj[v]),
            adj,
            out,
            limit,
        )?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Every subgroup, by repeatedly adjoining one outside element to a known
/// subgroup until nothing new appears.
pub fn enumerate_subgroups(g: &Group) -> Result<BTreeSet<ElementSet>> {
    enumerate_subgroups_bounded(g, DEFAULT_SUBGROUP_ORDER_BOUND)
}

pub fn enumerate_subgroups_bounded(g: &Group, bound: usize) -> Result<BTreeSet<ElementSet>> {
    if g.order() > bound {
        return Err(Error::SizeLimitExceeded {
            order: g.order(),
            limit: bound,
        });
    }
    let trivial = g.singleton(g.identity());
    let mut known = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(s) = frontier.pop() {
        for x in s.complement().iter() {
            let bigger = g.generated_subgroup(&s.with(x))?;
            if known.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(known)
}
