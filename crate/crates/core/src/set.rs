//! Dense subsets of a group's element indices.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the elements of one particular [`Group`](crate::Group).
///
/// Binary set operations panic when the operands come from different groups;
/// the public group-level operations check ownership first and report
/// [`Error::GroupMismatch`](crate::Error::GroupMismatch) instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    group_id: u64,
    bits: FixedBitSet,
}

impl ElementSet {
    pub(crate) fn empty_raw(group_id: u64, order: usize) -> Self {
        ElementSet {
            group_id,
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub(crate) fn full_raw(group_id: u64, order: usize) -> Self {
        let mut s = Self::empty_raw(group_id, order);
        s.bits.insert_range(..);
        s
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    /// Order of the owning group.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Panics if `x` is outside the group.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe(), "element {x} outside group");
        !self.bits.put(x)
    }

    pub fn remove(&mut self, x: usize) -> bool {
        let was = self.contains(x);
        if x < self.universe() {
            self.bits.set(x, false);
        }
        was
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    fn same_group(&self, other: &ElementSet) {
        assert_eq!(
            self.group_id, other.group_id,
            "element sets from different groups"
        );
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.same_group(other);
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.same_group(other);
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.same_group(other);
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.same_group(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.same_group(other);
        self.bits.union_with(&other.bits);
    }

    pub fn complement(&self) -> ElementSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.same_group(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.same_group(other);
        self.bits.is_disjoint(&other.bits)
    }

    /// `self` with `x` added.
    pub fn with(&self, x: usize) -> ElementSet {
        let mut out = self.clone();
        out.insert(x);
        out
    }
}

/// Orders by group, then lexicographically by sorted member list.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group_id
            .cmp(&other.group_id)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
