//! Finite groups given by a full multiplication table.

mod perm;
mod spec;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::ElementSet;

pub use spec::{build_group, build_group_with, GroupSpec};

pub const DEFAULT_MAX_ORDER: usize = 4096;
pub const DEFAULT_FULL_ASSOCIATIVITY_BOUND: usize = 256;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Limits applied while constructing a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_order: usize,
    /// Orders up to this bound get an exhaustive associativity check;
    /// larger tables are checked on `10 * order` random triples.
    pub full_associativity_bound: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_order: DEFAULT_MAX_ORDER,
            full_associativity_bound: DEFAULT_FULL_ASSOCIATIVITY_BOUND,
        }
    }
}

/// A finite group on the element indices `0..order`.
///
/// Immutable once built. Clones share the same group id, so sets made from
/// one clone are accepted by the others.
#[derive(Debug, Clone)]
pub struct Group {
    id: u64,
    kind: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
    by_name: HashMap<String, usize>,
    generators: BTreeMap<char, usize>,
}

impl Group {
    /// Validates a multiplication table and wraps it as a group.
    ///
    /// `table[i][j]` is the index of `names[i] * names[j]`.
    pub fn from_table(
        kind: &str,
        names: Vec<String>,
        table: &[Vec<usize>],
        generators: BTreeMap<char, usize>,
        opts: &BuildOptions,
    ) -> Result<Group> {
        let n = names.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup(format!(
                "table must be {n}x{n} to match the {n} element names"
            )));
        }
        Self::from_fn(kind, names, |i, j| table[i][j], generators, opts)
    }

    pub(crate) fn from_fn(
        kind: &str,
        names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
        generators: BTreeMap<char, usize>,
        opts: &BuildOptions,
    ) -> Result<Group> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup("a group needs at least one element".into()));
        }
        if n > opts.max_order {
            return Err(Error::SizeLimitExceeded {
                order: n,
                limit: opts.max_order,
            });
        }
        if n > u32::MAX as usize {
            return Err(Error::SizeLimitExceeded {
                order: n,
                limit: u32::MAX as usize,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = mul(i, j);
                if v >= n {
                    return Err(Error::NotAGroup(format!(
                        "entry ({i},{j}) = {v} is not an element index"
                    )));
                }
                table.push(v as u32);
            }
        }

        let mut by_name = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::NotAGroup(format!("element {i} has an empty name")));
            }
            if by_name.insert(name.clone(), i).is_some() {
                return Err(Error::NotAGroup(format!("duplicate element name {name:?}")));
            }
        }
        for (&sym, &idx) in &generators {
            if !sym.is_ascii_alphabetic() || idx >= n {
                return Err(Error::InvalidSpec(format!("bad generator {sym:?} -> {idx}")));
            }
        }

        let at = |i: usize, j: usize| table[i * n + j] as usize;

        // Latin square
        let mut seen = vec![0usize; n];
        for i in 0..n {
            let stamp = 2 * i + 1;
            for j in 0..n {
                let v = at(i, j);
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!("row {i} repeats element {v}")));
                }
                seen[v] = stamp;
            }
            let stamp = 2 * i + 2;
            for j in 0..n {
                let v = at(j, i);
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!("column {i} repeats element {v}")));
                }
                seen[v] = stamp;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;

        let mut inverse = vec![0; n];
        for (i, inv) in inverse.iter_mut().enumerate() {
            // Latin rows guarantee exactly one solution of i*j = e
            let j = (0..n).find(|&j| at(i, j) == identity).unwrap();
            if at(j, i) != identity {
                return Err(Error::NotAGroup(format!("element {i} has no two-sided inverse")));
            }
            *inv = j;
        }

        let assoc = |x: usize, y: usize, z: usize| at(at(x, y), z) == at(x, at(y, z));
        if n <= opts.full_associativity_bound {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !assoc(x, y, z) {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails at ({x},{y},{z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..10 * n {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(x, y, z) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({x},{y},{z})"
                    )));
                }
            }
        }

        Ok(Group {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            kind: kind.to_string(),
            order: n,
            table,
            identity,
            inverse,
            names,
            by_name,
            generators,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup_name(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn generator_names(&self) -> &BTreeMap<char, usize> {
        &self.generators
    }

    /// Table lookup; panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub fn multiply(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn owns(&self, s: &ElementSet) -> Result<()> {
        if s.group_id() == self.id && s.universe() == self.order {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty_raw(self.id, self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full_raw(self.id, self.order)
    }

    /// Panics if `x` is out of range.
    pub fn singleton(&self, x: usize) -> ElementSet {
        let mut s = self.empty_set();
        s.insert(x);
        s
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, elems: I) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for x in elems {
            self.check_element(x)?;
            s.insert(x);
        }
        Ok(s)
    }

    /// Canonical names of the members, in index order.
    pub fn names_of(&self, s: &ElementSet) -> Vec<String> {
        s.iter().map(|x| self.names[x].clone()).collect()
    }

    /// `{n1, n2, ...}` in index order.
    pub fn format_set(&self, s: &ElementSet) -> String {
        format!("{{{}}}", self.names_of(s).join(", "))
    }

    /// `x * a * x^-1`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inverse[x])
    }

    pub fn conjugate_set(&self, s: &ElementSet, x: usize) -> Result<ElementSet> {
        self.owns(s)?;
        self.check_element(x)?;
        let mut out = self.empty_set();
        for a in s.iter() {
            out.insert(self.conjugate(x, a));
        }
        Ok(out)
    }

    /// `s * x`.
    pub fn right_translate(&self, s: &ElementSet, x: usize) -> ElementSet {
        let mut out = self.empty_set();
        for a in s.iter() {
            out.insert(self.mul(a, x));
        }
        out
    }

    /// `x * s`.
    pub fn left_translate(&self, x: usize, s: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for a in s.iter() {
            out.insert(self.mul(x, a));
        }
        out
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> Result<bool> {
        self.owns(s)?;
        if !s.contains(self.identity) {
            return Ok(false);
        }
        let closed = s.iter().all(|x| {
            s.contains(self.inverse[x]) && s.iter().all(|y| s.contains(self.mul(x, y)))
        });
        Ok(closed)
    }

    /// Fails with `NotASubgroup(label)` unless `s` is a subgroup.
    pub fn require_subgroup(&self, s: &ElementSet, label: &'static str) -> Result<()> {
        if self.is_subgroup(s)? {
            Ok(())
        } else {
            Err(Error::NotASubgroup(label))
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated_subgroup(&self, gens: &ElementSet) -> Result<ElementSet> {
        self.owns(gens)?;
        let gens: Vec<usize> = gens.iter().collect();
        let mut out = self.singleton(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        // right multiplication by generators reaches every product; finiteness
        // makes inverses positive powers
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// True when `x s x^-1 = s` for every `x`.
    pub fn is_normal_subset(&self, s: &ElementSet) -> Result<bool> {
        self.owns(s)?;
        Ok((0..self.order).all(|x| s.iter().all(|a| s.contains(self.conjugate(x, a)))))
    }

    /// Row `x` of the table.
    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[x * self.order..(x + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d12() -> Group {
        build_group(&GroupSpec::Dihedral { n: 6 }).unwrap()
    }

    fn el(g: &Group, name: &str) -> usize {
        g.lookup_name(name).unwrap()
    }

    #[test]
    fn cayley_table_validation_rejects_non_groups() {
        let names = vec!["e".to_string(), "x".to_string()];
        let bad_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            Group::from_table("cayley", names.clone(), &bad_latin, BTreeMap::new(), &BuildOptions::default()),
            Err(Error::NotAGroup(_))
        ));
        let good = vec![vec![0, 1], vec![1, 0]];
        let g = Group::from_table("cayley", names, &good, BTreeMap::new(), &BuildOptions::default())
            .unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(1), 1);
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = Group::from_table("cayley", names, &t, BTreeMap::new(), &BuildOptions::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")), "{err}");
    }

    #[test]
    fn duplicate_names_rejected() {
        let names = vec!["e".to_string(), "e".to_string()];
        let t = vec![vec![0, 1], vec![1, 0]];
        assert!(Group::from_table("cayley", names, &t, BTreeMap::new(), &BuildOptions::default()).is_err());
    }

    #[test]
    fn multiply_in_z12_and_d12() {
        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(z.multiply(3, 9).unwrap(), 0);
        assert!(matches!(z.multiply(12, 0), Err(Error::IndexOutOfRange { index: 12, order: 12 })));

        let g = d12();
        // ab = b a^-1
        assert_eq!(g.name(g.mul(el(&g, "a"), el(&g, "b"))), "ba^5");
        for x in 0..g.order() {
            assert_eq!(g.multiply(g.identity(), x).unwrap(), x);
        }
    }

    #[test]
    fn conjugation() {
        let g = d12();
        let s = g.set_of([el(&g, "1"), el(&g, "a^3")]).unwrap();
        assert_eq!(g.conjugate_set(&s, el(&g, "b")).unwrap(), s);
        let t = g.set_of([el(&g, "a"), el(&g, "ba^2")]).unwrap();
        assert_eq!(g.conjugate_set(&t, g.identity()).unwrap(), t);

        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        let s = z.set_of([1, 5, 7]).unwrap();
        for x in 0..12 {
            assert_eq!(z.conjugate_set(&s, x).unwrap(), s);
        }
    }

    #[test]
    fn subgroup_membership() {
        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert!(z.is_subgroup(&z.set_of([0, 3, 6, 9]).unwrap()).unwrap());
        assert!(!z.is_subgroup(&z.set_of([0, 1, 2]).unwrap()).unwrap());
        assert!(z.is_subgroup(&z.singleton(0)).unwrap());

        let other = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(z.is_subgroup(&other.singleton(0)), Err(Error::GroupMismatch));
    }

    #[test]
    fn generated_subgroups() {
        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(
            z.generated_subgroup(&z.singleton(3)).unwrap(),
            z.set_of([0, 3, 6, 9]).unwrap()
        );
        let g = d12();
        let b = el(&g, "b");
        assert_eq!(
            g.generated_subgroup(&g.singleton(b)).unwrap(),
            g.set_of([g.identity(), b]).unwrap()
        );
        let h = g
            .generated_subgroup(&g.set_of([el(&g, "a^2"), b]).unwrap())
            .unwrap();
        assert_eq!(h.len(), 6);
        assert!(g.is_subgroup(&h).unwrap());
        assert_eq!(g.generated_subgroup(&g.empty_set()).unwrap(), g.singleton(0));
    }
}
