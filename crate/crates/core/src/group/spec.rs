use std::collections::{BTreeMap, HashMap, VecDeque};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::{self, Perm};
use super::{BuildOptions, Group};
use crate::error::{Error, Result};

/// Serializable description of a group.
///
/// JSON form: `{"kind":"cyclic","n":12}`, `{"kind":"dihedral","n":6}` (order 12),
/// `{"kind":"symmetric","n":4}`, `{"kind":"direct_product","factors":[...]}`,
/// `{"kind":"cayley","names":[...],"table":[[...]]}`,
/// `{"kind":"permutation","degree":4,"generators":[[[1,2]],[[1,2,3,4]]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    /// Order `2n`.
    Dihedral { n: usize },
    Symmetric { n: usize },
    DirectProduct { factors: Vec<GroupSpec> },
    Cayley { names: Vec<String>, table: Vec<Vec<usize>> },
    /// Generators are lists of 1-based cycles.
    Permutation { degree: usize, generators: Vec<Vec<Vec<usize>>> },
}

impl GroupSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::Symmetric { .. } => "symmetric",
            GroupSpec::DirectProduct { .. } => "direct_product",
            GroupSpec::Cayley { .. } => "cayley",
            GroupSpec::Permutation { .. } => "permutation",
        }
    }
}

/// Accepts `cyclic:12`, `dihedral:6`, `symmetric:4`, or inline JSON.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()));
        }
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("expected kind:n or JSON, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad size {n:?}")))?;
        match kind.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic { n }),
            "dihedral" => Ok(GroupSpec::Dihedral { n }),
            "symmetric" => Ok(GroupSpec::Symmetric { n }),
            other => Err(Error::InvalidSpec(format!("unknown group kind {other:?}"))),
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    build_group_with(spec, &BuildOptions::default())
}

pub fn build_group_with(spec: &GroupSpec, opts: &BuildOptions) -> Result<Group> {
    match spec {
        GroupSpec::Cyclic { n } => cyclic(*n, opts),
        GroupSpec::Dihedral { n } => dihedral(*n, opts),
        GroupSpec::Symmetric { n } => symmetric(*n, opts),
        GroupSpec::DirectProduct { factors } => direct_product(factors, opts),
        GroupSpec::Cayley { names, table } => {
            Group::from_table("cayley", names.clone(), table, BTreeMap::new(), opts)
        }
        GroupSpec::Permutation { degree, generators } => permutation(*degree, generators, opts),
    }
}

fn check_order(order: Option<usize>, opts: &BuildOptions) -> Result<usize> {
    match order {
        Some(o) if o <= opts.max_order => Ok(o),
        Some(o) => Err(Error::SizeLimitExceeded {
            order: o,
            limit: opts.max_order,
        }),
        None => Err(Error::SizeLimitExceeded {
            order: usize::MAX,
            limit: opts.max_order,
        }),
    }
}

fn cyclic(n: usize, opts: &BuildOptions) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidSpec("cyclic group needs n >= 1".into()));
    }
    check_order(Some(n), opts)?;
    let names = (0..n).map(|i| i.to_string()).collect();
    Group::from_fn("cyclic", names, |i, j| (i + j) % n, BTreeMap::new(), opts)
}

/// Elements `b^s a^r` sit at index `s*n + r`, named `1, a, a^2, .., b, ba, ba^2, ..`.
fn dihedral(n: usize, opts: &BuildOptions) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidSpec("dihedral group needs n >= 1".into()));
    }
    check_order(n.checked_mul(2), opts)?;
    let power = |r: usize| match r {
        0 => String::new(),
        1 => "a".to_string(),
        r => format!("a^{r}"),
    };
    let mut names = Vec::with_capacity(2 * n);
    for r in 0..n {
        names.push(if r == 0 { "1".to_string() } else { power(r) });
    }
    for r in 0..n {
        names.push(format!("b{}", power(r)));
    }
    // a^r b = b a^-r
    let mul = |x: usize, y: usize| {
        let (s1, r1) = (x / n, x % n);
        let (s2, r2) = (y / n, y % n);
        let r1 = if s2 == 1 { (n - r1) % n } else { r1 };
        ((s1 + s2) % 2) * n + (r1 + r2) % n
    };
    let generators = BTreeMap::from([('a', 1 % n), ('b', n)]);
    Group::from_fn("dihedral", names, mul, generators, opts)
}

fn from_perms(kind: &str, perms: Vec<Perm>, opts: &BuildOptions) -> Result<Group> {
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let names = perms.iter().map(|p| perm::cycle_notation(p)).collect();
    Group::from_fn(
        kind,
        names,
        |i, j| index[&perm::compose(&perms[i], &perms[j])],
        BTreeMap::new(),
        opts,
    )
}

fn symmetric(n: usize, opts: &BuildOptions) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidSpec("symmetric group needs n >= 1".into()));
    }
    let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    check_order(order, opts)?;
    from_perms("symmetric", perm::all_lexicographic(n), opts)
}

fn permutation(degree: usize, generators: &[Vec<Vec<usize>>], opts: &BuildOptions) -> Result<Group> {
    if degree == 0 {
        return Err(Error::InvalidSpec("permutation degree must be >= 1".into()));
    }
    let gens = generators
        .iter()
        .map(|cycles| perm::from_cycles(degree, cycles))
        .collect::<Result<Vec<_>>>()?;

    let id = perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut seen: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let p = perm::compose(&elements[i], g);
            if !seen.contains_key(&p) {
                if elements.len() == opts.max_order {
                    return Err(Error::SizeLimitExceeded {
                        order: elements.len() + 1,
                        limit: opts.max_order,
                    });
                }
                seen.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    from_perms("permutation", elements, opts)
}

fn direct_product(factors: &[GroupSpec], opts: &BuildOptions) -> Result<Group> {
    if factors.is_empty() {
        return Err(Error::InvalidSpec("direct product needs at least one factor".into()));
    }
    let groups = factors
        .iter()
        .map(|f| build_group_with(f, opts))
        .collect::<Result<Vec<_>>>()?;
    let order = groups
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.order()));
    let order = check_order(order, opts)?;

    // mixed radix, first factor most significant
    let digits = |mut x: usize| {
        let mut d = vec![0; groups.len()];
        for (k, g) in groups.iter().enumerate().rev() {
            d[k] = x % g.order();
            x /= g.order();
        }
        d
    };
    let names = (0..order)
        .map(|x| {
            let parts: Vec<&str> = digits(x)
                .iter()
                .zip(&groups)
                .map(|(&d, g)| g.name(d))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mul = |x: usize, y: usize| {
        let (dx, dy) = (digits(x), digits(y));
        groups
            .iter()
            .enumerate()
            .fold(0, |acc, (k, g)| acc * g.order() + g.mul(dx[k], dy[k]))
    };
    Group::from_fn("direct_product", names, mul, BTreeMap::new(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn latin_and_associative(g: &Group) {
        let n = g.order();
        for x in 0..n {
            let mut row: Vec<usize> = g.row(x).collect();
            row.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>());
            let mut col: Vec<usize> = (0..n).map(|y| g.mul(y, x)).collect();
            col.sort_unstable();
            assert_eq!(col, (0..n).collect::<Vec<_>>());
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn builtin_orders() {
        for n in 1..=12 {
            let g = build_group(&GroupSpec::Cyclic { n }).unwrap();
            assert_eq!(g.order(), n);
            latin_and_associative(&g);
        }
        for n in 1..=8 {
            let g = build_group(&GroupSpec::Dihedral { n }).unwrap();
            assert_eq!(g.order(), 2 * n);
            latin_and_associative(&g);
        }
        for (n, fact) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let g = build_group(&GroupSpec::Symmetric { n }).unwrap();
            assert_eq!(g.order(), fact);
            assert_eq!(g.name(0), "()");
        }
        latin_and_associative(&build_group(&GroupSpec::Symmetric { n: 4 }).unwrap());
    }

    #[test]
    fn cyclic_12_table() {
        let g = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        for i in 0..12 {
            assert_eq!(g.name(i), i.to_string());
            for j in 0..12 {
                assert_eq!(g.mul(i, j), (i + j) % 12);
            }
        }
        let t = build_group(&GroupSpec::Cyclic { n: 1 }).unwrap();
        assert_eq!((t.order(), t.identity()), (1, 0));
    }

    #[test]
    fn dihedral_12_names_and_relations() {
        let g = build_group(&GroupSpec::Dihedral { n: 6 }).unwrap();
        let expected = [
            "1", "a", "a^2", "a^3", "a^4", "a^5", "b", "ba", "ba^2", "ba^3", "ba^4", "ba^5",
        ];
        assert_eq!(g.names(), expected);
        let a = g.generator_names()[&'a'];
        let b = g.generator_names()[&'b'];
        let pow = |x: usize, k: usize| (0..k).fold(g.identity(), |acc, _| g.mul(acc, x));
        assert_eq!(pow(a, 6), g.identity());
        assert_eq!(pow(b, 2), g.identity());
        assert_eq!(g.mul(g.mul(b, a), b), g.inverse(a));
        // "ba^i" is b * a^i
        for i in 0..6 {
            assert_eq!(g.name(g.mul(b, pow(a, i))), expected[6 + i]);
        }
    }

    #[test]
    fn permutation_closure() {
        let spec = GroupSpec::Permutation {
            degree: 3,
            generators: vec![vec![vec![1, 2]], vec![vec![1, 2, 3]]],
        };
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(0), "()");
        assert!(!g.is_abelian());
        latin_and_associative(&g);

        let cube = GroupSpec::Permutation {
            degree: 4,
            generators: vec![vec![vec![1, 2]], vec![vec![1, 2, 3, 4]]],
        };
        assert_eq!(build_group(&cube).unwrap().order(), 24);

        let bad = GroupSpec::Permutation {
            degree: 3,
            generators: vec![vec![vec![1, 5]]],
        };
        assert!(matches!(build_group(&bad), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn size_limits() {
        let opts = BuildOptions {
            max_order: 10,
            ..BuildOptions::default()
        };
        assert!(matches!(
            build_group_with(&GroupSpec::Cyclic { n: 11 }, &opts),
            Err(Error::SizeLimitExceeded { order: 11, limit: 10 })
        ));
        assert!(matches!(
            build_group_with(&GroupSpec::Symmetric { n: 4 }, &opts),
            Err(Error::SizeLimitExceeded { .. })
        ));
        let s4 = GroupSpec::Permutation {
            degree: 4,
            generators: vec![vec![vec![1, 2]], vec![vec![1, 2, 3, 4]]],
        };
        assert!(matches!(build_group_with(&s4, &opts), Err(Error::SizeLimitExceeded { .. })));
        assert!(matches!(
            build_group(&GroupSpec::Symmetric { n: 30 }),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn direct_product_naming() {
        let spec = GroupSpec::DirectProduct {
            factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 3 }],
        };
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(0), "(0,0)");
        assert_eq!(g.name(1), "(0,1)");
        assert_eq!(g.name(3), "(1,0)");
        assert_eq!(g.name(g.mul(4, 5)), "(0,0)");
        assert!(g.is_abelian());
        latin_and_associative(&g);
    }

    #[test]
    fn large_group_uses_sampled_associativity() {
        let g = build_group(&GroupSpec::Dihedral { n: 200 }).unwrap();
        assert_eq!(g.order(), 400);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("cyclic:12".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic { n: 12 });
        assert_eq!("dihedral: 6".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral { n: 6 });
        assert!("foo:3".parse::<GroupSpec>().is_err());
        assert!("cyclic".parse::<GroupSpec>().is_err());
        let json = r#"{"kind":"permutation","degree":4,"generators":[[[1,2]],[[1,2,3,4]]]}"#;
        let spec: GroupSpec = json.parse().unwrap();
        assert_eq!(spec.kind(), "permutation");
        let back = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&back).unwrap(), spec);
        let nested = r#"{"kind":"direct_product","factors":[{"kind":"cyclic","n":2},{"kind":"dihedral","n":3}]}"#;
        assert_eq!(build_group(&nested.parse().unwrap()).unwrap().order(), 12);
    }
}
