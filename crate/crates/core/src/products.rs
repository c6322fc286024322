//! Products of subsets, direct and middle-direct products, and the middle
//! director `Mid(A, B) = { x : A{x}B is direct }`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::Group;
use crate::set::ElementSet;

/// The three possible shapes of `Mid(H, K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MidTag {
    Empty,
    Full,
    ProperNonempty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidCase {
    pub tag: MidTag,
    pub mid_set: ElementSet,
}

impl MidCase {
    fn new(mid_set: ElementSet) -> MidCase {
        let tag = if mid_set.is_empty() {
            MidTag::Empty
        } else if mid_set.is_full() {
            MidTag::Full
        } else {
            MidTag::ProperNonempty
        };
        MidCase { tag, mid_set }
    }
}

/// `{ x*y : x in a, y in b }`.
pub fn set_product(g: &Group, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    g.owns(a)?;
    g.owns(b)?;
    Ok(product_unchecked(g, a, b))
}

fn product_unchecked(g: &Group, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = g.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// `a * {x} * b` for arbitrary subsets.
pub(crate) fn sandwich(g: &Group, a: &ElementSet, x: usize, b: &ElementSet) -> ElementSet {
    let mut out = g.empty_set();
    for p in a.iter() {
        let px = g.mul(p, x);
        for q in b.iter() {
            out.insert(g.mul(px, q));
        }
    }
    out
}

/// `A X B`.
pub fn triple_product(g: &Group, a: &ElementSet, x: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    g.owns(a)?;
    g.owns(x)?;
    g.owns(b)?;
    let mut out = g.empty_set();
    for t in x.iter() {
        out.union_with(&sandwich(g, a, t, b));
    }
    Ok(out)
}

/// Every element of `AB` has exactly one factorisation.
pub fn is_direct_pair(g: &Group, a: &ElementSet, b: &ElementSet) -> Result<bool> {
    Ok(set_product(g, a, b)?.len() == a.len() * b.len())
}

/// `HxK`; `h` and `k` must be subgroups.
pub fn double_coset(g: &Group, h: &ElementSet, x: usize, k: &ElementSet) -> Result<ElementSet> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    g.check_element(x)?;
    Ok(sandwich(g, h, x, k))
}

/// `axb = a'x'b'` forces `x = x'`, i.e. the sets `A t B` (t in X) are
/// pairwise disjoint.
pub fn is_middle_direct(g: &Group, a: &ElementSet, x: &ElementSet, b: &ElementSet) -> Result<bool> {
    g.owns(a)?;
    g.owns(x)?;
    g.owns(b)?;
    let mut covered = g.empty_set();
    for t in x.iter() {
        let block = sandwich(g, a, t, b);
        if !block.is_disjoint(&covered) {
            return Ok(false);
        }
        covered.union_with(&block);
    }
    Ok(true)
}

fn singleton_direct(g: &Group, a: &ElementSet, t: usize, b: &ElementSet) -> bool {
    sandwich(g, a, t, b).len() == a.len() * b.len()
}

/// Full uniqueness of `axb` factorisations: middle direct and `X ⊆ Mid(A, B)`.
pub fn is_direct_triple(g: &Group, a: &ElementSet, x: &ElementSet, b: &ElementSet) -> Result<bool> {
    if !is_middle_direct(g, a, x, b)? {
        return Ok(false);
    }
    Ok(x.iter().all(|t| singleton_direct(g, a, t, b)))
}

/// `Mid(A, B)` straight from the definition, for arbitrary subsets.
pub fn mid_director(g: &Group, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    g.owns(a)?;
    g.owns(b)?;
    let mut out = g.empty_set();
    for x in 0..g.order() {
        if singleton_direct(g, a, x, b) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `Mid(H, K)` for subgroups via `x ∈ Mid ⟺ H ∩ xKx⁻¹ = {1}`.
pub fn mid_director_subgroups(g: &Group, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    let trivial = g.singleton(g.identity());
    let mut out = g.empty_set();
    for x in 0..g.order() {
        if h.intersection(&g.conjugate_set(k, x)?) == trivial {
            out.insert(x);
        }
    }
    Ok(out)
}

pub fn classify_mid(g: &Group, h: &ElementSet, k: &ElementSet) -> Result<MidCase> {
    mid_director_subgroups(g, h, k).map(MidCase::new)
}

/// `G = H·T` with the product direct.
pub fn is_right_transversal(g: &Group, h: &ElementSet, t: &ElementSet) -> Result<bool> {
    g.require_subgroup(h, "H")?;
    g.owns(t)?;
    Ok(product_unchecked(g, h, t).is_full() && h.len() * t.len() == g.order())
}

/// `HT` is direct and no outside element can be added keeping it direct.
pub fn is_right_subfactor(g: &Group, h: &ElementSet, t: &ElementSet) -> Result<bool> {
    g.require_subgroup(h, "H")?;
    if !is_direct_pair(g, h, t)? {
        return Ok(false);
    }
    for s in t.complement().iter() {
        if is_direct_pair(g, h, &t.with(s))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G = H X K` with the product middle direct (one representative per
/// double coset).
pub fn is_middle_transversal(g: &Group, h: &ElementSet, x: &ElementSet, k: &ElementSet) -> Result<bool> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    Ok(is_middle_direct(g, h, x, k)? && triple_product(g, h, x, k)?.is_full())
}

/// Middle direct and maximal among middle-direct supersets.
pub fn is_maximal_middle_direct(g: &Group, h: &ElementSet, x: &ElementSet, k: &ElementSet) -> Result<bool> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    if !is_middle_direct(g, h, x, k)? {
        return Ok(false);
    }
    for s in x.complement().iter() {
        if is_middle_direct(g, h, &x.with(s), k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct triple and maximal among direct supersets (the empty set counts
/// when nothing can be added).
pub fn is_maximal_direct_triple(g: &Group, h: &ElementSet, x: &ElementSet, k: &ElementSet) -> Result<bool> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    if !is_direct_triple(g, h, x, k)? {
        return Ok(false);
    }
    for s in x.complement().iter() {
        if is_direct_triple(g, h, &x.with(s), k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G = H·X·K`: a middle transversal whose triple product is direct.
pub fn is_middle_factor(g: &Group, h: &ElementSet, x: &ElementSet, k: &ElementSet) -> Result<bool> {
    Ok(is_middle_transversal(g, h, x, k)? && is_direct_triple(g, h, x, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::word::parse_subset;

    fn d12() -> Group {
        build_group(&GroupSpec::Dihedral { n: 6 }).unwrap()
    }

    fn z12() -> Group {
        build_group(&GroupSpec::Cyclic { n: 12 }).unwrap()
    }

    fn set(g: &Group, s: &str) -> ElementSet {
        parse_subset(g, s).unwrap()
    }

    #[test]
    fn product_of_the_d12_double_coset_pair() {
        let g = d12();
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        let hk = set_product(&g, &h, &k).unwrap();
        // |H||K|/|H∩K| = 8; the complement is the other double coset
        assert_eq!(hk, set(&g, "1,a,a^3,a^4,b,ba,ba^3,ba^4"));
        assert_eq!(hk.complement(), set(&g, "a^2,a^5,ba^2,ba^5"));
        assert_eq!(set_product(&g, &g.singleton(0), &k).unwrap(), k);
    }

    #[test]
    fn direct_pair_of_the_d12_subfactor_pair() {
        let g = d12();
        let (h, k) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        assert!(is_direct_pair(&g, &h, &k).unwrap());
        let hk = set_product(&g, &h, &k).unwrap();
        assert_eq!(hk, set(&g, "1,a,a^3,a^4,b,ab,a^3b,a^4b"));
        assert_eq!(hk.len(), 8);
        assert!(!is_direct_pair(&g, &k, &k).unwrap());

        let z = z12();
        assert!(is_direct_pair(&z, &set(&z, "0,6"), &set(&z, "0,3")).unwrap());
    }

    #[test]
    fn double_cosets() {
        let g = d12();
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        let a2 = g.lookup_name("a^2").unwrap();
        assert_eq!(double_coset(&g, &h, a2, &k).unwrap(), set(&g, "a^2,a^5,ba^2,ba^5"));
        let full = g.full_set();
        let e = g.singleton(0);
        assert_eq!(double_coset(&g, &full, 5, &e).unwrap(), full);

        let z = z12();
        assert_eq!(
            double_coset(&z, &set(&z, "0,3,6,9"), 1, &set(&z, "0,6")).unwrap(),
            set(&z, "1,4,7,10")
        );
        assert!(double_coset(&z, &set(&z, "0,1"), 1, &set(&z, "0")).is_err());
    }

    #[test]
    fn middle_direct_and_direct_triples() {
        let g = d12();
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        assert!(is_middle_direct(&g, &h, &set(&g, "1,a^2"), &k).unwrap());
        assert!(!is_middle_direct(&g, &h, &set(&g, "1,a"), &k).unwrap());
        for x in 0..12 {
            assert!(is_middle_direct(&g, &h, &g.singleton(x), &k).unwrap());
        }
        assert!(!is_direct_triple(&g, &h, &set(&g, "1,a^2"), &k).unwrap());
        assert!(is_direct_triple(&g, &h, &g.empty_set(), &k).unwrap());
        assert!(is_middle_direct(&g, &h, &g.empty_set(), &k).unwrap());

        let (h2, k2) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        assert!(is_direct_triple(&g, &h2, &g.singleton(0), &k2).unwrap());
    }

    #[test]
    fn mid_director_examples() {
        let g = d12();
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        assert!(mid_director(&g, &h, &k).unwrap().is_empty());
        assert!(mid_director_subgroups(&g, &h, &k).unwrap().is_empty());
        assert_eq!(classify_mid(&g, &h, &k).unwrap().tag, MidTag::Empty);

        let (h2, k2) = (set(&g, "1,ab"), set(&g, "1,a^3,b,ba^3"));
        let hk = set_product(&g, &h2, &k2).unwrap();
        assert_eq!(mid_director(&g, &h2, &k2).unwrap(), hk);
        assert_eq!(mid_director_subgroups(&g, &h2, &k2).unwrap(), hk);
        assert_eq!(classify_mid(&g, &h2, &k2).unwrap().tag, MidTag::ProperNonempty);

        let e = g.singleton(0);
        assert!(mid_director_subgroups(&g, &h, &e).unwrap().is_full());

        let z = z12();
        let (hz, kz) = (set(&z, "0,6"), set(&z, "0,4,8"));
        assert!(mid_director(&z, &hz, &kz).unwrap().is_full());
        assert_eq!(classify_mid(&z, &hz, &kz).unwrap().tag, MidTag::Full);
    }

    #[test]
    fn subgroup_operations_fail_fast() {
        let z = z12();
        let bad = set(&z, "0,1");
        let h = set(&z, "0,6");
        assert!(matches!(
            mid_director_subgroups(&z, &bad, &h),
            Err(crate::Error::NotASubgroup("H"))
        ));
        assert!(matches!(
            is_middle_transversal(&z, &h, &h, &bad),
            Err(crate::Error::NotASubgroup("K"))
        ));
        // general subsets are fine for the definition-based director
        assert!(mid_director(&z, &bad, &h).is_ok());
    }

    #[test]
    fn transversal_predicates() {
        let z = z12();
        let h = set(&z, "0,3,6,9");
        assert!(is_right_transversal(&z, &h, &set(&z, "0,1,2")).unwrap());
        assert!(!is_right_transversal(&z, &h, &set(&z, "0,3,6")).unwrap());
        assert!(is_right_transversal(&z, &z.full_set(), &z.singleton(7)).unwrap());
        assert!(is_right_subfactor(&z, &h, &set(&z, "0,1,2")).unwrap());
        assert!(!is_right_subfactor(&z, &h, &set(&z, "0,1")).unwrap());

        let g = d12();
        let (h, k) = (set(&g, "1,a^3,ba^3,b"), set(&g, "1,a^3,ba,ba^4"));
        for x in ["1,a^2", "1,a^5", "1,ba^2", "1,ba^5"] {
            assert!(is_middle_transversal(&g, &h, &set(&g, x), &k).unwrap(), "{x}");
            assert!(!is_middle_factor(&g, &h, &set(&g, x), &k).unwrap(), "{x}");
        }
        assert!(!is_middle_transversal(&g, &h, &g.singleton(0), &k).unwrap());
        assert!(!is_middle_transversal(&g, &h, &g.empty_set(), &k).unwrap());

        let (hz, kz) = (set(&z, "0,6"), set(&z, "0,4,8"));
        assert!(is_middle_factor(&z, &hz, &set(&z, "0,1"), &kz).unwrap());
        let e = z.singleton(0);
        assert!(is_middle_factor(&z, &z.full_set(), &e, &e).unwrap());
    }
}
