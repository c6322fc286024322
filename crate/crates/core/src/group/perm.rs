//! Permutations on `0..degree` in one-line form.
//!
//! Products act on the right: `compose(x, y)` applies `x` first, then `y`.

use crate::error::{Error, Result};

pub(crate) type Perm = Vec<usize>;

pub(crate) fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

pub(crate) fn compose(x: &[usize], y: &[usize]) -> Perm {
    x.iter().map(|&i| y[i]).collect()
}

/// Builds a permutation from 1-based cycles, composed left to right.
pub(crate) fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
    let mut acc = identity(degree);
    for cycle in cycles {
        let mut seen = vec![false; degree];
        for &p in cycle {
            if p == 0 || p > degree {
                return Err(Error::InvalidSpec(format!(
                    "cycle entry {p} outside 1..={degree}"
                )));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidSpec(format!(
                    "point {p} repeated within a cycle"
                )));
            }
        }
        let mut c = identity(degree);
        for (i, &p) in cycle.iter().enumerate() {
            let q = cycle[(i + 1) % cycle.len()];
            c[p - 1] = q - 1;
        }
        acc = compose(&acc, &c);
    }
    Ok(acc)
}

/// Disjoint-cycle notation, 1-based, each cycle led by its smallest point;
/// the identity prints as `()`.
pub(crate) fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// All permutations of `0..degree` in lexicographic order of one-line form.
pub(crate) fn all_lexicographic(degree: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = identity(degree);
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (1..degree).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..degree).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}
