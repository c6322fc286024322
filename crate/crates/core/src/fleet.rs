//! Small groups used by the cross-checking suites.

use crate::group::{build_group, Group, GroupSpec};

/// A named group.
#[derive(Debug, Clone)]
pub struct Member {
    pub label: String,
    pub spec: GroupSpec,
    pub group: Group,
}

fn member(label: String, spec: GroupSpec) -> Member {
    let group = build_group(&spec).expect("builtin groups are valid");
    Member { label, spec, group }
}

/// Cyclic groups of order 1..=12, dihedral groups of order 4..=12 and S3.
pub fn builtin_upto_12() -> Vec<Member> {
    let mut out: Vec<Member> = (1..=12)
        .map(|n| member(format!("cyclic:{n}"), GroupSpec::Cyclic { n }))
        .collect();
    out.extend((2..=6).map(|n| member(format!("dihedral:{n}"), GroupSpec::Dihedral { n })));
    out.push(member("symmetric:3".into(), GroupSpec::Symmetric { n: 3 }));
    out
}

/// A few groups of order 16 for sampled checks.
pub fn order_16_samples() -> Vec<Member> {
    let cyclic = |n| GroupSpec::Cyclic { n };
    vec![
        member("cyclic:16".into(), cyclic(16)),
        member("dihedral:8".into(), GroupSpec::Dihedral { n: 8 }),
        member(
            "cyclic:2 x cyclic:8".into(),
            GroupSpec::DirectProduct {
                factors: vec![cyclic(2), cyclic(8)],
            },
        ),
        member(
            "cyclic:4 x cyclic:4".into(),
            GroupSpec::DirectProduct {
                factors: vec![cyclic(4), cyclic(4)],
            },
        ),
        member(
            "cyclic:2 x dihedral:4".into(),
            GroupSpec::DirectProduct {
                factors: vec![cyclic(2), GroupSpec::Dihedral { n: 4 }],
            },
        ),
    ]
}
