//! Element expressions such as `ba^4`, `a^3b`, `9` or `(1 2 3)`.
//!
//! Resolution order for one expression: an exact element name, then an
//! integer element index, then a word `term+` with `term := atom ('^' int)?`.
//! An atom is a generator letter or a single cycle like `(1 3 2)`. Words
//! are evaluated left to right.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::ElementSet;

/// Result of [`parse_subset_verbose`].
#[derive(Debug, Clone)]
pub struct ParsedSubset {
    pub set: ElementSet,
    /// Items that named an element already in the set.
    pub duplicates: Vec<String>,
}

pub fn parse_element(g: &Group, text: &str) -> Result<usize> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty element expression"));
    }
    let lead = text.len() - text.trim_start().len();
    if let Some(x) = g.lookup_name(trimmed) {
        return Ok(x);
    }
    if trimmed.bytes().all(|b| b.is_ascii_digit()) {
        let index: usize = trimmed
            .parse()
            .map_err(|_| Error::parse(lead, "integer too large"))?;
        g.check_element(index)?;
        return Ok(index);
    }
    eval_word(g, trimmed).map_err(|e| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + lead,
            message,
        },
        e => e,
    })
}

/// Comma-separated element expressions, optionally wrapped in `{}`.
pub fn parse_subset(g: &Group, text: &str) -> Result<ElementSet> {
    parse_subset_verbose(g, text).map(|p| p.set)
}

pub fn parse_subset_verbose(g: &Group, text: &str) -> Result<ParsedSubset> {
    let mut body = text.trim();
    let mut base = text.len() - text.trim_start().len();
    if let Some(inner) = body.strip_prefix('{') {
        body = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::parse(base + body.len(), "missing closing '}'"))?;
        base += 1;
    }
    let mut set = g.empty_set();
    let mut duplicates = Vec::new();
    if body.trim().is_empty() {
        return Ok(ParsedSubset { set, duplicates });
    }
    for (item, (offset, piece)) in split_top_level(body).into_iter().enumerate() {
        let x = parse_element(g, piece).map_err(|e| Error::SubsetItem {
            item,
            offset: base + offset,
            text: piece.trim().to_string(),
            source: Box::new(e),
        })?;
        if !set.insert(x) {
            duplicates.push(piece.trim().to_string());
        }
    }
    Ok(ParsedSubset { set, duplicates })
}

/// Comma-separated element expressions in order, duplicates kept.
pub fn parse_sequence(g: &Group, text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)
        .into_iter()
        .enumerate()
        .map(|(item, (offset, piece))| {
            parse_element(g, piece).map_err(|e| Error::SubsetItem {
                item,
                offset,
                text: piece.trim().to_string(),
                source: Box::new(e),
            })
        })
        .collect()
}

/// Splits on commas outside parentheses, keeping byte offsets.
fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let at = self.pos;
        let neg = self.eat('-');
        let digits = self
            .digits()
            .ok_or_else(|| Error::parse(self.pos, "expected an integer"))?;
        let v: i64 = digits
            .parse()
            .map_err(|_| Error::parse(at, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }
}

fn eval_word(g: &Group, text: &str) -> Result<usize> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut acc = g.identity();
    cur.skip_ws();
    while cur.peek().is_some() {
        let at = cur.pos;
        let atom = match cur.bump().unwrap() {
            '(' => cycle_atom(g, &mut cur, at)?,
            c if c.is_ascii_alphabetic() => *g
                .generator_names()
                .get(&c)
                .ok_or_else(|| Error::UnknownSymbol(c.to_string()))?,
            c => return Err(Error::parse(at, format!("unexpected character {c:?}"))),
        };
        cur.skip_ws();
        let exp = if cur.eat('^') {
            cur.skip_ws();
            if cur.eat('{') {
                let e = cur.integer()?;
                cur.skip_ws();
                if !cur.eat('}') {
                    return Err(Error::parse(cur.pos, "expected '}'"));
                }
                e
            } else {
                cur.integer()?
            }
        } else {
            1
        };
        acc = g.mul(acc, power(g, atom, exp));
        cur.skip_ws();
    }
    Ok(acc)
}

/// Parses the rest of `(p q r ...)` and looks the cycle up by canonical name.
fn cycle_atom(g: &Group, cur: &mut Cursor<'_>, open: usize) -> Result<usize> {
    let mut points: Vec<u64> = Vec::new();
    loop {
        cur.skip_ws();
        if cur.eat(')') {
            break;
        }
        if !points.is_empty() {
            cur.eat(',');
            cur.skip_ws();
        }
        let at = cur.pos;
        let d = cur
            .digits()
            .ok_or_else(|| Error::parse(at, "expected a point or ')'"))?;
        let p: u64 = d.parse().map_err(|_| Error::parse(at, "point too large"))?;
        if p == 0 || points.contains(&p) {
            return Err(Error::parse(at, format!("bad cycle point {p}")));
        }
        points.push(p);
        if cur.peek().is_none() {
            return Err(Error::parse(open, "unclosed cycle"));
        }
    }
    let name = if points.len() < 2 {
        "()".to_string()
    } else {
        let lead = (0..points.len()).min_by_key(|&i| points[i]).unwrap();
        points.rotate_left(lead);
        let body: Vec<String> = points.iter().map(u64::to_string).collect();
        format!("({})", body.join(" "))
    };
    g.lookup_name(&name).ok_or(Error::UnknownSymbol(name))
}

fn power(g: &Group, x: usize, exp: i64) -> usize {
    let base = if exp < 0 { g.inverse(x) } else { x };
    let mut order = 1u64;
    let mut y = x;
    while y != g.identity() {
        y = g.mul(y, x);
        order += 1;
    }
    let k = exp.unsigned_abs() % order;
    (0..k).fold(g.identity(), |acc, _| g.mul(acc, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn d12() -> Group {
        build_group(&GroupSpec::Dihedral { n: 6 }).unwrap()
    }

    #[test]
    fn canonical_names_round_trip() {
        for spec in [
            GroupSpec::Dihedral { n: 6 },
            GroupSpec::Cyclic { n: 12 },
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::DirectProduct {
                factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Dihedral { n: 3 }],
            },
        ] {
            let g = build_group(&spec).unwrap();
            for (i, name) in g.names().iter().enumerate() {
                assert_eq!(parse_element(&g, name).unwrap(), i, "{name}");
            }
        }
    }

    #[test]
    fn words_in_d12() {
        let g = d12();
        let ba3 = g.lookup_name("ba^3").unwrap();
        assert_eq!(parse_element(&g, "ba^4").unwrap(), g.lookup_name("ba^4").unwrap());
        assert_eq!(parse_element(&g, "a^3b").unwrap(), ba3);
        assert_eq!(parse_element(&g, "a^3 b").unwrap(), ba3);
        // ab = b a^-1
        assert_eq!(parse_element(&g, "ab").unwrap(), g.lookup_name("ba^5").unwrap());
        assert_eq!(parse_element(&g, "a^2b").unwrap(), g.lookup_name("ba^4").unwrap());
        assert_eq!(parse_element(&g, "a^5b").unwrap(), g.lookup_name("ba").unwrap());
        assert_eq!(parse_element(&g, "a^-1").unwrap(), g.lookup_name("a^5").unwrap());
        assert_eq!(parse_element(&g, "a^{-2}").unwrap(), g.lookup_name("a^4").unwrap());
        assert_eq!(parse_element(&g, "a^12").unwrap(), g.identity());
        assert_eq!(parse_element(&g, "1").unwrap(), g.identity());
        assert_eq!(parse_element(&g, "7").unwrap(), 7);
    }

    #[test]
    fn integers_in_z12() {
        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(parse_element(&z, "9").unwrap(), 9);
        assert!(matches!(parse_element(&z, "12"), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_element(&z, "a"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn cycles_in_symmetric_groups() {
        let g = build_group(&GroupSpec::Symmetric { n: 3 }).unwrap();
        let c = g.lookup_name("(1 2 3)").unwrap();
        assert_eq!(parse_element(&g, "(2 3 1)").unwrap(), c);
        assert_eq!(parse_element(&g, "(1,2,3)").unwrap(), c);
        assert_eq!(parse_element(&g, "(1 3 2)^-1").unwrap(), c);
        // (1 2) then (2 3): 1->2->3
        assert_eq!(parse_element(&g, "(1 2)(2 3)").unwrap(), g.lookup_name("(1 3 2)").unwrap());
        assert_eq!(parse_element(&g, "(2)").unwrap(), g.identity());
        assert!(matches!(parse_element(&g, "(1 4)"), Err(Error::UnknownSymbol(_))));
        assert!(matches!(parse_element(&g, "(1 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn syntax_errors() {
        let g = d12();
        assert!(matches!(parse_element(&g, ""), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&g, "a^"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&g, "a*b"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_element(&g, "c"), Err(Error::UnknownSymbol(ref s)) if s == "c"));
    }

    #[test]
    fn subsets() {
        let g = d12();
        let k = parse_subset(&g, "1,a^3,ba,ba^4").unwrap();
        assert_eq!(g.names_of(&k), ["1", "a^3", "ba", "ba^4"]);
        assert_eq!(parse_subset(&g, "{ba^4, ba, a^3, 1}").unwrap(), k);
        assert!(parse_subset(&g, "").unwrap().is_empty());
        assert!(parse_subset(&g, "{}").unwrap().is_empty());

        let z = build_group(&GroupSpec::Cyclic { n: 12 }).unwrap();
        assert_eq!(parse_subset(&z, "0,3,6,9").unwrap().to_vec(), [0, 3, 6, 9]);

        let p = parse_subset_verbose(&g, "a^3b, ba^3, 1").unwrap();
        assert_eq!(p.set.len(), 2);
        assert_eq!(p.duplicates, ["ba^3"]);

        let err = parse_subset(&g, "1, a, q").unwrap_err();
        match err {
            Error::SubsetItem { item, offset, ref text, .. } => {
                assert_eq!((item, offset, text.as_str()), (2, 5, "q"));
                assert!(matches!(err.root(), Error::UnknownSymbol(_)));
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn sequences_keep_order() {
        let g = d12();
        let seq = parse_sequence(&g, "a^2, 1, a^2").unwrap();
        assert_eq!(seq, [2, 0, 2]);
        assert!(parse_sequence(&g, " ").unwrap().is_empty());
        assert!(parse_sequence(&g, "a,,b").is_err());
    }

    #[test]
    fn direct_product_tuple_names_survive_comma_split() {
        let g = build_group(&GroupSpec::DirectProduct {
            factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 3 }],
        })
        .unwrap();
        let s = parse_subset(&g, "(0,0),(1,2)").unwrap();
        assert_eq!(g.names_of(&s), ["(0,0)", "(1,2)"]);
    }
}
