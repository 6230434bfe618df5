//! Built-in posets, embedded at compile time and addressed as
//! `builtin:<name>`.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// `(name, source)` pairs, in the order the verification suite visits them.
pub const BUILTINS: &[(&str, &str)] = &[
    ("chain1", include_str!("../corpus/chain1.pos")),
    ("chain2", include_str!("../corpus/chain2.pos")),
    ("chain3", include_str!("../corpus/chain3.pos")),
    ("chain4", include_str!("../corpus/chain4.pos")),
    ("antichain1", include_str!("../corpus/antichain1.pos")),
    ("antichain2", include_str!("../corpus/antichain2.pos")),
    ("antichain3", include_str!("../corpus/antichain3.pos")),
    ("lambda", include_str!("../corpus/lambda.pos")),
    ("vee", include_str!("../corpus/vee.pos")),
    ("diamond", include_str!("../corpus/diamond.pos")),
    ("two_plus_two", include_str!("../corpus/two_plus_two.pos")),
    ("zigzag", include_str!("../corpus/zigzag.pos")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|(n, _)| *n)
}

pub fn builtin(name: &str) -> Result<Poset> {
    let (_, src) = BUILTINS.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no built-in poset `{name}` (known: {})",
            names().collect::<Vec<_>>().join(", ")
        ))
    })?;
    Poset::parse(src)
}

/// Every built-in poset with its name.
pub fn all() -> Vec<(&'static str, Poset)> {
    BUILTINS.iter().map(|(n, src)| (*n, Poset::parse(src).expect("built-in posets parse"))).collect()
}

/// Resolves `builtin:<name>` or reads and parses a file.
pub fn load(source: &str) -> Result<Poset> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("cannot read `{source}`: {e}")))?;
    Poset::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_with_expected_shapes() {
        let sizes: Vec<(&str, usize, usize)> =
            all().iter().map(|(n, p)| (*n, p.len(), p.count_linear_extensions().unwrap() as usize)).collect();
        let expect = [
            ("chain1", 1, 1),
            ("chain2", 2, 1),
            ("chain3", 3, 1),
            ("chain4", 4, 1),
            ("antichain1", 1, 1),
            ("antichain2", 2, 2),
            ("antichain3", 3, 6),
            ("lambda", 3, 2),
            ("vee", 3, 2),
            ("diamond", 4, 2),
            ("two_plus_two", 4, 6),
            ("zigzag", 4, 5),
        ];
        assert_eq!(sizes, expect);
        assert_eq!(builtin("vee").unwrap().dual().cover_pairs().len(), 2);
        assert!(load("builtin:nope").is_err());
        assert!(load("/nonexistent/file.pos").is_err());
    }
}
