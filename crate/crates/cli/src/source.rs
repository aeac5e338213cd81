//! Poset sources: builder flags, named posets and JSON.

use std::fs;

use clap::{ArgGroup, Args};
use ordertoric::catalog;
use ordertoric::poset::PosetJson;
use ordertoric::{Error, Poset};

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct PosetSource {
    /// Poset JSON, `{"m": 3, "covers": [[1,2],[1,3]]}`, inline or as a file path.
    #[arg(long, group = "source", value_name = "FILE|JSON")]
    pub json: Option<String>,
    /// Chain 1 < 2 < … < N.
    #[arg(long, group = "source", value_name = "N")]
    pub chain: Option<usize>,
    /// N pairwise incomparable elements.
    #[arg(long, group = "source", value_name = "N")]
    pub antichain: Option<usize>,
    /// Root covered by M−1 leaves.
    #[arg(long, group = "source", value_name = "M")]
    pub shrub: Option<usize>,
    /// Rooted tree from a parent list, 0 marking the root: "0,1,1,2,2".
    #[arg(long, group = "source", value_name = "PARENTS")]
    pub tree: Option<String>,
    /// B stacked above A; each operand is a poset spec (see --named).
    #[arg(long, group = "source", num_args = 2, value_names = ["A", "B"])]
    pub ordinal_sum: Option<Vec<String>>,
    /// A and B side by side; each operand is a poset spec (see --named).
    #[arg(long, group = "source", num_args = 2, value_names = ["A", "B"])]
    pub disjoint_union: Option<Vec<String>>,
    /// v, p1, p2, p3, h:M, stack:M, shrubbery-example, chain:N,
    /// antichain:N, shrub:M, tree:PARENTS or json:FILE.
    #[arg(long, group = "source", value_name = "SPEC")]
    pub named: Option<String>,
}

impl PosetSource {
    pub fn build(&self) -> Result<Poset, Error> {
        if let Some(j) = &self.json {
            return from_json(j);
        }
        if let Some(n) = self.chain {
            return Poset::chain(n);
        }
        if let Some(n) = self.antichain {
            return Poset::antichain(n);
        }
        if let Some(m) = self.shrub {
            return Poset::shrub(m);
        }
        if let Some(t) = &self.tree {
            return Poset::parse_tree(t);
        }
        if let Some(ab) = &self.ordinal_sum {
            return parse_spec(&ab[0])?.ordinal_sum(&parse_spec(&ab[1])?);
        }
        if let Some(ab) = &self.disjoint_union {
            return parse_spec(&ab[0])?.disjoint_union(&parse_spec(&ab[1])?);
        }
        if let Some(s) = &self.named {
            return parse_spec(s);
        }
        Err(Error::Invalid("no poset source given".into()))
    }
}

fn from_json(arg: &str) -> Result<Poset, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")))?
    };
    let json: PosetJson = serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("bad poset JSON: {e}")))?;
    Poset::from_json(&json)
}

fn number(s: &str) -> Result<usize, Error> {
    s.parse().map_err(|_| Error::Invalid(format!("expected a number, got {s:?}")))
}

/// Parses one poset spec such as `chain:3` or `p2`.
pub fn parse_spec(spec: &str) -> Result<Poset, Error> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "v" => Ok(catalog::v_poset()),
        "p1" => Ok(catalog::p1()),
        "p2" => Ok(catalog::p2()),
        "p3" => Ok(catalog::p3()),
        "shrubbery-example" => Ok(catalog::shrubbery_example_tree()),
        "h" => Ok(catalog::h(number(arg)?)),
        "stack" => Ok(catalog::antichain_stack(number(arg)?)),
        "chain" => Poset::chain(number(arg)?),
        "antichain" => Poset::antichain(number(arg)?),
        "shrub" => Poset::shrub(number(arg)?),
        "tree" => Poset::parse_tree(arg),
        "json" => from_json(arg),
        _ => Err(Error::Invalid(format!("unknown poset spec {spec:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_spec("chain:3").unwrap(), Poset::chain(3).unwrap());
        assert_eq!(parse_spec("tree:0,1,1").unwrap(), catalog::v_poset());
        assert_eq!(parse_spec("h:2").unwrap(), catalog::p3());
        assert!(parse_spec("h:x").is_err());
        assert!(parse_spec("nope").is_err());
        assert_eq!(from_json(r#"{"m": 3, "covers": [[1,2],[1,3]]}"#).unwrap(), catalog::v_poset());
    }
}
