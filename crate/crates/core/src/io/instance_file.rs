//! ```text
//! MINE 1
//! nodes N
//! labels k            | labels k_0 ... k_{N-1}
//! coord u x y         rationals as num/den, for all nodes or none
//! unary u c_0 ... c_{k_u - 1}
//! edge u v c_00 c_01 ...   row-major, rows indexed by the label of u
//! constant c
//! ```
//! `INF` stands for `+∞` and `#` starts a comment. Missing unary records
//! are zero and a missing constant is 0.

use std::collections::BTreeMap;
use std::fmt::Write;

use num::BigInt;

use super::{end_of_input, end_of_line, tokenize, Token};
use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::geometry::{Drawing, Point, Rational};
use crate::instance::{CostTable, Edge, EnergyInstance, NodeId};

pub const FORMAT_HEADER: &str = "MINE 1";

fn parse_rational(t: &Token<'_>) -> Result<Rational> {
    let bad = || t.error(format!("expected a rational num/den, found `{}`", t.text));
    let (num, den) = match t.text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(t.error("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn write_rational(out: &mut String, r: &Rational) {
    write!(out, "{}/{}", r.numer(), r.denom()).expect("write to string");
}

fn expect_keyword<'a>(line: Option<&'a Vec<Token<'a>>>, text: &str, keyword: &str) -> Result<&'a [Token<'a>]> {
    let line = line.ok_or_else(|| end_of_input(text, format!("missing `{keyword}` record")))?;
    if line[0].text != keyword {
        return Err(line[0].error(format!("expected `{keyword}`, found `{}`", line[0].text)));
    }
    Ok(&line[1..])
}

fn exact_arity(line: &[Token<'_>], args: &[Token<'_>], n: usize, what: &str) -> Result<()> {
    match args.get(n) {
        Some(extra) => Err(extra.error(format!("unexpected token after {what}"))),
        None if args.len() < n => Err(end_of_line(line, format!("{what} needs {n} values, found {}", args.len()))),
        None => Ok(()),
    }
}

fn node(t: &Token<'_>, n: usize) -> Result<NodeId> {
    let u: usize = t.parse("a node index")?;
    if u >= n {
        return Err(t.error(format!("node {u} out of range (nodes {n})")));
    }
    Ok(u)
}

fn costs(args: &[Token<'_>]) -> Result<Vec<ExtendedCost>> {
    args.iter().map(|t| t.parse::<ExtendedCost>("an integer or INF")).collect()
}

/// Parses an instance file and its optional drawing.
pub fn parse_instance(text: &str) -> Result<(EnergyInstance, Option<Drawing>)> {
    let lines = tokenize(text, Some('#'));
    let mut it = lines.iter();

    let header = it.next().ok_or_else(|| end_of_input(text, "empty input"))?;
    let version = expect_keyword(Some(header), text, "MINE")?;
    exact_arity(header, version, 1, "header")?;
    if version[0].text != "1" {
        return Err(version[0].error(format!("unsupported version `{}`", version[0].text)));
    }

    let nodes_line = it.next();
    let args = expect_keyword(nodes_line, text, "nodes")?;
    exact_arity(nodes_line.expect("checked"), args, 1, "nodes")?;
    let n: usize = args[0].parse("a node count")?;

    let labels_line = it.next();
    let args = expect_keyword(labels_line, text, "labels")?;
    let labels_line = labels_line.expect("checked");
    let counts: Vec<usize> = args.iter().map(|t| t.parse("a label count")).collect::<Result<_>>()?;
    let counts = match counts.len() {
        1 => vec![counts[0]; n],
        len if len == n => counts,
        len => return Err(end_of_line(labels_line, format!("expected 1 or {n} label counts, found {len}"))),
    };
    if let Some(pos) = counts.iter().position(|&k| k == 0) {
        return Err(args[pos.min(args.len() - 1)].error("label counts must be positive"));
    }

    let mut b = EnergyInstance::builder(counts.clone());
    let mut coords: BTreeMap<NodeId, Point> = BTreeMap::new();
    let mut unary_seen = vec![false; n];
    let mut constant_seen = false;

    for line in it {
        let (kw, args) = (&line[0], &line[1..]);
        match kw.text {
            "coord" => {
                exact_arity(line, args, 3, "coord")?;
                let u = node(&args[0], n)?;
                if coords.contains_key(&u) {
                    return Err(kw.error(format!("duplicate coordinates for node {u}")));
                }
                coords.insert(u, Point::new(parse_rational(&args[1])?, parse_rational(&args[2])?));
            }
            "unary" => {
                if args.is_empty() {
                    return Err(end_of_line(line, "unary needs a node"));
                }
                let u = node(&args[0], n)?;
                exact_arity(line, &args[1..], counts[u], "unary costs")?;
                if std::mem::replace(&mut unary_seen[u], true) {
                    return Err(kw.error(format!("duplicate unary record for node {u}")));
                }
                b.set_unary(u, costs(&args[1..])?);
            }
            "edge" => {
                if args.len() < 2 {
                    return Err(end_of_line(line, "edge needs two nodes"));
                }
                let (u, v) = (node(&args[0], n)?, node(&args[1], n)?);
                if u == v {
                    return Err(args[1].error(format!("self-loop on node {u}")));
                }
                if b.has_edge(Edge::new(u, v)) {
                    return Err(kw.error(format!("duplicate edge {}", Edge::new(u, v))));
                }
                let (ku, kv) = (counts[u], counts[v]);
                exact_arity(line, &args[2..], ku * kv, "edge costs")?;
                b.set_pairwise(u, v, CostTable::new(ku, kv, costs(&args[2..])?)?);
            }
            "constant" => {
                exact_arity(line, args, 1, "constant")?;
                if std::mem::replace(&mut constant_seen, true) {
                    return Err(kw.error("duplicate constant record"));
                }
                b.set_constant(args[0].parse("a finite integer")?);
            }
            other => return Err(kw.error(format!("unknown record `{other}`"))),
        }
    }

    let drawing = if coords.is_empty() {
        None
    } else if coords.len() != n {
        let missing = (0..n).find(|u| !coords.contains_key(u)).expect("some node lacks coordinates");
        return Err(end_of_input(text, format!("coordinates given for some nodes but not node {missing}")));
    } else {
        Some(Drawing::new(coords.into_values().collect()))
    };
    Ok((b.build()?, drawing))
}

/// Canonical text of an instance: every unary record, edges in sorted
/// order, reduced rationals and an explicit constant.
pub fn serialize_instance(i: &EnergyInstance, d: Option<&Drawing>) -> Result<String> {
    let mut out = String::new();
    let n = i.num_nodes();
    writeln!(out, "{FORMAT_HEADER}").expect("write to string");
    writeln!(out, "nodes {n}").expect("write to string");
    match i.uniform_label_count() {
        Some(k) => writeln!(out, "labels {k}"),
        None => writeln!(out, "labels {}", join(i.label_counts().iter())),
    }
    .expect("write to string");
    if let Some(d) = d {
        if d.len() != n {
            return Err(Error::InvalidInstance(format!("drawing has {} points for {n} nodes", d.len())));
        }
        for (u, p) in d.points().iter().enumerate() {
            write!(out, "coord {u} ").expect("write to string");
            write_rational(&mut out, &p.x);
            out.push(' ');
            write_rational(&mut out, &p.y);
            out.push('\n');
        }
    }
    for u in 0..n {
        writeln!(out, "unary {u} {}", join(i.unary(u).iter())).expect("write to string");
    }
    for (e, t) in i.edges() {
        writeln!(out, "edge {} {} {}", e.u(), e.v(), join(t.costs().iter())).expect("write to string");
    }
    writeln!(out, "constant {}", i.constant()).expect("write to string");
    Ok(out)
}

fn join<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
