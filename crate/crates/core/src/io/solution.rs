//! Solutions: one `node label` pair per line and a trailing
//! `energy <value>` record. Assignments of a formula use 1-based variables
//! with values 0/1 and a trailing `measure <value>` record.

use std::fmt::Write;

use super::{end_of_line, tokenize, Token};
use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::instance::Labeling;

pub fn serialize_solution(y: &Labeling, energy: ExtendedCost) -> String {
    let mut out = String::new();
    for (u, l) in y.as_slice().iter().enumerate() {
        writeln!(out, "{u} {l}").expect("write to string");
    }
    writeln!(out, "energy {energy}").expect("write to string");
    out
}

/// Collects `index value` pairs; `offset` is the index of the first entry.
fn parse_pairs(text: &str, offset: usize, trailer: &str) -> Result<(Vec<usize>, Option<ExtendedCost>)> {
    let mut values: Vec<Option<usize>> = Vec::new();
    let mut recorded = None;
    let mut first_token: Option<Token<'_>> = None;
    for line in tokenize(text, Some('#')) {
        first_token.get_or_insert(line[0]);
        if line.len() != 2 {
            let at = line.get(2).copied().unwrap_or(line[0]);
            return Err(if line.len() < 2 {
                end_of_line(&line, "expected two values")
            } else {
                at.error("unexpected token")
            });
        }
        if line[0].text == trailer {
            if recorded.replace(line[1].parse::<ExtendedCost>("an integer or INF")?).is_some() {
                return Err(line[0].error(format!("duplicate `{trailer}` record")));
            }
            continue;
        }
        let idx: usize = line[0].parse("an index")?;
        if idx < offset {
            return Err(line[0].error(format!("indices start at {offset}")));
        }
        let idx = idx - offset;
        if idx >= values.len() {
            values.resize(idx + 1, None);
        }
        if values[idx].replace(line[1].parse("a label")?).is_some() {
            return Err(line[0].error(format!("duplicate entry for {}", idx + offset)));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Parse { line: 1, column: 1, message: format!("missing entry for {}", i + offset) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((values, recorded))
}

/// Parses a labeling and its recorded energy, if any.
pub fn parse_solution(text: &str) -> Result<(Labeling, Option<ExtendedCost>)> {
    let (values, energy) = parse_pairs(text, 0, "energy")?;
    Ok((Labeling::new(values), energy))
}

pub fn serialize_assignment(a: &[bool], measure: ExtendedCost) -> String {
    let mut out = String::new();
    for (i, &v) in a.iter().enumerate() {
        writeln!(out, "{} {}", i + 1, u8::from(v)).expect("write to string");
    }
    writeln!(out, "measure {measure}").expect("write to string");
    out
}

pub fn parse_assignment(text: &str) -> Result<(Vec<bool>, Option<ExtendedCost>)> {
    let (values, measure) = parse_pairs(text, 1, "measure")?;
    let bits = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| match v {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::Parse { line: 1, column: 1, message: format!("variable {} has value {v}", i + 1) }),
        })
        .collect::<Result<_>>()?;
    Ok((bits, measure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{Finite, Infinite};

    #[test]
    fn solution_round_trip() {
        let y = Labeling::new(vec![2, 0, 1]);
        let text = serialize_solution(&y, Finite(-4));
        assert_eq!(text, "0 2\n1 0\n2 1\nenergy -4\n");
        assert_eq!(parse_solution(&text).unwrap(), (y, Some(Finite(-4))));
    }

    #[test]
    fn lines_in_any_order() {
        let (y, e) = parse_solution("1 1\n0 0\nenergy INF\n").unwrap();
        assert_eq!(y.as_slice(), &[0, 1]);
        assert_eq!(e, Some(Infinite));
    }

    #[test]
    fn gaps_and_duplicates_are_rejected() {
        assert!(parse_solution("0 1\n2 1\n").is_err());
        assert!(parse_solution("0 1\n0 0\n").is_err());
        assert!(parse_solution("0 1 2\n").is_err());
    }

    #[test]
    fn assignments_are_one_based() {
        let text = serialize_assignment(&[true, false], Finite(3));
        assert_eq!(text, "1 1\n2 0\nmeasure 3\n");
        assert_eq!(parse_assignment(&text).unwrap(), (vec![true, false], Some(Finite(3))));
        assert!(parse_assignment("0 1\n").is_err());
        assert!(parse_assignment("1 2\n").is_err());
    }
}
