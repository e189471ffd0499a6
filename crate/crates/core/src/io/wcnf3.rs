//! ```text
//! c comment
//! p wcnf3 <variables> <clauses>
//! w <w_1> ... <w_n>
//! <l_1> <l_2> <l_3> 0      one line per clause, DIMACS-style literals
//! ```

use std::fmt::Write;

use super::{end_of_input, end_of_line, tokenize};
use crate::error::Result;
use crate::reductions::{Clause, Literal, W3SatTriv};

pub fn parse_wcnf3(text: &str) -> Result<W3SatTriv> {
    let lines: Vec<_> = tokenize(text, None).into_iter().filter(|l| l[0].text != "c").collect();
    let mut it = lines.iter();

    let p = it.next().ok_or_else(|| end_of_input(text, "missing problem line"))?;
    if p[0].text != "p" {
        return Err(p[0].error(format!("expected `p`, found `{}`", p[0].text)));
    }
    match p.get(1) {
        Some(t) if t.text == "wcnf3" => {}
        Some(t) => return Err(t.error(format!("expected format `wcnf3`, found `{}`", t.text))),
        None => return Err(end_of_line(p, "missing format name")),
    }
    if p.len() < 4 {
        return Err(end_of_line(p, "problem line needs variable and clause counts"));
    }
    if let Some(extra) = p.get(4) {
        return Err(extra.error("unexpected token on problem line"));
    }
    let n: usize = p[2].parse("a variable count")?;
    let m: usize = p[3].parse("a clause count")?;

    let w = it.next().ok_or_else(|| end_of_input(text, "missing weight line"))?;
    if w[0].text != "w" {
        return Err(w[0].error(format!("expected `w`, found `{}`", w[0].text)));
    }
    if w.len() - 1 != n {
        let at = w.get(n + 1).copied();
        let msg = format!("expected {n} weights, found {}", w.len() - 1);
        return Err(at.map_or_else(|| end_of_line(w, msg.clone()), |t| t.error(msg.clone())));
    }
    let mut weights = Vec::with_capacity(n);
    for t in &w[1..] {
        let v: i64 = t.parse("an integer weight")?;
        if v < 0 {
            return Err(t.error(format!("negative weight {v}")));
        }
        weights.push(v);
    }

    let mut clauses = Vec::with_capacity(m);
    for line in it {
        if clauses.len() == m {
            return Err(line[0].error(format!("more than {m} clauses")));
        }
        let terminator = line.iter().position(|t| t.text == "0");
        match terminator {
            Some(3) if line.len() == 4 => {}
            Some(pos) if pos != 3 => {
                return Err(line[pos].error(format!("clause has {pos} literals, exactly 3 are required")))
            }
            Some(_) => return Err(line[4].error("unexpected token after clause terminator")),
            None => return Err(end_of_line(line, "clause must end with 0")),
        }
        let mut lits = [Literal::pos(0); 3];
        for (k, t) in line[..3].iter().enumerate() {
            let v: i64 = t.parse("a non-zero literal")?;
            if v.unsigned_abs() as usize > n {
                return Err(t.error(format!("variable {} exceeds {n}", v.abs())));
            }
            lits[k] = Literal::from_signed(v).map_err(|e| t.error(e.to_string()))?;
        }
        clauses.push(Clause::new(lits).map_err(|e| line[0].error(e.to_string()))?);
    }
    if clauses.len() != m {
        return Err(end_of_input(text, format!("expected {m} clauses, found {}", clauses.len())));
    }
    W3SatTriv::new(n, clauses, weights)
}

pub fn serialize_wcnf3(s: &W3SatTriv) -> String {
    let mut out = String::new();
    writeln!(out, "p wcnf3 {} {}", s.num_vars(), s.clauses().len()).expect("write to string");
    let w: Vec<String> = s.weights().iter().map(|w| w.to_string()).collect();
    writeln!(out, "w {}", w.join(" ")).expect("write to string");
    for c in s.clauses() {
        let l: Vec<String> = c.0.iter().map(|l| l.to_signed().to_string()).collect();
        writeln!(out, "{} 0", l.join(" ")).expect("write to string");
    }
    out
}
