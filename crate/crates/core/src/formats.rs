//! Text formats for the instance families the toolkit consumes and produces.
//!
//! * digraph text: header `qk <n> <m>`, then `m` arc lines `<u> <v>`, 0-based;
//! * DIMACS CNF: header `p cnf <vars> <clauses>`, one zero-terminated clause
//!   per line, literals signed and 1-based;
//! * DIMACS edge: header `p edge <n> <m>`, then `e <u> <v>` lines, 1-based;
//! * set cover text: header `sc <n> <m> <k>`, then `m` lines
//!   `<size> <elements...>` with 0-based elements.
//!
//! Lines starting with `c ` (or a bare `c`) are comments and may appear
//! anywhere in any of the four formats. Files must end with a newline.
//! Emission is canonical: no comments, sorted arc/edge lists, single spaces;
//! parsing a canonical file and emitting it again reproduces it byte for
//! byte.

use std::fmt;

use crate::digraph::{Digraph, GraphError};
use crate::reductions::{CnfFormula, SetCoverInstance, UndirectedGraph};

/// Parse failure with a 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        msg: msg.into(),
    })
}

/// Tokens of one line, each paired with its 1-based column.
type Tokens<'a> = [(usize, &'a str)];

/// Significant lines of a file: comments skipped, trailing newline enforced,
/// tokens paired with their 1-based line and column.
struct Lines<'a> {
    rows: Vec<(usize, Vec<(usize, &'a str)>)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        if !text.is_empty() && !text.ends_with('\n') {
            let last = text.lines().count();
            return err(last, 1, "missing trailing newline");
        }
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            if raw == "c" || raw.starts_with("c ") {
                continue;
            }
            let mut tokens = Vec::new();
            let mut col = 1;
            for piece in raw.split(' ') {
                if !piece.is_empty() {
                    tokens.push((col, piece));
                }
                col += piece.len() + 1;
            }
            if raw.contains('\t') {
                return err(i + 1, raw.find('\t').unwrap() + 1, "tab character in input");
            }
            if !tokens.is_empty() {
                rows.push((i + 1, tokens));
            }
        }
        Ok(Lines { rows, next: 0 })
    }

    fn next_row(&mut self, want: &str) -> Result<(usize, &Tokens<'a>), ParseError> {
        if self.next >= self.rows.len() {
            let line = self.rows.last().map(|r| r.0 + 1).unwrap_or(1);
            return err(line, 1, format!("unexpected end of file, expected {want}"));
        }
        let (line, ref tokens) = self.rows[self.next];
        self.next += 1;
        Ok((line, tokens))
    }

    fn expect_done(&self) -> Result<(), ParseError> {
        if self.next < self.rows.len() {
            let (line, ref tokens) = self.rows[self.next];
            return err(line, tokens[0].0, "trailing content after the declared lines");
        }
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(
    line: usize,
    tok: (usize, &str),
    what: &str,
) -> Result<T, ParseError> {
    tok.1
        .parse()
        .or_else(|_| err(line, tok.0, format!("invalid {what} `{}`", tok.1)))
}

fn expect_len(
    line: usize,
    tokens: &[(usize, &str)],
    want: usize,
    shape: &str,
) -> Result<(), ParseError> {
    if tokens.len() != want {
        let col = tokens
            .get(want.min(tokens.len().saturating_sub(1)))
            .map(|t| t.0)
            .unwrap_or(1);
        return err(line, col, format!("expected `{shape}`"));
    }
    Ok(())
}

fn graph_err(line: usize, e: GraphError) -> ParseError {
    ParseError {
        line,
        col: 1,
        msg: e.to_string(),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = Lines::new(text)?;
    let (hl, header) = lines.next_row("header `qk <n> <m>`")?;
    expect_len(hl, header, 3, "qk <n> <m>")?;
    if header[0].1 != "qk" {
        return err(hl, header[0].0, format!("expected `qk`, found `{}`", header[0].1));
    }
    let n: usize = parse_num(hl, header[1], "vertex count")?;
    let m: usize = parse_num(hl, header[2], "arc count")?;
    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let (l, row) = lines.next_row("an arc line `<u> <v>`")?;
        expect_len(l, row, 2, "<u> <v>")?;
        let u: usize = parse_num(l, row[0], "vertex")?;
        let v: usize = parse_num(l, row[1], "vertex")?;
        if u >= n || v >= n {
            return err(l, row[0].0, format!("arc ({u}, {v}) out of range for {n} vertices"));
        }
        if u == v {
            return err(l, row[0].0, format!("self-loop at vertex {u}"));
        }
        arcs.push((u, v));
    }
    lines.expect_done()?;
    Digraph::new(n, arcs).map_err(|e| graph_err(hl, e))
}

pub fn emit_digraph(d: &Digraph) -> String {
    let mut out = format!("qk {} {}\n", d.vertex_count(), d.arc_count());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut lines = Lines::new(text)?;
    let (hl, header) = lines.next_row("header `p cnf <vars> <clauses>`")?;
    expect_len(hl, header, 4, "p cnf <vars> <clauses>")?;
    if header[0].1 != "p" || header[1].1 != "cnf" {
        return err(hl, header[0].0, "expected `p cnf <vars> <clauses>`");
    }
    let vars: usize = parse_num(hl, header[2], "variable count")?;
    let clauses: usize = parse_num(hl, header[3], "clause count")?;
    let mut formula = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let (l, row) = lines.next_row("a zero-terminated clause line")?;
        let (last, body) = row.split_last().unwrap();
        if last.1 != "0" {
            return err(l, last.0, "clause line must end with 0");
        }
        let mut clause = Vec::with_capacity(body.len());
        for tok in body {
            let lit: i64 = parse_num(l, *tok, "literal")?;
            if lit == 0 {
                return err(l, tok.0, "literal 0 inside a clause");
            }
            if lit.unsigned_abs() as usize > vars {
                return err(l, tok.0, format!("literal {lit} out of range for {vars} variables"));
            }
            clause.push(lit);
        }
        formula.push(clause);
    }
    lines.expect_done()?;
    Ok(CnfFormula {
        num_vars: vars,
        clauses: formula,
    })
}

pub fn emit_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for clause in &f.clauses {
        for lit in clause {
            out.push_str(&format!("{lit} "));
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_edge_graph(text: &str) -> Result<UndirectedGraph, ParseError> {
    let mut lines = Lines::new(text)?;
    let (hl, header) = lines.next_row("header `p edge <n> <m>`")?;
    expect_len(hl, header, 4, "p edge <n> <m>")?;
    if header[0].1 != "p" || header[1].1 != "edge" {
        return err(hl, header[0].0, "expected `p edge <n> <m>`");
    }
    let n: usize = parse_num(hl, header[2], "vertex count")?;
    let m: usize = parse_num(hl, header[3], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (l, row) = lines.next_row("an edge line `e <u> <v>`")?;
        expect_len(l, row, 3, "e <u> <v>")?;
        if row[0].1 != "e" {
            return err(l, row[0].0, format!("expected `e`, found `{}`", row[0].1));
        }
        let u: usize = parse_num(l, row[1], "vertex")?;
        let v: usize = parse_num(l, row[2], "vertex")?;
        if u == 0 || v == 0 || u > n || v > n {
            return err(l, row[1].0, format!("edge ({u}, {v}) out of 1..={n}"));
        }
        if u == v {
            return err(l, row[1].0, format!("self-loop at vertex {u}"));
        }
        edges.push((u - 1, v - 1));
    }
    lines.expect_done()?;
    Ok(UndirectedGraph::new(n, edges))
}

pub fn emit_edge_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance, ParseError> {
    let mut lines = Lines::new(text)?;
    let (hl, header) = lines.next_row("header `sc <n> <m> <k>`")?;
    expect_len(hl, header, 4, "sc <n> <m> <k>")?;
    if header[0].1 != "sc" {
        return err(hl, header[0].0, format!("expected `sc`, found `{}`", header[0].1));
    }
    let n: usize = parse_num(hl, header[1], "universe size")?;
    let m: usize = parse_num(hl, header[2], "family size")?;
    let k: usize = parse_num(hl, header[3], "budget")?;
    let mut family = Vec::with_capacity(m);
    for _ in 0..m {
        let (l, row) = lines.next_row("a set line `<size> <elements...>`")?;
        let size: usize = parse_num(l, row[0], "set size")?;
        if row.len() != size + 1 {
            return err(l, row[0].0, format!("set line declares {size} elements but lists {}", row.len() - 1));
        }
        let mut set = Vec::with_capacity(size);
        for tok in &row[1..] {
            let e: usize = parse_num(l, *tok, "element")?;
            if e >= n {
                return err(l, tok.0, format!("element {e} out of range for universe size {n}"));
            }
            set.push(e);
        }
        family.push(set);
    }
    lines.expect_done()?;
    Ok(SetCoverInstance {
        universe_size: n,
        family,
        budget: k,
    })
}

pub fn emit_set_cover(inst: &SetCoverInstance) -> String {
    let mut out = format!(
        "sc {} {} {}\n",
        inst.universe_size,
        inst.family.len(),
        inst.budget
    );
    for set in &inst.family {
        out.push_str(&set.len().to_string());
        for e in set {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
    }
    out
}

/// Emits a labels sidecar: one `<name> <index>` line per vertex, in index
/// order. Names never contain spaces.
pub fn emit_labels<'a, I>(labels: I) -> String
where
    I: IntoIterator<Item = (&'a str, usize)>,
{
    let mut rows: Vec<(usize, &str)> = labels.into_iter().map(|(s, i)| (i, s)).collect();
    rows.sort_unstable();
    let mut out = String::new();
    for (i, name) in rows {
        out.push_str(&format!("{name} {i}\n"));
    }
    out
}

/// Emits a params sidecar: flat `key=value` lines in key order.
pub fn emit_params<'a, I>(params: I) -> String
where
    I: IntoIterator<Item = (&'a str, u64)>,
{
    let mut rows: Vec<(&str, u64)> = params.into_iter().collect();
    rows.sort_unstable();
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k}={v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_round_trip() {
        let text = "qk 3 3\n0 1\n1 2\n2 0\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(emit_digraph(&d), text);
    }

    #[test]
    fn digraph_emit_sorts_arcs() {
        let d = Digraph::new(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(emit_digraph(&d), "qk 3 2\n0 1\n2 0\n");
    }

    #[test]
    fn digraph_accepts_comments_anywhere() {
        let text = "c a triangle\nqk 3 3\n0 1\nc middle\n1 2\n2 0\nc end\n";
        assert_eq!(parse_digraph(text).unwrap().arc_count(), 3);
    }

    #[test]
    fn digraph_requires_trailing_newline() {
        let e = parse_digraph("qk 1 0").unwrap_err();
        assert!(e.to_string().contains("trailing newline"));
    }

    #[test]
    fn digraph_reports_bad_header_position() {
        let e = parse_digraph("qm 1 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        let e = parse_digraph("qk one 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 4));
    }

    #[test]
    fn digraph_rejects_extra_and_missing_arcs() {
        let e = parse_digraph("qk 2 1\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_digraph("qk 2 2\n0 1\n").unwrap_err();
        assert!(e.msg.contains("end of file"));
    }

    #[test]
    fn digraph_rejects_out_of_range_arc() {
        let e = parse_digraph("qk 2 1\n0 5\n").unwrap_err();
        assert!(e.msg.contains("out of range"));
    }

    #[test]
    fn cnf_round_trip() {
        let text = "p cnf 3 2\n1 -2 3 0\n-1 2 0\n";
        let f = parse_cnf(text).unwrap();
        assert_eq!(f.num_vars, 3);
        assert_eq!(f.clauses, vec![vec![1, -2, 3], vec![-1, 2]]);
        assert_eq!(emit_cnf(&f), text);
    }

    #[test]
    fn cnf_smallest() {
        let f = parse_cnf("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(f.clauses, vec![vec![1]]);
    }

    #[test]
    fn cnf_rejects_unterminated_clause() {
        let e = parse_cnf("p cnf 2 1\n1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("end with 0"));
    }

    #[test]
    fn cnf_rejects_out_of_range_literal() {
        let e = parse_cnf("p cnf 2 1\n3 0\n").unwrap_err();
        assert!(e.msg.contains("out of range"));
    }

    #[test]
    fn edge_round_trip() {
        let text = "p edge 4 2\ne 1 2\ne 3 4\n";
        let g = parse_edge_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(emit_edge_graph(&g), text);
    }

    #[test]
    fn edge_normalizes_orientation_and_dups() {
        let g = parse_edge_graph("p edge 3 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn edge_rejects_zero_vertex() {
        let e = parse_edge_graph("p edge 3 1\ne 0 2\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn set_cover_round_trip() {
        let text = "sc 3 2 1\n2 0 1\n3 0 1 2\n";
        let inst = parse_set_cover(text).unwrap();
        assert_eq!(inst.universe_size, 3);
        assert_eq!(inst.budget, 1);
        assert_eq!(emit_set_cover(&inst), text);
    }

    #[test]
    fn set_cover_rejects_length_mismatch() {
        let e = parse_set_cover("sc 3 1 1\n2 0\n").unwrap_err();
        assert!(e.msg.contains("declares 2"));
    }

    #[test]
    fn sidecars_are_sorted_and_flat() {
        let labels = emit_labels([("b", 1), ("a", 0)]);
        assert_eq!(labels, "a 0\nb 1\n");
        let params = emit_params([("m", 3), ("k", 1)]);
        assert_eq!(params, "k=1\nm=3\n");
    }
}
