//! Text formats: energy instances with optional drawings, weighted 3-SAT
//! formulas, solutions, and SVG rendering of drawings.

mod instance_file;
mod solution;
mod svg;
mod wcnf3;

pub use instance_file::{parse_instance, serialize_instance, FORMAT_HEADER};
pub use solution::{parse_assignment, parse_solution, serialize_assignment, serialize_solution};
pub use svg::render_svg;
pub use wcnf3::{parse_wcnf3, serialize_wcnf3};

use crate::error::Error;

/// A whitespace-separated token with its 1-based position.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    pub fn parse<T: std::str::FromStr>(&self, what: &str) -> Result<T, Error> {
        self.text.parse().map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }
}

/// Non-empty lines of `text` split into tokens, with everything after
/// `comment` dropped.
pub(crate) fn tokenize(text: &str, comment: Option<char>) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = comment.map_or(raw, |c| raw.split(c).next().unwrap_or(""));
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        let column = content[..s].chars().count() + 1;
                        tokens.push(Token { text: &content[s..pos], line: i + 1, column });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

/// Error positioned just past the last token of a line.
pub(crate) fn end_of_line(line: &[Token<'_>], message: impl Into<String>) -> Error {
    let last = line.last().expect("lines are non-empty");
    Error::Parse { line: last.line, column: last.column + last.text.chars().count(), message: message.into() }
}

pub(crate) fn end_of_input(text: &str, message: impl Into<String>) -> Error {
    Error::Parse { line: text.lines().count().max(1), column: 1, message: message.into() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_carry_positions() {
        let lines = tokenize("a  bc # x y\n\n  d\n", Some('#'));
        assert_eq!(lines.len(), 2);
        let t: Vec<_> = lines.iter().flatten().map(|t| (t.text, t.line, t.column)).collect();
        assert_eq!(t, vec![("a", 1, 1), ("bc", 1, 4), ("d", 3, 3)]);
    }
}
