//! Plain-text matroid files.
//!
//! ```text
//! # comment lines start with '#'
//! uniform <n> <r>
//! graphic <nv> <ne>          then ne lines "<u> <v>", edge i is element i
//! linear <p> <rows> <cols>   then rows lines of cols entries in [0, p)
//! partition <n> <nblocks>    then nblocks lines "<cap> <e>..."
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::matroid::{Block, Family, Matroid, MatroidError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: MatroidError,
    },
    #[error("empty matroid file")]
    Empty,
    #[error("only unrestricted, uncontracted matroids can be written")]
    Minor,
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank, non-comment line as (1-based number, tokens).
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let trimmed = line.trim();
            self.last = i + 1;
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((i + 1, trimmed.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        self.next_tokens().ok_or_else(|| ParseError::Syntax {
            line: self.last + 1,
            message: format!("unexpected end of file, expected {what}"),
        })
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers<T: std::str::FromStr>(line: usize, tokens: &[&str]) -> Result<Vec<T>, ParseError> {
    tokens
        .iter()
        .map(|t| {
            t.parse().map_err(|_| {
                syntax(
                    line,
                    format!("expected a non-negative integer, found {t:?}"),
                )
            })
        })
        .collect()
}

fn arity<T: Copy>(
    line: usize,
    values: &[T],
    expected: usize,
    what: &str,
) -> Result<(), ParseError> {
    if values.len() != expected {
        return Err(syntax(
            line,
            format!("{what} takes {expected} values, found {}", values.len()),
        ));
    }
    Ok(())
}

/// Parses a matroid file.
pub fn parse_matroid(text: &str) -> Result<Matroid, ParseError> {
    let mut lines = Lines::new(text);
    let (header_line, header) = lines.next_tokens().ok_or(ParseError::Empty)?;
    let invalid = |source| ParseError::Invalid {
        line: header_line,
        source,
    };
    let matroid = match header[0] {
        "uniform" => {
            let args: Vec<usize> = numbers(header_line, &header[1..])?;
            arity(header_line, &args, 2, "uniform header")?;
            Matroid::uniform(args[0], args[1]).map_err(invalid)?
        }
        "graphic" => {
            let args: Vec<usize> = numbers(header_line, &header[1..])?;
            arity(header_line, &args, 2, "graphic header")?;
            let (vertices, count) = (args[0], args[1]);
            let mut edges = Vec::with_capacity(count);
            for i in 0..count {
                let (line, tokens) = lines.expect(&format!("edge {i}"))?;
                let ends: Vec<usize> = numbers(line, &tokens)?;
                arity(line, &ends, 2, "edge line")?;
                if let Some(&v) = ends.iter().find(|&&v| v >= vertices) {
                    return Err(ParseError::Invalid {
                        line,
                        source: MatroidError::VertexOutOfRange {
                            edge: i,
                            vertex: v,
                            vertices,
                        },
                    });
                }
                edges.push((ends[0], ends[1]));
            }
            Matroid::graphic(vertices, edges).map_err(invalid)?
        }
        "linear" => {
            let args: Vec<u64> = numbers(header_line, &header[1..])?;
            arity(header_line, &args, 3, "linear header")?;
            let (prime, rows, cols) = (args[0], args[1] as usize, args[2] as usize);
            if !crate::matroid::is_prime(prime) {
                return Err(invalid(MatroidError::NotPrime(prime)));
            }
            if rows == 0 && cols > 0 {
                return Err(syntax(
                    header_line,
                    "a linear matroid with columns needs at least one row",
                ));
            }
            // A matrix without columns has no row lines.
            let mut matrix = vec![Vec::new(); if cols == 0 { rows } else { 0 }];
            for r in 0..if cols == 0 { 0 } else { rows } {
                let (line, tokens) = lines.expect(&format!("matrix row {r}"))?;
                let row: Vec<u64> = numbers(line, &tokens)?;
                arity(line, &row, cols, "matrix row")?;
                if let Some((c, &value)) = row.iter().enumerate().find(|(_, &v)| v >= prime) {
                    return Err(ParseError::Invalid {
                        line,
                        source: MatroidError::EntryOutOfRange {
                            row: r,
                            col: c,
                            value,
                            prime,
                        },
                    });
                }
                matrix.push(row);
            }
            Matroid::linear(prime, matrix).map_err(invalid)?
        }
        "partition" => {
            let args: Vec<usize> = numbers(header_line, &header[1..])?;
            arity(header_line, &args, 2, "partition header")?;
            let (n, count) = (args[0], args[1]);
            let mut blocks = Vec::with_capacity(count);
            for b in 0..count {
                let (line, tokens) = lines.expect(&format!("block {b}"))?;
                let values: Vec<usize> = numbers(line, &tokens)?;
                let Some((&capacity, elements)) = values.split_first() else {
                    unreachable!("non-blank line has a token");
                };
                blocks.push(Block {
                    capacity,
                    elements: elements.to_vec(),
                });
                // Per-line validation so errors point at the block.
                if let Some(&element) = elements.iter().find(|&&e| e >= n) {
                    return Err(ParseError::Invalid {
                        line,
                        source: MatroidError::BlockElementOutOfRange {
                            block: b,
                            element,
                            n,
                        },
                    });
                }
            }
            Matroid::partition(n, blocks).map_err(invalid)?
        }
        other => {
            return Err(syntax(
                header_line,
                format!(
                "unknown matroid type {other:?}; expected uniform, graphic, linear or partition"
            ),
            ))
        }
    };
    if let Some((line, _)) = lines.next_tokens() {
        return Err(syntax(line, "trailing content after the matroid"));
    }
    Ok(matroid)
}

/// Writes a matroid in the file format. Minors have no file form.
pub fn write_matroid(matroid: &Matroid) -> Result<String, ParseError> {
    if matroid.is_minor() {
        return Err(ParseError::Minor);
    }
    let mut out = String::new();
    let join = |values: &mut dyn Iterator<Item = String>| values.collect::<Vec<_>>().join(" ");
    match matroid.family() {
        Family::Uniform { n, rank } => writeln!(out, "uniform {n} {rank}").unwrap(),
        Family::Graphic { vertices, edges } => {
            writeln!(out, "graphic {vertices} {}", edges.len()).unwrap();
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Family::Linear { prime, rows } => {
            let cols = rows.first().map_or(0, Vec::len);
            writeln!(out, "linear {prime} {} {cols}", rows.len()).unwrap();
            for row in rows.iter().filter(|_| cols > 0) {
                writeln!(out, "{}", join(&mut row.iter().map(u64::to_string))).unwrap();
            }
        }
        Family::Partition { n, blocks } => {
            writeln!(out, "partition {n} {}", blocks.len()).unwrap();
            for b in blocks {
                let values = std::iter::once(b.capacity).chain(b.elements.iter().copied());
                writeln!(out, "{}", join(&mut values.map(|v| v.to_string()))).unwrap();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::ElementSet;

    #[test]
    fn parse_examples() {
        let u = parse_matroid("uniform 4 2").unwrap();
        assert_eq!(u.family(), &Family::Uniform { n: 4, rank: 2 });

        let t = parse_matroid("graphic 3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(t.rank(t.ground_set()).unwrap(), 2);

        let l = parse_matroid("linear 2 2 3\n1 0 1\n0 1 1\n").unwrap();
        let sum = [0, 1, 2].iter().collect::<ElementSet>();
        assert_eq!(l.rank(sum).unwrap(), 2);
        assert_eq!(
            l.fundamental_circuit([0, 1].iter().collect(), 2).unwrap(),
            sum
        );

        let p = parse_matroid("# pairs\npartition 4 2\n1 0 1\n\n1 2 3\n").unwrap();
        assert!(!p.is_independent([0, 1].iter().collect()).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# K3\n\n  # indented comment\ngraphic 3 2\n# between\n0 1\n1 2\n";
        assert_eq!(parse_matroid(text).unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_matroid("# c\nmatrix 2 2").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");

        let err = parse_matroid("graphic 3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }), "{err}");

        let err = parse_matroid("graphic 3 2\n0 1\n1 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 3, .. }), "{err}");

        let err = parse_matroid("linear 4 1 1\n1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Invalid {
                line: 1,
                source: MatroidError::NotPrime(4)
            }
        );

        let err = parse_matroid("linear 3 1 2\n1 2 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");

        let err = parse_matroid("partition 3 1\n1 0 1\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Invalid {
                source: MatroidError::UncoveredElement(2),
                ..
            }
        ));

        let err = parse_matroid("uniform 3").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));

        let err = parse_matroid("uniform 3 -1").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));

        assert_eq!(parse_matroid("# nothing\n").unwrap_err(), ParseError::Empty);
        assert!(matches!(
            parse_matroid("uniform 2 1\nuniform 2 1").unwrap_err(),
            ParseError::Syntax { line: 2, .. }
        ));
    }

    #[test]
    fn empty_linear_matroid() {
        let m = parse_matroid("linear 3 2 0").unwrap();
        assert_eq!(m.len(), 0);
        assert_eq!(write_matroid(&m).unwrap(), "linear 3 2 0\n");
    }

    #[test]
    fn minors_cannot_be_written() {
        let m = parse_matroid("uniform 3 1").unwrap();
        let c = m.contract(ElementSet::singleton(0)).unwrap();
        assert_eq!(write_matroid(&c).unwrap_err(), ParseError::Minor);
    }
}
