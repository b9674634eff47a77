//! Line-oriented text format for codes, plus qubit-set and vector syntax.
//!
//! ```text
//! # comment
//! p 2
//! n 4
//! P XXXX
//! g 0 0 0 0 1 1 1 1
//! ```
//!
//! `p` comes first and `n` second, each exactly once. Each `g` line holds
//! `2n` integers in `[0, p)`, x-block then z-block. `P` lines hold `n` Pauli
//! letters and are only valid for p = 2. `#` starts a comment anywhere on a
//! line; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field_linalg::{Backend, Field, Prime};
use crate::stabilizer::{make_code, StabilizerCode};
use crate::symplectic::{PauliVector, QubitSet};

pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    parse_code_with(text, Backend::default())
}

pub fn parse_code_with(text: &str, backend: Backend) -> Result<StabilizerCode> {
    let mut header_p: Option<Prime> = None;
    let mut header_n: Option<usize> = None;
    let mut generators = Vec::new();
    let mut generator_lines = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(&(keyword_col, keyword)) = tokens.first() else {
            continue;
        };
        let args = &tokens[1..];

        let (prime, n) = match (header_p, header_n) {
            (None, _) => {
                header_p = Some(parse_p_line(line_no, keyword_col, keyword, args)?);
                continue;
            }
            (Some(_), None) => {
                header_n = Some(parse_header_value(
                    line_no,
                    keyword_col,
                    keyword,
                    "n",
                    args,
                )?);
                continue;
            }
            (Some(p), Some(n)) => (p, n),
        };

        let g = match keyword {
            "g" => parse_integer_row(line_no, prime, n, args)?,
            "P" => {
                if prime.get() != 2 {
                    return Err(Error::LetterRequiresP2 { line: line_no });
                }
                parse_letter_row(line_no, n, args)?
            }
            other => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: keyword_col,
                    message: format!("expected 'g' or 'P', found '{other}'"),
                })
            }
        };
        generators.push(g);
        generator_lines.push(line_no);
    }

    let missing = |what: &str| Error::Syntax {
        line: last_line + 1,
        column: 1,
        message: format!("missing '{what}' header line"),
    };
    let prime = header_p.ok_or_else(|| missing("p"))?;
    let n = header_n.ok_or_else(|| missing("n"))?;
    let field = Field::with_backend(prime, backend);
    make_code(field, n, &generators).map_err(|e| match e {
        Error::NotIsotropic { first, second, .. } => Error::NotIsotropicLines {
            first_line: generator_lines[first],
            second_line: generator_lines[second],
        },
        other => other,
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokenize(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((st + 1, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_header_value(
    line: usize,
    col: usize,
    keyword: &str,
    expected: &str,
    args: &[(usize, &str)],
) -> Result<usize> {
    if keyword != expected {
        return Err(syntax(
            line,
            col,
            format!("expected '{expected}' header, found '{keyword}'"),
        ));
    }
    match args {
        [(c, value)] => value
            .parse()
            .map_err(|_| syntax(line, *c, format!("invalid count '{value}'"))),
        [] => Err(syntax(line, col + keyword.len(), "missing value")),
        [_, (c, _), ..] => Err(syntax(line, *c, "unexpected token")),
    }
}

fn parse_p_line(line: usize, col: usize, keyword: &str, args: &[(usize, &str)]) -> Result<Prime> {
    let value = parse_header_value(line, col, keyword, "p", args)?;
    Prime::new(value as u64).map_err(|_| syntax(line, args[0].0, format!("{value} is not a prime")))
}

fn parse_integer_row(
    line: usize,
    prime: Prime,
    n: usize,
    args: &[(usize, &str)],
) -> Result<PauliVector> {
    if args.len() != 2 * n {
        return Err(Error::WrongLength {
            line,
            expected: 2 * n,
            found: args.len(),
        });
    }
    let mut flat = Vec::with_capacity(2 * n);
    for &(col, tok) in args {
        let value: u32 = tok
            .parse()
            .map_err(|_| syntax(line, col, format!("invalid entry '{tok}'")))?;
        if value >= prime.get() {
            return Err(syntax(
                line,
                col,
                format!("entry {value} is outside [0, {})", prime.get()),
            ));
        }
        flat.push(value);
    }
    PauliVector::from_flat(prime, &flat)
}

fn parse_letter_row(line: usize, n: usize, args: &[(usize, &str)]) -> Result<PauliVector> {
    let [(col, word)] = args else {
        return match args.get(1) {
            Some(&(col, _)) => Err(syntax(line, col, "expected a single Pauli string")),
            None => Err(Error::WrongLength {
                line,
                expected: n,
                found: 0,
            }),
        };
    };
    if let Some(pos) = word
        .chars()
        .position(|c| !matches!(c, 'I' | 'X' | 'Y' | 'Z'))
    {
        return Err(syntax(line, col + pos, "expected one of I, X, Y, Z"));
    }
    if word.len() != n {
        return Err(Error::WrongLength {
            line,
            expected: n,
            found: word.len(),
        });
    }
    Ok(PauliVector::from_pauli_str(word).expect("letters validated"))
}

/// Header followed by the canonical basis rows as `g` lines; for p = 2 each
/// row is followed by a `# P ...` comment. Always ends with a newline.
pub fn serialize_code(code: &StabilizerCode) -> String {
    let mut out = String::new();
    writeln!(out, "p {}", code.prime()).unwrap();
    writeln!(out, "n {}", code.n()).unwrap();
    for g in code.generators() {
        writeln!(out, "g {g}").unwrap();
        if let Some(letters) = g.to_pauli_string() {
            writeln!(out, "# P {letters}").unwrap();
        }
    }
    out
}

/// Parses `1,3,5`, `2-4`, mixtures like `1,3-5`, or `empty`; labels are
/// 1-based.
pub fn parse_qubit_set(text: &str, n: usize) -> Result<QubitSet> {
    let text = text.trim();
    if text == "empty" || text.is_empty() {
        return Ok(QubitSet::empty(n));
    }
    let mut labels = Vec::new();
    let mut column = 1;
    for part in text.split(',') {
        let item = part.trim();
        let label = |s: &str, col: usize| -> Result<usize> {
            s.trim()
                .parse::<usize>()
                .map_err(|_| syntax(1, col, format!("invalid qubit index '{s}'")))
        };
        if let Some((lo, hi)) = item.split_once('-') {
            let (lo, hi) = (label(lo, column)?, label(hi, column)?);
            if lo > hi {
                return Err(syntax(1, column, format!("empty range '{item}'")));
            }
            labels.extend(lo..=hi);
        } else {
            labels.push(label(item, column)?);
        }
        column += part.len() + 1;
    }
    QubitSet::from_labels(n, labels)
}

/// Parses a vector either as `2n` integers (whitespace or comma separated)
/// or, for p = 2, as an `n`-letter Pauli string.
pub fn parse_vector(text: &str, prime: Prime, n: usize) -> Result<PauliVector> {
    let text = text.trim();
    let is_letters = !text.is_empty() && text.chars().all(|c| matches!(c, 'I' | 'X' | 'Y' | 'Z'));
    if is_letters {
        if prime.get() != 2 {
            return Err(Error::LetterRequiresP2 { line: 1 });
        }
        return parse_letter_row(1, n, &[(1, text)]);
    }
    let spaced = text.replace(',', " ");
    let tokens = tokenize(&spaced);
    parse_integer_row(1, prime, n, &tokens)
}
