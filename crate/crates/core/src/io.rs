//! The structure-table file format.
//!
//! ```text
//! n
//! m
//!
//! α(1) α(2) ... α(n)
//! β(1) β(2) ... β(n)
//! ι(1) ι(2) ... ι(n)
//!
//! μ(1,1) ... μ(1,n)
//! ...
//! μ(n,1) ... μ(n,n)
//! ```
//!
//! The writer puts a single space after every value and ends every line
//! with `\n`. The reader is strict about the first two lines (one integer
//! each) and reads everything after them as whitespace-separated tokens.

use std::io::{self, Write};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, ParseError, Result};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Splits off the next `\n`-terminated line (without any trailing `\r`).
fn header_line<'a>(rest: &mut &'a str) -> Option<&'a str> {
    if rest.is_empty() {
        return None;
    }
    let (line, tail) = match rest.find('\n') {
        Some(p) => (&rest[..p], &rest[p + 1..]),
        None => (*rest, ""),
    };
    *rest = tail;
    Some(line.strip_suffix('\r').unwrap_or(line))
}

fn header_value(line: Option<&str>, number: usize, what: &str) -> Result<usize> {
    let Some(line) = line else {
        return Err(parse_error(number, 1, format!("missing {what}")));
    };
    let token = line.trim();
    let column = line.len() - line.trim_start().len() + 1;
    match token.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        Ok(_) => Err(parse_error(
            number,
            column,
            format!("{what} must be positive"),
        )),
        Err(_) => Err(parse_error(
            number,
            column,
            format!("expected {what} as the only value on the line, found {token:?}"),
        )),
    }
}

/// Whitespace-separated tokens with their 1-based line and column.
fn tokens(body: &str, first_line: usize) -> impl Iterator<Item = (usize, usize, &str)> {
    body.split('\n')
        .enumerate()
        .flat_map(move |(offset, line)| {
            let base = line.as_ptr() as usize;
            line.split_ascii_whitespace().map(move |tok| {
                let column = tok.as_ptr() as usize - base + 1;
                (first_line + offset, column, tok)
            })
        })
}

/// Reads a structure file. Only the layout and value ranges are checked:
/// the result may be any algebra, well-formed or not.
pub fn parse_structure_file(input: &str) -> Result<FiniteAlgebra> {
    let mut rest = input;
    let n = header_value(header_line(&mut rest), 1, "n")?;
    let m = header_value(header_line(&mut rest), 2, "m")?;
    if m > n {
        return Err(parse_error(2, 1, format!("m = {m} exceeds n = {n}")));
    }
    if n > crate::algebra::MAX_ORDER {
        return Err(parse_error(
            1,
            1,
            format!("n = {n} exceeds {}", crate::algebra::MAX_ORDER),
        ));
    }

    let expected = 3 * n + n * n;
    let mut values = Vec::with_capacity(expected);
    let mut last = (2, 1);
    for (line, column, tok) in tokens(rest, 3) {
        last = (line, column);
        if values.len() == expected {
            return Err(parse_error(line, column, "unexpected trailing value"));
        }
        let value: usize = tok.parse().map_err(|_| {
            parse_error(line, column, format!("expected an integer, found {tok:?}"))
        })?;
        if value > n {
            return Err(parse_error(
                line,
                column,
                format!("value {value} is outside 0..={n}"),
            ));
        }
        values.push(value);
    }
    if values.len() < expected {
        return Err(parse_error(
            last.0,
            last.1,
            format!(
                "expected {expected} values after the header, found {}",
                values.len()
            ),
        ));
    }
    let (u_left, rest) = values.split_at(n);
    let (u_right, rest) = rest.split_at(n);
    let (inv, table) = rest.split_at(n);
    FiniteAlgebra::from_flat(n, m, u_left, u_right, inv, table)
}

/// Writes `a` in the structure-file layout.
pub fn write_structure_file<W: Write>(a: &FiniteAlgebra, mut out: W) -> io::Result<()> {
    let row = |out: &mut W, values: &mut dyn Iterator<Item = usize>| -> io::Result<()> {
        for v in values {
            write!(out, "{v} ")?;
        }
        writeln!(out)
    };
    writeln!(out, "{}", a.n())?;
    writeln!(out, "{}", a.m())?;
    writeln!(out)?;
    row(&mut out, &mut a.elements().map(|i| a.u_left(i)))?;
    row(&mut out, &mut a.elements().map(|i| a.u_right(i)))?;
    row(&mut out, &mut a.elements().map(|i| a.inv(i)))?;
    writeln!(out)?;
    for i in a.elements() {
        row(&mut out, &mut a.elements().map(|j| a.entry(i, j)))?;
    }
    Ok(())
}

/// [`write_structure_file`] into a `String`.
pub fn to_structure_string(a: &FiniteAlgebra) -> String {
    let mut buf = Vec::new();
    write_structure_file(a, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("output is ASCII")
}
