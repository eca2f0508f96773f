//! Parsing and canonical serialization of the `.qnd` and `.qhom` formats.

use qnd_core::{Hom, Quandle};

use crate::{CliError, Result};

/// Raw content of a hom file; resolving it into a [`Hom`] needs the actual
/// quandles for both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFile {
    pub dom_order: usize,
    pub cod_order: usize,
    pub map: Vec<usize>,
}

/// Strips comments and blank lines, keeping 1-based source line numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let body = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            (i + 1, body.trim())
        })
        .filter(|(_, body)| !body.is_empty())
        .collect()
}

fn require_trailing_newline(text: &str) -> Result<()> {
    if !text.ends_with('\n') {
        return Err(CliError::Parse {
            line: text.lines().count(),
            reason: "missing trailing newline".into(),
        });
    }
    Ok(())
}

fn parse_number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| CliError::Parse {
        line,
        reason: format!("expected a non-negative integer, got `{token}`"),
    })
}

fn parse_row(line: usize, body: &str) -> Result<Vec<usize>> {
    body.split_whitespace()
        .map(|tok| parse_number(line, tok))
        .collect()
}

pub fn parse_quandle(text: &str) -> Result<Quandle> {
    require_trailing_newline(text)?;
    let lines = content_lines(text);
    let Some(&(first_line, order_body)) = lines.first() else {
        return Err(CliError::Parse {
            line: 1,
            reason: "empty file".into(),
        });
    };
    let n = parse_number(first_line, order_body)?;
    if n == 0 {
        return Err(CliError::Parse {
            line: first_line,
            reason: "order must be at least 1".into(),
        });
    }
    let body = &lines[1..];
    if body.len() != n {
        return Err(CliError::Parse {
            line: lines.last().map(|&(l, _)| l).unwrap_or(first_line),
            reason: format!("expected {} table rows, found {}", n, body.len()),
        });
    }
    let mut table = Vec::with_capacity(n);
    for &(line, row_body) in body {
        let row = parse_row(line, row_body)?;
        if row.len() != n {
            return Err(CliError::Parse {
                line,
                reason: format!("expected {} entries, found {}", n, row.len()),
            });
        }
        table.push(row);
    }
    Ok(Quandle::from_table(table)?)
}

pub fn serialize_quandle(q: &Quandle) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.table() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_hom_file(text: &str) -> Result<HomFile> {
    require_trailing_newline(text)?;
    let lines = content_lines(text);
    if lines.len() != 2 {
        return Err(CliError::Parse {
            line: lines.last().map(|&(l, _)| l).unwrap_or(1),
            reason: format!("expected a header and an image line, found {} lines", lines.len()),
        });
    }
    let header = parse_row(lines[0].0, lines[0].1)?;
    let [dom_order, cod_order] = header[..] else {
        return Err(CliError::Parse {
            line: lines[0].0,
            reason: "header must be `n_dom n_cod`".into(),
        });
    };
    let map = parse_row(lines[1].0, lines[1].1)?;
    if map.len() != dom_order {
        return Err(CliError::Parse {
            line: lines[1].0,
            reason: format!("expected {} images, found {}", dom_order, map.len()),
        });
    }
    Ok(HomFile {
        dom_order,
        cod_order,
        map,
    })
}

pub fn serialize_hom(h: &Hom) -> String {
    let images: Vec<String> = h.map().iter().map(|v| v.to_string()).collect();
    format!(
        "{} {}\n{}\n",
        h.dom().order(),
        h.cod().order(),
        images.join(" ")
    )
}

/// Resolves a hom file against its two quandles, validating the map.
pub fn resolve_hom(file: &HomFile, dom: &Quandle, cod: &Quandle) -> Result<Hom> {
    if file.dom_order != dom.order() || file.cod_order != cod.order() {
        return Err(CliError::Usage(format!(
            "hom file is {}→{} but the given quandles have orders {}→{}",
            file.dom_order,
            file.cod_order,
            dom.order(),
            cod.order()
        )));
    }
    Ok(Hom::new(dom.clone(), cod.clone(), file.map.clone())?)
}
