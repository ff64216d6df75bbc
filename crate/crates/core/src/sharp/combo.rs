//! `[int*]rowname` terms joined by `+`/`-`.

use super::SharpError;

fn syntax(position: usize, message: impl Into<String>) -> SharpError {
    SharpError::Syntax { position, message: message.into() }
}

pub(super) fn parse_terms(text: &str) -> Result<Vec<(String, i64)>, SharpError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut terms = Vec::new();
    loop {
        skip_ws(&mut pos);
        let mut sign = 1i64;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if !terms.is_empty() {
            return Err(syntax(pos, "expected '+' or '-'"));
        }
        skip_ws(&mut pos);

        let mut coeff = 1i64;
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            coeff = text[start..pos].parse().map_err(|_| syntax(start, "coefficient too large"))?;
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'*' {
                return Err(syntax(pos, "expected '*' after coefficient"));
            }
            pos += 1;
            skip_ws(&mut pos);
        }

        let start = pos;
        if pos < bytes.len() && (bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
        } else {
            return Err(syntax(pos, "expected a row name"));
        }
        terms.push((text[start..pos].to_string(), sign * coeff));

        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Ok(terms);
        }
    }
}
