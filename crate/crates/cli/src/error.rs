use std::fmt;

use autk2::Error;

/// Process exit codes.
pub mod code {
    pub const OK: u8 = 0;
    pub const LAB_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const NOT_AN_AUTOMORPHISM: u8 = 4;
    pub const DOMAIN: u8 = 5;
    pub const VERIFY: u8 = 6;
}

#[derive(Debug)]
pub enum CliError {
    /// A library error, with the text being parsed when it is a parse error.
    Lib {
        err: Error,
        source: Option<String>,
    },
    Verify(String),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Lib {
                err: Error::Parse { .. },
                ..
            } => code::PARSE,
            CliError::Lib {
                err: Error::NotAnAutomorphism(_),
                ..
            } => code::NOT_AN_AUTOMORPHISM,
            CliError::Lib { .. } | CliError::Io(_) => code::DOMAIN,
            CliError::Verify(_) => code::VERIFY,
            CliError::Usage(_) => code::USAGE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lib {
                err: Error::Parse { .. },
                ..
            } => "parse",
            CliError::Lib {
                err: Error::NotAnAutomorphism(_),
                ..
            } => "not-an-automorphism",
            CliError::Lib { .. } => "domain",
            CliError::Io(_) => "io",
            CliError::Verify(_) => "verify",
            CliError::Usage(_) => "usage",
        }
    }

    /// Attach the parsed text so the message can point into it.
    pub fn in_source(err: Error, source: &str) -> Self {
        CliError::Lib {
            err,
            source: Some(source.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Lib { err, source: None }
    }
}

/// The line holding byte `pos` of `src`, its 1-based number, and the column
/// of `pos` within it in characters.
fn locate(src: &str, pos: usize) -> (usize, &str, usize) {
    let pos = pos.min(src.len());
    let start = src[..pos].rfind('\n').map_or(0, |i| i + 1);
    let end = src[pos..].find('\n').map_or(src.len(), |i| pos + i);
    let line_no = src[..start].matches('\n').count() + 1;
    let col = src[start..pos].chars().count();
    (line_no, &src[start..end], col)
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib { err, source } => {
                write!(f, "{err}")?;
                if let (Error::Parse { pos, .. }, Some(src)) = (err, source) {
                    let (line_no, line, col) = locate(src, *pos);
                    write!(
                        f,
                        "\n  line {line_no}: {line}\n  {}^",
                        " ".repeat(col + format!("line {line_no}: ").len())
                    )?;
                }
                Ok(())
            }
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caret_points_at_the_offset() {
        let e = CliError::in_source(
            Error::Parse {
                pos: 5,
                msg: "bad".into(),
            },
            "x, y ) 1",
        );
        let text = e.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "  line 1: x, y ) 1");
        assert_eq!(lines[2].find('^'), lines[1].find(')'));
        assert_eq!(e.code(), code::PARSE);
    }

    #[test]
    fn second_line() {
        assert_eq!(locate("ab\ncd", 4), (2, "cd", 1));
        assert_eq!(locate("ab", 9), (1, "ab", 2));
    }
}
