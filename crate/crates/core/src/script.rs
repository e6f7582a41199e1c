//! The shared move-script grammar.
//!
//! One move per line:
//!
//! ```text
//! twist <label> <+|->
//! flip <label>              # graph model, loop curve (identity move)
//! flip <label> <A|B>        # graph model, re-pairing choice
//! flip <label> <+|-> <+|->  # homology model, sign choice
//! s_move <label>
//! switch <k>
//! rotate
//! reflect
//! ```
//!
//! Blank lines and `#` comments are skipped. Parse errors report the line.

use crate::graph::FlipChoice;
use crate::{Error, Result, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipArgs {
    /// No argument: identity flip of a loop curve (graph model).
    None,
    /// Re-pairing choice (graph model).
    Choice(FlipChoice),
    /// Sign pair (homology model).
    Signs(Sign, Sign),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Twist { label: u32, dir: Sign },
    Flip { label: u32, args: FlipArgs },
    SMove { label: u32 },
    Switch { k: u8 },
    Rotate,
    Reflect,
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Move::Twist { label, dir } => write!(f, "twist {label} {dir}"),
            Move::Flip {
                label,
                args: FlipArgs::None,
            } => write!(f, "flip {label}"),
            Move::Flip {
                label,
                args: FlipArgs::Choice(c),
            } => write!(f, "flip {label} {c}"),
            Move::Flip {
                label,
                args: FlipArgs::Signs(s1, s2),
            } => {
                write!(f, "flip {label} {s1} {s2}")
            }
            Move::SMove { label } => write!(f, "s_move {label}"),
            Move::Switch { k } => write!(f, "switch {k}"),
            Move::Rotate => write!(f, "rotate"),
            Move::Reflect => write!(f, "reflect"),
        }
    }
}

/// A parsed script: the moves with their source line numbers (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveScript {
    pub moves: Vec<(usize, Move)>,
}

impl MoveScript {
    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = match raw.split_once('#') {
                Some((head, _)) => head,
                None => raw,
            };
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            moves.push((line, parse_move(&tokens, line)?));
        }
        Ok(MoveScript { moves })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (_, mv) in &self.moves {
            out.push_str(&mv.to_string());
            out.push('\n');
        }
        out
    }
}

fn parse_label(tok: &str, line: usize) -> Result<u32> {
    tok.parse::<u32>().map_err(|_| Error::Parse {
        line,
        msg: format!("bad label {tok:?}"),
    })
}

fn parse_sign(tok: &str, line: usize) -> Result<Sign> {
    tok.parse::<Sign>().map_err(|()| Error::Parse {
        line,
        msg: format!("expected + or -, got {tok:?}"),
    })
}

fn parse_move(tokens: &[&str], line: usize) -> Result<Move> {
    let arity = |want: usize| -> Result<()> {
        if tokens.len() - 1 == want {
            Ok(())
        } else {
            Err(Error::Parse {
                line,
                msg: format!(
                    "{} takes {} argument(s), got {}",
                    tokens[0],
                    want,
                    tokens.len() - 1
                ),
            })
        }
    };
    match tokens[0] {
        "twist" => {
            arity(2)?;
            Ok(Move::Twist {
                label: parse_label(tokens[1], line)?,
                dir: parse_sign(tokens[2], line)?,
            })
        }
        "flip" => {
            let label = parse_label(
                tokens.get(1).ok_or_else(|| Error::Parse {
                    line,
                    msg: "flip needs a label".into(),
                })?,
                line,
            )?;
            let args = match tokens.len() {
                2 => FlipArgs::None,
                3 => match tokens[2] {
                    "A" => FlipArgs::Choice(FlipChoice::A),
                    "B" => FlipArgs::Choice(FlipChoice::B),
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected A or B, got {other:?}"),
                        })
                    }
                },
                4 => FlipArgs::Signs(parse_sign(tokens[2], line)?, parse_sign(tokens[3], line)?),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "flip takes at most 3 arguments".into(),
                    })
                }
            };
            Ok(Move::Flip { label, args })
        }
        "s_move" => {
            arity(1)?;
            Ok(Move::SMove {
                label: parse_label(tokens[1], line)?,
            })
        }
        "switch" => {
            arity(1)?;
            let k = tokens[1].parse::<u8>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad switch index {:?}", tokens[1]),
            })?;
            Ok(Move::Switch { k })
        }
        "rotate" => {
            arity(0)?;
            Ok(Move::Rotate)
        }
        "reflect" => {
            arity(0)?;
            Ok(Move::Reflect)
        }
        op => Err(Error::Parse {
            line,
            msg: format!("unknown opcode {op:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "\
# a comment
twist 1 +

flip 3 + -
flip 2 A
flip 7
s_move 4
switch 2
rotate
reflect
";
        let script = MoveScript::parse(text).unwrap();
        assert_eq!(script.moves.len(), 8);
        assert_eq!(
            script.moves[0],
            (
                2,
                Move::Twist {
                    label: 1,
                    dir: Sign::Plus
                }
            )
        );
        assert_eq!(
            script.moves[1].1,
            Move::Flip {
                label: 3,
                args: FlipArgs::Signs(Sign::Plus, Sign::Minus)
            }
        );
        let reparsed = MoveScript::parse(&script.to_text()).unwrap();
        let moves: Vec<Move> = reparsed.moves.iter().map(|(_, m)| *m).collect();
        let orig: Vec<Move> = script.moves.iter().map(|(_, m)| *m).collect();
        assert_eq!(moves, orig);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = MoveScript::parse("twist 1 +\nwobble 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "unknown opcode \"wobble\"".into()
            }
        );
        let err = MoveScript::parse("twist x +").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = MoveScript::parse("flip 1 C").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
