//! Command inputs: a braid word or a diagram document, inline or from a file.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use rootjones_core::{BraidWord, Closure, MorseLink};

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Braid(BraidWord),
    Diagram(MorseLink),
}

/// Contents of the file at `arg` if there is one, otherwise `arg` itself.
pub fn read_source(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {arg}"));
    }
    Ok(arg.to_string())
}

/// A JSON document (`{"events": [...]}`) is a diagram; anything else is read
/// as signed generator indices. Without `strands`, a braid gets one more
/// strand than its largest generator.
pub fn parse_input(arg: &str, strands: Option<usize>) -> Result<Input> {
    let text = read_source(arg)?;
    let text = text.trim();
    if text.starts_with('{') {
        if strands.is_some() {
            bail!("--strands only applies to braid input");
        }
        return Ok(Input::Diagram(MorseLink::from_json(text)?));
    }
    Ok(Input::Braid(parse_braid(text, strands)?))
}

pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let strands = match strands {
        Some(n) => n,
        None => {
            let top = text
                .split_whitespace()
                .filter_map(|t| t.parse::<i64>().ok())
                .map(|t| t.unsigned_abs() as usize)
                .max();
            match top {
                Some(g) => g + 1,
                None => bail!("empty braid word: pass --strands"),
            }
        }
    };
    Ok(BraidWord::parse(text, strands)?)
}

impl Input {
    /// The diagram itself, or the requested closure of the braid.
    pub fn diagram(&self, closure: Closure) -> Result<MorseLink> {
        match self {
            Input::Braid(b) => Ok(MorseLink::closure(b, closure)?),
            Input::Diagram(d) => Ok(d.clone()),
        }
    }

    pub fn braid(&self) -> Result<&BraidWord> {
        match self {
            Input::Braid(b) => Ok(b),
            Input::Diagram(_) => bail!("this command needs a braid word, not a diagram"),
        }
    }

    pub fn describe(&self, closure: Closure) -> Value {
        match self {
            Input::Braid(b) => json!({
                "braid": b.to_string(),
                "strands": b.strands(),
                "closure": closure,
            }),
            Input::Diagram(d) => json!({ "diagram": d }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strands_default_from_largest_generator() {
        let Input::Braid(b) = parse_input("1 -3 2", None).unwrap() else { panic!() };
        assert_eq!(b.strands(), 4);
        let Input::Braid(b) = parse_input("1", Some(4)).unwrap() else { panic!() };
        assert_eq!(b.strands(), 4);
        assert!(parse_input("", None).is_err());
        assert!(parse_input("1 x", None).is_err());
        assert!(parse_input("3", Some(2)).is_err());
    }

    #[test]
    fn json_is_a_diagram() {
        let text = MorseLink::unknot().to_json();
        assert_eq!(parse_input(&text, None).unwrap(), Input::Diagram(MorseLink::unknot()));
        assert!(parse_input(&text, Some(2)).is_err());
        assert!(parse_input(r#"{"events":[{"type":"cup","pos":0}]}"#, None).is_err());
    }
}
