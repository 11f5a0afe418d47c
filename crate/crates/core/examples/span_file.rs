//! Round-trip a span through its JSON file format and amalgamate it.
//!
//! `cargo run --example span_file -- path/to/span.json` (uses a built-in
//! span when no path is given)

use amalgam_bases::{pushout, Span, DEFAULT_BOUND};

const BUILTIN: &str = r#"{
  "source": {"group": "Z/2 x Z/4", "g": [1, 2]},
  "left":   {"codomain": "Z/8", "k": [4], "images": [[0], [2]]},
  "right":  {"codomain": "Z/2 x Z/2", "l": [1, 0], "images": [[1, 0], [0, 1]]}
}"#;

fn main() -> amalgam_bases::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => BUILTIN.to_string(),
    };
    let span = Span::from_json(&text)?;
    let again = Span::from_json(&span.to_json())?;
    assert_eq!(span, again);
    println!("{}", span.to_json());
    println!("{}", pushout(&span, DEFAULT_BOUND)?.to_json());
    Ok(())
}
