//! Construction logs: every generator records a line-oriented, replayable
//! log. Parsing the text back and replaying it reproduces the final
//! chirotope byte for byte.

use neighborly::constructions::{gale_sewn_pipeline, ConstructionLog};

fn main() -> neighborly::Result<()> {
    let result = gale_sewn_pipeline(6, 2, &[])?;
    let text = result.log.to_text();
    println!("construction log:\n{text}");

    let parsed = ConstructionLog::from_text(&text)?;
    assert_eq!(parsed, result.log);

    let replayed = parsed.replay_chirotope()?;
    let original = result.chirotope.to_text();
    assert_eq!(replayed.to_text(), original);
    println!("replayed chirotope is byte-identical:");
    print!("{original}");
    Ok(())
}
