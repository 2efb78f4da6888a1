//! A small resumable survey into a temporary cache.

use poslab::survey::{run_survey, summarize, summary_table};

fn main() -> poslab::Result<()> {
    let path = std::env::temp_dir().join("poslab-example-survey.jsonl");
    let out = run_survey(5, &path)?;
    println!("{} computed, {} reused from {}", out.computed, out.reused, path.display());
    print!("{}", summary_table(&summarize(&out.records)?));
    Ok(())
}
