//! Persisting tables to the text cache and seeding a fresh engine from it.
//!
//! cargo run --example table_cache

use congruential_euler::sequence::{cache_file_params, cache_load, cache_path, cache_store};
use congruential_euler::{Engine, SeqParams};

fn main() -> congruential_euler::Result<()> {
    let dir = std::env::temp_dir().join(format!("ceuler-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;

    let params = SeqParams::of(5, 3);
    let table = Engine::new().compute_table(params, 25);
    let path = cache_path(&dir, params);
    cache_store(&table, &path)?;
    println!("wrote {}", path.display());

    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    println!("file name decodes to {:?}", cache_file_params(name));

    // a prefix is enough for a short request
    let prefix = cache_load(params, &path, Some(5))?;
    println!("prefix has {} entries", prefix.values.len());

    // seeding re-checks the last row against the recurrence, then extends
    let engine = Engine::new();
    engine.seed(&cache_load(params, &path, None)?)?;
    println!("seeded with {} entries", engine.known_len(params));
    let longer = engine.compute_table(params, 30);
    assert_eq!(longer.values[..=25], table.values[..]);
    println!("extended to {} entries", longer.values.len());

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
