use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Mutex;

use crate::conjecture::Format;
use crate::sequence::{cache_load, cache_path, cache_store, Engine, SeqParams};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cache_dir: PathBuf,
    pub output_format: Format,
    pub parallelism: usize,
    pub default_n_max: usize,
}

/// An engine backed by the on-disk cache. Damaged cache files are reported
/// on stderr and recomputed rather than trusted.
pub struct Session {
    pub config: RunConfig,
    pub engine: Engine,
    cache_ok: bool,
    cached_len: Mutex<HashMap<SeqParams, usize>>,
}

impl Session {
    pub fn open(config: RunConfig) -> Self {
        let cache_ok = match std::fs::create_dir_all(&config.cache_dir) {
            Ok(()) => true,
            Err(e) => {
                eprintln!(
                    "warning: cache disabled, cannot create {}: {e}",
                    config.cache_dir.display()
                );
                false
            }
        };
        Self {
            config,
            engine: Engine::new(),
            cache_ok,
            cached_len: Mutex::new(HashMap::new()),
        }
    }

    pub fn format(&self) -> Format {
        self.config.output_format
    }

    /// Seed the engine from the cache for each of `params` not yet loaded.
    pub fn load(&self, params: &[SeqParams]) {
        if !self.cache_ok {
            return;
        }
        let mut cached = self.cached_len.lock().expect("session lock poisoned");
        for &p in params {
            if cached.contains_key(&p) {
                continue;
            }
            let path = cache_path(&self.config.cache_dir, p);
            let len = if path.exists() {
                match cache_load(p, &path, None).and_then(|t| self.engine.seed(&t).map(|()| t.values.len())) {
                    Ok(len) => len,
                    Err(e) => {
                        eprintln!("warning: ignoring cache file {}: {e}", path.display());
                        0
                    }
                }
            } else {
                0
            };
            cached.insert(p, len);
        }
    }

    /// Write back every table that grew past its cached length.
    pub fn persist(&self) {
        if !self.cache_ok {
            return;
        }
        let cached = self.cached_len.lock().expect("session lock poisoned");
        for p in self.engine.memoized() {
            let known = self.engine.known_len(p);
            if known == 0 || known <= cached.get(&p).copied().unwrap_or(0) {
                continue;
            }
            let path = cache_path(&self.config.cache_dir, p);
            // Never shrink a longer file written by another run.
            if path.exists() && cached.get(&p).is_none() {
                if let Ok(t) = cache_load(p, &path, None) {
                    if t.values.len() >= known {
                        continue;
                    }
                }
            }
            let table = self.engine.compute_table(p, known - 1);
            if let Err(e) = cache_store(&table, &path) {
                eprintln!("warning: could not write {}: {e}", path.display());
            }
        }
    }
}
