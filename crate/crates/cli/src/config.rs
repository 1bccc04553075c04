//! Run configuration shared by all subcommands.

use std::path::PathBuf;

/// Level at which the determinant-variety induction is gated behind
/// `--allow-heavy`. Level 4 works in eight characters with classes up to
/// degree 16 and takes serious time and memory; everything below is quick.
pub const HEAVY_LEVEL: usize = 4;

pub struct RunConfig {
    pub workers: usize,
    pub cache_dir: Option<PathBuf>,
    pub json: bool,
    pub allow_heavy: bool,
}

impl RunConfig {
    /// Pin the global thread pool to the requested worker count. Results
    /// are exact, so any worker count produces byte-identical output.
    pub fn install_thread_pool(&self) -> Result<(), String> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))
    }

    pub fn cache(&self) -> Result<chernloc::csm::FkCache, chernloc::CsmError> {
        match &self.cache_dir {
            Some(dir) => chernloc::csm::FkCache::at_dir(dir),
            None => Ok(chernloc::csm::FkCache::memory()),
        }
    }
}
