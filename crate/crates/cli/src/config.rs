use std::path::PathBuf;

use anyhow::Context;

/// Environment variable that overrides `--workers`.
pub const WORKERS_ENV: &str = "SCAVENGER_WORKERS";

/// Settings shared by every subcommand. Search bounds live on the
/// subcommands themselves, where clap enforces that they are positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    /// Worker threads; `None` lets rayon pick one per core.
    pub workers: Option<usize>,
    /// Where hunts write their certificate; stdout when absent.
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Applies `SCAVENGER_WORKERS` on top of the command line.
    pub fn with_env(mut self, env: Option<String>) -> anyhow::Result<RunConfig> {
        if let Some(v) = env.filter(|v| !v.trim().is_empty()) {
            let n: usize = v
                .trim()
                .parse()
                .with_context(|| format!("{WORKERS_ENV}={v:?} is not a count"))?;
            self.workers = Some(n);
        }
        if self.workers == Some(0) {
            anyhow::bail!("worker count must be positive");
        }
        Ok(self)
    }

    pub fn pool(&self) -> anyhow::Result<rayon::ThreadPool> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = self.workers {
            builder = builder.num_threads(n);
        }
        builder.build().context("cannot start the worker pool")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_overrides_flag() {
        let base = RunConfig {
            workers: Some(2),
            output: None,
        };
        assert_eq!(
            base.clone().with_env(Some("3".into())).unwrap().workers,
            Some(3)
        );
        assert_eq!(base.clone().with_env(None).unwrap().workers, Some(2));
        assert!(base.clone().with_env(Some("many".into())).is_err());
        assert!(base.with_env(Some("0".into())).is_err());
    }
}
