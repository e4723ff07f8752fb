use std::path::PathBuf;
use std::time::Duration;

use super::{BenchError, ProblemKind};

/// Flat `key = value` experiment description. `#` starts a comment.
///
/// ```text
/// problem = qcsp
/// instance = data/a.qcsp
/// instance = data/b.qcsp
/// beams = 1, 10, 100
/// times = 10, 100
/// runs = 25
/// seed_base = 0
/// # max_iterations = 500
/// # jobs = 4
/// ```
///
/// Relative instance paths are resolved against the config file's directory
/// by the caller.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub problem: ProblemKind,
    pub instances: Vec<PathBuf>,
    pub beams: Vec<usize>,
    pub times: Vec<Duration>,
    pub runs: u64,
    pub seed_base: u64,
    pub max_iterations: Option<u64>,
    pub jobs: usize,
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        let mut problem = None;
        let mut instances = Vec::new();
        let mut beams = vec![1, 10, 100];
        let mut times = vec![Duration::from_secs(10), Duration::from_secs(100)];
        let mut runs = 25;
        let mut seed_base = 0;
        let mut max_iterations = None;
        let mut jobs = 1;

        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| BenchError::Config {
                line,
                message: format!("expected key = value, got {content:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| BenchError::Config {
                line,
                message: format!("invalid {what}: {value:?}"),
            };
            match key {
                "problem" => problem = Some(value.parse::<ProblemKind>().map_err(|_| bad("problem"))?),
                "instance" => instances.push(PathBuf::from(value)),
                "beams" => {
                    beams = parse_list(value)
                        .filter(|v| v.iter().all(|&w| w > 0))
                        .ok_or_else(|| bad("beam list"))?
                }
                "times" => {
                    times = value
                        .split(',')
                        .map(|t| t.trim().parse::<f64>().ok().filter(|s| *s > 0.0 && s.is_finite()))
                        .collect::<Option<Vec<_>>>()
                        .filter(|v| !v.is_empty())
                        .ok_or_else(|| bad("time list"))?
                        .into_iter()
                        .map(Duration::from_secs_f64)
                        .collect()
                }
                "runs" => runs = value.parse().ok().filter(|&r| r > 0).ok_or_else(|| bad("run count"))?,
                "seed_base" => seed_base = value.parse().map_err(|_| bad("seed base"))?,
                "max_iterations" => {
                    max_iterations = Some(
                        value
                            .parse()
                            .ok()
                            .filter(|&k| k > 0)
                            .ok_or_else(|| bad("iteration count"))?,
                    )
                }
                "jobs" => jobs = value.parse().ok().filter(|&j| j > 0).ok_or_else(|| bad("job count"))?,
                other => {
                    return Err(BenchError::Config {
                        line,
                        message: format!("unknown key {other:?}"),
                    })
                }
            }
        }

        let problem = problem.ok_or(BenchError::Config {
            line: 0,
            message: "missing `problem`".into(),
        })?;
        if instances.is_empty() {
            return Err(BenchError::Config {
                line: 0,
                message: "no `instance` entries".into(),
            });
        }
        Ok(BenchConfig {
            problem,
            instances,
            beams,
            times,
            runs,
            seed_base,
            max_iterations,
            jobs,
        })
    }
}

fn parse_list(value: &str) -> Option<Vec<usize>> {
    let list = value
        .split(',')
        .map(|t| t.trim().parse().ok())
        .collect::<Option<Vec<usize>>>()?;
    (!list.is_empty()).then_some(list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let cfg = BenchConfig::parse(
            "problem = knapsack\ninstance = a.kp # first\ninstance=b.kp\nbeams = 1,10\ntimes = 0.5, 2\nruns = 3\nseed_base = 7\nmax_iterations = 40\njobs = 2\n",
        )
        .unwrap();
        assert_eq!(cfg.problem, ProblemKind::Knapsack);
        assert_eq!(cfg.instances.len(), 2);
        assert_eq!(cfg.beams, vec![1, 10]);
        assert_eq!(cfg.times, vec![Duration::from_millis(500), Duration::from_secs(2)]);
        assert_eq!(
            (cfg.runs, cfg.seed_base, cfg.max_iterations, cfg.jobs),
            (3, 7, Some(40), 2)
        );
    }

    #[test]
    fn defaults_follow_the_standard_grid() {
        let cfg = BenchConfig::parse("problem = qcsp\ninstance = x\n").unwrap();
        assert_eq!(cfg.beams, vec![1, 10, 100]);
        assert_eq!(cfg.times.len(), 2);
        assert_eq!(cfg.runs, 25);
    }

    #[test]
    fn reports_bad_lines() {
        assert!(matches!(
            BenchConfig::parse("problem = qcsp\ninstance = x\nbeams = 0\n"),
            Err(BenchError::Config { line: 3, .. })
        ));
        assert!(matches!(
            BenchConfig::parse("problem = qcsp\nwhat\n"),
            Err(BenchError::Config { line: 2, .. })
        ));
        assert!(BenchConfig::parse("instance = x\n").is_err());
        assert!(BenchConfig::parse("problem = qcsp\n").is_err());
    }
}
