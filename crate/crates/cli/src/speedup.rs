use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpeedupError {
    #[error("parallel fraction must lie in [0, 1], got {0}")]
    Fraction(f64),
    #[error("worker count must be at least 1")]
    NoWorkers,
}

/// Amdahl's bound `S(N) = 1 / ((1 − P) + P/N)` for a task whose fraction
/// `P` parallelizes perfectly over `N` workers. Tends to `1/(1 − P)`.
pub fn amdahl_speedup(parallel_fraction: f64, workers: u64) -> Result<f64, SpeedupError> {
    if !(0.0..=1.0).contains(&parallel_fraction) {
        return Err(SpeedupError::Fraction(parallel_fraction));
    }
    if workers == 0 {
        return Err(SpeedupError::NoWorkers);
    }
    Ok(1.0 / ((1.0 - parallel_fraction) + parallel_fraction / workers as f64))
}
