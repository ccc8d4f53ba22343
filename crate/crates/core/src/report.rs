//! Check reports shared by all verification routines.

/// One failed comparison: where it happened and the two scalar values, already
/// rendered as canonical strings so reports are diffable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification sweep. `checked` counts the individual
/// comparisons performed; failures are kept sorted by location.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, location: String, expected: String, actual: String) {
        self.failures.push(CheckFailure { location, expected, actual });
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Sort failures by location for deterministic output.
    pub fn finish(mut self) -> Self {
        self.failures.sort_by(|a, b| a.location.cmp(&b.location));
        self
    }
}
