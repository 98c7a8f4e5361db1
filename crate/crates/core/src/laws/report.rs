use std::fmt::Write as _;

use serde::Serialize;

/// A failing case, with everything needed to replay it.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Failure {
    pub case: usize,
    pub seed: u64,
    pub message: String,
    pub inputs: Vec<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LawOutcome {
    pub name: String,
    /// The law as a formula.
    pub anchor: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: f64,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LawReport {
    pub seed: u64,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn total_failures(&self) -> usize {
        self.laws.iter().map(|l| l.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.name == name)
    }

    /// Pretty JSON. Timings are zeroed unless requested, so equal runs
    /// serialize identically.
    pub fn to_json(&self, include_timing: bool) -> String {
        let mut copy = self.clone();
        if !include_timing {
            for law in &mut copy.laws {
                law.wall_time_ms = 0.0;
            }
        }
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    /// A fixed-width table with one row per law, then each failure.
    pub fn table(&self) -> String {
        let width = self
            .laws
            .iter()
            .map(|l| l.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>6}  {:>8}  {:>10}  status",
            "law", "cases", "failures", "time (ms)"
        );
        for law in &self.laws {
            let status = if law.passed() { "ok" } else { "FAILED" };
            let _ = writeln!(
                out,
                "{:<width$}  {:>6}  {:>8}  {:>10.1}  {status}",
                law.name,
                law.cases,
                law.failures.len(),
                law.wall_time_ms
            );
        }
        for law in self.laws.iter().filter(|l| !l.passed()) {
            for f in law.failures.iter().take(3) {
                let _ = writeln!(
                    out,
                    "\n{} case {} (seed {:#x}): {}",
                    law.name, f.case, f.seed, f.message
                );
                for input in &f.inputs {
                    let _ = writeln!(out, "    {input}");
                }
            }
            if law.failures.len() > 3 {
                let _ = writeln!(out, "    ... {} more", law.failures.len() - 3);
            }
        }
        let _ = writeln!(
            out,
            "\nseed {:#x}: {} laws, {} failing cases",
            self.seed,
            self.laws.len(),
            self.total_failures()
        );
        out
    }
}
