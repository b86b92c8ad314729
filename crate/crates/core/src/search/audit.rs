//! Empirical check of arrowing by sampling colorings.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::constructions::{verify_witness, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TwoColoring};

/// Exhaustive audits enumerate `2^(N(N-1)/2)` colorings; this caps the exponent.
pub const MAX_EXHAUSTIVE_EDGES: usize = 28;

/// How many good colorings an audit keeps.
const KEPT_GOOD: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditMode {
    Random {
        samples: u64,
    },
    /// Every coloring of `K_N` once.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub n: usize,
    pub cycle: usize,
    pub fan: usize,
    pub samples: u64,
    pub red_cycle_hits: u64,
    pub blue_fan_hits: u64,
    /// The first few colorings containing neither target.
    pub good_colorings: Vec<TwoColoring>,
    pub good_count: u64,
    /// The certificate of the first sampled coloring that contained a target.
    pub example: Option<Certificate>,
}

impl AuditReport {
    /// Fraction of samples containing a red cycle or a blue fan.
    pub fn fraction(&self) -> f64 {
        if self.samples == 0 {
            return 1.0;
        }
        (self.red_cycle_hits + self.blue_fan_hits) as f64 / self.samples as f64
    }
}

/// Samples colorings of `K_N` (each pair red with probability 1/2) or
/// enumerates them all, and tallies which ones contain a target.
pub fn random_coloring_audit<R: Rng + ?Sized>(
    n: usize,
    cycle: usize,
    fan: usize,
    mode: AuditMode,
    rng: &mut R,
) -> Result<AuditReport> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut report = AuditReport {
        n,
        cycle,
        fan,
        samples: 0,
        red_cycle_hits: 0,
        blue_fan_hits: 0,
        good_colorings: Vec::new(),
        good_count: 0,
        example: None,
    };
    let tally = |c: TwoColoring, report: &mut AuditReport| -> Result<()> {
        let cert = verify_witness(&c, cycle, fan)?;
        report.samples += 1;
        match cert.verdict {
            Verdict::Avoids => {
                report.good_count += 1;
                if report.good_colorings.len() < KEPT_GOOD {
                    report.good_colorings.push(c);
                }
            }
            Verdict::ContainsRedCycle => report.red_cycle_hits += 1,
            Verdict::ContainsBlueFan => report.blue_fan_hits += 1,
        }
        if cert.verdict != Verdict::Avoids && report.example.is_none() {
            report.example = Some(cert);
        }
        Ok(())
    };
    match mode {
        AuditMode::Random { samples } => {
            for _ in 0..samples {
                let mut red = SimpleGraph::new(n);
                for &(u, v) in &pairs {
                    if rng.gen::<bool>() {
                        red.add_edge(u, v);
                    }
                }
                tally(TwoColoring::from_red(red), &mut report)?;
            }
        }
        AuditMode::Exhaustive => {
            if pairs.len() > MAX_EXHAUSTIVE_EDGES {
                return Err(Error::TooLarge { size: pairs.len(), limit: MAX_EXHAUSTIVE_EDGES });
            }
            for mask in 0u64..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                let red = SimpleGraph::from_edges(n, edges).map_err(|e| Error::Inconsistent(format!("{e}")))?;
                tally(TwoColoring::from_red(red), &mut report)?;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn exhaustive_five_finds_pentagons() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let r = random_coloring_audit(5, 3, 1, AuditMode::Exhaustive, &mut rng).unwrap();
        assert_eq!(r.samples, 1024);
        // The 12 labelled pentagons.
        assert_eq!(r.good_count, 12);
        assert!(r.fraction() < 1.0);
    }

    #[test]
    fn six_vertices_always_hit() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = random_coloring_audit(6, 3, 1, AuditMode::Random { samples: 200 }, &mut rng).unwrap();
        assert_eq!(r.fraction(), 1.0);
        assert!(r.example.is_some());
    }
}
