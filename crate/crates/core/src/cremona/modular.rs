//! Analysis of maps with rational coefficients through reductions modulo
//! large random primes. Two primes must agree before a result is reported;
//! primes where the reduction or the analysis misbehaves are discarded.

use super::analysis::{analyze, AnalysisOptions, MapAnalysis, Verdict};
use super::RationalMap;
use crate::error::{AlgebraError, Result};
use crate::polycore::{attempt_rng, PrimeField, Rationals};

/// Range of the random primes.
pub const PRIME_RANGE: (u64, u64) = (1_000_000, 1 << 31);

/// Primes tried before giving up.
pub const MAX_PRIMES: u32 = 6;

/// One analysis modulo a prime.
#[derive(Clone, Debug)]
pub struct PrimeRun {
    pub prime: u64,
    pub map: RationalMap<PrimeField>,
    pub analysis: MapAnalysis<PrimeField>,
}

/// The quantities two primes must agree on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub bidegree: (u32, u32),
    pub c1: (i64, i64),
    pub c2: (i64, i64),
    pub genus: u8,
    pub ruled: bool,
    pub verdict: Verdict,
    pub certificate: i64,
    pub deg1part: i64,
    pub theta: usize,
}

impl Signature {
    pub fn of(a: &MapAnalysis<PrimeField>) -> Signature {
        Signature {
            bidegree: a.bidegree,
            c1: (a.split.c1.degree, a.split.c1.p_a),
            c2: (a.split.c2.degree, a.split.c2.p_a),
            genus: a.genus,
            ruled: a.ruled.ruled,
            verdict: a.birational.verdict,
            certificate: a.certificate.value,
            deg1part: a.base.deg1part,
            theta: a.base.theta.distinct,
        }
    }
}

/// Two agreeing runs, and the primes that were discarded with the reason.
#[derive(Clone, Debug)]
pub struct ModularAnalysis {
    pub runs: Vec<PrimeRun>,
    pub rejected: Vec<(u64, String)>,
}

impl ModularAnalysis {
    pub fn primary(&self) -> &PrimeRun {
        &self.runs[0]
    }

    pub fn primes(&self) -> Vec<u64> {
        self.runs.iter().map(|r| r.prime).collect()
    }
}

/// The `k`-th prime tried for `seed`: the forced ones first, then random draws.
pub fn candidate_prime(seed: u64, forced: &[u64], k: u32) -> u64 {
    if let Some(&p) = forced.get(k as usize) {
        return p;
    }
    let mut rng = attempt_rng(seed, "prime", k);
    PrimeField::random(&mut rng, PRIME_RANGE.0, PRIME_RANGE.1).modulus()
}

/// Analyse one reduction; every failure is a reason to discard the prime.
pub fn run_at_prime(map: &RationalMap<Rationals>, p: u64, seed: u64, opts: &AnalysisOptions) -> Result<PrimeRun> {
    let field = PrimeField::new(p)?;
    let reduced = map
        .reduce_mod(field)
        .ok_or_else(|| AlgebraError::Degenerate(format!("reduction modulo {p} loses the map")))?;
    let analysis = analyze(&reduced, seed, opts)?;
    Ok(PrimeRun { prime: p, map: reduced, analysis })
}

/// Analyse `map` modulo primes until two of them agree. `forced` primes are
/// tried first; inadmissible ones (below 1000 or composite) are discarded
/// like any other bad prime.
pub fn analyze_rational(
    map: &RationalMap<Rationals>,
    seed: u64,
    opts: &AnalysisOptions,
    forced: &[u64],
) -> Result<ModularAnalysis> {
    let mut good: Vec<(Signature, PrimeRun)> = Vec::new();
    let mut rejected = Vec::new();
    for k in 0..MAX_PRIMES + forced.len() as u32 {
        let p = candidate_prime(seed, forced, k);
        if good.iter().any(|(_, r)| r.prime == p) || rejected.iter().any(|(q, _)| *q == p) {
            continue;
        }
        match run_at_prime(map, p, seed, opts) {
            Ok(run) => {
                let sig = Signature::of(&run.analysis);
                if let Some(i) = good.iter().position(|(s, _)| *s == sig) {
                    let (_, first) = good.swap_remove(i);
                    for (_, r) in good {
                        rejected.push((r.prime, "disagrees with two other primes".to_string()));
                    }
                    return Ok(ModularAnalysis { runs: vec![first, run], rejected });
                }
                good.push((sig, run));
            }
            Err(e @ AlgebraError::Budget(_)) => return Err(e),
            Err(e) => rejected.push((p, e.to_string())),
        }
    }
    Err(AlgebraError::Degenerate(format!(
        "no two primes agree after {} tries; rejected: {rejected:?}",
        MAX_PRIMES + forced.len() as u32
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_poly;

    fn involution() -> RationalMap<Rationals> {
        let comps = ["z0*z1^2", "z0^2*z1", "z0^2*z2", "z1^2*z3"];
        RationalMap::new(comps.iter().map(|s| parse_poly(&Rationals, 4, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn two_primes_agree_on_the_involution() {
        let m = analyze_rational(&involution(), 3, &AnalysisOptions::default(), &[]).unwrap();
        assert_eq!(m.runs.len(), 2);
        assert_ne!(m.runs[0].prime, m.runs[1].prime);
        let a = &m.primary().analysis;
        assert_eq!(a.bidegree, (3, 3));
        assert!(a.ruled.ruled);
        assert_eq!(a.genus, 0);
    }

    #[test]
    fn small_prime_is_retried() {
        let m = analyze_rational(&involution(), 3, &AnalysisOptions::default(), &[7]).unwrap();
        assert_eq!(m.rejected.len(), 1);
        assert_eq!(m.rejected[0].0, 7);
        assert!(m.primes().iter().all(|&p| p > PRIME_RANGE.0));
        assert_eq!(m.primary().analysis.bidegree, (3, 3));
    }
}
