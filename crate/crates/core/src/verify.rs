//! Exhaustive invariant suites over all `R ⊆ [n-1]` for small `n`, used by
//! the `verify` subcommand. Each check reports one line.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::BigInt;

use crate::demazure::{
    convexity_witness, demazure_set, is_convex_lattice_set, member_of, principal_ideal, DEFAULT_BUDGET,
};
use crate::enumeration::{
    count_cnr, count_total, gen_avoiding_ordered_partitions, gen_gapless, gen_gapless_keys, gen_r312_avoiding,
    gen_r_permutations, gen_rcd_chains, gen_shape_tuples, total_via_formula, Pattern,
};
use crate::error::{Error, Result};
use crate::rtuples::{gapless_to_perm, rank_tuple, RChain, RSet};
use crate::scanning::{a_set_criterion, residual_maxima, scan};
use crate::shapes::{is_gapless_key, key_of_chain, key_of_perm, row_end_max, tableau_leq, Partition};
use crate::demazure::enumerate_tableaux;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `Ψ_R` and `Π_R` are inverse bijections between avoiding
    /// permutations and gapless tuples.
    RankBijection,
    /// Avoiding permutations correspond to rightmost clump deleting chains.
    ChainBijection,
    /// Keys of avoiding permutations = gapless keys = row end max tableaux
    /// of gapless tuples.
    KeyCoincidence,
    /// All `C_n^R` families have the same size.
    Equinumerosity,
    /// Avoidance counts agree for all six patterns of length three.
    SixPatterns,
    /// `S = max(T, m(U))` cell-wise, and the A-set test matches `S(T) ≤ Y`.
    ScanningIdentities,
    /// Convex ⟺ avoiding ⟺ `D = [Y]`, with witnesses for containing permutations.
    Convexity,
    /// `C_n^Σ` by summation equals the alternating-sum formula.
    Totals,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::RankBijection,
        Check::ChainBijection,
        Check::KeyCoincidence,
        Check::Equinumerosity,
        Check::SixPatterns,
        Check::ScanningIdentities,
        Check::Convexity,
        Check::Totals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::RankBijection => "rank-bijection",
            Check::ChainBijection => "chain-bijection",
            Check::KeyCoincidence => "key-coincidence",
            Check::Equinumerosity => "equinumerosity",
            Check::SixPatterns => "six-patterns",
            Check::ScanningIdentities => "scanning-identities",
            Check::Convexity => "convexity",
            Check::Totals => "totals",
        }
    }

    /// Largest `n` this check runs at.
    pub fn ceiling(self) -> usize {
        match self {
            Check::ScanningIdentities | Check::Convexity => 4,
            Check::SixPatterns => 5,
            Check::Totals => 12,
            _ => 6,
        }
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: Check,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.check, self.detail)
    }
}

/// Failure message for a single counterexample.
type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn rank_bijection(n: usize) -> Outcome {
    let mut seen = 0;
    for rs in RSet::all(n) {
        let avoiding = gen_r312_avoiding(&rs).map_err(lib)?;
        let gapless: BTreeSet<_> = gen_gapless(&rs).map_err(lib)?.into_iter().collect();
        let mut image = BTreeSet::new();
        for p in &avoiding {
            let g = rank_tuple(p).map_err(lib)?;
            ensure(gapless.contains(&g), || format!("Ψ({p}) = {g} is not gapless"))?;
            ensure(gapless_to_perm(&g).map_err(lib)? == *p, || format!("Π(Ψ({p})) ≠ {p}"))?;
            image.insert(g);
        }
        ensure(image == gapless, || format!("Ψ is not onto the gapless tuples for R = {{{rs}}}"))?;
        for g in &gapless {
            let p = gapless_to_perm(g).map_err(lib)?;
            ensure(rank_tuple(&p).map_err(lib)? == *g, || format!("Ψ(Π({g})) ≠ {g}"))?;
        }
        seen += avoiding.len();
    }
    Ok(format!("{seen} avoiding permutations"))
}

fn chain_bijection(n: usize) -> Outcome {
    let mut seen = 0;
    for rs in RSet::all(n) {
        let chains: BTreeSet<RChain> = gen_rcd_chains(&rs).into_iter().collect();
        for p in gen_r_permutations(&rs).map_err(lib)? {
            let c = RChain::from_perm(&p).map_err(lib)?;
            let avoiding = p.is_r312_avoiding().map_err(lib)?;
            ensure(c.is_rcd() == avoiding, || format!("chain of {p} disagrees with avoidance"))?;
            ensure(chains.contains(&c) == avoiding, || format!("generated chains disagree at {p}"))?;
            seen += 1;
        }
    }
    Ok(format!("{seen} R-permutations"))
}

fn key_coincidence(n: usize) -> Outcome {
    let mut sets = 0;
    for rs in RSet::all(n) {
        let shape = Partition::minimal_for(&rs);
        let mut by_perm = BTreeSet::new();
        for p in gen_r_permutations(&rs).map_err(lib)? {
            let y = key_of_perm(&p, &shape).map_err(lib)?;
            let avoiding = p.is_r312_avoiding().map_err(lib)?;
            ensure(is_gapless_key(&y).map_err(lib)? == avoiding, || format!("gapless key test disagrees at {p}"))?;
            if avoiding {
                let m = row_end_max(&shape, &rank_tuple(&p).map_err(lib)?).map_err(lib)?;
                ensure(m == y, || format!("row end max of Ψ({p}) is not its key"))?;
                let via_chain = key_of_chain(&RChain::from_perm(&p).map_err(lib)?, &shape).map_err(lib)?;
                ensure(via_chain == y, || format!("chain key differs at {p}"))?;
                by_perm.insert(y);
            }
        }
        let gapless_keys: BTreeSet<_> = gen_gapless_keys(&shape).map_err(lib)?.into_iter().collect();
        let row_end: BTreeSet<_> = gen_gapless(&rs)
            .map_err(lib)?
            .iter()
            .map(|g| row_end_max(&shape, g))
            .collect::<Result<_>>()
            .map_err(lib)?;
        ensure(by_perm == gapless_keys && gapless_keys == row_end, || {
            format!("tableau sets differ for λ = {shape}")
        })?;
        sets += 1;
    }
    Ok(format!("{sets} shapes"))
}

fn equinumerosity(n: usize) -> Outcome {
    for rs in RSet::all(n) {
        let expected = count_cnr(&rs);
        let counts = [
            ("avoiding", gen_r312_avoiding(&rs).map_err(lib)?.len()),
            ("gapless", gen_gapless(&rs).map_err(lib)?.len()),
            ("chains", gen_rcd_chains(&rs).len()),
            ("shape tuples", gen_shape_tuples(&rs).len()),
            ("gapless keys", gen_gapless_keys(&Partition::minimal_for(&rs)).map_err(lib)?.len()),
            ("ordered partitions", gen_avoiding_ordered_partitions(&rs, "312".parse().unwrap()).map_err(lib)?.len()),
        ];
        for (name, c) in counts {
            ensure(expected == c.into(), || format!("{name}: {c} ≠ C^R = {expected} for R = {{{rs}}}"))?;
        }
    }
    Ok(format!("C_{n}^R for all {} subsets", 1usize << (n - 1)))
}

fn six_patterns(n: usize) -> Outcome {
    for rs in RSet::all(n) {
        let counts: Vec<usize> = Pattern::ALL
            .iter()
            .map(|&s| gen_avoiding_ordered_partitions(&rs, s).map(|v| v.len()))
            .collect::<Result<_>>()
            .map_err(lib)?;
        ensure(counts.windows(2).all(|w| w[0] == w[1]), || format!("counts {counts:?} for R = {{{rs}}}"))?;
    }
    Ok("all six patterns agree".into())
}

fn scanning_identities(n: usize) -> Outcome {
    let mut seen = 0;
    for rs in RSet::all(n) {
        let shape = Partition::minimal_for(&rs);
        let keys: Vec<_> = gen_r_permutations(&rs)
            .map_err(lib)?
            .iter()
            .map(|p| key_of_perm(p, &shape))
            .collect::<Result<_>>()
            .map_err(lib)?;
        for t in enumerate_tableaux(&shape, DEFAULT_BUDGET).map_err(lib)? {
            let s = scan(&t).map_err(lib)?;
            let m = residual_maxima(&t).map_err(lib)?;
            for (l, k) in t.cells() {
                ensure(s.value(l, k) == t.value(l, k).max(m[l - 1][k - 1]), || {
                    format!("S ≠ max(T, m(U)) at ({l},{k}) for\n{t}")
                })?;
            }
            ensure(tableau_leq(&t, &s).map_err(lib)?, || format!("T ≰ S(T) for\n{t}"))?;
            ensure(scan(&s).map_err(lib)? == s, || format!("S(S(T)) ≠ S(T) for\n{t}"))?;
            for y in &keys {
                let by_scan = tableau_leq(&s, y).map_err(lib)?;
                ensure(a_set_criterion(&t, y).map_err(lib)? == by_scan, || format!("A-set test differs for\n{t}"))?;
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} tableaux"))
}

fn convexity(n: usize) -> Outcome {
    let mut perms = 0;
    let mut witnesses = 0;
    for rs in RSet::all(n) {
        let shape = Partition::minimal_for(&rs);
        let mut distinct = BTreeSet::new();
        for p in gen_r_permutations(&rs).map_err(lib)? {
            let y = key_of_perm(&p, &shape).map_err(lib)?;
            let d = demazure_set(&p, &shape, DEFAULT_BUDGET).map_err(lib)?;
            let ideal = principal_ideal(&y, DEFAULT_BUDGET).map_err(lib)?;
            ensure(d.is_subset(&ideal) && d.max_element().as_ref() == Some(&y), || {
                format!("D is not inside [Y] with maximum Y for {p}")
            })?;
            ensure(member_of(&y, &y).map_err(lib)?, || format!("Y ∉ D for {p}"))?;
            let avoiding = p.is_r312_avoiding().map_err(lib)?;
            let convex = is_convex_lattice_set(&d, DEFAULT_BUDGET).map_err(lib)?;
            let whole = d == ideal;
            ensure(convex == avoiding && whole == avoiding, || {
                format!("{p}: avoiding = {avoiding}, convex = {convex}, D = [Y] is {whole}")
            })?;
            if !avoiding {
                let w = convexity_witness(&p, &shape).map_err(lib)?;
                w.verify(&p, &shape).map_err(|e| format!("witness for {p} fails: {e}"))?;
                witnesses += 1;
            }
            distinct.insert(d.points().clone());
            perms += 1;
        }
        ensure(distinct.len() as u128 == rs.multinomial(), || format!("repeated Demazure sets for R = {{{rs}}}"))?;
    }
    Ok(format!("{perms} permutations, {witnesses} witnesses"))
}

fn totals(n: usize) -> Outcome {
    let sum = count_total(n).map_err(lib)?;
    let formula = total_via_formula(n).map_err(lib)?;
    ensure(BigInt::from(sum.clone()) == formula, || format!("C_{n}^Σ = {sum} but the formula gives {formula}"))?;
    Ok(format!("C_{n}^Σ = {sum}"))
}

/// Runs one check for every `n ≤ min(n_max, ceiling)`.
pub fn run_check(check: Check, n_max: usize) -> CheckReport {
    let top = n_max.min(check.ceiling());
    if top == 0 {
        return CheckReport { check, status: Status::Skip, detail: "nothing to check".into() };
    }
    let mut notes = Vec::new();
    for n in 1..=top {
        let outcome = match check {
            Check::RankBijection => rank_bijection(n),
            Check::ChainBijection => chain_bijection(n),
            Check::KeyCoincidence => key_coincidence(n),
            Check::Equinumerosity => equinumerosity(n),
            Check::SixPatterns => six_patterns(n),
            Check::ScanningIdentities => scanning_identities(n),
            Check::Convexity => convexity(n),
            Check::Totals => totals(n),
        };
        match outcome {
            Ok(note) => notes.push(format!("n={n}: {note}")),
            Err(why) => return CheckReport { check, status: Status::Fail, detail: format!("n={n}: {why}") },
        }
    }
    if n_max > top {
        notes.push(format!("n > {top} skipped (guard)"));
    }
    let detail = if check == Check::Totals { notes.join(", ") } else { notes.last().cloned().unwrap_or_default() };
    let detail = if check == Check::Totals { detail } else { format!("n ≤ {top}; last {detail}") };
    CheckReport { check, status: Status::Pass, detail }
}

/// Every check, in a fixed order.
pub fn run_all(n_max: usize, only: Option<Check>) -> Vec<CheckReport> {
    Check::ALL.into_iter().filter(|c| only.is_none_or(|o| o == *c)).map(|c| run_check(c, n_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let reports = run_all(3, None);
        assert_eq!(reports.len(), Check::ALL.len());
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{r}");
        }
        let totals = reports.iter().find(|r| r.check == Check::Totals).unwrap();
        assert!(totals.detail.contains("C_3^Σ = 12"), "{}", totals.detail);
    }

    #[test]
    fn filtering_and_names() {
        let reports = run_all(2, Some(Check::KeyCoincidence));
        assert_eq!(reports.len(), 1);
        assert_eq!("key-coincidence".parse::<Check>().unwrap(), Check::KeyCoincidence);
        assert!("5.2".parse::<Check>().is_err());
    }
}
