use super::{combinations, gen_r_permutations};
use crate::error::{Error, Result};
use crate::rtuples::{clump_decompose, RChain, RSet};
use crate::shapes::{is_gapless_key, key_of_chain, Partition, Tableau};

/// Deletions allowed from `set`: whole clumps from the top down to some
/// clump `L`, plus a nonempty subset of `L`. With `size = Some(s)` only
/// deletions of exactly `s` elements are returned.
fn clump_deletions(set: &[usize], size: Option<usize>) -> Vec<Vec<usize>> {
    let clumps = clump_decompose(set);
    let mut out = Vec::new();
    let mut above: Vec<usize> = Vec::new();
    for clump in clumps.iter().rev() {
        let sizes: Vec<usize> = match size {
            Some(s) if s > above.len() && s <= above.len() + clump.len() => vec![s - above.len()],
            Some(_) => Vec::new(),
            None => (1..=clump.len()).collect(),
        };
        for k in sizes {
            for part in combinations(clump, k) {
                let mut d = part;
                d.extend(&above);
                out.push(d);
            }
        }
        let mut grown = clump.clone();
        grown.extend(&above);
        above = grown;
    }
    out
}

fn without(set: &[usize], gone: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|v| !gone.contains(v)).collect()
}

/// R-rightmost clump deleting chains, built top-down from `[n]`.
pub fn gen_rcd_chains(rs: &RSet) -> Vec<RChain> {
    fn go(rs: &RSet, h: usize, stack: &mut Vec<Vec<usize>>, out: &mut Vec<RChain>) {
        if h == 0 {
            let blocks: Vec<Vec<usize>> = std::iter::once(Vec::new()).chain(stack.iter().rev().cloned()).collect();
            out.push(RChain::new(rs.clone(), blocks).expect("valid chain"));
            return;
        }
        let top = stack.last().unwrap().clone();
        let size = rs.carrel_size(h + 1);
        for d in clump_deletions(&top, Some(size)) {
            stack.push(without(&top, &d));
            go(rs, h - 1, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![(1..=rs.n()).collect::<Vec<_>>()];
    go(rs, rs.r(), &mut stack, &mut out);
    debug_assert!(out.iter().all(RChain::is_rcd));
    out.sort();
    out
}

/// Rightmost clump deleting chains for `[n]` with any number of elements
/// deleted per stage; the stage sizes determine `R`.
pub fn gen_generalized_rcd_chains(n: usize) -> Result<Vec<RChain>> {
    if n == 0 || n > super::TOTAL_GUARD {
        return Err(Error::Guard(format!("generalized chains need 1 ≤ n ≤ {}", super::TOTAL_GUARD)));
    }
    fn go(n: usize, stack: &mut Vec<Vec<usize>>, out: &mut Vec<RChain>) {
        let top = stack.last().unwrap().clone();
        if top.is_empty() {
            let blocks: Vec<Vec<usize>> = stack.iter().rev().cloned().collect();
            let dividers = blocks[1..blocks.len() - 1].iter().map(Vec::len).collect();
            let rs = RSet::new(n, dividers).expect("stage sizes lie in [n-1]");
            out.push(RChain::new(rs, blocks).expect("valid chain"));
            return;
        }
        for d in clump_deletions(&top, None) {
            stack.push(without(&top, &d));
            go(n, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![(1..=n).collect()], &mut out);
    out.sort();
    Ok(out)
}

/// Gapless `λ`-keys: the keys of all `R_λ`-chains that pass the gapless test.
pub fn gen_gapless_keys(shape: &Partition) -> Result<Vec<Tableau>> {
    let rs = shape.r_set();
    let mut keys = Vec::new();
    for p in gen_r_permutations(&rs)? {
        let y = key_of_chain(&RChain::from_perm(&p)?, shape)?;
        if is_gapless_key(&y)? {
            keys.push(y);
        }
    }
    keys.sort();
    keys.dedup();
    Ok(keys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_cnr, count_total, gen_r312_avoiding};
    use std::collections::BTreeSet;

    #[test]
    fn five_full_chains_for_three() {
        let chains = gen_rcd_chains(&RSet::full(3));
        let shown: Vec<String> = chains.iter().map(ToString::to_string).collect();
        assert_eq!(chains.len(), 5);
        assert!(shown.contains(&"∅ ⊂ {1} ⊂ {1,2} ⊂ {1,2,3}".to_string()));
        assert!(!shown.contains(&"∅ ⊂ {3} ⊂ {1,3} ⊂ {1,2,3}".to_string()));
    }

    #[test]
    fn rcd_chains_are_avoiding_chains() {
        for n in 1..=6 {
            for rs in RSet::all(n) {
                let direct: BTreeSet<RChain> = gen_rcd_chains(&rs).into_iter().collect();
                let via: BTreeSet<RChain> = gen_r312_avoiding(&rs)
                    .unwrap()
                    .iter()
                    .map(|p| RChain::from_perm(p).unwrap())
                    .collect();
                assert_eq!(direct, via, "n = {n}, R = {{{rs}}}");
            }
        }
    }

    #[test]
    fn generalized_chain_counts() {
        assert_eq!(gen_generalized_rcd_chains(1).unwrap().len(), 1);
        assert_eq!(gen_generalized_rcd_chains(2).unwrap().len(), 3);
        let three = gen_generalized_rcd_chains(3).unwrap();
        assert_eq!(three.len(), 12);
        // Deleting 2 alone from {1,2,3}, then {1,3} at once.
        let split = RChain::new(RSet::new(3, vec![2]).unwrap(), vec![vec![], vec![1, 3], vec![1, 2, 3]]).unwrap();
        assert!(three.contains(&split));
        for n in 1..=7 {
            let all = gen_generalized_rcd_chains(n).unwrap();
            assert_eq!(all.len(), usize::try_from(count_total(n).unwrap()).unwrap());
            for rs in RSet::all(n) {
                let here = all.iter().filter(|c| c.rset() == &rs).count();
                assert_eq!(here, usize::try_from(count_cnr(&rs)).unwrap());
            }
        }
    }

    #[test]
    fn gapless_key_counts() {
        for n in 1..=5 {
            for rs in RSet::all(n) {
                let shape = Partition::minimal_for(&rs);
                let keys = gen_gapless_keys(&shape).unwrap();
                assert_eq!(keys.len(), usize::try_from(count_cnr(&rs)).unwrap());
            }
        }
    }
}
