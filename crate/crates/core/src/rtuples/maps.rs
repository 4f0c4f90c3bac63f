use super::RTuple;
use crate::error::{input_err, Result};

/// Rank R-tuple: carrel `h` lists the `p_h` largest values among the first
/// `h` cohorts, increasingly.
pub fn rank_tuple(p: &RTuple) -> Result<RTuple> {
    if !p.is_r_permutation() {
        return Err(input_err!("{p} is not an R-permutation"));
    }
    let rs = p.rset();
    let mut seen: Vec<usize> = Vec::with_capacity(rs.n());
    let mut out = Vec::with_capacity(rs.n());
    for h in 1..=rs.carrels() {
        seen.extend_from_slice(p.cohort(h));
        seen.sort_unstable();
        out.extend_from_slice(&seen[seen.len() - rs.carrel_size(h)..]);
    }
    Ok(RTuple::from_parts_unchecked(rs.clone(), out))
}

/// Inverse of [`rank_tuple`] on R-312-avoiding permutations.
///
/// Carrel 1 is copied. For each later carrel, entries past the initial
/// catch-up run are copied; the run itself is refilled right to left with the
/// largest unused values not exceeding the previous carrel's last entry.
pub fn gapless_to_perm(g: &RTuple) -> Result<RTuple> {
    if !g.is_gapless() {
        return Err(input_err!("{g} is not a gapless R-tuple"));
    }
    let rs = g.rset();
    let n = rs.n();
    let mut used = vec![false; n + 1];
    let mut pi = vec![0; n];
    for i in rs.carrel_range(1) {
        pi[i] = g.entries()[i];
        used[pi[i]] = true;
    }
    for h in 1..=rs.r() {
        let q = rs.divider(h);
        let top = g.entry(q);
        // A tie at the divider also starts a catch-up run of length 1.
        let s = if top >= g.entry(q + 1) { top - g.entry(q + 1) + 1 } else { 0 };
        // Free values of [top] not used by the first h carrels, largest first.
        let mut free = (1..=top).rev().filter(|&v| !used[v]);
        for i in (q..q + s).rev() {
            pi[i] = free.next().ok_or_else(|| input_err!("{g} leaves too few free values"))?;
        }
        let end = rs.divider(h + 1);
        pi[q + s..end].copy_from_slice(&g.entries()[q + s..end]);
        for i in rs.carrel_range(h + 1) {
            used[pi[i]] = true;
        }
    }
    let out = RTuple::from_parts_unchecked(rs.clone(), pi);
    debug_assert!(out.is_r_permutation(), "Π produced {out}");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtuples::RSet;

    fn t(s: &str) -> RTuple {
        s.parse().unwrap()
    }

    #[test]
    fn rank_tuple_examples() {
        assert_eq!(rank_tuple(&t("2,4,6;1,5,7,8,9;3")).unwrap(), t("2,4,6;5,6,7,8,9;9"));
        assert_eq!(rank_tuple(&t("2,4,6;3,5,7,8,9;1")).unwrap(), t("2,4,6;5,6,7,8,9;9"));
        assert_eq!(
            rank_tuple(&t("1,4,6,7,10;3,5,8,9;2,12;11")).unwrap(),
            t("1,4,6,7,10;7,8,9,10;10,12;12")
        );
        let id = RTuple::identity(RSet::new(6, vec![2, 3]).unwrap());
        assert_eq!(rank_tuple(&id).unwrap(), id);
    }

    #[test]
    fn gapless_to_perm_examples() {
        assert_eq!(gapless_to_perm(&t("2,4,6;4,5,6,7,9;9")).unwrap(), t("2,4,6;1,3,5,7,9;8"));
        let id = RTuple::identity(RSet::full(5));
        assert_eq!(gapless_to_perm(&id).unwrap(), id);
        assert_eq!(gapless_to_perm(&t("1;3;3")).unwrap(), t("1;3;2"));
        assert!(gapless_to_perm(&t("2,4,6;4,6,7,8,9;9")).is_err());
    }

    #[test]
    fn rank_tuple_rejects_non_permutations() {
        assert!(rank_tuple(&t("2,2;3")).is_err());
    }
}
