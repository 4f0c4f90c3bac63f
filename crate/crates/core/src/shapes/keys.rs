use super::{Partition, Tableau};
use crate::error::{input_err, Error, Result};
use crate::rtuples::{RChain, RTuple};

/// Column value sets are nested: `B(Y_l) ⊇ B(Y_j)` for `l ≤ j`.
pub fn is_key(t: &Tableau) -> bool {
    t.columns().windows(2).all(|w| w[1].iter().all(|v| w[0].binary_search(v).is_ok()))
}

/// The single column `Y(Q)` on the shape `(1^q, 0^{n-q})`.
pub fn column_of_set(n: usize, q: &[usize]) -> Result<Tableau> {
    let mut values = q.to_vec();
    values.sort_unstable();
    values.dedup();
    if let Some(&bad) = values.iter().find(|&&v| v == 0 || v > n) {
        return Err(input_err!("{bad} is not in [{n}]"));
    }
    let parts = (1..=n).map(|i| usize::from(i <= values.len())).collect();
    let shape = Partition::new(parts)?;
    if values.is_empty() {
        return Ok(Tableau::null(n));
    }
    Tableau::new(shape, vec![values])
}

fn require_matching_r(t: &RTuple, shape: &Partition) -> Result<()> {
    if t.n() != shape.n() {
        return Err(input_err!("tuple has n = {} but the shape has {} rows", t.n(), shape.n()));
    }
    if *t.rset() != shape.r_set() {
        return Err(input_err!("R = {{{}}} differs from R_λ = {{{}}}", t.rset(), shape.r_set()));
    }
    Ok(())
}

/// Column `j` of the key of `c` is `B_h` where `ζ_j = q_h` (inert when `ζ_j = n`).
pub fn key_of_chain(c: &RChain, shape: &Partition) -> Result<Tableau> {
    let rs = c.rset();
    if rs.n() != shape.n() || *rs != shape.r_set() {
        return Err(input_err!("chain R = {{{rs}}} does not match R_λ = {{{}}}", shape.r_set()));
    }
    let columns = shape
        .column_lengths()
        .into_iter()
        .map(|len| {
            let h = (0..=rs.carrels()).find(|&h| rs.divider(h) == len).unwrap();
            c.block(h).to_vec()
        })
        .collect();
    Ok(Tableau::from_columns_unchecked(shape.clone(), columns))
}

/// `Y_λ(π)`: the key of the chain of `π`.
pub fn key_of_perm(p: &RTuple, shape: &Partition) -> Result<Tableau> {
    require_matching_r(p, shape)?;
    key_of_chain(&RChain::from_perm(p)?, shape)
}

/// `ω_i = T_{λ_i}(i)`, reading the latent inert column when `λ_i = 0`.
pub fn row_end_list(t: &Tableau) -> RTuple {
    let shape = t.shape();
    let entries = (1..=shape.n())
        .map(|i| match shape.part(i) {
            0 => i,
            end => t.value(end, i),
        })
        .collect();
    RTuple::new(shape.r_set(), entries).expect("row ends lie in [n]")
}

/// The entrywise largest tableau of the given shape whose row end list is `a`.
///
/// Columns are filled east to west. A column of length `q_h` takes `a` on rows
/// `(q_{h-1}, q_h]`, then rows above are filled bottom-up with
/// `min(M_j(i+1) - 1, M_{j+1}(i))`. Trivial-length columns are inert.
pub fn row_end_max(shape: &Partition, a: &RTuple) -> Result<Tableau> {
    require_matching_r(a, shape)?;
    if !(a.is_upper() && a.is_r_increasing()) {
        return Err(input_err!("{a} is not an R-increasing upper tuple"));
    }
    let n = shape.n();
    let rs = a.rset();
    let lengths = shape.column_lengths();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); lengths.len()];
    for j in (0..lengths.len()).rev() {
        let len = lengths[j];
        if len == n {
            columns[j] = (1..=n).collect();
            continue;
        }
        let h = (1..=rs.r()).find(|&h| rs.divider(h) == len).unwrap();
        let below = rs.divider(h - 1);
        let mut col = vec![0; len];
        col[below..len].copy_from_slice(&a.entries()[below..len]);
        for i in (0..below).rev() {
            let east = columns[j + 1][i];
            col[i] = (col[i + 1] - 1).min(east);
        }
        columns[j] = col;
    }
    let m = Tableau::from_columns_unchecked(shape.clone(), columns);
    debug_assert!(m.is_semistandard(), "row end max fill is not semistandard:\n{m}");
    debug_assert_eq!(row_end_list(&m), *a);
    Ok(m)
}

/// Gapless key: between consecutive column lengths `q_h < q_{h+1}`, let `b`
/// be the least value new to the longer columns and `m` the bottom of the
/// shorter ones. When `b < m`, the longer columns hold every value of `[b, m]`
/// in consecutive rows.
pub fn is_gapless_key(y: &Tableau) -> Result<bool> {
    if !is_key(y) {
        return Err(input_err!("not a key"));
    }
    let shape = y.shape();
    let rs = shape.r_set();
    for h in 1..rs.r() {
        let short = y.column(shape.last_column_reaching(rs.divider(h)));
        let m = *short.last().unwrap();
        let first_long = shape.last_column_reaching(rs.divider(h + 2)) + 1;
        for j in first_long..=shape.last_column_reaching(rs.divider(h + 1)) {
            let long = y.column(j);
            let Some(i) = long.iter().position(|v| short.binary_search(v).is_err()) else {
                continue;
            };
            let b = long[i];
            if b > m {
                continue;
            }
            let k = long.iter().position(|&v| v == m).expect("keys nest");
            if !(i..=k).all(|x| long[x] == b + (x - i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Entrywise `s ≤ t`.
pub fn tableau_leq(s: &Tableau, t: &Tableau) -> Result<bool> {
    if s.shape() != t.shape() {
        return Err(Error::Structure("tableaux have different shapes".into()));
    }
    Ok(s.columns().iter().flatten().zip(t.columns().iter().flatten()).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtuples::{rank_tuple, RSet};
    use crate::shapes::fixtures::worked_key;

    fn t(s: &str) -> RTuple {
        s.parse().unwrap()
    }

    fn minimal_tableau(shape: &Partition) -> Tableau {
        let columns = shape.column_lengths().into_iter().map(|z| (1..=z).collect()).collect();
        Tableau::new(shape.clone(), columns).unwrap()
    }

    #[test]
    fn key_predicate() {
        assert!(is_key(&worked_key()));
        assert!(is_key(&minimal_tableau(&"3,2,2,1,0".parse().unwrap())));
        let bad = Tableau::new("2,1,0".parse().unwrap(), vec![vec![1, 3], vec![2]]).unwrap();
        assert!(!is_key(&bad));
    }

    #[test]
    fn columns_of_sets() {
        let c = column_of_set(7, &[6, 2, 3]).unwrap();
        assert_eq!(c.columns(), &[vec![2, 3, 6]]);
        assert_eq!(c.shape().parts(), &[1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(column_of_set(7, &[5]).unwrap().columns(), &[vec![5]]);
        let null = column_of_set(4, &[]).unwrap();
        assert!(null.shape().is_empty_shape());
        assert!(column_of_set(3, &[4]).is_err());
    }

    #[test]
    fn worked_key_from_permutation() {
        let shape: Partition = "7,7,7,7,7,5,5,5,5,2,2,0".parse().unwrap();
        let pi = t("1,4,6,7,10;3,5,8,9;2,12;11");
        let y = key_of_perm(&pi, &shape).unwrap();
        assert_eq!(y, worked_key());
        let omega = row_end_list(&y);
        assert_eq!(omega, t("1,4,6,7,10;7,8,9,10;10,12;12"));
        assert_eq!(omega.cohort(2), &[7, 8, 9, 10]);
        assert_eq!(omega, rank_tuple(&pi).unwrap());
        assert_eq!(row_end_max(&shape, &omega).unwrap(), y);
        assert!(is_gapless_key(&y).unwrap());
    }

    #[test]
    fn keys_of_small_chains() {
        let shape: Partition = "1,1,0".parse().unwrap();
        let y = key_of_perm(&t("2,3;1"), &shape).unwrap();
        assert_eq!(y.columns(), &[vec![2, 3]]);
        let shape: Partition = "1,0".parse().unwrap();
        assert_eq!(key_of_perm(&t("2;1"), &shape).unwrap().columns(), &[vec![2]]);
        let rect: Partition = "2,2,2".parse().unwrap();
        let y = key_of_perm(&RTuple::identity(RSet::trivial(3)), &rect).unwrap();
        assert_eq!(y.columns(), &[vec![1, 2, 3], vec![1, 2, 3]]);
        assert!(key_of_perm(&t("2;1"), &"1,1,0".parse().unwrap()).is_err());
    }

    #[test]
    fn counterexample_to_converse() {
        let shape: Partition = "2,1,1,0".parse().unwrap();
        let pi = t("4;1,2;3");
        let y = key_of_perm(&pi, &shape).unwrap();
        assert_eq!(y, row_end_max(&shape, &rank_tuple(&pi).unwrap()).unwrap());
        assert!(!pi.is_r312_avoiding().unwrap());
        assert!(!is_gapless_key(&y).unwrap());
    }

    #[test]
    fn row_end_max_of_identity_is_minimal() {
        let shape: Partition = "3,2,2,1,0".parse().unwrap();
        let id = RTuple::identity(shape.r_set());
        assert_eq!(row_end_max(&shape, &id).unwrap(), minimal_tableau(&shape));
        assert_eq!(row_end_list(&minimal_tableau(&shape)), id);
    }

    #[test]
    fn row_end_max_of_gapless_is_key() {
        let shape = Partition::minimal_for(&RSet::new(9, vec![3, 8]).unwrap());
        let m = row_end_max(&shape, &t("2,4,6;4,5,6,7,9;9")).unwrap();
        assert!(is_key(&m));
        assert!(is_gapless_key(&m).unwrap());
        assert!(row_end_max(&shape, &t("3,5,5;6,4,7,8,9;9")).is_err());
    }

    #[test]
    fn null_tableau_conventions() {
        let null = Tableau::null(3);
        assert!(is_key(&null));
        assert!(is_gapless_key(&null).unwrap());
        assert_eq!(row_end_list(&null), RTuple::identity(RSet::trivial(3)));
    }

    #[test]
    fn entrywise_order() {
        let y = worked_key();
        let shape = y.shape().clone();
        assert!(tableau_leq(&minimal_tableau(&shape), &y).unwrap());
        assert!(tableau_leq(&y, &y).unwrap());
        let mut lower = y.clone();
        lower.set(6, 5, 9);
        assert!(tableau_leq(&lower, &y).unwrap());
        assert!(!tableau_leq(&y, &lower).unwrap());
        assert!(tableau_leq(&y, &Tableau::null(12)).is_err());
    }
}
