/// Splits a finite set of integers into its clumps (maximal runs of
/// consecutive integers), in increasing order.
pub fn clump_decompose(set: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut clumps: Vec<Vec<usize>> = Vec::new();
    for v in sorted {
        match clumps.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == v => run.push(v),
            _ => clumps.push(vec![v]),
        }
    }
    clumps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        assert_eq!(
            clump_decompose(&[2, 3, 5, 6, 7, 10, 13, 14]),
            vec![vec![2, 3], vec![5, 6, 7], vec![10], vec![13, 14]]
        );
    }

    #[test]
    fn degenerate_sets() {
        assert!(clump_decompose(&[]).is_empty());
        assert_eq!(clump_decompose(&[1, 2, 3]), vec![vec![1, 2, 3]]);
        assert_eq!(clump_decompose(&[3, 1, 2, 2]), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn clumps_partition_and_separate() {
        for mask in 0u32..1 << 10 {
            let set: Vec<usize> = (0..10).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let clumps = clump_decompose(&set);
            assert_eq!(clumps.concat(), set);
            for c in &clumps {
                assert!(c.windows(2).all(|w| w[1] == w[0] + 1));
            }
            for w in clumps.windows(2) {
                assert!(w[1][0] >= w[0].last().unwrap() + 2);
            }
        }
    }
}
