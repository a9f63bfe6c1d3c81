//! Iterative enumeration of compositions and combinations, plus binomial
//! coefficients. No recursion, so arbitrarily deep index sets are safe.

/// Binomial coefficient as `f64` (exact for the sizes used here).
pub(crate) fn binomial(n: u32, r: u32) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    let mut acc = 1.0;
    for i in 0..r {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// Visits every composition `(j_1, ..., j_parts)` of nonnegative integers
/// with `j_1 + ... + j_parts = total`, in lexicographically descending
/// order starting from `(total, 0, ..., 0)`.
pub(crate) fn for_each_composition(parts: usize, total: u32, mut visit: impl FnMut(&[u32])) {
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut c = vec![0u32; parts];
    c[0] = total;
    loop {
        visit(&c);
        if c[parts - 1] == total {
            break;
        }
        // rightmost movable position before the last slot
        let mut i = parts - 2;
        while c[i] == 0 {
            i -= 1;
        }
        let tail: u32 = c[i + 1..].iter().sum();
        c[i] -= 1;
        c[i + 1] = tail + 1;
        for slot in c[i + 2..].iter_mut() {
            *slot = 0;
        }
    }
}

/// Visits every strictly increasing `r`-element index combination from
/// `0..n`, in lexicographic order.
pub(crate) fn for_each_combination(n: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    if r == 0 {
        visit(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        // advance: find the rightmost index that can move up
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - r {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1.0);
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(10, 10), 1.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(binomial(30, 15), 155117520.0);
    }

    #[test]
    fn compositions_count_and_sum() {
        let mut count = 0u32;
        for_each_composition(3, 4, |c| {
            assert_eq!(c.iter().sum::<u32>(), 4);
            count += 1;
        });
        assert_eq!(count, 15); // binom(6, 2)
    }

    #[test]
    fn compositions_edge_cases() {
        let mut seen = Vec::new();
        for_each_composition(1, 5, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![5]]);

        let mut count = 0;
        for_each_composition(4, 0, |c| {
            assert_eq!(c, &[0, 0, 0, 0]);
            count += 1;
        });
        assert_eq!(count, 1);

        let mut empties = 0;
        for_each_composition(0, 0, |_| empties += 1);
        assert_eq!(empties, 1);
        for_each_composition(0, 3, |_| panic!("no compositions of 3 into 0 parts"));
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut count = 0u32;
        for_each_combination(9, 4, |_| count += 1);
        assert_eq!(count, 126);
    }

    #[test]
    fn combinations_trivial_sizes() {
        let mut count = 0;
        for_each_combination(5, 0, |c| {
            assert!(c.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("r > n yields nothing"));
    }
}
