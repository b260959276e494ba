//! Lexicographic ranking of partial permutations.
//!
//! The `index`-th `arity`-tuple of distinct elements of `0..n`, in
//! lexicographic order, can be computed directly from `index`. Each worker
//! of a parallel scan unranks the start of its own index range and then
//! steps forward with [`next_tuple`].

use crate::error::UnrankError;

/// `n · (n−1) · … · (n−arity+1)`.
pub fn permutation_count(n: usize, arity: usize) -> Result<u64, UnrankError> {
    if arity > n {
        return Err(UnrankError::ArityTooLarge { n, arity });
    }
    (0..arity).try_fold(1u64, |acc, i| {
        acc.checked_mul((n - i) as u64)
            .ok_or(UnrankError::Overflow { n, arity })
    })
}

pub fn unrank_tuple(index: u64, n: usize, arity: usize) -> Result<Vec<usize>, UnrankError> {
    let count = permutation_count(n, arity)?;
    if index >= count {
        return Err(UnrankError::OutOfRange { index, count });
    }
    let mut unused: Vec<usize> = (0..n).collect();
    let mut rest = index;
    // Completions below each position: P(n−1, arity−1), P(n−2, arity−2), ...
    let mut block = count;
    let mut tuple = Vec::with_capacity(arity);
    for i in 0..arity {
        block /= (n - i) as u64;
        let digit = (rest / block) as usize;
        rest %= block;
        tuple.push(unused.remove(digit));
    }
    Ok(tuple)
}

/// Inverse of [`unrank_tuple`].
pub fn rank_tuple(tuple: &[usize], n: usize) -> Result<u64, UnrankError> {
    let arity = tuple.len();
    let mut block = permutation_count(n, arity)?;
    let mut rank = 0u64;
    for (i, &x) in tuple.iter().enumerate() {
        block /= (n - i) as u64;
        let smaller_unused = x - tuple[..i].iter().filter(|&&y| y < x).count();
        rank += smaller_unused as u64 * block;
    }
    Ok(rank)
}

/// Advances `tuple` to its lexicographic successor among tuples of distinct
/// elements of `0..n`. Returns `false` (leaving `tuple` unspecified) when it
/// was the last one.
pub fn next_tuple(tuple: &mut [usize], n: usize) -> bool {
    let arity = tuple.len();
    let mut used = vec![false; n];
    for &x in tuple.iter() {
        used[x] = true;
    }
    for i in (0..arity).rev() {
        used[tuple[i]] = false;
        if let Some(next) = (tuple[i] + 1..n).find(|&x| !used[x]) {
            tuple[i] = next;
            used[next] = true;
            // Fill the suffix with the smallest unused elements.
            let mut free = (0..n).filter(|&x| !used[x]);
            for slot in tuple[i + 1..].iter_mut() {
                *slot = free.next().expect("arity <= n");
            }
            return true;
        }
    }
    false
}
