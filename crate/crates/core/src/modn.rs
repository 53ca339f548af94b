//! Arithmetic on `[n] = {1, ..., n}` where `n` stands for the residue 0.
//!
//! Every family constructor and every dihedral element routes its modular
//! arithmetic through these helpers, so the "n represents 0" convention
//! lives in exactly one place.

/// Reduces any signed integer to `[n]`: `0 -> n`, `n+1 -> 1`, `-1 -> n-1`.
#[inline]
pub fn wrap(x: i64, n: usize) -> usize {
    debug_assert!(n > 0);
    let r = x.rem_euclid(n as i64) as usize;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Residue of a point of `[n]` in `0..n`.
#[inline]
pub fn residue(x: usize, n: usize) -> usize {
    x % n
}

/// Clockwise distance from `a` to `b` on the labelled `n`-cycle, in `0..n`.
#[inline]
pub fn forward_distance(a: usize, b: usize, n: usize) -> usize {
    (b + n - a % n) % n
}

/// Circular distance `min(|a-b|, n-|a-b|)`.
#[inline]
pub fn circular_distance(a: usize, b: usize, n: usize) -> usize {
    let d = forward_distance(a, b, n);
    d.min(n - d)
}
