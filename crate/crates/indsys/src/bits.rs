//! Bitmask helpers for the exhaustive desk-scale scans (n <= 20 or so).

/// Converts a sorted id slice into a bitmask.
pub(crate) fn mask_of(ids: &[usize]) -> u32 {
    ids.iter().fold(0u32, |m, &i| m | (1 << i))
}

/// Expands a bitmask back into sorted ids.
pub(crate) fn ids_of(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}
