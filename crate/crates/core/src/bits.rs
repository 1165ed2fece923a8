//! Helpers for `u128` vertex masks.

#[inline]
pub fn bit(v: usize) -> u128 {
    1u128 << v
}

#[inline]
pub fn full(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn count(m: u128) -> usize {
    m.count_ones() as usize
}

#[inline]
pub fn first(m: u128) -> Option<usize> {
    (m != 0).then(|| m.trailing_zeros() as usize)
}

/// Iterates the set bits of `m` in increasing order.
pub fn iter(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn from_slice(vs: &[usize]) -> u128 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterate_bits() {
        let m = from_slice(&[0, 5, 127]);
        assert_eq!(iter(m).collect::<Vec<_>>(), vec![0, 5, 127]);
        assert_eq!(count(m), 3);
        assert_eq!(first(m), Some(0));
        assert_eq!(full(3), 0b111);
        assert_eq!(full(128), u128::MAX);
    }
}
