//! Small bitmask helpers for vertex and point subsets.
//!
//! A subset of `0..n` is a `u32` with bit `i` set when `i` is a member.

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn contains(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Iterates the members of `mask` in increasing order.
pub fn members(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn from_members<I: IntoIterator<Item = usize>>(items: I) -> u32 {
    items.into_iter().fold(0, |m, i| m | 1 << i)
}

/// Image of a subset under a point map.
pub fn image(mask: u32, f: &[usize]) -> u32 {
    members(mask).fold(0, |m, i| m | 1 << f[i])
}

/// Preimage of a subset of the codomain under a point map.
pub fn preimage(mask: u32, f: &[usize]) -> u32 {
    f.iter().enumerate().filter(|&(_, &y)| contains(mask, y)).fold(0, |m, (i, _)| m | 1 << i)
}

/// Renumbers `mask ∩ sub` onto `0..|sub|`, keeping the order of `sub`.
pub fn compress(mask: u32, sub: u32) -> u32 {
    members(sub).enumerate().filter(|&(_, i)| contains(mask, i)).fold(0, |m, (k, _)| m | 1 << k)
}

/// Formats a subset as `{0,2,3}`.
pub fn show(mask: u32) -> String {
    let inner: Vec<String> = members(mask).map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
