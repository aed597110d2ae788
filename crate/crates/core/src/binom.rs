use num_bigint::BigUint;

/// Exact binomial coefficient with `C(a, k) = 0` for `k > a` and `C(0, 0) = 1`.
pub fn binomial(a: usize, k: usize) -> BigUint {
    if k > a {
        return BigUint::from(0u32);
    }
    let k = k.min(a - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= (a - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// Same convention as [`binomial`] in native integers; every `C(a, k)` with
/// `a <= 64` fits.
pub(crate) fn binomial_u128(a: usize, k: usize) -> u128 {
    if k > a {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}
