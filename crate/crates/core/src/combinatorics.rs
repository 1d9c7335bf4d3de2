//! Exact integer helpers shared by the counting formulas.

/// `C(n, k)`, or `None` on overflow. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

pub fn factorial(n: u64) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

/// `n!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Option<u128> {
    let mut acc: u128 = 1;
    let mut i = n;
    while i > 1 {
        acc = acc.checked_mul(i as u128)?;
        i -= 2;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(factorial(0), Some(1));
        assert_eq!(factorial(7), Some(5040));
        assert_eq!(double_factorial(5), Some(15));
        assert_eq!(double_factorial(1), Some(1));
        assert_eq!(double_factorial(-1), Some(1));
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(factorial(40), None);
    }
}
