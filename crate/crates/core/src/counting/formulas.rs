use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::exact::BigCount;
use crate::error::{Error, Result};
use crate::setcore::Arrangement2;

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Splitters of a single set of size `b_size` in `[k]`.
pub fn splitters_one_set(b_size: u64, k: u64) -> Result<BigCount> {
    if b_size > k {
        return Err(Error::contract(format!(
            "set size {b_size} exceeds k = {k}"
        )));
    }
    Ok(if b_size.is_multiple_of(2) {
        binomial(b_size, b_size / 2) << (k - b_size)
    } else {
        binomial(b_size, (b_size - 1) / 2) << (k - b_size + 1)
    })
}

/// Splitters of a two-set family with arrangement `a`.
///
/// An odd member is made even by adding a point to its private region,
/// which leaves the count unchanged.
pub fn splitters_two_set(a: Arrangement2) -> BigCount {
    let mut a1 = a.a1;
    let mut a2 = a.a2;
    let b = a.b;
    if (a1 + b) % 2 == 1 {
        a1 += 1;
    }
    if (a2 + b) % 2 == 1 {
        a2 += 1;
    }
    let t1 = (a1 + b) / 2;
    let t2 = (a2 + b) / 2;
    let mut sum = BigCount::zero();
    for i in 0..=b.min(t1).min(t2) {
        let term = binomial(a1, t1 - i) * binomial(b, i) * binomial(a2, t2 - i);
        sum += term;
    }
    sum << a.d
}

/// Normal approximation `2^(k+1) / (π √(a1·a2 + a1·b + a2·b))`.
pub fn approx_splitters_two_set(a: Arrangement2) -> Result<f64> {
    let (a1, b, a2) = (a.a1 as f64, a.b as f64, a.a2 as f64);
    let q = a1 * a2 + a1 * b + a2 * b;
    if q == 0.0 {
        return Err(Error::Domain(format!(
            "approximation undefined for {a}: at most one interior region is nonempty"
        )));
    }
    Ok(((a.k() + 1) as f64).exp2() / (std::f64::consts::PI * q.sqrt()))
}

/// Franel number `Σ_i C(m, i)^3`.
pub fn franel(m: u64) -> BigCount {
    (0..=m)
        .map(|i| {
            let c = binomial(m, i);
            &c * &c * &c
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::exact::count_splitters;
    use crate::setcore::family_from_regions;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(10, 0), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn one_set_examples() {
        assert_eq!(splitters_one_set(4, 4).unwrap(), big(6));
        assert_eq!(splitters_one_set(3, 3).unwrap(), big(6));
        assert_eq!(splitters_one_set(0, 7).unwrap(), big(128));
        assert!(splitters_one_set(5, 4).is_err());
    }

    #[test]
    fn one_set_matches_brute_force() {
        for k in 0..=12u32 {
            for b in 0..=k {
                let f = crate::setcore::Family::from_bits(k, &[crate::setcore::ground_bits(b)])
                    .unwrap();
                assert_eq!(
                    splitters_one_set(u64::from(b), u64::from(k)).unwrap(),
                    count_splitters(&f).unwrap()
                );
            }
        }
    }

    #[test]
    fn two_set_examples() {
        assert_eq!(splitters_two_set(Arrangement2::new(2, 2, 2, 0)), big(10));
        assert_eq!(splitters_two_set(Arrangement2::new(0, 0, 0, 5)), big(32));
        assert_eq!(splitters_two_set(Arrangement2::new(1, 2, 2, 0)), big(10));
        assert_eq!(splitters_two_set(Arrangement2::new(4, 4, 4, 0)), big(346));
    }

    #[test]
    fn two_set_matches_brute_force() {
        for k in 0..=10 {
            for a in Arrangement2::all_with_total(k) {
                let f = family_from_regions(&a.to_regions()).unwrap();
                assert_eq!(splitters_two_set(a), count_splitters(&f).unwrap(), "{a}");
            }
        }
    }

    #[test]
    fn approximation() {
        let v = approx_splitters_two_set(Arrangement2::new(4, 4, 4, 0)).unwrap();
        assert!((v - 376.374).abs() < 1e-3, "{v}");
        let w = approx_splitters_two_set(Arrangement2::new(4, 4, 4, 1)).unwrap();
        assert!((w - 2.0 * v).abs() < 1e-9);
        assert!(approx_splitters_two_set(Arrangement2::new(0, 0, 0, 3)).is_err());
        assert!(approx_splitters_two_set(Arrangement2::new(0, 5, 0, 0)).is_err());
    }

    #[test]
    fn franel_numbers() {
        assert_eq!(franel(0), big(1));
        assert_eq!(franel(2), big(10));
        assert_eq!(franel(3), big(56));
        assert_eq!(franel(4), big(346));
        for m in 0..=12 {
            assert_eq!(franel(m), splitters_two_set(Arrangement2::new(m, m, m, 0)));
        }
    }
}
