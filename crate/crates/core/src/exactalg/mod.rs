//! Exact arithmetic: scalar fields, sparse multivariate polynomials, dense
//! matrices, univariate polynomials and binary forms.

pub mod binary;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod univariate;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Q;

/// Formats a rational as `num/den`, dropping the denominator when it is 1.
pub fn q_to_string(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses `num`, `num/den` or a decimal literal like `-1.25`.
pub fn q_from_str(s: &str) -> crate::Result<Q> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let digits = format!("{ip}{fp}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        return Ok(Q::new(n, d));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Binomial coefficient as a u128 (callers stay far below overflow).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qr;

    #[test]
    fn rational_strings() {
        assert_eq!(q_to_string(&qr(6, -4)), "-3/2");
        assert_eq!(q_to_string(&qr(5, 1)), "5");
        assert_eq!(q_from_str("-3/2").unwrap(), qr(-3, 2));
        assert_eq!(q_from_str("7").unwrap(), qr(7, 1));
        assert_eq!(q_from_str("-1.25").unwrap(), qr(-5, 4));
        assert!(q_from_str("1/0").is_err());
        assert!(q_from_str("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
