use crate::error::{Error, Result};

/// Order bound above which a separator `S` with `|S| ≤ s` and
/// `α(S) ≥ |S| − t` cannot disconnect a contraction-critical graph:
/// `s + 2^{t−1} − t`.
pub fn mader_threshold(s: u32, t: u32) -> Result<u64> {
    if t < 3 {
        return Err(Error::input(format!("t = {t} must be at least 3")));
    }
    if s < 1 {
        return Err(Error::input("s must be at least 1"));
    }
    if t > 62 {
        return Err(Error::input(format!("t = {t} overflows")));
    }
    Ok(s as u64 + (1u64 << (t - 1)) - t as u64)
}

/// `2^{t−4} + 2`: contraction-critical graphs of at least this order are
/// `t`-connected.
pub fn easy_connectivity_threshold(t: u32) -> Result<u64> {
    if t < 6 {
        return Err(Error::input(format!("t = {t} must be at least 6")));
    }
    if t > 66 {
        return Err(Error::input(format!("t = {t} overflows")));
    }
    Ok((1u64 << (t - 4)) + 2)
}

/// Best proven connectivity of a noncomplete `k`-contraction-critical graph:
/// 5 from `k = 5`, 6 at `k = 6`, 7 from `k = 7`, then 8, 9, 10 from 17, 29,
/// 41, and `⌈k/9⌉` once that is larger.
pub fn main_theorem_table(k: u64) -> Result<u64> {
    if k < 5 {
        return Err(Error::input(format!("k = {k} must be at least 5")));
    }
    let table = match k {
        5 => 5,
        6 => 6,
        7..=16 => 7,
        17..=28 => 8,
        29..=40 => 9,
        _ => 10,
    };
    Ok(table.max(k.div_ceil(9)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_values() {
        assert_eq!(mader_threshold(7, 3).unwrap(), 8);
        assert_eq!(mader_threshold(7, 5).unwrap(), 18);
        assert_eq!(mader_threshold(9, 7).unwrap(), 66);
        assert!(mader_threshold(7, 2).is_err());
        assert_eq!(easy_connectivity_threshold(8).unwrap(), 18);
        assert_eq!(easy_connectivity_threshold(9).unwrap(), 34);
        assert_eq!(easy_connectivity_threshold(6).unwrap(), 6);
        assert!(easy_connectivity_threshold(5).is_err());
        assert_eq!(main_theorem_table(17).unwrap(), 8);
        assert_eq!(main_theorem_table(41).unwrap(), 10);
        assert_eq!(main_theorem_table(7).unwrap(), 7);
        assert_eq!(main_theorem_table(28).unwrap(), 8);
        assert_eq!(main_theorem_table(91).unwrap(), 11);
    }

    #[test]
    fn easy_threshold_is_mader_instance() {
        // s = t − 1 and t − 3 in place of t
        for t in 6..20 {
            assert_eq!(easy_connectivity_threshold(t).unwrap(), mader_threshold(t - 1, t - 3).unwrap());
        }
    }
}
