use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::JonesError;

/// The evaluation point: `ω_r = e^{2πi/r}` with bracket variable
/// `A = ζ_{4r}^{r-1}`, so that `A^{-4} = ω_r` and `-A² - A^{-2} = 2cos(π/r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    r: u32,
}

impl RootOfUnity {
    pub fn new(r: u32) -> Result<Self, JonesError> {
        if r < 5 || r == 6 {
            return Err(JonesError::InvalidRoot(r));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `N = 4r`, the level of the cyclotomic ring holding all values.
    pub fn level(&self) -> usize {
        4 * self.r as usize
    }

    /// Exponent `k` with `A = ζ_N^k`.
    pub fn a_exponent(&self) -> i64 {
        self.r as i64 - 1
    }

    pub fn a(&self) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.level(), self.a_exponent())
    }

    pub fn a_inv(&self) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.level(), -self.a_exponent())
    }

    /// Loop value `d = -A² - A^{-2}`.
    pub fn d(&self) -> Cyclotomic {
        let n = self.level();
        let k = 2 * self.a_exponent();
        -(&Cyclotomic::zeta_pow(n, k) + &Cyclotomic::zeta_pow(n, -k))
    }

    pub fn omega(&self) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.level(), 4)
    }

    /// `2cos(π/r)` in floating point.
    pub fn d_real(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.r as f64).cos()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_excluded_levels() {
        for r in [0, 1, 2, 3, 4, 6] {
            assert_eq!(RootOfUnity::new(r), Err(JonesError::InvalidRoot(r)));
        }
        assert!(RootOfUnity::new(5).is_ok());
        assert!(RootOfUnity::new(7).is_ok());
    }

    #[test]
    fn loop_value_embeds_to_two_cos() {
        let expect = [(5, 1.618_033_988_7), (7, 1.801_937_735_8)];
        for (r, v) in expect {
            let root = RootOfUnity::new(r).unwrap();
            let (re, im) = root.d().to_complex();
            assert!((re - v).abs() < 1e-10, "r={r}: {re}");
            assert!(im.abs() < 1e-12);
            assert!((re - root.d_real()).abs() < 1e-12);
            assert!(root.d().is_real());
        }
    }

    #[test]
    fn a_to_the_4r_is_one() {
        for r in [5, 7, 8, 9, 10] {
            let root = RootOfUnity::new(r).unwrap();
            assert_eq!(root.a().pow(4 * r), Cyclotomic::one(root.level()));
            assert_eq!(root.a_inv().pow(4), root.omega());
        }
    }
}
