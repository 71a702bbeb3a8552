//! Deterministic generic points for testing rational identities.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const MAX_REJECTIONS: usize = 4096;
const MAX_ENUMERATED_BITS: u32 = 10;

/// Reproducible stream of nonzero rationals `p/q` with `|p|, q < 2^bit_bound`
/// that avoids an exclusion list.
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
    bit_bound: u32,
    exclusions: Vec<Scalar>,
}

impl Sampler {
    pub fn new(seed: u64, bit_bound: u32, exclusions: &[Scalar]) -> Result<Self> {
        if !(2..=62).contains(&bit_bound) {
            return Err(Error::InvalidArgument(format!("bit_bound {bit_bound} outside 2..=62")));
        }
        Ok(Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            bit_bound,
            exclusions: exclusions.to_vec(),
        })
    }

    pub fn exclude(&mut self, value: Scalar) {
        self.exclusions.push(value);
    }

    fn draw(&mut self) -> Scalar {
        let bound = 1i64 << self.bit_bound;
        let p = self.rng.random_range(1..bound);
        let q = self.rng.random_range(1..bound);
        let p = if self.rng.random_bool(0.5) { -p } else { p };
        Scalar::from_frac(p, q)
    }

    pub fn next_point(&mut self) -> Result<Scalar> {
        for _ in 0..MAX_REJECTIONS {
            let v = self.draw();
            if !self.exclusions.contains(&v) {
                return Ok(v);
            }
        }
        self.enumerate_fallback()
    }

    /// Walks the whole (small) sample space once rejection sampling stalls.
    fn enumerate_fallback(&self) -> Result<Scalar> {
        if self.bit_bound > MAX_ENUMERATED_BITS {
            return Err(Error::SampleSpaceExhausted);
        }
        let bound = 1i64 << self.bit_bound;
        let start = (self.seed % (bound as u64)) as i64;
        for k in 0..bound - 1 {
            let q = 1 + (start + k) % (bound - 1);
            for p in 1..bound {
                for v in [Scalar::from_frac(p, q), Scalar::from_frac(-p, q)] {
                    if !self.exclusions.contains(&v) {
                        return Ok(v);
                    }
                }
            }
        }
        Err(Error::SampleSpaceExhausted)
    }

    /// `count` pairwise distinct points.
    pub fn points(&mut self, count: usize) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let v = self.next_point()?;
            self.exclusions.push(v.clone());
            out.push(v);
        }
        Ok(out)
    }
}

/// One generic point for `seed`.
pub fn sample_generic(seed: u64, bit_bound: u32, exclusions: &[Scalar]) -> Result<Scalar> {
    Sampler::new(seed, bit_bound, exclusions)?.next_point()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let a = sample_generic(1, 8, &[]).unwrap();
        let b = sample_generic(1, 8, &[]).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
        let r = a.as_rational().unwrap();
        assert!(r.numer().magnitude() < &256u32.into());
        assert!(r.denom() < &256.into());
    }

    #[test]
    fn exclusions_are_respected() {
        let excl = [Scalar::one(), Scalar::from_int(-1)];
        let mut s = Sampler::new(9, 2, &excl).unwrap();
        for _ in 0..50 {
            let v = s.next_point().unwrap();
            assert!(!excl.contains(&v));
        }
    }

    #[test]
    fn exhausted_space_is_an_error() {
        // bit_bound 2: p ∈ ±{1,2,3}, q ∈ {1,2,3}
        let mut all = Vec::new();
        for p in 1..4 {
            for q in 1..4 {
                all.push(Scalar::from_frac(p, q));
                all.push(Scalar::from_frac(-p, q));
            }
        }
        assert_eq!(sample_generic(3, 2, &all), Err(Error::SampleSpaceExhausted));
        assert!(sample_generic(3, 1, &[]).is_err());
    }

    #[test]
    fn distinct_points() {
        let pts = Sampler::new(5, 6, &[]).unwrap().points(20).unwrap();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }
}
