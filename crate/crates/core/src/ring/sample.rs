use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GaussRat, ModP};

/// Reproducible stream of generic specialization points `v0`.
///
/// Points are Gaussian rationals `(a + b i) / c` with small integers; units of
/// finite order (`±1`, `±i`) and zero are skipped so that `q0 = v0^2` is never
/// a root of unity.
#[derive(Clone, Debug)]
pub struct PointSampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_point(&mut self) -> GaussRat {
        loop {
            let re: i64 = self.rng.gen_range(-9..=9);
            let im: i64 = self.rng.gen_range(-3..=3);
            let den: i64 = self.rng.gen_range(1..=7);
            if re == 0 && im == 0 {
                continue;
            }
            // the only roots of unity in Q(i) are ±1 and ±i
            if re * re + im * im == den * den && (re == 0 || im == 0) {
                continue;
            }
            return GaussRat::complex_ratio(re, im, den);
        }
    }

    /// A uniformly random residue `v0` with `v0^8 ≠ 1`.
    pub fn next_mod_point(&mut self) -> ModP {
        use super::Field;
        loop {
            let v0 = ModP::new(self.rng.gen_range(2..ModP::P - 1));
            if !v0.pow(8).is_one() {
                return v0;
            }
        }
    }
}

impl Iterator for PointSampler {
    type Item = GaussRat;
    fn next(&mut self) -> Option<GaussRat> {
        Some(self.next_point())
    }
}
