//! Seeded sampling of valid presentations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Corner, Green, Presentation};
use crate::error::{Error, Result};
use crate::exact::IVec2;

/// Rejection-sampling attempts before giving up.
pub const RANDOM_RETRY_CAP: usize = 10_000;

/// Deterministic in `seed`: basis entries in `[-bound, bound]` with
/// `2 <= |det| <= bound`, translation one of the four corners, each green
/// trivial with probability 1/2 or ending within distance 2 of its corner.
pub fn random_presentation(seed: u64, bound: i64) -> Result<Presentation> {
    if bound < 2 {
        return Err(Error::BadParameter(format!("degree bound must be at least 2, got {bound}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = bound.min(4);
    for _ in 0..RANDOM_RETRY_CAP {
        let mut v = || IVec2::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        let (l1, l2) = (v(), v());
        let det = l1.cross(&l2);
        let det = det.magnitude().clone();
        if det < 2u32.into() || det > (bound as u64).into() {
            continue;
        }
        let mut p = Presentation::new(
            l1,
            l2,
            IVec2::zero(),
            [Green::Trivial, Green::Trivial, Green::Trivial, Green::Trivial],
        );
        p.translation = p.corner(Corner::ALL[rng.gen_range(0..4)]);
        for e in Corner::ALL {
            if rng.gen_bool(0.5) {
                let c = p.corner(e);
                let off = IVec2::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
                p.green[e.index()] = Green::Far(&c + &off);
            }
        }
        if p.validate().is_empty() {
            return Ok(p);
        }
    }
    Err(Error::ExhaustedRetries(RANDOM_RETRY_CAP))
}
