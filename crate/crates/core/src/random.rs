//! Seeded random words, angles and cocycles for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{transversal_word, BraidWord};
use crate::cocycle::{BraidOneCocycle, PureOneCocycle};
use crate::freegroup::FreeWord;
use crate::phase::Angle;

/// A freely reduced braid word of length at most `max_len`.
pub fn random_braid_word<R: Rng + ?Sized>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i32;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, &letters).expect("indices in range")
}

pub fn random_free_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let raw: Vec<(usize, i64)> = (0..len)
        .map(|_| {
            (
                rng.gen_range(1..=rank),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    FreeWord::reduce(rank, &raw).expect("indices in range")
}

/// A pure braid: a random word followed by the inverse transversal of its
/// permutation.
pub fn random_pure_braid<R: Rng + ?Sized>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let w = random_braid_word(rng, n, max_len);
    let t = transversal_word(&w.permutation());
    w.multiply(&t.inverse()).expect("same strands")
}

/// Applies `moves` random braid relations to `b`: inserting `s_i^{±1}s_i^{∓1}`,
/// commuting distant letters, and rewriting `s_i s_{i+1} s_i` (or its inverse)
/// the other way round. The result represents the same braid.
pub fn scramble<R: Rng + ?Sized>(rng: &mut R, b: &BraidWord, moves: usize) -> BraidWord {
    let n = b.strands();
    if n < 2 {
        return b.clone();
    }
    let mut w: Vec<i32> = b.letters().to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(1..n) as i32;
                let s = if rng.gen_bool(0.5) { i } else { -i };
                let p = rng.gen_range(0..=w.len());
                w.splice(p..p, [s, -s]);
            }
            1 => {
                let spots: Vec<usize> = (0..w.len().saturating_sub(1))
                    .filter(|&p| (w[p].abs() - w[p + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&p) = spots.choose(rng) {
                    w.swap(p, p + 1);
                }
            }
            _ => {
                let spots: Vec<usize> = (0..w.len().saturating_sub(2))
                    .filter(|&p| {
                        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
                        a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1
                    })
                    .collect();
                if let Some(&p) = spots.choose(rng) {
                    let (a, b) = (w[p], w[p + 1]);
                    w[p..p + 3].copy_from_slice(&[b, a, b]);
                }
            }
        }
    }
    BraidWord::new(n, &w).expect("indices in range")
}

/// `p/q` with `1 ≤ q ≤ 12`, plus with probability one half an integer
/// combination of up to `symbols` symbols `th1, th2, ...`.
pub fn random_angle<R: Rng + ?Sized>(rng: &mut R, symbols: usize) -> Angle {
    let q = rng.gen_range(1..=12);
    let mut a = Angle::rational(rng.gen_range(0..q), q);
    if symbols > 0 && rng.gen_bool(0.5) {
        for k in 1..=symbols {
            a += &Angle::theta(k).scale(rng.gen_range(-2..=2));
        }
    }
    a
}

pub fn random_torsion_angle<R: Rng + ?Sized>(rng: &mut R) -> Angle {
    random_angle(rng, 0)
}

/// A valid braid cocycle from random `(μ1, μ2, c_i)`.
pub fn random_braid_cocycle<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BraidOneCocycle {
    let mu1 = random_angle(rng, 2);
    let mu2 = random_angle(rng, 2);
    let diag: Vec<Angle> = (1..n).map(|_| random_angle(rng, 3)).collect();
    BraidOneCocycle::build(n, &mu1, &mu2, &diag).expect("n >= 2")
}

pub fn random_pure_cocycle<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PureOneCocycle {
    let mut phi = PureOneCocycle::zero(n).expect("n >= 2");
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                phi = phi.with_entry(i, j, k, random_angle(rng, 2));
            }
        }
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pure_braids_are_pure() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=5 {
            for _ in 0..20 {
                assert!(random_pure_braid(&mut rng, n, 10).is_pure());
            }
        }
    }

    #[test]
    fn scramble_preserves_the_braid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let b = random_braid_word(&mut rng, 4, 12);
            let c = scramble(&mut rng, &b, 20);
            assert!(b.equal(&c).unwrap());
        }
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (
                random_braid_word(&mut rng, 5, 30),
                random_angle(&mut rng, 2),
            )
        };
        assert_eq!(draw(9), draw(9));
    }
}
