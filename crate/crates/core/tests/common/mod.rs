#![allow(dead_code)]

use mw_core::flip::{apply_move, legal_moves};
use mw_core::{Complex, Label};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<Label> {
    let mut p: Vec<Label> = (1..=n as Label).collect();
    p.shuffle(rng);
    p
}

pub fn random_relabel(c: &Complex, rng: &mut ChaCha8Rng) -> Complex {
    c.relabel(&random_perm(c.n(), rng))
}

/// Random bistellar walk. 0-moves are only drawn while the vertex count is
/// at most `slack` above the start, so the complex stays small.
pub fn random_walk(c: &Complex, steps: usize, slack: usize, rng: &mut ChaCha8Rng) -> Complex {
    let n0 = c.n();
    let mut cur = c.clone();
    for _ in 0..steps {
        let lo = if cur.n() < n0 + slack { 0 } else { 1 };
        let mut kinds: Vec<usize> = (lo..=cur.dim()).collect();
        kinds.shuffle(rng);
        for i in kinds {
            let moves = legal_moves(&cur, i);
            if moves.is_empty() {
                continue;
            }
            let m = &moves[rng.random_range(0..moves.len())];
            cur = apply_move(&cur, m).expect("legal move applies");
            break;
        }
    }
    cur
}

pub fn load(name: &str) -> Complex {
    mw_core::io::catalog::entry(name).expect("catalog entry").complex
}

pub fn data(path: &str) -> Complex {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(path);
    mw_core::io::read_file(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}
