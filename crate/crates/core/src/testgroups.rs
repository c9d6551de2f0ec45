//! Small named groups for unit tests.

use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Permutation from 1-based cycles.
pub fn perm(degree: usize, cycles: &[&[u32]]) -> Permutation {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

fn long_cycle(n: usize) -> Permutation {
    let c: Vec<u32> = (0..n as u32).collect();
    Permutation::from_cycles(n, &[c]).unwrap()
}

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::generate(&[long_cycle(n)], n).unwrap()
}

pub fn symmetric(n: usize) -> FiniteGroup {
    FiniteGroup::generate(&[long_cycle(n), perm(n, &[&[1, 2]])], n).unwrap()
}

pub fn alternating(n: usize) -> FiniteGroup {
    let gens: Vec<Permutation> = (3..=n as u32).map(|k| perm(n, &[&[1, 2, k]])).collect();
    FiniteGroup::generate(&gens, n).unwrap()
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    FiniteGroup::generate(&[long_cycle(n), Permutation::from_images(refl).unwrap()], n).unwrap()
}

/// SL(2,3) as a permutation group on the 8 non-zero vectors of F_3^2.
pub fn sl23() -> FiniteGroup {
    let vecs: Vec<(u32, u32)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vecs.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    FiniteGroup::generate(&[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])], 8).unwrap()
}
