//! The shift operators on permutations.

use fairrep_core::Permutation;

/// `shift_i(σ)`: fixes `i`, sends the preimage of `i` to `σ(i)`, and agrees
/// with `σ` elsewhere (0-based `i`).
pub fn shift(i: usize, sigma: &Permutation) -> Permutation {
    let j = sigma.get(i);
    if j == i {
        return sigma.clone();
    }
    let k = sigma.as_slice().iter().position(|&x| x == i).expect("bijection");
    sigma.swap_images(i, k)
}

/// The shift of `σ` toward `target` at position `j`: `σ` with `j` sent to
/// `target(j)` and the previous preimage of `target(j)` sent to `σ(j)`.
/// `shift_toward(σ, I, j) = shift_j(σ)`.
pub fn shift_toward(sigma: &Permutation, target: &Permutation, j: usize) -> Permutation {
    let want = target.get(j);
    let k = sigma.as_slice().iter().position(|&x| x == want).expect("bijection");
    sigma.swap_images(j, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fairrep_core::{distance_unchecked, sim};
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert!(shift(0, &Permutation::identity(3)).is_identity());
        assert!(shift(0, &cyc(3, &[&[1, 2]])).is_identity());
        assert_eq!(shift(0, &cyc(3, &[&[1, 2, 3]])), cyc(3, &[&[2, 3]]));
    }

    #[test]
    fn full_composition_is_identity() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let q = (0..n).fold(p, |acc, i| shift(i, &acc));
                assert!(q.is_identity());
            }
        }
    }

    proptest! {
        #[test]
        fn shift_preserves_sim(
            n in 3usize..=10,
            base in proptest::collection::vec(any::<u32>(), 10),
            pos in proptest::collection::vec(0usize..10, 3),
            cyclic in any::<bool>(),
            i in 0usize..10,
        ) {
            let mut map: Vec<usize> = (0..n).collect();
            map.sort_by_key(|&v| base[v]);
            let sigma = Permutation::new(map).unwrap();
            let (a, b, c) = (pos[0] % n, pos[1] % n, pos[2] % n);
            let tau = if cyclic && a != b && b != c && a != c {
                sigma.swap_images(a, b).swap_images(b, c)
            } else {
                sigma.swap_images(a, b)
            };
            prop_assert!(sim(&sigma, &tau).unwrap());
            let i = i % n;
            prop_assert!(sim(&shift(i, &sigma), &shift(i, &tau)).unwrap());
            prop_assert!(distance_unchecked(&sigma, &shift(i, &sigma)) <= 2);
        }

        #[test]
        fn toward_reduces_distance(n in 2usize..9, seed in proptest::collection::vec(any::<u32>(), 18), j in 0usize..9) {
            let mut a: Vec<usize> = (0..n).collect();
            let mut b: Vec<usize> = (0..n).collect();
            a.sort_by_key(|&v| seed[v]);
            b.sort_by_key(|&v| seed[v + 9]);
            let (s, t) = (Permutation::new(a).unwrap(), Permutation::new(b).unwrap());
            let j = j % n;
            let u = shift_toward(&s, &t, j);
            prop_assert_eq!(u.get(j), t.get(j));
            if s.get(j) != t.get(j) {
                prop_assert!(distance_unchecked(&u, &t) < distance_unchecked(&s, &t));
            }
            prop_assert_eq!(shift_toward(&s, &Permutation::identity(n), j), shift(j, &s));
        }
    }
}
