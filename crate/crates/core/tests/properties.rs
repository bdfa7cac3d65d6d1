use proptest::prelude::*;
use typegraph_core::{is_k3_type, mod_reduce, nu_in, Card, Modulus, FACES};

fn brute_face(x: u32, y: u32, z: u32) -> bool {
    // some color is the sum of the other two
    x + y == z || x + z == y || y + z == x
}

fn sorted_faces(card: &Card) -> Vec<[u32; 3]> {
    let mut f: Vec<[u32; 3]> = card.faces().iter().map(|t| t.colors()).collect();
    f.sort_unstable();
    f
}

fn all_cards(cap: u32) -> impl Iterator<Item = Card> {
    let base = cap + 1;
    (0..base.pow(6)).map(move |mut code| {
        let mut colors = [0u32; 6];
        for slot in colors.iter_mut() {
            *slot = code % base;
            code /= base;
        }
        Card(colors)
    })
}

proptest! {
    #[test]
    fn orbit_permutes_faces(a in 0u32..20, b in 0u32..20, d in 0u32..20, pick in 0usize..8) {
        let c = if pick % 2 == 0 { a + b } else { a.abs_diff(b) };
        let e = if pick / 2 % 2 == 0 { c + d } else { c.abs_diff(d) };
        let card = Card([a, b, c, d, e, 0]);
        let options: Vec<u32> = nu_in(Modulus::Integers, a, e)
            .intersect(&nu_in(Modulus::Integers, b, d))
            .iter()
            .collect();
        prop_assume!(!options.is_empty());
        let card = card.with(5, options[pick / 4 % options.len()]);
        prop_assert!(card.is_valid(Modulus::Integers));
        let reference = sorted_faces(&card);
        for member in card.orbit() {
            prop_assert_eq!(sorted_faces(&member), reference.clone());
        }
    }

    #[test]
    fn reduction_sign_symmetry(m in 0u64..1_000_000, half in 1u32..500) {
        let n = 2 * half + 1;
        let back = n as u64 - m % n as u64;
        prop_assert_eq!(mod_reduce(m, n).unwrap(), mod_reduce(back, n).unwrap());
        prop_assert!(mod_reduce(m, n).unwrap() <= (n - 1) / 2);
    }

    #[test]
    fn nu_commutes_and_closes_faces(a in 0u32..1000, b in 0u32..1000, half in 1u32..300) {
        let z = Modulus::Integers;
        prop_assert_eq!(nu_in(z, a, b), nu_in(z, b, a));
        for x in nu_in(z, a, b).iter() {
            prop_assert!(is_k3_type([a, b, x], z));
        }
        let n = 2 * half + 1;
        let m = Modulus::Cyclic(n);
        let (a, b) = (a % (half + 1), b % (half + 1));
        prop_assert_eq!(nu_in(m, a, b), nu_in(m, b, a));
        for x in nu_in(m, a, b).iter() {
            prop_assert!(is_k3_type([a, b, x], m));
        }
    }
}

#[test]
fn cap8_validity_matches_brute_force() {
    let mut valid = 0;
    for card in all_cards(8) {
        let c = card.colors();
        let brute = FACES.iter().all(|f| brute_face(c[f[0]], c[f[1]], c[f[2]]));
        assert_eq!(card.is_valid(Modulus::Integers), brute, "{card}");
        if brute {
            valid += 1;
            let canon = card.canonical();
            assert_eq!(canon.canonical(), canon);
            assert!(canon <= card);
            assert!(canon.is_valid(Modulus::Integers));
        }
    }
    assert!(valid > 0);
}

#[test]
fn face_valid_cards_are_realised_modulo_small_n() {
    for n in [7u32, 13, 15] {
        let m = Modulus::Cyclic(n);
        let k = (n - 1) / 2;
        let mut checked = 0;
        for card in all_cards(k).filter(|c| c.is_valid(m) && c.vertex_check(m).pairs_ok) {
            assert!(card.is_sign_consistent(m), "{card} mod {n}");
            checked += 1;
        }
        assert!(checked > 0);
    }
}

#[test]
fn repeated_pairs_are_not_realised() {
    let card: Card = "211211".parse().unwrap();
    assert!(card.is_valid(Modulus::Integers));
    assert!(!card.is_sign_consistent(Modulus::Integers));
}

#[test]
fn integer_cards_are_realised_up_to_cap8() {
    let z = Modulus::Integers;
    for card in all_cards(8).filter(|c| c.is_valid(z) && c.vertex_check(z).pairs_ok) {
        assert!(card.is_sign_consistent(z), "{card}");
    }
}
