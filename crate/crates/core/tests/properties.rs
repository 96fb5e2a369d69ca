use indicolor::corpus;
use indicolor::format::{parse_matroid, write_matroid};
use indicolor::game::{GameState, Mode, Role};
use indicolor::oracle::{
    bf_cover_exists, bf_tight_sets, covering_bound, solve_indicated, solve_modified,
};
use indicolor::union::{
    chromatic_number, find_proper_tight_set, partition_ground_set, surplus, verify_cover, Cover,
};
use indicolor::{ElementSet, Matroid, Palette};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn palette_from_seed(seed: u64, max_n: usize, max_k: usize) -> Palette {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=max_k);
    if rng.gen_bool(0.5) {
        Palette::copies(&corpus::random_matroid(&mut rng, n), k)
    } else {
        Palette::new(
            (0..k)
                .map(|_| corpus::random_matroid(&mut rng, n))
                .collect(),
        )
        .unwrap()
    }
}

/// Every cover of the palette, by enumerating labelings.
fn all_covers(palette: &Palette) -> Vec<Cover> {
    let ground = palette.ground().to_vec();
    let k = palette.k();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for code in 0..k.pow(ground.len() as u32) {
        let mut parts = vec![ElementSet::empty(); k];
        let mut x = code;
        for &e in &ground {
            parts[x % k].insert(e);
            x /= k;
        }
        if parts
            .iter()
            .enumerate()
            .all(|(i, &p)| palette[i].is_independent(p).unwrap())
        {
            out.push(Cover::from_parts(parts));
        }
    }
    out
}

/// Rank of an edge set as the size of a spanning forest found by search.
fn forest_rank(vertices: usize, edges: &[(usize, usize)], set: ElementSet) -> usize {
    let mut component: Vec<usize> = (0..vertices).collect();
    let mut rank = 0;
    for e in set {
        let (u, v) = edges[e];
        let (cu, cv) = (component[u], component[v]);
        if cu != cv {
            rank += 1;
            for c in component.iter_mut() {
                if *c == cv {
                    *c = cu;
                }
            }
        }
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tight_set_search_matches_enumeration(seed in any::<u64>()) {
        let palette = palette_from_seed(seed, 7, 3);
        let tight = bf_tight_sets(&palette).unwrap();
        let covers = all_covers(&palette);
        // Any cover, not just the one the union engine builds, finds a
        // tight set exactly when one exists.
        for cover in covers.iter().step_by(covers.len().div_ceil(8).max(1)) {
            let found = find_proper_tight_set(&palette, cover).unwrap();
            prop_assert_eq!(found.is_some(), !tight.is_empty());
            if let Some(t) = found {
                prop_assert!(tight.contains(&t.set()));
                prop_assert_eq!(surplus(&palette, t.set()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn union_outcome_is_certified(seed in any::<u64>()) {
        let palette = palette_from_seed(seed, 9, 3);
        let outcome = partition_ground_set(&palette);
        prop_assert_eq!(outcome.is_cover(), bf_cover_exists(&palette).unwrap());
        match outcome.cover() {
            Some(cover) => prop_assert!(verify_cover(&palette, cover)),
            None => {
                let indicolor::UnionOutcome::Violator(v) = outcome else { unreachable!() };
                prop_assert!(surplus(&palette, v.set).unwrap() < 0);
            }
        }
    }

    #[test]
    fn chromatic_number_matches_covering_formula(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=9);
        let m = corpus::random_matroid(&mut rng, n);
        prop_assume!(m.is_loopless());
        prop_assert_eq!(chromatic_number(&m).unwrap(), covering_bound(&m).unwrap());
    }

    #[test]
    fn game_values_are_monotone_in_colors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=6);
        let m = corpus::random_matroid(&mut rng, n);
        let mut alice_won = false;
        for k in 0..=3 {
            let palette = Palette::copies(&m, k);
            let classic = solve_indicated(&palette).unwrap();
            let modified = solve_modified(&palette).unwrap();
            prop_assert!(!alice_won || classic == Role::Alice);
            prop_assert_eq!(classic == Role::Alice, bf_cover_exists(&palette).unwrap());
            prop_assert_eq!(classic, modified);
            alice_won = classic == Role::Alice;
        }
    }

    #[test]
    fn graphic_rank_counts_forest_edges(
        vertices in 1usize..7,
        raw in prop::collection::vec((0usize..7, 0usize..7), 0..12),
    ) {
        let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % vertices, v % vertices)).collect();
        let m = Matroid::graphic(vertices, edges.clone()).unwrap();
        for set in m.ground_set().subsets().take(512) {
            prop_assert_eq!(m.rank(set).unwrap(), forest_rank(vertices, &edges, set));
        }
    }

    #[test]
    fn file_format_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(0..=8);
        let m = corpus::random_matroid(&mut rng, n);
        let text = write_matroid(&m).unwrap();
        let back = parse_matroid(&text).unwrap();
        prop_assert_eq!(back.ground_set(), m.ground_set());
        for set in m.ground_set().subsets() {
            prop_assert_eq!(back.rank(set).unwrap(), m.rank(set).unwrap());
        }
    }
}

#[test]
fn named_tight_sets() {
    let palette = Palette::copies(&corpus::two_pairs(), 2);
    let cover = partition_ground_set(&palette).into_cover().unwrap();
    let t = find_proper_tight_set(&palette, &cover).unwrap().unwrap();
    assert_eq!(t.set(), [0, 1].iter().collect());
    // K4 with two colors is a union of two spanning trees with nothing tight inside.
    let palette = Palette::copies(&corpus::k4(), 2);
    let cover = partition_ground_set(&palette).into_cover().unwrap();
    assert!(find_proper_tight_set(&palette, &cover).unwrap().is_none());
}

#[test]
fn modified_game_needs_a_cover_for_alice() {
    // Two parallel elements and one color: Bob wins either way.
    let u12 = Matroid::uniform(2, 1).unwrap();
    let state = GameState::new(Palette::copies(&u12, 1), Mode::Modified).unwrap();
    assert!(!state.is_feasible());
    assert_eq!(solve_modified(state.palette()).unwrap(), Role::Bob);
}
