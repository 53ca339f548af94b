//! Randomised invariants across the solver, checked against small oracles.

use kneser_lab::dihedral::{act_on_vertex, enumerate_shifts, non_shift_witness, predicted_shifts};
use kneser_lab::graph::are_isomorphic;
use kneser_lab::homsolver::{
    chromatic_number, closed_form_chi, find_homomorphism, find_retraction, is_core, verify_homomorphism,
    verify_retraction, CoreVerdict,
};
use kneser_lab::{DihedralElement, FamilySpec, Graph, SearchBudget, SolveOutcome, VertexLabel};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut it = bits.iter();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if *it.next().unwrap() {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Plain exhaustive search over all maps, no pruning beyond edge checks.
fn brute_hom_exists(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let u = map.len();
        if u == g.order() {
            return true;
        }
        for a in 0..h.order() {
            if (0..u).all(|w| !g.has_edge(u, w) || h.has_edge(a, map[w])) {
                map.push(a);
                if go(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g, h, &mut Vec::new())
}

fn brute_chi(g: &Graph) -> usize {
    (0..=g.order()).find(|&c| brute_hom_exists(g, &Graph::complete(c))).unwrap()
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.order(), &edges).unwrap()
}

fn budget() -> SearchBudget {
    SearchBudget::nodes(5_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_search_is_sound_and_complete(g in arb_graph(1, 7), h in arb_graph(1, 5)) {
        let expect = brute_hom_exists(&g, &h);
        match find_homomorphism(&g, &h, &budget()) {
            SolveOutcome::Found(f) => {
                prop_assert!(expect);
                prop_assert!(verify_homomorphism(&g, &h, f.map()));
            }
            SolveOutcome::NotExists => prop_assert!(!expect),
            SolveOutcome::Exhausted(_) => prop_assert!(false, "budget ran out on a tiny instance"),
        }
    }

    #[test]
    fn homomorphic_equivalence_preserves_chi(g in arb_graph(1, 7), h in arb_graph(1, 7)) {
        let there = find_homomorphism(&g, &h, &budget());
        let back = find_homomorphism(&h, &g, &budget());
        let cg = chromatic_number(&g, &budget()).unwrap().chi;
        let ch = chromatic_number(&h, &budget()).unwrap().chi;
        if there.is_found() {
            prop_assert!(cg <= ch);
        }
        if there.is_found() && back.is_found() {
            prop_assert_eq!(cg, ch);
        }
    }

    #[test]
    fn chi_matches_oracle_and_drops_by_at_most_one(g in arb_graph(2, 8), v in 0usize..8) {
        let c = chromatic_number(&g, &budget()).unwrap();
        prop_assert_eq!(c.chi, brute_chi(&g));
        prop_assume!(v < g.order());
        let d = chromatic_number(&g.delete_vertex(v).unwrap(), &budget()).unwrap().chi;
        prop_assert!(d == c.chi || d + 1 == c.chi);
    }

    #[test]
    fn isomorphism_invariance(g in arb_graph(1, 8), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert!(are_isomorphic(&g, &h).is_some());
        prop_assert_eq!(
            chromatic_number(&g, &budget()).unwrap().chi,
            chromatic_number(&h, &budget()).unwrap().chi
        );
        prop_assert_eq!(
            is_core(&g, &budget()).unwrap().is_core(),
            is_core(&h, &budget()).unwrap().is_core()
        );
    }

    #[test]
    fn core_iff_no_proper_retract(g in arb_graph(1, 6)) {
        let n = g.order();
        let verdict = is_core(&g, &budget()).unwrap();
        let mut proper_retract = false;
        for mask in 1u32..(1 << n) - 1 {
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if let SolveOutcome::Found(r) = find_retraction(&g, &keep, &budget()) {
                prop_assert!(verify_retraction(&g, &keep, r.map()));
                proper_retract = true;
                break;
            }
        }
        prop_assert_eq!(verdict.is_core(), !proper_retract);
        if let CoreVerdict::NotCore { endomorphism, missed } = verdict {
            prop_assert!(verify_homomorphism(&g, &g, endomorphism.map()));
            prop_assert!(!endomorphism.map().contains(&missed));
        }
    }

    #[test]
    fn proven_closed_forms_match_solver(k in 2usize..4, s in 2usize..5, extra in 0usize..4) {
        let n = k * s + extra;
        prop_assume!(n <= 12);
        let spec = FamilySpec::StableKneser { n, k, s };
        let f = closed_form_chi(&spec).unwrap();
        prop_assume!(f.proven);
        let g = spec.build().unwrap();
        prop_assert_eq!(chromatic_number(&g, &budget()).unwrap().chi, f.value);
    }

    #[test]
    fn circular_and_cycle_power_forms(n in 3usize..16, k in 1usize..6) {
        for spec in [FamilySpec::Circular { n, k }, FamilySpec::CyclePower { n, a: k }] {
            if let Ok(g) = spec.build() {
                let f = closed_form_chi(&spec).unwrap();
                prop_assert!(f.proven);
                prop_assert_eq!(chromatic_number(&g, &budget()).unwrap().chi, f.value, "{}", spec);
            }
        }
    }

    #[test]
    fn predicted_shifts_match_enumeration(k in 2usize..4, s in 2usize..5, extra in 1usize..7) {
        let n = k * s + extra;
        prop_assume!(n <= 16);
        let g = FamilySpec::StableKneser { n, k, s }.build().unwrap();
        let found = enumerate_shifts(&g).unwrap();
        let predicted = predicted_shifts(n, k, s).unwrap();
        prop_assert_eq!(&found.members, &predicted.members);
        for e in DihedralElement::all(n).unwrap() {
            if e.is_identity() || found.members.contains(&e) {
                continue;
            }
            // the witness is a vertex not sent to a neighbour
            let w = non_shift_witness(&e, n, k, s).unwrap();
            prop_assert!(g.find_label(&VertexLabel::Subset(w.clone())).is_some());
            let img = act_on_vertex(&e, &w).unwrap();
            prop_assert!(!w.is_disjoint(&img), "{} sends {:?} to {:?}", e, w, img);
        }
    }
}
