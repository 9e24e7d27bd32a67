//! Statevector-level cross-checks of the combinatorial routes.

use proptest::prelude::*;
use stabdim::config::{self, ConfigurationKind};
use stabdim::oracle::{self, CoefficientVector};
use stabdim::stabilizer::{self, Mode};
use stabdim::graph::generate;
use stabdim::{Family, Graph, PauliString};

fn random_graph(n: usize, edge_bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if edge_bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| random_graph(n, &bits))
    })
}

fn connected_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.2f64..0.9).prop_filter_map("disconnected", |(n, seed, p)| {
        generate(Family::Gnp, n, p, seed).ok().filter(Graph::is_connected)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_low_weight_element_stabilizes_the_state(g in graph_strategy(10)) {
        let v = oracle::build_statevector(&g).unwrap();
        for gen in stabilizer::graph_generators(&g) {
            prop_assert!(oracle::is_stabilized(&gen, &v));
        }
        for e in stabilizer::low_weight_elements(&g, Mode::Brute).unwrap() {
            prop_assert_eq!(e.pauli.sign_exp(), 0);
            prop_assert!(e.pauli.weight() <= 2);
            prop_assert!(oracle::is_stabilized(&e.pauli, &v));
        }
    }

    #[test]
    fn product_acts_as_composition(
        n in 1usize..=6,
        seed in any::<u64>(),
        letters in prop::collection::vec((0u8..4, 0u8..4), 6),
        signs in (0u8..4, 0u8..4),
    ) {
        let g = generate(Family::Gnp, n, 0.5, seed).unwrap();
        let v = oracle::build_statevector(&g).unwrap();
        let build = |pick: &dyn Fn(&(u8, u8)) -> u8, sign: u8| {
            let mut s: String = ["+", "+i", "-", "-i"][sign as usize].into();
            for l in &letters[..n] {
                s.push(['I', 'X', 'Y', 'Z'][pick(l) as usize]);
            }
            s.parse::<PauliString>().unwrap()
        };
        let p = build(&|l| l.0, signs.0);
        let q = build(&|l| l.1, signs.1);
        let pq = p.multiply(&q).unwrap();
        let lhs = oracle::apply_pauli(&pq, &v).unwrap();
        let rhs = oracle::apply_pauli(&p, &oracle::apply_pauli(&q, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn brute_and_fast_enumeration_agree(g in connected_strategy(2, 16)) {
        let brute = stabilizer::low_weight_elements(&g, Mode::Brute).unwrap();
        let fast = stabilizer::low_weight_elements(&g, Mode::Fast).unwrap();
        prop_assert_eq!(brute, fast);
    }

    #[test]
    fn oracle_nullity_matches_slot_rank(g in connected_strategy(2, 10)) {
        let d = config::stabilizer_dimension(&g).unwrap();
        prop_assert_eq!(oracle::local_algebra_nullity(&g).unwrap(), d);
    }

    #[test]
    fn component_sum_matches_oracle(g in graph_strategy(9)) {
        let strategy = stabdim::Strategy::default();
        let d = config::stabilizer_dimension_by_components(&g, strategy).unwrap();
        prop_assert_eq!(oracle::local_algebra_nullity(&g).unwrap(), d);
    }

    #[test]
    fn generators_annihilate_and_span_nullspace(g in connected_strategy(2, 8)) {
        let n = g.order();
        let v = oracle::build_statevector(&g).unwrap();
        let gens: Vec<CoefficientVector> = config::detect_configurations(&g)
            .unwrap()
            .iter()
            .map(|c| CoefficientVector::from_slot_pair(&c.lie_generator(), n))
            .collect();
        for c in &gens {
            prop_assert!(oracle::annihilates(c, &v));
        }
        let basis = oracle::nullspace_basis(&g).unwrap();
        let mut joint = basis.clone();
        joint.extend(gens.iter().cloned());
        prop_assert_eq!(oracle::coefficient_rank(&gens), basis.len());
        prop_assert_eq!(oracle::coefficient_rank(&joint), basis.len());
    }

    #[test]
    fn dimension_is_relabeling_invariant(g in connected_strategy(2, 12), shift in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = shift;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s = s.rotate_left(7) ^ 0x9e37_79b9_7f4a_7c15;
        }
        let h = g.permuted(&perm).unwrap();
        let kinds = |g: &Graph| {
            let mut k: Vec<ConfigurationKind> =
                config::detect_configurations(g).unwrap().iter().map(|c| c.kind).collect();
            k.sort();
            k
        };
        prop_assert_eq!(config::stabilizer_dimension(&g).unwrap(), config::stabilizer_dimension(&h).unwrap());
        prop_assert_eq!(kinds(&g), kinds(&h));
    }
}

#[test]
fn layouts_agree_on_named_families() {
    use oracle::{Layout, OracleOptions};
    for n in 2..=9 {
        for f in [Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Tree] {
            let Ok(g) = generate(f, n, 0.0, n as u64) else { continue };
            let split = oracle::local_algebra_nullity_with(&g, &OracleOptions { layout: Layout::Split, ..Default::default() });
            let stacked = oracle::local_algebra_nullity_with(&g, &OracleOptions { layout: Layout::Stacked, ..Default::default() });
            assert_eq!(split.unwrap(), stacked.unwrap(), "{f} n={n}");
        }
    }
}

#[test]
fn every_configuration_has_a_stabilizer_partner() {
    for seed in 0..40 {
        let g = generate(Family::Gnp, 9, 0.4, seed).unwrap();
        if !g.is_connected() {
            continue;
        }
        let v = oracle::build_statevector(&g).unwrap();
        for c in config::detect_configurations(&g).unwrap() {
            let s = config::corresponding_stabilizer_element(&c, g.order());
            assert!(oracle::is_stabilized(&s, &v), "{c:?} -> {s}");
        }
    }
}
