use cliquekern::dominance::{permutation_count, rank_tuple};
use cliquekern::generator::XorShift64Star;
use cliquekern::io::{parse_dimacs, parse_matrix, write_matrix};
use cliquekern::oracle::{clique_number, is_clique, max_clique_exhaustive};
use cliquekern::struction::default_pivot;
use cliquekern::{
    edge_color_index, enumerate_k_cliques, generate, greedy_color, lift_clique, max_clique,
    node_color_index, reduce_by_color_index, run_pass, struction_with, unrank_tuple, DominanceRule,
    ExecMode, GenSpec, Graph, StructionOptions,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

#[derive(Debug, Clone)]
enum Op {
    AddEdge(usize, usize),
    RemoveEdge(usize, usize),
    RemoveVertex(usize),
}

fn arb_ops(n: usize) -> impl Strategy<Value = Vec<Op>> {
    let op = prop_oneof![
        (0..n, 0..n).prop_map(|(u, v)| Op::AddEdge(u, v)),
        (0..n, 0..n).prop_map(|(u, v)| Op::RemoveEdge(u, v)),
        (0..n).prop_map(Op::RemoveVertex),
    ];
    proptest::collection::vec(op, 0..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_stays_consistent(ops in arb_ops(12)) {
        let mut g = Graph::new(12);
        for op in ops {
            match op {
                Op::AddEdge(u, v) => { let _ = g.add_edge(u, v); }
                Op::RemoveEdge(u, v) => { let _ = g.remove_edge(u, v); }
                Op::RemoveVertex(v) => { let _ = g.remove_vertex(v); }
            }
            prop_assert!(g.validate().is_ok(), "{:?}", g.validate());
            prop_assert_eq!(g.edges().count(), g.edge_count());
            for v in g.active_vertices() {
                prop_assert!(!g.adjacent(v, v));
            }
        }
    }

    #[test]
    fn deletion_counters_balance(g in arb_graph(14), seed in any::<u64>()) {
        let initial = g.edge_count();
        let mut g = g;
        let mut rng = XorShift64Star::new(seed);
        for _ in 0..10 {
            let v = (rng.next_u64() % g.n() as u64) as usize;
            if g.is_active(v) {
                g.remove_vertex(v).unwrap();
            }
        }
        prop_assert_eq!(initial - g.deleted_edges(), g.edge_count());
        prop_assert_eq!(g.n() - g.deleted_vertices(), g.active_count());
    }

    #[test]
    fn matrix_round_trip(g in arb_graph(16)) {
        let mut buf = Vec::new();
        write_matrix(&g, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        prop_assert_eq!(text.lines().count(), g.n() * g.n());
        prop_assert_eq!(parse_matrix(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_agrees_with_matrix(g in arb_graph(12)) {
        let mut text = format!("c random\np edge {} {}\n", g.n(), g.edge_count());
        for (u, v) in g.edges() {
            text.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        prop_assert_eq!(parse_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn unrank_is_a_bijection(n in 1usize..9, arity in 1usize..5, pick in any::<u64>()) {
        prop_assume!(arity <= n);
        let count = permutation_count(n, arity).unwrap();
        let index = pick % count;
        let t = unrank_tuple(index, n, arity).unwrap();
        prop_assert_eq!(t.len(), arity);
        prop_assert!(t.iter().all(|&v| v < n));
        let mut sorted = t.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), arity);
        prop_assert_eq!(rank_tuple(&t, n).unwrap(), index);
        if index + 1 < count {
            prop_assert!(t < unrank_tuple(index + 1, n, arity).unwrap());
        }
    }

    #[test]
    fn generator_matches_request(n in 2usize..40, frac in 0.0f64..=1.0, seed in any::<u64>()) {
        let lo = n - 1;
        let hi = n * (n - 1) / 2;
        let m = lo + ((hi - lo) as f64 * frac) as usize;
        let g = generate(GenSpec::new(n, m, seed).unwrap()).unwrap();
        prop_assert_eq!(g.edge_count(), m);
        prop_assert_eq!(g.active_count(), n);
        for v in 1..n {
            prop_assert!(g.adjacent(v - 1, v), "path edge {} missing", v);
        }
        prop_assert_eq!(&g, &generate(GenSpec::new(n, m, seed).unwrap()).unwrap());
    }

    #[test]
    fn color_index_bounds(g in arb_graph(12)) {
        let c = greedy_color(&g);
        prop_assert!(c.validate(&g).is_ok());
        for v in g.active_vertices() {
            let idx = node_color_index(&g, &c, v).unwrap();
            prop_assert!(idx <= g.degree(v));
            prop_assert!(idx <= c.k_colors());
        }
        for (u, v) in g.edges() {
            let common = g.row(u).intersection(g.row(v)).count();
            prop_assert!(edge_color_index(&g, &c, u, v).unwrap() <= common);
        }
    }

    #[test]
    fn color_index_keeps_k_cliques(g in arb_graph(11), k in 2usize..6) {
        let c = greedy_color(&g);
        let before = enumerate_k_cliques(&g, k).unwrap();
        let mut reduced = g.clone();
        reduce_by_color_index(&mut reduced, &c, k).unwrap();
        prop_assert_eq!(before, enumerate_k_cliques(&reduced, k).unwrap());
    }

    #[test]
    fn oracles_agree(g in arb_graph(14)) {
        let bb = max_clique(&g).unwrap();
        let ex = max_clique_exhaustive(&g).unwrap();
        prop_assert_eq!(bb.size, ex.size);
        prop_assert_eq!(bb.size, clique_number(&g));
        prop_assert!(is_clique(&g, &bb.members));
        prop_assert_eq!(bb.members.len(), bb.size);
    }

    #[test]
    fn struction_drops_omega_by_one(g in arb_graph(10)) {
        let omega = clique_number(&g);
        prop_assume!(omega >= 2);
        let pivot = default_pivot(&g).unwrap();
        let res = struction_with(&g, pivot, StructionOptions::unbounded()).unwrap();
        prop_assert!(res.graph.validate().is_ok());
        prop_assert_eq!(res.node_origin.len(), res.graph.n());
        // Disconnected inputs: the pivot's component may hold a smaller clique.
        let derived = clique_number(&res.graph);
        prop_assert!(derived < omega);
        if derived > 0 {
            let best = cliquekern::Oracle::with_cap(usize::MAX).max_clique(&res.graph).unwrap();
            let lifted = lift_clique(&res, &best.members).unwrap();
            prop_assert!(is_clique(&g, &lifted));
            prop_assert_eq!(lifted.len(), derived + 1);
        }
    }

    #[test]
    fn vertex_rule_serial_equals_parallel(g in arb_graph(24), workers in 1usize..5) {
        let mut s = g.clone();
        let mut p = g.clone();
        run_pass(&mut s, DominanceRule::VertexDom, ExecMode::Serial);
        run_pass(&mut p, DominanceRule::VertexDom, ExecMode::parallel(workers));
        prop_assert_eq!(s, p);
    }

    #[test]
    fn every_rule_preserves_omega(g in arb_graph(13), workers in 1usize..4) {
        let omega = clique_number(&g);
        for rule in DominanceRule::ALL {
            for exec in [ExecMode::Serial, ExecMode::parallel(workers)] {
                let mut k = g.clone();
                let report = run_pass(&mut k, rule, exec);
                prop_assert!(k.validate().is_ok());
                prop_assert_eq!(clique_number(&k), omega, "{} {:?}", rule, exec);
                prop_assert_eq!(report.deleted_edges, k.deleted_edges());
                prop_assert_eq!(report.deleted_vertices, k.deleted_vertices());
                prop_assert_eq!(g.edge_count() - report.deleted_edges, k.edge_count());
            }
        }
    }
}

/// Variance of the degree sequence, a proxy for how uneven endpoints are.
fn degree_variance(g: &Graph) -> f64 {
    let n = g.n() as f64;
    let degs: Vec<f64> = (0..g.n()).map(|v| g.degree(v) as f64).collect();
    let mean = degs.iter().sum::<f64>() / n;
    degs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / n
}

#[test]
fn generator_is_skewed_toward_low_indices() {
    let n = 200;
    let m = 4000;
    let mut uniform = Graph::path(n);
    let mut rng = XorShift64Star::new(9);
    while uniform.edge_count() < m {
        let u = (rng.next_u64() % n as u64) as usize;
        let v = (rng.next_u64() % n as u64) as usize;
        if u != v {
            uniform.add_edge(u, v).unwrap();
        }
    }
    let skewed = generate(GenSpec::new(n, m, 9).unwrap()).unwrap();
    assert!(degree_variance(&skewed) > 4.0 * degree_variance(&uniform));
    let low: usize = (0..n / 4).map(|v| skewed.degree(v)).sum();
    let high: usize = (3 * n / 4..n).map(|v| skewed.degree(v)).sum();
    assert!(low > 2 * high, "low {low} high {high}");
}

#[test]
fn generated_graphs_are_connected() {
    for seed in 0..20 {
        let g = generate(GenSpec::with_default_edges(60, seed).unwrap()).unwrap();
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in g.row(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}
