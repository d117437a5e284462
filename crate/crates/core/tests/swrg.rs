use std::collections::BTreeMap;

use anticode::swrg::{walk_counts_graph, Graph};
use anticode::*;

fn limits() -> Limits {
    Limits::default()
}

fn matrix_power(adj: &[Vec<u128>], l: usize) -> Vec<Vec<u128>> {
    let v = adj.len();
    let mut acc: Vec<Vec<u128>> = (0..v)
        .map(|i| (0..v).map(|j| (i == j) as u128).collect())
        .collect();
    for _ in 0..l {
        let mut next = vec![vec![0u128; v]; v];
        for i in 0..v {
            for t in 0..v {
                if acc[i][t] != 0 {
                    for j in 0..v {
                        next[i][j] += acc[i][t] * adj[t][j];
                    }
                }
            }
        }
        acc = next;
    }
    acc
}

fn cayley_adjacency(code: &LinearCode) -> Vec<Vec<u128>> {
    let k = code.k();
    let v = 1usize << k;
    let mut adj = vec![vec![0u128; v]; v];
    for j in 0..code.n() {
        let c = (0..k).fold(0usize, |acc, i| {
            (acc << 1) | code.generator().get(i, j) as usize
        });
        for (x, row) in adj.iter_mut().enumerate() {
            row[x ^ c] += 1;
        }
    }
    adj
}

fn wzz_three_weight() -> LinearCode {
    let nine = complement(&two_subspace_code(2).unwrap(), 4).unwrap();
    complement(&nine, 6).unwrap()
}

#[test]
fn unbalanced_three_weight_code_fails_conditions() {
    let code = wzz_three_weight();
    let wd = code.weight_distribution(&limits()).unwrap();
    assert_eq!(wd.nonzero_weights(), vec![26, 28, 32]);
    assert_eq!((code.n(), code.k()), (54, 6));
    for l in [3, 5] {
        let cert = verify_swrg(&code, l, &limits()).unwrap();
        assert_eq!(cert.verdict, SwrgVerdict::ConditionsUnmet);
        assert!(!cert.conditions.weight_sum);
        assert!(!cert.conditions.middle_weight);
        let WalkCounts::NotConstant { first, second } = cert.walk_counts else {
            panic!("walk counts should vary for l = {l}");
        };
        let power = matrix_power(&cayley_adjacency(&code), l);
        for (a, b, count) in [first, second] {
            assert_eq!(power[a][b], count);
        }
        assert_ne!(first.2, second.2);
    }
}

#[test]
fn balanced_code_walks_match_matrix_power() {
    let code = complement(&kasami_code(2).unwrap(), 6).unwrap();
    let cert = verify_swrg(&code, 3, &limits()).unwrap();
    let power = matrix_power(&cayley_adjacency(&code), 3);
    let adj = cayley_adjacency(&code);
    let WalkCounts::Constant(p) = cert.walk_counts else {
        panic!("expected constant walks")
    };
    for i in 0..power.len() {
        for j in 0..power.len() {
            let want = if i == j {
                p.nu
            } else if adj[i][j] > 0 {
                p.lambda
            } else {
                p.mu.unwrap()
            };
            assert_eq!(power[i][j], want, "pair ({i}, {j})");
        }
    }
    assert_eq!(cert.analytic, Some(p));
    assert_eq!(cert.verdict, SwrgVerdict::IsLSwrg);
}

#[test]
fn spectrum_matches_character_sums() {
    for code in [
        wzz_three_weight(),
        complement(&kasami_code(2).unwrap(), 6).unwrap(),
    ] {
        let k = code.k();
        let mut direct = BTreeMap::new();
        for x in 0..1usize << k {
            let sum: i64 = (0..code.n())
                .map(|j| {
                    let parity = (0..k)
                        .filter(|&i| (x >> (k - 1 - i)) & 1 == 1)
                        .map(|i| code.generator().get(i, j))
                        .sum::<u32>();
                    if parity % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            *direct.entry(sum).or_insert(0u64) += 1;
        }
        let wd = code.weight_distribution(&limits()).unwrap();
        let from_wd: BTreeMap<i64, u64> = spectrum_from_wd(&wd).unwrap().into_iter().collect();
        assert_eq!(from_wd, direct);
    }
}

#[test]
fn rejects_inputs_outside_the_theory() {
    let simplex = simplex(2, 4).unwrap();
    assert!(matches!(
        verify_swrg(&simplex, 3, &limits()),
        Err(Error::InvalidParameter(_))
    ));
    let code = wzz_three_weight();
    for l in [1, 2, 4] {
        assert!(verify_swrg(&code, l, &limits()).is_err());
    }
    let ternary = two_subspace_code(3).unwrap();
    assert!(verify_swrg(&ternary, 3, &limits()).is_err());
    let tight = Limits {
        graph_dimension: 4,
        ..limits()
    };
    assert!(matches!(
        verify_swrg(&code, 3, &tight),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn petersen_graph_is_walk_regular_but_star_is_rejected() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let petersen = Graph::from_edges(10, &edges).unwrap();
    let mut adj = vec![vec![0u128; 10]; 10];
    for &(a, b) in &edges {
        adj[a][b] = 1;
        adj[b][a] = 1;
    }
    for l in [3, 5] {
        let power = matrix_power(&adj, l);
        let WalkCounts::Constant(p) = walk_counts_graph(&petersen, l).unwrap() else {
            panic!("Petersen graph should be {l}-walk-regular");
        };
        assert_eq!(p.nu, power[0][0]);
        assert_eq!(p.lambda, power[0][1]);
        assert_eq!(p.mu, Some(power[0][2]));
    }
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(walk_counts_graph(&star, 3).is_err());
}
