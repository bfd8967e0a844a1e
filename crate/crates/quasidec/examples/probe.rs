use quasidec::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for n in [7usize, 9, 13, 21] {
        let g = Graph::complete(n);
        let d = euler::cycle_peel_orientation(&g).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(3);
        let t0 = std::time::Instant::now();
        let res = factor::hamilton_decompose_digraph(&d, &mut r, 100);
        println!("orient(K{n}) rho={}: {:?} in {:?}", (n-1)/2,
            res.as_ref().map(|c| c.len()).map_err(|e| e.to_string()), t0.elapsed());
    }
    // Oriented evenized gnp remainder at the sizes route B sees
    for (n, seed) in [(30usize, 17u64), (60, 4)] {
        let g = gnp::gen_gnp(n, 0.5, seed).unwrap();
        let prof = g.degree_profile();
        let (sub, map) = g.induced_subgraph(&prof.odd_set).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(9);
        let m = hamilton::perfect_matching_even_set(&sub, &mut r, 100).unwrap();
        let even = g.remove_edges(m.iter().map(|&(u, v)| graph::canon(map[u], map[v])).collect::<Vec<_>>().iter()).unwrap();
        let params = params::QuasirandomParams::profile_for_graph(0.5, n, &even.degree_profile()).unwrap();
        let oriented = orient::eulerian_orientation_quasirandom(&even, &params, &OrientationConfig::default(), &mut r).unwrap();
        let t0 = std::time::Instant::now();
        let res = cycles::decompose_cycles_directed(&oriented, &PairList::empty(), &params, &mut r);
        println!("directed scheduler on oriented gnp({n}): {:?} in {:?}",
            res.as_ref().map(|c| c.len()).map_err(|e| e.to_string()), t0.elapsed());
    }
}
