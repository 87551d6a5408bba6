//! Bitmask branch-and-bound kernels over universes of at most 64 elements.

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn ones(x: u64) -> usize {
    x.count_ones() as usize
}

pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(i)
    })
}

/// Minimum number of `sets` whose union contains `universe`, as indices in
/// increasing order. `None` if some element lies in no set.
pub(crate) fn min_set_cover(universe: u64, sets: &[u64]) -> Option<Vec<usize>> {
    let reachable = sets.iter().fold(0u64, |acc, &s| acc | s);
    if universe & !reachable != 0 {
        return None;
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); 64];
    for e in bits(universe) {
        holders[e] = (0..sets.len()).filter(|&s| sets[s] & bit(e) != 0).collect();
    }
    let mut best = greedy_cover(universe, sets);
    let mut chosen = Vec::new();
    cover_rec(universe, sets, &holders, &mut chosen, &mut best);
    best.sort_unstable();
    Some(best)
}

fn greedy_cover(universe: u64, sets: &[u64]) -> Vec<usize> {
    let mut left = universe;
    let mut out = Vec::new();
    while left != 0 {
        let s = (0..sets.len())
            .max_by_key(|&s| (ones(sets[s] & left), std::cmp::Reverse(s)))
            .unwrap();
        out.push(s);
        left &= !sets[s];
    }
    out
}

fn cover_rec(left: u64, sets: &[u64], holders: &[Vec<usize>], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if left == 0 {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + 1 >= best.len() {
        return;
    }
    let widest = sets.iter().map(|&s| ones(s & left)).max().unwrap_or(0);
    if widest == 0 {
        return;
    }
    if chosen.len() + ones(left).div_ceil(widest) >= best.len() {
        return;
    }
    // Branch on the element with the fewest candidate sets.
    let e = bits(left).min_by_key(|&e| (holders[e].len(), e)).unwrap();
    let mut options = holders[e].clone();
    options.sort_by_key(|&s| (std::cmp::Reverse(ones(sets[s] & left)), s));
    for s in options {
        chosen.push(s);
        cover_rec(left & !sets[s], sets, holders, chosen, best);
        chosen.pop();
    }
}

/// A maximum independent set of the graph with adjacency masks `adj`
/// (at most 64 vertices, no self loops).
pub(crate) fn max_independent_set(adj: &[u64]) -> u64 {
    debug_assert!(adj.len() <= 64);
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        bit(adj.len()) - 1
    };
    let mut best = 0;
    mis_rec(adj, all, 0, &mut best);
    best
}

fn mis_rec(adj: &[u64], mut cand: u64, mut cur: u64, best: &mut u64) {
    // Vertices of degree at most one can always be taken.
    loop {
        let low = bits(cand).find(|&v| ones(adj[v] & cand) <= 1);
        match low {
            Some(v) => {
                cur |= bit(v);
                cand &= !(adj[v] | bit(v));
            }
            None => break,
        }
    }
    if cand == 0 {
        if ones(cur) > ones(*best) {
            *best = cur;
        }
        return;
    }
    if ones(cur) + clique_cover_bound(adj, cand) <= ones(*best) {
        return;
    }
    let v = bits(cand).max_by_key(|&v| (ones(adj[v] & cand), std::cmp::Reverse(v))).unwrap();
    mis_rec(adj, cand & !(adj[v] | bit(v)), cur | bit(v), best);
    mis_rec(adj, cand & !bit(v), cur, best);
}

/// Size of a greedy clique partition of `cand`, an upper bound on its
/// independence number.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut count = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !bit(v);
        let mut pool = cand & adj[v];
        while pool != 0 {
            let w = pool.trailing_zeros() as usize;
            cand &= !bit(w);
            pool &= adj[w] & !bit(w);
        }
        count += 1;
    }
    count
}
