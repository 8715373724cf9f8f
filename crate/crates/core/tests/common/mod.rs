//! Independent oracles shared by the integration tests. Nothing here goes
//! through the Bruhat, coset or closure code under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use crystal_forge::io::{load_crystal_graph, CartanDoc, EdgeDoc, ElementDoc, GraphDoc};
use crystal_forge::{CrystalGraph, ElemId, Node, Weight, WeylElement, WeylGroup};

pub const B2_VECTOR: &str = include_str!("../data/b2_vector.json");
pub const B2_SPIN: &str = include_str!("../data/b2_spin.json");

pub fn b2_vector() -> CrystalGraph {
    load_crystal_graph(B2_VECTOR).unwrap()
}

pub fn b2_spin() -> CrystalGraph {
    load_crystal_graph(B2_SPIN).unwrap()
}

/// `B(omega1 + omega2)` in type B2, generated from the two fundamental
/// crystals and pushed through the validating loader.
pub fn b2_adjoint_like() -> CrystalGraph {
    tensor_component(&b2_vector(), &b2_spin())
}

/// Component of `hw(a) ⊗ hw(b)` in `a ⊗ b`, Kashiwara's convention:
/// `f_i` acts on the left factor iff `phi_i(b1) > eps_i(b2)`.
pub fn tensor_component(a: &CrystalGraph, b: &CrystalGraph) -> CrystalGraph {
    let start = (a.highest_weight().unwrap(), b.highest_weight().unwrap());
    let name = |p: (ElemId, ElemId)| format!("{}|{}", a.id(p.0), b.id(p.1));
    let mut seen = HashMap::from([(start, 0usize)]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    let mut edges = Vec::new();
    while let Some((x, y)) = queue.pop_front() {
        for i in a.cartan().nodes() {
            let next = if a.phi(i, x) > b.epsilon(i, y) {
                a.f(i, x).map(|x2| (x2, y))
            } else {
                b.f(i, y).map(|y2| (x, y2))
            };
            if let Some(p) = next {
                if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(p) {
                    slot.insert(order.len());
                    order.push(p);
                    queue.push_back(p);
                }
                edges.push(EdgeDoc {
                    src: name((x, y)),
                    i: a.cartan().label(i),
                    dst: name(p),
                });
            }
        }
    }
    let doc = GraphDoc {
        cartan: CartanDoc::from_cartan(a.cartan()),
        model: None,
        elements: order
            .iter()
            .map(|&p| ElementDoc {
                id: name(p),
                wt: a.wt(p.0).add(b.wt(p.1)).coords().to_vec(),
            })
            .collect(),
        edges,
    };
    load_crystal_graph(&serde_json::to_string(&doc).unwrap()).unwrap()
}

/// `s_{word[0]} ... s_{word[k-1]} rho`, by reflections alone.
pub fn rho_image(weyl: &WeylGroup, word: &[Node]) -> Weight {
    let c = weyl.cartan();
    let mut mu = Weight::new(vec![1; c.rank()]);
    for &i in word.iter().rev() {
        mu = c.reflect(i, &mu);
    }
    mu
}

/// Bruhat order by the subword property against the normal word of `w`.
pub fn bruhat_by_subwords(weyl: &WeylGroup, u: &WeylElement, w: &WeylElement) -> bool {
    let word = w.word();
    let n = word.len();
    (0..1u32 << n).any(|mask| {
        if mask.count_ones() as usize != u.length() {
            return false;
        }
        let sub: Vec<Node> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
        &rho_image(weyl, &sub) == u.key()
    })
}

/// Shortest element of `w W_lambda`, found by scanning the whole group.
pub fn brute_min_rep(weyl: &WeylGroup, all: &[WeylElement], w: &WeylElement, lambda: &Weight) -> WeylElement {
    let target = weyl.apply(w, lambda);
    all.iter()
        .filter(|v| weyl.apply(v, lambda) == target)
        .min_by_key(|v| (v.length(), v.word().to_vec()))
        .unwrap()
        .clone()
}

/// Every Bruhat down-set of `all` (empty included), by brute force over
/// subsets and the subword oracle.
pub fn brute_down_sets(weyl: &WeylGroup, all: &[WeylElement]) -> Vec<BTreeSet<WeylElement>> {
    let n = all.len();
    assert!(n <= 20);
    let below: Vec<Vec<usize>> = (0..n)
        .map(|k| (0..n).filter(|&j| bruhat_by_subwords(weyl, &all[j], &all[k])).collect())
        .collect();
    (0..1u32 << n)
        .filter(|mask| (0..n).all(|k| mask >> k & 1 == 0 || below[k].iter().all(|&j| mask >> j & 1 == 1)))
        .map(|mask| (0..n).filter(|k| mask >> k & 1 == 1).map(|k| all[k].clone()).collect())
        .collect()
}

/// Demazure closure straight from the definition: saturate `i`-strings for
/// the letters of `word`, right to left, starting from the highest weight.
pub fn closure_by_definition(g: &CrystalGraph, word: &[Node]) -> BTreeSet<ElemId> {
    let mut set = BTreeSet::from([g.highest_weight().unwrap()]);
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for &b in &set {
            next.extend(g.i_string(i, b).into_iter().skip_while(|&c| c != b));
        }
        set = next;
    }
    set
}

/// Semistandard tableaux of `shape` with entries at most `n`, counted by
/// filling cells row by row.
pub fn ssyt_count(shape: &[u32], n: u32) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += fill(k + 1, cells, grid, n);
        }
        grid[r][c] = 0;
        total
    }
    fill(0, &cells, &mut grid, n)
}

/// Weyl dimension formula for `gl_n`: prod over i<j of
/// `(l_i - l_j + j - i) / (j - i)`.
pub fn type_a_dimension(shape: &[u32], n: usize) -> u64 {
    let mut l: Vec<i64> = shape.iter().map(|&p| p as i64).collect();
    l.resize(n, 0);
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (l[i] - l[j] + (j - i) as i64) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as u64
}

/// Weyl dimension formula for B2 at `a omega1 + b omega2`.
pub fn b2_dimension(a: u64, b: u64) -> u64 {
    (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6
}
