//! Weyl group elements keyed by their image of `rho`, Bruhat order,
//! minimal coset representatives and lower order ideals.
//!
//! An element `w` is stored as `w(rho)` with `rho = (1, ..., 1)`. Since `rho`
//! has trivial stabilizer the key determines `w`, and the left descents of
//! `w` are exactly the nodes where the key is negative. Reading off the
//! smallest left descent repeatedly yields the lexicographically least
//! reduced word, which is the normal form.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_data::{CartanData, Node, Weight};

/// Default cap on the number of group elements visited by full enumeration.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Cap on reflection steps when walking a weight up to the dominant chamber.
const ASCENT_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    key: Weight,
    word: Vec<Node>,
}

impl WeylElement {
    /// The canonical key `w(rho)`.
    pub fn key(&self) -> &Weight {
        &self.key
    }

    /// Lexicographically least reduced word, as node indices.
    pub fn word(&self) -> &[Node] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn has_left_descent(&self, i: Node) -> bool {
        self.key.coords()[i] < 0
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

/// Graded by length, then lexicographic on normal words.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// The Weyl group of a Cartan matrix. Cheap to clone.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    cartan: Arc<CartanData>,
}

impl WeylGroup {
    pub fn new(cartan: Arc<CartanData>) -> Self {
        WeylGroup { cartan }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    fn rho(&self) -> Weight {
        Weight::new(vec![1; self.cartan.rank()])
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            key: self.rho(),
            word: Vec::new(),
        }
    }

    /// Element from its `rho`-image; the normal word is read off by
    /// stripping smallest left descents.
    fn element_of_key(&self, key: Weight, bound: usize) -> Result<WeylElement> {
        let mut mu = key.clone();
        let mut word = Vec::new();
        while let Some(i) = mu.coords().iter().position(|&c| c < 0) {
            if word.len() >= bound {
                return Err(Error::ElementCap(bound));
            }
            word.push(i);
            self.cartan.reflect_in_place(i, &mut mu);
        }
        Ok(WeylElement { key, word })
    }

    /// `s_{w[0]} s_{w[1]} ... s_{w[n-1]}`, normalized.
    pub fn element(&self, word: &[Node]) -> Result<WeylElement> {
        let mut key = self.rho();
        for &i in word.iter().rev() {
            if i >= self.cartan.rank() {
                return Err(Error::UnknownNode(i as u32));
            }
            self.cartan.reflect_in_place(i, &mut key);
        }
        self.element_of_key(key, word.len())
    }

    /// Same as [`element`](Self::element) but for node labels.
    pub fn element_from_labels(&self, labels: &[u32]) -> Result<WeylElement> {
        self.element(&self.cartan.nodes_of(labels)?)
    }

    pub fn generator(&self, i: Node) -> WeylElement {
        self.element(&[i]).expect("valid node")
    }

    pub fn labels(&self, w: &WeylElement) -> Vec<u32> {
        self.cartan.labels_of(&w.word)
    }

    pub fn apply(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        let mut mu = lambda.clone();
        for &i in w.word.iter().rev() {
            self.cartan.reflect_in_place(i, &mut mu);
        }
        mu
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let key = self.apply(u, &v.key);
        self.element_of_key(key, u.length() + v.length())
            .expect("product length is bounded by the sum of lengths")
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<Node> = w.word.iter().rev().copied().collect();
        self.element(&rev).expect("reversed word has the same length")
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: Node, w: &WeylElement) -> WeylElement {
        let key = self.cartan.reflect(i, &w.key);
        self.element_of_key(key, w.length() + 1)
            .expect("length grows by at most one")
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: &WeylElement, i: Node) -> WeylElement {
        self.multiply(w, &self.generator(i))
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<Node>> {
        let mut memo: HashMap<Weight, Vec<Vec<Node>>> = HashMap::new();
        let mut out = self.reduced_words_memo(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_memo(&self, w: &WeylElement, memo: &mut HashMap<Weight, Vec<Vec<Node>>>) -> Vec<Vec<Node>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(words) = memo.get(&w.key) {
            return words.clone();
        }
        let mut words = Vec::new();
        for i in self.cartan.nodes() {
            if w.has_left_descent(i) {
                let rest = self.left_mul(i, w);
                for tail in self.reduced_words_memo(&rest, memo) {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(i);
                    word.extend(tail);
                    words.push(word);
                }
            }
        }
        memo.insert(w.key.clone(), words.clone());
        words
    }

    pub fn is_reduced(&self, word: &[Node]) -> bool {
        self.element(word).map(|w| w.length() == word.len()).unwrap_or(false)
    }

    /// Bruhat order `u <= w`, via the lifting property on a left descent of `w`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if u.is_identity() {
                return true;
            }
            if u.length() >= w.length() {
                return u == w;
            }
            let s = w.word[0];
            w = WeylElement {
                key: self.cartan.reflect(s, &w.key),
                word: w.word[1..].to_vec(),
            };
            if u.has_left_descent(s) {
                u = self.left_mul(s, &u);
            }
        }
    }

    /// Elements covered by `w` in Bruhat order.
    pub fn lower_covers(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut out = BTreeSet::new();
        for k in 0..w.length() {
            let mut word = w.word.clone();
            word.remove(k);
            let v = self.element(&word).expect("subword of a valid word");
            if v.length() + 1 == w.length() {
                out.insert(v);
            }
        }
        out.into_iter().collect()
    }

    /// Walks `mu` up to the dominant chamber by reflecting at the smallest
    /// node with negative pairing. Returns the dominant weight reached and
    /// the nodes used, in order.
    pub fn dominant_ascent(&self, mu: &Weight) -> Result<(Weight, Vec<Node>)> {
        let mut mu = mu.clone();
        let mut used = Vec::new();
        while let Some(i) = mu.coords().iter().position(|&c| c < 0) {
            if used.len() >= ASCENT_CAP {
                return Err(Error::ElementCap(ASCENT_CAP));
            }
            self.cartan.reflect_in_place(i, &mut mu);
            used.push(i);
        }
        Ok((mu, used))
    }

    /// `floor(v)^lambda` for the coset `{v : v lambda = mu}`, or `None` when
    /// `mu` is not in the orbit of the dominant weight `lambda`.
    pub fn min_rep_for_weight(&self, mu: &Weight, lambda: &Weight) -> Result<Option<WeylElement>> {
        let (top, used) = self.dominant_ascent(mu)?;
        if &top != lambda {
            return Ok(None);
        }
        // mu = s_{used[0]} ... s_{used[k-1]} lambda
        Ok(Some(self.element(&used)?))
    }

    /// Minimal length representative of `w W_lambda` for dominant `lambda`.
    pub fn min_coset_rep(&self, w: &WeylElement, lambda: &Weight) -> WeylElement {
        let mu = self.apply(w, lambda);
        self.min_rep_for_weight(&mu, lambda)
            .expect("ascent of an orbit weight is bounded by the length of w")
            .expect("w lambda lies in the orbit of lambda")
    }

    /// Enumerates the whole group, sorted, or fails if it has more than `cap`
    /// elements.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.key.clone());
        queue.push_back(e);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in self.cartan.nodes() {
                if !w.has_left_descent(i) {
                    let v = self.left_mul(i, &w);
                    if seen.insert(v.key.clone()) {
                        if seen.len() > cap {
                            return Err(Error::ElementCap(cap));
                        }
                        queue.push_back(v);
                    }
                }
            }
            out.push(w);
        }
        out.sort();
        Ok(out)
    }

    /// Finite type iff the group has at most `cap` elements.
    pub fn is_finite(&self, cap: usize) -> bool {
        self.enumerate(cap).is_ok()
    }

    /// Down-closure of `generators` in Bruhat order.
    pub fn lower_ideal(&self, generators: &[WeylElement]) -> LowerOrderIdeal {
        let mut elements: BTreeSet<WeylElement> = BTreeSet::new();
        let mut stack: Vec<WeylElement> = generators.to_vec();
        while let Some(w) = stack.pop() {
            if elements.contains(&w) {
                continue;
            }
            for v in self.lower_covers(&w) {
                if !elements.contains(&v) {
                    stack.push(v);
                }
            }
            elements.insert(w);
        }
        let generators = self.maximal_elements(elements.iter());
        LowerOrderIdeal { generators, elements }
    }

    /// Wraps an already down-closed set; `None` if it is not down-closed.
    pub fn ideal_from_elements(&self, elements: BTreeSet<WeylElement>) -> Option<LowerOrderIdeal> {
        for w in &elements {
            if self.lower_covers(w).iter().any(|v| !elements.contains(v)) {
                return None;
            }
        }
        let generators = self.maximal_elements(elements.iter());
        Some(LowerOrderIdeal { generators, elements })
    }

    /// Bruhat-maximal members of a finite set.
    pub fn maximal_elements<'a>(&self, set: impl Iterator<Item = &'a WeylElement> + Clone) -> Vec<WeylElement> {
        let mut out: Vec<WeylElement> = set
            .clone()
            .filter(|w| !set.clone().any(|v| v != *w && self.bruhat_leq(w, v)))
            .cloned()
            .collect();
        out.sort();
        out
    }

    pub fn ideal_intersection(&self, a: &LowerOrderIdeal, b: &LowerOrderIdeal) -> LowerOrderIdeal {
        let elements: BTreeSet<WeylElement> = a.elements.intersection(&b.elements).cloned().collect();
        self.ideal_from_elements(elements)
            .expect("intersection of down-closed sets is down-closed")
    }

    /// Every lower order ideal of a finite group (the empty one included),
    /// or an error once more than `cap` have been produced.
    pub fn all_lower_ideals(&self, group: &[WeylElement], cap: usize) -> Result<Vec<LowerOrderIdeal>> {
        // decide membership in a linear extension; an element may join only
        // if all of its lower covers already did
        let mut order = group.to_vec();
        order.sort();
        let covers: Vec<Vec<usize>> = order
            .iter()
            .map(|w| {
                self.lower_covers(w)
                    .iter()
                    .map(|v| order.iter().position(|x| x == v).expect("group is closed"))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut chosen = vec![false; order.len()];
        fn rec(
            k: usize,
            chosen: &mut Vec<bool>,
            covers: &[Vec<usize>],
            order: &[WeylElement],
            out: &mut Vec<BTreeSet<WeylElement>>,
            cap: usize,
        ) -> Result<()> {
            if k == order.len() {
                if out.len() >= cap {
                    return Err(Error::ElementCap(cap));
                }
                out.push(
                    order
                        .iter()
                        .zip(chosen.iter())
                        .filter(|(_, &c)| c)
                        .map(|(w, _)| w.clone())
                        .collect(),
                );
                return Ok(());
            }
            rec(k + 1, chosen, covers, order, out, cap)?;
            if covers[k].iter().all(|&c| chosen[c]) {
                chosen[k] = true;
                rec(k + 1, chosen, covers, order, out, cap)?;
                chosen[k] = false;
            }
            Ok(())
        }
        let mut sets = Vec::new();
        rec(0, &mut chosen, &covers, &order, &mut sets, cap)?;
        for set in sets {
            let generators = self.maximal_elements(set.iter());
            out.push(LowerOrderIdeal {
                generators,
                elements: set,
            });
        }
        Ok(out)
    }
}

/// A finite Bruhat-down-closed subset of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerOrderIdeal {
    generators: Vec<WeylElement>,
    elements: BTreeSet<WeylElement>,
}

impl LowerOrderIdeal {
    /// Bruhat-maximal elements, sorted.
    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn elements(&self) -> &BTreeSet<WeylElement> {
        &self.elements
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.contains(w)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }
}
