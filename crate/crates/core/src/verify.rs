//! Verification suites: each checks one structural statement exhaustively on
//! a single highest-weight crystal and reports counterexamples.

use std::collections::{BTreeMap, BTreeSet};

use crate::character::{char_equal, character};
use crate::classify::{is_demazure_by_character, is_extremal, is_ideal_global, is_ideal_local, is_principal};
use crate::crystal::{CrystalGraph, ElemId};
use crate::demazure::{
    atomic_decomposition, demazure_atom, demazure_by_word, demazure_contains, demazure_crystal, ideal_intersection,
    ideal_subset,
};
use crate::error::{Error, Result};
use crate::root_data::Node;
use crate::subset::SubsetHandle;
use crate::weyl::{LowerOrderIdeal, WeylElement, WeylGroup};

/// Largest crystal swept over all of its subsets unless forced.
pub const DEFAULT_SUBSET_CAP: usize = 20;
/// Largest Weyl group or ideal family enumerated.
pub const DEFAULT_GROUP_CAP: usize = 100_000;
const MAX_REPORTED: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub subset_cap: usize,
    pub group_cap: usize,
    pub force: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            subset_cap: DEFAULT_SUBSET_CAP,
            group_cap: DEFAULT_GROUP_CAP,
            force: false,
        }
    }
}

impl SuiteOptions {
    /// Defaults, with `CRYSTAL_FORGE_CAP` overriding the subset cap.
    pub fn from_env() -> Self {
        let mut o = Self::default();
        if let Some(cap) = std::env::var("CRYSTAL_FORGE_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            o.subset_cap = cap;
        }
        o
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checked: usize,
    pub summary: String,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Summary line followed by at most a few counterexamples.
    pub fn render(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {}: {} ({} checks)\n", self.suite, self.summary, self.checked);
        for f in self.failures.iter().take(MAX_REPORTED) {
            s.push_str("  counterexample: ");
            s.push_str(f);
            s.push('\n');
        }
        if self.failures.len() > MAX_REPORTED {
            s.push_str(&format!("  ... {} more\n", self.failures.len() - MAX_REPORTED));
        }
        s
    }
}

struct Run {
    suite: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Run {
    fn new(suite: &'static str) -> Self {
        Run {
            suite,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self, summary: String) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checked: self.checked,
            summary,
            failures: self.failures,
        }
    }
}

type SuiteFn = fn(&CrystalGraph, &SuiteOptions) -> Result<SuiteReport>;

pub struct Suite {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub statement: &'static str,
    pub run: SuiteFn,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "crystal-axioms", aliases: &["axioms"], statement: "the graph satisfies the crystal axioms and has one extremal element per orbit weight", run: crystal_axioms },
    Suite { name: "word-independence", aliases: &[], statement: "F_w{b_lambda} does not depend on the reduced word of w", run: word_independence },
    Suite { name: "subword-property", aliases: &["subword"], statement: "u <= w in Bruhat order iff a reduced word of u is a subword of a reduced word of w", run: subword_property },
    Suite { name: "demazure-containment", aliases: &[], statement: "B_u is contained in B_w iff floor(u) <= w", run: demazure_containment },
    Suite { name: "extremal-connected", aliases: &[], statement: "extremal subsets are connected", run: extremal_connected },
    Suite { name: "extremal-closure", aliases: &[], statement: "unions and nonempty intersections of extremal subsets are extremal", run: extremal_closure },
    Suite { name: "demazure-extremal", aliases: &[], statement: "Demazure crystals are extremal", run: demazure_extremal },
    Suite { name: "path-lemma", aliases: &["paths"], statement: "starred lowering paths between extremal elements are the reduced words of the connecting coset representative", run: path_lemma },
    Suite { name: "ideal-union", aliases: &[], statement: "unions of ideal subsets are ideal", run: ideal_union },
    Suite { name: "demazure-ideal", aliases: &[], statement: "Demazure crystals are ideal", run: demazure_ideal },
    Suite { name: "ideal-containment", aliases: &[], statement: "an ideal subset contains B_w for each of its extremal weights w lambda", run: ideal_containment },
    Suite { name: "ideal-characterization", aliases: &["theoremC"], statement: "ideal subsets are exactly the B_I over nonempty lower order ideals I", run: ideal_characterization },
    Suite { name: "ideal-intersection", aliases: &["intersection"], statement: "B_I and B_J intersect in B_(I meet J), the disjoint union of its atoms", run: ideal_intersection_suite },
    Suite { name: "atom-strings", aliases: &[], statement: "below a non-head element of an atom, its i-string stays in the atom", run: atom_strings },
    Suite { name: "atom-partition", aliases: &["atoms"], statement: "atoms with distinct minimal representatives are disjoint and partition every B_I", run: atom_partition },
    Suite { name: "demazure-principal", aliases: &[], statement: "Demazure crystals are principal with maximum floor(w)", run: demazure_principal },
    Suite { name: "demazure-characterization", aliases: &["theoremA"], statement: "Demazure crystals are exactly the extremal, ideal and principal subsets", run: demazure_characterization },
    Suite { name: "character-criterion", aliases: &["theoremB"], statement: "a subset with the character of B_w is B_w iff it is ideal", run: character_criterion },
];

/// Every statement the suites must cover, with the suite that covers it.
pub const STATEMENTS: &[(&str, &str)] = &[
    ("crystal axioms", "crystal-axioms"),
    ("word independence of Demazure closures", "word-independence"),
    ("subword property", "subword-property"),
    ("Demazure containment", "demazure-containment"),
    ("extremal subsets are connected", "extremal-connected"),
    ("unions and intersections of extremal subsets", "extremal-closure"),
    ("Demazure crystals are extremal", "demazure-extremal"),
    ("path lemma", "path-lemma"),
    ("unions of ideal subsets", "ideal-union"),
    ("Demazure crystals are ideal", "demazure-ideal"),
    ("ideal containment", "ideal-containment"),
    ("ideal characterization", "ideal-characterization"),
    ("intersection of ideal subsets", "ideal-intersection"),
    ("atom string property", "atom-strings"),
    ("atom disjointness", "atom-partition"),
    ("atomic decomposition", "atom-partition"),
    ("atoms of intersections", "ideal-intersection"),
    ("Demazure crystals are principal", "demazure-principal"),
    ("Demazure characterization", "demazure-characterization"),
    ("character criterion", "character-criterion"),
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name || s.aliases.contains(&name))
}

pub fn run_suite(name: &str, g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let suite = find_suite(name).ok_or_else(|| Error::Document(format!("unknown suite {name}")))?;
    (suite.run)(g, opts)
}

pub fn run_all(g: &CrystalGraph, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| (s.run)(g, opts)).collect()
}

fn ids(g: &CrystalGraph, set: &BTreeSet<ElemId>) -> String {
    let v: Vec<&str> = set.iter().map(|&b| g.id(b)).collect();
    format!("{{{}}}", v.join(", "))
}

fn group(g: &CrystalGraph, opts: &SuiteOptions) -> Result<(WeylGroup, Vec<WeylElement>)> {
    let weyl = g.weyl();
    let all = weyl.enumerate(opts.group_cap)?;
    Ok((weyl, all))
}

/// Distinct minimal coset representatives for `lambda`.
fn reps(g: &CrystalGraph, all: &[WeylElement]) -> Result<BTreeSet<WeylElement>> {
    let weyl = g.weyl();
    let lambda = g.lambda()?;
    Ok(all.iter().map(|w| weyl.min_coset_rep(w, lambda)).collect())
}

fn nonempty_ideals(weyl: &WeylGroup, all: &[WeylElement], opts: &SuiteOptions) -> Result<Vec<LowerOrderIdeal>> {
    Ok(weyl
        .all_lower_ideals(all, opts.group_cap)?
        .into_iter()
        .filter(|i| !i.is_empty())
        .collect())
}

/// Every subset of the crystal as a member set, subject to the cap.
pub fn all_subsets<'g>(g: &'g CrystalGraph, opts: &SuiteOptions) -> Result<impl Iterator<Item = SubsetHandle<'g>>> {
    let n = g.len();
    if (n > opts.subset_cap && !opts.force) || n >= 64 {
        return Err(Error::ExhaustiveCap {
            elements: n,
            cap: if opts.force { 63 } else { opts.subset_cap },
        });
    }
    Ok((0..1u64 << n).map(move |m| SubsetHandle::from_mask(g, m)))
}

/// Connectivity of the induced subgraph, ignoring edge direction.
fn connected(x: &SubsetHandle<'_>) -> bool {
    let g = x.graph();
    let Some(start) = x.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        for i in g.cartan().nodes() {
            for c in [g.f(i, b), g.e(i, b)].into_iter().flatten() {
                if x.contains(c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
    }
    seen.len() == x.len()
}

fn crystal_axioms(g: &CrystalGraph, _: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("crystal-axioms");
    let result = g.validate();
    run.check(result.is_ok(), || format!("{}", result.clone().unwrap_err()));
    let hw = g.highest_weight_data()?;
    let weights: BTreeSet<_> = hw.extremal.keys().map(|&b| g.wt(b).clone()).collect();
    run.check(weights.len() == hw.extremal.len(), || {
        "two extremal elements share a weight".into()
    });
    run.check(connected(&SubsetHandle::whole(g)), || "graph is not connected".into());
    let summary = format!("{} elements, {} extremal", g.len(), hw.extremal.len());
    Ok(run.finish(summary))
}

fn word_independence(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("word-independence");
    let (weyl, all) = group(g, opts)?;
    for w in &all {
        let words = weyl.reduced_words(w);
        let first = demazure_by_word(g, &words[0])?;
        for word in &words[1..] {
            let other = demazure_by_word(g, word)?;
            run.check(other == first, || {
                format!(
                    "w = {w}: words {:?} and {:?} give {} and {}",
                    words[0],
                    word,
                    ids(g, &first),
                    ids(g, &other)
                )
            });
        }
    }
    Ok(run.finish(format!("{} elements of W", all.len())))
}

fn is_subword(small: &[Node], big: &[Node]) -> bool {
    let mut it = big.iter();
    small.iter().all(|c| it.any(|d| d == c))
}

fn subword_property(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("subword-property");
    let (weyl, all) = group(g, opts)?;
    for w in &all {
        for u in &all {
            let by_words = weyl.reduced_words(u).iter().any(|r| is_subword(r, w.word()));
            let by_order = weyl.bruhat_leq(u, w);
            run.check(by_words == by_order, || {
                format!("u = {u}, w = {w}: subword {by_words}, Bruhat {by_order}")
            });
        }
    }
    Ok(run.finish(format!("{} pairs", all.len() * all.len())))
}

fn demazure_containment(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("demazure-containment");
    let (_, all) = group(g, opts)?;
    let sets: Vec<_> = all
        .iter()
        .map(|w| demazure_crystal(g, w).map(|d| d.handle))
        .collect::<Result<_>>()?;
    for (u, bu) in all.iter().zip(&sets) {
        for (w, bw) in all.iter().zip(&sets) {
            let by_sets = bu.is_subset(bw);
            let by_group = demazure_contains(g, u, w)?;
            run.check(by_sets == by_group, || {
                format!("u = {u}, w = {w}: sets {by_sets}, group {by_group}")
            });
        }
    }
    Ok(run.finish(format!("{} pairs", all.len() * all.len())))
}

fn extremal_subsets<'g>(g: &'g CrystalGraph, opts: &SuiteOptions) -> Result<Vec<SubsetHandle<'g>>> {
    Ok(all_subsets(g, opts)?.filter(|x| is_extremal(x).holds).collect())
}

fn extremal_connected(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("extremal-connected");
    let ext = extremal_subsets(g, opts)?;
    for x in &ext {
        run.check(connected(x), || {
            format!("{} is extremal but disconnected", ids(g, x.members()))
        });
    }
    Ok(run.finish(format!("{} extremal subsets", ext.len())))
}

fn extremal_closure(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("extremal-closure");
    let ext = extremal_subsets(g, opts)?;
    for (k, x) in ext.iter().enumerate() {
        for y in &ext[k + 1..] {
            let u = x.union(y);
            run.check(is_extremal(&u).holds, || {
                format!("union {} is not extremal", ids(g, u.members()))
            });
            let m = x.intersection(y);
            if !m.is_empty() {
                run.check(is_extremal(&m).holds, || {
                    format!("intersection {} is not extremal", ids(g, m.members()))
                });
            }
        }
    }
    Ok(run.finish(format!("{} extremal subsets", ext.len())))
}

fn demazure_extremal(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("demazure-extremal");
    let (_, all) = group(g, opts)?;
    for w in &all {
        let d = demazure_crystal(g, w)?;
        run.check(is_extremal(&d.handle).holds, || format!("B_{w} is not extremal"));
    }
    Ok(run.finish(format!("{} Demazure crystals", all.len())))
}

/// Strict starred paths from `x` ending at `y`, as words in written order
/// (last applied letter first).
fn paths_between(g: &CrystalGraph, x: ElemId, y: ElemId) -> BTreeSet<Vec<Node>> {
    g.strict_starred_paths(x)
        .into_iter()
        .filter(|(_, end)| *end == y)
        .map(|(mut p, _)| {
            p.reverse();
            p
        })
        .collect()
}

/// Connecting representative `floor(v u^-1)^(u lambda)` of two extremal
/// elements with representatives `u`, `v`: the shortest element of
/// `v W_lambda u^-1`.
fn connecting(weyl: &WeylGroup, stabilizer: &[WeylElement], u: &WeylElement, v: &WeylElement) -> WeylElement {
    let u_inv = weyl.inverse(u);
    stabilizer
        .iter()
        .map(|t| weyl.multiply(&weyl.multiply(v, t), &u_inv))
        .min()
        .expect("the stabilizer contains the identity")
}

/// For extremal `x`, `y` with representatives `u`, `v` and connecting
/// element `z`: the strict starred paths from `x` to `y` are exactly the
/// reduced words of `z` when `l(v) = l(z) + l(u)`, and there are none
/// otherwise. Every path also lowers the weight in dominance order.
fn path_lemma(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("path-lemma");
    let (weyl, all) = group(g, opts)?;
    let lambda = g.lambda()?;
    let stabilizer: Vec<WeylElement> = all.into_iter().filter(|t| &weyl.apply(t, lambda) == lambda).collect();
    let ext = g.extremal_elements(g.elements())?;
    let mut realized = 0;
    for (x, u) in &ext {
        for (y, v) in &ext {
            let z = connecting(&weyl, &stabilizer, u, v);
            let found = paths_between(g, *x, *y);
            let expected: BTreeSet<Vec<Node>> = if v.length() == z.length() + u.length() {
                weyl.reduced_words(&z).into_iter().filter(|w| !w.is_empty()).collect()
            } else {
                BTreeSet::new()
            };
            if !expected.is_empty() {
                realized += 1;
                let lower = g.cartan().dominance_leq(g.wt(*y), g.wt(*x), 10_000)?;
                run.check(lower, || format!("wt {} is not below wt {}", g.wt(*y), g.wt(*x)));
            }
            run.check(found == expected, || {
                format!(
                    "x = {} (u = {u}), y = {} (v = {v}), z = {z}: paths {found:?}, expected {expected:?}",
                    g.id(*x),
                    g.id(*y)
                )
            });
        }
    }
    Ok(run.finish(format!(
        "{} extremal pairs, {} joined by paths",
        ext.len() * ext.len(),
        realized
    )))
}

fn ideal_union(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("ideal-union");
    let (weyl, all) = group(g, opts)?;
    let ideals = nonempty_ideals(&weyl, &all, opts)?;
    let sets: Vec<_> = ideals.iter().map(|i| ideal_subset(g, i)).collect::<Result<_>>()?;
    for (k, x) in sets.iter().enumerate() {
        for y in &sets[k..] {
            let u = x.union(y);
            run.check(is_ideal_local(&u)?.holds, || {
                format!("union {} is not ideal", ids(g, u.members()))
            });
        }
    }
    Ok(run.finish(format!("{} ideal subsets", sets.len())))
}

fn demazure_ideal(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("demazure-ideal");
    let (_, all) = group(g, opts)?;
    for w in &all {
        let d = demazure_crystal(g, w)?;
        run.check(is_ideal_local(&d.handle)?.holds, || format!("B_{w} is not ideal"));
    }
    Ok(run.finish(format!("{} Demazure crystals", all.len())))
}

fn ideal_containment(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("ideal-containment");
    let mut count = 0;
    for x in all_subsets(g, opts)? {
        if !is_ideal_local(&x)?.holds {
            continue;
        }
        count += 1;
        for (y, w) in g.extremal_elements(x.iter())? {
            let d = demazure_crystal(g, &w)?;
            run.check(d.handle.is_subset(&x), || {
                format!("{} contains {} but not B_{w}", ids(g, x.members()), g.id(y))
            });
        }
    }
    Ok(run.finish(format!("{count} ideal subsets")))
}

fn ideal_characterization(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("ideal-characterization");
    let (weyl, all) = group(g, opts)?;
    let ideals = nonempty_ideals(&weyl, &all, opts)?;
    let expected: BTreeSet<BTreeSet<ElemId>> = ideals
        .iter()
        .map(|i| ideal_subset(g, i).map(|x| x.members().clone()))
        .collect::<Result<_>>()?;
    let mut found = BTreeSet::new();
    for x in all_subsets(g, opts)? {
        let local = is_ideal_local(&x)?.holds;
        let global = is_ideal_global(&x)?;
        run.check(local == global, || {
            format!("{}: local {local}, global {global}", ids(g, x.members()))
        });
        if local {
            found.insert(x.members().clone());
        }
    }
    for x in found.symmetric_difference(&expected) {
        run.check(false, || {
            let side = if found.contains(x) {
                "ideal but not a B_I"
            } else {
                "a B_I but not ideal"
            };
            format!("{} is {side}", ids(g, x))
        });
    }
    Ok(run.finish(format!(
        "{} ideal subsets = {} distinct B_I over {} nonempty lower ideals",
        found.len(),
        expected.len(),
        ideals.len()
    )))
}

fn ideal_intersection_suite(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("ideal-intersection");
    let (weyl, all) = group(g, opts)?;
    let ideals = nonempty_ideals(&weyl, &all, opts)?;
    for i in &ideals {
        for j in &ideals {
            let literal = ideal_subset(g, i)?.intersection(&ideal_subset(g, j)?);
            let by_meet = match ideal_intersection(g, i, j) {
                Ok(x) => x,
                Err(e) => {
                    run.check(false, || e.to_string());
                    continue;
                }
            };
            run.check(by_meet.members() == literal.members(), || {
                format!(
                    "{} differs from {}",
                    ids(g, by_meet.members()),
                    ids(g, literal.members())
                )
            });
            let meet = weyl.ideal_intersection(i, j);
            let atoms: BTreeSet<ElemId> = atomic_decomposition(g, &meet)?
                .iter()
                .flat_map(|a| a.handle.iter())
                .collect();
            run.check(&atoms == literal.members(), || {
                format!(
                    "atoms of the meet give {} not {}",
                    ids(g, &atoms),
                    ids(g, literal.members())
                )
            });
        }
    }
    Ok(run.finish(format!("{} ideal pairs", ideals.len() * ideals.len())))
}

fn atom_strings(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("atom-strings");
    let (_, all) = group(g, opts)?;
    for w in reps(g, &all)? {
        let atom = demazure_atom(g, &w)?;
        for x in atom.handle.iter() {
            for i in g.cartan().nodes() {
                if g.e(i, x).is_none() {
                    continue;
                }
                let mut cur = x;
                while let Some(c) = g.f(i, cur) {
                    run.check(atom.handle.contains(c), || {
                        format!(
                            "A_{w}: f_{} of {} leaves the atom at {}",
                            g.cartan().label(i),
                            g.id(x),
                            g.id(c)
                        )
                    });
                    cur = c;
                }
            }
        }
    }
    Ok(run.finish("atoms of every minimal representative".into()))
}

fn atom_partition(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("atom-partition");
    let (weyl, all) = group(g, opts)?;
    let atoms: BTreeMap<WeylElement, BTreeSet<ElemId>> = reps(g, &all)?
        .into_iter()
        .map(|w| demazure_atom(g, &w).map(|a| (w, a.handle.members().clone())))
        .collect::<Result<_>>()?;
    let list: Vec<_> = atoms.iter().collect();
    for (k, (v, a)) in list.iter().enumerate() {
        for (w, b) in &list[k + 1..] {
            run.check(a.is_disjoint(b), || format!("A_{v} and A_{w} meet"));
        }
    }
    let ideals = nonempty_ideals(&weyl, &all, opts)?;
    for i in &ideals {
        let parts = atomic_decomposition(g, i)?;
        let total: usize = parts.iter().map(|a| a.handle.len()).sum();
        let union: BTreeSet<ElemId> = parts.iter().flat_map(|a| a.handle.iter()).collect();
        let target = ideal_subset(g, i)?;
        run.check(total == union.len() && &union == target.members(), || {
            let gens: Vec<String> = i.generators().iter().map(|w| w.to_string()).collect();
            format!("atoms over <{}> do not partition B_I", gens.join(", "))
        });
    }
    let sizes: Vec<String> = atoms.values().map(|a| a.len().to_string()).collect();
    Ok(run.finish(format!(
        "{} lower ideals, atom sizes ({})",
        ideals.len(),
        sizes.join(",")
    )))
}

fn demazure_principal(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("demazure-principal");
    let (_, all) = group(g, opts)?;
    for w in &all {
        let d = demazure_crystal(g, w)?;
        let v = is_principal(&d.handle)?;
        run.check(v.value.as_ref() == Some(&d.w), || {
            format!("B_{w} has maximum {:?}, expected {}", v.value, d.w)
        });
    }
    Ok(run.finish(format!("{} Demazure crystals", all.len())))
}

fn demazure_characterization(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("demazure-characterization");
    let (_, all) = group(g, opts)?;
    let expected: BTreeSet<BTreeSet<ElemId>> = all
        .iter()
        .map(|w| demazure_crystal(g, w).map(|d| d.handle.members().clone()))
        .collect::<Result<_>>()?;
    let mut found = BTreeSet::new();
    for x in all_subsets(g, opts)? {
        if !is_extremal(&x).holds || !is_ideal_local(&x)?.holds || !is_principal(&x)?.holds {
            continue;
        }
        found.insert(x.members().clone());
    }
    for x in found.symmetric_difference(&expected) {
        run.check(false, || {
            let side = if found.contains(x) {
                "passes all three conditions but is no B_w"
            } else {
                "is a B_w failing a condition"
            };
            format!("{} {side}", ids(g, x))
        });
    }
    run.checked += 1;
    Ok(run.finish(format!(
        "{} Demazure subsets = {} distinct B_w (|W| = {})",
        found.len(),
        expected.len(),
        all.len()
    )))
}

fn character_criterion(g: &CrystalGraph, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new("character-criterion");
    let (_, all) = group(g, opts)?;
    let targets: Vec<(WeylElement, SubsetHandle<'_>)> = reps(g, &all)?
        .into_iter()
        .map(|w| demazure_crystal(g, &w).map(|d| (w, d.handle)))
        .collect::<Result<_>>()?;
    let mut matched = 0;
    for x in all_subsets(g, opts)? {
        let cx = character(&x);
        for (w, d) in &targets {
            if !char_equal(&cx, &character(d)) {
                continue;
            }
            matched += 1;
            let verdict = is_demazure_by_character(&x, w)?;
            let truth = &x == d;
            run.check(verdict == truth, || {
                format!(
                    "{} with the character of B_{w}: criterion {verdict}, actual {truth}",
                    ids(g, x.members())
                )
            });
        }
    }
    Ok(run.finish(format!("{matched} subsets share a character with some B_w")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::build_tableau_crystal;

    #[test]
    fn registry_covers_every_statement() {
        for (statement, suite) in STATEMENTS {
            assert!(find_suite(suite).is_some(), "no suite for {statement}");
        }
        for s in SUITES {
            assert!(
                STATEMENTS.iter().any(|(_, n)| *n == s.name),
                "suite {} covers no statement",
                s.name
            );
        }
        let mut names: Vec<&str> = SUITES
            .iter()
            .flat_map(|s| std::iter::once(s.name).chain(s.aliases.iter().copied()))
            .collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn all_suites_pass_on_sl3() {
        let g = build_tableau_crystal(3, &[2, 1]).unwrap();
        for r in run_all(&g, &SuiteOptions::default()).unwrap() {
            assert!(r.passed(), "{}", r.render());
        }
        let r = run_suite("ideal-characterization", &g, &SuiteOptions::default()).unwrap();
        assert_eq!(
            r.summary,
            "8 ideal subsets = 8 distinct B_I over 8 nonempty lower ideals"
        );
        let r = run_suite("demazure-characterization", &g, &SuiteOptions::default()).unwrap();
        assert_eq!(r.summary, "6 Demazure subsets = 6 distinct B_w (|W| = 6)");
    }

    #[test]
    fn cap_enforced() {
        let g = build_tableau_crystal(3, &[2, 1]).unwrap();
        let opts = SuiteOptions {
            subset_cap: 4,
            ..SuiteOptions::default()
        };
        assert_eq!(
            run_suite("ideal-characterization", &g, &opts).unwrap_err(),
            Error::ExhaustiveCap { elements: 8, cap: 4 }
        );
        let forced = SuiteOptions { force: true, ..opts };
        assert!(run_suite("ideal-characterization", &g, &forced).unwrap().passed());
    }
}
