//! Exhaustive search for twisting systems.
//!
//! Entries are indexed by composable pair in ascending `(f, g)` order.
//! Entries on identity pairs are fixed up front by the unit laws; every
//! other assignment is followed by forward propagation through the two
//! composition laws, which derive `R(f ∘ f', g)` and `R(f, g ∘ g')` from
//! already known entries and detect conflicts. Branching always happens on
//! the first unassigned pair, so solutions come out in lexicographic order
//! of their entry vectors.

use crate::category::FiniteCategory;
use crate::error::{Error, Result};

use super::{composable_pairs, Factored, TwistingSystem};

/// Default bound on the product of candidate-set sizes.
pub const DEFAULT_LIMIT: u128 = 100_000_000;

struct Problem<'c> {
    a: &'c FiniteCategory,
    b: &'c FiniteCategory,
    pairs: Vec<(usize, usize)>,
    /// `index[f * |A| + g]`
    index: Vec<Option<usize>>,
    candidates: Vec<Vec<Factored>>,
    /// `(f, f', g)` with `f ∘ f'` and `f' , g` composable
    b_triples: Vec<(usize, usize, usize)>,
    /// `(f, g, g')`
    a_triples: Vec<(usize, usize, usize)>,
}

type Assignment = Vec<Option<Factored>>;

impl<'c> Problem<'c> {
    fn new(a: &'c FiniteCategory, b: &'c FiniteCategory) -> Self {
        let pairs = composable_pairs(a, b);
        let na = a.num_morphisms();
        let mut index = vec![None; b.num_morphisms() * na];
        for (i, &(f, g)) in pairs.iter().enumerate() {
            index[f * na + g] = Some(i);
        }
        let n = a.num_objects();
        let candidates = pairs
            .iter()
            .map(|&(f, g)| {
                let (x, z) = (b.tgt(f), a.src(g));
                let mut c = Vec::new();
                for u in 0..n {
                    for &ga in a.hom(x, u) {
                        for &fb in b.hom(u, z) {
                            c.push(Factored::new(u, ga, fb));
                        }
                    }
                }
                c
            })
            .collect();

        let mut b_triples = Vec::new();
        let mut a_triples = Vec::new();
        for &(f2, g) in &pairs {
            for f in 0..b.num_morphisms() {
                if b.src(f) == b.tgt(f2) {
                    b_triples.push((f, f2, g));
                }
            }
        }
        for &(f, g) in &pairs {
            for g2 in 0..na {
                if a.src(g) == a.tgt(g2) {
                    a_triples.push((f, g, g2));
                }
            }
        }
        Self {
            a,
            b,
            pairs,
            index,
            candidates,
            b_triples,
            a_triples,
        }
    }

    fn idx(&self, f: usize, g: usize) -> usize {
        self.index[f * self.a.num_morphisms() + g].expect("composable pair")
    }

    /// Entries fixed by the unit laws.
    fn forced(&self) -> Assignment {
        let (a, b) = (self.a, self.b);
        self.pairs
            .iter()
            .map(|&(f, g)| {
                if b.is_identity(f) {
                    Some(Factored::new(a.src(g), g, b.identity(a.src(g))))
                } else if a.is_identity(g) {
                    Some(Factored::new(b.tgt(f), a.identity(b.tgt(f)), f))
                } else {
                    None
                }
            })
            .collect()
    }

    fn bound(&self, assignment: &Assignment) -> u128 {
        assignment
            .iter()
            .zip(&self.candidates)
            .filter(|(v, _)| v.is_none())
            .fold(1u128, |acc, (_, c)| acc.saturating_mul(c.len() as u128))
    }

    fn settle(assignment: &mut Assignment, at: usize, value: Factored, changed: &mut bool) -> bool {
        match assignment[at] {
            None => {
                assignment[at] = Some(value);
                *changed = true;
                true
            }
            Some(existing) => existing == value,
        }
    }

    /// Runs both composition laws to a fixpoint. Returns false on conflict.
    fn propagate(&self, assignment: &mut Assignment) -> bool {
        let (a, b) = (self.a, self.b);
        loop {
            let mut changed = false;
            for &(f, f2, g) in &self.b_triples {
                let Some(inner) = assignment[self.idx(f2, g)] else { continue };
                let Some(outer) = assignment[self.idx(f, inner.a)] else { continue };
                let fb = b.compose(outer.b, inner.b).expect("typed");
                let target = self.idx(b.compose(f, f2).expect("composable"), g);
                if !Self::settle(assignment, target, Factored::new(outer.u, outer.a, fb), &mut changed) {
                    return false;
                }
            }
            for &(f, g, g2) in &self.a_triples {
                let Some(first) = assignment[self.idx(f, g)] else { continue };
                let Some(second) = assignment[self.idx(first.b, g2)] else { continue };
                let ga = a.compose(first.a, second.a).expect("typed");
                let target = self.idx(f, a.compose(g, g2).expect("composable"));
                if !Self::settle(assignment, target, Factored::new(second.u, ga, second.b), &mut changed) {
                    return false;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&self, mut assignment: Assignment, out: &mut Vec<TwistingSystem>) {
        if !self.propagate(&mut assignment) {
            return;
        }
        match assignment.iter().position(Option::is_none) {
            None => out.push(TwistingSystem::new(
                self.pairs
                    .iter()
                    .zip(&assignment)
                    .map(|(&k, v)| (k, v.expect("complete"))),
            )),
            Some(next) => {
                for &value in &self.candidates[next] {
                    let mut branch = assignment.clone();
                    branch[next] = Some(value);
                    self.search(branch, out);
                }
            }
        }
    }
}

/// Product of the candidate-set sizes of the entries not fixed by the unit
/// laws. This is the quantity compared against the search limit.
pub fn search_space_bound(a: &FiniteCategory, b: &FiniteCategory) -> u128 {
    let problem = Problem::new(a, b);
    problem.bound(&problem.forced())
}

/// All twisting systems between `b` and `a`, duplicate-free and ordered
/// lexicographically by their entry vectors.
///
/// Fails with [`Error::SpaceTooLarge`] when [`search_space_bound`] exceeds
/// `limit`.
pub fn enumerate_twisting_systems(
    a: &FiniteCategory,
    b: &FiniteCategory,
    limit: u128,
) -> Result<Vec<TwistingSystem>> {
    if a.num_objects() != b.num_objects() {
        return Err(Error::Malformed(
            "the two categories must share their object set".into(),
        ));
    }
    let problem = Problem::new(a, b);
    let start = problem.forced();
    let bound = problem.bound(&start);
    if bound > limit {
        return Err(Error::SpaceTooLarge { bound, limit });
    }
    let mut out = Vec::new();
    if problem.candidates.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    problem.search(start, &mut out);
    out.sort();
    Ok(out)
}
