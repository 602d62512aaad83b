//! Exhaustive families of squarefree monomial ideals.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::Result;
use crate::monomial::SquarefreeIdeal;
use crate::ring::{Ring, RingRef};

#[derive(Clone, Debug)]
pub enum Recipe {
    /// Every antichain of nonempty subsets of the variables.
    AllSquarefree(usize),
    /// Edge ideals of graphs with at least one edge.
    EdgeIdeals(usize),
    /// Cover ideals `∩_{ij ∈ E} (x_i, x_j)` of graphs with at least one edge.
    CoverIdeals(usize),
    Explicit(Vec<SquarefreeIdeal>),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Filter {
    pub unmixed: bool,
    pub height: Option<usize>,
}

impl Filter {
    pub fn accepts(&self, i: &SquarefreeIdeal) -> bool {
        (!self.unmixed || i.is_unmixed()) && self.height.is_none_or(|h| i.height() == h)
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub recipe: Recipe,
    pub characteristic: u64,
    pub filter: Filter,
    /// Keep a uniform sample of this size, drawn with the given seed.
    pub sample: Option<(usize, u64)>,
}

impl Corpus {
    pub fn new(recipe: Recipe, characteristic: u64) -> Self {
        Corpus { recipe, characteristic, filter: Filter::default(), sample: None }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_sample(mut self, size: usize, seed: u64) -> Self {
        self.sample = Some((size, seed));
        self
    }

    /// Members before filtering, duplicate-free and sorted by generator masks.
    pub fn candidates(&self) -> Result<Vec<SquarefreeIdeal>> {
        let build = |n: usize, families: Vec<Vec<u64>>| -> Result<Vec<SquarefreeIdeal>> {
            let ring = Ring::with_standard_names(self.characteristic, n)?;
            families.into_iter().map(|m| SquarefreeIdeal::from_masks(&ring, m)).collect()
        };
        let mut out = match &self.recipe {
            Recipe::AllSquarefree(n) => build(*n, antichains(*n))?,
            Recipe::EdgeIdeals(n) => build(*n, graphs(*n))?,
            Recipe::CoverIdeals(n) => {
                let ring = Ring::with_standard_names(self.characteristic, *n)?;
                graphs(*n).into_iter().map(|edges| cover_ideal(&ring, &edges)).collect::<Result<_>>()?
            }
            Recipe::Explicit(list) => list.clone(),
        };
        let mut seen = BTreeSet::new();
        out.retain(|i| seen.insert((i.ring().variables().to_vec(), i.masks().to_vec())));
        out.sort_by(|a, b| (a.nvars(), a.masks()).cmp(&(b.nvars(), b.masks())));
        Ok(out)
    }

    /// Filtered (and optionally sampled) members, plus the rejected ones.
    pub fn split(&self) -> Result<(Vec<SquarefreeIdeal>, Vec<SquarefreeIdeal>)> {
        let (mut keep, skipped): (Vec<_>, Vec<_>) =
            self.candidates()?.into_iter().partition(|i| self.filter.accepts(i));
        if let Some((size, seed)) = self.sample {
            if size < keep.len() {
                let mut idx: Vec<usize> = (0..keep.len()).collect();
                idx.shuffle(&mut StdRng::seed_from_u64(seed));
                idx.truncate(size);
                idx.sort_unstable();
                keep = idx.into_iter().map(|i| keep[i].clone()).collect();
            }
        }
        Ok((keep, skipped))
    }

    pub fn members(&self) -> Result<Vec<SquarefreeIdeal>> {
        Ok(self.split()?.0)
    }
}

/// All nonempty antichains of nonempty subsets of `{0..n}` not containing
/// the empty set.
pub fn antichains(n: usize) -> Vec<Vec<u64>> {
    fn go(subsets: &[u64], start: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        for i in start..subsets.len() {
            let s = subsets[i];
            if current.iter().all(|&c| c & !s != 0 && s & !c != 0) {
                current.push(s);
                out.push(current.clone());
                go(subsets, i + 1, current, out);
                current.pop();
            }
        }
    }
    let subsets: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    go(&subsets, 0, &mut Vec::new(), &mut out);
    out
}

/// Edge sets of all graphs on `n` vertices with at least one edge.
pub fn graphs(n: usize) -> Vec<Vec<u64>> {
    let pairs: Vec<u64> = (0..n).flat_map(|i| (i + 1..n).map(move |j| 1u64 << i | 1u64 << j)).collect();
    (1u64..1 << pairs.len())
        .map(|sel| (0..pairs.len()).filter(|b| sel >> b & 1 == 1).map(|b| pairs[b]).collect())
        .collect()
}

/// The squarefree ideal whose minimal primes are exactly the edges.
fn cover_ideal(ring: &RingRef, edges: &[u64]) -> Result<SquarefreeIdeal> {
    // Minimal vertex covers of the graph generate its cover ideal.
    let edge_ideal = SquarefreeIdeal::from_masks(ring, edges.to_vec())?;
    SquarefreeIdeal::from_masks(ring, edge_ideal.prime_masks())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        // Dedekind numbers 3, 6, 20, 168, 7581 count all antichains,
        // including {} and {∅}.
        let counts: Vec<usize> = (1..=5).map(|n| antichains(n).len()).collect();
        assert_eq!(counts, vec![1, 4, 18, 166, 7579]);
    }

    #[test]
    fn unmixed_height_two_are_cover_ideals() {
        for n in 2..=5 {
            let unmixed = Corpus::new(Recipe::AllSquarefree(n), 2)
                .with_filter(Filter { unmixed: true, height: Some(2) })
                .members()
                .unwrap();
            let covers = Corpus::new(Recipe::CoverIdeals(n), 2).members().unwrap();
            assert_eq!(unmixed, covers, "n = {n}");
        }
        assert_eq!(Corpus::new(Recipe::CoverIdeals(5), 2).members().unwrap().len(), 1023);
    }

    #[test]
    fn filter_and_sample() {
        let c = Corpus::new(Recipe::AllSquarefree(3), 3).with_filter(Filter { unmixed: false, height: Some(3) });
        let (keep, skipped) = c.split().unwrap();
        assert_eq!(keep.len(), 1);
        assert_eq!(keep[0].to_string(), "(x, y, z)");
        assert_eq!(skipped.len(), 17);

        let s1 = Corpus::new(Recipe::AllSquarefree(4), 2).with_sample(10, 7).members().unwrap();
        let s2 = Corpus::new(Recipe::AllSquarefree(4), 2).with_sample(10, 7).members().unwrap();
        assert_eq!(s1.len(), 10);
        assert_eq!(s1, s2);
    }

    #[test]
    fn edge_ideals_on_three_vertices() {
        let e = Corpus::new(Recipe::EdgeIdeals(3), 2).members().unwrap();
        assert_eq!(e.len(), 7);
        assert!(e.iter().all(|i| i.masks().iter().all(|m| m.count_ones() == 2)));
    }
}
