//! Backtracking search for a labelling of the vertices by color sets such
//! that every constraint `(S, R)` ends up with all colors of `R` appearing on
//! some vertex of `S`.
//!
//! Partitions into `k` total dominating sets are the case where labels are
//! singletons and each open neighborhood requires all `k` colors; families
//! with bounded load use labels of size up to `L`. Since supersets of
//! (total) dominating sets and of transversals keep the property, a family
//! of disjoint such sets extends to a partition, which is what is searched.

use crate::bits::{self, Mask};
use crate::error::Result;
use crate::limits::Budget;

pub(crate) struct LabelSearch {
    pub n: usize,
    /// Candidate labels (bitmasks over colors) in the order they are tried.
    pub labels: Vec<u32>,
    /// `(vertices, required colors)`.
    pub constraints: Vec<(Mask, u32)>,
    /// Colors are interchangeable: every constraint requires either all
    /// colors or none, so new colors may be introduced in increasing order.
    pub symmetric: bool,
    /// Label given to vertices left over once every constraint is met.
    pub leftover: u32,
}

struct State<'a> {
    search: &'a LabelSearch,
    member_of: Vec<Vec<usize>>,
    covered: Vec<u32>,
    open: Vec<u32>,
    label: Vec<Option<u32>>,
    max_label: u32,
}

impl LabelSearch {
    pub fn solve(&self, budget: &mut Budget) -> Result<Option<Vec<u32>>> {
        let mut member_of = vec![Vec::new(); self.n];
        for (ci, &(s, _)) in self.constraints.iter().enumerate() {
            for v in bits::iter(s) {
                member_of[v].push(ci);
            }
        }
        let mut st = State {
            search: self,
            member_of,
            covered: vec![0; self.constraints.len()],
            open: self.constraints.iter().map(|&(s, _)| bits::count(s) as u32).collect(),
            label: vec![None; self.n],
            max_label: self.labels.iter().map(|l| l.count_ones()).max().unwrap_or(0),
        };
        if st.dead() {
            return Ok(None);
        }
        if st.descend(0, budget)? {
            let out = st
                .label
                .iter()
                .map(|l| l.unwrap_or(self.leftover))
                .collect();
            Ok(Some(out))
        } else {
            Ok(None)
        }
    }
}

impl State<'_> {
    fn missing(&self, ci: usize) -> u32 {
        self.search.constraints[ci].1 & !self.covered[ci]
    }

    fn dead(&self) -> bool {
        (0..self.covered.len()).any(|ci| self.missing(ci).count_ones() > self.open[ci] * self.max_label)
    }

    /// Lowest unlabelled vertex of the constraint with the least slack, or
    /// `None` once every constraint is met.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for ci in 0..self.covered.len() {
            let miss = self.missing(ci).count_ones();
            if miss == 0 {
                continue;
            }
            let slack = self.open[ci] * self.max_label - miss;
            if best.is_none_or(|(s, _)| slack < s) {
                best = Some((slack, ci));
            }
        }
        let (_, ci) = best?;
        bits::iter(self.search.constraints[ci].0).find(|&v| self.label[v].is_none())
    }

    fn descend(&mut self, used: u32, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let used_mask = (1u32 << used) - 1;
        for li in 0..self.search.labels.len() {
            let lab = self.search.labels[li];
            let mut next_used = used;
            if self.search.symmetric {
                // new colors must be exactly `used, used+1, ...`
                let fresh = lab & !used_mask;
                let k = fresh.count_ones();
                if fresh != (((1u64 << k) - 1) << used) as u32 {
                    continue;
                }
                next_used = used + k;
            }
            let saved: Vec<u32> = self.member_of[v].iter().map(|&ci| self.covered[ci]).collect();
            self.label[v] = Some(lab);
            let mut ok = true;
            for &ci in &self.member_of[v] {
                self.covered[ci] |= lab;
                self.open[ci] -= 1;
                if self.missing(ci).count_ones() > self.open[ci] * self.max_label {
                    ok = false;
                }
            }
            if ok && self.descend(next_used, budget)? {
                return Ok(true);
            }
            for (&ci, &c) in self.member_of[v].iter().zip(&saved) {
                self.covered[ci] = c;
                self.open[ci] += 1;
            }
            self.label[v] = None;
        }
        Ok(false)
    }
}

/// Singleton labels `{0}, ..., {k-1}` with every constraint requiring all
/// `k` colors: a partition of the vertices into `k` classes each meeting
/// every set.
pub(crate) fn partition_meeting_all(n: usize, sets: &[Mask], k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    assert!((1..=31).contains(&k));
    let all = (1u32 << k) - 1;
    let search = LabelSearch {
        n,
        labels: (0..k).map(|c| 1u32 << c).collect(),
        constraints: sets.iter().map(|&s| (s, all)).collect(),
        symmetric: true,
        leftover: 1,
    };
    Ok(search
        .solve(budget)?
        .map(|ls| ls.into_iter().map(|l| l.trailing_zeros() as usize).collect()))
}

/// Groups a color vector into classes `0..k`.
pub(crate) fn classes(colors: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        out[c].push(v);
    }
    out
}
