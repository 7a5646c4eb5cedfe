//! Stabilizer chains (base and strong generating set) built by a randomized
//! Schreier–Sims pass followed by a deterministic Schreier-generator check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::permutation::Permutation;

const NOT_IN_ORBIT: i32 = -1;
const ROOT: i32 = -2;
/// Store explicit inverse transversals when orbit length times degree stays below this.
const EXPLICIT_TRANSVERSAL_LIMIT: usize = 4_000_000;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: u32,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Permutation>,
    /// `gens` followed by their inverses; Schreier vector labels index this list.
    labels: Vec<Permutation>,
    label_inv: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// Per point: label index used to reach it, `ROOT`, or `NOT_IN_ORBIT`.
    edge: Vec<i32>,
    /// Optional explicit `u_b⁻¹` for each orbit point `b`.
    inv_transversal: Option<Vec<Option<Permutation>>>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut lvl = Level {
            point,
            gens: Vec::new(),
            labels: Vec::new(),
            label_inv: Vec::new(),
            orbit: Vec::new(),
            edge: vec![NOT_IN_ORBIT; degree],
            inv_transversal: None,
        };
        lvl.rebuild(degree);
        lvl
    }

    fn rebuild(&mut self, degree: usize) {
        self.labels.clear();
        self.label_inv.clear();
        for g in &self.gens {
            self.labels.push(g.clone());
            self.label_inv.push(g.inverse());
        }
        for g in &self.gens {
            let inv = g.inverse();
            if inv != *g {
                self.labels.push(inv);
                self.label_inv.push(g.clone());
            }
        }
        self.edge.iter_mut().for_each(|e| *e = NOT_IN_ORBIT);
        self.orbit.clear();
        self.edge[self.point as usize] = ROOT;
        self.orbit.push(self.point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (k, s) in self.labels.iter().enumerate() {
                let y = s.apply_u32(x);
                if self.edge[y as usize] == NOT_IN_ORBIT {
                    self.edge[y as usize] = k as i32;
                    self.orbit.push(y);
                }
            }
        }
        self.inv_transversal = None;
        if self.orbit.len().saturating_mul(degree) <= EXPLICIT_TRANSVERSAL_LIMIT {
            let mut table: Vec<Option<Permutation>> = vec![None; degree];
            table[self.point as usize] = Some(Permutation::identity(degree));
            // BFS order guarantees the predecessor is already filled in.
            for idx in 1..self.orbit.len() {
                let y = self.orbit[idx];
                let k = self.edge[y as usize] as usize;
                let prev = self.label_inv[k].apply_u32(y);
                let prev_inv = table[prev as usize].as_ref().expect("bfs order");
                // u_y = u_prev * s  =>  u_y⁻¹ = s⁻¹ * u_prev⁻¹
                table[y as usize] = Some(self.label_inv[k].compose(prev_inv));
            }
            self.inv_transversal = Some(table);
        }
    }

    #[inline]
    pub fn contains(&self, point: u32) -> bool {
        self.edge[point as usize] != NOT_IN_ORBIT
    }

    /// Replaces `g` by `g · u_b⁻¹` where `b` is the image of the base point under `g`.
    fn strip(&self, g: &mut Permutation, mut b: u32) {
        if let Some(table) = &self.inv_transversal {
            let u_inv = table[b as usize].as_ref().expect("orbit point");
            g.compose_in_place(u_inv);
            return;
        }
        while self.edge[b as usize] != ROOT {
            let k = self.edge[b as usize] as usize;
            g.compose_in_place(&self.label_inv[k]);
            b = self.label_inv[k].apply_u32(b);
        }
    }

    /// Transversal element mapping the base point to `b`.
    pub fn transversal(&self, b: u32) -> Permutation {
        if let Some(table) = &self.inv_transversal {
            return table[b as usize].as_ref().expect("orbit point").inverse();
        }
        let degree = self.edge.len();
        let mut inv = Permutation::identity(degree);
        self.strip(&mut inv, b);
        inv.inverse()
    }
}

/// A base and strong generating set with Schreier-vector transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

/// Knobs for building a chain.
#[derive(Clone, Debug, Default)]
pub struct ChainOptions {
    pub seed: u64,
    /// Base points to use first, in order.
    pub base_prefix: Vec<usize>,
    /// A certified group order; when reached the verification pass is skipped
    /// because the chain order can never exceed the true order.
    pub known_order: Option<u128>,
}

impl StabChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point as usize).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the stabilizer of the first `depth` base points.
    pub fn level_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    pub(crate) fn level(&self, depth: usize) -> Option<&Level> {
        self.levels.get(depth)
    }

    /// Sifts `g` starting at `start`; returns the residue and the level where sifting stopped.
    pub fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply_u32(lvl.point);
            if !lvl.contains(b) {
                return (h, i);
            }
            lvl.strip(&mut h, b);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, lvl) = self.sift_from(g, 0);
        lvl == self.levels.len() && res.is_identity()
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for lvl in self.levels.iter().rev() {
            let b = lvl.orbit[rng.gen_range(0..lvl.orbit.len())];
            g = g.compose(&lvl.transversal(b));
        }
        g
    }

    /// All elements, in a fixed order. Caller bounds the order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let reps: Vec<Permutation> = lvl.orbit.iter().map(|&b| lvl.transversal(b)).collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for g in &out {
                for u in &reps {
                    next.push(g.compose(u));
                }
            }
            out = next;
        }
        out
    }

    pub fn build(degree: usize, gens: &[Permutation], opts: &ChainOptions) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        let mut used = vec![false; degree];
        for &b in &opts.base_prefix {
            if b < degree && !used[b] {
                used[b] = true;
                chain.levels.push(Level::new(b as u32, degree));
            }
        }
        if chain.levels.is_empty() {
            let b = gens[0].first_moved_point().expect("non-identity");
            chain.levels.push(Level::new(b as u32, degree));
        }
        chain.levels[0].gens = gens.clone();
        // Generators fixing a prefix of the base also belong to deeper levels.
        for g in &gens {
            for i in 1..chain.levels.len() {
                if g.apply_u32(chain.levels[i - 1].point) == chain.levels[i - 1].point {
                    chain.levels[i].gens.push(g.clone());
                } else {
                    break;
                }
            }
        }
        for lvl in chain.levels.iter_mut() {
            lvl.rebuild(degree);
        }

        chain.random_phase(&gens, opts);
        if opts.known_order.map(|o| o == chain.order()) != Some(true) {
            chain.verify_phase();
        }
        chain
    }

    fn insert(&mut self, res: Permutation, from: usize, to: usize) {
        let mut to = to;
        if to == self.levels.len() {
            let b = res.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(b as u32, self.degree));
            to = self.levels.len() - 1;
        }
        for i in from..=to {
            self.levels[i].gens.push(res.clone());
            self.levels[i].rebuild(self.degree);
        }
    }

    fn random_phase(&mut self, gens: &[Permutation], opts: &ChainOptions) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_c4a1);
        // Product replacement state.
        let mut state: Vec<Permutation> = Vec::new();
        while state.len() < 10 {
            state.extend(gens.iter().cloned());
        }
        let mut acc = Permutation::identity(self.degree);
        let step = |state: &mut Vec<Permutation>, acc: &mut Permutation, rng: &mut ChaCha8Rng| {
            let n = state.len();
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            state[i] = if rng.gen_bool(0.5) {
                state[i].compose(&state[j])
            } else {
                state[j].compose(&state[i])
            };
            *acc = acc.compose(&state[i]);
            acc.clone()
        };
        for _ in 0..40 {
            step(&mut state, &mut acc, &mut rng);
        }
        let target_quiet = if opts.known_order.is_some() { 200 } else { 24 };
        let mut quiet = 0;
        let mut rounds = 0;
        while quiet < target_quiet && rounds < 20_000 {
            if let Some(order) = opts.known_order {
                if self.order() >= order {
                    break;
                }
            }
            rounds += 1;
            let g = step(&mut state, &mut acc, &mut rng);
            let (res, lvl) = self.sift_from(&g, 0);
            if lvl == self.levels.len() && res.is_identity() {
                quiet += 1;
            } else {
                quiet = 0;
                self.insert(res, 1.min(lvl), lvl);
            }
        }
    }

    fn verify_phase(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut found: Option<(Permutation, usize)> = None;
            'scan: for idx in 0..self.levels[iu].orbit.len() {
                let lvl = &self.levels[iu];
                let beta = lvl.orbit[idx];
                let u_beta = lvl.transversal(beta);
                for s in &lvl.gens {
                    let img = s.apply_u32(beta);
                    let mut g = u_beta.compose(s);
                    lvl.strip(&mut g, img);
                    if g.is_identity() {
                        continue;
                    }
                    let (res, j) = self.sift_from(&g, iu + 1);
                    if !(j == self.levels.len() && res.is_identity()) {
                        found = Some((res, j));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((res, j)) => {
                    self.insert(res, iu + 1, j);
                    i = j.min(self.levels.len() - 1) as isize;
                }
                None => i -= 1,
            }
        }
    }
}
