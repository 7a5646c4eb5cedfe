//! The correspondence between arc-transitive digraphs of out-valency `d` and
//! the nontrivial cosets of `H` in `N_G(H)`, for `H` of index `d` in `G_v`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::digraph::Digraph;
use super::suborbits::{enumerate_digraphs, orbital_neighbourhoods, suborbits};
use crate::error::{arg, Error, Result};
use crate::perm::{subgroup_normalizer_small, PermGroup, Permutation, FINGERPRINT_ORDER_LIMIT};

/// Largest `d` for which homomorphisms to `S_d` are enumerated.
pub const MAX_HOM_DEGREE: usize = 7;
/// Largest normalizer whose elements are listed to form `N/H`.
pub const COSET_ENUMERATION_LIMIT: u128 = 200_000;
const GENERATOR_PAIR_ATTEMPTS: usize = 500;

/// The runtime-verified hypotheses on `G_v` and one index-`d` subgroup `H`.
#[derive(Clone, Debug)]
pub struct LemmaHypotheses {
    /// A representative `H` of the unique class of index-`d` subgroups, on the original points.
    pub subgroup: PermGroup,
    /// Number of index-`d` subgroups of `G_v`.
    pub subgroup_count: usize,
    pub unique_class: bool,
    pub self_normalizing: bool,
    pub maximal: bool,
}

impl LemmaHypotheses {
    pub fn hold(&self) -> bool {
        self.unique_class && self.self_normalizing && self.maximal
    }
}

fn all_permutations(d: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).expect("bijection"));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(d), &mut vec![false; d], &mut out);
    out
}

/// One permutation per cycle type on `d` points.
fn class_representatives(d: usize) -> Vec<Permutation> {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            partitions(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(d, d, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lens| {
            let mut images: Vec<usize> = (0..d).collect();
            let mut start = 0;
            for l in lens {
                for i in 0..l {
                    images[start + i] = start + (i + 1) % l;
                }
                start += l;
            }
            Permutation::from_images(images).expect("bijection")
        })
        .collect()
}

/// Points of a union of orbits on which the group acts faithfully.
fn faithful_points(group: &PermGroup) -> Result<Vec<usize>> {
    let order = group.order()?;
    let mut orbits: Vec<Vec<usize>> = group.orbits().into_iter().filter(|o| o.len() > 1).collect();
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let mut points = Vec::new();
    for o in orbits {
        points.extend(o);
        points.sort_unstable();
        if group.restrict_to(&points)?.freeze().order()? == order {
            return Ok(points);
        }
    }
    Ok(points)
}

fn restrict_perm(g: &Permutation, points: &[usize], index: &[usize]) -> Permutation {
    Permutation::from_images(points.iter().map(|&p| index[g.apply(p)]).collect()).expect("invariant point set")
}

fn direct_sum(a: &Permutation, b: &Permutation) -> Permutation {
    let m = a.degree();
    let images: Vec<usize> = (0..m).map(|x| a.apply(x)).chain((0..b.degree()).map(|x| m + b.apply(x))).collect();
    Permutation::from_images(images).expect("bijection")
}

/// Preimage of the stabilizer of `point` under the action of `⟨gens⟩` on
/// `0..d` given by `images`, via Schreier generators.
fn preimage_of_stabilizer(
    degree: usize,
    gens: &[Permutation],
    images: &[Permutation],
    point: usize,
    d: usize,
) -> Result<PermGroup> {
    let mut transversal: Vec<Option<Permutation>> = vec![None; d];
    transversal[point] = Some(Permutation::identity(degree));
    let mut queue = vec![point];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (g, im) in gens.iter().zip(images) {
            let y = im.apply(x);
            if transversal[y].is_none() {
                transversal[y] = Some(transversal[x].as_ref().expect("visited").compose(g));
                queue.push(y);
            }
        }
    }
    let mut schreier = Vec::new();
    for &x in &queue {
        let tx = transversal[x].as_ref().expect("visited");
        for (g, im) in gens.iter().zip(images) {
            let y = im.apply(x);
            let s = tx.compose(g).compose(&transversal[y].as_ref().expect("visited").inverse());
            if !s.is_identity() {
                schreier.push(s);
            }
        }
    }
    schreier.sort();
    schreier.dedup();
    Ok(PermGroup::new(degree, schreier)?.freeze())
}

fn same_subgroup(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    Ok(a.order()? == b.order()? && a.is_subgroup_of(b)?)
}

/// Checks that `G_v` has a unique conjugacy class of index-`d` subgroups and
/// that they are maximal and self-normalizing, by enumerating transitive
/// homomorphisms `G_v → S_d` up to conjugacy in `S_d`.
pub fn check_lemma_hypotheses(stabilizer: &PermGroup, d: usize, seed: u64) -> Result<LemmaHypotheses> {
    let order = stabilizer.order()?;
    if !(2..=MAX_HOM_DEGREE).contains(&d) {
        return arg(format!("d = {d} outside 2..={MAX_HOM_DEGREE}"));
    }
    if order > FINGERPRINT_ORDER_LIMIT {
        return Err(Error::Precondition(format!(
            "stabilizer order {order} exceeds {FINGERPRINT_ORDER_LIMIT}"
        )));
    }
    if order % d as u128 != 0 {
        return Err(Error::Precondition(format!("{d} does not divide |G_v| = {order}")));
    }
    let n = stabilizer.degree();
    let points = faithful_points(stabilizer)?;
    let mut index = vec![usize::MAX; n];
    for (i, &p) in points.iter().enumerate() {
        index[p] = i;
    }
    let m = points.len();

    // A generating pair of G_v.
    let chain = stabilizer.chain()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e44a);
    let mut pair = None;
    for _ in 0..GENERATOR_PAIR_ATTEMPTS {
        let a = chain.random_element(&mut rng);
        let b = chain.random_element(&mut rng);
        let sub = PermGroup::new(m, vec![restrict_perm(&a, &points, &index), restrict_perm(&b, &points, &index)])?
            .freeze();
        if sub.order()? == order {
            pair = Some((a, b));
            break;
        }
    }
    let (a, b) = pair.ok_or_else(|| Error::Precondition("no generating pair found for G_v".into()))?;
    let (ar, br) = (restrict_perm(&a, &points, &index), restrict_perm(&b, &points, &index));
    let (oa, ob, oab) = (a.order(), b.order(), a.compose(&b).order());

    let all = all_permutations(d);
    let mut found: Vec<PermGroup> = Vec::new();
    let mut first_class: Option<(PermGroup, usize, bool)> = None;
    for pa in class_representatives(d) {
        if oa % pa.order() != 0 {
            continue;
        }
        for pb in &all {
            if ob % pb.order() != 0 || oab % pa.compose(pb).order() != 0 {
                continue;
            }
            let image = PermGroup::new(d, vec![pa.clone(), pb.clone()])?;
            if !image.is_transitive() {
                continue;
            }
            let diag = PermGroup::new(m + d, vec![direct_sum(&ar, &pa), direct_sum(&br, pb)])?.freeze();
            if diag.order()? != order {
                continue;
            }
            let gens = [a.clone(), b.clone()];
            let imgs = [pa.clone(), pb.clone()];
            let mut class: Vec<PermGroup> = Vec::new();
            for point in 0..d {
                let h = preimage_of_stabilizer(n, &gens, &imgs, point, d)?;
                if !class.iter().any(|k| same_subgroup(k, &h).unwrap_or(false)) {
                    class.push(h);
                }
            }
            if first_class.is_none() {
                let maximal = image.freeze().is_primitive()?;
                first_class = Some((class[0].clone(), class.len(), maximal));
            }
            for h in class {
                if !found.iter().any(|k| same_subgroup(k, &h).unwrap_or(false)) {
                    found.push(h);
                }
            }
        }
    }
    let (subgroup, class_size, maximal) =
        first_class.ok_or_else(|| Error::Precondition(format!("G_v has no subgroup of index {d}")))?;
    Ok(LemmaHypotheses {
        subgroup,
        subgroup_count: found.len(),
        unique_class: found.len() == class_size,
        self_normalizing: class_size == d,
        maximal,
    })
}

fn require_hypotheses(group: &PermGroup, v: usize, d: usize, seed: u64) -> Result<LemmaHypotheses> {
    let stab = group.point_stabilizer(v)?;
    if stab.order()? == 1 {
        return Err(Error::Precondition("the group is regular".into()));
    }
    if !group.is_primitive()? {
        return Err(Error::Precondition("the group is imprimitive".into()));
    }
    let hyp = check_lemma_hypotheses(&stab, d, seed)?;
    if !hyp.hold() {
        return Err(Error::Precondition(format!(
            "index-{d} subgroups of G_v: {} found, unique class {}, self-normalizing {}, maximal {}",
            hyp.subgroup_count, hyp.unique_class, hyp.self_normalizing, hyp.maximal
        )));
    }
    Ok(hyp)
}

/// `|N_G(H)/H|` as one more than the number of suborbits of length `d`.
pub fn norm_quotient_order_via_suborbits(group: &PermGroup, v: usize, d: usize, seed: u64) -> Result<usize> {
    require_hypotheses(group, v, d, seed)?;
    Ok(1 + suborbits(group, v)?.count_of_length(d))
}

/// One nontrivial coset `Hg` of `H` in `N` with its digraph `(v, v^g)^G`.
#[derive(Clone, Debug)]
pub struct CosetDigraph {
    pub representative: Permutation,
    pub target: usize,
    /// `g² ∈ H`, i.e. `Hg` has order 2 in `N/H`.
    pub order_two: bool,
    pub digraph: Digraph,
}

/// The normalizer side of the correspondence.
#[derive(Clone, Debug)]
pub struct CosetCorrespondence {
    pub h_order: u128,
    pub n_order: u128,
    pub cosets: Vec<CosetDigraph>,
}

impl CosetCorrespondence {
    pub fn quotient_order(&self) -> u128 {
        self.n_order / self.h_order
    }
}

fn coset_key(h_elements: &[Permutation], g: &Permutation) -> Vec<u32> {
    h_elements
        .iter()
        .map(|h| h.compose(g).images().to_vec())
        .min()
        .expect("H contains the identity")
}

/// Builds `N = N_G(H)` with the normalizer routine and one digraph per
/// nontrivial coset of `H` in `N`.
pub fn coset_digraphs(group: &PermGroup, v: usize, d: usize, seed: u64, orbit_bound: usize) -> Result<CosetCorrespondence> {
    let hyp = require_hypotheses(group, v, d, seed)?;
    let h = hyp.subgroup;
    let normalizer = subgroup_normalizer_small(group, &h, orbit_bound)?;
    let n_order = normalizer.order()?;
    let h_order = h.order()?;
    if n_order > COSET_ENUMERATION_LIMIT {
        return Err(Error::Resource(format!("normalizer order {n_order} too large to list")));
    }
    let h_elements = h.elements(u128::MAX)?;
    let h_chain = h.chain()?;
    let mut seen = std::collections::HashSet::new();
    seen.insert(coset_key(&h_elements, &Permutation::identity(group.degree())));
    let mut cosets = Vec::new();
    for g in normalizer.elements(COSET_ENUMERATION_LIMIT)? {
        if !seen.insert(coset_key(&h_elements, &g)) {
            continue;
        }
        let target = g.apply(v);
        let order_two = h_chain.contains(&g.compose(&g));
        let digraph = super::suborbits::orbital_digraph(group, v, target)?;
        cosets.push(CosetDigraph {
            representative: g,
            target,
            order_two,
            digraph,
        });
    }
    cosets.sort_by_key(|c| c.target);
    Ok(CosetCorrespondence { h_order, n_order, cosets })
}

/// For the orbital digraph `(v,w)^G`: an element `g` with `(u,v)^g = (v,w)`,
/// where `u` is the in-neighbour of `v` fixed by `G_{vw}`, and whether
/// `g² ∈ G_{vw}`.
pub fn coset_of_orbital(group: &PermGroup, v: usize, w: usize) -> Result<(Permutation, bool)> {
    let h = group.pointwise_stabilizer(&[v, w])?;
    let out = orbital_neighbourhoods(group, v, w)?;
    let fixed_in: Vec<usize> = (0..group.degree())
        .filter(|&x| out[x].binary_search(&v).is_ok())
        .filter(|&x| h.generators().iter().all(|s| s.apply(x) == x))
        .collect();
    let [u] = fixed_in.as_slice() else {
        return Err(Error::Precondition(format!(
            "G_vw fixes {} in-neighbours of v; expected exactly one",
            fixed_in.len()
        )));
    };
    let g0 = group.transporter(*u, v)?.expect("transitive");
    let stab_v = group.point_stabilizer(v)?;
    let h1 = stab_v
        .transporter(g0.apply(v), w)?
        .ok_or_else(|| Error::Internal("no element of G_v completes the arc map".into()))?;
    let g = g0.compose(&h1);
    debug_assert_eq!((g.apply(*u), g.apply(v)), (v, w));
    let sq = g.compose(&g);
    Ok((g.clone(), h.chain()?.contains(&sq)))
}

/// Outcome of comparing both sides of the correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    pub suborbit_digraphs: usize,
    pub quotient_order: u128,
    /// The coset digraphs are exactly the enumerated orbital digraphs.
    pub same_digraphs: bool,
    /// Symmetric ⟺ the coset has order 2, on the normalizer side.
    pub pairing_via_normalizer: bool,
    /// Symmetric ⟺ `g² ∈ G_vw` for the transporter-recovered `g`.
    pub pairing_via_transporter: bool,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.same_digraphs
            && self.pairing_via_normalizer
            && self.pairing_via_transporter
            && self.suborbit_digraphs as u128 + 1 == self.quotient_order
    }
}

pub fn compare_lemma_sides(group: &PermGroup, v: usize, d: usize, seed: u64, orbit_bound: usize) -> Result<OracleComparison> {
    let brute = enumerate_digraphs(group, v, d)?;
    let corr = coset_digraphs(group, v, d, seed, orbit_bound)?;
    let mut a: Vec<&Digraph> = brute.iter().collect();
    let mut b: Vec<&Digraph> = corr.cosets.iter().map(|c| &c.digraph).collect();
    a.sort_by(|x, y| x.arcs().cmp(y.arcs()));
    b.sort_by(|x, y| x.arcs().cmp(y.arcs()));
    let same_digraphs = a == b;
    let pairing_via_normalizer = corr.cosets.iter().all(|c| c.digraph.is_symmetric() == c.order_two);
    let mut pairing_via_transporter = true;
    for dg in &brute {
        let w = dg.arcs().iter().find(|&&(x, _)| x == v).map(|&(_, w)| w).expect("v has out-neighbours");
        let (_, order_two) = coset_of_orbital(group, v, w)?;
        pairing_via_transporter &= order_two == dg.is_symmetric();
    }
    Ok(OracleComparison {
        suborbit_digraphs: brute.len(),
        quotient_order: corr.quotient_order(),
        same_digraphs,
        pairing_via_normalizer,
        pairing_via_transporter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_representatives_of_s5() {
        let reps = class_representatives(5);
        assert_eq!(reps.len(), 7);
        assert_eq!(all_permutations(4).len(), 24);
    }

    #[test]
    fn dihedral_ten_has_one_class_of_index_five() {
        let d5 = PermGroup::dihedral(5).freeze();
        let hyp = check_lemma_hypotheses(&d5, 5, 0).unwrap();
        assert!(hyp.hold());
        assert_eq!(hyp.subgroup_count, 5);
        assert_eq!(hyp.subgroup.order().unwrap(), 2);
    }

    #[test]
    fn klein_group_fails_uniqueness() {
        // V4 has three subgroups of index 2, each normal.
        let v4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap()
        .freeze();
        let hyp = check_lemma_hypotheses(&v4, 2, 0).unwrap();
        assert_eq!(hyp.subgroup_count, 3);
        assert!(!hyp.hold());
    }
}
