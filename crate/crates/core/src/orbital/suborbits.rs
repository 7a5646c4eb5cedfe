use std::collections::BTreeMap;

use rayon::prelude::*;

use super::digraph::Digraph;
use crate::error::{arg, Error, Result};
use crate::perm::PermGroup;

/// The orbits of a point stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuborbitReport {
    pub base: usize,
    /// Sorted orbits of `G_base`, ordered by least element.
    pub orbits: Vec<Vec<usize>>,
}

impl SuborbitReport {
    /// `(least element, length)` per suborbit.
    pub fn representatives(&self) -> Vec<(usize, usize)> {
        self.orbits.iter().map(|o| (o[0], o.len())).collect()
    }

    /// Suborbit length → multiplicity.
    pub fn length_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.len()).or_insert(0) += 1;
        }
        m
    }

    pub fn count_of_length(&self, d: usize) -> usize {
        self.orbits.iter().filter(|o| o.len() == d).count()
    }

    pub fn has_length(&self, d: usize) -> bool {
        self.count_of_length(d) > 0
    }

    /// Index of the suborbit containing `x`.
    pub fn suborbit_of(&self, x: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.binary_search(&x).is_ok())
    }
}

fn require_transitive(group: &PermGroup) -> Result<()> {
    group.chain()?;
    if !group.is_transitive() {
        return arg("group is not transitive");
    }
    Ok(())
}

pub fn suborbits(group: &PermGroup, v: usize) -> Result<SuborbitReport> {
    require_transitive(group)?;
    if v >= group.degree() {
        return arg(format!("point {v} out of range"));
    }
    let stab = group.point_stabilizer(v)?;
    let mut orbits = stab.orbits();
    for o in &mut orbits {
        o.sort_unstable();
    }
    orbits.sort_unstable_by_key(|o| o[0]);
    Ok(SuborbitReport { base: v, orbits })
}

/// Out-neighbourhoods of the orbital digraph `(u,v)^G`, indexed by vertex.
/// Vertices outside the orbit of `u` have empty neighbourhoods.
pub fn orbital_neighbourhoods(group: &PermGroup, u: usize, v: usize) -> Result<Vec<Vec<usize>>> {
    let n = group.degree();
    if u >= n || v >= n {
        return arg("point out of range");
    }
    if u == v {
        return arg("orbital digraphs need distinct points");
    }
    let mut start = group.point_stabilizer(u)?.orbit(v)?;
    start.sort_unstable();
    let mut out: Vec<Option<Vec<usize>>> = vec![None; n];
    out[u] = Some(start);
    let mut queue = vec![u];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for s in group.generators() {
            let y = s.apply(x);
            if out[y].is_none() {
                let mut img: Vec<usize> = out[x].as_ref().expect("visited").iter().map(|&w| s.apply(w)).collect();
                img.sort_unstable();
                out[y] = Some(img);
                queue.push(y);
            }
        }
    }
    Ok(out.into_iter().map(Option::unwrap_or_default).collect())
}

/// The digraph with arc set `(u,v)^G`.
pub fn orbital_digraph(group: &PermGroup, u: usize, v: usize) -> Result<Digraph> {
    let out = orbital_neighbourhoods(group, u, v)?;
    Digraph::new(
        group.degree(),
        out.iter().enumerate().flat_map(|(x, ws)| ws.iter().map(move |&w| (x, w))),
    )
}

/// Whether `(v,u)` lies in `(u,v)^G`.
pub fn is_self_paired(group: &PermGroup, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return arg("orbital digraphs need distinct points");
    }
    let g = group
        .transporter(u, v)?
        .ok_or_else(|| Error::Argument("points lie in different orbits".into()))?;
    // out(v) = out(u)^g
    let stab = group.point_stabilizer(u)?;
    Ok(stab.orbit(v)?.iter().any(|&w| g.apply(w) == u))
}

/// For each suborbit index, the index of its paired suborbit
/// `Δ* = {x : v ∈ out(x)}`.
pub fn suborbit_pairing(group: &PermGroup, report: &SuborbitReport) -> Result<Vec<usize>> {
    let v = report.base;
    report
        .orbits
        .iter()
        .map(|o| {
            let w = o[0];
            if w == v {
                return Ok(report.suborbit_of(v).expect("base is in a suborbit"));
            }
            let g = group.transporter(v, w)?.expect("transitive");
            let back = g.inverse().apply(v);
            report
                .suborbit_of(back)
                .ok_or_else(|| Error::Internal("paired point outside all suborbits".into()))
        })
        .collect()
}

/// One orbital digraph per suborbit of length `d`, in suborbit order.
pub fn enumerate_digraphs(group: &PermGroup, v: usize, d: usize) -> Result<Vec<Digraph>> {
    let report = suborbits(group, v)?;
    let reps: Vec<usize> = report.orbits.iter().filter(|o| o.len() == d && o[0] != v).map(|o| o[0]).collect();
    let mut out: Vec<Digraph> = reps
        .par_iter()
        .map(|&w| orbital_digraph(group, v, w))
        .collect::<Result<_>>()?;
    // Distinct suborbits give distinct arc sets; dedup guards the invariant.
    let mut seen = std::collections::HashSet::new();
    out.retain(|d| seen.insert(d.arcs().to_vec()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn symmetric_group_orbital_is_complete() {
        let s3 = PermGroup::symmetric(3).freeze();
        let d = orbital_digraph(&s3, 0, 1).unwrap();
        assert_eq!(d.arc_count(), 6);
        assert!(d.is_symmetric());
        assert!(is_self_paired(&s3, 0, 1).unwrap());
    }

    #[test]
    fn directed_cycle() {
        let c5 = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()])
            .unwrap()
            .freeze();
        let d = orbital_digraph(&c5, 0, 1).unwrap();
        assert_eq!(d.arc_count(), 5);
        assert!(!d.is_symmetric());
        assert!(!is_self_paired(&c5, 0, 1).unwrap());
        let r = suborbits(&c5, 0).unwrap();
        let pairing = suborbit_pairing(&c5, &r).unwrap();
        // {1} ↔ {4}, {2} ↔ {3}
        assert_eq!(pairing, vec![0, 4, 3, 2, 1]);
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap().freeze();
        assert!(suborbits(&g, 0).is_err());
    }
}
