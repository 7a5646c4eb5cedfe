//! Randomized invariants of the permutation, linear-algebra, orbital and
//! verification layers.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prim5::atlas::{build_table1_row, catalogue_fingerprint, derived_2a5_over_prime, CATALOGUE};
use prim5::ffalg::{chop, deleted_permutation_rep, invariant_forms, is_alternating, spin, Fe, Field, Matrix};
use prim5::orbital::{enumerate_digraphs, suborbit_pairing, suborbits, Digraph};
use prim5::perm::{format_generators, parse_generators, PermGroup, Permutation};
use prim5::verify::{
    centralizer_group, identify_graph, isomorphic, kneser_graph, structure_name, Report, Status, Target,
};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A frozen group on 4–10 points with 1–3 random generators.
fn group() -> impl Strategy<Value = PermGroup> {
    (4usize..=10).prop_flat_map(|n| {
        prop::collection::vec(permutation(n), 1..=3).prop_map(move |g| PermGroup::new(n, g).unwrap().freeze())
    })
}

fn relabel(g: &Digraph, pi: &Permutation) -> Digraph {
    Digraph::new(g.vertex_count(), g.arcs().iter().map(|&(u, v)| (pi.apply(u), pi.apply(v)))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn orbit_stabilizer(g in group(), x in 0usize..4) {
        let orbit = g.orbit(x).unwrap().len() as u128;
        prop_assert_eq!(orbit * g.point_stabilizer(x).unwrap().order().unwrap(), g.order().unwrap());
    }

    #[test]
    fn products_of_generators_sift(g in group(), word in prop::collection::vec(0usize..3, 1..=5)) {
        let gens = g.generators();
        let w = word.iter().fold(Permutation::identity(g.degree()), |acc, &i| acc.compose(&gens[i % gens.len()]));
        prop_assert!(g.contains(&w).unwrap());
    }

    #[test]
    fn moving_a_fixed_point_is_rejected(g in group()) {
        let n = g.degree();
        let moved: Vec<usize> = (0..n).filter(|&x| g.orbit(x).unwrap().len() > 1).collect();
        if let Some(fixed) = (0..n).find(|x| !moved.contains(x)) {
            let other = (fixed + 1) % n;
            let t = Permutation::from_cycles(n, &[&[fixed, other]]).unwrap();
            prop_assert!(!g.contains(&t).unwrap());
        }
        let bigger = Permutation::identity(n + 1);
        prop_assert!(!matches!(g.contains(&bigger), Ok(true)));
    }

    #[test]
    fn right_action_composition(a in permutation(7), b in permutation(7), x in 0usize..7) {
        prop_assert_eq!(a.compose(&b).apply(x), b.apply(a.apply(x)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.pow(a.order()), Permutation::identity(7));
    }

    #[test]
    fn generator_file_round_trip(g in group()) {
        let back = parse_generators(&format_generators(&g)).unwrap();
        prop_assert_eq!(back.degree(), g.degree());
        prop_assert_eq!(back.generators(), g.generators());
    }

    #[test]
    fn quadratic_field_axioms(p in prop::sample::select(vec![3u64, 7, 11, 13]), a in (0i64..50, 0i64..50), b in (0i64..50, 0i64..50)) {
        let f = Field::quadratic(p).unwrap();
        let (x, y) = (f.from_pair(a.0, a.1), f.from_pair(b.0, b.1));
        prop_assert_eq!(f.mul(x, y), f.mul(y, x));
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
        if !x.is_zero() {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            prop_assert_eq!(f.pow(x, f.size() - 1), f.one());
        }
        prop_assert!(f.norm(x).in_prime_field());
    }

    #[test]
    fn spin_is_a_closure_operator(p in prop::sample::select(vec![2u64, 3, 7]), seed in any::<u64>()) {
        let rep = deleted_permutation_rep(Field::prime(p).unwrap(), PermGroup::symmetric(5).generators()).unwrap();
        let f = rep.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: Vec<Fe> = (0..rep.dim()).map(|_| f.random(&mut rng)).collect();
        let w: Vec<Fe> = (0..rep.dim()).map(|_| f.random(&mut rng)).collect();
        let s = spin(&[v.clone()], &rep);
        prop_assert!(s.contains(&v));
        let again = spin(s.basis(), &rep);
        prop_assert_eq!(again.basis(), s.basis());
        let both = spin(&[v, w], &rep);
        prop_assert!(s.is_subspace_of(&both));
    }

    #[test]
    fn chop_dimensions_and_rechop(p in prop::sample::select(vec![2u64, 3, 5, 7]), seed in 0u64..1000) {
        let rep = deleted_permutation_rep(Field::prime(p).unwrap(), PermGroup::symmetric(5).generators()).unwrap();
        let parts = chop(&rep, seed).unwrap();
        prop_assert_eq!(parts.iter().map(|c| c.dim()).sum::<usize>(), rep.dim());
        for c in &parts {
            prop_assert_eq!(chop(&c.rep, seed ^ 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn identification_is_label_independent(pi in permutation(126)) {
        let g = kneser_graph(9, 4);
        let h = relabel(&g, &pi);
        prop_assert_eq!(identify_graph(&g).unwrap(), identify_graph(&h).unwrap());
    }

    #[test]
    fn petersen_isomorphism_is_found(pi in permutation(10)) {
        let g = kneser_graph(5, 2);
        let h = relabel(&g, &pi);
        let map = isomorphic(&g, &h).unwrap().expect("relabelled copy is isomorphic");
        let mapped = Digraph::new(10, g.arcs().iter().map(|&(u, v)| (map[u], map[v]))).unwrap();
        prop_assert_eq!(mapped, h);
    }

    #[test]
    fn report_status_follows_comparisons(pairs in prop::collection::vec((0u8..4, 0u8..4), 1..6)) {
        let mut r = Report::new("X", 0);
        for (i, (m, e)) in pairs.iter().enumerate() {
            r.compare(&format!("k{i}"), m, e);
        }
        let r = r.finish();
        let agree = pairs.iter().all(|(m, e)| m == e);
        prop_assert_eq!(r.is_pass(), agree);
        prop_assert_eq!(r.status == Status::Fail, !agree);
        let v: serde_json::Value = serde_json::from_str(&r.to_line()).unwrap();
        prop_assert_eq!(v["checkId"].as_str(), Some("X"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn forms_survive_random_words(seed in any::<u64>()) {
        let rep = derived_2a5_over_prime(13, 0).unwrap();
        let j = rep.form.clone().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let w: Matrix = rep.random_word(12, &mut rng);
            prop_assert_eq!(w.transpose().mul(&j).mul(&w), j.clone());
        }
    }
}

#[test]
fn descended_rep_has_a_unique_alternating_form() {
    let rep = derived_2a5_over_prime(37, 0).unwrap();
    let forms = invariant_forms(&rep);
    assert_eq!(forms.len(), 1);
    assert!(is_alternating(&forms[0]));
    assert!(forms[0].is_invertible());
}

#[test]
fn suborbit_pairing_is_a_length_preserving_involution() {
    for row in 1..=8 {
        let c = build_table1_row(row, None, 0).unwrap();
        let report = suborbits(&c.group, 0).unwrap();
        let pair = suborbit_pairing(&c.group, &report).unwrap();
        for (i, &j) in pair.iter().enumerate() {
            assert_eq!(pair[j], i, "row {row}");
            assert_eq!(report.orbits[i].len(), report.orbits[j].len(), "row {row}");
        }
    }
}

#[test]
fn orbital_digraphs_are_regular() {
    for row in 1..=8 {
        let c = build_table1_row(row, None, 0).unwrap();
        let n = c.group.degree();
        for d in enumerate_digraphs(&c.group, 0, 5).unwrap() {
            assert_eq!(d.out_valency(), Some(5));
            assert_eq!(d.arc_count(), n * 5);
            assert_eq!(Digraph::from_edge_list(&d.to_edge_list()).unwrap(), d);
        }
    }
}

#[test]
fn catalogue_fingerprints_are_distinct() {
    let fps: Vec<_> = CATALOGUE.iter().map(|n| catalogue_fingerprint(n).unwrap()).collect();
    for i in 0..fps.len() {
        for j in i + 1..fps.len() {
            assert_ne!(fps[i], fps[j], "{} vs {}", CATALOGUE[i], CATALOGUE[j]);
        }
    }
}

/// |C| = 2(p±1) or 4 exactly; independently, every element commutes with Ĥ.
#[test]
fn centralizer_orders() {
    for (target, p, order) in [(Target::Lemma61, 7u64, 16usize), (Target::Row12, 7, 4), (Target::Row9, 13, 24)] {
        let c = centralizer_group(p, target, 0).unwrap();
        assert_eq!(c.order(), order, "{target} p={p}");
        assert_eq!(c.order() % 4, 0);
        for x in &c.elements {
            for h in c.hat.generators() {
                assert_eq!(x.mul(h), h.mul(x));
            }
        }
    }
    assert_eq!(structure_name(&[8, 2]), "Z8xZ2");
}
