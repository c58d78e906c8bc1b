use super::*;

fn g(spec: &str) -> Group {
    Group::build(GroupSpec::parse(spec).unwrap()).unwrap()
}

#[test]
fn orders_match_the_family_formulas() {
    assert_eq!(g("dihedral:3").order(), 6);
    assert_eq!(g("quaternion:1").order(), 8);
    assert_eq!(g("quaternion:2").order(), 16);
    assert_eq!(g("semidihedral:4").order(), 16);
    assert_eq!(g("pq:7,3,2").order(), 21);
    assert_eq!(g("sym:4").order(), 24);
    assert_eq!(g("dsum:2,2").order(), 4);
    assert_eq!(g("cyclic:1").order(), 1);
}

#[test]
fn trivial_group() {
    let c1 = g("cyclic:1");
    assert_eq!(c1.op_idx(0, 0), 0);
}

#[test]
fn cyclic_addition() {
    let c5 = g("cyclic:5");
    let p = c5.op(Element(3), Element(4));
    assert_eq!(p, Element(2));
}

#[test]
fn dihedral_reflection_product() {
    // In D_4: f*r^1 times f*r^3 lands on r^2.
    let d4 = g("dihedral:4");
    let a = d4.parse_element("f*r^1").unwrap();
    let b = d4.parse_element("f*r^3").unwrap();
    assert_eq!(d4.format_element(d4.op(a, b)), "r^2");
}

#[test]
fn quaternion_one_is_q8() {
    let q = g("quaternion:1");
    let a = q.parse_element("a^1").unwrap();
    let b = q.parse_element("b").unwrap();
    let a2 = q.parse_element("a^2").unwrap();
    assert_eq!(q.op(b, b), a2);
    // a has order 4
    let mut x = a;
    let mut ord = 1;
    while x != q.identity() {
        x = q.op(x, a);
        ord += 1;
    }
    assert_eq!(ord, 4);
    // b^4 = e
    let b2 = q.op(b, b);
    assert_eq!(q.op(b2, b2), q.identity());
    // Q8 is the unique non-abelian order-8 group with a single involution.
    assert!(!q.is_abelian());
    let involutions = q.elements().filter(|&x| x != q.identity() && q.op(x, x) == q.identity());
    assert_eq!(involutions.count(), 1);
}

#[test]
fn quaternion_b_relations() {
    for m in [1u32, 2, 3] {
        let q = Group::build(GroupSpec::GeneralizedQuaternion(m)).unwrap();
        let b = Element(4 * m);
        let b2 = q.op(b, b);
        assert_eq!(b2, Element(2 * m), "b^2 = a^(2m) in Q_{m}");
        assert_eq!(q.op(b2, b2), q.identity());
    }
}

#[test]
fn dihedral_involution_count() {
    for n in 3..=9u32 {
        let d = Group::build(GroupSpec::Dihedral(n)).unwrap();
        let count = d.elements().filter(|&x| d.op(x, x) == d.identity()).count() as u32;
        // n reflections plus the identity, plus r^(n/2) when n is even.
        let expected = if n % 2 == 1 { n + 1 } else { n + 2 };
        assert_eq!(count, expected, "D_{n}");
    }
}

#[test]
fn pq_group_structure() {
    let pq = g("pq:7,3,2");
    assert!(!pq.is_abelian());
    let a = pq.parse_element("a^1*b^0").unwrap();
    let b = pq.parse_element("a^0*b^1").unwrap();
    let order_of = |x: Element| {
        let mut y = x;
        let mut k = 1;
        while y != pq.identity() {
            y = pq.op(y, x);
            k += 1;
        }
        k
    };
    assert_eq!(order_of(a), 3);
    assert_eq!(order_of(b), 7);
}

#[test]
fn pq_rejects_bad_parameters() {
    assert!(GroupSpec::parse("pq:7,3,3").is_err()); // 3^3 = 27 != 1 mod 7
    assert!(GroupSpec::parse("pq:9,3,2").is_err()); // 9 not prime
    assert!(GroupSpec::parse("pq:7,5,2").is_err()); // 7 != 1 mod 5
}

#[test]
fn invalid_parameters_rejected() {
    assert!(GroupSpec::parse("dihedral:2").is_err());
    assert!(GroupSpec::parse("semidihedral:3").is_err());
    assert!(GroupSpec::parse("sym:8").is_err());
    assert!(GroupSpec::parse("dsum:1,2").is_err());
    assert!(GroupSpec::parse("nonsense:3").is_err());
}

#[test]
fn square_roots_in_cyclic_groups() {
    let c8 = g("cyclic:8");
    let roots: Vec<u32> = c8.square_roots(Element(4)).iter().map(|e| e.0).collect();
    assert_eq!(roots, vec![2, 6]);
    let c6 = g("cyclic:6");
    assert!(c6.square_roots(Element(3)).is_empty());
    let klein = g("dsum:2,2");
    assert_eq!(klein.square_roots(Element(0)).len(), 4);
}

#[test]
fn evenness() {
    let c12 = g("cyclic:12");
    assert!(c12.is_even_element(Element(2)));
    assert!(!c12.is_even_element(Element(3)));
    // 2 is invertible mod odd n, so everything is even.
    let c7 = g("cyclic:7");
    assert!(c7.elements().all(|e| c7.is_even_element(e)));
}

#[test]
fn index_two_subgroups_cyclic_and_symmetric() {
    let c6 = g("cyclic:6");
    let subs = c6.index_two_subgroups();
    assert_eq!(subs.len(), 1);
    assert_eq!(subs[0].0.members(), &[0, 2, 4]);
    assert_eq!(subs[0].1.members(), &[1, 3, 5]);

    let s3 = g("sym:3");
    let subs = s3.index_two_subgroups();
    assert_eq!(subs.len(), 1);
    // The subgroup is A3; its coset is the three transpositions.
    for e in subs[0].1.iter() {
        assert_eq!(s3.op(e, e), s3.identity());
    }

    assert!(g("cyclic:5").index_two_subgroups().is_empty());
}

#[test]
fn klein_group_has_three_index_two_subgroups() {
    let k = g("dsum:2,2");
    assert_eq!(k.index_two_subgroups().len(), 3);
}

#[test]
fn parse_format_roundtrip_all_families() {
    for spec in
        ["cyclic:9", "dsum:2,4", "dihedral:5", "semidihedral:4", "quaternion:2", "pq:7,3,2", "sym:4"]
    {
        let group = g(spec);
        for e in group.elements() {
            let label = group.format_element(e);
            assert_eq!(group.parse_element(&label).unwrap(), e, "{spec}: {label}");
        }
    }
}

#[test]
fn parse_specific_labels() {
    let d5 = g("dihedral:5");
    assert_eq!(d5.parse_element("f*r^2").unwrap(), Element(7));
    let c9 = g("cyclic:9");
    assert_eq!(c9.parse_element("7").unwrap(), Element(7));
    let s4 = g("sym:4");
    let e = s4.parse_element("(1 2)(3 4)").unwrap();
    assert_eq!(s4.op(e, e), s4.identity());
    assert_eq!(s4.format_element(e), "(1 2)(3 4)");
    assert!(s4.parse_element("(1 2)(2 3)").is_err());
    assert!(d5.parse_element("g^2").is_err());
}

#[test]
fn subsets_are_canonical() {
    let u = SubsetU::new(vec![3, 1, 3, 0], 5).unwrap();
    assert_eq!(u.members(), &[0, 1, 3]);
    assert!(SubsetU::new(vec![5], 5).is_err());
}

#[test]
fn associativity_spot_check_large_group() {
    // sym:6 is above the exhaustive bound; build still validates sampled
    // triples and must succeed.
    let s6 = g("sym:6");
    assert_eq!(s6.order(), 720);
    let a = s6.parse_element("(1 2)(3 4)").unwrap();
    let b = s6.parse_element("(5 6)").unwrap();
    let c = s6.parse_element("(1 3 5)").unwrap();
    assert_eq!(s6.op(s6.op(a, b), c), s6.op(a, s6.op(b, c)));
}
