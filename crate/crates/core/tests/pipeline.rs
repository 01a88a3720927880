use twogroups_core::classification::{compose_homs, enumerate_homs, SpecialHom};
use twogroups_core::cohomology::{cohomology_group, GModule};
use twogroups_core::finite_algebra::{
    cyclic_group, validate_action_abelian, FinAbGroup, FiniteGroup,
};
use twogroups_core::json::{
    from_text, parse_quadruple, parse_special_hom, quadruple_to_value, special_hom_to_value,
    to_line,
};
use twogroups_core::monoidal_groupoid::{
    check_zigzags, groupoid_from_quadruple, groupoid_to_quadruple, improve,
};
use twogroups_core::twogroups::{
    aut2group, crossed_to_strict, skeletal_strict_to_quadruple, Quadruple,
};

fn trivial_module(g: FiniteGroup, factors: &[usize]) -> GModule {
    let h = FinAbGroup::new(factors.to_vec()).unwrap();
    let perms = vec![(0..h.order()).collect::<Vec<usize>>(); g.order()];
    let action = validate_action_abelian(&g, &h, &perms).unwrap();
    GModule::new(g, h, action).unwrap()
}

fn same_hom(a: &SpecialHom, b: &SpecialHom) -> bool {
    a.phi().map() == b.phi().map()
        && a.psi().table() == b.psi().table()
        && a.k().values() == b.k().values()
}

#[test]
fn skeletal_strict_round_trips_through_the_groupoid_model() {
    // the automorphism model of an abelian group has identity boundary,
    // hence a skeletal strict model
    let cm = aut2group(&cyclic_group(3).unwrap(), 24).unwrap();
    let strict = crossed_to_strict(&cm);
    let q = skeletal_strict_to_quadruple(&strict).unwrap();
    let (m, _) = groupoid_from_quadruple(&q);
    assert_eq!(groupoid_to_quadruple(&m).unwrap(), q);
}

#[test]
fn improvement_fixes_the_canonical_choice_on_a_twisted_model() {
    let module = trivial_module(cyclic_group(3).unwrap(), &[3]);
    let coh = cohomology_group(&module, 3, 1 << 20).unwrap();
    let q = Quadruple::new(module, coh.representative_of(&[1])).unwrap();
    let (m, canonical) = groupoid_from_quadruple(&q);
    let fixed = improve(&m, &canonical).unwrap();
    for x in 0..m.n_objects() {
        assert_eq!(check_zigzags(&m, &fixed, x).unwrap(), (true, true));
    }
    assert_eq!(improve(&m, &fixed).unwrap(), fixed);
}

#[test]
fn hom_composition_is_closed_on_the_endomorphism_monoid() {
    let q = Quadruple::strict(&trivial_module(cyclic_group(2).unwrap(), &[2]));
    let homs = enumerate_homs(&q, &q, 1 << 20).unwrap();
    assert_eq!(homs.len(), 8);
    let id = SpecialHom::identity(&q);
    for f in &homs {
        for g in &homs {
            let fg = compose_homs(f, g).unwrap();
            assert!(homs.iter().any(|h| same_hom(h, &fg)));
        }
        assert!(same_hom(&compose_homs(&id, f).unwrap(), f));
        assert!(same_hom(&compose_homs(f, &id).unwrap(), f));
    }
}

#[test]
fn documents_survive_a_text_round_trip() {
    let module = trivial_module(cyclic_group(3).unwrap(), &[3]);
    let coh = cohomology_group(&module, 3, 1 << 20).unwrap();
    let q = Quadruple::new(module, coh.representative_of(&[2])).unwrap();
    let text = to_line(&quadruple_to_value(&q));
    assert_eq!(parse_quadruple(&from_text(&text).unwrap()).unwrap(), q);

    let homs = enumerate_homs(&q, &q, 1 << 20).unwrap();
    for f in &homs {
        let text = to_line(&special_hom_to_value(f));
        let back = parse_special_hom(&from_text(&text).unwrap(), &q, &q).unwrap();
        assert!(same_hom(&back, f));
    }
}
