use proptest::prelude::*;

use twolocal::fingroup::GroupElement;
use twolocal::fusion::bullet;
use twolocal::oracle::{check_table, Status, TableFile};
use twolocal::quat::{s_to_quaternion, sbar_to_rotation, DyadicAngle, SElement, SbarElement};
use twolocal::storal::{enumerate_subgroup_classes, squares_subgroup, truncation, Ambient, SSubgroup};

const LEVEL: u32 = 5;
const MODULUS: u32 = 7;

fn angle() -> impl Strategy<Value = DyadicAngle> {
    (0..1i64 << LEVEL, 0..=LEVEL).prop_map(|(num, level)| DyadicAngle::new(num, level))
}

fn s_element() -> impl Strategy<Value = SElement> {
    (angle(), any::<bool>()).prop_map(|(angle, flip)| SElement { flip, angle })
}

fn sbar_element() -> impl Strategy<Value = SbarElement> {
    (angle(), any::<bool>()).prop_map(|(angle, flip)| SbarElement { flip, angle })
}

fn subgroup(ambient: Ambient) -> impl Strategy<Value = SSubgroup> {
    let classes = enumerate_subgroup_classes(ambient, LEVEL);
    (0..classes.len()).prop_map(move |i| classes[i])
}

proptest! {
    #[test]
    fn s_law_is_associative(a in s_element(), b in s_element(), c in s_element()) {
        prop_assert_eq!(a.op(&b).op(&c), a.op(&b.op(&c)));
        prop_assert_eq!(a.op(&a.inv()), SElement::torus(DyadicAngle::new(0, 0)));
    }

    #[test]
    fn sbar_law_is_associative(a in sbar_element(), b in sbar_element(), c in sbar_element()) {
        prop_assert_eq!(a.op(&b).op(&c), a.op(&b.op(&c)));
    }

    #[test]
    fn matrix_map_is_a_homomorphism(a in s_element(), b in s_element()) {
        let q = |x: SElement| s_to_quaternion(x, MODULUS).unwrap();
        prop_assert_eq!(q(a.op(&b)), q(a).op(&q(b)));
    }

    #[test]
    fn rotation_map_is_a_homomorphism(a in sbar_element(), b in sbar_element()) {
        let r = |x: SbarElement| sbar_to_rotation(x, MODULUS).unwrap();
        prop_assert_eq!(r(a.op(&b)), r(a).op(&r(b)));
    }

    #[test]
    fn quotient_to_sbar_is_a_homomorphism(a in s_element(), b in s_element()) {
        prop_assert_eq!(a.op(&b).to_sbar(), a.to_sbar().op(&b.to_sbar()));
    }

    #[test]
    fn bullet_is_idempotent_and_monotone(p in subgroup(Ambient::Su2), q in subgroup(Ambient::Su2)) {
        prop_assert_eq!(bullet(&bullet(&p)), bullet(&p));
        if p.is_subgroup_of(&q) {
            prop_assert!(bullet(&p).is_subgroup_of(&bullet(&q)));
        }
    }

    #[test]
    fn squares_lie_in_the_subgroup(p in subgroup(Ambient::So3)) {
        prop_assert!(squares_subgroup(&p).is_subgroup_of(&p));
    }

    #[test]
    fn membership_matches_the_materialized_group(p in subgroup(Ambient::Su2), x in s_element()) {
        let finite = if p.is_infinite() { p.truncate(LEVEL) } else { p };
        let g = finite.materialize::<SElement>().unwrap();
        if x.angle.level() <= LEVEL {
            prop_assert_eq!(finite.contains(&x), g.index_of(&x).is_some());
        }
    }

    #[test]
    fn exported_tables_satisfy_the_axioms(level in 0u32..=3, swap in any::<bool>()) {
        let g = truncation::<SElement>(level).unwrap();
        let mut file = TableFile::from_group("S_n", &g);
        prop_assert_eq!(check_table(&file).status, Status::Pass);
        if swap && file.elements.len() > 2 {
            // two equal entries in one row break the Latin square
            let v = file.table[1][1];
            file.table[1][2] = v;
            prop_assert_eq!(check_table(&file).status, Status::Fail);
        }
    }
}
