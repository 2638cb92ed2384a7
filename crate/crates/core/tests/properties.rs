use clifford_core::clifford::CliffordSpace;
use clifford_core::collineation::TranslationF;
use clifford_core::field::{standard_coords, standard_recompose, BasisL, BivarPolyGF2, LElem};
use clifford_core::linalg::{rref, rref_generic};
use clifford_core::tensor::TensorAlgebra;
use proptest::prelude::*;

/// Polynomial whose monomials `u^a v^b` (a, b <= 3) are the set bits.
fn poly_from_mask(mask: u16) -> BivarPolyGF2 {
    BivarPolyGF2::from_monomials((0..16).filter(|n| mask >> n & 1 == 1).map(|n| (n % 4, n / 4)))
}

fn poly() -> impl Strategy<Value = BivarPolyGF2> {
    any::<u16>().prop_map(poly_from_mask)
}

fn nonzero_poly() -> impl Strategy<Value = BivarPolyGF2> {
    (1..=u16::MAX).prop_map(poly_from_mask)
}

fn elem() -> impl Strategy<Value = LElem> {
    (any::<u16>(), 1..=u16::MAX)
        .prop_map(|(n, d)| LElem::from_fraction(poly_from_mask(n), poly_from_mask(d)).expect("nonzero denominator"))
}

fn nonzero_elem() -> impl Strategy<Value = LElem> {
    (1..=u16::MAX, 1..=u16::MAX)
        .prop_map(|(n, d)| LElem::from_fraction(poly_from_mask(n), poly_from_mask(d)).expect("nonzero denominator"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in elem(), y in elem(), z in elem()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &x).is_zero());
        prop_assert_eq!(&x * &LElem::one(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn lowest_terms_are_canonical(n in poly(), d in nonzero_poly(), c in nonzero_poly()) {
        let x = LElem::from_fraction(n.clone(), d.clone()).unwrap();
        let scaled = LElem::from_fraction(n.mul(&c), d.mul(&c)).unwrap();
        prop_assert_eq!(&x, &scaled);
        prop_assert!(x.num().gcd(x.den()).is_one());
    }

    #[test]
    fn squaring_is_additive_and_lands_in_subfield(x in elem(), y in elem()) {
        let (sx, sy) = (x.square().into_l(), y.square().into_l());
        prop_assert_eq!((&x + &y).square().into_l(), &sx + &sy);
        prop_assert_eq!((&x * &y).square().into_l(), &sx * &sy);
        prop_assert!(sx.is_in_f());
    }

    #[test]
    fn text_round_trip(x in elem()) {
        prop_assert_eq!(x.to_string().parse::<LElem>().unwrap(), x);
    }

    #[test]
    fn gcd_divides_and_cofactors_are_coprime(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (a, b) = (a.mul(&c), b.mul(&c));
        let (g, ca, cb) = a.gcd_cofactors(&b);
        prop_assert_eq!(g.mul(&ca), a.clone());
        prop_assert_eq!(g.mul(&cb), b.clone());
        prop_assert!(ca.gcd(&cb).is_one());
        prop_assert!(g.div_exact(&c).is_some());
        prop_assert_eq!(a.gcd(&b), b.gcd(&a));
    }

    #[test]
    fn coordinates_round_trip(x in elem(), i in nonzero_elem(), j in nonzero_elem()) {
        prop_assert_eq!(standard_recompose(&standard_coords(&x)), x.clone());
        if let Ok(basis) = BasisL::new(i, j) {
            prop_assert_eq!(basis.recompose(&basis.coords(&x)), x);
        }
    }

    #[test]
    fn multiplication_map_is_a_homomorphism(x in elem(), y in elem(), z in elem(), w in elem()) {
        let alg = TensorAlgebra::standard();
        let (g, h) = (alg.pure(&x, &y), alg.pure(&z, &w));
        prop_assert_eq!(g.pi(), &x * &y);
        prop_assert_eq!(g.mul(&h).unwrap().pi(), &g.pi() * &h.pi());
        prop_assert_eq!(g.add(&h).unwrap().pi(), &g.pi() + &h.pi());
    }

    #[test]
    fn translations_compose(b in nonzero_elem(), c in nonzero_elem()) {
        let basis = BasisL::standard();
        let tb = TranslationF::new(&b, &basis).unwrap().matrix;
        let tc = TranslationF::new(&c, &basis).unwrap().matrix;
        let tbc = TranslationF::new(&(&b * &c), &basis).unwrap().matrix;
        // L is commutative, so both orders agree.
        prop_assert_eq!(tb.mul(&tc), tbc.clone());
        prop_assert_eq!(tc.mul(&tb), tbc);
    }

    #[test]
    fn class_representative_is_idempotent(a in nonzero_elem(), b in nonzero_elem(), s in nonzero_elem()) {
        let space = CliffordSpace::standard();
        let Ok(m) = space.line_through(&a, &b) else { return Ok(()) };
        let rep = space.canonical_rep(&m).unwrap();
        prop_assert_eq!(&space.canonical_rep(&rep.line).unwrap().line, &rep.line);
        let moved = space.line_times_scalar(&m, &s).unwrap();
        prop_assert_eq!(space.canonical_rep(&moved).unwrap().line, rep.line);
    }

    #[test]
    fn fraction_free_echelon_matches_generic(rows in prop::collection::vec(prop::array::uniform4(elem()), 1..5)) {
        prop_assert_eq!(rref(rows.clone()), rref_generic(rows));
    }
}
