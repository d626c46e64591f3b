//! Invariants of trivializations and of divisor classes on hyperelliptic curves.

use proptest::prelude::*;
use quadpencil::binary_form::BinaryForm;
use quadpencil::correspondence::{gc_to_orb, Triple};
use quadpencil::descent::{claimed_isotropic_dim, jp_check, random_divisor_fp, HyperCurve};
use quadpencil::etale::SquareClassWitness;
use quadpencil::field::FieldDescriptor;
use quadpencil::pencil::{char_scheme, CharScheme};
use quadpencil::quasisplit::{canonical_isotropic, extract_trivialization, is_quasisplit_fp};
use quadpencil::random::{random_algebra, random_nonzero, random_separable_monic, random_unit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fp(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `canonical_isotropic` followed by `extract_trivialization` gives back a
    /// witness for the same class, with the chain bound `dim ≥ m - j`.
    #[test]
    fn trivialization_roundtrip(p in prop::sample::select(vec![3u64, 5, 7, 11]), n in prop::sample::select(vec![3usize, 5, 7]), seed in any::<u64>()) {
        let field = fp(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_algebra(field, n, &mut rng).unwrap();
        let gamma = random_unit(&l, &mut rng).unwrap();
        let c = random_nonzero(field, &mut rng);
        let alpha = l.scale(&l.mul(&gamma, &gamma), &c);
        let w = SquareClassWitness::new(&l, &alpha, c, gamma).unwrap();
        let t = Triple::new(l.clone(), alpha.clone()).unwrap();
        prop_assert!(is_quasisplit_fp(&t).unwrap());

        let m = canonical_isotropic(&t, &w).unwrap();
        prop_assert_eq!(m.dim(), l.half_degree());
        prop_assert!(m.is_isotropic_for(&gc_to_orb(&t).unwrap()).unwrap());

        let tr = extract_trivialization(&t, &m).unwrap();
        prop_assert!(l.verify_square_class_witness(&alpha, &tr.witness));
        let half = l.half_degree();
        for (j, (&a, &b)) in tr.chain_dims.iter().zip(&tr.preimage_chain_dims).enumerate() {
            prop_assert!(a + j >= half, "M_{} has dim {}", j, a);
            prop_assert!(b + j >= half, "N_{} has dim {}", j, b);
        }
    }

    /// Each divisor class has square norm, lands on the curve's
    /// characteristic scheme, and for even genus the claimed dimension never
    /// exceeds the degree count.
    #[test]
    fn divisor_classes(p in prop::sample::select(vec![5u64, 7]), m in prop::sample::select(vec![1usize, 2, 3, 4]), seed in any::<u64>()) {
        let field = fp(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 * m + 1;
        let curve = HyperCurve::new(random_separable_monic(field, n, &mut rng).unwrap()).unwrap();
        let d = random_divisor_fp(&curve, &mut rng).unwrap();
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let report = jp_check(&curve, &d, 10_000).unwrap();
        prop_assert_eq!(report.norm_is_square, Some(true));
        prop_assert!(report.degree_count_isotropic);
        prop_assert_eq!(report.claimed_dim, claimed_isotropic_dim(m));
        if m % 2 == 0 {
            prop_assert!(report.claimed_dim <= report.degree_count_dim);
            prop_assert!(!report.discrepancy());
        }
        let t = Triple::new(curve.algebra().clone(), report.alpha.clone()).unwrap();
        let s = char_scheme(&gc_to_orb(&t).unwrap()).unwrap();
        prop_assert_eq!(s, CharScheme::from_form(&BinaryForm::homogenize(curve.f(), n)));
    }
}
