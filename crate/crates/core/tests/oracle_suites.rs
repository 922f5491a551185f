mod common;

use abds::apparent::{Evaluator, HyperMatrix};
use abds::codes::AbelianCode;
use abds::dsbounds::BoundSet;
use abds::gfield::FieldContext;
use abds::oracle::{
    all_defining_sets, check_mad_lattice, check_soundness, check_weight_theorem, lattice_min,
    min_distance_bruteforce, OracleBudget,
};
use abds::orbits::DefiningSet;
use common::{binary_min_distance, binary_weight_distribution, code, shape, EX2_REPS};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_agrees_with_dual_weights() {
    for r in [[3usize, 5], [3, 7], [5, 3]] {
        let s = shape(2, &r);
        let ctx = FieldContext::new(&s).unwrap();
        for mask in all_defining_sets(&s, 16).unwrap() {
            let c = AbelianCode::new(DefiningSet::from_mask(&s, mask).unwrap());
            if c.is_zero() {
                continue;
            }
            let a = binary_weight_distribution(&c);
            assert_eq!(a[0], 1);
            assert_eq!(a.iter().sum::<u128>(), 1 << c.dimension());
            assert_eq!(
                min_distance_bruteforce(&c, &ctx, &OracleBudget::default()).unwrap(),
                binary_min_distance(&c)
            );
        }
    }
}

#[test]
fn small_table_code() {
    let c1 = code(2, &[3, 7], &[&[0, 1], &[1, 0]]);
    let ctx = FieldContext::new(c1.shape()).unwrap();
    assert_eq!(
        min_distance_bruteforce(&c1, &ctx, &OracleBudget::default()).unwrap(),
        3
    );
}

#[test]
fn soundness_over_several_fields() {
    let ev = Evaluator::new(BoundSet::bch_ht());
    let budget = OracleBudget::new(1 << 16, 1 << 12).unwrap();
    for (q, r) in [
        (2u64, vec![3usize, 5]),
        (3, vec![4, 2]),
        (4, vec![3, 3]),
        (5, vec![4]),
        (3, vec![13]),
        (2, vec![17]),
    ] {
        let s = shape(q, &r);
        let ctx = FieldContext::new(&s).unwrap();
        let mut checked = 0;
        for mask in all_defining_sets(&s, 12).unwrap() {
            let c = AbelianCode::new(DefiningSet::from_mask(&s, mask).unwrap());
            if c.is_zero() {
                continue;
            }
            match check_soundness(&c, &ctx, &ev, &budget) {
                Ok(chk) => {
                    assert_eq!(
                        chk.violations,
                        0,
                        "q={q} r={r:?} {:?}",
                        c.defining_set().orbit_reps()
                    );
                    checked += 1;
                }
                Err(abds::Error::Capacity { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn weight_inequality_on_three_shapes() {
    let ev = Evaluator::new(BoundSet::bch_ht());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (q, r) in [(4u64, [3usize, 3]), (2, [3, 5]), (3, [2, 4])] {
        let ctx = FieldContext::new(&shape(q, &r)).unwrap();
        let w = check_weight_theorem(&ctx, &ev, 1000, &mut rng).unwrap();
        assert_eq!(w.violations, 0, "q={q} r={r:?}");
    }
}

#[test]
fn search_matches_lattice_on_small_shapes() {
    let ev = Evaluator::new(BoundSet::bch_ht());
    let budget = OracleBudget::default();
    let s = shape(2, &[3, 5]);
    for mask in all_defining_sets(&s, 8).unwrap() {
        let m = HyperMatrix::new(vec![3, 5], mask.iter().map(|&b| !b).collect()).unwrap();
        if m.is_zero() {
            continue;
        }
        let chk = check_mad_lattice(&m, &s, &ev, &budget).unwrap();
        assert!(chk.equal, "{m:?}");
        assert_eq!(chk.filtration_violations, 0);
    }
}

#[test]
fn five_by_fifteen_lattice_and_distance() {
    let c = code(2, &[5, 15], EX2_REPS);
    let ev = Evaluator::new(BoundSet::bch_ht());
    let m = HyperMatrix::afforded_by(c.defining_set());
    let budget = OracleBudget::new(1 << 24, 1 << 13).unwrap();
    assert_eq!(lattice_min(&m, c.shape(), &ev, &budget).unwrap(), 8);
    assert_eq!(binary_min_distance(&c), 8);
}

#[test]
fn lattice_budget() {
    let c = code(2, &[5, 15], EX2_REPS);
    let ev = Evaluator::new(BoundSet::bch_ht());
    let m = HyperMatrix::afforded_by(c.defining_set());
    let err = check_mad_lattice(&m, c.shape(), &ev, &OracleBudget::default()).unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn larger_table_codes_are_tight() {
    let c3 = code(2, &[3, 17], &[&[0, 1], &[1, 3]]);
    assert_eq!(binary_min_distance(&c3), 5);
    let c5 = code(2, &[3, 35], &[&[0, 5], &[0, 7], &[0, 15], &[1, 0]]);
    assert_eq!(binary_min_distance(&c5), 4);
}
