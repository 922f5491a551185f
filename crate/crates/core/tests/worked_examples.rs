mod common;

use abds::apparent::{
    apparent_distance, involved_hypercolumns, mad, Evaluator, HyperMatrix, StopReason,
};
use abds::codes::{
    apparent_distance_at_alpha, apparent_distance_over_u, generating_idempotent, AbelianCode,
};
use abds::dsbounds::{bch_optimal, ht_optimal, residue_set, BoundSet};
use abds::gfield::{FieldContext, Gf};
use abds::orbits::{cyclotomic_coset, is_union_of_orbits, q_orbit, DefiningSet, IndexTuple};
use common::{code, shape, EX1_REPS, EX2_REPS};

fn t(c: &[usize]) -> IndexTuple {
    IndexTuple::from(c)
}

#[test]
fn orbit_examples() {
    assert_eq!(
        q_orbit(&t(&[0, 0]), &shape(5, &[3, 24])).unwrap(),
        vec![t(&[0, 0])]
    );
    assert_eq!(
        q_orbit(&t(&[0, 1]), &shape(5, &[3, 24])).unwrap(),
        vec![t(&[0, 1]), t(&[0, 5])]
    );
    assert_eq!(
        q_orbit(&t(&[1, 0]), &shape(2, &[3, 35])).unwrap(),
        vec![t(&[1, 0]), t(&[2, 0])]
    );
    assert_eq!(cyclotomic_coset(1, 2, 7).unwrap(), vec![1, 2, 4]);
    assert_eq!(cyclotomic_coset(5, 2, 35).unwrap(), vec![5, 10, 20]);
    assert!(cyclotomic_coset(1, 2, 6).is_err());
}

#[test]
fn defining_set_sizes() {
    let s = shape(2, &[3, 35]);
    let reps = [t(&[0, 5]), t(&[0, 7]), t(&[0, 15]), t(&[1, 0])];
    assert_eq!(DefiningSet::from_reps(&s, &reps).unwrap().len(), 12);
    let s = shape(2, &[3, 7]);
    assert_eq!(
        DefiningSet::from_reps(&s, &[t(&[0, 1]), t(&[1, 0])])
            .unwrap()
            .len(),
        5
    );
    assert!(DefiningSet::from_reps(&s, &[]).unwrap().is_empty());

    let s = shape(5, &[3, 24]);
    assert!(is_union_of_orbits([t(&[0, 1]), t(&[0, 5])].iter(), &s).unwrap());
    assert!(!is_union_of_orbits([t(&[0, 1])].iter(), &s).unwrap());
    assert!(is_union_of_orbits([].iter(), &s).unwrap());
}

#[test]
fn three_by_twenty_four() {
    let c = code(5, &[3, 24], EX1_REPS);
    let m = HyperMatrix::afforded_by(c.defining_set());
    assert_eq!(m.axis_support(0), vec![true; 3]);
    let zero_cols: Vec<usize> = (0..24).filter(|&k| !m.axis_support(1)[k]).collect();
    assert_eq!(zero_cols, vec![0, 1, 5, 6]);

    let ht = apparent_distance(&m, &BoundSet::ht());
    assert_eq!(ht.value, 8);
    assert_eq!((ht.axis(0).omega, ht.axis(1).omega), (1, 4));
    assert_eq!(ht.axis(1).epsilon, 2);
    let bch = apparent_distance(&m, &BoundSet::bch());
    assert_eq!(bch.value, 6);
    assert_eq!(
        (bch.axis(0).delta, bch.axis(1).delta, bch.axis(1).omega),
        (5, 6, 3)
    );
    assert_eq!(c.dimension(), 52);

    // The first row's zero set reaches 5 under HT, not the 8 that needs a
    // stronger bound, so row 0 is not involved.
    let row0 = m.hypercolumn(0, 0).unwrap();
    assert_eq!(Evaluator::new(BoundSet::bch_ht()).distance(&row0), 5);
    let inv = involved_hypercolumns(&m, &BoundSet::bch_ht()).unwrap();
    assert!(inv.iter().all(|&(axis, _)| axis == 1));
}

#[test]
fn three_by_twenty_four_minimum() {
    let c = code(5, &[3, 24], EX1_REPS);
    let b = BoundSet::bch_ht();
    let r = apparent_distance_at_alpha(&c, &b).unwrap();
    assert_eq!(r.trace.distances(), vec![8, 5]);
    assert_eq!(r.bound_value, 5);
    assert_eq!(r.trace.first_min, 1);
    assert_eq!(apparent_distance_over_u(&c, &b).unwrap().bound_value, 5);
}

#[test]
fn five_by_fifteen() {
    let c = code(2, &[5, 15], EX2_REPS);
    let m = HyperMatrix::afforded_by(c.defining_set());
    let b = BoundSet::bch_ht();
    assert_eq!(apparent_distance(&m, &b).value, 8);
    assert_eq!(c.dimension(), 52);

    let trace = mad(&m, c.shape(), &b).unwrap();
    assert_eq!(trace.distances(), vec![8, 8]);
    assert_eq!(trace.values(), vec![8, 8]);
    assert_eq!(trace.result, 8);
    assert_eq!(trace.first_min, 0);
    assert_eq!(trace.stop_reason, StopReason::ZeroMatrix);
    assert!(apparent_distance_over_u(&c, &b).unwrap().bound_value >= 8);
}

#[test]
fn table_rows() {
    let c1 = code(2, &[3, 7], &[&[0, 1], &[1, 0]]);
    assert_eq!((c1.len(), c1.dimension()), (21, 16));
    assert_eq!(
        apparent_distance_over_u(&c1, &BoundSet::bch())
            .unwrap()
            .bound_value,
        3
    );

    let c2 = code(2, &[3, 15], &[&[0, 1], &[1, 0]]);
    assert_eq!((c2.len(), c2.dimension()), (45, 39));
    assert_eq!(
        apparent_distance_over_u(&c2, &BoundSet::bch())
            .unwrap()
            .bound_value,
        3
    );

    let c3 = code(2, &[3, 17], &[&[0, 1], &[1, 3]]);
    assert_eq!((c3.len(), c3.dimension()), (51, 35));
    assert_eq!(
        apparent_distance_over_u(&c3, &BoundSet::ht())
            .unwrap()
            .bound_value,
        5
    );

    let c5 = code(2, &[3, 35], &[&[0, 5], &[0, 7], &[0, 15], &[1, 0]]);
    assert_eq!((c5.len(), c5.dimension()), (105, 93));
    assert_eq!(
        apparent_distance_over_u(&c5, &BoundSet::from_names("ht,bch").unwrap())
            .unwrap()
            .bound_value,
        4
    );
}

#[test]
fn seventeen_coset_pattern() {
    // {15,16}, {8,9}, {1,2}: a = 3, c2 = 10, s' = 2.
    let coset = residue_set(17, [1, 2, 4, 8, 9, 13, 15, 16]);
    assert_eq!(bch_optimal(&coset), 3);
    assert_eq!(ht_optimal(&coset).unwrap(), 5);
}

#[test]
fn idempotent_of_single_point() {
    // D = I ∖ {0}: e = n^{-1} · (sum of all monomials).
    let s = shape(2, &[3, 3]);
    let ctx = FieldContext::new(&s).unwrap();
    let mut mask = vec![true; 9];
    mask[0] = false;
    let c = AbelianCode::new(DefiningSet::from_mask(&s, mask).unwrap());
    let e = generating_idempotent(&c, &ctx).unwrap();
    assert!(e.coeffs().iter().all(|&x| x == Gf::ONE));

    let s = shape(5, &[3, 4]);
    let ctx = FieldContext::new(&s).unwrap();
    let mut mask = vec![true; 12];
    mask[0] = false;
    let c = AbelianCode::new(DefiningSet::from_mask(&s, mask).unwrap());
    let e = generating_idempotent(&c, &ctx).unwrap();
    // 12 ≡ 2 (mod 5), and 2^{-1} = 3.
    assert!(e.coeffs().iter().all(|&x| x == Gf(3)));
}
