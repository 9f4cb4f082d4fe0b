use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::analysis::GroupAnalysis;
use crate::catalog;
use crate::permgroup::{PermGroup, DEFAULT_CAP};

fn analyze(g: PermGroup) -> GroupAnalysis {
    GroupAnalysis::new(g, DEFAULT_CAP).unwrap()
}

fn block_degrees(t: &CharacterTable, part: &BlockPartition) -> Vec<Vec<u64>> {
    part.blocks
        .iter()
        .map(|b| b.characters.iter().map(|&c| t.degrees()[c]).collect())
        .collect()
}

#[test]
fn omega_of_s3() {
    let s3 = analyze(catalog::symmetric(3));
    let t = &s3.table;
    assert_eq!(
        central_character(t, 0).unwrap(),
        t.class_sizes()
            .iter()
            .map(|&s| Cyclotomic::from_int(s))
            .collect::<Vec<_>>()
    );
    let two = t.degrees().iter().position(|&d| d == 2).unwrap();
    let omega = central_character(t, two).unwrap();
    let three_cycles = t.element_orders().iter().position(|&o| o == 3).unwrap();
    assert_eq!(omega[three_cycles], Cyclotomic::from_int(-1));
}

#[test]
fn s4_at_2_is_one_block() {
    let s4 = analyze(catalog::symmetric(4));
    let part = block_partition(&s4.table, 2).unwrap();
    assert_eq!(part.len(), 1);
    assert_eq!(part.blocks[0].defect, 3);
    let by_degree: Vec<(u64, u32)> = s4
        .table
        .degrees()
        .iter()
        .copied()
        .zip(part.heights.iter().copied())
        .collect();
    assert_eq!(by_degree, vec![(1, 0), (1, 0), (2, 1), (3, 0), (3, 0)]);
    assert_eq!(part.mh(0), MinHeight::Finite(1));
}

#[test]
fn a5_at_2() {
    let a5 = analyze(catalog::alternating(5));
    let part = block_partition(&a5.table, 2).unwrap();
    let mut degs = block_degrees(&a5.table, &part);
    degs.iter_mut().for_each(|d| d.sort());
    assert_eq!(degs, vec![vec![1, 3, 3, 5], vec![4]]);
    assert_eq!(part.blocks[0].defect, 2);
    assert!(part.blocks[0].principal);
    assert_eq!(part.blocks[1].defect, 0);
    assert_eq!(part.mh(0), MinHeight::Infinite);
    assert_eq!(part.mh(1), MinHeight::Infinite);
}

#[test]
fn s3_at_3_and_coprime_prime() {
    let s3 = analyze(catalog::symmetric(3));
    let part = block_partition(&s3.table, 3).unwrap();
    assert_eq!(part.len(), 1);
    assert_eq!(part.blocks[0].defect, 1);
    assert_eq!(part.mh(0), MinHeight::Infinite);
    let part = block_partition(&s3.table, 5).unwrap();
    assert_eq!(part.len(), 3);
    assert!(part
        .blocks
        .iter()
        .all(|b| b.defect == 0 && b.characters.len() == 1));
}

#[test]
fn partition_independent_of_root_choice() {
    for (g, p) in [
        (catalog::affine_cyclic(9, &[4]), 2u64),
        (catalog::sl2_3(), 2),
        (catalog::cyclic(12), 5),
        (catalog::m10(), 3),
        (catalog::pgl2_9(), 3),
        (catalog::cyclic(7), 2),
    ] {
        let a = analyze(g);
        let red = Reduction::new(a.table.exponent(), p).unwrap();
        let reference = block_partition(&a.table, p).unwrap();
        for choice in 1..red.root_choices() {
            assert_eq!(
                block_partition_with_root(&a.table, p, choice).unwrap(),
                reference
            );
        }
    }
}

#[test]
fn reduction_basics() {
    assert_eq!(reduce_mod_p(&Cyclotomic::from_int(17), 5).unwrap(), vec![2]);
    assert_eq!(reduce_mod_p(&Cyclotomic::from_int(-1), 7).unwrap(), vec![6]);
    let red = Reduction::new(5, 5).unwrap();
    assert!(red.field().is_one(&red.reduce(&Cyclotomic::zeta(5, 1))));
    let red = Reduction::new(25, 5).unwrap();
    assert!(red.field().is_one(&red.reduce(&Cyclotomic::zeta(25, 7))));
    let red = Reduction::new(6, 2).unwrap();
    assert_eq!(red.field().degree(), 2);
}

fn element(e: u64) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((-20i64..20, 0..e), 0..6).prop_map(move |terms| {
        Cyclotomic::from_terms(e, terms.into_iter().map(|(c, k)| (BigInt::from(c), k)))
    })
}

proptest! {
    #[test]
    fn reduction_is_a_ring_map(
        (e, p, x, y) in prop_oneof![Just((6u64, 2u64)), Just((12, 3)), Just((20, 2)), Just((15, 7)), Just((8, 3))]
            .prop_flat_map(|(e, p)| (Just(e), Just(p), element(e), element(e)))
    ) {
        let red = Reduction::new(e, p).unwrap();
        let f = red.field();
        prop_assert_eq!(red.reduce(&x.add(&y)), f.add(&red.reduce(&x), &red.reduce(&y)));
        prop_assert_eq!(red.reduce(&x.mul(&y)), f.mul(&red.reduce(&x), &red.reduce(&y)));
        prop_assert!(f.is_one(&red.reduce(&Cyclotomic::one())));
    }
}

#[test]
fn block_invariants_hold() {
    for g in [
        catalog::symmetric(5),
        catalog::alternating(6),
        catalog::sl2_3(),
        catalog::quaternion(),
        catalog::m10(),
        catalog::affine_cyclic(9, &[5]),
    ] {
        let a = analyze(g);
        for p in [2u64, 3, 5, 7] {
            let part = block_partition(&a.table, p).unwrap();
            let principal = &part.blocks[part.principal()];
            assert!(principal.principal && principal.defect == part.full_defect);
            for (b, block) in part.blocks.iter().enumerate() {
                assert!(part.block_heights(b).contains(&0));
                if block.characters.len() == 1 {
                    assert_eq!(block.defect, 0, "{} p={p}", a.group.name());
                }
                if block.defect == 0 {
                    assert_eq!(block.characters.len(), 1);
                }
            }
        }
    }
}

#[test]
fn covering_a3_in_s3_and_a4_in_s4() {
    let s3 = analyze(catalog::symmetric(3));
    let a3 = analyze(catalog::alternating(3));
    let (gp, np) = (
        block_partition(&s3.table, 3).unwrap(),
        block_partition(&a3.table, 3).unwrap(),
    );
    let cov = block_covering(&s3, &gp, &a3, &np).unwrap();
    assert_eq!(cov.covers, vec![vec![0]]);

    let s4 = analyze(catalog::symmetric(4));
    let a4 = analyze(catalog::alternating(4));
    let (gp, np) = (
        block_partition(&s4.table, 2).unwrap(),
        block_partition(&a4.table, 2).unwrap(),
    );
    let checks = normal_index_check(&s4, &gp, &a4, &np).unwrap().unwrap();
    assert_eq!(checks.len(), 1);
    assert!(checks[0].holds);
    assert_eq!(
        (checks[0].sub_defect, checks[0].defects[0], checks[0].a),
        (2, 3, 1)
    );
}

#[test]
fn non_normal_subgroup_is_rejected() {
    let s3 = analyze(catalog::symmetric(3));
    let c2 = analyze(
        PermGroup::new(
            "C2",
            3,
            vec![crate::perm::Perm::from_cycles(3, &[&[1, 2]]).unwrap()],
        )
        .unwrap(),
    );
    let (gp, np) = (
        block_partition(&s3.table, 2).unwrap(),
        block_partition(&c2.table, 2).unwrap(),
    );
    assert!(matches!(
        block_covering(&s3, &gp, &c2, &np),
        Err(BlockError::NotNormal(_))
    ));
}

#[test]
fn conjugation_action_detects_non_invariant_blocks() {
    // the two nontrivial linear characters of C3 are swapped by S3
    let s3 = analyze(catalog::symmetric(3));
    let a3 = analyze(catalog::alternating(3));
    let np = block_partition(&a3.table, 2).unwrap();
    assert_eq!(
        invariant_blocks(&s3, &a3, &np).unwrap(),
        vec![true, false, false]
    );
}

#[test]
fn em_reports() {
    let none = BTreeMap::new();
    let s4 = analyze(catalog::symmetric(4));
    let r = verify_em_group(&s4, 2, &none, DEFAULT_CAP).unwrap();
    assert_eq!(r.blocks.len(), 1);
    assert_eq!(r.blocks[0].mh_d, Some(MinHeight::Finite(1)));
    assert_eq!(r.worst(), Verdict::Holds);

    let a5 = analyze(catalog::alternating(5));
    let r = verify_em_group(&a5, 2, &none, DEFAULT_CAP).unwrap();
    assert_eq!(r.blocks[0].defect_group, DefectGroupStatus::Sylow);
    assert_eq!(r.blocks[0].mh_d, Some(MinHeight::Infinite));
    assert_eq!(r.blocks[1].defect_group, DefectGroupStatus::Trivial);
    assert_eq!(r.worst(), Verdict::Holds);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["blocks"][0]["mh_b"], "inf");
    assert_eq!(json["blocks"][0]["verdict"], "holds");
}

#[test]
fn non_full_defect_blocks_are_open_or_user_asserted() {
    let s5 = analyze(catalog::symmetric(5));
    let part = block_partition(&s5.table, 3).unwrap();
    let partial: Vec<usize> = (0..part.len())
        .filter(|&b| part.blocks[b].defect > 0 && part.blocks[b].defect < part.full_defect)
        .collect();
    let sylow = crate::permgroup::sylow_subgroup(&s5.elements, 3).unwrap();
    let r = verify_em(
        &s5.table,
        &part,
        Some(&sylow),
        &BTreeMap::new(),
        DEFAULT_CAP,
    )
    .unwrap();
    assert!(r.blocks.iter().all(|b| b.verdict == Verdict::Holds));
    assert!(partial.is_empty());

    let s7 = analyze(catalog::symmetric(7));
    let part = block_partition(&s7.table, 2).unwrap();
    let partial = (0..part.len())
        .find(|&b| part.blocks[b].defect > 0 && part.blocks[b].defect < part.full_defect)
        .expect("S7 has a 2-block of weight 2");
    assert_eq!(part.blocks[partial].defect, 3);
    let sylow = crate::permgroup::sylow_subgroup(&s7.elements, 2).unwrap();
    let r = verify_em(
        &s7.table,
        &part,
        Some(&sylow),
        &BTreeMap::new(),
        DEFAULT_CAP,
    )
    .unwrap();
    assert_eq!(r.blocks[partial].verdict, Verdict::Open);
    assert_eq!(r.worst(), Verdict::Open);

    let user = BTreeMap::from([(partial, catalog::dihedral(4))]);
    let r = verify_em(&s7.table, &part, Some(&sylow), &user, DEFAULT_CAP).unwrap();
    assert_eq!(
        r.blocks[partial].defect_group,
        DefectGroupStatus::UserAsserted
    );
    assert_eq!(r.blocks[partial].verdict, Verdict::Holds);

    let wrong = BTreeMap::from([(partial, catalog::symmetric(5))]);
    assert!(matches!(
        verify_em(&s7.table, &part, Some(&sylow), &wrong, DEFAULT_CAP),
        Err(BlockError::DefectOrderMismatch { .. })
    ));
}
