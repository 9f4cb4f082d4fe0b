use super::*;
use crate::analysis::GroupAnalysis;
use crate::catalog;
use crate::permgroup::DEFAULT_CAP;

fn table(g: crate::permgroup::PermGroup) -> CharacterTable {
    GroupAnalysis::new(g, DEFAULT_CAP).unwrap().table
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_int(v)
}

#[test]
fn s3_table() {
    let t = table(catalog::symmetric(3));
    assert_eq!(t.degrees(), &[1, 1, 2]);
    t.validate().unwrap();
    t.check_column_orthogonality().unwrap();
    let transposition = (0..3).find(|&j| t.element_orders()[j] == 2).unwrap();
    assert_eq!(t.character(1)[transposition], int(-1));
    assert_eq!(trivial_index(&t), Some(0));
}

#[test]
fn c3_table() {
    let t = table(catalog::cyclic(3));
    let z = Cyclotomic::zeta(3, 1);
    let z2 = Cyclotomic::zeta(3, 2);
    let expected = [
        vec![int(1), int(1), int(1)],
        vec![int(1), z.clone(), z2.clone()],
        vec![int(1), z2, z],
    ];
    assert_eq!(t.character(0), &expected[0][..]);
    for row in t.irreducibles() {
        assert!(expected.contains(row));
    }
}

#[test]
fn quaternion_and_dihedral_share_degrees() {
    let q = table(catalog::quaternion());
    let d = table(catalog::dihedral(4));
    assert_eq!(q.degrees(), &[1, 1, 1, 1, 2]);
    assert_eq!(d.degrees(), q.degrees());
    assert_eq!(q.class_sizes().iter().filter(|&&s| s == 1).count(), 2);
    assert_ne!(q, d);
}

#[test]
fn m10_and_pgl_tables() {
    for g in [
        catalog::m10(),
        catalog::pgl2_9(),
        catalog::sl2_3(),
        catalog::alternating(5),
    ] {
        let t = table(g);
        t.validate().unwrap();
        t.check_column_orthogonality().unwrap();
    }
}

#[test]
fn export_import_round_trip() {
    let t = table(catalog::symmetric(4));
    let json = t.to_json().unwrap();
    let back = CharacterTable::from_json(&json).unwrap();
    assert_eq!(back, t);
    assert_eq!(back.to_json().unwrap(), json);
}

#[test]
fn perturbed_value_is_rejected() {
    let t = table(catalog::symmetric(4));
    let mut file = t.to_file().unwrap();
    let cell = &mut file.irreducibles[2][1];
    match cell.first_mut() {
        Some(term) if term.1 == 0 => term.0 += 1,
        _ => cell.push((1, 0)),
    }
    assert!(matches!(
        CharacterTable::from_file(&file),
        Err(CharTableError::InvariantViolation(_))
    ));
}

#[test]
fn partial_power_maps_are_completed() {
    let t = table(catalog::cyclic(6));
    let mut file = t.to_file().unwrap();
    for class in &mut file.classes {
        class.powermaps.retain(|&k, _| k == 2 || k == 3 || k == 5);
    }
    assert_eq!(CharacterTable::from_file(&file).unwrap(), t);
}

#[test]
fn restriction_s3_to_a3() {
    let g = GroupAnalysis::new(catalog::symmetric(3), DEFAULT_CAP).unwrap();
    let a3 = catalog::symmetric(3)
        .subgroup("A3", catalog::alternating(3).generators().to_vec())
        .unwrap();
    let h = GroupAnalysis::new(a3, DEFAULT_CAP).unwrap();
    let fusion = h.fusion_into(&g).unwrap();
    let res = h.table.restrict(2, g.table.character(2), &fusion).unwrap();
    assert_eq!(res, vec![(1, 1), (2, 1)]);
    let res = h.table.restrict(0, g.table.character(0), &fusion).unwrap();
    assert_eq!(res, vec![(0, 1)]);
}

#[test]
fn bad_fusion_gives_non_integral_multiplicity() {
    let g = GroupAnalysis::new(catalog::symmetric(3), DEFAULT_CAP).unwrap();
    let c3 = GroupAnalysis::new(catalog::cyclic(3), DEFAULT_CAP).unwrap();
    // send every non-identity class to the transposition class
    let trans = (0..3).find(|&j| g.table.element_orders()[j] == 2).unwrap();
    let fusion = vec![0, trans, trans];
    assert!(matches!(
        c3.table.restrict(2, g.table.character(2), &fusion),
        Err(CharTableError::NonIntegralMultiplicity { .. })
    ));
}

#[test]
fn admissible_primes() {
    // |S3| = 6, e = 6: bound 2·3 = 6, so q = 7 then 13
    assert_eq!(admissible_prime(6, 6, 0).unwrap(), 7);
    assert_eq!(admissible_prime(6, 6, 1).unwrap(), 13);
    assert_eq!(admissible_prime(95040, 1320, 0).unwrap(), 1321);
}

#[test]
fn independent_of_prime() {
    for g in [catalog::symmetric(4), catalog::sl2_3(), catalog::m10()] {
        let a =
            GroupAnalysis::with_options(g.clone(), DEFAULT_CAP, &DixonOptions { prime_rank: 0 })
                .unwrap();
        let b =
            GroupAnalysis::with_options(g, DEFAULT_CAP, &DixonOptions { prime_rank: 1 }).unwrap();
        assert_eq!(a.table, b.table);
    }
}
