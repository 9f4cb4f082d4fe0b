mod common;

use blockheight::blocktheory::block_partition;
use blockheight::catalog;
use blockheight::combinatorics::{degree_sn_valuation, legendre, nakayama_blocks};
use common::analyze;
use num_traits::ToPrimitive;

type BlockShape = (u32, Vec<(u64, u32)>);

/// Blocks of `S_n` from the ω-congruence engine agree with the partitions
/// grouped by `ℓ`-core: same degree/height multisets and defects.
#[test]
fn nakayama_matches_block_engine() {
    for n in 2..=8u32 {
        let a = analyze(catalog::symmetric(n as usize));
        let t = &a.table;
        for ell in [2u64, 3, 5, 7] {
            let part = block_partition(t, ell).unwrap();
            let mut engine: Vec<BlockShape> = (0..part.len())
                .map(|b| {
                    let mut chars: Vec<(u64, u32)> = part.blocks[b]
                        .characters
                        .iter()
                        .map(|&c| (t.degrees()[c], part.heights[c]))
                        .collect();
                    chars.sort();
                    (part.blocks[b].defect, chars)
                })
                .collect();
            engine.sort();

            let full = legendre(n as u64, ell);
            let mut combinatorial: Vec<BlockShape> = nakayama_blocks(n, ell)
                .unwrap()
                .into_iter()
                .map(|blk| {
                    let defect = legendre(ell * blk.weight as u64, ell);
                    let mut chars: Vec<(u64, u32)> = blk
                        .partitions
                        .iter()
                        .map(|lambda| {
                            let d = degree_sn_valuation(lambda, ell);
                            (d.degree.to_u64().unwrap(), d.valuation + defect - full)
                        })
                        .collect();
                    chars.sort();
                    (defect, chars)
                })
                .collect();
            combinatorial.sort();
            assert_eq!(engine, combinatorial, "S{n}, ell={ell}");
        }
    }
}

/// For `ℓ ≤ b < 2ℓ` and `a = b + wℓ < ℓ²`, every height-zero character in an
/// `ℓ`-block of `S_a` with core of size `b` has degree with `ℓ`-part `ℓ`.
#[test]
fn height_zero_degrees_have_ell_part_ell() {
    for ell in [3u64, 5, 7] {
        let mut blocks_seen = 0;
        for a in ell as u32..(ell * ell) as u32 {
            for blk in nakayama_blocks(a, ell).unwrap() {
                let b = blk.core.size() as u64;
                if !(ell..2 * ell).contains(&b) {
                    continue;
                }
                blocks_seen += 1;
                let vals: Vec<u32> = blk
                    .partitions
                    .iter()
                    .map(|l| degree_sn_valuation(l, ell).valuation)
                    .collect();
                let min = *vals.iter().min().unwrap();
                assert_eq!(min, 1, "a={a}, ell={ell}, core {}", blk.core);
                // height zero means minimal valuation within the block
                assert_eq!(
                    legendre(a as u64, ell) - legendre(ell * blk.weight as u64, ell),
                    min
                );
            }
        }
        assert!(blocks_seen > 0);
    }
}
