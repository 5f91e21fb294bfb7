use num_bigint::BigInt;
use tricomm::groups::{generates_alt_or_sym, jordan_route, order_route, StabilizerChain};
use tricomm::oracle::class_representative;
use tricomm::partitions::enumerate_partitions;
use tricomm::{GeneratedGroup, GenerationClass, Permutation};

fn is_block(elements: &[Permutation], set: &[bool]) -> bool {
    elements.iter().all(|g| {
        let mut hit = 0;
        let mut size = 0;
        for (x, &inside) in set.iter().enumerate() {
            if inside {
                size += 1;
                if set[g.apply(x + 1) - 1] {
                    hit += 1;
                }
            }
        }
        hit == 0 || hit == size
    })
}

/// Every subset of size 2..n-1 tested against every group element.
fn primitive_by_subsets(group: &GeneratedGroup) -> bool {
    let n = group.degree();
    if !group.is_transitive() {
        return false;
    }
    let elements = group.elements();
    (0u32..1 << n).all(|mask| {
        let size = mask.count_ones() as usize;
        if size < 2 || size == n {
            return true;
        }
        let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        !is_block(&elements, &set)
    })
}

/// One `s` per class, every `t`.
fn sample_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let all: Vec<Permutation> = Permutation::all(n).collect();
    enumerate_partitions(n)
        .flat_map(|flag| {
            let s = class_representative(&flag);
            all.iter().map(move |t| (s.clone(), t.clone()))
        })
        .collect()
}

#[test]
fn primitivity_matches_block_enumeration() {
    for n in 2..=6 {
        for (s, t) in sample_pairs(n) {
            let group = GeneratedGroup::pair(&s, &t).unwrap();
            assert_eq!(
                group.is_primitive(),
                primitive_by_subsets(&group),
                "{s} {t}"
            );
        }
    }
}

#[test]
fn minimal_block_is_smallest_block_through_both_points() {
    for n in 3..=5 {
        for (s, t) in sample_pairs(n).into_iter().step_by(7) {
            let group = GeneratedGroup::pair(&s, &t).unwrap();
            if !group.is_transitive() {
                continue;
            }
            let elements = group.elements();
            for y in 2..=n {
                let block = group.minimal_block(1, y).unwrap();
                let smallest = (0u32..1 << n)
                    .filter(|m| m & 1 == 1 && m >> (y - 1) & 1 == 1)
                    .filter(|&m| {
                        is_block(
                            &elements,
                            &(0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>(),
                        )
                    })
                    .min_by_key(|m| m.count_ones())
                    .unwrap();
                let expect: Vec<usize> =
                    (1..=n).filter(|&i| smallest >> (i - 1) & 1 == 1).collect();
                assert_eq!(block, expect, "{s} {t} y={y}");
            }
        }
    }
}

#[test]
fn stabilizer_chain_order_matches_closure() {
    for n in 1..=6 {
        for (s, t) in sample_pairs(n).into_iter().step_by(3) {
            let group = GeneratedGroup::pair(&s, &t).unwrap();
            let chain = StabilizerChain::new(&group);
            assert_eq!(
                chain.order(),
                BigInt::from(group.elements().len()),
                "{s} {t}"
            );
        }
    }
    // a handful at degree 7, where closure is still cheap
    for (s, t) in sample_pairs(7).into_iter().step_by(997) {
        let group = GeneratedGroup::pair(&s, &t).unwrap();
        assert_eq!(
            group.group_order().unwrap(),
            BigInt::from(group.elements().len())
        );
    }
}

#[test]
fn jordan_route_agrees_with_order_route() {
    for n in 3..=7 {
        let mut decided = 0;
        for (s, t) in sample_pairs(n) {
            if let Some(class) = jordan_route(&s, &t).unwrap() {
                assert_eq!(class, order_route(&s, &t, 10).unwrap(), "{s} {t}");
                decided += 1;
            }
            if s.commutator(&t).unwrap().is_three_cycle() {
                assert!(jordan_route(&s, &t).unwrap().is_some());
            }
        }
        assert!(decided > 0);
    }
}

#[test]
fn generation_requires_transitivity() {
    let s: Permutation = "5:(1 2 3)".parse().unwrap();
    let t: Permutation = "5:(4 5)".parse().unwrap();
    assert_eq!(
        generates_alt_or_sym(&s, &t).unwrap(),
        GenerationClass::Neither
    );
    let s: Permutation = "5:(1 2 3 4 5)".parse().unwrap();
    let t: Permutation = "5:(1 2)".parse().unwrap();
    assert_eq!(generates_alt_or_sym(&s, &t).unwrap(), GenerationClass::Sym);
    let t: Permutation = "5:(1 2 3)".parse().unwrap();
    assert_eq!(generates_alt_or_sym(&s, &t).unwrap(), GenerationClass::Alt);
}

#[test]
fn order_cap() {
    let s: Permutation = "11:(1 2 3 4 5 6 7 8 9 10 11)".parse().unwrap();
    let t: Permutation = "11:(1 2)".parse().unwrap();
    let group = GeneratedGroup::pair(&s, &t).unwrap();
    assert!(group.group_order().is_err());
    assert_eq!(
        group.group_order_with_bound(11).unwrap(),
        tricomm::arith::factorial(11)
    );
}
