use coxring::foxneuwirth::{betti, Variant};
use coxring::hopf_b::basis;

#[test]
fn basis_sizes_match_betti_numbers_of_b() {
    for n in 1..=5u32 {
        for d in 0..=10u32 {
            let b = betti(Variant::B, n as usize, d as usize).unwrap();
            assert_eq!(basis(n, d).len(), b, "n={n} d={d}");
        }
    }
}
