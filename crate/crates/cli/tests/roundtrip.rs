use coxring::hopf_b::basis;
use coxring::hopf_d::basis_d;
use coxring::{ElementB, ElementD};
use coxring_cli::expr::{eval, parse, Value};

fn reparse(text: &str) -> Value {
    let (ring, e) = parse(text).unwrap_or_else(|err| panic!("{text}: {err}"));
    eval(ring, &e).unwrap()
}

#[test]
fn printed_b_basis_parses_back() {
    for n in 0..=5 {
        for d in 0..=6 {
            for m in basis(n, d) {
                let x = ElementB::from(m);
                assert_eq!(reparse(&x.to_string()), Value::B(x.clone()), "{x}");
            }
        }
    }
}

#[test]
fn printed_d_basis_parses_back() {
    for n in 0..=5 {
        for d in 0..=6 {
            for m in basis_d(n, d) {
                let x = ElementD::from(m);
                assert_eq!(reparse(&x.to_string()), Value::D(x.clone()), "{x}");
            }
        }
    }
}

#[test]
fn printed_sums_parse_back() {
    let x = ElementB::delta(2).cup(&ElementB::gamma(1, 1)).add(&ElementB::delta(1).pow(2).odot(&ElementB::delta(1)));
    assert_eq!(reparse(&x.to_string()), Value::B(x.clone()));
    let y = ElementD::delta0(3, 1).add(&ElementD::gamma_plus(1, 2));
    assert_eq!(reparse(&y.to_string()), Value::D(y.clone()));
}
