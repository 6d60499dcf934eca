use flipsort::automaton::*;
use flipsort::series::{partial_fractions, Polynomial, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn gf_displays() {
    let p3 = RationalFunction::from_factored(Polynomial::from_ints([0, 0, 0, 0, 2, 6, -12]), &[(1, 3), (2, 2), (3, 1)]);
    assert_eq!(dfa_to_gf(&build_ak(3)).unwrap(), p3);
    for k in 1..=6 {
        let gf = dfa_to_gf(&build_ak(k)).unwrap();
        assert_eq!(gf.numerator().valuation(), Some(3 * k / 2));
        let s = gf.series(14).unwrap();
        let counts = count_words_upto(&build_ak(k), 14, flipsort::Exec::default());
        for n in 0..=14 {
            assert_eq!(s.coeff(n).to_integer(), BigInt::from(counts[n].clone()), "k={k} n={n}");
        }
    }
}

#[test]
fn partial_fraction_numerators() {
    for k in 2..=7i64 {
        let gf = dfa_to_gf(&build_ak(k as usize)).unwrap();
        let pf = partial_fractions(&gf).unwrap();
        assert_eq!(pf.recombine(), gf);
        assert_eq!(pf.polynomial_part, Polynomial::from_ints([-1]));
        assert_eq!(pf.term(k).unwrap().numerator, Polynomial::one());
        for j in 1..k {
            let t = pf.term(k - j).unwrap();
            assert_eq!(t.e, j as u32 + 1);
            assert!(t.numerator.degree().unwrap_or(0) <= j as usize);
        }
        let n1 = Polynomial::new(vec![q(3 * (k - 2), 1), q(-(k - 1) * (3 * k - 4), 1)]);
        assert_eq!(pf.term(k - 1).unwrap().numerator, n1, "k={k}");
        if k >= 4 {
            let n2 = Polynomial::new(vec![
                q((3 * k - 4) * (3 * k - 11), 2),
                q(-(9 * k.pow(3) - 57 * k.pow(2) + 102 * k - 44), 1),
                q(9 * k.pow(4) - 69 * k.pow(3) + 180 * k.pow(2) - 180 * k + 52, 2),
            ]);
            assert_eq!(pf.term(k - 2).unwrap().numerator, n2, "k={k}");
        }
    }
}

#[test]
fn state_counts_and_minimization() {
    let a: Vec<usize> = (1..=8).map(state_count).collect();
    assert_eq!(a[..5], [2, 6, 20, 68, 232]);
    assert!((2..8).all(|i| a[i] == 4 * a[i - 1] - 2 * a[i - 2]));
    let rows = minimized_recurrence_report(6);
    let b: Vec<i64> = rows.iter().map(|r| r.states).collect();
    assert_eq!(b, [2, 6, 16, 40, 98, 238]);
    for k in 1..=4 {
        let d = build_ak(k);
        let m = d.minimize();
        assert_eq!(count_words_upto(&d, 10, flipsort::Exec::Sequential), count_words_upto(&m, 10, flipsort::Exec::Sequential));
    }
}
