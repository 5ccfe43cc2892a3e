//! Independent series oracles: the Todd and L coefficients from the
//! Bernoulli-number recurrence, and the spectrum expansion by truncated
//! geometric series. These never touch the series-division or polynomial-
//! division code paths they check.

use chiclass::norm::NormCoeff;
use chiclass::rat::{binomial, rat, rat_int, Rat};
use chiclass::series::PowerSeries;
use chiclass::singularity::{spectrum_wh, Weights};
use chiclass::{standard_series, SeriesKind};
use num_traits::{One, Zero};

/// Bernoulli numbers with the B_1 = -1/2 convention, from the defining
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
fn bernoulli(up_to: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = vec![Rat::one()];
    for m in 1..=up_to {
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / rat_int(m as i64 + 1));
    }
    b
}

fn factorial(k: usize) -> Rat {
    (1..=k as i64).map(rat_int).product()
}

#[test]
fn todd_coefficients_match_bernoulli_recurrence() {
    // a/(1 - e^{-a}) = sum B+_k a^k / k!  with B+_1 = +1/2 and B+_k = B_k
    // otherwise.
    let order = 16;
    let b = bernoulli(order);
    let todd = standard_series(SeriesKind::Todd, order);
    for k in 0..=order {
        let expected = if k == 1 {
            rat(1, 2)
        } else {
            b[k].clone() / factorial(k)
        };
        assert_eq!(
            todd.coeff(k),
            NormCoeff::from_rat(expected),
            "Todd coefficient of a^{k}"
        );
    }
}

#[test]
fn l_coefficients_match_bernoulli_formula() {
    // a/tanh a = sum_{k>=0} B_{2k} 4^k a^{2k} / (2k)!
    let order = 14;
    let b = bernoulli(order);
    let l = standard_series(SeriesKind::L, order);
    for k in 0..=order {
        let expected = if k % 2 == 1 {
            Rat::zero()
        } else {
            let half = k / 2;
            b[k].clone() * rat_int(4).pow(half as i32) / factorial(k)
        };
        assert_eq!(
            l.coeff(k),
            NormCoeff::from_rat(expected),
            "L coefficient of a^{k}"
        );
    }
}

#[test]
fn frozen_low_order_todd_values() {
    // 1 + a/2 + a^2/12 + 0 a^3 - a^4/720, frozen from the recurrence above.
    let todd = standard_series(SeriesKind::Todd, 4);
    let expected = [rat(1, 1), rat(1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)];
    for (k, e) in expected.into_iter().enumerate() {
        assert_eq!(todd.coeff(k), NormCoeff::from_rat(e));
    }
}

/// Expand one spectrum factor `(s^p - s^q) / (1 - s^p)` as a truncated
/// geometric series `s^p (1 - s^{q-p}) sum_j s^{p j}` up to the degree bound.
fn factor_series(p: usize, q: usize, bound: usize) -> Vec<Rat> {
    let mut geo = vec![Rat::zero(); bound + 1];
    let mut e = 0;
    while e <= bound {
        geo[e] = Rat::one();
        e += p;
    }
    // multiply by s^p - s^q
    let mut out = vec![Rat::zero(); bound + 1];
    for (i, c) in geo.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i + p <= bound {
            out[i + p] = &out[i + p] + c;
        }
        if i + q <= bound {
            out[i + q] = &out[i + q] - c;
        }
    }
    out
}

fn truncated_product(a: &[Rat], b: &[Rat], bound: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); bound + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > bound {
                break;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Direct-expansion oracle for the spectrum of weights `p_i / q` (common
/// denominator `q`): multiply the factor series truncated at degree `n q`,
/// where the true polynomial must already have terminated.
fn spectrum_by_expansion(ps: &[usize], q: usize) -> Vec<(Rat, u64)> {
    let bound = ps.len() * q;
    let mut acc = vec![Rat::zero(); bound + 1];
    acc[0] = Rat::one();
    for &p in ps {
        acc = truncated_product(&acc, &factor_series(p, q, bound), bound);
    }
    acc.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            assert!(c > &Rat::zero(), "negative multiplicity in expansion");
            assert!(c.is_integer());
            (
                Rat::new(e.into(), q.into()),
                u64::try_from(c.to_integer()).unwrap(),
            )
        })
        .collect()
}

#[test]
fn spectrum_division_agrees_with_direct_expansion() {
    // (weights as (p, q) over a common denominator q, label)
    let cases: Vec<(Vec<usize>, usize, &str)> = vec![
        (vec![1, 1, 1], 2, "A1 in 3 variables"),
        (vec![1], 3, "A2"),
        (vec![5, 3], 15, "E8"),
        (vec![3, 2], 9, "E7"),
        (vec![3, 4], 12, "E6"),
        (vec![2, 3], 8, "D5"),
        (vec![1, 1], 2, "A1 in 2 variables"),
    ];
    for (ps, q, label) in cases {
        let weights = Weights::new(
            ps.iter().map(|&p| Rat::new(p.into(), q.into())).collect(),
        )
        .unwrap();
        let by_division = spectrum_wh(&weights).unwrap();
        let by_expansion = spectrum_by_expansion(&ps, q);
        let division_entries: Vec<(Rat, u64)> = by_division
            .entries()
            .iter()
            .map(|(a, &m)| (a.clone(), m))
            .collect();
        assert_eq!(division_entries, by_expansion, "{label}");
    }
}

#[test]
fn todd_class_of_p2_by_direct_cubing() {
    // T P^2 (+) O = O(1)^3, so td(T P^2) = Todd(h)^3: cube the series
    // directly and compare with the splitting-principle route.
    let ring = chiclass::projective_ring(&[2]).unwrap();
    let t = chiclass::tangent_kclass(&ring);
    let by_splitting =
        chiclass::multiplicative_class(&standard_series(SeriesKind::Todd, 2), &t, &ring).unwrap();
    let todd = standard_series(SeriesKind::Todd, 2);
    let cubed = &(&todd * &todd) * &todd;
    for k in 0..=2 {
        assert_eq!(by_splitting.coeff(&[k as u32]), cubed.coeff(k));
    }
}

#[test]
fn mercator_and_inverse_identities() {
    // log(1 + a) to order 3 and the exp/log round trips, pinned as series
    // of rationals.
    let one_plus_alpha = &PowerSeries::one(10) + &PowerSeries::alpha(10);
    let log = one_plus_alpha.log().unwrap();
    assert_eq!(log.coeff(1), NormCoeff::one());
    assert_eq!(log.coeff(2), NormCoeff::from_rat(rat(-1, 2)));
    assert_eq!(log.coeff(3), NormCoeff::from_rat(rat(1, 3)));

    let roundtrip = log.exp().unwrap();
    assert_eq!(roundtrip, one_plus_alpha.truncate(10));

    let a = PowerSeries::alpha(10);
    let product = &a.exp().unwrap() * &(-&a).exp().unwrap();
    assert_eq!(product, PowerSeries::one(10));
}
