//! Dense univariate polynomials over `Q`, stored low degree first with no
//! trailing zeros. Used for the dehomogenized side of binary-form arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Scalar;

pub(crate) type Poly = Vec<Scalar>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, or `None` for the zero polynomial.
pub(crate) fn degree(p: &[Scalar]) -> Option<usize> {
    p.len().checked_sub(1)
}

#[cfg(test)]
pub(crate) fn mul(a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[Scalar], b: &[Scalar]) -> Poly {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v;
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Scalar], b: &[Scalar]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    let Some(da) = degree(&rem) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Scalar::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let c = &rem[shift + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
    }
    (trim(quot), trim(rem))
}

pub(crate) fn monic(p: Poly) -> Poly {
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.recip();
            p.into_iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic greatest common divisor; zero only when both inputs are zero.
pub(crate) fn gcd(a: &[Scalar], b: &[Scalar]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = monic(r);
    }
    monic(a)
}

pub(crate) fn derivative(p: &[Scalar]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Scalar::from_integer(i.into()))
            .collect(),
    )
}

/// Yun's squarefree decomposition: `p = lc * prod a_i^i` with pairwise coprime
/// squarefree monic `a_i`. Returns the nonconstant `(a_i, i)`.
pub(crate) fn squarefree_decomposition(p: &[Scalar]) -> Vec<(Poly, usize)> {
    let p = trim(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    let mut b = div_rem(&p, &a0).0;
    let c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        let next_b = div_rem(&b, &a).0;
        let next_c = div_rem(&d, &a).0;
        if degree(&a).unwrap_or(0) > 0 {
            out.push((a, i));
        }
        d = sub(&next_c, &derivative(&next_b));
        b = next_b;
        i += 1;
    }
    out
}

/// Product of the distinct irreducible factors, monic.
pub(crate) fn squarefree_part(p: &[Scalar]) -> Poly {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let g = gcd(&p, &derivative(&p));
    monic(div_rem(&p, &g).0)
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `n`, or `None` when `n` is too large to factor by
/// trial division up to [`TRIAL_LIMIT`].
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if n > &limit * &limit {
            return None;
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut power = d.clone();
            for _ in 0..=e {
                next.push(power.clone());
                power *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Distinct rational roots in increasing order. Returns `None` when the
/// coefficients are too large for the rational-root enumeration.
pub(crate) fn rational_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut sf = squarefree_part(p);
    let mut roots = Vec::new();
    if sf.is_empty() {
        return Some(roots);
    }
    if sf[0].is_zero() {
        roots.push(Scalar::zero());
        sf.remove(0);
    }
    if degree(&sf).unwrap_or(0) == 0 {
        return Some(roots);
    }
    // integer primitive multiple
    let lcm = sf.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sf
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let numerators = divisors(&constant)?;
    let denominators = divisors(&lead)?;
    let deg = ints.len() - 1;
    for q in &denominators {
        let q_powers: Vec<BigInt> =
            std::iter::successors(Some(BigInt::one()), |prev| Some(prev * q))
                .take(deg + 1)
                .collect();
        for p in &numerators {
            for sign in [1, -1] {
                let num = p * BigInt::from(sign);
                if !num.gcd(q).is_one() {
                    continue;
                }
                // q^deg * f(num / q)
                let mut acc = BigInt::zero();
                let mut num_power = BigInt::one();
                for (i, c) in ints.iter().enumerate() {
                    acc += c * &num_power * &q_powers[deg - i];
                    num_power *= &num;
                }
                if acc.is_zero() {
                    roots.push(Scalar::new(num, q.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn poly(c: &[i64]) -> Poly {
        trim(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (q, r) = div_rem(&poly(&[-1, 0, 1]), &poly(&[-1, 1]));
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_empty());
        // gcd((x-1)(x+1), (x+1)^2) = x + 1
        assert_eq!(gcd(&poly(&[-1, 0, 1]), &poly(&[1, 2, 1])), poly(&[1, 1]));
        assert_eq!(gcd(&poly(&[2, 4]), &[]), vec![ratio(1, 2), int(1)]);
    }

    #[test]
    fn yun_decomposition() {
        // x^2 (x + 1)^3 (x - 2)
        let p = mul(
            &mul(
                &poly(&[0, 0, 1]),
                &mul(&poly(&[1, 1]), &mul(&poly(&[1, 1]), &poly(&[1, 1]))),
            ),
            &poly(&[-2, 1]),
        );
        let dec = squarefree_decomposition(&p);
        let mut mults: Vec<(usize, usize)> =
            dec.iter().map(|(a, i)| (*i, degree(a).unwrap())).collect();
        mults.sort();
        assert_eq!(mults, vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn rational_root_search() {
        // (2x - 1)(x + 3)(x^2 + 1)
        let p = mul(&mul(&poly(&[-1, 2]), &poly(&[3, 1])), &poly(&[1, 0, 1]));
        assert_eq!(rational_roots(&p).unwrap(), vec![int(-3), ratio(1, 2)]);
        assert_eq!(rational_roots(&poly(&[0, 0, 1])).unwrap(), vec![int(0)]);
        assert_eq!(
            rational_roots(&poly(&[2, 0, 1])).unwrap(),
            Vec::<Scalar>::new()
        );
    }
}
