//! Concrete polynomials, rational functions and recurrences attached to
//! `S_n = sum_k C(n,k)^2 C(2k,k) (2k+1)`.
//!
//! Everything here is data: the printed forms are transcribed once and the
//! derived forms are computed from the three-term recurrence, so the two can
//! be compared exactly.

use crate::exact::{product, Polynomial, Rational, RationalFunction};
use crate::sequence::RecurrenceRelation;

fn p(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs)
}

/// `k n + c`.
fn lin(k: i64, c: i64) -> Polynomial {
    p(&[c, k])
}

fn n() -> Polynomial {
    Polynomial::var()
}

fn k(c: i64) -> Polynomial {
    p(&[c])
}

fn rf(num: Polynomial, den: Polynomial) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

// Three-term recurrence a(n) S_{n+1} + b(n) S_n + c(n) S_{n-1} = 0.

pub fn three_term_a() -> Polynomial {
    product(&[lin(1, 1), lin(1, 1), lin(4, -1), lin(4, 3)])
}

pub fn three_term_b() -> Polynomial {
    -product(&[lin(4, -1), lin(4, 7), p(&[3, 10, 10])])
}

pub fn three_term_c() -> Polynomial {
    product(&[k(9), n(), n(), lin(4, 3), lin(4, 7)])
}

/// `b(n)^2 - 4 a(n) c(n)`.
pub fn delta() -> Polynomial {
    let (a, b, c) = (three_term_a(), three_term_b(), three_term_c());
    &(&b * &b) - &(&(&k(4) * &a) * &c)
}

/// Printed expansion of the discriminant (also printed as `B(n)`).
pub fn delta_printed() -> Polynomial {
    p(&[441, -84, -6884, -13120, 19328, 101888, 143360, 81920, 16384])
}

/// Printed `C(n)`, the discriminant at `n + 1`.
pub fn c_poly_printed() -> Polynomial {
    p(&[343233, 2098212, 5418076, 7734976, 6693248, 3599872, 1175552, 212992, 16384])
}

/// Printed factorization of `B(n)` as `A(n)^2`.
pub fn a_squared_printed() -> Polynomial {
    product(&[lin(4, -1), lin(4, 7), p(&[-63, -204, 140, 1888, 4032, 3584, 1024])])
}

pub fn sq_b_root() -> Polynomial {
    p(&[0, -2, 160, 320, 128])
}

pub fn sq_b_gap_printed() -> Polynomial {
    p(&[-441, 84, 6888, 12480, 4992])
}

pub fn sq_c_root() -> Polynomial {
    p(&[0, 1790, 1888, 832, 128])
}

pub fn sq_c_gap_printed() -> Polynomial {
    p(&[-343233, -2098212, -2213976, -975936, -150144])
}

/// Common denominator `2 (n+1)^2 (n+2)^2 (4n-1)(4n+3)(4n+7)` of the upper-bound step.
pub fn delta_step_denominator() -> Polynomial {
    product(&[k(2), lin(1, 1), lin(1, 1), lin(1, 2), lin(1, 2), lin(4, -1), lin(4, 3), lin(4, 7)])
}

pub fn delta_step_rational_part() -> Polynomial {
    product(&[k(9), lin(4, -1), p(&[19, 64, 58, 16])])
}

pub fn delta_step_b_weight() -> Polynomial {
    p(&[28, 44, 23, 4])
}

pub fn delta_step_c_weight() -> Polynomial {
    p(&[-1, 2, 7, 4])
}

/// `9(4n-1)(16n^3+...) - (4n^3+23n^2+...)(128n^4+...) + (4n^3+7n^2+...)(128n^4+832n^3+...)`.
pub fn combination() -> Polynomial {
    &(&delta_step_rational_part() - &(&delta_step_b_weight() * &sq_b_root()))
        + &(&delta_step_c_weight() * &sq_c_root())
}

pub fn combination_printed() -> Polynomial {
    p(&[-171, -1626, -918, 1464, 1152])
}

// Ratio recurrence s_{n+1} = F(n) - G(n) / s_n.

pub fn ratio_f() -> RationalFunction {
    rf(-three_term_b(), three_term_a())
}

pub fn ratio_g() -> RationalFunction {
    rf(three_term_c(), three_term_a())
}

pub fn ratio_f_printed() -> RationalFunction {
    rf(product(&[lin(4, 7), p(&[3, 10, 10])]), product(&[lin(1, 1), lin(1, 1), lin(4, 3)]))
}

pub fn ratio_g_printed() -> RationalFunction {
    rf(product(&[k(9), n(), n(), lin(4, 7)]), product(&[lin(1, 1), lin(1, 1), lin(4, -1)]))
}

/// `h(n) = 9 - 9 / (2 n^2)`.
pub fn h() -> RationalFunction {
    rf(p(&[-9, 0, 18]), p(&[0, 0, 2]))
}

/// Printed closed form of `F(n) - G(n)/h(n)`.
pub fn upper_step_printed() -> RationalFunction {
    rf(
        product(&[lin(4, 7), p(&[3, -2, -36, -36, 54, 72])]),
        product(&[lin(1, 1), lin(1, 1), lin(4, -1), lin(4, 3), p(&[-1, 0, 2])]),
    )
}

/// Printed closed form of `F(n) - G(n)/h(n) - h(n+1)`; negative for `n >= 1`.
pub fn upper_step_gap_printed() -> RationalFunction {
    rf(
        p(&[15, -40, -88]),
        product(&[k(2), lin(1, 1), lin(1, 1), lin(4, -1), lin(4, 3), p(&[-1, 0, 2])]),
    )
}

/// Printed closed form of `F(n) - G(n)/h(n-1)`.
pub fn lower_step_printed() -> RationalFunction {
    rf(
        product(&[lin(4, 7), p(&[-3, 14, 10, -72, -90, 72])]),
        product(&[lin(1, 1), lin(1, 1), lin(4, -1), lin(4, 3), p(&[1, -4, 2])]),
    )
}

/// Printed closed form of `F(n) - G(n)/h(n-1) - h(n)`; positive for `n >= 1`.
pub fn lower_step_gap_printed() -> RationalFunction {
    rf(
        p(&[-27, 126, 147, -728, -792, 512]),
        product(&[k(2), n(), n(), lin(1, 1), lin(1, 1), lin(4, -1), lin(4, 3), p(&[1, -4, 2])]),
    )
}

/// Lower interval end candidate as printed, `(4n+7)(10n^2+10n+3) / (2n(n+1)^2(4n+3))`.
pub fn l_printed() -> RationalFunction {
    rf(
        product(&[lin(4, 7), p(&[3, 10, 10])]),
        product(&[k(2), n(), lin(1, 1), lin(1, 1), lin(4, 3)]),
    )
}

/// `-b(n) / (2 a(n))`, the midpoint of `X(n)` and `Y(n)`.
pub fn l_vertex() -> RationalFunction {
    rf(-three_term_b(), &k(2) * &three_term_a())
}

// Ratio log-concavity data, normalized to z_n = u(n) z_{n-1} + v(n) z_{n-2}.

/// `u(n) = -b(n-1) / a(n-1)`.
pub fn cgw_u() -> RationalFunction {
    rf(-three_term_b().shift(-1), three_term_a().shift(-1))
}

/// `v(n) = -c(n-1) / a(n-1)`, negative for `n >= 2`.
pub fn cgw_v() -> RationalFunction {
    rf(-three_term_c().shift(-1), three_term_a().shift(-1))
}

pub fn cgw_u_printed() -> RationalFunction {
    rf(product(&[lin(4, 3), p(&[3, -10, 10])]), product(&[n(), n(), lin(4, -1)]))
}

/// Printed `v(n)` magnitude `9(n-1)^2(4n+3) / (n^2(4n-5))`, positive.
pub fn cgw_v_printed_magnitude() -> RationalFunction {
    rf(product(&[k(9), lin(1, -1), lin(1, -1), lin(4, 3)]), product(&[n(), n(), lin(4, -5)]))
}

/// `h(n)^4 - u(n) h(n)^3 - u(n+1) v(n) h(n) - v(n) v(n+1)`.
pub fn cgw_condition_two(u: &RationalFunction, v: &RationalFunction, h: &RationalFunction) -> RationalFunction {
    let u1 = u.compose_shift(1);
    let v1 = v.compose_shift(1);
    let h3 = h.pow(3);
    &(&(&h.pow(4) - &(u * &h3)) - &(&(&u1 * v) * h)) - &(v * &v1)
}

pub fn d_printed() -> Polynomial {
    p(&[32805, 39366, -223803, -242028, 581256, 524232, -693360, -393984, 331776])
}

/// `16 n^8 (n+1)^2 (4n-5)(4n-1)`.
pub fn cgw_denominator_printed() -> Polynomial {
    &product(&[k(16), lin(1, 1), lin(1, 1), lin(4, -5), lin(4, -1)]) * &n().pow(8)
}

/// Printed `3u(n)/4 - h(n-1)`; negative for `n >= 3`.
pub fn cgw_lower_gap_printed() -> RationalFunction {
    rf(
        product(&[k(-3), p(&[-9, 36, -41, 6, -18, 8])]),
        product(&[k(4), n(), n(), lin(1, -1), lin(1, -1), lin(4, -1)]),
    )
}

/// `s^2 - 10 s + 9`.
pub fn limit_quadratic_printed() -> Polynomial {
    p(&[9, -10, 1])
}

/// Limit quadratic derived from the ratio recurrence: with `F -> F_inf` and
/// `G -> G_inf`, a limit `s` satisfies `s^2 - F_inf s + G_inf = 0`.
pub fn limit_quadratic_derived() -> Option<Polynomial> {
    let f_inf = ratio_f().limit_at_infinity()?;
    let g_inf = ratio_g().limit_at_infinity()?;
    Some(Polynomial::new(vec![g_inf, -f_inf, Rational::one()]))
}

// Recurrences in normalized form.

/// `9(n+1)^2 S_n - (19n^2+74n+87) S_{n+1} + (n+3)(11n+29) S_{n+2} - (n+3)^2 S_{n+3} = 0`, `n >= 0`.
pub fn four_term_s() -> RecurrenceRelation {
    RecurrenceRelation::new(
        "four-term S",
        vec![
            product(&[k(9), lin(1, 1), lin(1, 1)]),
            -p(&[87, 74, 19]),
            product(&[lin(1, 3), lin(11, 29)]),
            -product(&[lin(1, 3), lin(1, 3)]),
        ],
        0,
    )
    .expect("valid recurrence")
}

/// Order-3 recurrence on `u_n`, asserted for `n >= 1`.
pub fn u_order_three() -> RecurrenceRelation {
    RecurrenceRelation::new(
        "order-3 u",
        vec![
            -product(&[k(9), lin(1, 1), lin(1, 1), lin(1, 1), lin(1, 2)]),
            product(&[n(), lin(1, 2), p(&[87, 74, 19])]),
            -product(&[n(), lin(1, 1), lin(1, 3), lin(11, 29)]),
            product(&[n(), lin(1, 1), lin(1, 2), lin(1, 3)]),
        ],
        1,
    )
    .expect("valid recurrence")
}

/// Order-3 recurrence for `v_n = (n+1)^2 f_n - n^2 f_{n-1}`, checked on `u_n = v_n`.
pub fn v_order_three() -> RecurrenceRelation {
    RecurrenceRelation::new(
        "order-3 v",
        vec![
            -product(&[k(9), lin(1, 1), lin(1, 1), p(&[5695, 9130, 5376, 1376, 128])]),
            p(&[106920, 384657, 550013, 399646, 155712, 30880, 2432]),
            -p(&[59535, 215886, 309049, 225582, 88512, 17696, 1408]),
            product(&[lin(1, 2), lin(1, 3), p(&[693, 1994, 2016, 864, 128])]),
        ],
        1,
    )
    .expect("valid recurrence")
}

/// Order-2 recurrence on `u_n`, asserted for `n >= 1`.
pub fn u_order_two() -> RecurrenceRelation {
    RecurrenceRelation::new(
        "order-2 u",
        vec![
            product(&[k(9), lin(1, 1), lin(1, 1), lin(1, 1), lin(4, 11), lin(4, 7)]),
            -product(&[n(), lin(4, 3), lin(4, 11), p(&[23, 30, 10])]),
            product(&[n(), lin(1, 1), lin(1, 2), lin(4, 3), lin(4, 7)]),
        ],
        1,
    )
    .expect("valid recurrence")
}

/// The three-term recurrence for `S_n`, stored with base index `n - 1` so
/// that its residual at base `m` involves `S_m, S_{m+1}, S_{m+2}`. Labels
/// report the centre index `n = m + 1`.
pub fn three_term_s() -> RecurrenceRelation {
    RecurrenceRelation::new(
        "three-term S",
        vec![three_term_c().shift(1), three_term_b().shift(1), three_term_a().shift(1)],
        0,
    )
    .expect("valid recurrence")
    .with_label_offset(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_at_one() {
        assert_eq!(three_term_a().eval_int(1), Rational::from(84));
        assert_eq!(three_term_b().eval_int(1), Rational::from(-759));
        assert_eq!(three_term_c().eval_int(1), Rational::from(693));
    }

    #[test]
    fn delta_expands_to_printed() {
        assert_eq!(delta(), delta_printed());
        // sum of printed coefficients
        let sum: i64 = [16384, 81920, 143360, 101888, 19328, -13120, -6884, -84, 441].iter().sum();
        assert_eq!(delta().eval_int(1), Rational::from(sum));
        assert_eq!(delta().eval_int(1), Rational::from(343233));
        assert_eq!(Rational::from(343233), Rational::from(9 * 38137));
    }

    #[test]
    fn cgw_functions_match_printed() {
        assert_eq!(cgw_u(), cgw_u_printed());
        assert_eq!(cgw_v(), -cgw_v_printed_magnitude());
        let lhs = cgw_condition_two(&cgw_u(), &cgw_v(), &h());
        let target = RationalFunction::new(-d_printed(), cgw_denominator_printed()).unwrap();
        assert_eq!(lhs, target);
    }

    #[test]
    fn shifted_u_evaluates_consistently() {
        let u = cgw_u();
        let u1 = u.compose_shift(1);
        assert_eq!(u1.eval_int(1), u.eval_int(2));
    }

    #[test]
    fn h_values() {
        assert_eq!(h().eval_int(1), Some(Rational::new(9, 2)));
        assert_eq!(h().eval_int(2), Some(Rational::new(63, 8)));
    }
}
