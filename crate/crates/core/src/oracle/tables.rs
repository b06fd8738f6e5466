//! Printed numerator and denominator tables for the closed-form connection.
//!
//! One row per printed monomial, in printed order. Exponent columns are
//! `[cos α1, sin α1, cos α2, sin α2]`. Denominators carry an overall `k·L^p`
//! factor; numerators carry a prefactor and a sign.

use super::{Denominator, Joint, Numerator, Prefactor, Trig};

pub(super) const N1_11: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::MomentArm(Joint::First),
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (2.0, [1, 1, 2, 0]),
        (1.0, [1, 1, 1, 0]),
        (1.0, [1, 0, 1, 1]),
        (1.0, [1, 1, 0, 2]),
        (1.0, [1, 1, 0, 0]),
        (2.0, [0, 1, 2, 0]),
        (1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (1.0, [0, 1, 0, 2]),
        (2.0, [0, 1, 0, 0]),
        (1.0, [0, 0, 0, 3]),
        (2.0, [0, 0, 0, 1]),
    ],
};

pub(super) const D1_11: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (8.0, [4, 0, 2, 0]),
        (8.0, [4, 0, 1, 0]),
        (4.0, [4, 0, 0, 2]),
        (6.0, [4, 0, 0, 0]),
        (8.0, [3, 0, 2, 0]),
        (4.0, [3, 0, 1, 0]),
        (4.0, [3, 0, 0, 2]),
        (4.0, [3, 0, 0, 0]),
        (8.0, [2, 0, 4, 0]),
        (8.0, [2, 0, 3, 0]),
        (16.0, [2, 2, 2, 0]),
        (16.0, [2, 0, 2, 2]),
        (20.0, [2, 0, 2, 0]),
        (16.0, [2, 2, 1, 0]),
        (-4.0, [2, 1, 1, 1]),
        (8.0, [2, 0, 1, 2]),
        (12.0, [2, 0, 1, 0]),
        (8.0, [2, 2, 0, 2]),
        (12.0, [2, 2, 0, 0]),
        (-4.0, [2, 1, 0, 1]),
        (8.0, [2, 0, 0, 4]),
        (16.0, [2, 0, 0, 2]),
        (12.0, [2, 0, 0, 0]),
        (8.0, [1, 0, 4, 0]),
        (4.0, [1, 0, 3, 0]),
        (8.0, [1, 2, 2, 0]),
        (-4.0, [1, 1, 2, 1]),
        (16.0, [1, 0, 2, 2]),
        (12.0, [1, 0, 2, 0]),
        (4.0, [1, 2, 1, 0]),
        (-4.0, [1, 1, 1, 1]),
        (4.0, [1, 0, 1, 2]),
        (4.0, [1, 0, 1, 0]),
        (4.0, [1, 2, 0, 2]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 3]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 4]),
        (12.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (4.0, [0, 2, 4, 0]),
        (6.0, [0, 0, 4, 0]),
        (4.0, [0, 2, 3, 0]),
        (4.0, [0, 0, 3, 0]),
        (8.0, [0, 4, 2, 0]),
        (8.0, [0, 2, 2, 2]),
        (16.0, [0, 2, 2, 0]),
        (-4.0, [0, 1, 2, 1]),
        (12.0, [0, 0, 2, 2]),
        (12.0, [0, 0, 2, 0]),
        (8.0, [0, 4, 1, 0]),
        (-4.0, [0, 3, 1, 1]),
        (4.0, [0, 2, 1, 2]),
        (12.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (4.0, [0, 4, 0, 2]),
        (6.0, [0, 4, 0, 0]),
        (-4.0, [0, 3, 0, 1]),
        (4.0, [0, 2, 0, 4]),
        (14.0, [0, 2, 0, 2]),
        (12.0, [0, 2, 0, 0]),
        (-4.0, [0, 1, 0, 3]),
        (-8.0, [0, 1, 0, 1]),
        (6.0, [0, 0, 0, 4]),
        (12.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N2_11: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 2.0,
        factor: Trig::Sin1,
    },
    terms: &[
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 0, 1, 0]),
        (2.0, [2, 0, 0, 2]),
        (3.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 2, 0]),
        (2.0, [1, 0, 1, 0]),
        (2.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (2.0, [0, 2, 2, 0]),
        (3.0, [0, 0, 2, 0]),
        (2.0, [0, 2, 1, 0]),
        (2.0, [0, 0, 1, 0]),
        (1.0, [0, 2, 0, 2]),
        (2.0, [0, 2, 0, 0]),
        (2.0, [0, 0, 0, 2]),
        (3.0, [0, 0, 0, 0]),
    ],
};

pub(super) const D2_11: Denominator = Denominator {
    length_power: 1,
    terms: &[
        (4.0, [4, 0, 2, 0]),
        (4.0, [4, 0, 1, 0]),
        (2.0, [4, 0, 0, 2]),
        (3.0, [4, 0, 0, 0]),
        (4.0, [3, 0, 2, 0]),
        (2.0, [3, 0, 1, 0]),
        (2.0, [3, 0, 0, 2]),
        (2.0, [3, 0, 0, 0]),
        (4.0, [2, 0, 4, 0]),
        (4.0, [2, 0, 3, 0]),
        (8.0, [2, 2, 2, 0]),
        (8.0, [2, 0, 2, 2]),
        (10.0, [2, 0, 2, 0]),
        (8.0, [2, 2, 1, 0]),
        (-2.0, [2, 1, 1, 1]),
        (4.0, [2, 0, 1, 2]),
        (6.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 2]),
        (6.0, [2, 2, 0, 0]),
        (-2.0, [2, 1, 0, 1]),
        (4.0, [2, 0, 0, 4]),
        (8.0, [2, 0, 0, 2]),
        (6.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 4, 0]),
        (2.0, [1, 0, 3, 0]),
        (4.0, [1, 2, 2, 0]),
        (-2.0, [1, 1, 2, 1]),
        (8.0, [1, 0, 2, 2]),
        (6.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 1, 0]),
        (-2.0, [1, 1, 1, 1]),
        (2.0, [1, 0, 1, 2]),
        (2.0, [1, 0, 1, 0]),
        (2.0, [1, 2, 0, 2]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 3]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 4]),
        (6.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (2.0, [0, 2, 4, 0]),
        (3.0, [0, 0, 4, 0]),
        (2.0, [0, 2, 3, 0]),
        (2.0, [0, 0, 3, 0]),
        (4.0, [0, 4, 2, 0]),
        (4.0, [0, 2, 2, 2]),
        (8.0, [0, 2, 2, 0]),
        (-2.0, [0, 1, 2, 1]),
        (6.0, [0, 0, 2, 2]),
        (6.0, [0, 0, 2, 0]),
        (4.0, [0, 4, 1, 0]),
        (-2.0, [0, 3, 1, 1]),
        (2.0, [0, 2, 1, 2]),
        (6.0, [0, 2, 1, 0]),
        (-2.0, [0, 1, 1, 1]),
        (2.0, [0, 0, 1, 2]),
        (2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 2]),
        (3.0, [0, 4, 0, 0]),
        (-2.0, [0, 3, 0, 1]),
        (2.0, [0, 2, 0, 4]),
        (7.0, [0, 2, 0, 2]),
        (6.0, [0, 2, 0, 0]),
        (-2.0, [0, 1, 0, 3]),
        (-4.0, [0, 1, 0, 1]),
        (3.0, [0, 0, 0, 4]),
        (6.0, [0, 0, 0, 2]),
        (3.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N3_11: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos1,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (-2.0, [1, 1, 2, 0]),
        (-3.0, [1, 1, 1, 0]),
        (3.0, [1, 0, 1, 1]),
        (-1.0, [1, 1, 0, 2]),
        (-1.0, [1, 1, 0, 0]),
        (2.0, [1, 0, 0, 1]),
        (-2.0, [0, 1, 2, 0]),
        (-1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (-2.0, [0, 1, 1, 0]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (-1.0, [0, 1, 0, 2]),
        (-1.0, [0, 0, 0, 3]),
    ],
};

// D3_11 is printed as an alias of D2_11.

pub(super) const N1_12: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::MomentArm(Joint::First),
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (2.0, [3, 0, 0, 0]),
        (-2.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (3.0, [2, 0, 0, 2]),
        (2.0, [2, 0, 0, 0]),
        (2.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (-2.0, [0, 0, 4, 0]),
        (-2.0, [0, 0, 3, 0]),
        (-3.0, [0, 2, 2, 0]),
        (-4.0, [0, 0, 2, 2]),
        (-2.0, [0, 0, 2, 0]),
        (-4.0, [0, 2, 1, 0]),
        (2.0, [0, 1, 1, 1]),
        (-2.0, [0, 0, 1, 2]),
        (-2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (1.0, [0, 2, 0, 0]),
        (-2.0, [0, 0, 0, 4]),
        (-1.0, [0, 0, 0, 2]),
    ],
};

pub(super) const D1_12: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (16.0, [4, 0, 2, 0]),
        (16.0, [4, 0, 1, 0]),
        (8.0, [4, 0, 0, 2]),
        (12.0, [4, 0, 0, 0]),
        (16.0, [3, 0, 2, 0]),
        (8.0, [3, 0, 1, 0]),
        (8.0, [3, 0, 0, 2]),
        (8.0, [3, 0, 0, 0]),
        (16.0, [2, 0, 4, 0]),
        (16.0, [2, 0, 3, 0]),
        (32.0, [2, 2, 2, 0]),
        (32.0, [2, 0, 2, 2]),
        (40.0, [2, 0, 2, 0]),
        (32.0, [2, 2, 1, 0]),
        (-8.0, [2, 1, 1, 1]),
        (16.0, [2, 0, 1, 2]),
        (24.0, [2, 0, 1, 0]),
        (16.0, [2, 2, 0, 2]),
        (24.0, [2, 2, 0, 0]),
        (-8.0, [2, 1, 0, 1]),
        (16.0, [2, 0, 0, 4]),
        (32.0, [2, 0, 0, 2]),
        (24.0, [2, 0, 0, 0]),
        (16.0, [1, 0, 4, 0]),
        (8.0, [1, 0, 3, 0]),
        (16.0, [1, 2, 2, 0]),
        (-8.0, [1, 1, 2, 1]),
        (32.0, [1, 0, 2, 2]),
        (24.0, [1, 0, 2, 0]),
        (8.0, [1, 2, 1, 0]),
        (-8.0, [1, 1, 1, 1]),
        (8.0, [1, 0, 1, 2]),
        (8.0, [1, 0, 1, 0]),
        (8.0, [1, 2, 0, 2]),
        (8.0, [1, 2, 0, 0]),
        (-8.0, [1, 1, 0, 3]),
        (-8.0, [1, 1, 0, 1]),
        (16.0, [1, 0, 0, 4]),
        (24.0, [1, 0, 0, 2]),
        (8.0, [1, 0, 0, 0]),
        (8.0, [0, 2, 4, 0]),
        (12.0, [0, 0, 4, 0]),
        (8.0, [0, 2, 3, 0]),
        (8.0, [0, 0, 3, 0]),
        (16.0, [0, 4, 2, 0]),
        (16.0, [0, 2, 2, 2]),
        (32.0, [0, 2, 2, 0]),
        (-8.0, [0, 1, 2, 1]),
        (24.0, [0, 0, 2, 2]),
        (24.0, [0, 0, 2, 0]),
        (16.0, [0, 4, 1, 0]),
        (-8.0, [0, 3, 1, 1]),
        (8.0, [0, 2, 1, 2]),
        (24.0, [0, 2, 1, 0]),
        (-8.0, [0, 1, 1, 1]),
        (8.0, [0, 0, 1, 2]),
        (8.0, [0, 0, 1, 0]),
        (8.0, [0, 4, 0, 2]),
        (12.0, [0, 4, 0, 0]),
        (-8.0, [0, 3, 0, 1]),
        (8.0, [0, 2, 0, 4]),
        (28.0, [0, 2, 0, 2]),
        (24.0, [0, 2, 0, 0]),
        (-8.0, [0, 1, 0, 3]),
        (-16.0, [0, 1, 0, 1]),
        (12.0, [0, 0, 0, 4]),
        (24.0, [0, 0, 0, 2]),
        (12.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N2_12: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Sin1,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (-2.0, [1, 1, 2, 0]),
        (-3.0, [1, 1, 1, 0]),
        (3.0, [1, 0, 1, 1]),
        (-1.0, [1, 1, 0, 2]),
        (-1.0, [1, 1, 0, 0]),
        (2.0, [1, 0, 0, 1]),
        (-2.0, [0, 1, 2, 0]),
        (-1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (-2.0, [0, 1, 1, 0]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (-1.0, [0, 1, 0, 2]),
        (-1.0, [0, 0, 0, 3]),
    ],
};

// D2_12 is printed as referring to itself; see `OracleReading`.

pub(super) const N3_12: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos1,
    },
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (4.0, [3, 0, 0, 0]),
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (5.0, [2, 0, 0, 2]),
        (8.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 2, 0]),
        (-2.0, [1, 1, 1, 1]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (2.0, [0, 0, 4, 0]),
        (4.0, [0, 0, 3, 0]),
        (5.0, [0, 2, 2, 0]),
        (4.0, [0, 0, 2, 2]),
        (8.0, [0, 0, 2, 0]),
        (8.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (4.0, [0, 2, 0, 2]),
        (9.0, [0, 2, 0, 0]),
        (-8.0, [0, 1, 0, 1]),
        (2.0, [0, 0, 0, 4]),
        (9.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

pub(super) const D3_12: Denominator = Denominator {
    length_power: 1,
    terms: &[
        (8.0, [4, 0, 2, 0]),
        (8.0, [4, 0, 1, 0]),
        (4.0, [4, 0, 0, 2]),
        (6.0, [4, 0, 0, 0]),
        (8.0, [3, 0, 2, 0]),
        (4.0, [3, 0, 1, 0]),
        (4.0, [3, 0, 0, 2]),
        (4.0, [3, 0, 0, 0]),
        (8.0, [2, 0, 4, 0]),
        (8.0, [2, 0, 3, 0]),
        (16.0, [2, 2, 2, 0]),
        (16.0, [2, 0, 2, 2]),
        (20.0, [2, 0, 2, 0]),
        (16.0, [2, 2, 1, 0]),
        (-4.0, [2, 1, 1, 1]),
        (8.0, [2, 0, 1, 2]),
        (12.0, [2, 0, 1, 0]),
        (8.0, [2, 2, 0, 2]),
        (12.0, [2, 2, 0, 0]),
        (-4.0, [2, 1, 0, 1]),
        (8.0, [2, 0, 0, 4]),
        (16.0, [2, 0, 0, 2]),
        (12.0, [2, 0, 0, 0]),
        (8.0, [1, 0, 4, 0]),
        (4.0, [1, 0, 3, 0]),
        (8.0, [1, 2, 2, 0]),
        (-4.0, [1, 1, 2, 1]),
        (16.0, [1, 0, 2, 2]),
        (12.0, [1, 0, 2, 0]),
        (4.0, [1, 2, 1, 0]),
        (-4.0, [1, 1, 1, 1]),
        (4.0, [1, 0, 1, 2]),
        (4.0, [1, 0, 1, 0]),
        (4.0, [1, 2, 0, 2]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 3]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 4]),
        (12.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (4.0, [0, 2, 4, 0]),
        (6.0, [0, 0, 4, 0]),
        (4.0, [0, 2, 3, 0]),
        (4.0, [0, 0, 3, 0]),
        (8.0, [0, 4, 2, 0]),
        (8.0, [0, 2, 2, 2]),
        (16.0, [0, 2, 2, 0]),
        (-4.0, [0, 1, 2, 1]),
        (12.0, [0, 0, 2, 2]),
        (12.0, [0, 0, 2, 0]),
        (8.0, [0, 4, 1, 0]),
        (-4.0, [0, 3, 1, 1]),
        (4.0, [0, 2, 1, 2]),
        (12.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (4.0, [0, 4, 0, 2]),
        (6.0, [0, 4, 0, 0]),
        (-4.0, [0, 3, 0, 1]),
        (4.0, [0, 2, 0, 4]),
        (14.0, [0, 2, 0, 2]),
        (12.0, [0, 2, 0, 0]),
        (-4.0, [0, 1, 0, 3]),
        (-8.0, [0, 1, 0, 1]),
        (6.0, [0, 0, 0, 4]),
        (12.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N1_21: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::Trig {
        coef: 2.0,
        factor: Trig::Sin2,
    },
    terms: &[
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 0, 1, 0]),
        (2.0, [2, 0, 0, 2]),
        (3.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 2, 0]),
        (2.0, [1, 0, 1, 0]),
        (2.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (2.0, [0, 2, 2, 0]),
        (3.0, [0, 0, 2, 0]),
        (2.0, [0, 2, 1, 0]),
        (2.0, [0, 0, 1, 0]),
        (1.0, [0, 2, 0, 2]),
        (2.0, [0, 2, 0, 0]),
        (2.0, [0, 0, 0, 2]),
        (3.0, [0, 0, 0, 0]),
    ],
};

// D1_21 is printed as an alias of D2_11.

pub(super) const N2_21: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::MomentArm(Joint::Second),
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (2.0, [1, 1, 2, 0]),
        (1.0, [1, 1, 1, 0]),
        (1.0, [1, 0, 1, 1]),
        (1.0, [1, 1, 0, 2]),
        (1.0, [1, 1, 0, 0]),
        (2.0, [0, 1, 2, 0]),
        (1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (1.0, [0, 1, 0, 2]),
        (2.0, [0, 1, 0, 0]),
        (1.0, [0, 0, 0, 3]),
        (2.0, [0, 0, 0, 1]),
    ],
};

pub(super) const D2_21: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (8.0, [4, 0, 2, 0]),
        (8.0, [4, 0, 1, 0]),
        (4.0, [4, 0, 0, 2]),
        (6.0, [4, 0, 0, 0]),
        (8.0, [3, 0, 2, 0]),
        (4.0, [3, 0, 1, 0]),
        (4.0, [3, 0, 0, 2]),
        (4.0, [3, 0, 0, 0]),
        (8.0, [2, 0, 4, 0]),
        (8.0, [2, 0, 3, 0]),
        (16.0, [2, 2, 2, 0]),
        (16.0, [2, 0, 2, 2]),
        (20.0, [2, 0, 2, 0]),
        (16.0, [2, 2, 1, 0]),
        (-4.0, [2, 1, 1, 1]),
        (8.0, [2, 0, 1, 2]),
        (12.0, [2, 0, 1, 0]),
        (8.0, [2, 2, 0, 2]),
        (12.0, [2, 2, 0, 0]),
        (-4.0, [2, 1, 0, 1]),
        (8.0, [2, 0, 0, 4]),
        (16.0, [2, 0, 0, 2]),
        (12.0, [2, 0, 0, 0]),
        (8.0, [1, 0, 4, 0]),
        (4.0, [1, 0, 3, 0]),
        (8.0, [1, 2, 2, 0]),
        (-4.0, [1, 1, 2, 1]),
        (16.0, [1, 0, 2, 2]),
        (12.0, [1, 0, 2, 0]),
        (4.0, [1, 2, 1, 0]),
        (-4.0, [1, 1, 1, 1]),
        (4.0, [1, 0, 1, 2]),
        (4.0, [1, 0, 1, 0]),
        (4.0, [1, 2, 0, 2]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 3]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 4]),
        (12.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (4.0, [0, 2, 4, 0]),
        (6.0, [0, 0, 4, 0]),
        (4.0, [0, 2, 3, 0]),
        (4.0, [0, 0, 3, 0]),
        (8.0, [0, 4, 2, 0]),
        (8.0, [0, 2, 2, 2]),
        (16.0, [0, 2, 2, 0]),
        (-4.0, [0, 1, 2, 1]),
        (12.0, [0, 0, 2, 2]),
        (12.0, [0, 0, 2, 0]),
        (8.0, [0, 4, 1, 0]),
        (-4.0, [0, 3, 1, 1]),
        (4.0, [0, 2, 1, 2]),
        (12.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (4.0, [0, 4, 0, 2]),
        (6.0, [0, 4, 0, 0]),
        (-4.0, [0, 3, 0, 1]),
        (4.0, [0, 2, 0, 4]),
        (14.0, [0, 2, 0, 2]),
        (12.0, [0, 2, 0, 0]),
        (-4.0, [0, 1, 0, 3]),
        (-8.0, [0, 1, 0, 1]),
        (6.0, [0, 0, 0, 4]),
        (12.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N3_21: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos2,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (-2.0, [1, 1, 2, 0]),
        (-3.0, [1, 1, 1, 0]),
        (3.0, [1, 0, 1, 1]),
        (-1.0, [1, 1, 0, 2]),
        (-1.0, [1, 1, 0, 0]),
        (2.0, [1, 0, 0, 1]),
        (-2.0, [0, 1, 2, 0]),
        (-1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (-2.0, [0, 1, 1, 0]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (-1.0, [0, 1, 0, 2]),
        (-1.0, [0, 0, 0, 3]),
    ],
};

// D3_21 is printed as an alias of D2_11.

pub(super) const N1_22: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Sin2,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (-2.0, [1, 1, 2, 0]),
        (-3.0, [1, 1, 1, 0]),
        (3.0, [1, 0, 1, 1]),
        (-1.0, [1, 1, 0, 2]),
        (-1.0, [1, 1, 0, 0]),
        (2.0, [1, 0, 0, 1]),
        (-2.0, [0, 1, 2, 0]),
        (-1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (-2.0, [0, 1, 1, 0]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (-1.0, [0, 1, 0, 2]),
        (-1.0, [0, 0, 0, 3]),
    ],
};

// D1_22 is printed as an alias of D2_11.

pub(super) const N2_22: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::MomentArm(Joint::Second),
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (2.0, [3, 0, 0, 0]),
        (-2.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (3.0, [2, 0, 0, 2]),
        (2.0, [2, 0, 0, 0]),
        (2.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (-2.0, [0, 0, 4, 0]),
        (-2.0, [0, 0, 3, 0]),
        (-3.0, [0, 2, 2, 0]),
        (-4.0, [0, 0, 2, 2]),
        (-2.0, [0, 0, 2, 0]),
        (-4.0, [0, 2, 1, 0]),
        (2.0, [0, 1, 1, 1]),
        (-2.0, [0, 0, 1, 2]),
        (-2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (1.0, [0, 2, 0, 0]),
        (-2.0, [0, 0, 0, 4]),
        (-1.0, [0, 0, 0, 2]),
    ],
};

// D2_22 is printed as an alias of D1_12.

pub(super) const N3_22: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos2,
    },
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (4.0, [3, 0, 0, 0]),
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (5.0, [2, 0, 0, 2]),
        (8.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 2, 0]),
        (-2.0, [1, 1, 1, 1]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (2.0, [0, 0, 4, 0]),
        (4.0, [0, 0, 3, 0]),
        (5.0, [0, 2, 2, 0]),
        (4.0, [0, 0, 2, 2]),
        (8.0, [0, 0, 2, 0]),
        (8.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (4.0, [0, 2, 0, 2]),
        (9.0, [0, 2, 0, 0]),
        (-8.0, [0, 1, 0, 1]),
        (2.0, [0, 0, 0, 4]),
        (9.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

// D3_22 is printed as an alias of D3_12.

pub(super) const N1_31: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::MomentArm(Joint::First),
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 2, 0, 0]),
        (5.0, [2, 0, 0, 2]),
        (4.0, [2, 0, 0, 0]),
        (2.0, [1, 1, 1, 1]),
        (2.0, [0, 0, 4, 0]),
        (5.0, [0, 2, 2, 0]),
        (4.0, [0, 0, 2, 2]),
        (4.0, [0, 0, 2, 0]),
        (2.0, [0, 4, 0, 0]),
        (4.0, [0, 2, 0, 2]),
        (5.0, [0, 2, 0, 0]),
        (2.0, [0, 0, 0, 4]),
        (5.0, [0, 0, 0, 2]),
        (2.0, [0, 0, 0, 0]),
    ],
};

pub(super) const D1_31: Denominator = Denominator {
    length_power: 3,
    terms: &[
        (16.0, [4, 0, 2, 0]),
        (16.0, [4, 0, 1, 0]),
        (8.0, [4, 0, 0, 2]),
        (12.0, [4, 0, 0, 0]),
        (16.0, [3, 0, 2, 0]),
        (8.0, [3, 0, 1, 0]),
        (8.0, [3, 0, 0, 2]),
        (8.0, [3, 0, 0, 0]),
        (16.0, [2, 0, 4, 0]),
        (16.0, [2, 0, 3, 0]),
        (32.0, [2, 2, 2, 0]),
        (32.0, [2, 0, 2, 2]),
        (40.0, [2, 0, 2, 0]),
        (32.0, [2, 2, 1, 0]),
        (-8.0, [2, 1, 1, 1]),
        (16.0, [2, 0, 1, 2]),
        (24.0, [2, 0, 1, 0]),
        (16.0, [2, 2, 0, 2]),
        (24.0, [2, 2, 0, 0]),
        (-8.0, [2, 1, 0, 1]),
        (16.0, [2, 0, 0, 4]),
        (32.0, [2, 0, 0, 2]),
        (24.0, [2, 0, 0, 0]),
        (16.0, [1, 0, 4, 0]),
        (8.0, [1, 0, 3, 0]),
        (16.0, [1, 2, 2, 0]),
        (-8.0, [1, 1, 2, 1]),
        (32.0, [1, 0, 2, 2]),
        (24.0, [1, 0, 2, 0]),
        (8.0, [1, 2, 1, 0]),
        (-8.0, [1, 1, 1, 1]),
        (8.0, [1, 0, 1, 2]),
        (8.0, [1, 0, 1, 0]),
        (8.0, [1, 2, 0, 2]),
        (8.0, [1, 2, 0, 0]),
        (-8.0, [1, 1, 0, 3]),
        (-8.0, [1, 1, 0, 1]),
        (16.0, [1, 0, 0, 4]),
        (24.0, [1, 0, 0, 2]),
        (8.0, [1, 0, 0, 0]),
        (8.0, [0, 2, 4, 0]),
        (12.0, [0, 0, 4, 0]),
        (8.0, [0, 2, 3, 0]),
        (8.0, [0, 0, 3, 0]),
        (16.0, [0, 4, 2, 0]),
        (16.0, [0, 2, 2, 2]),
        (32.0, [0, 2, 2, 0]),
        (-8.0, [0, 1, 2, 1]),
        (24.0, [0, 0, 2, 2]),
        (24.0, [0, 0, 2, 0]),
        (16.0, [0, 4, 1, 0]),
        (-8.0, [0, 3, 1, 1]),
        (8.0, [0, 2, 1, 2]),
        (24.0, [0, 2, 1, 0]),
        (-8.0, [0, 1, 1, 1]),
        (8.0, [0, 0, 1, 2]),
        (8.0, [0, 0, 1, 0]),
        (8.0, [0, 4, 0, 2]),
        (12.0, [0, 4, 0, 0]),
        (-8.0, [0, 3, 0, 1]),
        (8.0, [0, 2, 0, 4]),
        (28.0, [0, 2, 0, 2]),
        (24.0, [0, 2, 0, 0]),
        (-8.0, [0, 1, 0, 3]),
        (-16.0, [0, 1, 0, 1]),
        (12.0, [0, 0, 0, 4]),
        (24.0, [0, 0, 0, 2]),
        (12.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N2_31: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Sin1,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (2.0, [1, 1, 2, 0]),
        (1.0, [1, 1, 1, 0]),
        (1.0, [1, 0, 1, 1]),
        (1.0, [1, 1, 0, 2]),
        (1.0, [1, 1, 0, 0]),
        (2.0, [0, 1, 2, 0]),
        (1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (1.0, [0, 1, 0, 2]),
        (2.0, [0, 1, 0, 0]),
        (1.0, [0, 0, 0, 3]),
        (2.0, [0, 0, 0, 1]),
    ],
};

pub(super) const D2_31: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (4.0, [4, 0, 2, 0]),
        (4.0, [4, 0, 1, 0]),
        (2.0, [4, 0, 0, 2]),
        (3.0, [4, 0, 0, 0]),
        (4.0, [3, 0, 2, 0]),
        (2.0, [3, 0, 1, 0]),
        (2.0, [3, 0, 0, 2]),
        (2.0, [3, 0, 0, 0]),
        (4.0, [2, 0, 4, 0]),
        (4.0, [2, 0, 3, 0]),
        (8.0, [2, 2, 2, 0]),
        (8.0, [2, 0, 2, 2]),
        (10.0, [2, 0, 2, 0]),
        (8.0, [2, 2, 1, 0]),
        (-2.0, [2, 1, 1, 1]),
        (4.0, [2, 0, 1, 2]),
        (6.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 2]),
        (6.0, [2, 2, 0, 0]),
        (-2.0, [2, 1, 0, 1]),
        (4.0, [2, 0, 0, 4]),
        (8.0, [2, 0, 0, 2]),
        (6.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 4, 0]),
        (2.0, [1, 0, 3, 0]),
        (4.0, [1, 2, 2, 0]),
        (-2.0, [1, 1, 2, 1]),
        (8.0, [1, 0, 2, 2]),
        (6.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 1, 0]),
        (-2.0, [1, 1, 1, 1]),
        (2.0, [1, 0, 1, 2]),
        (2.0, [1, 0, 1, 0]),
        (2.0, [1, 2, 0, 2]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 3]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 4]),
        (6.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (2.0, [0, 2, 4, 0]),
        (3.0, [0, 0, 4, 0]),
        (2.0, [0, 2, 3, 0]),
        (2.0, [0, 0, 3, 0]),
        (4.0, [0, 4, 2, 0]),
        (4.0, [0, 2, 2, 2]),
        (8.0, [0, 2, 2, 0]),
        (-2.0, [0, 1, 2, 1]),
        (6.0, [0, 0, 2, 2]),
        (6.0, [0, 0, 2, 0]),
        (4.0, [0, 4, 1, 0]),
        (-2.0, [0, 3, 1, 1]),
        (2.0, [0, 2, 1, 2]),
        (6.0, [0, 2, 1, 0]),
        (-2.0, [0, 1, 1, 1]),
        (2.0, [0, 0, 1, 2]),
        (2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 2]),
        (3.0, [0, 4, 0, 0]),
        (-2.0, [0, 3, 0, 1]),
        (2.0, [0, 2, 0, 4]),
        (7.0, [0, 2, 0, 2]),
        (6.0, [0, 2, 0, 0]),
        (-2.0, [0, 1, 0, 3]),
        (-4.0, [0, 1, 0, 1]),
        (3.0, [0, 0, 0, 4]),
        (6.0, [0, 0, 0, 2]),
        (3.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N3_31: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos1,
    },
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (2.0, [3, 0, 0, 0]),
        (-2.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (3.0, [2, 0, 0, 2]),
        (2.0, [2, 0, 0, 0]),
        (2.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (-2.0, [0, 0, 4, 0]),
        (-2.0, [0, 0, 3, 0]),
        (-3.0, [0, 2, 2, 0]),
        (-4.0, [0, 0, 2, 2]),
        (-2.0, [0, 0, 2, 0]),
        (-4.0, [0, 2, 1, 0]),
        (2.0, [0, 1, 1, 1]),
        (-2.0, [0, 0, 1, 2]),
        (-2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (1.0, [0, 2, 0, 0]),
        (-2.0, [0, 0, 0, 4]),
        (-1.0, [0, 0, 0, 2]),
    ],
};

pub(super) const D3_31: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (8.0, [4, 0, 2, 0]),
        (8.0, [4, 0, 1, 0]),
        (4.0, [4, 0, 0, 2]),
        (6.0, [4, 0, 0, 0]),
        (8.0, [3, 0, 2, 0]),
        (4.0, [3, 0, 1, 0]),
        (4.0, [3, 0, 0, 2]),
        (4.0, [3, 0, 0, 0]),
        (8.0, [2, 0, 4, 0]),
        (8.0, [2, 0, 3, 0]),
        (16.0, [2, 2, 2, 0]),
        (16.0, [2, 0, 2, 2]),
        (20.0, [2, 0, 2, 0]),
        (16.0, [2, 2, 1, 0]),
        (-4.0, [2, 1, 1, 1]),
        (8.0, [2, 0, 1, 2]),
        (12.0, [2, 0, 1, 0]),
        (8.0, [2, 2, 0, 2]),
        (12.0, [2, 2, 0, 0]),
        (-4.0, [2, 1, 0, 1]),
        (8.0, [2, 0, 0, 4]),
        (16.0, [2, 0, 0, 2]),
        (12.0, [2, 0, 0, 0]),
        (8.0, [1, 0, 4, 0]),
        (4.0, [1, 0, 3, 0]),
        (8.0, [1, 2, 2, 0]),
        (-4.0, [1, 1, 2, 1]),
        (16.0, [1, 0, 2, 2]),
        (12.0, [1, 0, 2, 0]),
        (4.0, [1, 2, 1, 0]),
        (-4.0, [1, 1, 1, 1]),
        (4.0, [1, 0, 1, 2]),
        (4.0, [1, 0, 1, 0]),
        (4.0, [1, 2, 0, 2]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 3]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 4]),
        (12.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (4.0, [0, 2, 4, 0]),
        (6.0, [0, 0, 4, 0]),
        (4.0, [0, 2, 3, 0]),
        (4.0, [0, 0, 3, 0]),
        (8.0, [0, 4, 2, 0]),
        (8.0, [0, 2, 2, 2]),
        (16.0, [0, 2, 2, 0]),
        (-4.0, [0, 1, 2, 1]),
        (12.0, [0, 0, 2, 2]),
        (12.0, [0, 0, 2, 0]),
        (8.0, [0, 4, 1, 0]),
        (-4.0, [0, 3, 1, 1]),
        (4.0, [0, 2, 1, 2]),
        (12.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (4.0, [0, 4, 0, 2]),
        (6.0, [0, 4, 0, 0]),
        (-4.0, [0, 3, 0, 1]),
        (4.0, [0, 2, 0, 4]),
        (14.0, [0, 2, 0, 2]),
        (12.0, [0, 2, 0, 0]),
        (-4.0, [0, 1, 0, 3]),
        (-8.0, [0, 1, 0, 1]),
        (6.0, [0, 0, 0, 4]),
        (12.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N1_32: Numerator = Numerator {
    sign: 1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Sin2,
    },
    terms: &[
        (2.0, [2, 0, 1, 1]),
        (1.0, [2, 1, 0, 0]),
        (2.0, [2, 0, 0, 1]),
        (2.0, [1, 1, 2, 0]),
        (1.0, [1, 1, 1, 0]),
        (1.0, [1, 0, 1, 1]),
        (1.0, [1, 1, 0, 2]),
        (1.0, [1, 1, 0, 0]),
        (2.0, [0, 1, 2, 0]),
        (1.0, [0, 0, 2, 1]),
        (1.0, [0, 2, 1, 1]),
        (1.0, [0, 0, 1, 1]),
        (1.0, [0, 3, 0, 0]),
        (1.0, [0, 2, 0, 1]),
        (1.0, [0, 1, 0, 2]),
        (2.0, [0, 1, 0, 0]),
        (1.0, [0, 0, 0, 3]),
        (2.0, [0, 0, 0, 1]),
    ],
};

pub(super) const D1_32: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (4.0, [4, 0, 2, 0]),
        (4.0, [4, 0, 1, 0]),
        (2.0, [4, 0, 0, 2]),
        (3.0, [4, 0, 0, 0]),
        (4.0, [3, 0, 2, 0]),
        (2.0, [3, 0, 1, 0]),
        (2.0, [3, 0, 0, 2]),
        (2.0, [3, 0, 0, 0]),
        (4.0, [2, 0, 4, 0]),
        (4.0, [2, 0, 3, 0]),
        (8.0, [2, 2, 2, 0]),
        (8.0, [2, 0, 2, 2]),
        (10.0, [2, 0, 2, 0]),
        (8.0, [2, 2, 1, 0]),
        (-2.0, [2, 1, 1, 1]),
        (4.0, [2, 0, 1, 2]),
        (6.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 2]),
        (6.0, [2, 2, 0, 0]),
        (-2.0, [2, 1, 0, 1]),
        (4.0, [2, 0, 0, 4]),
        (8.0, [2, 0, 0, 2]),
        (6.0, [2, 0, 0, 0]),
        (4.0, [1, 0, 4, 0]),
        (2.0, [1, 0, 3, 0]),
        (4.0, [1, 2, 2, 0]),
        (-2.0, [1, 1, 2, 1]),
        (8.0, [1, 0, 2, 2]),
        (6.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 1, 0]),
        (-2.0, [1, 1, 1, 1]),
        (2.0, [1, 0, 1, 2]),
        (2.0, [1, 0, 1, 0]),
        (2.0, [1, 2, 0, 2]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 3]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 4]),
        (6.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (2.0, [0, 2, 4, 0]),
        (3.0, [0, 0, 4, 0]),
        (2.0, [0, 2, 3, 0]),
        (2.0, [0, 0, 3, 0]),
        (4.0, [0, 4, 2, 0]),
        (4.0, [0, 2, 2, 2]),
        (8.0, [0, 2, 2, 0]),
        (-2.0, [0, 1, 2, 1]),
        (6.0, [0, 0, 2, 2]),
        (6.0, [0, 0, 2, 0]),
        (4.0, [0, 4, 1, 0]),
        (-2.0, [0, 3, 1, 1]),
        (2.0, [0, 2, 1, 2]),
        (6.0, [0, 2, 1, 0]),
        (-2.0, [0, 1, 1, 1]),
        (2.0, [0, 0, 1, 2]),
        (2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 2]),
        (3.0, [0, 4, 0, 0]),
        (-2.0, [0, 3, 0, 1]),
        (2.0, [0, 2, 0, 4]),
        (7.0, [0, 2, 0, 2]),
        (6.0, [0, 2, 0, 0]),
        (-2.0, [0, 1, 0, 3]),
        (-4.0, [0, 1, 0, 1]),
        (3.0, [0, 0, 0, 4]),
        (6.0, [0, 0, 0, 2]),
        (3.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N2_32: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::MomentArm(Joint::Second),
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (4.0, [2, 0, 2, 0]),
        (4.0, [2, 2, 0, 0]),
        (5.0, [2, 0, 0, 2]),
        (4.0, [2, 0, 0, 0]),
        (2.0, [1, 1, 1, 1]),
        (2.0, [0, 0, 4, 0]),
        (5.0, [0, 2, 2, 0]),
        (4.0, [0, 0, 2, 2]),
        (4.0, [0, 0, 2, 0]),
        (2.0, [0, 4, 0, 0]),
        (4.0, [0, 2, 0, 2]),
        (5.0, [0, 2, 0, 0]),
        (2.0, [0, 0, 0, 4]),
        (5.0, [0, 0, 0, 2]),
        (2.0, [0, 0, 0, 0]),
    ],
};

pub(super) const D2_32: Denominator = Denominator {
    length_power: 3,
    terms: &[
        (16.0, [4, 0, 2, 0]),
        (16.0, [4, 0, 1, 0]),
        (8.0, [4, 0, 0, 2]),
        (12.0, [4, 0, 0, 0]),
        (16.0, [3, 0, 2, 0]),
        (8.0, [3, 0, 1, 0]),
        (8.0, [3, 0, 0, 2]),
        (8.0, [3, 0, 0, 0]),
        (16.0, [2, 0, 4, 0]),
        (16.0, [2, 0, 3, 0]),
        (32.0, [2, 2, 2, 0]),
        (32.0, [2, 0, 2, 2]),
        (40.0, [2, 0, 2, 0]),
        (32.0, [2, 2, 1, 0]),
        (-8.0, [2, 1, 1, 1]),
        (16.0, [2, 0, 1, 2]),
        (24.0, [2, 0, 1, 0]),
        (16.0, [2, 2, 0, 2]),
        (24.0, [2, 2, 0, 0]),
        (-8.0, [2, 1, 0, 1]),
        (16.0, [2, 0, 0, 4]),
        (32.0, [2, 0, 0, 2]),
        (24.0, [2, 0, 0, 0]),
        (16.0, [1, 0, 4, 0]),
        (8.0, [1, 0, 3, 0]),
        (16.0, [1, 2, 2, 0]),
        (-8.0, [1, 1, 2, 1]),
        (32.0, [1, 0, 2, 2]),
        (24.0, [1, 0, 2, 0]),
        (8.0, [1, 2, 1, 0]),
        (-8.0, [1, 1, 1, 1]),
        (8.0, [1, 0, 1, 2]),
        (8.0, [1, 0, 1, 0]),
        (8.0, [1, 2, 0, 2]),
        (8.0, [1, 2, 0, 0]),
        (-8.0, [1, 1, 0, 3]),
        (-8.0, [1, 1, 0, 1]),
        (16.0, [1, 0, 0, 4]),
        (24.0, [1, 0, 0, 2]),
        (8.0, [1, 0, 0, 0]),
        (8.0, [0, 2, 4, 0]),
        (12.0, [0, 0, 4, 0]),
        (8.0, [0, 2, 3, 0]),
        (8.0, [0, 0, 3, 0]),
        (16.0, [0, 4, 2, 0]),
        (16.0, [0, 2, 2, 2]),
        (32.0, [0, 2, 2, 0]),
        (-8.0, [0, 1, 2, 1]),
        (24.0, [0, 0, 2, 2]),
        (24.0, [0, 0, 2, 0]),
        (16.0, [0, 4, 1, 0]),
        (-8.0, [0, 3, 1, 1]),
        (8.0, [0, 2, 1, 2]),
        (24.0, [0, 2, 1, 0]),
        (-8.0, [0, 1, 1, 1]),
        (8.0, [0, 0, 1, 2]),
        (8.0, [0, 0, 1, 0]),
        (8.0, [0, 4, 0, 2]),
        (12.0, [0, 4, 0, 0]),
        (-8.0, [0, 3, 0, 1]),
        (8.0, [0, 2, 0, 4]),
        (28.0, [0, 2, 0, 2]),
        (24.0, [0, 2, 0, 0]),
        (-8.0, [0, 1, 0, 3]),
        (-16.0, [0, 1, 0, 1]),
        (12.0, [0, 0, 0, 4]),
        (24.0, [0, 0, 0, 2]),
        (12.0, [0, 0, 0, 0]),
    ],
};

pub(super) const N3_32: Numerator = Numerator {
    sign: -1.0,
    prefactor: Prefactor::Trig {
        coef: 1.0,
        factor: Trig::Cos2,
    },
    terms: &[
        (2.0, [4, 0, 0, 0]),
        (2.0, [3, 0, 0, 0]),
        (-2.0, [2, 0, 1, 0]),
        (4.0, [2, 2, 0, 0]),
        (3.0, [2, 0, 0, 2]),
        (2.0, [2, 0, 0, 0]),
        (2.0, [1, 0, 2, 0]),
        (2.0, [1, 2, 0, 0]),
        (-2.0, [1, 1, 0, 1]),
        (4.0, [1, 0, 0, 2]),
        (2.0, [1, 0, 0, 0]),
        (-2.0, [0, 0, 4, 0]),
        (-2.0, [0, 0, 3, 0]),
        (-3.0, [0, 2, 2, 0]),
        (-4.0, [0, 0, 2, 2]),
        (-2.0, [0, 0, 2, 0]),
        (-4.0, [0, 2, 1, 0]),
        (2.0, [0, 1, 1, 1]),
        (-2.0, [0, 0, 1, 2]),
        (-2.0, [0, 0, 1, 0]),
        (2.0, [0, 4, 0, 0]),
        (1.0, [0, 2, 0, 0]),
        (-2.0, [0, 0, 0, 4]),
        (-1.0, [0, 0, 0, 2]),
    ],
};

pub(super) const D3_32: Denominator = Denominator {
    length_power: 2,
    terms: &[
        (8.0, [4, 0, 2, 0]),
        (8.0, [4, 0, 1, 0]),
        (4.0, [4, 0, 0, 2]),
        (6.0, [4, 0, 0, 0]),
        (8.0, [3, 0, 2, 0]),
        (4.0, [3, 0, 1, 0]),
        (4.0, [3, 0, 0, 2]),
        (4.0, [3, 0, 0, 0]),
        (8.0, [2, 0, 4, 0]),
        (8.0, [2, 0, 3, 0]),
        (16.0, [2, 2, 2, 0]),
        (16.0, [2, 0, 2, 2]),
        (20.0, [2, 0, 2, 0]),
        (16.0, [2, 2, 1, 0]),
        (-4.0, [2, 1, 1, 1]),
        (8.0, [2, 0, 1, 2]),
        (12.0, [2, 0, 1, 0]),
        (8.0, [2, 2, 0, 2]),
        (12.0, [2, 2, 0, 0]),
        (-4.0, [2, 1, 0, 1]),
        (8.0, [2, 0, 0, 4]),
        (16.0, [2, 0, 0, 2]),
        (12.0, [2, 0, 0, 0]),
        (8.0, [1, 0, 4, 0]),
        (4.0, [1, 0, 3, 0]),
        (8.0, [1, 2, 2, 0]),
        (-4.0, [1, 1, 2, 1]),
        (16.0, [1, 0, 2, 2]),
        (12.0, [1, 0, 2, 0]),
        (4.0, [1, 2, 1, 0]),
        (-4.0, [1, 1, 1, 1]),
        (4.0, [1, 0, 1, 2]),
        (4.0, [1, 0, 1, 0]),
        (4.0, [1, 2, 0, 2]),
        (4.0, [1, 2, 0, 0]),
        (-4.0, [1, 1, 0, 3]),
        (-4.0, [1, 1, 0, 1]),
        (8.0, [1, 0, 0, 4]),
        (12.0, [1, 0, 0, 2]),
        (4.0, [1, 0, 0, 0]),
        (4.0, [0, 2, 4, 0]),
        (6.0, [0, 0, 4, 0]),
        (4.0, [0, 2, 3, 0]),
        (4.0, [0, 0, 3, 0]),
        (8.0, [0, 4, 2, 0]),
        (8.0, [0, 2, 2, 2]),
        (16.0, [0, 2, 2, 0]),
        (-4.0, [0, 1, 2, 1]),
        (12.0, [0, 0, 2, 2]),
        (12.0, [0, 0, 2, 0]),
        (8.0, [0, 4, 1, 0]),
        (-4.0, [0, 3, 1, 1]),
        (4.0, [0, 2, 1, 2]),
        (12.0, [0, 2, 1, 0]),
        (-4.0, [0, 1, 1, 1]),
        (4.0, [0, 0, 1, 2]),
        (4.0, [0, 0, 1, 0]),
        (4.0, [0, 4, 0, 2]),
        (6.0, [0, 4, 0, 0]),
        (-4.0, [0, 3, 0, 1]),
        (4.0, [0, 2, 0, 4]),
        (14.0, [0, 2, 0, 2]),
        (12.0, [0, 2, 0, 0]),
        (-4.0, [0, 1, 0, 3]),
        (-8.0, [0, 1, 0, 1]),
        (6.0, [0, 0, 0, 4]),
        (12.0, [0, 0, 0, 2]),
        (6.0, [0, 0, 0, 0]),
    ],
};
