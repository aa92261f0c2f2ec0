//! Golden data for the regression suites: monomial bases and actions of the
//! inducing modules, Harish-Chandra rows, singular-vector families with
//! their nonvanishing certificates, finite-dimensional decompositions, and
//! the decomposition/singular tables of the remaining parabolics.

/// Monomial bases of inducing modules over the Levi of the (1,0,0)
/// parabolic. Rows: (word digits over simple indices, g2 action, g3 action)
/// with actions written over the basis names m1.. in descending table order.
pub struct MonomialTable {
    pub lambda: &'static str,
    pub rows: &'static [(&'static str, &'static str, &'static str)],
}

pub const MONOMIAL_TABLES: &[MonomialTable] = &[
    MonomialTable {
        lambda: "x1*w1+w2",
        rows: &[
            ("2332", "m2", "0"),
            ("332", "0", "2m3"),
            ("32", "0", "2m4"),
            ("2", "m5", "0"),
            ("", "0", "0"),
        ],
    },
    MonomialTable {
        lambda: "x1*w1+w3",
        rows: &[
            ("323", "0", "m2"),
            ("23", "m3", "0"),
            ("3", "0", "m4"),
            ("", "0", "0"),
        ],
    },
    MonomialTable {
        lambda: "x1*w1+2w2",
        rows: &[
            ("22333322", "2m2", "0"),
            ("2333322", "2m3", "4m4"),
            ("333322", "0", "4m5"),
            ("233322", "m5", "6m6"),
            ("33322", "0", "6m8"),
            ("22332", "2m7", "0"),
            ("2332", "2m9", "m10"),
            ("3322", "2m9", "6m10"),
            ("332", "0", "2m11"),
            ("322", "2m11", "4m12"),
            ("32", "0", "2m13"),
            ("22", "2m13", "0"),
            ("2", "2m14", "0"),
            ("", "0", "0"),
        ],
    },
    MonomialTable {
        lambda: "x1*w1+w2+w3",
        rows: &[
            ("3223332", "m2", "m3"),
            ("333223", "0", "3m5"),
            ("223332", "2m4", "0"),
            ("23332", "2m6", "3m7"),
            ("33223", "2/3m6", "4m8"),
            ("3332", "0", "3m10"),
            ("2332", "m10", "2m11"),
            ("3223", "2m9", "3m11"),
            ("323", "0", "m12+m13"),
            ("332", "0", "4m13"),
            ("223", "2m12", "0"),
            ("23", "2m14", "m15"),
            ("32", "m14", "3m15"),
            ("3", "0", "m16"),
            ("2", "m16", "0"),
            ("", "0", "0"),
        ],
    },
    MonomialTable {
        lambda: "x1*w1+2w3",
        rows: &[
            ("332233", "0", "2m2"),
            ("32233", "2m3", "2m4"),
            ("3323", "0", "2m5"),
            ("2233", "2m6", "0"),
            ("323", "m7", "2m8"),
            ("233", "2m7", "2m8"),
            ("33", "0", "2m9"),
            ("23", "m9", "0"),
            ("3", "0", "2m10"),
            ("", "0", "0"),
        ],
    },
];

/// Rows of the singular-vector/Harish-Chandra table for the (1,0,0)
/// parabolic: a singular vector combination over the monomial basis, the
/// projected weight mu in simple (alpha) coordinates, and p1(mu); all
/// polynomials in x1.
pub struct HwvRow {
    pub vector: &'static str,
    pub mu_alpha: (&'static str, &'static str),
    pub p1: &'static str,
}

pub struct HwvTable {
    pub lambda: &'static str,
    pub rows: &'static [HwvRow],
}

pub const HWV_P1_TABLES: &[HwvTable] = &[
    HwvTable {
        lambda: "x1*w1+w2",
        rows: &[
            HwvRow { vector: "m2", mu_alpha: ("2x1+1", "x1+1"), p1: "1/12x1^2+1/2x1+5/12" },
            HwvRow { vector: "m3", mu_alpha: ("2x1+2", "x1+1"), p1: "1/12x1^2+7/12x1+1/2" },
            HwvRow { vector: "m5", mu_alpha: ("2x1+3", "x1+2"), p1: "1/12x1^2+2/3x1+1" },
        ],
    },
    HwvTable {
        lambda: "x1*w1+w3",
        rows: &[
            HwvRow { vector: "m1", mu_alpha: ("2x1", "x1"), p1: "1/12x1^2+5/12x1" },
            HwvRow { vector: "m3", mu_alpha: ("2x1+1", "x1+1"), p1: "1/12x1^2+1/2x1+5/12" },
            HwvRow { vector: "m4", mu_alpha: ("2x1+2", "x1+1"), p1: "1/12x1^2+7/12x1+1/2" },
        ],
    },
    HwvTable {
        lambda: "x1*w1+2w2",
        rows: &[
            HwvRow { vector: "m3", mu_alpha: ("2x1+2", "x1+2"), p1: "1/12x1^2+7/12x1+1" },
            HwvRow { vector: "m5", mu_alpha: ("2x1+3", "x1+2"), p1: "1/12x1^2+2/3x1+1" },
            HwvRow { vector: "-m7+m8", mu_alpha: ("2x1+4", "x1+2"), p1: "1/12x1^2+3/4x1+7/6" },
            HwvRow { vector: "m9", mu_alpha: ("2x1+4", "x1+3"), p1: "1/12x1^2+3/4x1+5/3" },
            HwvRow { vector: "m11", mu_alpha: ("2x1+5", "x1+3"), p1: "1/12x1^2+5/6x1+7/4" },
            HwvRow { vector: "m14", mu_alpha: ("2x1+6", "x1+4"), p1: "1/12x1^2+11/12x1+5/2" },
        ],
    },
    HwvTable {
        lambda: "x1*w1+w2+w3",
        rows: &[
            HwvRow { vector: "m2", mu_alpha: ("2x1+1", "x1+1"), p1: "1/12x1^2+1/2x1+5/12" },
            HwvRow { vector: "-1/3m4+m5", mu_alpha: ("2x1+2", "x1+1"), p1: "1/12x1^2+7/12x1+1/2" },
            HwvRow { vector: "m6", mu_alpha: ("2x1+2", "x1+2"), p1: "1/12x1^2+7/12x1+1" },
            HwvRow { vector: "m9", mu_alpha: ("2x1+3", "x1+2"), p1: "1/12x1^2+2/3x1+1" },
            HwvRow { vector: "m10", mu_alpha: ("2x1+3", "x1+2"), p1: "1/12x1^2+2/3x1+1" },
            HwvRow { vector: "-1/2m12+m13", mu_alpha: ("2x1+4", "x1+2"), p1: "1/12x1^2+3/4x1+7/6" },
            HwvRow { vector: "m14", mu_alpha: ("2x1+4", "x1+3"), p1: "1/12x1^2+3/4x1+5/3" },
            HwvRow { vector: "m16", mu_alpha: ("2x1+5", "x1+3"), p1: "1/12x1^2+5/6x1+7/4" },
        ],
    },
    HwvTable {
        lambda: "x1*w1+2w3",
        rows: &[
            HwvRow { vector: "m1", mu_alpha: ("2x1", "x1"), p1: "1/12x1^2+5/12x1" },
            HwvRow { vector: "m3", mu_alpha: ("2x1+1", "x1+1"), p1: "1/12x1^2+1/2x1+5/12" },
            HwvRow { vector: "-2m5+m6", mu_alpha: ("2x1+2", "x1+1"), p1: "1/12x1^2+7/12x1+1/2" },
            HwvRow { vector: "m7", mu_alpha: ("2x1+2", "x1+2"), p1: "1/12x1^2+7/12x1+1" },
            HwvRow { vector: "m9", mu_alpha: ("2x1+3", "x1+2"), p1: "1/12x1^2+2/3x1+1" },
            HwvRow { vector: "m10", mu_alpha: ("2x1+4", "x1+2"), p1: "1/12x1^2+3/4x1+7/6" },
        ],
    },
];

/// The six singular-vector families over the (1,0,0) parabolic: printed
/// enveloping-algebra words applied to the highest vector (the trivial
/// highest vector itself is implied and not listed).
pub struct VectorFamily {
    pub lambda: &'static str,
    pub vectors: &'static [&'static str],
}

pub const THEOREM_FAMILIES: &[VectorFamily] = &[
    VectorFamily { lambda: "x1*w1", vectors: &[] },
    VectorFamily {
        lambda: "x1*w1+w2",
        vectors: &[
            "(-x1-2)g_{-3}g_{-2}-4g_{-4}+2g_{-2}g_{-1}",
            "(x1^2+2x1)g_{-3}^{2}g_{-2}+(x1-1)g_{-6}+(-2x1-1)g_{-1}g_{-3}g_{-2}-2g_{-4}g_{-1}+2g_{-1}^{2}g_{-2}",
        ],
    },
    VectorFamily {
        lambda: "x1*w1+w3",
        vectors: &[
            "-x1g_{-3}+g_{-1}",
            "(2x1+5)g_{-3}g_{-2}g_{-3}-g_{-6}+2g_{-4}g_{-3}-2g_{-1}g_{-2}g_{-3}",
        ],
    },
    VectorFamily {
        lambda: "x1*w1+2w2",
        vectors: &[
            "-4g_{-4}+(-x1-3)g_{-3}g_{-2}+2g_{-1}g_{-2}",
            "(4x1-4)g_{-6}-8g_{-4}g_{-1}+(2x1^2+6x1)g_{-3}^{2}g_{-2}+(-4x1-4)g_{-1}g_{-3}g_{-2}+4g_{-1}^{2}g_{-2}",
            "(-10x1-20)g_{-4}g_{-3}g_{-2}+20g_{-4}g_{-1}g_{-2}-20g_{-4}^{2}+(-x1^2-5x1-6)g_{-3}^{2}g_{-2}^{2}+(x1^2+5x1+6)g_{-2}g_{-3}^{2}g_{-2}+(5x1+10)g_{-1}g_{-3}g_{-2}^{2}-10g_{-1}^{2}g_{-2}^{2}",
            "(12x1^2+48x1+48)g_{-9}+(6x1^2+24x1+24)g_{-8}g_{-2}+(12x1^2+60x1-168)g_{-6}g_{-4}+(3x1^3+24x1^2-72)g_{-6}g_{-3}g_{-2}+(-6x1^2-30x1+84)g_{-6}g_{-1}g_{-2}+(6x1^3+51x1^2+72x1-12)g_{-4}g_{-3}^{2}g_{-2}+(-18x1^2-138x1-84)g_{-4}g_{-1}g_{-3}g_{-2}+(24x1+168)g_{-4}g_{-1}^{2}g_{-2}+(-24x1-168)g_{-4}^{2}g_{-1}+(1/2x1^4+6x1^3+41/2x1^2+21x1)g_{-3}^{3}g_{-2}^{2}+(-3x1^3-57/2x1^2-54x1-18)g_{-1}g_{-3}^{2}g_{-2}^{2}+(3x1^2+18x1+24)g_{-1}g_{-2}g_{-3}^{2}g_{-2}+(-12x1-84)g_{-1}^{3}g_{-2}^{2}+(9x1^2+69x1+42)g_{-1}^{2}g_{-3}g_{-2}^{2}",
            "(8x1^2+24x1+16)g_{-9}g_{-1}+(-24x1^2-72x1+112)g_{-8}g_{-4}+(-8x1^3-36x1^2-12x1+56)g_{-8}g_{-3}g_{-2}+(16x1^2+48x1-48)g_{-8}g_{-1}g_{-2}+(16x1^2+8x1-168)g_{-6}g_{-4}g_{-1}+(-4x1^4-14x1^3+12x1^2+34x1-28)g_{-6}g_{-3}^{2}g_{-2}+(8x1^3+12x1^2-60x1-24)g_{-6}g_{-1}g_{-3}g_{-2}+(-8x1^2-4x1+84)g_{-6}g_{-1}^{2}g_{-2}+(-4x1^3+28x1-56)g_{-6}^{2}+(8x1^3+28x1^2-12x1-32)g_{-4}g_{-1}g_{-3}^{2}g_{-2}+(16x1+56)g_{-4}g_{-1}^{3}g_{-2}+(-16x1^2-48x1+28)g_{-4}g_{-1}^{2}g_{-3}g_{-2}+(-16x1-56)g_{-4}^{2}g_{-1}^{2}+(-1/3x1^5-5/2x1^4-5x1^3+5/6x1^2+7x1)g_{-3}^{4}g_{-2}^{2}+(4/3x1^4+20/3x1^3+5x1^2-25/3x1-14/3)g_{-1}g_{-3}^{3}g_{-2}^{2}+(-8x1-28)g_{-1}^{4}g_{-2}^{2}+(8x1^2+24x1-14)g_{-1}^{3}g_{-3}g_{-2}^{2}+(-4x1^3-14x1^2+2x1+8)g_{-1}^{2}g_{-3}^{2}g_{-2}^{2}+(4x1+8)g_{-1}^{2}g_{-2}g_{-3}^{2}g_{-2}",
        ],
    },
    VectorFamily {
        lambda: "x1*w1+w2+w3",
        vectors: &[
            "-x1g_{-3}+g_{-1}",
            "5g_{-1}g_{-2}+(-2x1-4)g_{-3}g_{-2}+(x1+2)g_{-2}g_{-3}-5g_{-4}",
            "(1/6x1^3+5/3x1^2+8/3x1)g_{-3}^{2}g_{-2}+(-1/2x1^2-x1)g_{-3}g_{-2}g_{-3}+(1/6x1^2+4/3x1-3)g_{-6}+(2/3x1^2+10/3x1-1)g_{-4}g_{-3}+(-2/3x1^2-16/3x1-3)g_{-1}g_{-3}g_{-2}+(-x1-7)g_{-4}g_{-1}+(x1+7)g_{-1}^{2}g_{-2}+(x1+2)g_{-1}g_{-2}g_{-3}",
            "(1/6x1^3+5/3x1^2+17/3x1+6)g_{-3}g_{-2}g_{-3}+(-1/8x1^2-5/4x1-2)g_{-3}^{2}g_{-2}+(-1/12x1^2-2/3x1-9/4)g_{-6}+(1/2x1^2+35/12x1+31/12)g_{-4}g_{-3}+(-1/6x1^2-11/12x1-7/6)g_{-1}g_{-2}g_{-3}+(-1/6x1^2-13/12x1-1/4)g_{-1}g_{-3}g_{-2}+(-1/3x1-23/12)g_{-4}g_{-1}+(1/3x1+23/12)g_{-1}^{2}g_{-2}",
            "(-x1^4-9/2x1^3-3/2x1^2+7x1)g_{-3}^{3}g_{-2}+(-3x1^3-3x1^2+18x1-12)g_{-6}g_{-3}+(3x1^3+21/2x1^2-9/2x1-9)g_{-1}g_{-3}^{2}g_{-2}+(-3x1^2-15x1+18)g_{-8}+(3x1^2+3x1-30)g_{-6}g_{-1}+(6x1^2+12x1-24)g_{-4}g_{-1}g_{-3}+(-6x1^2-18x1+12)g_{-1}^{2}g_{-3}g_{-2}+(-3x1^2-3x1+6)g_{-1}g_{-3}g_{-2}g_{-3}+(-6x1-21)g_{-4}g_{-1}^{2}+(6x1+21)g_{-1}^{3}g_{-2}+(3x1+6)g_{-1}^{2}g_{-2}g_{-3}",
            "(1/2x1^4+29/4x1^3+153/4x1^2+173/2x1+70)g_{-3}^{2}g_{-2}^{2}g_{-3}+(1/2x1^3+11/2x1^2+19x1+20)g_{-6}g_{-2}g_{-3}+(-x1^3-11x1^2-38x1-40)g_{-6}g_{-3}g_{-2}+(-1/6x1^4-29/12x1^3-51/4x1^2-173/6x1-70/3)g_{-2}g_{-3}^{3}g_{-2}+(4x1^3+93/2x1^2+349/2x1+210)g_{-4}g_{-3}g_{-2}g_{-3}+(-1/2x1^3-27/4x1^2-121/4x1-45)g_{-4}g_{-3}^{2}g_{-2}+(-2x1^3-93/4x1^2-349/4x1-105)g_{-1}g_{-3}g_{-2}^{2}g_{-3}+(-5/2x1^2-45/2x1-50)g_{-9}+(-5/2x1^2-45/2x1-50)g_{-8}g_{-2}+(5x1^2+45x1+100)g_{-4}^{2}g_{-3}+(-5/2x1^2-45/2x1-50)g_{-6}g_{-4}+(5/2x1^2+45/2x1+50)g_{-6}g_{-1}g_{-2}+(-5x1^2-45x1-100)g_{-4}g_{-1}g_{-2}g_{-3}+(1/2x1^3+27/4x1^2+121/4x1+45)g_{-1}g_{-2}g_{-3}^{2}g_{-2}+(5/2x1^2+45/2x1+50)g_{-1}^{2}g_{-2}^{2}g_{-3}",
            "(-1/24x1^6-37/48x1^5-265/48x1^4-115/6x1^3-129/4x1^2-21x1)g_{-3}^{3}g_{-2}^{2}g_{-3}+(-1/4x1^5-15/4x1^4-77/4x1^3-147/4x1^2-6x1+36)g_{-6}g_{-3}g_{-2}g_{-3}+(1/8x1^5+15/8x1^4+10x1^3+87/4x1^2+51/4x1-9)g_{-6}g_{-3}^{2}g_{-2}+(-1/12x1^5-7/6x1^4-139/24x1^3-287/24x1^2-17/2x1)g_{-4}g_{-3}^{3}g_{-2}+(1/8x1^5+2x1^4+187/16x1^3+487/16x1^2+33x1+9)g_{-1}g_{-3}^{2}g_{-2}^{2}g_{-3}+(-1/4x1^4-9/4x1^3-8x1^2-33/2x1-18)g_{-9}g_{-3}+(-1/4x1^4-3x1^3-53/4x1^2-51/2x1-18)g_{-8}g_{-2}g_{-3}+(1/4x1^4+15/4x1^3+37/2x1^2+69/2x1+18)g_{-8}g_{-3}g_{-2}+(1/8x1^4+3/2x1^3+41/8x1^2+9/4x1-9)g_{-6}^{2}+(-1/4x1^4-11/4x1^3-7x1^2+9x1+36)g_{-6}g_{-4}g_{-3}+(1/4x1^4+3x1^3+21/2x1^2+25/4x1-15)g_{-6}g_{-1}g_{-2}g_{-3}+(-1/4x1^4-13/4x1^3-14x1^2-43/2x1-6)g_{-6}g_{-1}g_{-3}g_{-2}+(-1/4x1^4-29/8x1^3-145/8x1^2-73/2x1-24)g_{-1}^{2}g_{-3}g_{-2}^{2}g_{-3}+(1/2x1^4+29/4x1^3+145/4x1^2+73x1+48)g_{-4}g_{-1}g_{-3}g_{-2}g_{-3}+(-1/12x1^4-x1^3-25/6x1^2-27/4x1-3)g_{-1}g_{-2}g_{-3}^{3}g_{-2}+(-1/2x1^3-31/4x1^2-143/4x1-51)g_{-8}g_{-1}g_{-2}+(1/4x1^3+23/8x1^2+87/8x1+27/2)g_{-1}^{2}g_{-2}g_{-3}^{2}g_{-2}+(1/4x1^3+13/4x1^2+27/2x1+18)g_{-1}^{3}g_{-2}^{2}g_{-3}+(1/2x1^3+13/2x1^2+27x1+36)g_{-8}g_{-4}+(-1/4x1^3-23/8x1^2-87/8x1-27/2)g_{-4}g_{-1}g_{-3}^{2}g_{-2}+(1/4x1^3+13/4x1^2+27/2x1+18)g_{-6}g_{-1}^{2}g_{-2}+(1/2x1^3+13/2x1^2+27x1+36)g_{-4}^{2}g_{-1}g_{-3}+(-1/2x1^3-13/2x1^2-27x1-36)g_{-4}g_{-1}^{2}g_{-2}g_{-3}+(-1/4x1^3-13/4x1^2-27/2x1-18)g_{-6}g_{-4}g_{-1}+(-5/4x1^2-35/4x1-15)g_{-9}g_{-1}",
        ],
    },
    VectorFamily {
        lambda: "x1*w1+2w3",
        vectors: &[
            "-x1g_{-3}+2g_{-1}",
            "(2x1^2-2x1)g_{-3}^{2}+(-4x1+4)g_{-1}g_{-3}+4g_{-1}^{2}",
            "(-2x1-8)g_{-6}+(2x1+8)g_{-4}g_{-3}+(2x1^2+14x1+24)g_{-3}g_{-2}g_{-3}+(-x1^2-7x1-12)g_{-2}g_{-3}^{2}+(-2x1-8)g_{-1}g_{-2}g_{-3}",
            "(-x1^2-10x1-21)g_{-8}+(-1/2x1^3-7/2x1^2-15/2x1-9/2)g_{-6}g_{-3}+(x1^2+7x1+12)g_{-6}g_{-1}+(x1^3+13/2x1^2+10x1-3/2)g_{-4}g_{-3}^{2}+(-x1^2-7x1-12)g_{-4}g_{-1}g_{-3}+(1/2x1^4+5x1^3+33/2x1^2+18x1)g_{-3}^{2}g_{-2}g_{-3}+(-x1^3-19/2x1^2-28x1-51/2)g_{-1}g_{-3}g_{-2}g_{-3}+(3/2x1^2+9x1+27/2)g_{-1}g_{-2}g_{-3}^{2}+(x1^2+7x1+12)g_{-1}^{2}g_{-2}g_{-3}",
            "(4/3x1^3+38/3x1^2+118/3x1+40)g_{-9}g_{-3}+(-4/3x1^2-28/3x1-16)g_{-9}g_{-1}+(-4/3x1^2-28/3x1-16)g_{-8}g_{-4}+(4/3x1^3+38/3x1^2+118/3x1+40)g_{-8}g_{-2}g_{-3}+(4/3x1^3+14x1^2+146/3x1+56)g_{-6}g_{-4}g_{-3}+(4/3x1^4+18x1^3+90x1^2+592/3x1+160)g_{-6}g_{-3}g_{-2}g_{-3}+(-2/3x1^4-9x1^3-45x1^2-296/3x1-80)g_{-6}g_{-2}g_{-3}^{2}+(-4/3x1^3-14x1^2-146/3x1-56)g_{-6}g_{-1}g_{-2}g_{-3}+(-2/3x1^3-22/3x1^2-80/3x1-32)g_{-6}^{2}+(-4/3x1^4-52/3x1^3-251/3x1^2-533/3x1-140)g_{-4}g_{-3}^{2}g_{-2}g_{-3}+(4/3x1^3+14x1^2+146/3x1+56)g_{-4}g_{-1}g_{-2}g_{-3}^{2}+(-4/3x1^3-14x1^2-146/3x1-56)g_{-4}^{2}g_{-3}^{2}+(-1/3x1^5-11/2x1^4-36x1^3-701/6x1^2-188x1-120)g_{-3}^{2}g_{-2}^{2}g_{-3}^{2}+(2/3x1^4+26/3x1^3+251/6x1^2+533/6x1+70)g_{-1}g_{-3}g_{-2}^{2}g_{-3}^{2}+(-2/3x1^3-7x1^2-73/3x1-28)g_{-1}^{2}g_{-2}^{2}g_{-3}^{2}",
        ],
    },
];

/// Values of x1 for each constructed vector: the Shapovalov coefficient and
/// its rational roots.
pub struct CertRow {
    pub vector_index: usize,
    pub poly: &'static str,
    pub roots: &'static [&'static str],
}

pub struct CertTable {
    pub lambda: &'static str,
    pub rows: &'static [CertRow],
}

pub const CRITICAL_VALUE_TABLES: &[CertTable] = &[
    CertTable {
        lambda: "x1*w1+w3",
        rows: &[
            CertRow {
                vector_index: 2,
                poly: "2x1^4+27x1^3+133x1^2+285x1+225",
                roots: &["-3", "-5", "-5/2"],
            },
            CertRow { vector_index: 1, poly: "x1^2+x1", roots: &["0", "-1"] },
        ],
    },
    CertTable {
        lambda: "x1*w1+w2",
        rows: &[
            CertRow {
                vector_index: 2,
                poly: "2x1^4+13x1^3+25x1^2+14x1",
                roots: &["0", "-1", "-2", "-7/2"],
            },
            CertRow { vector_index: 1, poly: "x1^2+8x1+12", roots: &["-2", "-6"] },
        ],
    },
    CertTable {
        lambda: "x1*w1+2w3",
        rows: &[
            CertRow {
                vector_index: 5,
                poly: "4x1^10+152x1^9+2579x1^8+25736x1^7+167312x1^6+740582x1^5+2260753x1^4+4700490x1^3+6371352x1^2+5084640x1+1814400",
                roots: &["-7/2", "-5/2", "-3", "-5", "-4", "-6"],
            },
            CertRow {
                vector_index: 4,
                poly: "2x1^8+49x1^7+495x1^6+2678x1^5+8368x1^4+15021x1^3+14175x1^2+5292x1",
                roots: &["0", "-1", "-3", "-4", "-7", "-7/2"],
            },
            CertRow {
                vector_index: 3,
                poly: "x1^4+17x1^3+106x1^2+288x1+288",
                roots: &["-3", "-4", "-6"],
            },
            CertRow { vector_index: 2, poly: "x1^4-x1^2", roots: &["0", "1", "-1"] },
            CertRow { vector_index: 1, poly: "x1^2+2x1", roots: &["0", "-2"] },
        ],
    },
    CertTable {
        lambda: "x1*w1+w2+w3",
        rows: &[
            CertRow {
                vector_index: 7,
                poly: "16x1^14+784x1^13+17496x1^12+235424x1^11+2130569x1^10+13688787x1^9+64200218x1^8+222353222x1^7+568050249x1^6+1055574499x1^5+1383817036x1^4+1208330004x1^3+627179616x1^2+145212480x1",
                roots: &["-7/2", "-3", "-4", "-6", "-5", "0", "-1", "-2", "-7"],
            },
            CertRow {
                vector_index: 6,
                poly: "2x1^10+97x1^9+2097x1^8+26595x1^7+218973x1^6+1222044x1^5+4676800x1^4+12104384x1^3+20244528x1^2+19716480x1+8467200",
                roots: &["-7/2", "-4", "-6", "-5", "-7", "-2"],
            },
            CertRow {
                vector_index: 5,
                poly: "2x1^10+25x1^9+113x1^8+205x1^7+53x1^6-230x1^5-168x1^4",
                roots: &["0", "1", "-1", "-2", "-3", "-4", "-7/2"],
            },
            CertRow {
                vector_index: 4,
                poly: "2x1^6+47x1^5+431x1^4+1978x1^3+4804x1^2+5896x1+2880",
                roots: &["-2", "-5", "-8", "-9/2"],
            },
            CertRow {
                vector_index: 3,
                poly: "2x1^6+47x1^5+411x1^4+1648x1^3+3004x1^2+2016x1",
                roots: &["0", "-2", "-7", "-8", "-9/2"],
            },
            CertRow { vector_index: 2, poly: "x1^2+9x1+14", roots: &["-2", "-7"] },
            CertRow { vector_index: 1, poly: "x1^2+x1", roots: &["0", "-1"] },
        ],
    },
    CertTable {
        lambda: "x1*w1+2w2",
        rows: &[
            CertRow {
                vector_index: 5,
                poly: "4x1^10+80x1^9+655x1^8+2780x1^7+6232x1^6+5870x1^5-2355x1^4-8730x1^3-4536x1^2",
                roots: &["0", "1", "-1", "-2", "-3", "-4", "-7/2", "-9/2"],
            },
            CertRow {
                vector_index: 4,
                poly: "2x1^8+65x1^7+870x1^6+6193x1^5+25234x1^4+58716x1^3+72216x1^2+36288x1",
                roots: &["-9/2", "-2", "-6", "-7", "-3", "0", "-8"],
            },
            CertRow {
                vector_index: 3,
                poly: "x1^4+20x1^3+137x1^2+370x1+336",
                roots: &["-2", "-3", "-7", "-8"],
            },
            CertRow {
                vector_index: 2,
                poly: "x1^4+9x1^3+23x1^2+15x1",
                roots: &["0", "-1", "-3", "-5"],
            },
            CertRow { vector_index: 1, poly: "x1^2+12x1+27", roots: &["-3", "-9"] },
        ],
    },
];

/// Decompositions of the finite-dimensional modules with fundamental
/// coordinate sum at most 2 over the full subalgebra: constituents in
/// subalgebra fundamental coordinates with dimensions and the printed
/// singular vectors ("1" marks the highest vector itself).
pub struct FdConstituent {
    pub mu: (i64, i64),
    pub dim: u64,
    pub vector: &'static str,
}

pub struct FdRow {
    pub lambda: &'static str,
    pub dim: u64,
    pub constituents: &'static [FdConstituent],
}

pub const FD_DECOMPOSITIONS: &[FdRow] = &[
    FdRow {
        lambda: "0",
        dim: 1,
        constituents: &[FdConstituent { mu: (0, 0), dim: 1, vector: "1" }],
    },
    FdRow {
        lambda: "w3",
        dim: 8,
        constituents: &[
            FdConstituent {
                mu: (0, 0),
                dim: 1,
                vector: "g_{-1}g_{-2}g_{-3}-g_{-3}g_{-2}g_{-3}",
            },
            FdConstituent { mu: (1, 0), dim: 7, vector: "1" },
        ],
    },
    FdRow {
        lambda: "w2",
        dim: 21,
        constituents: &[
            FdConstituent { mu: (1, 0), dim: 7, vector: "g_{-1}g_{-2}-1/2g_{-3}g_{-2}" },
            FdConstituent { mu: (0, 1), dim: 14, vector: "1" },
        ],
    },
    FdRow {
        lambda: "w1",
        dim: 7,
        constituents: &[FdConstituent { mu: (1, 0), dim: 7, vector: "1" }],
    },
    FdRow {
        lambda: "2w3",
        dim: 35,
        constituents: &[
            FdConstituent {
                mu: (0, 0),
                dim: 1,
                vector: "g_{-1}^{2}g_{-2}^{2}g_{-3}^{2}-g_{-3}g_{-1}g_{-2}^{2}g_{-3}^{2}+2g_{-2}g_{-3}^{2}g_{-1}g_{-2}g_{-3}-2g_{-3}g_{-2}g_{-3}g_{-1}g_{-2}g_{-3}+g_{-3}^{2}g_{-2}^{2}g_{-3}^{2}",
            },
            FdConstituent {
                mu: (1, 0),
                dim: 7,
                vector: "g_{-1}g_{-2}g_{-3}+1/2g_{-2}g_{-3}^{2}-g_{-3}g_{-2}g_{-3}",
            },
            FdConstituent { mu: (2, 0), dim: 27, vector: "1" },
        ],
    },
    FdRow {
        lambda: "w2+w3",
        dim: 112,
        constituents: &[
            FdConstituent {
                mu: (1, 0),
                dim: 7,
                vector: "g_{-1}^{2}g_{-2}^{2}g_{-3}-4/5g_{-3}g_{-1}g_{-2}^{2}g_{-3}+2/5g_{-2}g_{-3}^{2}g_{-1}g_{-2}-4/5g_{-3}g_{-2}g_{-3}g_{-1}g_{-2}+4/5g_{-2}g_{-3}g_{-1}g_{-2}g_{-3}+2/5g_{-3}^{2}g_{-2}^{2}g_{-3}-2/15g_{-2}g_{-3}^{3}g_{-2}",
            },
            FdConstituent {
                mu: (0, 1),
                dim: 14,
                vector: "g_{-3}g_{-1}g_{-2}-3g_{-1}g_{-2}g_{-3}-g_{-3}^{2}g_{-2}+3g_{-3}g_{-2}g_{-3}",
            },
            FdConstituent {
                mu: (2, 0),
                dim: 27,
                vector: "g_{-1}g_{-2}-2/5g_{-3}g_{-2}+1/5g_{-2}g_{-3}",
            },
            FdConstituent { mu: (1, 1), dim: 64, vector: "1" },
        ],
    },
    FdRow {
        lambda: "2w2",
        dim: 168,
        constituents: &[
            FdConstituent {
                mu: (2, 0),
                dim: 27,
                vector: "g_{-1}^{2}g_{-2}^{2}-2/3g_{-3}g_{-1}g_{-2}^{2}+2/3g_{-2}g_{-3}g_{-1}g_{-2}+1/5g_{-3}^{2}g_{-2}^{2}-1/5g_{-2}g_{-3}^{2}g_{-2}",
            },
            FdConstituent {
                mu: (1, 1),
                dim: 64,
                vector: "g_{-1}g_{-2}-1/2g_{-3}g_{-2}",
            },
            FdConstituent { mu: (0, 2), dim: 77, vector: "1" },
        ],
    },
    FdRow {
        lambda: "w1+w3",
        dim: 48,
        constituents: &[
            FdConstituent {
                mu: (1, 0),
                dim: 7,
                vector: "g_{-3}g_{-2}g_{-1}-3g_{-2}g_{-3}g_{-1}+5g_{-1}g_{-2}g_{-3}-7g_{-3}g_{-2}g_{-3}",
            },
            FdConstituent { mu: (0, 1), dim: 14, vector: "g_{-1}-g_{-3}" },
            FdConstituent { mu: (2, 0), dim: 27, vector: "1" },
        ],
    },
    FdRow {
        lambda: "w1+w2",
        dim: 105,
        constituents: &[
            FdConstituent {
                mu: (0, 1),
                dim: 14,
                vector: "g_{-1}^{2}g_{-2}-g_{-3}g_{-1}g_{-2}+g_{-3}^{2}g_{-2}",
            },
            FdConstituent {
                mu: (2, 0),
                dim: 27,
                vector: "g_{-2}g_{-1}-2g_{-1}g_{-2}+3/2g_{-3}g_{-2}",
            },
            FdConstituent { mu: (1, 1), dim: 64, vector: "1" },
        ],
    },
    FdRow {
        lambda: "2w1",
        dim: 27,
        constituents: &[FdConstituent { mu: (2, 0), dim: 27, vector: "1" }],
    },
];

/// Top-level singular vectors of generalized Verma modules over the other
/// parabolics: constituents in subalgebra fundamental coordinates (strings
/// in x2/x3) with the printed resulting vectors.
pub struct TopLevelConstituent {
    pub mu: (&'static str, &'static str),
    pub vector: &'static str,
}

pub struct TopLevelRow {
    pub crossings: [u8; 3],
    pub lambda: &'static str,
    pub constituents: &'static [TopLevelConstituent],
}

pub const TOP_LEVEL_TABLES: &[TopLevelRow] = &[
    TopLevelRow {
        crossings: [0, 1, 0],
        lambda: "w1+x2*w2+w3",
        constituents: &[
            TopLevelConstituent { mu: ("0", "x2+1"), vector: "2g_{-1}-2g_{-3}" },
            TopLevelConstituent { mu: ("2", "x2"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 0, 1],
        lambda: "w2+x3*w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x3+1", "0"),
                vector: "-g_{-5}-g_{-3}g_{-2}+(x3+4)g_{-1}g_{-2}",
            },
            TopLevelConstituent { mu: ("x3", "1"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 0, 1],
        lambda: "w1+x3*w3",
        constituents: &[
            TopLevelConstituent { mu: ("x3-1", "1"), vector: "-g_{-3}+x3g_{-1}" },
            TopLevelConstituent { mu: ("x3+1", "0"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 0, 1],
        lambda: "2w2+x3*w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x3+2", "0"),
                vector: "-8g_{-5}^{2}-8g_{-5}g_{-3}g_{-2}+8g_{-7}g_{-2}+(8x3+40)g_{-5}g_{-1}g_{-2}-4g_{-3}^{2}g_{-2}^{2}+(4x3+20)g_{-3}g_{-1}g_{-2}^{2}+(-2x3^2-22x3-60)g_{-1}^{2}g_{-2}^{2}",
            },
            TopLevelConstituent {
                mu: ("x3+1", "1"),
                vector: "-2g_{-5}-g_{-3}g_{-2}+(x3+6)g_{-1}g_{-2}",
            },
            TopLevelConstituent { mu: ("x3", "2"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 0, 1],
        lambda: "w1+w2+x3*w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x3", "1"),
                vector: "(4x3+26)g_{-5}g_{-3}-18g_{-6}+(-4x3-44)g_{-7}+(-4x3^2-22x3-10)g_{-5}g_{-1}+(4x3+26)g_{-3}^{2}g_{-2}+(8x3+28)g_{-3}g_{-2}g_{-1}+(-4x3^2-38x3-66)g_{-3}g_{-1}g_{-2}+(2x3^3+23x3^2+71x3+48)g_{-1}^{2}g_{-2}",
            },
            TopLevelConstituent {
                mu: ("x3+2", "0"),
                vector: "-18g_{-5}-18g_{-3}g_{-2}+(-6x3-24)g_{-2}g_{-1}+(12x3+48)g_{-1}g_{-2}",
            },
            TopLevelConstituent { mu: ("x3-1", "2"), vector: "-g_{-3}+x3g_{-1}" },
            TopLevelConstituent { mu: ("x3+1", "1"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 0, 1],
        lambda: "2w1+x3*w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x3-2", "2"),
                vector: "-4g_{-3}^{2}+(4x3-4)g_{-3}g_{-1}+(-2x3^2+2x3)g_{-1}^{2}",
            },
            TopLevelConstituent { mu: ("x3", "1"), vector: "-2g_{-3}+x3g_{-1}" },
            TopLevelConstituent { mu: ("x3+2", "0"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+w3",
        constituents: &[
            TopLevelConstituent { mu: ("x1-1", "x2+1"), vector: "-g_{-1}+x1g_{-3}" },
            TopLevelConstituent { mu: ("x1+1", "x2"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+2w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x1-2", "x2+2"),
                vector: "-4g_{-1}^{2}+(4x1-4)g_{-1}g_{-3}+(-2x1^2+2x1)g_{-3}^{2}",
            },
            TopLevelConstituent { mu: ("x1", "x2+1"), vector: "-2g_{-1}+x1g_{-3}" },
            TopLevelConstituent { mu: ("x1+2", "x2"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+w2+x3*w3",
        constituents: &[TopLevelConstituent { mu: ("x3+x1", "1"), vector: "1" }],
    },
    TopLevelRow {
        crossings: [0, 1, 1],
        lambda: "w1+x2*w2+x3*w3",
        constituents: &[
            TopLevelConstituent { mu: ("x3-1", "x2+1"), vector: "-g_{-3}+x3g_{-1}" },
            TopLevelConstituent { mu: ("x3+1", "x2"), vector: "1" },
        ],
    },
    TopLevelRow {
        crossings: [0, 1, 1],
        lambda: "2w1+x2*w2+x3*w3",
        constituents: &[
            TopLevelConstituent {
                mu: ("x3-2", "x2+2"),
                vector: "-4g_{-3}^{2}+(4x3-4)g_{-3}g_{-1}+(-2x3^2+2x3)g_{-1}^{2}",
            },
            TopLevelConstituent { mu: ("x3", "x2+1"), vector: "-2g_{-3}+x3g_{-1}" },
            TopLevelConstituent { mu: ("x3+2", "x2"), vector: "1" },
        ],
    },
];

/// Decompositions of inducing modules over the bar Levi for the remaining
/// parabolics, with the strong Condition B inequality strings when present.
pub struct DecompRow {
    pub crossings: [u8; 3],
    pub lambda: &'static str,
    pub mus: &'static [(&'static str, &'static str)],
    pub strong_b: &'static [&'static str],
}

pub const DECOMP_TABLES: &[DecompRow] = &[
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2", mus: &[("0", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2+w3", mus: &[("1", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "w1+x2*w2", mus: &[("1", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2+2w3", mus: &[("2", "x2")], strong_b: &[] },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "w1+x2*w2+w3",
        mus: &[("0", "x2+1"), ("2", "x2")],
        strong_b: &["-1"],
    },
    DecompRow { crossings: [0, 1, 0], lambda: "2w1+x2*w2", mus: &[("2", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2+3w3", mus: &[("3", "x2")], strong_b: &[] },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "w1+x2*w2+2w3",
        mus: &[("1", "x2+1"), ("3", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "2w1+x2*w2+w3",
        mus: &[("1", "x2+1"), ("3", "x2")],
        strong_b: &["-1"],
    },
    DecompRow { crossings: [0, 1, 0], lambda: "3w1+x2*w2", mus: &[("3", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2+4w3", mus: &[("4", "x2")], strong_b: &[] },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "w1+x2*w2+3w3",
        mus: &[("2", "x2+1"), ("4", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "2w1+x2*w2+2w3",
        mus: &[("0", "x2+2"), ("2", "x2+1"), ("4", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "3w1+x2*w2+w3",
        mus: &[("2", "x2+1"), ("4", "x2")],
        strong_b: &["-1"],
    },
    DecompRow { crossings: [0, 1, 0], lambda: "4w1+x2*w2", mus: &[("4", "x2")], strong_b: &[] },
    DecompRow { crossings: [0, 1, 0], lambda: "x2*w2+5w3", mus: &[("5", "x2")], strong_b: &[] },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "w1+x2*w2+4w3",
        mus: &[("3", "x2+1"), ("5", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "2w1+x2*w2+3w3",
        mus: &[("3", "x2+1"), ("1", "x2+2"), ("5", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "3w1+x2*w2+2w3",
        mus: &[("3", "x2+1"), ("1", "x2+2"), ("5", "x2")],
        strong_b: &["-1"],
    },
    DecompRow {
        crossings: [0, 1, 0],
        lambda: "4w1+x2*w2+w3",
        mus: &[("3", "x2+1"), ("5", "x2")],
        strong_b: &["-1"],
    },
    DecompRow { crossings: [0, 1, 0], lambda: "5w1+x2*w2", mus: &[("5", "x2")], strong_b: &[] },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2",
        mus: &[("x1", "x2")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+w3",
        mus: &[("x1+1", "x2"), ("x1-1", "x2+1")],
        strong_b: &["-x1-1"],
    },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+2w3",
        mus: &[("x1", "x2+1"), ("x1+2", "x2"), ("x1-2", "x2+2")],
        strong_b: &["-x1-2", "-x1", "-x1-1"],
    },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+3w3",
        mus: &[
            ("x1-1", "x2+2"),
            ("x1+1", "x2+1"),
            ("x1+3", "x2"),
            ("x1-3", "x2+3"),
        ],
        strong_b: &["-x1-1", "-x1-2", "-x1-3", "-x1+1", "-x1"],
    },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+4w3",
        mus: &[
            ("x1+2", "x2+1"),
            ("x1-2", "x2+3"),
            ("x1", "x2+2"),
            ("x1+4", "x2"),
            ("x1-4", "x2+4"),
        ],
        strong_b: &["-x1-2", "-x1-3", "-x1", "-x1-1", "-x1-4", "-x1+1", "-x1+2"],
    },
    DecompRow {
        crossings: [1, 1, 0],
        lambda: "x1*w1+x2*w2+5w3",
        mus: &[
            ("x1-1", "x2+3"),
            ("x1+3", "x2+1"),
            ("x1+1", "x2+2"),
            ("x1-3", "x2+4"),
            ("x1+5", "x2"),
            ("x1-5", "x2+5"),
        ],
        strong_b: &[
            "-x1-1", "-x1-2", "-x1-3", "-x1-4", "-x1+1", "-x1", "-x1-5", "-x1+2", "-x1+3",
        ],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+x3*w3",
        mus: &[("x3+x1", "0")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+w2+x3*w3",
        mus: &[("x3+x1", "1")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+2w2+x3*w3",
        mus: &[("x3+x1", "2")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+3w2+x3*w3",
        mus: &[("x3+x1", "3")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+4w2+x3*w3",
        mus: &[("x3+x1", "4")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [1, 0, 1],
        lambda: "x1*w1+5w2+x3*w3",
        mus: &[("x3+x1", "5")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "x2*w2+x3*w3",
        mus: &[("x3", "x2")],
        strong_b: &[],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "w1+x2*w2+x3*w3",
        mus: &[("x3+1", "x2"), ("x3-1", "x2+1")],
        strong_b: &["-x3-1"],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "2w1+x2*w2+x3*w3",
        mus: &[("x3", "x2+1"), ("x3+2", "x2"), ("x3-2", "x2+2")],
        strong_b: &["-x3-2", "-x3", "-x3-1"],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "3w1+x2*w2+x3*w3",
        mus: &[
            ("x3-1", "x2+2"),
            ("x3+1", "x2+1"),
            ("x3+3", "x2"),
            ("x3-3", "x2+3"),
        ],
        strong_b: &["-x3-1", "-x3-2", "-x3-3", "-x3+1", "-x3"],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "4w1+x2*w2+x3*w3",
        mus: &[
            ("x3", "x2+2"),
            ("x3+2", "x2+1"),
            ("x3-2", "x2+3"),
            ("x3+4", "x2"),
            ("x3-4", "x2+4"),
        ],
        strong_b: &["-x3-2", "-x3-3", "-x3", "-x3-1", "-x3-4", "-x3+1", "-x3+2"],
    },
    DecompRow {
        crossings: [0, 1, 1],
        lambda: "5w1+x2*w2+x3*w3",
        mus: &[
            ("x3-1", "x2+3"),
            ("x3+3", "x2+1"),
            ("x3+1", "x2+2"),
            ("x3-3", "x2+4"),
            ("x3+5", "x2"),
            ("x3-5", "x2+5"),
        ],
        strong_b: &[
            "-x3-1", "-x3-2", "-x3-3", "-x3-4", "-x3+1", "-x3", "-x3-5", "-x3+2", "-x3+3",
        ],
    },
];

/// The printed Casimir expressions: 36 c1 for the subalgebra (with the
/// generator indices 1 and 2 transposed relative to the generator table, as
/// pinned by the embedding expansion), and the 12 i(c1) expansion.
pub const CASIMIR_36_G2: &str =
    "h2^2+3h2h1+3h1^2+15h1+9g-6g6+9h2+9g-5g5+3g-4g4+3g-3g3+3g-1g1+9g-2g2";
pub const CASIMIR_12_I: &str = "3h2^2+3h1h2+6h2h3+h1^2+4h1h3+4h3^2+10h3+3g-9g9+5h1+9h2+3g-8g8+g-7g6+g-6g6+g-7g7+g-6g7-g-5g4+g-4g4+g-5g5-g-4g5+g-3g1+g-1g1+g-3g3+g-1g3+3g-2g2";

/// Direct-sum families (the corollary): expected constituent offsets below
/// pr(lambda) for each of the six families over the (1,0,0) parabolic, and
/// the excluded x1 values.
pub struct FamilyBranches {
    pub lambda: &'static str,
    pub mu_offsets: &'static [(i64, i64)],
    pub excluded_x1: &'static [&'static str],
}

pub const COROLLARY_FAMILIES: &[FamilyBranches] = &[
    FamilyBranches { lambda: "x1*w1", mu_offsets: &[(0, 0)], excluded_x1: &[] },
    FamilyBranches {
        lambda: "x1*w1+w2",
        mu_offsets: &[(0, 0), (1, 1), (2, 1)],
        excluded_x1: &["-1", "-7/2", "-6"],
    },
    FamilyBranches {
        lambda: "x1*w1+w3",
        mu_offsets: &[(0, 0), (1, 0), (2, 1)],
        excluded_x1: &["-5", "-3", "-1"],
    },
    FamilyBranches {
        lambda: "x1*w1+2w2",
        mu_offsets: &[(0, 0), (1, 1), (2, 1), (2, 2), (3, 2), (4, 2)],
        excluded_x1: &["0", "-1", "-4", "-3", "-9/2", "-2", "-8", "-6", "-7", "-5", "-9"],
    },
    FamilyBranches {
        lambda: "x1*w1+w2+w3",
        mu_offsets: &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 1), (3, 1), (3, 2), (4, 2)],
        excluded_x1: &[],
    },
    FamilyBranches {
        lambda: "x1*w1+2w3",
        mu_offsets: &[(0, 0), (1, 0), (2, 0), (2, 1), (3, 1), (4, 2)],
        excluded_x1: &["-5", "-3", "-6", "-4", "-7/2", "-1", "-7", "0", "-2"],
    },
];
