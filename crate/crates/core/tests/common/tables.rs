//! Reference values: expected/measured depths and AER for the concave and
//! convex attack grids, and the disparity/ADR pairs for the image transforms.

#![allow(dead_code, clippy::approx_constant, clippy::type_complexity)]

pub const OBJECT_DISTANCES: [f64; 3] = [6.0, 9.0, 12.0];

#[derive(Debug, Clone, Copy)]
pub struct Cell {
    pub expected: f64,
    pub av: Option<f64>,
    pub iphone: Option<f64>,
    /// Percent.
    pub aer_av: Option<f64>,
    /// Percent.
    pub aer_iphone: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    /// Absolute focal length as labelled in the table, in cm.
    pub f_cm: f64,
    pub db_cm: f64,
    /// One cell per object distance 6, 9, 12 m.
    pub cells: [Cell; 3],
}

/// Concave attack, focal lengths are negative.
pub const CONCAVE: [ReferenceRow; 12] = [
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 5.82,
                av: None,
                iphone: Some(7.09),
                aer_av: None,
                aer_iphone: Some(21.9),
            },
            Cell {
                expected: 8.73,
                av: None,
                iphone: Some(7.67),
                aer_av: None,
                aer_iphone: Some(12.12),
            },
            Cell {
                expected: 11.64,
                av: None,
                iphone: Some(10.62),
                aer_av: None,
                aer_iphone: Some(8.76),
            },
        ],
    },
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 6.42,
                av: Some(5.85),
                iphone: Some(6.85),
                aer_av: Some(9.1),
                aer_iphone: Some(6.77),
            },
            Cell {
                expected: 9.63,
                av: Some(9.82),
                iphone: Some(10.54),
                aer_av: Some(1.97),
                aer_iphone: Some(9.44),
            },
            Cell {
                expected: 12.84,
                av: Some(11.82),
                iphone: Some(12.46),
                aer_av: Some(7.91),
                aer_iphone: Some(2.92),
            },
        ],
    },
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 7.61,
                av: Some(7.73),
                iphone: Some(6.0),
                aer_av: Some(1.59),
                aer_iphone: Some(21.13),
            },
            Cell {
                expected: 11.42,
                av: Some(10.89),
                iphone: Some(12.65),
                aer_av: Some(4.62),
                aer_iphone: Some(10.8),
            },
            Cell {
                expected: 15.23,
                av: Some(12.86),
                iphone: Some(13.58),
                aer_av: Some(15.55),
                aer_iphone: Some(10.81),
            },
        ],
    },
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 8.78,
                av: Some(5.13),
                iphone: Some(6.89),
                aer_av: Some(41.56),
                aer_iphone: Some(21.46),
            },
            Cell {
                expected: 13.19,
                av: Some(10.56),
                iphone: Some(13.62),
                aer_av: Some(19.93),
                aer_iphone: Some(3.26),
            },
            Cell {
                expected: 17.6,
                av: Some(12.26),
                iphone: Some(16.73),
                aer_av: Some(30.32),
                aer_iphone: Some(4.9),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 5.88,
                av: None,
                iphone: Some(7.05),
                aer_av: None,
                aer_iphone: Some(19.82),
            },
            Cell {
                expected: 8.82,
                av: None,
                iphone: Some(8.37),
                aer_av: None,
                aer_iphone: Some(5.09),
            },
            Cell {
                expected: 11.76,
                av: None,
                iphone: Some(12.28),
                aer_av: None,
                aer_iphone: Some(4.4),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 6.28,
                av: Some(6.37),
                iphone: Some(7.08),
                aer_av: Some(1.42),
                aer_iphone: Some(12.78),
            },
            Cell {
                expected: 9.42,
                av: Some(8.87),
                iphone: Some(10.54),
                aer_av: Some(5.79),
                aer_iphone: Some(11.93),
            },
            Cell {
                expected: 12.56,
                av: Some(12.02),
                iphone: Some(12.45),
                aer_av: Some(4.29),
                aer_iphone: Some(0.9),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 7.07,
                av: Some(6.39),
                iphone: Some(7.51),
                aer_av: Some(9.64),
                aer_iphone: Some(6.22),
            },
            Cell {
                expected: 10.61,
                av: Some(8.78),
                iphone: Some(11.91),
                aer_av: Some(17.23),
                aer_iphone: Some(12.23),
            },
            Cell {
                expected: 14.15,
                av: Some(12.02),
                iphone: Some(14.65),
                aer_av: Some(15.06),
                aer_iphone: Some(3.52),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 7.85,
                av: Some(5.1),
                iphone: Some(7.78),
                aer_av: Some(35.04),
                aer_iphone: Some(0.97),
            },
            Cell {
                expected: 11.79,
                av: Some(9.64),
                iphone: Some(11.57),
                aer_av: Some(18.25),
                aer_iphone: Some(1.87),
            },
            Cell {
                expected: 15.73,
                av: Some(13.07),
                iphone: Some(15.9),
                aer_av: Some(16.92),
                aer_iphone: Some(1.04),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 5.93,
                av: None,
                iphone: Some(7.15),
                aer_av: None,
                aer_iphone: Some(20.68),
            },
            Cell {
                expected: 8.89,
                av: None,
                iphone: Some(7.21),
                aer_av: None,
                aer_iphone: Some(18.94),
            },
            Cell {
                expected: 11.86,
                av: None,
                iphone: Some(11.44),
                aer_av: None,
                aer_iphone: Some(3.53),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 6.17,
                av: Some(6.38),
                iphone: Some(7.02),
                aer_av: Some(3.45),
                aer_iphone: Some(13.87),
            },
            Cell {
                expected: 9.25,
                av: Some(8.68),
                iphone: Some(10.35),
                aer_av: Some(6.16),
                aer_iphone: Some(11.82),
            },
            Cell {
                expected: 12.34,
                av: Some(11.39),
                iphone: Some(12.56),
                aer_av: Some(7.67),
                aer_iphone: Some(1.82),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 6.64,
                av: Some(5.82),
                iphone: Some(7.71),
                aer_av: Some(12.42),
                aer_iphone: Some(16.09),
            },
            Cell {
                expected: 9.97,
                av: Some(8.75),
                iphone: Some(11.11),
                aer_av: Some(12.17),
                aer_iphone: Some(11.5),
            },
            Cell {
                expected: 13.29,
                av: Some(11.54),
                iphone: Some(13.91),
                aer_av: Some(13.15),
                aer_iphone: Some(4.66),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 7.11,
                av: Some(5.46),
                iphone: Some(6.9),
                aer_av: Some(23.24),
                aer_iphone: Some(2.97),
            },
            Cell {
                expected: 10.67,
                av: Some(8.97),
                iphone: Some(10.32),
                aer_av: Some(15.99),
                aer_iphone: Some(3.28),
            },
            Cell {
                expected: 14.24,
                av: Some(10.64),
                iphone: Some(14.49),
                aer_av: Some(25.25),
                aer_iphone: Some(1.76),
            },
        ],
    },
];

pub const CONCAVE_NO_LENS: [Cell; 3] = [
    Cell {
        expected: 6.0,
        av: Some(6.5),
        iphone: Some(6.89),
        aer_av: Some(8.41),
        aer_iphone: Some(14.89),
    },
    Cell {
        expected: 9.0,
        av: Some(8.6),
        iphone: Some(9.94),
        aer_av: Some(4.49),
        aer_iphone: Some(10.4),
    },
    Cell {
        expected: 12.0,
        av: Some(11.67),
        iphone: Some(12.67),
        aer_av: Some(2.78),
        aer_iphone: Some(5.59),
    },
];

/// Convex attack. The fourth row is labelled 30 cm but its expected depths
/// belong to f = 20 cm, d_b = 12 cm.
pub const CONVEX: [ReferenceRow; 12] = [
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 4.67,
                av: None,
                iphone: Some(4.84),
                aer_av: None,
                aer_iphone: Some(3.62),
            },
            Cell {
                expected: 6.98,
                av: None,
                iphone: Some(8.9),
                aer_av: None,
                aer_iphone: Some(27.49),
            },
            Cell {
                expected: 9.29,
                av: None,
                iphone: Some(8.39),
                aer_av: None,
                aer_iphone: Some(9.74),
            },
        ],
    },
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 4.08,
                av: Some(6.08),
                iphone: Some(5.8),
                aer_av: Some(49.17),
                aer_iphone: Some(42.26),
            },
            Cell {
                expected: 6.09,
                av: Some(7.92),
                iphone: Some(9.66),
                aer_av: Some(30.07),
                aer_iphone: Some(58.66),
            },
            Cell {
                expected: 8.1,
                av: Some(12.07),
                iphone: Some(12.16),
                aer_av: Some(49.1),
                aer_iphone: Some(50.16),
            },
        ],
    },
    ReferenceRow {
        f_cm: 20.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 2.9,
                av: Some(10.73),
                iphone: Some(6.88),
                aer_av: Some(269.86),
                aer_iphone: Some(137.27),
            },
            Cell {
                expected: 4.31,
                av: Some(5.27),
                iphone: Some(7.54),
                aer_av: Some(22.31),
                aer_iphone: Some(74.93),
            },
            Cell {
                expected: 5.72,
                av: Some(7.0),
                iphone: Some(12.31),
                aer_av: Some(22.45),
                aer_iphone: Some(115.18),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 1.74,
                av: Some(15.59),
                iphone: Some(4.57),
                aer_av: Some(796.73),
                aer_iphone: Some(162.69),
            },
            Cell {
                expected: 2.55,
                av: Some(5.3),
                iphone: Some(14.12),
                aer_av: Some(108.04),
                aer_iphone: Some(453.99),
            },
            Cell {
                expected: 3.36,
                av: Some(7.62),
                iphone: Some(5.93),
                aer_av: Some(126.8),
                aer_iphone: Some(76.4),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 5.13,
                av: None,
                iphone: Some(7.07),
                aer_av: None,
                aer_iphone: Some(37.8),
            },
            Cell {
                expected: 7.67,
                av: None,
                iphone: Some(8.96),
                aer_av: None,
                aer_iphone: Some(16.81),
            },
            Cell {
                expected: 10.21,
                av: None,
                iphone: Some(10.9),
                aer_av: None,
                aer_iphone: Some(6.75),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 4.73,
                av: Some(4.91),
                iphone: Some(7.35),
                aer_av: Some(3.79),
                aer_iphone: Some(55.17),
            },
            Cell {
                expected: 7.07,
                av: Some(8.19),
                iphone: Some(10.17),
                aer_av: Some(15.79),
                aer_iphone: Some(43.75),
            },
            Cell {
                expected: 9.42,
                av: Some(10.36),
                iphone: Some(14.52),
                aer_av: Some(10.01),
                aer_iphone: Some(54.19),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 3.95,
                av: Some(4.97),
                iphone: Some(6.22),
                aer_av: Some(25.92),
                aer_iphone: Some(57.4),
            },
            Cell {
                expected: 5.89,
                av: Some(7.95),
                iphone: Some(7.5),
                aer_av: Some(34.99),
                aer_iphone: Some(27.36),
            },
            Cell {
                expected: 7.83,
                av: Some(6.25),
                iphone: Some(11.42),
                aer_av: Some(20.17),
                aer_iphone: Some(45.89),
            },
        ],
    },
    ReferenceRow {
        f_cm: 30.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 3.18,
                av: Some(15.42),
                iphone: Some(5.58),
                aer_av: Some(385.54),
                aer_iphone: Some(75.54),
            },
            Cell {
                expected: 4.72,
                av: Some(6.19),
                iphone: Some(7.99),
                aer_av: Some(31.18),
                aer_iphone: Some(69.35),
            },
            Cell {
                expected: 6.26,
                av: Some(6.17),
                iphone: Some(9.39),
                aer_av: Some(1.45),
                aer_iphone: Some(50.07),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 2.0,
        cells: [
            Cell {
                expected: 5.5,
                av: None,
                iphone: Some(6.86),
                aer_av: None,
                aer_iphone: Some(24.7),
            },
            Cell {
                expected: 8.22,
                av: None,
                iphone: Some(9.03),
                aer_av: None,
                aer_iphone: Some(9.82),
            },
            Cell {
                expected: 10.95,
                av: None,
                iphone: Some(11.51),
                aer_av: None,
                aer_iphone: Some(5.11),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 4.0,
        cells: [
            Cell {
                expected: 5.26,
                av: Some(5.73),
                iphone: Some(7.18),
                aer_av: Some(8.9),
                aer_iphone: Some(36.47),
            },
            Cell {
                expected: 7.87,
                av: Some(8.68),
                iphone: Some(11.63),
                aer_av: Some(10.38),
                aer_iphone: Some(47.88),
            },
            Cell {
                expected: 10.47,
                av: Some(11.75),
                iphone: Some(14.92),
                aer_av: Some(12.26),
                aer_iphone: Some(42.54),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 8.0,
        cells: [
            Cell {
                expected: 4.79,
                av: Some(4.99),
                iphone: Some(5.8),
                aer_av: Some(4.19),
                aer_iphone: Some(21.11),
            },
            Cell {
                expected: 7.16,
                av: Some(8.18),
                iphone: Some(8.16),
                aer_av: Some(14.35),
                aer_iphone: Some(14.08),
            },
            Cell {
                expected: 9.52,
                av: Some(10.72),
                iphone: Some(10.75),
                aer_av: Some(12.6),
                aer_iphone: Some(12.94),
            },
        ],
    },
    ReferenceRow {
        f_cm: 50.0,
        db_cm: 12.0,
        cells: [
            Cell {
                expected: 4.33,
                av: Some(7.57),
                iphone: Some(6.79),
                aer_av: Some(75.04),
                aer_iphone: Some(56.99),
            },
            Cell {
                expected: 6.45,
                av: Some(7.9),
                iphone: Some(7.43),
                aer_av: Some(22.43),
                aer_iphone: Some(15.13),
            },
            Cell {
                expected: 8.57,
                av: Some(8.03),
                iphone: Some(9.87),
                aer_av: Some(6.34),
                aer_iphone: Some(15.06),
            },
        ],
    },
];

pub const CONVEX_NO_LENS: [Cell; 3] = [
    Cell {
        expected: 6.0,
        av: Some(6.5),
        iphone: Some(6.89),
        aer_av: Some(8.41),
        aer_iphone: Some(14.78),
    },
    Cell {
        expected: 9.0,
        av: Some(8.6),
        iphone: Some(9.94),
        aer_av: Some(4.49),
        aer_iphone: Some(10.4),
    },
    Cell {
        expected: 12.0,
        av: Some(11.67),
        iphone: Some(12.67),
        aer_av: Some(2.78),
        aer_iphone: Some(5.59),
    },
];

/// (modification, benign disparity, attacked disparity, reference ADR %), per model
/// Monodepth2 / Depth Hints / Lite-Mono.
pub const DISPARITY_ADR: [(&str, [f64; 3], [f64; 3], [f64; 3]); 6] = [
    (
        "cropping 0.8x",
        [0.28, 0.31, 1.89],
        [0.36, 0.37, 2.19],
        [28.6, 19.3, 15.9],
    ),
    (
        "cropping 0.6x",
        [0.28, 0.31, 1.89],
        [0.45, 0.46, 2.66],
        [60.7, 48.4, 40.7],
    ),
    (
        "enlarging 2x",
        [0.23, 0.23, 1.47],
        [0.36, 0.36, 2.18],
        [56.5, 56.5, 48.3],
    ),
    (
        "enlarging 3x",
        [0.23, 0.23, 1.47],
        [0.50, 0.52, 3.03],
        [117.4, 126.1, 106.1],
    ),
    (
        "shrinking 0.8x",
        [0.44, 0.46, 2.68],
        [0.40, 0.41, 2.42],
        [9.0, 10.9, 9.7],
    ),
    (
        "shrinking 0.6x",
        [0.44, 0.46, 2.68],
        [0.38, 0.38, 2.24],
        [13.6, 17.4, 16.4],
    ),
];
