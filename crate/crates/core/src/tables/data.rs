//! Energies printed in the reference tables, stored as binding energies (-E, eV).

/// One printed s-wave level: vibrational quantum number and binding energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwaveCell {
    pub n: u32,
    pub binding_ev: f64,
}

/// One printed rotating-PDM level (Weyl ordering).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdmCell {
    pub n: u32,
    pub l: u32,
    pub epsilon: f64,
    pub binding_ev: f64,
}

/// Constant-mass s-wave energies, "Exact" column, per molecule.
pub const SWAVE_EXACT: [(&str, &[SwaveCell]); 4] = [
    (
        "H2",
        &[
            SwaveCell { n: 0, binding_ev: 4.476013 },
            SwaveCell { n: 1, binding_ev: 3.962315 },
            SwaveCell { n: 2, binding_ev: 3.479919 },
            SwaveCell { n: 3, binding_ev: 3.028824 },
            SwaveCell { n: 4, binding_ev: 2.609030 },
            SwaveCell { n: 5, binding_ev: 2.220537 },
            SwaveCell { n: 6, binding_ev: 1.863345 },
            SwaveCell { n: 7, binding_ev: 1.537455 },
            SwaveCell { n: 8, binding_ev: 1.242866 },
            SwaveCell { n: 9, binding_ev: 0.979579 },
            SwaveCell { n: 10, binding_ev: 0.747592 },
            SwaveCell { n: 11, binding_ev: 0.546907 },
            SwaveCell { n: 12, binding_ev: 0.377523 },
            SwaveCell { n: 13, binding_ev: 0.239441 },
            SwaveCell { n: 14, binding_ev: 0.132659 },
        ],
    ),
    (
        "LiH",
        &[
            SwaveCell { n: 0, binding_ev: 2.428863 },
            SwaveCell { n: 1, binding_ev: 2.260548 },
            SwaveCell { n: 2, binding_ev: 2.098276 },
            SwaveCell { n: 3, binding_ev: 1.942047 },
            SwaveCell { n: 4, binding_ev: 1.791862 },
            SwaveCell { n: 5, binding_ev: 1.647720 },
            SwaveCell { n: 6, binding_ev: 1.509621 },
            SwaveCell { n: 7, binding_ev: 1.377565 },
            SwaveCell { n: 8, binding_ev: 1.251552 },
            SwaveCell { n: 9, binding_ev: 1.131583 },
            SwaveCell { n: 10, binding_ev: 1.017656 },
            SwaveCell { n: 11, binding_ev: 0.909773 },
            SwaveCell { n: 12, binding_ev: 0.807934 },
            SwaveCell { n: 13, binding_ev: 0.712137 },
            SwaveCell { n: 14, binding_ev: 0.622384 },
            SwaveCell { n: 20, binding_ev: 0.210771 },
            SwaveCell { n: 25, binding_ev: 0.033949 },
        ],
    ),
    (
        "HCl",
        &[
            SwaveCell { n: 0, binding_ev: 4.435564 },
            SwaveCell { n: 1, binding_ev: 4.079710 },
            SwaveCell { n: 2, binding_ev: 3.738734 },
            SwaveCell { n: 3, binding_ev: 3.412635 },
            SwaveCell { n: 4, binding_ev: 3.101414 },
            SwaveCell { n: 5, binding_ev: 2.805071 },
            SwaveCell { n: 6, binding_ev: 2.523605 },
            SwaveCell { n: 7, binding_ev: 2.257018 },
            SwaveCell { n: 8, binding_ev: 2.005307 },
            SwaveCell { n: 9, binding_ev: 1.768475 },
            SwaveCell { n: 10, binding_ev: 1.546520 },
            SwaveCell { n: 11, binding_ev: 1.339442 },
            SwaveCell { n: 12, binding_ev: 1.147243 },
            SwaveCell { n: 13, binding_ev: 0.969921 },
            SwaveCell { n: 14, binding_ev: 0.807476 },
            SwaveCell { n: 18, binding_ev: 0.306476 },
            SwaveCell { n: 21, binding_ev: 0.086940 },
        ],
    ),
    (
        "CO",
        &[
            SwaveCell { n: 0, binding_ev: 11.091535 },
            SwaveCell { n: 1, binding_ev: 10.825822 },
            SwaveCell { n: 2, binding_ev: 10.563330 },
            SwaveCell { n: 3, binding_ev: 10.304060 },
            SwaveCell { n: 4, binding_ev: 10.048011 },
            SwaveCell { n: 5, binding_ev: 9.795184 },
            SwaveCell { n: 6, binding_ev: 9.545578 },
            SwaveCell { n: 7, binding_ev: 9.299193 },
            SwaveCell { n: 8, binding_ev: 9.056030 },
            SwaveCell { n: 9, binding_ev: 8.816089 },
            SwaveCell { n: 10, binding_ev: 8.579369 },
            SwaveCell { n: 11, binding_ev: 8.345870 },
            SwaveCell { n: 12, binding_ev: 8.115593 },
            SwaveCell { n: 13, binding_ev: 7.888538 },
            SwaveCell { n: 14, binding_ev: 7.664704 },
            SwaveCell { n: 18, binding_ev: 6.801582 },
            SwaveCell { n: 21, binding_ev: 6.188066 },
            SwaveCell { n: 40, binding_ev: 2.975752 },
            SwaveCell { n: 60, binding_ev: 0.850621 },
        ],
    ),
];

/// Final printed bound level per molecule: (molecule, n, E in eV).
pub const SWAVE_FINAL_LEVEL: [(&str, u32, f64); 4] = [
    ("H2", 17, -1.231e-4),
    ("LiH", 29, -1.270e-3),
    ("HCl", 24, -1.303e-3),
    ("CO", 83, -5.533e-7),
];

/// Printed n_max row, "Exact" column.
pub const SWAVE_NMAX_EXACT: [(&str, u32); 4] = [("H2", 17), ("LiH", 29), ("HCl", 25), ("CO", 83)];

/// H2 rotating levels with position-dependent mass.
pub const PDM_TABLE_3: [PdmCell; 60] = [
    PdmCell { n: 0, l: 0, epsilon: 0.1, binding_ev: 4.50225 },
    PdmCell { n: 5, l: 5, epsilon: 0.1, binding_ev: 2.21522 },
    PdmCell { n: 6, l: 10, epsilon: 0.1, binding_ev: 1.42962 },
    PdmCell { n: 0, l: 0, epsilon: 0.2, binding_ev: 4.52872 },
    PdmCell { n: 5, l: 5, epsilon: 0.2, binding_ev: 2.4056 },
    PdmCell { n: 6, l: 10, epsilon: 0.2, binding_ev: 1.60492 },
    PdmCell { n: 0, l: 0, epsilon: 0.4, binding_ev: 4.58235 },
    PdmCell { n: 5, l: 5, epsilon: 0.4, binding_ev: 2.85376 },
    PdmCell { n: 6, l: 10, epsilon: 0.4, binding_ev: 2.02927 },
    PdmCell { n: 0, l: 0, epsilon: 0.6, binding_ev: 4.63693 },
    PdmCell { n: 5, l: 5, epsilon: 0.6, binding_ev: 3.41631 },
    PdmCell { n: 6, l: 10, epsilon: 0.6, binding_ev: 2.58373 },
    PdmCell { n: 0, l: 0, epsilon: 0.8, binding_ev: 4.69249 },
    PdmCell { n: 5, l: 5, epsilon: 0.8, binding_ev: 4.13393 },
    PdmCell { n: 6, l: 10, epsilon: 0.8, binding_ev: 3.32397 },
    PdmCell { n: 0, l: 5, epsilon: 0.1, binding_ev: 4.28381 },
    PdmCell { n: 5, l: 10, epsilon: 0.1, binding_ev: 1.75241 },
    PdmCell { n: 10, l: 0, epsilon: 0.1, binding_ev: 0.92597 },
    PdmCell { n: 0, l: 5, epsilon: 0.2, binding_ev: 4.30903 },
    PdmCell { n: 5, l: 10, epsilon: 0.2, binding_ev: 1.91639 },
    PdmCell { n: 10, l: 0, epsilon: 0.2, binding_ev: 1.152 },
    PdmCell { n: 0, l: 5, epsilon: 0.4, binding_ev: 4.36013 },
    PdmCell { n: 5, l: 10, epsilon: 0.4, binding_ev: 2.29973 },
    PdmCell { n: 10, l: 0, epsilon: 0.4, binding_ev: 1.81804 },
    PdmCell { n: 0, l: 5, epsilon: 0.6, binding_ev: 4.41211 },
    PdmCell { n: 5, l: 10, epsilon: 0.6, binding_ev: 2.77597 },
    PdmCell { n: 10, l: 0, epsilon: 0.6, binding_ev: 2.9837 },
    PdmCell { n: 0, l: 5, epsilon: 0.8, binding_ev: 4.465 },
    PdmCell { n: 5, l: 10, epsilon: 0.8, binding_ev: 3.37626 },
    PdmCell { n: 10, l: 0, epsilon: 0.8, binding_ev: 5.21197 },
    PdmCell { n: 0, l: 10, epsilon: 0.1, binding_ev: 3.74413 },
    PdmCell { n: 6, l: 0, epsilon: 0.1, binding_ev: 2.05564 },
    PdmCell { n: 10, l: 5, epsilon: 0.1, binding_ev: 0.77583 },
    PdmCell { n: 0, l: 10, epsilon: 0.2, binding_ev: 3.76649 },
    PdmCell { n: 6, l: 0, epsilon: 0.2, binding_ev: 2.27409 },
    PdmCell { n: 10, l: 5, epsilon: 0.2, binding_ev: 0.98431 },
    PdmCell { n: 0, l: 10, epsilon: 0.4, binding_ev: 3.81179 },
    PdmCell { n: 6, l: 0, epsilon: 0.4, binding_ev: 2.80923 },
    PdmCell { n: 10, l: 5, epsilon: 0.4, binding_ev: 1.59521 },
    PdmCell { n: 0, l: 10, epsilon: 0.6, binding_ev: 3.85783 },
    PdmCell { n: 6, l: 0, epsilon: 0.6, binding_ev: 3.52119 },
    PdmCell { n: 10, l: 5, epsilon: 0.6, binding_ev: 2.65381 },
    PdmCell { n: 0, l: 10, epsilon: 0.8, binding_ev: 3.90464 },
    PdmCell { n: 6, l: 0, epsilon: 0.8, binding_ev: 4.49254 },
    PdmCell { n: 10, l: 5, epsilon: 0.8, binding_ev: 4.64747 },
    PdmCell { n: 5, l: 0, epsilon: 0.1, binding_ev: 2.40244 },
    PdmCell { n: 6, l: 5, epsilon: 0.1, binding_ev: 1.87538 },
    PdmCell { n: 10, l: 10, epsilon: 0.1, binding_ev: 0.40369 },
    PdmCell { n: 5, l: 0, epsilon: 0.2, binding_ev: 2.60453 },
    PdmCell { n: 6, l: 5, epsilon: 0.2, binding_ev: 2.08053 },
    PdmCell { n: 10, l: 10, epsilon: 0.2, binding_ev: 0.57355 },
    PdmCell { n: 5, l: 0, epsilon: 0.4, binding_ev: 3.08164 },
    PdmCell { n: 6, l: 5, epsilon: 0.4, binding_ev: 2.58134 },
    PdmCell { n: 10, l: 10, epsilon: 0.4, binding_ev: 1.06486 },
    PdmCell { n: 5, l: 0, epsilon: 0.6, binding_ev: 3.6831 },
    PdmCell { n: 6, l: 5, epsilon: 0.6, binding_ev: 3.2441 },
    PdmCell { n: 10, l: 10, epsilon: 0.6, binding_ev: 1.89674 },
    PdmCell { n: 5, l: 0, epsilon: 0.8, binding_ev: 4.4542 },
    PdmCell { n: 6, l: 5, epsilon: 0.8, binding_ev: 4.14254 },
    PdmCell { n: 10, l: 10, epsilon: 0.8, binding_ev: 3.41028 },
];

/// LiH rotating levels with position-dependent mass.
pub const PDM_TABLE_4: [PdmCell; 60] = [
    PdmCell { n: 0, l: 0, epsilon: 0.1, binding_ev: 2.43768 },
    PdmCell { n: 5, l: 5, epsilon: 0.1, binding_ev: 1.69554 },
    PdmCell { n: 6, l: 10, epsilon: 0.1, binding_ev: 1.50275 },
    PdmCell { n: 0, l: 0, epsilon: 0.2, binding_ev: 2.44655 },
    PdmCell { n: 5, l: 5, epsilon: 0.2, binding_ev: 1.77179 },
    PdmCell { n: 6, l: 10, epsilon: 0.2, binding_ev: 1.58605 },
    PdmCell { n: 0, l: 0, epsilon: 0.4, binding_ev: 2.46442 },
    PdmCell { n: 5, l: 5, epsilon: 0.4, binding_ev: 1.93925 },
    PdmCell { n: 6, l: 10, epsilon: 0.4, binding_ev: 1.77237 },
    PdmCell { n: 0, l: 0, epsilon: 0.6, binding_ev: 2.48249 },
    PdmCell { n: 5, l: 5, epsilon: 0.6, binding_ev: 2.12963 },
    PdmCell { n: 6, l: 10, epsilon: 0.6, binding_ev: 1.98976 },
    PdmCell { n: 0, l: 0, epsilon: 0.8, binding_ev: 2.50075 },
    PdmCell { n: 5, l: 5, epsilon: 0.8, binding_ev: 2.3472 },
    PdmCell { n: 6, l: 10, epsilon: 0.8, binding_ev: 2.24532 },
    PdmCell { n: 0, l: 5, epsilon: 0.1, binding_ev: 2.41006 },
    PdmCell { n: 5, l: 10, epsilon: 0.1, binding_ev: 1.6303 },
    PdmCell { n: 10, l: 0, epsilon: 0.1, binding_ev: 1.11912 },
    PdmCell { n: 0, l: 5, epsilon: 0.2, binding_ev: 2.41884 },
    PdmCell { n: 5, l: 10, epsilon: 0.2, binding_ev: 1.70418 },
    PdmCell { n: 10, l: 0, epsilon: 0.2, binding_ev: 1.23396 },
    PdmCell { n: 0, l: 5, epsilon: 0.4, binding_ev: 2.43653 },
    PdmCell { n: 5, l: 10, epsilon: 0.4, binding_ev: 1.86636 },
    PdmCell { n: 10, l: 0, epsilon: 0.4, binding_ev: 1.51359 },
    PdmCell { n: 0, l: 5, epsilon: 0.6, binding_ev: 2.45441 },
    PdmCell { n: 5, l: 10, epsilon: 0.6, binding_ev: 2.05061 },
    PdmCell { n: 10, l: 0, epsilon: 0.6, binding_ev: 1.88229 },
    PdmCell { n: 0, l: 5, epsilon: 0.8, binding_ev: 2.47248 },
    PdmCell { n: 5, l: 10, epsilon: 0.8, binding_ev: 2.26102 },
    PdmCell { n: 10, l: 0, epsilon: 0.8, binding_ev: 2.38007 },
    PdmCell { n: 0, l: 10, epsilon: 0.1, binding_ev: 2.33733 },
    PdmCell { n: 6, l: 0, epsilon: 0.1, binding_ev: 1.59062 },
    PdmCell { n: 10, l: 5, epsilon: 0.1, binding_ev: 1.09738 },
    PdmCell { n: 0, l: 10, epsilon: 0.2, binding_ev: 2.34587 },
    PdmCell { n: 6, l: 0, epsilon: 0.2, binding_ev: 1.67773 },
    PdmCell { n: 10, l: 5, epsilon: 0.2, binding_ev: 1.21064 },
    PdmCell { n: 0, l: 10, epsilon: 0.4, binding_ev: 2.36308 },
    PdmCell { n: 6, l: 0, epsilon: 0.4, binding_ev: 1.87272 },
    PdmCell { n: 10, l: 5, epsilon: 0.4, binding_ev: 1.48633 },
    PdmCell { n: 0, l: 10, epsilon: 0.6, binding_ev: 2.38048 },
    PdmCell { n: 6, l: 0, epsilon: 0.6, binding_ev: 2.10049 },
    PdmCell { n: 10, l: 5, epsilon: 0.6, binding_ev: 1.84964 },
    PdmCell { n: 0, l: 10, epsilon: 0.8, binding_ev: 2.39806 },
    PdmCell { n: 6, l: 0, epsilon: 0.8, binding_ev: 2.36859 },
    PdmCell { n: 10, l: 5, epsilon: 0.8, binding_ev: 2.33981 },
    PdmCell { n: 5, l: 0, epsilon: 0.1, binding_ev: 1.72034 },
    PdmCell { n: 6, l: 5, epsilon: 0.1, binding_ev: 1.56642 },
    PdmCell { n: 10, l: 10, epsilon: 0.1, binding_ev: 1.04023 },
    PdmCell { n: 5, l: 0, epsilon: 0.2, binding_ev: 1.7975 },
    PdmCell { n: 6, l: 5, epsilon: 0.2, binding_ev: 1.65247 },
    PdmCell { n: 10, l: 10, epsilon: 0.2, binding_ev: 1.14939 },
    PdmCell { n: 5, l: 0, epsilon: 0.4, binding_ev: 1.96699 },
    PdmCell { n: 6, l: 5, epsilon: 0.4, binding_ev: 1.84506 },
    PdmCell { n: 10, l: 10, epsilon: 0.4, binding_ev: 1.41484 },
    PdmCell { n: 5, l: 0, epsilon: 0.6, binding_ev: 2.15972 },
    PdmCell { n: 6, l: 5, epsilon: 0.6, binding_ev: 2.06994 },
    PdmCell { n: 10, l: 10, epsilon: 0.6, binding_ev: 1.76417 },
    PdmCell { n: 5, l: 0, epsilon: 0.8, binding_ev: 2.38005 },
    PdmCell { n: 6, l: 5, epsilon: 0.8, binding_ev: 2.33456 },
    PdmCell { n: 10, l: 10, epsilon: 0.8, binding_ev: 2.23467 },
];

/// HCl rotating levels with position-dependent mass.
pub const PDM_TABLE_5: [PdmCell; 60] = [
    PdmCell { n: 0, l: 0, epsilon: 0.1, binding_ev: 4.45401 },
    PdmCell { n: 5, l: 5, epsilon: 0.1, binding_ev: 2.91768 },
    PdmCell { n: 6, l: 10, epsilon: 0.1, binding_ev: 2.56449 },
    PdmCell { n: 0, l: 0, epsilon: 0.2, binding_ev: 4.47257 },
    PdmCell { n: 5, l: 5, epsilon: 0.2, binding_ev: 3.07397 },
    PdmCell { n: 6, l: 10, epsilon: 0.2, binding_ev: 2.73542 },
    PdmCell { n: 0, l: 0, epsilon: 0.4, binding_ev: 4.51004 },
    PdmCell { n: 5, l: 5, epsilon: 0.4, binding_ev: 3.42293 },
    PdmCell { n: 6, l: 10, epsilon: 0.4, binding_ev: 3.12585 },
    PdmCell { n: 0, l: 0, epsilon: 0.6, binding_ev: 4.54797 },
    PdmCell { n: 5, l: 5, epsilon: 0.6, binding_ev: 3.82903 },
    PdmCell { n: 6, l: 10, epsilon: 0.6, binding_ev: 3.59513 },
    PdmCell { n: 0, l: 0, epsilon: 0.8, binding_ev: 4.58636 },
    PdmCell { n: 5, l: 5, epsilon: 0.8, binding_ev: 4.30512 },
    PdmCell { n: 6, l: 10, epsilon: 0.8, binding_ev: 4.16527 },
    PdmCell { n: 0, l: 5, epsilon: 0.1, binding_ev: 4.41514 },
    PdmCell { n: 5, l: 10, epsilon: 0.1, binding_ev: 2.82723 },
    PdmCell { n: 10, l: 0, epsilon: 0.1, binding_ev: 1.73795 },
    PdmCell { n: 0, l: 5, epsilon: 0.2, binding_ev: 4.43358 },
    PdmCell { n: 5, l: 10, epsilon: 0.2, binding_ev: 2.9802 },
    PdmCell { n: 10, l: 0, epsilon: 0.2, binding_ev: 1.95977 },
    PdmCell { n: 0, l: 5, epsilon: 0.4, binding_ev: 4.47079 },
    PdmCell { n: 5, l: 10, epsilon: 0.4, binding_ev: 3.32173 },
    PdmCell { n: 10, l: 0, epsilon: 0.4, binding_ev: 2.52156 },
    PdmCell { n: 0, l: 5, epsilon: 0.6, binding_ev: 4.50847 },
    PdmCell { n: 5, l: 10, epsilon: 0.6, binding_ev: 3.71913 },
    PdmCell { n: 10, l: 0, epsilon: 0.6, binding_ev: 3.30651 },
    PdmCell { n: 0, l: 5, epsilon: 0.8, binding_ev: 4.54661 },
    PdmCell { n: 5, l: 10, epsilon: 0.8, binding_ev: 4.18495 },
    PdmCell { n: 10, l: 0, epsilon: 0.8, binding_ev: 4.44118 },
    PdmCell { n: 0, l: 10, epsilon: 0.1, binding_ev: 4.31208 },
    PdmCell { n: 6, l: 0, epsilon: 0.1, binding_ev: 2.68546 },
    PdmCell { n: 10, l: 5, epsilon: 0.1, binding_ev: 1.70888 },
    PdmCell { n: 0, l: 10, epsilon: 0.2, binding_ev: 4.33018 },
    PdmCell { n: 6, l: 0, epsilon: 0.2, binding_ev: 2.8617 },
    PdmCell { n: 10, l: 5, epsilon: 0.2, binding_ev: 1.92854 },
    PdmCell { n: 0, l: 10, epsilon: 0.4, binding_ev: 4.36673 },
    PdmCell { n: 6, l: 0, epsilon: 0.4, binding_ev: 3.26429 },
    PdmCell { n: 10, l: 5, epsilon: 0.4, binding_ev: 2.48486 },
    PdmCell { n: 0, l: 10, epsilon: 0.6, binding_ev: 4.40373 },
    PdmCell { n: 6, l: 0, epsilon: 0.6, binding_ev: 3.74829 },
    PdmCell { n: 10, l: 5, epsilon: 0.6, binding_ev: 3.26213 },
    PdmCell { n: 0, l: 10, epsilon: 0.8, binding_ev: 4.44119 },
    PdmCell { n: 6, l: 0, epsilon: 0.8, binding_ev: 4.33645 },
    PdmCell { n: 10, l: 5, epsilon: 0.8, binding_ev: 4.3856 },
    PdmCell { n: 5, l: 0, epsilon: 0.1, binding_ev: 2.95182 },
    PdmCell { n: 6, l: 5, epsilon: 0.1, binding_ev: 2.65231 },
    PdmCell { n: 10, l: 10, epsilon: 0.1, binding_ev: 1.63195 },
    PdmCell { n: 5, l: 0, epsilon: 0.2, binding_ev: 3.10936 },
    PdmCell { n: 6, l: 5, epsilon: 0.2, binding_ev: 2.82709 },
    PdmCell { n: 10, l: 10, epsilon: 0.2, binding_ev: 1.84591 },
    PdmCell { n: 5, l: 0, epsilon: 0.4, binding_ev: 3.46114 },
    PdmCell { n: 6, l: 5, epsilon: 0.4, binding_ev: 3.22634 },
    PdmCell { n: 10, l: 10, epsilon: 0.4, binding_ev: 2.3878 },
    PdmCell { n: 5, l: 0, epsilon: 0.6, binding_ev: 3.87054 },
    PdmCell { n: 6, l: 5, epsilon: 0.6, binding_ev: 3.70629 },
    PdmCell { n: 10, l: 10, epsilon: 0.6, binding_ev: 3.14483 },
    PdmCell { n: 5, l: 0, epsilon: 0.8, binding_ev: 4.35052 },
    PdmCell { n: 6, l: 5, epsilon: 0.8, binding_ev: 4.2895 },
    PdmCell { n: 10, l: 10, epsilon: 0.8, binding_ev: 4.23882 },
];

/// CO rotating levels with position-dependent mass.
pub const PDM_TABLE_6: [PdmCell; 60] = [
    PdmCell { n: 0, l: 0, epsilon: 0.1, binding_ev: 11.1049 },
    PdmCell { n: 5, l: 5, epsilon: 0.1, binding_ev: 9.92329 },
    PdmCell { n: 6, l: 10, epsilon: 0.1, binding_ev: 9.67726 },
    PdmCell { n: 0, l: 0, epsilon: 0.2, binding_ev: 11.1184 },
    PdmCell { n: 5, l: 5, epsilon: 0.2, binding_ev: 10.061 },
    PdmCell { n: 6, l: 10, epsilon: 0.2, binding_ev: 9.83758 },
    PdmCell { n: 0, l: 0, epsilon: 0.4, binding_ev: 11.1453 },
    PdmCell { n: 5, l: 5, epsilon: 0.4, binding_ev: 10.3449 },
    PdmCell { n: 6, l: 10, epsilon: 0.4, binding_ev: 10.1701 },
    PdmCell { n: 0, l: 0, epsilon: 0.6, binding_ev: 11.1723 },
    PdmCell { n: 5, l: 5, epsilon: 0.6, binding_ev: 10.6408 },
    PdmCell { n: 6, l: 10, epsilon: 0.6, binding_ev: 10.5192 },
    PdmCell { n: 0, l: 0, epsilon: 0.8, binding_ev: 11.1994 },
    PdmCell { n: 5, l: 5, epsilon: 0.8, binding_ev: 10.9492 },
    PdmCell { n: 6, l: 10, epsilon: 0.8, binding_ev: 10.8862 },
    PdmCell { n: 0, l: 5, epsilon: 0.1, binding_ev: 11.0978 },
    PdmCell { n: 5, l: 10, epsilon: 0.1, binding_ev: 9.90487 },
    PdmCell { n: 10, l: 0, epsilon: 0.1, binding_ev: 8.8153 },
    PdmCell { n: 0, l: 5, epsilon: 0.2, binding_ev: 11.1112 },
    PdmCell { n: 5, l: 10, epsilon: 0.2, binding_ev: 10.0424 },
    PdmCell { n: 10, l: 0, epsilon: 0.2, binding_ev: 9.06065 },
    PdmCell { n: 0, l: 5, epsilon: 0.4, binding_ev: 11.1381 },
    PdmCell { n: 5, l: 10, epsilon: 0.4, binding_ev: 10.326 },
    PdmCell { n: 10, l: 0, epsilon: 0.4, binding_ev: 9.58165 },
    PdmCell { n: 0, l: 5, epsilon: 0.6, binding_ev: 11.1651 },
    PdmCell { n: 5, l: 10, epsilon: 0.6, binding_ev: 10.6214 },
    PdmCell { n: 10, l: 0, epsilon: 0.6, binding_ev: 10.1468 },
    PdmCell { n: 0, l: 5, epsilon: 0.8, binding_ev: 11.1922 },
    PdmCell { n: 5, l: 10, epsilon: 0.8, binding_ev: 10.9294 },
    PdmCell { n: 10, l: 0, epsilon: 0.8, binding_ev: 10.7611 },
    PdmCell { n: 0, l: 10, epsilon: 0.1, binding_ev: 11.0787 },
    PdmCell { n: 6, l: 0, epsilon: 0.1, binding_ev: 9.7024 },
    PdmCell { n: 10, l: 5, epsilon: 0.1, binding_ev: 8.80864 },
    PdmCell { n: 0, l: 10, epsilon: 0.2, binding_ev: 11.0921 },
    PdmCell { n: 6, l: 0, epsilon: 0.2, binding_ev: 9.86303 },
    PdmCell { n: 10, l: 5, epsilon: 0.2, binding_ev: 9.05387 },
    PdmCell { n: 0, l: 10, epsilon: 0.4, binding_ev: 11.119 },
    PdmCell { n: 6, l: 0, epsilon: 0.4, binding_ev: 10.1961 },
    PdmCell { n: 10, l: 5, epsilon: 0.4, binding_ev: 9.57459 },
    PdmCell { n: 0, l: 10, epsilon: 0.6, binding_ev: 11.146 },
    PdmCell { n: 6, l: 0, epsilon: 0.6, binding_ev: 10.5459 },
    PdmCell { n: 10, l: 5, epsilon: 0.6, binding_ev: 10.1394 },
    PdmCell { n: 0, l: 10, epsilon: 0.8, binding_ev: 11.173 },
    PdmCell { n: 6, l: 0, epsilon: 0.8, binding_ev: 10.9135 },
    PdmCell { n: 10, l: 5, epsilon: 0.8, binding_ev: 10.7534 },
    PdmCell { n: 5, l: 0, epsilon: 0.1, binding_ev: 9.9302 },
    PdmCell { n: 6, l: 5, epsilon: 0.1, binding_ev: 9.69554 },
    PdmCell { n: 10, l: 10, epsilon: 0.1, binding_ev: 8.79088 },
    PdmCell { n: 5, l: 0, epsilon: 0.2, binding_ev: 10.068 },
    PdmCell { n: 6, l: 5, epsilon: 0.2, binding_ev: 9.85609 },
    PdmCell { n: 10, l: 10, epsilon: 0.2, binding_ev: 9.03577 },
    PdmCell { n: 5, l: 0, epsilon: 0.4, binding_ev: 10.3521 },
    PdmCell { n: 6, l: 5, epsilon: 0.4, binding_ev: 10.189 },
    PdmCell { n: 10, l: 10, epsilon: 0.4, binding_ev: 9.55577 },
    PdmCell { n: 5, l: 0, epsilon: 0.6, binding_ev: 10.648 },
    PdmCell { n: 6, l: 5, epsilon: 0.6, binding_ev: 10.5387 },
    PdmCell { n: 10, l: 10, epsilon: 0.6, binding_ev: 10.1198 },
    PdmCell { n: 5, l: 0, epsilon: 0.8, binding_ev: 10.9566 },
    PdmCell { n: 6, l: 5, epsilon: 0.8, binding_ev: 10.9061 },
    PdmCell { n: 10, l: 10, epsilon: 0.8, binding_ev: 10.7329 },
];
