"""Published reference values for the benchmark problems.

Used by the reproduction command as comparison columns; tests assert
agreement at the tolerances of the acceptance suite.
"""

# (omega, beta, M) -> metrics
TOY = {
    (5.0, 10.0, 100): dict(sum_abs_coeffs=1.0909, nu=0.2151,
                           err_c=1.7828e-15, err_f=1.3345e-15),
    (5.0, 1.0, 100): dict(sum_abs_coeffs=10.909, nu=2.151,
                          err_c=2.5823e-15, err_f=1.8621e-15),
    (100.0, 1.0, 1500): dict(sum_abs_coeffs=796.7, nu=45.11, N=148,
                             err_c=3.6107e-14, err_f=9.9812e-14),
}

# t_end -> metrics at M = 1000
TABLE2 = {
    25.0: dict(sum_abs_01=348.5, nu=147.6, err_c=5.228e-14, err_f=1.067e-13),
    50.0: dict(sum_abs_01=1394.0, nu=590.6, err_c=3.210e-13, err_f=3.008e-13),
}

# t_end = 25: M -> (err_f, |last computed coefficient|)
TABLE4 = {
    200: (1.8e+00, 2.7e-02),
    210: (3.3e-01, 1.3e-02),
    220: (1.6e-02, 1.9e-03),
    230: (4.6e-04, 9.0e-05),
    240: (8.0e-06, 2.2e-06),
    250: (8.5e-08, 2.9e-08),
    260: (5.9e-10, 2.4e-10),
    270: (2.8e-12, 1.2e-12),
    280: (9.9e-14, 2.1e-14),
    290: (8.4e-14, 1.2e-14),
    300: (8.7e-14, 1.2e-14),
}

# t_end = 50: M -> (err_f, |last computed coefficient|)
TABLE5 = {
    830: (8.3e-02, 2.4e-03),
    840: (1.1e-02, 5.5e-04),
    850: (1.1e-03, 8.4e-05),
    860: (9.9e-05, 9.3e-06),
    870: (7.0e-06, 8.0e-07),
    880: (4.0e-07, 5.4e-08),
    890: (1.9e-08, 3.0e-09),
    900: (7.7e-10, 1.3e-10),
    910: (2.6e-11, 5.0e-12),
    920: (9.6e-13, 1.6e-13),
    930: (3.1e-13, 1.6e-14),
}

# (nu, split, M) -> metrics; alpha=0.05, beta=gamma=3450, t_end=1e-2
NMR = {
    (5000.0, None, 1500): dict(err_f=1.5994e-04),
    (120000.0, 20, 1500): dict(err_f=1.4101e-07, err_c=1.4087e-08),
}

# Bandwidths of the oscillatory example f = -i omega sin(omega (t+1))
EXAMPLE_BANDWIDTHS = {1.0: 14, 5.0: 24}

# Structure of the sin(t+1) example at M=50, machine tolerance:
# (band of I - F counted as N+2, resolvent bandwidth K, trailing-block
# inverse bandwidth L), predicted and observed accurate entries.
EXAMPLE_STRUCTURE = dict(N_plus_2=16, K=22, L=16, predicted=12, observed=30)
