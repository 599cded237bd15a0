"""Closed-form coefficient polynomials for the two Tschirnhausen stages.

The principal quintic is written x**5 + c2*x**2 + c1*x + c0 throughout.
"""


def delta_quadratic(a, b, c, d):
    """Radicand of the quadratic-stage parameters (before the factor 5)."""
    delta = (
        -3*a**4*b**2 + 8*a**5*c + 12*a**2*b**3 + 16*a**4*d + 45*a**2*c**2
        - 40*a**2*b*d - 38*a**3*b*c
    )
    return delta


def principal_coefficients(a, b, c, d, e, A, B):
    """Image of x**5 + a x**4 + b x**3 + c x**2 + d x + e under y = x**2 + A x + B.

    Valid only when (A, B) eliminate the y**4 and y**3 terms; returns (c2, c1, c0).
    """
    c2 = (
        -c**2 - 10*B**3 + A**3*c - 6*B*d - 6*B**2*a**2 - 3*B*b**2 - 2*a*e
        + 2*b*d + 4*A**2*d + 5*A*e + 12*B**2*b + A*b*c - A**2*a*c - 9*A*B*c
        - 3*A*a*d - 3*A**2*B*b + 6*A*B**2*a + 6*B*a*c + 3*A*B*a*b
    )
    c1 = (
        d**2 + 5*B**4 + A**4*d - 8*B**3*b - 2*c*e + 2*B*c**2 + 3*B**2*b**2
        + 4*B**3*a**2 + 5*A**3*e + 6*B**2*d + A**2*b*d - A*c*d - A**3*a*d
        - 10*A*B*e - 8*A**2*B*d - 6*B**2*a*c - 4*A*B**3*a - 4*B*b*d
        - 4*A**2*a*e - 2*A**3*B*c + 3*A*b*e + 3*A**2*B**2*b + 4*B*a*e
        + 9*A*B**2*c - 3*A*B**2*a*b - 2*A*B*b*c + 2*A**2*B*a*c + 6*A*B*a*d
    )
    c0 = (
        -B**5 - e**2 + A**5*e - B*d**2 - B**2*c**2 - B**3*b**2 - B**4*a**2
        - 2*B**3*d + 2*B**4*b + A*B**4*a + A*d*e + A**3*b*e + A**3*B**2*c
        - A**4*B*d - A**4*a*e - A**2*B**3*b - A**2*c*e - 5*A**3*B*e
        - 3*A*B**3*c - 2*B**2*a*e + 2*B*c*e + 2*B**3*a*c + 2*B**2*b*d
        + 4*A**2*B**2*d + 5*A*B**2*e + A*B*c*d + A*B**3*a*b + A*B**2*b*c
        + A**3*B*a*d - A**2*B*b*d - A**2*B**2*a*c - 3*A*B*b*e - 3*A*B**2*a*d
        + 4*A**2*B*a*e
    )
    return c2, c1, c0


def delta_quartic(c2, c1, c0):
    """Radicand of the quartic-stage parameters (before the factor 5)."""
    delta = (
        -27*c1**2*c2**6 + 108*c0*c2**7 + 256*c1**5*c2**2 + 3125*c0**4*c2**2
        - 1600*c0*c1**3*c2**3 + 2250*c0**2*c1*c2**4
    )
    return delta


def m_cubic(c2, c1, c0, root):
    """Cubic whose roots are the linear coefficient m of the quartic map.

    ``root`` is the chosen square root of 5*delta_quartic. Returns the four
    coefficients, highest degree first.
    """
    M1 = (
        -162*c2**7 - 1875*c0**3*c2**2 + 1104*c1**3*c2**3 - 2295*c0*c1*c2**4
    )
    N1 = (
        16*c1**2 - 15*c0*c2
    )
    S1 = (
        54*c2**5 - 320*c1**3*c2 + 600*c0*c1*c2**2
    )
    M2 = (
        4374*c2**12 - 59859*c1**3*c2**8 + 81000*c0**3*c2**7
        + 205440*c1**6*c2**4 - 869760*c0*c1**4*c2**5 - 688000*c0**2*c1**5*c2**2
        + 102400*c0*c1**7*c2 + 124902*c0*c1*c2**9 + 510000*c0**3*c1**3*c2**3
        + 946350*c0**2*c1**2*c2**6 + 1040625*c0**4*c1*c2**4
        + 1250000*c0**5*c1**2*c2
    )
    N2 = (
        -10000*c0**3*c1**2 - 783*c1**2*c2**5 + 486*c0*c2**6 + 5120*c1**5*c2
        - 12960*c0*c1**3*c2**2 + 4725*c0**2*c1*c2**3
    )
    S2 = (
        1458*c2**9 - 17280*c1**3*c2**5 + 51200*c1**6*c2 - 192000*c0*c1**4*c2**2
        + 32400*c0*c1*c2**6 + 180000*c0**2*c1**2*c2**3
    )
    M3 = (
        -196830*c2**17 - 27812160*c1**6*c2**9 - 10546875*c0**6*c2**7
        - 4829625*c0**3*c2**12 + 4056885*c1**3*c2**13 + 13107200*c1**12*c2
        + 61649920*c1**9*c2**5 - 1065234375*c0**5*c1**2*c2**6
        - 828125000*c0**6*c1**3*c2**3 - 651358125*c0**3*c1**3*c2**8
        - 400708800*c0*c1**7*c2**6 - 263671875*c0**7*c1*c2**4
        - 133650000*c0**4*c1*c2**9 - 126918900*c0**2*c1**2*c2**11
        - 73728000*c0*c1**10*c2**2 - 35200000*c0**2*c1**8*c2**3
        - 8496495*c0*c1*c2**14 + 117564615*c0*c1**4*c2**10
        + 125000000*c0**5*c1**5*c2**2 + 130500000*c0**4*c1**4*c2**5
        + 160000000*c0**4*c1**7*c2 + 426800000*c0**3*c1**6*c2**4
        + 909441000*c0**2*c1**5*c2**7
    )
    N3 = (
        -675648*c1**5*c2**6 - 640000*c0**2*c1**7 - 84375*c0**4*c2**6
        - 22599*c0*c2**11 + 50301*c1**2*c2**10 + 2298880*c1**8*c2**2
        - 10376000*c0*c1**6*c2**3 - 4600000*c0**3*c1**5*c2
        - 2362500*c0**3*c1**2*c2**5 - 2109375*c0**5*c1*c2**3
        - 516375*c0**2*c1*c2**8 + 1658475*c0*c1**3*c2**7
        + 13329000*c0**2*c1**4*c2**4 + 13375000*c0**4*c1**3*c2**2
    )
    S3 = (
        196830*c2**13 - 40960000*c1**9*c2 - 3499200*c1**3*c2**9
        + 20736000*c1**6*c2**5 - 432000000*c0**2*c1**5*c2**3
        - 77760000*c0*c1**4*c2**6 + 6561000*c0*c1*c2**10
        + 72900000*c0**2*c1**2*c2**7 + 230400000*c0*c1**7*c2**2
        + 270000000*c0**3*c1**3*c2**4
    )
    return (
        c2,
        (M1 + N1 * root) / S1,
        (M2 + N2 * root) / S2,
        (M3 + N3 * root) / S3,
    )


def bring_jerrard_coefficients(c2, c1, c0, k, l, m, n):
    """(A2, B2) of the image of the principal quintic under y = x**4 + k x**3 + l x**2 + m x + n.

    Valid only once the y**4, y**3 and y**2 terms of the image vanish.
    """
    A2 = (
        c1**4 + 5*n**4 + c1*m**4 + c1**2*l**4 + c1**3*k**4 - 16*c1*n**3
        - 8*c1**3*n - 5*c0**2*l**3 + 2*c2**4*n + 2*c0**2*c2**2 + 2*c1**3*l**2
        + 5*c0**3*k + 5*c0**2*m**2 + 18*c1**2*n**2 + c0*c1**2*k**3
        + c0**2*c1*k**2 + c1**2*c2**2*l - c1*c2**3*m - c1**3*c2*k
        - 12*c0*c2*n**2 - 12*c2*k*n**3 - 9*c2**2*l*n**2 - 8*c1**2*l**2*n
        - 7*c0**2*c2*m - 6*c0**2*c1*l - 6*c2**3*m*n - 5*c0**2*k**3*m
        - 4*c0*c1**2*c2 - 4*c1**3*k**2*l - 3*c1*c2*m**3 - 2*c0*c2*l**4
        - 2*c0*c2**3*l - 2*c2*m**3*n - 2*c0**2*c2*k**3 - 2*c2**3*k**3*n
        + 2*c2**2*l**3*n + 2*c1**2*k**2*m**2 + 3*c1*c2**2*m**2 + 4*c1**3*k*m
        + 4*c1**2*l*m**2 + 5*c0*l*m**3 + 5*c0**2*k**2*l**2 + 6*c1*l**2*n**2
        + 6*c2**2*m**2*n + 7*c0*c1**2*m + 9*c2**2*k**2*n**2 + 10*c0**2*l*n
        + 10*c0**2*k**2*n + 15*c0*m*n**2 + c0*c1*k*l**3 + c1*c2**2*k**3*m
        + c1**2*c2*k**2*m - c1*c2*l**3*m - c1**2*c2*k**3*l - 22*c0*c1*m*n
        - 16*c1**2*k*m*n - 10*c0*k*m**2*n - 10*c0*l**2*m*n - 9*c0*c2*l*m**2
        - 8*c1*l*m**2*n - 6*c0*c2**2*k*l**2 - 5*c1**2*c2*l*m - 5*c0**2*k*l*m
        - 4*c0*c1*c2*l**2 - 4*c1**2*k*l**2*m - 3*c0*c1*c2*k**4 - 3*c0*c1**2*k*l
        - 2*c1*c2**2*k**2*n - 2*c1**2*c2*k*n + 2*c0*c2**2*k*n
        + 2*c0*c2**2*k**3*l + 3*c0*c1*c2**2*k + 3*c0*c1*l**2*m
        + 3*c0*c2*k**2*m**2 + 3*c1**2*c2*k*l**2 + 4*c1*c2**2*l*n
        + 4*c0**2*c2*k*l + 6*c0*c1*k**3*n + 6*c0*c2**2*l*m + 6*c2**3*k*l*n
        + 8*c1**2*k**2*l*n + 9*c2*l*m*n**2 + 12*c1*k*m*n**2 + 13*c0*c1*k*m**2
        + 15*c0*k*l*n**2 + 15*c1*c2*k*n**2 + 16*c0*c1*c2*n + 16*c0*c2*l**2*n
        - 14*c0*c2*k**2*l*n - 10*c0*c1*c2*k*m - 10*c1*c2*k**2*m*n
        - 7*c0*c1*k**2*l*m - 6*c2**2*k*l*m*n - 4*c0*c1*k*l*n - 3*c1*c2**2*k*l*m
        + 2*c0*c2*k*m*n + 2*c1*c2*k*l**2*n + 3*c1*c2*k*l*m**2 + 4*c1*c2*l*m*n
        + 6*c0*c2*k*l**2*m + 11*c0*c1*c2*k**2*l
    )
    B2 = (
        -c0**4 - n**5 + c0*m**5 + c0**3*k**5 - c1**4*n - c0**2*l**5 - c2**4*n**2
        - 6*c1**2*n**3 + 4*c1*n**4 + 4*c1**3*n**2 + c0*c1**3*m + c0**3*c1*k
        + c2*m**3*n**2 + c2**3*k**3*n**2 - c0*c2**3*m**2 - c1*m**4*n
        - c0**3*c2*k**2 - c0**2*c1**2*l - c1**2*l**4*n - c1**3*k**4*n
        - c0**2*c2**2*l**2 - c2**2*l**3*n**2 - 5*c0*m*n**3 - 5*c0**3*k*n
        - 5*c0**3*l*m - 5*c0**2*l*n**2 - 5*c0**3*k**3*l - 5*c0**2*m**2*n
        - 5*c0**2*k**2*n**2 - 5*c0**2*l**2*m**2 - 3*c0*c2*m**4
        - 3*c2**2*k**2*n**3 - 3*c2**2*m**2*n**2 - 2*c0**2*c1*l**3
        - 2*c1*l**2*n**3 - 2*c0**2*c2**2*n - 2*c1**3*l**2*n + 2*c0**3*c2*l
        + 3*c0*c2**2*m**3 + 3*c0**2*c1*m**2 + 3*c2*k*n**4 + 3*c2**2*l*n**3
        + 3*c2**3*m*n**2 + 4*c0*c2*n**3 + 4*c1**2*l**2*n**2 + 5*c0**2*k*m**3
        + 5*c0**3*k*l**2 + 5*c0**3*k**2*m + 5*c0**2*l**3*n + c0*c1*l**4*m
        + c0*c1**2*k**4*m + c0*c2**2*k**3*m**2 + c1*c2**3*m*n + c0**2*c1*k**3*m
        + c1*c2**2*k**2*n**2 + c1**3*c2*k*n + c1**2*c2*k*n**2
        + c0**2*c2*k**3*l**2 - c0*c2*l**3*m**2 - c0*c2**2*k*n**2
        - c0*c1**2*k**3*n - c0**2*c1*k**4*l - c0**2*c1*k**2*n - c1**2*c2**2*l*n
        - 8*c0*c1*c2*n**2 - 8*c0*c2*l**2*n**2 - 7*c0*c1**2*m*n
        - 7*c0**2*c2*k*m**2 - 5*c0*k*l*n**3 - 5*c0*l*m**3*n - 5*c1*c2*k*n**3
        - 5*c0**2*k**2*l*m**2 - 5*c0**2*k**2*l**2*n - 4*c1*k*m*n**3
        - 4*c1**3*k*m*n - 4*c1**2*l*m**2*n - 4*c1**2*k**2*l*n**2
        - 3*c0*c1*k**3*n**2 - 3*c0**2*c1*c2*m - 3*c1*c2**2*m**2*n
        - 3*c0**2*c2*k*l**3 - 3*c2*l*m*n**3 - 3*c2**3*k*l*n**2
        - 2*c1*c2**2*l*n**2 - 2*c0**2*c2*k**4*m - 2*c1**2*k**2*m**2*n
        + 2*c0*c1*k**2*m**3 + 2*c0*c2*l**4*n + 2*c0*c2**3*l*n
        + 2*c0*c1**2*l**2*m + 2*c0**2*c2*k**3*n + 2*c0**2*c2**2*k*m
        + 3*c1*c2*m**3*n + 3*c0**2*c2*l**2*m + 4*c0*c1*l*m**3 + 4*c0*c1**2*c2*n
        + 4*c0*c1**2*k*m**2 + 4*c1*l*m**2*n**2 + 4*c0**2*c1*k**2*l**2
        + 4*c1**3*k**2*l*n + 5*c0*k*m**2*n**2 + 5*c0*l**2*m*n**2
        + 5*c0**2*k*l**3*m + 5*c0**2*k**3*m*n + 6*c0**2*c1*l*n + 7*c0**2*c2*m*n
        + 8*c1**2*k*m*n**2 + 11*c0*c1*m*n**2 + c0*c1*c2*k**2*m**2
        + c0*c1*c2**2*l*m + c0**2*c1*c2*k*l + c1*c2*l**3*m*n
        + c1**2*c2*k**3*l*n - c0*c1*k*l**3*n - c0*c1**2*c2*k*m - c0*c2*k*m*n**2
        - c1*c2*k*l**2*n**2 - c1*c2**2*k**3*m*n - c1**2*c2*k**2*m*n
        - 13*c0*c1*k*m**2*n - 7*c0**2*c1*k*l*m - 6*c0*c2**2*l*m*n
        - 5*c0*c1*c2*l*m**2 - 4*c0*c1*k*l**2*m**2 - 4*c0*c1**2*k**2*l*m
        - 4*c0**2*c2*k*l*n - 3*c0*c1*c2**2*k*n - 3*c0*c1*l**2*m*n
        - 3*c0*c2*k**2*m**2*n - 3*c0*c2**2*k*l*m**2 - 3*c1**2*c2*k*l**2*n
        - 2*c0*c2**2*k**3*l*n - 2*c1*c2*l*m*n**2 + 2*c0*c1*k*l*n**2
        + 3*c0*c1*c2*k**4*n + 3*c0*c2*k*l*m**3 + 3*c0*c1**2*k*l*n
        + 3*c2**2*k*l*m*n**2 + 4*c0*c1*c2*l**2*n + 4*c1**2*k*l**2*m*n
        + 5*c1*c2*k**2*m*n**2 + 5*c1**2*c2*l*m*n + 5*c0**2*k*l*m*n
        + 6*c0*c2**2*k*l**2*n + 6*c0**2*c2*k**2*l*m + 7*c0*c2*k**2*l*n**2
        + 9*c0*c2*l*m**2*n - c0*c1*c2*k**3*l*m - 11*c0*c1*c2*k**2*l*n
        - 6*c0*c2*k*l**2*m*n - 3*c1*c2*k*l*m**2*n + 3*c0*c1*c2*k*l**2*m
        + 3*c1*c2**2*k*l*m*n + 7*c0*c1*k**2*l*m*n + 10*c0*c1*c2*k*m*n
    )
    return A2, B2
