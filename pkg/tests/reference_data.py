"""Frozen reference values used by the acceptance tests."""

# degree-3 block matrix [T O; X I], columns: 12 free monomials | 9 operation monomials
DEGREE3_MATRIX = [[1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
 [1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
 [0, 1, 0, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
 [0, 0, 0, 1, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
 [1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
 [0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
 [0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
 [0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
 [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
 [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1]]

DEGREE3_RCF = [[1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 0, 1, -1, 0, -2, -1, 0, 0, -2],
 [0, 1, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0],
 [0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
 [0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
 [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
 [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
 [0, 0, 0, 0, 0, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1, 0, -1, 0, 1, 1, -1],
 [0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0],
 [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0, 2, 2, 0, 0, 2],
 [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1]]

# 4*Q2 as (coefficient, generator, arguments)
Q2_TIMES_4 = [(3, 'Q1', 'abcd'),
 (-1, 'Q1', 'abdc'),
 (1, 'Q1', 'acbd'),
 (-1, 'Q1', 'acdb'),
 (3, 'Q1', 'adbc'),
 (-1, 'Q1', 'adcb'),
 (-1, 'Q1', 'bcad'),
 (-3, 'Q1', 'bdac'),
 (2, 'Q1', 'cadb'),
 (1, 'Q1', 'cbad'),
 (-2, 'Q1', 'cbda'),
 (-1, 'Q1', 'cdab'),
 (-2, 'Q1', 'dabc'),
 (2, 'Q1', 'dacb'),
 (3, 'Q1', 'dbac'),
 (-2, 'Q1', 'dbca'),
 (-1, 'Q1', 'dcab'),
 (-2, 'A1', 'adbc'),
 (2, 'A1', 'adcb'),
 (-1, 'A1', 'bcda'),
 (2, 'A1', 'bdac'),
 (-1, 'A1', 'bdca'),
 (-1, 'A1', 'cdba'),
 (2, 'A2', 'abcd'),
 (-2, 'A2', 'acbd'),
 (4, 'A2', 'acdb'),
 (-2, 'A2', 'bacd'),
 (2, 'A2', 'bcad'),
 (-2, 'A2', 'bdca'),
 (2, 'A2', 'cdba'),
 (4, 'A2', 'dacb'),
 (-2, 'A2', 'dbca'),
 (2, 'A3', 'acbd'),
 (2, 'A3', 'adbc'),
 (2, 'A5', 'abcd'),
 (2, 'A5', 'abdc'),
 (-1, 'A5', 'bacd'),
 (-1, 'A5', 'badc'),
 (1, 'A5', 'cabd'),
 (1, 'A5', 'cadb'),
 (-2, 'A5', 'cbda'),
 (1, 'A5', 'dabc'),
 (-1, 'A5', 'dacb'),
 (2, 'A6', 'abcd'),
 (-2, 'A6', 'acbd'),
 (2, 'A6', 'bcad'),
 (-1, 'T1', 'abcd'),
 (1, 'T1', 'abdc'),
 (-1, 'T1', 'acdb'),
 (2, 'T1', 'bacd'),
 (-1, 'T2', 'abcd'),
 (-1, 'T2', 'abdc'),
 (-1, 'T2', 'acdb'),
 (1, 'T2', 'bcda')]

# 30 * (degree-5 identity) as a combination of T and F consequences
SPECIAL_CERTIFICATE_TIMES_30 = [(3, 'T((ab)a,a,a)'),
 (-12, 'T((aa)b,a,a)'),
 (6, 'T((aa)a,a,b)'),
 (3, 'T((ba)a,a,a)'),
 (6, 'T(aa,ab,a)'),
 (-12, 'T(aa,aa,b)'),
 (6, 'T(aa,ba,a)'),
 (3, 'T(a(ab),a,a)'),
 (3, 'T(a(ba),a,a)'),
 (6, 'T(a(aa),a,b)'),
 (-12, 'T(b(aa),a,a)'),
 (3, 'T(aa,a,a)b'),
 (-12, 'T(ab,a,a)a'),
 (6, 'T(aa,a,b)a'),
 (3, 'T(ba,a,a)a'),
 (-3, 'bT(aa,a,a)'),
 (12, 'aT(ab,a,a)'),
 (-6, 'aT(aa,a,b)'),
 (-3, 'aT(ba,a,a)'),
 (2, '(T(a,a,a)a)b'),
 (7, '(T(a,a,a)b)a'),
 (-9, '(T(a,a,b)a)a'),
 (-2, 'b(T(a,a,a)a)'),
 (-7, 'a(T(a,a,a)b)'),
 (9, 'a(T(a,a,b)a)'),
 (-1, 'F(a,a,a,a)b'),
 (1, 'F(a,a,a,b)a'),
 (1, 'bF(a,a,a,a)'),
 (-1, 'aF(a,a,a,b)')]
