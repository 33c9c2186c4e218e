"""Frozen reference designs used by the regression and acceptance suites.

Element cells are canonical text forms; integer cells are level codes.
"""

RH_NOA_P2_U123_K2 = [
    ('0', '0', '0'),
    ('0', '1', '1'),
    ('1', '0', '1'),
    ('1', '1', '0'),
    ('0', 'x', 'x'),
    ('0', 'x+1', 'x+1'),
    ('1', 'x', 'x+1'),
    ('1', 'x+1', 'x'),
    ('x', '0', 'x'),
    ('x', '1', 'x+1'),
    ('x+1', '0', 'x+1'),
    ('x+1', '1', 'x'),
    ('x', 'x', '0'),
    ('x', 'x+1', '1'),
    ('x+1', 'x', '1'),
    ('x+1', 'x+1', '0'),
    ('0', 'x^2', 'x^2'),
    ('0', 'x^2+1', 'x^2+1'),
    ('1', 'x^2', 'x^2+1'),
    ('1', 'x^2+1', 'x^2'),
    ('0', 'x^2+x', 'x^2+x'),
    ('0', 'x^2+x+1', 'x^2+x+1'),
    ('1', 'x^2+x', 'x^2+x+1'),
    ('1', 'x^2+x+1', 'x^2+x'),
    ('x', 'x^2', 'x^2+x'),
    ('x', 'x^2+1', 'x^2+x+1'),
    ('x+1', 'x^2', 'x^2+x+1'),
    ('x+1', 'x^2+1', 'x^2+x'),
    ('x', 'x^2+x', 'x^2'),
    ('x', 'x^2+x+1', 'x^2+1'),
    ('x+1', 'x^2+x', 'x^2+1'),
    ('x+1', 'x^2+x+1', 'x^2'),
    ('x^2', '0', 'x^2'),
    ('x^2', '1', 'x^2+1'),
    ('x^2+1', '0', 'x^2+1'),
    ('x^2+1', '1', 'x^2'),
    ('x^2', 'x', 'x^2+x'),
    ('x^2', 'x+1', 'x^2+x+1'),
    ('x^2+1', 'x', 'x^2+x+1'),
    ('x^2+1', 'x+1', 'x^2+x'),
    ('x^2+x', '0', 'x^2+x'),
    ('x^2+x', '1', 'x^2+x+1'),
    ('x^2+x+1', '0', 'x^2+x+1'),
    ('x^2+x+1', '1', 'x^2+x'),
    ('x^2+x', 'x', 'x^2'),
    ('x^2+x', 'x+1', 'x^2+1'),
    ('x^2+x+1', 'x', 'x^2+1'),
    ('x^2+x+1', 'x+1', 'x^2'),
    ('x^2', 'x^2', '0'),
    ('x^2', 'x^2+1', '1'),
    ('x^2+1', 'x^2', '1'),
    ('x^2+1', 'x^2+1', '0'),
    ('x^2', 'x^2+x', 'x'),
    ('x^2', 'x^2+x+1', 'x+1'),
    ('x^2+1', 'x^2+x', 'x+1'),
    ('x^2+1', 'x^2+x+1', 'x'),
    ('x^2+x', 'x^2', 'x'),
    ('x^2+x', 'x^2+1', 'x+1'),
    ('x^2+x+1', 'x^2', 'x+1'),
    ('x^2+x+1', 'x^2+1', 'x'),
    ('x^2+x', 'x^2+x', '0'),
    ('x^2+x', 'x^2+x+1', '1'),
    ('x^2+x+1', 'x^2+x', '1'),
    ('x^2+x+1', 'x^2+x+1', '0'),
]

KRON_NDM_GF4_Z3_Z2 = [
    ('0', '0', '0'),
    ('0', '1', 'x'),
    ('0', 'x', 'x+1'),
    ('0', 'x+1', '1'),
    ('0', 'w', '2w'),
    ('0', '1+w', 'x+2w'),
    ('0', 'x+w', 'x+1+2w'),
    ('0', 'x+1+w', '1+2w'),
    ('0', '2w', 'w'),
    ('0', '1+2w', 'x+w'),
    ('0', 'x+2w', 'x+1+w'),
    ('0', 'x+1+2w', '1+w'),
    ('0', '0', 'w2'),
    ('0', '1', 'x+w2'),
    ('0', 'x', 'x+1+w2'),
    ('0', 'x+1', '1+w2'),
    ('0', 'w', '2w+w2'),
    ('0', '1+w', 'x+2w+w2'),
    ('0', 'x+w', 'x+1+2w+w2'),
    ('0', 'x+1+w', '1+2w+w2'),
    ('0', '2w', 'w+w2'),
    ('0', '1+2w', 'x+w+w2'),
    ('0', 'x+2w', 'x+1+w+w2'),
    ('0', 'x+1+2w', '1+w+w2'),
    ('0', 'w2', '0'),
    ('0', '1+w2', 'x'),
    ('0', 'x+w2', 'x+1'),
    ('0', 'x+1+w2', '1'),
    ('0', 'w+w2', '2w'),
    ('0', '1+w+w2', 'x+2w'),
    ('0', 'x+w+w2', 'x+1+2w'),
    ('0', 'x+1+w+w2', '1+2w'),
    ('0', '2w+w2', 'w'),
    ('0', '1+2w+w2', 'x+w'),
    ('0', 'x+2w+w2', 'x+1+w'),
    ('0', 'x+1+2w+w2', '1+w'),
    ('0', 'w2', 'w2'),
    ('0', '1+w2', 'x+w2'),
    ('0', 'x+w2', 'x+1+w2'),
    ('0', 'x+1+w2', '1+w2'),
    ('0', 'w+w2', '2w+w2'),
    ('0', '1+w+w2', 'x+2w+w2'),
    ('0', 'x+w+w2', 'x+1+2w+w2'),
    ('0', 'x+1+w+w2', '1+2w+w2'),
    ('0', '2w+w2', 'w+w2'),
    ('0', '1+2w+w2', 'x+w+w2'),
    ('0', 'x+2w+w2', 'x+1+w+w2'),
    ('0', 'x+1+2w+w2', '1+w+w2'),
]

RELABELED_NESTED_M3 = [
    (4, 5, 2),
    (4, 2, 6),
    (1, 5, 6),
    (1, 2, 2),
    (4, 0, 1),
    (4, 7, 4),
    (1, 0, 4),
    (1, 7, 1),
    (2, 5, 1),
    (2, 2, 4),
    (7, 5, 4),
    (7, 2, 1),
    (2, 0, 2),
    (2, 7, 6),
    (7, 0, 6),
    (7, 7, 2),
    (4, 3, 3),
    (4, 4, 5),
    (1, 3, 5),
    (1, 4, 3),
    (4, 1, 7),
    (4, 6, 0),
    (1, 1, 0),
    (1, 6, 7),
    (2, 3, 7),
    (2, 4, 0),
    (7, 3, 0),
    (7, 4, 7),
    (2, 1, 3),
    (2, 6, 5),
    (7, 1, 5),
    (7, 6, 3),
    (6, 5, 3),
    (6, 2, 5),
    (5, 5, 5),
    (5, 2, 3),
    (6, 0, 7),
    (6, 7, 0),
    (5, 0, 0),
    (5, 7, 7),
    (3, 5, 7),
    (3, 2, 0),
    (0, 5, 0),
    (0, 2, 7),
    (3, 0, 3),
    (3, 7, 5),
    (0, 0, 5),
    (0, 7, 3),
    (6, 3, 2),
    (6, 4, 6),
    (5, 3, 6),
    (5, 4, 2),
    (6, 1, 1),
    (6, 6, 4),
    (5, 1, 4),
    (5, 6, 1),
    (3, 3, 1),
    (3, 4, 4),
    (0, 3, 4),
    (0, 4, 1),
    (3, 1, 2),
    (3, 6, 6),
    (0, 1, 6),
    (0, 6, 2),
]

RELABELED_SLICED_M = [
    (0, 7, 0),
    (0, 1, 4),
    (7, 7, 4),
    (7, 1, 0),
    (0, 5, 3),
    (0, 2, 7),
    (7, 5, 7),
    (7, 2, 3),
    (2, 7, 3),
    (2, 1, 7),
    (5, 7, 7),
    (5, 1, 3),
    (2, 5, 0),
    (2, 2, 4),
    (5, 5, 4),
    (5, 2, 0),
    (0, 6, 1),
    (0, 0, 5),
    (7, 6, 5),
    (7, 0, 1),
    (0, 4, 2),
    (0, 3, 6),
    (7, 4, 6),
    (7, 3, 2),
    (2, 6, 2),
    (2, 0, 6),
    (5, 6, 6),
    (5, 0, 2),
    (2, 4, 1),
    (2, 3, 5),
    (5, 4, 5),
    (5, 3, 1),
    (1, 7, 1),
    (1, 1, 5),
    (6, 7, 5),
    (6, 1, 1),
    (1, 5, 2),
    (1, 2, 6),
    (6, 5, 6),
    (6, 2, 2),
    (3, 7, 2),
    (3, 1, 6),
    (4, 7, 6),
    (4, 1, 2),
    (3, 5, 1),
    (3, 2, 5),
    (4, 5, 5),
    (4, 2, 1),
    (1, 6, 0),
    (1, 0, 4),
    (6, 6, 4),
    (6, 0, 0),
    (1, 4, 3),
    (1, 3, 7),
    (6, 4, 7),
    (6, 3, 3),
    (3, 6, 3),
    (3, 0, 7),
    (4, 6, 7),
    (4, 0, 3),
    (3, 4, 0),
    (3, 3, 4),
    (4, 4, 4),
    (4, 3, 0),
]

QUAL_OA_16_RUNS = [
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 3, 3),
    (0, 0, 0, 3, 1, 2),
    (0, 0, 0, 3, 2, 1),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 3, 1),
    (0, 1, 1, 1, 2, 3),
    (0, 1, 1, 1, 1, 0),
    (1, 0, 1, 2, 2, 0),
    (1, 0, 1, 2, 1, 3),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 3, 2),
    (1, 1, 0, 0, 2, 2),
    (1, 1, 0, 0, 1, 1),
    (1, 1, 0, 3, 0, 3),
    (1, 1, 0, 3, 3, 0),
]

COMPOSED_QUAL_COLUMNS = [
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 3, 3),
    (0, 0, 0, 0, 3, 3),
    (0, 0, 0, 0, 3, 3),
    (0, 0, 0, 0, 3, 3),
    (0, 0, 0, 3, 1, 2),
    (0, 0, 0, 3, 1, 2),
    (0, 0, 0, 3, 1, 2),
    (0, 0, 0, 3, 1, 2),
    (0, 0, 0, 3, 2, 1),
    (0, 0, 0, 3, 2, 1),
    (0, 0, 0, 3, 2, 1),
    (0, 0, 0, 3, 2, 1),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 0, 2),
    (0, 1, 1, 2, 3, 1),
    (0, 1, 1, 2, 3, 1),
    (0, 1, 1, 2, 3, 1),
    (0, 1, 1, 2, 3, 1),
    (0, 1, 1, 1, 2, 3),
    (0, 1, 1, 1, 2, 3),
    (0, 1, 1, 1, 2, 3),
    (0, 1, 1, 1, 2, 3),
    (0, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 0),
    (1, 0, 1, 2, 2, 0),
    (1, 0, 1, 2, 2, 0),
    (1, 0, 1, 2, 2, 0),
    (1, 0, 1, 2, 2, 0),
    (1, 0, 1, 2, 1, 3),
    (1, 0, 1, 2, 1, 3),
    (1, 0, 1, 2, 1, 3),
    (1, 0, 1, 2, 1, 3),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 3, 2),
    (1, 0, 1, 1, 3, 2),
    (1, 0, 1, 1, 3, 2),
    (1, 0, 1, 1, 3, 2),
    (1, 1, 0, 0, 2, 2),
    (1, 1, 0, 0, 2, 2),
    (1, 1, 0, 0, 2, 2),
    (1, 1, 0, 0, 2, 2),
    (1, 1, 0, 0, 1, 1),
    (1, 1, 0, 0, 1, 1),
    (1, 1, 0, 0, 1, 1),
    (1, 1, 0, 0, 1, 1),
    (1, 1, 0, 3, 0, 3),
    (1, 1, 0, 3, 0, 3),
    (1, 1, 0, 3, 0, 3),
    (1, 1, 0, 3, 0, 3),
    (1, 1, 0, 3, 3, 0),
    (1, 1, 0, 3, 3, 0),
    (1, 1, 0, 3, 3, 0),
    (1, 1, 0, 3, 3, 0),
]

KRON_SOA_INPUT_A1 = [
    (0, 0, 5),
    (0, 1, 3),
    (0, 2, 4),
    (0, 3, 1),
    (0, 4, 2),
    (0, 5, 0),
    (1, 0, 3),
    (1, 1, 2),
    (1, 2, 1),
    (1, 3, 0),
    (1, 4, 4),
    (1, 5, 5),
    (2, 0, 0),
    (2, 1, 5),
    (2, 2, 2),
    (2, 3, 4),
    (2, 4, 3),
    (2, 5, 1),
    (3, 0, 2),
    (3, 1, 1),
    (3, 2, 3),
    (3, 3, 5),
    (3, 4, 0),
    (3, 5, 4),
    (4, 0, 1),
    (4, 1, 4),
    (4, 2, 0),
    (4, 3, 3),
    (4, 4, 5),
    (4, 5, 2),
    (5, 0, 4),
    (5, 1, 0),
    (5, 2, 5),
    (5, 3, 2),
    (5, 4, 1),
    (5, 5, 3),
]

KRON_SOA_INPUT_A2 = [
    ('0', '0', '0'),
    ('0', 'w', 'w'),
    ('w', '0', 'w'),
    ('w', 'w', '0'),
]
