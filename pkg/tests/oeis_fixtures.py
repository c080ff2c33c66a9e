"""Frozen 12-term OEIS prefixes, generated by direct definitional recurrences
(first-order steps, partial sums, and the t' = 2t + alpha transform) before
the library's closed forms were written.

Each entry maps the OEIS id to ``(first_index, terms)`` where ``terms[i]``
is the sequence value at OEIS index ``first_index + i``.
"""

OEIS_PREFIXES = {
    "A000225": (0, [0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047]),
    "A000295": (0, [0, 0, 1, 4, 11, 26, 57, 120, 247, 502, 1013, 2036]),
    "A000337": (0, [0, 1, 5, 17, 49, 129, 321, 769, 1793, 4097, 9217, 20481]),
    "A000340": (0, [1, 5, 18, 58, 179, 543, 1636, 4916, 14757, 44281, 132854, 398574]),
    "A000918": (0, [-1, 0, 2, 6, 14, 30, 62, 126, 254, 510, 1022, 2046]),
    "A000975": (0, [0, 1, 2, 5, 10, 21, 42, 85, 170, 341, 682, 1365]),
    "A001045": (0, [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683]),
    "A001787": (0, [0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264]),
    "A003462": (0, [0, 1, 4, 13, 40, 121, 364, 1093, 3280, 9841, 29524, 88573]),
    "A008466": (1, [0, 1, 3, 8, 19, 43, 94, 201, 423, 880, 1815, 3719]),
    "A008776": (0, [2, 6, 18, 54, 162, 486, 1458, 4374, 13122, 39366, 118098, 354294]),
    "A024023": (0, [0, 2, 8, 26, 80, 242, 728, 2186, 6560, 19682, 59048, 177146]),
    "A045883": (0, [0, 1, 3, 9, 23, 57, 135, 313, 711, 1593, 3527, 7737]),
    "A047520": (0, [0, 1, 6, 21, 58, 141, 318, 685, 1434, 2949, 5998, 12117]),
    "A048473": (0, [1, 5, 17, 53, 161, 485, 1457, 4373, 13121, 39365, 118097, 354293]),
    "A078008": (0, [1, 0, 2, 2, 6, 10, 22, 42, 86, 170, 342, 682]),
    "A081254": (1, [1, 3, 6, 13, 26, 53, 106, 213, 426, 853, 1706, 3413]),
    "A084170": (0, [1, 2, 6, 12, 26, 52, 106, 212, 426, 852, 1706, 3412]),
    "A084639": (0, [0, 1, 4, 9, 20, 41, 84, 169, 340, 681, 1364, 2729]),
    "A094706": (0, [0, 1, 4, 13, 38, 105, 280, 729, 1866, 4717, 11812, 29365]),
    "A101622": (0, [0, 1, 6, 13, 30, 61, 126, 253, 510, 1021, 2046, 4093]),
    "A102301": (0, [1, 4, 13, 36, 93, 228, 541, 1252, 2845, 6372, 14109, 30948]),
    "A140429": (1, [1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147]),
    "A141023": (0, [0, 0, 3, 6, 15, 30, 63, 126, 255, 510, 1023, 2046]),
    "A167030": (1, [0, 0, 2, 4, 10, 20, 42, 84, 170, 340, 682, 1364]),
    "A178420": (1, [0, 1, 3, 8, 18, 39, 81, 166, 336, 677, 1359, 2724]),
    "A213575": (0, [0, 1, 10, 47, 158, 441, 1098, 2539, 5590, 11909, 24818, 50967]),
}
