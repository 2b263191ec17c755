"""Generalized binomial coefficients over the integers.

C(a, b) follows the convention used throughout the dimension formulas:
zero for b < 0, and the falling-factorial quotient a(a-1)...(a-b+1)/b!
for b >= 0 with *any* integer a (negative upper index included).  For
0 <= a < b this gives 0, matching math.comb.
"""

from math import comb, factorial


def binomial(a: int, b: int) -> int:
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)
