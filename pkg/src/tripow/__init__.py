"""Exact search and certified analytic bounds for a^x + b^y = c^z
over primitive Pythagorean triples a = m^2 - n^2, b = 2mn, c = m^2 + n^2.
"""

__version__ = "0.1.0"
