"""Regularity and a-invariant of a single permutation pair, three ways.

The pair below indexes a variety whose regularity is 4 and whose
a-invariant is -10.  The degree of its unspecialized Grothendieck
polynomial is computed by the direct diagram construction, by the
peel-off recurrence, and by brute-force closure search; all three agree.
"""

from klreg import Permutation, coxeter_length, groth_degree, groth_degree_recursive, zip_result
from klreg.oracle import max_closure_size

v = Permutation((5, 8, 9, 10, 1, 2, 11, 3, 4, 6, 7))
w = Permutation((1, 4, 5, 8, 2, 3, 9, 6, 10, 11, 7))

result = zip_result(v, w)
print(f"v = {v.word}   length {coxeter_length(v)}")
print(f"w = {w.word}   length {coxeter_length(w)}")
print()
print(f"degree by slid diagram:  {groth_degree(v, w)}")
print(f"degree by recurrence:    {groth_degree_recursive(v, w)}")
print(f"degree by move closure:  {max_closure_size(v, w)}")
print()
print(f"regularity  = degree - length(w) = {result.regularity}")
print(f"a-invariant = degree - length(v) = {result.a_invariant}")
