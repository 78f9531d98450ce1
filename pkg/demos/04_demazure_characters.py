# Demazure characters from right keys, checked against divided differences.
#
# Run: python3 demos/04_demazure_characters.py
from rightkey import Partition
from rightkey.demazure import (
    demazure_character,
    demazure_members,
    divided_difference_character,
    full_character,
)
from rightkey.permutation import coset_representatives, length, longest_coset_rep, reduced_word

p = Partition((2, 1), 3)
print(f"lambda = {p.parts}, n = {p.n}")
for w in sorted(coset_representatives(p), key=length):
    d = demazure_character(p, w)
    oracle = divided_difference_character(p, w)
    members = sum(1 for _ in demazure_members(p, w))
    print(f"  w={w}  word={reduced_word(w)}  |D|={members}")
    print(f"    {d}")
    assert d == oracle

# The top character sums over every tableau of the shape: the Schur polynomial.
top = longest_coset_rep(p)
print("\nfull sum equals top character:", full_character(p) == demazure_character(p, top))
