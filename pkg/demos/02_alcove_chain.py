# The greedy chain of permutations attached to a tableau, coarse and saturated.
#
# Run: python3 demos/02_alcove_chain.py
from rightkey import parse_tableau
from rightkey.alcove import alcove_permutation, location_chain, saturated_chain
from rightkey.permutation import length
from rightkey.scanning import sigma

t = parse_tableau("1 1 5 8 / 2 3 7 9 / 4 7 9 / 5 8 / 6 / 8 / 9", n=9)

# One permutation per location: (1,1), then every cell of columns 2 onward.
print("location chain:")
for entry in location_chain(t):
    print(f"  {str(tuple(entry.label)):8} {entry.perm}")

# Every greedy step splits into single transpositions, each raising the length by one.
print("\nsaturated chain:")
for entry in saturated_chain(t):
    swap = f"  swap {entry.transposition}" if entry.transposition else ""
    print(f"  {str(entry.label):10} {entry.perm}  length={length(entry.perm)}{swap}")

pi = alcove_permutation(t)
print("\npi_T    =", pi)
print("sigma_T =", sigma(t))
print("equal:", pi == sigma(t))
