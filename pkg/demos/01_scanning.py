# Scanning paths and the right key of a tableau.
#
# Run: python3 demos/01_scanning.py
from rightkey import parse_tableau
from rightkey.scanning import annotate_paths, scanning_paths, scanning_tableau, sigma, u_set
from rightkey.shape import Location

t = parse_tableau("1 1 5 8 / 2 3 7 9 / 4 7 9 / 5 8 / 6 / 8 / 9", n=9)
print("T =")
print(t)

# Paths starting in column 1. Each cell is tagged with the row its path started in.
print("\npaths from column 1:")
print(annotate_paths(t, 1))
for path in scanning_paths(t, 1):
    print(f"  P(T;1,{path.origin.row}) =", [tuple(c) for c in path.cells])

# The scanning tableau collects the last value of every path; it is always a key.
s = scanning_tableau(t)
print("\nS(T) =")
print(s)
print("sigma_T =", sigma(t))

# Most recent values of the column-1 paths, just before (3,2) in reading order.
print("\nU(T;1,3,2) =", sorted(u_set(t, 1, Location(3, 2))))
