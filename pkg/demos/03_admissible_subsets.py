# Tableaux as admissible subsets of the transposition list Gamma, and back.
#
# Run: python3 demos/03_admissible_subsets.py
from rightkey import Partition, enumerate_ssyt, parse_tableau
from rightkey.alcove import admissible_subset, enumerate_admissible, gamma, tableau_from_admissible

t = parse_tableau("1 1 5 8 / 2 3 7 9 / 4 7 9 / 5 8 / 6 / 8 / 9", n=9)
gam = gamma(t.shape)
subset = admissible_subset(t)
print(f"|Gamma| = {len(gam)}, |J_T| = {len(subset)}")
print("J_T =", subset.indices)
print("used transpositions:", [gam[x - 1] for x in subset.indices])
print("round trip ok:", tableau_from_admissible(t.shape, subset) == t)

# For a small shape, list every admissible subset next to the tableau it encodes.
p = Partition((2, 1), 3)
print(f"\nGamma{p.parts[:2]} =", gamma(p))
subsets = list(enumerate_admissible(p))
for s in subsets:
    rows = " / ".join(" ".join(map(str, r)) for r in tableau_from_admissible(p, s).rows)
    print(f"  {str(s.indices):14} -> {rows}")
print("subsets:", len(subsets), " tableaux:", sum(1 for _ in enumerate_ssyt(p)))
