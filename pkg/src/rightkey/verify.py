"""
Exhaustive and randomized consistency suites.

Each suite returns a :class:`SuiteResult`; a failure is recorded with a short
message rather than raised, so one run reports every problem. The command
line ``verify`` subcommand and the acceptance tests both drive these.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .alcove import (
    admissible_subset,
    alcove_permutation,
    chain_end,
    enumerate_admissible,
    location_chain,
    saturated_chain,
    tableau_from_admissible,
)
from .demazure import (
    demazure_character,
    demazure_members,
    admissible_members,
    divided_difference_character,
    full_character,
    minimal_defining_chain,
)
from .permutation import (
    Permutation,
    all_permutations,
    bruhat_leq,
    coset_representatives,
    identity,
    is_min_coset_rep,
    key_to_permutation,
    length,
    longest_coset_rep,
)
from .scanning import (
    most_recent,
    path_containing,
    scanning_paths,
    scanning_tableau,
    sigma,
    u_set,
)
from .shape import Location, Partition, all_shapes, partitions_of, reading_leq, reading_lt
from .tableau import Tableau, enumerate_ssyt, is_key, key_leq, key_of_permutation, parse_tableau

WORKED_TABLEAU = "1 1 5 8 / 2 3 7 9 / 4 7 9 / 5 8 / 6 / 8 / 9"
WORKED_N = 9
WORKED_CHAIN = (
    (1, 2, 4, 5, 6, 8, 9, 3, 7),
    (1, 2, 4, 8, 5, 6, 9, 3, 7),
    (1, 2, 7, 8, 4, 5, 9, 3, 6),
    (1, 3, 7, 8, 4, 5, 9, 2, 6),
    (1, 3, 7, 8, 4, 5, 9, 2, 6),
    (1, 3, 9, 7, 4, 5, 8, 2, 6),
    (1, 7, 9, 3, 4, 5, 8, 2, 6),
    (5, 7, 9, 1, 3, 4, 8, 2, 6),
    (5, 9, 7, 1, 3, 4, 8, 2, 6),
    (8, 9, 5, 1, 3, 4, 7, 2, 6),
)
WORKED_SCANNING = "1 1 5 8 / 3 5 8 9 / 4 8 9 / 5 9 / 7 / 8 / 9"


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    messages: list[str] = field(default_factory=list)

    def check(self, ok: bool, msg: Callable[[], str] | str = "") -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.messages) < 20:
                self.messages.append(msg() if callable(msg) else msg)
        return ok

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        return f"suite={self.name} cases={self.cases} failures={self.failures}"


def worked_tableau() -> Tableau:
    return parse_tableau(WORKED_TABLEAU, WORKED_N)


def _tableaux(max_n: int, max_cells: int) -> Iterator[Tableau]:
    for p in all_shapes(max_n, max_cells):
        yield from enumerate_ssyt(p)


def suite_worked_example() -> SuiteResult:
    res = SuiteResult("worked_example")
    t = worked_tableau()
    chain = location_chain(t)
    res.check(chain[0].perm.images == WORKED_CHAIN[0], "pi^(1,1)")
    res.check(tuple(e.perm.images for e in chain) == WORKED_CHAIN, "location chain")
    res.check(alcove_permutation(t).images == WORKED_CHAIN[-1], "pi_T")
    sat = {str(e.label): e.perm.images for e in saturated_chain(t)}
    res.check(sat.get("(2,4;1)") == (1, 2, 5, 8, 4, 6, 9, 3, 7), "pi^(2,4;1)")
    res.check(sat.get("(2,4;2)") == (1, 2, 6, 8, 4, 5, 9, 3, 7), "pi^(2,4;2)")
    res.check(scanning_tableau(t) == parse_tableau(WORKED_SCANNING, WORKED_N), "S(T)")
    res.check(sigma(t).images == WORKED_CHAIN[-1], "sigma_T")
    res.check(u_set(t, 1, Location(3, 2)) == {1, 3, 4, 5, 7, 8, 9}, "U(T;1,3,2)")
    wanted = tuple(WORKED_CHAIN[k] for k in (0, 4, 7, 9))
    res.check(tuple(u.images for u in minimal_defining_chain(t)) == wanted, "minimal defining chain")
    return res


def suite_pi_equals_sigma(max_n: int = 5, max_cells: int = 6) -> SuiteResult:
    """pi_T = sigma_T, Y(pi_T) = S(T), S(T) is a key and pi_T is a minimal coset representative."""
    res = SuiteResult("pi_equals_sigma")
    for t in _tableaux(max_n, max_cells):
        pi = alcove_permutation(t)
        s = scanning_tableau(t)
        res.check(is_key(s), lambda: f"S(T) not a key for\n{t}")
        res.check(is_min_coset_rep(pi, t.shape), lambda: f"pi_T={pi} not in S_n^lambda for\n{t}")
        res.check(key_of_permutation(t.shape, pi) == s, lambda: f"Y(pi_T) != S(T) for\n{t}")
        if is_key(s):
            res.check(pi == key_to_permutation(s), lambda: f"pi_T={pi} != sigma_T for\n{t}")
    return res


def suite_saturation(max_n: int = 5, max_cells: int = 6) -> SuiteResult:
    """B_T is saturated from the identity; J_T and T_J are mutually inverse."""
    res = SuiteResult("saturation")
    for p in all_shapes(max_n, max_cells):
        count = 0
        for t in enumerate_ssyt(p):
            count += 1
            chain = saturated_chain(t)
            perms = [e.perm for e in chain]
            res.check(perms[0] == identity(p.n), "chain does not start at identity")
            steps_ok = all(
                length(b) == length(a) + 1 and bruhat_leq(a, b) for a, b in zip(perms, perms[1:])
            )
            res.check(steps_ok, lambda: f"unsaturated chain for\n{t}")
            res.check(perms[-1] == alcove_permutation(t), lambda: f"B_T ends away from pi_T for\n{t}")
            subset = admissible_subset(t)
            res.check(length(perms[-1]) == len(subset), lambda: f"|J_T| != length(pi_T) for\n{t}")
            res.check(tableau_from_admissible(p, subset) == t, lambda: f"T_(J_T) != T for\n{t}")
        n_subsets = 0
        for subset in enumerate_admissible(p):
            n_subsets += 1
            back = admissible_subset(tableau_from_admissible(p, subset))
            res.check(back == subset, lambda: f"J_(T_J) != J for {subset.indices} in {p}")
        res.check(n_subsets == count, lambda: f"{n_subsets} admissible subsets vs {count} tableaux for {p}")
    return res


def suite_chain_blocks(max_n: int = 4, max_cells: int = 6) -> SuiteResult:
    """Block-increase of every chain entry, prefix independence and the minimal defining chain."""
    res = SuiteResult("chain_blocks")
    for t in _tableaux(max_n, max_cells):
        prof = t.shape.profile
        chain = location_chain(t)
        for entry in chain:
            for h in range(1, prof.d + 2):
                if reading_leq(Location(prof.beta(h), 1), entry.label):
                    block = [entry.perm(k) for k in range(prof.zeta(h - 1) + 1, prof.zeta(h) + 1)]
                    res.check(
                        all(a < b for a, b in zip(block, block[1:])),
                        lambda: f"block {h} not increasing at {entry.label} for\n{t}",
                    )
        mdc = minimal_defining_chain(t)
        for j, w in enumerate(mdc, start=1):
            tj = t.truncate(j)
            res.check(w == alcove_permutation(tj), lambda: f"pi^({j},1) != pi of truncation for\n{t}")
            res.check(w == key_to_permutation(scanning_tableau(tj)), lambda: f"w^{j} != canonical lift for\n{t}")
    return res


def suite_pi_equals_u(max_n: int = 4, max_cells: int = 6) -> SuiteResult:
    """Prefix sets of chain permutations equal the U-sets of the scanning paths."""
    res = SuiteResult("pi_equals_u")
    for t in _tableaux(max_n, max_cells):
        prof = t.shape.profile
        chain = location_chain(t)
        for h in range(1, prof.d + 1):
            beta, zeta = prof.beta(h), prof.zeta(h)
            paths = scanning_paths(t, beta)
            for entry in chain:
                if not reading_leq(Location(beta, 1), entry.label):
                    continue
                prefix = set(entry.perm.images[:zeta])
                u = u_set(t, beta, entry.label, paths)
                res.check(prefix == u, lambda: f"h={h} at {entry.label}: {sorted(prefix)} != {sorted(u)} for\n{t}")
    return res


def _check_most_recent(res: SuiteResult, t: Tableau) -> None:
    width = t.shape.width
    for l in range(1, width):
        paths = scanning_paths(t, l)
        c_l = t.shape.c(l)
        for loc in t.shape.cells():
            if not reading_lt(Location(l, 1), loc):
                continue
            recent = {k: most_recent(t, paths, l, k, loc)[1] for k in range(1, c_l + 1)}
            res.check(
                all(recent[k - 1] < recent[k] for k in range(2, c_l + 1)),
                lambda: f"recent values not decreasing in k: l={l} loc={loc} {recent} for\n{t}",
            )
            owner = path_containing(paths, loc)
            eligible = [k for k in recent if recent[k] <= t[loc]]
            best = max(eligible, key=lambda k: recent[k]) if eligible else None
            res.check(
                owner is not None and owner.origin.row == best,
                lambda: f"path containing {loc} from column {l} is not the best candidate for\n{t}",
            )


def random_partition(rng: random.Random, n: int, max_cells: int) -> Partition:
    size = rng.randint(1, max_cells)
    shapes = list(partitions_of(size, n - 1))
    return Partition(rng.choice(shapes), n)


def random_tableau(rng: random.Random, p: Partition) -> Tableau:
    """Fill column by column, each cell uniform over the values that keep the filling completable."""
    n = p.n
    cols: list[list[int]] = []
    for j, c in enumerate(p.columns):
        col: list[int] = []
        for i in range(c):
            lo = 1
            if i:
                lo = col[-1] + 1
            if j:
                lo = max(lo, cols[j - 1][i])
            hi = n - (c - 1 - i)
            col.append(rng.randint(lo, hi))
        cols.append(col)
    return Tableau(p, tuple(map(tuple, cols)))


def suite_most_recent(
    max_n: int = 4,
    max_cells: int = 6,
    random_cases: int = 10_000,
    random_max_n: int = 7,
    random_max_cells: int = 12,
    seed: int = 0,
) -> SuiteResult:
    """Strict decrease of most recent values in k, and which path picks up each cell."""
    res = SuiteResult("most_recent")
    for t in _tableaux(max_n, max_cells):
        _check_most_recent(res, t)
    rng = random.Random(seed)
    for _ in range(random_cases):
        n = rng.randint(2, random_max_n)
        t = random_tableau(rng, random_partition(rng, n, random_max_cells))
        _check_most_recent(res, t)
    return res


def suite_generating_sets(max_n: int = 4, max_cells: int = 6) -> SuiteResult:
    """D(lambda, w) = A(lambda, w) by three routes, and both membership tests agree per tableau."""
    res = SuiteResult("generating_sets")
    for p in all_shapes(max_n, max_cells):
        tabs = list(enumerate_ssyt(p))
        keys = {t: scanning_tableau(t) for t in tabs}
        pis = {t: alcove_permutation(t) for t in tabs}
        subsets = [(chain_end(p, J), tableau_from_admissible(p, J)) for J in enumerate_admissible(p)]
        for w in coset_representatives(p):
            top = key_of_permutation(p, w)
            by_key = {t for t in tabs if key_leq(keys[t], top)}
            by_pi = {t for t in tabs if bruhat_leq(pis[t], w)}
            by_subsets = {tj for end, tj in subsets if bruhat_leq(end, w)}
            for t in tabs:
                res.check((t in by_key) == (t in by_pi), lambda: f"criteria disagree, w={w}\n{t}")
            res.check(by_key == by_subsets, lambda: f"D != A (subsets) for {p}, w={w}")
            res.check(set(demazure_members(p, w)) == by_key, lambda: f"demazure_members wrong for {p}, w={w}")
            res.check(set(admissible_members(p, w)) == by_pi, lambda: f"admissible_members wrong for {p}, w={w}")
    return res


def suite_character_oracle(max_n: int = 4, max_cells: int = 6) -> SuiteResult:
    """Tableau sums against isobaric divided differences, and the top character against the full sum."""
    res = SuiteResult("character_oracle")
    for p in all_shapes(max_n, max_cells):
        top = longest_coset_rep(p)
        for w in coset_representatives(p):
            d = demazure_character(p, w)
            res.check(d == divided_difference_character(p, w), lambda: f"character mismatch for {p}, w={w}")
            if w == top:
                res.check(d == full_character(p), lambda: f"top character is not the full sum for {p}")
    return res


def bruhat_closure(n: int) -> set[tuple[Permutation, Permutation]]:
    """All pairs ``u <= w`` generated by covers ``w = u * (a b)`` with length one more."""
    perms = list(all_permutations(n))
    lengths = {u: length(u) for u in perms}
    up: dict[Permutation, list[Permutation]] = {u: [] for u in perms}
    for u in perms:
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                w = u.swap(a, b)
                if lengths[w] == lengths[u] + 1:
                    up[u].append(w)
    pairs = set()
    for u in perms:
        seen = {u}
        queue = deque([u])
        while queue:
            v = queue.popleft()
            for w in up[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        pairs.update((u, w) for w in seen)
    return pairs


def suite_bruhat_engine(n: int = 4) -> SuiteResult:
    res = SuiteResult("bruhat_engine")
    closure = bruhat_closure(n)
    perms = list(all_permutations(n))
    for u in perms:
        for w in perms:
            res.check(bruhat_leq(u, w) == ((u, w) in closure), lambda: f"bruhat_leq({u}, {w}) wrong")
    return res


def run_all(
    max_n: int = 4,
    max_cells: int = 6,
    seed: int = 0,
    random_cases: int = 1000,
    random_max_n: Optional[int] = None,
) -> list[SuiteResult]:
    rmax = random_max_n if random_max_n is not None else max(max_n, 2)
    return [
        suite_worked_example(),
        suite_bruhat_engine(min(max_n, 4)),
        suite_pi_equals_sigma(max_n, max_cells),
        suite_saturation(max_n, max_cells),
        suite_chain_blocks(max_n, max_cells),
        suite_pi_equals_u(max_n, max_cells),
        suite_most_recent(max_n, max_cells, random_cases, rmax, max(max_cells, 1), seed),
        suite_generating_sets(max_n, max_cells),
        suite_character_oracle(max_n, max_cells),
    ]
