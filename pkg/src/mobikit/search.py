"""Exhaustive search for finite models of the algebra laws.

A model of size n is a table t over {0..n-1} together with placements of the
three constants.  The unit laws pin down large parts of the table up front;
the rest is filled by backtracking with the cancellation law used as an
injectivity prune on the half rows and both distributivity-style laws checked
as soon as their instances become determinable.  Results are deduplicated up
to relabeling and reported in a canonical labeling, the one minimizing
(zero, one, half, flattened table).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .algebra import MobiAlgebra
from .carriers import ModularInt


@dataclass(frozen=True)
class FiniteModel:
    size: int
    zero: int
    half: int
    one: int
    table: tuple  # table[a][b][c], nested tuples

    def p(self, a: int, b: int, c: int) -> int:
        return self.table[a][b][c]

    def to_algebra(self) -> MobiAlgebra:
        n, t = self.size, self.table
        return MobiAlgebra(ModularInt(n),
                           lambda a, b, c: t[a % n][b % n][c % n],
                           self.zero, self.half, self.one,
                           name=f"finite-model({n})")


def _forced_table(n, z, h, o):
    """Cells pinned by the unit laws, or None on an immediate conflict."""
    table = [[[None] * n for _ in range(n)] for _ in range(n)]

    def put(a, b, c, v):
        cur = table[a][b][c]
        if cur is not None and cur != v:
            return False
        table[a][b][c] = v
        return True

    for a in range(n):
        for b in range(n):
            if not put(a, z, b, a):  # p(a, 0, b) = a
                return None
            if not put(a, b, a, a):  # p(a, b, a) = a
                return None
            if not put(b, o, a, a):  # p(b, 1, a) = a
                return None
        if not put(z, a, o, a):  # p(0, a, 1) = a
            return None
    if not put(o, h, z, h):  # p(1, half, 0) = half
        return None
    return table


def _half_rows_ok(table, n, h):
    """Half rows must be injective; force a lone missing cell when possible.

    Returns (ok, forced) where forced lists (a, c, value) assignments made.
    """
    forced = []
    changed = True
    while changed:
        changed = False
        for a in range(n):
            row = table[a][h]
            seen = set()
            hole = None
            holes = 0
            for c in range(n):
                v = row[c]
                if v is None:
                    hole = c
                    holes += 1
                elif v in seen:
                    return False, forced
                else:
                    seen.add(v)
            if holes == 1 and len(seen) == n - 1:
                missing = next(iter(set(range(n)) - seen))
                row[hole] = missing
                forced.append((a, h, hole))
                changed = True
    return True, forced


def _instances_ok(table, h, quintuples):
    """Check both five-variable laws on all currently determinable instances."""
    for a, b1, b2, b3, c in quintuples:
        inner = table[b1][b2][b3]
        if inner is None:
            continue
        lhs = table[a][inner][c]
        x = table[a][b1][c]
        y = table[a][b3][c]
        if lhs is None or x is None or y is None:
            continue
        rhs = table[x][b2][y]
        if rhs is not None and lhs != rhs:
            return False
    for a1, b, c1, a2, c2 in quintuples:
        u = table[a1][b][c1]
        v = table[a2][b][c2]
        if u is None or v is None:
            continue
        lhs = table[u][h][v]
        x = table[a1][h][a2]
        y = table[c1][h][c2]
        if lhs is None or x is None or y is None:
            continue
        rhs = table[x][b][y]
        if rhs is not None and lhs != rhs:
            return False
    return True


def _full_check(table, n, z, h, o):
    rng = range(n)
    if table[o][h][z] != h:
        return False
    for a in rng:
        if table[z][a][o] != a:
            return False
        for b in rng:
            if table[a][z][b] != a or table[a][b][a] != a or table[b][o][a] != a:
                return False
        if len({table[a][h][c] for c in rng}) != n:
            return False
    for a, b1, b2, b3, c in product(rng, repeat=5):
        inner = table[b1][b2][b3]
        if table[a][inner][c] != table[table[a][b1][c]][b2][table[a][b3][c]]:
            return False
    for a1, b, c1, a2, c2 in product(rng, repeat=5):
        lhs = table[table[a1][b][c1]][h][table[a2][b][c2]]
        rhs = table[table[a1][h][a2]][b][table[c1][h][c2]]
        if lhs != rhs:
            return False
    return True


def _canonical_key(n, z, h, o, table):
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for src, dst in enumerate(perm):
            inv[dst] = src
        flat = tuple(perm[table[inv[a]][inv[b]][inv[c]]]
                     for a in range(n) for b in range(n) for c in range(n))
        key = (perm[z], perm[o], perm[h], flat)
        if best is None or key < best:
            best = key
    return best


def _model_from_key(n, key) -> FiniteModel:
    zero, one, half, flat = key
    table = tuple(tuple(tuple(flat[(a * n + b) * n + c] for c in range(n))
                        for b in range(n))
                  for a in range(n))
    return FiniteModel(n, zero, half, one, table)


def search_finite(n: int, require_distinct_constants: bool = False,
                  emit=None, limit: int | None = None) -> list:
    """All models of size n up to relabeling, in canonical form.

    emit, when given, is called with each model as it is found; limit stops
    the search after that many models.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 4:
        raise ValueError(f"size must be an integer between 1 and 4, got {n!r}")
    if limit is not None and limit <= 0:
        return []
    quintuples = list(product(range(n), repeat=5))
    found = []
    seen = set()

    def record(z, h, o, table):
        key = _canonical_key(n, z, h, o, table)
        if key in seen:
            return False
        seen.add(key)
        model = _model_from_key(n, key)
        found.append(model)
        if emit is not None:
            emit(model)
        return limit is not None and len(found) >= limit

    for z, h, o in product(range(n), repeat=3):
        if require_distinct_constants and len({z, h, o}) < 3:
            continue
        table = _forced_table(n, z, h, o)
        if table is None:
            continue
        ok, _ = _half_rows_ok(table, n, h)
        if not ok or not _instances_ok(table, h, quintuples):
            continue
        free = [(a, b, c)
                for b in sorted(range(n), key=lambda b: b != h)
                for a in range(n) for c in range(n)
                if table[a][b][c] is None]

        def fill(idx):
            if idx == len(free):
                if _full_check(table, n, z, h, o):
                    return record(z, h, o, table)
                return False
            a, b, c = free[idx]
            if table[a][b][c] is not None:  # propagated earlier
                return fill(idx + 1)
            for v in range(n):
                table[a][b][c] = v
                ok, forced = _half_rows_ok(table, n, h)
                if ok and _instances_ok(table, h, quintuples):
                    if fill(idx + 1):
                        return True
                for fa, fb, fc in forced:
                    table[fa][fb][fc] = None
                table[a][b][c] = None
            return False

        if fill(0):
            break
    return found
