"""Exhaustive enumeration of groups of a small order, up to isomorphism.

The enumerator is an independent oracle: it imports no group catalog.  It
performs orderly generation over Cayley tables with the identity pinned at
index 0, using three ingredients:

* a fixed "shell" ordering of the interior table cells: for t = 1, 2, ...
  the cells (t,1),(1,t),(t,2),(2,t),...,(t,t).  A table is flattened to the
  sequence of its values along this ordering, and tables are compared
  lexicographically on those flattenings;

* breadth-first (BFS) labelings: a labeling of a group is determined by an
  ordered choice of generators.  Starting from the identity (label 0), the
  shell cells are scanned in order and every product that has no label yet
  receives the next free one; when the labeled set closes into a proper
  subgroup, the next generator gets the next label.  The canonical form of
  a table is the lexicographically least flattening over all BFS labelings,
  which is a complete isomorphism invariant;

* a backtracking search that builds tables directly in BFS-labeled form,
  propagating associativity constraints after every cell assignment and
  pruning any branch whose closed partial subgroup is not itself canonical
  (a prefix of a canonical table is always canonical).  Surviving leaves
  are exactly the canonical tables, one per isomorphism class.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import arith, groups
from .groups import (
    Abelian,
    Cyclic,
    Dihedral,
    FromPermutations,
    GeneralizedQuaternion,
    Modular,
    SemidirectCyclic,
    build_group,
    element_orders_of_table,
    format_spec,
    validate_table,
)

DEFAULT_BOUND = 12
HARD_CAP = 16
GENERATOR_VERSION = 1


class EnumerationBoundError(ValueError):
    """Raised when an order exceeds the configured enumeration bound."""


@dataclass(frozen=True)
class CayleyTable:
    """An n x n multiplication table over 0..n-1 with the identity at 0."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows) -> "CayleyTable":
        arr = np.asarray([[int(v) for v in row] for row in rows], dtype=np.int64)
        validate_table(arr)
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_group(cls, g: groups.Group) -> "CayleyTable":
        return cls(tuple(tuple(int(v) for v in row) for row in g.table))

    def to_group(self) -> groups.Group:
        return groups.Group(np.array(self.rows, dtype=np.int64), check="none")

    def psi(self) -> int:
        return int(element_orders_of_table(np.array(self.rows, dtype=np.int64)).sum())

    def order_profile(self) -> dict[int, int]:
        orders = element_orders_of_table(np.array(self.rows, dtype=np.int64))
        vals, counts = np.unique(orders, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}


# The canonical form of a table is itself a CayleyTable.
CanonicalForm = CayleyTable


@lru_cache(maxsize=None)
def shell_cells(n: int) -> tuple[tuple[int, int], ...]:
    """Interior cells (i, j >= 1) in the shell scan order."""
    cells: list[tuple[int, int]] = []
    for t in range(1, n):
        for s in range(1, t):
            cells.append((t, s))
            cells.append((s, t))
        cells.append((t, t))
    return tuple(cells)


def flatten(rows) -> tuple[int, ...]:
    """Flatten a complete table along the shell cell order."""
    return tuple(rows[i][j] for i, j in shell_cells(len(rows)))


def relabel(rows, perm) -> tuple[tuple[int, ...], ...]:
    """Apply a relabeling permutation (perm[old] = new, perm[0] must be 0)."""
    n = len(rows)
    if perm[0] != 0:
        raise ValueError("relabelings must fix the identity at index 0")
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[rows[i][j]]
    return tuple(tuple(r) for r in out)


def _scan_labelings(rows, ref=None, stop_below_ref: bool = False):
    """Depth-first search over all BFS labelings of a complete table.

    Returns (found_below, best_flat, best_order) where found_below reports
    whether some labeling flattens strictly below ``ref``; best_flat and
    best_order describe the least labeling found (best_order lists the
    original element played by each new label).  With stop_below_ref the
    search aborts as soon as any labeling beats ref, which is all the
    canonicity test needs.
    """
    n = len(rows)
    best_flat = list(ref) if ref is not None else None
    best_order: list[int] | None = None
    found_below = False

    def run(gens: list[int]):
        """Deterministic closure for one generator sequence.

        Emits flattened values in shell order, comparing against best_flat.
        Returns (status, L) with status one of "pruned", "stall", "leaf",
        "below" (strictly smaller prefix established, then completed).
        """
        L = [0]
        pos = {0: 0}
        gi = 0
        emitted = 0
        prefix_lt = False
        t = 1
        while True:
            if t >= len(L):
                if gi < len(gens):
                    g = gens[gi]
                    gi += 1
                    pos[g] = len(L)
                    L.append(g)
                    continue
                break
            for s in range(1, t + 1):
                pair = ((t, s), (s, t)) if s < t else ((t, t),)
                for i, j in pair:
                    x = rows[L[i]][L[j]]
                    lab = pos.get(x)
                    if lab is None:
                        lab = len(L)
                        pos[x] = lab
                        L.append(x)
                    if best_flat is not None and not prefix_lt:
                        c = best_flat[emitted]
                        if lab > c:
                            return "pruned", L
                        if lab < c:
                            prefix_lt = True
                    emitted += 1
            t += 1
        if len(L) < n:
            return "stall", L
        return ("below" if prefix_lt else "leaf"), L

    def rec(gens: list[int]):
        nonlocal best_flat, best_order, found_below
        status, L = run(gens)
        if status == "pruned":
            return
        if status == "stall":
            labeled = set(L)
            for g in range(1, n):
                if g not in labeled:
                    rec(gens + [g])
                    if found_below and stop_below_ref:
                        return
            return
        # Completed labeling: recover its flattening exactly.
        posmap = {x: i for i, x in enumerate(L)}
        flat = tuple(posmap[rows[L[i]][L[j]]] for i, j in shell_cells(n))
        if ref is not None and flat < tuple(ref):
            found_below = True
        if best_flat is None or flat < tuple(best_flat):
            best_flat = list(flat)
            best_order = list(L)

    rec([])
    return found_below, (tuple(best_flat) if best_flat is not None else None), best_order


def _is_canonical(rows) -> bool:
    """True when no BFS relabeling flattens strictly below the table itself."""
    found_below, _, _ = _scan_labelings(rows, ref=flatten(rows), stop_below_ref=True)
    return not found_below


def canonical_form(table: CayleyTable) -> CanonicalForm:
    """Canonical representative of the isomorphism class of ``table``.

    Invariant under any identity-fixing relabeling of the input; two valid
    tables have equal canonical forms exactly when their groups are
    isomorphic.
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable.from_rows(table)
    rows = table.rows
    n = len(rows)
    _, _, best_order = _scan_labelings(rows)
    posmap = {x: i for i, x in enumerate(best_order)}
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = posmap[rows[best_order[i]][best_order[j]]]
    return CanonicalForm(tuple(tuple(r) for r in out))


# ---------------------------------------------------------------------------
# The orderly search itself
# ---------------------------------------------------------------------------


def _search_groups(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All canonical group tables of order n, via backtracking.

    Cells are assigned along the shell scan; after each assignment the four
    associativity constraint families with one undetermined cell are
    propagated to a fixpoint.  Whenever the labeled set closes into a
    subgroup its size must divide n (Lagrange) and its table must be
    canonical, otherwise the branch dies.
    """
    if n == 1:
        return [((0,),)]

    T = [[-1] * n for _ in range(n)]
    for i in range(n):
        T[i][0] = i
        T[0][i] = i
    full = (1 << n) - 1
    rowmask = [1 << i for i in range(n)]
    colmask = [1 << i for i in range(n)]
    rowmask[0] = colmask[0] = full
    preim: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    canon_cache: dict[tuple, bool] = {}
    results: list[tuple[tuple[int, ...], ...]] = []
    k = 2  # labels in use: identity plus the first generator

    def force(a: int, b: int, v: int, trail, queue) -> bool:
        cur = T[a][b]
        if cur >= 0:
            return cur == v
        if (rowmask[a] >> v) & 1 or (colmask[b] >> v) & 1:
            return False
        T[a][b] = v
        rowmask[a] |= 1 << v
        colmask[b] |= 1 << v
        preim[v].append((a, b))
        trail.append((a, b, v))
        queue.append((a, b, v))
        return True

    def propagate(a0: int, b0: int, v0: int, trail) -> bool:
        queue = []
        if not force(a0, b0, v0, trail, queue):
            return False
        while queue:
            a, b, v = queue.pop()
            Ta, Tb, Tv = T[a], T[b], T[v]
            # (a, b, c):  (ab)c = a(bc)  ->  T[v][c] = T[a][T[b][c]]
            for c in range(1, k):
                w = Tb[c]
                if w >= 0:
                    u = Tv[c]
                    z = Ta[w]
                    if u >= 0:
                        if z != u and not force(a, w, u, trail, queue):
                            return False
                    elif z >= 0:
                        if not force(v, c, z, trail, queue):
                            return False
            # (c, a, b):  (ca)b = c(ab)  ->  T[T[c][a]][b] = T[c][v]
            for c in range(1, k):
                w = T[c][a]
                if w >= 0:
                    u = T[c][v]
                    z = T[w][b]
                    if u >= 0:
                        if z != u and not force(w, b, u, trail, queue):
                            return False
                    elif z >= 0:
                        if not force(c, v, z, trail, queue):
                            return False
            # (x, y, b) with xy = a:  T[a][b] = T[x][T[y][b]]
            for x, y in preim[a]:
                w = T[y][b]
                if w >= 0:
                    if T[x][w] != v and not force(x, w, v, trail, queue):
                        return False
            # (a, y, z) with yz = b:  T[a][b] = T[T[a][y]][z]
            for y, z in preim[b]:
                w = Ta[y]
                if w >= 0:
                    if T[w][z] != v and not force(w, z, v, trail, queue):
                        return False
        return True

    def undo(trail) -> None:
        for a, b, v in reversed(trail):
            T[a][b] = -1
            rowmask[a] &= ~(1 << v)
            colmask[b] &= ~(1 << v)
            preim[v].pop()

    def next_cell(t: int, i: int):
        # Within shell t, slot i decodes to (t, s) for even i and (s, t) for
        # odd i, with s = i//2 + 1; the last slot 2t-2 is the diagonal (t, t).
        while t < k:
            pairs = 2 * t - 1
            while i < pairs:
                s, second = divmod(i, 2)
                s += 1
                a, b = (s, t) if second else (t, s)
                if T[a][b] < 0:
                    return t, i, a, b
                i += 1
            t += 1
            i = 0
        return t, i, -1, -1

    def dfs(t: int, i: int) -> None:
        nonlocal k
        t, i, a, b = next_cell(t, i)
        if a < 0:
            # Labeled set is closed: a subgroup of order k.
            if n % k:
                return
            sub = tuple(tuple(T[r][:k]) for r in range(k))
            ok = canon_cache.get(sub)
            if ok is None:
                ok = _is_canonical(sub)
                canon_cache[sub] = ok
            if not ok:
                return
            if k == n:
                results.append(sub)
                return
            k += 1
            dfs(t, 0)
            k -= 1
            return
        for v in range(k + 1 if k < n else k):
            fresh = v == k
            if not fresh and ((rowmask[a] >> v) & 1 or (colmask[b] >> v) & 1):
                continue
            if fresh:
                k += 1
            trail: list[tuple[int, int, int]] = []
            if propagate(a, b, v, trail):
                dfs(t, i + 1)
            undo(trail)
            if fresh:
                k -= 1

    dfs(1, 0)
    return results


def _enumerate(n: int) -> list[CayleyTable]:
    tables = _search_groups(n)
    out = []
    for rows in sorted(set(tables), key=flatten):
        arr = np.array(rows, dtype=np.int64)
        validate_table(arr)
        out.append(CayleyTable(rows))
    return out


# ---------------------------------------------------------------------------
# Catalog with persistence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogClass:
    """One isomorphism class of a given order: canonical table plus stats."""

    table: CayleyTable
    psi: int
    order_profile: tuple[tuple[int, int], ...]
    description: str

    @property
    def profile_dict(self) -> dict[int, int]:
        return dict(self.order_profile)


def _check_bound(n: int, bound: int) -> None:
    if n < 1:
        raise EnumerationBoundError(f"order must be >= 1, got {n}")
    if bound > HARD_CAP:
        raise EnumerationBoundError(
            f"enumeration bound {bound} exceeds the hard cap {HARD_CAP}"
        )
    if n > bound:
        raise EnumerationBoundError(
            f"order {n} exceeds the enumeration bound {bound}"
        )
    if n > DEFAULT_BOUND:
        warnings.warn(
            f"enumerating order {n} groups above the default bound "
            f"{DEFAULT_BOUND} may take a long time",
            RuntimeWarning,
            stacklevel=3,
        )


def _family_candidates(n: int):
    """Named construction-family specs of order n, most specific first.

    Used to attach a readable description to each enumerated class; classes
    outside the families keep a generic profile-based description.
    """
    cands: list[tuple[str, object]] = [(f"C{n}", Cyclic(n))]
    if n == 12:
        # The alternating group on 4 points; not a cyclic-by-cyclic product.
        cands.append(("A4", FromPermutations(4, ((1, 2, 0, 3), (1, 0, 3, 2)))))
    for chain in abelian_invariant_chains(n):
        if list(chain) != [n]:
            cands.append((format_spec(Abelian(chain)), Abelian(chain)))
    if n >= 8 and n & (n - 1) == 0:
        cands.append((f"Q{n}", GeneralizedQuaternion(n)))
    fac = arith.factorize(n)
    if len(fac) == 1:
        q, r = fac[0]
        if r >= 4 or (r == 3 and q > 2):
            cands.append((f"M({q},{r})", Modular(q, r)))
    if n % 2 == 0 and n >= 4:
        cands.append((f"D{n}", Dihedral(n)))
    if n % 4 == 0 and n >= 8:
        h = n // 4
        # Dicyclic group of order 4h, realized as SD(h, 4, h-1) for odd h.
        if h % 2 == 1 and h > 1:
            cands.append((f"Dic{h} = SD({h},4,{h - 1})", SemidirectCyclic(h, 4, h - 1)))
    for m in range(2, n):
        if n % m:
            continue
        k = n // m
        for a in range(2, m):
            if math.gcd(a, m) == 1 and pow(a, k, m) == 1:
                cands.append((f"SD({m},{k},{a})", SemidirectCyclic(m, k, a)))
    return cands


def abelian_invariant_chains(n: int) -> list[tuple[int, ...]]:
    """All invariant-factor chains d1 | d2 | ... with product n."""
    parts_per_prime = []
    for p, e in arith.factorize(n):
        parts_per_prime.append((p, _partitions(e)))
    chains = [()]
    for p, partitions in parts_per_prime:
        new_chains = []
        for chain in chains:
            for part in partitions:
                exps = sorted(part, reverse=True)
                merged = list(chain) + [1] * max(0, len(exps) - len(chain))
                merged = sorted(merged, reverse=True)
                combined = [merged[i] * (p ** exps[i] if i < len(exps) else 1) for i in range(len(merged))]
                new_chains.append(tuple(combined))
        chains = new_chains
    return sorted(set(tuple(sorted(c)) for c in chains))


def _partitions(e: int) -> list[tuple[int, ...]]:
    if e == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(e, e, [])
    return out


def _describe_classes(n: int, tables: list[CayleyTable]) -> list[str]:
    by_canon: dict[tuple, str] = {}
    for desc, spec in _family_candidates(n):
        try:
            g = build_group(spec)
        except groups.GroupSpecError:
            continue
        if g.order != n:
            continue
        key = canonical_form(CayleyTable.from_group(g)).rows
        by_canon.setdefault(key, desc)
    out = []
    for idx, t in enumerate(tables):
        desc = by_canon.get(t.rows)
        if desc is None:
            profile = t.order_profile()
            desc = f"order-{n} class #{idx} with order profile {profile}"
        out.append(desc)
    return out


def catalog(
    n: int, *, bound: int = DEFAULT_BOUND, cache_dir: str | Path | None = None
) -> list[CatalogClass]:
    """All isomorphism classes of order n with psi values and descriptions.

    With cache_dir set, results persist to ``catalog/n=<n>.json`` under it
    and are reloaded when the (order, generator version) pair matches.
    """
    _check_bound(n, bound)
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / "catalog" / f"n={n}.json"
        cached = _load_catalog(path, n)
        if cached is not None:
            return cached
    tables = _enumerate(n)
    descriptions = _describe_classes(n, tables)
    classes = []
    for t, desc in zip(tables, descriptions):
        profile = t.order_profile()
        psi = sum(d * c for d, c in profile.items())
        classes.append(
            CatalogClass(
                table=t,
                psi=psi,
                order_profile=tuple(sorted(profile.items())),
                description=desc,
            )
        )
    if path is not None:
        _save_catalog(path, n, classes)
    return classes


def _load_catalog(path: Path, n: int) -> list[CatalogClass] | None:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("n") != n or data.get("generator_version") != GENERATOR_VERSION:
        return None
    classes = []
    for entry in data["classes"]:
        table = CayleyTable(tuple(tuple(int(v) for v in row) for row in entry["table"]))
        classes.append(
            CatalogClass(
                table=table,
                psi=int(entry["psi"]),
                order_profile=tuple((int(d), int(c)) for d, c in entry["order_profile"]),
                description=entry["description"],
            )
        )
    return classes


def _save_catalog(path: Path, n: int, classes: list[CatalogClass]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {
        "schema": 1,
        "n": n,
        "generator_version": GENERATOR_VERSION,
        "classes": [
            {
                "table": [list(row) for row in cls.table.rows],
                "psi": cls.psi,
                "order_profile": [list(pair) for pair in cls.order_profile],
                "description": cls.description,
            }
            for cls in classes
        ],
    }
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def all_groups(
    n: int, *, bound: int = DEFAULT_BOUND, cache_dir: str | Path | None = None
) -> list[CayleyTable]:
    """One canonical CayleyTable per isomorphism class of order n."""
    return [cls.table for cls in catalog(n, bound=bound, cache_dir=cache_dir)]


@dataclass(frozen=True)
class SpectrumEntry:
    psi: int
    count: int
    witnesses: tuple[str, ...]


def psi_spectrum(
    n: int, *, bound: int = DEFAULT_BOUND, cache_dir: str | Path | None = None
) -> list[SpectrumEntry]:
    """Distinct psi values of order-n groups, descending, with witnesses."""
    classes = catalog(n, bound=bound, cache_dir=cache_dir)
    by_psi: dict[int, list[str]] = {}
    for cls in classes:
        by_psi.setdefault(cls.psi, []).append(cls.description)
    entries = [
        SpectrumEntry(psi=p, count=len(w), witnesses=tuple(sorted(w)))
        for p, w in sorted(by_psi.items(), reverse=True)
    ]
    # The top entry is always the cyclic group.
    assert entries[0].psi == arith.psi_cyclic(n)
    return entries
