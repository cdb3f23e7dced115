"""Brute-force census of labeled matroids and sparse-paving matroids.

Counts here are what the bound checks are measured against, so every count
has a second, structurally different route to it: sparse-paving matroids are
both enumerated by backtracking and counted by a memoised recursion over
candidate masks, and the matroid enumerator can run over the r-subsets in
reversed order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from math import comb
from pathlib import Path
from typing import Iterator, Optional

from .errors import DomainError
from .matroid import Matroid, is_sparse_paving
from .partition import gamma_count
from .starstar import conflict_graph, sparse_count_lower_bound
from .subsets import canonical_key, enumerate_rsubsets, ground

SPARSE_CEILING = 24
MATROID_CEILING = 20
CENSUS_VERSION = f"1:sparse<={SPARSE_CEILING}:matroid<={MATROID_CEILING}"

CSV_HEADER = ["n", "r", "matroid_count", "sparse_count", "gamma", "lower_bound", "log_ratio", "flags"]
FLAG_NAMES = ("upper_factor_ok", "sandwich_ok", "cor44b_ok")


def _check_sparse_domain(n: int, r: int, ceiling: int):
    if n < 3 or not 2 <= r <= n - 1:
        raise DomainError(f"need n >= 3 and 2 <= r <= n-1, got n={n}, r={r}")
    if comb(n, r) > ceiling:
        raise DomainError(f"C({n},{r}) = {comb(n, r)} exceeds the enumeration ceiling {ceiling}")


def iter_star_star_families(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Every family of r-subsets with pairwise intersections <= r - 2, by backtracking.

    Families are produced as tuples of bitmasks in canonical order, the empty
    family first.
    """
    verts, adj = conflict_graph(n, r)
    count = len(verts)

    def rec(cand, chosen):
        yield tuple(verts[v] for v in chosen)
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            later = cand & ~adj[v]
            chosen.append(v)
            yield from rec(later, chosen)
            chosen.pop()

    yield from rec((1 << count) - 1, [])


def count_star_star_families(n: int, r: int) -> int:
    """Number of independent sets of the conflict graph, by memoised splitting.

    f(P) = f(P - v) + f(P - v - N(v)) for the lowest vertex v of P.
    """
    _, adj = conflict_graph(n, r)
    memo = {0: 1}

    def f(cand):
        hit = memo.get(cand)
        if hit is not None:
            return hit
        bit = cand & -cand
        v = bit.bit_length() - 1
        rest = cand ^ bit
        val = f(rest) + f(rest & ~adj[v])
        memo[cand] = val
        return val

    return f((1 << len(adj)) - 1)


def enumerate_sparse(n, r: int, ceiling: int = SPARSE_CEILING) -> list[Matroid]:
    """All sparse-paving matroids of rank r on {1..n}, one per family of r-circuits."""
    n = ground(n).n
    _check_sparse_domain(n, r, ceiling)
    universe = enumerate_rsubsets(n, r)
    out = []
    for fam in iter_star_star_families(n, r):
        excluded = set(fam)
        out.append(Matroid(n, r, tuple(x for x in universe if x not in excluded)))
    return out


class _BasisSearch:
    """Backtracking over include/exclude decisions for each r-subset.

    A branch is cut as soon as some included B1, B2 and x in B1 - B2 have all
    exchange candidates (B1 - x) + y decided and excluded, so every leaf is a
    valid basis family.
    """

    def __init__(self, n: int, r: int, reverse: bool = False):
        order = list(enumerate_rsubsets(n, r))
        if reverse:
            order.reverse()
        self.n, self.r = n, r
        self.order = order
        self.pos = {x: i for i, x in enumerate(order)}

    def _triple_dead(self, b1, b2, xbit, included, i):
        # dead: no candidate included or still undecided (position > i)
        rest = b1 ^ xbit
        ys = b2 & ~b1
        while ys:
            ybit = ys & -ys
            ys ^= ybit
            c = rest | ybit
            if c in included or self.pos[c] > i:
                return False
        return True

    def _can_exclude(self, s, i, included):
        r1 = self.r - 1
        for b1 in included:
            if (b1 & s).bit_count() != r1:
                continue
            xbit = b1 & ~s
            ybit = s & ~b1
            for b2 in included:
                if b2 & ybit and not b2 & xbit and self._triple_dead(b1, b2, xbit, included, i):
                    return False
        return True

    def _can_include(self, s, i, included):
        included.add(s)
        try:
            for b in included:
                for b1, b2 in ((s, b), (b, s)):
                    only = b1 & ~b2
                    while only:
                        xbit = only & -only
                        only ^= xbit
                        if self._triple_dead(b1, b2, xbit, included, i):
                            return False
            return True
        finally:
            included.discard(s)

    def run(self, start: int = 0, included: Optional[set] = None) -> Iterator[tuple[int, ...]]:
        included = set() if included is None else set(included)
        total = len(self.order)

        def rec(i):
            if i == total:
                if included:
                    yield tuple(sorted(included, key=canonical_key))
                return
            s = self.order[i]
            if self._can_exclude(s, i, included):
                yield from rec(i + 1)
            if self._can_include(s, i, included):
                included.add(s)
                yield from rec(i + 1)
                included.discard(s)

        yield from rec(start)

    def prefixes(self, depth: int) -> list[frozenset]:
        """Surviving partial decisions after the first ``depth`` r-subsets."""
        states = [frozenset()]
        for i in range(depth):
            s = self.order[i]
            nxt = []
            for st in states:
                inc = set(st)
                if self._can_exclude(s, i, inc):
                    nxt.append(st)
                if self._can_include(s, i, inc):
                    nxt.append(st | {s})
            states = nxt
        return states


def _subtree(args) -> list[tuple[int, ...]]:
    n, r, reverse, depth, prefix = args
    return list(_BasisSearch(n, r, reverse).run(depth, prefix))


def _matroid_sort_key(m: Matroid):
    return tuple(canonical_key(b) for b in m.bases)


def enumerate_matroids(
    n, r: int, ceiling: int = MATROID_CEILING, reverse: bool = False, threads: int = 1
) -> list[Matroid]:
    """All matroids of rank r on {1..n}, as validated basis families, canonically sorted.

    ``threads > 1`` splits the search on a prefix of decisions across worker
    processes; the result does not depend on the split.
    """
    n = ground(n).n
    if not 0 <= r <= n:
        raise DomainError(f"rank {r} outside 0..{n}")
    if comb(n, r) > ceiling:
        raise DomainError(f"C({n},{r}) = {comb(n, r)} exceeds the enumeration ceiling {ceiling}")
    search = _BasisSearch(n, r, reverse)
    total = len(search.order)
    if threads > 1 and total > 8:
        depth = min(6, total)
        jobs = [(n, r, reverse, depth, p) for p in search.prefixes(depth)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            families = [f for chunk in pool.map(_subtree, jobs) for f in chunk]
    else:
        families = list(search.run())
    out = [Matroid(n, r, fam) for fam in families]
    out.sort(key=_matroid_sort_key)
    return out


def sparse_count(n: int, r: int, threads: int = 1) -> int:
    """|Sparse_{n,r}| for any 0 <= r <= n.

    Ranks 2..n-1 (with n >= 3) use the family enumeration; the degenerate
    ranks filter the full matroid census through the dual-paving test.
    """
    if n >= 3 and 2 <= r <= n - 1:
        return count_star_star_families(n, r)
    return sum(1 for m in enumerate_matroids(n, r, threads=threads) if is_sparse_paving(m))


@dataclass(frozen=True)
class CensusRow:
    n: int
    r: int
    matroid_count: int
    sparse_count: int
    gamma: int
    lower_bound: int
    upper_factor_ok: bool
    sandwich_ok: bool
    cor44b_ok: bool
    log_ratio: float

    @property
    def flags(self) -> dict:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    @property
    def all_ok(self) -> bool:
        return all(self.flags.values())


def log_ratio(matroid_count: int, sparse_count: int) -> float:
    return round(math.log2(matroid_count) / math.log2(sparse_count), 12)


def make_row(n: int, r: int, matroid_count: int, sparse: int, prev_same: int, prev_lower: int) -> CensusRow:
    """Evaluate every bound for one (n, r) given the counts.

    ``prev_same`` and ``prev_lower`` are |Sparse_{n-1,r}| and |Sparse_{n-1,r-1}|.
    """
    g = gamma_count(n, r)
    steps = comb(n, r + 1) // (n - r)
    return CensusRow(
        n=n,
        r=r,
        matroid_count=matroid_count,
        sparse_count=sparse,
        gamma=g,
        lower_bound=sparse_count_lower_bound(n, r),
        upper_factor_ok=matroid_count <= g * sparse,
        sandwich_ok=prev_same <= sparse <= prev_same + prev_lower,
        cor44b_ok=matroid_count <= 2 ** (g * steps),
        log_ratio=log_ratio(matroid_count, sparse),
    )


def verify_bounds(n: int, threads: int = 1, cache: Optional[dict] = None) -> list[CensusRow]:
    """One row per rank 2..n-1; violations are recorded in the flags, never raised.

    ``cache`` maps ``"n:r:version"`` keys to row dicts and is filled in place.
    """
    if n < 3:
        raise DomainError(f"census rows need n >= 3, got {n}")
    rows = []
    for r in range(2, n):
        key = f"{n}:{r}:{CENSUS_VERSION}"
        if cache is not None and key in cache:
            rows.append(CensusRow(**cache[key]))
            continue
        matroids = len(enumerate_matroids(n, r, threads=threads))
        row = make_row(
            n,
            r,
            matroids,
            sparse_count(n, r),
            sparse_count(n - 1, r),
            sparse_count(n - 1, r - 1),
        )
        if cache is not None:
            cache[key] = asdict(row)
        rows.append(row)
    return rows


def census(max_n: int, threads: int = 1, cache: Optional[dict] = None) -> list[CensusRow]:
    rows = []
    for n in range(3, max_n + 1):
        rows.extend(verify_bounds(n, threads=threads, cache=cache))
    return sorted(rows, key=lambda row: (row.n, row.r))


def _flags_text(row: CensusRow) -> str:
    return ";".join(f"{k}={int(v)}" for k, v in row.flags.items())


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in sorted(rows, key=lambda x: (x.n, x.r)):
        w.writerow([
            row.n, row.r, row.matroid_count, row.sparse_count, row.gamma,
            row.lower_bound, f"{row.log_ratio:.12f}", _flags_text(row),
        ])
    return buf.getvalue()


def rows_to_json(rows) -> str:
    payload = {
        "version": CENSUS_VERSION,
        "rows": [asdict(row) for row in sorted(rows, key=lambda x: (x.n, x.r))],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def census_export(rows, path, fmt: str = "csv") -> None:
    if fmt not in ("csv", "json"):
        raise DomainError(f"unknown format {fmt!r}")
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write census to {path}: {exc.strerror or exc}") from exc


def census_import(path, fmt: Optional[str] = None) -> list[CensusRow]:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "csv")
    text = path.read_text(encoding="utf-8")
    if fmt == "json":
        return [CensusRow(**d) for d in json.loads(text)["rows"]]
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise DomainError(f"{path}: unexpected CSV header {reader.fieldnames}")
    rows = []
    for rec in reader:
        flags = dict(item.split("=") for item in rec["flags"].split(";"))
        rows.append(CensusRow(
            n=int(rec["n"]),
            r=int(rec["r"]),
            matroid_count=int(rec["matroid_count"]),
            sparse_count=int(rec["sparse_count"]),
            gamma=int(rec["gamma"]),
            lower_bound=int(rec["lower_bound"]),
            upper_factor_ok=flags["upper_factor_ok"] == "1",
            sandwich_ok=flags["sandwich_ok"] == "1",
            cor44b_ok=flags["cor44b_ok"] == "1",
            log_ratio=float(rec["log_ratio"]),
        ))
    return rows


def default_cache_dir() -> Path:
    override = os.environ.get("SPARSEPAVING_CACHE_DIR")
    return Path(override) if override else Path.home() / ".cache" / "sparsepaving"


def load_cache(directory) -> dict:
    path = Path(directory) / "census_cache.json"
    if not path.exists():
        return {}
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError):
        return {}


def save_cache(directory, cache: dict) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "census_cache.json").write_text(
        json.dumps(cache, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
