"""Staggered Hamiltonians encoded as matchings of lattice sites.

Each of the four Hamiltonians of a step switches on a set of disjoint
couplings.  A :class:`Matching` stores those couplings as site pairs; sites
left uncoupled are kept as singletons and only feel the on-site frequency.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .lattice import LatticeSpec, Scheme, Topology, adjacency, site_of

DENSE_MAX_SITES = 4096


class Matching:
    """Disjoint site pairs plus decoupled singletons on ``n_sites`` sites.

    ``pairs`` is an ``(k, 2)`` integer array of 1-based site labels.  The
    singletons are every site not touched by a pair.
    """

    def __init__(self, n_sites: int, pairs):
        self.n_sites = int(n_sites)
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        self.pairs = np.sort(pairs, axis=1)
        self.pairs = self.pairs[np.lexsort((self.pairs[:, 1], self.pairs[:, 0]))]
        touched = np.zeros(self.n_sites + 1, dtype=bool)
        touched[self.pairs.ravel()] = True
        self.singletons = np.flatnonzero(~touched[1:]) + 1

    def __repr__(self):
        return f"Matching(n_sites={self.n_sites}, pairs={len(self.pairs)}, singletons={len(self.singletons)})"

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n_sites == other.n_sites and np.array_equal(self.pairs, other.pairs)

    def pair_set(self) -> set[tuple[int, int]]:
        return {(int(a), int(b)) for a, b in self.pairs}

    @cached_property
    def partner(self) -> np.ndarray:
        """0-based partner of each site; singletons map to themselves."""
        p = np.arange(self.n_sites)
        a, b = self.pairs[:, 0] - 1, self.pairs[:, 1] - 1
        p[a] = b
        p[b] = a
        return p

    @cached_property
    def paired(self) -> np.ndarray:
        mask = np.ones(self.n_sites, dtype=bool)
        mask[self.singletons - 1] = False
        return mask

    @property
    def is_perfect(self) -> bool:
        return len(self.singletons) == 0

    def interaction_matrix(self) -> np.ndarray:
        """Dense 0/1 matrix with ones at every coupled pair."""
        if self.n_sites > DENSE_MAX_SITES:
            raise ValueError(f"dense matrices are capped at {DENSE_MAX_SITES} sites")
        G = np.zeros((self.n_sites, self.n_sites))
        a, b = self.pairs[:, 0] - 1, self.pairs[:, 1] - 1
        G[a, b] = 1.0
        G[b, a] = 1.0
        return G


def build_1d_odd_even(d: int) -> Matching:
    """Chain of ``d`` sites with couplings (1,2), (3,4), ..., (d-1,d)."""
    if d % 2:
        raise ValueError(f"chain length must be even, got {d}")
    return Matching(d, [(k, k + 1) for k in range(1, d, 2)])


def build_1d_even_odd(d: int, periodic: bool = True) -> Matching:
    """Chain couplings (2,3), ..., (d-2,d-1), closed by (d,1) when periodic.

    With ``periodic=False`` the end sites 1 and d are left decoupled.
    """
    if d % 2:
        raise ValueError(f"chain length must be even, got {d}")
    pairs = [(k, k + 1) for k in range(2, d - 1, 2)]
    if periodic:
        pairs.append((d, 1))
    return Matching(d, pairs)


@dataclass(frozen=True)
class StaggeredSet:
    spec: LatticeSpec
    matchings: tuple[Matching, Matching, Matching, Matching]

    def __iter__(self):
        return iter(self.matchings)

    def __getitem__(self, k: int) -> Matching:
        return self.matchings[k]

    def __len__(self):
        return len(self.matchings)


def _row(d, i, chain: Matching):
    return [(site_of(i, a, d), site_of(i, b, d)) for a, b in chain.pairs]


def _col(d, j, chain: Matching):
    return [(site_of(a, j, d), site_of(b, j, d)) for a, b in chain.pairs]


def build_staggered_set(spec: LatticeSpec) -> StaggeredSet:
    d, N = spec.d, spec.n_sites
    s = lambda i, j: site_of(i, j, d)  # noqa: E731
    rows = cols = range(1, d + 1)
    oe = build_1d_odd_even(d)
    eo = build_1d_even_odd(d, periodic=True)
    eo_open = build_1d_even_odd(d, periodic=False)

    if spec.scheme is Scheme.INTERLEAVED:
        m1, m2, m3, m4 = [], [], [], []
        for i in rows:
            odd = i % 2 == 1
            m1 += _row(d, i, oe if odd else eo)
            m2 += _row(d, i, eo if odd else oe)
        for j in cols:
            odd = j % 2 == 1
            m3 += _col(d, j, oe if odd else eo)
            m4 += _col(d, j, eo if odd else oe)
        return StaggeredSet(spec, tuple(Matching(N, m) for m in (m1, m2, m3, m4)))

    m1 = [p for i in rows for p in _row(d, i, oe)]
    m3 = [p for j in cols for p in _col(d, j, oe)]
    topo = spec.topology

    if topo is Topology.SPHERE:
        m2 = [p for i in range(2, d) for p in _row(d, i, eo_open)]
        m2 += [(s(1, a), s(a, 1)) for a in range(2, d + 1)]
        m2 += [(s(d, a), s(a, d)) for a in range(2, d)]
        m4 = _row(d, 1, eo_open) + _row(d, d, eo_open)
        # rows 2..d-1 form a chain of d-2 sites coupled odd-even, i.e. rows (2,3), (4,5), ...
        middle = build_1d_odd_even(d - 2)
        m4 += [(s(a + 1, j), s(b + 1, j)) for j in cols for a, b in middle.pairs]
        return StaggeredSet(spec, tuple(Matching(N, m) for m in (m1, m2, m3, m4)))

    if topo is Topology.TORUS:
        m2 = [p for i in rows for p in _row(d, i, eo)]
    else:
        m2 = [p for i in rows for p in _row(d, i, eo_open)]
        m2 += [(s(i, 1), s(d + 1 - i, d)) for i in rows]
    if topo is Topology.PROJECTIVE_PLANE:
        m4 = [p for j in cols for p in _col(d, j, eo_open)]
        m4 += [(s(1, j), s(d, d + 1 - j)) for j in cols]
    else:
        m4 = [p for j in cols for p in _col(d, j, eo)]
    return StaggeredSet(spec, tuple(Matching(N, m) for m in (m1, m2, m3, m4)))


def matching_to_dense(m: Matching, omega: float, kappa: float) -> np.ndarray:
    """``omega * 1 - kappa * G`` with ``G`` the pair interaction matrix."""
    G = m.interaction_matrix()
    return omega * np.eye(m.n_sites) - kappa * G


@dataclass
class Failure:
    check: str
    detail: str

    def __str__(self):
        return f"[{self.check}] {self.detail}"


@dataclass
class ValidationReport:
    spec: LatticeSpec
    expected_edges: int
    covered_edges: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def checks(self) -> dict[str, bool]:
        names = ("partition", "disjoint", "union", "edge_count")
        bad = {f.check for f in self.failures}
        return {n: n not in bad for n in names}

    def __str__(self):
        if self.ok:
            return f"{self.spec.label} d={self.spec.d}: ok ({self.covered_edges} edges)"
        return "\n".join(str(f) for f in self.failures)


def expected_edge_count(spec: LatticeSpec) -> int:
    n = 2 * spec.d * spec.d
    return n - 3 if spec.topology is Topology.SPHERE else n


def validate_set(s: StaggeredSet, max_reported: int = 10) -> ValidationReport:
    """Check the tessellation rules for a set of four matchings.

    Parallel edges (the doubled corners of the projective plane) may be
    covered once per copy; any other edge shared between matchings, missing
    from them, or not in the lattice is reported.
    """
    adj = adjacency(s.spec)
    failures: list[Failure] = []
    N = s.spec.n_sites

    for k, m in enumerate(s.matchings, 1):
        if m.n_sites != N:
            failures.append(Failure("partition", f"M{k} has {m.n_sites} sites, lattice has {N}"))
            continue
        counts = np.bincount(m.pairs.ravel(), minlength=N + 1)[1:]
        counts[m.singletons - 1] += 1
        for n in np.flatnonzero(counts != 1)[:max_reported]:
            failures.append(Failure("partition", f"M{k}: site {n + 1} appears {counts[n]} times"))
        for a, b in m.pairs:
            if a == b or not 1 <= a <= N or not 1 <= b <= N:
                failures.append(Failure("partition", f"M{k}: malformed pair ({a}, {b})"))

    covered = Counter()
    for m in s.matchings:
        covered.update(m.pair_set())

    for (i, mi), (j, mj) in itertools.combinations(enumerate(s.matchings, 1), 2):
        shared = mi.pair_set() & mj.pair_set()
        for e in sorted(shared)[:max_reported]:
            if covered[e] > adj.multiplicity(*e):
                failures.append(Failure("disjoint", f"edge {e} lies in both M{i} and M{j}"))

    missing = adj.edges - covered
    extra = covered - adj.edges
    for e in sorted(missing)[:max_reported]:
        failures.append(Failure("union", f"lattice edge {e} not covered by any matching"))
    for e in sorted(extra)[:max_reported]:
        failures.append(Failure("union", f"pair {e} is not a lattice edge (or is over-covered)"))

    expected = expected_edge_count(s.spec)
    total = sum(covered.values())
    if total != expected or adj.num_edges != expected:
        failures.append(
            Failure("edge_count", f"matchings cover {total}, lattice has {adj.num_edges}, expected {expected}")
        )
    return ValidationReport(s.spec, expected, total, failures)


def dump_edge_list(s: StaggeredSet) -> str:
    """One ``"k: n m"`` line per coupled pair, ``k`` the 1-based matching index."""
    lines = [f"{k}: {a} {b}" for k, m in enumerate(s.matchings, 1) for a, b in m.pairs]
    return "\n".join(lines) + "\n"


def load_edge_list(text: str | Path, n_sites: int) -> list[Matching]:
    if isinstance(text, Path):
        text = text.read_text()
    pairs: dict[int, list[tuple[int, int]]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        k, rest = line.split(":")
        a, b = rest.split()
        pairs.setdefault(int(k), []).append((int(a), int(b)))
    return [Matching(n_sites, pairs.get(k, [])) for k in range(1, max(pairs) + 1)]
