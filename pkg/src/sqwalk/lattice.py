"""Site indexing and boundary identifications of the d x d lattice.

Sites are labelled 1..d**2 row-major, ``n = (row - 1) * d + col``, so the
first Kronecker factor of an operator acts on the row index and the second on
the column index.  Internally arrays are indexed from zero (``n - 1``).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class Topology(str, enum.Enum):
    TORUS = "torus"
    KLEIN_BOTTLE = "klein"
    PROJECTIVE_PLANE = "rp2"
    SPHERE = "sphere"


class Scheme(str, enum.Enum):
    AXIS_ALIGNED = "axis"
    INTERLEAVED = "interleaved"


_TOPOLOGY_ALIASES = {
    "torus": Topology.TORUS,
    "t2": Topology.TORUS,
    "klein": Topology.KLEIN_BOTTLE,
    "kleinbottle": Topology.KLEIN_BOTTLE,
    "klein_bottle": Topology.KLEIN_BOTTLE,
    "klein-bottle": Topology.KLEIN_BOTTLE,
    "kb": Topology.KLEIN_BOTTLE,
    "rp2": Topology.PROJECTIVE_PLANE,
    "projective": Topology.PROJECTIVE_PLANE,
    "projectiveplane": Topology.PROJECTIVE_PLANE,
    "projective_plane": Topology.PROJECTIVE_PLANE,
    "projective-plane": Topology.PROJECTIVE_PLANE,
    "sphere": Topology.SPHERE,
    "s2": Topology.SPHERE,
}

_SCHEME_ALIASES = {
    "axis": Scheme.AXIS_ALIGNED,
    "axisaligned": Scheme.AXIS_ALIGNED,
    "axis_aligned": Scheme.AXIS_ALIGNED,
    "axis-aligned": Scheme.AXIS_ALIGNED,
    "interleaved": Scheme.INTERLEAVED,
}


def parse_topology(value: str | Topology) -> Topology:
    if isinstance(value, Topology):
        return value
    try:
        return _TOPOLOGY_ALIASES[str(value).lower()]
    except KeyError:
        raise ValueError(f"unknown topology {value!r}") from None


def parse_scheme(value: str | Scheme) -> Scheme:
    if isinstance(value, Scheme):
        return value
    try:
        return _SCHEME_ALIASES[str(value).lower()]
    except KeyError:
        raise ValueError(f"unknown scheme {value!r}") from None


@dataclass(frozen=True)
class LatticeSpec:
    """Geometry and step frequencies of one experiment.

    ``omega_tau`` and ``kappa_tau`` are the dimensionless phases accumulated
    by a resonator and by a coupling during one sub-step of length tau.
    """

    d: int
    topology: Topology = Topology.TORUS
    scheme: Scheme = Scheme.AXIS_ALIGNED
    omega_tau: float = 2 * np.pi
    kappa_tau: float = np.pi / 3

    def __post_init__(self):
        object.__setattr__(self, "topology", parse_topology(self.topology))
        object.__setattr__(self, "scheme", parse_scheme(self.scheme))
        if int(self.d) != self.d or self.d < 4 or self.d % 2:
            raise ValueError(f"lattice side must be an even integer >= 4, got {self.d}")
        object.__setattr__(self, "d", int(self.d))
        if self.scheme is Scheme.INTERLEAVED and self.topology is not Topology.TORUS:
            raise ValueError("the interleaved scheme is only defined on the torus")

    @property
    def n_sites(self) -> int:
        return self.d * self.d

    @property
    def center(self) -> int:
        """Default starting site ``(d**2 - d) / 2``."""
        return (self.d * self.d - self.d) // 2

    @property
    def label(self) -> str:
        return curve_label(self.topology, self.scheme)


def curve_label(topology: Topology, scheme: Scheme) -> str:
    if scheme is Scheme.INTERLEAVED:
        return "T2p"
    return {
        Topology.TORUS: "T2",
        Topology.KLEIN_BOTTLE: "KB",
        Topology.PROJECTIVE_PLANE: "RP2",
        Topology.SPHERE: "S2",
    }[topology]


def site_of(row: int, col: int, d: int) -> int:
    """Return the 1-based site index of ``(row, col)``."""
    if not (1 <= row <= d and 1 <= col <= d):
        raise ValueError(f"coordinates ({row}, {col}) outside a {d}x{d} lattice")
    return (row - 1) * d + col


def coords_of(n: int, d: int) -> tuple[int, int]:
    if not 1 <= n <= d * d:
        raise ValueError(f"site {n} outside a {d}x{d} lattice")
    row, col = divmod(n - 1, d)
    return row + 1, col + 1


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class Adjacency:
    """Edge multiset of a lattice with glued boundaries.

    Edges are unordered site pairs with a multiplicity.  On the projective
    plane both twisted seams join the corner pairs ``(1,1)-(d,d)`` and
    ``(1,d)-(d,1)``, which therefore carry multiplicity 2; every other edge of
    every topology is simple.
    """

    def __init__(self, d: int, edges: Counter):
        self.d = d
        self.edges = edges

    @property
    def num_edges(self) -> int:
        """Edge count including multiplicity."""
        return sum(self.edges.values())

    @property
    def num_site_pairs(self) -> int:
        return len(self.edges)

    def __contains__(self, pair) -> bool:
        return _edge(*pair) in self.edges

    def multiplicity(self, a: int, b: int) -> int:
        return self.edges.get(_edge(a, b), 0)

    @cached_property
    def _neighbors(self) -> dict[int, list[int]]:
        nb: dict[int, list[int]] = {n: [] for n in range(1, self.d * self.d + 1)}
        for (a, b), k in self.edges.items():
            nb[a].extend([b] * k)
            nb[b].extend([a] * k)
        return nb

    def neighbors(self, n: int) -> list[int]:
        return sorted(self._neighbors[n])

    def degree(self, n: int) -> int:
        return len(self._neighbors[n])

    def to_dense(self) -> np.ndarray:
        """Dense adjacency with multiplicities as entries."""
        N = self.d * self.d
        A = np.zeros((N, N))
        for (a, b), k in self.edges.items():
            A[a - 1, b - 1] += k
            A[b - 1, a - 1] += k
        return A


def _grid_edges(d: int) -> list[tuple[int, int]]:
    out = []
    for i in range(1, d + 1):
        for j in range(1, d):
            out.append((site_of(i, j, d), site_of(i, j + 1, d)))
            out.append((site_of(j, i, d), site_of(j + 1, i, d)))
    return out


def boundary_edges(d: int, topology: Topology) -> list[tuple[int, int]]:
    """Edges created by gluing the sides of the square, one entry per seam crossing."""
    topology = parse_topology(topology)
    s = lambda i, j: site_of(i, j, d)  # noqa: E731
    r = range(1, d + 1)
    if topology is Topology.TORUS:
        return [(s(i, d), s(i, 1)) for i in r] + [(s(d, j), s(1, j)) for j in r]
    if topology is Topology.KLEIN_BOTTLE:
        return [(s(i, 1), s(d + 1 - i, d)) for i in r] + [(s(d, j), s(1, j)) for j in r]
    if topology is Topology.PROJECTIVE_PLANE:
        return [(s(i, 1), s(d + 1 - i, d)) for i in r] + [(s(1, j), s(d, d + 1 - j)) for j in r]
    # sphere: glue adjacent sides
    return (
        [(s(1, a), s(a, 1)) for a in range(2, d + 1)]
        + [(s(d, a), s(a, d)) for a in range(2, d)]
    )


def adjacency(spec: LatticeSpec) -> Adjacency:
    """Grid edges plus the seam edges of ``spec.topology``, with multiplicity."""
    edges = Counter(_edge(*e) for e in _grid_edges(spec.d))
    edges.update(_edge(*e) for e in boundary_edges(spec.d, spec.topology))
    return Adjacency(spec.d, edges)
