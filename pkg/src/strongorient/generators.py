"""Graph families: basic graphs, barbell, lollipop, random regular, and the
clique-appended tightness construction.

All generators emit canonical edge order (sorted (u,v) pairs), so orientation
bit indices are reproducible across runs.  Randomized families are pure
functions of (parameters, seed).

Random regular graphs use the pairing (configuration) model.  Whole-sample
rejection of loops and multi-edges gives exactly uniform simple outcomes, but
its acceptance probability decays like exp(-(d-1)/2 - (d-1)^2/4): fine for
d <= 5, already flaky at d = 6 (about 1.6e-4 per attempt, so the attempt cap
fails roughly one run in five) and astronomically small at d = 24.  Above
the feasibility line the sampler switches to stub matching with restart on
stuck states (the standard asymptotically uniform approach); the method
actually used is recorded on request via ``regular_method``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import DomainError, SamplingError
from .graph import Graph
from .rng import derive_seed

REJECTION_CAP = 10_000
MATCHING_CAP = 10_000
TIGHT_SIZE_GUARD = 10 ** 6
# ln(1/acceptance) ~ lam + lam^2 with lam = (d-1)/2; keep expected attempts
# comfortably inside the rejection cap
_REJECTION_MAX_LOG = 7.0


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair independently with probability p."""
    if n < 1:
        raise DomainError("erdos_renyi needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise DomainError("edge probability must lie in [0,1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def barbell(n: int) -> Graph:
    """Two disjoint K_{n/2} joined by one bridge.

    The bridge runs between vertex n/2-1 (last of the first clique) and
    vertex n/2 (first of the second).
    """
    if n < 6 or n % 2:
        raise DomainError("barbell needs even n >= 6")
    half = n // 2
    edges = []
    for base in (0, half):
        edges.extend(
            (base + u, base + v) for u in range(half) for v in range(u + 1, half)
        )
    edges.append((half - 1, half))
    return Graph(n, edges)


def lollipop(n: int) -> Graph:
    """K_{n-1} plus a pendant vertex n-1 attached to vertex 0."""
    if n < 3:
        raise DomainError("lollipop needs n >= 3")
    edges = [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]
    edges.append((0, n - 1))
    return Graph(n, edges)


def regular_method(n: int, d: int) -> str:
    """Which pairing variant random_regular would use for (n, d)."""
    lam = (d - 1) / 2.0
    return "rejection" if lam + lam * lam <= _REJECTION_MAX_LOG else "matching"


def random_regular(n: int, d: int, seed: int, method: str = "auto") -> Graph:
    """Random simple d-regular graph by the pairing model.

    method "rejection" resamples the whole pairing until simple (exactly
    uniform); "matching" re-pairs only colliding stubs, restarting on stuck
    states; "auto" picks by feasibility (see module docstring).
    """
    if n < 4:
        raise DomainError("random regular graph needs n >= 4")
    if not 0 <= d < n:
        raise DomainError("degree must satisfy 0 <= d < n")
    if (n * d) % 2:
        raise DomainError(f"n*d must be even, got n={n}, d={d}")
    if method == "auto":
        method = regular_method(n, d)
    if method not in ("rejection", "matching"):
        raise DomainError("method must be 'rejection', 'matching', or 'auto'")
    if d == 0:
        return Graph(n, [])
    rng = random.Random(seed)
    if method == "rejection":
        return _regular_rejection(rng, n, d)
    return _regular_matching(rng, n, d)


def _regular_rejection(rng: random.Random, n: int, d: int) -> Graph:
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(REJECTION_CAP):
        rng.shuffle(stubs)
        seen = set()
        simple = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                simple = False
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                simple = False
                break
            seen.add(e)
        if simple:
            return Graph(n, sorted(seen))
    raise SamplingError(
        f"pairing rejection cap ({REJECTION_CAP}) exceeded for n={n}, d={d}"
    )


def _regular_matching(rng: random.Random, n: int, d: int) -> Graph:
    for _ in range(MATCHING_CAP):
        edges = _try_matching(rng, n, d)
        if edges is not None:
            return Graph(n, sorted(edges))
    raise SamplingError(
        f"stub matching restart cap ({MATCHING_CAP}) exceeded for n={n}, d={d}"
    )


def _try_matching(rng: random.Random, n: int, d: int):
    """One pass of pairing with collision re-queue; None if stuck."""
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover = []
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (u, v) if u < v else (v, u)
            if u != v and e not in edges:
                edges.add(e)
            else:
                leftover.append(u)
                leftover.append(v)
        if len(leftover) == len(stubs):
            # no progress; check whether any suitable pair remains
            if not _has_suitable_pair(leftover, edges):
                return None
        stubs = leftover
    return edges


def _has_suitable_pair(stubs: list[int], edges: set[tuple[int, int]]) -> bool:
    distinct = sorted(set(stubs))
    for i, u in enumerate(distinct):
        for v in distinct[i + 1:]:
            if (u, v) not in edges:
                return True
    return False


def tight_example(t: int, c: int, seed: int) -> Graph:
    """N = 2^t disjoint cliques K_{ct}, distinguished vertices wired t-regular.

    Vertices are clique-major: clique i occupies ids [i*ct, (i+1)*ct) with the
    distinguished vertex first.  n = c*t*N and m = N*C(ct,2) + N*t/2.
    """
    if t < 2:
        raise DomainError("tight example needs t >= 2")
    if c < 2:
        raise DomainError("tight example needs c >= 2")
    big_n = 1 << t
    ct = c * t
    if big_n * ct > TIGHT_SIZE_GUARD:
        raise DomainError(
            f"tight example size guard: N*c*t = {big_n * ct} > {TIGHT_SIZE_GUARD}"
        )
    wiring = random_regular(big_n, t, derive_seed(seed, 0xD15))
    edges = []
    for i in range(big_n):
        base = i * ct
        edges.extend(
            (base + u, base + v) for u in range(ct) for v in range(u + 1, ct)
        )
    edges.extend((u * ct, v * ct) for u, v in wiring.edges)
    return Graph(big_n * ct, edges)


def standard(family: str, n: int, p: float | None = None, seed: int = 0) -> Graph:
    """Basic families by name: complete, cycle, path, erdos_renyi."""
    if family == "complete":
        return complete(n)
    if family == "cycle":
        return cycle(n)
    if family == "path":
        return path(n)
    if family == "erdos_renyi":
        if p is None:
            raise DomainError("erdos_renyi needs an edge probability")
        return erdos_renyi(n, p, seed)
    raise DomainError(f"unknown standard family '{family}'")


@dataclass(frozen=True)
class GenSpec:
    """Parsed generator specification ``family:param[,param...]``."""

    family: str
    params: tuple

    def to_json_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params)}

    def spec_string(self) -> str:
        return f"{self.family}:" + ",".join(str(p) for p in self.params)


_FAMILY_ALIASES = {
    "complete": "complete",
    "cycle": "cycle",
    "path": "path",
    "er": "erdos_renyi",
    "erdos_renyi": "erdos_renyi",
    "barbell": "barbell",
    "lollipop": "lollipop",
    "regular": "random_regular",
    "random_regular": "random_regular",
    "tight": "tight_example",
    "tight_example": "tight_example",
}

_FAMILY_ARITY = {
    "complete": (1, (int,)),
    "cycle": (1, (int,)),
    "path": (1, (int,)),
    "erdos_renyi": (2, (int, float)),
    "barbell": (1, (int,)),
    "lollipop": (1, (int,)),
    "random_regular": (2, (int, int)),
    "tight_example": (2, (int, int)),
}


def parse_genspec(text: str) -> GenSpec:
    """Parse ``family:param[,param...]`` (e.g. barbell:6, regular:16,4)."""
    head, sep, tail = text.partition(":")
    family = _FAMILY_ALIASES.get(head.strip().lower())
    if family is None:
        raise DomainError(f"unknown graph family '{head.strip()}'")
    arity, types = _FAMILY_ARITY[family]
    if not sep or not tail.strip():
        raise DomainError(f"family '{family}' needs {arity} parameter(s)")
    raw = [s.strip() for s in tail.split(",")]
    if len(raw) != arity:
        raise DomainError(
            f"family '{family}' needs {arity} parameter(s), got {len(raw)}"
        )
    params = []
    for s, typ in zip(raw, types):
        try:
            params.append(typ(s) if typ is not float else float(s))
        except ValueError:
            raise DomainError(f"bad parameter '{s}' for family '{family}'")
    return GenSpec(family, tuple(params))


def build_graph(spec: GenSpec, seed: int = 0) -> Graph:
    """Materialize a GenSpec; randomized families consume the seed."""
    f = spec.family
    p = spec.params
    if f == "complete":
        return complete(p[0])
    if f == "cycle":
        return cycle(p[0])
    if f == "path":
        return path(p[0])
    if f == "erdos_renyi":
        return erdos_renyi(p[0], p[1], seed)
    if f == "barbell":
        return barbell(p[0])
    if f == "lollipop":
        return lollipop(p[0])
    if f == "random_regular":
        return random_regular(p[0], p[1], seed)
    if f == "tight_example":
        return tight_example(p[0], p[1], seed)
    raise DomainError(f"unknown graph family '{f}'")
