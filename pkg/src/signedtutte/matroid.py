"""Matroids as precomputed rank tables, and the joint Tutte polynomial of a pair.

Subsets of the ground set ``{0..n-1}`` are ``int`` bitmasks.  Every matroid
here carries its full rank table, so ``n`` is capped at :data:`MAX_GROUND`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graph import SignedGraph
from .poly import ONE, TriPoly, X, Y, Z, from_exponent_counts, pow_binomial

MAX_GROUND = 20


class MatroidError(ValueError):
    pass


class MatroidAxiomError(MatroidError):
    def __init__(self, axiom: str, detail: str):
        super().__init__(f"{axiom}: {detail}")
        self.axiom = axiom
        self.detail = detail


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, eq=False)
class Matroid:
    """A rank oracle over ``2**ground_size`` subsets, indexed by bitmask."""

    ground_size: int
    ranks: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.ground_size <= MAX_GROUND:
            raise MatroidError(f"ground set size must be in 0..{MAX_GROUND}")
        if len(self.ranks) != 1 << self.ground_size:
            raise MatroidError(
                f"rank table needs {1 << self.ground_size} entries, got {len(self.ranks)}"
            )
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))

    @classmethod
    def from_rank_function(cls, n: int, rank: Callable[[int], int]) -> "Matroid":
        if not 0 <= n <= MAX_GROUND:
            raise MatroidError(f"ground set size must be in 0..{MAX_GROUND}")
        return cls(n, tuple(rank(a) for a in range(1 << n)))

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[int]) -> "Matroid":
        bases = list(bases)
        if not bases:
            raise MatroidAxiomError("bases", "a matroid has at least one basis")
        m = cls.from_rank_function(n, lambda a: max(_popcount(a & b) for b in bases))
        sizes = {_popcount(b) for b in bases}
        if len(sizes) != 1:
            raise MatroidAxiomError("bases", f"bases have different sizes {sorted(sizes)}")
        m.validate()
        derived = set(m.bases())
        if derived != set(bases):
            raise MatroidAxiomError("bases", "basis family fails the exchange axiom")
        return m

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.ground_size == other.ground_size
            and self.ranks == other.ranks
        )

    def __hash__(self):
        return hash((self.ground_size, self.ranks))

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def rank(self, a: int | None = None) -> int:
        return self.ranks[self.full if a is None else a]

    @property
    def rank_of_ground(self) -> int:
        return self.ranks[self.full]

    def violations(self) -> list[str]:
        """Names and witnesses of violated rank axioms (empty when valid)."""
        r, n = self.ranks, self.ground_size
        out = []
        if r[0] != 0:
            out.append(f"normalization: r(empty) = {r[0]}")
        for a in range(1 << n):
            if r[a] < 0:
                out.append(f"nonnegativity: r({a:#b}) = {r[a]}")
            for e in range(n):
                if not a >> e & 1:
                    d = r[a | 1 << e] - r[a]
                    if d < 0:
                        out.append(f"monotonicity: r({a | 1 << e:#b}) < r({a:#b})")
                    elif d > 1:
                        out.append(f"unit increase: r({a | 1 << e:#b}) > r({a:#b}) + 1")
        if not out:
            # with unit increase and monotonicity, local submodularity is equivalent
            for a in range(1 << n):
                for e in range(n):
                    if a >> e & 1:
                        continue
                    for f in range(e + 1, n):
                        if a >> f & 1:
                            continue
                        if r[a | 1 << e | 1 << f] + r[a] > r[a | 1 << e] + r[a | 1 << f]:
                            out.append(
                                f"submodularity: fails at {a:#b} with elements {e},{f}"
                            )
        return out

    def validate(self) -> "Matroid":
        bad = self.violations()
        if bad:
            axiom, _, detail = bad[0].partition(": ")
            raise MatroidAxiomError(axiom, detail)
        return self

    def is_independent(self, a: int) -> bool:
        return self.ranks[a] == _popcount(a)

    def bases(self) -> list[int]:
        rk = self.rank_of_ground
        return [a for a in range(1 << self.ground_size)
                if _popcount(a) == rk and self.ranks[a] == rk]

    def circuits(self) -> list[int]:
        """Minimal dependent sets."""
        out = []
        for a in range(1, 1 << self.ground_size):
            if self.is_independent(a):
                continue
            if all(self.is_independent(a & ~(1 << e)) for e in range(self.ground_size) if a >> e & 1):
                out.append(a)
        return out

    def is_loop(self, e: int) -> bool:
        return self.ranks[1 << e] == 0

    def is_coloop(self, e: int) -> bool:
        return self.ranks[self.full & ~(1 << e)] == self.rank_of_ground - 1


def cycle_matroid(g: SignedGraph) -> Matroid:
    return Matroid.from_rank_function(g.edge_count, g.cycle_rank)


def frame_matroid(g: SignedGraph) -> Matroid:
    return Matroid.from_rank_function(g.edge_count, g.frame_rank)


def free_matroid(n: int) -> Matroid:
    return Matroid.from_rank_function(n, _popcount)


def zero_matroid(n: int) -> Matroid:
    return Matroid(n, (0,) * (1 << n))


def uniform_matroid(r: int, n: int) -> Matroid:
    return Matroid.from_rank_function(n, lambda a: min(_popcount(a), r))


def dual(m: Matroid) -> Matroid:
    full, rk = m.full, m.rank_of_ground
    return Matroid(
        m.ground_size,
        tuple(m.ranks[full & ~a] + _popcount(a) - rk for a in range(1 << m.ground_size)),
    )


def is_perspective(m2: Matroid, m1: Matroid) -> bool:
    """True iff every circuit of ``m2`` is a union of circuits of ``m1``."""
    if m1.ground_size != m2.ground_size:
        raise MatroidError("ground sets differ")
    c1 = m1.circuits()
    for c in m2.circuits():
        covered = 0
        for d in c1:
            if d & ~c == 0:
                covered |= d
        if covered != c:
            return False
    return True


def joint_tutte(m1: Matroid, m2: Matroid) -> TriPoly:
    """Subset expansion of the joint Tutte polynomial S_{M1,M2}(X, Y, Z)."""
    if m1.ground_size != m2.ground_size:
        raise MatroidError(
            f"ground sizes differ: {m1.ground_size} vs {m2.ground_size}"
        )
    r1, r2 = m1.ranks, m2.ranks
    r1e = m1.rank_of_ground
    counts: Counter = Counter()
    for a in range(1 << m1.ground_size):
        counts[(r1e - r1[a], _popcount(a) - r2[a], r2[a] + r1e - r1[a])] += 1
    return from_exponent_counts(counts)


def matroid_tutte(m: Matroid) -> TriPoly:
    """Classical T_M(X, Y), returned as a TriPoly with no Z."""
    r, re_ = m.ranks, m.rank_of_ground
    counts: Counter = Counter()
    for a in range(1 << m.ground_size):
        counts[(re_ - r[a], _popcount(a) - r[a], 0)] += 1
    return from_exponent_counts(counts)


def specialize_to_m1(s: TriPoly, r1e: int) -> TriPoly:
    """T_{M1}(X,Y) = (Y-1)^{-r1(E)} S(X, Y, Y)."""
    return s.compose(X, Y, Y).divide_by_binomial("Y", r1e)


def specialize_to_m2(s: TriPoly, r2e: int) -> TriPoly:
    """T_{M2}(X,Y) = (X-1)^{r2(E)} S(X, Y, X/(X-1)), cleared of denominators exactly."""
    num, _ = s.substitute_rational({"Z": (X, X - 1)})
    dz = s.degree("Z")
    if r2e >= dz:
        return num * pow_binomial("X", r2e - dz)
    return num.divide_by_binomial("X", dz - r2e)


def _as_identity(lhs_num: TriPoly, lhs_exps: dict, rhs_num: TriPoly, rhs_exps: dict) -> bool:
    """Compare ``lhs_num * prod (v-1)^e`` with the same on the right, exponents signed."""
    lhs, rhs = lhs_num, rhs_num
    for var in "XYZ":
        d = lhs_exps.get(var, 0) - rhs_exps.get(var, 0)
        if d > 0:
            lhs = lhs * pow_binomial(var, d)
        elif d < 0:
            rhs = rhs * pow_binomial(var, -d)
    return lhs == rhs


def duality_swapped_holds(m1: Matroid, m2: Matroid) -> bool:
    """S_{M2*,M1*}(X,Y,Z) = (Z-1)^{|E|} S_{M1,M2}(Y, X, Z/(Z-1)), denominators cleared."""
    s = joint_tutte(m1, m2)
    lhs = joint_tutte(dual(m2), dual(m1))
    num, _ = s.substitute_rational({"X": (Y, ONE), "Y": (X, ONE), "Z": (Z, Z - 1)})
    # S(...) = num / (Z-1)^{deg_Z s}
    return _as_identity(lhs, {"Z": s.degree("Z")}, num, {"Z": m1.ground_size})


def duality_same_order_holds(m1: Matroid, m2: Matroid) -> bool:
    """S_{M1*,M2*} = (X-1)^{-r1}(Y-1)^{r2}(Z-1)^{|E|-r1-r2} S_{M1,M2}(Y, X, 1+(X-1)(Z-1)/(Y-1))."""
    s = joint_tutte(m1, m2)
    lhs = joint_tutte(dual(m1), dual(m2))
    r1, r2, n = m1.rank_of_ground, m2.rank_of_ground, m1.ground_size
    w_num = (Y - 1) + (X - 1) * (Z - 1)
    num, _ = s.substitute_rational({"X": (Y, ONE), "Y": (X, ONE), "Z": (w_num, Y - 1)})
    # S(...) = num / (Y-1)^{deg_Z s}
    return _as_identity(
        lhs,
        {"X": r1, "Y": s.degree("Z")},
        num,
        {"Y": r2, "Z": n - r1 - r2},
    )


def las_vergnas_candidate(m1: Matroid, m2: Matroid) -> TriPoly:
    """W^{r2(E)} S_{M1,M2}(X, Y, 1 + 1/W) with W in the Z slot; polynomial for perspectives."""
    s = joint_tutte(m1, m2)
    # Z - 1 = 1/W, so Z = (W + 1)/W
    num, _ = s.substitute_rational({"Z": (Z + 1, Z)})
    dz = s.degree("Z")
    r2 = m2.rank_of_ground
    if r2 >= dz:
        return num.shift(k=r2 - dz)
    low = min((m[2] for m, _ in num.items()), default=dz)
    if low < dz - r2:
        raise MatroidError("not a polynomial: pair is not a perspective")
    return TriPoly({(i, j, k - (dz - r2)): c for (i, j, k), c in num.items()})


def parse_matroid(text: str) -> Matroid:
    """Read the ``ground <n>`` / ``ranks`` | ``bases`` text format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise MatroidError("empty matroid file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "ground" or not parts[1].isdigit():
        raise MatroidError(f"line {lineno}: expected 'ground <n>'")
    n = int(parts[1])
    if len(lines) < 2 or lines[1][1] not in ("ranks", "bases"):
        raise MatroidError("second line must be 'ranks' or 'bases'")
    kind = lines[1][1]
    values: list[int] = []
    for lineno, line in lines[2:]:
        for tok in line.split():
            try:
                values.append(int(tok, 0))
            except ValueError:
                raise MatroidError(f"line {lineno}: bad integer {tok!r}") from None
    if kind == "ranks":
        if len(values) != 1 << n:
            raise MatroidError(f"expected {1 << n} rank values, got {len(values)}")
        return Matroid(n, tuple(values))
    for b in values:
        if b < 0 or b >> n:
            raise MatroidError(f"basis bitmask {b} out of range for ground {n}")
    return Matroid.from_bases(n, values)


def render_matroid(m: Matroid) -> str:
    lines = [f"ground {m.ground_size}", "ranks"]
    row = 16
    for i in range(0, len(m.ranks), row):
        lines.append(" ".join(str(r) for r in m.ranks[i:i + row]))
    return "\n".join(lines) + "\n"


def rank_gap_profile(g: SignedGraph, masks: Sequence[int] | None = None) -> bool:
    """r_F(A) - r_M(A) = k_u of (V, A) and is nonnegative for every A."""
    if masks is None:
        masks = range(1 << g.edge_count)
    for a in masks:
        prof = g.component_profile(a)
        gap = g.frame_rank(a) - g.cycle_rank(a)
        if gap != prof.k_u or gap < 0:
            return False
    return True
