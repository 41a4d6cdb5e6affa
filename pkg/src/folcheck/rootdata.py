"""Root systems, weights, and homogeneous-bundle bookkeeping built on them.

Everything here is exact: Cartan data are integers, the invariant pairing is
rational (``Fraction``), and derived quantities (Weyl dimensions, first Chern
numbers, dual Levi weights) never touch floating point.

Weights are stored in the fundamental-weight basis as integer tuples, for a
simple type or a product of simple types.  Node numbering follows Bourbaki
throughout; for types E and F the branch node conventions are

* E6/E7/E8: chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4,
* F4: chain 1-2-3-4 with 1,2 long and 3,4 short.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

__all__ = [
    "RootSystem",
    "Weight",
    "build_root_system",
    "parse_system",
    "pairing",
    "weyl_dim",
    "c1_irreducible",
    "levi_subsystem",
    "dual_levi_weight",
    "cotangent_weight",
    "bbw_h0",
    "dominantize",
    "orbit_size",
    "expand_orbit",
]

VALID_TYPES = "ABCDEFG"

# number of positive roots and Weyl group order by (letter, rank)
def _positive_root_count(letter: str, rank: int) -> int:
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in ("B", "C"):
        return rank * rank
    if letter == "D":
        return rank * (rank - 1)
    if letter == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if letter == "F":
        return 24
    return 6  # G2


def _weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if letter == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if letter == "F":
        return 1152
    return 12  # G2


def _validate_component(letter: str, rank: int) -> None:
    if letter not in VALID_TYPES:
        raise ValueError(f"unknown type letter {letter!r}")
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    if letter == "B" and rank < 2:
        raise ValueError("type B needs rank >= 2")
    if letter == "C" and rank < 2:
        raise ValueError("type C needs rank >= 2")
    if letter == "D" and rank < 3:
        raise ValueError("type D needs rank >= 3")
    if letter == "E" and rank not in (6, 7, 8):
        raise ValueError("type E exists only for ranks 6, 7, 8")
    if letter == "F" and rank != 4:
        raise ValueError("type F exists only for rank 4")
    if letter == "G" and rank != 2:
        raise ValueError("type G exists only for rank 2")


def _component_edges(letter: str, rank: int) -> list[tuple[int, int]]:
    """Dynkin edges as 0-based node pairs (unmarked adjacency)."""
    if letter in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(rank - 1)]
    if letter == "D":
        edges = [(i, i + 1) for i in range(rank - 2)]
        edges.append((rank - 3, rank - 1))
        return edges
    # E types: chain 1-3-4-...-rank with 2 hung off 4 (Bourbaki, 1-based)
    chain = [0, 2] + list(range(3, rank))
    edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    edges.append((1, 3))
    return edges


def _component_cartan(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee> (Bourbaki)."""
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    for i, j in _component_edges(letter, rank):
        c[i][j] = -1
        c[j][i] = -1
    if letter == "B" and rank >= 2:
        # alpha_r short: the short-root row carries the -2
        c[rank - 1][rank - 2] = -2
    if letter == "C" and rank >= 2:
        # alpha_r long
        c[rank - 2][rank - 1] = -2
    if letter == "F":
        # nodes 1,2 long, 3,4 short
        c[2][1] = -2
    if letter == "G":
        # alpha_1 short, alpha_2 long
        c[0][1] = -3
    return c


def _invert_exact(mat: list[list[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan over Fraction."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True)
class Weight:
    """Weight in the fundamental basis (integer coordinates, full rank).

    For type-A components an epsilon-basis view is available through the
    owning root system (``RootSystem.to_epsilon``).
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def serialize(self) -> str:
        return ",".join(str(c) for c in self.coords)

    @classmethod
    def deserialize(cls, text: str) -> "Weight":
        return cls(tuple(int(t) for t in text.split(",")))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))


def _as_coords(w) -> tuple[int, ...]:
    return w.coords if isinstance(w, Weight) else tuple(int(c) for c in w)


class RootSystem:
    """A simple root system or a product of simple ones.

    Fields follow the obvious meanings; ``positive_roots`` are fundamental
    coordinates, ``simple_coords`` the corresponding root-basis coordinates.
    Instances are immutable and hashable by their component signature.
    """

    __slots__ = (
        "components", "rank", "cartan", "inverse_cartan", "offsets",
        "positive_roots", "simple_coords", "highest_root_per_component",
        "weyl_vector", "root_lengths", "_gram_num", "_gram_den",
        "_pos_pairing_vecs", "name",
    )

    def __init__(self, components: tuple[tuple[str, int], ...]):
        for letter, rank in components:
            _validate_component(letter, rank)
        self.components = tuple(components)
        self.rank = sum(r for _, r in components)
        self.name = "x".join(f"{t}{r}" for t, r in components)

        offsets = []
        pos = 0
        for _, r in components:
            offsets.append(pos)
            pos += r
        self.offsets = tuple(offsets)

        n = self.rank
        cart = [[0] * n for _ in range(n)]
        lengths = [0] * n
        for (letter, r), off in zip(components, offsets):
            block = _component_cartan(letter, r)
            for i in range(r):
                for j in range(r):
                    cart[off + i][off + j] = block[i][j]
            for i, d in enumerate(_root_length_halves(letter, r)):
                lengths[off + i] = d
        self.cartan = tuple(tuple(row) for row in cart)
        self.inverse_cartan = _invert_exact(cart)
        self.root_lengths = tuple(lengths)

        # Gram matrix of fundamental weights: G[i][j] = (lambda_i, lambda_j)
        # = inverse_cartan[j][i] * d_j, scaled to integers for fast pairing.
        gram = [[self.inverse_cartan[j][i] * lengths[j] for j in range(n)]
                for i in range(n)]
        den = 1
        for row in gram:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        self._gram_den = den
        self._gram_num = tuple(
            tuple(int(x * den) for x in row) for row in gram
        )

        pos_roots, simple_coords = self._generate_positive_roots()
        self.positive_roots = pos_roots
        self.simple_coords = simple_coords
        self.highest_root_per_component = tuple(
            self._highest_root(ci) for ci in range(len(components))
        )
        self.weyl_vector = Weight((1,) * n)
        self._pos_pairing_vecs = tuple(
            tuple(sum(self._gram_num[i][j] * a.coords[j] for j in range(n))
                  for i in range(n))
            for a in pos_roots
        )

    # -- construction helpers -------------------------------------------

    def _generate_positive_roots(self):
        n = self.rank
        simple = []
        for j in range(n):
            simple.append(tuple(self.cartan[i][j] for i in range(n)))
        # reflection closure; track root-basis coordinates alongside
        seen = {}
        for j, fund in enumerate(simple):
            sc = [0] * n
            sc[j] = 1
            seen[fund] = tuple(sc)
        frontier = list(seen.items())
        while frontier:
            new = []
            for fund, sc in frontier:
                for i in range(n):
                    ci = fund[i]
                    if ci == 0:
                        continue
                    refl = list(fund)
                    rsc = list(sc)
                    for m in range(n):
                        refl[m] -= ci * self.cartan[m][i]
                    rsc[i] -= ci  # alpha_i has root coords e_i
                    refl = tuple(refl)
                    if refl not in seen:
                        seen[refl] = tuple(rsc)
                        new.append((refl, tuple(rsc)))
            frontier = new
        pos = []
        for fund, sc in seen.items():
            if all(c >= 0 for c in sc) and any(sc):
                pos.append((Weight(fund), sc))
        pos.sort(key=lambda p: (sum(p[1]), p[1]))
        expected = sum(_positive_root_count(t, r) for t, r in self.components)
        if len(pos) != expected:
            raise RuntimeError(
                f"positive root closure produced {len(pos)}, expected {expected}"
            )
        return tuple(p[0] for p in pos), tuple(p[1] for p in pos)

    def _highest_root(self, comp_index: int) -> Weight:
        lo = self.offsets[comp_index]
        hi = lo + self.components[comp_index][1]
        best = None
        best_h = -1
        for w, sc in zip(self.positive_roots, self.simple_coords):
            if any(sc[j] for j in range(len(sc)) if not lo <= j < hi):
                continue
            h = sum(sc)
            if h > best_h:
                best_h = h
                best = w
        return best

    # -- basic queries ---------------------------------------------------

    def component_of_node(self, k: int) -> int:
        """Component index owning 1-based node k."""
        if not 1 <= k <= self.rank:
            raise ValueError(f"node {k} out of range for {self.name}")
        for ci in reversed(range(len(self.components))):
            if k - 1 >= self.offsets[ci]:
                return ci
        raise AssertionError

    def fundamental_weight(self, k: int) -> Weight:
        coords = [0] * self.rank
        coords[k - 1] = 1
        return Weight(tuple(coords))

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank)

    def weyl_order(self) -> int:
        out = 1
        for t, r in self.components:
            out *= _weyl_order(t, r)
        return out

    def pairing_num(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        """Pairing scaled by the integer gram denominator."""
        g = self._gram_num
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = g[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    # -- epsilon view for type-A components ------------------------------

    def to_epsilon(self, w, comp_index: int = 0) -> tuple[int, ...]:
        """Epsilon (partition-content) coordinates of a type-A component.

        Returns the unique nonincreasing-free representative normalized so
        the last coordinate is zero; round-trips with ``from_epsilon``.
        """
        letter, r = self.components[comp_index]
        if letter != "A":
            raise ValueError("epsilon view only defined for type A components")
        off = self.offsets[comp_index]
        coords = _as_coords(w)[off:off + r]
        eps = [0] * (r + 1)
        # l_i - l_{i+1} = coords[i], normalize l_{r+1} = 0
        for i in reversed(range(r)):
            eps[i] = eps[i + 1] + coords[i]
        return tuple(eps)

    def from_epsilon(self, eps, comp_index: int = 0) -> Weight:
        letter, r = self.components[comp_index]
        if letter != "A":
            raise ValueError("epsilon view only defined for type A components")
        if len(eps) != r + 1:
            raise ValueError("epsilon vector must have length rank+1")
        coords = [0] * self.rank
        off = self.offsets[comp_index]
        for i in range(r):
            coords[off + i] = eps[i] - eps[i + 1]
        return Weight(tuple(coords))

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)


def _root_length_halves(letter: str, rank: int) -> list[int]:
    """d_i = (alpha_i, alpha_i)/2 normalized so short roots have d=1."""
    if letter in ("A", "D", "E"):
        return [1] * rank
    if letter == "B":
        return [2] * (rank - 1) + [1]
    if letter == "C":
        return [1] * (rank - 1) + [2]
    if letter == "F":
        return [2, 2, 1, 1]
    return [1, 3]  # G2


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def parse_system(name: str) -> tuple[tuple[str, int], ...]:
    """Parse strings like ``A7`` or ``A2xA4`` into component tuples."""
    parts = name.replace(" ", "").split("x")
    comps = []
    for p in parts:
        if not p or p[0].upper() not in VALID_TYPES or not p[1:].isdigit():
            raise ValueError(f"cannot parse root system {name!r}")
        comps.append((p[0].upper(), int(p[1:])))
    return tuple(comps)


@lru_cache(maxsize=None)
def _build_cached(components: tuple[tuple[str, int], ...]) -> RootSystem:
    return RootSystem(components)


def build_root_system(components) -> RootSystem:
    """Build a root system from ``"A7"``, ``"A2xA4"`` or component tuples."""
    if isinstance(components, RootSystem):
        return components
    if isinstance(components, str):
        components = parse_system(components)
    comps = tuple((str(t).upper(), int(r)) for t, r in components)
    return _build_cached(comps)


# ---------------------------------------------------------------------------
# pairing, dimensions, Chern numbers


def pairing(rs: RootSystem, mu, nu) -> Fraction:
    """Killing-form induced pairing of two weights, exact."""
    u, v = _as_coords(mu), _as_coords(nu)
    if len(u) != rs.rank or len(v) != rs.rank:
        raise ValueError("weight rank mismatch")
    return Fraction(rs.pairing_num(u, v), rs._gram_den)


def weyl_dim(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible with highest weight ``lam`` (dominant)."""
    lc = _as_coords(lam)
    if len(lc) != rs.rank:
        raise ValueError("weight rank mismatch")
    if any(c < 0 for c in lc):
        raise ValueError(f"weight {lc} is not dominant")
    shifted = tuple(c + 1 for c in lc)
    num = 1
    den = 1
    for vec in rs._pos_pairing_vecs:
        num *= sum(a * b for a, b in zip(shifted, vec))
        den *= sum(vec)
    assert num % den == 0, "Weyl dimension did not come out integral"
    return num // den


def dominantize(rs: RootSystem, w) -> tuple[int, ...]:
    """Dominant Weyl-orbit representative, as a coordinate tuple."""
    coords = list(_as_coords(w))
    n = rs.rank
    cart = rs.cartan
    while True:
        for i in range(n):
            ci = coords[i]
            if ci < 0:
                for m in range(n):
                    coords[m] -= ci * cart[m][i]
                break
        else:
            return tuple(coords)


def orbit_size(rs: RootSystem, dominant_w) -> int:
    """Size of the Weyl orbit of a dominant weight, exactly.

    Equals |W| / |W_stab| where the stabilizer is the parabolic generated by
    the simple reflections fixing the weight.
    """
    coords = _as_coords(dominant_w)
    zero_nodes = frozenset(i for i, c in enumerate(coords) if c == 0)
    return rs.weyl_order() // _parabolic_order(rs, zero_nodes)


@lru_cache(maxsize=None)
def _parabolic_order_cached(rs_components, cartan, nodes: frozenset) -> int:
    # connected components of the sub-diagram spanned by `nodes`
    nodes = sorted(nodes)
    if not nodes:
        return 1
    adj = {i: [] for i in nodes}
    for i in nodes:
        for j in nodes:
            if i != j and cartan[i][j] != 0:
                adj[i].append(j)
    seen = set()
    order = 1
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        sub = [[cartan[i][j] for j in comp] for i in comp]
        letter, rank = _classify_cartan(sub)
        order *= _weyl_order(letter, rank)
    return order


def _parabolic_order(rs: RootSystem, nodes: frozenset) -> int:
    return _parabolic_order_cached(rs.components, rs.cartan, nodes)


def _classify_cartan(sub: list[list[int]]) -> tuple[str, int]:
    """Identify the simple type of a connected Cartan matrix.

    Uses (rank, root count, length multiset), which separates all finite
    types; rank-coincidences like (A3, D3) resolve to the A-side label.
    """
    rank = len(sub)
    if rank == 1:
        return ("A", 1)
    target = _cartan_signature(sub)
    # simply-laced candidates first so rank coincidences resolve to A-labels
    for letter in "ADEBCFG":
        try:
            _validate_component(letter, rank)
        except ValueError:
            continue
        cand = _component_cartan(letter, rank)
        if _cartan_signature(cand) == target:
            return (letter, rank)
    raise ValueError(f"unrecognized Cartan matrix of rank {rank}")


def _cartan_signature(mat: list[list[int]]):
    rank = len(mat)
    # degree sequence with off-diagonal labels, plus root count via closure
    comps = tuple(sorted(tuple(sorted(mat[i][j] for j in range(rank) if j != i and mat[i][j]))
                         for i in range(rank)))
    return (rank, comps, _closure_count(mat))


def _closure_count(mat: list[list[int]]) -> int:
    rank = len(mat)
    simple = [tuple(mat[i][j] for i in range(rank)) for j in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for fund in frontier:
            for i in range(rank):
                ci = fund[i]
                if ci == 0:
                    continue
                refl = tuple(fund[m] - ci * mat[m][i] for m in range(rank))
                if refl not in seen:
                    seen.add(refl)
                    new.append(refl)
        frontier = new
    return len(seen) // 2


def expand_orbit(rs: RootSystem, w) -> list[tuple[int, ...]]:
    """All weights in the Weyl orbit of ``w`` (BFS over simple reflections)."""
    start = _as_coords(w)
    n = rs.rank
    cart = rs.cartan
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for x in frontier:
            for i in range(n):
                ci = x[i]
                if ci == 0:
                    continue
                y = tuple(x[m] - ci * cart[m][i] for m in range(n))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return list(seen)


def c1_irreducible(rs: RootSystem, k: int, mu) -> int:
    """First Chern number of the irreducible bundle E_mu on G/P_k.

    rk(E_mu) * <mu, lambda_k> / <lambda_k, lambda_k>, with the rank computed
    as the Weyl dimension of the Levi restriction.  The result must come out
    an integer; anything else signals inconsistent input data.
    """
    mc = _as_coords(mu)
    if len(mc) != rs.rank:
        raise ValueError("weight rank mismatch")
    if any(c < 0 for i, c in enumerate(mc) if i != k - 1):
        raise ValueError(f"{mc} is not P_{k}-dominant")
    rk = levi_dim(rs, k, mc)
    lam_k = rs.fundamental_weight(k)
    val = rk * pairing(rs, mc, lam_k) / pairing(rs, lam_k, lam_k)
    if val.denominator != 1:
        raise ArithmeticError(f"c1 came out non-integral: {val}")
    return int(val)


# ---------------------------------------------------------------------------
# Levi subsystems


@dataclass(frozen=True)
class LeviData:
    """Levi subsystem of a maximal parabolic, with the node dictionary."""

    subsystem: RootSystem
    parent_nodes: tuple[int, ...]  # 1-based parent node per sub node
    removed_node: int

    def restrict(self, w) -> tuple[int, ...]:
        coords = _as_coords(w)
        return tuple(coords[p - 1] for p in self.parent_nodes)


@lru_cache(maxsize=None)
def _levi_cached(components, k: int) -> LeviData:
    rs = build_root_system(components)
    nodes = [i for i in range(rs.rank) if i != k - 1]
    if not nodes:
        return LeviData(None, (), k)
    adj = {i: [j for j in nodes if j != i and rs.cartan[i][j] != 0] for i in nodes}
    seen = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    # classify each component and order its nodes canonically
    letters = []
    ordered_nodes: list[int] = []
    for comp in comps:
        sub = [[rs.cartan[i][j] for j in comp] for i in comp]
        letter, rank = _classify_cartan(sub)
        perm = _canonical_node_order(sub, letter, rank)
        letters.append((letter, rank))
        ordered_nodes.extend(comp[p] for p in perm)
    sub_rs = build_root_system(tuple(letters))
    return LeviData(sub_rs, tuple(i + 1 for i in ordered_nodes), k)


def _canonical_node_order(sub, letter: str, rank: int) -> list[int]:
    """Permutation mapping local node positions to Bourbaki order."""
    if rank == 1:
        return [0]
    want = _component_cartan(letter, rank)
    # backtracking match of the labeled graph; ranks here are tiny
    def extend(assign: list[int], used: set[int]):
        pos = len(assign)
        if pos == rank:
            return assign
        for cand in range(rank):
            if cand in used:
                continue
            ok = True
            for prev in range(pos):
                if sub[cand][assign[prev]] != want[pos][prev] or \
                   sub[assign[prev]][cand] != want[prev][pos]:
                    ok = False
                    break
            if ok:
                res = extend(assign + [cand], used | {cand})
                if res is not None:
                    return res
        return None

    res = extend([], set())
    if res is None:
        raise ValueError("could not align Cartan block to Bourbaki order")
    return res


def levi_subsystem(rs: RootSystem, k: int) -> LeviData:
    """Delete 1-based node k; returns the product system plus node map."""
    if not 1 <= k <= rs.rank:
        raise ValueError(f"node {k} out of range for {rs.name}")
    return _levi_cached(rs.components, k)


def levi_dim(rs: RootSystem, k: int, mu) -> int:
    """Dimension of the irreducible Levi representation with h.w. ``mu``."""
    levi = levi_subsystem(rs, k)
    if levi.subsystem is None:
        return 1
    return weyl_dim(levi.subsystem, levi.restrict(mu))


def dual_levi_weight(rs: RootSystem, k: int, lam) -> Weight:
    """Dual of ``lam`` as a Levi weight, with the lambda_k coefficient zeroed.

    Computed as -w0(restriction) on the Levi subsystem, which realizes the
    per-component diagram automorphism without type-by-type tables.
    """
    coords = list(_as_coords(lam))
    if any(c < 0 for i, c in enumerate(coords) if i != k - 1):
        raise ValueError(f"{coords} is not P_{k}-dominant")
    levi = levi_subsystem(rs, k)
    if levi.subsystem is None:
        out = [0] * rs.rank
        return Weight(tuple(out))
    restricted = levi.restrict(coords)
    # lowest weight of the Levi irrep is the antidominant orbit element
    lowest = dominantize(levi.subsystem, tuple(-c for c in restricted))
    out = [0] * rs.rank
    for value, parent in zip(lowest, levi.parent_nodes):
        out[parent - 1] = value
    return Weight(tuple(out))


# ---------------------------------------------------------------------------
# cominuscule pairs, cotangent weights, H^0


def is_cominuscule(rs: RootSystem, k: int) -> bool:
    """True when (rs, k) is a cominuscule generalized Grassmannian pair."""
    if len(rs.components) != 1:
        return False
    letter, r = rs.components[0]
    if letter == "A":
        return True
    if letter == "B":
        return k == 1
    if letter == "C":
        return k == r
    if letter == "D":
        return k in (1, r - 1, r)
    if letter == "E" and r == 6:
        return k in (1, 6)
    if letter == "E" and r == 7:
        return k == 7
    return False


def highest_root(rs: RootSystem) -> Weight:
    if len(rs.components) != 1:
        raise ValueError("highest root is per simple component")
    return rs.highest_root_per_component[0]


def cotangent_weight(rs: RootSystem, k: int) -> Weight:
    """Weight of the cotangent bundle on the cominuscule space G/P_k.

    Solves for the integer twist a in delta^* + a*lambda_k from the first
    Chern number of the tangent bundle; demands a = -2 exactly.
    """
    if not is_cominuscule(rs, k):
        raise ValueError(f"({rs.name}, {k}) is not a cominuscule pair")
    delta = highest_root(rs)
    dstar = dual_levi_weight(rs, k, delta)
    c1_tangent = c1_irreducible(rs, k, delta)
    lam_k = rs.fundamental_weight(k)
    rk = levi_dim(rs, k, dstar.coords)
    # rk * (<dstar, l_k> + a <l_k, l_k>) / <l_k, l_k> = -c1_tangent
    lk2 = pairing(rs, lam_k, lam_k)
    a = (Fraction(-c1_tangent, rk) * lk2 - pairing(rs, dstar, lam_k)) / lk2
    if a.denominator != 1:
        raise ArithmeticError(f"cotangent twist came out non-integral: {a}")
    a = int(a)
    if a != -2:
        raise ArithmeticError(f"cotangent twist expected -2, got {a}")
    coords = list(dstar.coords)
    coords[k - 1] += a
    return Weight(tuple(coords))


def bbw_h0(rs: RootSystem, lam, k: int) -> dict[Weight, int]:
    """Sections of the irreducible bundle E_lam on G/P_k, at the H^0 level.

    Returns ``{lam: 1}`` when lam is dominant for the full group and the
    empty decomposition otherwise.
    """
    coords = _as_coords(lam)
    if any(c < 0 for i, c in enumerate(coords) if i != k - 1):
        raise ValueError(f"{coords} is not P_{k}-dominant")
    if coords[k - 1] >= 0:
        return {Weight(coords): 1}
    return {}
