"""Exact nested exterior and symmetric algebra over W = wedge^m(C^n).

Basis elements of W are m-subsets of {1..n}; elements of the outer algebra
are sparse maps from strictly increasing tuples of such subsets to exact
scalars.  Signs from reordering are absorbed into coefficients during
normalization, so stored keys are always canonical and no zero coefficient
is ever kept.

The module provides the multiplication map into wedge^{2m}(C^n), the
comultiplication into the symmetric square, the two-term map into the mixed
tensor space, the traceless-matrix action, the six named highest weight
vectors, and skew rank computation for 2-vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

__all__ = [
    "MultiVector",
    "SymSquare",
    "MixedTensor",
    "wedge",
    "multiply_m",
    "psi_dual",
    "xi",
    "sl_action",
    "build_hw_vector",
    "extract_coefficient",
    "skew_rank",
    "skew_rank_by_powers",
    "wedge_power_mv",
    "lift_sym_square",
    "hw_vector_weight",
    "xi_psi_parts_w6",
    "HW_TAGS",
]


def normalize_inner(seq) -> tuple | None:
    """Sort an index tuple, returning (key, sign); None when an index repeats."""
    lst = list(seq)
    sign = 1
    # insertion sort with parity; inner tuples have <= 6 entries
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(lst)):
        if lst[i - 1] == lst[i]:
            return None
    return tuple(lst), sign


def normalize_outer(keys) -> tuple | None:
    """Sort W-basis keys lexicographically with sign; None on repeats."""
    lst = list(keys)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(lst)):
        if lst[i - 1] == lst[i]:
            return None
    return tuple(lst), sign


class MultiVector:
    """Sparse element of wedge^k(W) with W = wedge^m(C^n)."""

    __slots__ = ("n", "inner_degree", "outer_degree", "entries")

    def __init__(self, n: int, inner_degree: int, outer_degree: int,
                 entries: dict | None = None):
        self.n = n
        self.inner_degree = inner_degree
        self.outer_degree = outer_degree
        self.entries = {}
        if entries:
            for key, coeff in entries.items():
                if coeff:
                    self.entries[key] = coeff

    def add_term(self, raw_keys, coeff) -> None:
        """Accumulate a possibly unnormalized term (handles both signs)."""
        if not coeff:
            return
        inner = []
        sign = 1
        for part in raw_keys:
            norm = normalize_inner(part)
            if norm is None:
                return
            inner.append(norm[0])
            sign *= norm[1]
        outer = normalize_outer(inner)
        if outer is None:
            return
        key, osign = outer
        value = self.entries.get(key, 0) + coeff * sign * osign
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "MultiVector":
        return MultiVector(self.n, self.inner_degree, self.outer_degree,
                           {k: c * v for k, v in self.entries.items()})

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check_compatible(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return MultiVector(self.n, self.inner_degree, self.outer_degree, out)

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, MultiVector)
                and self.n == other.n
                and self.inner_degree == other.inner_degree
                and self.outer_degree == other.outer_degree
                and self.entries == other.entries)

    def _check_compatible(self, other: "MultiVector") -> None:
        if self.n != other.n or self.inner_degree != other.inner_degree:
            raise ValueError("ambient mismatch between multivectors")

    def __repr__(self):
        return (f"MultiVector(n={self.n}, m={self.inner_degree}, "
                f"k={self.outer_degree}, terms={len(self.entries)})")

    def to_json(self) -> list:
        return [{"outer": [list(part) for part in key], "coeff": str(coeff)}
                for key, coeff in sorted(self.entries.items())]

    @classmethod
    def from_json(cls, n: int, inner_degree: int, terms: list) -> "MultiVector":
        outer_degree = len(terms[0]["outer"]) if terms else 0
        mv = cls(n, inner_degree, outer_degree)
        for t in terms:
            mv.add_term([tuple(p) for p in t["outer"]], Fraction(t["coeff"]))
        return mv


class SymSquare:
    """Element of S^2(wedge^2 W): unordered pairs of wedge^2-W basis keys."""

    __slots__ = ("n", "inner_degree", "entries")

    def __init__(self, n: int, inner_degree: int, entries: dict | None = None):
        self.n = n
        self.inner_degree = inner_degree
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def add_term(self, key_a, key_b, coeff) -> None:
        if not coeff:
            return
        pair = (key_a, key_b) if key_a <= key_b else (key_b, key_a)
        value = self.entries.get(pair, 0) + coeff
        if value:
            self.entries[pair] = value
        else:
            self.entries.pop(pair, None)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, SymSquare) and self.n == other.n
                and self.inner_degree == other.inner_degree
                and self.entries == other.entries)

    def __repr__(self):
        return f"SymSquare(n={self.n}, terms={len(self.entries)})"


class MixedTensor:
    """Element of wedge^{2m}(C^n) tensor wedge^2(W), pairs as honest basis."""

    __slots__ = ("n", "inner_degree", "entries")

    def __init__(self, n: int, inner_degree: int, entries: dict | None = None):
        self.n = n
        self.inner_degree = inner_degree
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def add_term(self, long_part, pair_part, coeff) -> None:
        if not coeff:
            return
        key = (long_part, pair_part)
        value = self.entries.get(key, 0) + coeff
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "MixedTensor":
        return MixedTensor(self.n, self.inner_degree,
                           {k: c * v for k, v in self.entries.items()})

    def __sub__(self, other: "MixedTensor") -> "MixedTensor":
        out = dict(self.entries)
        for k, v in other.entries.items():
            nv = out.get(k, 0) - v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return MixedTensor(self.n, self.inner_degree, out)

    def __add__(self, other: "MixedTensor") -> "MixedTensor":
        out = dict(self.entries)
        for k, v in other.entries.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return MixedTensor(self.n, self.inner_degree, out)

    def __eq__(self, other):
        return (isinstance(other, MixedTensor) and self.n == other.n
                and self.inner_degree == other.inner_degree
                and self.entries == other.entries)

    def __repr__(self):
        return f"MixedTensor(n={self.n}, terms={len(self.entries)})"


# ---------------------------------------------------------------------------
# products and structure maps


def wedge(u: MultiVector, v: MultiVector) -> MultiVector:
    """Exterior product; bilinear, associative, graded-commutative."""
    u._check_compatible(v)
    from math import comb
    dim_w = comb(u.n, u.inner_degree)
    k = u.outer_degree + v.outer_degree
    if k > dim_w:
        raise ValueError(f"outer degree {k} exceeds dim W = {dim_w}")
    out = MultiVector(u.n, u.inner_degree, k)
    vitems = list(v.entries.items())
    for ku, cu in u.entries.items():
        for kv, cv in vitems:
            norm = normalize_outer(ku + kv)
            if norm is None:
                continue
            key, sign = norm
            value = out.entries.get(key, 0) + cu * cv * sign
            if value:
                out.entries[key] = value
            else:
                out.entries.pop(key, None)
    return out


def wedge_power_mv(u: MultiVector, k: int) -> MultiVector:
    """k-fold exterior power of a 2-vector (used for rank certificates)."""
    out = MultiVector(u.n, u.inner_degree, 0, {(): 1})
    for _ in range(k):
        out = wedge(out, u)
    return out


def multiply_m(x: MultiVector) -> MultiVector:
    """Concatenate-and-normalize multiplication wedge^2 W -> wedge^{2m} C^n.

    Overlapping index sets vanish; the result is a plain exterior vector
    (inner degree 2m, outer degree 1).
    """
    if x.outer_degree != 2:
        raise ValueError("multiply_m expects outer degree 2")
    out = MultiVector(x.n, 2 * x.inner_degree, 1)
    for (a, b), coeff in x.entries.items():
        out.add_term([a + b], coeff)
    return out


def _merge_inner(a, b):
    """Normalized concatenation a+b as one index set, or None."""
    norm = normalize_inner(a + b)
    return norm


def psi_dual(x: MultiVector) -> SymSquare:
    """Comultiplication wedge^4 W -> S^2(wedge^2 W).

    On a decomposable a^b^c^d the image is (ab)(cd) - (ac)(bd) + (ad)(bc);
    extended linearly over the stored basis expansion.
    """
    if x.outer_degree != 4:
        raise ValueError("psi_dual expects outer degree 4")
    out = SymSquare(x.n, x.inner_degree)
    for (a, b, c, d), coeff in x.entries.items():
        # basis keys are already sorted, so each pair is canonical as written
        out.add_term((a, b), (c, d), coeff)
        out.add_term((a, c), (b, d), -coeff)
        out.add_term((a, d), (b, c), coeff)
    return out


def xi(s: SymSquare) -> MixedTensor:
    """Two-term map S^2(wedge^2 W) -> wedge^{2m} C^n tensor wedge^2 W."""
    out = MixedTensor(s.n, s.inner_degree)
    for (pair_a, pair_b), coeff in s.entries.items():
        ma = _merge_inner(*pair_a)
        mb = _merge_inner(*pair_b)
        if ma is not None:
            out.add_term(ma[0], pair_b, coeff * ma[1])
        if mb is not None:
            out.add_term(mb[0], pair_a, coeff * mb[1])
    return out


def lift_sym_square(s: SymSquare) -> MultiVector:
    """Wedge each pair back into wedge^4 W (the multiply-back direction)."""
    out = MultiVector(s.n, s.inner_degree, 4)
    for (pair_a, pair_b), coeff in s.entries.items():
        out.add_term(list(pair_a) + list(pair_b), coeff)
    return out


# ---------------------------------------------------------------------------
# sl(n) action


def _act_inner(r: int, s: int, key):
    """X_{r,s} on one W basis element: replace s by r, or vanish."""
    if s not in key or r in key:
        return None
    replaced = tuple(r if i == s else i for i in key)
    return normalize_inner(replaced)


def _act_outer_key(r: int, s: int, keys):
    """Derivation across the slots of one outer basis key."""
    results = []
    for pos, part in enumerate(keys):
        acted = _act_inner(r, s, part)
        if acted is None:
            continue
        new_part, sign = acted
        new_keys = keys[:pos] + (new_part,) + keys[pos + 1:]
        norm = normalize_outer(new_keys)
        if norm is None:
            continue
        results.append((norm[0], sign * norm[1]))
    return results


def sl_action(r: int, s: int, x):
    """Action of the elementary matrix X_{r,s} as a derivation.

    Applies across every tensor slot (inner index tuples included); the
    weight of the result shifts by l_r - l_s.
    """
    if r == s:
        raise ValueError("X_{r,s} needs r != s")
    if isinstance(x, MultiVector):
        out = MultiVector(x.n, x.inner_degree, x.outer_degree)
        for key, coeff in x.entries.items():
            for new_key, sign in _act_outer_key(r, s, key):
                value = out.entries.get(new_key, 0) + coeff * sign
                if value:
                    out.entries[new_key] = value
                else:
                    out.entries.pop(new_key, None)
        return out
    if isinstance(x, SymSquare):
        out = SymSquare(x.n, x.inner_degree)
        for (pa, pb), coeff in x.entries.items():
            for new_pa, sign in _act_outer_key(r, s, pa):
                out.add_term(new_pa, pb, coeff * sign)
            for new_pb, sign in _act_outer_key(r, s, pb):
                out.add_term(pa, new_pb, coeff * sign)
        return out
    if isinstance(x, MixedTensor):
        out = MixedTensor(x.n, x.inner_degree)
        for (long_part, pair), coeff in x.entries.items():
            acted = _act_inner(r, s, long_part)
            if acted is not None:
                out.add_term(acted[0], pair, coeff * acted[1])
            for new_pair, sign in _act_outer_key(r, s, pair):
                out.add_term(long_part, new_pair, coeff * sign)
        return out
    raise TypeError(f"sl_action does not handle {type(x)!r}")


# ---------------------------------------------------------------------------
# highest weight vectors


@lru_cache(maxsize=None)
def _signed_permutations(k: int):
    out = []
    base = tuple(range(1, k + 1))
    for perm in permutations(base):
        inv = 0
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    inv += 1
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


HW_TAGS = {
    # tag: (minimal n, weight content description)
    "w6": 6,
    "w24": 4,
    "w48": 8,
    "w228": 8,
    "w237": 7,
    "w147": 7,
}


def build_hw_vector(tag: str, n: int | None = None) -> MultiVector:
    """The six named cyclic vectors, as exact symmetrized sums.

    Each is the image of a standard basis vector under the relevant diagonal
    map, fully expanded and normalized.  ``n`` defaults to the smallest
    ambient dimension in which the vector exists.
    """
    if tag not in HW_TAGS:
        raise ValueError(f"unknown highest-weight tag {tag!r}")
    n_min = HW_TAGS[tag]
    if n is None:
        n = n_min
    if n < n_min:
        raise ValueError(f"{tag} needs n >= {n_min}, got {n}")

    if tag == "w24":
        mv = MultiVector(n, 3, 2)
        mv.add_term([(1, 2, 3), (1, 2, 4)], 1)
        return mv

    if tag == "w6":
        mv = MultiVector(n, 3, 2)
        for perm, sign in _signed_permutations(6):
            mv.add_term([perm[0:3], perm[3:6]], sign)
        return mv

    if tag == "w48":
        mv = MultiVector(n, 3, 4)
        for s_perm, s_sign in _signed_permutations(4):
            for t_perm, t_sign in _signed_permutations(8):
                mv.add_term(
                    [(s_perm[0], t_perm[0], t_perm[1]),
                     (s_perm[1], t_perm[2], t_perm[3]),
                     (s_perm[2], t_perm[4], t_perm[5]),
                     (s_perm[3], t_perm[6], t_perm[7])],
                    s_sign * t_sign)
        return mv

    if tag == "w228":
        mv = MultiVector(n, 3, 4)
        for perm, sign in _signed_permutations(8):
            mv.add_term(
                [(1, 2, perm[0]), (1, 2, perm[1]),
                 perm[2:5], perm[5:8]],
                sign)
        return mv

    if tag == "w237":
        mv = MultiVector(n, 3, 4)
        for perm, sign in _signed_permutations(7):
            mv.add_term(
                [(1, 2, 3), (1, 2, perm[0]), perm[1:4], perm[4:7]],
                sign)
        return mv

    # w147
    mv = MultiVector(n, 3, 4)
    for s_perm, s_sign in _signed_permutations(4):
        for t_perm, t_sign in _signed_permutations(7):
            mv.add_term(
                [(1, s_perm[0], t_perm[0]),
                 s_perm[1:4],
                 t_perm[1:4],
                 t_perm[4:7]],
                s_sign * t_sign)
    return mv


def hw_vector_weight(x: MultiVector) -> tuple[int, ...]:
    """Index-content vector (count of each of 1..n across one key).

    All keys of a weight vector share the same content; asserted here.
    """
    contents = set()
    for key in x.entries:
        counts = [0] * x.n
        for part in key:
            for idx in part:
                counts[idx - 1] += 1
        contents.add(tuple(counts))
    if len(contents) != 1:
        raise ValueError("element is not homogeneous of a single weight")
    return contents.pop()


# ---------------------------------------------------------------------------
# coefficient extraction and rank


def extract_coefficient(x, key):
    """Coefficient of a (possibly unnormalized) basis element; 0 if absent.

    For multivectors the key is an iterable of index tuples; for the mixed
    tensor space it is ``(long_tuple, (part, part))``.  The sign produced by
    normalizing the input key multiplies the stored coefficient.
    """
    if isinstance(x, MultiVector):
        inner = []
        sign = 1
        for part in key:
            norm = normalize_inner(tuple(part))
            if norm is None:
                return 0
            inner.append(norm[0])
            sign *= norm[1]
        outer = normalize_outer(inner)
        if outer is None:
            return 0
        return sign * outer[1] * x.entries.get(outer[0], 0)
    if isinstance(x, SymSquare):
        pair_a, pair_b = key
        na = normalize_outer(tuple(normalize_inner(tuple(p))[0] for p in pair_a))
        nb = normalize_outer(tuple(normalize_inner(tuple(p))[0] for p in pair_b))
        if na is None or nb is None:
            return 0
        sign = na[1] * nb[1]
        for p, raw in ((na, pair_a), (nb, pair_b)):
            for part in raw:
                sign *= normalize_inner(tuple(part))[1]
        ka, kb = na[0], nb[0]
        pair = (ka, kb) if ka <= kb else (kb, ka)
        return sign * x.entries.get(pair, 0)
    if isinstance(x, MixedTensor):
        long_part, pair = key
        nl = normalize_inner(tuple(long_part))
        if nl is None:
            return 0
        inner = []
        sign = nl[1]
        for part in pair:
            norm = normalize_inner(tuple(part))
            if norm is None:
                return 0
            inner.append(norm[0])
            sign *= norm[1]
        outer = normalize_outer(inner)
        if outer is None:
            return 0
        return sign * outer[1] * x.entries.get((nl[0], outer[0]), 0)
    raise TypeError(f"extract_coefficient does not handle {type(x)!r}")


def skew_rank(x: MultiVector) -> int:
    """Rank of the skew matrix attached to a 2-vector, over exact scalars."""
    if x.outer_degree != 2:
        raise ValueError("skew_rank expects outer degree 2")
    basis = sorted({part for key in x.entries for part in key})
    index = {b: i for i, b in enumerate(basis)}
    size = len(basis)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for (a, b), coeff in x.entries.items():
        i, j = index[a], index[b]
        mat[i][j] = Fraction(coeff)
        mat[j][i] = -Fraction(coeff)
    return _rank_exact(mat)


def _rank_exact(mat) -> int:
    rows = len(mat)
    if rows == 0:
        return 0
    cols = len(mat[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, rows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = Fraction(1) / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(rows):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


def skew_rank_by_powers(x: MultiVector) -> int:
    """Rank as the largest 2k with x^k nonzero; cross-check for skew_rank.

    Powers past the top exterior degree live in the zero space, so the walk
    stops at floor(dim W / 2) without forming them.
    """
    if x.outer_degree != 2:
        raise ValueError("expected a 2-vector")
    from math import comb
    top = comb(x.n, x.inner_degree) // 2
    power = MultiVector(x.n, x.inner_degree, 0, {(): 1})
    k = 0
    while k < top:
        nxt = wedge(power, x)
        if nxt.is_zero():
            return 2 * k
        power = nxt
        k += 1
    return 2 * k


# ---------------------------------------------------------------------------
# the split sub-sums for the squared six-index vector


def xi_psi_parts_w6(n: int = 6):
    """The three partial sums of xi over the comultiplied square of w6.

    The comultiplication of the square splits each permutation pair into
    three products; collecting the images of the first, second, and third
    products separately gives tensors A, B, C with A - B + C the full image.
    """
    sym_parts = [SymSquare(n, 3), SymSquare(n, 3), SymSquare(n, 3)]
    perms = _signed_permutations(6)
    halves = []
    for sigma, s_sign in perms:
        n1 = normalize_inner(sigma[0:3])
        n2 = normalize_inner(sigma[3:6])
        halves.append((sigma[0:3], sigma[3:6], n1, n2, s_sign))

    def accumulate(target, pa, pb, coeff):
        norm = normalize_outer(pa)
        if norm is None:
            return
        pa_key, sign_a = norm
        norm = normalize_outer(pb)
        if norm is None:
            return
        pb_key, sign_b = norm
        target.add_term(pa_key, pb_key, coeff * sign_a * sign_b)

    for s1, s2, n1, n2, s_sign in halves:
        key_sigma = (n1[0], n2[0])
        sign_sigma = n1[1] * n2[1]
        for t1, t2, m1, m2, t_sign in halves:
            coeff = s_sign * t_sign
            accumulate(sym_parts[0], key_sigma, (m1[0], m2[0]),
                       coeff * sign_sigma * m1[1] * m2[1])
            p1 = _pair_key(s1, t1)
            p2 = _pair_key(s2, t2)
            if p1 is not None and p2 is not None:
                accumulate(sym_parts[1], p1[0], p2[0], coeff * p1[1] * p2[1])
            p1 = _pair_key(s1, t2)
            p2 = _pair_key(s2, t1)
            if p1 is not None and p2 is not None:
                accumulate(sym_parts[2], p1[0], p2[0], coeff * p1[1] * p2[1])
    return tuple(xi(part) for part in sym_parts)


def _pair_key(a, b):
    na = normalize_inner(a)
    nb = normalize_inner(b)
    if na is None or nb is None:
        return None
    if na[0] == nb[0]:
        return None
    return (na[0], nb[0]), na[1] * nb[1]
