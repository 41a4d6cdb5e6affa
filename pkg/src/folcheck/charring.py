"""Formal characters: Freudenthal multiplicities, products, Adams operations,
Schur-functor plethysms up to degree 4, and Levi-to-group section computations.

A character is a finite multiset of weights (fundamental coordinates) with
integer multiplicities.  Small characters live in plain dicts; large ones are
held as sorted numpy int64 arrays with weights packed bitwise into a single
key.  The packed path is engaged only when exact bounds prove that no pack
field and no multiplicity accumulation can overflow 62 bits, so every number
produced here is exact regardless of route.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

import numpy as np

from .rootdata import (
    RootSystem,
    Weight,
    build_root_system,
    dominantize,
    expand_orbit,
    is_cominuscule,
    levi_subsystem,
    orbit_size,
    weyl_dim,
)

__all__ = [
    "FormalCharacter",
    "IrrDecomposition",
    "freudenthal_character",
    "freudenthal_dominant_mult",
    "char_product",
    "char_add",
    "adams_operation",
    "wedge_power",
    "sym_power",
    "schur_plethysm",
    "trivial_character",
    "levi_bundle_sections",
    "levi_fiber_character",
    "levi_module_decompose",
    "grassmannian_sections_cauchy",
]

_PACK_PAIR_THRESHOLD = 250_000  # below this, dict convolution is faster
_MAX_PACK_BITS = 62
_MASS_GUARD = 1 << 62


# ---------------------------------------------------------------------------
# packed-key helpers


class _Packer:
    """Bitwise packing of bounded integer vectors into int64 keys."""

    def __init__(self, los, his):
        self.los = tuple(int(x) for x in los)
        self.his = tuple(int(x) for x in his)
        bits = [max(int(h - l), 0).bit_length() or 1 for l, h in zip(los, his)]
        shifts = []
        pos = 0
        for b in bits:
            shifts.append(pos)
            pos += b
        self.bits = tuple(bits)
        self.shifts = tuple(shifts)
        self.total_bits = pos

    @property
    def ok(self) -> bool:
        return self.total_bits <= _MAX_PACK_BITS

    def pack_matrix(self, mat: np.ndarray, los=None) -> np.ndarray:
        los = self.los if los is None else los
        keys = np.zeros(len(mat), dtype=np.int64)
        for i, (lo, sh) in enumerate(zip(los, self.shifts)):
            keys += (mat[:, i].astype(np.int64) - lo) << sh
        return keys

    def unpack(self, keys: np.ndarray) -> np.ndarray:
        out = np.empty((len(keys), len(self.bits)), dtype=np.int64)
        for i, (lo, sh, b) in enumerate(zip(self.los, self.shifts, self.bits)):
            out[:, i] = ((keys >> sh) & ((1 << b) - 1)) + lo
        return out


def _aggregate(keys: np.ndarray, vals: np.ndarray):
    """Sort-and-sum duplicate keys; drops zero totals."""
    if len(keys) == 0:
        return keys, vals
    order = np.argsort(keys, kind="stable")
    k = keys[order]
    v = vals[order]
    starts = np.empty(len(k), dtype=bool)
    starts[0] = True
    np.not_equal(k[1:], k[:-1], out=starts[1:])
    idx = np.flatnonzero(starts)
    sums = np.add.reduceat(v, idx)
    keep = sums != 0
    return k[idx][keep], sums[keep]


# ---------------------------------------------------------------------------
# the character type


class FormalCharacter:
    """Finite weight multiset over a fixed root system.

    Irreducible characters carry positive multiplicities; virtual characters
    (differences) may carry signs and report ``is_virtual()`` True.
    """

    __slots__ = ("rs", "_dict", "_keys", "_vals", "_packer", "_mass", "_bounds")

    def __init__(self, rs: RootSystem, entries: dict | None = None):
        self.rs = rs
        self._dict = dict(entries) if entries is not None else {}
        if entries:
            for w, m in list(self._dict.items()):
                if m == 0:
                    del self._dict[w]
        self._keys = None
        self._vals = None
        self._packer = None
        self._mass = None
        self._bounds = None

    @classmethod
    def from_packed(cls, rs, keys, vals, packer) -> "FormalCharacter":
        fc = cls(rs)
        fc._dict = None
        fc._keys = keys
        fc._vals = vals
        fc._packer = packer
        return fc

    # -- storage-independent access --------------------------------------

    def is_packed(self) -> bool:
        return self._dict is None

    def support_size(self) -> int:
        return len(self._vals) if self.is_packed() else len(self._dict)

    def mass(self) -> int:
        if self._mass is None:
            if self.is_packed():
                self._mass = int(self._vals.sum())
            else:
                self._mass = sum(self._dict.values())
        return self._mass

    def is_virtual(self) -> bool:
        if self.is_packed():
            return bool((self._vals < 0).any())
        return any(m < 0 for m in self._dict.values())

    def as_dict(self) -> dict[tuple[int, ...], int]:
        if not self.is_packed():
            return self._dict
        mat = self._packer.unpack(self._keys)
        return {tuple(int(x) for x in row): int(v)
                for row, v in zip(mat, self._vals)}

    @property
    def entries(self) -> dict[tuple[int, ...], int]:
        return self.as_dict()

    def items(self):
        if not self.is_packed():
            yield from self._dict.items()
        else:
            mat = self._packer.unpack(self._keys)
            for row, v in zip(mat, self._vals):
                yield tuple(int(x) for x in row), int(v)

    def get(self, w) -> int:
        coords = w.coords if isinstance(w, Weight) else tuple(w)
        if not self.is_packed():
            return self._dict.get(coords, 0)
        p = self._packer
        if any(c < lo or c > hi for c, lo, hi in zip(coords, p.los, p.his)):
            return 0
        key = 0
        for c, lo, sh in zip(coords, p.los, p.shifts):
            key += (c - lo) << sh
        i = np.searchsorted(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return int(self._vals[i])
        return 0

    def bounds(self):
        if self._bounds is None:
            if self.is_packed():
                mat = self._packer.unpack(self._keys)
                self._bounds = (tuple(int(x) for x in mat.min(axis=0)),
                                tuple(int(x) for x in mat.max(axis=0)))
            else:
                if not self._dict:
                    z = (0,) * self.rs.rank
                    self._bounds = (z, z)
                else:
                    cols = list(zip(*self._dict.keys()))
                    self._bounds = (tuple(min(c) for c in cols),
                                    tuple(max(c) for c in cols))
        return self._bounds

    def dominant_entries(self) -> dict[tuple[int, ...], int]:
        """The dominant slice: weights with all coordinates >= 0."""
        if not self.is_packed():
            return {w: m for w, m in self._dict.items() if min(w) >= 0}
        mat = self._packer.unpack(self._keys)
        mask = (mat >= 0).all(axis=1)
        return {tuple(int(x) for x in row): int(v)
                for row, v in zip(mat[mask], self._vals[mask])}

    def packed_pair(self, packer: _Packer, los_override=None):
        """(keys, vals) of this character relative to ``packer``'s layout."""
        if self.is_packed():
            mat = self._packer.unpack(self._keys)
            return packer.pack_matrix(mat, los=los_override), self._vals
        mat = np.array(list(self._dict.keys()), dtype=np.int64).reshape(
            len(self._dict), self.rs.rank)
        vals = np.fromiter(self._dict.values(), dtype=np.int64,
                           count=len(self._dict))
        return packer.pack_matrix(mat, los=los_override), vals

    def scaled(self, c: int) -> "FormalCharacter":
        if c == 0:
            return FormalCharacter(self.rs, {})
        if self.is_packed():
            return FormalCharacter.from_packed(
                self.rs, self._keys, self._vals * c, self._packer)
        return FormalCharacter(self.rs, {w: c * m for w, m in self._dict.items()})

    def exact_divide(self, d: int) -> "FormalCharacter":
        if self.is_packed():
            if (self._vals % d != 0).any():
                raise ArithmeticError(f"character not divisible by {d}")
            return FormalCharacter.from_packed(
                self.rs, self._keys, self._vals // d, self._packer)
        out = {}
        for w, m in self._dict.items():
            if m % d != 0:
                raise ArithmeticError(f"character not divisible by {d}")
            out[w] = m // d
        return FormalCharacter(self.rs, out)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if self.rs != other.rs:
            return False
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        return (f"FormalCharacter({self.rs.name}, support={self.support_size()},"
                f" mass={self.mass()})")

    def to_json(self) -> dict:
        return {
            "rs": self.rs.name,
            "terms": [{"weight": list(w), "mult": m}
                      for w, m in sorted(self.items())],
        }


class IrrDecomposition:
    """Map from dominant highest weights to positive multiplicities."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: dict):
        self.rs = rs
        self.terms = {}
        for w, m in terms.items():
            coords = w.coords if isinstance(w, Weight) else tuple(w)
            if m == 0:
                continue
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at {coords}")
            if any(c < 0 for c in coords):
                raise ValueError(f"non-dominant key {coords}")
            self.terms[coords] = int(m)

    def total_dim(self) -> int:
        return sum(m * weyl_dim(self.rs, w) for w, m in self.terms.items())

    def mult(self, w) -> int:
        coords = w.coords if isinstance(w, Weight) else tuple(w)
        return self.terms.get(coords, 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (isinstance(other, IrrDecomposition)
                and self.rs == other.rs and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(
            (f"{m}x" if m > 1 else "") + f"V{list(w)}"
            for w, m in self.sorted_terms())
        return f"IrrDecomposition({self.rs.name}: {body or '0'})"

    def to_json(self) -> dict:
        return {
            "rs": self.rs.name,
            "terms": [{"weight": list(w), "mult": m}
                      for w, m in self.sorted_terms()],
        }


# ---------------------------------------------------------------------------
# Freudenthal multiplicities


class _FreudenthalTable:
    """Lazy dominant-weight multiplicities of one irreducible."""

    def __init__(self, rs: RootSystem, lam: tuple[int, ...]):
        self.rs = rs
        self.lam = lam
        if any(c < 0 for c in lam):
            raise ValueError(f"highest weight {lam} is not dominant")
        self.memo = {lam: 1}
        self._lam_rho = tuple(c + 1 for c in lam)
        self._lam_rho_norm = rs.pairing_num(self._lam_rho, self._lam_rho)
        # scaled-integer inverse Cartan for the root-cone membership test
        den = 1
        for row in rs.inverse_cartan:
            for x in row:
                den = den * x.denominator // _igcd(den, x.denominator)
        self._ic_den = den
        self._ic_num = tuple(
            tuple(int(x * den) for x in row) for row in rs.inverse_cartan)
        self._roots = tuple(r.coords for r in rs.positive_roots)
        self._pair_vecs = rs._pos_pairing_vecs

    def _is_weight(self, dom: tuple[int, ...]) -> bool:
        # dom is a weight of V_lam iff lam - dom is a nonnegative root sum
        diff = tuple(l - d for l, d in zip(self.lam, dom))
        den = self._ic_den
        for row in self._ic_num:
            s = sum(a * b for a, b in zip(row, diff))
            if s < 0 or s % den != 0:
                return False
        return True

    def mult(self, dom: tuple[int, ...]) -> int:
        got = self.memo.get(dom)
        if got is not None:
            return got
        if any(c < 0 for c in dom):
            raise ValueError("mult() expects a dominant weight")
        if not self._is_weight(dom):
            self.memo[dom] = 0
            return 0
        rs = self.rs
        num = 0
        for root, pvec in zip(self._roots, self._pair_vecs):
            k = 1
            while True:
                nu = tuple(d + k * r for d, r in zip(dom, root))
                nu_dom = dominantize(rs, nu)
                if not self._is_weight(nu_dom):
                    break
                m = self.mult(nu_dom)
                num += m * sum(a * b for a, b in zip(nu, pvec))
                k += 1
        mu_rho = tuple(c + 1 for c in dom)
        den = self._lam_rho_norm - rs.pairing_num(mu_rho, mu_rho)
        if den <= 0 or (2 * num) % den != 0:
            raise ArithmeticError(
                f"Freudenthal recursion failed at {dom} (num={num}, den={den})")
        val = 2 * num // den
        self.memo[dom] = val
        return val

    def dominant_support(self) -> dict[tuple[int, ...], int]:
        """All dominant weights with their multiplicities.

        Enumerated by subtracting positive roots from known dominant weights
        and re-dominantizing, which reaches every dominant weight below the
        highest one.
        """
        rs = self.rs
        seen = {self.lam}
        frontier = [self.lam]
        while frontier:
            new = []
            for w in frontier:
                for root in self._roots:
                    cand = tuple(a - b for a, b in zip(w, root))
                    dom = dominantize(rs, cand)
                    if dom not in seen and self._is_weight(dom):
                        seen.add(dom)
                        new.append(dom)
            frontier = new
        return {w: self.mult(w) for w in sorted(seen)}


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _freudenthal_table(components, lam) -> _FreudenthalTable:
    return _FreudenthalTable(build_root_system(components), lam)


def freudenthal_dominant_mult(rs: RootSystem, lam, mu) -> int:
    """Multiplicity of the dominant weight ``mu`` in the irreducible V_lam."""
    lam = lam.coords if isinstance(lam, Weight) else tuple(lam)
    mu = mu.coords if isinstance(mu, Weight) else tuple(mu)
    return _freudenthal_table(rs.components, lam).mult(mu)


def freudenthal_character(rs: RootSystem, lam) -> FormalCharacter:
    """Full weight multiset of the irreducible with highest weight ``lam``.

    Total mass always equals the Weyl dimension; this is asserted.
    """
    lam = lam.coords if isinstance(lam, Weight) else tuple(lam)
    table = _freudenthal_table(rs.components, lam)
    entries = {}
    total = 0
    for dom, m in table.dominant_support().items():
        for w in expand_orbit(rs, dom):
            entries[w] = m
        total += m * orbit_size(rs, dom)
    expected = weyl_dim(rs, lam)
    if total != expected:
        raise AssertionError(
            f"character mass {total} != Weyl dimension {expected} for {lam}")
    fc = FormalCharacter(rs, entries)
    fc._mass = total
    return fc


def irreducible_dominant_support(rs: RootSystem, lam) -> dict:
    lam = lam.coords if isinstance(lam, Weight) else tuple(lam)
    return _freudenthal_table(rs.components, lam).dominant_support()


# ---------------------------------------------------------------------------
# ring operations


def char_add(parts: list[tuple[int, FormalCharacter]], rs=None) -> FormalCharacter:
    """Integer combination of characters over one root system."""
    parts = [(c, fc) for c, fc in parts if c != 0 and fc.support_size()]
    if not parts:
        return FormalCharacter(rs or build_root_system("A1"), {})
    rs = parts[0][1].rs
    if any(fc.rs != rs for _, fc in parts):
        raise ValueError("root system mismatch in char_add")
    total_support = sum(fc.support_size() for _, fc in parts)
    if total_support <= _PACK_PAIR_THRESHOLD and all(
            not fc.is_packed() for _, fc in parts):
        out: dict = {}
        for c, fc in parts:
            for w, m in fc._dict.items():
                nm = out.get(w, 0) + c * m
                if nm:
                    out[w] = nm
                elif w in out:
                    del out[w]
        return FormalCharacter(rs, out)
    los = tuple(min(fc.bounds()[0][i] for _, fc in parts) for i in range(rs.rank))
    his = tuple(max(fc.bounds()[1][i] for _, fc in parts) for i in range(rs.rank))
    packer = _Packer(los, his)
    if not packer.ok:
        out = {}
        for c, fc in parts:
            for w, m in fc.items():
                nm = out.get(w, 0) + c * m
                if nm:
                    out[w] = nm
                elif w in out:
                    del out[w]
        return FormalCharacter(rs, out)
    key_blocks = []
    val_blocks = []
    for c, fc in parts:
        k, v = fc.packed_pair(packer)
        key_blocks.append(k)
        val_blocks.append(v * c)
    keys, vals = _aggregate(np.concatenate(key_blocks),
                            np.concatenate(val_blocks))
    return FormalCharacter.from_packed(rs, keys, vals, packer)


def char_product(c1: FormalCharacter, c2: FormalCharacter) -> FormalCharacter:
    """Tensor product at the character level (weight-multiset convolution)."""
    if c1.rs != c2.rs:
        raise ValueError("root system mismatch in char_product")
    rs = c1.rs
    n1, n2 = c1.support_size(), c2.support_size()
    if n1 == 0 or n2 == 0:
        return FormalCharacter(rs, {})
    pairs = n1 * n2
    # per-entry magnitudes are bounded by the product of absolute masses
    abs_bound = (sum(abs(m) for _, m in c1.items())
                 * sum(abs(m) for _, m in c2.items()))
    if pairs <= _PACK_PAIR_THRESHOLD:
        out: dict = {}
        items2 = list(c2.items())
        for w1, m1 in c1.items():
            for w2, m2 in items2:
                w = tuple(a + b for a, b in zip(w1, w2))
                nm = out.get(w, 0) + m1 * m2
                if nm:
                    out[w] = nm
                elif w in out:
                    del out[w]
        return FormalCharacter(rs, out)
    lo1, hi1 = c1.bounds()
    lo2, hi2 = c2.bounds()
    los = tuple(a + b for a, b in zip(lo1, lo2))
    his = tuple(a + b for a, b in zip(hi1, hi2))
    packer = _Packer(los, his)
    if not packer.ok or abs_bound >= _MASS_GUARD:
        out = {}
        items2 = list(c2.items())
        for w1, m1 in c1.items():
            for w2, m2 in items2:
                w = tuple(a + b for a, b in zip(w1, w2))
                nm = out.get(w, 0) + m1 * m2
                if nm:
                    out[w] = nm
                elif w in out:
                    del out[w]
        return FormalCharacter(rs, out)
    ka, va = c1.packed_pair(packer, los_override=lo1)
    kb, vb = c2.packed_pair(packer, los_override=lo2)
    if len(ka) > len(kb):
        ka, va, kb, vb = kb, vb, ka, va
    chunk = max(1, 8_000_000 // max(len(kb), 1))
    blocks_k = []
    blocks_v = []
    for start in range(0, len(ka), chunk):
        sa = ka[start:start + chunk]
        sv = va[start:start + chunk]
        keys = (sa[:, None] + kb[None, :]).ravel()
        vals = (sv[:, None] * vb[None, :]).ravel()
        k, v = _aggregate(keys, vals)
        blocks_k.append(k)
        blocks_v.append(v)
    keys, vals = _aggregate(np.concatenate(blocks_k), np.concatenate(blocks_v))
    return FormalCharacter.from_packed(rs, keys, vals, packer)


def adams_operation(chi: FormalCharacter, m: int) -> FormalCharacter:
    """Power-sum operation: every weight scaled by m, multiplicity kept."""
    if m < 1:
        raise ValueError("Adams operations need m >= 1")
    if m == 1:
        return chi
    if chi.is_packed():
        mat = chi._packer.unpack(chi._keys) * m
        lo, hi = chi.bounds()
        packer = _Packer(tuple(x * m for x in lo), tuple(x * m for x in hi))
        if packer.ok:
            keys = packer.pack_matrix(mat)
            order = np.argsort(keys)
            return FormalCharacter.from_packed(
                chi.rs, keys[order], chi._vals[order], packer)
        return FormalCharacter(
            chi.rs,
            {tuple(int(x) for x in row): int(v)
             for row, v in zip(mat, chi._vals)})
    return FormalCharacter(
        chi.rs,
        {tuple(m * c for c in w): mult for w, mult in chi._dict.items()})


def trivial_character(rs: RootSystem) -> FormalCharacter:
    return FormalCharacter(rs, {(0,) * rs.rank: 1})


# -- exterior powers by elementary-symmetric dynamic programming -----------


def wedge_power(chi: FormalCharacter, k: int) -> FormalCharacter:
    """k-th exterior power of the character, 0 <= k <= 4 in practice.

    Divide-and-conquer elementary-symmetric DP over the weight multiset;
    handles arbitrary multiplicities through binomial leaf contributions.
    """
    if k < 0:
        raise ValueError("negative exterior power")
    rs = chi.rs
    if k == 0:
        return trivial_character(rs)
    if chi.is_virtual():
        raise ValueError("exterior powers need a genuine character")
    weights = sorted(chi.items())
    if chi.mass() < k:
        return FormalCharacter(rs, {})  # beyond the top exterior power

    def rec(lo: int, hi: int) -> list[FormalCharacter | None]:
        if hi - lo == 1:
            w, m = weights[lo]
            out: list[FormalCharacter | None] = []
            for t in range(k + 1):
                if t > m:
                    out.append(None)
                else:
                    coeff = comb(m, t)
                    key = tuple(t * c for c in w)
                    out.append(FormalCharacter(rs, {key: coeff}))
            return out
        mid = (lo + hi) // 2
        ea = rec(lo, mid)
        eb = rec(mid, hi)
        out = []
        for t in range(k + 1):
            parts = []
            for i in range(t + 1):
                a, b = ea[i], eb[t - i]
                if a is None or b is None:
                    continue
                if i == 0:
                    parts.append((1, b))
                elif t - i == 0:
                    parts.append((1, a))
                else:
                    parts.append((1, char_product(a, b)))
            out.append(char_add(parts, rs) if parts else None)
        return out

    result = rec(0, len(weights))[k]
    return result if result is not None else FormalCharacter(rs, {})


def sym_power(chi: FormalCharacter, k: int) -> FormalCharacter:
    """k-th symmetric power via power sums (k <= 4)."""
    if k == 0:
        return trivial_character(chi.rs)
    if k == 1:
        return chi
    if k == 2:
        num = char_add([(1, char_product(chi, chi)),
                        (1, adams_operation(chi, 2))], chi.rs)
        return num.exact_divide(2)
    return schur_plethysm(chi, (k,))


# -- Schur functors of degree <= 4 ------------------------------------------

# symmetric group data: class partition -> size, and character tables
_S2 = {"classes": [((1, 1), 1), ((2,), 1)],
       "chars": {(2,): (1, 1), (1, 1): (1, -1)}}
_S3 = {"classes": [((1, 1, 1), 1), ((2, 1), 3), ((3,), 2)],
       "chars": {(3,): (1, 1, 1), (2, 1): (2, 0, -1), (1, 1, 1): (1, -1, 1)}}
_S4 = {"classes": [((1, 1, 1, 1), 1), ((2, 1, 1), 6), ((2, 2), 3),
                   ((3, 1), 8), ((4,), 6)],
       "chars": {(4,): (1, 1, 1, 1, 1),
                 (3, 1): (3, 1, -1, 0, -1),
                 (2, 2): (2, 0, 2, -1, 0),
                 (2, 1, 1): (3, -1, -1, 0, 1),
                 (1, 1, 1, 1): (1, -1, 1, 1, -1)}}
_SYM_TABLES = {2: _S2, 3: _S3, 4: _S4}


def _power_sum_of_class(chi: FormalCharacter, cls: tuple[int, ...]) -> FormalCharacter:
    out = None
    for part in cls:
        factor = adams_operation(chi, part)
        out = factor if out is None else char_product(out, factor)
    return out


def schur_plethysm(chi: FormalCharacter, mu) -> FormalCharacter:
    """Character of the Schur functor for the partition mu, |mu| <= 4.

    Degrees 2..4 run through hardcoded symmetric-group character tables and
    power sums; single-column partitions route to the exterior-power DP.
    The exact division by |mu|! doubles as a consistency check on the tables.
    """
    mu = tuple(sorted((int(p) for p in mu), reverse=True))
    if any(p <= 0 for p in mu):
        raise ValueError(f"bad partition {mu}")
    n = sum(mu)
    if n == 0 or n > 4:
        raise ValueError("plethysm degree must be between 1 and 4")
    if n == 1:
        return chi
    if mu == (1,) * n:
        return wedge_power(chi, n)
    table = _SYM_TABLES[n]
    chars = table["chars"][mu]
    parts = []
    for (cls, size), chival in zip(table["classes"], chars):
        if chival == 0:
            continue
        parts.append((size * chival, _power_sum_of_class(chi, cls)))
    total = char_add(parts, chi.rs)
    return total.exact_divide(factorial(n))


# ---------------------------------------------------------------------------
# Levi fibers and twisted sections


@lru_cache(maxsize=None)
def _levi_fiber_cached(components, k: int, mu: tuple[int, ...]):
    rs = build_root_system(components)
    levi = levi_subsystem(rs, k)
    if levi.subsystem is None:
        return ((mu, 1),)
    sub = levi.subsystem
    hw_levi = levi.restrict(mu)
    if any(c < 0 for c in hw_levi):
        raise ValueError(f"{mu} is not P_{k}-dominant")
    sub_char = freudenthal_character(sub, hw_levi)
    # lift each Levi weight back to parent coordinates through the root
    # lattice offset from the highest weight
    den = 1
    for row in sub.inverse_cartan:
        for x in row:
            den = den * x.denominator // _igcd(den, x.denominator)
    ic = tuple(tuple(int(x * den) for x in row) for row in sub.inverse_cartan)
    parent_roots = []
    for node in levi.parent_nodes:
        parent_roots.append(tuple(rs.cartan[i][node - 1] for i in range(rs.rank)))
    out = []
    for w, m in sub_char.items():
        diff = tuple(h - c for h, c in zip(hw_levi, w))
        coeffs = []
        for row in ic:
            s = sum(a * b for a, b in zip(row, diff))
            assert s % den == 0
            coeffs.append(s // den)
        full = list(mu)
        for c, root in zip(coeffs, parent_roots):
            if c:
                for i in range(rs.rank):
                    full[i] -= c * root[i]
        out.append((tuple(full), m))
    return tuple(out)


def levi_fiber_character(rs: RootSystem, k: int, mu) -> FormalCharacter:
    """Character of the irreducible Levi module E_mu, in parent coordinates."""
    mu = mu.coords if isinstance(mu, Weight) else tuple(mu)
    pairs = _levi_fiber_cached(rs.components, k, mu)
    return FormalCharacter(rs, dict(pairs))


def levi_module_decompose(rs: RootSystem, k: int, chi: FormalCharacter) -> list:
    """Split a Levi-module character into irreducible Levi summands.

    Returns ``[(highest weight in parent coords, mult), ...]``; weights are
    P_k-dominant but need not be dominant for the full group.
    """
    levi = levi_subsystem(rs, k)
    sub = levi.subsystem
    remaining = dict(chi.items())
    rho = None if sub is None else (1,) * sub.rank

    def levi_height(w):
        if sub is None:
            return 0
        return sub.pairing_num(levi.restrict(w), rho)

    out = []
    while remaining:
        best = None
        best_key = None
        for w, m in remaining.items():
            if any(w[p - 1] < 0 for p in levi.parent_nodes):
                continue
            key = (levi_height(w), w)
            if best_key is None or key > best_key:
                best_key = key
                best = w
        if best is None:
            raise ArithmeticError("no Levi-dominant weight left; not a module")
        mult = remaining[best]
        if mult < 0:
            raise ArithmeticError(f"negative multiplicity at {best}")
        out.append((Weight(best), mult))
        for w, m in _levi_fiber_cached(rs.components, k, best):
            nm = remaining.get(w, 0) - mult * m
            if nm:
                remaining[w] = nm
            elif w in remaining:
                del remaining[w]
        for w, m in list(remaining.items()):
            if m == 0:
                del remaining[w]
    return out


def levi_bundle_sections(rs: RootSystem, k: int, mu, m: int,
                         twist: int) -> IrrDecomposition:
    """Sections of the twisted exterior power of an irreducible bundle.

    Decomposes the m-th exterior power of E_mu into Levi irreducibles,
    applies the O(twist) shift on the lambda_k coefficient, and keeps the
    summands with dominant weights (H^0 of the rest vanishes).

    Refused off the cominuscule list: only there is the input bundle
    guaranteed completely reducible, which this computation relies on.
    """
    if not is_cominuscule(rs, k):
        raise ValueError(
            f"({rs.name}, {k}) is not cominuscule; sections not computed")
    mu = mu.coords if isinstance(mu, Weight) else tuple(mu)
    fiber = levi_fiber_character(rs, k, mu)
    wedge = wedge_power(fiber, m)
    summands = levi_module_decompose(rs, k, wedge)
    terms: dict = {}
    for hw, mult in summands:
        coords = list(hw.coords)
        coords[k - 1] += twist
        if all(c >= 0 for c in coords):
            key = tuple(coords)
            terms[key] = terms.get(key, 0) + mult
    return IrrDecomposition(rs, terms)


def grassmannian_sections_cauchy(n: int, k: int, m: int,
                                 twist: int) -> IrrDecomposition:
    """Type-A fast path for the same computation on G(k, n).

    The exterior power of the cotangent fiber splits over partitions of m
    into products of Schur functors of the two tautological factors; each
    term contributes one highest weight, written down directly.
    """
    rs = build_root_system(f"A{n - 1}")
    r = n - 1
    terms: dict = {}
    for mu in _partitions_of(m):
        conj = _conjugate(mu)
        if conj and conj[0] > k:
            continue
        if mu and mu[0] > n - k:
            continue
        coords = [0] * r
        ok = True
        for col in conj:  # columns of mu act on the dual quotient factor
            idx = k - col
            if idx < 0:
                ok = False
                break
            if idx > 0:
                coords[idx - 1] += 1
            coords[k - 1] -= 1
        for row in mu:  # rows of mu act on the sub factor
            idx = k + row
            if idx > n:
                ok = False
                break
            if idx < n:
                coords[idx - 1] += 1
            coords[k - 1] -= 1
        if not ok:
            continue
        coords[k - 1] += twist
        if all(c >= 0 for c in coords):
            key = tuple(coords)
            terms[key] = terms.get(key, 0) + 1
    return IrrDecomposition(rs, terms)


def _partitions_of(m: int) -> list[tuple[int, ...]]:
    if m == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(m, m, [])
    return out


def _conjugate(mu) -> tuple[int, ...]:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))
