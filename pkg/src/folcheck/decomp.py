"""Decompose formal characters into irreducibles.

The algorithm is iterated subtraction on the dominant slice: pick the
dominant support weight maximizing the height pairing with the Weyl vector
(lexicographic tie-break), subtract that multiple of the irreducible's
dominant multiplicities, repeat until nothing is left.  Any negative entry
along the way means the input was not a nonnegative sum of irreducibles.

Working on the dominant slice is exact: multiplicities are constant on Weyl
orbits, so the slice determines the character, and the mass bookkeeping
(sum of mult * dim against the input mass) certifies nothing was dropped.
"""

from __future__ import annotations

from .charring import (
    FormalCharacter,
    IrrDecomposition,
    char_add,
    freudenthal_character,
    irreducible_dominant_support,
)
from .rootdata import RootSystem, Weight

__all__ = ["decompose_character", "decompose_dominant_slice", "contains",
           "recombine", "recombine_dominant"]


def _height_key(rs: RootSystem, w: tuple[int, ...]):
    rho = (1,) * rs.rank
    return (rs.pairing_num(tuple(c + 1 for c in w), rho), w)


def decompose_dominant_slice(rs: RootSystem, slice_entries: dict,
                             total_mass: int | None = None) -> IrrDecomposition:
    """Decompose from a dominant-slice dict {weight tuple: mult}."""
    remaining = dict(slice_entries)
    for w, m in remaining.items():
        if m < 0:
            raise ArithmeticError(
                f"negative multiplicity {m} at {w}: not a genuine character")
    terms: dict = {}
    while remaining:
        top = max(remaining, key=lambda w: _height_key(rs, w))
        mult = remaining[top]
        if mult < 0:
            raise ArithmeticError(
                f"negative multiplicity {mult} at {top}: "
                "input is not a nonnegative sum of irreducibles")
        terms[top] = terms.get(top, 0) + mult
        for w, m in irreducible_dominant_support(rs, top).items():
            nm = remaining.get(w, 0) - mult * m
            if nm:
                remaining[w] = nm
            elif w in remaining:
                del remaining[w]
    dec = IrrDecomposition(rs, terms)
    if total_mass is not None:
        got = dec.total_dim()
        if got != total_mass:
            raise ArithmeticError(
                f"dimension bookkeeping failed: {got} != {total_mass}")
    return dec


def decompose_character(chi: FormalCharacter) -> IrrDecomposition:
    """Decompose a genuine (nonvirtual) character into irreducibles.

    Recombination reproduces the input exactly; the mass identity
    sum(mult * weyl_dim) == mass(chi) is checked before returning.
    """
    if chi.is_virtual():
        raise ArithmeticError("cannot decompose a virtual character")
    return decompose_dominant_slice(chi.rs, chi.dominant_entries(),
                                    total_mass=chi.mass())


def contains(dec: IrrDecomposition, lam, mult: int) -> bool:
    """Exact multiplicity comparison."""
    lam = lam.coords if isinstance(lam, Weight) else tuple(lam)
    return dec.terms.get(lam, 0) == mult


def recombine(dec: IrrDecomposition) -> FormalCharacter:
    """Full character of a decomposition (sum of irreducible characters)."""
    parts = [(m, freudenthal_character(dec.rs, w)) for w, m in dec.terms.items()]
    return char_add(parts, dec.rs)


def recombine_dominant(dec: IrrDecomposition) -> dict:
    """Dominant slice of the recombined character; cheap round-trip check."""
    out: dict = {}
    for lam, mult in dec.terms.items():
        for w, m in irreducible_dominant_support(dec.rs, lam).items():
            out[w] = out.get(w, 0) + mult * m
    return {w: m for w, m in out.items() if m}
