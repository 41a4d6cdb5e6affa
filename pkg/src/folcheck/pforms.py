"""Polynomial differential p-forms on projective space, with exact scalars.

A form is a sparse sum of terms (monomial in x_0..x_n) * dx_{i_1..i_p} with
rational coefficients, all monomials sharing one total degree.  Global
twisted forms are exactly the radial-contraction kernel; the module provides
the contraction, exterior derivative, wedge, the integrability quadratic
map, locally-decomposable tests, and the Euler identity.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

__all__ = [
    "PolyForm",
    "contract_radial",
    "exterior_derivative",
    "wedge_forms",
    "psi_wedge_d",
    "psi_bilinear",
    "is_lds",
    "is_integrable",
    "form_from_multivector",
    "euler_identity_check",
    "radial_kernel_dimension",
    "pencil_form",
    "contact_form",
]


def _merge_dx(a: tuple, b: tuple):
    """Concatenate two strictly increasing dx index tuples with sign."""
    merged = list(a + b)
    sign = 1
    for i in range(1, len(merged)):
        j = i
        while j > 0 and merged[j - 1] > merged[j]:
            merged[j - 1], merged[j] = merged[j], merged[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(merged)):
        if merged[i - 1] == merged[i]:
            return None
    return tuple(merged), sign


class PolyForm:
    """Homogeneous polynomial differential form on P^n (coordinates x_0..x_n)."""

    __slots__ = ("n", "p", "poly_degree", "entries")

    def __init__(self, n: int, p: int, poly_degree: int,
                 entries: dict | None = None):
        self.n = n
        self.p = p
        self.poly_degree = poly_degree
        self.entries = {}
        if entries:
            for (mono, dx), coeff in entries.items():
                if not coeff:
                    continue
                if len(mono) != n + 1 or sum(mono) != poly_degree:
                    raise ValueError(f"monomial {mono} violates homogeneity")
                if len(dx) != p or list(dx) != sorted(set(dx)):
                    raise ValueError(f"bad dx index tuple {dx}")
                self.entries[(tuple(mono), tuple(dx))] = Fraction(coeff)

    def add_term(self, mono, dx, coeff) -> None:
        if not coeff:
            return
        key = (tuple(mono), tuple(dx))
        value = self.entries.get(key, 0) + coeff
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "PolyForm":
        return PolyForm(self.n, self.p, self.poly_degree,
                        {k: c * v for k, v in self.entries.items()})

    def __add__(self, other: "PolyForm") -> "PolyForm":
        if (self.n, self.p, self.poly_degree) != (other.n, other.p, other.poly_degree):
            raise ValueError("cannot add forms of different shape")
        out = dict(self.entries)
        for k, v in other.entries.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return PolyForm(self.n, self.p, self.poly_degree, out)

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, PolyForm)
                and (self.n, self.p, self.poly_degree)
                == (other.n, other.p, other.poly_degree)
                and self.entries == other.entries)

    def __repr__(self):
        return (f"PolyForm(n={self.n}, p={self.p}, deg={self.poly_degree}, "
                f"terms={len(self.entries)})")

    def to_json(self) -> list:
        return [
            {"mono": list(mono), "dx": list(dx), "coeff": str(coeff)}
            for (mono, dx), coeff in sorted(self.entries.items())
        ]

    @classmethod
    def from_json(cls, n: int, terms: list) -> "PolyForm":
        if not terms:
            raise ValueError("empty form needs explicit shape; got no terms")
        p = len(terms[0]["dx"])
        deg = sum(terms[0]["mono"])
        form = cls(n, p, deg)
        for t in terms:
            form.add_term(tuple(t["mono"]), tuple(t["dx"]), Fraction(t["coeff"]))
        return form


def contract_radial(omega: PolyForm) -> PolyForm:
    """Interior product with the Euler field sum(x_i d/dx_i).

    Drops the form degree by one and raises the polynomial degree by one;
    applying it twice annihilates everything.
    """
    if omega.p < 1:
        raise ValueError("cannot contract a 0-form")
    out = PolyForm(omega.n, omega.p - 1, omega.poly_degree + 1)
    for (mono, dx), coeff in omega.entries.items():
        for j, var in enumerate(dx):
            sign = -1 if j % 2 else 1
            new_mono = list(mono)
            new_mono[var] += 1
            out.add_term(tuple(new_mono), dx[:j] + dx[j + 1:], coeff * sign)
    return out


def exterior_derivative(omega: PolyForm) -> PolyForm:
    """d(P dx_I) = sum_v dP/dx_v dx_v ^ dx_I, exact."""
    out = PolyForm(omega.n, omega.p + 1, omega.poly_degree - 1)
    for (mono, dx), coeff in omega.entries.items():
        for var, exp in enumerate(mono):
            if exp == 0 or var in dx:
                continue
            new_mono = list(mono)
            new_mono[var] -= 1
            merged = _merge_dx((var,), dx)
            if merged is None:
                continue
            out.add_term(tuple(new_mono), merged[0], coeff * exp * merged[1])
    return out


def wedge_forms(omega: PolyForm, eta: PolyForm) -> PolyForm:
    """Exterior product of two forms on the same space."""
    if omega.n != eta.n:
        raise ValueError("wedge needs forms on the same projective space")
    out = PolyForm(omega.n, omega.p + eta.p,
                   omega.poly_degree + eta.poly_degree)
    eitems = list(eta.entries.items())
    for (m1, d1), c1 in omega.entries.items():
        for (m2, d2), c2 in eitems:
            merged = _merge_dx(d1, d2)
            if merged is None:
                continue
            mono = tuple(a + b for a, b in zip(m1, m2))
            out.add_term(mono, merged[0], c1 * c2 * merged[1])
    return out


def psi_wedge_d(omega: PolyForm) -> PolyForm:
    """The integrability quadratic: omega ^ d(omega) for a twisted 1-form.

    Zero exactly when the 1-form is integrable.  Requires a radial section
    (contract_radial(omega) = 0), which is what global twisted forms are.
    """
    if omega.p != 1:
        raise ValueError("the quadratic map is defined on 1-forms")
    if not contract_radial(omega).is_zero():
        raise ValueError("input is not radial (not a global twisted form)")
    return wedge_forms(omega, exterior_derivative(omega))


def psi_bilinear(omega: PolyForm, eta: PolyForm) -> PolyForm:
    """Polarization (omega ^ d eta + eta ^ d omega)/2 of the quadratic map."""
    lhs = wedge_forms(omega, exterior_derivative(eta))
    rhs = wedge_forms(eta, exterior_derivative(omega))
    return (lhs + rhs).scale(Fraction(1, 2))


def _contract_vector(omega: PolyForm, var: int) -> PolyForm:
    out = PolyForm(omega.n, omega.p - 1, omega.poly_degree)
    for (mono, dx), coeff in omega.entries.items():
        if var not in dx:
            continue
        j = dx.index(var)
        sign = -1 if j % 2 else 1
        out.add_term(mono, dx[:j] + dx[j + 1:], coeff * sign)
    return out


def is_lds(omega: PolyForm) -> bool:
    """Locally decomposable off the singular set.

    Tested globally: (iota_u omega) ^ omega = 0 for u running over the basis
    of the (p-1)-th exterior power of the dual space; linearity makes the
    basis loop complete.  For p = 1 this is vacuous.
    """
    if omega.p == 1:
        return True
    for subset in combinations(range(omega.n + 1), omega.p - 1):
        contracted = omega
        for var in subset:
            contracted = _contract_vector(contracted, var)
        if not wedge_forms(contracted, omega).is_zero():
            return False
    return True


def is_integrable(omega: PolyForm) -> bool:
    """LDS plus (iota_u omega) ^ d omega = 0 over the same basis loop."""
    if not is_lds(omega):
        return False
    domega = exterior_derivative(omega)
    if omega.p == 1:
        return wedge_forms(omega, domega).is_zero()
    for subset in combinations(range(omega.n + 1), omega.p - 1):
        contracted = omega
        for var in subset:
            contracted = _contract_vector(contracted, var)
        if not wedge_forms(contracted, domega).is_zero():
            return False
    return True


def form_from_multivector(x: PolyForm) -> PolyForm:
    """Radial image of an element of S^d V tensor wedge^{p+1} V.

    The input is a polynomial (p+1)-form with no radiality assumed; the
    output is a global twisted p-form.  With d = 0, p = 1 this is the
    correspondence between 2-vectors and twisted 1-forms, under which
    decomposable 2-vectors give exactly the integrable pencils.
    """
    return contract_radial(x)


def euler_identity_check(omega: PolyForm) -> bool:
    """(poly_degree + p) * omega == iota_R(d omega), exactly."""
    if not contract_radial(omega).is_zero():
        raise ValueError("Euler identity applies to radial forms")
    scalar = omega.poly_degree + omega.p
    lhs = omega.scale(scalar)
    rhs = contract_radial(exterior_derivative(omega))
    return lhs == rhs


# ---------------------------------------------------------------------------
# constructions and exact linear algebra


def pencil_form(n: int, f: dict, g: dict, degree: int = 1) -> PolyForm:
    """f dg - g df for homogeneous polynomials f, g given as exponent maps."""
    fform = PolyForm(n, 0, degree, {(m, ()): c for m, c in f.items()})
    gform = PolyForm(n, 0, degree, {(m, ()): c for m, c in g.items()})
    dfrm = exterior_derivative(fform)
    dgrm = exterior_derivative(gform)
    return wedge_forms(fform, dgrm) - wedge_forms(gform, dfrm)


def _unit_mono(n: int, var: int) -> tuple:
    mono = [0] * (n + 1)
    mono[var] = 1
    return tuple(mono)


def contact_form(n: int, factor_exponent: int = 0,
                 factor_var: int = 0) -> PolyForm:
    """x0^e * (x0 dx1 - x1 dx0 + x2 dx3 - x3 dx2); not integrable for n >= 3."""
    if n < 3:
        raise ValueError("needs at least four coordinates")
    out = PolyForm(n, 1, factor_exponent + 1)
    base = [(0, 1, 1), (1, 0, -1), (2, 3, 1), (3, 2, -1)]
    for var, dxi, sign in base:
        mono = [0] * (n + 1)
        mono[var] += 1
        mono[factor_var] += factor_exponent
        out.add_term(tuple(mono), (dxi,), sign)
    return out


def _monomials(n: int, degree: int):
    """All exponent vectors of the given total degree in n+1 variables."""
    if degree == 0:
        yield (0,) * (n + 1)
        return
    def rec(pos, remaining, acc):
        if pos == n:
            yield tuple(acc + [remaining])
            return
        for e in range(remaining + 1):
            yield from rec(pos + 1, remaining - e, acc + [e])
    yield from rec(0, degree, [])


def radial_kernel_dimension(n: int, d: int, p: int) -> int:
    """dim ker(iota_R) on S^{d+1}V tensor wedge^p V, by exact elimination.

    This is the dimension of the space of global twisted p-forms with the
    corresponding twist; for d = 0, p = 1 it equals C(n+1, 2).
    """
    source = [(mono, dx)
              for mono in _monomials(n, d + 1)
              for dx in combinations(range(n + 1), p)]
    target_index = {}
    rows = []
    for mono, dx in source:
        form = PolyForm(n, p, d + 1, {(mono, dx): 1})
        image = contract_radial(form)
        row = {}
        for key, coeff in image.entries.items():
            idx = target_index.setdefault(key, len(target_index))
            row[idx] = coeff
        rows.append(row)
    # rank of the (sparse) matrix over Q
    ncols = len(target_index)
    dense = [[Fraction(0)] * ncols for _ in rows]
    for i, row in enumerate(rows):
        for j, c in row.items():
            dense[i][j] = Fraction(c)
    rank = _row_rank(dense)
    return len(source) - rank


def _row_rank(mat) -> int:
    if not mat:
        return 0
    rows, cols = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, rows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = Fraction(1) / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(row + 1, rows):
            if mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank
