"""Matrix-valued spherical functions of the complex projective plane.

For a type (n, l) the member Phi(w, t) is an (l+1)x(l+1) polynomial matrix
whose rows are the radial eigenvectors for k = 0..l. Closed forms are built
for l = 0 and l = 1; larger l is accepted through the JSON family file.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Union

from .hyper import HypergeomSpec, build_terminating
from .polyalg import PolyMatrix, poly_eval


class FamilyError(ValueError):
    pass


class NormalizationSingular(FamilyError):
    def __init__(self, w: int, row: int, col: int):
        self.w, self.row, self.col = w, row, col
        super().__init__(f"entry ({row}, {col}) of member w={w} vanishes at t=1")


class NormalizationMismatch(FamilyError):
    def __init__(self, w: int, row: int, col: int, value: Fraction):
        self.w, self.row, self.col, self.value = w, row, col, value
        super().__init__(
            f"family declared normalized but entry ({row}, {col}) of w={w} is {value} at t=1")


class ParseError(FamilyError):
    pass


class SchemaError(FamilyError):
    pass


class UnsupportedType(FamilyError):
    pass


@dataclass(frozen=True)
class SphericalType:
    n: int
    l: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("only types with n >= 0 are supported")
        if self.l < 0:
            raise ValueError("l must be nonnegative")

    @property
    def size(self) -> int:
        return self.l + 1


@dataclass(frozen=True)
class SphericalFamily:
    type: SphericalType
    normalized: bool
    members: Mapping[int, PolyMatrix] = field(hash=False)

    def __post_init__(self):
        if 0 not in self.members:
            raise SchemaError("family must contain the member w=0")
        size = self.type.size
        for w, m in self.members.items():
            if m.shape != (size, size):
                raise SchemaError(f"member w={w} has shape {m.shape}, expected {(size, size)}")

    def __getitem__(self, w: int) -> PolyMatrix:
        return self.members[w]

    def __contains__(self, w: int) -> bool:
        return w in self.members

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def l(self) -> int:
        return self.type.l

    @property
    def wmax(self) -> int:
        return max(self.members)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "normalized": self.normalized,
            "members": {str(w): self.members[w].to_json() for w in sorted(self.members)},
        }


@dataclass(frozen=True)
class EigenData:
    w: int
    Lambda: tuple[Fraction, ...]
    M: tuple[Fraction, ...]


def build_phi_l0(n: int, w: int) -> PolyMatrix:
    """Raw 1x1 member: 2F1(-w, w+n+2; n+1; t)."""
    p = build_terminating(HypergeomSpec([-w, w + n + 2], [n + 1]))
    return PolyMatrix(1, 1, [p])


def build_phi_l1(n: int, w: int) -> PolyMatrix:
    """Raw 2x2 member; rows are the k=0 and k=1 eigenvectors."""
    lam = Fraction(-w * (w + n + 3))
    e11 = build_terminating(HypergeomSpec([-w, w + n + 3], [n + 2], [lam - n - 1]))
    e11 = e11 * (1 - lam / (n + 1))
    e12 = build_terminating(HypergeomSpec([-w, w + n + 3], [n + 1]))

    lam = Fraction(-w * (w + n + 4) - n - 2)
    e21 = build_terminating(HypergeomSpec([-w, w + n + 4], [n + 2]))
    e22 = build_terminating(HypergeomSpec([-w - 1, w + n + 3], [n + 1], [lam - 1]))
    e22 = e22 * (-(n + 1))
    return PolyMatrix(2, 2, [e11, e12, e21, e22])


def build_raw(n: int, l: int, w: int) -> PolyMatrix:
    if l == 0:
        return build_phi_l0(n, w)
    if l == 1:
        return build_phi_l1(n, w)
    raise UnsupportedType(f"closed-form construction covers l <= 1, got l={l}; supply a family file")


def normalize_member(raw: PolyMatrix, w: int = 0) -> PolyMatrix:
    out = []
    for idx, e in enumerate(raw.entries):
        v = poly_eval(e, 1)
        if v == 0:
            raise NormalizationSingular(w, idx // raw.cols, idx % raw.cols)
        out.append(e / v)
    return PolyMatrix(raw.rows, raw.cols, out)


def normalize_family(stype: SphericalType, raw: Mapping[int, PolyMatrix]) -> SphericalFamily:
    """Divide every entry by its value at t=1 so each member is all ones there."""
    return SphericalFamily(stype, True, {w: normalize_member(m, w) for w, m in raw.items()})


@lru_cache(maxsize=None)
def _normalized_member(n: int, l: int, w: int) -> PolyMatrix:
    return normalize_member(build_raw(n, l, w), w)


def build_family(n: int, l: int, wmax: int, normalized: bool = True) -> SphericalFamily:
    stype = SphericalType(n, l)
    if normalized:
        members = {w: _normalized_member(n, l, w) for w in range(wmax + 1)}
    else:
        members = {w: build_raw(n, l, w) for w in range(wmax + 1)}
    return SphericalFamily(stype, normalized, members)


def eigen_matrices(stype: SphericalType, w: int) -> EigenData:
    """Diagonals of the two eigenvalue matrices, indices i = 1..l+1."""
    n, l = stype.n, stype.l
    lam, mu = [], []
    for i in range(1, l + 2):
        L = -w * (w + n + i + l + 1) - (i - 1) * (n + i)
        lam.append(Fraction(L))
        mu.append(Fraction(L * (n - l + 3 * i - 3) - 3 * (i - 1) * (l - i + 2) * (n + i)))
    return EigenData(w, tuple(lam), tuple(mu))


def check_lambda_consistency(n: int, w: int) -> bool:
    """The l=1 row parameters coincide with the eigenvalue diagonal."""
    ev = eigen_matrices(SphericalType(n, 1), w)
    return (ev.Lambda[0] == -w * (w + n + 3)
            and ev.Lambda[1] == -w * (w + n + 4) - n - 2)


def check_normalized(family: SphericalFamily) -> None:
    for w in sorted(family.members):
        m = family.members[w]
        for idx, e in enumerate(m.entries):
            v = poly_eval(e, 1)
            if v != 1:
                raise NormalizationMismatch(w, idx // m.cols, idx % m.cols, v)


def family_from_json(data) -> SphericalFamily:
    if not isinstance(data, dict):
        raise SchemaError("family file must hold a JSON object")
    for key, kind in (("l", int), ("n", int), ("normalized", bool), ("members", dict)):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
        v = data[key]
        if not isinstance(v, kind) or (kind is int and isinstance(v, bool)):
            raise SchemaError(f"key {key!r} must be of type {kind.__name__}")
    members_raw = data["members"]
    if not members_raw:
        raise SchemaError("members map is empty (w=0 is required)")
    members = {}
    for key, mat in members_raw.items():
        try:
            w = int(key)
        except ValueError:
            raise SchemaError(f"member key {key!r} is not an integer") from None
        if w < 0 or str(w) != key:
            raise SchemaError(f"member key {key!r} is not a canonical nonnegative integer")
        try:
            members[w] = PolyMatrix.from_json(mat)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"member w={w}: {exc}") from None
    try:
        stype = SphericalType(data["n"], data["l"])
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    family = SphericalFamily(stype, data["normalized"], members)
    if family.normalized:
        check_normalized(family)
    return family


def load_family_file(path: Union[str, Path]) -> SphericalFamily:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return family_from_json(data)


def dump_family_file(family: SphericalFamily, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(family.to_json(), indent=1) + "\n")
