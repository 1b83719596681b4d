"""
Partial-fraction coefficient vectors.

A :class:`LaurentVector` holds the exact rational coefficients of a rational
function of ``z0`` expanded in powers of ``1/(nu - (nu-1) z0)``.  Slot ``i``
of ``coeffs`` multiplies ``(nu - (nu-1) z0) ** -(base_power + i)``.

For ``nu = 2`` every vector is kept as a window of fixed length
``band_len = alpha + beta`` (left-padded with zeros when needed); for other
valences the vector simply grows with the derivative order.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb
from typing import Sequence


class CoefficientError(ValueError):
    """Malformed, inconsistent or unavailable coefficient data."""


class Family(enum.Enum):
    """Two-legged maps (``z_g``) or regular maps (``e_g``)."""

    TWO_LEGGED = "z"
    REGULAR = "e"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, Family):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise CoefficientError(f"unknown family {value!r} (expected 'z' or 'e')") from None


@dataclass(frozen=True)
class ModelSpec:
    family: Family
    nu: int
    genus: int

    def __post_init__(self):
        if self.nu < 2:
            raise CoefficientError(f"nu must be >= 2, got {self.nu}")
        if self.genus < 1:
            raise CoefficientError(f"genus must be >= 1, got {self.genus}")

    @property
    def alpha(self) -> int:
        return 3 * self.genus - 1 if self.family is Family.TWO_LEGGED else 3 * self.genus - 4

    @property
    def beta(self) -> int:
        return 2 * self.genus if self.family is Family.TWO_LEGGED else 2 * self.genus - 1

    @property
    def j_init(self) -> int:
        return 0 if self.family is Family.TWO_LEGGED else 1

    @property
    def j_zero(self) -> int:
        return self.beta - 1

    @property
    def band_len(self) -> int | None:
        return self.alpha + self.beta if self.nu == 2 else None

    @property
    def fast_path_valid(self) -> bool:
        return self.j_init <= self.j_zero

    @property
    def c_nu(self) -> int:
        return c_nu(self.nu)

    def top_power(self, j: int) -> int:
        """Exponent carried by the last coefficient ``q_{alpha+j}`` at order ``j``."""
        return self.alpha + self.beta + 2 * j

    def window_base(self, j: int) -> int:
        """First exponent of the fixed-length window used when ``nu = 2``."""
        return self.top_power(j) - self.band_len + 1


def c_nu(nu: int) -> int:
    return 2 * nu * comb(2 * nu - 1, nu - 1)


@dataclass(frozen=True)
class LaurentVector:
    spec: ModelSpec
    deriv_order: int
    base_power: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    @property
    def is_e_function(self) -> bool:
        # the b^(0) coefficients of e_g itself, which precede the derivative form
        return self.spec.family is Family.REGULAR and self.deriv_order == 0

    def total(self) -> Fraction:
        """Value of the represented function at ``z0 = 1``."""
        return sum(self.coeffs, Fraction(0))

    def power_of(self, i: int) -> int:
        return self.base_power + i

    def full(self) -> list[Fraction]:
        """Unpadded coefficients ``q_0 .. q_{alpha+j}`` starting at exponent ``beta + j``.

        Window slots below ``beta + j`` must be zero; missing low slots (the
        window has slid past them) are zero by construction.
        """
        if self.is_e_function:
            return list(self.coeffs)
        spec, j = self.spec, self.deriv_order
        lo = spec.beta + j
        out = [Fraction(0)] * (spec.alpha + j + 1)
        for i, c in enumerate(self.coeffs):
            p = self.base_power + i
            if p < lo or p > spec.top_power(j):
                if c:
                    raise CoefficientError(
                        f"nonzero coefficient at exponent {p} outside [{lo}, {spec.top_power(j)}]")
                continue
            out[p - lo] = c
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def from_full(spec: ModelSpec, j: int, q: Sequence[Fraction]) -> LaurentVector:
    """Build a vector from unpadded coefficients, windowing to ``band_len`` when ``nu = 2``."""
    q = [Fraction(c) for c in q]
    if len(q) > spec.alpha + j + 1:
        raise CoefficientError(
            f"{len(q)} coefficients exceed alpha + deriv_order + 1 = {spec.alpha + j + 1}")
    q = q + [Fraction(0)] * (spec.alpha + j + 1 - len(q))
    lo = spec.beta + j
    if spec.nu != 2:
        return LaurentVector(spec, j, lo, tuple(q))
    if not spec.fast_path_valid:
        raise CoefficientError(
            f"band window undefined for {spec.family.value} genus {spec.genus}: j_G > beta - 1")
    base = spec.window_base(j)
    window = []
    for p in range(base, base + spec.band_len):
        window.append(q[p - lo] if p >= lo else Fraction(0))
    dropped = q[: max(0, base - lo)]
    if any(dropped):
        raise CoefficientError("nonzero coefficients fall below the band window")
    return LaurentVector(spec, j, base, tuple(window))


def zero_vector(spec: ModelSpec, j: int | None = None) -> LaurentVector:
    j = spec.j_init if j is None else j
    return from_full(spec, j, [])


# -- builtin data -----------------------------------------------------------

_DATA_FILE = "initial_vectors.txt"


def builtin_text() -> str:
    return resources.files("mapcount").joinpath("data").joinpath(_DATA_FILE).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _builtin_table() -> dict[tuple[str, int], tuple[Fraction, ...]]:
    table: dict[tuple[str, int], list[str]] = {}
    key = None
    for raw in builtin_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"([ze])\s+(\d+):(.*)", line)
        if m:
            key = (m.group(1), int(m.group(2)))
            table[key] = []
            line = m.group(3)
        if key is None:
            raise CoefficientError(f"stray line in builtin data: {raw!r}")
        table[key].extend(tok for tok in (t.strip() for t in line.split(",")) if tok)
    return {k: tuple(parse_rational(t) for t in v) for k, v in table.items()}


def builtin_keys() -> list[tuple[Family, int]]:
    return [(Family(f), g) for f, g in sorted(_builtin_table(), key=lambda k: (k[0] != "z", k[1]))]


def load_builtin(family, genus: int) -> LaurentVector:
    family = Family.parse(family)
    try:
        coeffs = _builtin_table()[(family.value, genus)]
    except KeyError:
        raise CoefficientError(
            f"no builtin data for family {family.value} genus {genus} "
            "(available: z 1..7, e 2..7, nu = 2)") from None
    spec = ModelSpec(family, 2, genus)
    j = spec.j_init
    return LaurentVector(spec, j, spec.window_base(j), coeffs)


# -- text format ------------------------------------------------------------

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(token: str) -> Fraction:
    if not isinstance(token, str) or not _RATIONAL.fullmatch(token.strip()):
        raise CoefficientError(f"malformed rational literal {token!r}")
    token = token.strip()
    if "/" in token and int(token.split("/")[1]) == 0:
        raise CoefficientError(f"zero denominator in {token!r}")
    return Fraction(token)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_FIELDS = ("family", "nu", "genus", "deriv_order", "base_power", "coeffs")


def import_vector(document: str) -> LaurentVector:
    """Parse a coefficient document (a JSON object, see README) into a vector."""
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise CoefficientError(f"coefficient document is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CoefficientError("coefficient document must be a single object")
    unknown = set(obj) - set(_FIELDS)
    if unknown:
        raise CoefficientError(f"unknown fields: {sorted(unknown)}")
    missing = [f for f in _FIELDS if f not in obj]
    if missing:
        raise CoefficientError(f"missing fields: {missing}")
    for f in ("nu", "genus", "deriv_order", "base_power"):
        if not isinstance(obj[f], int) or isinstance(obj[f], bool):
            raise CoefficientError(f"field {f!r} must be an integer")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
        raise CoefficientError("field 'coeffs' must be an array of strings")
    if not coeffs:
        raise CoefficientError("empty coefficient vector")
    values = [parse_rational(c) for c in coeffs]

    spec = ModelSpec(Family.parse(obj["family"]), obj["nu"], obj["genus"])
    j = obj["deriv_order"]
    if spec.family is Family.REGULAR and j == 0:
        if obj["base_power"] != spec.beta - 1 or len(values) > spec.alpha + 2:
            raise CoefficientError("e_g coefficients must start at exponent 2g-2 with at most 3g-2 entries")
        values += [Fraction(0)] * (spec.alpha + 2 - len(values))
        return LaurentVector(spec, 0, spec.beta - 1, tuple(values))
    if j < spec.j_init:
        raise CoefficientError(f"deriv_order {j} below j_G = {spec.j_init}")
    if obj["base_power"] != spec.beta + j:
        raise CoefficientError(
            f"base_power {obj['base_power']} inconsistent with beta + deriv_order = {spec.beta + j}")
    return from_full(spec, j, values)


def export_vector(v: LaurentVector) -> str:
    spec = v.spec
    base = spec.beta - 1 if v.is_e_function else spec.beta + v.deriv_order
    doc = {
        "family": spec.family.value,
        "nu": spec.nu,
        "genus": spec.genus,
        "deriv_order": v.deriv_order,
        "base_power": base,
        "coeffs": [format_rational(c) for c in v.full()],
    }
    return json.dumps(doc, indent=2) + "\n"
