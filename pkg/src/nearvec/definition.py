"""Text formats: space definition files, vector literals and map files.

A definition file holds ``key = value`` lines::

    # GF(5)^2 with the cube twist on the second coordinate
    field = gf(5)
    dim = 2
    exponents = 1,3

``field`` accepts ``gf(5)``, ``gf(9; modulus=1,0,1)`` or ``dickson(3)``.
Moduli list coefficients low degree first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .action import ActionSpec, build_action
from .errors import DefinitionSemanticError, DefinitionSyntaxError, NearVecError
from .scalar_group import ScalarGroupSpec, build_scalar_group, dickson, gf
from .space import MAX_CARRIER, SpaceHandle, coordinate_space

KEYS = ("field", "dim", "exponents")

_FIELD = re.compile(r"^(gf|dickson)\(\s*(\d+)\s*(?:;\s*modulus\s*=\s*([\d\s,]+))?\)$")
_INTS = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


@dataclass(frozen=True)
class SpaceDefinition:
    field: ScalarGroupSpec
    dim: int
    exponents: ActionSpec

    def __str__(self) -> str:
        return f"field = {self.field}\ndim = {self.dim}\nexponents = {self.exponents}"


def parse_field(text: str, line: int = 0) -> ScalarGroupSpec:
    m = _FIELD.match(text.strip())
    if not m:
        raise DefinitionSyntaxError(line, f"bad field {text!r}; expected gf(n), gf(n; modulus=...) or dickson(q)")
    kind, n, mod = m.group(1), int(m.group(2)), m.group(3)
    modulus = tuple(int(x) for x in mod.split(",")) if mod else None
    try:
        return gf(n, modulus) if kind == "gf" else dickson(n, modulus)
    except NearVecError as e:
        raise DefinitionSemanticError(str(e)) from e


def _ints(text: str, line: int, key: str) -> tuple[int, ...]:
    if not _INTS.match(text):
        raise DefinitionSyntaxError(line, f"{key} must be comma-separated non-negative integers")
    return tuple(int(x) for x in text.split(","))


def parse_definition(text: str) -> SpaceDefinition:
    """Parse and validate a definition; the space it describes must be buildable."""
    values: dict[str, tuple[int, str]] = {}
    for i, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise DefinitionSyntaxError(i, f"expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in content.split("=", 1))
        if key not in KEYS:
            raise DefinitionSyntaxError(i, f"unknown key {key!r}")
        if key in values:
            raise DefinitionSyntaxError(i, f"duplicate key {key!r}")
        values[key] = (i, value)
    if "field" not in values:
        raise DefinitionSyntaxError(0, "missing key 'field'")
    spec = parse_field(values["field"][1], values["field"][0])
    exps = None
    if "exponents" in values:
        line, v = values["exponents"]
        exps = _ints(v, line, "exponents")
    if "dim" in values:
        line, v = values["dim"]
        dims = _ints(v, line, "dim")
        if len(dims) != 1 or dims[0] < 1:
            raise DefinitionSyntaxError(line, "dim must be a positive integer")
        dim = dims[0]
    else:
        dim = len(exps) if exps else 1
    if exps is None:
        exps = (1,) * dim
    if len(exps) != dim:
        raise DefinitionSemanticError(f"dim = {dim} but {len(exps)} exponents given")
    if spec.order ** dim > MAX_CARRIER:
        raise DefinitionSemanticError(f"carrier size {spec.order}^{dim} exceeds {MAX_CARRIER}")
    d = SpaceDefinition(spec, dim, ActionSpec(exps))
    build_space(d)  # surfaces BadExponent and friends as semantic errors
    return d


_SPACE_CACHE: dict = {}


def build_space(d: SpaceDefinition) -> SpaceHandle:
    if d in _SPACE_CACHE:
        return _SPACE_CACHE[d]
    try:
        g = build_scalar_group(d.field)
        table = build_action(g, d.dim, d.exponents)
    except NearVecError as e:
        raise DefinitionSemanticError(str(e)) from e
    sp = coordinate_space(g, table)
    _SPACE_CACHE[d] = sp
    return sp


def load_definition(path: str) -> SpaceDefinition:
    with open(path, encoding="utf-8") as fh:
        return parse_definition(fh.read())


_VEC = re.compile(r"\(\s*\d+(?:\s*,\s*\d+)*\s*,?\s*\)")


def parse_vector(text: str, sp: SpaceHandle | None = None) -> tuple:
    """``(1,3)`` -> (1, 3); checked against the carrier when a space is given."""
    t = text.strip()
    if not _VEC.fullmatch(t):
        raise DefinitionSyntaxError(0, f"bad vector literal {text!r}")
    v = tuple(int(x) for x in t[1:-1].split(",") if x.strip())
    if sp is not None and v not in sp:
        raise DefinitionSemanticError(f"{v} is not a vector of {sp.name}")
    return v


def parse_vector_set(text: str, sp: SpaceHandle | None = None) -> list[tuple]:
    """``(1,0) (0,1)`` or ``(1,0),(0,1)``; the empty string is the empty set."""
    found = _VEC.findall(text)
    rest = _VEC.sub("", text).replace(",", "").strip()
    if rest:
        raise DefinitionSyntaxError(0, f"bad vector set {text!r}")
    return [parse_vector(f, sp) for f in found]


def parse_map(text: str, sp: SpaceHandle):
    """Map file: ``(x,y) -> (u,v)`` lines, plus optional ``basis-only = true``.

    Returns (images, basis_only).
    """
    images: dict = {}
    basis_only = False
    for i, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "->" in content:
            left, right = content.split("->", 1)
            try:
                x, y = parse_vector(left, sp), parse_vector(right, sp)
            except DefinitionSyntaxError:
                raise DefinitionSyntaxError(i, f"bad map line {raw.strip()!r}") from None
            if x in images and images[x] != y:
                raise DefinitionSemanticError(f"line {i}: two images for {x}")
            images[x] = y
        elif "=" in content:
            key, value = (s.strip() for s in content.split("=", 1))
            if key != "basis-only" or value not in ("true", "false"):
                raise DefinitionSyntaxError(i, f"unknown setting {content!r}")
            basis_only = value == "true"
        else:
            raise DefinitionSyntaxError(i, f"expected '(x) -> (y)', got {raw.strip()!r}")
    return images, basis_only
