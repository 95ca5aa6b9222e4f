"""Line-oriented curve description files.

Example::

    # a curve on de Sitter space
    space = S12
    x = "sin(v)"
    y = "cos(v)"
    z = "0"
    domain = 0 6.283185307179586

Keys are ``space``, ``x``, ``y``, ``z`` and ``domain``; each must appear
exactly once.  ``#`` starts a comment outside quotes.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import CurveFileError, ParseError
from .curves import CurveSpec, Space
from .expr import parse_expression

KEYS = ("space", "x", "y", "z", "domain")


def _strip_comment(line: str) -> str:
    quote = None
    for i, ch in enumerate(line):
        if quote:
            if ch == quote:
                quote = None
        elif ch in "\"'":
            quote = ch
        elif ch == "#":
            return line[:i]
    return line


def _unquote(value: str, lineno: int) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    if value[:1] in "\"'" or value[-1:] in "\"'":
        raise CurveFileError(f"line {lineno}: unbalanced quotes in {value!r}")
    return value


def parse_curve_file(text: str) -> CurveSpec:
    values: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise CurveFileError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in KEYS:
            raise CurveFileError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise CurveFileError(f"line {lineno}: duplicate key {key!r}")
        values[key] = (value, lineno)
    missing = [k for k in KEYS if k not in values]
    if missing:
        raise CurveFileError(f"missing keys: {', '.join(missing)}")

    space_text, lineno = values["space"]
    try:
        space = Space(_unquote(space_text, lineno))
    except ValueError:
        raise CurveFileError(f"line {lineno}: space must be S12, H2 or Free, got {space_text!r}") from None

    exprs = []
    for key in ("x", "y", "z"):
        text_value, lineno = values[key]
        try:
            exprs.append(parse_expression(_unquote(text_value, lineno)))
        except ParseError as exc:
            raise CurveFileError(f"line {lineno}: {key}: {exc}") from None

    dom_text, lineno = values["domain"]
    parts = dom_text.replace(",", " ").split()
    if len(parts) != 2:
        raise CurveFileError(f"line {lineno}: domain needs two numbers, got {dom_text!r}")
    try:
        domain = (float(parts[0]), float(parts[1]))
    except ValueError:
        raise CurveFileError(f"line {lineno}: domain needs two numbers, got {dom_text!r}") from None
    return CurveSpec(space, *exprs, domain)


def load_curve_file(path: str | Path) -> CurveSpec:
    return parse_curve_file(Path(path).read_text(encoding="utf-8"))


def format_curve_file(spec: CurveSpec) -> str:
    x, y, z = spec.texts()
    lo, hi = spec.domain
    return f'space = {spec.space.value}\nx = "{x}"\ny = "{y}"\nz = "{z}"\ndomain = {lo!r} {hi!r}\n'
