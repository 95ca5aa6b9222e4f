"""Byte-exact writers for OBJ meshes, CSV samples and verification reports.

Floats are written with ``repr`` (shortest round-trip, locale independent)
and lines end in LF.  Sinks are binary streams.  Minkowski coordinates are
written as-is, so x3 becomes a viewer's z axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Sequence

from .errors import IoError
from .lorentz_core import MinkVec3


def fmt(x: float) -> str:
    return repr(float(x))


def _emit(sink: BinaryIO, lines: Iterable[str]) -> None:
    try:
        sink.write("".join(line + "\n" for line in lines).encode("ascii"))
    except (OSError, ValueError) as exc:
        raise IoError(f"cannot write output: {exc}") from None


def obj_lines(mesh) -> list[str]:
    lines = [f"v {fmt(p.x1)} {fmt(p.x2)} {fmt(p.x3)}" for p in mesh.vertices]
    nv = mesh.nv
    for r in range(mesh.nu - 1):
        for c in range(nv - 1):
            i = r * nv + c + 1
            lines.append(f"f {i} {i + nv} {i + nv + 1} {i + 1}")
    return lines


def write_obj(mesh, sink: BinaryIO) -> None:
    _emit(sink, obj_lines(mesh))


def write_csv(samples: Sequence[tuple], sink: BinaryIO, extra_names: Sequence[str] = ()) -> None:
    """Rows of (v, point, *extras); ``extra_names`` label the extra columns."""
    header = ",".join(["v", "x1", "x2", "x3", *extra_names])
    lines = [header]
    for v, p, *extras in samples:
        if len(extras) != len(extra_names):
            raise IoError(f"row has {len(extras)} extra columns, header names {len(extra_names)}")
        lines.append(",".join(fmt(x) for x in (v, *p, *extras)))
    _emit(sink, lines)


@dataclass(frozen=True)
class ReportEntry:
    name: str
    residual: float
    tolerance: float
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass
class VerificationReport:
    entries: list[ReportEntry] = field(default_factory=list)

    def add(self, name: str, residual: float, tolerance: float, notes: str = "") -> ReportEntry:
        entry = ReportEntry(name, float(residual), float(tolerance), notes)
        self.entries.append(entry)
        return entry

    @property
    def n_passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def all_passed(self) -> bool:
        return self.n_passed == len(self.entries)

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            line = f"{'PASS' if e.passed else 'FAIL'} {e.name} residual={fmt(e.residual)} tol={fmt(e.tolerance)}"
            out.append(f"{line} {e.notes}" if e.notes else line)
        out.append(f"{self.n_passed}/{len(self.entries)} checks passed")
        return out


def write_report(report: VerificationReport, sink: BinaryIO) -> None:
    _emit(sink, report.lines())


def read_obj(data: bytes) -> tuple[list[MinkVec3], list[tuple[int, ...]]]:
    """Minimal reader for what :func:`write_obj` produces."""
    verts, faces = [], []
    for line in data.decode("ascii").splitlines():
        tag, *rest = line.split()
        if tag == "v":
            verts.append(MinkVec3(*(float(x) for x in rest)))
        elif tag == "f":
            faces.append(tuple(int(x) for x in rest))
    return verts, faces


def read_csv(data: bytes) -> tuple[list[str], list[list[float]]]:
    lines = data.decode("ascii").splitlines()
    return lines[0].split(","), [[float(x) for x in line.split(",")] for line in lines[1:]]
