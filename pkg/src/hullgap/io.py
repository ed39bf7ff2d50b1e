"""Instance files and point files.

Instance file::

    # comment
    eps 1/2
    3
    0.25

Point file: one ``x y`` pair per line. A trailing ``# name`` comment names
the point in witnesses; unnamed points are called P1, P2, ...
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .geom import Point
from .numeric import RationalParseError, rat_parse, rat_render
from .reductions import Construction, Instance


class InputFormatError(ValueError):
    def __init__(self, path, line_no: int, message: str):
        where = f"{path}:{line_no}" if line_no else str(path)
        super().__init__(f"{where}: {message}")
        self.line_no = line_no


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        yield no, body.strip(), comment.strip()


def _token(tok: str, path, no: int):
    try:
        return rat_parse(tok)
    except (RationalParseError, ZeroDivisionError) as exc:
        raise InputFormatError(path, no, str(exc)) from None


def is_instance_text(text: str) -> bool:
    for _, body, _ in _lines(text):
        if body:
            return body.split()[0] == "eps"
    return False


def parse_instance(text: str, path="<instance>") -> Instance:
    eps = None
    values = []
    for no, body, _ in _lines(text):
        if not body:
            continue
        fields = body.split()
        if eps is None:
            if fields[0] != "eps" or len(fields) != 2:
                raise InputFormatError(path, no, "first line must be 'eps <rational>'")
            eps = _token(fields[1], path, no)
            if eps <= 0:
                raise InputFormatError(path, no, "eps must be positive")
            continue
        if len(fields) != 1:
            raise InputFormatError(path, no, f"expected one rational, got {body!r}")
        values.append(_token(fields[0], path, no))
    if eps is None:
        raise InputFormatError(path, 0, "missing 'eps' line")
    if not values:
        raise InputFormatError(path, 0, "no values after the eps line")
    return Instance(tuple(values), eps)


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    names: tuple[str, ...]


def parse_points(text: str, path="<points>") -> PointSet:
    points, names = [], []
    for no, body, comment in _lines(text):
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise InputFormatError(path, no, f"expected 'x y', got {body!r}")
        points.append(Point(_token(fields[0], path, no), _token(fields[1], path, no)))
        names.append(comment.split()[0] if comment else f"P{len(points)}")
    if not points:
        raise InputFormatError(path, 0, "no points")
    return PointSet(tuple(points), tuple(names))


def construction_points(con: Construction) -> PointSet:
    pts = con.points
    return PointSet(pts, tuple(con.label(k) for k in range(len(pts))))


def render_instance(inst: Instance) -> str:
    return "\n".join([f"eps {rat_render(inst.eps)}"] + [rat_render(v) for v in inst.values]) + "\n"


def render_points(ps: PointSet) -> str:
    return "".join(f"{rat_render(p.x)} {rat_render(p.y)}  # {name}\n" for p, name in zip(ps.points, ps.names))


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")
