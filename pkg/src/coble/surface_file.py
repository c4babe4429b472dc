"""Reader for the line-oriented surface description format.

::

    surface <name>
    gen <label> self=<int>              # basis element, diagonal Gram entry
    pair <label> <label> <int>          # off-diagonal entry, default 0
    class <name> = <±k*label ± ...>     # named integer combination
    canonical = <expr>
    boundary <class> <class> ...        # chain order

Everything after ``#`` is a comment.  Malformed input raises
:class:`SurfaceFileError` carrying the line number.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Union

from .surface import SurfaceModel

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_GEN = re.compile(rf"^gen\s+({_NAME})\s+self\s*=\s*(-?\d+)$")
_PAIR = re.compile(rf"^pair\s+({_NAME})\s+({_NAME})\s+(-?\d+)$")
_CLASS = re.compile(rf"^class\s+({_NAME})\s*=\s*(.+)$")
_CANON = re.compile(r"^canonical\s*=\s*(.+)$")
_SURF = re.compile(rf"^surface\s+({_NAME})$")


class SurfaceFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_surface(text: str) -> SurfaceModel:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line))

    name = None
    labels: list[str] = []
    diag: dict[str, int] = {}
    pairs: dict[tuple[str, str], int] = {}
    rest = []
    for no, line in lines:
        if m := _SURF.match(line):
            if name is not None:
                raise SurfaceFileError(no, "duplicate surface line")
            name = m.group(1)
        elif m := _GEN.match(line):
            lab = m.group(1)
            if lab in diag:
                raise SurfaceFileError(no, f"duplicate generator {lab!r}")
            labels.append(lab)
            diag[lab] = int(m.group(2))
        elif m := _PAIR.match(line):
            a, b, v = m.group(1), m.group(2), int(m.group(3))
            if a == b:
                raise SurfaceFileError(no, "use gen ... self= for diagonal entries")
            key = tuple(sorted((a, b)))
            if key in pairs:
                raise SurfaceFileError(no, f"duplicate pairing {a} {b}")
            pairs[key] = (v, no)
        elif line.split()[0] in ("class", "canonical", "boundary"):
            rest.append((no, line))
        else:
            raise SurfaceFileError(no, f"unrecognized line {line!r}")
    if name is None:
        raise SurfaceFileError(lines[0][0] if lines else 1, "missing 'surface <name>' line")
    if not labels:
        raise SurfaceFileError(lines[-1][0], "no generators declared")

    idx = {lab: i for i, lab in enumerate(labels)}
    gram = [[0] * len(labels) for _ in labels]
    for lab, v in diag.items():
        gram[idx[lab]][idx[lab]] = v
    for (a, b), (v, no) in pairs.items():
        for lab in (a, b):
            if lab not in idx:
                raise SurfaceFileError(no, f"unknown generator {lab!r}")
        gram[idx[a]][idx[b]] = gram[idx[b]][idx[a]] = v

    S = SurfaceModel(name, tuple(labels), tuple(tuple(r) for r in gram))
    classes = {}
    canonical = None
    boundary = None
    for no, line in rest:
        try:
            if m := _CLASS.match(line):
                cname = m.group(1)
                if cname in classes or cname in idx:
                    raise SurfaceFileError(no, f"name {cname!r} already defined")
                D = S.with_classes(classes).cls(m.group(2))
                if not D.is_integral:
                    raise SurfaceFileError(no, "classes must have integer coefficients")
                classes[cname] = D
            elif m := _CANON.match(line):
                if canonical is not None:
                    raise SurfaceFileError(no, "duplicate canonical line")
                canonical = S.with_classes(classes).cls(m.group(1))
            elif line.startswith("boundary"):
                if boundary is not None:
                    raise SurfaceFileError(no, "duplicate boundary line")
                names = line.split()[1:]
                if not names:
                    raise SurfaceFileError(no, "empty boundary")
                for n in names:
                    if n not in classes and n not in idx:
                        raise SurfaceFileError(no, f"unknown class {n!r}")
                boundary = (no, names)
            else:
                raise SurfaceFileError(no, f"malformed line {line!r}")
        except (KeyError, ValueError) as exc:
            if isinstance(exc, SurfaceFileError):
                raise
            raise SurfaceFileError(no, str(exc).strip("'\"")) from None

    S = SurfaceModel(name, S.labels, S.gram, canonical, (), classes)
    if boundary is not None:
        S = S.with_boundary(boundary[1])
    return S


def load_surface(path: Union[str, Path]) -> SurfaceModel:
    return parse_surface(Path(path).read_text(encoding="utf-8"))


def bundled_surface(name: str) -> SurfaceModel:
    """A surface file shipped in ``coble/data``."""
    text = resources.files("coble").joinpath("data", name).read_text(encoding="utf-8")
    return parse_surface(text)
