"""Plain-text file formats for matrices, codes, encoders and CSS pairs.

Matrix block::

    p rows cols
    <rows lines of cols space-separated residues>

A code is a matrix block preceded by ``generator`` or ``parity_check``.
An encoder is ``k_prime <value>`` followed by its generator matrix block.
A CSS pair is ``css``, a code block, a ``---`` line, and a second code block.
Lines starting with ``#`` are comments; they are kept and written back at
the top of the file, so a parsed document re-serializes byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .code import LinearCode
from .css import CssCode
from .errors import FormatError
from .field import PrimeField
from .matrix import Matrix
from .zkenc import RandomizedEncoder

CODE_FORMS = ("generator", "parity_check")


@dataclass
class Document:
    """A parsed file: the object, its kind, comments, and code representations.

    ``forms`` records whether each code block was given by its generator or
    its parity check (one entry for a code, two for a CSS pair).
    """

    kind: str
    obj: object
    comments: list[str] = field(default_factory=list)
    forms: tuple[str, ...] = ()


class _Lines:
    def __init__(self, text: str):
        self.items = []
        self.comments = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line.startswith("#"):
                self.comments.append(line[1:].strip())
            elif line:
                self.items.append((lineno, line))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def next(self, what: str):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise FormatError(f"unexpected end of input, expected {what}", last + 1)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self):
        if self.pos < len(self.items):
            lineno, line = self.items[self.pos]
            raise FormatError(f"unexpected trailing content {line!r}", lineno)


def _ints(line: str, lineno: int, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"expected integers in {what}, got {line!r}", lineno) from None


def _read_matrix(lines: _Lines) -> Matrix:
    lineno, line = lines.next("matrix header 'p rows cols'")
    header = _ints(line, lineno, "matrix header")
    if len(header) != 3:
        raise FormatError(f"matrix header needs 3 integers 'p rows cols', got {line!r}", lineno)
    p, rows, cols = header
    if rows < 0 or cols < 0:
        raise FormatError("matrix dimensions must be non-negative", lineno)
    try:
        F = PrimeField(p)
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc), lineno) from None
    data = []
    if cols:
        for _ in range(rows):
            rlineno, rline = lines.next("matrix row")
            row = _ints(rline, rlineno, "matrix row")
            if len(row) != cols:
                raise FormatError(f"expected {cols} entries, got {len(row)}", rlineno)
            if any(not 0 <= x < p for x in row):
                raise FormatError(f"entries must be residues in [0, {p})", rlineno)
            data.append(row)
    return Matrix(F, np.array(data, dtype=np.int64).reshape(rows, cols))


def _read_code(lines: _Lines) -> tuple[LinearCode, str]:
    lineno, line = lines.next("'generator' or 'parity_check'")
    if line not in CODE_FORMS:
        raise FormatError(f"expected 'generator' or 'parity_check', got {line!r}", lineno)
    M = _read_matrix(lines)
    if line == "generator":
        return LinearCode.from_generator(M), line
    return LinearCode.from_parity_check(M), line


def parse_matrix(text: str) -> Matrix:
    lines = _Lines(text)
    M = _read_matrix(lines)
    lines.done()
    return M


def loads(text: str) -> Document:
    """Parse any of the four file kinds, detected from the first line."""
    lines = _Lines(text)
    lineno, first = lines.peek()
    if first is None:
        raise FormatError("empty input", 1)
    if first == "css":
        lines.next("css")
        cx, fx = _read_code(lines)
        sep_no, sep = lines.next("'---' separator")
        if sep != "---":
            raise FormatError(f"expected '---' between the two codes, got {sep!r}", sep_no)
        cz, fz = _read_code(lines)
        lines.done()
        try:
            Q = CssCode(cx, cz)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from exc
        return Document("css", Q, lines.comments, (fx, fz))
    if first.startswith("k_prime"):
        lines.next("k_prime")
        parts = first.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'k_prime <value>', got {first!r}", lineno)
        (kp,) = _ints(parts[1], lineno, "k_prime")
        G = _read_matrix(lines)
        lines.done()
        try:
            E = RandomizedEncoder(G, kp)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from exc
        return Document("encoder", E, lines.comments)
    if first in CODE_FORMS:
        C, form = _read_code(lines)
        lines.done()
        return Document("code", C, lines.comments, (form,))
    M = _read_matrix(lines)
    lines.done()
    return Document("matrix", M, lines.comments)


def load(path) -> Document:
    with open(path) as fh:
        return loads(fh.read())


def _matrix_text(M: Matrix) -> str:
    lines = [f"{M.field.p} {M.rows} {M.cols}"]
    if M.cols:
        lines += [" ".join(str(int(x)) for x in row) for row in M.array]
    return "\n".join(lines) + "\n"


def _code_text(C: LinearCode, form: str) -> str:
    if form not in CODE_FORMS:
        raise ValueError(f"unknown code form {form!r}")
    M = C.generator if form == "generator" else C.parity_check
    return f"{form}\n" + _matrix_text(M)


def dumps(obj, *, comments=(), forms: tuple[str, ...] | None = None) -> str:
    """Serialize a matrix, code, encoder, CSS pair or :class:`Document`."""
    if isinstance(obj, Document):
        comments = obj.comments if not comments else comments
        forms = obj.forms or forms
        obj = obj.obj
    head = "".join(f"# {c}\n" if c else "#\n" for c in comments)
    if isinstance(obj, Matrix):
        return head + _matrix_text(obj)
    if isinstance(obj, LinearCode):
        return head + _code_text(obj, (forms or ("generator",))[0])
    if isinstance(obj, RandomizedEncoder):
        return head + f"k_prime {obj.k_prime}\n" + _matrix_text(obj.generator)
    if isinstance(obj, CssCode):
        fx, fz = forms or ("parity_check", "parity_check")
        return head + "css\n" + _code_text(obj.cx, fx) + "---\n" + _code_text(obj.cz, fz)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump(obj, path, **kwargs) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj, **kwargs))
