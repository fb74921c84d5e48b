"""JSON and point-file text formats with 17-significant-digit floats."""
import json
import math

import numpy as np

from .errors import DomainError


def format_float(x):
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return "null"
    return "%.17g" % x


def dumps(obj, indent=2):
    """Serialize plain containers to JSON, printing floats with ``%.17g``."""
    return _encode(obj, indent, 0)


def _encode(obj, indent, level):
    pad = "\n" + " " * (indent * (level + 1)) if indent else ""
    end = "\n" + " " * (indent * level) if indent else ""
    sep = "," if indent else ", "
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in seq):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in seq) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in seq]
        return "[" + sep.join(items) + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def parse_points(text):
    """Parse one point per line, whitespace-separated coordinates, ``#`` comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([float(tok) for tok in line.split()])
        except ValueError as exc:
            raise DomainError(f"line {lineno}: cannot parse coordinates ({exc})") from None
    if rows and len({len(r) for r in rows}) != 1:
        raise DomainError("all points must have the same dimension")
    return rows


def format_points(points, header=None):
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    for row in np.atleast_2d(np.asarray(points, dtype=float)):
        lines.append(" ".join(format_float(v) for v in row))
    return "\n".join(lines) + "\n"
