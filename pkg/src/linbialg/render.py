"""Plain-text rendering of output documents (union notation, aligned grids)."""

from __future__ import annotations


def _grid(rows) -> list[str]:
    if not rows:
        return ["[]"]
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return ["[ " + "  ".join(x.rjust(w) for x, w in zip(r, widths)) + " ]" for r in rows]


def _side_by_side(left: list[str], right: list[str], sep: str = " ∪ ") -> list[str]:
    h = max(len(left), len(right))
    lw = max(len(x) for x in left)
    rw = max(len(x) for x in right)
    mid = (h - 1) // 2
    out = []
    for i in range(h):
        a = left[i] if i < len(left) else ""
        b = right[i] if i < len(right) else ""
        s = sep if i == mid else " " * len(sep)
        out.append((a.ljust(lw) + s + b.ljust(rw)).rstrip())
    return out


def _vec(items) -> str:
    return "(" + ", ".join(items) + ")"


def render_lines(value) -> list[str]:
    if isinstance(value, dict):
        kind = value.get("type")
        if kind == "matrix":
            return _grid(value["rows"])
        if kind == "bimatrix":
            return _side_by_side(_grid(value["first"]), _grid(value["second"]))
        if kind == "bivector":
            return [f"{_vec(value['first'])} ∪ {_vec(value['second'])}"]
        if kind == "polynomial":
            return [value["text"]]
        if kind == "bipolynomial":
            return [f"({value['first']['text']}) ∪ ({value['second']['text']})"]
        out = []
        for key in sorted(value):
            item = value[key]
            sub = render_lines(item)
            nested = isinstance(item, list) and sub[0].startswith("- ")
            if len(sub) == 1 and not nested:
                out.append(f"{key}: {sub[0]}")
            else:
                out.append(f"{key}:")
                out.extend("  " + line for line in sub)
        return out
    if isinstance(value, list):
        if all(isinstance(x, (str, int, bool)) or x is None for x in value):
            return ["[" + ", ".join(_scalar(x) for x in value) + "]"]
        out = []
        for item in value:
            sub = render_lines(item)
            out.append("- " + sub[0])
            out.extend("  " + line for line in sub[1:])
        return out or ["[]"]
    return [_scalar(value)]


def _scalar(x) -> str:
    if x is None:
        return "none"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def render(value) -> str:
    return "\n".join(render_lines(value))
