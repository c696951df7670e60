"""CSV/TSV output for sweeps: UTF-8, ``\\n`` line endings, a header row,
numbers with 12 significant digits."""
import csv
import io
import math

from .explore import SweepRow

DELIMITERS = {"csv": ",", "tsv": "\t"}


def fmt(x):
    return format(float(x), ".12g")


def write_rows(rows, grid, stream, fmt_name="csv"):
    w = csv.writer(stream, delimiter=DELIMITERS[fmt_name], lineterminator="\n")
    cols = grid.columns
    w.writerow(cols + [grid.quantity_column, "path"])
    for r in rows:
        w.writerow([fmt(r.params[c]) for c in cols] + [fmt(r.value), r.path])


def rows_to_text(rows, grid, fmt_name="csv"):
    buf = io.StringIO()
    write_rows(rows, grid, buf, fmt_name)
    return buf.getvalue()


def read_rows(stream, fmt_name="csv"):
    """Parse a table written by :func:`write_rows` back into SweepRows."""
    r = csv.reader(stream, delimiter=DELIMITERS[fmt_name])
    header = next(r)
    cols = header[:-2]
    out = []
    for rec in r:
        params = {c: float(v) for c, v in zip(cols, rec)}
        out.append(SweepRow(params, float(rec[-2]), rec[-1]))
    return out


def rounded(rows):
    """Rows with every number passed through 12-significant-digit formatting."""
    return [SweepRow({k: float(fmt(v)) for k, v in r.params.items()},
                     float(fmt(r.value)), r.path) for r in rows]


def same_rows(a, b):
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if x.path != y.path or x.params.keys() != y.params.keys():
            return False
        pairs = [(x.value, y.value)] + [(x.params[k], y.params[k]) for k in x.params]
        for u, v in pairs:
            if not (u == v or (math.isnan(u) and math.isnan(v))):
                return False
    return True
