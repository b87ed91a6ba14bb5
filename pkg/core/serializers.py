import csv
import io
import json
import logging

from .complex import SimplicialComplex, from_facets, void
from .exceptions import DomainError
from .models import HomologySummary, VerificationCase
from .utils import face_labels, mask_from_labels

logger = logging.getLogger(__name__)

UNIVERSE_HEADER = "#universe:"
EMPTY_FACE = "-"


# === FACET FILES ===
def _facet_rows(text):
    """(header labels or None, list of label rows) from facet-file text."""
    header = None
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.lower().startswith(UNIVERSE_HEADER):
            header = line[len(UNIVERSE_HEADER):].split()
            continue
        if line.startswith("#"):
            continue
        rows.append([] if line == EMPTY_FACE else line.split())
    return header, rows


def _universe(header, rows, labels):
    if labels is not None:
        return tuple(labels)
    if header is not None:
        return tuple(header)
    seen = {}
    for row in rows:
        for name in row:
            seen.setdefault(name, len(seen))
    return tuple(seen)


def read_facets(text, labels=None):
    """Parse a facet file. Without `labels` or a header, vertices are numbered by first appearance."""
    header, rows = _facet_rows(text)
    universe = _universe(header, rows, labels)
    if len(set(universe)) != len(universe):
        raise DomainError("Universe header repeats a label")
    if not rows:
        return void(universe)
    return from_facets(universe, [mask_from_labels(row, universe) for row in rows])


def _face_line(face, labels):
    names = face_labels(face, labels)
    return " ".join(names) if names else EMPTY_FACE


def write_facets(K: SimplicialComplex):
    lines = [f"{UNIVERSE_HEADER} {' '.join(K.labels)}".rstrip()]
    lines.extend(_face_line(f, K.labels) for f in K.facets)
    return "\n".join(lines) + "\n"


# === ORDER FILES ===
def read_order(text, K):
    """Facet order from an order file, as bitsets over K's universe."""
    _, rows = _facet_rows(text)
    return [mask_from_labels(row, K.labels) for row in rows]


def write_order(order):
    return "\n".join(_face_line(f, order.labels) for f in order.facets) + "\n"


# === REPORTS ===
def cases_to_records(cases):
    return [case.model_dump(mode="json", by_alias=True) for case in cases]


def cases_to_json(cases):
    return json.dumps(cases_to_records(cases), indent=2, sort_keys=True)


def cases_from_json(text):
    return [VerificationCase.model_validate(record) for record in json.loads(text)]


CSV_COLUMNS = ["id", "params", "expected", "observed", "provenance", "pass"]


def cases_to_csv(cases):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in cases_to_records(cases):
        writer.writerow({
            "id": record["id"],
            "params": json.dumps(record["params"], sort_keys=True),
            "expected": json.dumps(record["expected"]),
            "observed": json.dumps(record["observed"]),
            "provenance": record["provenance"],
            "pass": record["pass"],
        })
    return buffer.getvalue()


def homology_to_json(summary: HomologySummary):
    return summary.model_dump_json(indent=2)


def matching_report_to_json(report):
    return report.model_dump_json(indent=2)
