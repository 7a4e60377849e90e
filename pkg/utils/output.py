import csv
import io
import json
from typing import List

from models.partition import TableCell

TABLE_HEADER = ("n", "r", "g", "k", "value")


def render_json(document) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_table_csv(cells: List[TableCell]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for cell in cells:
        writer.writerow([cell.n, cell.r, cell.g, cell.k, cell.value])
    return buffer.getvalue()


def table_document(cells: List[TableCell]) -> dict:
    return {"header": list(TABLE_HEADER), "rows": [cell.dict() for cell in cells]}
