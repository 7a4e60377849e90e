import json

from models.partition import TableCell
from utils.output import render_json, render_table_csv, table_document


class TestOutput:
    def test_csv(self):
        cells = [
            TableCell(n=1, r=0, g=0, k=1, value=1),
            TableCell(n=1, r=0, g=1, k=1, value=24),
        ]
        assert render_table_csv(cells) == "n,r,g,k,value\n1,0,0,1,1\n1,0,1,1,24\n"

    def test_csv_hodge_values(self):
        cells = [TableCell(n=1, r=0, g=1, k=0, value="1+t*tb")]
        assert render_table_csv(cells).splitlines()[1] == "1,0,1,0,1+t*tb"

    def test_json_is_canonical(self):
        text = render_json({"b": 1, "a": [1, 2]})
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": [1, 2], "b": 1}

    def test_table_document(self):
        document = table_document([TableCell(n=1, r=0, g=0, k=1, value=1)])
        assert document["header"] == ["n", "r", "g", "k", "value"]
        assert document["rows"] == [{"n": 1, "r": 0, "g": 0, "k": 1, "value": 1}]
