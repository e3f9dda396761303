"""Golden-file pin of the canonical serialization of catalog modules."""

import json
from pathlib import Path

from bredon import NormalFormModule, catalog_get
from bredon.serialize import canonical_dumps

GOLDEN = json.loads(
    (Path(__file__).parent / "golden" / "catalog_modules.json").read_text()
)


def _entry(label):
    name, _, raw = label.partition("(")
    params = {}
    if raw:
        for item in raw.rstrip(")").split(","):
            key, value = item.split("=")
            params[key] = int(value)
    return catalog_get(name, **params)


def test_catalog_serializations_are_stable():
    for label, expected in GOLDEN.items():
        module = _entry(label).module
        assert canonical_dumps(module.to_json_dict()) == expected, label


def test_golden_strings_parse_back():
    for label, expected in GOLDEN.items():
        module = NormalFormModule.from_json_dict(json.loads(expected))
        assert module == _entry(label).module, label
        assert canonical_dumps(module.to_json_dict()) == expected, label
