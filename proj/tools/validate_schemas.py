"""Validates a report (JSON lines) and the fixtures against schemas/."""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(__file__).resolve().parent.parent
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources(
    [(s["$id"], Resource.from_contents(s)) for s in schemas.values()]
    + [(name, Resource.from_contents(s)) for name, s in schemas.items()])


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


errors = 0


def check(v, doc, where):
    global errors
    for e in v.iter_errors(doc):
        errors += 1
        print(f"{where}: {e.message}")


diagram = validator("diagram.v1.json")
for p in sorted((root / "fixtures" / "diagrams").glob("*.json")):
    doc = json.loads(p.read_text())
    if "labels" in doc:
        check(diagram, doc, p.name)
check(validator("anchors.v1.json"), json.loads((root / "fixtures" / "anchors.json").read_text()), "anchors.json")

report = validator("report.v1.json")
lines = 0
for path in sys.argv[1:]:
    for i, line in enumerate(pathlib.Path(path).read_text().splitlines()):
        check(report, json.loads(line), f"{path}:{i + 1}")
        lines += 1

print(f"{lines} report lines, {errors} schema errors")
sys.exit(1 if errors else 0)
