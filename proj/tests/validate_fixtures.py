"""Validate shipped fixtures against the JSON schemas."""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

schemas = pathlib.Path(sys.argv[1])
fixtures = pathlib.Path(sys.argv[2])

registry = Registry()
for path in schemas.glob("*.schema.json"):
    registry = registry.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))


def check(schema_name, doc_path):
    schema = json.loads((schemas / schema_name).read_text())
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = list(validator.iter_errors(json.loads(doc_path.read_text())))
    for e in errors:
        print(f"{doc_path.name}: {e.message}")
    return not errors


ok = True
for path in sorted(fixtures.glob("z*.json")):
    ok &= check("fixture_matrix.schema.json", path)
for path in sorted(fixtures.glob("cl*.json")):
    ok &= check("fixture_clifford.schema.json", path)
sys.exit(0 if ok else 1)
