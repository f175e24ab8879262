# Copyright 2026 The laurent-duality Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validate the bundled data files against the JSON schemas."""

import json
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def main(root: Path) -> int:
    schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    ).with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
    for s in schemas.values():
        Draft202012Validator.check_schema(s)
    failures = 0
    for path in sorted((root / "data").iterdir()):
        doc = json.loads(path.read_text())
        if path.suffix == ".mod":
            name = "module.schema.json"
        else:
            name = f"{doc.get('kind')}.schema.json"
        errors = list(Draft202012Validator(schemas[name], registry=registry).iter_errors(doc))
        status = "ok" if not errors else "invalid"
        print(f"{path.name}: {status} ({name})")
        for e in errors[:3]:
            print(f"    {e.json_path}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[2]))
