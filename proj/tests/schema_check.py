# SPDX-License-Identifier: Apache-2.0
"""Validates CLI reports against docs/report.schema.json."""
import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    sys.exit(77)

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)

runs = [
    ["ring-floer", "--genus", "3"],
    ["ring-fukaya-floer", "--genus", "2", "--order", "3", "--seed", "9"],
    ["ring-sympow", "--genus", "3", "--d", "2"],
    ["hom-symm", "--genus", "3"],
    ["adjunction", "--genus", "3", "--self-int", "0", "--odd-class", "--k-dot-sigma", "4", "--d-b", "1"],
    ["--timing", "verify", "--suite", "bounds", "--genus-max", "3"],
]
for args in runs:
    out = subprocess.run([cli] + args, capture_output=True, text=True, check=False)
    if out.returncode not in (0, 1):
        sys.exit(f"{args}: exit {out.returncode}\n{out.stderr}")
    jsonschema.validate(json.loads(out.stdout), schema)
print(f"{len(runs)} reports valid")
