"""Runs the charnum executable and validates every JSON document it prints."""

import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

cases = [
    (["numbers", "K3^2 x HP3"], 0),
    (["genus", "ahat", "K3"], 0),
    (["genus", "L", "HP2 x HP2"], 0),
    (["matrix", "4"], 0),
    (["verify", "1"], 0),
    (["verify", "5"], 0),
    (["numbers", "K3 x (HP2"], 1),
    (["genus", "todd", "K3"], 1),
    (["--max-k", "3", "verify", "4"], 1),
    (["--max-k", "3", "verify", "7"], 1),
]

failures = 0
for args, expected_code in cases:
    proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
    try:
        if proc.returncode != expected_code:
            raise AssertionError(f"exit code {proc.returncode}, expected {expected_code}")
        jsonschema.validate(json.loads(proc.stdout), schema)
        print("ok  ", " ".join(args))
    except Exception as exc:  # noqa: BLE001
        failures += 1
        print("FAIL", " ".join(args), "--", exc)

sys.exit(1 if failures else 0)
