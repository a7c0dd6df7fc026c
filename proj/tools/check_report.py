#!/usr/bin/env python3
"""Run a nilfilt command, check its exit code and validate its JSON output."""
import argparse
import json
import subprocess
import sys

import jsonschema


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--schema", required=True)
    ap.add_argument("--exit", type=int, action="append", dest="codes", required=True,
                    help="accepted exit code (repeatable)")
    ap.add_argument("command", nargs=argparse.REMAINDER)
    a = ap.parse_args()
    cmd = a.command[1:] if a.command[:1] == ["--"] else a.command
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print(f"exit {proc.returncode}")
    if proc.returncode not in a.codes:
        print(f"expected exit in {a.codes}", file=sys.stderr)
        sys.stderr.write(proc.stderr)
        return 1
    with open(a.schema) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    try:
        jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as e:
        print(f"schema violation: {e.message} at {list(e.absolute_path)}", file=sys.stderr)
        return 1
    print("schema valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
