#!/usr/bin/env python3
"""Compare two sweep reports, ignoring timestamps and elapsed times."""
import json
import sys


def normalize(path):
    with open(path) as f:
        doc = json.load(f)
    doc["timestamp"] = ""
    # the worker count is a scheduling knob, not part of the case set
    doc.get("config", {}).pop("jobs", None)
    for rec in doc["records"]:
        rec["elapsed_ms"] = 0
    return doc


def main():
    a, b = normalize(sys.argv[1]), normalize(sys.argv[2])
    if a != b:
        print("reports differ", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
