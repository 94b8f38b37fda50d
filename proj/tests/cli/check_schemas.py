"""Runs every --json command of the CLI and validates its output against the shipped schemas."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

binary, fixtures, schemas = sys.argv[1:4]


def load(name):
    with open(os.path.join(schemas, name), encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


def run(args, expect_status=0):
    env = dict(os.environ, CHORDLAB_COLOR="never")
    proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True, env=env, check=False)
    if proc.returncode != expect_status:
        raise SystemExit(f"chordlab {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def fixture(name):
    return os.path.join(fixtures, name)


with tempfile.TemporaryDirectory() as work:
    cases = [
        ("validate.schema.json", ["validate", fixture("glue_left.chord")], 0),
        ("validate.schema.json", ["validate", fixture("theta.fatgraph")], 0),
        ("type.schema.json", ["type", fixture("gamma0_1_3_3.chord")], 0),
        ("type.schema.json", ["type", fixture("theta.fatgraph")], 0),
        ("boundaries.schema.json", ["boundaries", fixture("glue_right.chord")], 0),
        ("boundaries.schema.json", ["boundaries", fixture("theta.fatgraph")], 0),
        ("code.schema.json", ["code", "--marked", fixture("glue_right.chord")], 0),
        ("iso.schema.json", ["iso", fixture("glue_left.chord"), fixture("glue_right.chord")], 0),
        ("output.schema.json", ["gamma0", "2", "1", "3", "-o", os.path.join(work, "g.chord")], 0),
        ("output.schema.json",
         ["glue", fixture("glue_left.chord"), fixture("glue_right.chord"), "-o", os.path.join(work, "x.chord")], 0),
        ("output.schema.json", ["dot", fixture("glue_left.chord"), "-o", os.path.join(work, "x.dot")], 0),
        ("connect-report.schema.json", ["connect", "--type", "0,2,2", "--max-edges", "9", "--jobs", "2"], 0),
        ("tqft-op.schema.json", ["tqft", "op", "2", "2", "1", "--algebra", "pd2"], 0),
        ("tqft-op.schema.json", ["tqft", "op", "1", "3", "0", "--algebra", "st2", "--field", "F3"], 0),
        ("tqft-op.schema.json", ["tqft", "op", "--diagram", fixture("glue_right.chord"), "--algebra", "pd2"], 0),
        ("tqft-verify.schema.json", ["tqft", "verify", "--algebra", "st2", "--range", "2,2,2,1,1"], 0),
        ("tqft-counit.schema.json", ["tqft", "counit", "--algebra", "pd2"], 0),
        ("tqft-counit.schema.json", ["tqft", "counit", "--algebra", "zero-delta", "--field", "F2"], 0),
        ("tqft-axioms.schema.json", ["tqft", "axioms", "--algebra", fixture("pd2.frob")], 0),
        ("error.schema.json", ["validate", fixture("pair_self.fatgraph")], 1),
        ("error.schema.json", ["tqft", "op", "1", "0", "0"], 1),
    ]
    broken = os.path.join(work, "broken.frob")
    with open(broken, "w", encoding="utf-8") as f:
        f.write("frob v1\nfield Q\nbasis 1 x\nm 0 0 -> 0 1\nm 0 1 -> 1 1\nm 1 0 -> 1 1\n"
                "Delta 0 -> 0 1 1\nDelta 0 -> 1 0 1\nDelta 1 -> 1 0 1\nunit 1 0\n")
    cases.append(("tqft-axioms.schema.json", ["tqft", "axioms", "--algebra", broken], 1))

    for schema_name, args, status in cases:
        document = run(args, status)
        jsonschema.validate(document, load(schema_name), cls=jsonschema.Draft202012Validator)
        print(f"ok  {schema_name:28} chordlab {' '.join(os.path.basename(a) for a in args)}")
