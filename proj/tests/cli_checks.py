# Copyright 2026 The gsc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the gsc command line tool.

Usage: cli_checks.py <gsc binary> <schema dir>

Every JSON output is validated against its schema, DOT output is parsed,
exit codes are checked and each invocation is run twice and compared.
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

try:
    import pydot
except ImportError:  # pragma: no cover
    pydot = None

GSC, SCHEMAS = sys.argv[1], sys.argv[2]
failures = []


def run(args, stdin=None, env=None):
    e = dict(os.environ)
    e.pop("GSC_DEFAULT_CAP", None)
    e.update(env or {})
    outs = []
    for _ in range(2):
        p = subprocess.run([GSC] + args, input=stdin, capture_output=True, env=e)
        outs.append(p)
    if outs[0].stdout != outs[1].stdout or outs[0].returncode != outs[1].returncode:
        failures.append(f"nondeterministic: {' '.join(args)}")
    return outs[0]


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def validate(doc, name, what):
    try:
        jsonschema.validate(doc, schema(name))
        expect(True, f"{what} matches {name} schema")
    except jsonschema.ValidationError as e:
        expect(False, f"{what} matches {name} schema: {e.message}")


tmp = tempfile.mkdtemp()
files = {}
for name in ["dihedral4", "modular", "height4", "moebius"]:
    p = run(["example", name])
    expect(p.returncode == 0, f"example {name} exits 0")
    files[name] = os.path.join(tmp, name + ".txt")
    with open(files[name], "wb") as f:
        f.write(p.stdout)
    again = run(["export", "--json", files[name]])
    validate(json.loads(again.stdout), "presentation", f"export {name}")
    dot = run(["export", "--dot", files[name]]).stdout.decode()
    if pydot is not None:
        graphs = pydot.graph_from_dot_data(dot)
        expect(bool(graphs), f"export {name} DOT parses ({len(graphs or [])} graphs)")
    else:
        expect(dot.count("{") == dot.count("}") and "digraph" in dot,
               f"export {name} DOT is balanced")

moebius = files["moebius"]
d8 = files["dihedral4"]

# Pipelines read standard input.
text = open(moebius, "rb").read()
p = run(["geometry", "--relator", "moebius"], stdin=text)
out = p.stdout.decode()
expect(p.returncode == 0 and "length 6\n" in out and "width 3\n" in out,
       "example moebius | geometry prints length 6, width 3")
p = run(["geometry", "--relator", "moebius", "--format", "json", moebius])
validate(json.loads(p.stdout), "geometry", "geometry moebius")
p = run(["geometry", "--format", "json", d8])
validate(json.loads(p.stdout), "geometry", "geometry dihedral4 (all relators)")

p = run(["solve", "--word", "abababab"], stdin=open(d8, "rb").read())
expect(p.returncode == 0 and b"verdict trivial" in p.stdout, "dihedral4 solve abababab: exit 0, trivial")
p = run(["solve", "--word", "ab", "--format", "json", d8])
expect(p.returncode == 1, "dihedral4 solve ab: exit 1")
validate(json.loads(p.stdout), "solve", "solve ab")
p = run(["solve", "--word", "ab", moebius])
expect(p.returncode == 2, "solve refused by the precondition gate: exit 2")
p = run(["solve", "--word", "ab", "--force", moebius])
expect(p.returncode in (0, 1), "solve --force bypasses the gate")
p = run(["solve", "--word", "xyz", d8])
expect(p.returncode == 64, "solve with letters outside the alphabet: exit 64")

p = run(["validate", "--format", "json", files["height4"]])
expect(p.returncode == 0, "validate height4 exits 0")
validate(json.loads(p.stdout), "validate", "validate height4")

bad = os.path.join(tmp, "bad.txt")
with open(bad, "w") as f:
    f.write("[generators] a b\n[relator r rank=2]\ncells:\nvertex 0\nvertex 1\n"
            "edge 2 0 1 label=a\nedge 3 0 1 label=a\nbase=0\nref=aA\n")
p = run(["validate", bad])
expect(p.returncode == 2 and p.stderr, "determinism violation: exit 2 with a diagnostic")

p = run(["metric", "--relator", "moebius", "--path", "babcba^-1c^-1", "--format", "json", moebius])
doc = json.loads(p.stdout)
validate(doc, "metric", "metric")
expect(doc["graph_length"] == "7/6", "metric of W is 7/6")

p = run(["axioms", "--format", "json", d8])
expect(p.returncode == 0, "axioms dihedral4 exits 0")
validate(json.loads(p.stdout), "axioms", "axioms dihedral4")
p = run(["axioms", moebius])
expect(p.returncode == 2, "axioms moebius exits 2")

p = run(["cayley", "--radius", "8", "--format", "json", d8])
validate(json.loads(p.stdout), "cayley", "cayley dihedral4")
expect(json.loads(p.stdout)["vertices"] == 8, "cayley dihedral4 radius 8 has 8 vertices")
p = run(["cayley", "--radius", "6", "--force", files["modular"]], env={"GSC_DEFAULT_CAP": "5"})
expect(p.returncode == 3, "GSC_DEFAULT_CAP caps the modular ball: exit 3")

p = run(["closure", "--seed", "babcba^-1c^-1", "--alpha", "1/3", "--format", "json", moebius])
doc = json.loads(p.stdout)
validate(doc, "closure", "closure moebius")
expect(p.returncode == 0 and doc["relator"]["length"] == "6", "closure of W closes with length 6")
p = run(["closure", "--seed", "(aab)^20", "--alpha", "1/3", "--cap", "2", moebius])
expect(p.returncode in (0, 3), "closure with tiny cap exits 0 or 3")

p = run(["burnside", "--n", "20", "--toy", "--max-len", "1", "--check-word", "ab^6",
         "--format", "json"])
doc = json.loads(p.stdout)
validate(doc, "burnside", "burnside toy")
expect(p.returncode == 1 and doc["check"]["reason"] == "power_content(6)",
       "toy burnside rejects ab^6 with exit 1")
p = run(["burnside", "--n", "20"])
expect(p.returncode == 64, "burnside below 1260 without --toy: exit 64")
p = run(["no-such-command"])
expect(p.returncode == 64, "unknown subcommand: exit 64")
p = run(["example", "no-such-example"])
expect(p.returncode == 64, "unknown example: exit 64")

for f in failures:
    print("FAILED:", f)
sys.exit(1 if failures else 0)
