"""Run the CLI on a set of inputs; validate each JSON report against its
schema, check exit codes, and check that reruns are byte-identical."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.stem: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
for s in schemas.values():
    jsonschema.Draft202012Validator.check_schema(s)

P1 = '{"basis":[[1,0,0,0,0,1],[0,0,1,1,0,0]]}'
F = '{"basis":[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0]]}'
S01 = '{"basis":[[1,0,0,0,0,0]]}'
TS = '{"basis":[[1,0,0,0,0,0],[0,0,0,0,0,1],[0,1,0,0,1,0]]}'
P2Q = '{"field":"q","kernel":{"basis":[[1,0,0,0,0,-1],[0,1,0,0,1,0],[0,0,1,-1,0,0]]}}'

# (args, expected exit code, schema name)
cases = [
    (["classify", "--field", "gf:3", "--input", P1], 0, "classify"),
    (["classify", "--field", "gf:2", "--input", F], 0, "classify"),
    (["classify", "--field", "q", "--input", P2Q], 0, "classify"),
    (["classify", "--field", "gf:3", "--input", '{"basis":[]}'], 3, "error"),
    (["classify", "--field", "gf:3", "--input", '{"basis":[[1,0,0]]}'], 3, "error"),
    (["classify", "--field", "gf:3", "--input", '{"basis":'], 2, "error"),
    (["classify", "--field", "gf:6", "--input", S01], 2, "error"),
    (["aut", "--field", "gf:2", "--input", S01], 0, "aut"),
    (["aut", "--field", "gf:3", "--input", TS], 0, "aut"),
    (["aut", "--field", "q", "--input", P2Q], 0, "aut"),
    (["aut", "--field", "gf:2", "--input", F], 4, "error"),
    (["orbits", "--field", "gf:3", "--input", S01], 0, "orbits"),
    (["orbits", "--field", "q", "--input", S01], 5, "error"),
    (["verify-table", "--field", "gf:4"], 1, "verify-table"),
    (["verify-table", "--field", "q"], 5, "error"),
    (["conj", "--field", "q", "--hilbert", "-1,-1", "--v", "h1", "--x", "h2"], 0, "conj"),
    (["conj", "--field", "q", "--hilbert", "-1,-1", "--v", "h1", "--x", "2*h2"], 0, "conj"),
    (["conj", "--field", "q", "--hilbert", "1,1", "--v", "h1", "--x", "h2"], 6, "error"),
    (["forms", "arf", "--field", "gf:4", "--form", "1,1,1"], 0, "forms"),
    (["forms", "equiv", "--field", "gf:2", "--form", "1,1,0", "--other", "0,1,0"], 0, "forms"),
    (["forms", "hermitian", "--field", "gf:3", "--ext", "0,1", "--gram", '[["1","0"],["0","1"]]'], 0, "forms"),
    (["forms", "ternary", "--field", "gf:3", "--input", TS], 0, "forms"),
]

failures = 0
for args, code, name in cases:
    runs = [subprocess.run([cli, *args, "--output", "json"], capture_output=True, text=True) for _ in range(2)]
    r = runs[0]
    problems = []
    if r.returncode != code:
        problems.append(f"exit {r.returncode}, expected {code}")
    if runs[1].stdout != r.stdout:
        problems.append("output differs between runs")
    try:
        jsonschema.validate(json.loads(r.stdout), schemas[name])
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        problems.append(f"schema {name}: {str(e).splitlines()[0]}")
    text = subprocess.run([cli, *args], capture_output=True, text=True)
    if text.returncode != code:
        problems.append(f"text mode exit {text.returncode}")
    print(("FAIL " if problems else "ok   ") + " ".join(args[:3]), *problems, sep="\n  " if problems else "")
    failures += bool(problems)

sys.exit(1 if failures else 0)
