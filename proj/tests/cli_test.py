#!/usr/bin/env python3
"""End-to-end checks of the command line interface (exit codes, JSON shape)."""

import json
import os
import subprocess
import sys
import tempfile

BOTT = sys.argv[1]
failures = 0


def run(*args, env_extra=None, expect_code=0):
    global failures
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([BOTT, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {args}: exit {proc.returncode}, wanted {expect_code}\n"
              f"  stdout: {proc.stdout!r}\n  stderr: {proc.stderr!r}")
    return proc


def check(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")


out = run("check", "010/001/000")
check(json.loads(out.stdout) == {"n": 3, "bott": True}, "check accepts the path")

out = run("check", "010/001/100", expect_code=1)
check(json.loads(out.stdout)["bott"] is False, "check rejects the 3-cycle")

out = run("check", "0101/0010", expect_code=1)
check(json.loads(out.stderr)["code"] == "MalformedBin", "malformed bin reports a code")

out = run("canon", "3:7")
data = json.loads(out.stdout)
check(data["canonical"] == "3:5" and data["orbit_size"] == 2, "canon of the tournament")

out = run("canon", "&AO", "--format", "d6")
check(json.loads(out.stdout)["canonical"] == "2:1", "canon of a digraph6 record")

out = run("iso", "3:5", "3:7")
check(json.loads(out.stdout) == {"equivalent": True}, "iso on one class")
out = run("iso", "3:5", "3:6")
check(json.loads(out.stdout) == {"equivalent": False}, "iso across classes")
run("iso", "3:5", "2:1", expect_code=1)

out = run("orbit", "3:7", "--limit", "1")
data = json.loads(out.stdout)
check(data["orbit_size"] == 2 and len(data["members"]) == 1, "orbit respects --limit")

out = run("classify", "--n", "3")
data = json.loads(out.stdout)
check((data["n"], data["D"], data["O"], data["S"]) == (3, 4, 2, 0), "classify n=3 counts")
check(sorted(c["members"] for c in data["classes"]) == [1, 1, 2, 4], "classify n=3 members")

a = run("classify", "--n", "4", "--workers", "1").stdout
b = run("classify", "--n", "4", "--workers", "3").stdout
check(a == b, "classification output is byte-identical across worker counts")

out = run("classify", "--n", "3", "--csv")
lines = out.stdout.strip().splitlines()
check(lines[0] == "canon,members,orientable,symplectic" and len(lines) == 5, "csv table shape")

run("classify", "--n", "7", expect_code=1)  # needs --long-run
run("classify", "--n", "9", expect_code=3)  # out of range for the option

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as handle:
    handle.write("000/000/000\n010/000/000\n010/001/000\n011/000/000\n001/001/000\n011/001/000\n")
    stream_path = handle.name
out = run("classify", "--n", "3", "--stream", stream_path)
check(json.loads(out.stdout)["D"] == 4, "stream classification over the six digraphs")
run("classify", "--n", "4", "--stream", stream_path, expect_code=1)
os.unlink(stream_path)

out = run("invariants", "3:0")
data = json.loads(out.stdout)
check(data["odd_height"] == "inf" and data["betti"] == [1, 3, 3, 1], "invariants of the torus")

out = run("invariants", "3:5")
check(json.loads(out.stdout)["odd_height"] == 1, "odd height of the path")

out = run("betti", "3:5")
check(json.loads(out.stdout) == {"n": 3, "rank": 2, "betti": [1, 1, 0, 0]}, "betti of the path")

out = run("decompose", "010/000/010")
data = json.loads(out.stdout)
check(data["isolated"] == 1 and data["factors"] == ["2:1"], "decompose the two-root shape")

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as handle:
    handle.write("010\n001\n000\n")
    file_path = handle.name
out = run("check", "@" + file_path)
check(json.loads(out.stdout)["bott"] is True, "matrix loaded from @file")
os.unlink(file_path)

run("canon", "3:5", env_extra={"BOTT_ORBIT_BUDGET": "1"}, expect_code=2)
run("canon", "3:5", env_extra={"BOTT_ORBIT_BUDGET": "plenty"}, expect_code=1)
run(expect_code=3)  # a subcommand is required
run("frobnicate", expect_code=3)

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
