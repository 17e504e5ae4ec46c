#!/usr/bin/env python3
"""End-to-end checks of the setupprob CLI: exit codes, reports, JSON schema."""

import json
import math
import os
import subprocess
import sys
import tempfile

BIN, EXAMPLES, SCHEMA = sys.argv[1], sys.argv[2], sys.argv[3]
SB = os.path.join(EXAMPLES, "sb.scn")
NY = os.path.join(EXAMPLES, "ny.scn")
BALLS = os.path.join(EXAMPLES, "balls-box.scn")
UNIT = os.path.join(EXAMPLES, "unit.scn")

try:
    import jsonschema

    with open(SCHEMA) as f:
        VALIDATOR = jsonschema.Draft202012Validator(json.load(f))
except ImportError:  # pragma: no cover
    VALIDATOR = None

failures = []


def run(*args, env=None):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def json_of(*args):
    code, out, err = run(*args, "--format", "json")
    check(code == 0, f"{' '.join(args)} exits 0 ({err.strip()})")
    doc = json.loads(out)
    if VALIDATOR is not None:
        errors = list(VALIDATOR.iter_errors(doc))
        check(not errors, f"{args[0]} JSON validates against schema {[e.message for e in errors]}")
    return doc


def value(doc):
    return (doc["value"]["num"], doc["value"]["den"])


# exact
check(value(json_of("exact", SB, "--frame", "obs", "--query", "outcome==heads")) == (1, 3), "exact obs heads = 1/3")
check(value(json_of("exact", SB, "--frame", "trial", "--query", "outcome==heads")) == (1, 2), "exact trial heads = 1/2")
check(value(json_of("exact", NY, "--frame", "obs", "--query", "outcome==heads")) == (1, 366), "exact ny = 1/366")
check(value(json_of("exact", BALLS, "--frame", "obs", "--query", "tag==green")) == (1, 3), "green ball drawn = 1/3")
cond = json_of("exact", SB, "--frame", "obs", "--query", "outcome==heads", "--given", "tag==monday")
check(value(cond) == (1, 2) and cond["query"] == "outcome==heads | tag==monday", "exact --given = 1/2")

code, out, err = run("exact", SB, "--frame", "trial", "--query", "index==0")
check(code == 2 and out == "" and "IllegalTrialQuery" in err, "trial frame with index== exits 2, stdout empty")
code, _, _ = run("exact", SB, "--frame", "trial", "--query", "outcome==heads", "--given", "tag==monday")
check(code == 2, "--given with trial frame exits 2")
code, _, err = run("exact", SB, "--frame", "obs", "--query", "outcome==heads", "--given", "tag==friday")
check(code == 3 and "ConditionOnNull" in err, "conditioning on a null event exits 3")

code, out, _ = run("exact", SB, "--frame", "obs", "--query", "outcome==heads")
check(code == 0 and "1/3" in out and out.splitlines()[0].split() == ["scenario", "frame", "query", "value", "decimal"],
      "table output has header and value")

with tempfile.TemporaryDirectory() as tmp:
    silent = os.path.join(tmp, "silent.scn")
    with open(silent, "w") as f:
        f.write("scenario silent\noutcome a p=1/2 w=0\noutcome b p=1/2 w=0\n")
    code, out, err = run("exact", silent, "--frame", "obs", "--query", "true")
    check(code == 3 and "NoObservations" in err and out == "", "no observations exits 3")
    code, _, err = run("simulate", silent, "--frame", "obs", "--query", "true", "--n", "10", "--seed", "1")
    check(code == 3, "simulating an empty box exits 3")

    bad = os.path.join(tmp, "bad.scn")
    with open(bad, "w") as f:
        f.write("scenario x\noutcome a p=1/2 w=1\n")
    code, out, err = run("exact", bad, "--frame", "obs", "--query", "true")
    check(code == 1 and "ProbSumNotOne" in err and "2:" in err and out == "", "validation error exits 1 with line")

    dec = os.path.join(tmp, "dec.scn")
    with open(dec, "w") as f:
        f.write("scenario x\noutcome a p=0.5 w=1\noutcome b p=0.5 w=1\n")
    code, _, err = run("exact", dec, "--frame", "obs", "--query", "true")
    check(code == 1 and "SyntaxError" in err, "decimal probability is a syntax error")

code, _, _ = run("exact", os.path.join(EXAMPLES, "missing.scn"), "--frame", "obs", "--query", "true")
check(code == 1, "missing file exits 1")
code, _, err = run("exact", SB, "--frame", "obs", "--query", "outcome==")
check(code == 1 and "SyntaxError" in err, "bad query exits 1")
code, _, _ = run("exact", SB, "--query", "true")
check(code == 1, "missing --frame exits 1")
code, _, _ = run()
check(code == 1, "no subcommand exits 1")

# simulate
sim = json_of("simulate", SB, "--frame", "obs", "--query", "outcome==heads", "--n", "1000000", "--seed", "42")
check(sim["ci95"][0] <= 1 / 3 <= sim["ci95"][1], f"simulate obs: 1/3 inside ci95 {sim['ci95']}")
check(sim["trials"] == 1000000 and sim["seed"] == 42, "simulate echoes trials and seed")
sim_t = json_of("simulate", SB, "--frame", "trial", "--query", "outcome==heads", "--n", "1000000", "--seed", "42")
check(abs(sim_t["estimate"] - 0.5) <= 3 * sim_t["std_error"] and sim_t["total"] == 1000000, "simulate trial ~ 1/2")

args = ["simulate", SB, "--frame", "obs", "--query", "outcome==heads", "--n", "200000", "--seed", "42"]
a, b = run(*args), run(*args)
check(a == b and a[0] == 0, "same invocation twice is byte-identical")
outs = {run(*args, "--workers", str(w), "--format", "json")[1] for w in (1, 2, 8)}
check(len(outs) == 1, "simulate JSON identical across 1/2/8 workers")
code, _, err = run("simulate", SB, "--frame", "obs", "--query", "true")
check(code == 1 and "--seed" in err, "simulate without --seed exits 1")
code, _, _ = run("simulate", SB, "--frame", "trial", "--query", "tag==monday", "--seed", "1", "--n", "10")
check(code == 2, "simulate trial with tag== exits 2")

# bet
bet = json_of("bet", SB, "--query", "outcome==heads", "--price", "1/3", "--n", "1000000", "--seed", "7")
p = bet["wins"] / bet["questions"]
se = math.sqrt(p * (1 - p) / bet["questions"])
check(abs(bet["avg_profit_per_question"]) <= 3 * se, f"bet at 1/3 breaks even ({bet['avg_profit_per_question']})")
check((bet["price"]["num"], bet["price"]["den"]) == (1, 3), "bet echoes price")

code, out, _ = run("bet", SB, "--query", "outcome==heads")
check(code == 0 and "fair price: 1/3" in out.splitlines()[0], "bet without price shows fair price 1/3")
code, out, _ = run("bet", SB, "--query", "outcome==heads", "--n", "1000", "--seed", "3")
check(code == 0 and out.startswith("fair price: 1/3") and "avg_profit_per_question" in out,
      "bet with fair price and seed prints header and report")
free = json_of("bet", SB, "--query", "true", "--price", "0", "--n", "10", "--seed", "1")
check(free["avg_profit_per_question"] == 1, "free bet on everything pays 1 per question")
code, _, _ = run("bet", SB, "--query", "true", "--price", "0.5", "--n", "10", "--seed", "1")
check(code == 1, "decimal price rejected")
code, _, _ = run("bet", SB, "--query", "true", "--price", "3/2", "--n", "10", "--seed", "1")
check(code == 1, "price above 1 rejected")

# compare
rows = json_of("compare", SB, "--query", "outcome==heads")
check([(r["frame"], value(r)) for r in rows] == [("trial", (1, 2)), ("observation", (1, 3))], "compare sb: 1/2 vs 1/3")
rows = json_of("compare", NY, "--query", "outcome==heads")
check([value(r) for r in rows] == [(1, 2), (1, 366)], "compare ny: 1/2 vs 1/366")
rows = json_of("compare", UNIT, "--query", "outcome==heads")
check(value(rows[0]) == value(rows[1]), "compare at unit weights: rows equal")
code, out, _ = run("compare", SB, "--query", "outcome==heads")
lines = out.splitlines()
check(len(lines) == 3 and lines[1].split()[1] == "trial" and lines[2].split()[1] == "observation", "compare table rows")
code, _, _ = run("compare", SB, "--query", "tag==monday")
check(code == 2, "compare with token query exits 2")

env = dict(os.environ, NO_COLOR="1")
check(run("compare", SB, "--query", "outcome==heads", env=env)[1] == out, "NO_COLOR leaves piped output unchanged")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
