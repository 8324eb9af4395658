#!/usr/bin/env python3
"""Exit-code and determinism contract for the msuper CLI."""

import json
import os
import subprocess
import sys
import tempfile

MSUPER = sys.argv[1]


def run(*args, env=None):
    return subprocess.run([MSUPER, *args], capture_output=True, text=True, env=env)


def main():
    # tau of the special type-0 label at alpha = 0 equals the build output's
    # theta part; both invocations must be byte-identical.
    build = ["build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,0,0"]
    first = run(*build)
    second = run(*build)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout, "build output is not deterministic"
    doc = json.loads(first.stdout)
    assert doc["N"] == 4 and doc["terms"], doc

    tau = run("tau", "--N", "4", "--type", "0", "--label", "3,4")
    assert tau.returncode == 0, tau.stderr
    tau_doc = json.loads(tau.stdout)
    assert [t["theta"] for t in tau_doc["terms"]] == [t["theta"] for t in doc["terms"]]

    latex = run(*build, "--format", "latex")
    assert latex.returncode == 0 and "\\theta_{" in latex.stdout

    # Malformed alpha: invalid-argument exit code.
    bad = run("build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,0")
    assert bad.returncode == 2, (bad.returncode, bad.stderr)
    bad2 = run("build", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,x,0")
    assert bad2.returncode == 2, (bad2.returncode, bad2.stderr)

    # eval prints the closed value and a MATCH verdict.
    ev = run("eval", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "1,0,0,0",
             "--point", "x0")
    assert ev.returncode == 0, ev.stderr
    assert "V(alpha) =" in ev.stdout and "MATCH" in ev.stdout, ev.stdout
    ev0 = run("eval", "--N", "4", "--type", "0", "--m", "1", "--alpha", "0,0,0,0",
              "--point", "x0")
    assert ev0.returncode == 0 and "V(alpha) = 1" in ev0.stdout, ev0.stdout
    # Composition case through the recursion.
    evc = run("eval", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,1,0,0",
              "--point", "x0")
    assert evc.returncode == 0 and "MATCH" in evc.stdout, evc.stdout
    # Class mismatch is an argument error.
    evbad = run("eval", "--N", "4", "--type", "0", "--label", "3,4", "--alpha", "0,0,1,0",
                "--point", "x0")
    assert evbad.returncode == 2, (evbad.returncode, evbad.stdout, evbad.stderr)

    # verify: a tiny suite passes with exit 0 and prints a PASS line.
    vr = run("verify", "--suite", "hooks", "--N-max", "4", "--deg-max", "2", "--seed", "5")
    assert vr.returncode == 0 and vr.stdout.startswith("PASS suite hooks"), vr.stdout
    unknown = run("verify", "--suite", "nonsense")
    assert unknown.returncode == 2, unknown.returncode

    # singular probe: confirmed fixture and the swapped non-example.
    sg = run("singular", "--N", "6", "--type", "1", "--label", "1,2,3",
             "--alpha", "2,1,0,0,0,0", "--e", "2")
    assert sg.returncode == 0, sg.stderr
    assert "specialized t-exponents: 1 0 -1 2 1 0" in sg.stdout, sg.stdout
    assert "singular confirmed" in sg.stdout, sg.stdout
    sg2 = run("singular", "--N", "6", "--type", "1", "--label", "1,2,3",
              "--alpha", "1,2,0,0,0,0", "--e", "2")
    assert sg2.returncode == 0 and "content-vector condition: no" in sg2.stdout, sg2.stdout

    # MSUPER_CACHE_DIR: second run reads the serialized build back.
    with tempfile.TemporaryDirectory() as tmp:
        env = dict(os.environ, MSUPER_CACHE_DIR=tmp)
        a = run(*build, env=env)
        assert a.returncode == 0 and os.listdir(tmp), "cache dir not populated"
        b = run(*build, env=env)
        assert b.stdout == a.stdout, "cached build output differs"

    print("cli contract: all checks passed")


if __name__ == "__main__":
    main()
