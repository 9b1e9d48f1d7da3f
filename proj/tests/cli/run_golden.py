#!/usr/bin/env python3
"""Golden tests for the qpxval CLI: stable plain output, JSON round trips,
and the documented exit codes."""

import json
import subprocess
import sys
import tempfile
import os

CLI = sys.argv[1]

EX13 = '{"p": 3, "levels": [{"poly": "X", "value": "0"}, {"poly": "X^2+1", "value": "1/2"}]}'
GAUSS3 = '{"p": 3, "levels": [{"poly": "X", "value": "0"}]}'
RAM3 = '{"p": 3, "levels": [{"poly": "X", "value": "1/2"}, {"poly": "X^2-3", "value": "3/2"}]}'

# (args, expected stdout, expected exit code); {ex13} etc. are replaced by a
# real file path at run time
CASES = [
    (["eval", "--chain", "{ex13}", "--poly", "X^2+1"], "1/2\n", 0),
    (["eval", "--chain", "{ex13}", "--poly", "X^2+2"], "0\n", 0),
    (["eval", "--chain", "{ex13}", "--poly", "0"], "inf\n", 0),
    (["epsilon", "--chain", "{ram3}", "--poly", "X^2-3"], "1\n", 0),
    (["delta", "--chain", "{ex13}", "--poly", "X^2+1"], "1/2\n", 0),
    (["expand", "--poly", "X^3+2*X+1", "--q", "X^2+1"], "f_0: X+1\nf_1: X\n", 0),
    (["truncate", "--chain", "{ex13}", "--q", "X", "--poly", "X^2+2"], "0\n", 0),
    (["truncate", "--chain", "{ex13}", "--q", "X", "--poly", "X^2+1"], "0\n", 0),
    (["support", "--chain", "{ex13}", "--q", "X", "--poly", "X^2+1"],
     "S = {0, 2}, delta_Q = 2\n", 0),
    (["frame", "--chain", "{ex13}", "--q", "X^2+1"],
     "n = 2\ngamma = 1/2\ne = 2\nh = 3\nresidue_field = F_3[t]/(t^2+1)\n", 0),
    (["frame", "--chain", "{ram3}", "--q", "X^2-3"],
     "n = 2\ngamma = 3/2\ne = 1\nh = 3*X\nresidue_field = F_3\n", 0),
    (["lift", "--chain", "{ram3}", "--q", "X", "--g", "Y+1"], "X^2+3\n", 0),
    (["lift", "--chain", "{gauss3}", "--q", "X", "--g", "Y^2+2"], "X^2+2\n", 0),
    (["residual", "--chain", "{gauss3}", "--q", "X", "--poly", "X^2+2"], "Y^2+2\n", 0),
    (["residual", "--chain", "{ram3}", "--q", "X", "--poly", "X^2-3"], "Y+2\n", 0),
    (["psi", "--chain", "{ex13}", "--q", "X", "--poly", "X^2+1"],
     "member: true\nw_Q(F) = 0\nw(F) = 1/2\n", 0),
    (["psi", "--chain", "{ex13}", "--q", "X", "--poly", "X^2+2"],
     "member: false\nw_Q(F) = 0\nw(F) = 0\n", 0),
    (["alpha", "--chain", "{ex13}", "--q", "X"], "2\n", 0),
    (["alpha", "--chain", "{ex13}", "--q", "X^2+1"], "inf\n", 0),
    (["distinguished", "--chain", "{ram3}", "--f", "X^2-3", "--q", "X"], "true\n", 0),
    (["distinguished", "--chain", "{ex13}", "--f", "X^2+2", "--q", "X"], "false\n", 0),
    (["chain", "--chain", "{ram3}"],
     "Q_0 = X, value 1/2, epsilon 1/2\nQ_1 = X^2-3, value 3/2, epsilon 1\n"
     "(X^2-3, X): distinguished\n", 0),
    (["abkp-falsify", "--chain", "{ex13}", "--q", "X^2+1"], "NotDisproved\n", 0),
    (["np", "--poly", "X^2-3", "--p", "3"], "{1/2 x 2}\n", 0),
    (["np", "--poly", "X^2-9*X", "--p", "3"], "{2 x 1}, zero-roots 1\n", 0),
    (["rootdiff", "--f", "X^2+1", "--g", "X", "--p", "3"], "{0 x 2}\n", 0),
    (["enum", "--degree", "1", "--height", "1", "--p", "3", "--ppow", "0"],
     "X-1\nX\nX+1\n", 0),
    # error paths: domain errors exit 1, parse errors exit 2
    (["rootdiff", "--f", "X^2-3", "--g", "X^2-3", "--p", "3"], "", 1),
    (["eval", "--chain", "{ex13}", "--poly", "X^^"], "", 2),
    (["alpha", "--chain", "{ex13}", "--q", "X+1"], "", 1),
    (["lift", "--chain", "{gauss3}", "--q", "X", "--g", "Y"], "", 1),
    (["nonsense"], "", 2),
]


def main():
    with tempfile.TemporaryDirectory() as tmp:
        paths = {}
        for name, text in [("ex13", EX13), ("gauss3", GAUSS3), ("ram3", RAM3)]:
            path = os.path.join(tmp, name + ".json")
            with open(path, "w") as fh:
                fh.write(text)
            paths["{" + name + "}"] = path

        failures = 0
        for args, want_out, want_code in CASES:
            argv = [CLI] + [paths.get(a, a) for a in args]
            res = subprocess.run(argv, capture_output=True, text=True)
            if res.returncode != want_code or (want_out and res.stdout != want_out):
                failures += 1
                print(f"FAIL: {' '.join(args)}")
                print(f"  exit {res.returncode} (want {want_code})")
                print(f"  stdout: {res.stdout!r} (want {want_out!r})")
                if res.stderr:
                    print(f"  stderr: {res.stderr.strip()}")

        # JSON mode round trips: augment output is a loadable chain spec
        res = subprocess.run(
            [CLI, "augment", "--inline", GAUSS3, "--q", "X^2+1", "--value", "1/2"],
            capture_output=True, text=True)
        spec = json.loads(res.stdout)
        res2 = subprocess.run(
            [CLI, "eval", "--inline", json.dumps(spec), "--poly", "X^2+1"],
            capture_output=True, text=True)
        if res2.stdout != "1/2\n":
            failures += 1
            print(f"FAIL: augment round trip, got {res2.stdout!r}")

        # printed polynomials re-parse to identical objects
        res = subprocess.run(
            [CLI, "lift", "--chain", paths["{ex13}"], "--q", "X^2+1", "--g", "Y+1"],
            capture_output=True, text=True)
        lifted = res.stdout.strip()
        res2 = subprocess.run(
            [CLI, "residual", "--chain", paths["{ex13}"], "--q", "X^2+1", "--poly", lifted],
            capture_output=True, text=True)
        if res2.stdout.strip() != "Y+1":
            failures += 1
            print(f"FAIL: lift/residual round trip, got {res2.stdout!r}")

        # JSON outputs parse and carry the documented keys
        res = subprocess.run(
            [CLI, "frame", "--chain", paths["{ex13}"], "--q", "X^2+1", "--json"],
            capture_output=True, text=True)
        frame = json.loads(res.stdout)
        if not (frame["n"] == 2 and frame["gamma"] == "1/2" and frame["e"] == 2
                and frame["h"] == "3" and frame["residue_field"]["p"] == 3
                and frame["residue_field"]["modulus"] == "t^2+1"):
            failures += 1
            print(f"FAIL: frame JSON schema, got {frame}")

        res = subprocess.run([CLI, "chain", "--chain", paths["{ram3}"], "--json"],
                             capture_output=True, text=True)
        cert = json.loads(res.stdout)
        if not (cert["chain"][0]["poly"] == "X" and cert["links"][0]["distinguished"] is True
                and cert["links"][0]["F"] == "X^2-3" and cert["chain"][1]["epsilon"] == "1"):
            failures += 1
            print(f"FAIL: certificate JSON schema, got {cert}")

        res = subprocess.run(
            [CLI, "axioms", "--inline", RAM3, "--pairs", "50", "--seed", "3", "--json"],
            capture_output=True, text=True)
        rep = json.loads(res.stdout)
        if rep["pairs_checked"] != 50 or rep["violations"] != []:
            failures += 1
            print(f"FAIL: axioms JSON, got {rep}")

        if failures:
            print(f"{failures} golden case(s) failed")
            return 1
        print(f"all {len(CASES) + 5} golden cases passed")
        return 0


if __name__ == "__main__":
    sys.exit(main())
