"""Smoke tests for the python bindings and the CLI exit codes."""

import json
import os
import subprocess
import sys

import pretzelknots as pk


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def test_bindings():
    check(pk.is_knot(3, 5, 7), "P(3,5,7) is a knot")
    check(not pk.is_knot(2, 4, 5), "P(2,4,5) is a link")

    check(pk.canonical(-4, 3, -5) == ((4, -3, 5), True), "canonical form of P(-4,3,-5)")
    check(pk.determinant(4, -3, 5) == 7, "determinant")
    check(pk.signature(4, -3, 5) == -2, "signature")
    check(pk.signature_oracle(4, -3, 5) == -2, "oracle")
    check(pk.s_invariant(4, -3, 5) == 0, "s")
    check(pk.g4_lower_bound(4, -3, 5) == 1, "g4 bound")

    qm = pk.qm(4, -3, 5)
    check(qm["kind"] == "exact" and qm["value"] == 1, "q_M exact 1")

    sq = pk.squeeze(4, -3, 5)
    check(sq["status"] == "not_squeezed" and sq["witness"] == [1, 0], "squeeze verdict")

    prof = pk.tau_profile(4, -3, 5)
    check(prof["L"] == 60 and prof["nondecreasing"], "tau profile")
    check(pk.tau_sequence(4, -3, 5, 5) == [0, 1, 1, 1, 1, 1], "tau prefix")

    check(pk.negative_continued_fraction(-7, 2) == [-4, -2], "continued fraction")

    rep = pk.report(4, -3, 5)
    check(rep["det"] == 7 and rep["signature"] == -2, "report values")
    check(rep["qm"]["value"] == 1, "report q_M")

    rep = pk.report(0, -3, -5)
    check(rep["flags"]["p0_discrepancy"], "p0 discrepancy flag")
    check(rep["flags"]["p0_printed"] == 5, "p0 printed value")
    check(rep["flags"]["p0_consistent"] == -3, "p0 consistent value")

    # Library errors surface as python exceptions.
    try:
        pk.signature(2, 4, 5)
        raise AssertionError("expected an error for a link")
    except ValueError:
        pass

    # Agreement of the two signature routes on a small grid.
    for p in range(-4, 5):
        for q in range(-4, 5):
            for r in range(-4, 5):
                if pk.is_knot(p, q, r):
                    check(pk.signature(p, q, r) == pk.signature_oracle(p, q, r),
                          f"signature routes at ({p},{q},{r})")


def test_cli():
    cli = os.environ.get("PRETZEL_CLI")
    if not cli:
        print("PRETZEL_CLI not set; skipping CLI checks")
        return

    out = subprocess.run([cli, "report", "4", "-3", "5", "--format", "json"],
                         capture_output=True, text=True)
    check(out.returncode == 0, "report exit code")
    rep = json.loads(out.stdout)
    check(rep["signature"] == -2 and rep["det"] == 7, "CLI report values")

    check(subprocess.run([cli, "report", "2", "4", "5"], capture_output=True).returncode == 2,
          "not-a-knot exit code 2")
    check(subprocess.run([cli, "report", "2000000", "3", "5"],
                         capture_output=True).returncode == 3,
          "magnitude cap exit code 3")
    check(subprocess.run([cli, "tau", "3", "5", "7"], capture_output=True).returncode == 4,
          "outside plumbing region exit code 4")

    out = subprocess.run([cli, "cf", "-5", "4"], capture_output=True, text=True)
    check(out.returncode == 0 and out.stdout.split() == ["-2", "-2", "-2", "-2"], "cf output")

    out = subprocess.run([cli, "scan", "--p-min", "4", "--p-max", "4", "--q-min", "-3",
                          "--q-max", "-3", "--r-min", "5", "--r-max", "5"],
                         capture_output=True, text=True)
    check(out.returncode == 0 and "4,-3,5" in out.stdout, "scan CSV row")

    out = subprocess.run([cli, "scan", "--p-min", "4", "--p-max", "4", "--q-min", "-3",
                          "--q-max", "-3", "--r-min", "5", "--r-max", "5", "--format", "json"],
                         capture_output=True, text=True)
    rows = json.loads(out.stdout)
    check(len(rows) == 1 and rows[0]["det"] == 7, "scan JSON row")
    check(rows[0] == pk.report(4, -3, 5), "scan JSON equals the bindings report")

    # Empty scan: header only, exit 0.
    out = subprocess.run([cli, "scan", "--p-min", "1", "--p-max", "0", "--q-min", "0",
                          "--q-max", "0", "--r-min", "0", "--r-max", "0"],
                         capture_output=True, text=True)
    check(out.returncode == 0, "empty scan exit code")
    check(len(out.stdout.strip().splitlines()) == 1, "empty scan is header-only")


if __name__ == "__main__":
    test_bindings()
    test_cli()
    print("python smoke tests passed")
    sys.exit(0)
