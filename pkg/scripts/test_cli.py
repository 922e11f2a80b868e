#!/usr/bin/env python3

import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout

# Add project root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from delcat.main import main as delcat_main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = delcat_main(list(argv))
    return code, out.getvalue().strip(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--format", "json", *argv)
    return code, json.loads(out)


def test_dim():
    print("🧪 Testing dim...")

    code, payload = run_json("dim", "gl", "--lam", "1", "--mu", "1")
    assert code == 0
    assert payload["poly"] == {"power": [-1, 0, 1], "binomial": [-1, 1, 2]}
    assert payload["query"] == {"command": "dim", "family": "gl", "lam": "1", "mu": "1"}
    print("✅ JSON carries power and binomial coefficients")

    assert run("dim", "gl", "--lam", "1", "--mu", "1", "--at", "7/1")[:2] == (0, "48")
    assert run("dim", "o", "--lam", "2")[1] == "1/2*t^2 + 1/2*t - 1"
    assert run("dim", "gl", "--lam", "-", "--mu", "-")[1] == "1"
    print("✅ Text output and evaluation")

    code, out, _ = run("dim", "gl", "--lam", "1", "--mu", "1", "--format", "json")
    assert json.loads(out)["poly"]["power"] == [-1, 0, 1]
    print("✅ --format accepted after the subcommand")
    print()


def test_diagrams():
    print("🧪 Testing hom and brauer...")

    code, out, _ = run("hom", "gram", "--obj", "1,1")
    assert code == 0
    assert out.splitlines() == ["basis size: 2", "det: t^4 - t^2", "roots: -1, 0, 1"]
    print("✅ Gram determinant of End([1,1])")

    code, out, _ = run("brauer", "compose", "--src", "2", "--mid", "2", "--dst", "2",
                       "--f", "1-2,3-4", "--g", "1-2,3-4")
    assert out == "t*[1-2,3-4]"
    code, payload = run_json("hom", "basis", "--src", "1,1", "--dst", "1,1")
    assert payload["dim"] == 2 and payload["diagrams"] == ["1-2,3-4", "1-3,2-4"]
    assert run("brauer", "trace", "--obj", "2", "--diagram", "1-4,2-3")[1] == "t"
    code, out, _ = run("hom", "tensor", "--src1", "1,0", "--dst1", "1,0", "--d1", "1-2",
                       "--src2", "0,1", "--dst2", "0,1", "--d2", "1-2")
    assert out == "[1-3,2-4]"
    print("✅ compose, basis, trace, tensor")

    code, _, err = run("hom", "compose", "--src", "1,0", "--mid", "0,1", "--dst", "0,1",
                       "--f", "1-2", "--g", "1-2")
    assert code == 2 and "error" in err
    print("✅ Invalid diagram is a usage error")
    print()


def test_symmetric_functions():
    print("🧪 Testing kron and spec...")

    assert run("kron", "--lam", "2,1", "--mu", "2,1")[1] == "s[3] + s[2,1] + s[1,1,1]"
    assert run("spec", "--lam", "1", "--trunc", "3")[1] == "q + q^2 + q^3 + O(q^4)"
    _, long = run_json("spec", "--lam", "2,1", "--trunc", "9")
    _, short = run_json("spec", "--lam", "2,1", "--trunc", "5")
    assert long["series"]["coeffs"][:6] == short["series"]["coeffs"]
    assert run("--trunc", "4", "spec", "--lam", "1", "--jacobi-trudi")[1] == "q + q^2 + q^3 + q^4 + O(q^5)"
    print("✅ Kronecker product, specialization and the --trunc prefix")
    print()


def test_center():
    print("🧪 Testing center...")

    code, out, _ = run("center", "bernoulli", "--i", "2")
    assert out == "P_2(t) = 1/12*t^3 - 1/12*t"
    code, payload = run_json("center", "chi", "--lam=1/2", "--mu", "-", "--imax", "1")
    assert payload["values"] == [{"power": ["1/2"], "binomial": None}]
    assert payload["query"]["lam"] == ["1/2"]
    code, payload = run_json("center", "bernoulli", "--i", "0", "--printed-egf-at", "2")
    assert payload["printed_egf_value"] == "3/2" and payload["poly"]["power"] == [0, 1]
    code, payload = run_json("center", "probe", "--lam", "1", "--mu", "1", "--bound", "2")
    assert {"lam": "1", "mu": "1"} in payload["witnesses"]
    print("✅ chi, bernoulli, probe")
    print()


def test_series():
    print("🧪 Testing series...")

    code, out, _ = run("series", "harmonic", "--lam", "1", "--mu", "1", "--trunc", "3")
    assert out == "q + q^2 + q^3 + O(q^4)"
    code, payload = run_json("series", "multiinv", "--m", "1", "--variant", "osp", "--trunc", "6")
    assert payload["generators"] == [0, 1, 0, 1, 0, 1]
    assert run("series", "kostant-check", "--trunc", "4")[0] == 0
    code, payload = run_json("series", "kostant-check", "--trunc", "4", "--printed-rhs")
    assert code == 1
    assert payload["first_mismatch"] == 2 and not payload["holds"]
    assert payload["rhs"] == {"poly": {"power": [-1, 0, -1, 0, 1], "binomial": [-1, 0, 12, 36, 24]}}
    code, payload = run_json("series", "kostant-check", "--trunc", "4", "--paper-rhs")
    assert code == 1 and payload["first_mismatch"] == 2
    print("✅ multiinv, harmonic, kostant-check with and without the printed rhs")
    print()


def test_affine():
    print("🧪 Testing affine...")

    code, out, _ = run("affine", "sugawara", "--family", "sl", "--k", "1")
    assert out.splitlines() == ["critical level: -t", "central charge: t - 1"]
    code, payload = run_json("affine", "sugawara", "--family", "o", "--k", "1", "--at", "6")
    assert payload["value"] == 3
    _, payload = run_json("affine", "cinf", "--lam", "-", "--mu", "-", "--trunc", "6")
    assert payload["series"]["coeffs"] == [[1], [], [1], [2], [4], [6], [12]]
    assert run("affine", "stab", "--lam", "1", "--mu", "1", "--trunc", "4")[0] == 0
    assert run("affine", "cn", "--weight", "0,0", "--trunc", "3")[1] == "1 + q^2 + q^3 + O(q^4)"
    assert run("affine", "sugawara", "--family", "gl", "--k", "1")[0] == 2
    print("✅ sugawara, cinf, stab, cn")
    print()


def test_verify_and_errors():
    print("🧪 Testing verify and exit codes...")

    code, out, _ = run("verify", "sugawara")
    assert code == 0 and "all suites passed" in out
    code, payload = run_json("verify", "sugawara", "center")
    assert payload["passed"] and [s["suite"] for s in payload["suites"]] == ["sugawara", "center"]
    assert "seconds" not in json.dumps(payload)
    print("✅ verify table and deterministic JSON")

    assert run("verify", "nope")[0] == 2
    assert run("dim", "gl", "--lam", "1,2")[0] == 2
    assert run("nope")[0] == 2
    assert run("--trunc", "-1", "spec", "--lam", "1")[0] == 2
    assert run("center", "bernoulli", "--i", "-1")[0] == 2
    assert run("center", "chi", "--lam", "1", "--imax", "-2")[0] == 2
    assert run("center", "probe", "--bound", "-1")[0] == 2
    assert run("series", "multiinv", "--m", "-1")[0] == 2
    assert run("series", "multiinv", "--m", "0")[0] == 2
    assert run("affine", "stab", "--lam", "1", "--mu", "1", "--cap", "-3")[0] == 2
    assert run("kron", "--lam", "2", "--mu", "1")[0] == 2
    assert run("series", "harmonic", "--lam", "2", "--mu", "1")[0] == 2
    assert run("affine", "cinf", "--lam", "2", "--mu", "1")[0] == 2
    print("✅ Usage errors exit with 2")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "m.prom")
        assert run("--metrics-file", path, "spec", "--lam", "1")[0] == 0
        with open(path) as f:
            assert "delcat_series_multiplications_total" in f.read()
    print("✅ Metrics file written")
    print()


def main():
    print("🚀 Testing command line")
    print("=" * 50)

    test_dim()
    test_diagrams()
    test_symmetric_functions()
    test_center()
    test_series()
    test_affine()
    test_verify_and_errors()

    print("✨ All CLI tests completed!")


if __name__ == "__main__":
    main()
