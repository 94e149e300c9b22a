import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import pytest

from pathroots.cli import EXIT_ASSERT, EXIT_COMPUTE, EXIT_OK, EXIT_USAGE, run
from pathroots.fit import fit_ellipse


def invoke(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


class TestPoly:
    def test_path_n2(self):
        code, out = invoke(["poly", "--n", "2", "--graph", "path"])
        assert code == EXIT_OK
        assert out.splitlines() == ["-1 0 1", "λ^2 - 1"]

    def test_path_n1(self):
        code, out = invoke(["poly", "--n", "1"])
        assert code == EXIT_OK
        assert out.splitlines() == ["0 -1", "-λ"]

    def test_cycle_n3(self):
        code, out = invoke(["poly", "--n", "3", "--graph", "cycle"])
        assert code == EXIT_OK
        assert out.splitlines() == ["2 3 0 -1", "-λ^3 + 3λ + 2"]

    def test_invalid_order_is_usage_error(self):
        code, _ = invoke(["poly", "--n", "2", "--graph", "cycle"])
        assert code == EXIT_USAGE


class TestRoots:
    def test_linear_csv(self):
        code, out = invoke(["roots", "--n", "1", "--c", "1"])
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1
        assert float(rows[0]["re"]) == pytest.approx(-1.0, abs=1e-12)
        assert float(rows[0]["im"]) == pytest.approx(0.0, abs=1e-12)

    def test_header_and_sorting(self):
        code, out = invoke(["roots", "--n", "4", "--c", "fib"])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "n,c,re,im,residual"
        rows = list(csv.DictReader(io.StringIO(out)))
        keys = [(float(r["re"]), float(r["im"])) for r in rows]
        assert keys == sorted(keys)
        # ±i are exact roots of f_4(λ) = F_5
        ims = sorted(float(r["im"]) for r in rows)
        assert ims[0] == pytest.approx(-1.0, abs=1e-12)
        assert ims[-1] == pytest.approx(1.0, abs=1e-12)

    def test_zero_shift(self):
        code, out = invoke(["roots", "--n", "2", "--c", "0"])
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [float(r["re"]) for r in rows] == pytest.approx([-1.0, 1.0], abs=1e-12)

    def test_json_envelope(self):
        code, out = invoke(["roots", "--n", "3", "--out", "json"])
        doc = json.loads(out)
        assert set(doc) == {"meta", "results"}
        assert len(doc["results"]) == 3

    def test_deterministic_output(self):
        a = invoke(["roots", "--n", "13", "--c", "fib"])
        b = invoke(["roots", "--n", "13", "--c", "fib"])
        assert a == b

    def test_computation_error_exit(self):
        code, _ = invoke(
            ["roots", "--n", "200", "--c", "fib", "--max-bits", "128"]
        )
        assert code == EXIT_COMPUTE

    def test_csv_round_trip_refit(self):
        _, out = invoke(["roots", "--n", "13", "--c", "fib"])
        rows = list(csv.DictReader(io.StringIO(out)))
        pts = [(float(r["re"]), float(r["im"])) for r in rows]
        refit = fit_ellipse(pts)
        _, fit_out = invoke(["fit", "--n", "13", "--c", "fib"])
        reported = json.loads(fit_out)["results"][0]
        assert refit.a_tilde == pytest.approx(reported["a_tilde"], abs=1e-12)
        assert refit.b_tilde == pytest.approx(reported["b_tilde"], abs=1e-12)


class TestFit:
    def test_fib_shift_near_reference(self):
        code, out = invoke(["fit", "--n", "13", "--c", "fib"])
        assert code == EXIT_OK
        result = json.loads(out)["results"][0]
        assert abs(result["a_tilde"] - math.sqrt(5)) < 0.2
        assert abs(result["b_tilde"] - 1.0) < 0.2

    def test_eccentricity_depends_on_constant(self):
        # a small constant squashes the cloud toward the real axis
        # (semi-minor axis shrinks), so eccentricity falls as c grows
        _, small = invoke(["fit", "--n", "13", "--c", "3"])
        _, large = invoke(["fit", "--n", "13", "--c", "1000"])
        e_small = json.loads(small)["results"][0]["eccentricity"]
        e_large = json.loads(large)["results"][0]["eccentricity"]
        assert e_small != pytest.approx(e_large, abs=1e-3)
        assert e_small > e_large

    def test_degenerate_geometry_exit(self):
        code, _ = invoke(["fit", "--n", "2", "--c", "fib"])
        assert code == EXIT_ASSERT

    def test_svg_structure(self, tmp_path):
        svg_path = tmp_path / "cloud.svg"
        code, _ = invoke(["fit", "--n", "12", "--c", "fib", "--svg", str(svg_path)])
        assert code == EXIT_OK
        root = ET.fromstring(svg_path.read_text())
        ns = "{http://www.w3.org/2000/svg}"
        assert len(root.findall(f"{ns}circle")) == 12
        assert len(root.findall(f"{ns}ellipse")) == 2


class TestVerify:
    def test_lemma_suite(self):
        code, out = invoke(["verify", "--suite", "lemma", "--n-max", "100"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert len(doc["results"]) == 100
        assert all(r["passed"] for r in doc["results"])

    def test_containment_suite(self):
        code, out = invoke(["verify", "--suite", "containment", "--n-max", "40"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [r["subject"]["n"] for r in doc["results"]] == list(range(4, 41, 4))

    def test_realcount_suite(self):
        code, out = invoke(["verify", "--suite", "realcount", "--n-max", "20"])
        assert code == EXIT_OK
        assert len(json.loads(out)["results"]) == 20

    def test_unknown_suite_is_usage_error(self):
        code, _ = invoke(["verify", "--suite", "nonsense", "--n-max", "5"])
        assert code == EXIT_USAGE


class TestSweep:
    def test_artifacts_and_round_trip(self, tmp_path):
        code, _ = invoke(
            ["sweep", "--n-min", "3", "--n-max", "13", "--step", "1",
             "--out-dir", str(tmp_path)]
        )
        assert code == EXIT_OK
        csv_text = (tmp_path / "sweep.csv").read_text()
        rows = list(csv.DictReader(io.StringIO(csv_text)))
        assert len(rows) == 11
        assert list(rows[0]) == [
            "n", "a_tilde", "b_tilde", "rmse", "eccentricity",
            "boundary_residual", "max_re", "max_im",
        ]
        # small degrees fit 2 parameters to a handful of symmetric points
        # almost exactly, so compare like-for-like odd degrees
        by_n = {int(r["n"]): r for r in rows}
        assert float(by_n[13]["rmse"]) < float(by_n[5]["rmse"])
        doc = json.loads((tmp_path / "sweep.json").read_text())
        assert len(doc["results"]) == 11
        assert (tmp_path / "rmse_vs_degree.png").exists()
        assert (tmp_path / "axes_vs_degree.png").exists()

    def test_single_row_imag_bound(self, tmp_path):
        invoke(["sweep", "--n-min", "4", "--n-max", "4", "--step", "1",
                "--out-dir", str(tmp_path), "--no-figures"])
        rows = list(csv.DictReader((tmp_path / "sweep.csv").open()))
        assert len(rows) == 1
        assert float(rows[0]["max_im"]) <= 1 + 1e-9

    def test_deterministic_files(self, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        for d in (d1, d2):
            invoke(["sweep", "--n-min", "5", "--n-max", "9", "--step", "2",
                    "--out-dir", str(d), "--no-figures"])
        assert (d1 / "sweep.csv").read_bytes() == (d2 / "sweep.csv").read_bytes()
        assert (d1 / "sweep.json").read_bytes() == (d2 / "sweep.json").read_bytes()

    def test_degenerate_rows_marked_and_sweep_continues(self, tmp_path):
        code, _ = invoke(["sweep", "--n-min", "1", "--n-max", "3", "--step", "1",
                          "--out-dir", str(tmp_path), "--no-figures"])
        assert code == EXIT_OK
        csv_text = (tmp_path / "sweep.csv").read_text()
        assert "ERROR:DegenerateGeometry" in csv_text
        rows = list(csv.DictReader(io.StringIO(csv_text)))
        assert len(rows) == 3

    def test_bad_range_is_usage_error(self, tmp_path):
        code, _ = invoke(["sweep", "--n-min", "5", "--n-max", "3",
                          "--out-dir", str(tmp_path)])
        assert code == EXIT_USAGE


class TestEnvPrecision:
    def test_env_sets_default(self, monkeypatch):
        monkeypatch.setenv("PATHSPEC_PRECISION", "53")
        code, _ = invoke(["roots", "--n", "5", "--c", "fib"])
        assert code == EXIT_OK

    def test_flag_overrides_env(self, monkeypatch):
        monkeypatch.setenv("PATHSPEC_PRECISION", "not-a-number")
        code, _ = invoke(["roots", "--n", "5", "--c", "fib", "--precision", "64"])
        assert code == EXIT_OK
        code, _ = invoke(["roots", "--n", "5", "--c", "fib"])
        assert code == EXIT_USAGE

    def test_low_precision_rejected(self):
        code, _ = invoke(["roots", "--n", "5", "--precision", "16"])
        assert code == EXIT_USAGE
