import json
import math
import os
import subprocess

import pytest

import bosescatter as bsc


def test_version():
    assert bsc.__version__ == "0.1.0"


def test_special_functions():
    assert bsc.zeta_three_halves() == pytest.approx(2.612375348685488, rel=1e-12)
    assert bsc.polylog_g32(0.5) == pytest.approx(0.62483702, rel=1e-7)
    assert bsc.occupation(2.0, 1.0, 1.0) == pytest.approx(1.0 / math.expm1(1.0), rel=1e-12)


def test_thermo():
    assert bsc.critical_density("paper_constant") == pytest.approx(20.5719, rel=1e-4)
    assert bsc.critical_density("integral") == pytest.approx(2 * 20.5719464, rel=1e-6)
    assert bsc.condensate_fraction(0.5) == pytest.approx(1 - 0.5**1.5, rel=1e-12)
    assert bsc.fugacity(0.7) == 1.0
    lam = bsc.fugacity(2.0)
    assert bsc.polylog_g32(lam) == pytest.approx(
        bsc.zeta_three_halves() * 2.0**-1.5, rel=1e-9
    )


def test_rate_and_sum_rule():
    r = bsc.total_rate(0.5, 1.2)
    assert r.unstimulated == 1.0
    assert r.total == pytest.approx(3.1598203, rel=1e-5)
    assert r.total == pytest.approx(1.0 + r.thermal_thermal + r.condensate, rel=1e-12)
    assert r.condensate == 0.0

    below = bsc.total_rate(0.1, 0.85)
    assert below.condensate > 0
    assert below.total == pytest.approx(94.897, rel=1e-3)

    cfg = bsc.QuadratureConfig(rel_tol=1e-7)
    assert bsc.sum_rule(1.5, cfg) == pytest.approx(bsc.critical_density(), rel=1e-3)


def test_convergence_error_maps_to_python():
    starved = bsc.QuadratureConfig(rel_tol=1e-12, max_subdivisions=10)
    with pytest.raises(bsc.ConvergenceError):
        bsc.total_rate(0.1, 0.85, starved)


def test_sweep_rows():
    rows = bsc.sweep_tau(0.5, [0.8, 1.0, 1.5])
    assert [row["tau"] for row in rows] == [0.8, 1.0, 1.5]
    assert all(row["ok"] for row in rows)
    assert rows[0]["rate"].total > rows[2]["rate"].total


def test_oracles_agree():
    quad, quad_err = bsc.term2b_quadrature_3d(0.5, 1.2)
    direct = bsc.total_rate(0.5, 1.2)
    assert quad == pytest.approx(direct.thermal_thermal, rel=5e-3)

    est, se = bsc.term2b_monte_carlo(0.5, 1.2, samples=200000, seed=7)
    assert abs(est - direct.thermal_thermal) < 4 * se


def test_lab_units():
    k = bsc.scaled_photon_momentum(87.0, 780.0, 100.0)
    assert k == pytest.approx(1.90, rel=0.02)
    delta = bsc.delta_from_angle(0.01, k)
    assert bsc.angle_from_delta(delta, k) == pytest.approx(0.01, rel=1e-10)
    assert bsc.polarization_factor(math.pi / 2, "unpolarized") == pytest.approx(0.5)


def _cli():
    path = os.environ.get("BOSESCATTER_CLI")
    if not path:
        pytest.skip("BOSESCATTER_CLI not set")
    return path


def _schema():
    schema_dir = os.environ.get("BOSESCATTER_SCHEMA_DIR")
    if not schema_dir:
        pytest.skip("BOSESCATTER_SCHEMA_DIR not set")
    with open(os.path.join(schema_dir, "output.schema.json")) as f:
        return json.load(f)


@pytest.mark.parametrize(
    "args",
    [
        ["rate", "--delta", "0.5", "--tau", "1.2"],
        ["sweep-tau", "--delta", "0.3", "--tau-min", "0.8", "--tau-max", "1.4", "--steps", "4"],
        ["sumrule", "--tau", "1.5"],
        ["convert", "--mass-amu", "87", "--wavelength-nm", "780", "--tc-nk", "100",
         "--angle-mrad", "10"],
        ["oracle", "mc", "--delta", "0.5", "--tau", "1.2", "--samples", "50000"],
        ["oracle", "box", "--tau", "1.2", "--max-mode", "12", "--box-scale", "12.566",
         "--delta-mode", "2,0,0"],
        ["oracle", "energy", "--tau", "1.2", "--max-mode", "8", "--box-scale", "6.0"],
    ],
)
def test_cli_json_matches_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    out = subprocess.run(
        [_cli(), "--format", "json", *args], capture_output=True, text=True, check=True
    )
    doc = json.loads(out.stdout)
    jsonschema.validate(doc, _schema())


def test_cli_rate_matches_module():
    out = subprocess.run(
        [_cli(), "--format", "json", "rate", "--delta", "0.5", "--tau", "1.2"],
        capture_output=True, text=True, check=True,
    )
    doc = json.loads(out.stdout)
    assert doc["rate"]["total"] == pytest.approx(bsc.total_rate(0.5, 1.2).total, rel=1e-12)
