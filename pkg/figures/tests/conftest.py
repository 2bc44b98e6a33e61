import subprocess
import sys

import pytest


def run_sweep(args, out_path):
    """Produce a sweep CSV through the simulation package's CLI."""
    cmd = [sys.executable, "-m", "synthsqueeze", *args, "--out", str(out_path)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"sweep failed: {' '.join(cmd)}\n{proc.stderr}")
    return out_path


@pytest.fixture(scope="session")
def sweep_csvs(tmp_path_factory):
    """Default sweep outputs for fig4 / fig5 / fig6 / gap-vs-r."""
    pytest.importorskip("synthsqueeze", reason="simulation package not installed")
    base = tmp_path_factory.mktemp("sweeps")
    return {
        "fig4": run_sweep(["sweep-temp"], base / "temp.csv"),
        "fig5": run_sweep(["sweep-spacing"], base / "spacing.csv"),
        "fig6": run_sweep(["sweep-gap"], base / "gap.csv"),
        "gap-vs-r": run_sweep(["gap-vs-r"], base / "gapr.csv"),
    }
