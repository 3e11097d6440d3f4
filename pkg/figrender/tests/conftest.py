import csv
import math

import pytest

HEADER = [
    "field", "alpha", "r", "method",
    "N_A_BC", "N_B_AC", "N_C_AB",
    "N_AB", "N_AC", "N_BC",
    "pi_A", "pi_B", "pi_C", "pi_tangle",
    "ckw_ok", "n_max", "tail_bound", "error",
]

ALPHAS = [
    1 / math.sqrt(2),
    1 / math.sqrt(5), 2 / math.sqrt(5),
    1 / math.sqrt(10), 3 / math.sqrt(10),
    1 / math.sqrt(22), math.sqrt(21 / 22),
]


def synthetic_rows(r_steps=12, method="closed"):
    """Schema-conformant toy sweep: decaying curves, maximal alpha on top."""
    rows = []
    for alpha in ALPHAS:
        peak = 2 * alpha * math.sqrt(1 - alpha**2)
        for k in range(r_steps):
            r = 0.25 * k
            inertial = peak * math.exp(-0.1 * r)
            accel = peak * math.exp(-0.8 * r)
            pi = (2 * inertial**2 + accel**2) / 3
            rows.append([
                "dirac", f"{alpha:.12g}", f"{r:.12g}", method,
                f"{inertial:.12g}", f"{inertial:.12g}", f"{accel:.12g}",
                "0", "0", "0",
                f"{inertial**2:.12g}", f"{inertial**2:.12g}", f"{accel**2:.12g}", f"{pi:.12g}",
                "true", "", "0", "",
            ])
    return rows


def write_csv(path, rows):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(rows)


@pytest.fixture
def sweep_csv(tmp_path):
    path = tmp_path / "fig.csv"
    write_csv(path, synthetic_rows())
    return path
