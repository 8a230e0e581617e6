import cmath
import json
import math
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

ROOTS = {"rho": cmath.exp(1j * math.pi / 4), "omega": cmath.exp(2j * math.pi / 3)}


def load_golden():
    """Yield (name, j, r, {(alpha, m): expected complex}) for each basis fixture."""
    for path in sorted(GOLDEN.glob("basis_*.json")):
        data = json.loads(path.read_text())
        root, norm = ROOTS[data["root"]], math.sqrt(data["norm"])
        expected = {}
        for vec in data["vectors"]:
            for m, p in vec["powers"].items():
                expected[(vec["alpha"], m)] = root ** p / norm
        yield path.stem, data["j"], data["r"], expected


@pytest.fixture(scope="session")
def golden():
    return list(load_golden())
