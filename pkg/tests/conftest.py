import numpy as np
import pytest

from fock import PairingModel
from shells import DEFAULT_DATASET, load_elements


@pytest.fixture(scope="session")
def dataset():
    return load_elements()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def corrupt_dataset(tmp_path):
    """A copy of the bundled dataset with molybdenum's 4d over-filled."""
    text = DEFAULT_DATASET.read_text(encoding="utf-8")
    path = tmp_path / "elements.csv"
    path.write_text(text.replace("42,Mo,[Kr] 4d5 5s1", "42,Mo,[Kr] 4d11 5s1"), encoding="utf-8")
    return path


def random_pairing_model(rng: np.random.Generator) -> tuple[PairingModel, int]:
    """Up to four levels, at most six sublevels, well below critical coupling."""
    degeneracies = []
    for _ in range(int(rng.integers(1, 5))):
        room = 6 - sum(degeneracies)
        if room <= 0:
            break
        degeneracies.append(int(rng.integers(1, min(2, room) + 1)))
    energies = float(rng.uniform(-1.0, 1.0)) + np.cumsum(rng.uniform(0.5, 1.5, size=len(degeneracies)))
    model = PairingModel.from_lists(energies, degeneracies, float(rng.uniform(0.01, 0.06)))
    return model, int(rng.integers(1, min(3, model.capacity) + 1))
