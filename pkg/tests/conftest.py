from pathlib import Path

import pytest

from sharplat import enumeration, gallery

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def nonsharp5():
    return gallery.nonsharp5()


@pytest.fixture(scope="session")
def chain2():
    return gallery.chain2()


@pytest.fixture(scope="session")
def chain3_nil():
    return gallery.chain3_nil()


@pytest.fixture(scope="session")
def chain3_idem():
    return gallery.chain3_idem()


@pytest.fixture(scope="session")
def diamond():
    return gallery.diamond()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def census_structures():
    """All structures on the small benchmark posets, enumerated once
    per session: chains of size 2..6 plus the 4- and 5-element
    diamonds."""
    out = {}
    for n in (2, 3, 4, 5, 6):
        out[f"chain{n}"] = list(
            enumeration.enumerate_structures(enumeration.chain_poset(n))
        )
    for w in (2, 3):
        out[f"diamond{w}"] = list(
            enumeration.enumerate_structures(enumeration.diamond_poset(w))
        )
    return out
