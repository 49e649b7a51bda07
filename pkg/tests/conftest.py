import sys
from pathlib import Path

sys.path.append(str(Path(__file__).resolve().parents[1]))

import pytest

from c2v.arith import ScalarMode
from c2v.config import Limits, RunConfig
from c2v.corpus import Corpus, yz_ring
from c2v.ideals import ParafermionIdeals
from c2v.weyl.engine import WeylModule


@pytest.fixture
def sym():
    return ScalarMode.symbolic()


@pytest.fixture
def k5():
    return ScalarMode.concrete(5)


@pytest.fixture
def yz5(k5):
    return yz_ring(k5)


@pytest.fixture
def corpus5(k5):
    return Corpus(k5)


@pytest.fixture
def ideals5(corpus5):
    return ParafermionIdeals(corpus5)


@pytest.fixture
def engine_sym(sym):
    return WeylModule(sym, validate=True)


@pytest.fixture
def weyl2():
    return WeylModule(ScalarMode.concrete(2), validate=True)


@pytest.fixture
def small_config():
    return RunConfig(k_values=(5,), limits=Limits(random_products=5))
