"""Light performance guards: the decision procedures stay fast well beyond the
acceptance scale."""

import random
import time

from parhom.classify import PARITY_P_COMPLETE, classify
from parhom.corpus import big_asymmetric_cactus, random_cactus
from parhom.automorphisms import find_involution
from parhom.gadgets import verify_hardness_gadget
from parhom.gadgetfind import find_hardness_gadget


def test_classify_sixty_vertices_fast():
    rng = random.Random(9)
    start = time.perf_counter()
    for _ in range(10):
        classify(random_cactus(rng, 60))
    assert time.perf_counter() - start < 10.0


def test_builder_is_involution_free():
    for sections in (3, 7, 10):
        g = big_asymmetric_cactus(sections)
        assert find_involution(g) is None


def test_gadget_on_large_deterministic_instances():
    for sections in (6, 9, 12):
        g = big_asymmetric_cactus(sections)
        start = time.perf_counter()
        gadget = find_hardness_gadget(g)
        assert verify_hardness_gadget(g, gadget) == []
        assert classify(g).verdict == PARITY_P_COMPLETE
        assert time.perf_counter() - start < 20.0
