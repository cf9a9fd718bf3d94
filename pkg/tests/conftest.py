import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from lrreduce import FaceDatum, build_root_system  # noqa: E402

settings.register_profile("ci", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("ci")

# the seven worked rules: (type, I, w_1..w_k, w)
RULES = {
    "a5-grassmannian": ("A5", [1, 2, 4, 5], ["s3", "s3"], "s4s3"),
    "a5-projective": ("A5", [2, 3, 4, 5], ["s1", "s1"], "s2s1"),
    "a6-projective": ("A6", [2, 3, 4, 5, 6], ["s1", "s2s1"], "s3s2s1"),
    "a4-three-factor": ("A4", [2, 3, 4], ["s1", "s1", "s1"], "s3s2s1"),
    "a4-codim-two": ("A4", [1, 2], ["s3s4", "s4s2s3"], "s2s3s4s2s3"),
    "d5-quadric": ("D5", [2, 3, 4, 5], ["s1", "s1"], "s2s1"),
    "c5-lagrangian": ("C5", [1, 2, 3, 4], ["s5", "s4s5"], "s5s4s5"),
}


def rule(name) -> FaceDatum:
    t, I, ws, w = RULES[name]
    return FaceDatum.from_words(build_root_system(t), I, ws, w)


@pytest.fixture(params=sorted(RULES))
def rule_name(request):
    return request.param
