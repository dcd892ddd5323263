from fractions import Fraction

import pytest
from hypothesis import settings

from hlharmonic.hlbasis import HLContext

settings.register_profile("ci", derandomize=True, max_examples=30, deadline=None)
settings.load_profile("ci")

_CTXS = {}


@pytest.fixture(scope="session")
def ctx_at():
    """Shared per-parameter basis caches so Gram-Schmidt runs once per t."""

    def get(t, cap: int = 12) -> HLContext:
        t = Fraction(t)
        ctx = _CTXS.get(t)
        if ctx is None or ctx.degree_cap < cap:
            ctx = HLContext(t, max(cap, 12))
            _CTXS[t] = ctx
        return ctx

    return get
