"""Resource cutoffs shared by all computations.

Limits live in a context variable so concurrent analyses can each run under
their own cutoffs::

    with use_limits(Limits(module_cutoff=256)):
        submodule_lattice(M)
"""

from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace

DEFAULT_MODULE_CUTOFF = 4096
DEFAULT_HOM_CUTOFF = 65536


@dataclass(frozen=True)
class Limits:
    module_cutoff: int = DEFAULT_MODULE_CUTOFF
    hom_cutoff: int = DEFAULT_HOM_CUTOFF
    subquotient_depth: str = "R+R"

    @classmethod
    def from_env(cls, env=None) -> "Limits":
        env = os.environ if env is None else env
        lim = cls()
        if env.get("RINGLAB_MODULE_CUTOFF"):
            lim = replace(lim, module_cutoff=int(env["RINGLAB_MODULE_CUTOFF"]))
        if env.get("RINGLAB_HOM_CUTOFF"):
            lim = replace(lim, hom_cutoff=int(env["RINGLAB_HOM_CUTOFF"]))
        return lim

    def as_dict(self) -> dict:
        return {
            "module_cutoff": self.module_cutoff,
            "hom_cutoff": self.hom_cutoff,
            "subquotient_depth": self.subquotient_depth,
        }


_current: contextvars.ContextVar[Limits | None] = contextvars.ContextVar("ringlab_limits", default=None)


def get_limits() -> Limits:
    lim = _current.get()
    return lim if lim is not None else Limits.from_env()


@contextlib.contextmanager
def use_limits(limits: Limits):
    token = _current.set(limits)
    try:
        yield limits
    finally:
        _current.reset(token)
