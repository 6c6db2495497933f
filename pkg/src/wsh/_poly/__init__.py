"""Integer polynomial kernel with optional compiled backend.

``WSH_PURE_POLY=1`` in the environment forces the pure-Python backend.
"""

import os

if os.environ.get("WSH_PURE_POLY"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND

pnormalize = _impl.pnormalize
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pscale = _impl.pscale
pmul = _impl.pmul
pdivexact = _impl.pdivexact
ppseudo_rem = _impl.ppseudo_rem
pcontent = _impl.pcontent
pprimitive = _impl.pprimitive
pgcd = _impl.pgcd
