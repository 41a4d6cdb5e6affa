"""folcheck: exact verification engine for equivariant decompositions,
exterior-algebra coefficients, twisted differential forms and skew pencils.

The package is organized as a core library (rootdata, charring, decomp,
extalg, pforms, pencil), a case registry with a runner, a FastAPI service
wrapping the core, and a thin CLI client.
"""

__version__ = "0.1.0"
