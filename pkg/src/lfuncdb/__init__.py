"""Desk-scale database of L-functions and the arithmetic objects carrying them.

Layers, bottom to top:

- ``arith``    exact integer/character arithmetic (sieves, Dirichlet
  characters, Kronecker symbols, Gauss sums, curve point counts)
- ``lfunc``    L-function objects and numerics (Euler products, analytic
  continuation, critical-line zero scans)
- ``labels``   permanent identifiers with parse/format round trips
- ``store``    schemaless label-keyed record collections, text-reconstructable
- ``catalog``  typed object views, related-object graph, snippets
- ``knowl``    versioned glossary entries with inline inclusions
- ``webapi``   JSON HTTP service with permanent per-object URLs
- ``cli``      build / ingest / dump / serve entry points
"""

__version__ = "0.1.0"
