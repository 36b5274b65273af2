"""Convert NELL knowledge-base dumps to RDF with per-belief provenance.

Beliefs are reified with one of five statement-annotation models and
annotated with PROV-O based metadata about the components that produced them.
"""

from .ingest import BeliefKind, NellBelief, parse_belief_line
from .reify import ModelId, dereify, reify

__version__ = "0.1.0"

__all__ = ["BeliefKind", "ModelId", "NellBelief", "dereify", "parse_belief_line", "reify", "__version__"]
