"""Synthetic corpora with known popular topics."""

##############################################################################
# Local imports.
from .generator import (
    Adoption,
    Corpus,
    GeneratedFiles,
    GenerationLedger,
    SynthConfig,
    generate,
    simulate,
    write_corpus,
)

##############################################################################
# Exports.
__all__ = [
    "Adoption",
    "Corpus",
    "generate",
    "GeneratedFiles",
    "GenerationLedger",
    "simulate",
    "SynthConfig",
    "write_corpus",
]

### __init__.py ends here
