from .generator import SynthCity, SynthSpec, block_centers, generate

__all__ = ["SynthCity", "SynthSpec", "block_centers", "generate"]
