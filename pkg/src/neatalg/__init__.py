"""Central simple algebras with involution, neat etale subalgebras, and a verification harness."""

__version__ = "0.1.0"
