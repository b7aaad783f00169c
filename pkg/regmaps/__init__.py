"""regmaps: regular maps whose automorphism groups are 2-groups."""

__version__ = "1.0.0"
