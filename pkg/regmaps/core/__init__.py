"""Group-theoretic kernels: words, presentations, coset tables, descent, permutations."""
