"""
Exact algorithms over generalized Hurwitz matrices, the root oracle and sector certification
"""
