"""
Shared helpers: the exception hierarchy, rational parsing/formatting and exact linear algebra.
"""
