"""
Command line surface: settings, logging, JSON schemas and the argparse entry point.
"""
