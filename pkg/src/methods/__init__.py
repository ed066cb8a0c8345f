"""
Sector certification methods. Each method checks one exact sufficient condition.
"""
