"""
Power graph matching toolkit.

Builds power, enhanced power and commuting graphs of finite groups given
as Cayley tables, computes exact maximum matchings and the constructive
matchings of the power graph theory, and verifies the known matching
theorems over a generated catalog of groups.
"""

__version__ = "0.3.0"
