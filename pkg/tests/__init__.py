"""
bourbakikit test suite

Unit tests for the algebra, koszul, bourbaki, catalog and rees packages,
plus the command line and the HTTP API.
"""
