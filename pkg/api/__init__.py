"""
bourbakikit API Module

Read-only HTTP mirror of the command line:
- Health and settings status
- Catalog bundles and the multigraded obstruction
- Rees semigroup membership and canonical generators
"""

__version__ = "1.0.0"
