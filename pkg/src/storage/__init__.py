"""
JSON documents and the workspace that loads them.
"""

__all__ = ['documents', 'workspace']
