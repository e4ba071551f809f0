"""
covpovm: covariant POVMs on finite groups.
"""
