"""
created matt_dumont
on: 17/10/26
"""
__version__ = "0.1.0"
