"""
Command modules for the Ratatorskr command line.
"""
