"""
Storage Package
Run configuration files and CSV result output
"""
