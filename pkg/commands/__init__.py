"""
Commands Package
Command-line commands registered on the main group in app.py
"""
