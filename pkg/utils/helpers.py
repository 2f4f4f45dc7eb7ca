import numpy as np


def linear_grid(lo, hi, points):
    """Evenly spaced grid, both ends included"""
    return np.linspace(lo, hi, int(points))


def log_grid(lo, hi, points):
    """Log-spaced grid, both ends included (lo > 0)"""
    return np.geomspace(lo, hi, int(points))


def format_gain(value):
    """Format a percent gain for summaries"""
    if value is None:
        return "n/a"
    return "{:+.2f}%".format(value)


def format_aee(value):
    """Format an AEE value (bps/Hz per W)"""
    if value is None:
        return ""
    return "{:,.2f}".format(value)
