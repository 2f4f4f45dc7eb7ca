"""
Models Package
Contains the system model types and the rate/energy-efficiency expressions
"""

from models.system import AttackDecision, LinkGains, RateSummary, SystemParams

__all__ = [
    'AttackDecision',
    'LinkGains',
    'RateSummary',
    'SystemParams'
]
