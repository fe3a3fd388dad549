"""Drinfeld modular forms of rank r over F_q[θ]: exact truncated arithmetic and Hecke checks."""
__version__ = "0.1.0"
