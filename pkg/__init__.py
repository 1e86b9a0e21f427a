"""Memristor fuzzy-logic gate simulator and expression compiler"""
__version__ = '0.1.0'
