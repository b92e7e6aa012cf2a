"""
Core services module for the numerical routines shared by every use case.
"""
