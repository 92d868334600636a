"""Picard-Fuchs equations for families of twists of elliptic surfaces."""
