"""Coupling symbols, recoupling identities and tensor operators in the {J^2, U_r} scheme."""
