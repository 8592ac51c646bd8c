"""
k3-baselocus: exact arithmetic for base loci on K3^[2]-type.
"""
