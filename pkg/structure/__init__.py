# Sylow theory, series, complements and Frobenius groups
