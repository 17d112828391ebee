# Exact character tables
